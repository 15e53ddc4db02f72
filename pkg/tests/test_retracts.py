import pytest

from zigzagmetric.graphs import digraph, zigzag_of_word
from zigzagmetric.metric import distance_matrix
from zigzagmetric.retracts import (
    balls_2helly,
    berge_helly,
    embed_zigzag_product,
    extend_map,
    gadget_cancellation_extension,
    gadget_cycle_extension,
    injective_hull_search,
    is_absolute_retract,
    is_isometric_embedding,
    min_factor_embedding,
    obstruction_check,
    retraction_search,
)
from zigzagmetric.selftest import random_isometric_extension
from zigzagmetric.upsets import canonical_upset, join

from oracles import random_oriented_digraph, seeded

C3 = digraph([0, 1, 2], {(0, 1), (1, 2), (2, 0)})
PATH2 = digraph([0, 1, 2], {(0, 1), (1, 2)})
ALT4 = digraph([0, 1, 2, 3], {(0, 1), (2, 1), (2, 3), (0, 3)})
GLUED4 = digraph([0, 1, 2, 3], {(0, 1), (1, 2), (0, 3), (3, 2)})


def test_berge_helly():
    ok, _ = berge_helly([{1, 2}, {2, 3}, {1, 3, 4}])
    assert not ok
    ok, w = berge_helly([{1, 2}, {2, 3}, {2, 4}])
    assert ok and w is None
    ok, _ = berge_helly([])
    assert ok


def test_balls_2helly_c3_witness():
    res = balls_2helly(C3)
    assert not res.ok
    assert {frozenset(b) for _, _, b in res.witness} == {
        frozenset({0, 1}),
        frozenset({1, 2}),
        frozenset({0, 2}),
    }
    assert balls_2helly(PATH2).ok


def test_is_absolute_retract_examples():
    rep = is_absolute_retract(PATH2)
    assert rep.verdict and not rep.anomalies
    for u in ("", "+", "+-", "++-", "+-+-", "++--+"):
        assert is_absolute_retract(zigzag_of_word(u)).verdict
    rep = is_absolute_retract(C3)
    assert not rep.verdict
    assert rep.unclosed_pairs and not rep.acyclic
    two = digraph([0, 1], {(0, 1), (1, 0)})
    assert not is_absolute_retract(two).verdict


def test_extend_map():
    z = zigzag_of_word("++")
    f = extend_map(PATH2, z, {0: 0, 2: 2}, 1)
    assert f == 1
    with pytest.raises(ValueError):
        extend_map(PATH2, z, {0: 0}, 0)
    # collapsing is non-expansive, so a 1-point codomain always works
    one = digraph([0], set())
    assert extend_map(PATH2, one, {0: 0}, 2) == 0
    # but pinning the endpoints in different components gets stuck
    two = digraph(["a", "b"], set())
    assert extend_map(PATH2, two, {0: "a", 2: "b"}, 1) is None


def test_retraction_search_positive():
    r = retraction_search(GLUED4, PATH2)
    assert r is not None
    assert all(r.mapping[v] == v for v in PATH2.vertices)
    assert r.mapping[3] == 1


def test_retraction_search_requires_isometric_subgraph():
    shortcut = digraph([0, 1, 2], {(0, 1), (1, 2), (0, 2)})
    with pytest.raises(ValueError):
        retraction_search(shortcut, PATH2)


def test_retraction_from_random_extensions_of_ar_graphs():
    rng = seeded(50)
    for base in (PATH2, zigzag_of_word("+-+")):
        for _ in range(5):
            h = random_isometric_extension(base, rng)
            assert retraction_search(h, base) is not None


def test_gadget_cycle_extension():
    h = gadget_cycle_extension(C3, (0, 1, 2), k=4)
    assert len(h.vertices) == 11
    assert retraction_search(h, C3) is None
    with pytest.raises(ValueError):
        gadget_cycle_extension(C3, (0, 2, 1), k=4)
    with pytest.raises(ValueError):
        gadget_cycle_extension(C3, (0, 1, 2), k=2)


def test_gadget_cancellation_extension():
    # d(0,1) on the 3-cycle contains +- and -- but not -; the gadget is
    # an isometric extension (C3 itself still retracts: it is cyclic, so
    # the added 3-cycle can wind onto it)
    h = gadget_cancellation_extension(C3, 0, 1, "", "-")
    assert set(C3.vertices) <= set(h.vertices)
    assert len(h.vertices) == 5
    with pytest.raises(ValueError):
        gadget_cancellation_extension(C3, 0, 1, "", "+")
    with pytest.raises(ValueError):
        gadget_cancellation_extension(C3, 0, 1, "+", "")


def test_gadget_cancellation_blocks_acyclic_host():
    # two x-to-y paths coded +++ and +-+; ++ is outside the distance, so
    # (+, +) is a cancellation witness and no retraction can exist: the
    # added 3-cycle must collapse in an acyclic host, which would force
    # a ++ walk from x to y
    g = digraph(
        ["x", "a", "b", "y", "c", "d"],
        {("x", "a"), ("a", "b"), ("b", "y"), ("x", "c"), ("d", "c"), ("d", "y")},
    )
    d = distance_matrix(g)["x", "y"]
    assert d == canonical_upset(["+++", "+-+"])
    h = gadget_cancellation_extension(g, "x", "y", "+", "+")
    assert retraction_search(h, g) is None


def test_embed_zigzag_product():
    cert = embed_zigzag_product(PATH2)
    assert cert.isometric
    assert all(len(c) == len(cert.factors) for c in cert.coords.values())
    cert = embed_zigzag_product(C3)
    assert not cert.isometric
    assert cert.failing_pair is not None
    cert = embed_zigzag_product(ALT4)
    assert cert.isometric


def test_embed_disconnected():
    g = digraph([0, 1, 2], {(0, 1)})
    cert = embed_zigzag_product(g)
    assert cert.isometric
    assert cert.disconnected_bound == 6


def test_is_isometric_embedding():
    cert = embed_zigzag_product(PATH2)
    from zigzagmetric.graphs import product_graph

    q = product_graph([zigzag_of_word(u) for u in cert.factors])
    assert is_isometric_embedding(cert.coords, PATH2, q)
    with pytest.raises(ValueError):
        is_isometric_embedding({0: (0,)}, PATH2, q)


def test_min_factor_embedding():
    emb = min_factor_embedding(PATH2)
    assert emb is not None and len(emb.factors) == 1
    assert min_factor_embedding(ALT4, max_factors=1) is None
    emb = min_factor_embedding(ALT4)
    assert len(emb.factors) == 2
    assert min_factor_embedding(GLUED4, max_factors=2) is None
    emb = min_factor_embedding(GLUED4)
    assert len(emb.factors) == 3
    assert min_factor_embedding(C3) is None


def test_min_factor_embedding_verified():
    emb = min_factor_embedding(ALT4)
    m = distance_matrix(ALT4)
    zs = [distance_matrix(zigzag_of_word(u)) for u in emb.factors]
    for x in ALT4.vertices:
        for y in ALT4.vertices:
            if x == y:
                continue
            acc = None
            for dz, cx, cy in zip(zs, emb.coords[x], emb.coords[y]):
                d = dz[cx, cy]
                acc = d if acc is None else join(acc, d)
            assert acc == m[x, y]


def test_injective_hull_examples():
    res = injective_hull_search(PATH2)
    assert res.reason == "found" and res.added == ()
    res = injective_hull_search(ALT4)
    assert res.reason == "found" and len(res.added) == 1
    res = injective_hull_search(GLUED4)
    assert res.reason == "found" and len(res.added) == 2
    a, b = res.added
    assert (a, b) in res.hull.arcs or (b, a) in res.hull.arcs
    assert injective_hull_search(C3).reason == "not-embeddable"


def test_injective_hull_disconnected():
    g = digraph([0, 1, 2, 3, 4, 5, 6, 7],
                {(0, 1), (2, 1), (2, 3), (0, 3), (4, 5), (6, 5), (6, 7), (4, 7)})
    res = injective_hull_search(g, max_add=2)
    assert res.reason == "found"
    assert len(res.added) == 2


def test_obstruction_check():
    rev4 = digraph([0, 1, 2, 3], {(0, 1), (1, 2), (2, 3), (0, 3)})
    rep = obstruction_check(rev4)
    assert not rep.clean
    assert rep.transitivity_violations
    v = rep.transitivity_violations[0]
    assert v["arc"] == (0, 3) and v["path"] == (0, 1, 2, 3)
    assert obstruction_check(PATH2).clean
    assert obstruction_check(ALT4).clean
    rep = obstruction_check(C3)
    assert rep.directed_cycle is not None
    two = digraph([0, 1], {(0, 1), (1, 0)})
    assert obstruction_check(two).two_cycles == ((0, 1),)


def test_hull_of_random_oriented_graphs_is_ar():
    rng = seeded(51)
    found = 0
    for _ in range(25):
        g = random_oriented_digraph(rng, 4)
        res = injective_hull_search(g, max_add=2)
        if res.reason == "found":
            found += 1
            assert is_absolute_retract(res.hull).verdict
            m, mh = distance_matrix(g), distance_matrix(res.hull)
            for x in g.vertices:
                for y in g.vertices:
                    assert m[x, y] == mh[x, y]
    assert found > 0
