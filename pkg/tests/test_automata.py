import pytest

from zigzagmetric.automata import (
    SubwordNFA,
    all_reachable_sets,
    constraint_nfa,
    make_selfloop_nfa,
    min_words,
    nfa_accepts,
    subset_reach,
)
from zigzagmetric.metric import zigzag_nfa
from zigzagmetric.quantale import LEFT, RIGHT
from zigzagmetric.upsets import TOP, upset_member
from zigzagmetric.words import words_up_to

from oracles import brute_min_words, random_digraph, random_upset, random_word, seeded


def test_selfloop_law_enforced():
    with pytest.raises(ValueError):
        SubwordNFA(
            frozenset([0]),
            {(0, "+"): frozenset(), (0, "-"): frozenset([0])},
            frozenset([0]),
            frozenset([0]),
        )
    a = make_selfloop_nfa([0, 1], {(0, "+"): [1]}, [0], [1])
    assert 0 in a.delta[(0, "+")]


def test_accepted_language_is_superword_closed():
    rng = seeded(30)
    for _ in range(30):
        g = random_digraph(rng, 4)
        x, y = rng.choice(g.vertices), rng.choice(g.vertices)
        a = zigzag_nfa(g, x, y)
        for w in words_up_to(3):
            if nfa_accepts(a, w):
                for i in range(len(w) + 1):
                    for c in "+-":
                        assert nfa_accepts(a, w[:i] + c + w[i:])


def test_subset_reach_composes():
    rng = seeded(31)
    g = random_digraph(rng, 5)
    a = zigzag_nfa(g, g.vertices[0], g.vertices[0])
    s = frozenset([g.vertices[0]])
    for _ in range(50):
        u, v = random_word(rng, 3), random_word(rng, 3)
        assert subset_reach(a, s, u + v) == subset_reach(
            a, subset_reach(a, s, u), v
        )
        assert s <= subset_reach(a, s, u)


def test_all_reachable_sets_witnesses():
    rng = seeded(32)
    for _ in range(20):
        g = random_digraph(rng, 4)
        x = g.vertices[0]
        a = zigzag_nfa(g, x, x)
        start = frozenset([x])
        reach = all_reachable_sets(a, start)
        for subset, w in reach.items():
            assert subset_reach(a, start, w) == subset
        # exhaustive cross-check against short words
        for w in words_up_to(4):
            assert subset_reach(a, start, w) in reach


def test_min_words_matches_brute_force():
    rng = seeded(33)
    for _ in range(60):
        g = random_digraph(rng, 5)
        for x in g.vertices:
            for y in g.vertices:
                a = zigzag_nfa(g, x, y)
                assert min_words(a) == brute_min_words(a, len(g.vertices))


def test_min_words_top_when_nothing_accepted():
    a = make_selfloop_nfa([0, 1], {}, [0], [1])
    assert min_words(a) == TOP


def test_constraint_nfa_language():
    rng = seeded(34)
    for _ in range(40):
        target = random_upset(rng, maxlen=3)
        prefixes = [random_word(rng, 2) for _ in range(rng.randint(0, 2))]
        for side, combine in (
            (LEFT, lambda p, w: p + w),
            (RIGHT, lambda p, w: w + p),
        ):
            a = constraint_nfa(prefixes, target, side)
            for w in words_up_to(4):
                expected = all(
                    upset_member(combine(p, w), target) for p in prefixes
                )
                assert nfa_accepts(a, w) == expected, (prefixes, target, w)
