"""Retracts, Helly ball tests, zigzag-product embeddings, absolute
retract certification and injective-hull search for oriented graphs.

The operative absolute-retract test is the 2-Helly property of the
single-word-radius balls; MacNeille-closedness of all distances and
acyclicity are necessary conditions and are reported alongside, with any
disagreement flagged as an anomaly (the characterization theorem makes
them consistent, so a disagreement indicates a bug).
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .graphs import (
    DiGraph,
    digraph,
    find_directed_cycle,
    fresh_names,
    induced_subgraph,
    is_acyclic,
    is_oriented,
    product_graph,
    symmetric_components,
    zigzag_of_word,
)
from .metric import ball, distance_matrix, reachable_balls
from .upsets import (
    TOP,
    UpSet,
    ZERO,
    is_macneille_closed,
    join,
    upset_leq,
    upset_member,
)
from .words import subword_leq, words_up_to


@dataclass(frozen=True)
class VertexMap:
    domain: DiGraph
    codomain: DiGraph
    mapping: dict

    @property
    def total(self):
        return set(self.mapping) == set(self.domain.vertices)


_cached_ball = lru_cache(maxsize=200_000)(ball)


def is_homomorphism(mapping, g, h):
    """True iff every arc of g maps to an arc of h or collapses."""
    return all(
        mapping[a] == mapping[b] or (mapping[a], mapping[b]) in h.arcs
        for a, b in g.arcs
    )


def is_nonexpansive(mapping, g, h):
    dg, dh = distance_matrix(g), distance_matrix(h)
    return all(
        upset_leq(dh[mapping[x], mapping[y]], dg[x, y])
        for x in mapping
        for y in mapping
    )


def is_isometric_embedding(mapping, g, h):
    """True iff the total injective map preserves all distances exactly."""
    if set(mapping) != set(g.vertices):
        raise ValueError("map must be total on the source vertices")
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("map must be injective")
    dg, dh = distance_matrix(g), distance_matrix(h)
    return all(
        dh[mapping[x], mapping[y]] == dg[x, y]
        for x in g.vertices
        for y in g.vertices
    )


def _extension_candidates(h, g, partial, x, dh):
    """Admissible images in g for the unmapped vertex x of h: intersection
    of the balls around the images of the mapped vertices, radius ranging
    over the minimal words of each distance to x (larger radii only grow
    the balls, so the generators suffice)."""
    cands = None
    for y in h.vertices:
        if y == x or y not in partial:
            continue
        for r in dh[y, x].generators:
            b = _cached_ball(g, partial[y], r)
            cands = b if cands is None else cands & b
            if not cands:
                return ()
    if cands is None:
        return tuple(g.vertices)
    return tuple(v for v in g.vertices if v in cands)


def extend_map(h, g, partial, x):
    """Greedy one-vertex extension of a non-expansive partial map h -> g.

    Returns the canonically first admissible image of x, or None when the
    ball intersection is empty (greedy stuck; not a proof that no total
    extension exists).
    """
    if x in partial:
        raise ValueError(f"{x!r} is already mapped")
    cands = _extension_candidates(h, g, partial, x, distance_matrix(h))
    return cands[0] if cands else None


def retraction_search(h, g):
    """A homomorphism h -> g fixing the vertices of g pointwise, or None.

    Requires g to sit isometrically in h.  Backtracks chronologically over
    the ball-intersection candidates, so the search is complete: any
    retraction is distance-consistent with every partial assignment.
    """
    gset = set(g.vertices)
    if not gset <= set(h.vertices):
        raise ValueError("second graph is not a subgraph of the first")
    dh, dg = distance_matrix(h), distance_matrix(g)
    for x in g.vertices:
        for y in g.vertices:
            if dh[x, y] != dg[x, y]:
                raise ValueError(
                    f"not an isometric subgraph: d({x},{y}) differs"
                )
    free = [v for v in h.vertices if v not in gset]
    assign = {v: v for v in g.vertices}

    def rec(i):
        if i == len(free):
            return True
        v = free[i]
        for z in _extension_candidates(h, g, assign, v, dh):
            assign[v] = z
            if rec(i + 1):
                return True
            del assign[v]
        return False

    if rec(0):
        return VertexMap(h, g, dict(assign))
    return None


def berge_helly(family):
    """2-Helly test by the triple criterion: for every three points, the
    members containing at least two of them must share a common point.

    Returns (True, None), or (False, witness) where the witness is a
    pairwise-intersecting subfamily with empty intersection.
    """
    sets = list(dict.fromkeys(frozenset(s) for s in family))
    universe = list(dict.fromkeys(x for s in sets for x in s))
    for triple in itertools.combinations(universe, 3):
        tset = set(triple)
        members = [s for s in sets if len(s & tset) >= 2]
        if not members:
            continue
        common = frozenset.intersection(*members)
        if not common:
            # prune to a minimal witness; members stay pairwise
            # intersecting since any two share one of the triple points
            i = 0
            while i < len(members):
                rest = members[:i] + members[i + 1:]
                if rest and not frozenset.intersection(*rest):
                    members = rest
                else:
                    i += 1
            return False, members
    return True, None


@dataclass
class HellyResult:
    ok: bool
    witness: tuple = ()  # (center, radius, ball) triples


def balls_2helly(g):
    """2-Helly property of all balls with single-word radii.

    The balls centered at x are exactly the vertex sets reachable from
    {x} in the walk automaton, so the enumeration is exact and finite.
    """
    labels = {}
    for x in g.vertices:
        for b, r in reachable_balls(g, x).items():
            labels.setdefault(b, (x, r))
    ok, witness = berge_helly(labels)
    if ok:
        return HellyResult(True)
    return HellyResult(
        False, tuple((labels[b][0], labels[b][1], b) for b in witness)
    )


@dataclass
class ARReport:
    graph: DiGraph
    oriented: bool
    helly: HellyResult
    unclosed_pairs: tuple
    acyclic: bool
    anomalies: tuple

    @property
    def verdict(self):
        return self.oriented and self.helly.ok


def is_absolute_retract(g):
    """Absolute-retract verdict (orientedness plus the ball Helly test),
    with the necessary conditions recorded for cross-checking."""
    oriented = is_oriented(g)
    helly = balls_2helly(g)
    m = distance_matrix(g)
    unclosed = tuple(
        (x, y)
        for (x, y), d in m.pairs()
        if x != y and not is_macneille_closed(d)
    )
    acyclic = is_acyclic(g)
    anomalies = []
    if oriented and helly.ok:
        if unclosed:
            anomalies.append(
                f"verdict true but distances not closed at {unclosed[0]}"
            )
        if not acyclic:
            anomalies.append("verdict true but the graph has a directed cycle")
    return ARReport(g, oriented, helly, unclosed, acyclic, tuple(anomalies))


@dataclass
class ObstructionReport:
    two_cycles: tuple
    directed_cycle: tuple | None
    transitivity_violations: tuple

    @property
    def clean(self):
        return (
            not self.two_cycles
            and self.directed_cycle is None
            and not self.transitivity_violations
        )


def _simple_paths(g, a, b, min_arcs):
    succ = {v: [] for v in g.vertices}
    for s, t in sorted(g.arcs, key=lambda ab: (g.vertices.index(ab[0]), g.vertices.index(ab[1]))):
        succ[s].append(t)
    out = []

    def rec(path):
        v = path[-1]
        if v == b and len(path) - 1 >= min_arcs:
            out.append(tuple(path))
            return
        for w in succ[v]:
            if w not in path and (w != b or len(path) >= min_arcs):
                path.append(w)
                rec(path)
                path.pop()

    rec([a])
    return out


def obstruction_check(g):
    """Local certificates of non-embeddability into products of oriented
    zigzags: 2-cycles, directed cycles, and conditional-transitivity
    failures (an arc a->b bypassing a path of three or more arcs whose
    vertex set does not induce a transitive subgraph)."""
    two = tuple(
        sorted(
            {tuple(sorted((a, b), key=g.vertices.index)) for a, b in g.arcs if (b, a) in g.arcs},
            key=lambda p: (g.vertices.index(p[0]), g.vertices.index(p[1])),
        )
    )
    cycle = find_directed_cycle(g)
    if cycle is not None and len(cycle) < 3:
        cycle = None if not two else tuple(two[0])
    violations = []
    for a, b in sorted(g.arcs, key=lambda ab: (g.vertices.index(ab[0]), g.vertices.index(ab[1]))):
        for path in _simple_paths(g, a, b, min_arcs=3):
            vs = set(path)
            missing = None
            for p in vs:
                for q in vs:
                    if p != q and (p, q) in g.arcs:
                        for r in vs:
                            if r != q and r != p and (q, r) in g.arcs:
                                if (p, r) not in g.arcs:
                                    missing = (p, r)
            if missing:
                violations.append(
                    {"arc": (a, b), "path": path, "missing": missing}
                )
                break  # one witness per arc is enough
    return ObstructionReport(
        two, tuple(cycle) if cycle else None, tuple(violations)
    )


def _hom_into_zigzag(g, u, seed):
    """Total homomorphism g -> Z_u extending the non-expansive seed, built
    greedily; zigzags have the extension property, so this never fails."""
    z = zigzag_of_word(u)
    f = dict(seed)
    for v in g.vertices:
        if v in f:
            continue
        img = extend_map(g, z, f, v)
        if img is None:
            raise RuntimeError(
                f"greedy extension into the zigzag of {u!r} failed at {v!r}"
            )
        f[v] = img
    if not is_homomorphism(f, g, z):
        raise RuntimeError(f"extension into the zigzag of {u!r} is not a homomorphism")
    return f


@dataclass
class EmbeddingCertificate:
    factors: tuple  # factor zigzag words
    coords: dict  # vertex -> tuple of factor vertices
    isometric: bool
    failing_pair: tuple | None
    disconnected_bound: int | None

    def to_json(self):
        return {
            "factors": list(self.factors),
            "coords": {
                str(v): list(c) for v, c in sorted(self.coords.items(), key=lambda kv: str(kv[0]))
            },
            "isometric": self.isometric,
            "failing_pair": list(map(str, self.failing_pair)) if self.failing_pair else None,
            "disconnected_bound": self.disconnected_bound,
        }


def embed_zigzag_product(g, bound=None):
    """Canonical map of g into a product of oriented zigzags.

    One factor per ordered connected pair (x, y) and maximal common
    subword u of the distance d(x, y), carrying x to 0 and y to the end
    of the zigzag of u.  Pairs with empty distance would need infinitely
    many factors; they get all zigzags up to the length bound instead
    (default twice the vertex count), and isometry for those pairs is
    certified against words up to the bound only.

    The map is isometric exactly when every distance is MacNeille closed
    (for the connected pairs); on failure the certificate carries an
    offending pair.
    """
    from .upsets import lower_cone

    m = distance_matrix(g)
    n = len(g.vertices)
    if bound is None:
        bound = 2 * n
    factors = []  # (word, total map)
    dedicated = {}  # ordered pair -> list of factor indices
    disconnected = []
    for x in g.vertices:
        for y in g.vertices:
            if x == y:
                continue
            d = m[x, y]
            if d == TOP:
                if (y, x) not in disconnected:
                    disconnected.append((x, y))
                continue
            idxs = []
            for u in lower_cone(d).maximal:
                f = _hom_into_zigzag(g, u, {x: 0, y: len(u)})
                idxs.append(len(factors))
                factors.append((u, f))
            dedicated[x, y] = idxs
    used_bound = bound if disconnected else None
    for x, y in disconnected:
        for u in words_up_to(bound):
            if not u:
                continue
            f = _hom_into_zigzag(g, u, {x: 0, y: len(u)})
            factors.append((u, f))

    coords = {v: tuple(f[v] for _, f in factors) for v in g.vertices}

    failing = None
    for (x, y), idxs in dedicated.items():
        acc = ZERO
        for i in idxs:
            u, f = factors[i]
            acc = join(acc, distance_matrix(zigzag_of_word(u))[f[x], f[y]])
        if acc != m[x, y]:
            failing = (x, y)
            break
    if failing is None and disconnected:
        # longest factors exclude the most words, so test them first
        order = sorted(range(len(factors)), key=lambda i: -len(factors[i][0]))
        for x, y in disconnected:
            for pair in ((x, y), (y, x)):
                dists = [
                    distance_matrix(zigzag_of_word(factors[i][0]))[
                        factors[i][1][pair[0]], factors[i][1][pair[1]]
                    ]
                    for i in order
                ]
                for w in words_up_to(bound):
                    if all(upset_member(w, d) for d in dists):
                        failing = pair
                        break
                if failing:
                    break
            if failing:
                break

    return EmbeddingCertificate(
        factors=tuple(u for u, _ in factors),
        coords=coords,
        isometric=failing is None,
        failing_pair=failing,
        disconnected_bound=used_bound,
    )


def _all_homomorphisms(g, h):
    vs = g.vertices
    out = []
    assign = {}

    def rec(i):
        if i == len(vs):
            out.append(dict(assign))
            return
        v = vs[i]
        for t in h.vertices:
            ok = True
            for w, tw in assign.items():
                if (v, w) in g.arcs and t != tw and (t, tw) not in h.arcs:
                    ok = False
                    break
                if (w, v) in g.arcs and t != tw and (tw, t) not in h.arcs:
                    ok = False
                    break
            if ok:
                assign[v] = t
                rec(i + 1)
                del assign[v]

    rec(0)
    return out


@dataclass
class FactorEmbedding:
    factors: tuple  # zigzag words
    coords: dict  # vertex -> tuple


def min_factor_embedding(g, max_factors=3, max_word_len=None):
    """Smallest product of oriented zigzags (up to max_factors factors of
    word length up to max_word_len) into which g embeds isometrically, or
    None.  Exhaustive over the distance profiles of all homomorphisms
    into short zigzags, so a None answer certifies that no embedding with
    that many factors of that length exists.  Connected graphs only.
    """
    n = len(g.vertices)
    if max_word_len is None:
        max_word_len = max(1, n - 1)
    m = distance_matrix(g)
    pairs = [
        (x, y)
        for i, x in enumerate(g.vertices)
        for y in g.vertices[i + 1:]
    ]
    targets = [m[x, y] for x, y in pairs]
    if any(t == TOP for t in targets):
        return None

    profiles = []  # (word, hom, per-pair coordinate word)
    seen = set()
    for u in words_up_to(max_word_len):
        if not u:
            continue
        z = zigzag_of_word(u)
        dz = distance_matrix(z)
        for hom in _all_homomorphisms(g, z):
            prof = tuple(
                dz[hom[x], hom[y]].generators[0] for x, y in pairs
            )
            if prof in seen:
                continue
            seen.add(prof)
            profiles.append((u, hom, prof))

    # drop profiles dominated coordinatewise: a pointwise-superword profile
    # constrains every pair at least as tightly, and never overshoots
    # because coordinate distances always contain the true distance
    keep = []
    for i, (_, _, pi) in enumerate(profiles):
        dominated = False
        for j, (_, _, pj) in enumerate(profiles):
            if i != j and all(subword_leq(a, b) for a, b in zip(pi, pj)):
                if pi != pj or j < i:
                    dominated = True
                    break
        if dominated:
            continue
        keep.append(profiles[i])
    profiles = keep

    for k in range(1, max_factors + 1):
        for combo in itertools.combinations(profiles, k):
            ok = True
            for j, target in enumerate(targets):
                acc = ZERO
                for _, _, prof in combo:
                    acc = join(acc, UpSet((prof[j],)))
                if acc != target:
                    ok = False
                    break
            if ok:
                return FactorEmbedding(
                    factors=tuple(u for u, _, _ in combo),
                    coords={
                        v: tuple(hom[v] for _, hom, _ in combo)
                        for v in g.vertices
                    },
                )
    return None


def gadget_cycle_extension(g, cycle, k=None):
    """Isometric extension pinning down a directed 3-cycle: matched pairs
    between two added layers force any retraction to collapse them, which
    no oriented host can absorb.  Layer size k must exceed |V(g)|."""
    a, b, c = cycle
    if not {(a, b), (b, c), (c, a)} <= g.arcs:
        raise ValueError(f"{cycle!r} is not a directed 3-cycle of the graph")
    if k is None:
        k = len(g.vertices) + 1
    if k <= len(g.vertices):
        raise ValueError("layer size must exceed the vertex count")
    ys = fresh_names(g, "y", k)
    zs = fresh_names(g, "z", k)
    arcs = set(g.arcs)
    for i in range(k):
        arcs.add((zs[i], ys[i]))
        for j in range(k):
            if i != j:
                arcs.add((ys[i], zs[j]))
    for v in (a, b, c):
        for y in ys:
            arcs.add((v, y))
        for z in zs:
            arcs.add((z, v))
    h = digraph(tuple(g.vertices) + tuple(ys) + tuple(zs), arcs)
    _check_isometric_extension(g, h, "3-cycle gadget")
    return h


def gadget_cancellation_extension(g, x, y, u, v):
    """Isometric extension witnessing the cancellation rule: a zigzag of u
    from x into a fresh directed 3-cycle, joined by the first letter of v
    to a zigzag of the rest of v into y.  A retraction of the result onto
    an absolute retract forces uv into d(x, y)."""
    if v == "":
        raise ValueError("second word must be nonempty")
    d = distance_matrix(g)[x, y]
    if not (upset_member(u + "+" + v, d) and upset_member(u + "-" + v, d)):
        raise ValueError(
            "premise fails: u+v and u-v must both lie in the distance"
        )
    if upset_member(u + v, d):
        raise ValueError(
            "uv already lies in the distance; nothing for the gadget to force"
        )
    alpha, vrest = v[0], v[1:]
    verts = list(g.vertices)
    arcs = set(g.arcs)

    def chain(start, word, end, base):
        """Zigzag of word from start, ending at end (or a fresh vertex when
        end is None); returns the final vertex."""
        if not word:
            return start if end is None else start
        inner = fresh_names(g, base, len(word) - 1 + (1 if end is None else 0))
        nodes = [start] + inner + ([] if end is None else [end])
        verts.extend(inner)
        for i, ch in enumerate(word):
            s, t = nodes[i], nodes[i + 1]
            arcs.add((s, t) if ch == "+" else (t, s))
        return nodes[-1]

    xprime = chain(x, u, None, "p") if u else x
    z1, z2 = fresh_names(g, "q", 2)
    verts.extend([z1, z2])
    arcs |= {(xprime, z1), (z1, z2), (z2, xprime)}
    if vrest:
        yprime = fresh_names(g, "r", 1)[0]
        verts.append(yprime)
        # the rest of v runs from y' to y
        nodes = [yprime] + fresh_names(g, "s", len(vrest) - 1) + [y]
        verts.extend(nodes[1:-1])
        for i, ch in enumerate(vrest):
            s, t = nodes[i], nodes[i + 1]
            arcs.add((s, t) if ch == "+" else (t, s))
    else:
        yprime = y
    if alpha == "+":
        arcs |= {(z1, yprime), (z2, yprime)}
    else:
        arcs |= {(yprime, z1), (yprime, z2)}
    h = digraph(verts, arcs)
    _check_isometric_extension(g, h, "cancellation gadget")
    return h


def _check_isometric_extension(g, h, what):
    dg, dh = distance_matrix(g), distance_matrix(h)
    for x in g.vertices:
        for y in g.vertices:
            if dg[x, y] != dh[x, y]:
                raise RuntimeError(
                    f"{what} is not an isometric extension: d({x},{y}) changed"
                )


@dataclass
class HullResult:
    hull: DiGraph | None
    added: tuple
    reason: str
    factors: tuple = ()


def injective_hull_search(g, max_add=2, max_factors=3, max_word_len=None):
    """Smallest absolute-retract extension of g found inside the product
    of a minimal zigzag-factor embedding, breadth-first by number of
    added vertices.  Minimality holds within the searched universe and
    the budget; exhaustion is reported honestly.
    """
    m = distance_matrix(g)
    if any(
        x != y and not is_macneille_closed(d) for (x, y), d in m.pairs()
    ):
        return HullResult(None, (), "not-embeddable")
    comps = symmetric_components(g)
    if len(comps) > 1:
        return _hull_of_components(g, comps, max_add, max_factors, max_word_len)
    if is_absolute_retract(g).verdict:
        return HullResult(g, (), "found")
    emb = min_factor_embedding(g, max_factors, max_word_len)
    if emb is None:
        return HullResult(None, (), "no-embedding-within-factor-budget")
    q = product_graph([zigzag_of_word(u) for u in emb.factors])
    image = {emb.coords[v]: v for v in g.vertices}
    if len(image) != len(g.vertices):
        raise RuntimeError("embedding coordinates are not injective")
    candidates = [t for t in q.vertices if t not in image]
    for s in range(1, max_add + 1):
        for extra in itertools.combinations(candidates, s):
            sub = induced_subgraph(q, list(image) + list(extra))
            relabel = {t: image.get(t, t) for t in sub.vertices}
            h = digraph(
                [relabel[t] for t in sub.vertices],
                {(relabel[a], relabel[b]) for a, b in sub.arcs},
            )
            dh = distance_matrix(h)
            if any(dh[x, y] != m[x, y] for x in g.vertices for y in g.vertices):
                continue
            if is_absolute_retract(h).verdict:
                return HullResult(h, extra, "found", emb.factors)
    return HullResult(None, (), "budget-exhausted", emb.factors)


def _hull_of_components(g, comps, max_add, max_factors, max_word_len):
    """Hull of a disconnected graph: the disjoint union of the hulls of
    its components (balls never cross components, so the Helly property
    is componentwise)."""
    verts = []
    arcs = set()
    added = []
    budget = max_add
    for ci, comp in enumerate(comps):
        part = induced_subgraph(g, comp)
        res = injective_hull_search(part, budget, max_factors, max_word_len)
        if res.hull is None:
            return HullResult(None, (), res.reason)
        budget -= len(res.added)
        rename = {
            v: (f"c{ci}", v) if v in res.added else v for v in res.hull.vertices
        }
        verts.extend(rename[v] for v in res.hull.vertices)
        arcs |= {(rename[a], rename[b]) for a, b in res.hull.arcs}
        added.extend(rename[v] for v in res.added)
    h = digraph(verts, arcs)
    return HullResult(h, tuple(added), "found")
