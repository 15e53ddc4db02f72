"""Zigzag distances: reflexive directed graphs as generalized metric
spaces valued in word up-sets.

The distance from x to y is the set of words coding walks from x to y
(+ for a forward arc, - for a backward arc, repeated vertices allowed),
a superword-closed set.  It is TOP for vertices in different components
of the symmetric hull and ZERO on the diagonal.
"""

import json
from dataclasses import dataclass
from functools import lru_cache

from .automata import SubwordNFA, all_reachable_sets, min_words, subset_reach
from .graphs import digraph
from .upsets import (
    ZERO,
    canonical_upset,
    involute_upset,
    oplus,
    upset_leq,
    upset_member,
)
from .words import ALPHABET, MINUS, PLUS, format_word, parse_word, words_up_to


@lru_cache(maxsize=None)
def _walk_delta(g):
    """Shared transition table: on + move along an arc, on - against one;
    self-loops everywhere (vertices may be repeated in a walk)."""
    moves = {(v, a): {v} for v in g.vertices for a in ALPHABET}
    for a, b in g.arcs:
        moves[(a, PLUS)].add(b)
        moves[(b, MINUS)].add(a)
    return {k: frozenset(s) for k, s in moves.items()}


def zigzag_nfa(g, x, y):
    """Automaton accepting exactly the words of the distance from x to y."""
    if x not in g.vertices or y not in g.vertices:
        raise ValueError(f"{x!r} or {y!r} is not a vertex")
    return SubwordNFA(
        frozenset(g.vertices), _walk_delta(g), frozenset([x]), frozenset([y])
    )


def distance(g, x, y):
    return distance_matrix(g)[x, y]


class DistanceMatrix:
    def __init__(self, vertices, d):
        self.vertices = tuple(vertices)
        self._d = dict(d)

    def __getitem__(self, pair):
        return self._d[pair]

    def __eq__(self, other):
        return (
            isinstance(other, DistanceMatrix)
            and self.vertices == other.vertices
            and self._d == other._d
        )

    def pairs(self):
        return self._d.items()


@lru_cache(maxsize=4096)
def distance_matrix(g):
    d = {}
    for i, x in enumerate(g.vertices):
        d[x, x] = ZERO
        for y in g.vertices[i + 1:]:
            dxy = min_words(zigzag_nfa(g, x, y))
            d[x, y] = dxy
            d[y, x] = involute_upset(dxy)
    return DistanceMatrix(g.vertices, d)


@dataclass
class MetricReport:
    violations: tuple

    @property
    def ok(self):
        return not self.violations


def verify_metric_axioms(m):
    """Check separation, involution symmetry and the triangle inequality
    over all pairs/triples; the report lists every violation."""
    bad = []
    vs = m.vertices
    for x in vs:
        for y in vs:
            d = m[x, y]
            if (d == ZERO) != (x == y):
                bad.append(("separation", x, y, str(d)))
            if d != involute_upset(m[y, x]):
                bad.append(("involution", x, y, str(d)))
    for x in vs:
        for y in vs:
            for z in vs:
                if not upset_leq(m[x, y], oplus(m[x, z], m[z, y])):
                    bad.append(("triangle", x, z, y))
    return MetricReport(tuple(bad))


def decomposition_check(m, limit=None):
    """For every word w in d(x,y) up to the length bound and every split
    w = uv, verify a midpoint z with u in d(x,z) and v in d(z,y) exists.
    Reports violations; the distance of an actual graph never has any.
    """
    vs = m.vertices
    if limit is None:
        limit = len(vs)
    bad = []
    for x in vs:
        for y in vs:
            d = m[x, y]
            for w in words_up_to(limit):
                if not upset_member(w, d):
                    continue
                for i in range(len(w) + 1):
                    u, v = w[:i], w[i:]
                    if not any(
                        upset_member(u, m[x, z]) and upset_member(v, m[z, y])
                        for z in vs
                    ):
                        bad.append((x, y, w, i))
    return MetricReport(tuple(bad))


def graph_from_metric(m):
    """The graph whose arcs are the pairs with + in the distance; inverse
    of distance_matrix on graph-induced metrics."""
    arcs = {
        (x, y) for (x, y), d in m.pairs() if x != y and upset_member("+", d)
    }
    return digraph(m.vertices, arcs)


def ball(g, x, r):
    """Vertices y with r in d(x,y): the set reached from x reading r."""
    if x not in g.vertices:
        raise ValueError(f"{x!r} is not a vertex")
    return subset_reach(zigzag_nfa(g, x, x), frozenset([x]), r)


def reachable_balls(g, x):
    """Every ball with center x and a single-word radius, as a dict
    mapping the ball (frozenset) to one shortest radius witness."""
    return all_reachable_sets(zigzag_nfa(g, x, x), frozenset([x]))


def matrix_to_json(m):
    return {
        "vertices": [str(v) for v in m.vertices],
        "d": {
            f"{x},{y}": [format_word(g) for g in d.generators]
            for (x, y), d in sorted(
                m.pairs(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]))
            )
        },
    }


def matrix_from_json(data):
    verts = list(data["vertices"])
    d = {}
    for key, gens in data["d"].items():
        x, y = key.split(",")
        d[x, y] = canonical_upset(parse_word(t) for t in gens)
    missing = [
        (x, y) for x in verts for y in verts if (x, y) not in d
    ]
    if missing:
        raise ValueError(f"matrix entries missing for pairs {missing}")
    return DistanceMatrix(verts, d)


def matrix_dumps(m):
    return json.dumps(matrix_to_json(m), sort_keys=True)
