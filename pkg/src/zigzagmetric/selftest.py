"""Exhaustive theorem-consistency checks over small oriented graphs.

Cross-checks the independent characterizations against each other: the
isometric-embedding test against MacNeille closure of the distances, the
Helly verdict against its necessary conditions, and the absolute-retract
verdict against actual retraction searches from random isometric
extensions.
"""

import itertools
import random
from dataclasses import dataclass

from .graphs import digraph, fresh_names, symmetric_components
from .metric import distance_matrix
from .retracts import (
    embed_zigzag_product,
    is_absolute_retract,
    retraction_search,
)
from .upsets import is_macneille_closed


def oriented_graphs(n):
    """All oriented graphs on the labeled vertices 0..n-1: three choices
    (no arc, forward, backward) per unordered pair."""
    pairs = list(itertools.combinations(range(n), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = set()
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                arcs.add((i, j))
            elif c == 2:
                arcs.add((j, i))
        yield digraph(range(n), arcs)


def _extends_isometrically(g, h):
    dg, dh = distance_matrix(g), distance_matrix(h)
    return all(
        dg[x, y] == dh[x, y] for x in g.vertices for y in g.vertices
    )


def random_isometric_extension(g, rng, max_added=2, tries=20):
    """An isometric extension of g by 1..max_added fresh vertices.

    Random oriented attachments first; falls back to a twin of a random
    vertex, then to an isolated vertex (both always isometric).
    """
    n_add = rng.randint(1, max_added)
    for _ in range(tries):
        names = fresh_names(g, "t", n_add)
        verts = tuple(g.vertices) + tuple(names)
        arcs = set(g.arcs)
        for t in names:
            for v in verts:
                if v == t or (t, v) in arcs or (v, t) in arcs:
                    continue
                r = rng.random()
                if r < 0.25:
                    arcs.add((t, v))
                elif r < 0.5:
                    arcs.add((v, t))
        h = digraph(verts, arcs)
        if _extends_isometrically(g, h):
            return h
    if g.arcs:
        v = rng.choice(g.vertices)
        t = fresh_names(g, "t", 1)[0]
        arcs = set(g.arcs)
        for a, b in g.arcs:
            if a == v:
                arcs.add((t, b))
            if b == v:
                arcs.add((a, t))
        h = digraph(tuple(g.vertices) + (t,), arcs)
        if _extends_isometrically(g, h):
            return h
    t = fresh_names(g, "t", 1)[0]
    return digraph(tuple(g.vertices) + (t,), g.arcs)


@dataclass
class ConsistencyReport:
    max_n: int
    graphs_checked: int
    ar_count: int
    retractions_checked: int
    failures: tuple

    @property
    def ok(self):
        return not self.failures


def theorem_consistency(max_n=4, seed=0, extensions_per_ar=1):
    """Run the three cross-checks over every oriented graph on at most
    max_n labeled vertices; failures list (description, graph) pairs."""
    rng = random.Random(seed)
    failures = []
    checked = ar_count = retractions = 0
    for n in range(1, max_n + 1):
        for g in oriented_graphs(n):
            checked += 1
            m = distance_matrix(g)
            closed = all(
                x == y or is_macneille_closed(d) for (x, y), d in m.pairs()
            )
            if len(symmetric_components(g)) == 1:
                cert = embed_zigzag_product(g)
                if cert.isometric != closed:
                    failures.append(
                        ("embed-vs-closure disagreement", g)
                    )
            rep = is_absolute_retract(g)
            if rep.anomalies:
                failures.append((f"anomalies: {rep.anomalies}", g))
            if rep.verdict:
                ar_count += 1
                for _ in range(extensions_per_ar):
                    h = random_isometric_extension(g, rng)
                    retractions += 1
                    if retraction_search(h, g) is None:
                        failures.append(("missing retraction", g))
    return ConsistencyReport(
        max_n, checked, ar_count, retractions, tuple(failures)
    )
