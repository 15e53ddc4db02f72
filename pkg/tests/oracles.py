"""Independent brute-force oracles used by the test suite.

Everything here works on explicit word sets bounded by a length limit,
with no reliance on the antichain machinery under test (membership is
checked against raw generators with the plain subword test only).
"""

import random

from zigzagmetric.automata import nfa_accepts
from zigzagmetric.upsets import TOP, canonical_upset
from zigzagmetric.words import subword_leq, words_up_to


def expand(x, limit):
    """All member words of the up-set x up to the length limit."""
    return {
        w
        for w in words_up_to(limit)
        if any(subword_leq(g, w) for g in x.generators)
    }


def minimal_antichain_of(words):
    ws = set(words)
    return sorted(
        (w for w in ws if not any(v != w and subword_leq(v, w) for v in ws)),
        key=lambda w: (len(w), w),
    )


def brute_min_words(nfa, limit):
    """Minimal accepted words by plain enumeration up to the limit."""
    accepted = [w for w in words_up_to(limit) if nfa_accepts(nfa, w)]
    if not accepted:
        return TOP
    return canonical_upset(accepted)


def brute_mcs(u, v):
    """Minimal common superwords by plain enumeration."""
    common = [
        w
        for w in words_up_to(len(u) + len(v))
        if subword_leq(u, w) and subword_leq(v, w)
    ]
    return set(minimal_antichain_of(common))


def random_word(rng, maxlen):
    return "".join(rng.choice("+-") for _ in range(rng.randint(0, maxlen)))


def random_upset(rng, maxlen=4, maxgens=3):
    return canonical_upset(
        random_word(rng, maxlen) for _ in range(rng.randint(1, maxgens))
    )


def random_digraph(rng, max_vertices=5, arc_prob=0.35):
    from zigzagmetric.graphs import digraph

    n = rng.randint(1, max_vertices)
    arcs = set()
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < arc_prob:
                arcs.add((i, j))
    return digraph(range(n), arcs)


def random_oriented_digraph(rng, max_vertices=5, arc_prob=0.5):
    from zigzagmetric.graphs import digraph

    n = rng.randint(1, max_vertices)
    arcs = set()
    for i in range(n):
        for j in range(i + 1, n):
            r = rng.random()
            if r < arc_prob / 2:
                arcs.add((i, j))
            elif r < arc_prob:
                arcs.add((j, i))
    return digraph(range(n), arcs)


def seeded(seed):
    return random.Random(seed)
