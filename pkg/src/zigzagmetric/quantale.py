"""Residuation and the canonical distance between up-sets.

Both operations reduce the universally quantified membership conditions
to constraints on generators (valid because the sets are superword
closed) and solve each single-word constraint by a greedy remainder:
the letters of the target word not absorbed by the fixed prefix/suffix.
The equivalent constraint-automaton route lives in the automata module
and is used as a cross-check in the tests.
"""

from .upsets import (
    ZERO,
    canonical_upset,
    involute_upset,
    is_macneille_closed,
    join,
    upset_member,
)

LEFT = "left"
RIGHT = "right"


def left_remainder(prefix, target):
    """Shortest t with target a subword of prefix + t, namely the part of
    target left after greedily matching it against prefix."""
    i = 0
    for c in prefix:
        if i < len(target) and target[i] == c:
            i += 1
    return target[i:]


def right_remainder(suffix, target):
    """Shortest t with target a subword of t + suffix."""
    i = len(target)
    for c in reversed(suffix):
        if i > 0 and target[i - 1] == c:
            i -= 1
    return target[:i]


def _word_constraint(pending, target, rem):
    """Up-set of all w with (w combined with every word of pending) in
    target, where rem picks the matching direction."""
    acc = ZERO
    for h in pending:
        acc = join(acc, canonical_upset(rem(h, t) for t in target.generators))
    return acc


def residual(v, g, side):
    """Least r with v <= r (+) g (LEFT) or v <= g (+) r (RIGHT).

    As sets: the largest final segment r whose concatenation with g on
    the given side stays inside v.
    """
    if side == LEFT:
        return _word_constraint(g.generators, v, right_remainder)
    if side == RIGHT:
        return _word_constraint(g.generators, v, left_remainder)
    raise ValueError(f"side must be LEFT or RIGHT, got {side!r}")


def quantale_distance(p, q):
    """Least r with p <= q (+) involute(r) and q <= p (+) r.

    The admissible r are closed under set union, so the least one is the
    pointwise set {w : p.{w} inside q and q.{involute(w)} inside p},
    computed as the join of the two one-sided residuals.
    """
    return join(residual(q, p, RIGHT), involute_upset(residual(p, q, RIGHT)))


def quantale_graph_arc(p, q):
    """Arc query on the graph carried by the closed up-sets: true iff the
    one-letter word + belongs to the canonical distance from p to q."""
    for name, x in (("first", p), ("second", q)):
        if not is_macneille_closed(x):
            raise ValueError(
                f"{name} argument {x} is not MacNeille-closed; "
                "arc queries are defined on closed up-sets only"
            )
    return upset_member("+", quantale_distance(p, q))
