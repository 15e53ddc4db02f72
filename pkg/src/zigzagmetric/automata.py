"""Nondeterministic automata whose languages are superword-closed.

Every state keeps itself on every letter (the self-loop law), so reading
extra letters never loses states: accepted words stay accepted after
inserting letters.  These automata carry the graph distance computations
and back the residuation constraints.
"""

import itertools
from dataclasses import dataclass

from .quantale import LEFT, RIGHT, left_remainder, right_remainder
from .upsets import TOP, canonical_upset
from .words import ALPHABET, subword_leq, word_key


@dataclass(frozen=True)
class SubwordNFA:
    """states/starts/accepts are frozensets; delta maps (state, letter) to
    a frozenset of successors and must contain every self-loop."""

    states: frozenset
    delta: dict
    starts: frozenset
    accepts: frozenset

    def __post_init__(self):
        if not self.starts <= self.states or not self.accepts <= self.states:
            raise ValueError("starts/accepts must be states")
        for s in self.states:
            for a in ALPHABET:
                if s not in self.delta.get((s, a), ()):
                    raise ValueError(
                        f"self-loop law violated at state {s!r} on {a!r}"
                    )

    def step(self, states, letter):
        out = set()
        for s in states:
            out |= self.delta.get((s, letter), frozenset())
        return frozenset(out)


def make_selfloop_nfa(states, moves, starts, accepts):
    """Build a SubwordNFA from moves without self-loops; adds them."""
    states = frozenset(states)
    delta = {}
    for s in states:
        for a in ALPHABET:
            delta[(s, a)] = frozenset(moves.get((s, a), ())) | {s}
    return SubwordNFA(states, delta, frozenset(starts), frozenset(accepts))


def nfa_accepts(a, w):
    cur = frozenset(a.starts)
    for c in w:
        cur = a.step(cur, c)
    return bool(cur & a.accepts)


def subset_reach(a, states, w):
    """States reachable from the given set reading w; contains the set."""
    cur = frozenset(states)
    for c in w:
        cur = a.step(cur, c)
    return cur


def all_reachable_sets(a, start):
    """Every subset reachable from start, with one shortest witness word.

    Breadth-first, letter + before -, so witnesses are deterministic.
    Returns a dict mapping frozenset -> witness word.
    """
    start = frozenset(start)
    out = {start: ""}
    frontier = [start]
    while frontier:
        nxt = []
        for cur in frontier:
            w = out[cur]
            for c in ALPHABET:
                new = a.step(cur, c)
                if new not in out:
                    out[new] = w + c
                    nxt.append(new)
        frontier = nxt
    return out


def min_words(a):
    """Antichain of subword-minimal accepted words, as an UpSet.

    A minimal word never reads a letter that leaves the reachable set
    unchanged (dropping it would give an accepted proper subword), so the
    search follows strictly growing reachable sets only; the growth bounds
    every branch by |states| - 1 letters.  Returns TOP when nothing is
    accepted.
    """
    found = []
    frontier = [(frozenset(a.starts), "")]
    while frontier:
        nxt = []
        for cur, w in frontier:
            if any(subword_leq(f, w) for f in found):
                continue
            if cur & a.accepts:
                found.append(w)
                continue
            for c in ALPHABET:
                new = a.step(cur, c)
                if new != cur:
                    nxt.append((new, w + c))
        frontier = nxt
    if not found:
        return TOP
    return canonical_upset(found)


def constraint_nfa(prefixes, target, side=LEFT):
    """Automaton for {w : p.w in target for every p in prefixes} (LEFT)
    or {w : w.p in target for every p} (RIGHT).

    One component per prefix tracks the not-yet-matched remainder of some
    target generator; the product of the components enforces all prefixes
    at once.  The language is superword-closed by construction.
    """
    prefixes = sorted(set(prefixes), key=word_key)
    if side == LEFT:
        rem = left_remainder
    elif side == RIGHT:
        rem = right_remainder
    else:
        raise ValueError(f"side must be LEFT or RIGHT, got {side!r}")

    if not prefixes:
        return make_selfloop_nfa(["ok"], {}, ["ok"], ["ok"])
    if target == TOP:
        return make_selfloop_nfa(["dead"], {}, ["dead"], [])

    per_prefix = [
        sorted({rem(p, h) for h in target.generators}, key=word_key)
        for p in prefixes
    ]
    starts = set(itertools.product(*per_prefix))
    n = len(prefixes)
    accept = ("",) * n

    states = set(starts)
    moves = {}
    frontier = list(starts)
    while frontier:
        state = frontier.pop()
        for c in ALPHABET:
            options = []
            for pending in state:
                opts = [pending]
                if pending.startswith(c):
                    opts.append(pending[1:])
                options.append(opts)
            for succ in itertools.product(*options):
                if succ == state:
                    continue
                moves.setdefault((state, c), set()).add(succ)
                if succ not in states:
                    states.add(succ)
                    frontier.append(succ)
    return make_selfloop_nfa(states, moves, starts, [accept] if accept in states else [])
