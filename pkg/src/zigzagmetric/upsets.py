"""Superword-closed sets of words, stored by their minimal antichain.

An UpSet represents a final segment of the subword order: the set of all
superwords of its generators.  By Higman's lemma every final segment has
a finite antichain of minimal elements, so this representation is exact.

ZERO (generated by the empty word) is the set of all words and TOP (no
generators) is the empty set.  The order used throughout is reverse
inclusion: X <= Y iff X contains Y as a set of words, so ZERO is least
and TOP is greatest.  Concatenation of sets makes this a lattice-ordered
monoid with ZERO neutral; the word involution lifts generator-wise.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .words import (
    all_subwords,
    check_word,
    format_word,
    involute_word,
    parse_word,
    subword_leq,
    word_key,
)


@dataclass(frozen=True)
class UpSet:
    generators: tuple

    def __str__(self):
        return "{" + ",".join(format_word(g) for g in self.generators) + "}"

    @property
    def is_zero(self):
        return self.generators == ("",)

    @property
    def is_top(self):
        return self.generators == ()


ZERO = UpSet(("",))
TOP = UpSet(())


def canonical_upset(words):
    """UpSet generated by words: minimal antichain, canonically sorted."""
    return UpSet(tuple(_kernels.min_antichain([check_word(w) for w in words])))


def parse_upset(text):
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"up-set literal must be braced: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return TOP
    return canonical_upset(parse_word(t.strip()) for t in inner.split(","))


def upset_member(w, x):
    """True iff w lies in the set represented by x."""
    return _kernels.member(w, x.generators)


def upset_leq(x, y):
    """True iff x contains y as a set of words (x below y)."""
    return all(_kernels.member(h, x.generators) for h in y.generators)


def meet(x, y):
    """Greatest lower bound: the union of the two sets."""
    return canonical_upset(x.generators + y.generators)


@lru_cache(maxsize=None)
def _merges(u, v):
    """All interleavings of u and v in which equal letters may be shared.

    Every minimal common superword of u and v is such a merge: in a
    minimal superword each position must be used by an embedding of u or
    of v, else the letter could be deleted.
    """
    if not u:
        return (v,)
    if not v:
        return (u,)
    out = set()
    for m in _merges(u[1:], v):
        out.add(u[0] + m)
    for m in _merges(u, v[1:]):
        out.add(v[0] + m)
    if u[0] == v[0]:
        for m in _merges(u[1:], v[1:]):
            out.add(u[0] + m)
    return tuple(out)


def mcs(u, v):
    """Antichain of subword-minimal common superwords of u and v."""
    return set(_kernels.min_antichain(_merges(u, v)))


@lru_cache(maxsize=200_000)
def _principal_join(u, v):
    return UpSet(tuple(_kernels.min_antichain(_merges(u, v))))


def join(x, y):
    """Least upper bound: the intersection of the two sets."""
    gens = []
    for g in x.generators:
        for h in y.generators:
            gens.extend(_principal_join(g, h).generators)
    return UpSet(tuple(_kernels.min_antichain(gens)))


def oplus(x, y):
    """Concatenation {uv : u in x, v in y} of the represented sets."""
    return canonical_upset(g + h for g in x.generators for h in y.generators)


def involute_upset(x):
    return canonical_upset(involute_word(g) for g in x.generators)


@dataclass(frozen=True)
class LowerCone:
    """A subword-closed set, given by its maximal words; None means all of
    the words (the lower cone of TOP, an intersection over no generators).
    """

    maximal: tuple | None

    @property
    def is_all(self):
        return self.maximal is None


ALL_WORDS = LowerCone(None)


def lower_cone(x):
    """Common subwords of all generators of x, as a LowerCone."""
    if x.is_top:
        return ALL_WORDS
    base = min(x.generators, key=word_key)
    common = [
        w
        for w in all_subwords(base)
        if all(subword_leq(w, g) for g in x.generators)
    ]
    maximal = [
        w
        for w in common
        if not any(w != s and subword_leq(w, s) for s in common)
    ]
    return LowerCone(tuple(sorted(maximal, key=word_key)))


def macneille_closure(x):
    """Intersection of the principal up-sets over the maximal common
    subwords of x's generators; x is closed iff this returns x itself.
    """
    if x.is_top:
        return TOP
    acc = ZERO
    for w in lower_cone(x).maximal:
        acc = join(acc, UpSet((w,)))
    return acc


def is_macneille_closed(x):
    return macneille_closure(x) == x


def cancellation_witness(x, limit=None):
    """Some (u, v) with u+v and u-v in x but uv outside, searched up to
    |u|+|v| <= limit; None if no such pair exists within the bound.

    Bounded semi-decision used as a cross-oracle for macneille_closure;
    the default bound is twice the longest generator plus two.
    """
    if x.is_top:
        return None
    if limit is None:
        limit = 2 * max(len(g) for g in x.generators) + 2
    return _kernels.cancellation_search(x.generators, limit)
