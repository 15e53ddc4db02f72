"""Words over the two-letter alphabet {+, -}.

A word is a plain str containing only '+' and '-'.  The empty word is ""
and is written "e" in all textual I/O.  The subword order (u below v iff
u arises from v by deleting letters) is the order used everywhere.
"""

import itertools

from . import _kernels

PLUS = "+"
MINUS = "-"
ALPHABET = PLUS + MINUS
EMPTY_TOKEN = "e"

_FLIP = str.maketrans(PLUS + MINUS, MINUS + PLUS)


def check_word(u):
    if any(c not in ALPHABET for c in u):
        raise ValueError(f"not a word over {{+,-}}: {u!r}")
    return u


def involute_word(u):
    """Reverse the word and interchange + with -."""
    return u[::-1].translate(_FLIP)


def subword_leq(u, v):
    """True iff u can be obtained from v by deleting letters."""
    return _kernels.subword(u, v)


def word_key(u):
    """Canonical sort key: length first, then lexicographic with + < -."""
    return (len(u), u)


def format_word(u):
    return u if u else EMPTY_TOKEN


def parse_word(text):
    if text == EMPTY_TOKEN:
        return ""
    if not text:
        raise ValueError("empty word must be written 'e'")
    return check_word(text)


def words_of_length(n):
    for letters in itertools.product(ALPHABET, repeat=n):
        yield "".join(letters)


def words_up_to(n):
    """All words of length 0..n in canonical order."""
    for k in range(n + 1):
        yield from words_of_length(k)


def all_subwords(u):
    """The set of all subwords of u (including u and the empty word)."""
    out = {""}
    for c in u:
        out |= {w + c for w in out}
    return out
