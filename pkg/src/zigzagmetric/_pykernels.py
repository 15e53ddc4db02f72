"""Hot word-order kernels, pure Python backend.

Words over {+,-} are plain str.  The cancellation search additionally
packs words into integers (bit i set = letter i is '-') so the inner
enumeration stays allocation-free.  The compiled backend in _ckernels.pyx
implements the same four functions with the same semantics.
"""


def subword(u, v):
    """True iff u is obtained from v by deleting letters (greedy scan)."""
    if len(u) > len(v):
        return False
    it = iter(v)
    return all(c in it for c in u)


def member(w, gens):
    """True iff some word in gens is a subword of w."""
    return any(subword(g, w) for g in gens)


def min_antichain(words):
    """Subword-minimal elements of words, deduplicated and sorted.

    The sort key is (length, lexicographic); '+' < '-' in ASCII, so plain
    string comparison gives the canonical letter order.  Idempotent.
    """
    out = []
    for w in sorted(set(words), key=lambda w: (len(w), w)):
        if not any(subword(m, w) for m in out):
            out.append(w)
    return out


def _encode(w):
    m = 0
    for i, c in enumerate(w):
        if c == "-":
            m |= 1 << i
    return len(w), m


def _decode(n, m):
    return "".join("-" if (m >> i) & 1 else "+" for i in range(n))


def _isub(nu, mu, nv, mv):
    i = 0
    for j in range(nv):
        if i < nu and ((mu >> i) & 1) == ((mv >> j) & 1):
            i += 1
    return i == nu


def _imember(n, m, enc):
    for ng, mg in enc:
        if _isub(ng, mg, n, m):
            return True
    return False


def cancellation_search(gens, limit):
    """First pair (u, v) violating the cancellation rule for ↑gens.

    Searches |u|+|v| <= limit in increasing total length (then mask order)
    for u,v with u'+'v and u'-'v in the up-set generated by gens but uv
    outside it.  Returns (u, v) as strings, or None.
    """
    enc = [_encode(g) for g in gens]
    for total in range(limit + 1):
        for la in range(total + 1):
            lb = total - la
            for ma in range(1 << la):
                hi_plus = ma | (1 << la)
                for mb in range(1 << lb):
                    tail = mb << (la + 1)
                    if not _imember(la + 1 + lb, ma | tail, enc):
                        continue
                    if not _imember(la + 1 + lb, hi_plus | tail, enc):
                        continue
                    if not _imember(la + lb, ma | (mb << la), enc):
                        return _decode(la, ma), _decode(lb, mb)
    return None
