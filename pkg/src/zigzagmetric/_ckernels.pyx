# cython: language_level=3, boundscheck=False, wraparound=False
"""Hot word-order kernels, compiled backend.

Mirrors _pykernels exactly; see that module for the contracts.
"""

from libc.stdint cimport uint64_t


cdef bint _bsub(const unsigned char[:] u, const unsigned char[:] v) noexcept:
    cdef Py_ssize_t i = 0, j
    cdef Py_ssize_t nu = u.shape[0], nv = v.shape[0]
    if nu > nv:
        return False
    for j in range(nv):
        if i < nu and u[i] == v[j]:
            i += 1
    return i == nu


def subword(u, v):
    """True iff u is obtained from v by deleting letters (greedy scan)."""
    cdef bytes bu = u.encode("ascii")
    cdef bytes bv = v.encode("ascii")
    if len(bu) == 0:
        return True
    return bool(_bsub(bu, bv))


def member(w, gens):
    """True iff some word in gens is a subword of w."""
    cdef bytes bw = w.encode("ascii")
    cdef bytes bg
    for g in gens:
        bg = g.encode("ascii")
        if len(bg) == 0 or _bsub(bg, bw):
            return True
    return False


def min_antichain(words):
    """Subword-minimal elements of words, deduplicated and sorted."""
    cdef list out = []
    cdef list benc = []
    cdef bytes bw
    cdef bint dominated
    for w in sorted(set(words), key=lambda w: (len(w), w)):
        bw = w.encode("ascii")
        dominated = False
        for bm in benc:
            if len(<bytes>bm) == 0 or _bsub(<bytes>bm, bw):
                dominated = True
                break
        if not dominated:
            out.append(w)
            benc.append(bw)
    return out


cdef inline bint _isub(int nu, uint64_t mu, int nv, uint64_t mv) noexcept:
    cdef int i = 0, j
    for j in range(nv):
        if i < nu and ((mu >> i) & 1) == ((mv >> j) & 1):
            i += 1
    return i == nu


cdef bint _imember(int n, uint64_t m, int ng, int* glen, uint64_t* gmask) noexcept:
    cdef int k
    for k in range(ng):
        if _isub(glen[k], gmask[k], n, m):
            return True
    return False


def cancellation_search(gens, limit):
    """First pair (u, v) violating the cancellation rule for ↑gens.

    Same search order as the pure backend: increasing |u|+|v| (bounded by
    limit), then mask order.  Returns (u, v) as strings, or None.
    """
    if limit > 60:
        raise ValueError("compiled cancellation search supports limit <= 60")
    cdef int glen[64]
    cdef uint64_t gmask[64]
    cdef int ng = 0
    cdef int i
    for g in gens:
        if ng >= 64 or len(g) > 60:
            raise ValueError("generator set too large for compiled kernel")
        glen[ng] = len(g)
        gmask[ng] = 0
        for i in range(len(g)):
            if g[i] == "-":
                gmask[ng] |= <uint64_t>1 << i
        ng += 1

    cdef int total, la, lb
    cdef uint64_t ma, mb, tail, hi
    for total in range(limit + 1):
        for la in range(total + 1):
            lb = total - la
            for ma in range(<uint64_t>1 << la):
                hi = ma | (<uint64_t>1 << la)
                for mb in range(<uint64_t>1 << lb):
                    tail = mb << (la + 1)
                    if not _imember(la + 1 + lb, ma | tail, ng, glen, gmask):
                        continue
                    if not _imember(la + 1 + lb, hi | tail, ng, glen, gmask):
                        continue
                    if not _imember(la + lb, ma | (mb << la), ng, glen, gmask):
                        return _dec(la, ma), _dec(lb, mb)
    return None


cdef str _dec(int n, uint64_t m):
    cdef list out = []
    cdef int i
    for i in range(n):
        out.append("-" if (m >> i) & 1 else "+")
    return "".join(out)
