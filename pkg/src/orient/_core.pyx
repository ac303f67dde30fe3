# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: canonical relabeling, vote-closure scans, backtracking.

Same contracts as orient._fallback; see there for the documented behavior.
The wrappers in orient._kernels guarantee the width limits these routines
assume (63 pair bits, 64 search variables, 22-bit membership tables).
"""

NAME = "compiled"


def canonical_min(unsigned long long bits, int nperms, int npairs,
                  int[::1] dst, unsigned char[::1] flip):
    cdef unsigned long long best = ~(<unsigned long long>0)
    cdef unsigned long long out
    cdef int idx, p, base = 0, best_idx = 0
    for idx in range(nperms):
        out = 0
        for p in range(npairs):
            out |= (<unsigned long long>(((bits >> (npairs - 1 - p)) & 1)
                                         ^ flip[base + p])) << dst[base + p]
        if out < best:
            best = out
            best_idx = idx
        base += npairs
    return int(best), best_idx


cdef inline bint _bsearch(unsigned long long[::1] masks, unsigned long long r) noexcept:
    cdef Py_ssize_t lo = 0, hi = masks.shape[0], mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if masks[mid] < r:
            lo = mid + 1
        else:
            hi = mid
    return lo < masks.shape[0] and masks[lo] == r


def scan_triples(masks_obj, int op, int width):
    cdef unsigned long long[::1] masks = masks_obj
    cdef Py_ssize_t m = masks.shape[0], i, j, k
    cdef unsigned long long a, b, c, ab, xab, r
    cdef bint use_bitset = width <= 22
    cdef bytearray backing = None
    cdef unsigned char[::1] memb = None
    cdef bint inside
    if use_bitset:
        backing = bytearray(((1 << width) + 7) >> 3)
        memb = backing
        for i in range(m):
            memb[masks[i] >> 3] |= <unsigned char>(1 << (masks[i] & 7))
    for i in range(m):
        a = masks[i]
        for j in range(i + 1, m):
            b = masks[j]
            ab = a & b
            xab = a ^ b
            for k in range(j + 1, m):
                c = masks[k]
                if op == 0:
                    r = xab ^ c
                else:
                    r = ab | (xab & c)
                if use_bitset:
                    inside = (memb[r >> 3] >> (r & 7)) & 1
                else:
                    inside = _bsearch(masks, r)
                if not inside:
                    return int(i), int(j), int(k), int(r)
    return None


def backtrack(int num_vars, int[::1] order,
              int[::1] trig_off, int[::1] trig_ids,
              int[::1] scope_off, int[::1] scope_depths,
              int[::1] abyte_off, unsigned char[::1] allowed):
    cdef unsigned char val[64]
    cdef unsigned char branch[65]
    cdef int depth = 0, v, c, ci, s, d
    cdef unsigned long long vec, bits
    cdef bint ok
    for d in range(num_vars + 1):
        branch[d] = 0
    while True:
        if depth == num_vars:
            bits = 0
            for d in range(num_vars):
                if val[d]:
                    bits |= (<unsigned long long>1) << order[d]
            return int(bits)
        v = branch[depth]
        if v == 2:
            branch[depth] = 0
            depth -= 1
            if depth < 0:
                return None
            continue
        branch[depth] = v + 1
        val[depth] = <unsigned char>v
        ok = True
        for ci in range(trig_off[depth], trig_off[depth + 1]):
            c = trig_ids[ci]
            vec = 0
            for s in range(scope_off[c], scope_off[c + 1]):
                vec = (vec << 1) | val[scope_depths[s]]
            if not (allowed[abyte_off[c] + (vec >> 3)] >> (vec & 7)) & 1:
                ok = False
                break
        if ok:
            depth += 1
