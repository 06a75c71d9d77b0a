# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops.  Mirrors ``_kernels_py`` exactly.

Subset masks are 64-bit, so ``koszul_candidates`` handles at most 6
variables; the dispatcher in ``kernels`` falls back to Python above that.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t

MAX_ARITY = 6


cdef int64_t* _pack(list pts, Py_ssize_t n) except NULL:
    cdef Py_ssize_t m = len(pts), k, i
    cdef int64_t* buf = <int64_t*> malloc((m * n + 1) * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    for k in range(m):
        p = pts[k]
        for i in range(n):
            buf[k * n + i] = p[i]
    return buf


cdef inline bint _divides(const int64_t* g, const int64_t* a, Py_ssize_t n) nogil:
    cdef Py_ssize_t i
    for i in range(n):
        if g[i] > a[i]:
            return False
    return True


cdef inline bint _in_ideal(const int64_t* gens, Py_ssize_t m, const int64_t* a,
                           Py_ssize_t n) nogil:
    cdef Py_ssize_t k
    for k in range(m):
        if _divides(gens + k * n, a, n):
            return True
    return False


def minimal_elements(points):
    pts = sorted(set(points), key=sum)
    cdef Py_ssize_t m = len(pts)
    if m == 0:
        return []
    cdef Py_ssize_t n = len(pts[0])
    cdef int64_t* buf = _pack(pts, n)
    cdef int64_t* keep = <int64_t*> malloc(m * sizeof(int64_t))
    cdef Py_ssize_t nk = 0, k, j
    cdef bint hit
    try:
        for k in range(m):
            hit = False
            for j in range(nk):
                if _divides(buf + keep[j] * n, buf + k * n, n):
                    hit = True
                    break
            if not hit:
                keep[nk] = k
                nk += 1
        return [pts[keep[j]] for j in range(nk)]
    finally:
        free(buf)
        free(keep)


def membership(gens, points):
    gens = list(gens)
    points = list(points)
    cdef Py_ssize_t m = len(gens), p = len(points), k
    if p == 0:
        return []
    if m == 0:
        return [False] * p
    cdef Py_ssize_t n = len(points[0])
    cdef int64_t* g = _pack(gens, n)
    cdef int64_t* q = _pack(points, n)
    try:
        return [bool(_in_ideal(g, m, q + k * n, n)) for k in range(p)]
    finally:
        free(g)
        free(q)


def koszul_candidates(gens, Py_ssize_t n, values):
    if n > MAX_ARITY:
        raise ValueError("compiled kernel supports at most 6 variables")
    gens = list(gens)
    cdef Py_ssize_t m = len(gens), i, k, b, full = 1 << n
    cdef Py_ssize_t total = 1
    lens = [len(v) for v in values]
    for i in range(n):
        total *= lens[i]
    if m == 0 or total == 0:
        return []
    cdef int64_t* g = _pack(gens, n)
    cdef int64_t* vals
    cdef int64_t* offs = <int64_t*> malloc((n + 1) * sizeof(int64_t))
    cdef int64_t* radix = <int64_t*> malloc((n + 1) * sizeof(int64_t))
    cdef int64_t* idx = <int64_t*> malloc((n + 1) * sizeof(int64_t))
    cdef int64_t a[8]
    cdef int64_t c[8]
    cdef uint64_t mask, bit
    cdef bint ok, cone
    cdef Py_ssize_t flat = 0, t
    for i in range(n):
        offs[i] = flat
        radix[i] = lens[i]
        idx[i] = 0
        flat += lens[i]
    vals = <int64_t*> malloc((flat + 1) * sizeof(int64_t))
    flat = 0
    for i in range(n):
        for v in values[i]:
            vals[flat] = v
            flat += 1
    out = []
    try:
        for t in range(total):
            for i in range(n):
                a[i] = vals[offs[i] + idx[i]]
            if _in_ideal(g, m, a, n):
                mask = 0
                for b in range(full):
                    ok = True
                    for i in range(n):
                        c[i] = a[i] - ((b >> i) & 1)
                        if c[i] < 0:
                            ok = False
                            break
                    if ok and _in_ideal(g, m, c, n):
                        mask |= (<uint64_t> 1) << b
                cone = False
                for i in range(n):
                    bit = (<uint64_t> 1) << i
                    cone = True
                    for b in range(full):
                        if (mask >> b) & 1 and not ((mask >> (b | bit)) & 1):
                            cone = False
                            break
                    if cone:
                        break
                if not cone:
                    out.append((tuple([a[i] for i in range(n)]), int(mask)))
            # mixed-radix increment, last coordinate fastest (matches itertools.product)
            i = n - 1
            while i >= 0:
                idx[i] += 1
                if idx[i] < radix[i]:
                    break
                idx[i] = 0
                i -= 1
        return out
    finally:
        free(g)
        free(vals)
        free(offs)
        free(radix)
        free(idx)
