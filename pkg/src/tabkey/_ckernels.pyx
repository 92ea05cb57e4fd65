# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same signatures and results as ``_pykernels``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

BACKEND = "cython"


cdef int* _pack(rows, int m, int n) except NULL:
    cdef int* buf = <int*>malloc(max(m * n, 1) * sizeof(int))
    cdef int i, j
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        row = rows[i]
        for j in range(n):
            buf[i * n + j] = row[j]
    return buf


cdef list _unpack(int* buf, int m, int n):
    return [[buf[i * n + j] for j in range(n)] for i in range(m)]


cdef int _find(int* buf, int m, int n, int* pa, int* pb) nogil:
    cdef int a, b
    for a in range(m):
        for b in range(n - 1, -1, -1):
            if buf[a * n + b] == -1:
                pa[0] = a
                pb[0] = b
                return 1
    return 0


cdef int _neighbours(int* buf, int n, int a, int b, int* ri, int* cj) nogil:
    cdef int i, j, q = 0, bound = -1
    for i in range(a, -1, -1):
        for j in range(b, bound, -1):
            if buf[i * n + j] == 1:
                ri[q] = i
                cj[q] = j
                q += 1
                bound = j
                break
        if bound == b:
            break
    return q


cdef void _remove(int* buf, int n, int a, int b, int* ri, int* cj) nogil:
    # neighbours come out bottom row first
    cdef int q = _neighbours(buf, n, a, b, ri, cj)
    cdef int k
    buf[a * n + b] = 0
    for k in range(q):
        buf[ri[k] * n + cj[k]] = 0
    for k in range(1, q):
        # top-first pair (r_k, c_{k+1}) is bottom-first (ri[k], cj[k-1])
        buf[ri[k] * n + cj[k - 1]] = 1


def find_removable(rows):
    cdef int m = len(rows)
    cdef int n = len(rows[0]) if m else 0
    cdef int a, b
    cdef int* buf = _pack(rows, m, n)
    try:
        if _find(buf, m, n, &a, &b):
            return a, b
        return None
    finally:
        free(buf)


def neighbours(rows, int a, int b):
    cdef int m = len(rows)
    cdef int n = len(rows[0])
    cdef int* buf = _pack(rows, m, n)
    cdef int* ri = <int*>malloc((m + 1) * sizeof(int))
    cdef int* cj = <int*>malloc((m + 1) * sizeof(int))
    cdef int q
    try:
        q = _neighbours(buf, n, a, b, ri, cj)
        return [(ri[k], cj[k]) for k in range(q - 1, -1, -1)]
    finally:
        free(buf)
        free(ri)
        free(cj)


def remove_at(rows, int a, int b):
    cdef int m = len(rows)
    cdef int n = len(rows[0])
    cdef int* buf = _pack(rows, m, n)
    cdef int* ri = <int*>malloc((m + 1) * sizeof(int))
    cdef int* cj = <int*>malloc((m + 1) * sizeof(int))
    cdef int i
    try:
        _remove(buf, n, a, b, ri, cj)
        for i in range(m):
            rows[i][:] = [buf[i * n + j] for j in range(n)]
    finally:
        free(buf)
        free(ri)
        free(cj)


def eliminate_rows(rows):
    cdef int m = len(rows)
    cdef int n = len(rows[0]) if m else 0
    cdef int a, b
    cdef int* buf = _pack(rows, m, n)
    cdef int* ri = <int*>malloc((m + 1) * sizeof(int))
    cdef int* cj = <int*>malloc((m + 1) * sizeof(int))
    try:
        with nogil:
            while _find(buf, m, n, &a, &b):
                _remove(buf, n, a, b, ri, cj)
        return _unpack(buf, m, n)
    finally:
        free(buf)
        free(ri)
        free(cj)


# -- census ----------------------------------------------------------------

cdef void _census(int* rows, int n, int level, int acc,
                  long long* counts) nogil:
    # rows + level * n is the upper row of length level + 1 (sorted);
    # the interlacing lower row of length level is built in rows + (level-1)*n
    cdef int* upper
    cdef int* lower
    cdef int k, x, lo, hi, start
    cdef int* extra
    if level == 0:
        counts[acc] += 1
        return
    upper = rows + level * n
    lower = rows + (level - 1) * n
    # iterative odometer over positions 0..level-1
    extra = <int*>malloc((level + 1) * sizeof(int))
    extra[0] = 0
    k = 0
    lower[0] = upper[0] - 1
    while k >= 0:
        lo = upper[k]
        hi = upper[k + 1]
        start = lo
        if k > 0 and lower[k - 1] + 1 > start:
            start = lower[k - 1] + 1
        if lower[k] < start:
            x = start
        else:
            x = lower[k] + 1
        if x > hi:
            k -= 1
            continue
        lower[k] = x
        extra[k + 1] = extra[k] + (1 if (lo < x and x < hi) else 0)
        if k + 1 == level:
            _census(rows, n, level - 1, acc + extra[level], counts)
        else:
            k += 1
            lower[k] = -1
    free(extra)


def census_counts(int n, int skip=0):
    if n <= 1:
        return {0: 1} if n == 1 else {}
    cdef int maxk = (n - 1) * (n - 1) // 4
    cdef long long* counts = <long long*>malloc((maxk + 1) * sizeof(long long))
    cdef int* rows = <int*>malloc(n * n * sizeof(int))
    cdef int s, j, w
    memset(counts, 0, (maxk + 1) * sizeof(long long))
    try:
        for s in range(1, n + 1):
            if skip and s != skip:
                continue
            w = 0
            for j in range(1, n + 1):
                if j != s:
                    rows[(n - 2) * n + w] = j
                    w += 1
            with nogil:
                _census(rows, n, n - 2, 0, counts)
        return {k: counts[k] for k in range(maxk + 1) if counts[k]}
    finally:
        free(counts)
        free(rows)


def count_132_scan(int n):
    # Heap's algorithm over all permutations, triple scan each
    cdef int* p = <int*>malloc(max(n, 1) * sizeof(int))
    cdef int* c = <int*>malloc(max(n, 1) * sizeof(int))
    cdef long long total = 0
    cdef int i, j, k, t
    for i in range(n):
        p[i] = i
        c[i] = 0
    with nogil:
        total += _scan132(p, n)
        i = 1
        while i < n:
            if c[i] < i:
                if i % 2 == 0:
                    t = p[0]; p[0] = p[i]; p[i] = t
                else:
                    t = p[c[i]]; p[c[i]] = p[i]; p[i] = t
                total += _scan132(p, n)
                c[i] += 1
                i = 1
            else:
                c[i] = 0
                i += 1
    free(p)
    free(c)
    return total


cdef long long _scan132(int* p, int n) nogil:
    cdef long long t = 0
    cdef int i, j, k
    for j in range(1, n - 1):
        for i in range(j):
            if p[i] >= p[j]:
                continue
            for k in range(j + 1, n):
                if p[i] < p[k] and p[k] < p[j]:
                    t += 1
    return t
