# cython: language_level=3, boundscheck=False, wraparound=False
"""64-bit Smith normal form kernel.

Same elimination strategy as the pure-Python implementation (minimal
pivot, row/column clearing, divisibility enforcement) but on flat C
int64 buffers.  Every multiply-accumulate is overflow-checked; on the
first overflow the whole computation is abandoned with OverflowError so
the caller can redo it with arbitrary-precision integers.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    bint __builtin_add_overflow(long long, long long, long long*) nogil
    bint __builtin_mul_overflow(long long, long long, long long*) nogil


cdef inline long long _llabs(long long x) nogil:
    return -x if x < 0 else x


cdef class _Work:
    cdef long long *a
    cdef long long *u
    cdef long long *v
    cdef Py_ssize_t m, n

    def __cinit__(self, Py_ssize_t m, Py_ssize_t n):
        self.m = m
        self.n = n
        self.a = <long long *> malloc(m * n * sizeof(long long))
        self.u = <long long *> malloc(m * m * sizeof(long long))
        self.v = <long long *> malloc(n * n * sizeof(long long))
        if self.a == NULL or self.u == NULL or self.v == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.a)
        free(self.u)
        free(self.v)


cdef int _addmul_row(long long *buf, Py_ssize_t width,
                     Py_ssize_t dst, Py_ssize_t src, long long c) nogil:
    """buf[dst,:] += c * buf[src,:]; returns 0, or -1 on overflow."""
    cdef Py_ssize_t k
    cdef long long prod, tot
    for k in range(width):
        if __builtin_mul_overflow(c, buf[src * width + k], &prod):
            return -1
        if __builtin_add_overflow(buf[dst * width + k], prod, &tot):
            return -1
        buf[dst * width + k] = tot
    return 0


cdef int _addmul_col(long long *buf, Py_ssize_t rows, Py_ssize_t width,
                     Py_ssize_t dst, Py_ssize_t src, long long c) nogil:
    cdef Py_ssize_t k
    cdef long long prod, tot
    for k in range(rows):
        if __builtin_mul_overflow(c, buf[k * width + src], &prod):
            return -1
        if __builtin_add_overflow(buf[k * width + dst], prod, &tot):
            return -1
        buf[k * width + dst] = tot
    return 0


cdef void _swap_row(long long *buf, Py_ssize_t width,
                    Py_ssize_t i, Py_ssize_t j) nogil:
    cdef Py_ssize_t k
    cdef long long t
    for k in range(width):
        t = buf[i * width + k]
        buf[i * width + k] = buf[j * width + k]
        buf[j * width + k] = t


cdef void _swap_col(long long *buf, Py_ssize_t rows, Py_ssize_t width,
                    Py_ssize_t i, Py_ssize_t j) nogil:
    cdef Py_ssize_t k
    cdef long long t
    for k in range(rows):
        t = buf[k * width + i]
        buf[k * width + i] = buf[k * width + j]
        buf[k * width + j] = t


cdef int _run(_Work w) nogil:
    """Reduce w.a in place, accumulating transforms; -1 on overflow."""
    cdef Py_ssize_t m = w.m, n = w.n
    cdef long long *A = w.a
    cdef long long *U = w.u
    cdef long long *V = w.v
    cdef Py_ssize_t t = 0, limit = m if m < n else n
    cdef Py_ssize_t i, j, pi, pj, offender
    cdef long long best, x, q, d
    cdef bint dirty, found

    while t < limit:
        found = False
        best = 0
        pi = pj = 0
        for i in range(t, m):
            for j in range(t, n):
                x = A[i * n + j]
                if x != 0 and (not found or _llabs(x) < best):
                    best = _llabs(x)
                    pi = i
                    pj = j
                    found = True
        if not found:
            break
        if pi != t:
            _swap_row(A, n, t, pi)
            _swap_row(U, m, t, pi)
        if pj != t:
            _swap_col(A, m, n, t, pj)
            _swap_col(V, n, n, t, pj)

        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i * n + t] != 0:
                    q = A[i * n + t] // A[t * n + t]
                    if _addmul_row(A, n, i, t, -q) < 0:
                        return -1
                    if _addmul_row(U, m, i, t, -q) < 0:
                        return -1
                    if A[i * n + t] != 0:
                        _swap_row(A, n, t, i)
                        _swap_row(U, m, t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, n):
                if A[t * n + j] != 0:
                    q = A[t * n + j] // A[t * n + t]
                    if _addmul_col(A, m, n, j, t, -q) < 0:
                        return -1
                    if _addmul_col(V, n, n, j, t, -q) < 0:
                        return -1
                    if A[t * n + j] != 0:
                        _swap_col(A, m, n, t, j)
                        _swap_col(V, n, n, t, j)
                        dirty = True
            if dirty:
                continue
            offender = -1
            d = A[t * n + t]
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i * n + j] % d != 0:
                        offender = i
                        break
                if offender >= 0:
                    break
            if offender < 0:
                break
            if _addmul_row(A, n, t, offender, 1) < 0:
                return -1
            if _addmul_row(U, m, t, offender, 1) < 0:
                return -1
        if A[t * n + t] < 0:
            for j in range(n):
                A[t * n + j] = -A[t * n + j]
            for j in range(m):
                U[t * m + j] = -U[t * m + j]
        t += 1
    return 0


def smith_normal_form_i64(rows):
    """SNF of an integer matrix given as nested lists.

    Returns (D, U, V) as nested Python int lists with U @ M @ V = D.
    Raises OverflowError if any intermediate value leaves int64 range
    (including the initial entries).
    """
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t n = len(rows[0]) if m else 0
    cdef Py_ssize_t i, j
    cdef _Work w = _Work(m, n)
    cdef object x
    for i in range(m):
        if len(rows[i]) != n:
            raise ValueError("ragged matrix")
        for j in range(n):
            x = rows[i][j]
            w.a[i * n + j] = x       # raises OverflowError beyond int64
    for i in range(m):
        for j in range(m):
            w.u[i * m + j] = 1 if i == j else 0
    for i in range(n):
        for j in range(n):
            w.v[i * n + j] = 1 if i == j else 0
    cdef int status
    with nogil:
        status = _run(w)
    if status < 0:
        raise OverflowError("int64 overflow during Smith reduction")
    D = [[w.a[i * n + j] for j in range(n)] for i in range(m)]
    U = [[w.u[i * m + j] for j in range(m)] for i in range(m)]
    V = [[w.v[i * n + j] for j in range(n)] for i in range(n)]
    return D, U, V
