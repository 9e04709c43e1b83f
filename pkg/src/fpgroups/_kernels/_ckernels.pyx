# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Same contracts as ``_pykernels``."""
from libc.stdlib cimport malloc, free


def free_reduce_codes(codes):
    cdef Py_ssize_t n = len(codes), top = 0, i
    cdef long c
    cdef long *stack = <long *> malloc((n + 1) * sizeof(long))
    if stack == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            c = codes[i]
            if top > 0 and stack[top - 1] == -c:
                top -= 1
            else:
                stack[top] = c
                top += 1
        return [stack[i] for i in range(top)]
    finally:
        free(stack)


cdef inline Py_ssize_t _lcp(long *a, Py_ssize_t na, long *b, Py_ssize_t nb) nogil:
    cdef Py_ssize_t n = na if na < nb else nb
    cdef Py_ssize_t i = 0
    while i < n and a[i] == b[i]:
        i += 1
    return i


cdef long *_pack(seq, Py_ssize_t *n_out) except NULL:
    cdef Py_ssize_t n = len(seq), i
    cdef long *buf = <long *> malloc((n + 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = seq[i]
    n_out[0] = n
    return buf


def common_prefix_length(a, b):
    cdef Py_ssize_t na, nb, r
    cdef long *pa = _pack(a, &na)
    cdef long *pb = _pack(b, &nb)
    r = _lcp(pa, na, pb, nb)
    free(pa)
    free(pb)
    return r


def max_overlaps(words):
    cdef Py_ssize_t n = len(words), k, lcp
    order = sorted(range(n), key=words.__getitem__)
    best = [0] * n
    adjacent = []
    for k in range(n - 1):
        lcp = common_prefix_length(words[order[k]], words[order[k + 1]])
        adjacent.append(lcp)
        if lcp > best[order[k]]:
            best[order[k]] = lcp
        if lcp > best[order[k + 1]]:
            best[order[k + 1]] = lcp
    return order, best, adjacent


cdef inline int _cmp(long *a, Py_ssize_t na, long *b, Py_ssize_t nb) nogil:
    """Lexicographic comparison with Python tuple semantics."""
    cdef Py_ssize_t n = na if na < nb else nb
    cdef Py_ssize_t i = 0
    while i < n:
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
        i += 1
    if na == nb:
        return 0
    return -1 if na < nb else 1


cdef class DehnTable:
    """Flat C copy of a sorted relator list.

    A lookup bisects for the suffix being matched and scans outwards: in
    sorted order the common prefix with the query only shrinks away from the
    insertion point, so the scan stops once no entry can still qualify.
    """
    cdef long **rows
    cdef Py_ssize_t *lens
    cdef Py_ssize_t count
    cdef Py_ssize_t minlen
    cdef public list rstar
    cdef public Py_ssize_t maxlen

    def __cinit__(self, rstar):
        cdef Py_ssize_t i, n
        self.rstar = list(rstar)
        if any(self.rstar[i] > self.rstar[i + 1] for i in range(len(self.rstar) - 1)):
            raise ValueError("DehnTable needs a sorted list")
        self.count = len(self.rstar)
        self.rows = <long **> malloc((self.count + 1) * sizeof(long *))
        self.lens = <Py_ssize_t *> malloc((self.count + 1) * sizeof(Py_ssize_t))
        if self.rows == NULL or self.lens == NULL:
            raise MemoryError()
        self.maxlen = 0
        self.minlen = 0
        for i in range(self.count):
            self.rows[i] = _pack(self.rstar[i], &n)
            self.lens[i] = n
            if n > self.maxlen:
                self.maxlen = n
            if i == 0 or n < self.minlen:
                self.minlen = n

    def __dealloc__(self):
        cdef Py_ssize_t i
        if self.rows != NULL:
            for i in range(self.count):
                free(self.rows[i])
            free(self.rows)
        if self.lens != NULL:
            free(self.lens)

    cdef inline void _consider(self, Py_ssize_t j, Py_ssize_t m,
                               Py_ssize_t *best_len, Py_ssize_t *best_idx) nogil:
        if 2 * m > self.lens[j]:
            if m > best_len[0] or (m == best_len[0] and j < best_idx[0]):
                best_len[0] = m
                best_idx[0] = j

    cdef int _match(self, long *w, Py_ssize_t nw, Py_ssize_t i,
                    Py_ssize_t *best_len, Py_ssize_t *best_idx) nogil:
        cdef Py_ssize_t lo = 0, hi = self.count, mid, j, m
        cdef long *q = w + i
        cdef Py_ssize_t nq = nw - i
        best_len[0] = 0
        best_idx[0] = -1
        while lo < hi:
            mid = (lo + hi) // 2
            if _cmp(self.rows[mid], self.lens[mid], q, nq) < 0:
                lo = mid + 1
            else:
                hi = mid
        j = lo
        while j < self.count:
            m = _lcp(self.rows[j], self.lens[j], q, nq)
            if 2 * m <= self.minlen:
                break
            self._consider(j, m, best_len, best_idx)
            j += 1
        j = lo - 1
        while j >= 0:
            m = _lcp(self.rows[j], self.lens[j], q, nq)
            if 2 * m <= self.minlen:
                break
            self._consider(j, m, best_len, best_idx)
            j -= 1
        return best_idx[0] >= 0

    def match_at(self, word, Py_ssize_t i):
        cdef Py_ssize_t nw, bl, bi
        cdef long *w = _pack(word, &nw)
        try:
            if self._match(w, nw, i, &bl, &bi):
                return bl, bi
            return None
        finally:
            free(w)

    def find(self, word, Py_ssize_t start):
        cdef Py_ssize_t nw, bl = 0, bi = -1, i, hit = -1
        cdef long *w = _pack(word, &nw)
        try:
            with nogil:
                i = start
                while i < nw:
                    if self._match(w, nw, i, &bl, &bi):
                        hit = i
                        break
                    i += 1
            if hit < 0:
                return None
            return hit, bl, bi
        finally:
            free(w)


def dehn_find(word, DehnTable table, Py_ssize_t start=0):
    return table.find(word, start)
