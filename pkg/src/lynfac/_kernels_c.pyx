# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; contract identical to ``_kernels_py``.

Inputs are order-translated bytes; offsets and cuts are 0-indexed.
"""

from libc.string cimport memcmp

BACKEND_NAME = "compiled"


cdef Py_ssize_t _common_len(const unsigned char *a, const unsigned char *b,
                            Py_ssize_t limit) noexcept nogil:
    cdef Py_ssize_t k = 0, step
    while k < limit:
        step = 1024 if limit - k > 1024 else limit - k
        if memcmp(a + k, b + k, step) != 0:
            while a[k] == b[k]:
                k += 1
            return k
        k += step
    return k


def lcp_len(bytes a, bytes b):
    cdef Py_ssize_t n = min(len(a), len(b))
    if n == 0:
        return 0
    cdef const unsigned char *pa = a
    cdef const unsigned char *pb = b
    return _common_len(pa, pb, n)


def suffix_lcp_len(bytes data, Py_ssize_t i, Py_ssize_t j):
    """LCP length of the suffixes data[i:] and data[j:]."""
    cdef Py_ssize_t n = len(data)
    cdef Py_ssize_t limit = n - max(i, j)
    if limit <= 0:
        return 0
    cdef const unsigned char *p = data
    return _common_len(p + i, p + j, limit)


def lyndon_cuts(bytes data):
    cdef const unsigned char[:] s = data
    cdef Py_ssize_t n = len(data)
    cdef Py_ssize_t i = 0, j, k, step
    cdef unsigned char ck, cj
    cuts = []
    while i < n:
        j = i + 1
        k = i
        while j < n:
            ck = s[k]
            cj = s[j]
            if ck > cj:
                break
            if ck < cj:
                k = i
            else:
                k += 1
            j += 1
        step = j - k
        while i <= k:
            i += step
            cuts.append(i)
    return cuts


def longest_lyndon_prefix_len(bytes data):
    cdef const unsigned char[:] s = data
    cdef Py_ssize_t n = len(data)
    if n == 0:
        return 0
    cdef Py_ssize_t j = 1, k = 0
    cdef unsigned char ck, cj
    while j < n:
        ck = s[k]
        cj = s[j]
        if ck > cj:
            break
        if ck < cj:
            k = 0
        else:
            k += 1
        j += 1
    return j - k


def prenecklace_scan(bytes data):
    cdef const unsigned char[:] s = data
    cdef Py_ssize_t n = len(data)
    cdef Py_ssize_t p = 1, i
    cdef unsigned char c, d
    for i in range(1, n):
        c = s[i]
        d = s[i - p]
        if c < d:
            return i, p
        if c > d:
            p = i + 1
    return -1, p


cdef Py_ssize_t _prefix_period(const unsigned char[:] s, Py_ssize_t offset,
                               Py_ssize_t length) noexcept nogil:
    """Sesquipower base length of s[offset:offset+length], a prenecklace."""
    cdef Py_ssize_t p = 1, i
    for i in range(1, length):
        if s[offset + i] > s[offset + i - p]:
            p = i + 1
    return p


cdef Py_ssize_t _bre_scan_raw(const unsigned char[:] s, Py_ssize_t offset,
                              Py_ssize_t n, Py_ssize_t *rlen_out) noexcept nogil:
    """Core of bre_scan; returns the fail index (or -1), writes r length."""
    cdef Py_ssize_t m = n - offset
    rlen_out[0] = 0
    if m <= 0:
        return -1
    cdef Py_ssize_t p = 1, i, fail = -1, ulen, pu
    cdef unsigned char c, d, b
    for i in range(1, m):
        c = s[offset + i]
        d = s[offset + i - p]
        if c < d:
            fail = i
            break
        if c > d:
            p = i + 1
    if fail == -1:
        return -1
    b = s[offset + fail]
    # walk the nested sesquipower residues; each is at most half the last,
    # so the rescans stay linear in the failed prefix overall
    ulen = fail % p
    while ulen > 0:
        pu = _prefix_period(s, offset, ulen)
        if b >= s[offset + ulen - pu]:
            break  # appending b keeps the residue a prenecklace
        ulen %= pu
    rlen_out[0] = ulen
    return fail


def bre_scan(bytes data, Py_ssize_t offset=0):
    cdef const unsigned char[:] s = data
    cdef Py_ssize_t rlen = 0
    cdef Py_ssize_t fail = _bre_scan_raw(s, offset, len(data), &rlen)
    return fail, rlen


def icfl_cuts(bytes data):
    cdef const unsigned char[:] s = data
    cdef Py_ssize_t n = len(data)
    cdef Py_ssize_t off = 0, fail, rlen = 0
    piece_starts = []
    piece_rlens = []
    while True:
        fail = _bre_scan_raw(s, off, n, &rlen)
        if fail == -1:
            break
        piece_starts.append(off)
        piece_rlens.append(rlen)
        off += fail - rlen
    cdef Py_ssize_t npieces = len(piece_starts)
    cdef Py_ssize_t j, c_prev, c_j, m1len, pbar_len, r_len
    cdef Py_ssize_t bound = n
    starts_rev = [off]
    for j in range(npieces - 1, -1, -1):
        c_prev = piece_starts[j]
        c_j = piece_starts[j + 1] if j + 1 < npieces else off
        m1len = bound - c_j
        r_len = piece_rlens[j]
        pbar_len = r_len + 1
        if pbar_len <= m1len:
            starts_rev.append(c_prev)
            bound = c_j
        elif m1len <= r_len:
            starts_rev[len(starts_rev) - 1] = c_prev
        else:
            raise AssertionError(
                "inverse factorization dichotomy violated "
                f"(m1len={m1len}, r_len={r_len})")
    starts_rev.reverse()
    return starts_rev[1:] + [n]


def border_table(bytes data):
    cdef const unsigned char[:] s = data
    cdef Py_ssize_t n = len(data)
    table = [0] * n
    cdef Py_ssize_t i, k = 0
    cdef unsigned char c
    for i in range(1, n):
        c = s[i]
        while k and s[k] != c:
            k = table[k - 1]
        if s[k] == c:
            k += 1
        else:
            k = 0
        table[i] = k
    return table
