"""Pure-Python kernels; same contract as the compiled ``_kernels_c``.

All functions take order-translated bytes: natural byte comparison on the
input must realize the intended symbol order. Offsets and cut positions
are 0-indexed here; the public modules convert to the 1-indexed API.
"""

from __future__ import annotations

BACKEND_NAME = "pure-python"


def lcp_len(a: bytes, b: bytes) -> int:
    """Length of the longest common prefix of two byte strings."""
    n = min(len(a), len(b))
    if a[:n] == b[:n]:
        return n
    lo, hi = 0, n - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if a[:mid] == b[:mid]:
            lo = mid
        else:
            hi = mid - 1
    return lo


def suffix_lcp_len(data: bytes, i: int, j: int) -> int:
    """LCP length of the suffixes data[i:] and data[j:] without copying tails."""
    n = len(data)
    limit = n - max(i, j)
    matched = 0
    chunk = 256
    while matched < limit:
        step = min(chunk, limit - matched)
        if data[i + matched:i + matched + step] != data[j + matched:j + matched + step]:
            a = data[i + matched:i + matched + step]
            b = data[j + matched:j + matched + step]
            return matched + lcp_len(a, b)
        matched += step
        chunk = min(chunk * 2, 1 << 20)
    return matched


def lyndon_cuts(data: bytes) -> list[int]:
    """Duval's algorithm: end offsets of the nonincreasing Lyndon factors."""
    n = len(data)
    cuts: list[int] = []
    i = 0
    while i < n:
        j = i + 1
        k = i
        while j < n:
            ck = data[k]
            cj = data[j]
            if ck > cj:
                break
            k = i if ck < cj else k + 1
            j += 1
        step = j - k
        while i <= k:
            i += step
            cuts.append(i)
    return cuts


def longest_lyndon_prefix_len(data: bytes) -> int:
    """Length of the longest prefix that is a Lyndon word."""
    n = len(data)
    if n == 0:
        return 0
    j = 1
    k = 0
    while j < n:
        ck = data[k]
        cj = data[j]
        if ck > cj:
            break
        k = 0 if ck < cj else k + 1
        j += 1
    return j - k


def prenecklace_scan(data: bytes) -> tuple[int, int]:
    """Incremental prenecklace test.

    Returns ``(fail_index, period)``: ``fail_index`` is the first 0-indexed
    position whose symbol drops below the one a period earlier (so the
    prefix through it is no longer a prenecklace), or -1 when the whole
    input is a prenecklace. ``period`` is the length of the longest Lyndon
    prefix of the prenecklace part, i.e. the sesquipower base length.
    """
    n = len(data)
    p = 1
    for i in range(1, n):
        c = data[i]
        d = data[i - p]
        if c < d:
            return i, p
        if c > d:
            p = i + 1
    return -1, p


def _prefix_period(data: bytes, offset: int, length: int) -> int:
    """Sesquipower base length of data[offset:offset+length], a prenecklace."""
    p = 1
    for i in range(1, length):
        c = data[offset + i]
        if c > data[offset + i - p]:
            p = i + 1
    return p


def bre_scan(data: bytes, offset: int = 0) -> tuple[int, int]:
    """Bounded-right-extension scan of ``data[offset:]``.

    Returns ``(fail_index, r_len)`` with ``fail_index`` relative to
    ``offset``: the shortest prefix of ``data[offset:]`` that is not a
    prenecklace ends at ``fail_index`` (inclusive), and ``r_len`` is the
    length of the shared prefix/suffix r with z = r·a·s·r·b, a < b, r
    shortest. ``(-1, 0)`` when ``data[offset:]`` is entirely a prenecklace.
    """
    n = len(data)
    m = n - offset
    if m <= 0:
        return -1, 0
    p = 1
    fail = -1
    for i in range(1, m):
        c = data[offset + i]
        d = data[offset + i - p]
        if c < d:
            fail = i
            break
        if c > d:
            p = i + 1
    if fail == -1:
        return -1, 0
    b = data[offset + fail]
    # walk the nested sesquipower residues; each is at most half the last,
    # so the rescans stay linear in the failed prefix overall
    ulen = fail % p
    while ulen > 0:
        pu = _prefix_period(data, offset, ulen)
        if b >= data[offset + ulen - pu]:
            break  # appending b keeps the residue a prenecklace
        ulen %= pu
    return fail, ulen


def icfl_cuts(data: bytes) -> list[int]:
    """End offsets of the canonical inverse Lyndon factorization.

    ``data`` must be translated so that natural byte order realizes the
    inverse symbol order. Iterative form of the recursive definition: the
    bre cut points are collected left to right, then folded right to left,
    where the merge case only widens the pending leftmost factor.
    """
    n = len(data)
    piece_starts: list[int] = []
    piece_rlens: list[int] = []
    off = 0
    while True:
        fail, rlen = bre_scan(data, off)
        if fail == -1:
            break
        piece_starts.append(off)
        piece_rlens.append(rlen)
        off += fail - rlen  # advance past p; p-bar stays in the suffix
    # data[off:] is the final inverse Lyndon piece (whole word possible)
    starts_rev = [off]
    bound = n  # end of the current leftmost factor
    for j in range(len(piece_starts) - 1, -1, -1):
        c_prev = piece_starts[j]
        c_j = piece_starts[j + 1] if j + 1 < len(piece_starts) else off
        m1len = bound - c_j
        pbar_len = piece_rlens[j] + 1
        if pbar_len <= m1len:
            # p-bar is a prefix of the first factor: p stands alone
            starts_rev.append(c_prev)
            bound = c_j
        elif m1len <= piece_rlens[j]:
            # first factor is a prefix of r: merge it into p
            starts_rev[-1] = c_prev
        else:
            raise AssertionError(
                "inverse factorization dichotomy violated "
                f"(m1len={m1len}, r_len={piece_rlens[j]})")
    starts_rev.reverse()
    return starts_rev[1:] + [n]


def border_table(data: bytes) -> list[int]:
    """Longest-border length for every prefix (classical failure function)."""
    n = len(data)
    table = [0] * n
    k = 0
    for i in range(1, n):
        c = data[i]
        while k and data[k] != c:
            k = table[k - 1]
        if data[k] == c:
            k += 1
        else:
            k = 0
        table[i] = k
    return table
