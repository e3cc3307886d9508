"""Brute-force reference implementations.

Everything here evaluates the defining quantifiers directly and shares no
code with the fast paths, so agreement between the two is evidence, not
tautology. Quadratic or worse running time is accepted by design.
"""

from __future__ import annotations

from lynfac.alphabet import Order, Word, _require_nonempty
from lynfac.errors import InternalInvariantError
from lynfac.icfl import BreDecomposition
from lynfac.lyndon import Factorization, FactorizationKind


def _key(w: Word, order: Order) -> bytes:
    return w.key_bytes(order)


def naive_is_lyndon(w: Word, order: Order = Order.NORMAL) -> bool:
    """Direct check: w strictly below each of its proper nonempty suffixes."""
    _require_nonempty(w)
    k = _key(w, order)
    return all(k < k[i:] for i in range(1, len(k)))


def naive_is_inverse_lyndon(w: Word) -> bool:
    """Direct check: every proper nonempty suffix is strictly below w."""
    _require_nonempty(w)
    k = _key(w, Order.NORMAL)
    return all(k[i:] < k for i in range(1, len(k)))


def naive_is_primitive(w: Word) -> bool:
    """True iff w is not a proper power of a shorter word."""
    _require_nonempty(w)
    data = w.data
    n = len(data)
    for d in range(1, n):
        if n % d == 0 and data[:d] * (n // d) == data:
            return False
    return True


def naive_is_prenecklace(w: Word, order: Order = Order.NORMAL) -> bool:
    """Search all Lyndon bases: w must be a prefix of some base power."""
    if w.is_empty():
        return True
    k = _key(w, order)
    n = len(k)
    for p in range(1, n + 1):
        base = w.prefix(p)
        if not naive_is_lyndon(base, order):
            continue
        if all(k[i] == k[i % p] for i in range(n)):
            return True
    return False


def naive_sesquipower_candidates(w: Word, order: Order = Order.NORMAL):
    """All (base, k, residue) triples with base Lyndon and base^k·residue = w."""
    _require_nonempty(w)
    k = _key(w, order)
    n = len(k)
    out = []
    for p in range(1, n + 1):
        base = w.prefix(p)
        if not naive_is_lyndon(base, order):
            continue
        if all(k[i] == k[i % p] for i in range(n)):
            reps = n // p
            out.append((base, reps, w.slice(reps * p + 1, n)))
    return out


def naive_cfl(w: Word, order: Order = Order.NORMAL) -> Factorization:
    """Greedy longest Lyndon prefix, peeled repeatedly."""
    _require_nonempty(w)
    cuts = []
    pos = 0
    n = len(w)
    while pos < n:
        rest = w.slice(pos + 1, n)
        for length in range(len(rest), 0, -1):
            if naive_is_lyndon(rest.prefix(length), order):
                break
        pos += length
        cuts.append(pos)
    kind = FactorizationKind.CFL if order is Order.NORMAL else FactorizationKind.CFL_IN
    return Factorization(w, tuple(cuts), kind)


def naive_bre(w: Word) -> BreDecomposition | None:
    """Shortest non-inverse-Lyndon prefix, then the shortest r split."""
    _require_nonempty(w)
    n = len(w)
    z = None
    for length in range(1, n + 1):
        prefix = w.prefix(length)
        if not naive_is_inverse_lyndon(prefix):
            z = prefix
            break
    if z is None:
        return None
    zd = z.data
    m = len(zd)
    alpha = w.alphabet
    b = zd[-1]
    for r_len in range((m - 2) // 2 + 1):
        if zd[m - 1 - r_len:m - 1] != zd[:r_len]:
            continue
        a = zd[r_len]
        if alpha.rank(a) >= alpha.rank(b):
            continue
        p_len = m - r_len - 1
        return BreDecomposition(
            p=z.prefix(p_len),
            p_bar=z.slice(p_len + 1, m),
            r=z.prefix(r_len),
            s=z.slice(r_len + 2, p_len),
            a=a,
            b=b,
            z=z,
        )
    raise InternalInvariantError("no valid r split for a non-inverse-Lyndon prefix")


def naive_icfl(w: Word) -> Factorization:
    """Literal recursion over the canonical definition with the naive bre."""
    _require_nonempty(w)

    def rec(v: Word) -> list[Word]:
        d = naive_bre(v)
        if d is None:
            return [v]
        tail = rec(v.suffix_from(len(d.p) + 1))
        m1 = tail[0]
        pbar_is_prefix = m1.data.startswith(d.p_bar.data)
        m1_in_r = d.r.data.startswith(m1.data)
        if pbar_is_prefix and not m1_in_r:
            return [d.p] + tail
        if m1_in_r and not pbar_is_prefix:
            return [d.p + m1] + tail[1:]
        raise InternalInvariantError(
            "definition cases not mutually exhaustive/exclusive")

    cuts = []
    pos = 0
    for factor in rec(w):
        pos += len(factor)
        cuts.append(pos)
    return Factorization(w, tuple(cuts), FactorizationKind.ICFL)


def naive_suffix_sort(w: Word, order: Order = Order.NORMAL) -> list[int]:
    """Positions 1..n sorted by the lexicographic order of their suffixes."""
    _require_nonempty(w)
    k = _key(w, order)
    return sorted(range(1, len(k) + 1), key=lambda i: k[i - 1:])


def naive_borders(w: Word) -> list[int]:
    """Lengths of all nonempty borders, longest first."""
    _require_nonempty(w)
    data = w.data
    n = len(data)
    return [length for length in range(n - 1, 0, -1) if data[:length] == data[n - length:]]


def naive_lcp_len(x: Word, y: Word) -> int:
    a, b = x.data, y.data
    i = 0
    for ca, cb in zip(a, b):
        if ca != cb:
            break
        i += 1
    return i


def naive_max_factor_pair_lcp(w: Word) -> tuple[int, tuple[tuple[int, int], tuple[int, int]]]:
    """Max LCP over all pairs of proper factor occurrences with distinct starts.

    Literal quadruple enumeration; reserved for desk-scale cross-checks.
    """
    data = w.data
    n = len(data)
    best = -1
    witness = ((0, 0), (0, 0))
    for i1 in range(1, n + 1):
        for j1 in range(i1, n + 1):
            if j1 - i1 + 1 == n:
                continue
            u = data[i1 - 1:j1]
            for i2 in range(i1 + 1, n + 1):
                for j2 in range(i2, n + 1):
                    if j2 - i2 + 1 == n:
                        continue
                    v = data[i2 - 1:j2]
                    length = 0
                    for ca, cb in zip(u, v):
                        if ca != cb:
                            break
                        length += 1
                    if length > best:
                        best = length
                        witness = ((i1, j1), (i2, j2))
    return best, witness
