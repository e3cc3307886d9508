"""Local/global suffix compatibility and the LCP upper bound M.

M is the maximum combined length of two consecutive factors of the
canonical inverse Lyndon factorization; it bounds the longest common
prefix of any two proper factor occurrences that begin at different
positions of the word.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from lynfac._backend import kernels
from lynfac.alphabet import Order, Word, _require_nonempty, lcp
from lynfac.errors import (
    InternalInvariantError,
    KindMismatchError,
    NotApplicableError,
)
from lynfac.icfl import icfl, mismatch_decomposition
from lynfac.lyndon import Factorization, FactorizationKind

#: Verification strategy switch points for :func:`verify_lcp_bound`.
EXHAUSTIVE_LIMIT = 64
SUFFIX_PAIR_LIMIT = 4096
SAMPLE_PAIRS = 100_000


@dataclass(frozen=True)
class FactorRange:
    """A contiguous factor run u = m_i···m_h of a factorization."""

    word: Word
    factorization: Factorization
    first_factor: int
    last_factor: int

    def __post_init__(self):
        if self.word != self.factorization.word:
            raise ValueError("range word differs from the factorized word")
        k = self.factorization.factor_count
        if not 1 <= self.first_factor <= self.last_factor <= k:
            raise IndexError(f"factor range [{self.first_factor}, {self.last_factor}] "
                             f"invalid for {k} factors")

    @property
    def first_position(self) -> int:
        return self.factorization.bounds[self.first_factor - 1][0]

    @property
    def last_position(self) -> int:
        return self.factorization.bounds[self.last_factor - 1][1]

    def positions(self) -> range:
        return range(self.first_position, self.last_position + 1)

    def text(self) -> Word:
        return self.word.slice(self.first_position, self.last_position)


@dataclass(frozen=True)
class SuffixRef:
    """A local suffix suf_u(position) of a factor range."""

    range: FactorRange
    position: int

    def __post_init__(self):
        if not self.range.first_position <= self.position <= self.range.last_position:
            raise IndexError(f"position {self.position} outside factor range")

    def local_suffix(self) -> Word:
        return self.range.word.slice(self.position, self.range.last_position)

    def global_suffix(self) -> Word:
        return self.range.word.suffix_from(self.position)


class GlobalOrder(enum.Enum):
    J1_BEFORE_J2 = "j1-before-j2"
    J2_BEFORE_J1 = "j2-before-j1"


@dataclass(frozen=True)
class CompatibilityViolation:
    position_i: int
    position_j: int
    local_less: bool
    global_less: bool


def _compatibility_violation(rng: FactorRange, order: Order) -> CompatibilityViolation | None:
    key = rng.word.key_bytes(order)
    last = rng.last_position
    positions = list(rng.positions())
    local_sorted = sorted(positions, key=lambda p: key[p - 1:last])
    global_sorted = sorted(positions, key=lambda p: key[p - 1:])
    if local_sorted == global_sorted:
        return None
    for a in range(len(positions)):
        for b in range(a + 1, len(positions)):
            i, j = positions[a], positions[b]
            loc = key[i - 1:last] < key[j - 1:last]
            glo = key[i - 1:] < key[j - 1:]
            if loc != glo:
                return CompatibilityViolation(i, j, loc, glo)
    raise InternalInvariantError("sorted orders differ but no pair disagrees")


def find_cfl_compatibility_violation(rng: FactorRange) -> CompatibilityViolation | None:
    """Local vs global suffix sorting over a CFL factor range (order ≺)."""
    if rng.factorization.kind is not FactorizationKind.CFL:
        raise KindMismatchError("expected a range over a CFL factorization")
    return _compatibility_violation(rng, Order.NORMAL)


def check_cfl_compatibility(rng: FactorRange) -> bool:
    return find_cfl_compatibility_violation(rng) is None


def find_icfl_inverse_compatibility_violation(rng: FactorRange) -> CompatibilityViolation | None:
    """Same contract under ≺_in for a range over the ICFL."""
    if rng.factorization.kind is not FactorizationKind.ICFL:
        raise KindMismatchError("expected a range over an ICFL factorization")
    return _compatibility_violation(rng, Order.INVERSE)


def check_icfl_inverse_compatibility(rng: FactorRange) -> bool:
    return find_icfl_inverse_compatibility_violation(rng) is None


def predict_global_order(j1: SuffixRef, j2: SuffixRef) -> GlobalOrder:
    """Predict the global ≺ order from the local one, without comparing.

    Requires suf_u(j1) ≺ suf_u(j2): the caller orients the pair. The
    global order flips exactly when the smaller local suffix is a proper
    prefix of the larger one and the range stops before the last factor.
    """
    if j1.range != j2.range:
        raise ValueError("suffix refs must share one factor range")
    rng = j1.range
    if rng.factorization.kind is not FactorizationKind.ICFL:
        raise KindMismatchError("prediction is defined over ICFL ranges")
    if j1.position == j2.position:
        raise ValueError("local suffixes coincide")
    key = rng.word.key_bytes(Order.NORMAL)
    last = rng.last_position
    k1 = key[j1.position - 1:last]
    k2 = key[j2.position - 1:last]
    if not k1 < k2:
        raise ValueError("suf_u(j1) must be strictly below suf_u(j2)")
    proper_prefix = k2.startswith(k1)
    if proper_prefix and rng.last_factor < rng.factorization.factor_count:
        return GlobalOrder.J2_BEFORE_J1
    return GlobalOrder.J1_BEFORE_J2


def max_adjacent_pair(f: Factorization) -> tuple[int, int]:
    """(M, index) with M = max |m_i m_{i+1}| and index the first argmax i."""
    if f.kind is not FactorizationKind.ICFL:
        raise KindMismatchError("M is defined on the canonical inverse factorization")
    if f.factor_count < 2:
        raise NotApplicableError(
            "M is undefined for a single-factor factorization "
            "(the word is an inverse Lyndon word)")
    best, arg = -1, 0
    factors = f.factors
    for i in range(len(factors) - 1):
        combined = len(factors[i]) + len(factors[i + 1])
        if combined > best:
            best, arg = combined, i + 1
    return best, arg


def max_adjacent_length(f: Factorization) -> int:
    return max_adjacent_pair(f)[0]


Occurrence = tuple[int, int]


@dataclass(frozen=True)
class LcpBoundReport:
    """Outcome of measuring factor-pair LCPs against the bound M."""

    m_bound: int
    argmax_pair: int
    max_observed_lcp: int
    witness_pair: tuple[Occurrence, Occurrence]
    method: str

    @property
    def holds(self) -> bool:
        return self.max_observed_lcp <= self.m_bound


def _start_pair_max(data: bytes, pairs) -> tuple[int, tuple[Occurrence, Occurrence]]:
    """Max LCP over proper-factor occurrences at the given start pairs.

    For starts i1 < i2 the longest admissible factors are the full proper
    suffixes, and their LCP already equals the suffix LCP (the proper-factor
    clipping can never cut below it), so one LCP per start pair suffices.
    """
    n = len(data)
    suffix_lcp = kernels.suffix_lcp_len
    best = -1
    witness: tuple[Occurrence, Occurrence] = ((1, 1), (2, 2))
    for i1, i2 in pairs:
        length = suffix_lcp(data, i1 - 1, i2 - 1)
        cap1 = n - 1 if i1 == 1 else n - i1 + 1
        cap2 = n - i2 + 1
        length = min(length, cap1, cap2)
        if length > best:
            best = length
            if length == 0:
                witness = ((i1, i1), (i2, i2))
            else:
                witness = ((i1, i1 + length - 1), (i2, i2 + length - 1))
    return best, witness


def _adjacent_suffix_max(data: bytes) -> tuple[int, tuple[Occurrence, Occurrence]]:
    """Max suffix-pair LCP via lexicographically adjacent suffixes."""
    n = len(data)
    order = sorted(range(1, n + 1), key=lambda i: data[i - 1:])
    best = -1
    witness: tuple[Occurrence, Occurrence] = ((1, 1), (2, 2))
    suffix_lcp = kernels.suffix_lcp_len
    for a, b in zip(order, order[1:]):
        length = suffix_lcp(data, a - 1, b - 1)
        i1, i2 = min(a, b), max(a, b)
        cap1 = n - 1 if i1 == 1 else n - i1 + 1
        length = min(length, cap1, n - i2 + 1)
        if length > best:
            best = length
            if length == 0:
                witness = ((i1, i1), (i2, i2))
            else:
                witness = ((i1, i1 + length - 1), (i2, i2 + length - 1))
    return best, witness


def verify_lcp_bound(w: Word, *, seed: int = 0) -> LcpBoundReport:
    """Measure the max factor-pair LCP of ``w`` and report it against M.

    Occurrence pairs share no starting position; the identical start would
    make the clipped prefixes trivially agree for their whole length and is
    outside the bound's scope. Strategy scales with |w|: every start pair
    up to EXHAUSTIVE_LIMIT, lexicographically adjacent suffix pairs up to
    SUFFIX_PAIR_LIMIT, seeded random sampling beyond.
    """
    _require_nonempty(w)
    f = icfl(w)
    if f.factor_count < 2:
        raise NotApplicableError("the word is an inverse Lyndon word; the bound is undefined")
    m_bound, argmax = max_adjacent_pair(f)
    data = w.data
    n = len(data)
    if n <= EXHAUSTIVE_LIMIT:
        method = "exhaustive"
        pairs = ((i1, i2) for i1 in range(1, n + 1) for i2 in range(i1 + 1, n + 1))
        best, witness = _start_pair_max(data, pairs)
    elif n <= SUFFIX_PAIR_LIMIT:
        method = "suffix-pairs"
        best, witness = _adjacent_suffix_max(data)
    else:
        method = "sampled"
        rng = random.Random(seed)
        seen_pairs = set()
        while len(seen_pairs) < SAMPLE_PAIRS:
            i1 = rng.randint(1, n - 1)
            i2 = rng.randint(i1 + 1, n)
            seen_pairs.add((i1, i2))
        best, witness = _start_pair_max(data, sorted(seen_pairs))
    return LcpBoundReport(m_bound, argmax, best, witness, method)


def lcp_adjacent_suffix_reduction(x: Word, y: Word, f: Factorization, i: int) -> Word:
    """lcp of two same-factor suffixes extended to the whole word.

    For distinct nonempty suffixes x, y of factor m_{i-1}, the global
    lcp(x_w, y_w) equals lcp(x·r, y·r) where r is the shared prefix of
    m_{i-1} and m_i. Both sides are computed and compared; disagreement is
    an internal error.
    """
    if f.kind is not FactorizationKind.ICFL:
        raise KindMismatchError("reduction is defined on the ICFL")
    if not 2 <= i <= f.factor_count:
        raise IndexError(f"factor pair index {i} out of range")
    if x.is_empty() or y.is_empty():
        raise ValueError("suffixes must be nonempty")
    if x == y:
        raise ValueError("suffixes must differ")
    prev = f.factor(i - 1)
    for word in (x, y):
        if not prev.data.endswith(word.data):
            raise ValueError("argument is not a suffix of the preceding factor")
    r, _, _ = mismatch_decomposition(f, i - 1, i)
    reduced = lcp(x + r, y + r)
    end_prev = f.bounds[i - 2][1]
    x_w = f.word.suffix_from(end_prev - len(x) + 1)
    y_w = f.word.suffix_from(end_prev - len(y) + 1)
    direct = lcp(x_w, y_w)
    if reduced != direct:
        raise InternalInvariantError("suffix reduction disagrees with the direct lcp")
    return reduced
