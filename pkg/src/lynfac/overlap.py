"""Lyndon factorizations of factors, and overlap analysis between words.

A factor occurrence is classified against the factor boundaries of the
containing word; the factorization of a boundary-crossing factor is
assembled from the boundary pieces and must coincide with the directly
computed one. Two words sharing an overlap expose runs of equal factors,
classified into the three structural cases.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from lynfac.alphabet import Word, _require_nonempty
from lynfac.errors import (
    AlphabetMismatchError,
    InternalInvariantError,
    KindMismatchError,
)
from lynfac.lyndon import Factorization, FactorizationKind, cfl


class FactorClass(enum.Enum):
    SIMPLE = "simple"
    NON_SIMPLE_ALIGNED = "non-simple-aligned"
    NON_SIMPLE_STRADDLING = "non-simple-straddling"


@dataclass(frozen=True)
class FactorOccurrence:
    """One occurrence ``word[start, end]`` classified against CFL(word).

    Simple: every occurrence of the factor string lies inside a single
    Lyndon factor. Aligned: this occurrence starts and ends exactly on
    factor boundaries. Straddling: the associated boundary decomposition
    (partial last-covered prefix factor, whole interior factors, partial
    first-covered suffix factor) is carried; when this occurrence itself
    sits inside one factor but the string is non-simple elsewhere, the
    sequence is anchored at the leftmost boundary-crossing occurrence and
    ``sequence_start`` records that anchor.
    """

    word: Word
    start: int
    end: int
    classification: FactorClass
    factor_span: tuple[int, int] | None = None
    partial_left: Word | None = None
    interior_factors: tuple[int, int] | None = None
    partial_right: Word | None = None
    sequence_start: int | None = None
    base: Factorization = field(repr=False, default=None)  # type: ignore[assignment]

    def text(self) -> Word:
        return self.word.slice(self.start, self.end)


def _factor_index_of(bounds, pos: int) -> int:
    """0-indexed factor containing 1-indexed position pos."""
    lo, hi = 0, len(bounds) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if bounds[mid][1] < pos:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _occurrence_starts(data: bytes, needle: bytes) -> list[int]:
    """All 0-indexed (possibly overlapping) occurrence starts."""
    out = []
    pos = data.find(needle)
    while pos != -1:
        out.append(pos)
        pos = data.find(needle, pos + 1)
    return out


def classify_factor(w: Word, start: int, end: int) -> FactorOccurrence:
    """Classify the proper factor occurrence ``w[start, end]``."""
    _require_nonempty(w)
    n = len(w)
    if not 1 <= start <= end <= n:
        raise IndexError(f"occurrence [{start}, {end}] out of range")
    if end - start + 1 == n:
        raise ValueError("the whole word is not a proper factor")
    base = cfl(w)
    bounds = base.bounds
    fi = _factor_index_of(bounds, start)
    fj = _factor_index_of(bounds, end)
    aligned = bounds[fi][0] == start and bounds[fj][1] == end
    if aligned:
        return FactorOccurrence(w, start, end, FactorClass.NON_SIMPLE_ALIGNED,
                                factor_span=(fi + 1, fj + 1), base=base)
    if fi == fj:
        needle = w.data[start - 1:end]
        contained = True
        anchor = None
        for occ0 in _occurrence_starts(w.data, needle):
            s, e = occ0 + 1, occ0 + len(needle)
            if _factor_index_of(bounds, s) != _factor_index_of(bounds, e):
                contained = False
                anchor = s
                break
        if contained:
            return FactorOccurrence(w, start, end, FactorClass.SIMPLE,
                                    factor_span=(fi + 1, fi + 1), base=base)
        a_start, a_end = anchor, anchor + len(needle) - 1
    else:
        a_start, a_end = start, end
    ai = _factor_index_of(bounds, a_start)
    aj = _factor_index_of(bounds, a_end)
    left = w.slice(a_start, bounds[ai][1])
    right = w.slice(bounds[aj][0], a_end)
    return FactorOccurrence(
        w, start, end, FactorClass.NON_SIMPLE_STRADDLING,
        partial_left=left,
        interior_factors=(ai + 2, aj),  # may be an empty range
        partial_right=right,
        sequence_start=a_start,
        base=base,
    )


def cfl_of_factor(occ: FactorOccurrence) -> Factorization:
    """CFL of the factor, assembled from the boundary decomposition.

    Aligned occurrences factor exactly into the covered whole factors;
    straddling ones into the partial-piece factorizations around the
    whole interior factors. The result provably equals the directly
    computed factorization of the factor string.
    """
    base = occ.base
    if occ.classification is FactorClass.NON_SIMPLE_ALIGNED:
        lo, hi = occ.factor_span
        pieces = list(base.factors[lo - 1:hi])
    elif occ.classification is FactorClass.NON_SIMPLE_STRADDLING:
        pieces = []
        if len(occ.partial_left):
            pieces.extend(cfl(occ.partial_left).factors)
        lo, hi = occ.interior_factors
        pieces.extend(base.factors[lo - 1:hi])
        if len(occ.partial_right):
            pieces.extend(cfl(occ.partial_right).factors)
    else:
        raise KindMismatchError("simple factors have no boundary assembly")
    text = occ.word.slice(occ.start, occ.end)
    cuts = []
    pos = 0
    for piece in pieces:
        pos += len(piece)
        cuts.append(pos)
    assembled = Factorization(text, tuple(cuts), FactorizationKind.CFL)
    joined = b"".join(p.data for p in pieces)
    anchored = occ.word.data[(occ.sequence_start or occ.start) - 1:]
    if joined != anchored[:len(joined)] or len(joined) != occ.end - occ.start + 1:
        raise InternalInvariantError("boundary pieces do not rebuild the factor")
    return assembled


class OverlapCase(enum.Enum):
    ALIGNED_BOTH = "aligned-both"        # runs split the overlap factors exactly
    SHARED_RIGHT_RUN = "shared-right-run"  # leading factors of w2 equal trailing factors of w
    SHARED_LEFT_RUN = "shared-left-run"    # symmetric attribution
    DEGENERATE = "degenerate"            # outside the overlap lemma hypotheses


@dataclass(frozen=True)
class OverlapReport:
    """Shared-factor structure of an overlap y (suffix of w = prefix of w2)."""

    case: OverlapCase
    overlap: Word
    overlap_cfl: Factorization
    w_factor_run: tuple[int, int] | None
    w2_factor_run: tuple[int, int] | None
    shared_equalities: tuple[tuple[int, int], ...]  # (w2 factor index, w factor index)
    ambiguous: bool
    note: str = ""


def _trailing_complete(base: Factorization, length: int) -> tuple[int, Word | None]:
    """(count of whole trailing factors within the last ``length`` symbols,
    partial piece in front of them, if any)."""
    n = len(base.word)
    cut_start = n - length + 1
    count = 0
    for s, _e in reversed(base.bounds):
        if s >= cut_start:
            count += 1
        else:
            break
    first_whole = base.factor_count - count
    if count == base.factor_count or base.bounds[first_whole - 1][1] < cut_start:
        return count, None
    return count, base.word.slice(cut_start, base.bounds[first_whole - 1][1])


def _leading_complete(base: Factorization, length: int) -> tuple[int, Word | None]:
    count = 0
    for _s, e in base.bounds:
        if e <= length:
            count += 1
        else:
            break
    if count == base.factor_count or base.bounds[count][0] > length:
        return count, None
    return count, base.word.slice(base.bounds[count][0], length)


def analyze_overlap(w: Word, w2: Word, overlap_len: int) -> OverlapReport:
    """Classify the length-``overlap_len`` overlap between ``w`` and ``w2``.

    The last ``overlap_len`` symbols of ``w`` must equal the first
    ``overlap_len`` of ``w2``. Overlaps that are simple on either side
    (shorter than the last factor of w, or than the first factor of w2)
    fall outside the shared-run analysis and come back DEGENERATE.
    """
    _require_nonempty(w, w2)
    if w.alphabet != w2.alphabet:
        raise AlphabetMismatchError("overlapping words must share an alphabet")
    if not 1 <= overlap_len <= min(len(w), len(w2)):
        raise ValueError(f"overlap length {overlap_len} out of range")
    y = w.slice(len(w) - overlap_len + 1, len(w))
    if y.data != w2.data[:overlap_len]:
        raise ValueError("the words do not overlap at this length")
    left = cfl(w)
    right = cfl(w2)
    y_cfl = cfl(y)
    if overlap_len < len(left.factors[-1]) or overlap_len < len(right.factors[0]):
        return OverlapReport(OverlapCase.DEGENERATE, y, y_cfl, None, None, (),
                             False, "overlap is a simple suffix/prefix")
    b_count, left_partial = _trailing_complete(left, overlap_len)
    a_count, right_partial = _leading_complete(right, overlap_len)
    g = [x.data for x in y_cfl.factors]
    # uniqueness gate: both boundary assemblies must rebuild the overlap CFL
    assembly_left = (list(cfl(left_partial).factors) if left_partial else []) \
        + list(left.factors[left.factor_count - b_count:])
    assembly_right = list(right.factors[:a_count]) \
        + (list(cfl(right_partial).factors) if right_partial else [])
    for assembly, side in ((assembly_left, "suffix"), (assembly_right, "prefix")):
        if [x.data for x in assembly] != g:
            raise InternalInvariantError(
                f"{side}-side assembly disagrees with the overlap factorization")
    m = len(g)
    k = left.factor_count
    shared = a_count + b_count - m
    note = ""
    if overlap_len == len(w) or overlap_len == len(w2):
        note = "overlap equals a whole word; classified structurally"
    if shared == 0:
        return OverlapReport(OverlapCase.ALIGNED_BOTH, y, y_cfl,
                             (k - b_count + 1, k), (1, a_count), (), False, note)
    valid_right = m > b_count  # some overlap factor is attributable only to w2
    valid_left = m > a_count
    if not valid_right and not valid_left:
        # the runs coincide entirely; any split realizes the aligned case
        if m >= 2:
            return OverlapReport(
                OverlapCase.ALIGNED_BOTH, y, y_cfl, (k, k), (1, m - 1), (), True,
                note or "runs coincide; split chosen arbitrarily")
        # a single factor shared whole: the run equalities hold with an
        # empty attributed run on either side, so keep the right-run case
        return OverlapReport(OverlapCase.SHARED_RIGHT_RUN, y, y_cfl,
                             (k, k), None, ((1, k),), True,
                             note or "overlap is one whole shared factor")
    if valid_right:
        j_prime = m - b_count + 1
        i = k - b_count
        eq = tuple((j_prime + r, i + 1 + r) for r in range(shared))
        case = OverlapCase.SHARED_RIGHT_RUN
        run_w, run_w2 = (i + 1, k), (1, a_count)
        ambiguous = valid_left
    else:
        i_prime = k - (m - a_count)
        eq = tuple((a_count - r, i_prime - r) for r in range(shared))
        case = OverlapCase.SHARED_LEFT_RUN
        run_w, run_w2 = (i_prime + 1, k), (1, a_count)
        ambiguous = False
    for f_idx, l_idx in eq:
        if right.factors[f_idx - 1].data != left.factors[l_idx - 1].data:
            raise InternalInvariantError("claimed shared factors differ")
    return OverlapReport(case, y, y_cfl, run_w, run_w2, eq, ambiguous, note)


def overlap_candidates(w: Word, w2: Word) -> list[int]:
    """All lengths at which a suffix of w equals a prefix of w2."""
    data, data2 = w.data, w2.data
    return [length for length in range(1, min(len(data), len(data2)) + 1)
            if data[len(data) - length:] == data2[:length]]


def shared_factor_signature(w: Word) -> tuple[tuple[Word, int], ...]:
    """Multiset of Lyndon factors, ordered by factor value then multiplicity.

    A cheap fingerprint: words sharing long overlaps share most of it.
    """
    _require_nonempty(w)
    counts: dict[bytes, int] = {}
    for f in cfl(w).factors:
        counts[f.data] = counts.get(f.data, 0) + 1
    items = sorted(counts.items(), key=lambda kv: (kv[0], kv[1]))
    return tuple((Word(data, w.alphabet), count) for data, count in items)
