"""Border computation and the border/prefix exclusion checks.

Borders are represented by their lengths; the checkers return a
structured violation (or None when the property holds) so the CLI can
report counterexamples, with thin boolean wrappers for test code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from lynfac._backend import kernels
from lynfac.alphabet import Word, _require_nonempty, prefix_relation, PrefixRelation
from lynfac.errors import KindMismatchError
from lynfac.icfl import BreDecomposition, ChainSpan
from lynfac.lyndon import Factorization, FactorizationKind


@dataclass(frozen=True)
class BorderArray:
    """Longest-border length of every prefix of ``word``.

    Entry ``i`` (1-indexed via :meth:`prefix_border`) is the border length
    of the prefix of length i; iterating from the full length enumerates
    all borders in decreasing length.
    """

    word: Word
    longest_border_length: tuple[int, ...]

    def prefix_border(self, i: int) -> int:
        if not 1 <= i <= len(self.longest_border_length):
            raise IndexError(f"prefix length {i} out of range")
        return self.longest_border_length[i - 1]

    @cached_property
    def border_lengths(self) -> tuple[int, ...]:
        """All nonempty border lengths of the whole word, longest first."""
        out = []
        length = self.longest_border_length[-1]
        while length > 0:
            out.append(length)
            length = self.longest_border_length[length - 1]
        return tuple(out)

    def borders(self) -> tuple[Word, ...]:
        return tuple(self.word.prefix(length) for length in self.border_lengths)

    def is_unbordered(self) -> bool:
        return self.longest_border_length[-1] == 0


def border_array(w: Word) -> BorderArray:
    """Longest-border lengths for every prefix, in linear time."""
    _require_nonempty(w)
    return BorderArray(w, tuple(kernels.border_table(w.data)))


def _border_lengths(data: bytes) -> list[int]:
    table = kernels.border_table(data)
    out = []
    length = table[-1]
    while length > 0:
        out.append(length)
        length = table[length - 1]
    return out


@dataclass(frozen=True)
class BorderPrefixViolation:
    """A border of factor ``factor_index`` that prefixes the next factor."""

    factor_index: int
    border_length: int
    border: Word


def find_border_prefix_violation(f: Factorization) -> BorderPrefixViolation | None:
    """First (factor, border) where the border prefixes the next factor.

    Genuine canonical inverse Lyndon factorizations never produce one;
    the check exists to validate third-party factorizations and the
    library itself.
    """
    if f.kind not in (FactorizationKind.ICFL, FactorizationKind.GROUPING):
        raise KindMismatchError("border/prefix exclusion applies to ICFL factorizations")
    factors = f.factors
    for i in range(len(factors) - 1):
        cur = factors[i].data
        nxt = factors[i + 1].data
        for length in _border_lengths(cur):
            if nxt[:length] == cur[:length]:
                return BorderPrefixViolation(i + 1, length, factors[i].prefix(length))
    return None


def check_border_not_prefix(f: Factorization) -> bool:
    """True iff no nonempty border of any factor prefixes the next factor."""
    return find_border_prefix_violation(f) is None


@dataclass(frozen=True)
class ChainBorderViolation:
    border_length: int
    reason: str


def find_chain_border_violation(f: Factorization, span: ChainSpan) -> ChainBorderViolation | None:
    """Check that borders of a chain product align with factor boundaries.

    Every nonempty border of ℓ_r···ℓ_s must equal a suffix ℓ_{t+1}···ℓ_s of
    the chain, and hence start with ℓ_s.
    """
    if f.kind is not FactorizationKind.CFL_IN:
        raise KindMismatchError("chain border check applies to CFL_in factorizations")
    factors = f.factors
    if not 1 <= span.start_index <= span.end_index <= len(factors):
        raise IndexError("chain span out of range")
    for i in range(span.start_index, span.end_index):
        if not factors[i - 1].data.startswith(factors[i].data):
            raise ValueError("span is not a prefix-order chain")
    chain = factors[span.start_index - 1:span.end_index]
    product = b"".join(x.data for x in chain)
    boundary_suffix_lengths = set()
    acc = 0
    for x in reversed(chain[1:]):
        acc += len(x.data)
        boundary_suffix_lengths.add(acc)
    last = chain[-1].data
    for length in _border_lengths(product):
        if length not in boundary_suffix_lengths:
            return ChainBorderViolation(length, "border is not a factor-boundary suffix")
        if product[:len(last)] != last or length < len(last):
            return ChainBorderViolation(length, "last chain factor does not prefix the border")
    return None


def check_chain_border_suffix(f: Factorization, span: ChainSpan) -> bool:
    return find_chain_border_violation(f, span) is None


@dataclass(frozen=True)
class BreBorderViolation:
    border_length: int
    relation: PrefixRelation


def find_bre_border_violation(d: BreDecomposition) -> BreBorderViolation | None:
    """Borders of p must be prefix-incomparable with the right extension."""
    if len(d.p) == 0:
        return None
    for length in _border_lengths(d.p.data):
        rel = prefix_relation(d.p.prefix(length), d.p_bar)
        if rel is not PrefixRelation.INCOMPARABLE:
            return BreBorderViolation(length, rel)
    return None


def check_bre_border_incomparable(d: BreDecomposition) -> bool:
    return find_bre_border_violation(d) is None


@dataclass(frozen=True)
class BreRunViolation:
    reason: str


def find_bre_run_violation(d: BreDecomposition, base: Factorization) -> BreRunViolation | None:
    """Structural decomposition of a bre against the anti-Lyndon runs.

    p must be a concatenation of complete leading exponent runs
    ℓ_1^{n_1}···ℓ_g^{n_g} of the CFL_in of the subject word, and p_bar
    must be u_g·b with u_g a proper prefix of ℓ_g whose next symbol ranks
    below b.
    """
    if base.kind is not FactorizationKind.CFL_IN:
        raise KindMismatchError("bre run check needs the CFL_in factorization")
    runs = base.exponent_form()
    p_len = len(d.p)
    acc = 0
    last_base = None
    factors_used = 0
    for word, count in runs:
        if acc == p_len:
            break
        acc += len(word) * count
        factors_used += count
        last_base = word
    if acc != p_len or last_base is None:
        return BreRunViolation("p is not a product of complete leading runs")
    from lynfac.icfl import pmci_chains

    if factors_used > pmci_chains(base)[0].end_index:
        return BreRunViolation("p extends past the first prefix chain")
    u_g = d.p_bar.data[:-1]
    ell_g = last_base.data
    if len(u_g) >= len(ell_g) or ell_g[:len(u_g)] != u_g:
        return BreRunViolation("p_bar minus its last symbol is not a proper prefix of the last run base")
    alpha = base.word.alphabet
    if alpha.rank(ell_g[len(u_g)]) >= alpha.rank(d.b):
        return BreRunViolation("symbol after the shared prefix does not rank below b")
    return None
