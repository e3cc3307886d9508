"""Bounded right extensions, the canonical inverse Lyndon factorization,
prefix-order chains and grouping verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from lynfac._backend import kernels
from lynfac.alphabet import Order, Word, _require_nonempty, lcp, ll_compare
from lynfac.errors import InternalInvariantError, KindMismatchError
from lynfac.lyndon import Factorization, FactorizationKind, cfl, is_inverse_lyndon

#: Enumeration of all groupings is exponential; refuse beyond this length.
GROUPING_ENUMERATION_CAP = 12


@dataclass(frozen=True)
class BreDecomposition:
    """The bounded right extension of the leading inverse Lyndon prefix.

    ``z = p + p_bar`` is the shortest nonempty prefix of the subject word
    that is not an inverse Lyndon word; ``p = r·a·s`` and ``p_bar = r·b``
    with ``a < b`` and r the shortest prefix realizing ``z = rasrb``.
    """

    p: Word
    p_bar: Word
    r: Word
    s: Word
    a: int
    b: int
    z: Word

    def validate(self) -> list[str]:
        problems = []
        alpha = self.z.alphabet
        if self.p + self.p_bar != self.z:
            problems.append("z is not p + p_bar")
        if self.r + Word(bytes([self.a]), alpha) + self.s != self.p:
            problems.append("p is not r·a·s")
        if self.r + Word(bytes([self.b]), alpha) != self.p_bar:
            problems.append("p_bar is not r·b")
        if alpha.rank(self.a) >= alpha.rank(self.b):
            problems.append("mismatch symbols not increasing")
        if not is_inverse_lyndon(self.p):
            problems.append("p is not an inverse Lyndon word")
        if is_inverse_lyndon(self.z):
            problems.append("z is an inverse Lyndon word")
        if not ll_compare(self.p, self.p_bar):
            problems.append("p is not strictly below p_bar")
        return problems


@dataclass(frozen=True)
class ChainSpan:
    """Maximal run of factor indices forming a nonincreasing prefix chain."""

    start_index: int
    end_index: int

    def indices(self) -> range:
        return range(self.start_index, self.end_index + 1)

    def __len__(self) -> int:
        return self.end_index - self.start_index + 1


@dataclass(frozen=True)
class GroupingWitness:
    """Boundary indices i_0 = 0 < i_1 < ... < i_k = h into the base factors.

    Grouped factor j covers base factors ``i_{j-1}+1 .. i_j``.
    """

    boundaries: tuple[int, ...]

    def ranges(self) -> list[tuple[int, int]]:
        b = self.boundaries
        return [(b[j - 1] + 1, b[j]) for j in range(1, len(b))]


def bre(w: Word) -> BreDecomposition | None:
    """Bounded right extension of the first inverse Lyndon prefix of ``w``.

    Absent exactly when ``w`` itself is an inverse Lyndon word. Found by a
    single left-to-right anti-prenecklace scan; the shared prefix r comes
    from the nested sesquipower residues at the failure position.
    """
    _require_nonempty(w)
    fail, r_len = kernels.bre_scan(w.key_bytes(Order.INVERSE))
    if fail == -1:
        return None
    z_len = fail + 1
    p_len = fail - r_len
    decomp = BreDecomposition(
        p=w.prefix(p_len),
        p_bar=w.slice(p_len + 1, z_len),
        r=w.prefix(r_len),
        s=w.slice(r_len + 2, p_len),
        a=w.at(r_len + 1),
        b=w.at(z_len),
        z=w.prefix(z_len),
    )
    alpha = w.alphabet
    if alpha.rank(decomp.a) >= alpha.rank(decomp.b):
        raise InternalInvariantError("bre mismatch symbols out of order")
    return decomp


def icfl(w: Word) -> Factorization:
    """The canonical inverse Lyndon factorization of ``w``.

    Iterative (worklist over the recursion), total time linear in |w|.
    """
    _require_nonempty(w)
    cuts = kernels.icfl_cuts(w.key_bytes(Order.INVERSE))
    return Factorization(w, tuple(cuts), FactorizationKind.ICFL)


def pmci_chains(f: Factorization) -> list[ChainSpan]:
    """Partition of the factor indices into maximal prefix-order chains.

    A chain continues while each factor is a prefix of its predecessor;
    singleton chains are allowed.
    """
    if f.kind is not FactorizationKind.CFL_IN:
        raise KindMismatchError("pmci_chains requires a CFL_in factorization")
    spans: list[ChainSpan] = []
    factors = f.factors
    start = 1
    for i in range(1, len(factors)):
        if not factors[i - 1].data.startswith(factors[i].data):
            spans.append(ChainSpan(start, i))
            start = i + 1
    spans.append(ChainSpan(start, len(factors)))
    return spans


def grouping_witness(candidate: Factorization, base: Factorization) -> GroupingWitness | None:
    """Witness that ``candidate`` is a grouping of the CFL_in ``base``.

    Returns None unless every candidate factor concatenates whole
    consecutive base factors, merging never crosses a chain boundary,
    every grouped factor is an inverse Lyndon word, and consecutive
    grouped factors strictly increase without being prefixes.
    """
    if base.kind is not FactorizationKind.CFL_IN:
        raise KindMismatchError("grouping base must be a CFL_in factorization")
    if candidate.word != base.word:
        raise ValueError("candidate and base factorize different words")
    base_cut_index = {cut: i + 1 for i, cut in enumerate(base.cuts)}
    boundaries = [0]
    for cut in candidate.cuts:
        idx = base_cut_index.get(cut)
        if idx is None:
            return None  # candidate boundary splits a base factor
        boundaries.append(idx)
    chain_ends = {span.end_index for span in pmci_chains(base)}
    if not chain_ends.issubset(boundaries):
        return None  # a merge crosses a chain boundary
    factors = candidate.factors
    for m in factors:
        if not is_inverse_lyndon(m):
            return None
    for i in range(len(factors) - 1):
        if not ll_compare(factors[i], factors[i + 1]):
            return None
    return GroupingWitness(tuple(boundaries))


def is_grouping(candidate: Factorization, base: Factorization) -> bool:
    return grouping_witness(candidate, base) is not None


def enumerate_groupings(base: Factorization) -> Iterator[Factorization]:
    """All groupings of a CFL_in factorization, for small words only.

    Every way of re-concatenating each prefix chain is tried; the valid
    candidates are yielded in deterministic order.
    """
    if base.kind is not FactorizationKind.CFL_IN:
        raise KindMismatchError("grouping base must be a CFL_in factorization")
    if len(base.word) > GROUPING_ENUMERATION_CAP:
        raise ValueError(
            f"grouping enumeration is exponential; capped at words of "
            f"length {GROUPING_ENUMERATION_CAP}")
    spans = pmci_chains(base)
    per_chain_choices = []
    for span in spans:
        inner = list(range(span.start_index, span.end_index))
        choices = []
        for mask in product((False, True), repeat=len(inner)):
            kept = [idx for idx, keep in zip(inner, mask) if keep]
            choices.append(kept + [span.end_index])
        per_chain_choices.append(choices)
    for combo in product(*per_chain_choices):
        indices = [i for chain in combo for i in chain]
        cuts = tuple(base.cuts[i - 1] for i in indices)
        candidate = Factorization(base.word, cuts, FactorizationKind.GROUPING)
        if grouping_witness(candidate, base) is not None:
            yield candidate


def mismatch_decomposition(f: Factorization, h: int, j: int) -> tuple[Word, int, int]:
    """The shared prefix r and first differing symbols (a, b) of factors h < j.

    For an ICFL factorization every factor pair strictly increases, so the
    mismatch exists and a ranks below b; violation is an internal error.
    """
    if f.kind not in (FactorizationKind.ICFL, FactorizationKind.GROUPING):
        raise KindMismatchError("mismatch decomposition is defined on ICFL factorizations")
    if not 1 <= h < j <= f.factor_count:
        raise IndexError(f"factor pair ({h}, {j}) out of range")
    mh, mj = f.factor(h), f.factor(j)
    r = lcp(mh, mj)
    if len(r) >= min(len(mh), len(mj)):
        raise InternalInvariantError(f"factors {h} and {j} are prefix-comparable")
    a, b = mh.at(len(r) + 1), mj.at(len(r) + 1)
    alpha = f.word.alphabet
    if alpha.rank(a) >= alpha.rank(b):
        raise InternalInvariantError("factor mismatch symbols out of order")
    return r, a, b


def cfl_in(w: Word) -> Factorization:
    """The anti-Lyndon factorization (CFL under the inverse order)."""
    return cfl(w, Order.INVERSE)
