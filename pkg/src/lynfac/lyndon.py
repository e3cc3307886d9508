"""Lyndon/anti-Lyndon predicates, Duval factorization, prenecklaces.

The inverse-order variants reuse the normal-order kernels through the
alphabet's inverse rank translation: one code path, two orders.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from lynfac._backend import kernels
from lynfac.alphabet import Order, Word, _require_nonempty, ll_compare
from lynfac.errors import EmptyWordError


class FactorizationKind(enum.Enum):
    CFL = "cfl"           # nonincreasing Lyndon factors
    CFL_IN = "cfl-in"     # nonincreasing anti-Lyndon factors (inverse order)
    ICFL = "icfl"         # canonical inverse Lyndon factorization
    GROUPING = "grouping"  # inverse Lyndon factors forming a ≪-chain


#: The comparison order under which each kind's factors are compared.
KIND_ORDER = {
    FactorizationKind.CFL: Order.NORMAL,
    FactorizationKind.CFL_IN: Order.INVERSE,
    FactorizationKind.ICFL: Order.NORMAL,
    FactorizationKind.GROUPING: Order.NORMAL,
}


@dataclass(frozen=True)
class Factorization:
    """An ordered cover of ``word`` by nonempty contiguous factors.

    ``cuts`` holds the 1-indexed inclusive end position of every factor,
    strictly increasing and ending at ``len(word)``. Use :meth:`validate`
    to check the kind-specific invariants; constructing an instance does
    not validate, so tests can build deliberately broken factorizations.
    """

    word: Word
    cuts: tuple[int, ...]
    kind: FactorizationKind

    def __post_init__(self):
        object.__setattr__(self, "cuts", tuple(self.cuts))

    @property
    def factor_count(self) -> int:
        return len(self.cuts)

    def __len__(self) -> int:
        return len(self.cuts)

    @cached_property
    def bounds(self) -> tuple[tuple[int, int], ...]:
        """1-indexed inclusive (start, end) of each factor."""
        out = []
        start = 1
        for end in self.cuts:
            out.append((start, end))
            start = end + 1
        return tuple(out)

    @cached_property
    def factors(self) -> tuple[Word, ...]:
        return tuple(self.word.slice(s, e) for s, e in self.bounds)

    def factor(self, i: int) -> Word:
        """Factor number ``i`` (1-indexed)."""
        if not 1 <= i <= len(self.cuts):
            raise IndexError(f"factor index {i} out of range 1..{len(self.cuts)}")
        return self.factors[i - 1]

    def exponent_form(self) -> tuple[tuple[Word, int], ...]:
        """Run-length compressed factors: ((base, multiplicity), ...)."""
        runs: list[tuple[Word, int]] = []
        for f in self.factors:
            if runs and runs[-1][0] == f:
                runs[-1] = (f, runs[-1][1] + 1)
            else:
                runs.append((f, 1))
        return tuple(runs)

    def validate(self) -> list[str]:
        """All invariant violations, empty when the factorization is valid."""
        problems: list[str] = []
        n = len(self.word)
        if n == 0:
            return ["factorized word is empty"]
        if not self.cuts or self.cuts[-1] != n:
            problems.append("cuts do not cover the word")
        prev = 0
        for c in self.cuts:
            if c <= prev:
                problems.append(f"cut {c} not strictly increasing")
                break
            prev = c
        if problems:
            return problems
        fs = self.factors
        if self.kind in (FactorizationKind.CFL, FactorizationKind.CFL_IN):
            order = KIND_ORDER[self.kind]
            for i, f in enumerate(fs, start=1):
                if not is_lyndon(f, order):
                    problems.append(f"factor {i} is not Lyndon under {order.value} order")
            for i in range(len(fs) - 1):
                if fs[i].key_bytes(order) < fs[i + 1].key_bytes(order):
                    problems.append(f"factors {i + 1},{i + 2} not nonincreasing")
        else:
            for i, f in enumerate(fs, start=1):
                if not is_inverse_lyndon(f):
                    problems.append(f"factor {i} is not an inverse Lyndon word")
            for i in range(len(fs) - 1):
                if not ll_compare(fs[i], fs[i + 1]):
                    problems.append(f"factors {i + 1},{i + 2} violate the strict-increase relation")
        return problems

    def require_valid(self) -> "Factorization":
        problems = self.validate()
        if problems:
            raise ValueError("; ".join(problems))
        return self

    def __repr__(self) -> str:
        parts = "|".join(f.to_text() for f in self.factors)
        return f"Factorization({self.kind.value}: {parts})"


@dataclass(frozen=True)
class SesquipowerForm:
    """``base ** repetitions + residue`` with base Lyndon, residue a proper prefix."""

    base: Word
    repetitions: int
    residue: Word

    def rebuild(self) -> Word:
        return self.base * self.repetitions + self.residue


def is_lyndon(w: Word, order: Order = Order.NORMAL) -> bool:
    """True iff ``w`` is strictly smaller than all its proper nonempty suffixes.

    ``Order.INVERSE`` tests for anti-Lyndon words.
    """
    _require_nonempty(w)
    key = w.key_bytes(order)
    return kernels.longest_lyndon_prefix_len(key) == len(key)


def is_inverse_lyndon(w: Word) -> bool:
    """True iff every nonempty proper suffix of ``w`` is smaller than ``w``.

    Computed incrementally as the anti-prenecklace test, which agrees with
    the suffix definition on every word.
    """
    _require_nonempty(w)
    fail, _ = kernels.prenecklace_scan(w.key_bytes(Order.INVERSE))
    return fail == -1


def is_prenecklace(w: Word, order: Order = Order.NORMAL) -> bool:
    """True iff ``w`` is a prefix of a power of a Lyndon word w.r.t. ``order``.

    The empty word counts as a prenecklace by convention.
    """
    if w.is_empty():
        return True
    fail, _ = kernels.prenecklace_scan(w.key_bytes(order))
    return fail == -1


def cfl(w: Word, order: Order = Order.NORMAL) -> Factorization:
    """The unique nonincreasing factorization into (anti-)Lyndon words.

    Linear time, constant extra space beyond the output (Duval).
    """
    _require_nonempty(w)
    cuts = kernels.lyndon_cuts(w.key_bytes(order))
    kind = FactorizationKind.CFL if order is Order.NORMAL else FactorizationKind.CFL_IN
    return Factorization(w, tuple(cuts), kind)


def longest_lyndon_prefix(w: Word, order: Order = Order.NORMAL) -> Word:
    """The maximal-length prefix of ``w`` that is Lyndon w.r.t. ``order``."""
    _require_nonempty(w)
    return w.prefix(kernels.longest_lyndon_prefix_len(w.key_bytes(order)))


def sesquipower_form(w: Word, order: Order = Order.NORMAL) -> SesquipowerForm:
    """Decompose a prenecklace as (uv)^k · u with uv Lyndon and k maximal."""
    if w.is_empty():
        raise EmptyWordError("sesquipower form requires a nonempty prenecklace")
    fail, period = kernels.prenecklace_scan(w.key_bytes(order))
    if fail != -1:
        raise ValueError("word is not a prenecklace under the requested order")
    n = len(w)
    k = n // period
    return SesquipowerForm(w.prefix(period), k, w.slice(k * period + 1, n))
