"""Named property suites: executable forms of the library's theorems.

Each suite exhaustively enumerates words over small alphabets (the scales
mirror the library's verification budget), evaluates one family of
properties, and reports the case count plus the first few counterexamples.
The CLI ``verify`` subcommand and the acceptance tests drive these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from lynfac import oracle
from lynfac.alphabet import (
    Comparison,
    Order,
    OrderedAlphabet,
    PrefixRelation,
    Word,
    lcp,
    lex_compare,
    ll_compare,
    prefix_relation,
)
from lynfac.borders import (
    border_array,
    find_border_prefix_violation,
    find_bre_border_violation,
    find_bre_run_violation,
    find_chain_border_violation,
)
from lynfac.icfl import (
    bre,
    cfl_in,
    enumerate_groupings,
    grouping_witness,
    icfl,
    mismatch_decomposition,
    pmci_chains,
)
from lynfac.lyndon import (
    FactorizationKind,
    cfl,
    is_inverse_lyndon,
    is_lyndon,
    is_prenecklace,
    longest_lyndon_prefix,
    sesquipower_form,
)
from lynfac.overlap import (
    FactorClass,
    OverlapCase,
    analyze_overlap,
    cfl_of_factor,
    classify_factor,
    overlap_candidates,
)
from lynfac.suffixes import (
    FactorRange,
    GlobalOrder,
    SuffixRef,
    find_cfl_compatibility_violation,
    find_icfl_inverse_compatibility_violation,
    lcp_adjacent_suffix_reduction,
    predict_global_order,
    verify_lcp_bound,
)

MAX_REPORTED_FAILURES = 3

_LETTERS = "abcdefgh"
_ALPHABETS: dict[int, OrderedAlphabet] = {}


def sweep_alphabet(size: int) -> OrderedAlphabet:
    if size not in _ALPHABETS:
        if not 2 <= size <= len(_LETTERS):
            raise ValueError(f"sweep alphabet size must be 2..{len(_LETTERS)}")
        _ALPHABETS[size] = OrderedAlphabet(_LETTERS[:size])
    return _ALPHABETS[size]


def words_over(size: int, max_len: int) -> Iterator[Word]:
    alpha = sweep_alphabet(size)
    letters = bytes(alpha.symbols)
    for n in range(1, max_len + 1):
        for tup in product(letters, repeat=n):
            yield Word(bytes(tup), alpha)


Scale = tuple[int, int]  # (alphabet size, max length)

#: Default sweep scales per suite family, sized for an exact full run.
FULL_SCALES: tuple[Scale, ...] = ((2, 14), (3, 9))
QUADRATIC_SCALES: tuple[Scale, ...] = ((2, 12), (3, 8))
FACTOR_SCALES: tuple[Scale, ...] = ((2, 10),)
PAIR_SCALES: tuple[Scale, ...] = ((2, 8),)
SMALL_SCALES: tuple[Scale, ...] = ((2, 6),)
GROUPING_SCALES: tuple[Scale, ...] = ((2, 10),)


@dataclass
class SweepConfig:
    """Externally imposed sweep limits; None keeps each suite's default."""

    scales: tuple[Scale, ...] | None = None
    seed: int = 0

    def resolve(self, default: tuple[Scale, ...]) -> tuple[Scale, ...]:
        return self.scales if self.scales is not None else default


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    _overflow: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures and not self._overflow

    @property
    def failure_count(self) -> int:
        return len(self.failures) + self._overflow

    def record(self, message: str) -> None:
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message)
        else:
            self._overflow += 1

    def check(self, condition: bool, message: str) -> None:
        self.cases += 1
        if not condition:
            self.record(message)


def _suite_lex_order(cfg: SweepConfig) -> SuiteResult:
    """Order axioms, the inverse-order flip, and prepend/append stability."""
    res = SuiteResult("lex-order")
    scales = cfg.resolve(SMALL_SCALES)
    rng = random.Random(cfg.seed)
    for size, max_len in scales:
        words = list(words_over(size, max_len))
        alpha = sweep_alphabet(size)
        empty = Word(b"", alpha)
        pool = words + [empty]
        for x in pool:
            res.check(lex_compare(x, x) is Comparison.EQUAL, f"{x!r} not equal to itself")
        for x in pool:
            for y in pool:
                cmp_xy = lex_compare(x, y)
                cmp_yx = lex_compare(y, x)
                res.check(cmp_xy.value == -cmp_yx.value,
                          f"antisymmetry fails for {x!r}, {y!r}")
                if cmp_xy is Comparison.EQUAL:
                    continue
                if prefix_relation(x, y) is PrefixRelation.INCOMPARABLE:
                    flip = lex_compare(y, x, Order.INVERSE)
                    res.check(flip is cmp_xy,
                              f"inverse-order flip fails for {x!r}, {y!r}")
                    lo, hi = (x, y) if cmp_xy is Comparison.LESS else (y, x)
                    res.check(ll_compare(lo, hi),
                              f"incomparable pair not strictly below: {lo!r}, {hi!r}")
        # transitivity on a seeded sample of triples
        for _ in range(2000):
            x, y, z = rng.choice(pool), rng.choice(pool), rng.choice(pool)
            if lex_compare(x, y) is not Comparison.GREATER and \
                    lex_compare(y, z) is not Comparison.GREATER:
                res.check(lex_compare(x, z) is not Comparison.GREATER,
                          f"transitivity fails for {x!r}, {y!r}, {z!r}")
        for _ in range(2000):
            x, y = rng.choice(words), rng.choice(words)
            z, u, v = rng.choice(pool), rng.choice(pool), rng.choice(pool)
            res.check((lex_compare(x, y) is Comparison.LESS)
                      == (lex_compare(z + x, z + y) is Comparison.LESS),
                      f"prepend stability fails for z={z!r}, {x!r}, {y!r}")
            if ll_compare(x, y):
                res.check(ll_compare(x + u, y + v),
                          f"append stability fails for {x!r}, {y!r}")
                res.check(lex_compare(y, x) is not Comparison.LESS,
                          f"strict-below pair reversed: {x!r}, {y!r}")
    return res


def _suite_cfl_oracle(cfg: SweepConfig) -> SuiteResult:
    """Fast factorization equals the greedy longest-Lyndon-prefix oracle."""
    res = SuiteResult("cfl-oracle")
    for size, max_len in cfg.resolve(FULL_SCALES):
        for w in words_over(size, max_len):
            for order in (Order.NORMAL, Order.INVERSE):
                fast = cfl(w, order)
                naive = oracle.naive_cfl(w, order)
                res.check(fast.cuts == naive.cuts,
                          f"{w!r} {order.value}: {fast.cuts} != oracle {naive.cuts}")
    return res


def _suite_cfl_structure(cfg: SweepConfig) -> SuiteResult:
    """Factor invariants, slice identity, smallest-suffix law, unborderedness."""
    res = SuiteResult("cfl-structure")
    for size, max_len in cfg.resolve(QUADRATIC_SCALES):
        for w in words_over(size, max_len):
            f = cfl(w)
            res.check(not f.validate(), f"{w!r}: invalid factorization")
            res.check(longest_lyndon_prefix(w) == f.factor(1),
                      f"{w!r}: first factor is not the longest Lyndon prefix")
            last = f.factor(f.factor_count)
            smallest = min(range(1, len(w) + 1), key=lambda i: w.key_bytes()[i - 1:])
            res.check(last.data == w.data[smallest - 1:],
                      f"{w!r}: last factor is not the smallest suffix")
            for i, factor in enumerate(f.factors, start=1):
                res.check(not oracle.naive_borders(factor),
                          f"{w!r}: Lyndon factor {i} is bordered")
            k = f.factor_count
            for i in range(1, k + 1):
                for j in range(i, k + 1):
                    piece = w.slice(f.bounds[i - 1][0], f.bounds[j - 1][1])
                    res.check(cfl(piece).factors == f.factors[i - 1:j],
                              f"{w!r}: slice [{i},{j}] does not refactor to itself")
    return res


def _suite_inverse_words(cfg: SweepConfig) -> SuiteResult:
    """Anti-Lyndon vs inverse Lyndon characterizations and prefix closure."""
    res = SuiteResult("inverse-words")
    for size, max_len in cfg.resolve(QUADRATIC_SCALES):
        for w in words_over(size, max_len):
            il = is_inverse_lyndon(w)
            res.check(il == oracle.naive_is_inverse_lyndon(w),
                      f"{w!r}: inverse-Lyndon test disagrees with oracle")
            res.check(il == is_prenecklace(w, Order.INVERSE),
                      f"{w!r}: inverse Lyndon vs anti-prenecklace mismatch")
            anti = is_lyndon(w, Order.INVERSE)
            res.check(anti == (il and not oracle.naive_borders(w)),
                      f"{w!r}: anti-Lyndon is not unbordered-inverse-Lyndon")
            if il:
                for i in range(1, len(w)):
                    res.check(is_inverse_lyndon(w.prefix(i)),
                              f"{w!r}: prefix of length {i} not inverse Lyndon")
            if anti:
                for i in range(2, len(w) + 1):
                    res.check(ll_compare(w.suffix_from(i), w),
                              f"{w!r}: suffix at {i} not strictly below the word")
            for order in (Order.NORMAL, Order.INVERSE):
                if is_prenecklace(w, order):
                    form = sesquipower_form(w, order)
                    res.check(form.rebuild() == w and form.repetitions >= 1
                              and len(form.residue) < len(form.base),
                              f"{w!r} {order.value}: bad sesquipower form")
                    cands = oracle.naive_sesquipower_candidates(w, order)
                    res.check((form.base, form.repetitions, form.residue) in cands,
                              f"{w!r} {order.value}: form not among oracle candidates")
    return res


def _suite_icfl_oracle(cfg: SweepConfig) -> SuiteResult:
    """Fast canonical inverse factorization equals the literal recursion."""
    res = SuiteResult("icfl-oracle")
    for size, max_len in cfg.resolve(FULL_SCALES):
        for w in words_over(size, max_len):
            fast = icfl(w)
            naive = oracle.naive_icfl(w)
            res.check(fast.cuts == naive.cuts,
                      f"{w!r}: {fast.cuts} != oracle {naive.cuts}")
    return res


def _suite_icfl_structure(cfg: SweepConfig) -> SuiteResult:
    """Inverse Lyndon factors in a strict chain, grouped from the base runs."""
    res = SuiteResult("icfl-structure")
    for size, max_len in cfg.resolve(FULL_SCALES):
        for w in words_over(size, max_len):
            f = icfl(w)
            res.check(not f.validate(), f"{w!r}: invalid inverse factorization")
            witness = grouping_witness(f, cfl_in(w))
            res.check(witness is not None, f"{w!r}: not a grouping of the base")
            if witness is not None:
                res.check(witness.boundaries[0] == 0
                          and witness.boundaries[-1] == cfl_in(w).factor_count,
                          f"{w!r}: malformed grouping witness")
            for h in range(1, f.factor_count):
                mismatch_decomposition(f, h, h + 1)  # raises on violation
                res.cases += 1
    return res


def _suite_bre_structure(cfg: SweepConfig) -> SuiteResult:
    """Bounded right extensions: oracle agreement and run/border structure."""
    res = SuiteResult("bre-structure")
    for size, max_len in cfg.resolve(FULL_SCALES):
        for w in words_over(size, max_len):
            fast = bre(w)
            naive = oracle.naive_bre(w)
            if fast is None or naive is None:
                res.check(fast is None and naive is None and is_inverse_lyndon(w),
                          f"{w!r}: bre absence disagrees")
                continue
            res.check((fast.p, fast.p_bar, fast.r, fast.s, fast.a, fast.b, fast.z)
                      == (naive.p, naive.p_bar, naive.r, naive.s, naive.a, naive.b, naive.z),
                      f"{w!r}: bre decompositions differ")
            problems = fast.validate()
            res.check(not problems, f"{w!r}: {problems}")
            base = cfl_in(w)
            run_violation = find_bre_run_violation(fast, base)
            res.check(run_violation is None, f"{w!r}: {run_violation}")
            border_violation = find_bre_border_violation(fast)
            res.check(border_violation is None, f"{w!r}: {border_violation}")
    return res


def _suite_grouping_uniqueness(cfg: SweepConfig) -> SuiteResult:
    """Inverse Lyndon words: one chain (or unbordered) and a unique grouping."""
    res = SuiteResult("grouping-uniqueness")
    for size, max_len in cfg.resolve(GROUPING_SCALES):
        for w in words_over(size, max_len):
            if not is_inverse_lyndon(w):
                continue
            base = cfl_in(w)
            chains = pmci_chains(base)
            res.check(not oracle.naive_borders(w) or len(chains) == 1,
                      f"{w!r}: bordered but chains = {chains}")
            groupings = list(enumerate_groupings(base))
            res.check(len(groupings) == 1 and groupings[0].cuts == (len(w),),
                      f"{w!r}: groupings {[g.cuts for g in groupings]} not unique")
    return res


def _suite_border_exclusion(cfg: SweepConfig) -> SuiteResult:
    """Border arrays vs oracle; factor borders never prefix the next factor."""
    res = SuiteResult("border-exclusion")
    for size, max_len in cfg.resolve(FULL_SCALES):
        for w in words_over(size, max_len):
            ba = border_array(w)
            res.check(list(ba.border_lengths) == oracle.naive_borders(w),
                      f"{w!r}: border array disagrees with oracle")
            violation = find_border_prefix_violation(icfl(w))
            res.check(violation is None, f"{w!r}: {violation}")
            base = cfl_in(w)
            for span in pmci_chains(base):
                chain_violation = find_chain_border_violation(base, span)
                res.check(chain_violation is None, f"{w!r} {span}: {chain_violation}")
    return res


def _suite_compatibility(cfg: SweepConfig) -> SuiteResult:
    """Local/global suffix sorting agrees over every factor range."""
    res = SuiteResult("compatibility")
    for size, max_len in cfg.resolve(QUADRATIC_SCALES):
        for w in words_over(size, max_len):
            for f, finder in ((cfl(w), find_cfl_compatibility_violation),
                              (icfl(w), find_icfl_inverse_compatibility_violation)):
                k = f.factor_count
                for i in range(1, k + 1):
                    for h in range(i, k + 1):
                        violation = finder(FactorRange(w, f, i, h))
                        res.check(violation is None,
                                  f"{w!r} {f.kind.value} range [{i},{h}]: {violation}")
    return res


def _suite_global_prediction(cfg: SweepConfig) -> SuiteResult:
    """Predicted global suffix order matches the actual comparison."""
    res = SuiteResult("global-prediction")
    for size, max_len in cfg.resolve(QUADRATIC_SCALES):
        for w in words_over(size, max_len):
            if is_inverse_lyndon(w):
                continue
            f = icfl(w)
            key = w.key_bytes(Order.NORMAL)
            for i in range(1, f.factor_count + 1):
                for h in range(i, f.factor_count + 1):
                    rng = FactorRange(w, f, i, h)
                    last = rng.last_position
                    positions = list(rng.positions())
                    for x in positions:
                        for y in positions:
                            if x == y or not key[x - 1:last] < key[y - 1:last]:
                                continue
                            predicted = predict_global_order(
                                SuffixRef(rng, x), SuffixRef(rng, y))
                            actual = (GlobalOrder.J1_BEFORE_J2
                                      if key[x - 1:] < key[y - 1:]
                                      else GlobalOrder.J2_BEFORE_J1)
                            res.check(predicted is actual,
                                      f"{w!r} range [{i},{h}] pair ({x},{y}): "
                                      f"predicted {predicted.value}")
    return res


def _suite_lcp_reduction(cfg: SweepConfig) -> SuiteResult:
    """Same-factor suffix reduction and the cross-factor lcp prefix law."""
    res = SuiteResult("lcp-reduction")
    for size, max_len in cfg.resolve(QUADRATIC_SCALES):
        for w in words_over(size, max_len):
            f = icfl(w)
            k = f.factor_count
            if k < 2:
                continue
            for i in range(2, k + 1):
                prev = f.factor(i - 1)
                suffixes = [prev.suffix_from(t) for t in range(1, len(prev) + 1)]
                for x in suffixes:
                    for y in suffixes:
                        if x == y:
                            continue
                        lcp_adjacent_suffix_reduction(x, y, f, i)  # raises on mismatch
                        res.cases += 1
            # suffixes of distinct factors: lcp of extensions stays within y·m_next
            for fi in range(1, k):
                for fj in range(fi + 1, k):
                    end_i, end_j = f.bounds[fi - 1][1], f.bounds[fj - 1][1]
                    for x_len in range(1, len(f.factor(fi)) + 1):
                        x_w = w.suffix_from(end_i - x_len + 1)
                        for y_len in range(1, len(f.factor(fj)) + 1):
                            y_start = end_j - y_len + 1
                            y_ext = w.slice(y_start, f.bounds[fj][1])
                            shared = lcp(x_w, w.suffix_from(y_start))
                            res.check(y_ext.data.startswith(shared.data),
                                      f"{w!r}: lcp escapes y·m_next for factors "
                                      f"({fi},{fj}) lengths ({x_len},{y_len})")
            # factor occurrence exclusion and shared-prefix interpolation
            for i in range(2, k + 1):
                prefix_prod = w.prefix(f.bounds[i - 2][1]).data
                res.check(f.factor(i).data not in prefix_prod,
                          f"{w!r}: factor {i} occurs earlier")
                r, _a, b = mismatch_decomposition(f, i - 1, i)
                res.check(r.data + bytes([b]) not in prefix_prod,
                          f"{w!r}: extension of shared prefix occurs earlier")
            for i in range(1, k + 1):
                for j in range(i + 2, k + 1):
                    r = lcp(f.factor(i), f.factor(j))
                    for h in range(i + 1, j):
                        res.check(f.factor(h).data.startswith(r.data),
                                  f"{w!r}: common prefix of factors {i},{j} "
                                  f"not a prefix of factor {h}")
    return res


def _suite_lcp_bound(cfg: SweepConfig) -> SuiteResult:
    """Max factor-pair LCP never exceeds M; exact vs the literal oracle."""
    res = SuiteResult("lcp-bound")
    for size, max_len in cfg.resolve(FULL_SCALES):
        for w in words_over(size, max_len):
            if is_inverse_lyndon(w):
                continue
            report = verify_lcp_bound(w, seed=cfg.seed)
            res.check(report.holds,
                      f"{w!r}: observed {report.max_observed_lcp} > M={report.m_bound} "
                      f"witness {report.witness_pair}")
            if len(w) <= 8:
                naive_best, _ = oracle.naive_max_factor_pair_lcp(w)
                res.check(report.max_observed_lcp == naive_best,
                          f"{w!r}: measured {report.max_observed_lcp}, "
                          f"oracle {naive_best}")
    return res


def _suite_overlap_factors(cfg: SweepConfig) -> SuiteResult:
    """Boundary assembly equals the direct factorization for every factor."""
    res = SuiteResult("overlap-factors")
    for size, max_len in cfg.resolve(FACTOR_SCALES):
        for w in words_over(size, max_len):
            n = len(w)
            for s in range(1, n + 1):
                for e in range(s, n + 1):
                    if e - s + 1 == n:
                        continue
                    occ = classify_factor(w, s, e)
                    if occ.classification is FactorClass.SIMPLE:
                        res.cases += 1
                        continue
                    assembled = cfl_of_factor(occ)
                    direct = cfl(w.slice(s, e))
                    res.check(assembled.cuts == direct.cuts,
                              f"{w!r}[{s},{e}]: assembly {assembled.cuts} "
                              f"!= direct {direct.cuts}")
    return res


def _suite_overlap_pairs(cfg: SweepConfig) -> SuiteResult:
    """Every proper non-simple overlap lands in exactly one shared-run case."""
    res = SuiteResult("overlap-pairs")
    for size, max_len in cfg.resolve(PAIR_SCALES):
        pool = list(words_over(size, max_len))
        for w in pool:
            for w2 in pool:
                for length in overlap_candidates(w, w2):
                    if length == len(w) or length == len(w2):
                        continue
                    report = analyze_overlap(w, w2, length)
                    nonsimple = (length >= len(cfl(w).factors[-1])
                                 and length >= len(cfl(w2).factors[0]))
                    if nonsimple:
                        res.check(report.case in (OverlapCase.ALIGNED_BOTH,
                                                  OverlapCase.SHARED_RIGHT_RUN,
                                                  OverlapCase.SHARED_LEFT_RUN),
                                  f"{w!r}/{w2!r} len {length}: {report.case.value}")
                    else:
                        res.check(report.case is OverlapCase.DEGENERATE,
                                  f"{w!r}/{w2!r} len {length}: simple overlap "
                                  f"classified {report.case.value}")
    return res


def _suite_fault_injection(cfg: SweepConfig) -> SuiteResult:
    """Checkers must flag deliberately corrupted factorizations."""
    from lynfac.lyndon import Factorization

    res = SuiteResult("fault-injection")
    alpha = sweep_alphabet(2)
    # border of "aba" ("a") prefixes the next factor "ab..."
    w = Word(b"abaabab", alpha)
    fake = Factorization(w, (3, 7), FactorizationKind.ICFL)
    violation = find_border_prefix_violation(fake)
    res.check(violation is not None and violation.border.data == b"a",
              "border/prefix checker missed a planted violation")
    res.check(bool(fake.validate()),
              "factorization validator accepted a non-canonical split")
    # corrupt a genuine factorization by moving one cut
    for word in (Word(b"a" * 12 + b"bbab", alpha), Word(b"baababb", alpha)):
        good = icfl(word)
        cuts = list(good.cuts)
        cuts[0] += 1
        bad = Factorization(word, tuple(cuts), FactorizationKind.ICFL)
        res.check(bool(bad.validate()) or grouping_witness(bad, cfl_in(word)) is None,
                  f"{word!r}: corrupted cuts {cuts} passed all checks")
    # a CFL with swapped factor order must fail validation
    w = Word(b"ab" + b"b", alpha)
    bad_cfl = Factorization(w, (1, 3), FactorizationKind.CFL)
    res.check(bool(bad_cfl.validate()), "increasing factor pair accepted as CFL")
    return res


SUITES: dict[str, Callable[[SweepConfig], SuiteResult]] = {
    "lex-order": _suite_lex_order,
    "cfl-oracle": _suite_cfl_oracle,
    "cfl-structure": _suite_cfl_structure,
    "inverse-words": _suite_inverse_words,
    "icfl-oracle": _suite_icfl_oracle,
    "icfl-structure": _suite_icfl_structure,
    "bre-structure": _suite_bre_structure,
    "grouping-uniqueness": _suite_grouping_uniqueness,
    "border-exclusion": _suite_border_exclusion,
    "compatibility": _suite_compatibility,
    "global-prediction": _suite_global_prediction,
    "lcp-reduction": _suite_lcp_reduction,
    "lcp-bound": _suite_lcp_bound,
    "overlap-factors": _suite_overlap_factors,
    "overlap-pairs": _suite_overlap_pairs,
    "fault-injection": _suite_fault_injection,
}


def run_suites(names: list[str] | None, cfg: SweepConfig | None = None) -> list[SuiteResult]:
    cfg = cfg or SweepConfig()
    selected = list(SUITES) if not names else names
    results = []
    for name in selected:
        if name not in SUITES:
            raise KeyError(f"unknown suite: {name}; known: {', '.join(SUITES)}")
        results.append(SUITES[name](cfg))
    return results
