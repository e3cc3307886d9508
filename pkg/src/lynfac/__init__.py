"""Lyndon, anti-Lyndon and canonical inverse Lyndon factorizations.

Library surface: ordered alphabets and words, the factorizations and
their structural machinery (bounded right extensions, prefix chains,
groupings), border analysis, suffix-sorting compatibility checks, the
LCP upper bound M, and overlap analysis via shared Lyndon factors.
Brute-force reference implementations live in :mod:`lynfac.oracle`;
property sweeps in :mod:`lynfac.verify`; the CLI in :mod:`lynfac.cli`.

Hot kernels run on a compiled extension when available and fall back to
pure Python; ``lynfac.BACKEND_NAME`` names the active backend.
"""

from lynfac._backend import BACKEND_NAME
from lynfac.alphabet import (
    BYTE_ALPHABET,
    Comparison,
    Order,
    OrderedAlphabet,
    PrefixRelation,
    Word,
    lcp,
    lcp_length,
    lex_compare,
    lex_less,
    ll_compare,
    prefix_relation,
)
from lynfac.borders import (
    BorderArray,
    border_array,
    check_border_not_prefix,
    check_bre_border_incomparable,
    check_chain_border_suffix,
    find_border_prefix_violation,
    find_bre_border_violation,
    find_bre_run_violation,
    find_chain_border_violation,
)
from lynfac.errors import (
    AlphabetMismatchError,
    EmptyWordError,
    InternalInvariantError,
    KindMismatchError,
    LynfacError,
    NotApplicableError,
)
from lynfac.icfl import (
    BreDecomposition,
    ChainSpan,
    GroupingWitness,
    bre,
    cfl_in,
    enumerate_groupings,
    grouping_witness,
    icfl,
    is_grouping,
    mismatch_decomposition,
    pmci_chains,
)
from lynfac.lyndon import (
    Factorization,
    FactorizationKind,
    SesquipowerForm,
    cfl,
    is_inverse_lyndon,
    is_lyndon,
    is_prenecklace,
    longest_lyndon_prefix,
    sesquipower_form,
)
from lynfac.overlap import (
    FactorClass,
    FactorOccurrence,
    OverlapCase,
    OverlapReport,
    analyze_overlap,
    cfl_of_factor,
    classify_factor,
    overlap_candidates,
    shared_factor_signature,
)
from lynfac.suffixes import (
    FactorRange,
    GlobalOrder,
    LcpBoundReport,
    SuffixRef,
    check_cfl_compatibility,
    check_icfl_inverse_compatibility,
    find_cfl_compatibility_violation,
    find_icfl_inverse_compatibility_violation,
    lcp_adjacent_suffix_reduction,
    max_adjacent_length,
    max_adjacent_pair,
    predict_global_order,
    verify_lcp_bound,
)

__version__ = "0.1.0"
