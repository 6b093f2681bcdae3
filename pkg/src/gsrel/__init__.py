"""Semiring-weighted relations, their sub-families, and machine-checked laws.

The package is organized as a tower: semirings, weight maps over finite
index words, weighted relations composed as matrices, a small term
language for wiring diagrams, and the law suites that classify each
(sub-family, semiring) pair and cross-check the classification two ways.
"""

from .report import (
    COUNTEREXAMPLE,
    DEFAULT_BUDGET,
    EXHAUSTIVE_PASS,
    SAMPLED_PASS,
    LawReport,
    check_cases,
    derive_rng,
)
from .semiring import (
    CATALOG,
    Semiring,
    SemiringError,
    SemiringProfile,
    TableFormatError,
    UnknownSemiringError,
    check_semiring_laws,
    classify_semiring,
    load_semiring,
    load_table_semiring,
    mul_inverse,
)
from .weightmap import (
    VARIANTS,
    FinSet,
    MapFlags,
    WeightMap,
    WeightMapError,
    Word,
    enumerate_maps,
    in_variant,
    render_map,
    sample_maps,
    variant_maps,
    wm_antipode,
    wm_classify,
    wm_empty,
    wm_eta,
    wm_make,
    wm_mu,
    wm_psi,
    wm_psi0,
    wm_pushforward,
    wm_total,
    word_elements,
    word_labels,
    word_size,
)
from .wrel import (
    ArrowFlags,
    BoundaryError,
    WRel,
    WRelFormatError,
    arrow_in_variant,
    canonical_semigroup_mul,
    enumerate_arrows,
    finset_from_doc,
    finset_to_doc,
    hom_scalar_mul,
    hom_scalar_unit,
    sample_arrows,
    variant_arrows,
    wrel_classify,
    wrel_compose,
    wrel_copy,
    wrel_del,
    wrel_dom,
    wrel_dom_closed,
    wrel_dom_via_kleisli_path,
    wrel_eq,
    wrel_from_doc,
    wrel_id,
    wrel_make,
    wrel_mass,
    wrel_swap,
    wrel_tensor,
    wrel_to_doc,
    wrel_witness,
)
from .diagram import (
    Copy,
    Del,
    DiagramError,
    Dom,
    Gen,
    Id,
    Interpretation,
    InterpFormatError,
    Mass,
    ParseError,
    Seq,
    Signature,
    Swap,
    Tensor,
    TypecheckError,
    UnknownGeneratorError,
    check_term_equality,
    evaluate_term,
    gsm_axiom_pairs,
    load_interpretation,
    parse_term,
    parse_term_file,
    print_term,
    typecheck_term,
)
from .taxonomy import (
    DEFAULT_OPS,
    KLEISLI_FLAGS,
    MONAD_FLAGS,
    FlagVerdict,
    KleisliClassification,
    MonadClassification,
    MonadOps,
    SuiteEntry,
    check_gsm_axioms,
    check_monad_laws,
    classify_kleisli,
    classify_monad,
    crosscheck_dom_paths,
    entries_to_jsonl,
    entries_to_table,
    run_theorem_suite,
    suite_failures,
    variant_closure_reports,
)

__all__ = [name for name in dir() if not name.startswith("_")]
