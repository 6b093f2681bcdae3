"""Classification oracles, law suite wiring, and the planted-bug check."""
from fractions import Fraction

from gsrel import (
    CATALOG,
    MONAD_FLAGS,
    VARIANTS,
    MonadOps,
    SuiteEntry,
    check_monad_laws,
    classify_kleisli,
    classify_monad,
    crosscheck_dom_paths,
    entries_to_jsonl,
    entries_to_table,
    load_semiring,
    run_theorem_suite,
    suite_failures,
    variant_closure_reports,
    wm_classify,
    wm_eta,
    wm_make,
    wm_mu,
    wm_psi,
    wm_pushforward,
    wrel_from_doc,
    wrel_compose,
    wrel_dom,
)

BOOL = load_semiring("bool")
NAT = load_semiring("nat")
QPLUS = load_semiring("q+")
GF2 = load_semiring("gf(2)")


def mu_drop_outer(sr, H):
    """Planted bug: forgets to scale inner weights by the outer ones."""
    out = {}
    for h, _w in H.entries:
        for k, v in h.entries:
            out[k] = sr.add(out.get(k, sr.zero), v)
    return wm_make(sr, out)


def broken_ops():
    from gsrel import wm_eta as e, wm_psi as p, wm_pushforward as pf

    return MonadOps(e, mu_drop_outer, p, pf)


# monad laws


def test_monad_laws_bool_all_exhaustive():
    reports = check_monad_laws("M", BOOL)
    laws = [r.law for r in reports]
    assert laws == [
        "monad/mu-unit-left", "monad/mu-unit-right", "monad/mu-assoc",
        "monad/eta-natural", "monad/mu-natural", "monad/psi-natural",
        "monad/lax-assoc", "monad/lax-unit-left", "monad/lax-unit-right",
        "monad/symmetry", "monad/commutative-1", "monad/commutative-2",
        "closure/eta", "closure/psi", "closure/mu", "closure/pushforward",
    ]
    for r in reports:
        assert r.status == "exhaustive_pass", (r.law, r.witness)


def test_monad_laws_infinite_carriers_sampled_green():
    for sr in (NAT, QPLUS):
        for r in check_monad_laws("M", sr, include_closure=False):
            assert r.passed, (sr.name, r.law, r.witness)


def test_planted_mu_bug_is_invisible_over_bool():
    # idempotent addition absorbs the missing scaling when all weights are 1
    reports = check_monad_laws("M", BOOL, ops=broken_ops())
    assert all(r.passed for r in reports)


def test_planted_mu_bug_caught_over_nat():
    reports = {r.law: r for r in check_monad_laws("M", NAT, ops=broken_ops(), include_closure=False)}
    failing = {law for law, r in reports.items() if not r.passed}
    assert "monad/mu-unit-right" in failing
    assert "monad/commutative-2" in failing
    # the witness re-runs: correct mu weights the inner map, broken mu does not
    w = reports["monad/mu-unit-right"].witness
    assert w is not None


def test_mu_unit_right_failure_is_real():
    # independent replay of the planted bug on the smallest collision case
    h1 = wm_make(NAT, {(0,): 1})
    h2 = wm_make(NAT, {(0,): 2})
    H = wm_make(NAT, {h1: 1, h2: 3})
    assert wm_mu(NAT, H).value(NAT, (0,)) == 1 + 3 * 2
    assert mu_drop_outer(NAT, H).value(NAT, (0,)) == 1 + 2


# closure of the sub-families


def test_affine_family_closed_everywhere():
    for name in CATALOG:
        sr = load_semiring(name)
        reps = variant_closure_reports("Ma", sr)
        for key, r in reps.items():
            assert r.passed, (name, key, r.witness)


def test_known_closure_refutations():
    cases = {
        ("Mm", QPLUS): {"mu"},
        ("Md", QPLUS): {"mu"},
        ("Md", GF2): {"mu"},
        ("Mi", NAT): {"mu", "pushforward"},
        ("Mi", GF2): {"mu", "pushforward"},
    }
    for (variant, sr), broken in cases.items():
        reps = variant_closure_reports(variant, sr)
        got = {key for key, r in reps.items() if not r.passed}
        assert got == broken, (variant, sr.name, got)
        for key in broken:
            assert reps[key].witness is not None


def test_mm_mu_refutation_replayed_by_hand():
    # H weights two multiplicative-idempotent-total maps by 1/2 each;
    # H itself is in Mm but mu(H) has total 1/2, and (1/2)^2 != 1/2
    half = Fraction(1, 2)
    empty = wm_make(QPLUS, {})
    point = wm_eta(QPLUS, ())
    H = wm_make(QPLUS, {empty: half, point: half})
    assert wm_classify(QPLUS, empty).in_Mm
    assert wm_classify(QPLUS, point).in_Mm
    assert wm_classify(QPLUS, H).in_Mm
    flat = wm_mu(QPLUS, H)
    assert not wm_classify(QPLUS, flat).in_Mm


def test_mi_pushforward_refutation_replayed_by_hand():
    # collapsing two invertible weights adds them; 1+1=2 has no inverse in nat
    h = wm_make(NAT, {(0,): 1, (1,): 1})
    assert wm_classify(NAT, h).in_Mi
    g = wm_pushforward(NAT, lambda k: (1,), h)
    assert not wm_classify(NAT, g).in_Mi


# classification oracles


def test_monad_flags_bool():
    mc = classify_monad("M", BOOL)
    assert mc.flag_values() == {
        "affine": False,
        "relevant": False,
        "domain_preserving": True,
        "mass_preserving": True,
        "unital_domain_preserving": True,
        "weakly_affine": False,
    }
    assert mc.consistent
    for fv in mc.flags.values():
        assert fv.well_posed


def test_monad_flags_mi_qplus_weakly_affine():
    mc = classify_monad("Mi", QPLUS)
    assert mc.flag_values()["weakly_affine"] is True
    assert mc.flags["weakly_affine"].well_posed
    assert mc.consistent


def test_monad_flags_mi_nat_oracle_disagreement():
    # the pointwise reading of affineness passes but the diagram one fails;
    # the family is not closed under pushforward, so the check is flagged
    # as not well-posed rather than silently preferring one answer
    mc = classify_monad("Mi", NAT)
    fv = mc.flags["affine"]
    assert fv.pointwise.passed is True
    assert fv.diagram.passed is False
    assert not fv.well_posed
    assert not fv.consistent
    assert not mc.consistent


def test_kleisli_flags_frozen_table():
    expect = {
        ("M", BOOL): dict(markov=False, restriction=False, domain_category=True,
                          mass_category=True, weakly_markov=False),
        ("Ma", BOOL): dict(markov=True, restriction=False, domain_category=True,
                           mass_category=True, weakly_markov=True),
        ("Mr", BOOL): dict(markov=False, restriction=True, domain_category=True,
                           mass_category=True, weakly_markov=False),
        ("M", NAT): dict(markov=False, restriction=False, domain_category=False,
                         mass_category=False, weakly_markov=False),
        ("Mi", QPLUS): dict(markov=False, restriction=False, domain_category=False,
                            mass_category=False, weakly_markov=True),
    }
    for (variant, sr), want in expect.items():
        kc = classify_kleisli(variant, sr)
        got = kc.flag_values()
        assert got.pop("gsm_axioms") is True
        assert got == want, (variant, sr.name)


def test_nat_domain_category_witness_reevaluates():
    kc = classify_kleisli("M", NAT)
    rep = kc.reports["domain_category"]
    assert rep.status == "counterexample"
    w = rep.witness
    f = wrel_from_doc(NAT, w["arrow"])
    lhs = wrel_compose(NAT, wrel_dom(NAT, f), f)
    assert lhs != f


def test_crosscheck_dom_paths_all_semirings():
    for name in CATALOG:
        sr = load_semiring(name)
        closed, monad_path = crosscheck_dom_paths(sr)
        assert closed.passed, (name, closed.witness)
        assert monad_path.passed, (name, monad_path.witness)


# suite wiring


def test_suite_entry_blocking_rules():
    ce = "counterexample"
    assert SuiteEntry("kleisli/markov", "Ma", "bool", ce, None, 1).blocking
    assert SuiteEntry("monad/mu-assoc", "M", "nat", ce, None, 1).blocking
    assert not SuiteEntry("closure/mu", "Mi", "nat", ce, None, 1).blocking
    assert not SuiteEntry("gated/dom-before-copy", "M", "nat", ce, None, 1).blocking
    assert not SuiteEntry("kleisli/markov", "Ma", "bool", "sampled_pass", None, 1).blocking


def test_suite_entry_doc_field_order_and_fractions():
    e = SuiteEntry("x/y", "M", "q+", "sampled_pass", {"v": Fraction(1, 2)}, 7)
    doc = e.to_doc()
    assert list(doc) == ["law", "variant", "semiring", "status", "witness", "checks_performed"]
    assert doc["witness"] == {"v": "1/2"}


EXPECTED_INFORMATIONAL = {
    ("closure/mu", "Mm", "nonneg-rational"),
    ("closure/mu", "Md", "nonneg-rational"),
    ("closure/mu", "Mm", "fuzzy-max-times"),
    ("closure/mu", "Md", "fuzzy-max-times"),
    ("closure/mu", "Md", "gf(2)"),
    ("closure/mu", "Mi", "nat"),
    ("closure/mu", "Mi", "gf(2)"),
    ("closure/pushforward", "Mi", "nat"),
    ("closure/pushforward", "Mi", "gf(2)"),
    ("closure/composition", "Mi", "gf(2)"),
    ("gated/oracle-affine-agreement", "Mi", "nat"),
    ("gated/oracle-affine-agreement", "Mi", "gf(2)"),
    ("gated/unital-vs-mass-category", "Mi", "nat"),
    ("gated/weakly-affine-and-unital-vs-affine", "Mi", "nat"),
    ("gated/weakly-affine-and-unital-vs-affine", "Mi", "gf(2)"),
    ("gated/markov-decomposition", "Mi", "gf(2)"),
    ("gated/dom-before-copy", "M", "nat"),
    ("gated/dom-before-copy", "Mi", "nat"),
    ("gated/dom-before-copy", "M", "nonneg-rational"),
    ("gated/dom-before-copy", "Mi", "nonneg-rational"),
    ("gated/dom-before-copy", "M", "fuzzy-max-times"),
}


def test_full_suite_zero_blocking_and_expected_findings():
    entries = run_theorem_suite()
    assert suite_failures(entries) == []
    found = {
        (e.law, e.variant, e.semiring)
        for e in entries
        if e.status == "counterexample"
    }
    assert found == EXPECTED_INFORMATIONAL


def test_suite_with_planted_bug_fails():
    entries = run_theorem_suite(
        semirings=("nat",), variants=("M",), include_monad_laws=True, ops=broken_ops()
    )
    bad = suite_failures(entries)
    assert bad
    assert any(e.law == "monad/commutative-2" for e in bad)
    # bool alone cannot see this bug
    entries = run_theorem_suite(
        semirings=("bool",), variants=("M",), include_monad_laws=True, ops=broken_ops()
    )
    assert suite_failures(entries) == []


def test_suite_gated_rows_never_block():
    entries = run_theorem_suite(semirings=("nat", "gf(2)"), variants=("M", "Mi"))
    for e in entries:
        if e.law.startswith(("gated/", "closure/")):
            assert not e.blocking


def test_gating_witness_names_failed_preconditions():
    entries = run_theorem_suite(semirings=("nat",), variants=("Mi",))
    row = next(e for e in entries if e.law == "gated/oracle-affine-agreement")
    assert "pushforward" in str(row.witness)


def test_jsonl_is_deterministic():
    a = entries_to_jsonl(run_theorem_suite(semirings=("bool", "gf(2)")))
    b = entries_to_jsonl(run_theorem_suite(semirings=("bool", "gf(2)")))
    assert a == b
    assert a.endswith("\n")
    import json

    first = json.loads(a.splitlines()[0])
    assert list(first) == ["law", "variant", "semiring", "status", "witness", "checks_performed"]


def test_table_rendering_marks_failures():
    entries = run_theorem_suite(semirings=("nat",), variants=("M", "Mi"))
    text = entries_to_table(entries)
    assert "closure/mu" in text
    assert "INFO" in text
    assert "FAIL" not in text


def test_constants():
    assert VARIANTS == ("M", "Mr", "Ma", "Mm", "Md", "Mi")
    assert len(MONAD_FLAGS) == 6
    assert set(CATALOG) == {
        "bool", "nat", "nonneg-rational", "fuzzy-max-min", "fuzzy-max-times", "gf(2)",
    }
