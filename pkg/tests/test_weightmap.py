"""Weight maps: canonical form, monad operations, sub-family membership."""
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gsrel import (
    FinSet,
    WeightMap,
    WeightMapError,
    derive_rng,
    enumerate_maps,
    in_variant,
    load_semiring,
    sample_maps,
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
    word_size,
)

BOOL = load_semiring("bool")
NAT = load_semiring("nat")
QPLUS = load_semiring("q+")
GF2 = load_semiring("gf(2)")
FMM = load_semiring("fuzzy-max-min")

X2 = (FinSet("X", 2),)
VARIANTS = ("M", "Mr", "Ma", "Mm", "Md", "Mi")


def all_bool_maps(word):
    keys = list(word_elements(word))
    out = []
    for n in range(len(keys) + 1):
        for sup in itertools.combinations(keys, n):
            out.append(wm_make(BOOL, {k: 1 for k in sup}))
    return out


def test_canonical_form_drops_zeros_and_sorts():
    h = wm_make(NAT, [((1,), 0), ((0,), 3)])
    assert h.entries == (((0,), 3),)
    g = wm_make(NAT, {(0,): 3, (1,): 0})
    assert h == g
    assert hash(h) == hash(g)


def test_duplicate_keys_rejected():
    with pytest.raises(WeightMapError):
        wm_make(NAT, [((0,), 1), ((0,), 2)])


def test_immutable():
    h = wm_eta(BOOL, (0,))
    with pytest.raises(AttributeError):
        h.entries = ()


def test_value_defaults_to_zero():
    h = wm_eta(NAT, (0,))
    assert h.value(NAT, (1,)) == 0
    assert h.value(NAT, (0,)) == 1


def test_word_basics():
    assert word_size(()) == 1
    assert list(word_elements(())) == [()]
    assert word_size(X2 + X2) == 4
    with pytest.raises(WeightMapError):
        FinSet("bad", -1)
    with pytest.raises(WeightMapError):
        FinSet("bad", 2, ("a",))
    with pytest.raises(WeightMapError):
        FinSet("bad", 2, ("a", "a"))


# monad operations, brute-forced on small carriers


def test_eta_then_mu_is_identity_bool_exhaustive():
    for h in all_bool_maps(X2):
        # mu(eta(h)) == h, with eta at the outer level
        assert wm_mu(BOOL, wm_make(BOOL, [(h, BOOL.one)])) == h


def test_mu_after_mapped_eta_is_identity():
    for sr, vals in ((BOOL, (1,)), (NAT, (1, 2, 3)), (QPLUS, (Fraction(1, 2), Fraction(2),))):
        for v in vals:
            h = wm_make(sr, {(0,): v, (1,): sr.one})
            H = wm_make(sr, [(wm_eta(sr, k), w) for k, w in h.entries])
            assert wm_mu(sr, H) == h


def test_mu_associativity_bool_small_support():
    inner = all_bool_maps(X2)
    level2 = [wm_make(BOOL, {h: 1 for h in sup})
              for n in range(3)
              for sup in itertools.combinations(inner, n)]
    for n in range(3):
        for sup in itertools.combinations(level2, n):
            T = wm_make(BOOL, {H: 1 for H in sup})
            left = wm_mu(BOOL, wm_mu(BOOL, T))
            flattened = {}
            for H, w in T.entries:
                m = wm_mu(BOOL, H)
                flattened[m] = BOOL.add(flattened.get(m, BOOL.zero), w)
            right = wm_mu(BOOL, wm_make(BOOL, flattened))
            assert left == right


def test_mu_associativity_nat_sampled():
    rng = derive_rng(5, "mu-assoc")
    keys = list(word_elements(X2))
    for _ in range(200):
        def rand_map():
            return wm_make(NAT, {k: rng.randrange(0, 3) for k in keys})
        def rand_nested():
            return wm_make(NAT, {rand_map(): rng.randrange(0, 3) for _ in range(rng.randrange(3))})
        T = wm_make(NAT, {rand_nested(): rng.randrange(0, 3) for _ in range(rng.randrange(3))})
        left = wm_mu(NAT, wm_mu(NAT, T))
        flattened = {}
        for H, w in T.entries:
            m = wm_mu(NAT, H)
            flattened[m] = NAT.add(flattened.get(m, NAT.zero), w)
        right = wm_mu(NAT, wm_make(NAT, flattened))
        assert left == right


def test_mu_weights_multiply_along_the_outer_layer():
    # mu over nat must scale inner weights by the outer one, then add collisions
    h1 = wm_make(NAT, {(0,): 1})
    h2 = wm_make(NAT, {(0,): 2})
    H = wm_make(NAT, {h1: 3, h2: 5})
    assert wm_mu(NAT, H) == wm_make(NAT, {(0,): 3 * 1 + 5 * 2})


def test_psi_on_points_is_eta_of_pair():
    for x in word_elements(X2):
        for y in word_elements(X2):
            assert wm_psi(BOOL, wm_eta(BOOL, x), wm_eta(BOOL, y)) == wm_eta(BOOL, x + y)


def test_psi_total_is_product_of_totals():
    rng = derive_rng(9, "psi-total")
    keys = list(word_elements(X2))
    for _ in range(100):
        h = wm_make(NAT, {k: rng.randrange(0, 4) for k in keys})
        k = wm_make(NAT, {kk: rng.randrange(0, 4) for kk in keys})
        assert wm_total(NAT, wm_psi(NAT, h, k)) == NAT.mul(wm_total(NAT, h), wm_total(NAT, k))


def test_psi0_is_unit_scalar():
    assert wm_psi0(BOOL) == wm_eta(BOOL, ())
    assert wm_psi(BOOL, wm_psi0(BOOL), wm_psi0(BOOL)) == wm_psi0(BOOL)


def test_pushforward_sums_over_fibers():
    h = wm_make(NAT, {(0,): 2, (1,): 3})
    g = wm_pushforward(NAT, lambda k: (0,), h)
    assert g == wm_make(NAT, {(0,): 5})


def test_pushforward_checks_codomain():
    h = wm_eta(NAT, (0,))
    with pytest.raises(WeightMapError):
        wm_pushforward(NAT, lambda k: (7,), h, cod=X2)


def test_total_of_empty_is_zero():
    assert wm_total(NAT, wm_empty(NAT)) == 0
    assert wm_total(BOOL, wm_empty(BOOL)) == BOOL.zero


# sub-family membership


def test_classify_known_maps():
    f = wm_classify(BOOL, wm_empty(BOOL))
    assert (f.in_Mr, f.in_Ma, f.in_Mm, f.in_Md, f.in_Mi) == (True, False, True, True, False)

    for sr in (BOOL, NAT, QPLUS, GF2, FMM):
        f = wm_classify(sr, wm_eta(sr, (0,)))
        assert (f.in_Mr, f.in_Ma, f.in_Mm, f.in_Md, f.in_Mi) == (True, True, True, True, True)

    f = wm_classify(NAT, wm_make(NAT, {(0,): 2}))
    assert (f.in_Mr, f.in_Ma, f.in_Mm, f.in_Md, f.in_Mi) == (False, False, False, False, False)

    half = Fraction(1, 2)
    f = wm_classify(QPLUS, wm_make(QPLUS, {(0,): half, (1,): half}))
    assert (f.in_Mr, f.in_Ma, f.in_Mm, f.in_Md, f.in_Mi) == (False, True, True, True, True)

    f = wm_classify(FMM, wm_make(FMM, {(0,): half}))
    assert (f.in_Mr, f.in_Ma, f.in_Mm, f.in_Md, f.in_Mi) == (True, False, True, True, False)


def test_member_and_in_variant_agree():
    for sr in (BOOL, NAT, GF2):
        for h in sample_maps(sr, X2, "M", seed=3, n=40):
            flags = wm_classify(sr, h)
            for variant in VARIANTS:
                assert in_variant(sr, h, variant) == flags.member(variant)


def test_enumerate_counts_bool_and_gf2():
    # hand-derived: maps X2 -> carrier with zero weights dropped
    counts_bool = {v: len(enumerate_maps(BOOL, X2, v)) for v in VARIANTS}
    assert counts_bool == {"M": 4, "Mr": 3, "Ma": 3, "Mm": 4, "Md": 4, "Mi": 3}
    counts_gf2 = {v: len(enumerate_maps(GF2, X2, v)) for v in VARIANTS}
    assert counts_gf2 == {"M": 4, "Mr": 3, "Ma": 2, "Mm": 4, "Md": 3, "Mi": 3}


def test_enumerate_matches_classify():
    for sr in (BOOL, GF2):
        all_maps = enumerate_maps(sr, X2, "M")
        for variant in VARIANTS[1:]:
            expected = {h for h in all_maps if wm_classify(sr, h).member(variant)}
            assert set(enumerate_maps(sr, X2, variant)) == expected


def test_variant_inclusions_sampled():
    # Mr inside Mm; Ma inside Md inside Mm
    for name in ("bool", "nat", "q+", "fuzzy-max-min", "fuzzy-max-times", "gf(2)"):
        sr = load_semiring(name)
        for h in sample_maps(sr, X2, "M", seed=11, n=60):
            f = wm_classify(sr, h)
            if f.in_Mr:
                assert f.in_Mm
            if f.in_Ma:
                assert f.in_Md
            if f.in_Md:
                assert f.in_Mm


def test_sample_maps_respects_variant():
    for variant in VARIANTS:
        for h in sample_maps(NAT, X2, variant, seed=2, n=30):
            assert in_variant(NAT, h, variant)


def test_antipode():
    s = wm_make(QPLUS, {(): Fraction(2, 3)})
    assert wm_antipode(QPLUS, s) == wm_make(QPLUS, {(): Fraction(3, 2)})
    with pytest.raises(WeightMapError):
        wm_antipode(NAT, wm_make(NAT, {(): 2}))
    with pytest.raises(WeightMapError):
        wm_antipode(QPLUS, wm_empty(QPLUS))
    with pytest.raises(WeightMapError):
        wm_antipode(QPLUS, wm_make(QPLUS, {(0,): Fraction(1)}))


def test_derive_rng_is_stable_and_tag_sensitive():
    a = [derive_rng(0, "x").random() for _ in range(3)]
    b = [derive_rng(0, "x").random() for _ in range(3)]
    assert a == b
    assert derive_rng(0, "x").random() != derive_rng(0, "y").random()
    assert derive_rng(0, "x").random() != derive_rng(1, "x").random()


@st.composite
def nat_weight_items(draw):
    keys = list(word_elements(X2))
    return [(k, draw(st.integers(min_value=0, max_value=5))) for k in keys]


@given(nat_weight_items())
@settings(max_examples=60)
def test_canonicalization_is_order_insensitive(items):
    h = wm_make(NAT, items)
    g = wm_make(NAT, list(reversed(items)))
    assert h == g
    assert all(v != 0 for _, v in h.entries)
