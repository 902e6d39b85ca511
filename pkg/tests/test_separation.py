import pytest

from sepcheck.catalog import build_catalog, octahedron
from sepcheck.complexes import Subcomplex
from sepcheck.maps import image_subcomplex, subdivide_map
from sepcheck.separation import (
    HypothesisError,
    beta0_formula_thm32,
    check_hypotheses_thm32,
    complement_components_oracle,
    eq1_identity_check,
    jordan_brouwer_check,
    prop34_check,
)

CATALOG = build_catalog()


def test_oracle_empty_image_connected_codomain():
    k = octahedron()
    assert complement_components_oracle(k, Subcomplex(k, [])) == 1


def test_oracle_equator_two_components():
    k = octahedron()
    equator = Subcomplex.closure(k, [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
    assert complement_components_oracle(k, equator) == 2


def test_oracle_figure_eight_three_components():
    f = CATALOG["figure_eight_s1_s2"].map
    assert complement_components_oracle(f.codomain, image_subcomplex(f)) == 3


def test_oracle_triple_bouquet_four_components():
    f = CATALOG["triple_bouquet_s1_s2"].map
    assert complement_components_oracle(f.codomain, image_subcomplex(f)) == 4


def test_hypotheses_equator_all_true():
    hyp = check_hypotheses_thm32(CATALOG["equator_s1_s2"].map)
    assert hyp == {"h1_Y_zero": True, "A_proper": True, "Y_minus_fA_connected": True}


def test_hypotheses_figure_eight_all_true():
    hyp = check_hypotheses_thm32(CATALOG["figure_eight_s1_s2"].map)
    assert hyp == {"h1_Y_zero": True, "A_proper": True, "Y_minus_fA_connected": True}


def test_hypotheses_torus_fails_h1():
    hyp = check_hypotheses_thm32(CATALOG["essential_circle_t2"].map)
    assert not hyp["h1_Y_zero"]


def test_formula_equator_s1_s2():
    rep = beta0_formula_thm32(CATALOG["equator_s1_s2"].map)
    assert (rep.coker_dim, rep.beta0_formula, rep.beta0_oracle) == (0, 2, 2)
    assert rep.agreement


def test_formula_equator_s2_s3():
    rep = beta0_formula_thm32(CATALOG["equator_s2_s3"].map)
    assert (rep.coker_dim, rep.beta0_formula, rep.beta0_oracle) == (0, 2, 2)
    assert rep.agreement


def test_formula_figure_eight():
    rep = beta0_formula_thm32(CATALOG["figure_eight_s1_s2"].map)
    assert (rep.coker_dim, rep.beta0_formula, rep.beta0_oracle) == (1, 3, 3)
    assert rep.agreement


def test_formula_triple_bouquet():
    rep = beta0_formula_thm32(CATALOG["triple_bouquet_s1_s2"].map)
    assert (rep.coker_dim, rep.beta0_formula, rep.beta0_oracle) == (2, 4, 4)
    assert rep.agreement


def test_formula_report_json_keys_are_stable():
    rep = beta0_formula_thm32(CATALOG["figure_eight_s1_s2"].map)
    assert list(rep.to_json_dict()) == [
        "h1_Y_zero", "A_proper", "Y_minus_fA_connected",
        "coker_dim", "beta0_formula", "beta0_oracle", "agreement"]


def test_refusal_torus_names_h1():
    with pytest.raises(HypothesisError) as exc:
        beta0_formula_thm32(CATALOG["essential_circle_t2"].map)
    assert exc.value.hypothesis == "h1_Y_zero"


def test_refusal_equal_dimensions_names_certificate():
    with pytest.raises(HypothesisError) as exc:
        beta0_formula_thm32(CATALOG["double_wrap_s1"].map)
    assert exc.value.hypothesis == "codomain_closed_manifold"


def test_torus_oracle_is_one():
    f = CATALOG["essential_circle_t2"].map
    assert complement_components_oracle(f.codomain, image_subcomplex(f)) == 1


def test_jordan_brouwer_embeddings():
    assert jordan_brouwer_check(CATALOG["equator_s1_s2"].map)
    assert jordan_brouwer_check(CATALOG["equator_s2_s3"].map)


def test_jordan_brouwer_rejects_non_embedding():
    with pytest.raises(HypothesisError) as exc:
        jordan_brouwer_check(CATALOG["figure_eight_s1_s2"].map)
    assert exc.value.hypothesis == "is_embedding"


def test_jordan_brouwer_survives_subdivision():
    f, _, _ = subdivide_map(CATALOG["equator_s1_s2"].map)
    assert jordan_brouwer_check(f)


def test_prop_disconnection_records():
    rec = prop34_check(CATALOG["figure_eight_s1_s2"].map)
    assert rec == {"dimA": 0, "applies": True, "disconnected": True}
    rec = prop34_check(CATALOG["equator_s1_s2"].map)
    assert rec == {"dimA": -1, "applies": True, "disconnected": True}
    rec = prop34_check(CATALOG["double_wrap_s1"].map)
    assert rec["dimA"] == 1 and not rec["applies"] and rec["disconnected"] is None


def test_eq1_identity_on_simply_connected_codomains():
    for cid in ("equator_s1_s2", "equator_s2_s3",
                "figure_eight_s1_s2", "triple_bouquet_s1_s2"):
        assert eq1_identity_check(CATALOG[cid].map), cid


def test_eq1_refuses_torus_codomain():
    with pytest.raises(HypothesisError):
        eq1_identity_check(CATALOG["essential_circle_t2"].map)


def test_oracle_subdivision_stability():
    for cid in ("equator_s1_s2", "equator_s2_s3",
                "figure_eight_s1_s2", "triple_bouquet_s1_s2",
                "essential_circle_t2"):
        f = CATALOG[cid].map
        base = complement_components_oracle(f.codomain, image_subcomplex(f))
        g, _, _ = subdivide_map(f)
        after = complement_components_oracle(g.codomain, image_subcomplex(g))
        assert after == base, cid


def test_formula_agreement_survives_subdivision():
    for cid in ("equator_s1_s2", "figure_eight_s1_s2"):
        g, _, _ = subdivide_map(CATALOG[cid].map)
        rep = beta0_formula_thm32(g)
        assert rep.agreement
        assert rep.beta0_formula == CATALOG[cid].expected["beta0_formula"]
