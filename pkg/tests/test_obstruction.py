import pytest

from sepcheck.catalog import build_catalog
from sepcheck.duality import cohomology_class_is_zero
from sepcheck.maps import image_subcomplex
from sepcheck.obstruction import (
    cor317_check,
    dual_class_Uf,
    final_theorem_check,
    mu_solve,
    mv_sequence_check,
    obstruction_summary,
    theta,
    theta_pushforward_check,
    w1_of_map,
)
from sepcheck.separation import HypothesisError, complement_components_oracle

CATALOG = build_catalog()

# entries whose domain/codomain certificates support the codimension-1 pipeline
CODIM1_IDS = ("equator_s1_s2", "equator_s2_s3", "figure_eight_s1_s2",
              "triple_bouquet_s1_s2", "essential_circle_t2",
              "rp2_essential_circle")


def test_dual_class_vanishes_when_target_h1_is_zero():
    for cid in ("equator_s1_s2", "figure_eight_s1_s2"):
        assert cohomology_class_is_zero(dual_class_Uf(CATALOG[cid].map)), cid


def test_dual_class_of_essential_circle_nonzero():
    assert not cohomology_class_is_zero(dual_class_Uf(CATALOG["essential_circle_t2"].map))


def test_w1_vanishes_between_orientable_manifolds():
    for cid in ("equator_s1_s2", "equator_s2_s3",
                "figure_eight_s1_s2", "essential_circle_t2"):
        assert cohomology_class_is_zero(w1_of_map(CATALOG[cid].map)), cid


def test_w1_self_cancels_on_identity_of_projective_plane():
    assert cohomology_class_is_zero(w1_of_map(CATALOG["rp2_identity"].map))


def test_w1_nonzero_for_orientation_reversing_circle():
    assert not cohomology_class_is_zero(w1_of_map(CATALOG["rp2_essential_circle"].map))


def test_obstruction_class_vanishes_on_embeddings():
    for cid in ("equator_s1_s2", "equator_s2_s3",
                "essential_circle_t2", "rp2_essential_circle"):
        th, _ = theta(CATALOG[cid].map)
        assert th == 0, cid


def test_obstruction_class_vanishes_on_figure_eight():
    th, _ = theta(CATALOG["figure_eight_s1_s2"].map)
    assert th == 0


def test_pushforward_of_obstruction_vanishes_everywhere():
    for cid in CODIM1_IDS:
        assert theta_pushforward_check(CATALOG[cid].map), cid


def test_mu_embedding_gives_zero_space():
    sols = mu_solve(CATALOG["equator_s1_s2"].map)
    assert sols.space_dim == 0 and sols.particular == 0
    assert not sols.has_nonzero()


def test_mu_figure_eight_solutions():
    sols = mu_solve(CATALOG["figure_eight_s1_s2"].map)
    assert sols.space_dim == 2
    # full solution set is {(0,0), (1,1)}
    all_solutions = set()
    for mask in range(1 << sols.kernel.dim):
        v = sols.particular
        for i, kv in enumerate(sols.kernel.vectors):
            if (mask >> i) & 1:
                v ^= kv
        all_solutions.add(v)
    assert all_solutions == {0b00, 0b11}
    assert sols.has_nonzero() and not sols.all_nonzero()


def test_mu_double_wrap_forced_zero():
    # equal dimensions, so the obstruction class is supplied externally as 0
    sols = mu_solve(CATALOG["double_wrap_s1"].map, theta_coords=0)
    assert sols.space_dim == 1
    assert sols.particular == 0 and sols.kernel.dim == 0
    assert not sols.has_nonzero()


def test_low_dimensional_self_intersection_check():
    for cid in CODIM1_IDS + ("figure_eight_s1_s2",):
        assert cor317_check(CATALOG[cid].map), cid


def test_exact_sequence_embedding_collapses():
    rec = mv_sequence_check(CATALOG["equator_s1_s2"].map)
    assert rec["exact"] and rec["fbar_surjective"] and rec["ker_alpha_dim"] == 0


def test_exact_sequence_figure_eight():
    rec = mv_sequence_check(CATALOG["figure_eight_s1_s2"].map)
    assert rec["exact"] and not rec["fbar_surjective"]


def test_exact_sequence_triple_bouquet():
    rec = mv_sequence_check(CATALOG["triple_bouquet_s1_s2"].map)
    assert rec["exact"] and not rec["fbar_surjective"]


def test_exact_sequence_double_wrap():
    rec = mv_sequence_check(CATALOG["double_wrap_s1"].map)
    assert rec["exact"] and not rec["fbar_surjective"]


def test_nonzero_mu_with_zero_obstruction_blocks_surjectivity():
    for cid in CODIM1_IDS:
        f = CATALOG[cid].map
        th, _ = theta(f)
        mu = mu_solve(f, th)
        if th == 0 and mu.has_nonzero():
            assert not mv_sequence_check(f)["fbar_surjective"], cid


def test_final_theorem_figure_eight():
    rep = final_theorem_check(CATALOG["figure_eight_s1_s2"].map)
    assert rep.predicate_thm_final
    assert rep.beta0_oracle == 3 and rep.dim_Hm_image == 2
    assert rep.theta_is_zero and rep.theta_pushforward_zero
    assert rep.exists_nonzero_mu and rep.w1f_is_zero


def test_final_theorem_triple_bouquet():
    rep = final_theorem_check(CATALOG["triple_bouquet_s1_s2"].map)
    assert rep.predicate_thm_final
    assert rep.beta0_oracle == 4 and rep.dim_Hm_image == 3


def test_final_theorem_refuses_embedding_at_mu():
    with pytest.raises(HypothesisError) as exc:
        final_theorem_check(CATALOG["equator_s1_s2"].map)
    assert exc.value.hypothesis == "exists_nonzero_mu"
    f = CATALOG["equator_s1_s2"].map
    assert complement_components_oracle(f.codomain, image_subcomplex(f)) == 2


def test_final_theorem_refuses_torus_codomain():
    with pytest.raises(HypothesisError) as exc:
        final_theorem_check(CATALOG["essential_circle_t2"].map)
    assert exc.value.hypothesis == "h1_N_zero"


def test_summary_reports_without_gating():
    rep = obstruction_summary(CATALOG["equator_s1_s2"].map)
    assert not rep.predicate_thm_final and rep.beta0_oracle == 2
    assert rep.Uf_is_zero and rep.w1f_is_zero


def test_summary_json_keys_are_stable():
    rep = obstruction_summary(CATALOG["figure_eight_s1_s2"].map)
    assert list(rep.to_json_dict()) == [
        "Uf_is_zero", "w1f_is_zero", "theta_is_zero", "theta_pushforward_zero",
        "exists_nonzero_mu", "predicate_thm_final", "beta0_oracle", "dim_Hm_image"]
