"""Component-count engine for codimension-1 maps.

Implements the cohomological formula for the number of connected
components of the complement of the image, the Jordan-Brouwer and
disconnection corollaries, and the independent combinatorial oracle that
counts components of the complementary complex directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import rank
from .complexes import SimplicialComplex, Subcomplex, is_certified_manifold
from .homology import (
    betti,
    chain_complex,
    cohomology_basis,
    induced_map_from_chain_matrix,
)
from .maps import (
    SimplicialMap,
    chain_map,
    image_subcomplex,
    inclusion,
    restriction,
    self_intersection,
    validate,
)


class HypothesisError(ValueError):
    """A theorem hypothesis fails; carries the name of the failing one."""

    def __init__(self, name: str, message: str = ""):
        self.hypothesis = name
        super().__init__(message or f"hypothesis failed: {name}")


@dataclass
class SeparationReport:
    h1_Y_zero: bool
    A_proper: bool
    Y_minus_fA_connected: bool
    coker_dim: int
    beta0_formula: int
    beta0_oracle: int
    agreement: bool

    def to_json_dict(self) -> dict:
        return {
            "h1_Y_zero": self.h1_Y_zero,
            "A_proper": self.A_proper,
            "Y_minus_fA_connected": self.Y_minus_fA_connected,
            "coker_dim": self.coker_dim,
            "beta0_formula": self.beta0_formula,
            "beta0_oracle": self.beta0_oracle,
            "agreement": self.agreement,
        }


def complement_components_oracle(y: SimplicialComplex, f_img: Subcomplex) -> int:
    """Components of the complementary complex of f_img in y.

    Counted directly on the face poset: the vertices of the complementary
    complex are the simplices of y outside f_img and its edges are the
    comparable pairs, so a union-find over that poset gives the same count
    without materializing the subdivision.
    """
    if f_img.parent is not y and f_img.parent != y:
        raise ValueError("image is not a subcomplex of the codomain")
    from itertools import combinations

    excluded = f_img.simplices
    nodes = [s for s in y.simplices if s not in excluded]
    idx = {s: i for i, s in enumerate(nodes)}
    parent = list(range(len(nodes)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for s in nodes:
        i = idx[s]
        for d in range(1, len(s)):
            for f in combinations(s, d):
                j = idx.get(f)
                if j is not None:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
    return len({find(i) for i in range(len(nodes))})


def _require_codim1_certificates(f: SimplicialMap) -> int:
    """Certify domain as closed n-manifold, codomain as closed (n+1)-manifold."""
    if not validate(f):
        raise ValueError(f"{f.name} is not a simplicial map")
    n = f.domain.dim
    if not is_certified_manifold(f.domain, n):
        raise HypothesisError("domain_closed_manifold",
                              f"{f.domain.name} is not a certified closed {n}-manifold")
    if not is_certified_manifold(f.codomain, n + 1):
        raise HypothesisError("codomain_closed_manifold",
                              f"{f.codomain.name} is not a certified closed {n + 1}-manifold")
    return n


def check_hypotheses_thm32(f: SimplicialMap) -> dict:
    n = _require_codim1_certificates(f)
    y = f.codomain
    si = self_intersection(f)
    h1 = betti(y, 1) == 0
    a_proper = si.A.simplices != f.domain.simplices
    yfa = complement_components_oracle(y, si.B) == 1
    return {"h1_Y_zero": h1, "A_proper": a_proper, "Y_minus_fA_connected": yfa}


def _block_cohomology_map(f: SimplicialMap, degree: int):
    """(i^*, f|_A^*): H^d(X) + H^d(f(A)) -> H^d(A); returns the stacked matrix.

    Empty A gives a 0 x 0-ish matrix with coker dim 0.
    """
    si = self_intersection(f)
    if si.A.is_empty():
        from .gf2 import BitMatrix
        return BitMatrix.zero(0, 0), si
    a_cx = si.A.to_complex("A")
    b_cx = si.B.to_complex("B")
    h_a = cohomology_basis(chain_complex(a_cx), degree)
    h_x = cohomology_basis(chain_complex(f.domain), degree)
    h_b = cohomology_basis(chain_complex(b_cx), degree)

    incl_a = inclusion(si.A, "A")                      # A -> X
    i_star = induced_map_from_chain_matrix(
        chain_map(incl_a, degree).transpose(), h_x, h_a).matrix
    f_a = restriction(f, si.A, "A")                    # A -> Y, lands in B
    fa_to_b = SimplicialMap(f_a.name, f_a.domain, b_cx, f_a.vertex_map)
    fa_star = induced_map_from_chain_matrix(
        chain_map(fa_to_b, degree).transpose(), h_b, h_a).matrix
    return i_star.hstack(fa_star), si


def beta0_formula_thm32(f: SimplicialMap) -> SeparationReport:
    """beta0(Y - f(X)) = 2 + dim coker(i^* + f|_A^*), checked against the oracle."""
    n = _require_codim1_certificates(f)
    hyp = check_hypotheses_thm32(f)
    for name in ("h1_Y_zero", "A_proper", "Y_minus_fA_connected"):
        if not hyp[name]:
            raise HypothesisError(name)
    block, si = _block_cohomology_map(f, n - 1)
    if si.A.is_empty():
        coker = 0
    else:
        coker = block.rows - rank(block)
    formula = 2 + coker
    oracle = complement_components_oracle(f.codomain, image_subcomplex(f))
    return SeparationReport(
        h1_Y_zero=True, A_proper=True, Y_minus_fA_connected=True,
        coker_dim=coker, beta0_formula=formula, beta0_oracle=oracle,
        agreement=(formula == oracle),
    )


def eq1_identity_check(f: SimplicialMap) -> bool:
    """beta0(Y - f(X)) = 1 + dim H^n(f(X)); needs only H_1(Y;Z2) = 0."""
    n = _require_codim1_certificates(f)
    if betti(f.codomain, 1) != 0:
        raise HypothesisError("h1_Y_zero")
    img = image_subcomplex(f)
    img_cx = img.to_complex("f(X)")
    hn = cohomology_basis(chain_complex(img_cx), n).dim
    oracle = complement_components_oracle(f.codomain, img)
    return oracle == 1 + hn


def jordan_brouwer_check(f: SimplicialMap) -> bool:
    """Embedding into a codomain with H_1 = 0 separates into exactly 2 pieces."""
    _require_codim1_certificates(f)
    si = self_intersection(f)
    if not si.is_embedding:
        raise HypothesisError("is_embedding", "map has self-intersections")
    if betti(f.codomain, 1) != 0:
        raise HypothesisError("h1_Y_zero")
    report = beta0_formula_thm32(f)
    return report.beta0_formula == 2 and report.beta0_oracle == 2


def prop34_check(f: SimplicialMap) -> dict:
    """Disconnection when dim A < n: record of applicability and verdict.

    The disconnection assertion is only evaluated when the codimension-1
    certificates and H_1(Y;Z2) = 0 hold; otherwise the record reports
    applicability arithmetic alone.
    """
    if not validate(f):
        raise ValueError(f"{f.name} is not a simplicial map")
    n = f.domain.dim
    si = self_intersection(f)
    dim_a = si.dim_A
    applies = dim_a < n
    record = {"dimA": dim_a, "applies": applies, "disconnected": None}
    if not applies:
        return record
    if (is_certified_manifold(f.domain, n)
            and is_certified_manifold(f.codomain, n + 1)
            and betti(f.codomain, 1) == 0):
        oracle = complement_components_oracle(f.codomain, image_subcomplex(f))
        record["disconnected"] = oracle >= 2
        assert record["disconnected"], (
            "disconnection conclusion violated; this contradicts the theorem")
    return record
