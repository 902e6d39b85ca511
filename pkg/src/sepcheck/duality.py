"""Fundamental classes, cup/cap products, duality checks, Bockstein, w1.

Cochains are packed GF(2) vectors over the lex-ordered simplex basis of
their degree.  Cup and cap use the front-face/back-face formulas in the
global vertex order; the conventions are paired so that
<x cup y, c> = <x, y cap c> holds on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitMatrix, dot, solve, vec_from_bits
from .complexes import (
    SimplicialComplex,
    Subcomplex,
    complementary_complex,
    is_certified_manifold,
)
from .homology import (
    betti,
    chain_complex,
    cohomology_basis,
    homology_basis,
    relative_chain_complex,
    betti_numbers,
)


@dataclass
class FundamentalClass:
    complex: SimplicialComplex
    degree: int
    chain: int  # packed over the lex basis of top simplices


@dataclass
class CohomologyClass:
    complex: SimplicialComplex
    degree: int
    cocycle: int  # packed cochain representative

    def value(self, s) -> int:
        idx = self.complex.simplex_index(self.degree).get(tuple(sorted(s)))
        if idx is None:
            raise ValueError(f"{s} is not a {self.degree}-simplex")
        return (self.cocycle >> idx) & 1


def _coboundary(k: SimplicialComplex, degree: int) -> BitMatrix:
    return chain_complex(k).boundary_map(degree + 1).transpose()


def is_cocycle(x: CohomologyClass) -> bool:
    return _coboundary(x.complex, x.degree).matvec(x.cocycle) == 0


def fundamental_class(k: SimplicialComplex, n: int) -> FundamentalClass:
    """Z2 fundamental class: the sum of all n-simplices, verified a cycle."""
    if not is_certified_manifold(k, n):
        raise ValueError(f"{k.name} is not a certified closed {n}-manifold")
    top = k.simplices_of_dim(n)
    chain = (1 << len(top)) - 1
    bd = chain_complex(k).boundary_map(n)
    assert bd.matvec(chain) == 0, "fundamental chain is not a cycle"
    return FundamentalClass(k, n, chain)


def cup(x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
    """Alexander-Whitney cup product on representatives."""
    if x.complex != y.complex:
        raise ValueError("cup product needs classes on the same complex")
    k = x.complex
    p, q = x.degree, y.degree
    xi = k.simplex_index(p)
    yi = k.simplex_index(q)
    out = 0
    for idx, s in enumerate(k.simplices_of_dim(p + q)):
        front = s[: p + 1]
        back = s[p:]
        xv = (x.cocycle >> xi[front]) & 1
        yv = (y.cocycle >> yi[back]) & 1
        out |= (xv & yv) << idx
    return CohomologyClass(k, p + q, out)


def cap(x: CohomologyClass, chain: int, n: int) -> int:
    """x cap c for a degree-n chain; evaluates x on back faces.

    Returns a packed chain of degree n - p.
    """
    k = x.complex
    p = x.degree
    if p > n:
        raise ValueError("cap degree exceeds chain degree")
    xi = k.simplex_index(p)
    out_index = k.simplex_index(n - p)
    out = 0
    for idx, s in enumerate(k.simplices_of_dim(n)):
        if not (chain >> idx) & 1:
            continue
        if (x.cocycle >> xi[s[n - p:]]) & 1:
            out ^= 1 << out_index[s[: n - p + 1]]
    return out


def evaluate(x: CohomologyClass, chain: int) -> int:
    """Kronecker pairing <x, c> over Z2 (chain in degree of x)."""
    return dot(x.cocycle, chain)


def _cap_matrix(k: SimplicialComplex, n: int, d: int):
    """Matrix of cap-with-[k]: H^{n-d} -> H_d in the canonical bases."""
    fc = fundamental_class(k, n)
    c = chain_complex(k)
    hco = cohomology_basis(c, n - d)
    hho = homology_basis(c, d)
    cols = []
    for rep in hco.representatives.vectors:
        z = cap(CohomologyClass(k, n - d, rep), fc.chain, n)
        cols.append(hho.coordinates(z))
    data = tuple(
        vec_from_bits(((cc >> i) & 1) for cc in cols) for i in range(hho.dim)
    )
    return BitMatrix(hho.dim, hco.dim, data), hco, hho


def poincare_dual(k: SimplicialComplex, n: int, h_coords: int, degree: int) -> CohomologyClass:
    """Cohomology class alpha of degree n-degree with alpha cap [k] = h."""
    mat, hco, hho = _cap_matrix(k, n, degree)
    a = solve(mat, h_coords)
    if a is None:
        raise RuntimeError("duality system inconsistent; input is not a closed manifold")
    cocycle = 0
    for i, rep in enumerate(hco.representatives.vectors):
        if (a >> i) & 1:
            cocycle ^= rep
    return CohomologyClass(k, n - degree, cocycle)


def poincare_duality_check(k: SimplicialComplex, n: int) -> bool:
    """Cap with [k] is an isomorphism H^d -> H_{n-d} in every degree."""
    from .gf2 import rank
    for d in range(n + 1):
        mat, hco, hho = _cap_matrix(k, n, n - d)
        if hco.dim != hho.dim or rank(mat) != hco.dim:
            return False
    return True


def alexander_duality_check(k: SimplicialComplex, n: int, b: Subcomplex) -> bool:
    """dim H^{n-i}(b) = dim H_i(Sd(k), complement of b) for every i."""
    if not is_certified_manifold(k, n):
        raise ValueError(f"{k.name} is not a certified closed {n}-manifold")
    comp = complementary_complex(k, b)
    sd = comp.parent
    rel = relative_chain_complex(sd, comp)
    rel_betti = betti_numbers(rel)
    if b.is_empty():
        bco = {}
    else:
        bc = b.to_complex()
        bco = betti_numbers(chain_complex(bc))  # field coefficients: H^d = H_d
    for i in range(n + 1):
        if bco.get(n - i, 0) != rel_betti.get(i, 0):
            return False
    return True


def sq1(x: CohomologyClass) -> CohomologyClass:
    """Bockstein of Z2 -> Z4 -> Z2 by lift, signed coboundary, halving."""
    k = x.complex
    p = x.degree
    xi = k.simplex_index(p)
    out = 0
    for idx, s in enumerate(k.simplices_of_dim(p + 1)):
        total = 0
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            lift = (x.cocycle >> xi[face]) & 1
            total += lift if i % 2 == 0 else -lift
        assert total % 2 == 0, "input cochain is not a mod-2 cocycle"
        out |= ((total // 2) & 1) << idx
    res = CohomologyClass(k, p + 1, out)
    assert is_cocycle(res), "Bockstein output failed the cocycle check"
    return res


def w1(k: SimplicialComplex, n: int) -> CohomologyClass:
    """First Stiefel-Whitney class via the degree-1 Wu class.

    v1 is the unique degree-1 class with <v1 cup x, [k]> = <Sq1 x, [k]>
    for every x in H^{n-1}; w1 = v1.
    """
    fc = fundamental_class(k, n)
    c = chain_complex(k)
    h1 = cohomology_basis(c, 1)
    hn1 = cohomology_basis(c, n - 1)
    rows = []
    rhs = 0
    for j, xr in enumerate(hn1.representatives.vectors):
        xcls = CohomologyClass(k, n - 1, xr)
        row = 0
        for i, er in enumerate(h1.representatives.vectors):
            val = evaluate(cup(CohomologyClass(k, 1, er), xcls), fc.chain)
            row |= val << i
        rows.append(row)
        rhs |= evaluate(sq1(xcls), fc.chain) << j
    m = BitMatrix(hn1.dim, h1.dim, tuple(rows))
    v = solve(m, rhs)
    if v is None:
        raise RuntimeError("Wu-class system inconsistent")
    from .gf2 import kernel_basis
    if kernel_basis(m).dim != 0 and h1.dim > 0:
        raise RuntimeError("Wu-class system underdetermined beyond duality kernel")
    cocycle = 0
    for i, er in enumerate(h1.representatives.vectors):
        if (v >> i) & 1:
            cocycle ^= er
    return CohomologyClass(k, 1, cocycle)


def cohomology_class_is_zero(x: CohomologyClass) -> bool:
    """Zero as a cohomology class (representative is a coboundary)."""
    basis = cohomology_basis(chain_complex(x.complex), x.degree)
    return basis.is_zero_class(x.cocycle)
