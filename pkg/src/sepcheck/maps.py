"""Simplicial maps, chain maps, and the combinatorial self-intersection set."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .gf2 import BitMatrix, vec_from_bits
from .complexes import (
    SimplicialComplex,
    Subcomplex,
    barycenter_label,
    barycentric_subdivide,
)


class SimplicialMap:
    """Vertex assignment between complexes sending simplices to simplices."""

    def __init__(self, name: str, domain: SimplicialComplex,
                 codomain: SimplicialComplex, vertex_map: dict[str, str]):
        self.name = name
        self.domain = domain
        self.codomain = codomain
        self.vertex_map = dict(vertex_map)
        missing = set(domain.vertices) - set(self.vertex_map)
        if missing:
            raise ValueError(f"vertex map not total; missing {sorted(missing)}")

    def image_simplex(self, s) -> tuple[str, ...]:
        return tuple(sorted({self.vertex_map[v] for v in s}))

    def is_injective_on(self, s) -> bool:
        return len({self.vertex_map[v] for v in s}) == len(s)

    def __repr__(self):
        return f"SimplicialMap({self.name!r}: {self.domain.name} -> {self.codomain.name})"

    # -- file format --------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "domain": self.domain.name,
            "codomain": self.codomain.name,
            "vertex_map": {v: self.vertex_map[v] for v in sorted(self.vertex_map)},
        }

    @staticmethod
    def from_json_dict(d: dict, complexes: dict[str, SimplicialComplex]) -> "SimplicialMap":
        for key in ("name", "domain", "codomain", "vertex_map"):
            if key not in d:
                raise ValueError(f"map file missing key {key!r}")
        if d["domain"] not in complexes or d["codomain"] not in complexes:
            raise ValueError("map references unknown complex")
        f = SimplicialMap(d["name"], complexes[d["domain"]], complexes[d["codomain"]], d["vertex_map"])
        if not validate(f):
            raise ValueError(f"vertex map of {d['name']!r} is not simplicial")
        return f

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh, indent=2)
            fh.write("\n")


def validate(f: SimplicialMap) -> bool:
    """True iff every domain simplex maps to a codomain simplex."""
    return all(f.image_simplex(s) in f.codomain.simplices
               for s in f.domain.simplices)


def _require_valid(f: SimplicialMap) -> None:
    if not validate(f):
        raise ValueError(f"{f.name} is not a simplicial map")


def image_subcomplex(f: SimplicialMap) -> Subcomplex:
    _require_valid(f)
    return Subcomplex(f.codomain, {f.image_simplex(s) for s in f.domain.simplices})


def chain_map(f: SimplicialMap, degree: int) -> BitMatrix:
    """Degree-d chain map over Z2; degenerate simplices map to zero."""
    _require_valid(f)
    dom = f.domain.simplices_of_dim(degree)
    cod_index = f.codomain.simplex_index(degree)
    cols = []
    for s in dom:
        img = f.image_simplex(s)
        cols.append(1 << cod_index[img] if len(img) == degree + 1 else 0)
    rows = len(cod_index)
    return BitMatrix(
        rows, len(cols),
        tuple(vec_from_bits(((c >> i) & 1) for c in cols) for i in range(rows)),
    )


@dataclass
class SelfIntersectionData:
    A: Subcomplex  # closure of the self-intersection set, in the domain
    B: Subcomplex  # f(A), in the codomain
    is_embedding: bool

    @property
    def dim_A(self) -> int:
        """dim A with the convention dim(empty) = -1."""
        return self.A.dim


def self_intersection(f: SimplicialMap) -> SelfIntersectionData:
    """Closure of {x : f^{-1}f(x) != x} as a subcomplex of the domain.

    A simplex carries double points when f collapses it, when a distinct
    simplex has the same nondegenerate image, or when its image sits inside
    the image of a collapsed simplex.
    """
    _require_valid(f)
    collapsed = [s for s in f.domain.simplices if not f.is_injective_on(s)]
    collapsed_images = {f.image_simplex(s) for s in collapsed}
    by_image: dict[tuple, list] = {}
    for s in f.domain.simplices:
        if f.is_injective_on(s):
            by_image.setdefault(f.image_simplex(s), []).append(s)

    chosen = set(collapsed)
    for img, group in by_image.items():
        if len(group) > 1:
            chosen.update(group)
        if any(set(img) <= set(c) for c in collapsed_images):
            chosen.update(group)

    a = Subcomplex.closure(f.domain, chosen)
    b = Subcomplex.closure(f.codomain, {f.image_simplex(s) for s in a.simplices})
    return SelfIntersectionData(a, b, is_embedding=a.is_empty())


def restriction(f: SimplicialMap, sub: Subcomplex, name: str | None = None) -> SimplicialMap:
    """f restricted to a subcomplex of its domain, as a map of complexes."""
    dom = sub.to_complex(name or f"{f.domain.name}|A")
    vm = {v: f.vertex_map[v] for v in dom.vertices}
    return SimplicialMap(f"{f.name}|", dom, f.codomain, vm)


def inclusion(sub: Subcomplex, name: str | None = None) -> SimplicialMap:
    """Inclusion of a subcomplex into its parent."""
    dom = sub.to_complex(name)
    return SimplicialMap(f"incl({dom.name})", dom, sub.parent,
                         {v: v for v in dom.vertices})


def map_into(domain_complex: SimplicialComplex, codomain: SimplicialComplex,
             name: str = "incl") -> SimplicialMap:
    """Identity-on-labels map between complexes sharing vertex labels."""
    return SimplicialMap(name, domain_complex, codomain,
                         {v: v for v in domain_complex.vertices})


def subdivide_map(f: SimplicialMap):
    """Induced simplicial map Sd(domain) -> Sd(codomain) on barycenters.

    Returns (Sd(f), Sd(domain), Sd(codomain)).
    """
    _require_valid(f)
    sd_dom, _ = barycentric_subdivide(f.domain)
    sd_cod, _ = barycentric_subdivide(f.codomain)
    vm = {
        barycenter_label(s): barycenter_label(f.image_simplex(s))
        for s in f.domain.simplices
    }
    g = SimplicialMap(f"Sd({f.name})", sd_dom, sd_cod, vm)
    return g, sd_dom, sd_cod
