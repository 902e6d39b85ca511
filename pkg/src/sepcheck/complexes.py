"""Finite abstract simplicial complexes.

Vertex labels are strings under the global lexicographic order; every
simplex is stored as a sorted tuple of labels and the simplex set is
closed under taking faces.  Complexes are immutable after construction.
"""

from __future__ import annotations

import json
from itertools import combinations

Simplex = tuple[str, ...]


class SimplicialComplex:
    """Finite abstract simplicial complex with totally ordered string vertices."""

    def __init__(self, name: str, simplices, *, _closed: bool = False):
        simps = {tuple(sorted(s)) for s in simplices}
        for s in simps:
            if len(set(s)) != len(s):
                raise ValueError(f"duplicate vertex inside simplex {s}")
            if not s:
                raise ValueError("empty simplex not allowed")
        if not _closed:
            closure = set()
            for s in simps:
                for d in range(1, len(s) + 1):
                    closure.update(combinations(s, d))
            simps = closure
        self.name = name
        self.simplices: frozenset[Simplex] = frozenset(simps)
        self.vertices: tuple[str, ...] = tuple(sorted({v for s in simps for v in s}))
        self.dim = max((len(s) - 1 for s in simps), default=-1)
        self._by_dim: dict[int, list[Simplex]] = {}
        self._index: dict[int, dict[Simplex, int]] = {}
        # Facts inherited through barycentric subdivision (both are
        # subdivision invariants): certified closed-manifold dimensions
        # and Z2 Betti numbers.
        self._manifold_dims: set[int] = set()
        self._betti: dict[int, int] = {}

    @staticmethod
    def from_maximal_simplices(name: str, maximal) -> "SimplicialComplex":
        return SimplicialComplex(name, [tuple(s) for s in maximal])

    def simplices_of_dim(self, d: int) -> list[Simplex]:
        """Lex-sorted list of d-simplices (canonical basis order)."""
        if d not in self._by_dim:
            self._by_dim[d] = sorted(s for s in self.simplices if len(s) == d + 1)
        return self._by_dim[d]

    def simplex_index(self, d: int) -> dict[Simplex, int]:
        if d not in self._index:
            self._index[d] = {s: i for i, s in enumerate(self.simplices_of_dim(d))}
        return self._index[d]

    def has_simplex(self, s) -> bool:
        return tuple(sorted(s)) in self.simplices

    def maximal_simplices(self) -> list[Simplex]:
        out = []
        for s in self.simplices:
            if not any(s != t and set(s) <= set(t) for t in self.simplices):
                out.append(s)
        return sorted(out)

    def euler_characteristic(self) -> int:
        chi = 0
        for s in self.simplices:
            chi += -1 if len(s) % 2 == 0 else 1
        return chi

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.name == other.name
            and self.simplices == other.simplices
        )

    def __hash__(self):
        return hash((self.name, self.simplices))

    def __repr__(self):
        return f"SimplicialComplex({self.name!r}, dim={self.dim}, #simplices={len(self.simplices)})"

    # -- file format --------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "maximal_simplices": [list(s) for s in self.maximal_simplices()],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "SimplicialComplex":
        if not isinstance(d.get("name"), str) or "maximal_simplices" not in d:
            raise ValueError("complex file must have 'name' and 'maximal_simplices'")
        return SimplicialComplex.from_maximal_simplices(d["name"], d["maximal_simplices"])

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh, indent=2)
            fh.write("\n")

    @staticmethod
    def load(path) -> "SimplicialComplex":
        with open(path) as fh:
            return SimplicialComplex.from_json_dict(json.load(fh))


class Subcomplex:
    """A face-closed subset of a parent complex's simplices."""

    def __init__(self, parent: SimplicialComplex, simplices):
        simps = frozenset(tuple(sorted(s)) for s in simplices)
        for s in simps:
            if s not in parent.simplices:
                raise ValueError(f"{s} is not a simplex of {parent.name}")
            for d in range(1, len(s)):
                for f in combinations(s, d):
                    if f not in simps:
                        raise ValueError(f"subcomplex not face-closed at {f}")
        self.parent = parent
        self.simplices = simps
        self.dim = max((len(s) - 1 for s in simps), default=-1)

    @staticmethod
    def closure(parent: SimplicialComplex, simplices) -> "Subcomplex":
        full = set()
        for s in simplices:
            s = tuple(sorted(s))
            for d in range(1, len(s) + 1):
                full.update(combinations(s, d))
        return Subcomplex(parent, full)

    def to_complex(self, name: str | None = None) -> SimplicialComplex:
        return SimplicialComplex(name or f"{self.parent.name}|sub", self.simplices, _closed=True)

    def is_empty(self) -> bool:
        return not self.simplices

    def __eq__(self, other):
        return (
            isinstance(other, Subcomplex)
            and self.parent == other.parent
            and self.simplices == other.simplices
        )

    def __hash__(self):
        return hash((self.parent.name, self.simplices))


def euler_characteristic(k: SimplicialComplex) -> int:
    return k.euler_characteristic()


def connected_components(k) -> int:
    """Number of components of the vertex-edge graph (isolated vertices count)."""
    if isinstance(k, Subcomplex):
        verts = [s[0] for s in k.simplices if len(s) == 1]
        edges = [s for s in k.simplices if len(s) == 2]
    else:
        verts = list(k.vertices)
        edges = k.simplices_of_dim(1)
    return _count_components(verts, edges)


def _count_components(verts, edges) -> int:
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in verts})


def barycenter_label(s: Simplex) -> str:
    return "⟨" + ".".join(s) + "⟩"


def _chains(k) -> list[tuple[Simplex, ...]]:
    """All nonempty chains of the face poset, memoized per top element."""
    simplices = sorted(k.simplices, key=len) if isinstance(k, SimplicialComplex) else sorted(k, key=len)
    present = set(simplices)
    ending: dict[Simplex, list[tuple[Simplex, ...]]] = {}
    for s in simplices:
        chains = [(s,)]
        for d in range(1, len(s)):
            for f in combinations(s, d):
                if f in present:
                    chains.extend(c + (s,) for c in ending[f])
        ending[s] = chains
    out = []
    for v in ending.values():
        out.extend(v)
    return out


def barycentric_subdivide(k: SimplicialComplex):
    """First barycentric subdivision.

    Returns (Sd(k), dictionary new-vertex-label -> original simplex).
    """
    vertex_of = {}
    sd_simplices = []
    for chain in _chains(k):
        labels = tuple(sorted(barycenter_label(s) for s in chain))
        sd_simplices.append(labels)
        if len(chain) == 1:
            vertex_of[barycenter_label(chain[0])] = chain[0]
    sd = SimplicialComplex(f"Sd({k.name})", sd_simplices, _closed=True)
    sd._manifold_dims = set(k._manifold_dims)
    sd._betti = dict(k._betti)
    return sd, vertex_of


def subdivided_subcomplex(sd: SimplicialComplex, sub) -> Subcomplex:
    """Image of a subcomplex under barycentric subdivision, inside Sd(parent)."""
    simps = sub.simplices if isinstance(sub, Subcomplex) else sub
    keep = {barycenter_label(s) for s in simps}
    chosen = [s for s in sd.simplices if all(v in keep for v in s)]
    return Subcomplex(sd, chosen)


def complementary_complex(k: SimplicialComplex, f: Subcomplex) -> Subcomplex:
    """Full subcomplex of Sd(k) on barycenters of simplices outside f.

    Its body deformation retracts onto |k| - |f|.
    """
    if f.parent is not k and f.parent != k:
        raise ValueError("subcomplex does not belong to the given complex")
    sd, vertex_of = barycentric_subdivide(k)
    banned = {barycenter_label(s) for s in f.simplices}
    chosen = [s for s in sd.simplices if not any(v in banned for v in s)]
    return Subcomplex(sd, chosen)


def link(k: SimplicialComplex, s) -> SimplicialComplex:
    s = tuple(sorted(s))
    if s not in k.simplices:
        raise ValueError(f"{s} is not a simplex of {k.name}")
    sset = set(s)
    out = []
    for t in k.simplices:
        if sset.isdisjoint(t) and k.has_simplex(tuple(sorted(set(t) | sset))):
            out.append(t)
    return SimplicialComplex(f"lk({k.name},{'.'.join(s)})", out, _closed=True)


def manifold_certificate(k: SimplicialComplex, n: int):
    """Closed Z2-homology n-manifold check.

    Pure of dimension n, every (n-1)-simplex has exactly two cofacets, and
    every link has the Z2-reduced homology of a sphere of the right
    dimension.  Returns a dict verdict with the violating simplices.
    """
    from .homology import chain_complex, betti_numbers

    failures = []
    if k.dim != n or not k.simplices:
        return {"is_closed_z2_homology_n_manifold": False,
                "failures": sorted(k.simplices, key=lambda s: (len(s), s))[:1]}

    top = k.simplices_of_dim(n)
    covered = set()
    for t in top:
        for d in range(1, len(t) + 1):
            covered.update(combinations(t, d))
    for s in k.simplices:
        if s not in covered:
            failures.append(s)  # not pure

    for s in k.simplices_of_dim(n - 1):
        cofacets = sum(1 for t in top if set(s) <= set(t))
        if cofacets != 2:
            failures.append(s)

    for s in sorted(k.simplices, key=lambda x: (len(x), x)):
        d = n - len(s)  # expected sphere dimension of the link
        lk = link(k, s)
        if d < 0:
            if lk.simplices:
                failures.append(s)
            continue
        if not lk.simplices:
            failures.append(s)
            continue
        b = betti_numbers(chain_complex(lk))
        want = [2 if d == 0 else 1] + [0] * max(lk.dim, d)
        if d > 0:
            want[d] = 1
        got = [b.get(i, 0) for i in range(len(want))]
        if got != want:
            failures.append(s)

    ok = not failures
    if ok:
        k._manifold_dims.add(n)
    return {"is_closed_z2_homology_n_manifold": ok, "failures": sorted(set(failures), key=lambda s: (len(s), s))}


def is_certified_manifold(k: SimplicialComplex, n: int) -> bool:
    """Certificate with caching; subdivisions inherit their source's verdict."""
    if n in k._manifold_dims:
        return True
    return manifold_certificate(k, n)["is_closed_z2_homology_n_manifold"]
