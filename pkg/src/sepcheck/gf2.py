"""Exact dense linear algebra over GF(2).

Matrices store one Python integer per row, bit j of row i being the
(i, j) entry, so row operations are single XORs on packed words.
Vectors are plain integers with the same bit convention; every routine
that needs a vector length takes it from the matrix it accompanies.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


def vec_from_bits(bits) -> int:
    """Pack an iterable of 0/1 entries (index 0 = bit 0) into an int."""
    v = 0
    for j, b in enumerate(bits):
        if b & 1:
            v |= 1 << j
    return v


def vec_to_bits(v: int, length: int) -> list[int]:
    return [(v >> j) & 1 for j in range(length)]


def dot(u: int, v: int) -> int:
    """GF(2) inner product of two packed vectors."""
    return (u & v).bit_count() & 1


@dataclass(frozen=True)
class BitMatrix:
    """Immutable dense matrix over GF(2); ``data[i]`` packs row i."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data")
        mask = (1 << self.cols) - 1
        for r in self.data:
            if r & ~mask:
                raise ValueError("row has bits beyond declared width")

    @staticmethod
    def zero(rows: int, cols: int) -> "BitMatrix":
        return BitMatrix(rows, cols, (0,) * rows)

    @staticmethod
    def identity(n: int) -> "BitMatrix":
        return BitMatrix(n, n, tuple(1 << i for i in range(n)))

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> "BitMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return BitMatrix(len(rows), cols, tuple(vec_from_bits(r) for r in rows))

    def get(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [vec_to_bits(r, self.cols) for r in self.data]

    def matvec(self, x: int) -> int:
        """Apply to a packed column vector; returns a packed vector of length rows."""
        out = 0
        for i, row in enumerate(self.data):
            if (row & x).bit_count() & 1:
                out |= 1 << i
        return out

    def matmul(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matmul")
        out = []
        for row in self.data:
            acc = 0
            r = row
            while r:
                j = (r & -r).bit_length() - 1
                acc ^= other.data[j]
                r &= r - 1
            out.append(acc)
        return BitMatrix(self.rows, other.cols, tuple(out))

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, row in enumerate(self.data):
            r = row
            while r:
                j = (r & -r).bit_length() - 1
                out[j] |= 1 << i
                r &= r - 1
        return BitMatrix(self.cols, self.rows, tuple(out))

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        data = tuple(a | (b << self.cols) for a, b in zip(self.data, other.data))
        return BitMatrix(self.rows, self.cols + other.cols, data)

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return BitMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def column(self, j: int) -> int:
        out = 0
        for i, row in enumerate(self.data):
            out |= ((row >> j) & 1) << i
        return out

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.data)

    def __eq__(self, other):
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))


@dataclass(frozen=True)
class SubspaceBasis:
    """Linearly independent packed vectors spanning a subspace of GF(2)^n."""

    ambient_dim: int
    vectors: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, v: int) -> bool:
        return reduce_against(list(self.vectors), v) == 0

    def span_matrix(self) -> BitMatrix:
        """Matrix with the basis vectors as columns (ambient_dim x dim)."""
        cols = list(self.vectors)
        data = []
        for i in range(self.ambient_dim):
            row = 0
            for j, c in enumerate(cols):
                row |= ((c >> i) & 1) << j
            data.append(row)
        return BitMatrix(self.ambient_dim, len(cols), tuple(data))


def reduce_against(echelon: list[int], v: int) -> int:
    """Reduce v against rows already in echelon form (lowest-bit pivots)."""
    for row in echelon:
        p = row & -row
        if v & p:
            v ^= row
    return v


def _echelon(rows: list[int]) -> list[int]:
    """In-place style Gaussian elimination; returns nonzero echelon rows."""
    ech: list[int] = []
    for r in rows:
        r = reduce_against(ech, r)
        if r:
            ech.append(r)
            ech.sort(key=lambda x: x & -x)
    return ech


def rank(m: BitMatrix) -> int:
    """GF(2) row rank via Gaussian elimination with first-nonzero pivots."""
    return len(_echelon(list(m.data)))


def cokernel_dim(m: BitMatrix) -> int:
    """dim of GF(2)^rows / column space = rows - rank."""
    return m.rows - rank(m)


def solve(m: BitMatrix, b: int) -> int | None:
    """Solve m x = b; returns None when inconsistent.

    Free coordinates are set to 0, so the result is deterministic.
    ``b`` is a packed vector of length m.rows.
    """
    if b >> m.rows:
        raise ValueError("right-hand side longer than row count")
    # Work on the transpose-free augmented system: rows of [m | b].
    aug = [m.data[i] | (((b >> i) & 1) << m.cols) for i in range(m.rows)]
    ech: list[int] = []
    for r in aug:
        r = reduce_against(ech, r)
        if r:
            ech.append(r)
            ech.sort(key=lambda x: x & -x)
    bbit = 1 << m.cols
    pivots = {}
    for row in ech:
        p = (row & -row).bit_length() - 1
        if p == m.cols:
            return None  # pivot in the augmented column: inconsistent
        pivots[p] = row
    x = 0
    # Back-substitute from the highest pivot down.
    for p in sorted(pivots, reverse=True):
        row = pivots[p]
        val = ((row & bbit) >> m.cols) ^ dot(row & ~(1 << p) & (bbit - 1), x)
        x |= val << p
    return x


def kernel_basis(m: BitMatrix) -> SubspaceBasis:
    """Basis of the null space {x : m x = 0}, deterministic order."""
    n = m.cols
    # Column-reduce the transpose augmented with an identity tracker.
    ech: list[tuple[int, int]] = []  # (reduced column as row over rows-space, combo)
    basis = []
    for j in range(n):
        col = m.column(j)
        combo = 1 << j
        for erow, ecombo in ech:
            p = erow & -erow
            if col & p:
                col ^= erow
                combo ^= ecombo
        if col:
            ech.append((col, combo))
            ech.sort(key=lambda t: t[0] & -t[0])
        else:
            basis.append(combo)
    return SubspaceBasis(n, tuple(basis))


def column_space_basis(m: BitMatrix) -> SubspaceBasis:
    """Basis of the column space, chosen greedily in column order."""
    ech: list[int] = []
    basis = []
    for j in range(m.cols):
        col = m.column(j)
        red = reduce_against(ech, col)
        if red:
            ech.append(red)
            ech.sort(key=lambda x: x & -x)
            basis.append(col)
    return SubspaceBasis(m.rows, tuple(basis))


def inverse(m: BitMatrix) -> BitMatrix | None:
    """Inverse of a square matrix, or None if singular."""
    if m.rows != m.cols:
        return None
    n = m.rows
    cols = []
    for j in range(n):
        x = solve(m, 1 << j)
        if x is None:
            return None
        cols.append(x)
    data = []
    for i in range(n):
        row = 0
        for j, c in enumerate(cols):
            row |= ((c >> i) & 1) << j
        data.append(row)
    return BitMatrix(n, n, tuple(data))


class IntMatrix:
    """Small dense matrix with exact signed integer entries.

    Only used for the signed simplicial coboundary feeding the Bockstein;
    entries stay in {-1, 0, 1} and one halving occurs downstream, so native
    Python integers are more than safe.
    """

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = [[0] * cols for _ in range(rows)] if entries is None else entries

    def __setitem__(self, ij, value):
        i, j = ij
        self.entries[i][j] = value

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def apply(self, x: list[int]) -> list[int]:
        if len(x) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum(row[j] * x[j] for j in range(self.cols)) for row in self.entries]


# ---------------------------------------------------------------------------
# Commutative-ladder diagram verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LadderDiagram:
    """Two-row ladder

        A --a--> B --b--> C --> 0
        |f       |g       |h
        v        v        v
        D --lam--> A' --a'--> B' --b'--> C'

    with verticals f: A->A', g: B->B', h: C->C' and g invertible.
    """

    top_a: BitMatrix   # a : A -> B
    top_b: BitMatrix   # b : B -> C
    bot_lam: BitMatrix  # lambda : D -> A'
    bot_a: BitMatrix   # a' : A' -> B'
    bot_b: BitMatrix   # b' : B' -> C'
    vert_f: BitMatrix  # f : A -> A'
    vert_g: BitMatrix  # g : B -> B'
    vert_h: BitMatrix  # h : C -> C'


@dataclass(frozen=True)
class LadderCheckResult:
    ker_h_dim: int
    coker_fplus_lambda_dim: int
    commutes: bool
    rows_exact: bool


def ladder_check(d: LadderDiagram) -> LadderCheckResult:
    """Verify the ladder and report dim ker(h) and dim coker(f + lambda).

    The two dimensions agree whenever the diagram commutes and both rows
    are exact; callers assert that equality, this function just reports.
    """
    dim_a = d.top_a.cols
    dim_b = d.top_a.rows
    dim_c = d.top_b.rows
    dim_ap = d.bot_a.cols
    dim_bp = d.bot_a.rows
    if d.top_b.cols != dim_b or d.bot_b.cols != dim_bp:
        raise ValueError("row maps not composable")
    if d.vert_f.cols != dim_a or d.vert_f.rows != dim_ap:
        raise ValueError("vertical f has wrong shape")
    if d.vert_g.rows != d.vert_g.cols or d.vert_g.cols != dim_b or d.vert_g.rows != dim_bp:
        raise ValueError("g must be square B -> B'")
    if rank(d.vert_g) != dim_b:
        raise ValueError("g is singular")
    if d.vert_h.cols != dim_c or d.vert_h.rows != d.bot_b.rows:
        raise ValueError("vertical h has wrong shape")
    if d.bot_lam.rows != dim_ap:
        raise ValueError("lambda must land in A'")

    commutes = (
        d.vert_g.matmul(d.top_a) == d.bot_a.matmul(d.vert_f)
        and d.vert_h.matmul(d.top_b) == d.bot_b.matmul(d.vert_g)
    )

    # Top row exact at B and at C (the -> 0 makes b surjective).
    top_exact = (
        d.top_b.matmul(d.top_a).is_zero()
        and rank(d.top_a) == dim_b - rank(d.top_b)
        and rank(d.top_b) == dim_c
    )
    # Bottom row exact at A' and at B'.
    bot_exact = (
        d.bot_a.matmul(d.bot_lam).is_zero()
        and rank(d.bot_lam) == dim_ap - rank(d.bot_a)
        and d.bot_b.matmul(d.bot_a).is_zero()
        and rank(d.bot_a) == dim_bp - rank(d.bot_b)
    )

    ker_h = dim_c - rank(d.vert_h)
    coker = dim_ap - rank(d.vert_f.hstack(d.bot_lam))
    return LadderCheckResult(ker_h, coker, commutes, top_exact and bot_exact)


def _random_matrix(rng: random.Random, rows: int, cols: int) -> BitMatrix:
    return BitMatrix(rows, cols, tuple(rng.getrandbits(cols) for _ in range(rows)))


def _random_full_rank(rng: random.Random, rows: int, cols: int) -> BitMatrix:
    """Random matrix of rank min(rows, cols); dims here are tiny."""
    want = min(rows, cols)
    while True:
        m = _random_matrix(rng, rows, cols)
        if rank(m) == want:
            return m


def _random_subspace(rng: random.Random, ambient: int, dim: int) -> SubspaceBasis:
    while True:
        vecs = _echelon([rng.getrandbits(ambient) for _ in range(dim + 2)])
        if len(vecs) >= dim:
            return SubspaceBasis(ambient, tuple(vecs[:dim]))


def _quotient_map(ambient: int, sub: SubspaceBasis) -> BitMatrix:
    """Projection GF(2)^ambient -> GF(2)^(ambient-dim) with kernel = sub.

    Also returns nothing extra; the section used in ladder generation is
    reconstructed from the same complement columns.
    """
    t, _ = _extend_to_basis(ambient, sub)
    tinv = inverse(t)
    assert tinv is not None
    return BitMatrix(ambient - sub.dim, ambient, tinv.data[sub.dim:])


def _extend_to_basis(ambient: int, sub: SubspaceBasis):
    """Invertible matrix whose first dim(sub) columns span sub.

    Returns (T, complement_columns).
    """
    cols = list(sub.vectors)
    ech = _echelon(list(sub.vectors))
    extra = []
    for j in range(ambient):
        cand = 1 << j
        red = reduce_against(ech, cand)
        if red:
            ech.append(red)
            ech.sort(key=lambda x: x & -x)
            cols.append(cand)
            extra.append(cand)
    data = []
    for i in range(ambient):
        row = 0
        for j, c in enumerate(cols):
            row |= ((c >> i) & 1) << j
        data.append(row)
    return BitMatrix(ambient, ambient, tuple(data)), extra


def random_exact_ladder(rng: random.Random) -> LadderDiagram:
    """Generate a valid ladder (commuting, exact rows, g invertible).

    Bottom row first: choose B', a subspace V = im(a'), the quotient C';
    then mirror the construction on the top row through a random invertible
    g, which forces the squares to close. Exactness holds by construction,
    so no rejection sampling is needed.
    """
    dim_bp = rng.randint(1, 6)
    v = rng.randint(0, dim_bp)
    vbasis = _random_subspace(rng, dim_bp, v)

    dim_ap = v + rng.randint(0, 2)
    p_bot = _random_full_rank(rng, v, dim_ap) if v else BitMatrix.zero(0, dim_ap)
    bot_a = vbasis.span_matrix().matmul(p_bot)

    kbasis = kernel_basis(bot_a)
    dim_d = kbasis.dim + rng.randint(0, 2)
    if kbasis.dim:
        q = _random_full_rank(rng, kbasis.dim, dim_d)
        bot_lam = kbasis.span_matrix().matmul(q)
    else:
        bot_lam = BitMatrix.zero(dim_ap, dim_d)

    bot_b = _quotient_map(dim_bp, vbasis)

    g = _random_full_rank(rng, dim_bp, dim_bp)
    ginv = inverse(g)
    assert ginv is not None
    # W = g^{-1}(V) so that g(im a) = im a'.
    wbasis = SubspaceBasis(dim_bp, tuple(ginv.matvec(x) for x in vbasis.vectors))

    dim_a = v + rng.randint(0, 2)
    p_top = _random_full_rank(rng, v, dim_a) if v else BitMatrix.zero(0, dim_a)
    top_a = wbasis.span_matrix().matmul(p_top)
    top_b = _quotient_map(dim_bp, wbasis)
    dim_c = top_b.rows

    # f solves a' f = g a column by column (consistent since g(W) = V).
    ga = g.matmul(top_a)
    fcols = []
    for j in range(dim_a):
        x = solve(bot_a, ga.column(j))
        assert x is not None
        fcols.append(x)
    vert_f = BitMatrix(
        dim_ap, dim_a,
        tuple(vec_from_bits(((c >> i) & 1) for c in fcols) for i in range(dim_ap)),
    )

    # h is determined: h = b' g s for any section s of b.
    _, extra = _extend_to_basis(dim_bp, wbasis)
    bg = bot_b.matmul(g)
    hcols = [bg.matvec(extra[j]) for j in range(dim_c)]
    vert_h = BitMatrix(
        bot_b.rows, dim_c,
        tuple(vec_from_bits(((c >> i) & 1) for c in hcols) for i in range(bot_b.rows)),
    )

    return LadderDiagram(top_a, top_b, bot_lam, bot_a, bot_b, vert_f, g, vert_h)
