"""Lie algebras by exact structure constants, metric adjoints and flatness.

The central objects are :class:`LieAlgebra` (sparse structure constants over
rationals), :class:`Metric` (positive-definite Gram matrix) and the Milnor
decomposition: the subalgebra S of elements with skew-adjoint bracket action,
the derived ideal, and the orthogonality between them.  A metric Lie algebra
is *Milnor* when S is abelian, the derived ideal is abelian and the
orthogonal of S equals the derived ideal; this characterizes flat
left-invariant metrics, and the module computes both sides of that
equivalence independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

from .linalg import (
    DimensionMismatch,
    Matrix,
    Vector,
    basis_vector,
    inverse,
    is_positive_definite,
    is_zero_vector,
    kernel,
    rat,
    solve,
    vec,
    vec_add,
    vec_scale,
    zero_vector,
)


class LieError(ValueError):
    """Base error for Lie algebra construction and operations."""


class JacobiError(LieError):
    """Structure constants violate the Jacobi identity."""


class MetricError(LieError):
    """Gram matrix is not symmetric positive-definite."""


@dataclass(frozen=True)
class LieAlgebra:
    """Finite-dimensional Lie algebra given by sparse structure constants.

    ``brackets`` maps (i, j) with i < j (1-based) to the coefficient vector of
    [e_i, e_j]; antisymmetry is implied, missing pairs bracket to zero.
    ``validated`` records whether the Jacobi identity was checked at
    construction (raw instances are allowed so candidate brackets can be
    inspected for their defects).
    """

    dim: int
    brackets: dict[tuple[int, int], Vector]
    labels: tuple[str, ...]
    validated: bool

    def __repr__(self) -> str:
        entries = ", ".join(
            f"[{self.labels[i - 1]},{self.labels[j - 1]}]" for (i, j) in self.brackets
        )
        return f"LieAlgebra(dim={self.dim}, nonzero: {entries or 'none'})"


def lie_algebra(
    dim: int,
    entries: Iterable[Sequence] = (),
    labels: Optional[Sequence[str]] = None,
    validate: bool = True,
) -> LieAlgebra:
    """Build an algebra from sparse entries ``(i, j, k, coeff)`` with i < j.

    With ``validate`` the Jacobi identity is enforced; raw mode keeps the
    candidate bracket and leaves validity queryable via :func:`is_lie_algebra`.
    """
    if dim < 0:
        raise LieError("negative dimension")
    if labels is None:
        labels = tuple(f"e{i}" for i in range(1, dim + 1))
    else:
        labels = tuple(labels)
        if len(labels) != dim:
            raise LieError("label count differs from dimension")
    table: dict[tuple[int, int], list[Fraction]] = {}
    for entry in entries:
        i, j, k, coeff = entry
        i, j, k = int(i), int(j), int(k)
        if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
            raise LieError(f"structure constant index ({i},{j},{k}) out of range")
        if i >= j:
            raise LieError(f"structure constants expect i < j, got ({i},{j})")
        row = table.setdefault((i, j), [Fraction(0)] * dim)
        row[k - 1] += rat(coeff)
    brackets = {
        key: tuple(row) for key, row in sorted(table.items()) if any(c != 0 for c in row)
    }
    alg = LieAlgebra(dim, brackets, labels, validated=False)
    if validate:
        ok, witness = is_lie_algebra(alg)
        if not ok:
            i, j, k = witness  # type: ignore[misc]
            raise JacobiError(
                f"Jacobi identity fails on basis triple ({i},{j},{k}): "
                f"defect {jacobi_defect(alg, i, j, k)}"
            )
        alg = LieAlgebra(dim, brackets, labels, validated=True)
    return alg


def abelian(dim: int, labels: Optional[Sequence[str]] = None) -> LieAlgebra:
    return lie_algebra(dim, (), labels)


def structure_entries(alg: LieAlgebra) -> list[list]:
    """Sparse ``[i, j, k, "p/q"]`` rows with i < j, canonical order."""
    from .linalg import rat_to_str

    rows = []
    for (i, j), v in sorted(alg.brackets.items()):
        for k, c in enumerate(v, start=1):
            if c != 0:
                rows.append([i, j, k, rat_to_str(c)])
    return rows


def bracket_basis(alg: LieAlgebra, i: int, j: int) -> Vector:
    """[e_i, e_j] for 1-based indices, any order."""
    if not (1 <= i <= alg.dim and 1 <= j <= alg.dim):
        raise IndexError(f"basis index out of range: ({i},{j})")
    if i == j:
        return zero_vector(alg.dim)
    if i < j:
        return alg.brackets.get((i, j), zero_vector(alg.dim))
    return vec_scale(-1, alg.brackets.get((j, i), zero_vector(alg.dim)))


def bracket_of(alg: LieAlgebra, u: Sequence, v: Sequence) -> Vector:
    """Bilinear, antisymmetric expansion of the bracket."""
    uu, vv = vec(u), vec(v)
    if len(uu) != alg.dim or len(vv) != alg.dim:
        raise DimensionMismatch("vector length differs from algebra dimension")
    out = zero_vector(alg.dim)
    for (i, j), w in alg.brackets.items():
        c = uu[i - 1] * vv[j - 1] - uu[j - 1] * vv[i - 1]
        if c != 0:
            out = vec_add(out, vec_scale(c, w))
    return out


def jacobi_defect(alg: LieAlgebra, i: int, j: int, k: int) -> Vector:
    """[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]."""
    ei, ej, ek = (basis_vector(alg.dim, x) for x in (i, j, k))
    term1 = bracket_of(alg, bracket_basis(alg, i, j), ek)
    term2 = bracket_of(alg, bracket_basis(alg, j, k), ei)
    term3 = bracket_of(alg, bracket_basis(alg, k, i), ej)
    return vec_add(vec_add(term1, term2), term3)


class LieCheck(NamedTuple):
    ok: bool
    witness: Optional[tuple[int, int, int]]


def is_lie_algebra(alg: LieAlgebra) -> LieCheck:
    """Jacobi identity on all basis triples; first failing triple as witness."""
    for i, j, k in combinations(range(1, alg.dim + 1), 3):
        if not is_zero_vector(jacobi_defect(alg, i, j, k)):
            return LieCheck(False, (i, j, k))
    return LieCheck(True, None)


_PAIR_CACHE: dict[int, list[tuple[int, int]]] = {}


def wedge2_basis(dim: int) -> list[tuple[int, int]]:
    """Sorted basis (i, j), i < j, of Lambda^2 in lexicographic order."""
    if dim not in _PAIR_CACHE:
        _PAIR_CACHE[dim] = list(combinations(range(1, dim + 1), 2))
    return _PAIR_CACHE[dim]


def ad_operator(alg: LieAlgebra, u: Sequence, on_wedge2: bool = False) -> Matrix:
    """Matrix of ad_u, or of its derivation extension to Lambda^2.

    The extension sends v ^ w to [u,v] ^ w + v ^ [u,w] on the sorted pair
    basis.
    """
    uu = vec(u)
    if len(uu) != alg.dim:
        raise DimensionMismatch("vector length differs from algebra dimension")
    ad_cols = [bracket_of(alg, uu, basis_vector(alg.dim, j)) for j in range(1, alg.dim + 1)]
    if not on_wedge2:
        return Matrix.from_columns(ad_cols)
    pairs = wedge2_basis(alg.dim)
    index = {p: r for r, p in enumerate(pairs)}
    cols = []
    for (a, b) in pairs:
        col = [Fraction(0)] * len(pairs)
        # [u, e_a] ^ e_b + e_a ^ [u, e_b], reordered onto the sorted pair basis
        for p, c in enumerate(ad_cols[a - 1], start=1):
            if c == 0 or p == b:
                continue
            lo, hi, sign = (p, b, 1) if p < b else (b, p, -1)
            col[index[(lo, hi)]] += sign * c
        for p, c in enumerate(ad_cols[b - 1], start=1):
            if c == 0 or p == a:
                continue
            lo, hi, sign = (a, p, 1) if a < p else (p, a, -1)
            col[index[(lo, hi)]] += sign * c
        cols.append(tuple(col))
    return Matrix.from_columns(cols)


@dataclass(frozen=True)
class Metric:
    """Positive-definite scalar product and its (cached) inverse Gram."""

    gram: Matrix
    inverse_gram: Matrix

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        from .linalg import vec_dot

        return vec_dot(vec(u), self.gram.apply(v))

    def dual(self) -> "Metric":
        """Scalar product induced on the dual space (inverse Gram)."""
        return Metric(self.inverse_gram, self.gram)

    @property
    def dim(self) -> int:
        return self.gram.rows


def metric(gram: Matrix) -> Metric:
    if not gram.is_symmetric():
        raise MetricError("Gram matrix is not symmetric")
    if not is_positive_definite(gram):
        raise MetricError("Gram matrix is not positive-definite")
    return Metric(gram, inverse(gram))


def identity_metric(dim: int) -> Metric:
    ident = Matrix.identity(dim)
    return Metric(ident, ident)


def diagonal_metric(values: Sequence) -> Metric:
    return metric(Matrix.diagonal(values))


def metric_adjoint(g: Metric, op: Matrix) -> Matrix:
    """Adjoint of an operator with respect to the Gram matrix: G^-1 op^T G."""
    if op.rows != op.cols or op.rows != g.dim:
        raise DimensionMismatch("operator shape differs from metric dimension")
    return g.inverse_gram * op.transpose() * g.gram


@dataclass(frozen=True)
class Subspace:
    """Subspace with canonical reduced-echelon basis rows."""

    ambient: int
    basis: tuple[Vector, ...]

    @property
    def size(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        vv = vec(v)
        if is_zero_vector(vv):
            return True
        if not self.basis:
            return False
        stacked = Matrix(list(self.basis) + [vv])
        return stacked.rank() == len(self.basis)

    def __repr__(self) -> str:
        return f"Subspace(dim {self.size} of {self.ambient})"


def span(ambient: int, vectors: Iterable[Sequence]) -> Subspace:
    rows = [vec(v) for v in vectors]
    rows = [r for r in rows if not is_zero_vector(r)]
    if not rows:
        return Subspace(ambient, ())
    red, pivots = Matrix(rows).rref()
    return Subspace(ambient, tuple(red.row(i) for i in range(len(pivots))))


def orthogonal_complement(sub: Subspace, g: Metric) -> Subspace:
    """Vectors orthogonal to the subspace under the given scalar product."""
    if not sub.basis:
        return span(sub.ambient, [basis_vector(sub.ambient, i) for i in range(1, sub.ambient + 1)])
    rows = [g.gram.apply(b) for b in sub.basis]
    return span(sub.ambient, kernel(Matrix(rows)))


def compute_S(alg: LieAlgebra, g: Metric) -> Subspace:
    """The subalgebra S = {u : ad_u + ad_u^t = 0}, canonical basis.

    The defining map is linear in u, so S is the kernel of the stacked
    n^2 x n system built from the basis images.
    """
    cols = []
    for j in range(1, alg.dim + 1):
        op = ad_operator(alg, basis_vector(alg.dim, j))
        sym = op + metric_adjoint(g, op)
        cols.append(sym.flatten())
    system = Matrix.from_columns(cols)
    return span(alg.dim, kernel(system))


def derived_ideal(alg: LieAlgebra) -> Subspace:
    return span(alg.dim, [v for v in alg.brackets.values()])


def center(alg: LieAlgebra) -> Subspace:
    cols = []
    for j in range(1, alg.dim + 1):
        cols.append(ad_operator(alg, basis_vector(alg.dim, j)).flatten())
    return span(alg.dim, kernel(Matrix.from_columns(cols)))


def subspaces(alg: LieAlgebra) -> tuple[Subspace, Subspace]:
    """(derived ideal, center)."""
    return derived_ideal(alg), center(alg)


def is_unimodular(alg: LieAlgebra) -> bool:
    """tr ad_u = 0 for every basis u."""
    return all(
        ad_operator(alg, basis_vector(alg.dim, i)).trace() == 0
        for i in range(1, alg.dim + 1)
    )


@dataclass(frozen=True)
class MilnorReport:
    s_basis: Subspace
    derived_basis: Subspace
    s_abelian: bool
    derived_abelian: bool
    orthogonality_holds: bool
    is_milnor: bool
    witness: Optional[tuple[str, Vector, Vector]]


def _abelian_witness(alg: LieAlgebra, sub: Subspace) -> Optional[tuple[Vector, Vector]]:
    for a in range(len(sub.basis)):
        for b in range(a + 1, len(sub.basis)):
            if not is_zero_vector(bracket_of(alg, sub.basis[a], sub.basis[b])):
                return sub.basis[a], sub.basis[b]
    return None


def milnor_check(alg: LieAlgebra, g: Metric) -> MilnorReport:
    """Decide the Milnor conditions, with a witness for the first failure."""
    s = compute_S(alg, g)
    derived = derived_ideal(alg)
    s_pair = _abelian_witness(alg, s)
    d_pair = _abelian_witness(alg, derived)
    orth = orthogonal_complement(s, g) == derived
    witness: Optional[tuple[str, Vector, Vector]] = None
    if s_pair is not None:
        witness = ("S not abelian", *s_pair)
    elif d_pair is not None:
        witness = ("derived ideal not abelian", *d_pair)
    elif not orth:
        witness = ("orthogonal of S differs from derived ideal", (), ())
    is_milnor = witness is None
    if is_milnor and s.size >= 1 and derived.size % 2 != 0:
        # theorem: the derived ideal of a Milnor algebra has even dimension
        raise LieError("internal consistency: odd-dimensional derived ideal on a Milnor algebra")
    return MilnorReport(
        s_basis=s,
        derived_basis=derived,
        s_abelian=s_pair is None,
        derived_abelian=d_pair is None,
        orthogonality_holds=orth,
        is_milnor=is_milnor,
        witness=witness,
    )


def levi_civita_product(alg: LieAlgebra, g: Metric, u: Sequence, v: Sequence) -> Vector:
    """The bilinear product A with 2<A_u v, w> = <[u,v],w> + <[w,u],v> + <[w,v],u>."""
    uu, vv = vec(u), vec(v)
    rhs = []
    uv = bracket_of(alg, uu, vv)
    for k in range(1, alg.dim + 1):
        w = basis_vector(alg.dim, k)
        rhs.append(
            g.inner(uv, w) + g.inner(bracket_of(alg, w, uu), vv) + g.inner(bracket_of(alg, w, vv), uu)
        )
    half = Fraction(1, 2)
    return vec_scale(half, g.inverse_gram.apply(rhs))


def levi_civita_operator(alg: LieAlgebra, g: Metric, u: Sequence) -> Matrix:
    """Matrix of v -> A_u v."""
    cols = [
        levi_civita_product(alg, g, u, basis_vector(alg.dim, j))
        for j in range(1, alg.dim + 1)
    ]
    return Matrix.from_columns(cols)


def covariant_curvature(alg: LieAlgebra, g: Metric, u: Sequence, v: Sequence) -> Matrix:
    """A_{[u,v]} - A_u A_v + A_v A_u as an operator; zero iff flat direction."""
    au = levi_civita_operator(alg, g, u)
    av = levi_civita_operator(alg, g, v)
    auv = levi_civita_operator(alg, g, bracket_of(alg, vec(u), vec(v)))
    return auv - au * av + av * au


def is_flat_metric(alg: LieAlgebra, g: Metric) -> bool:
    """Vanishing of the curvature on all basis pairs."""
    for i in range(1, alg.dim + 1):
        for j in range(i + 1, alg.dim + 1):
            cur = covariant_curvature(
                alg, g, basis_vector(alg.dim, i), basis_vector(alg.dim, j)
            )
            if not cur.is_zero():
                return False
    return True
