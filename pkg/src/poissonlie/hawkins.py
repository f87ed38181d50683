"""Decide the three deformation-compatibility conditions for a triple.

Given a Lie algebra with a Lambda^2-valued 1-cocycle and a positive-definite
scalar product, this module computes:

1. flatness of the metric contravariant connection, both directly (curvature
   operators of the Koszul-defined connection on the dual) and through the
   Milnor criterion on the dual metric Lie algebra -- the two must agree;
2. vanishing of the metacurvature, through its closed form on the flat
   decomposition of the dual;
3. compatibility of the induced Poisson tensor with the Riemannian volume.
   When the base algebra is unimodular the condition is decided exactly; when
   it is not, only the necessary contraction condition is decidable here, and
   the verdict says so instead of overclaiming.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import exterior
from .bialgebra import (
    Bialgebra,
    Cocycle,
    bialgebra,
    dual_cocycle,
    modular_form,
)
from .exterior import DUAL, KVector
from .lie import (
    LieAlgebra,
    Metric,
    MilnorReport,
    Subspace,
    ad_operator,
    basis_vector,
    bracket_basis,
    is_unimodular,
    milnor_check,
    wedge2_basis,
)
from .linalg import (
    DimensionMismatch,
    Matrix,
    Vector,
    is_zero_vector,
    rat,
    solve,
    vec,
    vec_scale,
)

VOLUME_SATISFIED = "satisfied"
VOLUME_VIOLATED = "violated"
VOLUME_NECESSARY_ONLY_PASSED = "necessary-only-passed"
VOLUME_NECESSARY_ONLY_FAILED = "necessary-only-failed"

REGIME_UNIMODULAR = "unimodular-equivalence"
REGIME_NECESSARY_ONLY = "necessary-only"


class HawkinsError(ValueError):
    pass


class NotFlatError(HawkinsError):
    """The metacurvature closed form is only valid over a flat connection."""


class InternalConsistencyError(HawkinsError):
    """A proved equivalence failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Triple:
    """Algebra + cocycle + metric, with the induced dual-side data cached."""

    bi: Bialgebra
    geometry: Metric

    @property
    def algebra(self) -> LieAlgebra:
        return self.bi.algebra

    @property
    def cocycle(self) -> Cocycle:
        return self.bi.cocycle

    @property
    def dual_algebra(self) -> LieAlgebra:
        return self.bi.dual

    @property
    def dual_metric(self) -> Metric:
        return self.geometry.dual()

    @property
    def dim(self) -> int:
        return self.bi.algebra.dim


def triple(alg: LieAlgebra, xi: Cocycle, g: Metric, check: bool = True) -> Triple:
    if g.dim != alg.dim:
        raise DimensionMismatch("metric and algebra dimensions differ")
    return Triple(bialgebra(alg, xi, check=check), g)


@dataclass(frozen=True)
class ConnectionTable:
    """Table of the Levi-Civita contravariant connection on the dual basis.

    ``gamma[i][j]`` holds the coefficients of D_{a_i} a_j.  The table
    satisfies the torsion-free and metric-parallel identities exactly; both
    are asserted at construction time.
    """

    dim: int
    gamma: tuple[tuple[Vector, ...], ...]

    def operator(self, coeffs: Sequence) -> Matrix:
        """Matrix of D_alpha for alpha = sum coeffs_i a_i."""
        cc = vec(coeffs)
        cols = []
        for j in range(self.dim):
            col = [Fraction(0)] * self.dim
            for i, c in enumerate(cc):
                if c != 0:
                    col = [x + c * y for x, y in zip(col, self.gamma[i][j])]
            cols.append(tuple(col))
        return Matrix.from_columns(cols)

    def basis_operator(self, i: int) -> Matrix:
        return Matrix.from_columns(list(self.gamma[i - 1]))


def contravariant_connection(t: Triple) -> ConnectionTable:
    """Solve the Koszul formula exactly on all dual basis triples.

    2<D_a b, c>* = <[c,a]*, b>* + <[c,b]*, a>* + <[a,b]*, c>* with the dual
    scalar product; for left-invariant data the derivative terms vanish.
    """
    n = t.dim
    dual, gd = t.dual_algebra, t.dual_metric
    half = Fraction(1, 2)
    rows = []
    for i in range(1, n + 1):
        ai = basis_vector(n, i)
        row = []
        for j in range(1, n + 1):
            aj = basis_vector(n, j)
            rhs = []
            for k in range(1, n + 1):
                ak = basis_vector(n, k)
                rhs.append(
                    gd.inner(bracket_basis(dual, k, i), aj)
                    + gd.inner(bracket_basis(dual, k, j), ai)
                    + gd.inner(bracket_basis(dual, i, j), ak)
                )
            row.append(vec_scale(half, gd.inverse_gram.apply(rhs)))
        rows.append(tuple(row))
    table = ConnectionTable(n, tuple(rows))
    _assert_connection_identities(table, t)
    return table


def _assert_connection_identities(table: ConnectionTable, t: Triple) -> None:
    n = t.dim
    dual, gd = t.dual_algebra, t.dual_metric
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            torsion = tuple(
                a - b - c
                for a, b, c in zip(
                    table.gamma[i - 1][j - 1],
                    table.gamma[j - 1][i - 1],
                    bracket_basis(dual, i, j),
                )
            )
            if not is_zero_vector(torsion):
                raise InternalConsistencyError("connection table is not torsion-free")
            for k in range(1, n + 1):
                lhs = gd.inner(table.gamma[i - 1][j - 1], basis_vector(n, k))
                rhs = gd.inner(basis_vector(n, j), table.gamma[i - 1][k - 1])
                if lhs + rhs != 0:
                    raise InternalConsistencyError("connection table is not metric-parallel")


def contravariant_curvature(table: ConnectionTable, t: Triple) -> list[tuple[tuple[int, int], Matrix]]:
    """K(a_i, a_j) = D_i D_j - D_j D_i - D_{[a_i,a_j]*} for all basis pairs."""
    n = t.dim
    dual = t.dual_algebra
    ops = [table.basis_operator(i) for i in range(1, n + 1)]
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d_bracket = table.operator(bracket_basis(dual, i, j))
            k_op = ops[i - 1] * ops[j - 1] - ops[j - 1] * ops[i - 1] - d_bracket
            out.append(((i, j), k_op))
    return out


def is_flat(t: Triple) -> bool:
    """Curvature verdict, cross-checked against the dual Milnor criterion."""
    table = contravariant_connection(t)
    by_curvature = all(op.is_zero() for _, op in contravariant_curvature(table, t))
    by_milnor = milnor_check(t.dual_algebra, t.dual_metric).is_milnor
    if by_curvature != by_milnor:
        raise InternalConsistencyError(
            "curvature and dual Milnor verdicts disagree; this is a bug"
        )
    return by_curvature


def flat_decomposition(t: Triple) -> tuple[Subspace, Subspace]:
    """(S, derived ideal) of the dual metric Lie algebra."""
    report = milnor_check(t.dual_algebra, t.dual_metric)
    return report.s_basis, report.derived_basis


def _project_onto_s(s: Subspace, derived: Subspace, alpha: Vector) -> Vector:
    """Component of alpha along S in the splitting S (+) derived."""
    n = len(alpha)
    columns = list(s.basis) + list(derived.basis)
    if not columns:
        return tuple(Fraction(0) for _ in range(n))
    coeffs = solve(Matrix.from_columns(columns), alpha)
    if coeffs is None:
        raise HawkinsError("dual basis does not split along S and the derived ideal")
    out = [Fraction(0)] * n
    for c, b in zip(coeffs[: len(s.basis)], s.basis):
        for idx in range(n):
            out[idx] += c * b[idx]
    return tuple(out)


def metacurvature_form(dual: LieAlgebra, alpha: Sequence, beta: Sequence, rho_gamma: KVector) -> KVector:
    """ad_alpha ad_beta rho(gamma) on Lambda^2 of the dual space."""
    pairs = wedge2_basis(dual.dim)
    coeffs = tuple(rho_gamma.get(p) for p in pairs)
    once = ad_operator(dual, vec(beta), on_wedge2=True).apply(coeffs)
    twice = ad_operator(dual, vec(alpha), on_wedge2=True).apply(once)
    return KVector(
        dual.dim, 2, rho_gamma.space,
        {p: c for p, c in zip(pairs, twice) if c != 0},
    )


def metacurvature(t: Triple, alpha: Sequence, beta: Sequence, gamma: Sequence) -> KVector:
    """Metacurvature through its closed form; requires flatness.

    Arguments are coefficient vectors of dual-basis covectors.  The tensor is
    multilinear and vanishes whenever any slot lies in the derived ideal, so
    every slot is projected onto S before applying the closed form.
    """
    if not is_flat(t):
        raise NotFlatError("metacurvature is only defined over a flat connection")
    s, derived = flat_decomposition(t)
    pa = _project_onto_s(s, derived, vec(alpha))
    pb = _project_onto_s(s, derived, vec(beta))
    pg = _project_onto_s(s, derived, vec(gamma))
    rho = dual_cocycle(t.bi)
    return metacurvature_form(t.dual_algebra, pa, pb, rho.of_vector(pg))


def is_metaflat(t: Triple) -> bool:
    """Zero metacurvature on a full sweep of S-basis triples (flat required)."""
    if not is_flat(t):
        raise NotFlatError("metaflatness is only defined over a flat connection")
    s, _ = flat_decomposition(t)
    rho = dual_cocycle(t.bi)
    for gamma in s.basis:
        rg = rho.of_vector(gamma)
        for alpha in s.basis:
            for beta in s.basis:
                if not metacurvature_form(t.dual_algebra, alpha, beta, rg).is_zero():
                    return False
    return True


@dataclass(frozen=True)
class Witness:
    kind: str
    location: str
    entries: tuple


@dataclass(frozen=True)
class VolumeResult:
    verdict: str
    regime: str
    witnesses: tuple[Witness, ...]


def volume_contraction_terms(t: Triple, mu_scale=1) -> list[KVector]:
    """The forms whose closedness encodes volume compatibility.

    For each basis vector u the cocycle value is contracted into the dual top
    form and hit with the dual cocycle extended as a differential (minus the
    Chevalley-Eilenberg differential, so reported witnesses carry the sign of
    the dual-side convention).  All terms must vanish; the condition is
    linear and homogeneous in the volume element, hence scale-free.
    """
    n = t.dim
    mu = rat(mu_scale) * exterior.top_form(n, DUAL)
    out = []
    for i in range(1, n + 1):
        contracted = exterior.interior(t.cocycle.of_basis(i), mu)
        out.append(Fraction(-1) * exterior.ce_differential(t.algebra, contracted))
    return out


def volume_compatibility(t: Triple, mu_scale=1) -> VolumeResult:
    """Volume verdict with regime bookkeeping.

    The contraction condition is necessary for any base algebra, so its
    failure always decides a violation.  Full equivalence additionally needs
    the base algebra unimodular, in which case the verdict also checks that
    the modular form of the dual bracket vanishes; otherwise a passing
    necessary condition is reported as exactly that.
    """
    n = t.dim
    witnesses: list[Witness] = []
    terms = volume_contraction_terms(t, mu_scale)
    for i, form in enumerate(terms, start=1):
        if not form.is_zero():
            witnesses.append(
                Witness(
                    kind="volume",
                    location=f"d(i_xi(e{i}) mu) != 0",
                    entries=tuple(tuple(row) for row in exterior.to_entries(form)),
                )
            )
    primal_unimodular = is_unimodular(t.algebra)
    regime = REGIME_UNIMODULAR if primal_unimodular else REGIME_NECESSARY_ONLY
    if witnesses:
        return VolumeResult(VOLUME_VIOLATED, regime, tuple(witnesses))
    if not primal_unimodular:
        return VolumeResult(VOLUME_NECESSARY_ONLY_PASSED, regime, ())
    kappa = modular_form(t.bi)
    if not is_zero_vector(kappa):
        from .linalg import rat_to_str

        witnesses.append(
            Witness(
                kind="kappa",
                location="modular form of the dual bracket is nonzero",
                entries=tuple(rat_to_str(c) for c in kappa),
            )
        )
        return VolumeResult(VOLUME_VIOLATED, regime, tuple(witnesses))
    return VolumeResult(VOLUME_SATISFIED, regime, ())


@dataclass(frozen=True)
class HawkinsReport:
    is_flat: bool
    is_metaflat: bool
    volume_verdict: str
    volume_regime: str
    dual_milnor: MilnorReport
    kappa: Vector
    primal_unimodular: bool
    primal_abelian: bool
    witnesses: tuple[Witness, ...]
    linear_case_note: Optional[str]

    def status(self) -> str:
        """Overall outcome: satisfied, violated, or undecidable (volume)."""
        if not (self.is_flat and self.is_metaflat):
            return "violated"
        if self.volume_verdict == VOLUME_SATISFIED:
            return "satisfied"
        if self.volume_verdict == VOLUME_NECESSARY_ONLY_PASSED:
            return "undecidable"
        return "violated"


def full_report(t: Triple) -> HawkinsReport:
    """Assemble all verdicts with witnesses."""
    witnesses: list[Witness] = []
    dual_report = milnor_check(t.dual_algebra, t.dual_metric)
    flat = is_flat(t)
    if not flat and dual_report.witness is not None:
        kind, u, v = dual_report.witness
        witnesses.append(
            Witness(kind="flat", location=f"dual Milnor failure: {kind}", entries=(u, v))
        )
    metaflat = False
    if flat:
        metaflat = is_metaflat(t)
        if not metaflat:
            witnesses.append(
                Witness(kind="metaflat", location="nonzero metacurvature on an S-triple", entries=())
            )
    volume = volume_compatibility(t)
    witnesses.extend(volume.witnesses)
    primal_abelian = not t.algebra.brackets
    note = None
    if primal_abelian:
        note = (
            "abelian base algebra: all three conditions hold exactly when the "
            "dual metric Lie algebra is Milnor"
        )
    return HawkinsReport(
        is_flat=flat,
        is_metaflat=metaflat,
        volume_verdict=volume.verdict,
        volume_regime=volume.regime,
        dual_milnor=dual_report,
        kappa=modular_form(t.bi),
        primal_unimodular=is_unimodular(t.algebra),
        primal_abelian=primal_abelian,
        witnesses=tuple(witnesses),
        linear_case_note=note,
    )
