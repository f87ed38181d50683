"""1-cocycles, dual brackets, dual cocycles and the modular form.

A linear map xi from the algebra to its second exterior power induces a
bracket on the dual space via [a, b]*(u) = <a ^ b, xi(u)>.  When xi satisfies
the cocycle condition and the induced bracket satisfies Jacobi, the pair is a
Lie bialgebra.  Construction is available in checked and raw mode because the
classification machinery has to evaluate the defects of candidates that fail
either condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from . import exterior
from .exterior import DUAL, PRIMAL, KVector
from .linalg import DimensionMismatch, Vector, basis_vector, rat, vec
from .lie import LieAlgebra, ad_operator, bracket_basis, is_lie_algebra, lie_algebra, wedge2_basis


class BialgebraError(ValueError):
    """Base error for bialgebra construction."""


class CocycleConditionError(BialgebraError):
    pass


class DualJacobiError(BialgebraError):
    pass


@dataclass(frozen=True)
class Cocycle:
    """Linear map into Lambda^2, stored by its values on the basis.

    ``space`` is the tag carried by the values: ``primal`` for a cocycle of
    the algebra itself, ``dual`` for the dual cocycle read off the bracket.
    """

    dim: int
    values: tuple[KVector, ...]
    space: str = PRIMAL

    def __post_init__(self):
        if len(self.values) != self.dim:
            raise BialgebraError("cocycle needs one value per basis vector")
        for v in self.values:
            if v.dim != self.dim or v.degree != 2 or v.space != self.space:
                raise BialgebraError("cocycle values must be degree-2 with the declared tag")

    def of_basis(self, i: int) -> KVector:
        return self.values[i - 1]

    def of_vector(self, u: Sequence) -> KVector:
        uu = vec(u)
        if len(uu) != self.dim:
            raise DimensionMismatch("vector length differs from cocycle dimension")
        out = exterior.zero(self.dim, 2, self.space)
        for i, c in enumerate(uu):
            if c != 0:
                out = out + c * self.values[i]
        return out

    def coefficient_vector(self, i: int) -> Vector:
        """Coefficients of the i-th value on the sorted pair basis."""
        pairs = wedge2_basis(self.dim)
        return tuple(self.values[i - 1].get(p) for p in pairs)

    def scale(self, c) -> "Cocycle":
        c = rat(c)
        return Cocycle(self.dim, tuple(c * v for v in self.values), self.space)


def zero_cocycle(dim: int, space: str = PRIMAL) -> Cocycle:
    return Cocycle(dim, tuple(exterior.zero(dim, 2, space) for _ in range(dim)), space)


def cocycle_from_entries(dim: int, entries: Iterable[Sequence], space: str = PRIMAL) -> Cocycle:
    """Sparse entries ``(i, j, k, coeff)``: value on e_i has coeff on e_j ^ e_k, j < k."""
    table: dict[int, dict[tuple[int, int], Fraction]] = {}
    for entry in entries:
        i, j, k, coeff = entry
        i, j, k = int(i), int(j), int(k)
        if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
            raise BialgebraError(f"cocycle index ({i},{j},{k}) out of range")
        if j >= k:
            raise BialgebraError(f"cocycle entries expect j < k, got ({j},{k})")
        row = table.setdefault(i, {})
        row[(j, k)] = row.get((j, k), Fraction(0)) + rat(coeff)
    values = [
        KVector(dim, 2, space, table.get(i, {})) for i in range(1, dim + 1)
    ]
    return Cocycle(dim, tuple(values), space)


def cocycle_entries(xi: Cocycle) -> list[list]:
    """Canonical sparse serialization ``[i, j, k, "p/q"]``."""
    from .linalg import rat_to_str

    rows = []
    for i in range(1, xi.dim + 1):
        for key, value in sorted(xi.values[i - 1].coeffs.items()):
            rows.append([i, key[0], key[1], rat_to_str(value)])
    return rows


@dataclass(frozen=True)
class Bialgebra:
    """Algebra with a Lambda^2-valued cocycle and its induced dual algebra.

    ``dual`` is always computed (in raw mode); ``checked`` records that both
    the cocycle condition and the dual Jacobi identity were verified.
    """

    algebra: LieAlgebra
    cocycle: Cocycle
    dual: LieAlgebra
    checked: bool


def _dual_bracket_xi(dim: int, xi: Cocycle, alpha: Sequence, beta: Sequence) -> Vector:
    a, b = vec(alpha), vec(beta)
    if len(a) != dim or len(b) != dim:
        raise DimensionMismatch("covector length differs from dimension")
    wedge_ab = exterior.wedge(exterior.from_vector(a, DUAL), exterior.from_vector(b, DUAL))
    return tuple(
        exterior.pairing(wedge_ab, xi.of_basis(i)) for i in range(1, dim + 1)
    )


def dual_bracket(bi: "Bialgebra", alpha: Sequence, beta: Sequence) -> Vector:
    """[alpha, beta]* evaluated through the cocycle, componentwise."""
    return _dual_bracket_xi(bi.algebra.dim, bi.cocycle, alpha, beta)


def _dual_algebra(alg: LieAlgebra, xi: Cocycle) -> LieAlgebra:
    entries = []
    for i in range(1, alg.dim + 1):
        for j in range(i + 1, alg.dim + 1):
            w = _dual_bracket_xi(
                alg.dim, xi, basis_vector(alg.dim, i), basis_vector(alg.dim, j)
            )
            for k, c in enumerate(w, start=1):
                if c != 0:
                    entries.append((i, j, k, c))
    labels = tuple(f"{name}*" for name in alg.labels)
    return lie_algebra(alg.dim, entries, labels, validate=False)


def bialgebra(alg: LieAlgebra, xi: Cocycle, check: bool = True) -> Bialgebra:
    """Build the pair; checked mode enforces cocycle + dual Jacobi validity."""
    if xi.dim != alg.dim:
        raise DimensionMismatch("cocycle and algebra dimensions differ")
    if xi.space != PRIMAL:
        raise BialgebraError("a bialgebra cocycle takes values in the primal space")
    dual = _dual_algebra(alg, xi)
    bi = Bialgebra(alg, xi, dual, checked=False)
    if check:
        ok, pair = is_cocycle(bi)
        if not ok:
            raise CocycleConditionError(
                f"cocycle condition fails on basis pair {pair}"
            )
        lie_ok, triple = is_lie_algebra(dual)
        if not lie_ok:
            raise DualJacobiError(
                f"dual bracket violates Jacobi on basis triple {triple}"
            )
        bi = Bialgebra(alg, xi, dual, checked=True)
    return bi


def dual_algebra(bi: Bialgebra) -> LieAlgebra:
    return bi.dual


def bracket_dual_cocycle(alg: LieAlgebra) -> Cocycle:
    """Dual of the bracket: rho(gamma) with <rho(gamma), u ^ v> = gamma([u, v]).

    Coincides with minus the Chevalley-Eilenberg differential on degree one
    (asserted in the test suite, which locks the sign convention).
    """
    values = []
    for i in range(1, alg.dim + 1):
        coeffs = {}
        for (j, k) in wedge2_basis(alg.dim):
            c = bracket_basis(alg, j, k)[i - 1]
            if c != 0:
                coeffs[(j, k)] = c
        values.append(KVector(alg.dim, 2, DUAL, coeffs))
    return Cocycle(alg.dim, tuple(values), DUAL)


def dual_cocycle(bi: Bialgebra) -> Cocycle:
    """The dual 1-cocycle of the pair, read off the primal bracket."""
    return bracket_dual_cocycle(bi.algebra)


def dual_bialgebra(bi: Bialgebra, check: bool = True) -> Bialgebra:
    """The bialgebra on the dual side, with roles (and tags) swapped."""
    rho = dual_cocycle(bi)
    as_primal = Cocycle(
        rho.dim, tuple(exterior.retag(v, PRIMAL) for v in rho.values), PRIMAL
    )
    return bialgebra(bi.dual, as_primal, check=check)


def cocycle_defect_map(alg: LieAlgebra, xi: Cocycle, u: Sequence, v: Sequence) -> KVector:
    """xi([u,v]) - ad_u xi(v) + ad_v xi(u) on Lambda^2; zero for 1-cocycles."""
    from .lie import bracket_of

    uu, vv = vec(u), vec(v)
    pairs = wedge2_basis(alg.dim)
    term0 = xi.of_vector(bracket_of(alg, uu, vv))
    ad_u = ad_operator(alg, uu, on_wedge2=True)
    ad_v = ad_operator(alg, vv, on_wedge2=True)
    xv = tuple(xi.of_vector(vv).get(p) for p in pairs)
    xu = tuple(xi.of_vector(uu).get(p) for p in pairs)
    coeff = tuple(
        term0.get(p) - a + b
        for p, a, b in zip(pairs, ad_u.apply(xv), ad_v.apply(xu))
    )
    return KVector(
        alg.dim, 2, PRIMAL,
        {p: c for p, c in zip(pairs, coeff) if c != 0},
    )


def cocycle_defect(bi: Bialgebra, u: Sequence, v: Sequence) -> KVector:
    return cocycle_defect_map(bi.algebra, bi.cocycle, u, v)


class CocycleCheck(NamedTuple):
    ok: bool
    witness: Optional[tuple[int, int]]


def is_cocycle(bi: Bialgebra) -> CocycleCheck:
    """Cocycle condition on all basis pairs; first failing pair as witness."""
    n = bi.algebra.dim
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            defect = cocycle_defect(bi, basis_vector(n, i), basis_vector(n, j))
            if not defect.is_zero():
                return CocycleCheck(False, (i, j))
    return CocycleCheck(True, None)


def modular_form(bi: Bialgebra) -> Vector:
    """kappa(a) = tr ad_a on the dual algebra, one value per basis covector.

    Vanishes exactly when the dual algebra is unimodular.
    """
    n = bi.algebra.dim
    return tuple(
        ad_operator(bi.dual, basis_vector(n, i)).trace() for i in range(1, n + 1)
    )
