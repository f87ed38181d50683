"""Classification machinery: exact cocycle solution spaces and the catalog.

For a Milnor metric Lie algebra the compatible Lambda^2-valued maps are cut
out by four *linear* constraint families (cocycle condition, the iterated
adjoint flatness condition over S, the volume contraction condition and
unimodularity of the induced dual bracket); the residual obstruction is the
Jacobi identity of the induced bracket, which is quadratic in the
coefficients.  This module computes the exact kernel of the stacked linear
system, extracts the quadratic constraints symbolically, evaluates families
on rational grids, and carries a catalog of every low-dimensional model with
its expected verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from . import exterior
from .bialgebra import (
    Cocycle,
    bialgebra,
    bracket_dual_cocycle,
    cocycle_from_entries,
    is_cocycle,
    zero_cocycle,
)
from .exterior import DUAL, PRIMAL, KVector
from .hawkins import HawkinsReport, Triple, full_report
from .lie import (
    LieAlgebra,
    Metric,
    abelian,
    ad_operator,
    compute_S,
    identity_metric,
    is_lie_algebra,
    lie_algebra,
    metric as make_metric,
    milnor_check,
    wedge2_basis,
)
from .linalg import (
    Matrix,
    Vector,
    is_zero_vector,
    kernel,
    rat,
    rat_to_str,
    vec,
)

FLAG_COCYCLE = "cocycle"
FLAG_FLAT = "flat"
FLAG_VOLUME = "volume"
FLAG_UNIMODULAR = "unimodular"
ALL_FLAGS = (FLAG_COCYCLE, FLAG_FLAT, FLAG_VOLUME, FLAG_UNIMODULAR)

# long-form aliases used in prose and on the command line
FLAG_ALIASES = {
    "cocycle_cond": FLAG_COCYCLE,
    "flat_cond": FLAG_FLAT,
    "volume_linear": FLAG_VOLUME,
    "volume-linear": FLAG_VOLUME,
    "dual_unimodular": FLAG_UNIMODULAR,
    "dual-unimodular": FLAG_UNIMODULAR,
}


class ClassifyError(ValueError):
    pass


class NonMilnorError(ClassifyError):
    """The classification premise requires a Milnor metric Lie algebra."""


def normalize_flags(flags: Iterable[str]) -> frozenset[str]:
    out = set()
    for f in flags:
        f = f.strip()
        f = FLAG_ALIASES.get(f, f)
        if f not in ALL_FLAGS:
            raise ClassifyError(f"unknown constraint flag {f!r}")
        out.add(f)
    return frozenset(out)


@dataclass(frozen=True)
class CocycleSpace:
    """Exact solution space of the selected linear constraints.

    Ambient coordinates enumerate the value of the map on each basis vector
    against the sorted pair basis: index (i - 1) * C(n,2) + rank(pair).
    The basis rows are in reduced echelon form, hence canonical.
    """

    algebra: LieAlgebra
    geometry: Metric
    flags: frozenset[str]
    basis: tuple[Vector, ...]

    @property
    def ambient_dim(self) -> int:
        n = self.algebra.dim
        return n * (n * (n - 1) // 2)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def cocycle_at(self, coeffs: Sequence) -> Cocycle:
        """The map at the given coordinates in the solution basis."""
        cc = vec(coeffs)
        if len(cc) != self.dimension:
            raise ClassifyError(
                f"expected {self.dimension} coordinates, got {len(cc)}"
            )
        n = self.algebra.dim
        ambient = [Fraction(0)] * self.ambient_dim
        for c, b in zip(cc, self.basis):
            for idx in range(self.ambient_dim):
                ambient[idx] += c * b[idx]
        return _cocycle_from_ambient(n, ambient)


def _pairs(n: int) -> list[tuple[int, int]]:
    return wedge2_basis(n)


def _cocycle_from_ambient(n: int, ambient: Sequence[Fraction]) -> Cocycle:
    pairs = _pairs(n)
    per = len(pairs)
    values = []
    for i in range(n):
        chunk = ambient[i * per: (i + 1) * per]
        values.append(
            KVector(n, 2, PRIMAL, {p: c for p, c in zip(pairs, chunk) if c != 0})
        )
    return Cocycle(n, tuple(values), PRIMAL)


def _elementary_cocycles(n: int) -> list[Cocycle]:
    pairs = _pairs(n)
    per = len(pairs)
    out = []
    for m in range(n * per):
        ambient = [Fraction(0)] * (n * per)
        ambient[m] = Fraction(1)
        out.append(_cocycle_from_ambient(n, ambient))
    return out


def _cocycle_rows(alg: LieAlgebra, elementary: list[Cocycle]) -> Matrix:
    """Stacked cocycle-condition defects, one column per ambient coordinate."""
    from .bialgebra import cocycle_defect_map
    from .linalg import basis_vector

    n = alg.dim
    pairs = _pairs(n)
    cols = []
    for cand in elementary:
        col: list[Fraction] = []
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                defect = cocycle_defect_map(alg, cand, basis_vector(n, a), basis_vector(n, b))
                col.extend(defect.get(p) for p in pairs)
        cols.append(col)
    return Matrix.from_columns(cols)


def _flat_rows(alg: LieAlgebra, g: Metric, elementary: list[Cocycle]) -> Matrix:
    """Iterated adjoint condition ad_a ad_b rho(c) = 0 over S-basis triples."""
    s = compute_S(alg, g)
    pairs = _pairs(alg.dim)
    ads = [ad_operator(alg, v, on_wedge2=True) for v in s.basis]
    cols = []
    for cand in elementary:
        col: list[Fraction] = []
        for ad_a in ads:
            for ad_b in ads:
                for gamma in s.basis:
                    rho_g = tuple(cand.of_vector(gamma).get(p) for p in pairs)
                    col.extend(ad_a.apply(ad_b.apply(rho_g)))
        cols.append(col)
    return Matrix.from_columns(cols)


def _raw_dual(alg: LieAlgebra, cand: Cocycle) -> LieAlgebra:
    from .bialgebra import _dual_algebra

    return _dual_algebra(alg, cand)


def _volume_rows(alg: LieAlgebra, elementary: list[Cocycle]) -> Matrix:
    """Closedness of the contracted top form under the induced differential.

    The contraction uses the *known* dual of the input bracket; only the
    differential depends on the candidate, linearly.
    """
    n = alg.dim
    xi_star = bracket_dual_cocycle(alg)
    mu = exterior.top_form(n, PRIMAL)
    contractions = [
        exterior.interior(xi_star.of_basis(i), mu) for i in range(1, n + 1)
    ]
    cols = []
    for cand in elementary:
        dual = _raw_dual(alg, cand)
        col: list[Fraction] = []
        for omega in contractions:
            term = exterior.ce_differential(dual, exterior.retag(omega, DUAL))
            col.extend(
                term.get(key)
                for key in _ordered_indices(n, term.degree)
            )
        cols.append(col)
    return Matrix.from_columns(cols)


def _ordered_indices(n: int, degree: int):
    from itertools import combinations

    return list(combinations(range(1, n + 1), degree))


def _unimodular_rows(alg: LieAlgebra, elementary: list[Cocycle]) -> Matrix:
    """Vanishing modular traces of the induced dual bracket."""
    from .linalg import basis_vector

    n = alg.dim
    cols = []
    for cand in elementary:
        dual = _raw_dual(alg, cand)
        cols.append(
            [ad_operator(dual, basis_vector(n, i)).trace() for i in range(1, n + 1)]
        )
    return Matrix.from_columns(cols)


def cocycle_space(alg: LieAlgebra, g: Metric, flags: Iterable[str]) -> CocycleSpace:
    """Exact kernel of the stacked linear constraint system."""
    flagset = normalize_flags(flags)
    if not milnor_check(alg, g).is_milnor:
        raise NonMilnorError("classification requires a Milnor metric Lie algebra")
    elementary = _elementary_cocycles(alg.dim)
    blocks = []
    if FLAG_COCYCLE in flagset:
        blocks.append(_cocycle_rows(alg, elementary))
    if FLAG_FLAT in flagset:
        blocks.append(_flat_rows(alg, g, elementary))
    if FLAG_VOLUME in flagset:
        blocks.append(_volume_rows(alg, elementary))
    if FLAG_UNIMODULAR in flagset:
        blocks.append(_unimodular_rows(alg, elementary))
    if blocks:
        system = Matrix.vstack(blocks)
        basis = tuple(kernel(system))
    else:
        n = alg.dim
        per = len(_pairs(n))
        basis = tuple(kernel(Matrix.zeros(1, n * per)))
    return CocycleSpace(alg, g, flagset, basis)


@dataclass(frozen=True)
class QuadraticConstraint:
    """One Jacobi-defect component as an exact quadratic polynomial.

    ``poly`` maps coordinate index pairs (a, b) with a <= b to coefficients;
    coordinates refer to the solution-space basis of the originating
    :class:`CocycleSpace`.
    """

    triple: tuple[int, int, int]
    component: int
    poly: tuple[tuple[tuple[int, int], Fraction], ...]

    def evaluate(self, point: Sequence) -> Fraction:
        t = vec(point)
        total = Fraction(0)
        for (a, b), c in self.poly:
            total += c * t[a] * t[b]
        return total

    def canonical(self) -> "QuadraticConstraint":
        """Scale so the content is one and the leading coefficient positive."""
        if not self.poly:
            return self
        coeffs = [c for _, c in self.poly]
        from math import gcd

        num = 0
        den = 1
        for c in coeffs:
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        content = Fraction(num, den) if num else Fraction(1)
        lead = self.poly[0][1]
        scale = Fraction(1) / content
        if lead < 0:
            scale = -scale
        return QuadraticConstraint(
            self.triple,
            self.component,
            tuple((k, c * scale) for k, c in self.poly),
        )

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.poly:
            return "0"
        parts = []
        for (a, b), c in self.poly:
            na = names[a] if names else f"t{a + 1}"
            nb = names[b] if names else f"t{b + 1}"
            mono = f"{na}^2" if a == b else f"{na}*{nb}"
            parts.append(f"{rat_to_str(c)}*{mono}")
        return " + ".join(parts)


def quadratic_constraints(space: CocycleSpace) -> list[QuadraticConstraint]:
    """Jacobi defects of the induced dual bracket, quadratic in coordinates."""
    if space.dimension == 0:
        return []
    n = space.algebra.dim
    m = space.dimension
    duals = [
        _raw_dual(space.algebra, space.cocycle_at([1 if q == p else 0 for q in range(m)]))
        for p in range(m)
    ]
    from .lie import bracket_basis

    # structure constants of the induced bracket as linear forms in t
    def c_linear(i: int, j: int) -> list[Vector]:
        # list over basis index p of the coefficient vector of t_p
        return [bracket_basis(d, i, j) for d in duals]

    out = []
    from itertools import combinations

    for (i, j, k) in combinations(range(1, n + 1), 3):
        acc = [[[Fraction(0)] * m for _ in range(m)] for _ in range(n)]
        for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
            cxy = c_linear(x, y)
            for p in range(1, n + 1):
                cpz = c_linear(p, z)
                for m1 in range(m):
                    a1 = cxy[m1][p - 1]
                    if a1 == 0:
                        continue
                    for m2 in range(m):
                        row = cpz[m2]
                        for l in range(n):
                            if row[l] != 0:
                                acc[l][m1][m2] += a1 * row[l]
        for l in range(n):
            poly: dict[tuple[int, int], Fraction] = {}
            for m1 in range(m):
                for m2 in range(m):
                    c = acc[l][m1][m2]
                    if c == 0:
                        continue
                    key = (m1, m2) if m1 <= m2 else (m2, m1)
                    poly[key] = poly.get(key, Fraction(0)) + c
            poly = {k: c for k, c in poly.items() if c != 0}
            if poly:
                out.append(
                    QuadraticConstraint((i, j, k), l + 1, tuple(sorted(poly.items())))
                )
    return out


# ---------------------------------------------------------------------------
# role swap: a classification point induces the group-side triple
# ---------------------------------------------------------------------------


def dual_triple(alg: LieAlgebra, g: Metric, rho: Cocycle, check: bool = True) -> Triple:
    """Group-side triple induced by a classification point.

    The input pair (algebra, rho) sits on the dual side: the group algebra is
    the induced dual bracket, its cocycle is the dual of the input bracket,
    and its scalar product is the dual one.
    """
    bi = bialgebra(alg, rho, check=check)
    primal = bi.dual
    xi = Cocycle(
        alg.dim,
        tuple(exterior.retag(v, PRIMAL) for v in bracket_dual_cocycle(alg).values),
        PRIMAL,
    )
    return Triple(bialgebra(primal, xi, check=check), g.dual())


# ---------------------------------------------------------------------------
# reference algebras
# ---------------------------------------------------------------------------


def milnor_dim3(lam=1) -> LieAlgebra:
    """[e1,e2] = lam e3, [e1,e3] = -lam e2; rotation generator e1."""
    lam = rat(lam)
    return lie_algebra(3, [(1, 2, 3, lam), (1, 3, 2, -lam)])


def milnor_dim4() -> LieAlgebra:
    """Basis (e1, e2, f1, f2): [e2,f1] = f2, [e2,f2] = -f1."""
    return lie_algebra(
        4,
        [(2, 3, 4, 1), (2, 4, 3, -1)],
        labels=("e1", "e2", "f1", "f2"),
    )


def milnor_from_skew_data(u_vectors: Sequence[Sequence]) -> LieAlgebra:
    """Milnor algebra from rotation weights.

    Given r nonzero vectors u_j in Q^q, builds the algebra on q + 2r basis
    vectors (s_1..s_q, f_1..f_2r) with [s, f_{2j-1}] = <s, u_j> f_{2j} and
    [s, f_{2j}] = -<s, u_j> f_{2j-1} in the orthonormal basis.
    """
    us = [vec(u) for u in u_vectors]
    if not us:
        raise ClassifyError("need at least one rotation weight")
    q = len(us[0])
    if any(len(u) != q for u in us) or any(is_zero_vector(u) for u in us):
        raise ClassifyError("rotation weights must be nonzero vectors of equal length")
    r = len(us)
    n = q + 2 * r
    entries = []
    for i in range(1, q + 1):
        for j, u in enumerate(us):
            w = u[i - 1]
            if w != 0:
                f1 = q + 2 * j + 1
                f2 = q + 2 * j + 2
                entries.append((i, f1, f2, w))
                entries.append((i, f2, f1, -w))
    labels = tuple(f"s{i}" for i in range(1, q + 1)) + tuple(
        f"f{i}" for i in range(1, 2 * r + 1)
    )
    return lie_algebra(n, entries, labels)


def rho_dim3(a, c, lam=1) -> Cocycle:
    """rho(e1) = c e2^e3, rho(e2) = a e1^e2, rho(e3) = a e1^e3."""
    del lam  # the family does not depend on the rotation speed
    return cocycle_from_entries(3, [(1, 2, 3, rat(c)), (2, 1, 2, rat(a)), (3, 1, 3, rat(a))])


def rho_dim4(beta1, beta2, b, c, d) -> Cocycle:
    """The five-parameter flat cocycle family on the dim-4 Milnor algebra."""
    beta1, beta2, b, c, d = (rat(x) for x in (beta1, beta2, b, c, d))
    entries = [
        (1, 3, 4, beta1),
        (2, 3, 4, beta2),
        (3, 1, 3, b), (3, 1, 4, c), (3, 2, 3, d),
        (4, 1, 3, -c), (4, 1, 4, b), (4, 2, 4, d),
    ]
    return cocycle_from_entries(4, entries)


# ---------------------------------------------------------------------------
# parameterized family evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    name: str
    param_names: tuple[str, ...]
    builder: Callable[..., tuple[LieAlgebra, Metric, Cocycle]]

    def point(self, params: Sequence) -> tuple[LieAlgebra, Metric, Cocycle]:
        if len(params) != len(self.param_names):
            raise ClassifyError(
                f"family {self.name} takes {len(self.param_names)} parameters"
            )
        return self.builder(*params)


def _dim3_family(lam, a, c):
    return milnor_dim3(lam), identity_metric(3), rho_dim3(a, c)


def _dim4_family(beta1, beta2, b, c, d):
    return milnor_dim4(), identity_metric(4), rho_dim4(beta1, beta2, b, c, d)


FAMILIES = {
    "dim3": FamilySpec("dim3", ("lam", "a", "c"), _dim3_family),
    "dim4": FamilySpec("dim4", ("beta1", "beta2", "b", "c", "d"), _dim4_family),
}


@dataclass(frozen=True)
class FamilyPoint:
    params: tuple
    cocycle_ok: bool
    dual_jacobi_ok: bool
    report: Optional[HawkinsReport]


@dataclass(frozen=True)
class FamilyReport:
    family: str
    points: tuple[FamilyPoint, ...]

    def summary(self) -> dict[str, str]:
        """Per condition: all-hold, all-fail or mixed over valid points."""
        outcomes: dict[str, list[bool]] = {"flat": [], "metaflat": [], "volume": []}
        for p in self.points:
            if p.report is None:
                continue
            outcomes["flat"].append(p.report.is_flat)
            outcomes["metaflat"].append(p.report.is_metaflat)
            outcomes["volume"].append(p.report.volume_verdict == "satisfied")
        out = {}
        for key, values in outcomes.items():
            if not values:
                out[key] = "no-valid-points"
            elif all(values):
                out[key] = "all-hold"
            elif not any(values):
                out[key] = "all-fail"
            else:
                out[key] = "mixed"
        return out

    def first_failure(self):
        """First grid point whose report carries a witness, with the witness."""
        for p in self.points:
            if p.report is not None and p.report.witnesses:
                return p, p.report.witnesses[0]
        return None


def verify_family(family: str | FamilySpec, grid: Iterable[Sequence]) -> FamilyReport:
    """Run the full report at each rational grid point of a family.

    Points whose induced dual bracket fails Jacobi (or whose candidate fails
    the cocycle condition) carry no report; the flags say which check failed.
    ``DEFAULT_GRID_VALUES`` are the recommended per-parameter samples.
    """
    spec = FAMILIES[family] if isinstance(family, str) else family
    points = []
    for raw in grid:
        params = tuple(rat(x) for x in raw)
        alg, g, rho = spec.point(params)
        bi = bialgebra(alg, rho, check=False)
        cocycle_ok = is_cocycle(bi).ok
        jacobi_ok = is_lie_algebra(bi.dual).ok
        report = None
        if cocycle_ok and jacobi_ok:
            report = full_report(dual_triple(alg, g, rho, check=True))
        points.append(FamilyPoint(params, cocycle_ok, jacobi_ok, report))
    return FamilyReport(spec.name, tuple(points))


DEFAULT_GRID_VALUES = (
    Fraction(-2), Fraction(-1), Fraction(-1, 2),
    Fraction(0),
    Fraction(1, 2), Fraction(1), Fraction(2),
)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    algebra: LieAlgebra
    geometry: Metric
    cocycle: Cocycle
    expected: dict
    numeric_model: Optional[str] = None
    notes: tuple[str, ...] = ()

    def build_triple(self) -> Triple:
        from .hawkins import triple as make_triple

        return make_triple(self.algebra, self.cocycle, self.geometry, check=True)


def _dim4_group_algebra(b, c, beta1, beta2) -> LieAlgebra:
    """Normal-form group algebra on (e0, e1, e2, e3).

    [e1,e2] = b e2 - c e3, [e1,e3] = c e2 + b e3, [e2,e3] = beta1 e0 + beta2 e1.
    """
    b, c, beta1, beta2 = (rat(x) for x in (b, c, beta1, beta2))
    entries = []
    if b:
        entries += [(2, 3, 3, b), (2, 4, 4, b)]
    if c:
        entries += [(2, 3, 4, -c), (2, 4, 3, c)]
    if beta1:
        entries += [(3, 4, 1, beta1)]
    if beta2:
        entries += [(3, 4, 2, beta2)]
    return lie_algebra(4, entries, labels=("e0", "e1", "e2", "e3"))


def _dim4_group_cocycle() -> Cocycle:
    """xi(e2) = e0 ^ e3, xi(e3) = -e0 ^ e2 on the normal-form basis."""
    return cocycle_from_entries(4, [(3, 1, 4, 1), (4, 1, 3, -1)])


_EXPECT_OK = {"flat": True, "metaflat": True, "volume": "satisfied", "status": "satisfied"}


def _linear_case_entry() -> CatalogEntry:
    base = milnor_from_skew_data([(1, 2)])
    xi = Cocycle(
        base.dim,
        tuple(exterior.retag(v, PRIMAL) for v in bracket_dual_cocycle(base).values),
        PRIMAL,
    )
    return CatalogEntry(
        name="linear-q2r1",
        description=(
            "linear Poisson structure of a 4-dimensional Milnor algebra with "
            "rotation weight (1,2) on an abelian base"
        ),
        algebra=abelian(4),
        geometry=identity_metric(4),
        cocycle=xi,
        expected=dict(_EXPECT_OK),
    )


def catalog() -> list[CatalogEntry]:
    """Every low-dimensional model with its expected verdicts."""
    entries: list[CatalogEntry] = []
    entries.append(
        CatalogEntry(
            name="dim2-trivial",
            description="abelian plane with the zero cocycle",
            algebra=abelian(2),
            geometry=identity_metric(2),
            cocycle=zero_cocycle(2),
            expected=dict(_EXPECT_OK),
        )
    )
    entries.append(
        CatalogEntry(
            name="dim2-nonzero",
            description="abelian plane with a nonzero cocycle (never compatible)",
            algebra=abelian(2),
            geometry=identity_metric(2),
            cocycle=cocycle_from_entries(2, [(1, 1, 2, 1)]),
            expected={"flat": False, "metaflat": False, "volume": "violated", "status": "violated"},
        )
    )
    entries.append(
        CatalogEntry(
            name="dim3-abelian",
            description="abelian R^3 with the rotation cocycle and Euclidean product",
            algebra=abelian(3),
            geometry=identity_metric(3),
            cocycle=cocycle_from_entries(3, [(2, 1, 3, -1), (3, 1, 2, 1)]),
            expected=dict(_EXPECT_OK),
            numeric_model="dim3-abelian",
        )
    )
    entries.append(
        CatalogEntry(
            name="dim3-heisenberg",
            description="Heisenberg algebra with the rotation cocycle, product diag(1,1,2)",
            algebra=lie_algebra(3, [(1, 2, 3, 1)]),
            geometry=make_metric(Matrix.diagonal([1, 1, 2])),
            cocycle=cocycle_from_entries(3, [(1, 2, 3, 1), (2, 1, 3, -1)]),
            expected=dict(_EXPECT_OK),
            numeric_model="dim3-heisenberg",
        )
    )
    entries.append(
        CatalogEntry(
            name="dim3-family-a1",
            description=(
                "solvable dual model at family parameters a=1, c=0: flat and "
                "metaflat, volume condition fails"
            ),
            algebra=lie_algebra(3, [(1, 2, 2, 1), (1, 3, 3, 1)]),
            geometry=identity_metric(3),
            cocycle=cocycle_from_entries(3, [(2, 1, 3, -1), (3, 1, 2, 1)]),
            expected={"flat": True, "metaflat": True, "volume": "violated", "status": "violated"},
        )
    )
    dim4_params = {
        "a": (0, 0, 0, 0),
        "b": (0, 0, 1, 0),
        "c": (0, 0, 0, 1),
        "d": (0, 1, 0, 0),
        "e": (0, 1, 1, 0),
        "f": (0, 1, 0, 1),
    }
    block_gram = Matrix(
        [[2, 1, 0, 0], [1, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 3]]
    )
    for tag, (b, c, beta1, beta2) in dim4_params.items():
        geometry = identity_metric(4)
        notes: tuple[str, ...] = ()
        if tag in ("e", "f"):
            geometry = make_metric(block_gram)
            notes = (
                "scalar product reconstructed as a symmetric block matrix with "
                "sample values; the source display omits the symmetric entry",
            )
        entries.append(
            CatalogEntry(
                name=f"dim4-unimodular-{tag}",
                description=f"dim-4 unimodular normal form, parameters (b,c,beta1,beta2)=({b},{c},{beta1},{beta2})",
                algebra=_dim4_group_algebra(b, c, beta1, beta2),
                geometry=geometry,
                cocycle=_dim4_group_cocycle(),
                expected=dict(_EXPECT_OK),
                numeric_model="dim4-unimodular-a" if tag == "a" else None,
                notes=notes,
            )
        )
    entries.append(
        CatalogEntry(
            name="dim4-nonunimodular",
            description="dim-4 normal form with b=1, c=1: volume decided numerically",
            algebra=_dim4_group_algebra(1, 1, 0, 0),
            geometry=identity_metric(4),
            cocycle=_dim4_group_cocycle(),
            expected={
                "flat": True,
                "metaflat": True,
                "volume": "necessary-only-passed",
                "status": "undecidable",
            },
            numeric_model="dim4-nonunimodular",
        )
    )
    entries.append(_linear_case_entry())
    return entries


def catalog_entry(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(f"unknown catalog entry {name!r}")


@dataclass(frozen=True)
class VerifyResult:
    entry: CatalogEntry
    report: HawkinsReport
    ok: bool
    diffs: tuple[str, ...]


def catalog_verify(name: str) -> VerifyResult:
    """Run the full report for a catalog entry and diff against expectations."""
    entry = catalog_entry(name)
    report = full_report(entry.build_triple())
    actual = {
        "flat": report.is_flat,
        "metaflat": report.is_metaflat,
        "volume": report.volume_verdict,
        "status": report.status(),
    }
    diffs = tuple(
        f"{key}: expected {entry.expected[key]!r}, got {actual[key]!r}"
        for key in sorted(entry.expected)
        if actual.get(key) != entry.expected[key]
    )
    return VerifyResult(entry, report, not diffs, diffs)
