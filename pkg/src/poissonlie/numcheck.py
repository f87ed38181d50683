"""Floating-point verification of the group models in coordinates.

The algebraic verdicts certify conditions at the identity; this module checks
the corresponding statements on the actual groups: closedness of the Poisson
tensor contracted into the Riemannian volume, and multiplicativity of the
tensor under the group law.  Derivatives are central finite differences, so
residuals scale as the square of the step.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import cos, exp, sin, sqrt
from typing import Callable, Optional

import numpy as np

Point = np.ndarray
FormComponents = dict[tuple[int, ...], float]

DEFAULT_STEP = 1e-4
DEFAULT_TOL = 1e-5
DEFAULT_POINTS = 100
DEFAULT_SEED = 20240411


class NumcheckError(ValueError):
    pass


@dataclass(frozen=True)
class NumericTolerance:
    fd_step: float = DEFAULT_STEP
    abs_tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not 1e-6 <= self.fd_step <= 1e-2:
            raise NumcheckError("finite-difference step outside [1e-6, 1e-2]")
        if self.abs_tol <= 0:
            raise NumcheckError("tolerance must be positive")


@dataclass(frozen=True)
class CoordinateModel:
    """Group model in global coordinates.

    ``pi_eval`` returns the exactly antisymmetric component matrix of the
    Poisson tensor, ``mu_eval`` the strictly positive volume density against
    the coordinate top form.  ``group_law`` is optional; when present the
    multiplicativity check is available.  ``ipmu_closed_form`` optionally
    gives the analytically known contraction for cross-checking.
    """

    name: str
    dim: int
    pi_eval: Callable[[Point], np.ndarray]
    mu_eval: Callable[[Point], float]
    box: tuple[float, float] = (-1.0, 1.0)
    group_law: Optional[Callable[[Point, Point], Point]] = None
    ipmu_closed_form: Optional[Callable[[Point], FormComponents]] = None
    description: str = ""


def _check_point(model: CoordinateModel, point: Point, margin: float) -> None:
    lo, hi = model.box
    if np.any(point < lo + margin) or np.any(point > hi - margin):
        raise NumcheckError(f"point {point} too close to the domain boundary")


def _contract_once_f(form: FormComponents, index: int) -> FormComponents:
    out: FormComponents = {}
    for key, value in form.items():
        if index in key:
            pos = key.index(index)
            rest = key[:pos] + key[pos + 1:]
            out[rest] = out.get(rest, 0.0) + (-1) ** pos * value
    return out


def interior_contraction(pi: np.ndarray, density: float, dim: int) -> FormComponents:
    """i_pi of (density * dx_1 ^ ... ^ dx_n), exact multilinear contraction.

    Uses the same convention as the exact exterior module: a decomposable
    bivector contracts its first factor first.
    """
    top: FormComponents = {tuple(range(1, dim + 1)): float(density)}
    out: FormComponents = {}
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            c = float(pi[i - 1, j - 1])
            if c == 0.0:
                continue
            term = _contract_once_f(_contract_once_f(top, i), j)
            for key, value in term.items():
                out[key] = out.get(key, 0.0) + c * value
    return {k: v for k, v in out.items() if v != 0.0}


def fd_exterior_derivative(
    form_eval: Callable[[Point], FormComponents],
    degree: int,
    dim: int,
    point: Point,
    step: float = DEFAULT_STEP,
) -> FormComponents:
    """Central-difference exterior derivative of a coordinate form.

    (d w)_{i0..ik} = sum_j (-1)^j d_{i_j} w_{i0..^j..ik}.
    """
    partials: list[FormComponents] = []
    for axis in range(dim):
        shift = np.zeros(dim)
        shift[axis] = step
        plus = form_eval(point + shift)
        minus = form_eval(point - shift)
        keys = set(plus) | set(minus)
        partials.append(
            {k: (plus.get(k, 0.0) - minus.get(k, 0.0)) / (2 * step) for k in keys}
        )
    out: FormComponents = {}
    for key in combinations(range(1, dim + 1), degree + 1):
        total = 0.0
        for pos, idx in enumerate(key):
            rest = key[:pos] + key[pos + 1:]
            total += (-1) ** pos * partials[idx - 1].get(rest, 0.0)
        if total != 0.0:
            out[key] = total
    return out


def _sample_points(model: CoordinateModel, count: int, seed: int, margin: float) -> np.ndarray:
    rng = np.random.default_rng(seed)
    lo, hi = model.box
    return rng.uniform(lo + margin, hi - margin, size=(count, model.dim))


@dataclass(frozen=True)
class VolumeCheckReport:
    model: str
    points: int
    step: float
    tol: float
    max_residual: float
    worst_point: tuple[float, ...]
    closed_form_max_dev: Optional[float]
    passed: bool


def check_volume_condition(
    model: CoordinateModel,
    points: int = DEFAULT_POINTS,
    step: float = DEFAULT_STEP,
    tol: float = DEFAULT_TOL,
    seed: int = DEFAULT_SEED,
) -> VolumeCheckReport:
    """Max |d(i_pi mu)| component over seeded sample points."""
    NumericTolerance(step, tol)
    margin = 10 * step

    def ipmu(q: Point) -> FormComponents:
        pi = np.asarray(model.pi_eval(q), dtype=float)
        if not np.allclose(pi, -pi.T, rtol=0, atol=0):
            raise NumcheckError(f"pi is not exactly antisymmetric at {q}")
        density = float(model.mu_eval(q))
        if density <= 0:
            raise NumcheckError(f"degenerate volume density at {q}")
        return interior_contraction(pi, density, model.dim)

    samples = _sample_points(model, points, seed, margin)
    max_residual = 0.0
    worst = samples[0]
    closed_dev: Optional[float] = None
    for q in samples:
        _check_point(model, q, step)
        d = fd_exterior_derivative(ipmu, model.dim - 2, model.dim, q, step)
        residual = max((abs(v) for v in d.values()), default=0.0)
        if residual > max_residual:
            max_residual = residual
            worst = q
        if model.ipmu_closed_form is not None:
            reference = model.ipmu_closed_form(q)
            mine = ipmu(q)
            keys = set(reference) | set(mine)
            dev = max(
                (abs(reference.get(k, 0.0) - mine.get(k, 0.0)) for k in keys),
                default=0.0,
            )
            closed_dev = dev if closed_dev is None else max(closed_dev, dev)
    return VolumeCheckReport(
        model=model.name,
        points=points,
        step=step,
        tol=tol,
        max_residual=max_residual,
        worst_point=tuple(float(x) for x in worst),
        closed_form_max_dev=closed_dev,
        passed=max_residual < tol,
    )


@dataclass(frozen=True)
class MultiplicativityReport:
    model: str
    pairs: int
    step: float
    tol: float
    max_deviation: float
    passed: bool


def _jacobian(f: Callable[[Point], Point], point: Point, dim: int, step: float) -> np.ndarray:
    cols = []
    for axis in range(dim):
        shift = np.zeros(dim)
        shift[axis] = step
        cols.append((f(point + shift) - f(point - shift)) / (2 * step))
    return np.column_stack(cols)


def check_multiplicativity(
    model: CoordinateModel,
    pairs: int = 50,
    step: float = DEFAULT_STEP,
    tol: float = DEFAULT_TOL,
    seed: int = DEFAULT_SEED,
) -> MultiplicativityReport:
    """Frobenius deviation of pi(ab) - L_a* pi(b) - R_b* pi(a) over random pairs.

    Translation differentials come from finite differences of the group law;
    on the abelian models they reduce to identities, which the tests use as a
    calibration.
    """
    if model.group_law is None:
        raise NumcheckError(f"model {model.name} has no group law")
    law = model.group_law
    rng = np.random.default_rng(seed)
    lo, hi = model.box
    max_dev = 0.0
    for _ in range(pairs):
        a = rng.uniform(lo / 2, hi / 2, size=model.dim)
        b = rng.uniform(lo / 2, hi / 2, size=model.dim)
        ab = law(a, b)
        jl = _jacobian(lambda v: law(a, v), b, model.dim, step)
        jr = _jacobian(lambda u: law(u, b), a, model.dim, step)
        lhs = np.asarray(model.pi_eval(ab), dtype=float)
        rhs = jl @ np.asarray(model.pi_eval(b), dtype=float) @ jl.T
        rhs = rhs + jr @ np.asarray(model.pi_eval(a), dtype=float) @ jr.T
        dev = float(np.linalg.norm(lhs - rhs))
        max_dev = max(max_dev, dev)
    return MultiplicativityReport(
        model=model.name,
        pairs=pairs,
        step=step,
        tol=tol,
        max_deviation=max_dev,
        passed=max_dev < tol,
    )


def with_density_factor(
    model: CoordinateModel, factor: Callable[[Point], float], suffix: str = "perturbed"
) -> CoordinateModel:
    """Copy of the model with the volume density multiplied pointwise."""
    return CoordinateModel(
        name=f"{model.name}-{suffix}",
        dim=model.dim,
        pi_eval=model.pi_eval,
        mu_eval=lambda q: model.mu_eval(q) * factor(q),
        box=model.box,
        group_law=model.group_law,
        ipmu_closed_form=None,
        description=f"{model.description} (perturbed density)",
    )


# ---------------------------------------------------------------------------
# the catalog models
# ---------------------------------------------------------------------------


def _dim3_abelian(lam: float = 1.0) -> CoordinateModel:
    def pi_eval(q: Point) -> np.ndarray:
        x, y, z = q
        m = np.zeros((3, 3))
        m[0, 1], m[0, 2] = lam * z, -lam * y
        return m - m.T

    return CoordinateModel(
        name="dim3-abelian",
        dim=3,
        pi_eval=pi_eval,
        mu_eval=lambda q: 1.0,
        group_law=lambda a, b: a + b,
        ipmu_closed_form=lambda q: {(2,): lam * q[1], (3,): lam * q[2]},
        description="abelian R^3 with the rotation bivector, Euclidean volume",
    )


def _dim3_heisenberg(lam: float = 1.0, a: float = 2.0) -> CoordinateModel:
    density = sqrt(a)

    def pi_eval(q: Point) -> np.ndarray:
        x, y, z = q
        m = np.zeros((3, 3))
        m[1, 2], m[0, 2] = lam * x, -lam * y
        return m - m.T

    def law(u: Point, v: Point) -> Point:
        x, y, z = u
        xp, yp, zp = v
        return np.array([x + xp, y + yp, z + zp + x * yp])

    return CoordinateModel(
        name="dim3-heisenberg",
        dim=3,
        pi_eval=pi_eval,
        mu_eval=lambda q: density,
        group_law=law,
        ipmu_closed_form=lambda q: {(1,): density * lam * q[0], (2,): density * lam * q[1]},
        description="Heisenberg group, rotation bivector, left-invariant volume",
    )


def _dim4_unimodular_a() -> CoordinateModel:
    def pi_eval(q: Point) -> np.ndarray:
        x, y, z, t = q
        m = np.zeros((4, 4))
        m[0, 3], m[0, 2] = z, -t
        return m - m.T

    return CoordinateModel(
        name="dim4-unimodular-a",
        dim=4,
        pi_eval=pi_eval,
        mu_eval=lambda q: 1.0,
        group_law=lambda a, b: a + b,
        ipmu_closed_form=lambda q: {(2, 3): q[2], (2, 4): q[3]},
        description="abelian R^4 with the rotation bivector in the (z,t) plane",
    )


def _dim4_nonunimodular(b: float = 1.0, c: float = 1.0) -> CoordinateModel:
    def pi_eval(q: Point) -> np.ndarray:
        x, y, z, t = q
        m = np.zeros((4, 4))
        m[1, 3], m[1, 2] = z, -t
        return m - m.T

    def law(u: Point, v: Point) -> Point:
        x, y, z, t = u
        xp, yp, zp, tp = v
        e = exp(x * b)
        cs, sn = cos(x * c), sin(x * c)
        return np.array(
            [
                x + xp,
                y + yp,
                z + e * (zp * cs + tp * sn),
                t + e * (-zp * sn + tp * cs),
            ]
        )

    def closed_form(q: Point) -> FormComponents:
        x, y, z, t = q
        f = exp(-2 * b * x)
        return {(1, 3): -f * z, (1, 4): -f * t}

    return CoordinateModel(
        name="dim4-nonunimodular",
        dim=4,
        pi_eval=pi_eval,
        mu_eval=lambda q: exp(-2 * b * float(q[0])),
        group_law=law,
        ipmu_closed_form=closed_form,
        description="solvable R^4 model with exponential-rotation group law",
    )


_MODEL_BUILDERS: dict[str, Callable[[], CoordinateModel]] = {
    "dim3-abelian": _dim3_abelian,
    "dim3-heisenberg": _dim3_heisenberg,
    "dim4-unimodular-a": _dim4_unimodular_a,
    "dim4-nonunimodular": _dim4_nonunimodular,
}


def model_names() -> list[str]:
    return sorted(_MODEL_BUILDERS)


def get_model(name: str) -> CoordinateModel:
    try:
        return _MODEL_BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown numeric model {name!r}") from None
