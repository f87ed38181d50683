"""Exact exterior algebra over a based n-dimensional space and its dual.

Multivectors and forms are sparse maps from strictly increasing index tuples
(1-based) to rationals.  Each value carries a space tag, ``primal`` or
``dual``; wedge requires equal tags while pairing and interior products
require opposite ones.

Convention: the interior product by a decomposable 2-vector contracts the
first factor first, ``i_{a^b} = i_b . i_a``.  This is pinned by the
requirement that contracting the rotation cocycle into the top form of the
3-dimensional solvable model reproduces the catalog identities with the
correct sign (see tests).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Mapping

from .linalg import Vector, rat, rat_from_str, rat_to_str

if TYPE_CHECKING:  # pragma: no cover
    from .lie import LieAlgebra

MultiIndex = tuple[int, ...]

PRIMAL = "primal"
DUAL = "dual"


class ExteriorError(ValueError):
    """Base error for exterior algebra operations."""


class SpaceMismatch(ExteriorError):
    pass


class DegreeMismatch(ExteriorError):
    pass


def _opposite(space: str) -> str:
    return DUAL if space == PRIMAL else PRIMAL


def _check_space(space: str) -> str:
    if space not in (PRIMAL, DUAL):
        raise ExteriorError(f"unknown space tag {space!r}")
    return space


@dataclass(frozen=True, eq=True)
class KVector:
    """Exact element of Lambda^k of a based space (or its dual)."""

    dim: int
    degree: int
    space: str
    coeffs: Mapping[MultiIndex, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        _check_space(self.space)
        if not 0 <= self.degree <= self.dim:
            raise DegreeMismatch(
                f"degree {self.degree} out of range for dim {self.dim}"
            )
        clean: dict[MultiIndex, Fraction] = {}
        for key, value in self.coeffs.items():
            key = tuple(key)
            if len(key) != self.degree:
                raise ExteriorError(f"index {key} has wrong length for degree {self.degree}")
            if any(not 1 <= i <= self.dim for i in key):
                raise ExteriorError(f"index {key} out of range 1..{self.dim}")
            if any(key[a] >= key[a + 1] for a in range(len(key) - 1)):
                raise ExteriorError(f"index {key} is not strictly increasing")
            q = rat(value)
            if q != 0:
                clean[key] = q
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def get(self, key: MultiIndex) -> Fraction:
        return self.coeffs.get(tuple(key), Fraction(0))

    def __add__(self, other: "KVector") -> "KVector":
        self._require_like(other)
        merged = dict(self.coeffs)
        for key, value in other.coeffs.items():
            merged[key] = merged.get(key, Fraction(0)) + value
        return KVector(self.dim, self.degree, self.space, merged)

    def __sub__(self, other: "KVector") -> "KVector":
        return self + (-other)

    def __neg__(self) -> "KVector":
        return KVector(
            self.dim, self.degree, self.space,
            {k: -v for k, v in self.coeffs.items()},
        )

    def __mul__(self, scalar) -> "KVector":
        c = rat(scalar)
        return KVector(
            self.dim, self.degree, self.space,
            {k: c * v for k, v in self.coeffs.items()},
        )

    __rmul__ = __mul__

    def _require_like(self, other: "KVector") -> None:
        if self.dim != other.dim:
            raise DegreeMismatch("ambient dimensions differ")
        if self.degree != other.degree:
            raise DegreeMismatch("degrees differ")
        if self.space != other.space:
            raise SpaceMismatch("space tags differ")

    def __repr__(self) -> str:
        if not self.coeffs:
            body = "0"
        else:
            body = " + ".join(
                f"{rat_to_str(v)}*e{''.join(map(str, k))}" for k, v in self.coeffs.items()
            )
        return f"KVector({self.space}, deg {self.degree}, {body})"


def zero(dim: int, degree: int, space: str) -> KVector:
    return KVector(dim, degree, space, {})


def basis(dim: int, indices: Iterable[int], space: str) -> KVector:
    """Basis k-vector e_{i1} ^ ... ^ e_{ik} for strictly increasing indices."""
    key = tuple(indices)
    return KVector(dim, len(key), space, {key: Fraction(1)})


def top_form(dim: int, space: str = DUAL) -> KVector:
    """The wedge of the full ordered basis, e.g. the standard volume element."""
    return basis(dim, range(1, dim + 1), space)


def from_vector(v: Vector, space: str) -> KVector:
    """Degree-1 element with the given coefficients."""
    return KVector(
        len(v), 1, space, {(i + 1,): c for i, c in enumerate(v) if c != 0}
    )


def to_vector(kv: KVector) -> Vector:
    if kv.degree != 1:
        raise DegreeMismatch("only degree-1 elements convert to plain vectors")
    return tuple(kv.get((i,)) for i in range(1, kv.dim + 1))


def retag(kv: KVector, space: str) -> KVector:
    """Same coefficients, different space tag (explicit role swap)."""
    return KVector(kv.dim, kv.degree, _check_space(space), dict(kv.coeffs))


def to_entries(kv: KVector) -> list[list]:
    """Serialize as ``[i1, ..., ik, "p/q"]`` rows sorted by index tuple."""
    return [
        list(key) + [rat_to_str(value)] for key, value in sorted(kv.coeffs.items())
    ]


def from_entries(dim: int, degree: int, space: str, entries: Iterable) -> KVector:
    coeffs: dict[MultiIndex, Fraction] = {}
    for entry in entries:
        entry = list(entry)
        key = tuple(int(i) for i in entry[:-1])
        value = rat_from_str(entry[-1]) if isinstance(entry[-1], str) else rat(entry[-1])
        if key in coeffs:
            raise ExteriorError(f"duplicate index {key}")
        coeffs[key] = value
    return KVector(dim, degree, space, coeffs)


def _merge_sign(left: MultiIndex, right: MultiIndex) -> tuple[int, MultiIndex]:
    """Sign and sorted union of two disjoint increasing tuples; sign 0 on overlap."""
    if set(left) & set(right):
        return 0, ()
    merged = tuple(sorted(left + right))
    inversions = sum(1 for a in left for b in right if a > b)
    return (-1) ** inversions, merged


def wedge(a: KVector, b: KVector) -> KVector:
    """Exterior product; degree overflow yields the zero element."""
    if a.dim != b.dim:
        raise DegreeMismatch("ambient dimensions differ")
    if a.space != b.space:
        raise SpaceMismatch("wedge requires equal space tags")
    degree = a.degree + b.degree
    if degree > a.dim:
        return zero(a.dim, a.dim, a.space)
    out: dict[MultiIndex, Fraction] = {}
    for ka, va in a.coeffs.items():
        for kb, vb in b.coeffs.items():
            sign, key = _merge_sign(ka, kb)
            if sign:
                out[key] = out.get(key, Fraction(0)) + sign * va * vb
    return KVector(a.dim, degree, a.space, out)


def pairing(omega: KVector, x: KVector) -> Fraction:
    """Duality pairing <omega, x> = det of the slotwise evaluations.

    On sorted basis elements the pairing is the Kronecker delta, so the sum
    below implements the determinant convention
    <a1^...^ak, u1^...^uk> = det[ai(uj)].
    """
    if omega.space != DUAL or x.space != PRIMAL:
        raise SpaceMismatch("pairing takes a dual element first, a primal one second")
    if omega.dim != x.dim or omega.degree != x.degree:
        raise DegreeMismatch("pairing requires equal dimension and degree")
    total = Fraction(0)
    for key, value in omega.coeffs.items():
        total += value * x.get(key)
    return total


def _contract_once(index: int, x: KVector) -> KVector:
    out: dict[MultiIndex, Fraction] = {}
    for key, value in x.coeffs.items():
        if index in key:
            pos = key.index(index)
            rest = key[:pos] + key[pos + 1:]
            out[rest] = out.get(rest, Fraction(0)) + (-1) ** pos * value
    return KVector(x.dim, x.degree - 1, x.space, out)


def interior(alpha: KVector, x: KVector) -> KVector:
    """Interior product of a degree-1 or degree-2 element into x.

    For decomposables, ``i_{a^b} = i_b . i_a``; everything else extends
    bilinearly.
    """
    if alpha.dim != x.dim:
        raise DegreeMismatch("ambient dimensions differ")
    if alpha.space != _opposite(x.space):
        raise SpaceMismatch("interior product requires opposite space tags")
    if alpha.degree not in (1, 2):
        raise DegreeMismatch("interior product implemented for degrees 1 and 2")
    if alpha.degree > x.degree:
        raise DegreeMismatch("contraction degree exceeds target degree")
    result = zero(x.dim, x.degree - alpha.degree, x.space)
    for key, value in alpha.coeffs.items():
        if alpha.degree == 1:
            term = _contract_once(key[0], x)
        else:
            term = _contract_once(key[1], _contract_once(key[0], x))
        result = result + value * term
    return result


def _evaluate(omega: KVector, prefix: Vector, rest: MultiIndex) -> Fraction:
    """omega(v, e_{rest}) for a vector v in the opposite space, by expansion."""
    total = Fraction(0)
    rest_set = set(rest)
    for m, c in enumerate(prefix, start=1):
        if c == 0 or m in rest_set:
            continue
        smaller = sum(1 for r in rest if r < m)
        key = tuple(sorted((m,) + rest))
        total += (-1) ** smaller * c * omega.get(key)
    return total


def ce_differential(alg: "LieAlgebra", omega: KVector) -> KVector:
    """Chevalley-Eilenberg differential of a dual k-element.

    (d w)(u_0,...,u_k) = sum_{i<j} (-1)^{i+j} w([u_i,u_j], u_0,..^i..^j..,u_k).
    """
    from .lie import bracket_basis

    if omega.space != DUAL:
        raise SpaceMismatch("the differential acts on dual elements")
    if omega.dim != alg.dim:
        raise DegreeMismatch("form and algebra dimensions differ")
    if omega.degree >= omega.dim:
        raise DegreeMismatch("differential of a top-degree element")
    n, k = omega.dim, omega.degree
    out: dict[MultiIndex, Fraction] = {}
    for key in combinations(range(1, n + 1), k + 1):
        total = Fraction(0)
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                bracket = bracket_basis(alg, key[a], key[b])
                rest = tuple(key[p] for p in range(k + 1) if p not in (a, b))
                total += (-1) ** (a + b) * _evaluate(omega, bracket, rest)
        if total != 0:
            out[key] = total
    return KVector(n, k + 1, DUAL, out)
