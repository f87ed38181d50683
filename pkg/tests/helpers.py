"""Shared builders for the test suite: seed algebras, random instances."""

from __future__ import annotations

import random
from fractions import Fraction

from poissonlie import classify
from poissonlie.bialgebra import Cocycle, bracket_dual_cocycle
from poissonlie.exterior import PRIMAL, retag
from poissonlie.lie import (
    LieAlgebra,
    Metric,
    abelian,
    bracket_of,
    lie_algebra,
    metric as make_metric,
)
from poissonlie.linalg import Matrix, inverse


def rand_rat(rng: random.Random, span: int = 2) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice((1, 1, 2)))


def random_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        m = Matrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if m.det() != 0:
            return m


def random_pd_metric(rng: random.Random, n: int) -> Metric:
    a = Matrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
    gram = a.transpose() * a + Matrix.identity(n)
    return make_metric(gram)


def conjugate(alg: LieAlgebra, t: Matrix) -> LieAlgebra:
    """Bracket transported through the basis change: [u,v]' = T^-1 [Tu, Tv]."""
    t_inv = inverse(t)
    entries = []
    for i in range(1, alg.dim + 1):
        for j in range(i + 1, alg.dim + 1):
            w = t_inv.apply(bracket_of(alg, t.column(i - 1), t.column(j - 1)))
            for k, c in enumerate(w, start=1):
                if c != 0:
                    entries.append((i, j, k, c))
    return lie_algebra(alg.dim, entries)


def seed_algebras(dim: int) -> list[LieAlgebra]:
    """Known-valid Lie algebras used as conjugation seeds."""
    if dim == 2:
        return [abelian(2), lie_algebra(2, [(1, 2, 2, 1)])]
    if dim == 3:
        return [
            abelian(3),
            lie_algebra(3, [(1, 2, 3, 1)]),                                   # Heisenberg
            classify.milnor_dim3(),
            classify.milnor_dim3(2),
            lie_algebra(3, [(1, 2, 3, 1), (1, 3, 2, -1), (2, 3, 1, 1)]),      # so(3) type
            lie_algebra(3, [(1, 2, 2, 1), (1, 3, 3, 1)]),                     # solvable book
        ]
    if dim == 4:
        return [
            abelian(4),
            classify.milnor_dim4(),
            lie_algebra(4, [(2, 3, 3, 1), (2, 4, 4, 1)]),
            lie_algebra(4, [(2, 3, 4, -1), (2, 4, 3, 1), (3, 4, 1, 1)]),
            lie_algebra(4, [(2, 3, 4, -1), (2, 4, 3, 1)]),
        ]
    raise ValueError(f"no seed algebras for dimension {dim}")


def random_algebra(rng: random.Random, dim: int) -> LieAlgebra:
    base = rng.choice(seed_algebras(dim))
    return conjugate(base, random_invertible(rng, dim))


def cocycle_with_dual(target: LieAlgebra) -> Cocycle:
    """Cocycle whose induced dual bracket is the given algebra's bracket."""
    rho = bracket_dual_cocycle(target)
    return Cocycle(target.dim, tuple(retag(v, PRIMAL) for v in rho.values), PRIMAL)


def wedge2_matrix(m: Matrix) -> Matrix:
    """Induced map on sorted pair coordinates: e_i ^ e_j -> m e_i ^ m e_j."""
    from poissonlie.lie import wedge2_basis

    pairs = wedge2_basis(m.rows)
    entries = []
    for (k, l) in pairs:
        row = []
        for (i, j) in pairs:
            row.append(
                m[k - 1, i - 1] * m[l - 1, j - 1] - m[l - 1, i - 1] * m[k - 1, j - 1]
            )
        entries.append(row)
    return Matrix(entries)


def transport_triple(t, basis_change: Matrix):
    """The same geometric data written in the basis f_j = sum_i T_ij e_i."""
    from poissonlie.bialgebra import Cocycle as Xi
    from poissonlie.exterior import KVector
    from poissonlie.hawkins import triple as make_triple
    from poissonlie.lie import wedge2_basis

    n = t.dim
    new_alg = conjugate(t.algebra, basis_change)
    new_gram = basis_change.transpose() * t.geometry.gram * basis_change
    pairs = wedge2_basis(n)
    lam2_inv = wedge2_matrix(inverse(basis_change))
    values = []
    for j in range(n):
        old = [Fraction(0)] * len(pairs)
        for i in range(n):
            c = basis_change[i, j]
            if c != 0:
                value_i = t.cocycle.of_basis(i + 1)
                old = [x + c * value_i.get(p) for x, p in zip(old, pairs)]
        new = lam2_inv.apply(old)
        values.append(
            KVector(n, 2, "primal", {p: q for p, q in zip(pairs, new) if q != 0})
        )
    new_xi = Xi(n, tuple(values), "primal")
    return make_triple(new_alg, new_xi, make_metric(new_gram), check=True)
