"""Cocycles, dual brackets, the dual cocycle sign lock, modular forms."""

import random
from fractions import Fraction

import pytest

from poissonlie import classify, exterior
from poissonlie.bialgebra import (
    Bialgebra,
    BialgebraError,
    Cocycle,
    CocycleConditionError,
    DualJacobiError,
    bialgebra,
    bracket_dual_cocycle,
    cocycle_defect,
    cocycle_entries,
    cocycle_from_entries,
    dual_algebra,
    dual_bialgebra,
    dual_bracket,
    dual_cocycle,
    is_cocycle,
    modular_form,
    zero_cocycle,
)
from poissonlie.exterior import DUAL, PRIMAL, basis, ce_differential
from poissonlie.lie import abelian, is_unimodular
from poissonlie.linalg import vec

from helpers import cocycle_with_dual, random_algebra, seed_algebras

MILNOR3 = classify.milnor_dim3()


def rho3(a, c):
    return classify.rho_dim3(a, c)


def test_zero_cocycle_gives_abelian_dual():
    bi = bialgebra(abelian(3), zero_cocycle(3))
    assert not bi.dual.brackets
    assert is_cocycle(bi).ok


def test_dual_bracket_family_values():
    # [e1*, e2*] = a e2*, [e2*, e3*] = c e1* for the three-parameter family
    a, c = Fraction(5, 2), Fraction(-3)
    bi = bialgebra(MILNOR3, rho3(a, 0), check=False)
    assert dual_bracket(bi, [1, 0, 0], [0, 1, 0]) == vec([0, a, 0])
    assert dual_bracket(bi, [1, 0, 0], [0, 0, 1]) == vec([0, 0, a])
    bi2 = bialgebra(MILNOR3, rho3(0, c), check=False)
    assert dual_bracket(bi2, [0, 1, 0], [0, 0, 1]) == vec([c, 0, 0])


def test_dual_bracket_dim4_values():
    # [e1*, f1*] = b f1* - c f2* on the five-parameter family
    b, c = Fraction(2), Fraction(7)
    bi = bialgebra(classify.milnor_dim4(), classify.rho_dim4(0, 0, b, c, 0), check=False)
    assert dual_bracket(bi, [1, 0, 0, 0], [0, 0, 1, 0]) == vec([0, 0, b, -c])
    assert dual_bracket(bi, [1, 0, 0, 0], [0, 0, 0, 1]) == vec([0, 0, c, b])


def test_dual_algebra_heisenberg_type():
    # a = 0 branch: only [e2*, e3*] = c e1* survives
    c = Fraction(4)
    bi = bialgebra(MILNOR3, rho3(0, c))
    assert bi.dual.brackets == {(2, 3): vec([c, 0, 0])}


def test_cocycle_defect_antisymmetry_and_witness():
    rng = random.Random(3)
    bad = cocycle_from_entries(3, [(2, 1, 3, 1)])
    bi = bialgebra(MILNOR3, bad, check=False)
    assert not is_cocycle(bi).ok
    for _ in range(15):
        u = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
        v = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
        assert cocycle_defect(bi, u, v) == -cocycle_defect(bi, v, u)


def test_cocycle_condition_pins_family():
    # the generic candidate reduces to the two-parameter family: any value
    # outside it has a nonzero defect, every family member has none
    for a in (0, 1, 2):
        for c in (0, -1, 3):
            bi = bialgebra(MILNOR3, rho3(a, c), check=False)
            assert is_cocycle(bi).ok
    offender = cocycle_from_entries(3, [(2, 2, 3, 1)])  # c1 coefficient
    assert not is_cocycle(bialgebra(MILNOR3, offender, check=False)).ok


def test_dim4_family_is_cocycle():
    rng = random.Random(5)
    for _ in range(6):
        params = [Fraction(rng.randint(-2, 2)) for _ in range(5)]
        bi = bialgebra(classify.milnor_dim4(), classify.rho_dim4(*params), check=False)
        assert is_cocycle(bi).ok


def test_checked_construction_raises_on_bad_input():
    with pytest.raises(CocycleConditionError):
        bialgebra(MILNOR3, cocycle_from_entries(3, [(2, 1, 3, 1)]))
    with pytest.raises(DualJacobiError):
        bialgebra(MILNOR3, rho3(1, 1))  # 2ac != 0


def test_dual_cocycle_equals_minus_differential_everywhere():
    # sign-convention lock on seeds and random conjugates
    rng = random.Random(7)
    for dim in (2, 3, 4):
        algs = seed_algebras(dim) + [random_algebra(rng, dim) for _ in range(4)]
        for alg in algs:
            rho = bracket_dual_cocycle(alg)
            for i in range(1, dim + 1):
                expected = Fraction(-1) * ce_differential(alg, basis(dim, [i], DUAL))
                assert rho.of_basis(i) == expected


def test_double_dual_round_trip():
    for a, c in ((0, 3), (2, 0), (0, 0)):
        bi = bialgebra(MILNOR3, rho3(a, c))
        dd = dual_bialgebra(bi)
        assert dd.dual.brackets == MILNOR3.brackets
    bi4 = bialgebra(classify.milnor_dim4(), classify.rho_dim4(0, 0, 1, 2, 3))
    assert dual_bialgebra(bi4).dual.brackets == classify.milnor_dim4().brackets


def test_modular_form_values_and_unimodularity_link():
    # kappa = (2a, 0, 0) in dimension 3
    for a in (Fraction(1), Fraction(-5, 2)):
        bi = bialgebra(MILNOR3, rho3(a, 0))
        assert modular_form(bi) == vec([2 * a, 0, 0])
        assert (modular_form(bi) == vec([0, 0, 0])) == is_unimodular(dual_algebra(bi))
    # kappa = (2b, 2d, 0, 0) in dimension 4
    b, d = Fraction(3, 2), Fraction(-2)
    bi4 = bialgebra(
        classify.milnor_dim4(), classify.rho_dim4(0, 0, b, 1, d), check=False
    )
    assert modular_form(bi4) == vec([2 * b, 2 * d, 0, 0])
    assert modular_form(bialgebra(abelian(3), zero_cocycle(3))) == vec([0, 0, 0])


def test_cocycle_serialization_roundtrip():
    xi = classify.rho_dim4(1, 0, Fraction(-1, 2), 0, 3)
    entries = cocycle_entries(xi)
    back = cocycle_from_entries(4, entries)
    assert back == xi


def test_cocycle_construction_validation():
    with pytest.raises(BialgebraError):
        cocycle_from_entries(3, [(1, 3, 2, 1)])  # j >= k
    with pytest.raises(BialgebraError):
        cocycle_from_entries(3, [(4, 1, 2, 1)])  # out of range
    with pytest.raises(BialgebraError):
        Cocycle(3, (exterior.zero(3, 2, PRIMAL),) * 2)  # wrong arity


def test_cocycle_with_dual_helper_recovers_target():
    rng = random.Random(11)
    for dim in (2, 3, 4):
        target = random_algebra(rng, dim)
        xi = cocycle_with_dual(target)
        bi = bialgebra(abelian(dim), xi, check=False)
        assert bi.dual.brackets == target.brackets
