import pytest
import sympy

from qslope import DELTA, LaurentPoly, UndefinedDegree, add, mul, scale, t_degrees


A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)


def test_zero_coefficients_are_dropped():
    p = LaurentPoly({3: 0, 1: 2, -1: 0})
    assert p.terms == {1: 2}
    assert len(p) == 1
    assert LaurentPoly({0: 0}).is_zero


def test_arithmetic():
    assert (A + A_INV) ** 2 == LaurentPoly({2: 1, 0: 2, -2: 1})
    assert (A + 1) * (A - 1) == LaurentPoly({2: 1, 0: -1})
    assert A - A == 0
    assert 1 - A == LaurentPoly({0: 1, 1: -1})
    assert 3 * A == A + A + A
    assert -DELTA == LaurentPoly({2: 1, -2: 1})
    assert A ** 0 == 1


def test_module_functions():
    p = LaurentPoly({1: 2, -3: 1})
    q = LaurentPoly({0: 1})
    assert add(p, q) == p + 1
    assert mul(p, q) == p
    assert scale(p, -2) == LaurentPoly({1: -4, -3: -2})
    assert scale(p, 0).is_zero
    assert t_degrees(p) == (-1, 3)


def test_degrees():
    p = LaurentPoly({-6: 1, 2: -1, 10: 3})
    assert p.min_degree == -6
    assert p.max_degree == 10
    # A = t^(-1/4)
    assert p.t_degrees() == (-10, 6)


def test_coefficient():
    p = LaurentPoly({-3: 1, 1: 2})
    assert p.coefficient(1) == 2
    assert p.coefficient(-3) == 1
    assert p.coefficient(0) == 0
    assert DELTA.coefficient(2) == -1
    assert LaurentPoly.zero().coefficient(0) == 0


def test_zero_has_no_degree():
    zero = LaurentPoly.zero()
    with pytest.raises(UndefinedDegree):
        zero.min_degree
    with pytest.raises(UndefinedDegree):
        zero.max_degree
    with pytest.raises(UndefinedDegree):
        zero.t_degrees()


def test_shift_and_invert():
    p = LaurentPoly({1: 2, -3: 1})
    assert p.shift(3) == LaurentPoly({4: 2, 0: 1})
    assert p.invert() == LaurentPoly({-1: 2, 3: 1})
    assert p.invert().invert() == p


def test_hash_and_equality():
    assert hash(LaurentPoly({0: 5})) == hash(5)
    assert LaurentPoly({0: 5}) == 5
    assert {LaurentPoly({1: 1}), A} == {A}
    assert LaurentPoly({1: 1}) != LaurentPoly({1: 2})


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        LaurentPoly({0: 1.5})
    with pytest.raises(TypeError):
        LaurentPoly({0.5: 1})
    with pytest.raises(ValueError):
        A ** -1


def test_pairs_round_trip():
    p = LaurentPoly({-7: 3, 5: -1})
    assert p.to_pairs() == [[-7, 3], [5, -1]]
    assert LaurentPoly.from_pairs(p.to_pairs()) == p
    assert p.to_dict() == {"variable": "A", "terms": [[-7, 3], [5, -1]]}


def test_t_string():
    assert LaurentPoly.zero().to_t_string() == "0"
    assert DELTA.to_t_string() == "-t^(1/2) - t^(-1/2)"
    assert LaurentPoly({-4: 1, 0: -2, 4: 1}).to_t_string() == "t - 2 + t^-1"


def test_as_sympy():
    t = sympy.Symbol("t", positive=True)
    assert sympy.simplify(DELTA.as_sympy() + sympy.sqrt(t) + 1 / sympy.sqrt(t)) == 0
