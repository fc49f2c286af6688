from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from foldspec import algebra
from foldspec.algebra import AlgebraicValue
from foldspec.errors import DivisibilityError, DomainError


def test_triangle_values_are_plain_integers():
    v = algebra.from_quantum_number(1, (2, 1))
    assert v.coeffs == (5,)
    assert algebra.parity(v) == "odd"
    assert v.text() == "5"


def test_reduction_gamma_cubed():
    # gamma = 2^(1/3): 1 + gamma^2 + gamma^4 = 1 + 2*gamma + gamma^2
    v = algebra.from_quantum_number(3, (1, 1, 1))
    assert v.coeffs == (1, 2, 1)
    assert float(v) == pytest.approx(1 + 2 ** (2 / 3) + 2 ** (4 / 3), rel=1e-14)
    assert algebra.parity(v) == "odd"


def test_rectangle_value_is_integer():
    v = algebra.from_quantum_number(2, (2, 1))
    assert v.coeffs == (6,)
    assert algebra.parity(v) == "even"


def test_from_quantum_number_rejects_negatives():
    with pytest.raises(DomainError):
        algebra.from_quantum_number(2, (-1, 0))


def test_scale_gamma2():
    assert algebra.scale_gamma2(algebra.integer_value(2, 3), 1).coeffs == (6,)
    assert algebra.scale_gamma2(AlgebraicValue(4, (1, 0)), 1).coeffs == (0, 1)
    assert algebra.scale_gamma2(AlgebraicValue(4, (0, 1)), 1).coeffs == (2, 0)
    # triangle ring: one gamma^2 step doubles
    assert algebra.scale_gamma2(algebra.integer_value(1, 4), -1).coeffs == (2,)


def test_scale_gamma2_divisibility_error():
    with pytest.raises(DivisibilityError):
        algebra.scale_gamma2(algebra.integer_value(1, 5), -1)
    with pytest.raises(DivisibilityError):
        algebra.scale_gamma2(AlgebraicValue(3, (1, 2, 1)), -1)


def test_scale_roundtrip():
    for n in (1, 2, 3, 4, 5):
        for m in itertools.product(range(4), repeat=(2 if n == 1 else n)):
            v = algebra.from_quantum_number(n, m)
            up = algebra.scale_gamma2(v, 2)
            assert algebra.scale_gamma2(up, -2).coeffs == v.coeffs


def test_scaled_values_are_even():
    for n in (1, 2, 3, 4):
        for m in itertools.product(range(5), repeat=(2 if n == 1 else n)):
            v = algebra.from_quantum_number(n, m)
            assert algebra.parity(algebra.scale_gamma2(v, 1)) == "even"


def test_compare_examples():
    five = algebra.integer_value(1, 5)
    assert algebra.compare(five, five) == 0
    g2 = AlgebraicValue(3, (0, 0, 1))  # 2^(2/3) ~ 1.5874
    assert algebra.compare(g2, algebra.integer_value(3, 2)) < 0
    v = algebra.from_quantum_number(3, (1, 1, 1))  # ~5.107
    assert algebra.compare(v, algebra.integer_value(3, 5)) > 0


def test_compare_agrees_with_floats():
    values = [
        algebra.from_quantum_number(3, m)
        for m in itertools.product(range(6), repeat=3)
    ]
    for a, b in itertools.combinations(values, 2):
        if abs(float(a) - float(b)) > 1e-6:
            want = -1 if float(a) < float(b) else 1
            assert algebra.compare(a, b) == want


def test_compare_tight_values():
    # 2^(1/3) + 2^(2/3) vs 57/20 = 2.85: differ by ~2e-3; and a near tie
    a = AlgebraicValue(3, (0, 1, 1))
    assert algebra.compare_with_rational(a, Fraction(57, 20)) < 0
    assert algebra.compare_with_rational(a, Fraction(28473, 10000)) > 0


def test_canonicality_against_floats():
    # identical coefficient vectors iff float values coincide
    for n in (2, 3, 4):
        by_coeffs: dict[tuple, float] = {}
        by_float: dict[float, tuple] = {}
        for m in itertools.product(range(9), repeat=n):
            v = algebra.from_quantum_number(n, m)
            f = round(float(v), 9)
            if v.coeffs in by_coeffs:
                assert by_coeffs[v.coeffs] == f
            by_coeffs[v.coeffs] = f
            if f in by_float:
                assert by_float[f] == v.coeffs
            by_float[f] = v.coeffs


def test_is_below_with_rational_and_float_cutoffs():
    v = algebra.from_quantum_number(3, (1, 1, 1))  # ~5.1072
    assert algebra.is_below(v, Fraction(52, 10))
    assert not algebra.is_below(v, 5)
    assert algebra.is_below(v, 5.11)
    # an eigenvalue exactly at the cutoff is excluded
    assert not algebra.is_below(algebra.integer_value(1, 9), 9)


def test_text_form():
    assert algebra.from_quantum_number(4, (1, 1, 1, 1)).text() == "3 + 3*g^2"
    assert AlgebraicValue(3, (1, 2, 1)).text() == "1 + 2*g^1 + 1*g^2"
    assert algebra.zero(2).text() == "0"


def test_ordering_operators():
    a = algebra.integer_value(1, 4)
    b = algebra.integer_value(1, 5)
    assert a < b and b > a and a <= a and b >= b
    assert sorted([b, a]) == [a, b]
