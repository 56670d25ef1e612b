"""Counting sequences and polynomial families, frozen against values
verified by independent derivation and exhaustive enumeration."""

import math
from fractions import Fraction

import pytest

from permaps.enumpoly import (
    BivariatePoly,
    SeriesInZ,
    L_family,
    L_of_path,
    M_family,
    M_of_path,
    arques_beraud_check,
    c_count,
    c_count_by_cycles,
    c_poly,
    double_factorial_odd,
    factorial,
    i_count,
    joint_perm_poly,
    stirling_number,
    stirling_poly,
    transitive_probability,
)
from permaps.errors import InvalidPath


# --- polynomial type ---------------------------------------------------------


def test_poly_arithmetic():
    x, y = BivariatePoly.x(), BivariatePoly.y()
    p = (x + y) * (x + y)
    assert p == BivariatePoly({(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert (p - p).is_zero
    assert 3 * x == BivariatePoly.monomial(1, 0, 3)
    assert p.coefficient(1, 1) == 2
    assert p.evaluate(2, 3) == 25
    assert p.evaluate(Fraction(1, 2), Fraction(1, 2)) == 1
    with pytest.raises(ValueError):
        BivariatePoly({(-1, 0): 1})


def test_poly_substitution_and_swap():
    y = BivariatePoly.y()
    p = y * y  # y^2 -> (y+1)^2 = y^2 + 2y + 1
    assert p.subs_y_plus(1) == BivariatePoly({(0, 2): 1, (0, 1): 2, (0, 0): 1})
    q = BivariatePoly({(2, 1): 1, (1, 2): 3})
    assert q.swap_xy() == BivariatePoly({(1, 2): 1, (2, 1): 3})


def test_poly_string_forms():
    assert BivariatePoly.zero().to_string() == "0"
    assert BivariatePoly.constant(-7).to_string() == "-7"
    assert BivariatePoly({(2, 1): 1, (1, 2): 3}).to_string() == "x^2*y + 3*x*y^2"
    assert (
        BivariatePoly({(0, 4): 5, (0, 3): 22, (0, 2): 32, (0, 1): 15}).to_string()
        == "5*y^4 + 22*y^3 + 32*y^2 + 15*y"
    )
    assert BivariatePoly({(1, 0): 1, (0, 0): -1}).to_string() == "x - 1"


def test_poly_json_round_trip():
    p = BivariatePoly({(2, 1): 1, (1, 2): 3, (0, 0): -4})
    obj = p.to_json_obj()
    assert obj == [
        {"x": 2, "y": 1, "c": "1"},
        {"x": 1, "y": 2, "c": "3"},
        {"x": 0, "y": 0, "c": "-4"},
    ]
    assert BivariatePoly.from_json_obj(obj) == p


def test_series_arithmetic():
    one = BivariatePoly.constant(1)
    z = SeriesInZ([BivariatePoly.zero(), one], 4)
    geom = z.inverse_one_minus()
    assert all(geom.coefficient(m) == one for m in range(5))
    assert (geom - geom).is_zero
    assert z.shift_z(1).coefficient(2) == one
    with pytest.raises(ValueError):
        SeriesInZ([one], 3).inverse_one_minus()
    with pytest.raises(ValueError):
        z + SeriesInZ([], 2)


# --- scalar sequences -----------------------------------------------------------


def test_factorials():
    assert [factorial(n) for n in range(6)] == [1, 1, 2, 6, 24, 120]
    assert [double_factorial_odd(m) for m in range(6)] == [1, 1, 3, 15, 105, 945]
    with pytest.raises(ValueError):
        double_factorial_odd(-1)


def test_stirling_values():
    assert stirling_poly(0) == BivariatePoly.constant(1)
    assert stirling_poly(4).to_string() == "x^4 + 6*x^3 + 11*x^2 + 6*x"
    assert stirling_number(4, 2) == 11
    assert stirling_number(0, 0) == 1
    assert stirling_number(3, 0) == 0
    # row sums are factorials
    for n in range(1, 8):
        assert sum(stirling_number(n, k) for k in range(n + 1)) == math.factorial(n)


def test_c_count_sequence():
    assert [c_count(n) for n in range(1, 8)] == [1, 1, 3, 13, 71, 461, 3447]
    assert c_count(8) == 29093
    with pytest.raises(ValueError):
        c_count(0)


def test_c_count_direct_recurrences():
    # recompute both recurrences from scratch against the library values
    c = {n: c_count(n) for n in range(1, 9)}
    for n in range(2, 9):
        assert c[n] == math.factorial(n) - sum(
            c[p] * math.factorial(n - p) for p in range(1, n)
        )
        assert c[n] == sum(
            p * c[p] * math.factorial(n - 1 - p) for p in range(1, n)
        )


def test_c_triangle():
    expected = {
        2: [1],
        3: [2, 1],
        4: [6, 6, 1],
        5: [24, 34, 12, 1],
        6: [120, 210, 110, 20, 1],
        7: [720, 1452, 974, 270, 30, 1],
    }
    for n, row in expected.items():
        assert [c_count_by_cycles(n, k) for k in range(1, n)] == row
        assert sum(row) == c_count(n)
    with pytest.raises(ValueError):
        c_count_by_cycles(1, 1)
    with pytest.raises(ValueError):
        c_count_by_cycles(4, 4)
    with pytest.raises(ValueError):
        c_count_by_cycles(4, 0)


def test_c_poly():
    assert c_poly(1).to_string() == "x"
    assert c_poly(4).to_string() == "x^3 + 6*x^2 + 6*x"
    for n in range(2, 9):
        p = c_poly(n)
        assert p.degree_y() == 0
        assert [p.coefficient(k, 0) for k in range(1, n)] == [
            c_count_by_cycles(n, k) for k in range(1, n)
        ]
        assert p.evaluate(1, 1) == c_count(n)


def test_i_count():
    assert [i_count(m) for m in range(1, 5)] == [1, 2, 10, 74]
    with pytest.raises(ValueError):
        i_count(0)
    # recompute the sieve directly
    for m in range(2, 8):
        assert i_count(m) == double_factorial_odd(m) - sum(
            i_count(p) * double_factorial_odd(m - p) for p in range(1, m)
        )


# --- path polynomial families ------------------------------------------------------


def test_L_of_path_values():
    x, y = BivariatePoly.x(), BivariatePoly.y()
    assert L_of_path("ab") == x
    # the non-peak b of aabb sees height 0 behind it: weight y
    assert L_of_path("aabb") == x * y
    assert L_of_path("abab") == x * x
    assert L_of_path("aaabbb") == x * (y + BivariatePoly.constant(1)) * y
    with pytest.raises(InvalidPath):
        L_of_path("ba")


def test_L_family_frozen_values():
    assert L_family(2)[0].to_string() == "x^2 + x*y"
    assert L_family(2)[1].to_string() == "x*y"
    assert L_family(3)[0].to_string() == "x^3 + 3*x^2*y + x*y^2 + x*y"
    assert L_family(3)[1].to_string() == "x^2*y + x*y^2 + x*y"
    assert (
        L_family(4)[0].to_string()
        == "x^4 + 6*x^3*y + 6*x^2*y^2 + 5*x^2*y + x*y^3 + 3*x*y^2 + 2*x*y"
    )
    assert (
        L_family(4)[1].to_string()
        == "x^3*y + 3*x^2*y^2 + 3*x^2*y + x*y^3 + 3*x*y^2 + 2*x*y"
    )
    with pytest.raises(ValueError):
        L_family(0)


def test_L_family_specializations():
    for n in range(1, 9):
        L, Lp = L_family(n)
        assert L.evaluate(1, 1) == math.factorial(n)
        assert Lp.evaluate(1, 1) == c_count(n)
        # y = 1 collapses the primitive side onto the cycle polynomial
        collapsed = {}
        for px, py, v in Lp.terms():
            collapsed[px] = collapsed.get(px, 0) + v
        assert collapsed == {
            k: c_poly(n).coefficient(k, 0)
            for k in range(1, n + 1)
            if c_poly(n).coefficient(k, 0)
        }


def test_L_prime_symmetry():
    assert L_family(1)[1].swap_xy() != L_family(1)[1]  # x alone, by design
    for n in range(2, 9):
        Lp = L_family(n)[1]
        assert Lp.swap_xy() == Lp


def test_M_of_path_values():
    y = BivariatePoly.y()
    one = BivariatePoly.constant(1)
    assert M_of_path("ab") == y
    assert M_of_path("aabb") == y * (y + one)
    assert M_of_path("abab") == y * y


def test_M_family_frozen_values():
    assert M_family(1)[1].to_string() == "y"
    assert M_family(2)[1].to_string() == "y^2 + y"
    assert M_family(2)[0].to_string() == "2*y^2 + y"
    assert M_family(3)[1].to_string() == "2*y^3 + 5*y^2 + 3*y"
    assert M_family(3)[0].to_string() == "5*y^3 + 7*y^2 + 3*y"
    assert M_family(4)[1].to_string() == "5*y^4 + 22*y^3 + 32*y^2 + 15*y"
    with pytest.raises(ValueError):
        M_family(0)


def test_M_family_specializations():
    for m in range(1, 8):
        M, Mp = M_family(m)
        assert M.evaluate(1, 1) == double_factorial_odd(m)
        assert Mp.evaluate(1, 1) == i_count(m)
        assert M.degree_x() == 0 and Mp.degree_x() == 0


# --- assembled series ----------------------------------------------------------------


def test_joint_perm_poly_small():
    assert joint_perm_poly(1).to_string() == "x*y"
    assert joint_perm_poly(2).to_string() == "x^2*y^2 + x*y"
    assert (
        joint_perm_poly(3).to_string()
        == "x^3*y^3 + 2*x^2*y^2 + x^2*y + x*y^2 + x*y"
    )
    with pytest.raises(ValueError):
        joint_perm_poly(0)


def test_joint_perm_poly_properties():
    for n in range(1, 9):
        J = joint_perm_poly(n)
        assert J.swap_xy() == J
        assert J.evaluate(1, 1) == math.factorial(n)
        # x-marginal is the Stirling polynomial
        marg = {}
        for px, py, v in J.terms():
            marg[px] = marg.get(px, 0) + v
        assert marg == {
            k: stirling_number(n, k) for k in range(1, n + 1) if stirling_number(n, k)
        }


def test_transitive_probability():
    assert transitive_probability(1) == Fraction(1)
    assert transitive_probability(3) == Fraction(13, 18)
    assert transitive_probability(4) == Fraction(71, 96)
    with pytest.raises(ValueError):
        transitive_probability(0)


def test_arques_beraud_residual():
    residual = arques_beraud_check(6)
    assert residual.order == 6
    assert residual.is_zero
    with pytest.raises(ValueError):
        arques_beraud_check(-1)
