"""
절단 급수 테스트
환 연산, 역원, q-Pochhammer, 생성함수 계수를 확인합니다.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pedverify.errors import SeriesError
from pedverify.partitions import PartitionClass, count_table
from pedverify.qseries import (
    DEFAULT_GENERATING_FUNCTIONS,
    INFINITY,
    Series,
    Theorem,
    add,
    build_expression,
    gf_4regular,
    gf_de1,
    gf_de2,
    gf_de3,
    gf_ped,
    invert,
    mul,
    pentagonal_exponents,
    qpoch,
    series_const,
    series_monomial,
    theorem_lhs,
    theorem_rhs,
)

ORDER = 64


def series_of(order):
    coeff = st.integers(min_value=-50, max_value=50)
    return st.lists(coeff, min_size=order + 1, max_size=order + 1).map(
        lambda coeffs: Series(order=order, coeffs=tuple(coeffs))
    )


def unit_series_of(order):
    return series_of(order).flatmap(
        lambda s: st.sampled_from([1, -1]).map(
            lambda a0: Series(order=order, coeffs=(a0,) + s.coeffs[1:])
        )
    )


def test_series_rejects_wrong_length():
    with pytest.raises(ValueError):
        Series(order=3, coeffs=(1, 2))


def test_const_and_monomial():
    assert series_const(5, 3).coeffs == (5, 0, 0, 0)
    assert series_monomial(2, 3, 4).coeffs == (0, 0, 0, 2, 0)
    with pytest.raises(SeriesError):
        series_monomial(1, 5, 4)
    with pytest.raises(SeriesError):
        series_const(1, -1)


def test_mul_truncates():
    one_minus_q = Series(order=5, coeffs=(1, -1, 0, 0, 0, 0))
    one_minus_q3 = Series(order=5, coeffs=(1, 0, 0, -1, 0, 0))
    product = mul(one_minus_q, one_minus_q3)
    assert product.coeffs == (1, -1, 0, -1, 1, 0)
    assert invert(product).coeffs == (1, 1, 1, 2, 2, 2)


def test_mismatched_orders_rejected():
    with pytest.raises(SeriesError):
        add(series_const(1, 3), series_const(1, 4))
    with pytest.raises(SeriesError):
        mul(series_const(1, 3), series_const(1, 4))


def test_invert_requires_unit_constant():
    with pytest.raises(SeriesError):
        invert(Series(order=2, coeffs=(0, 1, 0)))
    with pytest.raises(SeriesError):
        invert(Series(order=2, coeffs=(2, 1, 0)))


def test_shift_and_truncate():
    s = Series(order=4, coeffs=(1, 2, 3, 4, 5))
    assert s.shift(2).coeffs == (0, 0, 1, 2, 3)
    assert s.shift(9).coeffs == (0, 0, 0, 0, 0)
    assert s.truncate(2).coeffs == (1, 2, 3)
    assert str(s) == "1 2 3 4 5"


@settings(max_examples=100)
@given(series_of(ORDER), series_of(ORDER), series_of(ORDER))
def test_ring_laws(a, b, c):
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert mul(a, series_const(1, ORDER)) == a


@settings(max_examples=100)
@given(unit_series_of(ORDER))
def test_invert_is_two_sided(a):
    one = series_const(1, ORDER)
    inverse = invert(a)
    assert mul(a, inverse) == one
    assert mul(inverse, a) == one


def test_pochhammer_finite_and_infinite():
    assert qpoch(1, 1, 1, 2, 4).coeffs == (1, -1, -1, 1, 0)
    assert qpoch(-1, 2, 2, 0, 3).coeffs == (1, 0, 0, 0)
    assert qpoch(1, 1, 1, INFINITY, 10).coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0)


def test_euler_product_matches_pentagonal_exponents():
    order = 200
    expected = [0] * (order + 1)
    for exponent, sign in pentagonal_exponents(order):
        expected[exponent] = sign
    assert list(qpoch(1, 1, 1, INFINITY, order).coeffs) == expected


def test_partition_numbers_from_product():
    p = invert(qpoch(1, 1, 1, INFINITY, 20)).coeffs
    assert (p[0], p[4], p[10], p[20]) == (1, 5, 42, 627)


def test_generating_function_coefficients():
    assert gf_ped(5).coeffs == (1, 1, 2, 3, 4, 6)
    assert gf_4regular(5).coeffs == (1, 1, 2, 3, 4, 6)
    assert gf_de1(5).coeffs == (0, 1, 1, 2, 2, 4)
    assert gf_de3(5).coeffs == (0, 1, 0, 1, 1, 3)
    assert gf_de2(6).coefficient(6) == 2


@pytest.mark.parametrize(
    "gf, cls",
    [
        (gf_ped, PartitionClass.PED),
        (gf_4regular, PartitionClass.FOUR_REGULAR),
        (gf_de1, PartitionClass.DE1),
        (gf_de2, PartitionClass.DE2),
        (gf_de3, PartitionClass.DE3),
    ],
)
def test_generating_functions_count_their_class(gf, cls):
    assert list(gf(30).coeffs) == count_table(30, cls)


@pytest.mark.parametrize("name", sorted(DEFAULT_GENERATING_FUNCTIONS))
def test_generating_functions_are_truncation_consistent(name):
    gf = DEFAULT_GENERATING_FUNCTIONS[name]
    assert gf(80).truncate(40) == gf(40)
    assert gf(40).truncate(0) == gf(0)


@pytest.mark.slow
@pytest.mark.parametrize(
    "gf, cls",
    [
        (gf_ped, PartitionClass.PED),
        (gf_de1, PartitionClass.DE1),
        (gf_de2, PartitionClass.DE2),
        (gf_de3, PartitionClass.DE3),
    ],
)
def test_generating_functions_count_their_class_to_60(gf, cls):
    assert list(gf(60).coeffs) == count_table(60, cls)


def test_theorem_examples():
    assert theorem_lhs(Theorem.T1, 5).coeffs == (0, 1, 2, 3, 4, 6)
    assert theorem_rhs(Theorem.T1, 5).coeffs == (0, 1, 2, 3, 4, 6)
    assert theorem_rhs(Theorem.T2, 6).coeffs == (0, 0, 1, 1, 1, 2, 3)
    assert theorem_lhs(Theorem.T2, 6).coeffs == (0, 0, 1, 1, 1, 2, 3)
    assert theorem_lhs(Theorem.T3, 5).coeffs == (0, 1, 0, 1, 2, 3)
    assert theorem_rhs(Theorem.T3, 5).coeffs == (0, 1, 0, 1, 2, 3)


@pytest.mark.parametrize("which", list(Theorem))
def test_theorems_hold_to_200(which):
    assert theorem_lhs(which, 200) == theorem_rhs(which, 200)


def test_theorems_at_small_orders():
    for order in range(0, 4):
        for which in Theorem:
            assert theorem_lhs(which, order) == theorem_rhs(which, order)


def test_build_expression():
    assert build_expression("t1-lhs", 5).coeffs == (0, 1, 2, 3, 4, 6)
    assert build_expression("ped", 3).coeffs == (1, 1, 2, 3)
    with pytest.raises(SeriesError):
        build_expression("nope", 3)
