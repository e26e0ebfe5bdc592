from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbfock.rings import DUALS, DualNumber
from hilbfock.series import (
    InsufficientOrderError,
    NotInvertibleError,
    Series1,
    Series2,
    SeriesError,
    compose,
    compositional_inverse,
    differentiate,
    divide_by_x,
    divide_by_x_minus_y,
    divide_by_y,
    lagrange_good_extract,
    negate_argument,
    reciprocal,
    scale_argument,
    series_exp,
    series_log,
    shift_down,
    shift_up,
)


def s1(*coefficients, order=None):
    return Series1.from_coefficients(tuple(Fr(c) for c in coefficients), order)


GEOMETRIC = s1(1, 1, 1, 1, 1)  # 1/(1-x) through degree 4


# ---------------------------------------------------------------- Series1


def test_from_coefficients_infers_and_pads():
    s = s1(1, 2)
    assert s.order == 1
    padded = Series1.from_coefficients((Fr(1),), 3)
    assert padded.coefficients == (Fr(1), Fr(0), Fr(0), Fr(0))


def test_coefficient_beyond_order_is_an_error():
    s = s1(1, 2, 3)
    assert s.coefficient(2) == 3
    with pytest.raises(InsufficientOrderError, match="insufficient precision"):
        s.coefficient(3)


def test_truncate_cannot_extend():
    s = s1(1, 2, 3)
    assert s.truncate(1).coefficients == (Fr(1), Fr(2))
    with pytest.raises(SeriesError, match="cannot extend"):
        s.truncate(5)


def test_binary_operations_take_min_order():
    long = s1(1, 1, 1, 1, 1, 1)
    short = s1(1, 2, 3)
    assert (long + short).order == 2
    assert (long * short).order == 2


def test_polynomial_identities():
    one_plus = s1(1, 1, 0, 0)
    one_minus = s1(1, -1, 0, 0)
    assert one_plus * one_minus == s1(1, 0, -1, 0)
    cube = one_plus * one_plus * one_plus
    assert cube.coefficient(2) == 3  # [x^2](1+x)^3


def test_even_series_coefficient_extraction():
    # [u^2] (1-u^2)(1-4u^2) = -5, and any odd coefficient of an even series is 0
    product = s1(1, 0, -1) * s1(1, 0, -4)
    assert product.coefficient(2) == -5
    assert product.coefficient(1) == 0


def test_scalar_arithmetic():
    s = s1(1, 2, 3)
    assert (s + 1).coefficients == (Fr(2), Fr(2), Fr(3))
    assert (1 - s).coefficients == (Fr(0), Fr(-2), Fr(-3))
    assert (s * Fr(1, 2)).coefficients == (Fr(1, 2), Fr(1), Fr(3, 2))
    assert (2 * s) == s + s


def test_power_with_negative_exponent():
    s = s1(1, 1, 0, 0)
    assert s**2 == s * s
    assert s**0 == Series1.one(3)
    assert s**-1 == reciprocal(s)


def test_reciprocal_geometric():
    assert reciprocal(s1(1, -1, 0, 0, 0)) == GEOMETRIC


def test_reciprocal_requires_unit():
    with pytest.raises(NotInvertibleError, match="constant term is not a unit"):
        reciprocal(s1(0, 1, 2))


# ------------------------------------------------------------- exp / log


def test_exp_of_zero():
    assert series_exp(Series1.zero(4)) == Series1.one(4)


def test_exp_of_x_order_three():
    e = series_exp(Series1.monomial(Fr(1), 1, 3))
    assert e == s1(1, 1, Fr(1, 2), Fr(1, 6))


def test_exp_rejects_nonzero_constant():
    with pytest.raises(SeriesError, match="exp requires zero constant term"):
        series_exp(s1(1, 1))


def test_log_of_one():
    assert series_log(Series1.one(4)) == Series1.zero(4)


def test_log_of_one_plus_x():
    lg = series_log(s1(1, 1, 0, 0, 0))
    assert lg == s1(0, 1, Fr(-1, 2), Fr(1, 3), Fr(-1, 4))


def test_log_of_geometric_in_x_squared():
    # log(1/(1-x^2)) = x^2 + x^4/2 + ...
    inner = reciprocal(s1(1, 0, -1, 0, 0))
    assert series_log(inner) == s1(0, 0, 1, 0, Fr(1, 2))


def test_log_rejects_wrong_constant():
    with pytest.raises(SeriesError, match="log requires constant term 1"):
        series_log(s1(2, 1))


def test_exp_log_round_trip_named_case():
    s = s1(0, 1, 3, 0, 0, 0, 0)  # x + 3x^2 at order 6
    assert series_log(series_exp(s)) == s


coefficient_lists = st.lists(
    st.fractions(min_value=-4, max_value=4, max_denominator=8), min_size=1, max_size=6
)


@given(coefficient_lists)
def test_exp_log_round_trips(tail):
    s = Series1.from_coefficients((Fr(0), *tail))
    assert series_log(series_exp(s)) == s
    u = Series1.from_coefficients((Fr(1), *tail))
    assert series_exp(series_log(u)) == u


def test_exp_preserves_even_parity():
    even = s1(0, 0, 2, 0, Fr(1, 3), 0, -1)
    result = series_exp(even)
    assert all(result.coefficients[k] == 0 for k in range(1, 7, 2))


# --------------------------------------------------- compose and inverse


def test_compose_with_identity():
    s = s1(5, 1, 2, 3)
    assert compose(s, Series1.identity(3)) == s


def test_compose_geometric_with_x_squared():
    outer = GEOMETRIC.truncate(4)
    inner = Series1.monomial(Fr(1), 2, 4)
    assert compose(outer, inner) == s1(1, 0, 1, 0, 1)


def test_compose_linear_outer():
    outer = s1(1, 1, 0, 0)
    inner = s1(0, 1, 0, -1)
    assert compose(outer, inner) == s1(1, 1, 0, -1)


def test_compose_rejects_nonzero_inner_constant():
    with pytest.raises(SeriesError, match="zero constant term"):
        compose(GEOMETRIC, s1(1, 1, 0, 0, 0))


def test_inverse_of_identity():
    assert compositional_inverse(Series1.identity(5)) == Series1.identity(5)


def test_inverse_of_x_over_one_minus_x_squared():
    base = shift_up(reciprocal(s1(1, 0, -1, 0, 0, 0, 0)).truncate(6), 1)
    inverse = compositional_inverse(base)
    assert inverse == s1(0, 1, 0, -1, 0, 2, 0, -5)


def test_inverse_over_dual_numbers():
    # inverse(x - 2 eps x^(n+1)) = x + 2 eps x^(n+1), here with n = 2
    eps = DualNumber(0, 1)
    base = Series1.identity(7, DUALS) + Series1.monomial(-2 * eps, 3, 7, DUALS)
    expected = Series1.identity(7, DUALS) + Series1.monomial(2 * eps, 3, 7, DUALS)
    assert compositional_inverse(base) == expected


def test_inverse_requires_unit_linear_coefficient():
    with pytest.raises(NotInvertibleError, match="not invertible under composition"):
        compositional_inverse(s1(0, 0, 1, 0))
    with pytest.raises(NotInvertibleError, match="not invertible under composition"):
        compositional_inverse(s1(1, 1))


@given(coefficient_lists)
@settings(max_examples=40)
def test_compositional_round_trip(tail):
    s = Series1.from_coefficients((Fr(0), Fr(1), *tail))
    inverse = compositional_inverse(s)
    assert compose(s, inverse) == Series1.identity(s.order)
    assert compose(inverse, s) == Series1.identity(s.order)


def test_truncation_monotonicity():
    f = s1(1, 1, 0, 0, 0, 0, 0, 0, 0, 0)
    coarse = compositional_inverse(shift_up(reciprocal(f * negate_argument(f)).truncate(5), 1))
    fine = compositional_inverse(shift_up(reciprocal(f * negate_argument(f)).truncate(8), 1))
    assert fine.truncate(coarse.order) == coarse


# ------------------------------------------------------- argument helpers


def test_scale_and_negate_argument():
    s = s1(1, 2, 3)
    assert scale_argument(s, 2) == s1(1, 4, 12)
    assert negate_argument(s) == s1(1, -2, 3)


def test_shift_up_and_down():
    s = s1(1, 2, 3)
    up = shift_up(s, 2)
    assert up.order == 4 and up.coefficients == (Fr(0), Fr(0), Fr(1), Fr(2), Fr(3))
    assert shift_down(up, 2) == s
    with pytest.raises(SeriesError):
        shift_down(s1(1, 2), 1)  # constant term nonzero, not divisible


def test_differentiate():
    s = s1(7, 1, 1, 1)
    assert differentiate(s) == s1(1, 2, 3)


# ---------------------------------------------------------------- Series2


def x_plus_y(order):
    return Series2.from_dict({(1, 0): Fr(1), (0, 1): Fr(1)}, order)


def test_series2_basic_shape():
    s = Series2.from_dict({(1, 0): Fr(2), (0, 2): Fr(5)}, 3)
    assert s.coefficient(1, 0) == 2
    assert s.coefficient(0, 2) == 5
    assert s.coefficient(1, 1) == 0
    with pytest.raises(InsufficientOrderError, match="insufficient precision"):
        s.coefficient(2, 2)


def test_series2_multiplication():
    square = x_plus_y(4) * x_plus_y(4)
    assert square.homogeneous(2) == (Fr(1), Fr(2), Fr(1))
    assert square.homogeneous(1) == (Fr(0), Fr(0))


def test_series2_symmetry_predicate_and_swap():
    sym = x_plus_y(3) * x_plus_y(3)
    assert sym.is_symmetric()
    lop = Series2.from_dict({(2, 0): Fr(1)}, 3)
    assert not lop.is_symmetric()
    assert lop.swap() == Series2.from_dict({(0, 2): Fr(1)}, 3)


def test_divide_difference_of_squares():
    numerator = Series2.from_dict({(2, 0): Fr(1), (0, 2): Fr(-1)}, 3)
    assert divide_by_x_minus_y(numerator) == x_plus_y(2)


def test_divide_cubic_example():
    # (x^3 y - y^3 x) / (x - y) = xy(x + y)
    numerator = Series2.from_dict({(3, 1): Fr(1), (1, 3): Fr(-1)}, 4)
    expected = Series2.from_dict({(2, 1): Fr(1), (1, 2): Fr(1)}, 3)
    assert divide_by_x_minus_y(numerator) == expected


def test_divide_difference_quotient_of_odd_cubic():
    # g = x - x^3: (g(x) - g(y)) / (x - y) = 1 - x^2 - xy - y^2
    g = s1(0, 1, 0, -1)
    numerator = Series2.from_series1_in_x(g) - Series2.from_series1_in_y(g)
    expected = Series2.from_dict(
        {(0, 0): Fr(1), (2, 0): Fr(-1), (1, 1): Fr(-1), (0, 2): Fr(-1)}, 2
    )
    assert divide_by_x_minus_y(numerator) == expected


def test_divide_rejects_non_multiples():
    with pytest.raises(SeriesError, match=r"not divisible by \(x - y\)"):
        divide_by_x_minus_y(Series2.from_dict({(2, 0): Fr(1)}, 2))


def test_divide_by_single_variables():
    s = Series2.from_dict({(1, 0): Fr(3), (2, 1): Fr(5)}, 3)
    assert divide_by_x(s) == Series2.from_dict({(0, 0): Fr(3), (1, 1): Fr(5)}, 2)
    t = Series2.from_dict({(0, 1): Fr(3)}, 2)
    assert divide_by_y(t) == Series2.from_dict({(0, 0): Fr(3)}, 1)
    with pytest.raises(SeriesError):
        divide_by_x(t)


def test_compose_series1_outer_with_series2_inner():
    total = compose(GEOMETRIC.truncate(3), x_plus_y(3))
    assert total.coefficient(0, 0) == 1
    assert total.homogeneous(1) == (Fr(1), Fr(1))
    assert total.homogeneous(2) == (Fr(1), Fr(2), Fr(1))
    assert total.homogeneous(3) == (Fr(1), Fr(3), Fr(3), Fr(1))


def test_series2_exp_log_round_trip():
    s = Series2.from_dict({(1, 0): Fr(1), (1, 1): Fr(-2), (0, 3): Fr(1, 3)}, 4)
    assert series_log(series_exp(s)) == s


def test_series2_min_order_rule():
    a = x_plus_y(5)
    b = x_plus_y(2)
    assert (a * b).order == 2
    assert (a + b).order == 2


# ----------------------------------------------------------- Lagrange-Good


# Note on orders: extracting c_k goes through the derivative of f, which
# knows one degree less than f itself, so the inputs carry one order of
# slack beyond the largest extracted index.


def test_lagrange_univariate_monomial_base():
    g = s1(0, 2, 3, 4, 5, 6)
    f = Series1.identity(5)
    for k in range(1, 5):
        assert lagrange_good_extract(g, [f], k) == g.coefficient(k)


def test_lagrange_univariate_known_expansion():
    # z = sum c_k (z - z^2)^k with c_1 = 1, c_2 = 1
    f = s1(0, 1, -1, 0, 0, 0, 0, 0, 0)
    g = Series1.identity(8)
    assert lagrange_good_extract(g, [f], 1) == 1
    assert lagrange_good_extract(g, [f], 2) == 1


def test_lagrange_bivariate_product_base():
    z1 = Series2.from_dict({(1, 0): Fr(1)}, 5)
    z2 = Series2.from_dict({(0, 1): Fr(1)}, 5)
    g = Series2.from_dict({(1, 1): Fr(1)}, 5)
    assert lagrange_good_extract(g, [z1, z2], (1, 1)) == 1
    for pair in ((1, 0), (0, 1), (2, 1), (2, 2)):
        assert lagrange_good_extract(g, [z1, z2], pair) == 0


def test_lagrange_rejects_three_variables():
    f = Series1.identity(3)
    with pytest.raises(SeriesError, match="at most two variables"):
        lagrange_good_extract(f, [f, f, f], (1, 1, 1))


def _naive_univariate_expansion(g, f, max_k):
    """Forward substitution: c_k = [z^k](g - sum_{j<k} c_j f^j) / f1^k."""
    coefficients = {}
    residual = g
    powers = Series1.one(g.order)
    f1 = f.coefficient(1)
    for k in range(1, max_k + 1):
        powers = powers * f
        c = residual.coefficient(k) / f1**k
        coefficients[k] = c
        residual = residual - powers * c
    return coefficients


def test_lagrange_against_naive_univariate():
    f = s1(0, 1, 2, Fr(-1, 2), 0, 1, 0, 0, 3, -2)
    g = s1(0, 3, 0, 1, Fr(2, 7), 0, -4, 1, 1, 0)
    naive = _naive_univariate_expansion(g, f, 8)
    for k in range(1, 9):
        assert lagrange_good_extract(g, [f], k) == naive[k]


def _naive_bivariate_expansion(g, f1, f2, max_total):
    """Forward substitution over ascending total degree.

    Works because the total-degree-(k1+k2) part of f1^k1 f2^k2 is
    exactly z1^k1 z2^k2 when each f_i is z_i times a unit with
    constant term 1.
    """
    order = g.order
    coefficients = {}
    residual = g
    for total in range(1, max_total + 1):
        for k1 in range(total + 1):
            k2 = total - k1
            c = residual.coefficient(k1, k2)
            coefficients[(k1, k2)] = c
            if c != 0:
                term = Series2.one(order) * c
                for _ in range(k1):
                    term = term * f1
                for _ in range(k2):
                    term = term * f2
                residual = residual - term
    return coefficients


def test_lagrange_against_naive_bivariate():
    order = 6
    f1 = Series2.from_dict({(1, 0): Fr(1), (1, 1): Fr(1)}, order)  # z1 (1 + z2)
    f2 = Series2.from_dict({(0, 1): Fr(1), (2, 1): Fr(-1)}, order)  # z2 (1 - z1^2)
    g = Series2.from_dict(
        {(1, 0): Fr(2), (0, 1): Fr(-1), (1, 1): Fr(1), (2, 2): Fr(3), (0, 4): Fr(1, 2)},
        order,
    )
    naive = _naive_bivariate_expansion(g, f1, f2, 5)
    for (k1, k2), expected in naive.items():
        assert lagrange_good_extract(g, [f1, f2], (k1, k2)) == expected


def test_lagrange_reassembly():
    # the extracted coefficients really do rebuild g
    f = s1(0, 1, 1, 1, 1, 1, 1, 1)
    g = s1(0, 1, 0, -2, 0, 5, 0, 0)
    rebuilt = Series1.zero(6)
    power = Series1.one(6)
    for k in range(1, 7):
        power = power * f.truncate(6)
        rebuilt = rebuilt + power * lagrange_good_extract(g, [f], k)
    assert rebuilt == g.truncate(6)
