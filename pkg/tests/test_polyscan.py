from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdsp import polyscan as ps


def test_poly_basics():
    p = ps.poly(2, 3, 1)
    assert ps.degree(p) == 2
    assert ps.leading(p) == 1
    assert ps.poly_eval(p, F(2)) == 12
    assert ps.poly(0, 0) == ()
    assert ps.degree(()) == -1


def test_poly_arithmetic():
    p, q = ps.poly(1, 2), ps.poly(3, 0, 1)
    assert ps.poly_add(p, q) == ps.poly(4, 2, 1)
    assert ps.poly_sub(q, q) == ()
    assert ps.poly_mul(p, q) == ps.poly(3, 6, 1, 2)
    assert ps.poly_scale(p, F(1, 2)) == ps.poly(F(1, 2), 1)


def test_poly_divmod():
    num = ps.poly(6, 11, 6, 1)  # (x+1)(x+2)(x+3)
    den = ps.poly(2, 1)
    quot, rem = ps.poly_divmod(num, den)
    assert rem == ()
    assert ps.poly_mul(quot, den) == num
    quot, rem = ps.poly_divmod(ps.poly(1, 0, 1), ps.poly(1, 1))
    assert ps.poly_add(ps.poly_mul(quot, ps.poly(1, 1)), rem) == ps.poly(1, 0, 1)


@given(st.lists(st.fractions(max_denominator=6).filter(lambda f: abs(f) <= 5),
                min_size=1, max_size=4))
@settings(max_examples=150)
def test_sign_stable_bound_is_sound(coeffs):
    p = ps.poly(*coeffs)
    if not p:
        return
    bound = ps.sign_stable_bound(p)
    lead = 1 if ps.leading(p) > 0 else -1
    for m in range(bound + 1, bound + 6):
        v = ps.poly_eval(p, F(m))
        assert v != 0 and (1 if v > 0 else -1) == lead


@pytest.mark.parametrize("coeffs, strict, expected", [
    ((1, 1), True, None),            # 1 + x > 0 on Z+
    ((0, 1), True, 0),               # x vanishes at 0
    ((0, 1), False, None),           # x >= 0
    ((6, -5, 1), True, 2),           # (x-2)(x-3) <= 0 at 2
    ((-1,), False, 0),
    ((), True, 0),
    ((), False, None),
    ((F(3, 4), -1, F(1, 4)), True, 1),  # vertex at 2, zero at 1 and 3
])
def test_first_sign_violation(coeffs, strict, expected):
    assert ps.first_sign_violation(ps.poly(*coeffs), strict=strict) == expected


def test_first_integer_root():
    assert ps.first_integer_root(ps.poly(6, -5, 1)) == 2
    assert ps.first_integer_root(ps.poly(1, 1)) is None
    assert ps.first_integer_root(ps.poly(F(1, 2), 1)) is None
    assert ps.first_integer_root(()) == 0


def test_first_nonneg_integer_value():
    # p(m) = m/2 - 3 is a nonnegative integer first at m = 6
    assert ps.first_nonneg_integer_value(ps.poly(-3, F(1, 2))) == 6
    # decreasing: only small m qualify
    assert ps.first_nonneg_integer_value(ps.poly(3, -1)) == 0
    assert ps.first_nonneg_integer_value(ps.poly(3, -1), m_min=4) is None
    # never integral: slope 1/2 with offset 1/3
    assert ps.first_nonneg_integer_value(ps.poly(F(1, 3), F(1, 2))) is None
    assert ps.first_nonneg_integer_value(ps.poly(F(1, 4), F(1, 2)), m_min=2) == 3


class TestGridPositiveAffine:
    def test_positive(self):
        # (m+1)(m+2) + (m+1) n
        q = ps.poly(2, 3, 1)
        r = ps.poly(1, 1)
        assert ps.grid_positive_affine(q, r) is None

    def test_q_violation(self):
        assert ps.grid_positive_affine(ps.poly(-1, 1), ps.poly(1)) == (0, 0)

    def test_r_violation_needs_large_n(self):
        # q = 10, r = -1/3: fails first at n = 30
        w = ps.grid_positive_affine(ps.poly(10), ps.poly(F(-1, 3)))
        assert w == (0, 30)
        assert 10 + F(-1, 3) * 30 <= 0


class TestGridPositiveQuadratic:
    def test_all_positive_coeffs(self):
        assert ps.grid_positive_quadratic(ps.poly(2, 3, 1), ps.poly(2, 2), F(1)) is None

    def test_negative_s(self):
        w = ps.grid_positive_quadratic(ps.poly(1), ps.poly(0), F(-1))
        assert w == (0, 1)

    def test_affine_delegation(self):
        assert ps.grid_positive_quadratic(ps.poly(-1, 1), ps.poly(1), F(0)) == (0, 0)

    def test_interior_dip(self):
        # q - 4n + n^2 dips negative near n = 2 when q(m) < 4
        w = ps.grid_positive_quadratic(ps.poly(3), ps.poly(-4), F(1))
        assert w is not None
        m, n = w
        assert 3 - 4 * n + n * n <= 0

    def test_eventually_negative_charge(self):
        # a(m) = -(m - 10): positive early, negative later
        w = ps.grid_positive_quadratic(ps.poly(10, -1), ps.poly(1), F(1))
        assert w is not None
        m, n = w
        assert 10 - m + (1 + n) * n <= 0  # q(m) + r n + n^2 at the witness

    def test_perfect_square_never_integer(self):
        # (n - (m + 1/2))^2 > 0 on the grid: vertex is always half-integral
        q = ps.poly(F(1, 4), 1, 1)  # (m + 1/2)^2
        r = ps.poly(-1, -2)         # -2(m + 1/2)
        assert ps.grid_positive_quadratic(q, r, F(1)) is None

    def test_perfect_square_hits_integer(self):
        # (n - m)^2 vanishes on the diagonal
        q = ps.poly(0, 0, 1)
        r = ps.poly(0, -2)
        w = ps.grid_positive_quadratic(q, r, F(1))
        assert w == (0, 0)

    def test_perfect_square_congruence(self):
        # (n - (m/2 + 1/4))^2: vertex integral for no m (denominators 4)
        q = ps.poly(F(1, 16), F(1, 4), F(1, 4))
        r = ps.poly(F(-1, 2), -1)
        assert ps.grid_positive_quadratic(q, r, F(1)) is None
        # (n - (m/2 + 1))^2: vertex integral for even m
        q2 = ps.poly(1, 1, F(1, 4))
        r2 = ps.poly(-2, -1)
        w = ps.grid_positive_quadratic(q2, r2, F(1))
        assert w is not None
        m, n = w
        assert ps.poly_eval(q2, F(m)) + ps.poly_eval(r2, F(m)) * n + n * n == 0

    def test_constant_discriminant_trap(self):
        # (n - (m + 1/2))^2 - d0/4 for d0 = 2: bad interval of length sqrt(2)
        # around every half-integer center traps an integer.
        q = ps.poly_sub(ps.poly(F(1, 4), 1, 1), ps.poly(F(1, 2)))
        r = ps.poly(-1, -2)
        w = ps.grid_positive_quadratic(q, r, F(1))
        assert w is not None
        m, n = w
        assert ps.poly_eval(q, F(m)) + ps.poly_eval(r, F(m)) * n + n * n <= 0

    def test_constant_discriminant_narrow(self):
        # same geometry but d0 = 1/2: distance 1/2 to integers, (1/2)^2 > d0/4
        q = ps.poly_sub(ps.poly(F(1, 4), 1, 1), ps.poly(F(1, 8)))
        r = ps.poly(-1, -2)
        assert ps.grid_positive_quadratic(q, r, F(1)) is None

    def test_growing_discriminant_with_negative_slope(self):
        # columns n^2 - 2(m+2) n + (m+2): discriminant grows, vertex positive
        q = ps.poly(2, 1)
        r = ps.poly(-4, -2)
        w = ps.grid_positive_quadratic(q, r, F(1))
        assert w is not None
        m, n = w
        assert ps.poly_eval(q, F(m)) + ps.poly_eval(r, F(m)) * n + n * n <= 0


class TestGridZeroAffine:
    def test_trivial_zero(self):
        assert ps.grid_zero_affine((), ()) == (0, 0)

    def test_constant_a(self):
        # q = (m+1)(m+2) - 2 n: zero at (m, n) with n = (m+1)(m+2)/2 always integral
        hit = ps.grid_zero_affine(ps.poly(2, 3, 1), ps.poly(-2))
        assert hit == (0, 1)

    def test_constant_a_never(self):
        # (m+1)(m+2) + 3 n > 0 requires n negative: no zero
        assert ps.grid_zero_affine(ps.poly(2, 3, 1), ps.poly(3)) is None

    def test_linear_a_divisible(self):
        # b = -(m+1)(m+2), a = m+1: n = m+2 works for every m
        b = ps.poly_scale(ps.poly(2, 3, 1), F(-1))
        hit = ps.grid_zero_affine(b, ps.poly(1, 1))
        assert hit == (0, 2)

    def test_linear_a_bounded_search(self):
        # b = (m+1)(m+2) + 1, a = -(m+1): -b/a = (m+2) + 1/(m+1), integral never
        b = ps.poly(3, 3, 1)
        a = ps.poly(-1, -1)
        assert ps.grid_zero_affine(b, a) is None

    def test_linear_a_bounded_search_hit(self):
        # b = (m+1)(m+2) + 2, a = -(m+1): integral only where (m+1) | 2
        b = ps.poly(4, 3, 1)
        a = ps.poly(-1, -1)
        hit = ps.grid_zero_affine(b, a)
        assert hit == (0, 4)  # -b/a at m = 0 is 4
        m, n = hit
        assert ps.poly_eval(b, F(m)) + ps.poly_eval(a, F(m)) * n == 0

    def test_column_of_zeros(self):
        # a vanishes at m = 3 and b does too: whole column is zero
        a = ps.poly(-3, 1)
        b = ps.poly_mul(ps.poly(-3, 1), ps.poly(1, 1))
        assert ps.grid_zero_affine(b, a) == (3, 0)
