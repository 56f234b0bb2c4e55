"""Exact sign analysis of rational-coefficient polynomials over the integer grid.

Every "for all m in Z+" question here is reduced to a finite computation:
beyond the (ceiled) Cauchy root bound a polynomial has the sign of its
leading coefficient, so an exhaustive scan below that bound plus the
leading sign decides global sign conditions exactly.  The bivariate
helpers treat p(m, n) = q(m) + r(m) n + s n^2 column by column, using
convexity in n, and settle the infinite tail in m symbolically (including
the perfect-square and rational-line corner cases, which reduce to
integrality of a linear sequence and are decided by residue classes).
"""
from __future__ import annotations

import math
from fractions import Fraction

Poly = tuple[Fraction, ...]


def poly(*coeffs) -> Poly:
    """Build a polynomial from ascending-power coefficients, trimming zeros."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p: Poly) -> int:
    """Degree, with deg 0 = -1 by convention."""
    return len(p) - 1


def leading(p: Poly) -> Fraction:
    return p[-1] if p else Fraction(0)


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly(*[(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                  for i in range(n)])


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, poly_scale(q, Fraction(-1)))


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    cs = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            cs[i + j] += a * b
    return poly(*cs)


def poly_scale(p: Poly, c: Fraction) -> Poly:
    return poly(*[a * c for a in p])


def poly_divmod(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Euclidean division p = q*d + r with deg r < deg d."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    q = [Fraction(0)] * max(len(p) - len(d) + 1, 1)
    while len(rem) >= len(d) and any(c != 0 for c in rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(d):
            break
        k = len(rem) - len(d)
        f = rem[-1] / d[-1]
        q[k] = f
        for i, c in enumerate(d):
            rem[k + i] -= f * c
        rem.pop()
    return poly(*q), poly(*rem)


def sign_stable_bound(p: Poly) -> int:
    """Integer N >= 0 with sign(p(m)) = sign(leading(p)) for every m > N.

    Uses the Cauchy root bound 1 + max |a_i / a_n|.
    """
    if degree(p) <= 0:
        return 0
    lc = abs(p[-1])
    bound = 1 + max(abs(c) / lc for c in p[:-1])
    return math.ceil(bound)


def first_sign_violation(p: Poly, *, strict: bool) -> int | None:
    """First m in Z+ with p(m) <= 0 (strict) resp. p(m) < 0 (non-strict).

    None means p(m) > 0 (resp. >= 0) for every nonnegative integer m.
    """
    if not p:
        return 0 if strict else None
    bound = sign_stable_bound(p)
    for m in range(bound + 1):
        v = poly_eval(p, Fraction(m))
        if v < 0 or (strict and v == 0):
            return m
    if leading(p) < 0:
        m = bound + 1
        assert poly_eval(p, Fraction(m)) < 0
        return m
    return None


def first_integer_root(p: Poly) -> int | None:
    """First m in Z+ with p(m) = 0, or None. Complete: no roots beyond the bound."""
    if not p:
        return 0
    for m in range(sign_stable_bound(p) + 1):
        if poly_eval(p, Fraction(m)) == 0:
            return m
    return None


def _coeff_denominator_lcm(p: Poly) -> int:
    d = 1
    for c in p:
        d = math.lcm(d, c.denominator)
    return d


def first_nonneg_integer_value(p: Poly, m_min: int = 0) -> int | None:
    """Smallest integer m >= m_min with p(m) a nonnegative integer, or None.

    Complete: integrality of p(m) is periodic in m with period the lcm of
    the coefficient denominators, and the sign is stable beyond the root
    bound, so a scan plus one period suffices.
    """
    if not p:
        return m_min
    top = max(sign_stable_bound(p), m_min)
    for m in range(m_min, top + 1):
        v = poly_eval(p, Fraction(m))
        if v.denominator == 1 and v >= 0:
            return m
    if leading(p) < 0:
        return None
    period = _coeff_denominator_lcm(p)
    hits = []
    for r in range(period):
        m = top + 1 + ((r - (top + 1)) % period)
        if poly_eval(p, Fraction(m)).denominator == 1:
            hits.append(m)
    return min(hits) if hits else None


def grid_positive_affine(q: Poly, r: Poly) -> tuple[int, int] | None:
    """Witness (m, n) with q(m) + r(m) n <= 0 on Z+^2, or None if positive.

    Positivity for every n >= 0 at a column m is equivalent to q(m) > 0
    and r(m) >= 0.
    """
    m0 = first_sign_violation(q, strict=True)
    if m0 is not None:
        return (m0, 0)
    m1 = first_sign_violation(r, strict=False)
    if m1 is not None:
        qm = poly_eval(q, Fraction(m1))
        rm = poly_eval(r, Fraction(m1))
        n = max(0, math.ceil(qm / -rm))
        assert qm + rm * n <= 0
        return (m1, n)
    return None


def _nearest_nonneg_integer(x: Fraction) -> int:
    if x <= 0:
        return 0
    fl = x.numerator // x.denominator
    return fl if (x - fl) <= Fraction(1, 2) else fl + 1


def grid_positive_quadratic(q: Poly, r: Poly, s: Fraction) -> tuple[int, int] | None:
    """Witness (m, n) with q(m) + r(m) n + s n^2 <= 0 on Z+^2, or None.

    For s > 0 each column is convex in n, so the scan only probes the
    integer minimizers; the tail in m is settled from the eventual signs
    of q/s, r/s and the column discriminant (r/s)^2 - 4 q/s.  A column
    whose discriminant exceeds 1 and whose vertex -r(m)/(2s) is a large
    positive number always traps an integer strictly inside its negative
    interval, which yields an explicit witness.
    """
    s = Fraction(s)
    if s < 0:
        col = poly(poly_eval(q, Fraction(0)), poly_eval(r, Fraction(0)), s)
        n = first_sign_violation(col, strict=True)
        assert n is not None
        return (0, n)
    if s == 0:
        return grid_positive_affine(q, r)

    a = poly_scale(q, 1 / s)
    b = poly_scale(r, 1 / s)
    disc = poly_sub(poly_mul(b, b), poly_scale(a, Fraction(4)))
    top = max(sign_stable_bound(a), sign_stable_bound(b), sign_stable_bound(disc))

    def value(m: int, n: int) -> Fraction:
        mm = Fraction(m)
        return poly_eval(q, mm) + poly_eval(r, mm) * n + s * n * n

    for m in range(top + 1):
        vertex = -poly_eval(b, Fraction(m)) / 2
        if vertex <= 0:
            cands = [0]
        else:
            fl = vertex.numerator // vertex.denominator
            cands = [fl] if vertex == fl else [fl, fl + 1]
        for n in cands:
            if value(m, n) <= 0:
                return (m, n)

    if not a:  # q identically zero: column m = 0 already failed in the scan
        raise AssertionError("unreachable: zero constant column escaped the scan")
    if leading(a) < 0:
        m = top + 1
        assert value(m, 0) <= 0
        return (m, 0)
    sign_d = 0 if not disc else (1 if leading(disc) > 0 else -1)
    if sign_d < 0:
        return None
    if sign_d == 0:
        # b^2 = 4a identically: columns are s*(n + b(m)/2)^2; a zero needs
        # the vertex -b(m)/2 to be a nonnegative integer at some m > top.
        if not b or leading(b) > 0:
            return None
        center = poly_scale(b, Fraction(-1, 2))
        m_star = first_nonneg_integer_value(center, top + 1)
        if m_star is None:
            return None
        n = int(poly_eval(center, Fraction(m_star)))
        assert value(m_star, n) <= 0
        return (m_star, n)
    # disc eventually positive
    if leading(b) > 0:
        return None  # both roots eventually negative (a, b eventually positive)
    center = poly_scale(b, Fraction(-1, 2))
    if degree(disc) == 0:
        d0 = disc[0]
        slope = center[1] if degree(center) >= 1 else Fraction(0)
        period = slope.denominator if slope != 0 else 1
        for rcls in range(period):
            m = top + 1 + ((rcls - (top + 1)) % period)
            cv = poly_eval(center, Fraction(m))
            frac = cv - (cv.numerator // cv.denominator)
            dist = min(frac, 1 - frac)
            if 4 * dist * dist <= d0:
                n = _nearest_nonneg_integer(cv)
                assert value(m, n) <= 0
                return (m, n)
        return None
    m_star = max(top, sign_stable_bound(poly_sub(disc, poly(1)))) + 1
    n = _nearest_nonneg_integer(poly_eval(center, Fraction(m_star)))
    assert value(m_star, n) <= 0
    return (m_star, n)


def grid_zero_affine(b: Poly, a: Poly) -> tuple[int, int] | None:
    """Witness (m, n) in Z+^2 with b(m) + a(m) n = 0, or None if none exists.

    Complete for deg a <= 1: either -b/a is a polynomial (settled by
    residue classes) or its denominator grows, which confines integer
    values of -b(m)/a(m) to an explicit finite range of m.
    """
    if not a:
        m0 = first_integer_root(b)
        return (m0, 0) if m0 is not None else None
    if degree(a) == 0:
        v = poly_scale(b, -1 / a[0])
        m0 = first_nonneg_integer_value(v)
        return (m0, int(poly_eval(v, Fraction(m0)))) if m0 is not None else None
    if degree(a) != 1:
        raise ParameterGuard("grid_zero_affine expects deg a <= 1")
    root = -a[0] / a[1]
    if root.denominator == 1 and root >= 0 and poly_eval(b, root) == 0:
        return (int(root), 0)
    quot, rem = poly_divmod(poly_scale(b, Fraction(-1)), a)
    if not rem:
        m0 = first_nonneg_integer_value(quot)
        return (m0, int(poly_eval(quot, Fraction(m0)))) if m0 is not None else None
    period = _coeff_denominator_lcm(quot) if quot else 1
    bound = math.ceil((period * abs(rem[0]) + abs(a[0])) / abs(a[1])) + 1
    for m in range(bound + 1):
        am = poly_eval(a, Fraction(m))
        if am == 0:
            continue
        v = -poly_eval(b, Fraction(m)) / am
        if v.denominator == 1 and v >= 0:
            return (m, int(v))
    return None


class ParameterGuard(ValueError):
    """Internal misuse of a polyscan helper."""
