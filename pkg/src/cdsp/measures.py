"""Representing-measure machinery: the entire-series kernel, the (2,1)
weight density, line densities for the (2,2) family, the exact
factorization over a quadratic extension, and quadrature verification
that the densities reproduce the reciprocal nets.

Exactness lives in the rational and extension-field layers; densities
and integrals are evaluated in binary64.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

from scipy import integrate

from .deciders import BiDeg21Params, BiDeg22Params
from .errors import (CdspError, DegenerateDensityError, NumericalBudgetError,
                     ParameterError, PreconditionError, WrongCaseError)
from .jsonutil import rat_str
from .quadext import QuadExtScalar

EVALUATION_BUDGET = 1_000_000
KERNEL_TOL = 1e-12


@dataclass(frozen=True)
class KernelValue:
    argument: float
    value: float
    terms_used: int


def kernel_eval(z: float, rel_tol: float) -> KernelValue:
    """Sum of z^k / (k!)^2, an entire function of z.

    Summation stops once the next-term magnitude, amplified by the
    geometric tail factor 2 (valid as soon as |z| < (k+1)^2 / 2, when the
    term ratio drops below 1/2), is under rel_tol relative to the running
    magnitude.  At z = -x this equals the order-zero Bessel value
    J0(2*sqrt(x)).
    """
    if not (0 < rel_tol < 1):
        raise ParameterError(f"rel_tol must lie in (0, 1), got {rel_tol}")
    if not math.isfinite(z):
        raise ParameterError(f"argument must be finite, got {z}")
    total = 0.0
    term = 1.0
    k = 0
    while True:
        total += term
        nxt = term * z / ((k + 1) * (k + 1))
        if abs(z) < (k + 1) * (k + 1) / 2 and 2 * abs(nxt) <= rel_tol * max(1.0, abs(total)):
            return KernelValue(z, total, k + 1)
        term = nxt
        k += 1


def weight21_eval(p: BiDeg21Params, s: float, t: float, rel_tol: float = KERNEL_TOL) -> float:
    """The (2,1) weight density w(s, t) on the open unit square.

    w(s,t) = (s/t^c0)^(a1-1) * t^(c0(b1+b2-a1)-1) / (a0 t^c0)
             * kernel(-c2 * log(s/t^c0) * log t)      for s <= t^c0,
    and 0 otherwise, with c0 = b0/a0 and c2 = c0 (a1-b2)(a1-b1).
    Callers are responsible for the family preconditions (a0, a1 nonzero,
    grid positivity); only the cheap ones are re-checked here.
    """
    if p.a0 == 0 or p.a1 == 0:
        raise ParameterError("a0 and a1 must be nonzero")
    if not (0 < s < 1) or not (0 < t < 1):
        raise ParameterError(f"(s, t) must lie in the open unit square, got ({s}, {t})")
    c0 = float(p.c0)
    c2 = float(p.c2)
    t_pow_c0 = t ** c0
    if s > t_pow_c0:
        return 0.0
    ratio = s / t_pow_c0
    prefactor = (ratio ** (float(p.a1) - 1.0)
                 * t ** (c0 * float(p.b1 + p.b2 - p.a1) - 1.0)
                 / (float(p.a0) * t_pow_c0))
    kernel = kernel_eval(-c2 * math.log(ratio) * math.log(t), rel_tol)
    return prefactor * kernel.value


def _line_roots(p: BiDeg22Params, m: int) -> tuple[float, float]:
    """Exponent pair (r1, r2) of the line density at column m, validated."""
    if m < 0:
        raise ParameterError("m must be a nonnegative integer")
    am = p(m, 0)
    bm = p.b0 * (m + p.b1)
    disc = bm * bm - 4 * am
    if disc == 0:
        raise DegenerateDensityError(
            f"b(m)^2 = 4 a(m) at m = {m}: the two exponents coincide")
    if disc < 0:
        raise PreconditionError(
            f"b(m)^2 - 4 a(m) = {disc} < 0 at m = {m}", witness=(m, disc))
    if not (bm > 0 and am > 0):  # exact test for both roots positive
        raise PreconditionError(
            f"roots of the column polynomial not both positive at m = {m}",
            witness=(m, disc))
    root = math.sqrt(float(disc))
    return (float(bm) + root) / 2.0, (float(bm) - root) / 2.0


def weight22_line_eval(p: BiDeg22Params, m: int, t: float) -> float:
    """Density w_m(t) = (t^(r1-1) - t^(r2-1)) / (r2 - r1) on (0,1).

    Reproduces 1/p(m, y) as the moment of t^y for every real y >= 0.
    """
    if not (0 < t < 1):
        raise ParameterError(f"t must lie in (0, 1), got {t}")
    r1, r2 = _line_roots(p, m)
    return (t ** (r1 - 1.0) - t ** (r2 - 1.0)) / (r2 - r1)


@dataclass(frozen=True)
class Factorization22:
    """p = p1 * p2 - c2 with pj(m,n) = n + slope_j m + const_j over Q(sqrt(d))."""

    p1_slope: QuadExtScalar
    p1_const: QuadExtScalar
    p2_slope: QuadExtScalar
    p2_const: QuadExtScalar
    c2: Fraction
    d: Fraction

    def p1(self, m, n) -> QuadExtScalar:
        return self.p1_slope * Fraction(m) + self.p1_const + Fraction(n)

    def p2(self, m, n) -> QuadExtScalar:
        return self.p2_slope * Fraction(m) + self.p2_const + Fraction(n)

    def reconstruct(self, m, n) -> Fraction:
        """p1(m,n) p2(m,n) - c2, which must be rational, equal to p(m,n)."""
        prod = self.p1(m, n) * self.p2(m, n)
        if prod.v != 0:
            raise CdspError("factor product fell outside the rationals")
        return prod.u - self.c2


def factorize22(p: BiDeg22Params) -> Factorization22:
    """Split p(m,n) into p1 p2 - c2 over Q(sqrt(b0^2 - 4 a0)).

    Only defined in the quadratic-discriminant-profile case b0^2 > 4 a0;
    the identity p = p1 p2 - c2 is verified coefficient by coefficient in
    the extension field before returning.
    """
    d = p.b0 * p.b0 - 4 * p.a0
    if d <= 0:
        raise WrongCaseError(
            f"b0^2 - 4 a0 = {d} <= 0: use the perfect-square/linear path instead")
    c0 = QuadExtScalar(0, Fraction(1, 2), d)
    c1 = QuadExtScalar(0, (p.b0 ** 2 * p.b1 - 2 * p.a0 * (p.a1 + p.a2)) / (2 * d), d)
    # The leading factor a0 is required for the identity to close for
    # a0 != 1; it does not change the sign of c2 in the cases of interest.
    c2 = -p.a0 * (p.a0 * (p.a2 - p.a1) ** 2
                  - p.b0 ** 2 * (p.b1 - p.a1) * (p.a2 - p.b1)) / d
    half_b0 = QuadExtScalar.rational(p.b0 / 2, d)
    half_b0b1 = QuadExtScalar.rational(p.b0 * p.b1 / 2, d)
    fact = Factorization22(half_b0 + c0, half_b0b1 + c1,
                           half_b0 - c0, half_b0b1 - c1, c2, d)
    # exact coefficient comparison of p1*p2 - c2 against p
    mn = fact.p1_slope + fact.p2_slope
    m2 = fact.p1_slope * fact.p2_slope
    n1 = fact.p1_const + fact.p2_const
    m1 = fact.p1_slope * fact.p2_const + fact.p2_slope * fact.p1_const
    const = fact.p1_const * fact.p2_const - QuadExtScalar.rational(c2, d)
    expected = [
        (mn, p.b0), (m2, p.a0), (n1, p.b0 * p.b1),
        (m1, p.a0 * (p.a1 + p.a2)), (const, p.a0 * p.a1 * p.a2),
    ]
    for got, want in expected:
        if got.v != 0 or got.u != want:
            raise CdspError(f"factorization identity failed: {got} != {want}")
    return fact


@dataclass(frozen=True)
class MomentCheck:
    m: int
    n: int
    integral: float
    expected: float
    residual: float
    evaluations: int
    passed: bool

    def to_json(self) -> dict:
        return {
            "m": self.m, "n": self.n,
            "integral": self.integral, "expected": self.expected,
            "residual": self.residual, "evaluations": self.evaluations,
            "passed": self.passed,
        }


def _quad(f, lo, hi, epsabs, counter, budget):
    out = integrate.quad(f, lo, hi, epsabs=epsabs, epsrel=1e-10,
                         limit=200, full_output=1)
    counter[0] += out[2]["neval"]
    if len(out) > 3 or counter[0] > budget:
        raise _QuadTrouble(out[0])
    return out[0]


class _QuadTrouble(Exception):
    def __init__(self, best):
        self.best = best


def verify_moment_integral(p, m: int, n: int, abs_tol: float,
                           budget: int = EVALUATION_BUDGET) -> MomentCheck:
    """Integrate the density against the monomial and compare with 1/p(m,n).

    A BiDeg21Params argument uses the two-dimensional weight; a
    BiDeg22Params argument uses the line density at column m against t^n.
    Raises a numerical-budget error (carrying the best residual) if the
    quadrature misbehaves or exceeds its evaluation budget.
    """
    if abs_tol <= 0:
        raise ParameterError("abs_tol must be positive")
    if m < 0 or n < 0:
        raise ParameterError("m, n must be nonnegative integers")
    if isinstance(p, BiDeg21Params):
        return _verify21(p, m, n, abs_tol, budget)
    if isinstance(p, BiDeg22Params):
        return _verify22_line(p, m, n, abs_tol, budget)
    raise ParameterError(f"unsupported parameter record {type(p).__name__}")


def _verify21(p: BiDeg21Params, m: int, n: int, abs_tol: float, budget: int) -> MomentCheck:
    # Substituting s = t^c0 * sigma flattens the boundary s = t^c0, and the
    # further power substitutions sigma^(B+1) -> y, t^(A+1) -> tau absorb
    # the endpoint power singularities analytically, leaving the entire
    # kernel integrated over the unit square:
    #   integral = (a0 (A+1)(B+1))^-1 * ii K(-c2 lnY lnT / ((A+1)(B+1))) dY dT
    # with A = n + c0(m + b1 + b2 - a1) - 1 and B = m + a1 - 1.
    if p.a0 == 0 or p.a1 == 0:
        raise ParameterError("a0 and a1 must be nonzero")
    expected = float(1 / p(m, n))
    a_exp = float(n + p.c0 * (m + p.b1 + p.b2 - p.a1) - 1)
    b_exp = float(m + p.a1 - 1)
    if a_exp <= -1 or b_exp <= -1:
        raise PreconditionError(
            "density is not integrable against this monomial", witness=(m, n))
    pref = 1.0 / (float(p.a0) * (a_exp + 1.0) * (b_exp + 1.0))
    c2 = float(p.c2)
    scale = (a_exp + 1.0) * (b_exp + 1.0)
    counter = [0]

    def inner(log_tau: float) -> float:
        def f(y: float) -> float:
            return kernel_eval(-c2 * math.log(y) * log_tau / scale, KERNEL_TOL).value
        return _quad(f, 0.0, 1.0, abs_tol / (8.0 * abs(pref)), counter, budget)

    try:
        raw = _quad(lambda tau: inner(math.log(tau)), 0.0, 1.0,
                    abs_tol / (4.0 * abs(pref)), counter, budget)
        integral = pref * raw
    except _QuadTrouble as trouble:
        best = pref * trouble.best
        raise NumericalBudgetError(
            f"quadrature did not converge within {budget} evaluations",
            best_residual=abs(best - expected), evaluations=counter[0]) from None
    residual = abs(integral - expected)
    return MomentCheck(m, n, integral, expected, residual, counter[0],
                       residual < abs_tol)


def _verify22_line(p: BiDeg22Params, m: int, n: int, abs_tol: float,
                   budget: int) -> MomentCheck:
    r1, r2 = _line_roots(p, m)  # validates the density preconditions
    expected = float(1 / p(m, n))
    counter = [0]

    def f(t: float) -> float:
        return t ** n * (t ** (r1 - 1.0) - t ** (r2 - 1.0)) / (r2 - r1)

    try:
        integral = _quad(f, 0.0, 1.0, abs_tol / 4.0, counter, budget)
    except _QuadTrouble as trouble:
        raise NumericalBudgetError(
            f"quadrature did not converge within {budget} evaluations",
            best_residual=abs(trouble.best - expected), evaluations=counter[0]) from None
    residual = abs(integral - expected)
    return MomentCheck(m, n, integral, expected, residual, counter[0],
                       residual < abs_tol)


def sample_weight21_csv(p: BiDeg21Params, samples: int = 50) -> str:
    """Midpoint-sample the (2,1) density on an interior grid, as s,t,w CSV."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["s", "t", "w"])
    for i in range(samples):
        s = (i + 0.5) / samples
        for j in range(samples):
            t = (j + 0.5) / samples
            writer.writerow([repr(s), repr(t), repr(weight21_eval(p, s, t))])
    return buf.getvalue()


def sample_weight22_line_csv(p: BiDeg22Params, m: int, samples: int = 200) -> str:
    """Midpoint-sample the line density at column m, as t,w CSV."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "w"])
    for j in range(samples):
        t = (j + 0.5) / samples
        writer.writerow([repr(t), repr(weight22_line_eval(p, m, t))])
    return buf.getvalue()


def geometric_series_ratio(fact: Factorization22, m: int, n: int) -> Fraction | None:
    """c2 / (p1(m,n) p2(m,n)) when that product is rational, else None.

    For decider-true quadratic-case parameters this ratio is in [0, 1),
    which is what makes the geometric expansion of 1/(p1 p2 - c2)
    converge termwise.
    """
    prod = fact.p1(m, n) * fact.p2(m, n)
    if prod.v != 0:
        return None
    return fact.c2 / prod.u
