"""Closed-form exact deciders for complete monotonicity of reciprocal nets
of the two polynomial families, with auditable decision traces.

Every verdict is a conjunction of named sign and inequality checks whose
exact rational values are recorded, so a failure can be traced to the
specific condition that broke.  Grid positivity hypotheses are validated
over the whole infinite grid (see polyscan), never assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polyscan as ps
from .errors import ParameterError, PreconditionError, SchemaError
from .jsonutil import rat_field, rat_str

PRECONDITION_VIOLATED = None  # DecisionTrace.verdict value


@dataclass(frozen=True)
class Check:
    name: str
    value: Fraction | tuple[Fraction, Fraction]
    satisfied: bool

    def to_json(self) -> dict:
        if isinstance(self.value, tuple):
            val = [rat_str(self.value[0]), rat_str(self.value[1])]
        else:
            val = rat_str(self.value)
        return {"name": self.name, "value": val, "satisfied": self.satisfied}


@dataclass(frozen=True)
class DecisionTrace:
    """verdict True/False, or None when a hypothesis failed before deciding."""

    verdict: bool | None
    checks: tuple[Check, ...]
    witness: tuple[int, int] | None = None

    @property
    def passed(self) -> bool:
        return self.verdict is True

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        verdict = {True: "true", False: "false", None: "precondition-violated"}[self.verdict]
        doc = {"verdict": verdict, "checks": [c.to_json() for c in self.checks]}
        if self.witness is not None:
            doc["witness"] = list(self.witness)
        return doc


def _conclude(checks: list[Check]) -> DecisionTrace:
    return DecisionTrace(all(c.satisfied for c in checks), tuple(checks))


def _violated(checks: list[Check], witness) -> DecisionTrace:
    return DecisionTrace(PRECONDITION_VIOLATED, tuple(checks), witness)


@dataclass(frozen=True)
class Quadratic1D:
    """p(x) = a + b x + c x^2 with rational coefficients."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for f in ("a", "b", "c"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))
        if self.a == self.b == self.c == 0:
            raise ParameterError("the zero polynomial is not a member of the family")

    def as_poly(self) -> ps.Poly:
        return ps.poly(self.a, self.b, self.c)

    def __call__(self, x) -> Fraction:
        return ps.poly_eval(self.as_poly(), Fraction(x))


@dataclass(frozen=True)
class BiDeg21Params:
    """p(x, y) = b0 (x+b1)(x+b2) + a0 (x+a1) y, normalized so b1 <= b2."""

    b0: Fraction
    b1: Fraction
    b2: Fraction
    a0: Fraction
    a1: Fraction

    def __post_init__(self):
        for f in ("b0", "b1", "b2", "a0", "a1"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))
        if self.b1 > self.b2:
            lo, hi = self.b2, self.b1
            object.__setattr__(self, "b1", lo)
            object.__setattr__(self, "b2", hi)

    @property
    def c0(self) -> Fraction:
        return self.b0 / self.a0

    @property
    def c1(self) -> Fraction:
        return (self.a1 - self.b2) * (self.a1 - self.b1)

    @property
    def c2(self) -> Fraction:
        return self.c0 * self.c1

    def b_poly(self) -> ps.Poly:
        return ps.poly_scale(ps.poly_mul(ps.poly(self.b1, 1), ps.poly(self.b2, 1)), self.b0)

    def a_poly(self) -> ps.Poly:
        return ps.poly_scale(ps.poly(self.a1, 1), self.a0)

    def __call__(self, x, y) -> Fraction:
        x = Fraction(x)
        return ps.poly_eval(self.b_poly(), x) + ps.poly_eval(self.a_poly(), x) * Fraction(y)

    def to_json(self) -> dict:
        return {k: rat_str(getattr(self, k)) for k in ("b0", "b1", "b2", "a0", "a1")}

    @classmethod
    def from_json(cls, doc: dict, pointer: str = "") -> "BiDeg21Params":
        return cls(*(rat_field(doc, k, pointer) for k in ("b0", "b1", "b2", "a0", "a1")))


@dataclass(frozen=True)
class BiDeg22Params:
    """p(x, y) = a0 (x+a1)(x+a2) + b0 (x+b1) y + y^2, normalized so a1 <= a2."""

    a0: Fraction
    a1: Fraction
    a2: Fraction
    b0: Fraction
    b1: Fraction

    def __post_init__(self):
        for f in ("a0", "a1", "a2", "b0", "b1"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))
        if self.a1 > self.a2:
            lo, hi = self.a2, self.a1
            object.__setattr__(self, "a1", lo)
            object.__setattr__(self, "a2", hi)

    def a_poly(self) -> ps.Poly:
        return ps.poly_scale(ps.poly_mul(ps.poly(self.a1, 1), ps.poly(self.a2, 1)), self.a0)

    def b_poly(self) -> ps.Poly:
        return ps.poly_scale(ps.poly(self.b1, 1), self.b0)

    def disc_poly(self) -> ps.Poly:
        """b(x)^2 - 4 a(x), the column discriminant in the second variable."""
        b = self.b_poly()
        return ps.poly_sub(ps.poly_mul(b, b), ps.poly_scale(self.a_poly(), Fraction(4)))

    def __call__(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return (ps.poly_eval(self.a_poly(), x)
                + ps.poly_eval(self.b_poly(), x) * y + y * y)

    def to_json(self) -> dict:
        return {k: rat_str(getattr(self, k)) for k in ("a0", "a1", "a2", "b0", "b1")}

    @classmethod
    def from_json(cls, doc: dict, pointer: str = "") -> "BiDeg22Params":
        return cls(*(rat_field(doc, k, pointer) for k in ("a0", "a1", "a2", "b0", "b1")))


def decide_quadratic_reciprocal_cm(p: Quadratic1D) -> DecisionTrace:
    """Is {1/p(n)} a completely monotone sequence?

    A true quadratic needs positive coefficients and a nonnegative
    discriminant (real roots); degenerate degrees reduce to the affine
    and constant facts.
    """
    root = ps.first_integer_root(p.as_poly())
    if root is not None:
        return _violated(
            [Check("no_integer_zero", Fraction(root), False)], (root, 0))
    checks = [Check("constant_positive", p.a, p.a > 0)]
    if p.c == 0 and p.b == 0:
        pass  # constant polynomial: positivity alone decides
    elif p.c == 0:
        checks.append(Check("linear_nonneg", p.b, p.b >= 0))
    else:
        checks.append(Check("linear_positive", p.b, p.b > 0))
        checks.append(Check("quadratic_positive", p.c, p.c > 0))
        disc = p.b * p.b - 4 * p.a * p.c
        checks.append(Check("discriminant_nonneg", disc, disc >= 0))
    return _conclude(checks)


def decide_bideg21_cm(p: BiDeg21Params) -> DecisionTrace:
    """Is {1/p(m,n)} jointly completely monotone for the (2,1) family?

    After validating strict positivity of p over the whole grid, the
    verdict is the interval condition b1 <= a1 <= b2.  The parameter sign
    checks are recorded because any failure among them already forces a
    negative verdict for the separate one-variable restrictions.
    """
    if p.a0 == 0 or p.a1 == 0:
        raise ParameterError("a0 and a1 must be nonzero for the bi-degree (2,1) family")
    witness = ps.grid_positive_affine(p.b_poly(), p.a_poly())
    if witness is not None:
        return _violated(
            [Check("grid_positive", p(*witness), False)], witness)
    checks = [
        Check("grid_positive", Fraction(1), True),
        Check("a0_positive", p.a0, p.a0 > 0),
        Check("a1_positive", p.a1, p.a1 > 0),
        Check("b0_positive", p.b0, p.b0 > 0),
        Check("b1_positive", p.b1, p.b1 > 0),
        Check("b2_positive", p.b2, p.b2 > 0),
        Check("a1_at_least_b1", (p.b1, p.a1), p.b1 <= p.a1),
        Check("a1_at_most_b2", (p.a1, p.b2), p.a1 <= p.b2),
    ]
    return _conclude(checks)


def check_bideg21_necessary(b0, b1, b2, a1, a2) -> DecisionTrace:
    """Necessary conditions for joint CM of 1/q with q = b0(x+b1)(x+b2) + (a1 x + a2) y.

    This is deliberately one-sided: a passing verdict only means the
    necessary set {b0, b1, b2 > 0; a1, a2 >= 0; a1, a2 both zero or both
    positive} holds, and the full decision needs the normalized form.
    """
    b0, b1, b2 = Fraction(b0), Fraction(b1), Fraction(b2)
    a1, a2 = Fraction(a1), Fraction(a2)
    if b1 > b2:
        b1, b2 = b2, b1
    b_poly = ps.poly_scale(ps.poly_mul(ps.poly(b1, 1), ps.poly(b2, 1)), b0)
    a_poly = ps.poly(a2, a1)
    zero = ps.grid_zero_affine(b_poly, a_poly)
    if zero is not None:
        return _violated([Check("grid_nonvanishing", Fraction(0), False)], zero)
    both_zero = a1 == 0 and a2 == 0
    both_positive = a1 > 0 and a2 > 0
    checks = [
        Check("grid_nonvanishing", Fraction(1), True),
        Check("b0_positive", b0, b0 > 0),
        Check("b1_positive", b1, b1 > 0),
        Check("b2_positive", b2, b2 > 0),
        Check("a1_nonneg", a1, a1 >= 0),
        Check("a2_nonneg", a2, a2 >= 0),
        Check("a_signs_consistent", (a1, a2), both_zero or both_positive),
    ]
    return _conclude(checks)


def decide_bideg22_cm(p: BiDeg22Params) -> DecisionTrace:
    """Is {1/p(m,n)} jointly completely monotone for the (2,2) family?

    Under grid positivity the exact criterion is: a1, a2, b0, b1 > 0,
    b0^2 >= 4 a0, and a0 (a2-a1)^2 <= b0^2 (b1-a1)(a2-b1).
    """
    if p.a0 == 0:
        raise ParameterError(
            "a0 = 0 drops the bi-degree to (1,2); use the one-variable "
            "quadratic decider on the columns instead")
    witness = ps.grid_positive_quadratic(p.a_poly(), p.b_poly(), Fraction(1))
    if witness is not None:
        return _violated([Check("grid_positive", p(*witness), False)], witness)
    lhs = p.a0 * (p.a2 - p.a1) ** 2
    rhs = p.b0 ** 2 * (p.b1 - p.a1) * (p.a2 - p.b1)
    checks = [
        Check("grid_positive", Fraction(1), True),
        Check("a1_positive", p.a1, p.a1 > 0),
        Check("a2_positive", p.a2, p.a2 > 0),
        Check("b0_positive", p.b0, p.b0 > 0),
        Check("b1_positive", p.b1, p.b1 > 0),
        Check("leading_discriminant_nonneg", (p.b0 ** 2, 4 * p.a0), p.b0 ** 2 >= 4 * p.a0),
        Check("root_spread_bound", (lhs, rhs), lhs <= rhs),
    ]
    return _conclude(checks)


def check_discriminant_profile(q, r, s, scan_bound: int) -> DecisionTrace:
    """Necessary shape conditions on p(x,y) = q(x) + r(x) y + s(x) y^2.

    Checks deg q + deg s <= 2 deg r and r^2 - 4 q s >= 0 on all of Z+
    (exactly, via leading sign plus root-bound scan).  scan_bound only
    controls the window on which the nonvanishing precondition of p is
    probed.
    """
    q, r, s = ps.poly(*q), ps.poly(*r), ps.poly(*s)
    if not q and not r and not s:
        raise ParameterError("all three polynomials are zero")
    if scan_bound < 1:
        raise ParameterError("scan_bound must be a positive integer")
    for m in range(scan_bound):
        for n in range(scan_bound):
            val = (ps.poly_eval(q, Fraction(m)) + ps.poly_eval(r, Fraction(m)) * n
                   + ps.poly_eval(s, Fraction(m)) * n * n)
            if val == 0:
                return _violated([Check("window_nonvanishing", Fraction(0), False)], (m, n))
    checks = [Check("window_nonvanishing", Fraction(1), True)]

    def deg(p: ps.Poly) -> int | None:
        return None if not p else ps.degree(p)

    dq, dr, dss = deg(q), deg(r), deg(s)
    lhs = (dq or 0) + (dss or 0) if (dq is not None and dss is not None) else None
    rhs = 2 * dr if dr is not None else None
    if lhs is None:
        degree_ok = True  # q or s vanishes identically: the sum is -infinity
    elif rhs is None:
        degree_ok = False
    else:
        degree_ok = lhs <= rhs
    checks.append(Check("degree_balance",
                        (Fraction(lhs if lhs is not None else 0),
                         Fraction(rhs if rhs is not None else 0)),
                        degree_ok))

    profile = ps.poly_sub(ps.poly_mul(r, r),
                          ps.poly_scale(ps.poly_mul(q, s), Fraction(4)))
    bad_m = ps.first_sign_violation(profile, strict=False)
    if bad_m is None:
        top = ps.sign_stable_bound(profile)
        samples = [(m, ps.poly_eval(profile, Fraction(m))) for m in range(top + 1)]
        arg, val = min(samples, key=lambda t: t[1]) if samples else (0, Fraction(0))
        checks.append(Check("discriminant_nonneg", (Fraction(arg), val), True))
    else:
        checks.append(Check("discriminant_nonneg",
                            (Fraction(bad_m), ps.poly_eval(profile, Fraction(bad_m))),
                            False))
    return _conclude(checks)


def line_restriction_sequence(p: BiDeg22Params, slope, intercept, length: int) -> list[Fraction]:
    """The exact sequence 1/p(m, slope*m + intercept), m = 0..length-1.

    Restricting a Hausdorff moment net of this family to a positive
    rational line keeps complete monotonicity, so these sequences feed
    directly into the one-dimensional oracle.
    """
    slope, intercept = Fraction(slope), Fraction(intercept)
    if slope <= 0 or intercept <= 0:
        raise ParameterError("slope and intercept must be positive")
    if length < 1:
        raise ParameterError("length must be a positive integer")
    out = []
    for m in range(length):
        val = p(m, slope * m + intercept)
        if val <= 0:
            raise PreconditionError(
                f"polynomial nonpositive at sampled point (m={m}, y={slope * m + intercept})",
                witness=(m, slope * m + intercept))
        out.append(1 / val)
    return out
