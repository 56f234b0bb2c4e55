"""Weighted 2-shift layer: moment polynomials of toral 3-isometries, the
five base difference parameters, squared shift weights and their Cauchy
duals, plus exact verifiers for the operator-theoretic hypotheses.

Weights are kept squared, as exact rationals: every identity used here
(commutation, telescoping, dual reciprocity, the m-isometry identity on
basis vectors) is quadratic in the weights.  The operator identity for a
toral m-isometry, applied to a basis vector e_delta, telescopes to the
scalar statement that every order-m mixed difference of gamma vanishes
at delta, which is what verify_toral_m_isometry checks.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from . import polyscan as ps
from .errors import DimensionError, ParameterError, PreconditionError
from .jsonutil import rat_field, rat_str
from .nets import MultiIndex2, Net2, forward_difference, net_from_function


@dataclass(frozen=True)
class RhoSet:
    """Base mixed differences of the squared moment function at the origin."""

    rho10: Fraction
    rho01: Fraction
    rho20: Fraction
    rho02: Fraction
    rho11: Fraction

    def __post_init__(self):
        for f in ("rho10", "rho01", "rho20", "rho02", "rho11"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))

    @property
    def rho1(self) -> Fraction:
        return 2 * self.rho10 - self.rho20

    @property
    def rho2(self) -> Fraction:
        return 2 * self.rho01 - self.rho02

    def to_json(self) -> dict:
        doc = {k: rat_str(getattr(self, k))
               for k in ("rho10", "rho01", "rho20", "rho02", "rho11")}
        doc["rho1"] = rat_str(self.rho1)
        doc["rho2"] = rat_str(self.rho2)
        return doc

    @classmethod
    def from_json(cls, doc: dict, pointer: str = "") -> "RhoSet":
        return cls(*(rat_field(doc, k, pointer)
                     for k in ("rho10", "rho01", "rho20", "rho02", "rho11")))


@dataclass(frozen=True)
class MomentPolynomial:
    """gamma(x, y) = 1 + a1 x + a2 x^2 + (b1 x + b2) y + c1 y^2, the squared
    moment function of a toral 3-isometric weighted 2-shift.

    Strict positivity on the whole integer grid is validated at
    construction (it forces a2 >= 0 and c1 >= 0)."""

    a1: Fraction
    a2: Fraction
    b1: Fraction
    b2: Fraction
    c1: Fraction

    def __post_init__(self):
        for f in ("a1", "a2", "b1", "b2", "c1"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))
        witness = ps.grid_positive_quadratic(self.x_part(), self.y_coeff(), self.c1)
        if witness is not None:
            raise PreconditionError(
                f"not a valid moment polynomial: gamma{witness} = "
                f"{self(*witness)} <= 0", witness=witness)

    def x_part(self) -> ps.Poly:
        return ps.poly(1, self.a1, self.a2)

    def y_coeff(self) -> ps.Poly:
        return ps.poly(self.b2, self.b1)

    def __call__(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return (1 + self.a1 * x + self.a2 * x * x
                + (self.b1 * x + self.b2) * y + self.c1 * y * y)

    def to_json(self) -> dict:
        return {k: rat_str(getattr(self, k)) for k in ("a1", "a2", "b1", "b2", "c1")}

    @classmethod
    def from_json(cls, doc: dict, pointer: str = "") -> "MomentPolynomial":
        return cls(*(rat_field(doc, k, pointer)
                     for k in ("a1", "a2", "b1", "b2", "c1")))


def gamma_from_rho(r: RhoSet) -> MomentPolynomial:
    """Coefficients of gamma from the base differences (and positivity check)."""
    return MomentPolynomial(
        a1=r.rho10 - r.rho20 / 2,
        a2=r.rho20 / 2,
        b1=r.rho11,
        b2=r.rho01 - r.rho02 / 2,
        c1=r.rho02 / 2,
    )


def rho_from_gamma(g: MomentPolynomial) -> RhoSet:
    """Base differences of gamma at the origin; exact inverse of gamma_from_rho."""
    return RhoSet(
        rho10=g.a1 + g.a2,
        rho01=g.b2 + g.c1,
        rho20=2 * g.a2,
        rho02=2 * g.c1,
        rho11=g.b1,
    )


def moment_net(g: MomentPolynomial, width: int, height: int) -> Net2:
    return net_from_function(lambda m, n: g(m, n), width, height)


def dual_moment_net(g: MomentPolynomial, width: int, height: int) -> Net2:
    """The net 1/gamma, i.e. the squared moments of the Cauchy dual shift."""
    return net_from_function(lambda m, n: 1 / g(m, n), width, height)


@dataclass(frozen=True)
class ShiftWeights:
    """Squared weights of both coordinate shifts on a finite window."""

    window: tuple[int, int]
    w1sq: tuple[tuple[Fraction, ...], ...]
    w2sq: tuple[tuple[Fraction, ...], ...]

    def to_json(self) -> dict:
        return {
            "window": list(self.window),
            "w1sq": [[rat_str(v) for v in row] for row in self.w1sq],
            "w2sq": [[rat_str(v) for v in row] for row in self.w2sq],
        }

    def direction_csv(self, j: int) -> str:
        grid = {1: self.w1sq, 2: self.w2sq}[j]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "n", f"w{j}sq"])
        for m, row in enumerate(grid):
            for n, v in enumerate(row):
                writer.writerow([m, n, rat_str(v)])
        return buf.getvalue()


def shift_weights(g: MomentPolynomial, width: int, height: int) -> ShiftWeights:
    """Squared weights as moment ratios gamma(alpha + e_j) / gamma(alpha).

    Telescoping these ratios along any lattice path from the origin
    recovers gamma exactly; path independence is the commutation identity.
    """
    if width < 1 or height < 1:
        raise DimensionError("window must be at least 1x1")
    vals = [[g(m, n) for n in range(height + 1)] for m in range(width + 1)]
    for m in range(width + 1):
        for n in range(height + 1):
            if vals[m][n] <= 0:
                raise PreconditionError(
                    f"gamma({m}, {n}) = {vals[m][n]} <= 0", witness=(m, n))
    w1 = tuple(tuple(vals[m + 1][n] / vals[m][n] for n in range(height))
               for m in range(width))
    w2 = tuple(tuple(vals[m][n + 1] / vals[m][n] for n in range(height))
               for m in range(width))
    return ShiftWeights((width, height), w1, w2)


def cauchy_dual_weights(w: ShiftWeights) -> ShiftWeights:
    """Entrywise reciprocal squared weights: the torally Cauchy dual shift."""
    for grid in (w.w1sq, w.w2sq):
        for m, row in enumerate(grid):
            for n, v in enumerate(row):
                if v == 0:
                    raise ParameterError(f"zero weight at ({m}, {n})")
    return ShiftWeights(
        w.window,
        tuple(tuple(1 / v for v in row) for row in w.w1sq),
        tuple(tuple(1 / v for v in row) for row in w.w2sq),
    )


def moments_from_weights(w: ShiftWeights) -> Net2:
    """Rebuild the squared moment net by telescoping along direction 1 then 2."""
    width, height = w.window
    vals = [[Fraction(1)] * height for _ in range(width)]
    for m in range(1, width):
        vals[m][0] = vals[m - 1][0] * w.w1sq[m - 1][0]
    for m in range(width):
        for n in range(1, height):
            vals[m][n] = vals[m][n - 1] * w.w2sq[m][n - 1]
    return Net2(width, height, tuple(tuple(row) for row in vals))


@dataclass(frozen=True)
class IdentityWitness:
    order: MultiIndex2
    base: MultiIndex2
    value: Fraction


@dataclass(frozen=True)
class ShiftVerdict:
    passed: bool
    witness: IdentityWitness | None = None

    def __bool__(self) -> bool:
        return self.passed


def verify_toral_m_isometry(g: MomentPolynomial, m: int,
                            width: int = 12, height: int = 12) -> ShiftVerdict:
    """Does every order-m mixed difference of gamma vanish on the window?

    On basis vectors the toral m-isometry identity reduces to
    D^beta gamma(delta + .) |_0 = 0 for every |beta| = m, which is checked
    exactly for all base points delta inside the window.
    """
    if m < 1:
        raise DimensionError("isometry order must be a positive integer")
    if m > min(width, height):
        raise DimensionError(
            f"window {width}x{height} too small for order {m}")
    net = moment_net(g, width + m, height + m)
    for i in range(m + 1):
        beta = MultiIndex2(i, m - i)
        d = forward_difference(net, beta)
        for d1 in range(width):
            for d2 in range(height):
                v = d.value(d1, d2)
                if v != 0:
                    return ShiftVerdict(False, IdentityWitness(
                        beta, MultiIndex2(d1, d2), v))
    return ShiftVerdict(True)


@dataclass(frozen=True)
class ExpansivityVerdict:
    passed: bool
    witness: tuple[MultiIndex2, int] | None = None  # (alpha, direction)

    def __bool__(self) -> bool:
        return self.passed


def _affine_nonneg_witness(q: ps.Poly, r: ps.Poly) -> tuple[int, int] | None:
    """Point (m, n) with q(m) + r(m) n < 0, or None if nonnegative on Z+^2."""
    m0 = ps.first_sign_violation(q, strict=False)
    if m0 is not None:
        return (m0, 0)
    m1 = ps.first_sign_violation(r, strict=False)
    if m1 is not None:
        qm = ps.poly_eval(q, Fraction(m1))
        rm = ps.poly_eval(r, Fraction(m1))
        n = (qm / -rm).numerator // (qm / -rm).denominator + 1
        assert qm + rm * n < 0
        return (m1, n)
    return None


def check_torally_expansive(g: MomentPolynomial, width: int = 12,
                            height: int = 12) -> ExpansivityVerdict:
    """Are both coordinate shifts expansive, i.e. gamma nondecreasing in
    each direction over the whole grid?

    The window is scanned exactly for a deterministic first witness; the
    infinite tail is settled symbolically from the difference polynomials
    D_1 gamma = (a1 + a2 + 2 a2 x) + b1 y and
    D_2 gamma = (b2 + c1 + b1 x) + 2 c1 y.
    """
    for m in range(width):
        for n in range(height):
            for j, delta in ((1, (1, 0)), (2, (0, 1))):
                if g(m + delta[0], n + delta[1]) < g(m, n):
                    return ExpansivityVerdict(False, (MultiIndex2(m, n), j))
    diff1 = (ps.poly(g.a1 + g.a2, 2 * g.a2), ps.poly(g.b1))
    diff2 = (ps.poly(g.b2 + g.c1, g.b1), ps.poly(2 * g.c1))
    for j, (q, r) in ((1, diff1), (2, diff2)):
        w = _affine_nonneg_witness(q, r)
        if w is not None:
            return ExpansivityVerdict(False, (MultiIndex2(*w), j))
    return ExpansivityVerdict(True)


def is_coordinate_2_isometry(g: MomentPolynomial, j: int) -> bool:
    """Does the j-th coordinate shift satisfy the 2-isometry identity?

    For these moment polynomials the pure second difference in direction j
    is identically 2 a2 (j = 1) resp. 2 c1 (j = 2)."""
    if j == 1:
        return g.a2 == 0
    if j == 2:
        return g.c1 == 0
    raise ParameterError(f"direction must be 1 or 2, got {j}")


def shift_bundle_json(g: MomentPolynomial, width: int, height: int) -> dict:
    """Combined document: gamma, its base differences, and windowed weights."""
    weights = shift_weights(g, width, height)
    return {
        "gamma": g.to_json(),
        "rho": rho_from_gamma(g).to_json(),
        "window": list(weights.window),
        "w1sq": weights.to_json()["w1sq"],
        "w2sq": weights.to_json()["w2sq"],
    }
