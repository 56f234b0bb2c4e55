"""Top-level decider: is the torally Cauchy dual of a torally expansive
toral 3-isometric weighted 2-shift jointly subnormal?

The decision is a trichotomy on the base differences rho of the squared
moment function gamma.  Writing rho1 = 2 rho10 - rho20 and
rho2 = 2 rho01 - rho02:

  branch a  (rho20 = rho02 = 0, both coordinates 2-isometric):
      subnormal iff rho11 <= rho10 rho01.
  branch b  (rho20 > 0, first coordinate not 2-isometric):
      gate rho1 > 0 and rho1^2 >= 8 rho20, then either
      (i)  rho11 = rho01 = rho02 = 0, or
      (ii) rho11 > 0, rho2 > 0, rho11^2 >= rho20 rho02 and
           (rho20 rho2 - rho11 rho1)^2
              <= (4 rho11^2 - rho20 rho02)(rho1^2/4 - 2 rho20).
  branch c  (rho20 = 0 < rho02): branch b with the two indices swapped.

When both rho20 and rho02 are positive, branch b applies (and gives the
same answer as the swapped branch c).  Every comparison is exact; the
decision is cross-validated against the brute-force oracle through the
equivalence "dual subnormal iff the net 1/gamma is jointly completely
monotone".
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .deciders import Check, DecisionTrace
from .errors import PreconditionError
from .nets import CmVerdict, check_complete_monotone
from .shifts import (MomentPolynomial, RhoSet, check_torally_expansive,
                     dual_moment_net, rho_from_gamma, verify_toral_m_isometry)

SUBNORMAL = "subnormal"
NOT_SUBNORMAL = "not-subnormal"
PRECONDITION_VIOLATED = "precondition-violated"


@dataclass(frozen=True)
class CdspDecision:
    verdict: str
    branch: str | None
    checks: DecisionTrace
    rho: RhoSet

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "branch": self.branch,
            "rho": self.rho.to_json(),
            "checks": self.checks.to_json()["checks"],
            "witness": list(self.checks.witness) if self.checks.witness else None,
        }


def _precondition_checks(g: MomentPolynomial, width: int, height: int):
    checks = [Check("gamma_positive", Fraction(1), True)]  # validated at construction
    expansive = check_torally_expansive(g, width, height)
    if not expansive:
        alpha, j = expansive.witness
        pair = (g(alpha.i + (j == 1), alpha.j + (j == 2)), g(alpha.i, alpha.j))
        checks.append(Check("torally_expansive", pair, False))
        return checks, (alpha.i, alpha.j)
    checks.append(Check("torally_expansive", Fraction(1), True))
    iso = verify_toral_m_isometry(g, 3, width, height)
    if not iso:
        checks.append(Check("toral_3_isometry", iso.witness.value, False))
        return checks, (iso.witness.base.i, iso.witness.base.j)
    checks.append(Check("toral_3_isometry", Fraction(0), True))
    return checks, None


def decide_cdsp(g: MomentPolynomial, width: int = 12, height: int = 12) -> CdspDecision:
    """Decide joint subnormality of the Cauchy dual, with a full trace.

    The hypotheses (gamma positive, torally expansive, toral 3-isometry)
    are verified, not assumed; a failure short-circuits into the
    precondition-violated verdict with a witness.
    """
    rho = rho_from_gamma(g)
    checks, witness = _precondition_checks(g, width, height)
    if witness is not None:
        trace = DecisionTrace(None, tuple(checks), witness)
        return CdspDecision(PRECONDITION_VIOLATED, None, trace, rho)

    r1, r2 = rho.rho1, rho.rho2
    if rho.rho20 == 0 and rho.rho02 == 0:
        branch = "a"
        lhs, rhs = rho.rho11, rho.rho10 * rho.rho01
        checks.append(Check("mixed_at_most_product", (lhs, rhs), lhs <= rhs))
    elif rho.rho20 > 0:
        checks.append(Check("rho1_positive", r1, r1 > 0))
        checks.append(Check("rho1_sq_at_least_8_rho20",
                            (r1 * r1, 8 * rho.rho20), r1 * r1 >= 8 * rho.rho20))
        if rho.rho11 == 0 and rho.rho01 == 0 and rho.rho02 == 0:
            branch = "b-i"
            checks.append(Check("rho11_zero", rho.rho11, True))
            checks.append(Check("rho01_zero", rho.rho01, True))
            checks.append(Check("rho02_zero", rho.rho02, True))
        elif rho.rho11 > 0:
            branch = "b-ii"
            cross = (rho.rho20 * r2 - rho.rho11 * r1) ** 2
            bound = (4 * rho.rho11 ** 2 - rho.rho20 * rho.rho02) * (r1 * r1 / 4 - 2 * rho.rho20)
            checks.append(Check("rho11_positive", rho.rho11, True))
            checks.append(Check("rho2_positive", r2, r2 > 0))
            checks.append(Check("rho11_sq_at_least_rho20_rho02",
                                (rho.rho11 ** 2, rho.rho20 * rho.rho02),
                                rho.rho11 ** 2 >= rho.rho20 * rho.rho02))
            checks.append(Check("cross_term_bound", (cross, bound), cross <= bound))
        else:
            branch = "b-none"
            checks.append(Check("subcase_applicable", rho.rho11, False))
    else:  # rho20 = 0 < rho02: swap the roles of the two directions
        checks.append(Check("rho2_positive", r2, r2 > 0))
        checks.append(Check("rho2_sq_at_least_8_rho02",
                            (r2 * r2, 8 * rho.rho02), r2 * r2 >= 8 * rho.rho02))
        if rho.rho11 == 0 and rho.rho10 == 0 and rho.rho20 == 0:
            branch = "c-i"
            checks.append(Check("rho11_zero", rho.rho11, True))
            checks.append(Check("rho10_zero", rho.rho10, True))
            checks.append(Check("rho20_zero", rho.rho20, True))
        elif rho.rho11 > 0:
            branch = "c-ii"
            cross = (rho.rho02 * r1 - rho.rho11 * r2) ** 2
            bound = (4 * rho.rho11 ** 2 - rho.rho02 * rho.rho20) * (r2 * r2 / 4 - 2 * rho.rho02)
            checks.append(Check("rho11_positive", rho.rho11, True))
            checks.append(Check("rho1_positive", r1, r1 > 0))
            checks.append(Check("rho11_sq_at_least_rho20_rho02",
                                (rho.rho11 ** 2, rho.rho20 * rho.rho02),
                                rho.rho11 ** 2 >= rho.rho20 * rho.rho02))
            checks.append(Check("cross_term_bound", (cross, bound), cross <= bound))
        else:
            branch = "c-none"
            checks.append(Check("subcase_applicable", rho.rho11, False))

    trace = DecisionTrace(all(c.satisfied for c in checks), tuple(checks))
    verdict = SUBNORMAL if trace.verdict else NOT_SUBNORMAL
    return CdspDecision(verdict, branch, trace, rho)


@dataclass(frozen=True)
class CrossValidationReport:
    decision: CdspDecision
    oracle: CmVerdict
    confirmed: bool
    note: str

    def to_json(self) -> dict:
        return {
            "decision": self.decision.to_json(),
            "oracle": self.oracle.to_json(),
            "confirmed": self.confirmed,
            "note": self.note,
        }


def cross_validate(g: MomentPolynomial, width: int = 12, height: int = 12,
                   max_order: int = 6) -> CrossValidationReport:
    """Check the decision against the oracle on the dual moment net 1/gamma.

    A subnormal decision must be oracle-clean (this direction is
    mandatory); a not-subnormal decision asks the oracle for a violation
    witness, and not finding one within the budget is reported with an
    escalation hint rather than treated as a contradiction.
    """
    decision = decide_cdsp(g, width, height)
    if decision.verdict == PRECONDITION_VIOLATED:
        raise PreconditionError(
            "hypotheses fail; nothing to cross-validate",
            witness=decision.checks.witness)
    oracle = check_complete_monotone(dual_moment_net(g, width, height),
                                     max_order, "joint")
    if decision.verdict == SUBNORMAL:
        if oracle.passed:
            return CrossValidationReport(
                decision, oracle, True,
                f"no violation up to (order {max_order}, window {width}x{height})")
        return CrossValidationReport(
            decision, oracle, False,
            "decision says subnormal but the oracle found a violation; "
            "this indicates a defect and must not happen")
    if oracle.passed:
        return CrossValidationReport(
            decision, oracle, False,
            "not-subnormal but no witness within budget; enlarge the window "
            "or max order to locate one")
    return CrossValidationReport(
        decision, oracle, True, "oracle witness confirms non-subnormality")
