"""
Case analysis for Seifert fibred 2/q-surgery on a knot with Alexander
polynomial t^2 - 3t + 1.

Every candidate presentation (alpha, beta, q1, q2, q3, sign of e) is run
through the rules below and the outcome is recorded with exact witnesses:

R1_parity           alpha = beta = 1: 5q1 + 5q2 + 2q3 is even, never +-1.
R2_alpha_ge_2       alpha >= 2: (alpha*beta)^2 >= 4 lambda(X)^2 - 1 fails.
R3_beta_bound       alpha = 1 forces beta in {2, 4} (coarse bound + parity).
R4_beta2_q1         alpha = 1, beta = 2: lambda(M) = -+1 forces |q| = 1.
R5_beta4_lambda     alpha = 1, beta = 4: lambda(X) = -+9/2 breaks the inequality.
R6_exact_inequality any other alpha = 1 candidate, by the exact inequality.

Candidates are residue classes: lambda(X) only sees q1 mod alpha,
q2 mod beta and q3 mod 5, and parity lives mod 2alpha, 2beta.  For
alpha >= 2 and for alpha = 1, beta >= 6 the coarse bounds eliminate every
candidate outright, so a finite grid plus those bounds covers all cases.
"""

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from . import kernels
from .algebra import format_rational
from .dedekind import dedekind_S
from .errors import DomainError, InvariantViolation
from .lescop import lescop_M_from_assumptions, lescop_seifert_X, seifert_base_term
from .presentations import SeifertParams, coefficient_equation, euler_e, h1_order_X


class Rule(str, enum.Enum):
    R1_parity = "R1_parity"
    R2_alpha_ge_2 = "R2_alpha_ge_2"
    R3_beta_bound = "R3_beta_bound"
    R4_beta2_q1 = "R4_beta2_q1"
    R5_beta4_lambda = "R5_beta4_lambda"
    R6_exact_inequality = "R6_exact_inequality"


class Verdict(str, enum.Enum):
    eliminated = "eliminated"
    survives = "survives"


def _jsonable(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, enum.Enum):
        return v.value
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        return [_jsonable(x) for x in v]
    return v


@dataclass(frozen=True)
class EliminationTrace:
    candidate: SeifertParams
    verdict: Verdict
    rule: Rule
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def eliminated(self):
        return self.verdict is Verdict.eliminated

    def to_json(self):
        return {
            "candidate": self.candidate.to_json(),
            "verdict": self.verdict.value,
            "rule": self.rule.value,
            "witnesses": _jsonable(self.witnesses),
        }


@dataclass(frozen=True)
class KnotGateInput:
    q: int
    lambda_q: Fraction
    norm5: int
    lescop_sigma_zero: bool = True
    alexander_ok: bool = True

    @classmethod
    def figure_eight(cls, q):
        from .lescop import DSequence, lescop_two_bridge
        from .norms import fig8_torsion_norm

        lam = lescop_two_bridge(DSequence((1, -q, 1)), -3, -3)
        return cls(q, lam, fig8_torsion_norm(q))


# -- inequalities ----------------------------------------------------------


def check_inequality_24(norm5, lambda_q):
    """sqrt(norm5) >= 4 lambda^2 - 1, decided without square roots.

    For r = 4 lambda^2 - 1 > 0 this is norm5 >= r^2, which is also the right
    test when norm5 is not a perfect square.
    """
    if norm5 < 0:
        raise DomainError("norm5 must be nonnegative")
    r = 4 * Fraction(lambda_q) ** 2 - 1
    return r <= 0 or norm5 >= r * r


def exact_inequality(ab, lam):
    """((alpha*beta)^2, 4 lambda^2 - 1, holds?) for the inequality sqrt|X|_5 >= 4 lambda^2 - 1
    with |X|_5 = (alpha*beta)^4."""
    lhs = ab * ab
    rhs = 4 * lam * lam - 1
    return lhs, rhs, lhs >= rhs


def abs_S_bound(alpha, beta):
    """Upper bound on |S| from |s(q, p)| <= p/12 and |s(q3, 5)| <= 1/5."""
    if alpha == 1:
        return Fraction(beta, 12) + Fraction(2, 5)
    return Fraction(beta, 6) + Fraction(2, 5)


def coarse_chain(alpha, beta):
    """The inequality 3/2 ab < -1/8 + 25b/(24a) + 25a/(24b) + 1/(24ab) + 5/2 |S|
    with |S| replaced by its bound; failure eliminates the candidate."""
    lhs = Fraction(3, 2) * alpha * beta
    rhs = (
        Fraction(-1, 8)
        + Fraction(25 * beta, 24 * alpha)
        + Fraction(25 * alpha, 24 * beta)
        + Fraction(1, 24 * alpha * beta)
        + Fraction(5, 2) * abs_S_bound(alpha, beta)
    )
    return {"coarse_lhs": lhs, "coarse_rhs": rhs, "coarse_eliminates": not lhs < rhs}


def relaxed_beta_bound(alpha_ge_2):
    """B such that the coarse chain, relaxed to be linear in beta, forces beta < B.

    alpha >= 2: 3b < (-1/8 + 25/24 + 1/144 + 1) + (25/48 + 5/12) b, using
    a = 2 in 25b/(24a), a/b < 1 and ab >= 6.
    alpha = 1:  3/2 b < (-1/8 + 26/48 + 1) + (25/24 + 5/24) b, using b >= 2.
    """
    if alpha_ge_2:
        const = Fraction(-1, 8) + Fraction(25, 24) + Fraction(1, 144) + Fraction(5, 2) * Fraction(2, 5)
        slope = Fraction(25, 48) + Fraction(5, 2) * Fraction(1, 6)
        lead = Fraction(3)
    else:
        const = Fraction(-1, 8) + Fraction(26, 48) + Fraction(5, 2) * Fraction(2, 5)
        slope = Fraction(25, 24) + Fraction(5, 2) * Fraction(1, 12)
        lead = Fraction(3, 2)
    return const / (lead - slope)


def rule_R3_beta_bound():
    """Admissible beta when alpha = 1: below the relaxed bound and even.

    With alpha = 1 and q1, q2 odd, 5b*q1 + 5q2 + 2b*q3 is even for odd b.
    """
    bound = relaxed_beta_bound(False)
    allowed = set()
    for beta in range(2, -(-bound.numerator // bound.denominator)):
        if beta >= bound:
            continue
        if (5 * beta + 5) % 2 == 0:
            continue
        allowed.add(beta)
    return frozenset(allowed)


# -- rules -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _lambda_X(params):
    return lescop_seifert_X(params)


def _require_z5(params):
    value = coefficient_equation(params.x())
    if value != params.e_sign:
        raise DomainError(f"{params} does not give H_1(X) = Z/5 with this sign of e (value {value})")


def _seifert_witnesses(params):
    lam = _lambda_X(params)
    ab = params.alpha * params.beta
    lhs, rhs, holds = exact_inequality(ab, lam)
    w = {
        "lambda_X": lam,
        "e": euler_e(params.x()),
        "S": dedekind_S(params),
        "h1_order_X": h1_order_X(params.x()),
        "exact_lhs": lhs,
        "exact_rhs": rhs,
        "exact_holds": holds,
    }
    w.update(coarse_chain(params.alpha, params.beta))
    return w


def rule_R1_parity(q1, q2, q3):
    if q1 % 2 == 0 or q2 % 2 == 0:
        raise DomainError("R1 applies to odd q1, q2")
    value = 5 * q1 + 5 * q2 + 2 * q3
    if value % 2 or abs(value) == 1:
        raise InvariantViolation(f"5q1 + 5q2 + 2q3 = {value} should be even")
    params = SeifertParams(1, 1, q1, q2, q3, 1 if value >= 0 else -1)
    w = {"value": value, "parity": "even", "h1_order_M": abs(10 * q1 + 10 * q2 + 4 * q3)}
    return EliminationTrace(params, Verdict.eliminated, Rule.R1_parity, w)


def rule_R2_alpha_ge_2(params, premise_24=True):
    if not 2 <= params.alpha < params.beta:
        raise DomainError("R2 needs 2 <= alpha < beta")
    _require_z5(params)
    w = _seifert_witnesses(params)
    w["relaxed_beta_bound"] = relaxed_beta_bound(True)
    w["premise_24"] = premise_24
    verdict = Verdict.eliminated if premise_24 and not w["exact_holds"] else Verdict.survives
    return EliminationTrace(params, verdict, Rule.R2_alpha_ge_2, w)


_BETA2_CONGRUENCES = {1: (3, 4), -1: (1, 1)}
_BETA4_CONGRUENCES = {1: (1, 2), -1: (3, 3)}


def _check_congruences(params, table):
    want = table[params.e_sign]
    got = (params.q2 % 4, params.q3 % 5)
    if got != want:
        raise InvariantViolation(f"(q2 mod 4, q3 mod 5) = {got}, expected {want} for {params}")
    return got


def rule_R4_beta2(params, q=None):
    """alpha = 1, beta = 2.  lambda(M) is -1 for e > 0 and +1 in the mirror;
    with lambda(M) = -q this survives only for q = sign of e.  Without q the
    candidate is reported as the surviving family."""
    if (params.alpha, params.beta) != (1, 2):
        raise DomainError("R4 needs alpha = 1, beta = 2")
    _require_z5(params)
    w = _seifert_witnesses(params)
    w["q2_mod_4"], w["q3_mod_5"] = _check_congruences(params, _BETA2_CONGRUENCES)
    branch = -params.e_sign
    if w["lambda_X"] != branch:
        raise InvariantViolation(f"lambda(X) = {w['lambda_X']} on the beta = 2 branch")
    w["lambda_M_branch"] = branch
    w["requires_q"] = params.e_sign
    if q is None:
        return EliminationTrace(params, Verdict.survives, Rule.R4_beta2_q1, w)
    w["lambda_M_contract"] = lescop_M_from_assumptions(q)
    verdict = Verdict.survives if w["lambda_M_contract"] == branch else Verdict.eliminated
    return EliminationTrace(params, verdict, Rule.R4_beta2_q1, w)


def rule_R5_beta4(params, norm5=None, premise_24=True):
    if (params.alpha, params.beta) != (1, 4):
        raise DomainError("R5 needs alpha = 1, beta = 4")
    _require_z5(params)
    w = _seifert_witnesses(params)
    w["q2_mod_4"], w["q3_mod_5"] = _check_congruences(params, _BETA4_CONGRUENCES)
    if w["lambda_X"] != Fraction(-9, 2) * params.e_sign:
        raise InvariantViolation(f"lambda(X) = {w['lambda_X']} on the beta = 4 branch")
    if norm5 is not None:
        w["norm5_matches"] = norm5 == 4**4
    w["premise_24"] = premise_24
    verdict = Verdict.eliminated if premise_24 and not w["exact_holds"] else Verdict.survives
    return EliminationTrace(params, verdict, Rule.R5_beta4_lambda, w)


def rule_R6_exact(params, premise_24=True):
    if params.alpha != 1 or params.beta in (1, 2, 4):
        raise DomainError("R6 covers alpha = 1 candidates outside the named branches")
    _require_z5(params)
    w = _seifert_witnesses(params)
    w["relaxed_beta_bound"] = relaxed_beta_bound(False)
    w["beta_admissible"] = params.beta in rule_R3_beta_bound()
    w["premise_24"] = premise_24
    verdict = Verdict.eliminated if premise_24 and not w["exact_holds"] else Verdict.survives
    return EliminationTrace(params, verdict, Rule.R6_exact_inequality, w)


def evaluate_candidate(params, q=None, premise_24=True, norm5=None):
    a, b = params.alpha, params.beta
    if a == b == 1:
        return rule_R1_parity(params.q1, params.q2, params.q3)
    if a >= 2:
        return rule_R2_alpha_ge_2(params, premise_24)
    if b == 2:
        return rule_R4_beta2(params, q)
    if b == 4:
        return rule_R5_beta4(params, norm5, premise_24)
    return rule_R6_exact(params, premise_24)


# -- enumeration -----------------------------------------------------------


def _r1_classes():
    out = []
    for q3 in range(1, 5):
        out.append(SeifertParams(1, 1, 1, 1, q3, 1))
        out.append(SeifertParams(1, 1, -1, -1, -q3, -1))
    return out


def pair_candidates(alpha, beta):
    """Residue-class representatives for one (alpha, beta), both signs of e."""
    if alpha == beta == 1:
        return _r1_classes()
    out = []
    for sign in (1, -1):
        for q1, q2, q3 in kernels.class_scan(alpha, beta, sign):
            out.append(SeifertParams(alpha, beta, q1, q2, q3, sign))
    return out


def coprime_pairs(max_beta):
    return [(a, b) for b in range(1, max_beta + 1) for a in range(1, b + 1) if gcd(a, b) == 1 and (a < b or a == 1)]


@lru_cache(maxsize=None)
def enumerate_candidates(max_beta):
    """Every candidate with beta <= max_beta, sorted lexicographically."""
    out = []
    for a, b in coprime_pairs(max_beta):
        out.extend(pair_candidates(a, b))
    return tuple(sorted(out))


# -- drivers ---------------------------------------------------------------


def run_case_analysis(inp, max_beta=50):
    """Trace of every candidate for the given knot data.

    A candidate survives only if no rule whose premises hold removes it.
    The inequality rules (R2, R5, R6) need sqrt(norm5) >= 4 lambda_q^2 - 1.
    """
    if not (inp.lescop_sigma_zero and inp.alexander_ok):
        raise DomainError("the case analysis assumes lambda(Sigma) = 0 and Delta = t^2 - 3t + 1")
    if max_beta < 6:
        raise DomainError("max_beta must reach past the coarse bound beta < 6")
    premise = check_inequality_24(inp.norm5, inp.lambda_q)
    traces = []
    for params in enumerate_candidates(max_beta):
        t = evaluate_candidate(params, q=inp.q, premise_24=premise, norm5=inp.norm5)
        if not t.eliminated:
            t.witnesses["matches_lambda_q"] = t.witnesses.get("lambda_X") == Fraction(inp.lambda_q)
            t.witnesses["matches_norm5"] = inp.norm5 == (params.alpha * params.beta) ** 4
        traces.append(t)
    return traces


def survivors(traces):
    return [t for t in traces if not t.eliminated]


@dataclass
class SweepReport:
    max_beta: int
    traces: list
    summary: dict

    def to_json(self, include_traces=True):
        out = {"max_beta": self.max_beta, "summary": _jsonable(self.summary)}
        if include_traces:
            out["traces"] = [t.to_json() for t in self.traces]
        return out


def _evaluate_pairs(pairs):
    out = []
    for a, b in pairs:
        for params in pair_candidates(a, b):
            out.append(evaluate_candidate(params))
    return out


def sweep_parameters(max_beta, workers=1):
    """Evaluate every candidate with beta <= max_beta, assuming the inequality
    premise and leaving q free.

    The (alpha, beta) grid is dealt round-robin to the workers; the merged
    trace is sorted, so output does not depend on the worker count.
    """
    if max_beta < 4:
        raise DomainError("max_beta must be at least 4")
    pairs = coprime_pairs(max_beta)
    if workers > 1:
        chunks = [pairs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            traces = [t for part in pool.map(_evaluate_pairs, chunks) for t in part]
    else:
        traces = _evaluate_pairs(pairs)
    traces.sort(key=lambda t: t.candidate)

    by_rule = {r.value: 0 for r in Rule}
    unsound, weaker, empty = [], 0, 0
    for t in traces:
        if t.eliminated:
            by_rule[t.rule.value] += 1
        w = t.witnesses
        if "coarse_eliminates" in w:
            exact_kills = not w["exact_holds"]
            if w["coarse_eliminates"] and not exact_kills:
                unsound.append(t.candidate)
            elif exact_kills and not w["coarse_eliminates"]:
                weaker += 1
    seen = {(t.candidate.alpha, t.candidate.beta) for t in traces}
    empty = sum(1 for p in pairs if p not in seen)
    surv = [t for t in traces if not t.eliminated]
    summary = {
        "candidates": len(traces),
        "eliminated_by_rule": by_rule,
        "survivors": len(surv),
        "survivor_pairs": sorted({(t.candidate.alpha, t.candidate.beta) for t in surv}),
        "pairs": len(pairs),
        "pairs_without_candidates": empty,
        "coarse_unsound": [c.to_json() for c in unsound],
        "coarse_weaker_than_exact": weaker,
    }
    return SweepReport(max_beta, traces, summary)
