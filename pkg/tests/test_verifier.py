import json
from fractions import Fraction

import pytest

from seifert_surgery.errors import DomainError
from seifert_surgery.presentations import SeifertParams, coefficient_equation
from seifert_surgery.verifier import (
    KnotGateInput,
    Rule,
    Verdict,
    check_inequality_24,
    coarse_chain,
    enumerate_candidates,
    evaluate_candidate,
    pair_candidates,
    relaxed_beta_bound,
    rule_R1_parity,
    rule_R2_alpha_ge_2,
    rule_R3_beta_bound,
    rule_R4_beta2,
    rule_R5_beta4,
    run_case_analysis,
    survivors,
    sweep_parameters,
)


@pytest.mark.parametrize(
    "norm5, lam, expected",
    [
        (16, -1, True),
        (0, 0, True),
        (1936, -3, True),
        (10, 1, True),
        (8, 1, False),
        (1, -3, False),
        (361, Fraction(-9, 2), False),
    ],
)
def test_inequality_24(norm5, lam, expected):
    assert check_inequality_24(norm5, lam) is expected


def test_inequality_24_domain():
    with pytest.raises(DomainError):
        check_inequality_24(-1, 0)


@pytest.mark.parametrize("q, value", [((1, 1, -4), 2), ((1, -1, 0), 0), ((3, 1, -9), 2)])
def test_R1(q, value):
    t = rule_R1_parity(*q)
    assert t.verdict is Verdict.eliminated and t.rule is Rule.R1_parity
    assert t.witnesses["value"] == value


def test_R1_needs_odd():
    with pytest.raises(DomainError):
        rule_R1_parity(2, 1, 0)


def test_R2_example():
    t = rule_R2_alpha_ge_2(SeifertParams(2, 3, 1, 1, -2, 1))
    assert t.eliminated
    assert t.witnesses["lambda_X"] == Fraction(-21, 2)
    assert t.witnesses["exact_lhs"] == 36
    assert t.witnesses["exact_rhs"] == 440


def test_pairs_without_candidates():
    # 5 | beta: the equation fails mod 5; alpha + beta even: it fails mod 2
    assert pair_candidates(2, 5) == []
    assert pair_candidates(3, 7) == []


@pytest.mark.parametrize("pair", [(3, 4), (2, 3), (7, 12), (2, 9), (11, 16)])
def test_R2_pairs(pair):
    cands = pair_candidates(*pair)
    assert cands
    for p in cands:
        t = rule_R2_alpha_ge_2(p)
        assert t.eliminated and t.witnesses["coarse_eliminates"]


def test_R2_without_premise_survives():
    assert not rule_R2_alpha_ge_2(SeifertParams(2, 3, 1, 1, -2, 1), premise_24=False).eliminated


def test_R2_requires_z5():
    with pytest.raises(DomainError):
        rule_R2_alpha_ge_2(SeifertParams(2, 3, 1, 1, 1, 1))


def test_relaxed_bounds():
    assert relaxed_beta_bound(False) == Fraction(17, 3)
    assert relaxed_beta_bound(True) < 2


def test_R3():
    allowed = rule_R3_beta_bound()
    assert allowed == {2, 4}
    assert 3 not in allowed and 6 not in allowed


def test_R4():
    p = SeifertParams(1, 2, 1, -1, -1, 1)
    t = rule_R4_beta2(p, q=1)
    assert t.verdict is Verdict.survives
    assert t.witnesses["lambda_X"] == -1
    assert (t.witnesses["q2_mod_4"], t.witnesses["q3_mod_5"]) == (3, 4)
    assert rule_R4_beta2(p, q=3).eliminated
    assert rule_R4_beta2(p, q=-1).eliminated
    mirror = SeifertParams(1, 2, -1, 1, 1, -1)
    assert rule_R4_beta2(mirror, q=-1).verdict is Verdict.survives
    assert rule_R4_beta2(mirror, q=1).eliminated
    assert rule_R4_beta2(p).witnesses["requires_q"] == 1


def test_R5():
    t = rule_R5_beta4(SeifertParams(1, 4, 1, 1, -3, 1), norm5=256)
    assert t.eliminated
    assert t.witnesses["lambda_X"] == Fraction(-9, 2)
    assert (t.witnesses["exact_lhs"], t.witnesses["exact_rhs"]) == (16, 80)
    assert t.witnesses["norm5_matches"]
    other = SeifertParams(1, 4, -3, 9, 2, 1)
    assert coefficient_equation(other.x()) == 1
    assert rule_R5_beta4(other).witnesses["lambda_X"] == Fraction(-9, 2)
    mirror = rule_R5_beta4(SeifertParams(1, 4, -1, -1, 3, -1))
    assert mirror.eliminated and mirror.witnesses["lambda_X"] == Fraction(9, 2)


def test_congruences_exhaustive():
    for q1 in range(-99, 100, 2):
        for q2 in range(-100, 101):
            r = 1 - 10 * q1 - 5 * q2
            if r % 4 == 0 and abs(r // 4) <= 100:
                assert (q2 % 4, (r // 4) % 5) == (3, 4)
    for q1 in range(-100, 101):
        for q2 in range(-100, 101):
            r = 1 - 20 * q1 - 5 * q2
            if r % 8 == 0 and abs(r // 8) <= 100:
                assert (q2 % 4, (r // 8) % 5) == (1, 2)


def test_candidates_solve_the_equation():
    for p in enumerate_candidates(20):
        if p.alpha == p.beta == 1:
            continue
        p.check()
        assert coefficient_equation(p.x()) == p.e_sign


def test_candidate_enumeration_complete_small():
    # brute force over a window of integers, reduced to residue classes
    for a, b in [(1, 2), (1, 4), (2, 3), (3, 4), (2, 7), (3, 8)]:
        found = set()
        for q1 in range(-4 * a, 4 * a):
            for q2 in range(-4 * b, 4 * b):
                for sign in (1, -1):
                    r = sign - 5 * b * q1 - 5 * a * q2
                    if q1 % 2 and q2 % 2 and r % (2 * a * b) == 0:
                        q3 = r // (2 * a * b)
                        try:
                            SeifertParams(a, b, q1, q2, q3, sign).check()
                        except DomainError:
                            continue
                        found.add((q1 % (2 * a), q2 % (2 * b), sign))
        listed = {(p.q1 % (2 * a), p.q2 % (2 * b), p.e_sign) for p in pair_candidates(a, b)}
        assert listed == found


def test_theorem_reproduction():
    for q in list(range(-20, -1)) + list(range(2, 21)):
        traces = run_case_analysis(KnotGateInput.figure_eight(q))
        assert survivors(traces) == []
    for q in (1, -1):
        surv = survivors(run_case_analysis(KnotGateInput.figure_eight(q)))
        assert len(surv) == 1
        s = surv[0]
        assert (s.candidate.alpha, s.candidate.beta, s.candidate.e_sign) == (1, 2, q)
        assert s.witnesses["matches_lambda_q"] and s.witnesses["matches_norm5"]


def test_spec_gate_examples():
    assert not survivors(run_case_analysis(KnotGateInput(3, Fraction(-3), 1936)))
    assert survivors(run_case_analysis(KnotGateInput(1, Fraction(-1), 16)))
    assert not survivors(run_case_analysis(KnotGateInput(2, Fraction(-2), 361)))


def test_failed_premise_leaves_survivors():
    surv = survivors(run_case_analysis(KnotGateInput(3, Fraction(-3), 1)))
    assert surv
    assert all(t.rule is not Rule.R1_parity for t in surv)


def test_flags():
    with pytest.raises(DomainError):
        run_case_analysis(KnotGateInput(3, Fraction(-3), 1936, lescop_sigma_zero=False))
    with pytest.raises(DomainError):
        run_case_analysis(KnotGateInput(3, Fraction(-3), 1936, alexander_ok=False))


def test_sweep_small_reproduces_branches():
    report = sweep_parameters(4)
    rules = {(t.candidate.alpha, t.candidate.beta): set() for t in report.traces}
    for t in report.traces:
        rules[(t.candidate.alpha, t.candidate.beta)].add((t.rule, t.verdict))
    assert rules == {
        (1, 1): {(Rule.R1_parity, Verdict.eliminated)},
        (1, 2): {(Rule.R4_beta2_q1, Verdict.survives)},
        (1, 4): {(Rule.R5_beta4_lambda, Verdict.eliminated)},
        (2, 3): {(Rule.R2_alpha_ge_2, Verdict.eliminated)},
        (3, 4): {(Rule.R2_alpha_ge_2, Verdict.eliminated)},
    }


def test_sweep_10():
    report = sweep_parameters(10)
    assert report.summary["survivor_pairs"] == [(1, 2)]
    assert report.summary["coarse_unsound"] == []


def test_sweep_deterministic_across_workers():
    a = json.dumps(sweep_parameters(12, workers=1).to_json())
    b = json.dumps(sweep_parameters(12, workers=2).to_json())
    assert a == b


def test_sweep_domain():
    with pytest.raises(DomainError):
        sweep_parameters(3)


def test_trace_json_has_no_floats():
    def walk(v):
        if isinstance(v, dict):
            for x in v.values():
                walk(x)
        elif isinstance(v, list):
            for x in v:
                walk(x)
        else:
            assert not isinstance(v, float)

    walk(sweep_parameters(8).to_json())
