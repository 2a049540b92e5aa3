"""Acceptance criteria, one test each.

Every criterion runs the identity checks shared with ``mnqt verify`` at the
default truncation degree and prints one PASS/FAIL line.  The lines are
repeated in the pytest terminal summary; running this file directly with
python3 prints them without pytest.
"""
import time

import pytest

from mnqt import verify as v
from mnqt.symfunc import truncation

RESULTS = {}

# number -> (summary, runtime budget in seconds or None, builder of checks)
CRITERIA = {
    1: ("<P,Q>_qt orthogonality n<=6; g_n two ways n<=8", 120,
        lambda: [v.check_orthogonality(6), v.check_g_elements(8)]),
    2: ("primal, skew and dual expansions with symbolic a, adjointness", 300,
        lambda: v.check_mn_rules(5, 3)),
    3: ("closed form at a-1 versus substitution oracle |lam|<=5; delta at a=1", None,
        lambda: v.check_closed_form(5)),
    4: ("limit a -> 1 of g~_k((a-1)X) for k<=8", None,
        lambda: [v.check_limit(8)]),
    5: ("Green iteration versus extraction n<=5; reconstruction of J", 600,
        lambda: v.check_green(5)),
    6: ("negative-unit closed form |lam|<=8; Hecke and Hecke-Clifford weights", None,
        lambda: [v.check_hl_minus_one(8), v.check_hecke(6), *v.check_hecke_clifford(6)]),
    7: ("Hall-Littlewood inverse Pieri n<=7 with t=0 and t=-1 reductions", None,
        lambda: v.check_inversion(7, 8)),
    8: ("determinantal inverse Pieri reconstructs Q_lam(X;q,t), l<=3, |lam|<=6", 900,
        lambda: [v.check_lassalle_schlosser(6, 3)]),
    9: ("Kostka four-way, second iteration, q=0 column, integrality n<=5", 1200,
        lambda: v.check_kostka(5, 3)),
    10: ("fake degree three ways on skew shapes with <=7 cells", None,
         lambda: [v.check_fake_degree(7)]),
}


def evaluate(number):
    summary, budget, build = CRITERIA[number]
    start = time.perf_counter()
    with truncation(8):
        checks = build()
    elapsed = time.perf_counter() - start
    passed = all(c.passed for c in checks)
    within = budget is None or elapsed < budget
    cases = sum(c.count for c in checks)
    status = "PASS" if passed and within else "FAIL"
    line = "%s criterion %d: %s (%d cases, %.1fs)" % (status, number, summary, cases, elapsed)
    if not within:
        line += " over the %ds budget" % budget
    details = [c.line() for c in checks if not c.passed]
    RESULTS[number] = (line, details)
    return passed, within, details


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    passed, within, details = evaluate(number)
    print(RESULTS[number][0])
    assert passed, "\n".join(details)
    assert within, RESULTS[number][0]


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        evaluate(n)
        print(RESULTS[n][0])
        for d in RESULTS[n][1]:
            print("    " + d)
