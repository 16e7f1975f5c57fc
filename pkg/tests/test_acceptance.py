"""Acceptance criteria, one test each, at the stated trial counts and zero tolerance.

Every criterion prints a ``CRITERION k PASS|FAIL`` line followed by its individual
checks.  The lines are also repeated in the pytest terminal summary.  Run this file
directly (``python tests/test_acceptance.py``) for the lines alone.
"""

import pytest

from dkcoalg.exactlinalg import QQ
from dkcoalg.suites import SuiteConfig, run_suite

# number, suite, trials, D, short title
CRITERIA = [
    (1, "dold-kan-roundtrip", 50, 6, "ε and η are natural isomorphisms"),
    (2, "monoidal", 50, 4, "AW and ∇ are chain maps, AW∘∇ = id, ∇∘AW = id on homology"),
    (3, "induced-coalgebras", 50, 4, "Ñ and Γ̃ give coalgebras and ÑΓ̃ ≅ Id"),
    (4, "comonoidal-square", 20, 4, "comonoidal square commutes; η-square counterexample reproduces"),
    (5, "lifting-characterizations", 100, 4, "LLP against Q and P as stated; GF(2) brute force agrees"),
    (6, "cofree-product", 20, 4, "C ⊓ T′_d(cone W) -> C is a weak equivalence with the lifting property"),
    (7, "factorization", 20, 4, "p∘i = f, i injective, H(p) iso"),
    (8, "connected-quillen", 30, 4, "homology comparison maps are coalgebra isomorphisms"),
    (9, "kunneth", 50, 6, "Künneth dimension formula"),
]

RESULTS: dict[int, list[str]] = {}


def _run(number: int, suite: str, trials: int, D: int, title: str):
    rep = run_suite(suite, SuiteConfig(trials=trials, seed=0, D=D, field=QQ))
    head = f"CRITERION {number} {'PASS' if rep.passed else 'FAIL'} [{suite}] {title} ({rep.seconds:.1f}s)"
    lines = [head] + ["    " + ln for ln in rep.lines()]
    RESULTS[number] = lines
    print("\n".join(lines))
    return rep


@pytest.mark.parametrize("number,suite,trials,D,title", CRITERIA, ids=[f"criterion{c[0]}-{c[1]}" for c in CRITERIA])
def test_criterion(number, suite, trials, D, title):
    rep = _run(number, suite, trials, D, title)
    assert rep.seconds < 60, f"{suite} took {rep.seconds:.1f}s"
    failed = [c for c in rep.checks if not c.passed]
    assert not failed, "; ".join(f"{c.name} {c.detail} witness={c.witness}" for c in failed)


if __name__ == "__main__":
    import sys

    ok = all(_run(*c).passed for c in CRITERIA)
    sys.exit(0 if ok else 1)
