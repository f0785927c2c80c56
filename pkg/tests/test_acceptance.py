"""Acceptance criteria, one test (and one printed PASS/FAIL line) each.

Criteria 1-11 read residuals from a full default ``qbargmann verify`` run;
criterion 12 checks that run itself. Tolerances are pinned here, not taken
from the suite defaults, so loosening a default cannot make a criterion pass.

Run directly with ``python3 tests/test_acceptance.py`` for the summary alone.
"""

from __future__ import annotations

import json
import sys
import tempfile
import time
from pathlib import Path

import pytest

from qbargmann.cli import main

# criterion -> (description, [(check name, max residual)])
CRITERIA = {
    1: ("monomial norms, n <= 20, nu in {0.5, 1, 2}", [("monomial_norms", 1e-9)]),
    2: ("Hermite norms, n <= 20", [("hermite_norms", 1e-9)]),
    3: ("transform of h_n against (nu/pi)^(1/4) 2^(n/2) nu^n q^n, n <= 12", [("hermite_action", 1e-8)]),
    4: ("isometry, coefficient and quadrature paths",
        [("isometry_coeff", 1e-12), ("isometry_quadrature", 1e-7)]),
    5: ("slice independence, equality and factor-2 bound",
        [("slice_independence", 1e-8), ("slice_independence_bound", 0.0)]),
    6: ("reproducing property and <K_q, K_q'> = K(q', q)",
        [("reproducing", 1e-7), ("kernel_gram", 1e-7)]),
    7: ("||A_q|| = ||K_q|| three ways", [("kernel_norms", 1e-8)]),
    8: ("point-evaluation and transform bounds, zero violations",
        [("point_eval_bound", 0.0), ("transform_bound", 0.0)]),
    9: ("inverse: slice integral vs series, and both roundtrips",
        [("inverse_quadrature", 1e-7), ("inverse_roundtrip", 1e-12)]),
    10: ("Fourier intertwining and diagonalization",
         [("intertwine", 1e-6), ("diagonalization", 1e-6), ("diagonal_monomials", 1e-6)]),
    11: ("splitting, representation, extension",
         [("splitting", 1e-10), ("representation", 1e-10), ("extension", 1e-10)]),
}
MONOMIAL_BUDGET_S = 5.0
VERIFY_BUDGET_S = 60.0


def _verify(*extra: str) -> tuple[int, bytes, float]:
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "report.json"
        t0 = time.perf_counter()
        code = main(["verify", "--format", "json", "--out", str(out), *extra])
        elapsed = time.perf_counter() - t0
        return code, out.read_bytes(), elapsed


class Runs:
    def __init__(self):
        self.code, self.first, self.elapsed = _verify()
        _, self.second, _ = _verify()
        self.entries = {e["name"]: e for e in json.loads(self.first)["entries"]}
        _, timed, _ = _verify("--only", "monomial_norms", "--timing")
        self.monomial_ms = json.loads(timed)["entries"][0]["runtime_ms"]


def evaluate(n: int, runs: Runs) -> tuple[bool, str]:
    if n == 12:
        same = runs.first == runs.second
        ok = runs.code == 0 and runs.elapsed < VERIFY_BUDGET_S and same
        return ok, (f"full verify: exit {runs.code}, {runs.elapsed:.1f} s (< {VERIFY_BUDGET_S:.0f} s), "
                    f"reports {'byte-identical' if same else 'DIFFER'}")
    _, checks = CRITERIA[n]
    ok = True
    parts = []
    for name, tol in checks:
        e = runs.entries[name]
        r = e["residual"]
        good = r is not None and r <= tol and e["status"] == "pass"
        ok &= good
        parts.append(f"{name}={'error' if r is None else f'{r:.2e}'} (<= {tol:g})")
    if n == 1:
        fast = runs.monomial_ms < MONOMIAL_BUDGET_S * 1e3
        ok &= fast
        parts.append(f"runtime {runs.monomial_ms / 1e3:.2f} s (< {MONOMIAL_BUDGET_S:.0f} s)")
    return ok, ", ".join(parts)


def line(n: int, ok: bool, detail: str) -> str:
    desc = CRITERIA[n][0] if n in CRITERIA else "full verify run"
    return f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {desc}: {detail}"


@pytest.fixture(scope="module")
def runs():
    return Runs()


@pytest.mark.parametrize("n", range(1, 13))
def test_criterion(n, runs, capsys):
    ok, detail = evaluate(n, runs)
    with capsys.disabled():
        print("\n" + line(n, ok, detail), end="")
    assert ok, detail


if __name__ == "__main__":
    r = Runs()
    results = [evaluate(n, r) for n in range(1, 13)]
    for n, (ok, detail) in enumerate(results, start=1):
        print(line(n, ok, detail))
    sys.exit(0 if all(ok for ok, _ in results) else 1)
