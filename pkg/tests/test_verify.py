import json
import math

import pytest

from qbargmann.errors import ConfigError
from qbargmann.verify import RunConfig, run_verification, suite_names

FAST = ["hermite_norms", "monomial_norms", "splitting", "inverse_roundtrip", "projection_roundtrip"]


def test_suite_names_unique():
    names = suite_names()
    assert len(names) == len(set(names))
    assert {"monomial_norms", "hermite_action", "diagonalization", "slice_independence_bound"} <= set(names)


def test_report_schema():
    report = run_verification(only=FAST)
    d = json.loads(report.to_json())
    assert set(d) == {"config", "entries", "summary"}
    assert set(d["config"]) == {"nu", "trunc", "gh_nodes", "radial_nodes", "angular_count", "seed", "tolerances"}
    for e in d["entries"]:
        assert set(e) == {"name", "anchor", "residual", "tolerance", "status", "runtime_ms"}
        assert e["status"] == ("pass" if e["residual"] <= e["tolerance"] else "fail")
        assert e["runtime_ms"] == 0.0
    assert d["summary"] == {"passed": len(FAST), "failed": 0}
    assert [e["name"] for e in d["entries"]] == [n for n in suite_names() if n in FAST]


def test_deterministic_and_order_independent():
    a = run_verification(only=FAST).to_json()
    b = run_verification(only=FAST).to_json()
    assert a == b
    solo = run_verification(only=["splitting"]).entry("splitting").residual
    assert solo == run_verification(only=FAST).entry("splitting").residual


def test_seed_changes_samples():
    r0 = run_verification(RunConfig(seed=0), only=["splitting"]).entry("splitting").residual
    r1 = run_verification(RunConfig(seed=1), only=["splitting"]).entry("splitting").residual
    assert r0 != r1


def test_tolerance_override_fails_check():
    report = run_verification(RunConfig(tolerances={"hermite_norms": 0.0}), only=["hermite_norms"])
    e = report.entry("hermite_norms")
    assert e.tolerance == 0.0 and e.status == "fail" and not report.ok


def test_underresolved_rule_is_a_failure():
    report = run_verification(RunConfig(gh_nodes=8), only=["projection_roundtrip", "hermite_action"])
    assert report.failed == 2
    assert all(e.residual is None for e in report.entries)


@pytest.mark.parametrize("kwargs", [dict(nu=0.0), dict(nu=math.nan), dict(trunc=0), dict(seed=-1),
                                    dict(tolerances={"nope": 1.0}), dict(tolerances={"parseval": -1.0})])
def test_config_validation(kwargs):
    with pytest.raises(ConfigError):
        run_verification(RunConfig(**kwargs), only=["parseval"])


def test_unknown_suite():
    with pytest.raises(ConfigError):
        run_verification(only=["nope"])


def test_renderings():
    report = run_verification(only=["splitting"], timing=True)
    assert report.entry("splitting").runtime_ms > 0
    assert report.to_csv().splitlines()[0] == "name,anchor,residual,tolerance,status,runtime_ms"
    assert "1 passed, 0 failed" in report.to_table()
