from __future__ import annotations

import json

import pytest

from domcolor.errors import ConfigError
from domcolor.families import connected_graphs, rooted
from domcolor.suite import SuiteConfig, find_sharpness, instances_for, konig_instances, named_graph, run_suite
from domcolor.theorems import Instance, TheoremId, Verdict, evaluate


def test_corona_dominator_family_has_no_violation():
    cfg = SuiteConfig(theorems=("corona-dominator",), max_n=4, h_factors=("K1", "K2", "P3", "K3"))
    report = run_suite(cfg)
    assert report.counts["corona-dominator"]["VIOLATED"] == 0
    assert len(report.results) == 10 * 4


def test_cycle_family_counts():
    report = run_suite(SuiteConfig(theorems=("cycle-dominated",)))
    per = report.counts["cycle-dominated"]
    assert per["EQUALITY"] == 7 and per["VIOLATED"] == 1  # k = 3, see test_counterexamples


def test_konig_family():
    report = run_suite(SuiteConfig(theorems=("konig",), seed=3))
    assert report.counts["konig"] == {"EQUALITY": 100, "STRICT_HOLDS": 0, "VIOLATED": 0, "SKIPPED": 0}
    assert konig_instances(5, 10, 1) == konig_instances(5, 10, 1)
    assert konig_instances(5, 10, 1) != konig_instances(5, 10, 2)


def test_report_is_scheduler_independent():
    cfg = SuiteConfig(theorems=("corona-dominated", "hier-dominator-upper"), max_n=3,
                      hier_upper_sizes=((2, 2),), h_factors=("K1", "K2"))
    serial = run_suite(cfg)
    cfg.workers = 2
    pooled = run_suite(cfg)
    assert serial.to_json() == pooled.to_json()
    assert serial.to_csv() == pooled.to_csv()


def test_csv_columns_and_violation_reproduction():
    report = run_suite(SuiteConfig(theorems=("corona-dominated",), max_n=2, h_factors=("K1",)))
    lines = report.to_csv().splitlines()
    assert lines[0] == "theorem,instance,lhs,rhs,verdict"
    doc = json.loads(report.to_json())
    bad = [r for r in doc["results"] if r["verdict"] == "VIOLATED"]
    assert doc["violations"] == len(bad) == 1
    again = evaluate(bad[0]["theorem"], Instance.from_description(bad[0]["instance"]))
    assert again.verdict is Verdict.VIOLATED and again.lhs == bad[0]["lhs"]


def test_hier_upper_sizes():
    cfg = SuiteConfig(hier_upper_sizes=((2, 2), (3, 2)))
    insts = instances_for(TheoremId.HIER_DOMINATOR_UPPER, cfg)
    # outer: K1, K2, 2K1; inner rooted: K1@0, K2@0, 2K1@0
    assert len(insts) == 3 * 3 + 3 * 3 * 3
    with pytest.raises(ConfigError):
        instances_for(TheoremId.HIER_DOMINATOR_UPPER, SuiteConfig(hier_upper_sizes=((1, 2),)))


def test_config_errors():
    with pytest.raises(ConfigError):
        named_graph("K9")
    with pytest.raises(ConfigError):
        run_suite(SuiteConfig(theorems=("nope",)))
    with pytest.raises(ConfigError):
        instances_for(TheoremId.KONIG, SuiteConfig(max_n=0))


def test_sharpness_examples():
    hits = find_sharpness("edgecorona-lower-nopendant", "cycles", "complete", max_n=4)
    assert "G=Cl H=A_" in [r.instance.label() for r in hits]
    hits = find_sharpness("edgecorona-lower-pendant", "paths", "complete", max_n=4)
    assert "G=Ch H=C~" in [r.instance.label() for r in hits]
    sizes = [sum(g.n for g in r.instance.factors) for r in hits]
    assert sizes == sorted(sizes)


def test_sharpness_with_single_vertex_outer_factor():
    hits = find_sharpness("hier-dominator-upper", "k1", "connected", max_n=4)
    assert len(hits) == len(list(rooted(connected_graphs(4))))
    assert all(r.verdict is Verdict.EQUALITY for r in hits)


def test_sharpness_rejects_equalities():
    with pytest.raises(ConfigError):
        find_sharpness("konig", "paths", "paths")
