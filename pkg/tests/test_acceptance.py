"""Acceptance criteria, one test per criterion, each printing a
PASS line when its assertions hold.  Run with `pytest -v -s`."""
from __future__ import annotations

import random

from gupblab import catalog
from gupblab.filtering import filter_graphs
from gupblab.gen import EnumerationSpec, enumerate_disconnected_regular, enumerate_regular
from gupblab.graphs import canonical_form, find_induced_embedding, girth
from gupblab.n11 import check_n11_infeasibility
from gupblab.propagation import propagate_equalities
from gupblab.representations import Representation, rank_of_subset, verify_representation
from gupblab.scenarios import emit_report, obstruction_set_o3, run_scenario

from helpers import brute_force_induced_embedding, random_graph


def _ok(criterion: int, message: str) -> None:
    print(f"[criterion {criterion:02d}] PASS  {message}")


def test_criterion_01_table_one(quartic13_connected):
    assert len(quartic13_connected) == 10778
    report = filter_graphs(quartic13_connected, obstruction_set_o3(), full_counts=True, workers=2)
    contained = [s.contained for s in report.stats]
    cumulative = [s.cumulative_eliminated for s in report.stats]
    assert contained == [10672, 8919, 10662, 671]
    assert cumulative == [10672, 10767, 10776, 10777]
    assert len(report.survivors) == 1
    assert report.survivors[0].canonical == canonical_form(catalog.get_graph("M5057")).data
    _ok(1, "13-vertex table: containment 10672/8919/10662/671, survivor = M5057")


def test_criterion_02_table_two(config):
    ev = run_scenario("qutrit14_quartic", config)
    table = next(s for s in ev.steps if s.operation == "filter").result["filter_table"]
    cumulative = [row["cumulative_eliminated"] for row in table]
    assert cumulative == [87868, 88139, 88158, 88161, 88162]
    n11_row = next(row for row in table if row["pattern"] == "N11hat")
    assert n11_row["contained"] == 33
    assert table[-1]["remaining"] == 6
    survivors = next(s for s in ev.steps if s.operation == "survivor-identification")
    assert survivors.result["survivors"] == [
        "N11743", "N2359", "N36919", "N87949", "N87956", "N87957",
    ]
    span_dead = {
        s.parameters["graph"]
        for s in ev.steps
        if s.operation == "survivor-analysis" and not s.result["span_satisfied"]
    }
    assert span_dead == {"N2359", "N87949"}
    disc = next(s for s in ev.steps if s.operation == "disconnected-analysis").result
    assert disc["open"] == []
    _ok(2, "14-vertex table: cumulative 87868/88139/88158/88161/88162, six survivors, "
           "N11-obstruction containment 33")


def test_criterion_03_main_result(config):
    ev = run_scenario("qutrit13", config)
    assert ev.status == "verdict-reached"
    assert ev.verdict == "no 13-element three-qutrit GUPB exists"
    by_op = {s.operation: s for s in ev.steps}
    assert by_op["propagate"].result["universal_classes"] == [[2, 3], [8, 9, 10]]
    span = by_op["span-certificate"].result
    assert span["satisfied"] is False
    assert span["witness"]["assembled"] == [2, 3, 8, 9, 10]
    disc = by_op["disconnected-analysis"].result
    assert disc["eliminated_by_clique"] == 6
    assert disc["eliminated_by_obstruction"] == 1  # the D7b-companion case
    assert disc["eliminated_by_span"] == 1  # the D6 + D7a union
    assert disc["open"] == []
    _ok(3, "main result: no 13-element three-qutrit GUPB; full evidence chain")


def test_criterion_04_exact_fixture_verification():
    for name in catalog.fixture_names():
        fx = catalog.get_fixture(name)
        if fx.associated_graph is None:
            continue
        g = catalog.get_graph(fx.associated_graph)
        rep = Representation(fx.d, fx.vectors, "exact")
        report = verify_representation(g, rep)
        assert report.passed, name
        assert not report.violations
    fx = catalog.get_fixture("M5057_FOR3")
    rep = Representation(fx.d, fx.vectors, "exact")
    assert rank_of_subset(rep, [2, 3, 8, 9, 10]) == 2
    # the algebraic-coefficient fixture: float residual under 1e-9 and
    # exact minimal-polynomial residue equal to zero
    fx = catalog.get_fixture("N36919_FOR3")
    g = catalog.get_graph("N36919")
    float_report = verify_representation(g, Representation(fx.d, fx.vectors, "exact").to_float())
    assert float_report.passed and float_report.max_edge_residual < 1e-9
    from gupblab.exactnum import Exact, inner_product

    x = Exact.cubic_generator()
    assert (x * x * x - 3 * x * x + x - 2).is_zero()
    for u, v in g.edges():
        assert inner_product(fx.vectors[u], fx.vectors[v]).is_zero()
    _ok(4, "all recorded representations verify exactly; rank check = 2; "
           "cubic-irrational fixture residual < 1e-9 with exact residue 0")


def test_criterion_05_propagation_proofs():
    for name in ("C4", "H5", "K5", "A6", "L6", "D7b"):
        assert propagate_equalities(catalog.get_graph(name), 3).impossible, name
    for name in ("E6", "E6I", "W7II", "B6o", "C43"):
        assert propagate_equalities(catalog.get_graph(name), 4).impossible, name
    expected = {
        "diamond": [[1, 3]],
        "D6": [[0, 5], [1, 4], [2, 3]],
        "D7a": [[2, 3, 4]],
        "M5057": [[2, 3], [8, 9, 10]],
        "P3": [[6, 7]],
        "N2359": [[2, 3, 4], [9, 10, 11]],
        "N11743": [[1, 4], [2, 3], [7, 8], [9, 10], [11, 12, 13]],
        "N36919": [[2, 3], [6, 7], [8, 9]],
        "N87949": [[1, 2, 3], [8, 9, 10]],
        "N87956": [[0, 5], [1, 2], [3, 4], [6, 7], [8, 9], [10, 11], [12, 13]],
        "N87957": [[0, 5], [1, 2], [3, 4], [10, 11], [12, 13]],
    }
    for name, classes in expected.items():
        result = propagate_equalities(catalog.get_graph(name), 3)
        assert result.status == "ok", name
        assert sorted(sorted(c) for c in result.universal) == classes, name
    k44 = propagate_equalities(catalog.get_graph("K44"), 3)
    assert all(any(len(c) == 4 for c in b) for b in k44.branches)
    k33 = propagate_equalities(catalog.get_graph("K33"), 3)
    assert all(any(len(c) == 3 for c in b) for b in k33.branches)
    _ok(5, "propagation: six impossible at d=3, five at d=4, forced classes exact, "
           "complete-bipartite class guarantees hold in every branch")


def test_criterion_06_enumeration_counts(quartic13_connected, quartic14_connected, cubic14_connected):
    def count(n, r, connectivity="all"):
        return sum(1 for _ in enumerate_regular(EnumerationSpec(n, r, connectivity)))

    assert count(5, 4) == 1
    assert count(6, 4) == 1
    assert count(7, 4) == 2
    assert count(8, 4) == 6
    assert len(quartic13_connected) == 10778
    assert sum(1 for _ in enumerate_disconnected_regular(13, 4)) == 8
    # the connected 14-vertex quartic family has 88168 members: the elimination
    # table's own "# left" column pins total - 87868 = 300, so an often-quoted
    # 88186 is a digit transposition
    assert len(quartic14_connected) == 88168
    assert sum(1 for _ in enumerate_disconnected_regular(14, 4)) == 25
    assert len(cubic14_connected) == 509
    assert sum(1 for _ in enumerate_disconnected_regular(14, 3)) == 31
    assert count(12, 8) == 94
    assert count(11, 8) == 6
    assert count(10, 8) == 1
    assert count(9, 8) == 1
    hist13 = {}
    for g in quartic13_connected:
        hist13[girth(g)] = hist13.get(girth(g), 0) + 1
    assert hist13[4] == 31
    hist14 = {}
    for g in quartic14_connected:
        hist14[girth(g)] = hist14.get(girth(g), 0) + 1
    assert hist14[4] == 220
    hist_c = {}
    for g in cubic14_connected:
        hist_c[girth(g)] = hist_c.get(girth(g), 0) + 1
    assert hist_c[5] + hist_c[6] == 9
    assert hist_c[6] == 1
    _ok(6, "enumeration counts and girth histograms exact "
           "(14-vertex quartic connected = 88168)")


def test_criterion_07_cubic_scenario(config):
    ev = run_scenario("qutrit14_cubic", config)
    flt = next(s for s in ev.steps if s.operation == "filter").result
    assert flt["total_input"] == 509
    assert flt["survivors"] == 57
    split = next(s for s in ev.steps if s.operation == "survivor-girth-partition").result
    assert split == {"girth3": 42, "girth4": 6, "girth5_or_more": 9}
    _ok(7, "cubic family: 57 survivors split 42/6/9 by girth")


def test_criterion_08_ququart_scenario(config):
    ev = run_scenario("ququart24_octic_disconnected", config)
    assert ev.status == "verdict-reached"
    assert ev.verdict == "no disconnected-octic local-graph pair survives"
    type_d = next(s for s in ev.steps if s.operation == "type-D").result
    assert type_d["with_6clique"] == 6
    assert type_d["with_5clique"] == 75
    assert type_d["c43_survivors"] == ["L70", "L94"]
    assert type_d["E6I_embeds_in_L70"] is True
    assert type_d["L94_pair_span_satisfied"] is False
    type_c = next(s for s in ev.steps if s.operation == "type-C").result
    assert type_c["count"] == 64716
    _ok(8, "ququart disconnected-octic: 6+75 clique kills, survivors {L70,L94}, "
           "both eliminated; zero candidates remain")


def test_criterion_09_oracle_equivalence():
    hosts = [catalog.get_graph(n) for n in catalog.graph_names() if catalog.get_graph(n).n <= 8]
    patterns = [catalog.get_graph(n) for n in ("square", "diamond", "C4", "H5", "K5", "A6")]
    for host in hosts:
        for pat in patterns:
            if pat.n > host.n:
                continue
            fast = find_induced_embedding(pat, host)
            slow = brute_force_induced_embedding(pat, host)
            assert (fast is None) == (slow is None)
    rng = random.Random(123)
    for _ in range(200):
        host = random_graph(rng, rng.randint(4, 8), rng.uniform(0.2, 0.8))
        pattern = random_graph(rng, rng.randint(2, min(5, host.n)), rng.uniform(0.2, 0.8))
        fast = find_induced_embedding(pattern, host)
        slow = brute_force_induced_embedding(pattern, host)
        assert (fast is None) == (slow is None)
    # exact and floating ranks agree on integer fixtures
    for name in catalog.fixture_names():
        fx = catalog.get_fixture(name)
        if fx.associated_graph is None or name == "N36919_FOR3":
            continue
        rep = Representation(fx.d, fx.vectors, "exact")
        frep = rep.to_float()
        for size in (2, 3, min(5, len(fx.vectors))):
            subset = list(range(size))
            assert rank_of_subset(rep, subset) == rank_of_subset(frep, subset)
    proof = check_n11_infeasibility()
    assert proof.infeasible
    _ok(9, "embedding oracle agreement on catalog + 200 random graphs; "
           "exact/float ranks agree; symbolic 11-vertex certificate replayed")


def test_criterion_10_determinism(config):
    ev1 = run_scenario("qutrit13", config)
    ev2 = run_scenario("qutrit13", config)
    assert emit_report(ev1, "json").encode() == emit_report(ev2, "json").encode()
    ev3 = run_scenario("verify_paper_reps", config)
    ev4 = run_scenario("verify_paper_reps", config)
    assert emit_report(ev3, "json").encode() == emit_report(ev4, "json").encode()
    _ok(10, "same-seed scenario reports byte-identical")
