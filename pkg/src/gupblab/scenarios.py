"""End-to-end scenario orchestration and evidence reports.

Each scenario replays one complete analysis (bound arithmetic, family
enumeration or ingestion, obstruction filtering, representation
solving, spanning certificates) and records every step with its
parameters and result so the chain is auditable and re-runnable.
Counts that are far beyond enumeration reach are carried as recorded
constants and marked as such in the evidence.
"""
from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from . import catalog
from .bounds import (
    count_degree_sequences,
    decomposition_edge_feasible,
    gupb_lower_bound,
    required_log_regularity,
)
from .filtering import FilterReport, ObstructionPattern, ObstructionSet, filter_graphs, girth_histogram
from .gen import EnumerationSpec, enumerate_disconnected_regular, enumerate_regular, read_graph6, write_graph6
from .graphs import (
    Graph,
    canonical_form,
    clique_number,
    connected_components,
    girth,
    has_induced_subgraph,
)
from .propagation import propagate_equalities
from .representations import Representation, rank_of_subset, verify_representation
from .solver import solve_for
from .spanning import (
    cases_from_multipartite,
    cases_from_propagation,
    check_single_party_spanning,
    combine_cases,
)

SCENARIO_NAMES = (
    "qutrit13",
    "qutrit14_quartic",
    "qutrit14_cubic",
    "ququart24_octic_disconnected",
    "verify_paper_reps",
)

# family sizes beyond enumeration reach, recorded from the source material
RECORDED_COUNTS = {
    "septic_24_connected": 141515621596238755266884806115631,
    "septic_24_disconnected": 733460349818,
    "octic_15": 1470293676,
    "octic_14": 3459386,
}


@dataclass
class ScenarioConfig:
    seed: int = 0
    restarts: int = 30
    iters: int = 3000
    cache_dir: Optional[str] = None
    ingest_dir: Optional[str] = None
    numeric_sweep: bool = False  # solve every filter survivor numerically
    workers: int = 1

    def resolve_cache(self) -> Path:
        root = self.cache_dir or os.environ.get("GUPB_LAB_CACHE") or ".gupblab_cache"
        path = Path(root)
        path.mkdir(parents=True, exist_ok=True)
        return path


@dataclass
class Step:
    operation: str
    parameters: dict
    result: dict


@dataclass
class ScenarioEvidence:
    scenario: str
    seed: int
    inputs: dict = field(default_factory=dict)
    steps: list[Step] = field(default_factory=list)
    verdict: str = ""
    status: str = "error"  # verdict-reached | undecided | error
    open_questions: list[str] = field(default_factory=list)
    timing_seconds: float = 0.0

    def add(self, operation: str, parameters: dict, result: dict) -> None:
        self.steps.append(Step(operation, parameters, result))

    def to_dict(self, with_timing: bool = False) -> dict:
        out = {
            "scenario": self.scenario,
            "seed": self.seed,
            "inputs": self.inputs,
            "steps": [
                {"operation": s.operation, "parameters": s.parameters, "result": s.result}
                for s in self.steps
            ],
            "verdict": self.verdict,
            "status": self.status,
            "open_questions": self.open_questions,
        }
        if with_timing:
            out["timing_seconds"] = self.timing_seconds
        return out


def emit_report(evidence: ScenarioEvidence, fmt: str = "json", with_timing: bool = False) -> str:
    """Deterministic serialization; markdown renders filter tables."""
    if fmt == "json":
        return json.dumps(evidence.to_dict(with_timing), sort_keys=True, indent=2) + "\n"
    if fmt != "markdown":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"# Scenario {evidence.scenario}", ""]
    lines.append(f"- status: **{evidence.status}**")
    lines.append(f"- verdict: {evidence.verdict}")
    lines.append(f"- seed: {evidence.seed}")
    for key, value in sorted(evidence.inputs.items()):
        lines.append(f"- {key}: {value}")
    lines.append("")
    for step in evidence.steps:
        lines.append(f"## {step.operation}")
        if step.parameters:
            lines.append(f"parameters: `{json.dumps(step.parameters, sort_keys=True)}`")
        if "filter_table" in step.result:
            tbl = step.result["filter_table"]
            lines.append("")
            lines.append(
                "| forbidden induced subgraph | # graphs w/ induced subgraph | cumulative # eliminated | # left |"
            )
            lines.append("|---|---|---|---|")
            for row in tbl:
                contained = row["contained"] if row["contained"] is not None else "-"
                lines.append(
                    f"| {row['pattern']} | {contained} | {row['cumulative_eliminated']} | {row['remaining']} |"
                )
            rest = {k: v for k, v in step.result.items() if k != "filter_table"}
            if rest:
                lines.append("")
                lines.append(f"result: `{json.dumps(rest, sort_keys=True)}`")
        else:
            lines.append(f"result: `{json.dumps(step.result, sort_keys=True)}`")
        lines.append("")
    if evidence.open_questions:
        lines.append("## Undecided")
        for q in evidence.open_questions:
            lines.append(f"- {q}")
        lines.append("")
    return "\n".join(lines)


# -- family acquisition -------------------------------------------------


def _family_path(base: Path, n: int, r: int, connectivity: str) -> Path:
    return base / f"reg_n{n}_r{r}_{connectivity}.g6"


def load_family(n: int, r: int, connectivity: str, config: ScenarioConfig) -> tuple[list[Graph], str]:
    """Regular-graph family from ingest dir, cache, or fresh generation."""
    if config.ingest_dir:
        path = _family_path(Path(config.ingest_dir), n, r, connectivity)
        if not path.exists():
            raise FileNotFoundError(f"ingestion file missing: {path}")
        return list(read_graph6(path)), f"ingested:{path.name}"
    cache = config.resolve_cache()
    path = _family_path(cache, n, r, connectivity)
    if path.exists():
        return list(read_graph6(path)), f"cache:{path.name}"
    if connectivity == "disconnected":
        graphs = list(enumerate_disconnected_regular(n, r))
    else:
        graphs = list(enumerate_regular(EnumerationSpec(n, r, connectivity)))
    write_graph6(path, graphs)
    return graphs, "generated"


def obstruction_set_o3() -> ObstructionSet:
    return ObstructionSet(
        3,
        [
            ObstructionPattern("A6", catalog.get_graph("A6"), "six-vertex obstruction"),
            ObstructionPattern("K5", catalog.get_graph("K5"), "kite obstruction"),
            ObstructionPattern("H5", catalog.get_graph("H5"), "house obstruction"),
            ObstructionPattern("C4", catalog.get_graph("C4"), "4-clique"),
        ],
    )


def obstruction_set_o3_hat() -> ObstructionSet:
    base = obstruction_set_o3()
    base.patterns.append(
        ObstructionPattern(
            "N11hat", catalog.get_graph("N11hat"), "11-vertex obstruction (dedicated certificate)"
        )
    )
    return base


def obstruction_set_cubic() -> ObstructionSet:
    base = obstruction_set_o3()
    return ObstructionSet(3, [p for p in base.patterns if p.name != "C4"])


def _filter_step(ev: ScenarioEvidence, graphs: list[Graph], obs: ObstructionSet,
                 label: str, workers: int) -> FilterReport:
    report = filter_graphs(graphs, obs, full_counts=True, workers=workers)
    ev.add(
        "filter",
        {"family": label, "obstructions": obs.names()},
        {
            "total_input": report.total_input,
            "filter_table": [
                {
                    "pattern": s.pattern,
                    "contained": s.contained,
                    "cumulative_eliminated": s.cumulative_eliminated,
                    "remaining": s.remaining,
                }
                for s in report.stats
            ],
            "survivors": len(report.survivors),
        },
    )
    return report


def _classes(sets: Iterable[frozenset]) -> list[list[int]]:
    return sorted(sorted(c) for c in sets)


def _eliminate_disconnected(ev: ScenarioEvidence, graphs: list[Graph], d: int,
                            k: int, parties: int) -> dict:
    """Per-graph elimination of disconnected candidates: clique-carrying
    component, obstruction containment, or spanning certificate."""
    h5 = catalog.get_graph("H5")
    outcomes = {"clique": 0, "obstruction": 0, "span": 0, "open": []}
    details = []
    for idx, g in enumerate(graphs):
        comp_sizes = sorted(len(c) for c in connected_components(g))
        if clique_number(g) > d:
            outcomes["clique"] += 1
            details.append({"index": idx, "components": comp_sizes, "eliminated": "clique-bound"})
            continue
        if has_induced_subgraph(h5, g):
            outcomes["obstruction"] += 1
            details.append({"index": idx, "components": comp_sizes, "eliminated": "H5-obstruction"})
            continue
        prop = propagate_equalities(g, d)
        if prop.impossible:
            outcomes["obstruction"] += 1
            details.append({"index": idx, "components": comp_sizes, "eliminated": "propagation"})
            continue
        span = check_single_party_spanning(cases_from_propagation(g, d), k, d, parties)
        if not span.satisfied:
            outcomes["span"] += 1
            details.append(
                {"index": idx, "components": comp_sizes, "eliminated": "span-condition",
                 "witness": span.witness}
            )
        else:
            outcomes["open"].append({"index": idx, "components": comp_sizes})
            details.append({"index": idx, "components": comp_sizes, "eliminated": None})
    ev.add(
        "disconnected-analysis",
        {"count": len(graphs), "k": k, "d": d, "parties": parties},
        {"eliminated_by_clique": outcomes["clique"],
         "eliminated_by_obstruction": outcomes["obstruction"],
         "eliminated_by_span": outcomes["span"],
         "open": outcomes["open"],
         "graphs": details},
    )
    return outcomes


# -- scenarios -----------------------------------------------------------


def run_qutrit13(config: ScenarioConfig) -> ScenarioEvidence:
    ev = ScenarioEvidence("qutrit13", config.seed)
    bound = gupb_lower_bound(3, 3)
    ev.add(
        "lower-bound",
        {"d": 3, "parties": 3},
        {"rational": str(bound.rational_bound), "minimal_size": bound.minimal_size,
         "log_regularity": bound.required_log_regularity},
    )
    graphs, origin = load_family(13, 4, "connected", config)
    ev.inputs["connected_family"] = {"count": len(graphs), "source": origin}
    report = _filter_step(ev, graphs, obstruction_set_o3(), "quartic n=13 connected", config.workers)

    m5057 = catalog.get_graph("M5057")
    survivor_match = (
        len(report.survivors) == 1
        and report.survivors[0].canonical == canonical_form(m5057).data
    )
    ev.add(
        "survivor-identification",
        {"expected": "M5057"},
        {"survivors": len(report.survivors), "isomorphic_to_M5057": survivor_match},
    )

    prop = propagate_equalities(m5057, 3)
    ev.add(
        "propagate",
        {"graph": "M5057", "d": 3},
        {"status": prop.status, "universal_classes": _classes(prop.universal)},
    )
    verdict = solve_for(
        m5057, 3, restarts=config.restarts, iters=config.iters, seed=config.seed
    )
    ev.add(
        "solve",
        {"graph": "M5057", "d": 3, "restarts": config.restarts, "iters": config.iters},
        {"outcome": verdict.outcome, "restarts_used": verdict.restarts_used},
    )
    fx = catalog.get_fixture("M5057_FOR3")
    rep = Representation(fx.d, fx.vectors, "exact")
    ev.add(
        "verify-fixture",
        {"fixture": "M5057_FOR3"},
        {"passed": verify_representation(m5057, rep).passed,
         "rank_v3_v4_v9_v10_v11": rank_of_subset(rep, [2, 3, 8, 9, 10])},
    )
    span = check_single_party_spanning(cases_from_propagation(m5057, 3), 13, 3, 3)
    ev.add(
        "span-certificate",
        {"graph": "M5057", "k": 13, "d": 3, "parties": 3},
        {"satisfied": span.satisfied, "witness": span.witness},
    )

    disc, origin_d = load_family(13, 4, "disconnected", config)
    ev.inputs["disconnected_family"] = {"count": len(disc), "source": origin_d}
    outcomes = _eliminate_disconnected(ev, disc, 3, 13, 3)

    closed = (
        survivor_match
        and not span.satisfied
        and not outcomes["open"]
        and len(prop.universal) == 2
    )
    if closed:
        ev.verdict = "no 13-element three-qutrit GUPB exists"
        ev.status = "verdict-reached"
    else:
        ev.verdict = "analysis incomplete"
        ev.status = "undecided"
    return ev


_SURVIVOR14 = ("N2359", "N11743", "N36919", "N80015", "N87949", "N87956", "N87957")


def run_qutrit14_quartic(config: ScenarioConfig) -> ScenarioEvidence:
    ev = ScenarioEvidence("qutrit14_quartic", config.seed)
    graphs, origin = load_family(14, 4, "connected", config)
    ev.inputs["connected_family"] = {"count": len(graphs), "source": origin}
    hist = girth_histogram(graphs)
    ev.add("girth-histogram", {"family": "quartic n=14 connected"},
           {"histogram": {str(k): v for k, v in sorted(hist.items())}})
    report = _filter_step(ev, graphs, obstruction_set_o3_hat(), "quartic n=14 connected", config.workers)

    named = {canonical_form(catalog.get_graph(nm)).data: nm for nm in _SURVIVOR14}
    survivor_names = sorted(named.get(s.canonical, "?") for s in report.survivors)
    ev.add("survivor-identification", {"expected": "six named survivors"},
           {"survivors": survivor_names})

    decided = []
    open_graphs = []
    for name in survivor_names:
        if name == "?":
            continue
        g = catalog.get_graph(name)
        prop = propagate_equalities(g, 3)
        fx = catalog.get_fixture(f"{name}_FOR3")
        rep = Representation(fx.d, fx.vectors, "exact")
        ok = verify_representation(g, rep).passed
        span = check_single_party_spanning(cases_from_propagation(g, 3), 14, 3, 3)
        ev.add(
            "survivor-analysis",
            {"graph": name},
            {"fixture_passes": ok,
             "universal_classes": _classes(prop.universal),
             "span_satisfied": span.satisfied},
        )
        if not span.satisfied:
            decided.append(name)
        else:
            open_graphs.append(name)

    disc, origin_d = load_family(14, 4, "disconnected", config)
    ev.inputs["disconnected_family"] = {"count": len(disc), "source": origin_d}
    outcomes = _eliminate_disconnected(ev, disc, 3, 14, 3)

    ev.open_questions = [
        f"{name}: admits a FOR(3); no spanning argument decides it" for name in open_graphs
    ]
    ev.verdict = (
        f"connected candidates {', '.join(decided)} eliminated by the spanning condition; "
        f"{', '.join(open_graphs)} remain undecided; disconnected candidates all eliminated"
    )
    ev.status = "undecided" if open_graphs else "verdict-reached"
    return ev


def run_qutrit14_cubic(config: ScenarioConfig) -> ScenarioEvidence:
    ev = ScenarioEvidence("qutrit14_cubic", config.seed)
    feas_444 = decomposition_edge_feasible(14, [4, 4, 4])
    feas_445 = decomposition_edge_feasible(14, [4, 4, 5])
    feas_355 = decomposition_edge_feasible(14, [3, 5, 5])
    ev.add(
        "edge-feasibility",
        {"n": 14},
        {"[4,4,4]": feas_444[0], "[4,4,5]": feas_445[0], "[3,5,5]": feas_355[0],
         "trace_444": feas_444[1]},
    )
    spec = required_log_regularity(3, 3, 14)
    ev.add(
        "degree-spec",
        {"d": 3, "parties": 3, "k": 14},
        {"degrees": sorted(spec.degrees), "recorded_range": spec.paper_sourced,
         "degree_sequences": count_degree_sequences(14, spec.degrees)},
    )

    graphs, origin = load_family(14, 3, "connected", config)
    ev.inputs["connected_family"] = {"count": len(graphs), "source": origin}
    hist = girth_histogram(graphs)
    ev.add("girth-histogram", {"family": "cubic n=14 connected"},
           {"histogram": {str(k): v for k, v in sorted(hist.items())}})

    report = _filter_step(ev, graphs, obstruction_set_cubic(), "cubic n=14 connected", config.workers)
    by_girth: dict[int, int] = {}
    for s in report.survivors:
        by_girth[girth(s.graph)] = by_girth.get(girth(s.graph), 0) + 1
    ev.add(
        "survivor-girth-partition",
        {},
        {"girth3": by_girth.get(3, 0), "girth4": by_girth.get(4, 0),
         "girth5_or_more": sum(v for k, v in by_girth.items() if k >= 5)},
    )

    for name in ("cubic254", "cubic411", "cubic501"):
        fx = catalog.get_fixture(f"{name}_FOR3")
        rep = Representation(fx.d, fx.vectors, "exact")
        passed = verify_representation(catalog.get_graph(name), rep).passed
        span = check_single_party_spanning(rep, 14, 3, 3)
        ev.add("verify-fixture", {"fixture": f"{name}_FOR3"},
               {"passed": passed, "span_satisfied": span.satisfied})
    fx = catalog.get_fixture("heawood_FOR4")
    rep = Representation(fx.d, fx.vectors, "exact")
    ev.add("verify-fixture", {"fixture": "heawood_FOR4"},
           {"passed": verify_representation(catalog.get_graph("heawood"), rep).passed})

    solved = unknown = 0
    flagged = []
    if config.numeric_sweep:
        heawood_cf = canonical_form(catalog.get_graph("heawood")).data
        for s in report.survivors:
            if s.canonical == heawood_cf:
                continue  # real minimal dimension is 4; complex case open
            v = solve_for(s.graph, 3, restarts=config.restarts, iters=config.iters,
                          seed=config.seed)
            if v.found:
                solved += 1
            else:
                unknown += 1
                flagged.append(s.index)
        ev.add("numeric-sweep", {"restarts": config.restarts, "iters": config.iters},
               {"found": solved, "unknown": unknown, "unknown_indices": flagged})
    heawood_probe = solve_for(catalog.get_graph("heawood"), 3,
                              restarts=min(config.restarts, 5), iters=config.iters,
                              seed=config.seed)
    flag = heawood_probe.found  # a find here contradicts the expected open status
    ev.add("heawood-complex-probe", {"d": 3},
           {"outcome": heawood_probe.outcome, "needs_review": flag})

    disc, origin_d = load_family(14, 3, "disconnected", config)
    ev.inputs["disconnected_family"] = {"count": len(disc), "source": origin_d}

    k5 = catalog.get_graph("K5")
    l6 = catalog.get_graph("L6")
    h5 = catalog.get_graph("H5")
    outcomes = {"clique": 0, "obstruction": 0, "boundary": []}
    for idx, g in enumerate(disc):
        comp_sizes = sorted(len(c) for c in connected_components(g))
        if clique_number(g) > 3:
            outcomes["clique"] += 1
            continue
        if any(has_induced_subgraph(p, g) for p in (h5, k5, l6)):
            outcomes["obstruction"] += 1
            continue
        span = check_single_party_spanning(cases_from_propagation(g, 3), 14, 3, 3)
        outcomes["boundary"].append(
            {"index": idx, "components": comp_sizes, "span_satisfied": span.satisfied}
        )
    ev.add(
        "disconnected-analysis",
        {"count": len(disc)},
        {"eliminated_by_clique": outcomes["clique"],
         "eliminated_by_obstruction": outcomes["obstruction"],
         "remaining": outcomes["boundary"]},
    )

    ev.open_questions = [
        "heawood graph: existence of a complex FOR(3) is open; real case needs d=4",
        "the remaining disconnected 6+8 candidate passes the single-party spanning "
        "certificate at k=14 (largest deficient tuple has exactly k - 9 elements)",
    ]
    ev.verdict = (
        f"{len(report.survivors)} connected cubic candidates admit no small obstruction; "
        "explicit representations verified for the published examples"
    )
    ev.status = "undecided"
    return ev


def run_ququart24(config: ScenarioConfig) -> ScenarioEvidence:
    ev = ScenarioEvidence("ququart24_octic_disconnected", config.seed)
    bound = gupb_lower_bound(4, 3)
    spec = required_log_regularity(4, 3, 24)
    ev.add(
        "lower-bound",
        {"d": 4, "parties": 3},
        {"rational": str(bound.rational_bound), "minimal_size": bound.minimal_size,
         "degrees": sorted(spec.degrees),
         "degree_sequences": count_degree_sequences(24, spec.degrees)},
    )
    ev.add(
        "recorded-counts",
        {},
        {"septic_24_connected": str(RECORDED_COUNTS["septic_24_connected"]),
         "septic_24_disconnected": str(RECORDED_COUNTS["septic_24_disconnected"]),
         "octic_15": RECORDED_COUNTS["octic_15"], "octic_14": RECORDED_COUNTS["octic_14"],
         "note": "recorded constants; not recomputed here"},
    )

    # type A: 9+15 --- the unique octic graph on 9 vertices is the 9-clique
    octic9 = list(enumerate_regular(EnumerationSpec(9, 8, "all")))
    a_total = len(octic9) * RECORDED_COUNTS["octic_15"]
    ev.add(
        "type-A",
        {"split": "9+15"},
        {"count": a_total, "octic9": len(octic9),
         "clique_number": clique_number(octic9[0]),
         "eliminated": clique_number(octic9[0]) > 4},
    )

    # type B: 10+14 --- unique octic graph on 10 vertices carries a 5-clique
    octic10 = list(enumerate_regular(EnumerationSpec(10, 8, "all")))
    b_total = len(octic10) * RECORDED_COUNTS["octic_14"]
    ev.add(
        "type-B",
        {"split": "10+14"},
        {"count": b_total, "octic10": len(octic10),
         "clique_number": clique_number(octic10[0]),
         "eliminated": clique_number(octic10[0]) > 4},
    )

    # type C: 11+13
    octic11_family = list(enumerate_regular(EnumerationSpec(11, 8, "all")))
    octic13_count = sum(1 for _ in enumerate_regular(EnumerationSpec(13, 8, "all")))
    c_total = len(octic11_family) * octic13_count
    c43 = catalog.get_graph("C43")
    with_5clique = [g for g in octic11_family if clique_number(g) > 4]
    clique_free = [g for g in octic11_family if clique_number(g) <= 4]
    c_free_contains_c43 = [has_induced_subgraph(c43, g) for g in clique_free]
    ev.add(
        "type-C",
        {"split": "11+13"},
        {"count": c_total, "octic11": len(octic11_family), "octic13": octic13_count,
         "with_5clique": len(with_5clique),
         "clique_free": len(clique_free),
         "clique_free_contains_c43": all(c_free_contains_c43),
         "eliminated": bool(with_5clique) and all(c_free_contains_c43)},
    )

    # type D: 12+12
    octic12 = list(enumerate_regular(EnumerationSpec(12, 8, "all")))
    n12 = len(octic12)
    d_total = n12 * (n12 + 1) // 2
    with_c6 = [g for g in octic12 if clique_number(g) >= 6]
    with_c5 = [g for g in octic12 if clique_number(g) == 5]
    small = [g for g in octic12 if clique_number(g) <= 4]
    pairs_after_cliques = len(small) * (len(small) + 1) // 2
    survivors = [g for g in small if not has_induced_subgraph(c43, g)]
    named = {canonical_form(catalog.get_graph(nm)).data: nm for nm in ("L70", "L94")}
    survivor_names = sorted(named.get(canonical_form(g).data, "?") for g in survivors)
    e6i = catalog.get_graph("E6I")
    l70 = catalog.get_graph("L70")
    l94 = catalog.get_graph("L94")
    l70_killed = has_induced_subgraph(e6i, l70)
    fx = catalog.get_fixture("L94_FOR4")
    l94_rep_ok = verify_representation(
        l94, Representation(fx.d, fx.vectors, "exact")
    ).passed
    pair_cases = combine_cases(
        [cases_from_multipartite(l94, 4, offset=0), cases_from_multipartite(l94, 4, offset=12)]
    )
    l94_span = check_single_party_spanning(pair_cases, 24, 4, 3)
    ev.add(
        "type-D",
        {"split": "12+12"},
        {"count": d_total, "octic12": n12,
         "with_6clique": len(with_c6), "with_5clique": len(with_c5),
         "clique_free": len(small), "pairs_after_cliques": pairs_after_cliques,
         "c43_survivors": survivor_names,
         "E6I_embeds_in_L70": l70_killed,
         "L94_FOR4_passes": l94_rep_ok,
         "L94_pair_span_satisfied": l94_span.satisfied,
         "L94_span_witness": l94_span.witness},
    )

    all_dead = (
        clique_number(octic9[0]) > 4
        and clique_number(octic10[0]) > 4
        and all(c_free_contains_c43)
        and survivor_names == ["L70", "L94"]
        and l70_killed
        and not l94_span.satisfied
    )
    ev.verdict = (
        "no disconnected-octic local-graph pair survives"
        if all_dead
        else "analysis incomplete"
    )
    ev.status = "verdict-reached" if all_dead else "undecided"
    return ev


def run_verify_paper_reps(config: ScenarioConfig) -> ScenarioEvidence:
    ev = ScenarioEvidence("verify_paper_reps", config.seed)
    all_ok = True
    for name in catalog.fixture_names():
        fx = catalog.get_fixture(name)
        if fx.associated_graph is None:
            continue
        g = catalog.get_graph(fx.associated_graph)
        rep = Representation(fx.d, fx.vectors, "exact")
        report = verify_representation(g, rep)
        frep = rep.to_float()
        freport = verify_representation(g, frep)
        all_ok = all_ok and report.passed and freport.passed
        ev.add(
            "verify-fixture",
            {"fixture": name, "graph": fx.associated_graph},
            {"exact_passed": report.passed,
             "float_passed": freport.passed,
             "float_max_edge_residual": freport.max_edge_residual},
        )
    fx = catalog.get_fixture("M5057_FOR3")
    rep = Representation(fx.d, fx.vectors, "exact")
    rank = rank_of_subset(rep, [2, 3, 8, 9, 10])
    ev.add("rank-check", {"fixture": "M5057_FOR3", "subset": [2, 3, 8, 9, 10]},
           {"rank": rank})
    all_ok = all_ok and rank == 2

    upb = catalog.get_fixture("upb19")
    from .exactnum import inner_product
    from .graphs import complete_graph
    from .representations import orthogonality_graph

    orth = all(
        inner_product(upb.vectors[i], upb.vectors[j]).is_zero()
        for i in range(19)
        for j in range(i + 1, 19)
    )
    logs = [orthogonality_graph(upb.party_vectors[p], "exact") for p in range(3)]
    union = Graph(19, [logs[0].rows[v] | logs[1].rows[v] | logs[2].rows[v] for v in range(19)])
    union_complete = union == complete_graph(19)
    ev.add("upb-checks", {"fixture": "upb19"},
           {"pairwise_orthogonal": orth, "log_union_complete": union_complete})
    all_ok = all_ok and orth and union_complete

    ev.verdict = "all recorded representations verified exactly" if all_ok else "verification failures"
    ev.status = "verdict-reached" if all_ok else "error"
    return ev


_RUNNERS = {
    "qutrit13": run_qutrit13,
    "qutrit14_quartic": run_qutrit14_quartic,
    "qutrit14_cubic": run_qutrit14_cubic,
    "ququart24_octic_disconnected": run_ququart24,
    "verify_paper_reps": run_verify_paper_reps,
}


def run_scenario(name: str, config: Optional[ScenarioConfig] = None) -> ScenarioEvidence:
    if name not in _RUNNERS:
        raise ValueError(f"unknown scenario {name!r}; choose from {SCENARIO_NAMES}")
    config = config or ScenarioConfig()
    start = time.time()
    ev = _RUNNERS[name](config)
    ev.timing_seconds = time.time() - start
    return ev
