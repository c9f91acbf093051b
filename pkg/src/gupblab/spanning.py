"""Spanning (saturation) certificates for candidate local graphs.

A k-element basis over N parties with local dimension d requires every
(k - d^(N-1) + 1)-tuple of one party's vectors to span all of C^d.
Violations are certified either directly on an explicit representation
or from rank-bounded vertex groups (forced-equal classes, parts of
complete multipartite components, common neighbourhoods) that hold in
every representation of a candidate graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

import numpy as np

from .graphs import Graph, _bits, complete_multipartite_parts
from .linalg import float_rank
from .propagation import propagate_equalities
from .representations import Representation, rank_of_subset


@dataclass(frozen=True)
class RankFact:
    """Vertices whose vectors span at most `bound` dimensions."""

    vertices: frozenset
    bound: int
    origin: str = ""


@dataclass
class SpanCase:
    """One possible world (branch choice / dimension allocation)."""

    facts: list[RankFact]
    label: str = ""


@dataclass
class SpanReport:
    satisfied: bool
    k: int
    d: int
    parties: int
    tuple_size: int
    witness: Optional[dict] = None
    detail: str = ""


def _tuple_size(k: int, d: int, parties: int) -> int:
    t = k - d ** (parties - 1) + 1
    if t < 1:
        raise ValueError(f"tuple size {t} < 1 for k={k}, d={d}, N={parties}")
    return t


def check_single_party_spanning(
    source: Union[Representation, list[SpanCase]],
    k: int,
    d: int,
    parties: int,
) -> SpanReport:
    """Fail iff some (k - d^(N-1) + 1)-tuple has rank below d.

    Representation mode checks every tuple directly.  Certificate mode
    receives a list of cases; the condition is violated only when every
    case assembles a rank-deficient tuple, since each case must cover
    all representations before the graph can be discarded.
    """
    t = _tuple_size(k, d, parties)
    if isinstance(source, Representation):
        if source.k != k:
            raise ValueError(f"representation has {source.k} vectors, expected {k}")
        for subset in combinations(range(k), t):
            r = rank_of_subset(source, subset)
            if r < d:
                return SpanReport(
                    False, k, d, parties, t,
                    witness={"subset": list(subset), "rank_bound": r},
                    detail=f"tuple of size {t} with rank {r} < {d}",
                )
        return SpanReport(True, k, d, parties, t)

    witnesses = []
    for case in source:
        w = _violating_assembly(case, t, d, k)
        if w is None:
            return SpanReport(
                True, k, d, parties, t,
                detail=f"case {case.label or '?'} admits no rank-deficient {t}-tuple",
            )
        witnesses.append((case.label, w))
    label, w = witnesses[0]
    return SpanReport(
        False, k, d, parties, t,
        witness={"case": label, **w},
        detail=f"every case ({len(witnesses)}) assembles a {t}-tuple of rank < {d}",
    )


def _violating_assembly(case: SpanCase, t: int, d: int, k: int) -> Optional[dict]:
    # choose disjoint facts maximising surplus = min(total, t) - sum(bounds);
    # padding with arbitrary extra vertices costs one rank per vertex, so a
    # violating tuple exists iff max surplus >= t - d + 1
    facts = [f for f in case.facts if len(f.vertices) > f.bound]
    need = t - d + 1
    best: Optional[tuple[int, list[RankFact]]] = None

    def rec(idx: int, chosen: list[RankFact], used: frozenset, size: int, bound: int):
        nonlocal best
        surplus = min(size, t) - bound
        if size <= t and (best is None or surplus > best[0]):
            best = (surplus, list(chosen))
        if idx == len(facts):
            return
        for nxt in range(idx, len(facts)):
            f = facts[nxt]
            if used & f.vertices:
                continue
            if size >= t:
                continue
            chosen.append(f)
            rec(nxt + 1, chosen, used | f.vertices, size + len(f.vertices), bound + f.bound)
            chosen.pop()

    rec(0, [], frozenset(), 0, 0)
    if best is None or best[0] < need:
        return None
    surplus, chosen = best
    verts = sorted(v for f in chosen for v in f.vertices)
    return {
        "groups": [
            {"vertices": sorted(f.vertices), "rank_bound": f.bound, "origin": f.origin}
            for f in chosen
        ],
        "assembled": verts[:t],
        "rank_bound": t - surplus,
    }


def cases_from_propagation(g: Graph, d: int) -> list[SpanCase]:
    """One case per surviving propagation branch; classes give rank-1 facts."""
    prop = propagate_equalities(g, d)
    if prop.impossible:
        raise ValueError("graph admits no FOR(d); spanning question is moot")
    if prop.status == "overflow":
        raise ValueError("propagation branch overflow; no certificate available")
    cases = []
    for i, branch in enumerate(prop.branches):
        facts = [RankFact(cls, 1, "forced-equal class") for cls in branch]
        cases.append(SpanCase(facts, f"branch {i}"))
    if not cases:
        cases.append(SpanCase([], "no forced structure"))
    return cases


def multipartite_part_sets(g: Graph) -> Optional[list[frozenset]]:
    """Vertex sets of the parts when g is complete multipartite."""
    if complete_multipartite_parts(g) is None:
        return None
    full = (1 << g.n) - 1
    seen = 0
    parts = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        part = full & ~g.rows[v]
        seen |= part
        parts.append(frozenset(_bits(part)))
    return parts


def cases_from_multipartite(g: Graph, d: int, offset: int = 0) -> list[SpanCase]:
    """One case per dimension allocation a_k >= 1 with sum a_k <= d."""
    parts = multipartite_part_sets(g)
    if parts is None:
        raise ValueError("graph is not complete multipartite")
    m = len(parts)
    if m > d:
        raise ValueError("more parts than dimensions; no OR(d) at all")
    cases = []

    def rec(idx: int, remaining: int, alloc: list[int]):
        if idx == m:
            facts = [
                RankFact(frozenset(v + offset for v in part), a, f"part dim {a}")
                for part, a in zip(parts, alloc)
            ]
            cases.append(SpanCase(facts, f"allocation {tuple(alloc)}"))
            return
        for a in range(1, remaining - (m - idx - 1) + 1):
            rec(idx + 1, remaining - a, alloc + [a])

    rec(0, d, [])
    return cases


def combine_cases(per_component: Sequence[list[SpanCase]]) -> list[SpanCase]:
    """Cross product of per-component cases, facts unioned."""
    result = [SpanCase([], "")]
    for cases in per_component:
        new = []
        for base in result:
            for c in cases:
                label = f"{base.label} x {c.label}".strip(" x")
                new.append(SpanCase(base.facts + c.facts, label))
        result = new
    return result


def check_pair_spanning(
    rep_a: Representation,
    rep_b: Representation,
    d: int,
    tuple_size: Optional[int] = None,
) -> SpanReport:
    """Every d^2-tuple of pairwise tensor products must span C^(d^2)."""
    if rep_a.k != rep_b.k:
        raise ValueError("representations must have the same number of vectors")
    if rep_a.d != d or rep_b.d != d:
        raise ValueError("dimension mismatch")
    k = rep_a.k
    t = tuple_size if tuple_size is not None else d * d
    fa = rep_a.to_float().vectors
    fb = rep_b.to_float().vectors
    tensors = np.array([np.kron(fa[i], fb[i]) for i in range(k)])
    for subset in combinations(range(k), t):
        r = float_rank(tensors[list(subset), :])
        if r < d * d:
            return SpanReport(
                False, k, d, 2, t,
                witness={"subset": list(subset), "rank": r},
                detail=f"tensor tuple of rank {r} < {d * d}",
            )
    return SpanReport(True, k, d, 2, t)
