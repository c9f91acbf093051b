"""Forbidden-induced-subgraph filtering of graph families.

A graph survives iff no pattern of the obstruction set embeds as an
induced subgraph.  The report carries order-independent containment
counts per pattern together with cumulative eliminations in the order
the caller supplied, which is how the reference tables are laid out.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import Graph, canonical_form, girth, has_induced_subgraph


@dataclass(frozen=True)
class ObstructionPattern:
    name: str
    graph: Graph
    provenance: str = ""


@dataclass
class ObstructionSet:
    """Ordered forbidden induced subgraphs certified impossible in
    dimension d."""

    dimension: int
    patterns: list[ObstructionPattern]

    def __post_init__(self):
        if not self.patterns:
            raise ValueError("obstruction set must not be empty")

    def names(self) -> list[str]:
        return [p.name for p in self.patterns]


@dataclass
class PatternStat:
    pattern: str
    contained: Optional[int]
    cumulative_eliminated: int
    remaining: int


@dataclass
class Survivor:
    index: int
    graph: Graph
    canonical: bytes


@dataclass
class FilterReport:
    total_input: int
    stats: list[PatternStat]
    survivors: list[Survivor]
    full_counts: bool

    def to_dict(self) -> dict:
        return {
            "total_input": self.total_input,
            "full_counts": self.full_counts,
            "patterns": [
                {
                    "pattern": s.pattern,
                    "contained": s.contained,
                    "cumulative_eliminated": s.cumulative_eliminated,
                    "remaining": s.remaining,
                }
                for s in self.stats
            ],
            "survivors": [
                {"index": s.index, "canonical": s.canonical.hex()} for s in self.survivors
            ],
        }

    def to_markdown(self) -> str:
        lines = [
            "| forbidden induced subgraph | # graphs w/ induced subgraph | cumulative # eliminated | # left |",
            "|---|---|---|---|",
        ]
        for s in self.stats:
            contained = "-" if s.contained is None else str(s.contained)
            lines.append(
                f"| {s.pattern} | {contained} | {s.cumulative_eliminated} | {s.remaining} |"
            )
        return "\n".join(lines)


def _hit_mask_full(g: Graph, patterns: Sequence[ObstructionPattern]) -> int:
    mask = 0
    for i, pat in enumerate(patterns):
        if has_induced_subgraph(pat.graph, g):
            mask |= 1 << i
    return mask


def _first_hit_cheap(g: Graph, order: Sequence[int], patterns: Sequence[ObstructionPattern]) -> int:
    for i in order:
        if has_induced_subgraph(patterns[i].graph, g):
            return i
    return -1


def _full_worker(args):
    graphs, patterns = args
    return [_hit_mask_full(g, patterns) for g in graphs]


def filter_graphs(
    graphs: Iterable[Graph],
    obs: ObstructionSet,
    full_counts: bool = True,
    workers: int = 1,
) -> FilterReport:
    """Apply the obstruction set to a graph family.

    full_counts tests every pattern against every graph so that the
    per-pattern containment column is exact; the fast mode tests
    smallest patterns first and stops at the first hit, which settles
    the survivors but leaves the containment column unset.
    """
    items = list(graphs)
    patterns = obs.patterns
    n_pat = len(patterns)
    hit_masks: list[int] = []
    if full_counts:
        if workers > 1 and len(items) > 1000:
            chunk = (len(items) + workers - 1) // workers
            jobs = [(items[i : i + chunk], patterns) for i in range(0, len(items), chunk)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_full_worker, jobs):
                    hit_masks.extend(part)
        else:
            hit_masks = [_hit_mask_full(g, patterns) for g in items]
    else:
        cheap_order = sorted(range(n_pat), key=lambda i: patterns[i].graph.n)
        for g in items:
            first = _first_hit_cheap(g, cheap_order, patterns)
            hit_masks.append(0 if first < 0 else 1 << first)

    survivors = [
        Survivor(i, g, canonical_form(g).data)
        for i, (g, mask) in enumerate(zip(items, hit_masks))
        if mask == 0
    ]
    survivors.sort(key=lambda s: (s.canonical, s.index))

    stats = []
    for i in range(n_pat):
        contained = sum(1 for m in hit_masks if m >> i & 1) if full_counts else None
        prefix = (1 << (i + 1)) - 1
        cumulative = sum(1 for m in hit_masks if m & prefix)
        stats.append(
            PatternStat(patterns[i].name, contained, cumulative, len(items) - cumulative)
        )
    return FilterReport(len(items), stats, survivors, full_counts)


def count_containing(graphs: Iterable[Graph], pattern: Graph) -> int:
    """Number of graphs with an induced copy of the pattern."""
    return sum(1 for g in graphs if has_induced_subgraph(pattern, g))


def girth_histogram(graphs: Iterable[Graph]) -> dict[Optional[int], int]:
    """Counts bucketed by girth; acyclic graphs land under None."""
    hist: dict[Optional[int], int] = {}
    for g in graphs:
        key = girth(g)
        hist[key] = hist.get(key, 0) + 1
    return hist
