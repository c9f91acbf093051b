"""Sound equality propagation for faithful orthogonal representations.

Rules, each certifying a statement true in every FOR(d) of the graph:

  R1  a clique larger than d admits no OR(d) at all;
  R2  two non-adjacent vertices adjacent to every vertex of a common
      (d-1)-clique get parallel vectors (the clique spans a (d-1)-dim
      subspace they are both orthogonal to);
  R3  an induced 4-cycle whose vertices are all adjacent to a common
      (d-3)-clique forces one of its two diagonal pairs parallel (the
      four vectors live in a 3-dim space, where a square has a
      repeated diagonal);
  R4  parallel vectors at vertices with different neighbourhoods, or at
      adjacent vertices, contradict faithfulness;
  R5  a complete multipartite graph with more than d parts is
      impossible (parts span mutually orthogonal subspaces).

R4 makes pair "mergeability" a static property, so impossibility is
decided at the root fixpoint and the branch DFS only has to enumerate
the surviving ways of satisfying the R3 disjunctions.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, complete_multipartite_parts, find_clique_in_mask, max_clique

DEFAULT_BRANCH_CAP = 1 << 16


@dataclass(frozen=True)
class ProofStep:
    rule: str
    detail: str


@dataclass
class EqualityState:
    """Partition of vertices into forced-equal classes plus pending
    binary disjunctions; working state of the propagation engine."""

    n: int
    parent: list[int] = field(default_factory=list)
    disjunctions: list[tuple[frozenset, frozenset]] = field(default_factory=list)
    status: str = "open"  # open | contradiction

    def __post_init__(self):
        if not self.parent:
            self.parent = list(range(self.n))

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, u: int, w: int) -> None:
        ru, rw = self.find(u), self.find(w)
        if ru != rw:
            self.parent[max(ru, rw)] = min(ru, rw)

    def same(self, u: int, w: int) -> bool:
        return self.find(u) == self.find(w)

    def classes(self) -> list[frozenset]:
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(self.find(v), []).append(v)
        return [frozenset(vs) for vs in groups.values() if len(vs) > 1]

    def copy(self) -> "EqualityState":
        st = EqualityState(self.n, list(self.parent), self.disjunctions, self.status)
        return st


@dataclass
class PropagationResult:
    status: str  # ok | impossible | overflow
    universal: list[frozenset]  # classes forced in every surviving branch
    branches: list[tuple[frozenset, ...]]  # nontrivial classes per surviving leaf
    proof: list[ProofStep] = field(default_factory=list)

    @property
    def impossible(self) -> bool:
        return self.status == "impossible"

    def universal_of(self, vertex: int) -> frozenset:
        for cls in self.universal:
            if vertex in cls:
                return cls
        return frozenset([vertex])


def _mergeable(g: Graph, u: int, w: int) -> bool:
    return not g.has_edge(u, w) and g.rows[u] == g.rows[w]


def _nonadjacent_pairs(g: Graph):
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if not g.has_edge(u, w):
                yield u, w


def propagate_equalities(
    g: Graph, d: int, branch_cap: int = DEFAULT_BRANCH_CAP
) -> PropagationResult:
    """Run R1..R5 to fixpoint, then DFS the surviving R3 branches.

    Returns impossible with a replayable proof when every branch
    contradicts, otherwise the forced classes common to all branches
    together with the per-branch partitions.
    """
    proof: list[ProofStep] = []

    parts = complete_multipartite_parts(g)
    if parts is not None and len(parts) > d:
        proof.append(
            ProofStep(
                "multipartite",
                f"complete multipartite with {len(parts)} parts {parts} > d={d}; "
                f"parts span mutually orthogonal subspaces",
            )
        )
        return PropagationResult("impossible", [], [], proof)

    clique = max_clique(g)
    if len(clique) > d:
        proof.append(
            ProofStep("clique-bound", f"clique {sorted(clique)} has size {len(clique)} > d={d}")
        )
        return PropagationResult("impossible", [], [], proof)

    state = EqualityState(g.n)
    forced: list[tuple[int, int]] = []

    if d >= 2:
        for u, w in _nonadjacent_pairs(g):
            common = g.rows[u] & g.rows[w]
            witness = find_clique_in_mask(g, common, d - 1)
            if witness is None:
                continue
            if not _mergeable(g, u, w):
                proof.append(
                    ProofStep(
                        "forced-equal",
                        f"vertices {u},{w} share the {d - 1}-clique {witness} but have "
                        f"different neighbourhoods; no faithful representation",
                    )
                )
                return PropagationResult("impossible", [], [], proof)
            forced.append((u, w))
            proof.append(
                ProofStep("forced-equal", f"{u} = {w} via common {d - 1}-clique {witness}")
            )

    disjunctions: set[frozenset] = set()
    if d >= 3:
        for x, y in _nonadjacent_pairs(g):
            common = g.rows[x] & g.rows[y]
            sub = common
            pairs = []
            verts = []
            while sub:
                v = (sub & -sub).bit_length() - 1
                sub &= sub - 1
                verts.append(v)
            for i, u in enumerate(verts):
                for w in verts[i + 1 :]:
                    if not g.has_edge(u, w):
                        pairs.append((u, w))
            for u, w in pairs:
                if d > 3:
                    hub = g.rows[x] & g.rows[y] & g.rows[u] & g.rows[w]
                    if find_clique_in_mask(g, hub, d - 3) is None:
                        continue
                disjunctions.add(frozenset([frozenset([u, w]), frozenset([x, y])]))

    pending: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for dis in disjunctions:
        (a, b) = [tuple(sorted(side)) for side in dis]
        a_ok = _mergeable(g, *a)
        b_ok = _mergeable(g, *b)
        if a_ok and b_ok:
            pending.append((a, b))
        elif a_ok:
            forced.append(a)
            proof.append(
                ProofStep(
                    "square",
                    f"square forces {a[0]} = {a[1]} (alternative {b} breaks faithfulness)",
                )
            )
        elif b_ok:
            forced.append(b)
            proof.append(
                ProofStep(
                    "square",
                    f"square forces {b[0]} = {b[1]} (alternative {a} breaks faithfulness)",
                )
            )
        else:
            proof.append(
                ProofStep(
                    "square",
                    f"square on diagonals {a} / {b}: both merges break faithfulness",
                )
            )
            return PropagationResult("impossible", [], [], proof)

    for u, w in forced:
        state.union(u, w)

    # DFS over genuinely open disjunctions; merges never contradict, so
    # every leaf survives and only the partitions differ.
    leaves: set[tuple[tuple[int, ...], ...]] = set()
    overflow = False
    visited: set[tuple[int, ...]] = set()

    def partition_key(st: EqualityState) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(c)) for c in st.classes()))

    def descend(st: EqualityState) -> None:
        nonlocal overflow
        if overflow:
            return
        key = tuple(st.find(v) for v in range(g.n))
        if key in visited:
            return
        visited.add(key)
        if len(visited) > branch_cap:
            overflow = True
            return
        open_dis = None
        for a, b in pending:
            if not st.same(*a) and not st.same(*b):
                open_dis = (a, b)
                break
        if open_dis is None:
            leaves.add(partition_key(st))
            return
        for side in open_dis:
            child = st.copy()
            child.union(*side)
            descend(child)

    descend(state)
    if overflow:
        return PropagationResult("overflow", [], [], proof)

    # universal classes: common refinement of all leaf partitions
    leaf_list = sorted(leaves)
    universal = _common_refinement(g.n, leaf_list)
    branches = [tuple(frozenset(c) for c in leaf) for leaf in leaf_list]
    return PropagationResult("ok", universal, branches, proof)


def _common_refinement(n: int, leaves: list[tuple[tuple[int, ...], ...]]) -> list[frozenset]:
    if not leaves:
        return []
    current: dict[int, int] = {}
    for idx, cls in enumerate(leaves[0]):
        for v in cls:
            current[v] = idx
    for leaf in leaves[1:]:
        other: dict[int, int] = {}
        for idx, cls in enumerate(leaf):
            for v in cls:
                other[v] = idx
        merged: dict[int, tuple] = {}
        for v in range(n):
            if v in current and v in other:
                merged[v] = (current[v], other[v])
        groups: dict[tuple, list[int]] = {}
        for v, key in merged.items():
            groups.setdefault(key, []).append(v)
        current = {}
        for idx, (key, vs) in enumerate(sorted(groups.items())):
            if len(vs) > 1:
                for v in vs:
                    current[v] = idx
    groups2: dict[int, list[int]] = {}
    for v, idx in current.items():
        groups2.setdefault(idx, []).append(v)
    return sorted(
        (frozenset(vs) for vs in groups2.values() if len(vs) > 1),
        key=lambda c: sorted(c),
    )
