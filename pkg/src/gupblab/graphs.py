"""Simple undirected graphs on up to 64 vertices, stored as bit rows.

Vertices are 0..n-1.  ``rows[v]`` is an integer bitmask of the neighbours
of ``v``; the matrix is kept symmetric and irreflexive.  All query
operations are pure functions, so graphs can be shared freely between
threads and used as dict keys.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside supported range 0..{MAX_VERTICES}")
        if len(rows) != n:
            raise ValueError("rows length must equal vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(n):
            for u in _bits(rows[v]):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")
        self.n = n
        self.rows = tuple(rows)
        self._hash = hash((n, self.rows))

    # -- construction -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop {u}-{v}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_adjacency(cls, matrix: Sequence[Sequence[int]]) -> "Graph":
        n = len(matrix)
        rows = [0] * n
        for i in range(n):
            for j in range(n):
                if matrix[i][j]:
                    rows[i] |= 1 << j
        return cls(n, rows)

    # -- basics -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return _popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [_popcount(r) for r in self.rows]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.rows[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees sorted in descending order."""
    return sorted(g.degrees(), reverse=True)


def is_regular(g: Graph) -> Optional[int]:
    """The common degree if every vertex has the same one, else None."""
    degs = g.degrees()
    if not degs:
        return None
    r = degs[0]
    return r if all(d == r for d in degs) else None


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle; None for acyclic graphs.

    BFS from every vertex; when a non-tree edge closes between two
    visited vertices the cycle through the root has length
    dist[u] + dist[w] + 1, and the minimum over all roots is exact.
    """
    best: Optional[int] = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in _bits(g.rows[u]):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cyc = dist[u] + dist[w] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def max_clique(g: Graph) -> list[int]:
    """Vertices of one maximum clique (exact branch and bound)."""
    if g.n == 0:
        return []
    best_size = 0
    best_mask = 0

    def expand(size: int, current: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if size > best_size:
            best_size, best_mask = size, current
        while cand:
            if size + _popcount(cand) <= best_size:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(size + 1, current | 1 << v, cand & g.rows[v])

    expand(0, 0, (1 << g.n) - 1)
    return list(_bits(best_mask))


def clique_number(g: Graph) -> int:
    """Size of a maximum clique."""
    return len(max_clique(g))


def find_clique_in_mask(g: Graph, mask: int, size: int) -> Optional[list[int]]:
    """Some clique of the given size inside the vertex mask, or None."""
    if size == 0:
        return []

    def rec(current: list[int], cand: int) -> Optional[list[int]]:
        if len(current) == size:
            return current
        while cand:
            if len(current) + _popcount(cand) < size:
                return None
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            got = rec(current + [v], cand & g.rows[v])
            if got is not None:
                return got
        return None

    return rec([], mask)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the maximal connected subgraphs, sorted."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(list(_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Vertices of g2 are shifted by g1.n; no edges across the parts."""
    rows = list(g1.rows) + [r << g1.n for r in g2.rows]
    return Graph(g1.n + g2.n, rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices, renumbered in sorted order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(vs)}
    rows = [0] * len(vs)
    for v in vs:
        for u in _bits(g.rows[v]):
            if u in index:
                rows[index[v]] |= 1 << index[u]
    return Graph(len(vs), rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation; perm[v] is the new label of v."""
    rows = [0] * g.n
    for v in range(g.n):
        for u in _bits(g.rows[v]):
            rows[perm[v]] |= 1 << perm[u]
    return Graph(g.n, rows)


def complete_multipartite_parts(g: Graph) -> Optional[list[int]]:
    """Sorted part sizes if g is complete multipartite, else None.

    Non-adjacency must be an equivalence relation whose classes are
    pairwise completely joined; the classes are then the parts.
    """
    if g.n == 0:
        return None
    full = (1 << g.n) - 1
    assigned = 0
    parts = []
    for v in range(g.n):
        if assigned >> v & 1:
            continue
        part = full & ~g.rows[v]  # v plus its non-neighbours
        for u in _bits(part):
            if full & ~g.rows[u] != part:
                return None
        assigned |= part
        parts.append(_popcount(part))
    return sorted(parts)


# -- induced subgraph isomorphism -----------------------------------


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertices to host vertices that both
    preserves and reflects adjacency."""

    mapping: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]


def _pattern_order(pattern: Graph) -> list[int]:
    # Highest degree first, then greedily prefer vertices with many
    # already-ordered neighbours so candidate masks shrink early.
    order: list[int] = []
    placed = 0
    degs = pattern.degrees()
    for _ in range(pattern.n):
        best_v, best_key = -1, None
        for v in range(pattern.n):
            if placed >> v & 1:
                continue
            key = (_popcount(pattern.rows[v] & placed), degs[v])
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        order.append(best_v)
        placed |= 1 << best_v
    return order


def find_induced_embedding(pattern: Graph, host: Graph) -> Optional[Embedding]:
    """First induced embedding of pattern into host, or None.

    Backtracking over pattern vertices in a connectivity-aware order.
    Candidate sets are bitmasks; mapping vertex p to h restricts later
    candidates to N(h) for pattern neighbours of p and to the
    complement of N(h) for pattern non-neighbours (induced condition).
    """
    if pattern.n > host.n:
        return None
    if pattern.n == 0:
        return Embedding(())
    order = _pattern_order(pattern)
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    full = (1 << host.n) - 1
    # base candidates by degree compatibility
    base = []
    for p in order:
        mask = 0
        for h in range(host.n):
            if hdeg[h] >= pdeg[p]:
                mask |= 1 << h
        base.append(mask)
    # earlier pattern vertices adjacent / non-adjacent to each step
    adj_prev: list[list[int]] = []
    non_prev: list[list[int]] = []
    for t, p in enumerate(order):
        adj_prev.append([s for s in range(t) if pattern.has_edge(p, order[s])])
        non_prev.append([s for s in range(t) if not pattern.has_edge(p, order[s])])

    assigned = [0] * pattern.n  # host vertex chosen for order[t]

    def extend(t: int, used: int) -> bool:
        if t == pattern.n:
            return True
        cand = base[t] & ~used
        for s in adj_prev[t]:
            cand &= host.rows[assigned[s]]
        for s in non_prev[t]:
            cand &= ~host.rows[assigned[s]]
        while cand:
            h = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            assigned[t] = h
            if extend(t + 1, used | 1 << h):
                return True
        return False

    if not extend(0, 0):
        return None
    mapping = [0] * pattern.n
    for t, p in enumerate(order):
        mapping[p] = assigned[t]
    return Embedding(tuple(mapping))


def has_induced_subgraph(pattern: Graph, host: Graph) -> bool:
    return find_induced_embedding(pattern, host) is not None


# -- canonical form ---------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant byte string; equal iff graphs isomorphic."""

    data: bytes


def _refine(g: Graph, colors: list[int]) -> list[int]:
    # 1-dimensional Weisfeiler-Leman refinement to a stable colouring.
    n = g.n
    while True:
        buckets: dict[tuple, list[int]] = {}
        for v in range(n):
            sig = (colors[v], tuple(sorted(colors[u] for u in _bits(g.rows[v]))))
            buckets.setdefault(sig, []).append(v)
        new_colors = [0] * n
        for idx, sig in enumerate(sorted(buckets)):
            for v in buckets[sig]:
                new_colors[v] = idx
        if new_colors == colors:
            return colors
        colors = new_colors


def _code_from_order(g: Graph, order: Sequence[int]) -> bytes:
    # Upper triangle column-wise, as in graph6; packed little-endian bits.
    bits = []
    for j in range(1, g.n):
        col_v = order[j]
        for i in range(j):
            bits.append(g.rows[col_v] >> order[i] & 1)
    out = bytearray()
    acc = 0
    width = 0
    for b in bits:
        acc = acc << 1 | b
        width += 1
        if width == 8:
            out.append(acc)
            acc = 0
            width = 0
    if width:
        out.append(acc << (8 - width))
    return bytes(out)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form by colour refinement plus individualisation.

    Refine; if the colouring is not discrete, individualise every
    vertex of the first smallest non-singleton colour class and recurse,
    keeping the lexicographically least code over all leaves.  Complete
    (two graphs get equal forms iff isomorphic) at exponential worst
    case, which is acceptable for n <= 32.
    """
    if g.n == 0:
        return CanonicalForm(b"\x00")
    best: Optional[bytes] = None

    def descend(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(g, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1 and (target is None or len(cells[c]) < len(cells[target])):
                target = c
        if target is None:
            order = sorted(range(g.n), key=lambda v: colors[v])
            code = _code_from_order(g, order)
            if best is None or code < best:
                best = code
            return
        for v in cells[target]:
            branched = [2 * c + (1 if u == v else 0) for u, c in enumerate(colors)]
            descend(branched)

    descend([0] * g.n)
    assert best is not None
    return CanonicalForm(bytes([g.n]) + best)


# -- small constructors ----------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    n = sum(parts)
    rows = [0] * n
    starts = []
    s = 0
    for p in parts:
        starts.append(s)
        s += p
    full = (1 << n) - 1
    for k, p in enumerate(parts):
        part_mask = ((1 << p) - 1) << starts[k]
        for v in range(starts[k], starts[k] + p):
            rows[v] = full & ~part_mask
    return Graph(n, rows)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])
