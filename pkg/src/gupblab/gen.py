"""Isomorph-free enumeration of regular graphs, plus graph6 / edge-list IO.

The generator is an orderly algorithm over the column encoding of the
upper adjacency triangle: vertices are appended one at a time and a
partial labelled graph survives only while its code is the lexicographic
maximum over all relabelings.  Prefixes of canonical codes are canonical
for this encoding, so every isomorphism class is emitted exactly once.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Optional, Sequence

from .graphs import Graph, complement, disjoint_union, is_connected

_DIRECT_ENVELOPE_R = 4  # direct orderly generation; higher degrees go via complement
_DIRECT_ENVELOPE_N = 14

try:  # compiled canonicity kernel; the pure-Python path stays as fallback
    import numpy as _np
    from numba import njit as _njit

    @_njit(cache=True)
    def _canon_larger_exists(rows, cols, m, last_nonzero, cand, ncand, ptr, usedmask, pcol):
        # Iterative twin of the recursive search in _canonical_extension_py:
        # frame p chooses the vertex for position p; pcol[p][u] is the
        # length-p column of candidate u against the current placement.
        for i in range(m):
            cand[0, i] = i
            pcol[0, i] = 0
        ncand[0] = m
        ptr[0] = 0
        usedmask[0] = 0
        p = 0
        while p >= 0:
            if ptr[p] >= ncand[p]:
                p -= 1
                continue
            v = cand[p, ptr[p]]
            ptr[p] += 1
            if p == m - 1:
                continue  # full placement ties the code; not larger
            newused = usedmask[p] | (1 << v)
            want = cols[p]
            if want == 0 and p > last_nonzero:
                # remaining target columns all zero: larger iff an
                # unplaced vertex still carries any edge
                for u in range(m):
                    if (newused >> u) & 1 == 0 and rows[u] != 0:
                        return True
                continue
            row = rows[v]
            cnt = 0
            for u in range(m):
                if (newused >> u) & 1:
                    continue
                c = (pcol[p, u] << 1) | ((row >> u) & 1)
                pcol[p + 1, u] = c
                if c > want:
                    return True
                if c == want:
                    cand[p + 1, cnt] = u
                    cnt += 1
            if cnt:
                ncand[p + 1] = cnt
                ptr[p + 1] = 0
                usedmask[p + 1] = newused
                p += 1
        return False

    class _KernelScratch:
        def __init__(self, n: int):
            self.rows = _np.zeros(n, dtype=_np.int64)
            self.cols = _np.zeros(n, dtype=_np.int64)
            self.cand = _np.zeros((n + 1, n), dtype=_np.int64)
            self.ncand = _np.zeros(n + 1, dtype=_np.int64)
            self.ptr = _np.zeros(n + 1, dtype=_np.int64)
            self.usedmask = _np.zeros(n + 1, dtype=_np.int64)
            self.pcol = _np.zeros((n + 1, n), dtype=_np.int64)

    _HAVE_NUMBA = True
except Exception:  # pragma: no cover - numba is expected to be present
    _HAVE_NUMBA = False


@dataclass(frozen=True)
class EnumerationSpec:
    """What to enumerate: r-regular graphs on n vertices."""

    n: int
    r: int
    connectivity: str = "all"  # all | connected | disconnected
    girth_min: Optional[int] = None

    def __post_init__(self):
        if self.n <= 0 or self.r < 0:
            raise ValueError("need n >= 1 and r >= 0")
        if self.r >= self.n:
            raise ValueError(f"r={self.r} not realisable on n={self.n} vertices")
        if self.n * self.r % 2 != 0:
            raise ValueError(f"n*r = {self.n * self.r} is odd; no such graph")
        if self.connectivity not in ("all", "connected", "disconnected"):
            raise ValueError(f"unknown connectivity filter {self.connectivity!r}")


class OutOfEnvelopeError(ValueError):
    """Requested family is outside the supported generation envelope."""


def _canonical_extension_py(rows: list[int], cols: list[int], m: int) -> bool:
    """True iff the labelled m-vertex prefix has the lex-max column code.

    Searches for a permutation producing a strictly larger code,
    position by position; candidates whose column ties the target are
    recursed into, larger ones end the search immediately.  Partial
    column values of every unplaced vertex are carried down the search
    so extending by one position costs O(m).
    """
    if m <= 1:
        return True
    target = cols  # cols[j-1] is the column of vertex j (j = 1..m-1)
    last_nonzero = -1
    for idx in range(m - 1):
        if target[idx]:
            last_nonzero = idx
    vertices = range(m)

    def search(depth: int, used: int, pcol: list[int]) -> bool:
        # True if a strictly larger code exists in this subtree
        want = target[depth - 1]
        if want == 0 and depth - 1 > last_nonzero:
            # all remaining target columns are zero: a larger code exists
            # iff any unplaced vertex still carries an edge at all
            for v in vertices:
                if not (used >> v & 1) and rows[v]:
                    return True
            return False
        ties = []
        for v in vertices:
            if used >> v & 1:
                continue
            c = pcol[v]
            if c >= want:
                if c > want:
                    return True
                ties.append(v)
        if depth + 1 == m:
            return False  # full tie: equal code, not larger
        for v in ties:
            row = rows[v]
            npcol = [pcol[u] << 1 | (row >> u & 1) for u in vertices]
            if search(depth + 1, used | 1 << v, npcol):
                return True
        return False

    for v0 in vertices:
        row0 = rows[v0]
        if search(1, 1 << v0, [row0 >> u & 1 for u in vertices]):
            return False
    return True


def _pairwise_dist_ok(rows: Sequence[int], sources: Sequence[int], limit: int) -> bool:
    # shortest cycle through the new vertex is min over source pairs of
    # dist(u, v) + 2 in the old graph; require >= limit
    for idx, s in enumerate(sources):
        others = sources[idx + 1 :]
        if not others:
            break
        dist = {s: 0}
        frontier = [s]
        d = 0
        while frontier and d + 2 < limit:
            d += 1
            nxt = []
            for u in frontier:
                mask = rows[u]
                while mask:
                    w = (mask & -mask).bit_length() - 1
                    mask &= mask - 1
                    if w not in dist:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        for v in others:
            if v in dist and dist[v] + 2 < limit:
                return False
    return True


def _generate_regular(n: int, r: int, connected_only: bool, girth_min: Optional[int]) -> Iterator[Graph]:
    if n == 1 and r == 0:
        yield Graph(1, [0])
        return

    if _HAVE_NUMBA:
        scratch = _KernelScratch(n)

        def is_canonical(rows: list[int], cols: list[int], m: int) -> bool:
            if m <= 1:
                return True
            s = scratch
            for i in range(m):
                s.rows[i] = rows[i]
            last_nonzero = -1
            for i in range(m - 1):
                s.cols[i] = cols[i]
                if cols[i]:
                    last_nonzero = i
            return not _canon_larger_exists(
                s.rows, s.cols, m, last_nonzero, s.cand, s.ncand, s.ptr, s.usedmask, s.pcol
            )

    else:
        is_canonical = _canonical_extension_py

    def recurse(rows: list[int], cols: list[int]) -> Iterator[Graph]:
        m = len(rows)
        if m == n:
            if all(bin(row).count("1") == r for row in rows):
                g = Graph(n, rows)
                if not connected_only or is_connected(g):
                    yield g
            return
        future = n - m - 1
        deficits = [r - bin(row).count("1") for row in rows]
        eligible = [i for i, d in enumerate(deficits) if d > 0]
        prev_col_high = cols[-1] if cols else None
        for k in range(min(r, len(eligible)), -1, -1):
            for subset in combinations(eligible, k):
                col = 0
                for i in subset:
                    col |= 1 << (m - 1 - i)
                # sorted-columns necessary condition for lex-max codes
                if prev_col_high is not None and (col >> 1) > prev_col_high:
                    continue
                # degree feasibility of the extended prefix
                new_deficits = list(deficits)
                for i in subset:
                    new_deficits[i] -= 1
                new_deficits.append(r - k)
                if any(d > future for d in new_deficits):
                    continue
                total = sum(new_deficits)
                spare = future * r - total
                if spare < 0 or spare % 2 != 0 or spare // 2 > future * (future - 1) // 2:
                    continue
                if connected_only and future > 0 and _has_saturated_component(rows, new_deficits, subset, m):
                    continue
                if girth_min is not None and len(subset) > 1:
                    if not _pairwise_dist_ok(rows, subset, girth_min):
                        continue
                new_rows = list(rows)
                for i in subset:
                    new_rows[i] |= 1 << m
                new_rows.append(col_mask(subset))
                new_cols = cols + [col]
                if is_canonical(new_rows, new_cols, m + 1):
                    yield from recurse(new_rows, new_cols)

    def col_mask(subset: tuple[int, ...]) -> int:
        mask = 0
        for i in subset:
            mask |= 1 << i
        return mask

    yield from recurse([0], [])


def _has_saturated_component(rows: Sequence[int], deficits: Sequence[int], subset: Sequence[int], m: int) -> bool:
    # a fully saturated component smaller than the whole graph can never
    # reconnect, so connected-mode search may prune it
    n_placed = m + 1
    adj = list(rows) + [0]
    for i in subset:
        adj[i] |= 1 << m
        adj[m] |= 1 << i
    seen = 0
    for v in range(n_placed):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            mask = frontier
            while mask:
                u = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                nxt |= adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        total = 0
        mask = comp
        while mask:
            u = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            total += deficits[u]
        if total == 0:
            return True  # saturated; smaller than n since future > 0
    return False


def enumerate_regular(spec: EnumerationSpec) -> Iterator[Graph]:
    """All r-regular graphs on n vertices up to isomorphism, streamed."""
    n, r = spec.n, spec.r
    if r <= _DIRECT_ENVELOPE_R and n <= _DIRECT_ENVELOPE_N:
        yield from _filtered_direct(spec)
    elif n - 1 - r <= _DIRECT_ENVELOPE_R and n <= _DIRECT_ENVELOPE_N:
        comp_spec = EnumerationSpec(n, n - 1 - r, "all", None)
        for g in _generate_regular(comp_spec.n, comp_spec.r, False, None):
            cg = complement(g)
            if _passes_filters(cg, spec):
                yield cg
    else:
        raise OutOfEnvelopeError(
            f"({n},{r})-regular enumeration outside the supported envelope"
        )


def _filtered_direct(spec: EnumerationSpec) -> Iterator[Graph]:
    if spec.connectivity == "connected":
        yield from _generate_regular(spec.n, spec.r, True, spec.girth_min)
        return
    for g in _generate_regular(spec.n, spec.r, False, spec.girth_min):
        if spec.connectivity == "disconnected" and is_connected(g):
            continue
        yield g


def _passes_filters(g: Graph, spec: EnumerationSpec) -> bool:
    if spec.connectivity == "connected" and not is_connected(g):
        return False
    if spec.connectivity == "disconnected" and is_connected(g):
        return False
    if spec.girth_min is not None:
        from .graphs import girth

        gg = girth(g)
        if gg is not None and gg < spec.girth_min:
            return False
    return True


def enumerate_disconnected_regular(n: int, r: int) -> Iterator[Graph]:
    """Disconnected r-regular graphs on n vertices up to isomorphism.

    Built as disjoint unions over integer partitions of n into parts
    of size >= r+1, with multiset deduplication of components.
    """
    if n * r % 2 != 0:
        raise ValueError(f"n*r = {n * r} is odd; no such graph")
    min_part = r + 1
    partitions = [p for p in _partitions(n, min_part) if len(p) >= 2]
    families: dict[int, list[Graph]] = {}
    for part in {p for partition in partitions for p in partition}:
        if part * r % 2 != 0:
            families[part] = []
        else:
            families[part] = list(enumerate_regular(EnumerationSpec(part, r, "connected")))
    for partition in partitions:
        if any(not families[p] for p in partition):
            continue
        choices_per_size: list[list[tuple[Graph, ...]]] = []
        sizes = sorted(set(partition), reverse=True)
        for size in sizes:
            count = partition.count(size)
            choices_per_size.append(
                list(combinations_with_replacement(families[size], count))
            )
        for combo in _product(choices_per_size):
            graph = None
            for group in combo:
                for comp in group:
                    graph = comp if graph is None else disjoint_union(graph, comp)
            assert graph is not None
            yield graph


def _product(lists: list[list[tuple[Graph, ...]]]) -> Iterator[tuple[tuple[Graph, ...], ...]]:
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _product(lists[1:]):
            yield (head,) + rest


def _partitions(n: int, min_part: int) -> list[tuple[int, ...]]:
    # descending partitions of n with all parts >= min_part
    result = []

    def rec(remaining: int, max_part: int, acc: tuple[int, ...]) -> None:
        if remaining == 0:
            result.append(acc)
            return
        for p in range(min(max_part, remaining), min_part - 1, -1):
            if remaining - p == 0 or remaining - p >= min_part:
                rec(remaining - p, p, acc + (p,))

    rec(n, n, ())
    return result


# -- graph6 ------------------------------------------------------------


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def graph_to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 writer here supports n <= 62 only")
    chars = [chr(g.n + 63)]
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.rows[j] >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def graph_from_graph6(line: str, offset: int = 0) -> Graph:
    data = line.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<") :]
    if not data:
        raise Graph6Error("empty graph6 record", offset)
    n = ord(data[0]) - 63
    if not 0 <= n <= 62:
        raise Graph6Error(f"unsupported vertex count byte {data[0]!r}", offset)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} payload bytes, got {len(body)}", offset + 1)
    bits = []
    for pos, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"invalid graph6 byte {ch!r}", offset + 1 + pos)
        for shift in range(5, -1, -1):
            bits.append(val >> shift & 1)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    if any(bits[idx:]):
        raise Graph6Error("nonzero padding bits", offset + len(data) - 1)
    return Graph(n, rows)


def write_graph6(path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(graph_to_graph6(g))
            fh.write("\n")
            count += 1
    return count


def read_graph6(path) -> Iterator[Graph]:
    offset = 0
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            stripped = line.strip()
            if stripped:
                yield graph_from_graph6(stripped, offset)
            offset += len(line)


# -- edge-list text format ---------------------------------------------
#
# One graph per block, "n=<int>" first, then whitespace-separated
# "<u>-<v>" tokens with 0-based vertices; blank line between blocks;
# "#" starts a comment.


class EdgeListError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


def write_edge_list(path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            if count:
                fh.write("\n")
            fh.write(f"n={g.n}\n")
            tokens = [f"{u}-{v}" for u, v in g.edges()]
            if tokens:
                fh.write(" ".join(tokens))
                fh.write("\n")
            count += 1
    return count


def parse_edge_list(text: str) -> list[Graph]:
    graphs = []
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    start_line = 0

    def flush(line_no: int) -> None:
        nonlocal n, edges, seen
        if n is None:
            return
        try:
            graphs.append(Graph.from_edges(n, edges))
        except ValueError as exc:
            raise EdgeListError(str(exc), start_line) from exc
        n, edges, seen = None, [], set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if n is not None:
                flush(line_no)
            continue
        if line.startswith("n="):
            if n is not None:
                flush(line_no)
            try:
                n = int(line[2:])
            except ValueError:
                raise EdgeListError(f"bad vertex count {line!r}", line_no) from None
            if n < 0:
                raise EdgeListError(f"negative vertex count {n}", line_no)
            start_line = line_no
            continue
        if n is None:
            raise EdgeListError("edge tokens before any 'n=' header", line_no)
        for token in line.split():
            parts = token.split("-")
            if len(parts) != 2:
                raise EdgeListError(f"malformed edge token {token!r}", line_no)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListError(f"malformed edge token {token!r}", line_no) from None
            if u == v:
                raise EdgeListError(f"self-loop {token!r}", line_no)
            if not (0 <= u < n and 0 <= v < n):
                raise EdgeListError(f"vertex out of range in {token!r}", line_no)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise EdgeListError(f"duplicate edge {token!r}", line_no)
            seen.add(key)
            edges.append((u, v))
    if n is not None:
        flush(len(text.splitlines()) + 1)
    return graphs


def read_edge_list(path) -> Iterator[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    yield from parse_edge_list(text)
