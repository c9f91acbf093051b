"""Independent brute-force oracles used by the tests.

These deliberately avoid the library's pruned search paths: embeddings
are found by trying every injective vertex map, and family counts come
from enumerating all labelled graphs and bucketing canonical forms.
"""
from __future__ import annotations

from itertools import combinations, permutations

from gupblab.graphs import Graph, canonical_form


def brute_force_induced_embedding(pattern: Graph, host: Graph):
    """All-injections oracle for induced subgraph isomorphism."""
    verts = range(host.n)
    for image in permutations(verts, pattern.n):
        ok = True
        for a in range(pattern.n):
            for b in range(a + 1, pattern.n):
                if pattern.has_edge(a, b) != host.has_edge(image[a], image[b]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return image
    return None


def count_regular_classes_bruteforce(n: int, r: int) -> int:
    """Count r-regular graphs on n vertices up to isomorphism by
    enumerating every labelled graph and deduplicating canonical forms."""
    forms = set()

    def extend(rows: list[int], vertex: int) -> None:
        if vertex == n:
            forms.add(canonical_form(Graph(n, rows)).data)
            return
        deficit = r - bin(rows[vertex]).count("1")
        if deficit < 0:
            return
        later = [u for u in range(vertex + 1, n) if bin(rows[u]).count("1") < r]
        if deficit > len(later):
            return
        for chosen in combinations(later, deficit):
            new_rows = list(rows)
            for u in chosen:
                new_rows[vertex] |= 1 << u
                new_rows[u] |= 1 << vertex
            extend(new_rows, vertex + 1)

    extend([0] * n, 0)
    return len(forms)


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)
