"""Named graph and vector fixtures.

Graphs live in ``data/catalog.edges`` (edge-list text format) with a
``# name=... provenance=...`` comment per block; structural claims in
KNOWN_FACTS are checked against every graph the first time the catalog
is loaded, which guards the transcribed edge lists against typos.
Vector fixtures are exact; the single irrational coefficient that
occurs is carried symbolically through its minimal polynomial.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .exactnum import Exact
from .gen import parse_edge_list
from .graphs import (
    Graph,
    clique_number,
    complete_multipartite_parts,
    girth,
    is_connected,
    is_regular,
)

_X = Exact.cubic_generator()


@dataclass
class CatalogEntry:
    name: str
    graph: Graph
    provenance: str
    known_facts: dict = field(default_factory=dict)


@dataclass
class VectorFixture:
    """Exact vectors, optionally tied to a catalog graph.

    For product fixtures ``party_vectors[p]`` holds the local factors of
    party p; ``vectors`` are then the assembled tensor products.
    """

    name: str
    d: int
    vectors: list
    associated_graph: Optional[str] = None
    party_vectors: Optional[list[list]] = None


class UnknownNameError(KeyError):
    pass


# structural claims checked at load time
KNOWN_FACTS: dict[str, dict] = {
    "square": {"n": 4, "regular": 2, "girth": 4},
    "diamond": {"n": 4, "clique": 3, "girth": 3},
    "C4": {"n": 4, "regular": 3, "clique": 4, "no_for": 3},
    "H5": {"n": 5, "girth": 3, "no_for": 3},
    "K5": {"n": 5, "clique": 3, "no_for": 3},
    "A6": {"n": 6, "girth": 4, "no_for": 3},
    "L6": {"n": 6, "girth": 4, "no_for": 3},
    "clique5": {"n": 5, "regular": 4, "clique": 5, "no_for": 3},
    "D6": {"n": 6, "regular": 4, "connected": True, "has_for": 3},
    "D7a": {"n": 7, "regular": 4, "connected": True, "has_for": 3},
    "D7b": {"n": 7, "regular": 4, "connected": True, "no_for": 3},
    "G8_1": {"n": 8, "regular": 4, "connected": True, "no_for": 3},
    "G8_2": {"n": 8, "regular": 4, "connected": True, "no_for": 3},
    "G8_3": {"n": 8, "regular": 4, "connected": True, "no_for": 3},
    "G8_4": {"n": 8, "regular": 4, "connected": True, "no_for": 3},
    "G8_5": {"n": 8, "regular": 4, "connected": True, "no_for": 3},
    "G8_6": {"n": 8, "regular": 4, "multipartite": [4, 4], "has_for": 2},
    "K33": {"n": 6, "regular": 3, "multipartite": [3, 3], "girth": 4},
    "K44": {"n": 8, "regular": 4, "multipartite": [4, 4], "girth": 4},
    "M5057": {"n": 13, "regular": 4, "connected": True, "girth": 3, "has_for": 3},
    "N11hat": {"n": 11, "connected": True, "no_for": 3},
    "N2359": {"n": 14, "regular": 4, "connected": True, "girth": 3, "has_for": 3},
    "N11743": {"n": 14, "regular": 4, "connected": True, "girth": 3, "has_for": 3},
    "N36919": {"n": 14, "regular": 4, "connected": True, "girth": 3, "has_for": 3},
    "N80015": {"n": 14, "regular": 4, "connected": True, "no_for": 3},
    "N87949": {"n": 14, "regular": 4, "connected": True, "girth": 4, "has_for": 3},
    "N87956": {"n": 14, "regular": 4, "connected": True, "girth": 4, "has_for": 3},
    "N87957": {"n": 14, "regular": 4, "connected": True, "girth": 4, "has_for": 3},
    "W5": {"n": 5, "clique": 3},
    "E6": {"n": 6, "no_for": 4},
    "E6I": {"n": 6, "no_for": 4},
    "W7II": {"n": 7, "no_for": 4},
    "B5": {"n": 5, "clique": 4},
    "B6o": {"n": 6, "clique": 4, "no_for": 4},
    "C43": {"n": 6, "clique": 4, "no_for": 4},
    "octic11": {"n": 11, "regular": 8, "clique": 4, "connected": True},
    "L70": {"n": 12, "regular": 8, "clique": 4, "connected": True},
    "L94": {"n": 12, "regular": 8, "clique": 3, "multipartite": [4, 4, 4], "has_for": 3},
    "cubic254": {"n": 14, "regular": 3, "girth": 3, "connected": True, "has_for": 3},
    "cubic411": {"n": 14, "regular": 3, "girth": 4, "connected": True, "has_for": 3},
    "cubic501": {"n": 14, "regular": 3, "girth": 5, "connected": True, "has_for": 3},
    "heawood": {"n": 14, "regular": 3, "girth": 6, "connected": True, "has_for": 4},
    "P3": {"n": 8, "regular": 3, "connected": True, "has_for": 3},
    "petersen": {"n": 10, "regular": 3, "girth": 5, "connected": True, "has_for": 3},
}

_graphs: Optional[dict[str, CatalogEntry]] = None


def _load_graphs() -> dict[str, CatalogEntry]:
    global _graphs
    if _graphs is not None:
        return _graphs
    text = resources.files("gupblab").joinpath("data/catalog.edges").read_text()
    entries: dict[str, CatalogEntry] = {}
    meta_re = re.compile(r"^# name=(\S+) provenance=(.*)$")
    blocks: list[tuple[str, str, list[str]]] = []
    current: Optional[tuple[str, str, list[str]]] = None
    for line in text.splitlines():
        m = meta_re.match(line)
        if m:
            current = (m.group(1), m.group(2), [])
            blocks.append(current)
        elif current is not None:
            current[2].append(line)
    for name, prov, lines in blocks:
        graphs = parse_edge_list("\n".join(lines))
        if len(graphs) != 1:
            raise ValueError(f"catalog block {name} holds {len(graphs)} graphs")
        entries[name] = CatalogEntry(name, graphs[0], prov, KNOWN_FACTS.get(name, {}))
    _validate(entries)
    _graphs = entries
    return entries


def _validate(entries: dict[str, CatalogEntry]) -> None:
    for name, entry in entries.items():
        g = entry.graph
        facts = entry.known_facts
        if "n" in facts and g.n != facts["n"]:
            raise ValueError(f"{name}: n={g.n}, expected {facts['n']}")
        if "regular" in facts and is_regular(g) != facts["regular"]:
            raise ValueError(f"{name}: not {facts['regular']}-regular")
        if "girth" in facts and girth(g) != facts["girth"]:
            raise ValueError(f"{name}: girth {girth(g)} != {facts['girth']}")
        if "clique" in facts and clique_number(g) != facts["clique"]:
            raise ValueError(f"{name}: clique number mismatch")
        if "connected" in facts and is_connected(g) != facts["connected"]:
            raise ValueError(f"{name}: connectivity mismatch")
        if "multipartite" in facts and complete_multipartite_parts(g) != facts["multipartite"]:
            raise ValueError(f"{name}: multipartite structure mismatch")


def get_graph(name: str) -> Graph:
    entries = _load_graphs()
    if name not in entries:
        raise UnknownNameError(name)
    return entries[name].graph


def get_entry(name: str) -> CatalogEntry:
    entries = _load_graphs()
    if name not in entries:
        raise UnknownNameError(name)
    return entries[name]


def graph_names() -> list[str]:
    return sorted(_load_graphs())


# -- vector fixtures ----------------------------------------------------

_FIXTURE_VECTORS: dict[str, tuple[int, list, Optional[str]]] = {
    # the sole 13-vertex survivor's d=3 representation
    "M5057_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 1), (0, 2, -3), (2, 0, -1),
            (1, -1, 0), (1, 1, 0), (1, 3, 2), (1, 3, 2), (1, 3, 2), (1, 1, -2),
            (1, -1, 1),
        ],
        "M5057",
    ),
    "N2359_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 1), (0, 0, 1), (1, 2, 0),
            (1, -1, 0), (2, -1, 4), (1, 1, -1), (1, -2, -1), (1, -2, -1),
            (1, -2, -1), (7, 4, -1), (1, -1, 3),
        ],
        "N2359",
    ),
    "N11743_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 1), (0, 1, 0), (1, 0, 1),
            (1, 1, 0), (1, 2, -1), (1, 2, -1), (1, -1, 1), (1, -1, 1),
            (1, -2, -3), (1, -2, -3), (1, -2, -3),
        ],
        "N11743",
    ),
    "N36919_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 1), (0, 1, -_X), (1, 0, -1),
            (1, -1, 0), (1, -1, 0), (1, _X, 1), (1, _X, 1),
            (1 + _X * _X, -_X, -1), (_X, -2, _X),
            (_X - 2, _X - 2, 2 * _X), (_X, _X, 2 - _X),
        ],
        "N36919",
    ),
    "N87949_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 1, 0), (0, 1, 0), (0, 1, -1), (5, 0, -1),
            (3, 0, -1), (2, 0, -1), (1, -1, -1), (1, -1, -1), (1, -1, -1),
            (1, -4, 5), (1, -2, 3), (1, -1, 2),
        ],
        "N87949",
    ),
    "N87956_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 1, 0), (0, 2, -1), (0, 2, -1), (1, 0, 0),
            (1, 0, 1), (1, 0, 1), (1, -1, -2), (1, -1, -2), (4, -1, -4),
            (4, -1, -4), (2, -4, 3), (2, -4, 3),
        ],
        "N87956",
    ),
    "N87957_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 1, 0), (0, 2, -1), (0, 2, -1), (1, 0, 0),
            (1, 0, 1), (7, 0, -12), (1, -2, -4), (1, -1, -2), (2, 5, -2),
            (2, 5, -2), (12, -2, 7), (12, -2, 7),
        ],
        "N87957",
    ),
    "L94_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 1), (0, 0, 1), (0, 0, 1),
            (0, 1, 0), (0, 1, 0), (0, 1, 0), (1, 0, 0), (1, 0, 0), (1, 0, 0),
        ],
        "L94",
    ),
    "L94_FOR4": (
        4,
        [
            (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 1, 1), (0, 0, 1, 2),
            (0, 0, 1, 3), (0, 1, 0, 0), (0, 1, 0, 0), (0, 1, 0, 0), (1, 0, 0, 0),
            (1, 0, 0, 0), (1, 0, 0, 0),
        ],
        "L94",
    ),
    "cubic254_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 2, -3), (1, 0, 1), (2, -1, 0),
            (2, -3, -2), (2, -3, -2), (1, 2, -3), (1, 2, -3), (4, 2, 1),
            (1, 1, 1), (1, 1, 1), (1, -3, 2),
        ],
        "cubic254",
    ),
    "cubic411_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 1, 0), (0, 1, -1), (2, 0, -1), (4, 0, -1),
            (5, -1, -1), (1, -1, -1), (1, 3, 2), (1, 1, 4), (1, 1, 0), (1, 1, 0),
            (1, -1, 1), (1, -1, 0),
        ],
        "cubic411",
    ),
    "cubic501_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 1, -2), (0, 1, -1), (3, 0, -2), (1, 0, 2),
            (2, 6, 3), (2, -2, -1), (2, 3, 3), (1, -3, -3), (6, 5, -3),
            (3, -3, 4), (1, 1, 0), (3, -3, 1),
        ],
        "cubic501",
    ),
    "heawood_FOR4": (
        4,
        [
            (1, 0, 0, 0), (0, 14, 7, -4), (0, 3, -2, 0), (0, 1, 0, 0),
            (2, -2, 0, -7), (10, -22, 32, -21), (5, 2, 3, 0), (1, 2, 3, 0),
            (1, 0, -2, -1), (1, 0, 1, 0), (2, -5, 0, 2), (1, 1, -1, 0),
            (1, -1, -1, 0), (2, -1, 0, 2),
        ],
        "heawood",
    ),
    "petersen_FOR3": (
        3,
        [
            (0, 1, 0), (1, 0, 0), (0, 2, 3), (2, 3, -2), (1, 0, 1), (1, -1, -1),
            (2, 0, 1), (0, 1, -1), (1, 3, -2), (1, -2, -2),
        ],
        "petersen",
    ),
    "P3_FOR3": (
        3,
        [
            (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, -1), (1, 0, 1), (1, 1, 0),
            (1, -1, -1), (1, -1, -1),
        ],
        "P3",
    ),
}


def _upb19_parties() -> list[list[tuple[int, int, int]]]:
    # 18 product vectors in six families over index pairs, plus the
    # all-ones stopper; local factors only, per party.
    phi = {0: (0, 1, 1), 1: (0, 1, -1)}
    psi = {0: (1, 1, 0), 1: (1, -1, 0)}
    k0 = (1, 0, 0)
    k2 = (0, 0, 1)
    stopper = (1, 1, 1)
    triples = []
    for i, j in [(0, 1), (1, 0), (1, 1)]:
        triples.append((phi[i], k0, psi[j]))
        triples.append((phi[i], psi[j], k2))
        triples.append((k2, phi[i], psi[j]))
        triples.append((psi[j], k2, phi[i]))
        triples.append((psi[j], phi[i], k0))
        triples.append((k0, psi[j], phi[i]))
    triples.append((stopper, stopper, stopper))
    return [[t[p] for t in triples] for p in range(3)]


def _tensor3(a, b, c) -> tuple:
    out = []
    for x in a:
        for y in b:
            for z in c:
                out.append(Exact.of(x) * Exact.of(y) * Exact.of(z))
    return tuple(out)


_fixtures: Optional[dict[str, VectorFixture]] = None


def _load_fixtures() -> dict[str, VectorFixture]:
    global _fixtures
    if _fixtures is not None:
        return _fixtures
    out: dict[str, VectorFixture] = {}
    for name, (d, vectors, graph) in _FIXTURE_VECTORS.items():
        out[name] = VectorFixture(name, d, [tuple(Exact.of(c) for c in v) for v in vectors], graph)
    parties = _upb19_parties()
    tensors = [
        _tensor3(parties[0][k], parties[1][k], parties[2][k]) for k in range(19)
    ]
    out["upb19"] = VectorFixture(
        "upb19",
        27,
        tensors,
        None,
        [[tuple(Exact.of(c) for c in v) for v in pv] for pv in parties],
    )
    _fixtures = out
    return out


def get_fixture(name: str) -> VectorFixture:
    fixtures = _load_fixtures()
    if name not in fixtures:
        raise UnknownNameError(name)
    return fixtures[name]


def fixture_names() -> list[str]:
    return sorted(_load_fixtures())
