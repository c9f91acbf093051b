"""Vector representations of graphs and their verification.

A representation assigns one vector per vertex.  Exact mode stores
tuples of :class:`Exact` scalars and decides orthogonality by exact
zero tests; float mode stores a complex numpy array and compares
normalised inner products against tolerances.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

import numpy as np

from .exactnum import Exact, exact_vector, inner_product
from .graphs import Graph
from .linalg import exact_rank, float_rank

EPS_ZERO = 1e-9  # normalised edge inner products must stay below this
EPS_FAR = 1e-6  # non-edge inner products must stay above this


@dataclass
class Representation:
    d: int
    vectors: list
    mode: str = "exact"  # exact | float

    def __post_init__(self):
        if self.mode not in ("exact", "float"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exact":
            self.vectors = [exact_vector(v) for v in self.vectors]
            for i, v in enumerate(self.vectors):
                if len(v) != self.d:
                    raise ValueError(f"vector {i} has dimension {len(v)} != {self.d}")
                if all(c.is_zero() for c in v):
                    raise ValueError(f"vector {i} is zero")
        else:
            arr = np.asarray(self.vectors, dtype=complex)
            if arr.ndim != 2 or arr.shape[1] != self.d:
                raise ValueError("float vectors must form a k x d array")
            norms = np.linalg.norm(arr, axis=1)
            if np.any(norms == 0):
                raise ValueError("zero vector in representation")
            self.vectors = arr

    @property
    def k(self) -> int:
        return len(self.vectors)

    def to_float(self) -> "Representation":
        if self.mode == "float":
            return self
        arr = np.array([[c.to_complex() for c in v] for v in self.vectors])
        return Representation(self.d, arr, "float")


def _normalized_gram(arr: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(arr, axis=1)
    unit = arr / norms[:, None]
    return unit @ unit.conj().T


def orthogonality_graph(
    vectors, mode: str = "exact", eps: float = EPS_ZERO
) -> Graph:
    """Graph with an edge wherever two vectors are orthogonal."""
    if mode == "exact":
        vecs = [exact_vector(v) for v in vectors]
        for i, v in enumerate(vecs):
            if all(c.is_zero() for c in v):
                raise ValueError(f"vector {i} is zero")
        n = len(vecs)
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if inner_product(vecs[i], vecs[j]).is_zero():
                    edges.append((i, j))
        return Graph.from_edges(n, edges)
    arr = np.asarray(vectors, dtype=complex)
    if np.any(np.linalg.norm(arr, axis=1) == 0):
        raise ValueError("zero vector")
    gram = _normalized_gram(arr)
    n = arr.shape[0]
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if abs(gram[i, j]) < eps
    ]
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    kind: str  # edge-not-orthogonal | non-edge-orthogonal
    magnitude: float


@dataclass
class VerifyReport:
    passed: bool
    violations: list[Violation] = field(default_factory=list)
    max_edge_residual: float = 0.0
    min_nonedge_overlap: Optional[float] = None


def verify_representation(
    g: Graph,
    rep: Representation,
    eps_zero: float = EPS_ZERO,
    eps_far: float = EPS_FAR,
) -> VerifyReport:
    """Faithfulness check: orthogonal exactly on edges, nowhere else."""
    if rep.k != g.n:
        raise ValueError(f"representation has {rep.k} vectors for {g.n} vertices")
    violations = []
    max_edge = 0.0
    min_non: Optional[float] = None
    if rep.mode == "exact":
        frep = rep.to_float()
        gram = _normalized_gram(frep.vectors)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                ip = inner_product(rep.vectors[u], rep.vectors[v])
                mag = abs(gram[u, v])
                if g.has_edge(u, v):
                    max_edge = max(max_edge, mag)
                    if not ip.is_zero():
                        violations.append(Violation(u, v, "edge-not-orthogonal", mag))
                else:
                    min_non = mag if min_non is None else min(min_non, mag)
                    if ip.is_zero():
                        violations.append(Violation(u, v, "non-edge-orthogonal", mag))
    else:
        gram = _normalized_gram(rep.vectors)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                mag = abs(gram[u, v])
                if g.has_edge(u, v):
                    max_edge = max(max_edge, mag)
                    if mag > eps_zero:
                        violations.append(Violation(u, v, "edge-not-orthogonal", mag))
                else:
                    min_non = mag if min_non is None else min(min_non, mag)
                    if mag < eps_far:
                        violations.append(Violation(u, v, "non-edge-orthogonal", mag))
    return VerifyReport(not violations, violations, max_edge, min_non)


def rank_of_subset(rep: Representation, subset: Iterable[int]) -> int:
    """Rank of the vectors at the given vertices."""
    idx = sorted(set(subset))
    if not idx:
        raise ValueError("empty subset")
    if rep.mode == "exact":
        return exact_rank([rep.vectors[i] for i in idx])
    return float_rank(rep.vectors[idx, :])


# -- text format --------------------------------------------------------
#
# Header "d=<int> mode=exact|float"; afterwards one vector per line,
# whitespace-separated components.  Exact components are rationals
# "p/q"; float components decimals; complex values "a+bi".

_COMPLEX_RE = re.compile(
    r"^(?P<re>[+-]?[0-9./]+)?(?P<im>[+-][0-9./]*|[0-9./]+)?i?$"
)


def _format_scalar(c: Exact, mode: str) -> str:
    if mode == "float":
        z = complex(c) if not hasattr(c, "to_complex") else c.to_complex()
        re_f, im_f = float(z.real), float(z.imag)
        if im_f == 0:
            return repr(re_f)
        sign = "+" if im_f >= 0 else "-"
        return f"{re_f!r}{sign}{abs(im_f)!r}i"
    if not c.is_rational():
        raise ValueError("text format stores rational components only")
    re_part = c.re[0]
    im_part = c.im[0]
    if im_part == 0:
        return str(re_part)
    sign = "+" if im_part >= 0 else "-"
    return f"{re_part}{sign}{abs(im_part)}i"


def _parse_number(token: str, mode: str) -> Union[Fraction, float]:
    if mode == "exact":
        return Fraction(token)
    return float(token)


def _parse_scalar(token: str, mode: str):
    token = token.strip()
    if token.endswith("i"):
        body = token[:-1]
        split = max(body.rfind("+", 1), body.rfind("-", 1))
        if split <= 0:
            re_s, im_s = "0", body or "1"
        else:
            re_s, im_s = body[:split], body[split:]
        if im_s in ("+", "-"):
            im_s += "1"
        re_v = _parse_number(re_s, mode)
        im_v = _parse_number(im_s, mode)
        if mode == "exact":
            return Exact.complex_pair(re_v, im_v)
        return complex(re_v, im_v)
    value = _parse_number(token, mode)
    return Exact.of(value) if mode == "exact" else complex(value)


def write_representation(path, rep: Representation) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"d={rep.d} mode={rep.mode}\n")
        for v in rep.vectors:
            fh.write(" ".join(_format_scalar(c, rep.mode) for c in v))
            fh.write("\n")


def read_representation(path) -> Representation:
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError("empty representation file")
    header = dict(part.split("=", 1) for part in lines[0].split())
    d = int(header["d"])
    mode = header.get("mode", "exact")
    vectors = []
    for line in lines[1:]:
        comps = [_parse_scalar(tok, mode) for tok in line.split()]
        vectors.append(comps)
    if mode == "float":
        vectors = np.array(vectors, dtype=complex)
    return Representation(d, vectors, mode)
