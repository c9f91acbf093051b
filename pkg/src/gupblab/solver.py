"""Numerical search for faithful orthogonal representations.

Propagation runs first; if it proves impossibility the verdict carries
that proof.  Otherwise the search optimises unit vectors on the
quotient graph (one vector per forced class), driving edge inner
products to zero while a hinge keeps non-edge inner products above a
margin.  Failures within budget are reported as unknown, never as
nonexistence.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graphs import Graph, canonical_form
from .propagation import PropagationResult, ProofStep, propagate_equalities
from .representations import Representation, verify_representation

DEFAULT_RESTARTS = 200
DEFAULT_ITERS = 5000
DEFAULT_TAU = 1e-3
DEFAULT_EPS_SOLVE = 1e-12


@dataclass
class ForVerdict:
    outcome: str  # found | impossible | unknown
    d: int
    representation: Optional[Representation] = None
    proof: list[ProofStep] = field(default_factory=list)
    restarts_used: int = 0
    best_residual: float = float("inf")
    universally_forced: list[frozenset] = field(default_factory=list)
    propagation: Optional[PropagationResult] = None

    @property
    def found(self) -> bool:
        return self.outcome == "found"

    @property
    def impossible(self) -> bool:
        return self.outcome == "impossible"


def _dedicated_impossible(g: Graph, d: int) -> Optional[list[ProofStep]]:
    # certificates beyond the propagation rules, keyed by isomorphism class
    from . import catalog
    from .n11 import check_n11_infeasibility

    if d == 3:
        n11 = catalog.get_graph("N11hat")
        if g.n == n11.n and canonical_form(g) == canonical_form(n11):
            proof = check_n11_infeasibility()
            return [ProofStep("dedicated", s) for s in proof.steps]
    return None


def graph_seed(master_seed: int, g: Graph) -> int:
    digest = hashlib.sha256(canonical_form(g).data).digest()
    return (master_seed * 1000003 + int.from_bytes(digest[:8], "big")) % (1 << 63)


def _quotient(g: Graph, classes: list[frozenset]) -> tuple[Graph, list[list[int]]]:
    rep_of = {}
    groups: list[list[int]] = []
    in_class = set()
    for cls in classes:
        groups.append(sorted(cls))
        in_class.update(cls)
    for v in range(g.n):
        if v not in in_class:
            groups.append([v])
    groups.sort()
    edges = []
    for i, gi in enumerate(groups):
        for j in range(i + 1, len(groups)):
            if g.has_edge(gi[0], groups[j][0]):
                edges.append((i, j))
    return Graph.from_edges(len(groups), edges), groups


def _search_once(
    q: Graph,
    d: int,
    rng: np.random.Generator,
    iters: int,
    tau: float,
    eps_solve: float,
    real: bool,
    lr: float = 0.08,
    momentum: float = 0.9,
) -> tuple[bool, float, np.ndarray]:
    k = q.n
    if real:
        V = rng.standard_normal((k, d))
    else:
        V = rng.standard_normal((k, d)) + 1j * rng.standard_normal((k, d))
    V = V / np.linalg.norm(V, axis=1)[:, None]
    W_edge = np.zeros((k, k))
    for u, v in q.edges():
        W_edge[u, v] = W_edge[v, u] = 1.0
    W_non = 1.0 - W_edge - np.eye(k)
    vel = np.zeros_like(V)
    best = float("inf")
    for it in range(iters):
        G = V @ V.conj().T
        absG = np.abs(G)
        hinge = np.maximum(0.0, tau - absG) * W_non
        # Wirtinger gradient of sum_edges |G_ij|^2 plus the hinge term
        coef = W_edge * G
        safe = np.where(absG > 1e-15, absG, 1.0)
        coef -= (hinge / safe) * G
        grad = coef @ V
        # project onto the tangent of the unit spheres
        overlap = np.sum(grad * V.conj(), axis=1).real
        grad = grad - overlap[:, None] * V
        vel = momentum * vel - lr * grad
        V = V + vel
        V = V / np.linalg.norm(V, axis=1)[:, None]
        if it % 25 == 24 or it == iters - 1:
            G = V @ V.conj().T
            edge_res = float(np.sum((np.abs(G) ** 2) * W_edge) / 2.0)
            best = min(best, edge_res)
            min_non = float(np.min(np.abs(G)[W_non > 0])) if W_non.any() else 1.0
            if edge_res < eps_solve and min_non > tau:
                return True, edge_res, V
    return False, best, V


def solve_for(
    g: Graph,
    d: int,
    restarts: int = DEFAULT_RESTARTS,
    iters: int = DEFAULT_ITERS,
    seed: int = 0,
    real: bool = False,
    tau: float = DEFAULT_TAU,
    eps_solve: float = DEFAULT_EPS_SOLVE,
    dedicated_checks: bool = True,
) -> ForVerdict:
    """Decide FOR(d) existence: propagation proof, dedicated certificate,
    or multi-restart numerical search over the quotient graph."""
    prop = propagate_equalities(g, d)
    if prop.impossible:
        return ForVerdict("impossible", d, proof=prop.proof, propagation=prop)
    if dedicated_checks:
        extra = _dedicated_impossible(g, d)
        if extra is not None:
            return ForVerdict("impossible", d, proof=extra, propagation=prop)
    forced = prop.universal if prop.status == "ok" else []
    q, groups = _quotient(g, forced)
    rng = np.random.default_rng(graph_seed(seed, g))
    best = float("inf")
    for attempt in range(restarts):
        ok, res, V = _search_once(q, d, rng, iters, tau, eps_solve, real)
        best = min(best, res)
        if ok:
            full = np.zeros((g.n, d), dtype=V.dtype)
            for qi, members in enumerate(groups):
                for v in members:
                    full[v] = V[qi]
            rep = Representation(d, full, "float")
            report = verify_representation(g, rep, eps_zero=1e-6, eps_far=tau / 2)
            if report.passed:
                return ForVerdict(
                    "found",
                    d,
                    representation=rep,
                    restarts_used=attempt + 1,
                    best_residual=res,
                    universally_forced=forced,
                    propagation=prop,
                )
    return ForVerdict(
        "unknown",
        d,
        restarts_used=restarts,
        best_residual=best,
        universally_forced=forced,
        propagation=prop,
    )
