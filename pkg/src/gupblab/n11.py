"""Replayable infeasibility certificate for the 11-vertex obstruction.

The graph (catalog name N11hat) is a triangle 0-1-2 with a pendant
triangle on each corner and two extra vertices, vertex 9 joined to
{3,5,7} and vertex 10 joined to {4,6,8}.  Fixing an orthonormal triple
on the central triangle forces parametric forms on vertices 3..8; the
two extra vertices then impose rank conditions whose determinants are
jointly infeasible for nonzero parameters.  The derivation is replayed
symbolically below rather than assumed.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import sympy as sp


@dataclass
class InfeasibilityProof:
    infeasible: bool
    steps: list[str] = field(default_factory=list)
    degenerate_solution_exists: bool = False


def check_n11_infeasibility() -> InfeasibilityProof:
    """Certify that the 11-vertex obstruction has no FOR(3)."""
    x, y, z = sp.symbols("x y z", complex=True)
    steps: list[str] = []

    # vertices 0,1,2 form a triangle: orthonormal basis e0,e1,e2 w.l.o.g.
    # vertex 3 _|_ e0 with nonzero e1,e2 parts (non-adjacent to 1 and 2)
    v4 = sp.Matrix([0, 1, x])
    v5 = sp.Matrix([0, sp.conjugate(x), -1])
    v6 = sp.Matrix([1, 0, y])
    v7 = sp.Matrix([sp.conjugate(y), 0, -1])
    v8 = sp.Matrix([1, z, 0])
    v9 = sp.Matrix([sp.conjugate(z), -1, 0])
    steps.append(
        "fix the central triangle to e0,e1,e2; scale pendant-triangle "
        "vectors to (0,1,x),(0,x*,-1),(1,0,y),(y*,0,-1),(1,z,0),(z*,-1,0) "
        "with x,y,z != 0 by faithfulness"
    )

    # orthogonality inside each pendant triangle holds identically
    for a, b in ((v4, v5), (v6, v7), (v8, v9)):
        assert sp.simplify((a.H * b)[0]) == 0

    # vertex 9 is nonzero and orthogonal to {v4,v6,v8}: their span has
    # dimension two, i.e. the coefficient determinant vanishes
    m1 = sp.Matrix([[0, 1, x], [1, 0, y], [1, z, 0]])
    det1 = sp.expand(m1.det())
    steps.append(f"rank condition on {{3,5,7}}-side: det = {det1} = 0")

    m2 = sp.Matrix(
        [
            [0, sp.conjugate(x), -1],
            [sp.conjugate(y), 0, -1],
            [sp.conjugate(z), -1, 0],
        ]
    )
    det2 = sp.expand(m2.det())
    steps.append(f"rank condition on {{4,6,8}}-side: det = {det2} = 0")

    # det1 = 0 gives y = -xz; conjugating det2 = 0 gives y = xz
    sol_y = sp.solve(sp.Eq(det1, 0), y)
    assert sol_y == [-x * z]
    det2_conj = sp.expand(sp.conjugate(det2).subs(
        {sp.conjugate(x): x, sp.conjugate(y): y, sp.conjugate(z): z}
    ))
    combined = sp.expand(det2_conj.subs(y, -x * z))
    steps.append(
        f"substituting y = -x*z into the conjugated second condition leaves {combined} = 0, "
        "forcing x = 0 or z = 0 against the nonzero requirement"
    )
    infeasible = sp.simplify(combined + 2 * x * z) == 0  # combined == -2xz
    steps.append("x*z + y = 0 and x*z - y = 0 together force y = 0: contradiction")

    # sanity: dropping the nonzero requirements admits y = z = 0
    degenerate = det1.subs({y: 0, z: 0}) == 0 and det2.subs(
        {sp.conjugate(y): 0, sp.conjugate(z): 0}
    ) == 0
    return InfeasibilityProof(bool(infeasible), steps, bool(degenerate))
