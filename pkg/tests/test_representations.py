from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from gupblab import catalog
from gupblab.exactnum import CUBIC_ROOT, Exact
from gupblab.linalg import exact_rank, float_rank
from gupblab.representations import (
    Representation,
    orthogonality_graph,
    rank_of_subset,
    read_representation,
    verify_representation,
    write_representation,
)


def test_cubic_root_satisfies_minimal_polynomial():
    x = CUBIC_ROOT
    assert abs(x**3 - 3 * x**2 + x - 2) < 1e-12
    assert abs(x - 2.89329) < 1e-4
    gen = Exact.cubic_generator()
    residue = gen * gen * gen - 3 * gen * gen + gen - 2
    assert residue.is_zero()  # exact minimal-polynomial residue


def test_orthogonality_graph_of_basis():
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    from gupblab.graphs import complete_graph

    assert orthogonality_graph(basis, "exact") == complete_graph(3)


def test_orthogonality_graph_rejects_zero_vector():
    with pytest.raises(ValueError):
        orthogonality_graph([(0, 0, 0), (1, 0, 0)], "exact")


def test_eq_fixture_reproduces_its_graph():
    fx = catalog.get_fixture("M5057_FOR3")
    assert orthogonality_graph(fx.vectors, "exact") == catalog.get_graph("M5057")


def test_verify_representation_pass_and_roundtrip():
    for name in ("M5057_FOR3", "heawood_FOR4", "petersen_FOR3"):
        fx = catalog.get_fixture(name)
        g = catalog.get_graph(fx.associated_graph)
        rep = Representation(fx.d, fx.vectors, "exact")
        report = verify_representation(g, rep)
        assert report.passed
        assert report.max_edge_residual == 0.0 or report.max_edge_residual < 1e-12
        # faithfulness round trip
        assert orthogonality_graph(fx.vectors, "exact") == g


def test_verify_representation_detects_perturbation():
    fx = catalog.get_fixture("M5057_FOR3")
    g = catalog.get_graph("M5057")
    vectors = [list(v) for v in fx.vectors]
    # break v4 = v3: perturb vector 3 away from (0,0,1)
    vectors[3] = [Exact.of(0), Exact.of(Fraction(1, 7)), Exact.of(1)]
    rep = Representation(fx.d, vectors, "exact")
    report = verify_representation(g, rep)
    assert not report.passed
    kinds = {v.kind for v in report.violations}
    assert "edge-not-orthogonal" in kinds


def test_verify_detects_broken_diamond_pair():
    # a diamond assignment that keeps w4 orthogonal to w1 and w3 but
    # distinct from w2 cannot stay faithful; the Gram pattern drifts
    diamond = catalog.get_graph("diamond")
    vectors = [
        (1, 0, 0),  # w1
        (0, 1, 0),  # w2
        (0, 0, 1),  # w3
        (0, 1, Fraction(1, 5)),  # w4: no longer the forced repeat of w2
    ]
    report = verify_representation(diamond, Representation(3, vectors, "exact"))
    assert not report.passed
    assert any(v.kind == "edge-not-orthogonal" for v in report.violations)


def test_verify_dimension_mismatch():
    g = catalog.get_graph("square")
    rep = Representation(3, [(1, 0, 0)] * 3, "exact")
    with pytest.raises(ValueError):
        verify_representation(g, rep)


def test_float_mode_verification():
    fx = catalog.get_fixture("N36919_FOR3")
    g = catalog.get_graph("N36919")
    rep = Representation(fx.d, fx.vectors, "exact").to_float()
    report = verify_representation(g, rep)
    assert report.passed
    assert report.max_edge_residual < 1e-9
    assert report.min_nonedge_overlap > 1e-6


def test_rank_of_subset():
    fx = catalog.get_fixture("M5057_FOR3")
    rep = Representation(fx.d, fx.vectors, "exact")
    assert rank_of_subset(rep, [2, 3, 8, 9, 10]) == 2
    assert rank_of_subset(rep, [0]) == 1
    assert rank_of_subset(rep, [0, 1, 2]) == 3
    with pytest.raises(ValueError):
        rank_of_subset(rep, [])


def test_rank_exact_vs_float_on_integer_fixtures():
    for name in catalog.fixture_names():
        fx = catalog.get_fixture(name)
        if fx.associated_graph is None or name == "N36919_FOR3":
            continue
        rep = Representation(fx.d, fx.vectors, "exact")
        frep = rep.to_float()
        subsets = [list(range(fx.d)), list(range(min(len(fx.vectors), 5)))]
        for subset in subsets:
            assert rank_of_subset(rep, subset) == rank_of_subset(frep, subset), name


def test_exact_rank_small_cases():
    one = Exact.of(1)
    zero = Exact.of(0)
    assert exact_rank([[one, zero], [zero, one]]) == 2
    assert exact_rank([[one, one], [one, one]]) == 1
    assert exact_rank([]) == 0
    assert float_rank(np.array([[1.0, 1.0], [1.0, 1.0]])) == 1


def test_representation_file_roundtrip(tmp_path):
    fx = catalog.get_fixture("petersen_FOR3")
    rep = Representation(fx.d, fx.vectors, "exact")
    path = tmp_path / "petersen.rep"
    write_representation(path, rep)
    back = read_representation(path)
    assert back.mode == "exact"
    assert back.d == 3
    for u, v in zip(rep.vectors, back.vectors):
        assert all((a - b).is_zero() for a, b in zip(u, v))


def test_representation_file_complex_and_float(tmp_path):
    rep = Representation(
        2,
        [
            (Exact.complex_pair(1, 2), Exact.of(Fraction(-3, 4))),
            (Exact.of(0), Exact.complex_pair(0, -1)),
        ],
        "exact",
    )
    path = tmp_path / "cx.rep"
    write_representation(path, rep)
    back = read_representation(path)
    for u, v in zip(rep.vectors, back.vectors):
        assert all((a - b).is_zero() for a, b in zip(u, v))
    fpath = tmp_path / "f.rep"
    write_representation(fpath, rep.to_float())
    fback = read_representation(fpath)
    assert fback.mode == "float"
    assert np.allclose(fback.vectors, rep.to_float().vectors)


def test_representation_invariants():
    with pytest.raises(ValueError):
        Representation(3, [(0, 0, 0)], "exact")  # zero vector
    with pytest.raises(ValueError):
        Representation(3, [(1, 0)], "exact")  # dimension mismatch
    with pytest.raises(ValueError):
        Representation(3, [(1, 0, 0)], "both")  # unknown mode
