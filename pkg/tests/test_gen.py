from __future__ import annotations

import pytest

from gupblab.gen import (
    EnumerationSpec,
    EdgeListError,
    Graph6Error,
    OutOfEnvelopeError,
    enumerate_disconnected_regular,
    enumerate_regular,
    graph_from_graph6,
    graph_to_graph6,
    parse_edge_list,
    read_graph6,
    write_graph6,
)
from gupblab.graphs import canonical_form, complete_graph, girth

from helpers import count_regular_classes_bruteforce


def _count(n, r, connectivity="all", girth_min=None):
    spec = EnumerationSpec(n, r, connectivity, girth_min)
    return sum(1 for _ in enumerate_regular(spec))


def test_counts_match_bruteforce_oracle():
    for n, r in [(4, 3), (5, 2), (6, 2), (6, 3), (7, 2), (7, 4), (8, 3), (8, 4)]:
        assert _count(n, r) == count_regular_classes_bruteforce(n, r), (n, r)


def test_small_quartic_counts():
    assert _count(5, 4) == 1
    assert _count(6, 4) == 1
    assert _count(7, 4) == 2
    assert _count(8, 4) == 6
    assert _count(9, 4) == 16


def test_five_vertex_quartic_is_the_clique():
    graphs = list(enumerate_regular(EnumerationSpec(5, 4)))
    assert graphs == [complete_graph(5)]


def test_pairwise_nonisomorphic_families():
    for n, r in [(8, 3), (9, 4), (10, 4)]:
        forms = [canonical_form(g).data for g in enumerate_regular(EnumerationSpec(n, r))]
        assert len(forms) == len(set(forms))


def test_octic_by_complement():
    assert _count(9, 8) == 1
    assert _count(10, 8) == 1
    assert _count(11, 8) == 6
    assert _count(12, 8) == 94
    # the octic-12 family is exactly the complement of the cubic-12 family
    cubic = {canonical_form(g).data for g in enumerate_regular(EnumerationSpec(12, 3))}
    from gupblab.graphs import complement

    octic = {
        canonical_form(complement(g)).data
        for g in enumerate_regular(EnumerationSpec(12, 8))
    }
    assert cubic == octic


def test_disconnected_counts():
    assert sum(1 for _ in enumerate_disconnected_regular(13, 4)) == 8
    assert sum(1 for _ in enumerate_disconnected_regular(14, 4)) == 25
    assert sum(1 for _ in enumerate_disconnected_regular(14, 3)) == 31


def test_connected_plus_disconnected_totals(quartic13_connected, quartic14_connected):
    disc13 = sum(1 for _ in enumerate_disconnected_regular(13, 4))
    assert len(quartic13_connected) + disc13 == 10786
    disc14 = sum(1 for _ in enumerate_disconnected_regular(14, 4))
    assert len(quartic14_connected) + disc14 == 88193


def test_python_fallback_kernel_agrees(monkeypatch):
    import gupblab.gen as gen

    monkeypatch.setattr(gen, "_HAVE_NUMBA", False)
    for (n, r), expected in {(8, 3): 6, (8, 4): 6, (9, 4): 16, (10, 4): 60}.items():
        count = sum(1 for _ in gen.enumerate_regular(gen.EnumerationSpec(n, r)))
        assert count == expected


def test_disconnected_13_type_split():
    sizes = []
    from gupblab.graphs import connected_components

    for g in enumerate_disconnected_regular(13, 4):
        sizes.append(tuple(sorted(len(c) for c in connected_components(g))))
    assert sizes.count((5, 8)) == 6
    assert sizes.count((6, 7)) == 2


def test_girth_filter_during_generation():
    squares_free = list(enumerate_regular(EnumerationSpec(13, 4, "connected", girth_min=4)))
    assert len(squares_free) == 31
    assert all(girth(g) >= 4 for g in squares_free)


def test_envelope_error():
    with pytest.raises(OutOfEnvelopeError):
        next(enumerate_regular(EnumerationSpec(20, 7)))
    with pytest.raises(ValueError):
        EnumerationSpec(7, 3)  # odd product


def test_graph6_round_trip():
    g = graph_from_graph6("D~{")
    assert g.n == 5
    assert graph_from_graph6(graph_to_graph6(g)) == g
    k5 = complete_graph(5)
    assert graph_from_graph6(graph_to_graph6(k5)) == k5
    assert graph_from_graph6(">>graph6<<" + graph_to_graph6(k5)) == k5


def test_graph6_file_round_trip(tmp_path):
    graphs = list(enumerate_regular(EnumerationSpec(8, 3)))
    path = tmp_path / "family.g6"
    assert write_graph6(path, graphs) == len(graphs)
    back = list(read_graph6(path))
    assert back == graphs


def test_graph6_corrupt_byte_reports_offset():
    with pytest.raises(Graph6Error) as err:
        graph_from_graph6("D\x1c....")
    assert "offset" in str(err.value)


def test_edge_list_parsing():
    graphs = parse_edge_list("n=4\n0-1 1-2 2-3 3-0 0-2\n")
    assert len(graphs) == 1
    from gupblab import catalog

    assert graphs[0] == catalog.get_graph("diamond")
    assert parse_edge_list("") == []
    assert parse_edge_list("# only a comment\n") == []


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(EdgeListError) as err:
        parse_edge_list("n=3\n0-0\n")
    assert "line 2" in str(err.value)
    with pytest.raises(EdgeListError):
        parse_edge_list("n=3\n0-1 0-1\n")
    with pytest.raises(EdgeListError):
        parse_edge_list("n=3\n0-7\n")
    with pytest.raises(EdgeListError):
        parse_edge_list("0-1\n")


def test_edge_list_multiple_blocks(tmp_path):
    text = "n=3\n0-1 1-2\n\nn=2\n0-1\n"
    graphs = parse_edge_list(text)
    assert [g.n for g in graphs] == [3, 2]
