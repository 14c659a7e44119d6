"""graph6, edge-list, JSON, and DOT serialization."""

import pytest

from lirdec.decomposition import BB, RB, RR, Decomposition
from lirdec.graph_io import (
    Graph6Error,
    decomposition_from_json,
    decomposition_to_dot,
    decomposition_to_json,
    parse_edge_list,
    parse_graph6,
    read_graph6_lines,
    to_graph6,
)
from lirdec.graphs import SimpleGraph, cycle_graph, double, path_graph

from oracle import random_connected_graph
import random


def test_known_graph6_strings():
    # hand-computed from the published format: 63-offset, upper-triangle bits
    assert to_graph6(cycle_graph(3)) == "Bw"  # K3: bits 111000 -> 56+63='w'
    assert to_graph6(path_graph(3)) == "Bg"  # P3 edges 01,12: bits 101000
    k3 = parse_graph6("Bw")
    assert k3.n == 3 and set(k3.edges) == {(0, 1), (0, 2), (1, 2)}


def test_graph6_header_is_stripped():
    g = parse_graph6(">>graph6<<Bw")
    assert g.m == 3


def test_graph6_round_trip_random():
    rng = random.Random(5)
    for _ in range(40):
        g = random_connected_graph(rng.randrange(1, 12), rng.randrange(0, 8), rng)
        assert parse_graph6(to_graph6(g)) == g


def test_graph6_round_trip_boundaries():
    # single vertex, and the 62-vertex emission ceiling
    assert to_graph6(SimpleGraph(1, [])) == "@"
    big = cycle_graph(62)
    assert parse_graph6(to_graph6(big)) == big
    with pytest.raises(ValueError, match="62"):
        to_graph6(cycle_graph(63))


def test_graph6_large_n_parse():
    # 3-byte size form: '~' prefix
    text = "~" + chr(63) + chr(64) + chr(63)  # n = 64
    g64 = SimpleGraph(64, [(0, 1)])
    body_bits = 64 * 63 // 2
    chars = (body_bits + 5) // 6
    bits = 1 << (body_bits - 1)  # only the (0,1) bit set
    bits <<= chars * 6 - body_bits
    body = "".join(
        chr(63 + ((bits >> shift) & 0x3F)) for shift in range(chars * 6 - 6, -6, -6)
    )
    parsed = parse_graph6(text + body)
    assert parsed == g64


def test_graph6_matches_reference_implementation():
    nx = pytest.importorskip("networkx")
    rng = random.Random(1)
    for _ in range(120):
        g = random_connected_graph(rng.randrange(1, 40), rng.randrange(0, 30), rng)
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        reference = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert to_graph6(g) == reference


def test_graph6_error_carries_line_number():
    with pytest.raises(Graph6Error, match="line 2"):
        list(read_graph6_lines("Bw\nB"))


def test_graph6_rejects_bad_characters():
    with pytest.raises(Graph6Error):
        parse_graph6("B\x01\x02")


def test_edge_list_parse():
    g = parse_edge_list("0 1\n1 2\n\n# comment\n2 3\n")
    assert g == path_graph(4)
    with pytest.raises(ValueError, match="line 1"):
        parse_edge_list("0 1 2\n")
    with pytest.raises(ValueError, match="empty"):
        parse_edge_list("\n")


def test_decomposition_json_round_trip():
    host = double(cycle_graph(3))
    d = Decomposition(host, 2, {(0, 1): RR, (1, 2): RB, (0, 2): BB})
    text = decomposition_to_json(d)
    back = decomposition_from_json(text)
    assert back == d
    assert decomposition_to_json(back) == text  # byte stable


def test_decomposition_json_three_colors():
    host = double(path_graph(3))
    d = Decomposition(host, 3, {(0, 1): (2, 0, 0), (1, 2): (0, 0, 2)})
    back = decomposition_from_json(decomposition_to_json(d))
    assert back.k == 3 and back.assign[(1, 2)] == (0, 0, 2)


def test_dot_parallel_edges_per_color_unit():
    host = double(path_graph(3))
    d = Decomposition(host, 2, {(0, 1): RR, (1, 2): RB})
    dot = decomposition_to_dot(d)
    assert dot.count('0 -- 1 [color="red"]') == 2
    assert dot.count('1 -- 2 [color="red"]') == 1
    assert dot.count('1 -- 2 [color="blue"]') == 1
    assert dot.startswith("graph decomposition {")


def test_dot_third_color_is_purple():
    host = double(path_graph(3))
    d = Decomposition(host, 3, {(0, 1): (0, 0, 2), (1, 2): (2, 0, 0)})
    assert 'color="purple"' in decomposition_to_dot(d)
