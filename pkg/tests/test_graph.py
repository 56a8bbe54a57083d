import pytest

from cubicsched.errors import (
    GenerationExhausted,
    InvalidOrder,
    MalformedInput,
    NotCubic,
    NotSimple,
    OddOrder,
)
from cubicsched.graph import (
    Chromatic,
    CubicGraph,
    bipartition,
    classify,
    components,
    cube,
    disjoint_union,
    format_graph,
    is_connected,
    k33,
    k4,
    named,
    parse_graph,
    petersen,
    prism,
    random_cubic,
)

PRISM_FILE = b"""c triangular prism
p cub 6 9
e 1 2
e 2 3
e 1 3
e 4 5
e 5 6
e 4 6
e 1 4
e 2 5

e 3 6
"""


def test_parse_prism():
    g = parse_graph(PRISM_FILE)
    assert g.n == 6 and g.edge_count == 9
    assert g == prism()


def test_parse_accepts_str():
    assert parse_graph(PRISM_FILE.decode()) == prism()


def test_vertex_of_degree_two_is_not_cubic():
    # vertex 3 in two edges, vertex 6 in four
    text = "p cub 6 9\ne 1 2\ne 2 3\ne 1 3\ne 4 5\ne 5 6\ne 4 6\ne 1 4\ne 2 5\ne 6 1\n"
    with pytest.raises(NotCubic):
        parse_graph(text)


def test_repeated_edge_is_not_simple():
    text = "p cub 6 9\ne 1 2\ne 1 2\ne 1 3\ne 4 5\ne 5 6\ne 4 6\ne 1 4\ne 2 5\ne 3 6\n"
    with pytest.raises(NotSimple):
        parse_graph(text)


def test_loop_is_not_simple():
    with pytest.raises(NotSimple):
        CubicGraph.from_edges(4, [(0, 0), (1, 2), (1, 3), (2, 3), (0, 1), (0, 2)])


def test_odd_order():
    with pytest.raises(OddOrder):
        parse_graph("p cub 3 0\n")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "e 1 2\n",
        "p cub six 9\n",
        "p cub 6 9\ne 1\n",
        "p cub 6 1\ne 1 9\n",
        "p cub 6 2\ne 1 2\n",
        "x 1 2\n",
        "p cub 4 6\np cub 4 6\n",
    ],
)
def test_malformed(text):
    with pytest.raises(MalformedInput):
        parse_graph(text)


def test_roundtrip_is_bit_exact(small_named):
    text = format_graph(small_named)
    assert format_graph(parse_graph(text)) == text
    assert text.splitlines()[0] == f"p cub {small_named.n} {small_named.edge_count}"


def test_format_sorts_edges():
    lines = format_graph(prism()).splitlines()[1:]
    pairs = [tuple(map(int, line.split()[1:])) for line in lines]
    assert pairs == sorted(pairs)
    assert all(u < v for u, v in pairs)


def test_classify_named():
    assert classify(k33()).kind is Chromatic.BICUBIC
    assert classify(cube()).kind is Chromatic.BICUBIC
    assert classify(prism()).kind is Chromatic.TRICUBIC
    assert classify(petersen()).kind is Chromatic.TRICUBIC
    assert classify(k4()).kind is Chromatic.FOUR_CHROMATIC


def test_classify_union_with_k4():
    cc = classify(disjoint_union(cube(), k4()))
    assert cc.kind is Chromatic.FOUR_CHROMATIC and cc.components == 2


def test_bipartition():
    left, right = bipartition(k33())
    assert (len(left), len(right)) == (3, 3)
    assert bipartition(prism()) is None
    left, right = bipartition(cube())
    assert (len(left), len(right)) == (4, 4)
    # cube vertices are bit strings; sides are by parity
    assert left == {v for v in range(8) if bin(v).count("1") % 2 == 0}


def test_bipartition_disconnected_equal_sides():
    left, right = bipartition(disjoint_union(k33(), cube()))
    assert len(left) == len(right) == 7


def test_random_cubic_basic():
    g = random_cubic(8, 1)
    assert g.edge_count == 12 and len(g.edges()) == 12
    assert all(len(nb) == 3 for nb in g.adjacency)
    assert is_connected(g)


def test_random_cubic_orders():
    with pytest.raises(InvalidOrder):
        random_cubic(7, 1)
    with pytest.raises(InvalidOrder):
        random_cubic(4, 1)


def test_random_cubic_bicubic_filter():
    g = random_cubic(8, 1, Chromatic.BICUBIC)
    assert classify(g).kind is Chromatic.BICUBIC
    assert bipartition(g) is not None


def test_random_cubic_tricubic_filter():
    for seed in range(10):
        assert classify(random_cubic(10, seed, Chromatic.TRICUBIC)).kind is Chromatic.TRICUBIC


def test_random_cubic_deterministic():
    for cls in (None, Chromatic.BICUBIC, Chromatic.TRICUBIC):
        assert random_cubic(20, 42, cls).edges() == random_cubic(20, 42, cls).edges()
    assert random_cubic(20, 1).edges() != random_cubic(20, 2).edges()


def test_generation_exhausted(monkeypatch):
    import cubicsched.graph as graph_mod

    monkeypatch.setattr(graph_mod, "MAX_RESAMPLES", 3)
    monkeypatch.setattr(graph_mod, "_simple_or_none", lambda n, pairs: None)
    with pytest.raises(GenerationExhausted):
        random_cubic(8, 1)


def test_components():
    (only,) = components(prism())
    assert only.n == 6 and only.origin == tuple(range(6))
    parts = components(disjoint_union(cube(), cube()))
    assert [h.n for h in parts] == [8, 8]
    assert parts[1].origin == tuple(range(8, 16))
    parts = components(disjoint_union(k33(), prism()))
    assert [h.n for h in parts] == [6, 6]
    assert classify(parts[0]).kind is Chromatic.BICUBIC
    assert classify(parts[1]).kind is Chromatic.TRICUBIC


def test_components_partition_vertices():
    g = disjoint_union(petersen(), cube(), k33())
    parts = components(g)
    seen = sorted(v for h in parts for v in h.origin)
    assert seen == list(range(g.n))
    for h in parts:
        for v, nb in enumerate(h.adjacency):
            assert sorted(h.origin[u] for u in nb) == list(g.adjacency[h.origin[v]])


def test_named_graphs_validate():
    for name in ("K4", "K33", "Prism", "Cube", "Petersen"):
        g = named(name)
        assert sum(len(nb) for nb in g.adjacency) == 3 * g.n
