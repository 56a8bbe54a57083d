import itertools

import pytest

from cubicsched.graph import CubicGraph, cube, k33, k4, petersen, prism

# Greedy (smallest-index ties) leaves a triangle {6, 8, 9} in G - I here.
TRIANGLE_RESIDUAL_EDGES = [
    (0, 4), (0, 5), (0, 11), (1, 6), (1, 10), (1, 11), (2, 4), (2, 8), (2, 10),
    (3, 4), (3, 5), (3, 11), (5, 7), (6, 8), (6, 9), (7, 9), (7, 10), (8, 9),
]


def brute_profiles(g):
    """Sorted class-size profiles of every proper 3-coloring, by full enumeration."""
    edges = g.edges()
    out = set()
    for lab in itertools.product(range(3), repeat=g.n):
        if all(lab[u] != lab[v] for u, v in edges):
            out.add(tuple(sorted((lab.count(0), lab.count(1), lab.count(2)), reverse=True)))
    return out


def brute_alpha(g):
    for k in range(g.n, 0, -1):
        for s in itertools.combinations(range(g.n), k):
            ss = set(s)
            if all(u not in ss for v in s for u in g.adjacency[v]):
                return k
    return 0


@pytest.fixture
def triangle_residual_graph():
    return CubicGraph.from_edges(12, TRIANGLE_RESIDUAL_EDGES)


@pytest.fixture(params=["K33", "Prism", "Cube", "Petersen"])
def small_named(request):
    return {"K33": k33, "Prism": prism, "Cube": cube, "Petersen": petersen}[request.param]()


@pytest.fixture
def graphs():
    return {"K4": k4(), "K33": k33(), "Prism": prism(), "Cube": cube(), "Petersen": petersen()}
