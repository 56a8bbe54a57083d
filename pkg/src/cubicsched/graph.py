"""Cubic graphs: representation, file format, generation and classification."""

from __future__ import annotations

import enum
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    GenerationExhausted,
    InvalidOrder,
    MalformedInput,
    NotCubic,
    NotSimple,
    OddOrder,
)

MAX_RESAMPLES = 10_000


@dataclass(frozen=True)
class CubicGraph:
    """Simple 3-regular graph on vertices ``0..n-1``.

    ``origin`` is set on graphs produced by :func:`components` and maps each
    local vertex to its index in the parent graph.
    """

    adjacency: tuple[tuple[int, int, int], ...]
    origin: Optional[tuple[int, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.adjacency)
        if n % 2:
            raise OddOrder(f"order {n} is odd")
        for v, nbrs in enumerate(self.adjacency):
            if len(nbrs) != 3:
                raise NotCubic(f"vertex {v + 1} has degree {len(nbrs)}")
            if v in nbrs:
                raise NotSimple(f"loop at vertex {v + 1}")
            if len(set(nbrs)) != 3:
                raise NotSimple(f"parallel edges at vertex {v + 1}")
            for u in nbrs:
                if not 0 <= u < n or v not in self.adjacency[u]:
                    raise NotSimple(f"asymmetric adjacency at vertex {v + 1}")
        if n < 4:
            raise NotCubic(f"no cubic graph has order {n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "CubicGraph":
        """Build from 0-based edges, raising the same errors as the parser."""
        nbrs: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if u == v:
                raise NotSimple(f"loop at vertex {u + 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise NotSimple(f"duplicate edge {key[0] + 1} {key[1] + 1}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        if n % 2:
            raise OddOrder(f"order {n} is odd")
        for v, lst in enumerate(nbrs):
            if len(lst) != 3:
                raise NotCubic(f"vertex {v + 1} has degree {len(lst)}")
        return cls(tuple(tuple(sorted(lst)) for lst in nbrs))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return 3 * self.n // 2

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self.adjacency[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def relabel(self, perm: Sequence[int]) -> "CubicGraph":
        """Return the isomorphic graph with vertex ``v`` renamed ``perm[v]``."""
        return CubicGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


# -- file format ------------------------------------------------------------


def parse_graph(text: bytes | str) -> CubicGraph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise MalformedInput("graph file is not ASCII") from exc
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None or len(parts) != 4 or parts[1] != "cub":
                raise MalformedInput(f"line {lineno}: bad header {line!r}")
            header = (_int(parts[2], lineno), _int(parts[3], lineno))
        elif parts[0] == "e":
            if header is None or len(parts) != 3:
                raise MalformedInput(f"line {lineno}: bad edge record {line!r}")
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (1 <= u <= header[0] and 1 <= v <= header[0]):
                raise MalformedInput(f"line {lineno}: vertex out of range")
            edges.append((u - 1, v - 1))
        else:
            raise MalformedInput(f"line {lineno}: unknown record {line!r}")
    if header is None:
        raise MalformedInput("missing 'p cub' header")
    n, m = header
    if len(edges) != m:
        raise MalformedInput(f"header declares {m} edges, found {len(edges)}")
    return CubicGraph.from_edges(n, edges)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedInput(f"line {lineno}: expected integer, got {tok!r}") from None


def format_graph(g: CubicGraph) -> str:
    lines = [f"p cub {g.n} {g.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- structure ----------------------------------------------------------------


class Chromatic(enum.Enum):
    BICUBIC = "bicubic"
    TRICUBIC = "tricubic"
    FOUR_CHROMATIC = "four-chromatic"


@dataclass(frozen=True)
class ChromaticClass:
    kind: Chromatic
    components: int


def _two_color(adjacency, vertices=None):
    """BFS 2-coloring over ``vertices`` (default: all); None when an odd cycle exists."""
    side: dict[int, int] = {}
    order = range(len(adjacency)) if vertices is None else sorted(vertices)
    allowed = None if vertices is None else set(vertices)
    for root in order:
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in adjacency[v]:
                if allowed is not None and u not in allowed:
                    continue
                if u not in side:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return side


def component_labels(adjacency) -> list[int]:
    """Component id per vertex; ids increase with the component's smallest vertex."""
    n = len(adjacency)
    comp = [-1] * n
    cid = 0
    for root in range(n):
        if comp[root] >= 0:
            continue
        comp[root] = cid
        stack = [root]
        while stack:
            v = stack.pop()
            for u in adjacency[v]:
                if comp[u] < 0:
                    comp[u] = cid
                    stack.append(u)
        cid += 1
    return comp


def is_connected(g: CubicGraph) -> bool:
    labels = component_labels(g.adjacency)
    return max(labels) == 0


def components(g: CubicGraph) -> list[CubicGraph]:
    labels = component_labels(g.adjacency)
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(labels):
        groups.setdefault(c, []).append(v)
    out = []
    for c in sorted(groups):
        verts = groups[c]
        local = {v: i for i, v in enumerate(verts)}
        adj = tuple(tuple(sorted(local[u] for u in g.adjacency[v])) for v in verts)
        origin = tuple(v if g.origin is None else g.origin[v] for v in verts)
        out.append(CubicGraph(adj, origin=origin))
    return out


def classify(g: CubicGraph) -> ChromaticClass:
    labels = component_labels(g.adjacency)
    ncomp = max(labels) + 1
    sizes = [0] * ncomp
    for c in labels:
        sizes[c] += 1
    # a cubic component on 4 vertices is K4
    if 4 in sizes:
        return ChromaticClass(Chromatic.FOUR_CHROMATIC, ncomp)
    if _two_color(g.adjacency) is not None:
        return ChromaticClass(Chromatic.BICUBIC, ncomp)
    return ChromaticClass(Chromatic.TRICUBIC, ncomp)


def bipartition(g: CubicGraph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Sides ``(I, J)`` of a bipartite cubic graph, ``I`` holding vertex 0.

    Every component of a cubic bipartite graph has equal sides, so merging the
    per-component sides keeps ``|I| == |J|``.
    """
    side = _two_color(g.adjacency)
    if side is None:
        return None
    left = frozenset(v for v, s in side.items() if s == 0)
    right = frozenset(v for v, s in side.items() if s == 1)
    return left, right


def is_bipartite_subgraph(adjacency, vertices) -> bool:
    return _two_color(adjacency, vertices) is not None


# -- named graphs -------------------------------------------------------------


def k4() -> CubicGraph:
    return CubicGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k33() -> CubicGraph:
    return CubicGraph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)])


def prism() -> CubicGraph:
    return CubicGraph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


def cube() -> CubicGraph:
    return CubicGraph.from_edges(
        8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    )


def petersen() -> CubicGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return CubicGraph.from_edges(10, outer + spokes + inner)


NAMED = {"K4": k4, "K33": k33, "Prism": prism, "Cube": cube, "Petersen": petersen}


def named(name: str) -> CubicGraph:
    return NAMED[name]()


def disjoint_union(*graphs: CubicGraph) -> CubicGraph:
    edges = []
    offset = 0
    for h in graphs:
        edges += [(u + offset, v + offset) for u, v in h.edges()]
        offset += h.n
    return CubicGraph.from_edges(offset, edges)


def is_k33(g: CubicGraph) -> bool:
    return g.n == 6 and is_connected(g) and bipartition(g) is not None


def is_prism(g: CubicGraph) -> bool:
    # the only connected cubic graphs on 6 vertices are K33 and the prism
    return g.n == 6 and is_connected(g) and bipartition(g) is None


# -- generation ---------------------------------------------------------------


def random_cubic(
    n: int, seed: int, class_filter: Optional[Chromatic] = None
) -> CubicGraph:
    """Connected random cubic graph from the configuration model with rejection."""
    if n % 2 or n < 6:
        raise InvalidOrder(f"order must be even and at least 6, got {n}")
    if class_filter not in (None, Chromatic.BICUBIC, Chromatic.TRICUBIC):
        raise ValueError(f"unsupported class filter {class_filter}")
    rng = random.Random(seed)
    for _ in range(MAX_RESAMPLES):
        if class_filter is Chromatic.BICUBIC:
            half = n // 2
            left = [v for v in range(half) for _ in range(3)]
            right = [v for v in range(half, n) for _ in range(3)]
            rng.shuffle(right)
            pairs = list(zip(left, right))
        else:
            stubs = [v for v in range(n) for _ in range(3)]
            rng.shuffle(stubs)
            pairs = list(zip(stubs[0::2], stubs[1::2]))
        g = _simple_or_none(n, pairs)
        if g is None or not is_connected(g):
            continue
        if class_filter is Chromatic.TRICUBIC and bipartition(g) is not None:
            continue
        return g
    raise GenerationExhausted(
        f"no graph accepted after {MAX_RESAMPLES} resamples (n={n}, filter={class_filter})"
    )


def _simple_or_none(n, pairs):
    seen = set()
    for u, v in pairs:
        if u == v:
            return None
        key = (u, v) if u < v else (v, u)
        if key in seen:
            return None
        seen.add(key)
    return CubicGraph.from_edges(n, seen)
