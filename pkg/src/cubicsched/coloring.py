"""Independent sets and colorings of cubic graphs.

The width-reduction machinery works on a mutable :class:`Recolorer` and
exposes immutable :class:`Coloring` values at the API boundary.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    AlreadyMinimalWidth,
    ExcludedGraph,
    IsK4,
    NotBipartite,
    PreconditionTooSmall,
    SearchExhausted,
    TargetUnreachable,
    Unbalanceable,
)
from .graph import (
    CubicGraph,
    _two_color,
    bipartition,
    is_connected,
    is_k33,
)


@dataclass(frozen=True)
class Coloring:
    """Partition of a vertex set into classes (each meant to be independent)."""

    classes: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, *classes: Iterable[int]) -> "Coloring":
        return cls(tuple(frozenset(c) for c in classes))

    @classmethod
    def from_labels(cls, labels: Sequence[int], k: int = 3) -> "Coloring":
        groups: list[set[int]] = [set() for _ in range(k)]
        for v, c in enumerate(labels):
            groups[c].add(v)
        return cls(tuple(frozenset(g) for g in groups))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def width(self) -> int:
        return max(self.sizes) - min(self.sizes)

    @property
    def class_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}

    def is_proper(self, adjacency) -> bool:
        owner = self.class_of
        for v, c in owner.items():
            for u in adjacency[v]:
                if owner.get(u) == c:
                    return False
        return True

    def by_size(self) -> "Coloring":
        """Classes reordered by decreasing size (ties: smallest member first)."""
        order = sorted(self.classes, key=lambda c: (-len(c), min(c, default=-1)))
        return Coloring(tuple(order))

    def padded(self, k: int = 3) -> "Coloring":
        return Coloring(self.classes + (frozenset(),) * (k - len(self.classes)))


def is_independent(g: CubicGraph, members: Iterable[int]) -> bool:
    s = set(members)
    return all(u not in s for v in s for u in g.adjacency[v])


def _check_host(g: CubicGraph) -> None:
    if g.n == 4:
        raise ExcludedGraph("K4 admits no 3-coloring")
    if is_k33(g):
        raise ExcludedGraph("K33 is excluded from width reduction")
    if not is_connected(g):
        raise ExcludedGraph("width reduction needs a connected graph")


# -- Greedy independent set ---------------------------------------------------


def greedy_independent_set(g: CubicGraph) -> frozenset[int]:
    """Repeatedly take a minimum-degree vertex (smallest index) and delete N[v]."""
    n = g.n
    alive = [True] * n
    deg = [3] * n
    buckets = [[] for _ in range(4)]
    for v in range(n):
        buckets[3].append(v)
    for b in buckets:
        heapq.heapify(b)
    chosen = []
    remaining = n
    while remaining:
        for d in range(4):
            b = buckets[d]
            while b and (not alive[b[0]] or deg[b[0]] != d):
                heapq.heappop(b)
            if b:
                v = b[0]
                break
        chosen.append(v)
        doomed = [v] + [u for u in g.adjacency[v] if alive[u]]
        for x in doomed:
            alive[x] = False
            remaining -= 1
        for x in doomed:
            for y in g.adjacency[x]:
                if alive[y]:
                    deg[y] -= 1
                    heapq.heappush(buckets[deg[y]], y)
    return frozenset(chosen)


# -- Brooks coloring ----------------------------------------------------------


def _degenerate_coloring(adjacency, verts, root, labels):
    """Greedy coloring of ``verts`` in reverse BFS order from ``root``.

    Every vertex except the root still has its BFS parent uncolored when its
    turn comes, so at most two colors are blocked.  The root is colored last
    and must have at most two distinct colors around it.
    """
    allowed = set(verts)
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in adjacency[v]:
            if u in allowed and u not in seen:
                seen.add(u)
                order.append(u)
                queue.append(u)
    for v in reversed(order):
        if v in labels:
            continue
        used = {labels[u] for u in adjacency[v] if u in labels}
        free = [c for c in range(3) if c not in used]
        if not free:
            return False
        labels[v] = free[0]
    return True


def _find_bridge(g: CubicGraph) -> Optional[tuple[int, int]]:
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    # iterative DFS tracking parent edge
    disc[0] = low[0] = timer
    stack = [(0, -1, iter(g.adjacency[0]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if u == parent:
                continue
            if disc[u] < 0:
                timer += 1
                disc[u] = low[u] = timer
                stack.append((u, v, iter(g.adjacency[u])))
                advanced = True
                break
            low[v] = min(low[v], disc[u])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                return (parent, v)
    return None


def _connected_without(g: CubicGraph, removed: set[int]) -> bool:
    start = next(v for v in range(g.n) if v not in removed)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.adjacency[v]:
            if u not in removed and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n - len(removed)


def brooks_three_coloring(g: CubicGraph) -> Coloring:
    """Proper 3-coloring of a connected cubic graph other than K4 (Lovasz' order)."""
    if g.n == 4:
        raise IsK4("K4 has chromatic number 4")
    if not is_connected(g):
        raise ExcludedGraph("brooks_three_coloring needs a connected graph")
    labels: dict[int, int] = {}
    bridge = _find_bridge(g)
    if bridge is not None:
        x, y = bridge
        # each side of the bridge has its endpoint at degree 2
        side_x = _reach_without_edge(g, x, bridge)
        side_y = set(range(g.n)) - side_x
        adj = [tuple(u for u in nb if {u, v} != {x, y}) for v, nb in enumerate(g.adjacency)]
        left: dict[int, int] = {}
        right: dict[int, int] = {}
        ok = _degenerate_coloring(adj, side_x, x, left) and _degenerate_coloring(
            adj, side_y, y, right
        )
        assert ok
        if right[y] == left[x]:
            swap = {left[x]: (left[x] + 1) % 3, (left[x] + 1) % 3: left[x]}
            right = {v: swap.get(c, c) for v, c in right.items()}
        labels = {**left, **right}
    else:
        for v in range(g.n):
            a, b, c = g.adjacency[v]
            for u, w in ((a, b), (a, c), (b, c)):
                if w in g.adjacency[u]:
                    continue
                if _connected_without(g, {u, w}):
                    labels = {u: 0, w: 0}
                    rest = set(range(g.n)) - {u, w}
                    _degenerate_coloring(g.adjacency, rest, v, labels)
                    break
            if labels:
                break
    if len(labels) != g.n:
        raise AssertionError("Brooks ordering failed on a connected cubic graph")
    return Coloring.from_labels([labels[v] for v in range(g.n)])


def _reach_without_edge(g, start, edge):
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.adjacency[v]:
            if {u, v} == set(edge) or u in seen:
                continue
            seen.add(u)
            stack.append(u)
    return seen


# -- recoloring engine --------------------------------------------------------


class Recolorer:
    """Mutable 3-coloring with per-vertex neighbor-class counts.

    ``shift(src, dst)`` moves one unit of size from class ``src`` to class
    ``dst`` while keeping the third class's size, using (in order) a direct
    move, a Kempe chain with surplus one, or a two-leg relay through the third
    class.
    """

    def __init__(self, g: CubicGraph, coloring: Coloring):
        self.adj = g.adjacency
        self.n = g.n
        self.cls = [-1] * self.n
        for i, c in enumerate(coloring.padded().classes):
            for v in c:
                self.cls[v] = i
        if -1 in self.cls:
            raise ValueError("coloring does not cover every vertex")
        self.size = [0, 0, 0]
        for c in self.cls:
            self.size[c] += 1
        self.cnt = [[0, 0, 0] for _ in range(self.n)]
        for v in range(self.n):
            for u in self.adj[v]:
                self.cnt[v][self.cls[u]] += 1
            if self.cnt[v][self.cls[v]]:
                raise ValueError("starting coloring is not proper")
        self.heaps = {(x, y): [] for x in range(3) for y in range(3) if x != y}
        for v in range(self.n):
            self._offer(v)

    def _offer(self, v):
        x = self.cls[v]
        for y in range(3):
            if y != x and self.cnt[v][y] == 0:
                heapq.heappush(self.heaps[(x, y)], v)

    def move(self, v, y):
        x = self.cls[v]
        self.cls[v] = y
        self.size[x] -= 1
        self.size[y] += 1
        for u in self.adj[v]:
            cu = self.cnt[u]
            cu[x] -= 1
            cu[y] += 1
            if cu[x] == 0:
                self._offer(u)
        self._offer(v)

    def apply(self, ops):
        for v, _, new in ops:
            self.move(v, new)

    def undo(self, ops):
        for v, old, _ in reversed(ops):
            self.move(v, old)

    def proper(self) -> bool:
        return all(self.cls[u] != self.cls[v] for v in range(self.n) for u in self.adj[v])

    def coloring(self) -> Coloring:
        return Coloring.from_labels(self.cls)

    # candidate primitives; each returns an op list [(v, old, new), ...]

    def direct(self, x, y):
        h = self.heaps[(x, y)]
        while h:
            v = h[0]
            if self.cls[v] == x and self.cnt[v][y] == 0:
                return [(v, x, y)]
            heapq.heappop(h)
        return None

    def directs(self, x, y):
        for v in range(self.n):
            if self.cls[v] == x and self.cnt[v][y] == 0:
                yield [(v, x, y)]

    def chains(self, x, y, surplus=1):
        """Kempe chains of classes x/y with |x part| - |y part| == surplus."""
        seen = set()
        for root in range(self.n):
            if self.cls[root] != x or root in seen:
                continue
            comp = [root]
            seen.add(root)
            i = 0
            while i < len(comp):
                v = comp[i]
                i += 1
                for u in self.adj[v]:
                    if u not in seen and self.cls[u] in (x, y):
                        seen.add(u)
                        comp.append(u)
            d = sum(1 if self.cls[v] == x else -1 for v in comp)
            if d == surplus:
                yield [(v, self.cls[v], y if self.cls[v] == x else x) for v in comp]

    def single(self, x, y):
        ops = self.direct(x, y)
        if ops is None:
            ops = next(self.chains(x, y), None)
        return ops

    def singles(self, x, y):
        yield from self.directs(x, y)
        yield from self.chains(x, y)

    def shift(self, src, dst) -> bool:
        ops = self.single(src, dst)
        if ops is not None:
            self.apply(ops)
            return True
        mid = 3 - src - dst
        for first_pair, second_pair in (((src, mid), (mid, dst)), ((mid, dst), (src, mid))):
            for first in list(self.singles(*first_pair)):
                self.apply(first)
                second = self.single(*second_pair)
                if second is not None:
                    self.apply(second)
                    return True
                self.undo(first)
        return self._search(src, dst)

    def _search(self, src, dst, depth=3) -> bool:
        """Iterative-deepening search over Kempe swaps for the shifted profile."""
        goal = list(self.size)
        goal[src] -= 1
        goal[dst] += 1
        pairs = [(0, 1), (0, 2), (1, 2)]

        def moves():
            for x, y in pairs:
                seen = set()
                for root in range(self.n):
                    if self.cls[root] not in (x, y) or root in seen:
                        continue
                    comp = [root]
                    seen.add(root)
                    i = 0
                    while i < len(comp):
                        v = comp[i]
                        i += 1
                        for u in self.adj[v]:
                            if u not in seen and self.cls[u] in (x, y):
                                seen.add(u)
                                comp.append(u)
                    yield [(v, self.cls[v], y if self.cls[v] == x else x) for v in comp]

        def dfs(level):
            if self.size == goal:
                return True
            if level == 0:
                return False
            for ops in list(moves()):
                self.apply(ops)
                if dfs(level - 1):
                    return True
                self.undo(ops)
            return False

        for limit in range(2, depth + 1):
            if dfs(limit):
                return True
        return False


# -- width reduction ------------------------------------------------------------


def _largest_smallest(sizes):
    largest = max(range(3), key=lambda i: (sizes[i], -i))
    smallest = min((i for i in range(3) if i != largest), key=lambda i: (sizes[i], i))
    return largest, smallest


def decrease_width_by_one(g: CubicGraph, col: Coloring) -> Coloring:
    """Move one vertex of surplus from the largest class to the smallest.

    The middle class keeps its size; class order of ``col`` is preserved.
    """
    _check_host(g)
    col = col.padded()
    if col.width <= 1:
        raise AlreadyMinimalWidth(f"sizes {col.sizes} are already equitable")
    rec = Recolorer(g, col)
    src, dst = _largest_smallest(rec.size)
    if not rec.shift(src, dst):
        raise TargetUnreachable(f"no width-reducing recoloring found from {col.sizes}")
    return rec.coloring()


def equitable_clw(g: CubicGraph, start: Coloring) -> Coloring:
    _check_host(g)
    rec = Recolorer(g, start.padded())
    while max(rec.size) - min(rec.size) > 1:
        src, dst = _largest_smallest(rec.size)
        if not rec.shift(src, dst):
            raise TargetUnreachable(f"width reduction stalled at {tuple(rec.size)}")
    return rec.coloring()


def split_bipartition(g: CubicGraph, b: int) -> Coloring:
    """``(I, B, C')`` with ``B`` the ``b`` smallest-index vertices of ``J``."""
    sides = bipartition(g)
    if sides is None:
        raise NotBipartite("graph has an odd cycle")
    left, right = sides
    right = sorted(right)
    return Coloring.of(left, right[:b], right[b:])


def modified_clw(g: CubicGraph, start: Coloring, target: Sequence[int]) -> Coloring:
    """Recolor ``start`` until the class sizes are exactly ``target``.

    Start classes are matched to target slots by size rank.  Each step moves
    one unit from a class over its target to the emptiest class under its
    target, so a class already on target never changes size.  Returns the
    classes in target order.
    """
    _check_host(g)
    a, b, c = target
    if not (a >= b >= c >= 0) or a + b + c != g.n:
        raise ValueError(f"target {tuple(target)} is not a sorted partition of {g.n}")
    if 2 * a > g.n:
        raise TargetUnreachable(f"class of size {a} exceeds n/2")
    rec = Recolorer(g, start.padded())
    slots = sorted(range(3), key=lambda i: (-rec.size[i], i))
    want = [0, 0, 0]
    for rank, i in enumerate(slots):
        want[i] = target[rank]
    for _ in range(g.n + 1):
        if rec.size == want:
            break
        src = max((i for i in range(3) if rec.size[i] > want[i]),
                  key=lambda i: (rec.size[i] - want[i], -i))
        dst = min((i for i in range(3) if rec.size[i] < want[i]),
                  key=lambda i: (rec.size[i], i))
        if not rec.shift(src, dst):
            raise TargetUnreachable(
                f"width reduction stalled at {tuple(rec.size)} aiming for {tuple(target)}"
            )
    else:
        raise TargetUnreachable(f"iteration cap reached aiming for {tuple(target)}")
    out = rec.coloring()
    return Coloring(tuple(out.classes[i] for i in slots))


# -- bipartization --------------------------------------------------------------


def residual(g: CubicGraph, removed: Iterable[int]) -> dict[int, tuple[int, ...]]:
    """Adjacency of ``g - removed`` keyed by surviving vertex."""
    gone = set(removed)
    return {
        v: tuple(u for u in g.adjacency[v] if u not in gone)
        for v in range(g.n)
        if v not in gone
    }


def _odd_components(g: CubicGraph, members: set[int]) -> list[list[int]]:
    """Components of ``g - members`` that contain an odd cycle."""
    side: dict[int, int] = {}
    bad = []
    for root in range(g.n):
        if root in members or root in side:
            continue
        side[root] = 0
        comp = [root]
        odd = False
        i = 0
        while i < len(comp):
            v = comp[i]
            i += 1
            for u in g.adjacency[v]:
                if u in members:
                    continue
                if u not in side:
                    side[u] = 1 - side[v]
                    comp.append(u)
                elif side[u] == side[v]:
                    odd = True
        if odd:
            bad.append(comp)
    return bad


def bipartize(
    g: CubicGraph,
    members: Iterable[int],
    *,
    seed: int = 0,
    max_rounds: int = 400,
    exhaustive_limit: int = 24,
) -> frozenset[int]:
    """Independent set of the same size whose removal leaves ``g`` bipartite.

    Local search over swaps ``A - {u} + {w}`` that keep ``A`` independent,
    scored by the number of non-bipartite components of ``g - A``; random
    swaps break stalls.  Graphs of order up to ``exhaustive_limit`` fall back
    to enumeration.
    """
    a = set(members)
    k = len(a)
    if 5 * k < 2 * g.n:
        raise PreconditionTooSmall(f"|I| = {k} is below 0.4n = {0.4 * g.n:g}")
    if not is_independent(g, a):
        raise ValueError("members are not independent")
    bad = _odd_components(g, a)
    if not bad:
        return frozenset(a)
    rng = random.Random(seed)
    for _ in range(max_rounds):
        best = None
        for w in sorted(v for comp in bad for v in comp):
            inside = [u for u in g.adjacency[w] if u in a]
            if len(inside) > 1:
                continue
            outs = inside if inside else sorted(a)[:32]
            for u in outs:
                trial = (a - {u}) | {w}
                score = len(_odd_components(g, trial))
                if best is None or score < best[0]:
                    best = (score, u, w)
                if score == 0:
                    break
            if best is not None and best[0] == 0:
                break
        if best is not None and best[0] < len(bad):
            a = (a - {best[1]}) | {best[2]}
        else:
            swaps = _valid_swaps(g, a)
            if not swaps:
                break
            u, w = swaps[rng.randrange(len(swaps))]
            a = (a - {u}) | {w}
        bad = _odd_components(g, a)
        if not bad:
            return frozenset(a)
    if g.n <= exhaustive_limit:
        found = _bipartizing_set_exhaustive(g, k)
        if found is not None:
            return found
    raise SearchExhausted(f"no bipartizing independent set of size {k} found")


def _valid_swaps(g, a):
    out = []
    for w in range(g.n):
        if w in a:
            continue
        inside = [u for u in g.adjacency[w] if u in a]
        if len(inside) == 1:
            out.append((inside[0], w))
    return out


def _bipartizing_set_exhaustive(g: CubicGraph, k: int) -> Optional[frozenset[int]]:
    n = g.n
    chosen: list[int] = []
    blocked = [0] * n

    def rec(start):
        if len(chosen) == k:
            s = set(chosen)
            return frozenset(s) if not _odd_components(g, s) else None
        for v in range(start, n):
            if n - v < k - len(chosen):
                return None
            if blocked[v]:
                continue
            chosen.append(v)
            for u in g.adjacency[v]:
                blocked[u] += 1
            got = rec(v + 1)
            for u in g.adjacency[v]:
                blocked[u] -= 1
            chosen.pop()
            if got is not None:
                return got
        return None

    return rec(0)


# -- equitable 2-coloring of a residual ---------------------------------------


def equitable_two_coloring(
    h: Mapping[int, Sequence[int]], *, host_order: Optional[int] = None
) -> Coloring:
    """Balanced proper 2-coloring ``(B, C)``, ``|B| >= |C|``, of a bipartite graph.

    Non-isolated components are 2-colored by DFS and oriented greedily
    (largest side imbalance first) against the running difference; isolated
    vertices then go to the smaller class.  When ``host_order`` is given, ``h``
    is taken to be a cubic graph of that order minus an independent set and
    the degree-count identity ``d0 = d2 + 2*d3 + 5|A| - 2n`` is checked.
    """
    verts = sorted(h)
    side = _two_color(h, verts)
    if side is None:
        raise NotBipartite("residual graph has an odd cycle")
    if host_order is not None:
        removed = host_order - len(verts)
        d = [0, 0, 0, 0]
        for v in verts:
            d[len(h[v])] += 1
        if d[0] != d[2] + 2 * d[3] + 5 * removed - 2 * host_order:
            raise AssertionError(f"degree counts {d} violate the residual identity")
    isolated = [v for v in verts if not h[v]]
    comps: dict[int, list[int]] = {}
    seen = set()
    for root in verts:
        if root in seen or not h[root]:
            continue
        stack = [root]
        seen.add(root)
        members = []
        while stack:
            v = stack.pop()
            members.append(v)
            for u in h[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps[root] = members
    parts = []
    for root, members in comps.items():
        p = [v for v in members if side[v] == 0]
        q = [v for v in members if side[v] == 1]
        if len(p) < len(q):
            p, q = q, p
        parts.append((p, q))
    parts.sort(key=lambda pq: (-(len(pq[0]) - len(pq[1])), min(pq[0] + pq[1])))
    big: list[int] = []
    small: list[int] = []
    for p, q in parts:
        if len(big) <= len(small):
            big += p
            small += q
        else:
            big += q
            small += p
    for v in isolated:
        if len(big) <= len(small):
            big.append(v)
        else:
            small.append(v)
    if abs(len(big) - len(small)) > 1:
        big, small = _balanced_by_subset_sum(parts, isolated)
    if len(big) < len(small):
        big, small = small, big
    return Coloring.of(big, small)


def _balanced_by_subset_sum(parts, isolated):
    total = sum(len(p) + len(q) for p, q in parts) + len(isolated)
    # tables[i][t] = (previous sum, flipped?) for reaching |B| = t after part i
    tables = []
    reach = {0}
    for p, q in parts:
        table = {}
        for s in sorted(reach):
            for flip, add in ((False, len(p)), (True, len(q))):
                table.setdefault(s + add, (s, flip))
        tables.append(table)
        reach = set(table)
    best = None
    for s in sorted(reach):
        pick = min(max(total // 2, s), s + len(isolated))
        gap = abs(total - 2 * pick)
        if best is None or gap < best[0]:
            best = (gap, s, pick)
    gap, s, pick = best
    if gap > 1:
        raise Unbalanceable(f"best achievable imbalance is {gap}")
    big: list[int] = []
    small: list[int] = []
    for (p, q), table in zip(reversed(parts), reversed(tables)):
        s, flip = table[s]
        big += q if flip else p
        small += p if flip else q
    extra = pick - len(big)
    return big + isolated[:extra], small + isolated[extra:]
