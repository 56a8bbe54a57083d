"""Exhaustive ground truth for small instances.

Nothing here shares code with the scheduling or coloring algorithms beyond
the graph type, so the answers can be used to check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .coloring import Coloring
from .errors import BudgetExceeded, Infeasible, SizeMismatch
from .graph import CubicGraph
from .scheduler import MachineSpeeds, Schedule, makespan


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 20
    node_limit: int = 20_000_000

    def __post_init__(self):
        if self.max_vertices <= 0 or self.node_limit <= 0:
            raise ValueError("oracle budget caps must be positive")

    def check(self, g: CubicGraph) -> None:
        if g.n > self.max_vertices:
            raise BudgetExceeded(f"n = {g.n} exceeds the oracle cap of {self.max_vertices}")


DEFAULT_BUDGET = OracleBudget()


class _Counter:
    def __init__(self, limit):
        self.left = limit

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("oracle node limit reached")


def _bfs_order(g: CubicGraph) -> list[int]:
    order, seen = [], set()
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in g.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


def _sorted_makespan(sizes, speeds: MachineSpeeds) -> Fraction:
    return max(Fraction(c) / s for c, s in zip(sorted(sizes, reverse=True), speeds))


def _best_unconstrained(n: int, speeds: MachineSpeeds) -> Fraction:
    """Smallest makespan over all partitions of n, ignoring conflicts."""
    best = None
    for a in range(n + 1):
        for b in range(n - a + 1):
            t = _sorted_makespan((a, b, n - a - b), speeds)
            if best is None or t < best:
                best = t
    return best


def optimal_schedule_exact(
    g: CubicGraph, speeds: MachineSpeeds, budget: OracleBudget = DEFAULT_BUDGET
) -> Schedule:
    """Optimal schedule by backtracking over proper colorings with at most 3 classes.

    Class labels are canonical (a vertex opens at most one new class), and a
    branch is cut once the sorted partial class sizes already reach the
    incumbent makespan.  For a fixed size profile, largest class on fastest
    machine is optimal, so only profiles matter.
    """
    budget.check(g)
    n = g.n
    order = _bfs_order(g)
    adj = g.adjacency
    label = [-1] * n
    sizes = [0, 0, 0]
    floor = _best_unconstrained(n, speeds)
    best: list = [None, None]
    counter = _Counter(budget.node_limit)

    def rec(i, used):
        counter.tick()
        if i == n:
            t = _sorted_makespan(sizes, speeds)
            if best[0] is None or t < best[0]:
                best[0] = t
                best[1] = list(label)
            return best[0] == floor
        v = order[i]
        for c in range(min(used + 1, 3)):
            if any(label[u] == c for u in adj[v]):
                continue
            sizes[c] += 1
            if best[0] is None or _sorted_makespan(sizes, speeds) < best[0]:
                label[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
                label[v] = -1
            sizes[c] -= 1
        return False

    rec(0, 0)
    if best[1] is None:
        raise Infeasible("graph has no proper 3-coloring")
    col = Coloring.from_labels(best[1]).by_size()
    loads = col.classes
    return Schedule(loads, makespan(loads, speeds), "oracle")


def independence_number(g: CubicGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact alpha(G) by branch and bound on bitmasks."""
    budget.check(g)
    nbr = [sum(1 << u for u in g.adjacency[v]) for v in range(g.n)]
    counter = _Counter(budget.node_limit)
    best = [0]

    def rec(alive: int, size: int):
        counter.tick()
        if size + bin(alive).count("1") <= best[0]:
            return
        if not alive:
            best[0] = size
            return
        # minimum-degree vertex within the alive subgraph
        v, deg = -1, 4
        rest = alive
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            d = bin(nbr[u] & alive).count("1")
            if d < deg:
                v, deg = u, d
                if d <= 1:
                    break
            rest ^= low
        bit = 1 << v
        rec(alive & ~(nbr[v] | bit), size + 1)
        if deg > 1:
            rec(alive & ~bit, size)

    rec((1 << g.n) - 1, 0)
    return best[0]


def _independent_sets(g: CubicGraph, k: int, counter: _Counter):
    n = g.n
    chosen: list[int] = []
    blocked = [0] * n

    def rec(start):
        counter.tick()
        if len(chosen) == k:
            yield list(chosen)
            return
        for v in range(start, n - (k - len(chosen)) + 1):
            if blocked[v]:
                continue
            chosen.append(v)
            for u in g.adjacency[v]:
                blocked[u] += 1
            yield from rec(v + 1)
            for u in g.adjacency[v]:
                blocked[u] -= 1
            chosen.pop()

    yield from rec(0)


def _split_residual(g: CubicGraph, removed: set[int], b: int) -> Optional[tuple[list, list]]:
    """Proper 2-coloring of ``g - removed`` with one side of size ``b``, if any."""
    side = {}
    parts = []
    for root in range(g.n):
        if root in removed or root in side:
            continue
        side[root] = 0
        comp = [root]
        i = 0
        while i < len(comp):
            v = comp[i]
            i += 1
            for u in g.adjacency[v]:
                if u in removed:
                    continue
                if u not in side:
                    side[u] = 1 - side[v]
                    comp.append(u)
                elif side[u] == side[v]:
                    return None
        parts.append(([v for v in comp if side[v] == 0], [v for v in comp if side[v] == 1]))
    reach = {0: None}
    layers = []
    for p, q in parts:
        layer = {}
        for s in reach:
            layer.setdefault(s + len(p), (s, 0))
            layer.setdefault(s + len(q), (s, 1))
        layers.append(layer)
        reach = layer
    if b not in reach:
        return None
    one, two = [], []
    s = b
    for (p, q), layer in zip(reversed(parts), reversed(layers)):
        s, flip = layer[s]
        one += q if flip else p
        two += p if flip else q
    return one, two


def exists_semi_equitable(
    g: CubicGraph, sizes: Sequence[int], budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[bool, Optional[Coloring]]:
    """Whether ``g`` has a proper 3-coloring with exactly these class sizes.

    Enumerates independent sets for the largest class and, for each, asks
    whether the rest is bipartite with a side of the right size (per-component
    sides combined by subset sum).  A positive answer carries a verified
    witness with classes in the order of ``sizes``.
    """
    budget.check(g)
    if len(sizes) != 3 or sum(sizes) != g.n or min(sizes) < 0:
        raise SizeMismatch(f"sizes {tuple(sizes)} do not partition {g.n} vertices")
    order = sorted(range(3), key=lambda i: -sizes[i])
    a, b = sizes[order[0]], sizes[order[1]]
    counter = _Counter(budget.node_limit)
    for members in _independent_sets(g, a, counter):
        split = _split_residual(g, set(members), b)
        if split is None:
            continue
        classes = [None, None, None]
        for i, cls in zip(order, (members, split[0], split[1])):
            classes[i] = frozenset(cls)
        witness = Coloring(tuple(classes))
        if not witness.is_proper(g.adjacency) or witness.sizes != tuple(sizes):
            raise AssertionError("oracle produced an invalid witness")
        return True, witness
    return False, None


def chromatic_number(g: CubicGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Smallest k <= 4 with a proper k-coloring, by plain backtracking."""
    budget.check(g)
    order = _bfs_order(g)
    counter = _Counter(budget.node_limit)
    for k in (1, 2, 3):
        label = [-1] * g.n

        def rec(i, used):
            counter.tick()
            if i == g.n:
                return True
            v = order[i]
            for c in range(min(used + 1, k)):
                if all(label[u] != c for u in g.adjacency[v]):
                    label[v] = c
                    if rec(i + 1, max(used, c + 1)):
                        return True
                    label[v] = -1
            return False

        if rec(0, 0):
            return k
    return 4


def verify_schedule(g: CubicGraph, speeds: MachineSpeeds, sched: Schedule) -> bool:
    if len(sched.loads) != 3:
        return False
    seen: set[int] = set()
    for load in sched.loads:
        if seen & set(load):
            return False
        seen |= set(load)
        if any(u in load for v in load for u in g.adjacency[v]):
            return False
    if seen != set(range(g.n)):
        return False
    return Fraction(sched.makespan) == makespan(sched.loads, speeds)
