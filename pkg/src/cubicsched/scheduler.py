"""Scheduling unit jobs on three uniform machines under a cubic conflict graph.

All quantities (speeds, ideal loads, makespans) are exact ``Fraction`` values.
Loads are returned in machine order ``M1, M2, M3`` with ``s1 >= s2 >= s3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .coloring import (
    Coloring,
    bipartize,
    brooks_three_coloring,
    equitable_clw,
    equitable_two_coloring,
    greedy_independent_set,
    modified_clw,
    residual,
    split_bipartition,
)
from .errors import (
    ComponentExcluded,
    ExcludedGraph,
    Infeasible,
    InputError,
    NoFeasibleCandidate,
    NotBicubic,
    NotTricubic,
    SearchExhausted,
    TargetUnreachable,
    Unbalanceable,
    UnsupportedSpeeds,
    UnsupportedStructure,
)
from .graph import (
    Chromatic,
    CubicGraph,
    bipartition,
    classify,
    components,
    is_k33,
    is_prism,
    k33,
    prism,
)


@dataclass(frozen=True)
class MachineSpeeds:
    s1: Fraction
    s2: Fraction
    s3: Fraction

    def __post_init__(self):
        for name in ("s1", "s2", "s3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if min(self.s1, self.s2, self.s3) <= 0:
            raise InputError("machine speeds must be positive")
        if not self.s1 >= self.s2 >= self.s3:
            raise InputError(f"speeds must satisfy s1 >= s2 >= s3, got {self.text()}")

    @classmethod
    def parse(cls, text: str) -> "MachineSpeeds":
        """Parse ``"s1,s2,s3"`` where each entry is an integer or ``p/q``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise InputError(f"expected three comma-separated speeds, got {text!r}")
        try:
            values = [Fraction(p) for p in parts]
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse speeds {text!r}") from None
        return cls(*values)

    @property
    def total(self) -> Fraction:
        return self.s1 + self.s2 + self.s3

    def __iter__(self):
        return iter((self.s1, self.s2, self.s3))

    def scaled(self, factor) -> "MachineSpeeds":
        f = Fraction(factor)
        return MachineSpeeds(self.s1 * f, self.s2 * f, self.s3 * f)

    def text(self) -> str:
        return ",".join(fraction_text(s) for s in (self.s1, self.s2, self.s3))


def fraction_text(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Schedule:
    loads: tuple[frozenset[int], frozenset[int], frozenset[int]]
    makespan: Fraction
    route: str = field(default="", compare=False)

    @property
    def sizes(self) -> tuple[int, int, int]:
        return tuple(len(x) for x in self.loads)


def makespan(loads: Sequence, speeds: MachineSpeeds) -> Fraction:
    """``max_i |load_i| / s_i``; loads may be job collections or plain counts."""
    counts = [x if isinstance(x, int) else len(x) for x in loads]
    return max(Fraction(c) / s for c, s in zip(counts, speeds))


def profile_makespan(sizes: Iterable[int], speeds: MachineSpeeds) -> Fraction:
    """Makespan when the largest class goes to the fastest machine, and so on."""
    return makespan(sorted(sizes, reverse=True), speeds)


def _make(loads, speeds, route) -> Schedule:
    loads = tuple(frozenset(x) for x in loads)
    return Schedule(loads, makespan(loads, speeds), route)


# -- load targets -------------------------------------------------------------


@dataclass(frozen=True)
class LoadTargets:
    n: int
    ideal: tuple[Fraction, Fraction, Fraction]
    rounded_candidates: tuple[tuple[int, int, int], ...]
    chosen: tuple[int, int, int]
    n_star: Optional[int] = None
    fast_regime: bool = False


def _floor(x: Fraction) -> int:
    return math.floor(x)


def _ceil(x: Fraction) -> int:
    return math.ceil(x)


def round_candidates(targets: LoadTargets, mode: str = "bicubic") -> list[tuple[int, int, int]]:
    n = targets.n
    n1, n2, _ = targets.ideal
    firsts = [(_floor(n1), _ceil(n2)), (_ceil(n1), _floor(n2))]
    if mode == "bicubic":
        firsts += [(_ceil(n1), _ceil(n2)), (_floor(n1), _floor(n2))]
    elif mode != "tricubic":
        raise ValueError(f"unknown mode {mode!r}")
    out = []
    for a, b in firsts:
        triple = (a, b, n - a - b)
        if min(triple) < 0 or triple in out:
            continue
        if mode == "bicubic" and 2 * max(triple) > n:
            continue
        out.append(triple)
    if not out:
        raise NoFeasibleCandidate(f"every rounding of {targets.ideal} is infeasible")
    return out


def _balanced(n: int, first: int) -> tuple[int, int, int]:
    rest = n - first
    return (first, (rest + 1) // 2, rest // 2)


def ideal_loads(n: int, speeds: MachineSpeeds, mode: str = "bicubic") -> LoadTargets:
    """Ideal per-machine counts and the best integer rounding.

    Bicubic mode with ``s1 >= s2 + s3`` saturates ``M1`` with ``n/2`` jobs
    and splits the rest between ``M2`` and ``M3``; both roundings of that
    split are compared.  Otherwise counts are proportional to speed, the
    candidate roundings are compared by makespan, and ties go to the earlier
    candidate.  In tricubic mode each candidate's first entry ``n*`` is
    completed with an even split of the remaining jobs.
    """
    s1, s2, s3 = speeds
    if mode == "bicubic" and s1 >= s2 + s3:
        half = n // 2
        x = Fraction(half) * s2 / (s2 + s3)
        ideal = (Fraction(half), x, Fraction(half) - x)
        cands = []
        for b in (_ceil(x), _floor(x)):
            t = (half, b, half - b)
            if t not in cands:
                cands.append(t)
        chosen = min(cands, key=lambda t: makespan(t, speeds))
        return LoadTargets(n, ideal, tuple(cands), chosen, fast_regime=True)
    s = speeds.total
    ideal = (n * s1 / s, n * s2 / s, n * s3 / s)
    probe = LoadTargets(n, ideal, (), (0, 0, 0))
    cands = round_candidates(probe, mode)
    if mode == "bicubic":
        chosen = min(cands, key=lambda t: profile_makespan(t, speeds))
        return LoadTargets(n, ideal, tuple(cands), chosen)
    legal = [tuple(sorted(_balanced(n, t[0]), reverse=True)) for t in cands]
    best = min(range(len(cands)), key=lambda i: profile_makespan(legal[i], speeds))
    return LoadTargets(n, ideal, tuple(cands), cands[best], n_star=cands[best][0])


# -- special cases ------------------------------------------------------------


def k33_makespan(speeds: MachineSpeeds) -> Fraction:
    s1, s2, s3 = speeds
    return min(max(3 / s1, 2 / s2, 1 / s3), 3 / s2)


def schedule_k33(speeds: MachineSpeeds, g: Optional[CubicGraph] = None) -> Schedule:
    """Better of the ``(3,2,1)`` split and the two-machine ``(3,3)`` split."""
    g = k33() if g is None else g
    if not is_k33(g):
        raise ValueError("graph is not K33")
    left, right = bipartition(g)
    right = sorted(right)
    three = _make((left, right[:2], right[2:]), speeds, "k33")
    two = _make((left, right, ()), speeds, "k33")
    return two if two.makespan < three.makespan else three


def schedule_prism(speeds: MachineSpeeds, g: Optional[CubicGraph] = None) -> Schedule:
    """The prism's only 3-decomposition has profile ``(2,2,2)``."""
    g = prism() if g is None else g
    if not is_prism(g):
        raise ValueError("graph is not the prism")
    col = equitable_clw(g, brooks_three_coloring(g))
    return _make(col.by_size().classes, speeds, "prism")


# -- bicubic ------------------------------------------------------------------


def _bicubic_coloring(g: CubicGraph, target: Sequence[int], fast: bool) -> Coloring:
    if fast:
        return split_bipartition(g, target[1])
    ordered = sorted(target, reverse=True)
    return modified_clw(g, split_bipartition(g, ordered[1]), ordered)


def schedule_bicubic(g: CubicGraph, speeds: MachineSpeeds) -> Schedule:
    cc = classify(g)
    if cc.kind is not Chromatic.BICUBIC:
        raise NotBicubic(f"graph is {cc.kind.value}")
    if cc.components != 1:
        raise UnsupportedStructure("schedule_bicubic needs a connected graph")
    if is_k33(g):
        raise ExcludedGraph("K33 is handled by schedule_k33")
    targets = ideal_loads(g.n, speeds)
    col = _bicubic_coloring(g, targets.chosen, targets.fast_regime)
    route = "bicubic-fast" if targets.fast_regime else "bicubic-clw"
    return _make(col.classes, speeds, route)


def schedule_disconnected_bicubic(g: CubicGraph, speeds: MachineSpeeds) -> Schedule:
    """Per-component splits tracking the global optimal proportions.

    Components are visited in order; each takes the split (one entry per
    machine, none above half its order) whose running totals stay closest to
    the global targets, restricted to splits after which the remaining
    components can still meet the targets exactly.
    """
    cc = classify(g)
    if cc.kind is not Chromatic.BICUBIC:
        raise NotBicubic(f"graph is {cc.kind.value}")
    parts = components(g)
    for h in parts:
        if is_k33(h):
            raise ComponentExcluded("a component is K33")
    n = g.n
    targets = ideal_loads(n, speeds)
    goal = targets.chosen
    if not targets.fast_regime:
        goal = tuple(sorted(goal, reverse=True))
    loads: list[set[int]] = [set(), set(), set()]
    done = [0, 0, 0]
    placed = 0
    left_after = n
    for h in parts:
        m = h.n
        left_after -= m
        half = m // 2
        best = None
        for x1 in range(min(half, goal[0] - done[0]), -1, -1):
            for x2 in range(min(half, m - x1), -1, -1):
                x3 = m - x1 - x2
                x = (x1, x2, x3)
                if x3 > half or x3 < 0:
                    continue
                rem = [goal[k] - done[k] - x[k] for k in range(3)]
                if min(rem) < 0 or 2 * max(rem) > left_after:
                    continue
                dev = sum(
                    abs(Fraction(done[k] + x[k], placed + m) - Fraction(goal[k], n))
                    for k in range(3)
                )
                if best is None or dev < best[0]:
                    best = (dev, x)
        if best is None:
            raise TargetUnreachable(f"no feasible split for a component of order {m}")
        x = best[1]
        col = _bicubic_coloring(h, x, False)
        machines = sorted(range(3), key=lambda k: (-x[k], k))
        for cls, k in zip(col.classes, machines):
            loads[k].update(h.origin[v] for v in cls)
        for k in range(3):
            done[k] += x[k]
        placed += m
    return _make(loads, speeds, "disconnected-bicubic")


# -- tricubic -----------------------------------------------------------------


def schedule_tricubic(g: CubicGraph, speeds: MachineSpeeds) -> Schedule:
    cc = classify(g)
    if cc.kind is not Chromatic.TRICUBIC:
        raise NotTricubic(f"graph is {cc.kind.value}")
    if cc.components != 1:
        raise UnsupportedStructure("disconnected tricubic graphs are not supported")
    if is_prism(g):
        raise ExcludedGraph("the prism is handled by schedule_prism")
    s1, s2, s3 = speeds
    if s2 != s3:
        raise UnsupportedSpeeds("tricubic scheduling requires s2 == s3")
    n = g.n
    indep = greedy_independent_set(g)
    if 5 * len(indep) >= 2 * n:
        try:
            a = bipartize(g, indep)
            b, c = equitable_two_coloring(residual(g, a), host_order=n).classes
        except (SearchExhausted, Unbalanceable):
            return _equitable_schedule(g, speeds, "tricubic-fallback")
        if s1 >= 2 * s2:
            return _make((a, b, c), speeds, "tricubic-fast")
        targets = ideal_loads(n, speeds, "tricubic")
        if targets.n_star < len(a):
            goal = sorted(_balanced(n, targets.n_star), reverse=True)
            try:
                col = modified_clw(g, Coloring.of(a, b, c), goal)
            except TargetUnreachable:
                return _equitable_schedule(g, speeds, "tricubic-fallback")
            return _make(col.classes, speeds, "tricubic-semi")
        return _make((a, b, c), speeds, "tricubic-keep")
    return _equitable_schedule(g, speeds, "tricubic-equitable")


def _equitable_schedule(g: CubicGraph, speeds: MachineSpeeds, route: str) -> Schedule:
    sides = bipartition(g)
    if sides is not None:
        start = Coloring.of(sides[0], sides[1], ())
    else:
        start = brooks_three_coloring(g)
    return _make(equitable_clw(g, start).by_size().classes, speeds, route)


# -- dispatcher -----------------------------------------------------------------


def schedule(g: CubicGraph, speeds: MachineSpeeds) -> Schedule:
    """Route an instance to the matching algorithm; ``Schedule.route`` says which."""
    cc = classify(g)
    if cc.kind is Chromatic.FOUR_CHROMATIC:
        raise Infeasible("infeasible: 4-chromatic (a component is K4)")
    if cc.components > 1:
        if cc.kind is Chromatic.BICUBIC:
            return schedule_disconnected_bicubic(g, speeds)
        raise UnsupportedStructure("disconnected tricubic graphs are not supported")
    if is_k33(g):
        return schedule_k33(speeds, g)
    if is_prism(g):
        return schedule_prism(speeds, g)
    s1, s2, s3 = speeds
    if s1 == s3:
        return _equitable_schedule(g, speeds, "equitable")
    if cc.kind is Chromatic.BICUBIC:
        return schedule_bicubic(g, speeds)
    return schedule_tricubic(g, speeds)
