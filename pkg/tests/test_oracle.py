import random
from fractions import Fraction as F

import pytest

from cubicsched.errors import BudgetExceeded, Infeasible, SizeMismatch
from cubicsched.graph import Chromatic, cube, k33, k4, petersen, prism, random_cubic
from cubicsched.oracle import (
    OracleBudget,
    chromatic_number,
    exists_semi_equitable,
    independence_number,
    optimal_schedule_exact,
    verify_schedule,
)
from cubicsched.scheduler import MachineSpeeds, Schedule, makespan, profile_makespan, schedule

from conftest import brute_alpha, brute_profiles


def sp(*xs):
    return MachineSpeeds(*xs)


def test_optimal_examples():
    assert optimal_schedule_exact(k33(), sp(2, 1, 1)).makespan == 2
    assert optimal_schedule_exact(prism(), sp(F(4, 3), 1, 1)).makespan == 2
    with pytest.raises(Infeasible):
        optimal_schedule_exact(k4(), sp(1, 1, 1))


def test_optimal_is_valid_and_labelled():
    got = optimal_schedule_exact(petersen(), sp(F(4, 3), 1, 1))
    assert got.route == "oracle" and got.makespan == 3
    assert verify_schedule(petersen(), sp(F(4, 3), 1, 1), got)


def test_independence_examples():
    assert independence_number(k33()) == 3
    assert independence_number(k4()) == 1
    assert independence_number(petersen()) == 4
    assert independence_number(cube()) == 4


def test_independence_against_enumeration():
    for seed in range(10):
        g = random_cubic(14, seed)
        assert independence_number(g) == brute_alpha(g)


def test_semi_equitable_examples():
    ok, wit = exists_semi_equitable(petersen(), (4, 3, 3))
    assert ok and wit.sizes == (4, 3, 3) and wit.is_proper(petersen().adjacency)
    ok, wit = exists_semi_equitable(prism(), (2, 2, 2))
    assert ok and wit.is_proper(prism().adjacency)
    assert exists_semi_equitable(k33(), (4, 1, 1)) == (False, None)


def test_semi_equitable_respects_order():
    ok, wit = exists_semi_equitable(cube(), (2, 4, 2))
    assert ok and wit.sizes == (2, 4, 2)


def test_semi_equitable_size_mismatch():
    with pytest.raises(SizeMismatch):
        exists_semi_equitable(petersen(), (4, 3, 2))
    with pytest.raises(SizeMismatch):
        exists_semi_equitable(petersen(), (5, 5))


def test_semi_equitable_against_enumeration():
    for seed in range(6):
        g = random_cubic(10, seed)
        profiles = brute_profiles(g)
        for a in range(11):
            for b in range(min(a, 10 - a) + 1):
                c = 10 - a - b
                if c > b:
                    continue
                assert exists_semi_equitable(g, (a, b, c))[0] == ((a, b, c) in profiles)


def test_optimal_against_enumeration():
    speeds = [sp(1, 1, 1), sp(2, 1, 1), sp(F(4, 3), 1, 1), sp(3, 2, 1), sp(5, 3, 2)]
    for seed in range(8):
        g = random_cubic(10, seed)
        profiles = brute_profiles(g)
        for s in speeds:
            best = min(profile_makespan(p, s) for p in profiles)
            assert optimal_schedule_exact(g, s).makespan == best


def test_chromatic_number():
    assert chromatic_number(k4()) == 4
    assert chromatic_number(k33()) == 2
    assert chromatic_number(petersen()) == 3
    assert chromatic_number(prism()) == 3


def test_verify_schedule_negatives():
    g, s = cube(), sp(2, 1, 1)
    good = schedule(g, s)
    assert verify_schedule(g, s, good)
    a, b, c = (set(x) for x in good.loads)
    # move a vertex onto a machine holding one of its neighbours
    v = next(iter(b))
    u = next(w for w in g.adjacency[v] if w in a)
    bad = (frozenset(a | {v}), frozenset(b - {v}), frozenset(c))
    assert u in bad[0]
    assert not verify_schedule(g, s, Schedule(bad, makespan(bad, s)))
    assert not verify_schedule(g, s, Schedule(good.loads, good.makespan + 1))
    missing = (frozenset(a), frozenset(b), frozenset(list(c)[1:]))
    assert not verify_schedule(g, s, Schedule(missing, makespan(missing, s)))
    twice = (frozenset(a), frozenset(b | {next(iter(c))}), frozenset(c))
    assert not verify_schedule(g, s, Schedule(twice, makespan(twice, s)))


def test_budget_caps():
    with pytest.raises(BudgetExceeded):
        optimal_schedule_exact(random_cubic(22, 1), sp(1, 1, 1))
    tiny = OracleBudget(node_limit=5)
    with pytest.raises(BudgetExceeded):
        independence_number(petersen(), tiny)
    with pytest.raises(BudgetExceeded):
        exists_semi_equitable(petersen(), (4, 3, 3), tiny)
    with pytest.raises(ValueError):
        OracleBudget(max_vertices=0)


def test_relabel_invariance():
    rng = random.Random(5)
    for seed in range(6):
        g = random_cubic(16, seed, Chromatic.TRICUBIC)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        for s in (sp(F(4, 3), 1, 1), sp(3, 2, 1)):
            assert optimal_schedule_exact(g, s).makespan == optimal_schedule_exact(h, s).makespan
        assert independence_number(g) == independence_number(h)
