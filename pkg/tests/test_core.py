from itertools import product

import pytest
from hypothesis import given
import hypothesis.strategies as st

from cyclicpaths.core import (
    Composition,
    LatticePath,
    LatticePoint,
    binomial,
    boundary_x,
    catalan,
    composition_period,
    dominated_by_all_shifts,
    dominates,
    exact,
    exact_div,
    first_bad_step,
    lowest_point_above,
    parse_point,
    point_shift,
    reduce_x,
    reduce_y,
    rightup_corners,
    shift_composition,
    upright_corners,
    weak_compositions,
)
from conftest import compositions, words


def test_binomial_values():
    assert binomial(9, 2) == 36
    assert binomial(4, -1) == 0
    assert binomial(0, 0) == 1
    assert binomial(-1, 0) == 0
    assert binomial(3, 4) == 0
    assert binomial(200, 100) == 90548514656103281165404177077484163874504589675413336841320


def test_catalan_values():
    assert catalan(0) == 1
    assert catalan(3) == 5
    with pytest.raises(ValueError):
        catalan(-1)


def test_catalan_matches_recurrence():
    rec = [1]
    for n in range(30):
        rec.append(sum(rec[i] * rec[n - i] for i in range(n + 1)))
    assert rec[5] == 42
    assert [catalan(n) for n in range(31)] == rec


def test_exact_division_guards():
    assert exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        exact_div(7, 2)
    from fractions import Fraction

    assert exact(Fraction(6, 3)) == 2
    with pytest.raises(ArithmeticError):
        exact(Fraction(3, 2))


def test_points_and_relations():
    p, q = LatticePoint(1, 1), LatticePoint(2, 2)
    assert p.leq(q) and p.lesssim(q) and p.lt(q)
    assert LatticePoint(2, 1).lesssim(LatticePoint(2, 2))
    assert not LatticePoint(2, 1).lt(LatticePoint(2, 2))
    assert not LatticePoint(1, 2).lesssim(LatticePoint(2, 2))
    assert LatticePoint(-1, 1) + LatticePoint(3, 1) == LatticePoint(2, 2)
    assert parse_point("(3,4)") == LatticePoint(3, 4)
    assert str(LatticePoint(-1, 1)) == "(-1,1)"


def test_path_terminus_and_points():
    p = LatticePath("RRUR", LatticePoint(-1, 1))
    assert p.terminus == LatticePoint(2, 2)
    assert [q.as_tuple() for q in p.points()] == [(-1, 1), (0, 1), (1, 1), (1, 2), (2, 2)]
    assert LatticePath("").terminus == LatticePoint(0, 0)
    with pytest.raises(ValueError):
        LatticePath("RXU")


def test_corner_counts():
    assert upright_corners("RURU") == 1
    assert upright_corners("URUR") == 2
    assert rightup_corners("RRUU") == 1
    assert rightup_corners("URUR") == 2
    assert rightup_corners("URUR", virtual=False) == 1
    assert rightup_corners("") == 0


def test_composition_basics():
    a = Composition((1, 2, 3, 2))
    assert (a.m, a.n) == (4, 8)
    assert a[-1] == 2 and a[5] == 2
    assert Composition.parse("1, 2,3") == Composition((1, 2, 3))
    with pytest.raises(ValueError):
        Composition(())
    with pytest.raises(ValueError):
        Composition((1, -1))


def test_shift_composition_values():
    assert shift_composition((1, 2, 3), 1) == Composition((3, 1, 2))
    assert shift_composition((1, 2, 3), 0) == Composition((1, 2, 3))
    assert shift_composition((2, 2, 2), 2) == Composition((2, 2, 2))
    assert shift_composition((1, 2, 3), -1) == Composition((2, 3, 1))


def test_composition_period_values():
    assert composition_period((3, 1, 2, 3, 1, 2)) == 3
    assert composition_period((2, 2, 2)) == 1
    assert composition_period((1, 2, 3, 2)) == 4


def test_boundary_x_values():
    a = (1, 2, 3, 2)
    assert boundary_x(a, 3) == 6
    assert boundary_x(a, 0) == 0
    assert boundary_x(a, 4) == 8
    with pytest.raises(ValueError):
        boundary_x(a, 5)


def test_dominates_values():
    assert dominates((1, 1), LatticePath("RURU"))
    assert not dominates((1, 1), LatticePath("URRU"))
    assert dominates((1, 1), LatticePath(""))
    with pytest.raises(ValueError):
        dominates((1, 1), LatticePath("UUU"))


def test_first_bad_step_values():
    assert first_bad_step((1, 1), LatticePath("URRU")) == (0, LatticePoint(0, 1))
    assert first_bad_step((1, 1), LatticePath("RURU")) is None
    # step 1 lands at (1,1) left of f(1) = 2
    assert first_bad_step((2, 2), LatticePath("RUUR")) == (1, LatticePoint(1, 1))


def test_point_shift_values():
    a = (1, 2, 3, 2)
    assert point_shift(a, (4, 3), 2) == LatticePoint(1, 1)
    assert point_shift(a, (4, 3), 0) == LatticePoint(4, 3)
    assert point_shift(a, (4, 3), 4) == LatticePoint(4, 3)
    with pytest.raises(ValueError):
        point_shift(a, (8, 3), 1)
    with pytest.raises(ValueError):
        point_shift((0, 0), (0, 1), 1)


def test_reductions():
    assert reduce_x(9, 8) == 1 and reduce_x(-1, 8) == 7
    assert reduce_y(4, 4) == 4 and reduce_y(5, 4) == 1 and reduce_y(0, 4) == 4


def test_lowest_point_above():
    a = (1, 2, 3, 2)
    assert lowest_point_above(a, 1) == LatticePoint(1, 2)
    assert lowest_point_above(a, 4) == LatticePoint(4, 3)


def test_weak_compositions_count():
    assert len(list(weak_compositions(6, 3))) == 28
    assert len(list(weak_compositions(0, 4))) == 1
    assert all(sum(a) == 5 for a in weak_compositions(5, 3))


def test_dominated_by_all_shifts():
    assert dominated_by_all_shifts((1, 2, 3), (6, 3))
    assert not dominated_by_all_shifts((1, 2, 3), (2, 1))


@given(compositions(), st.integers(-20, 20), st.integers(-20, 20))
def test_shift_composes(a, i, j):
    assert shift_composition(shift_composition(a, i), j) == shift_composition(a, i + j)


@given(compositions(min_n=1), st.data())
def test_point_shift_composes(a, data):
    x = data.draw(st.integers(0, a.n - 1))
    y = data.draw(st.integers(1, a.m))
    i = data.draw(st.integers(0, 2 * a.m - 1))
    j = data.draw(st.integers(0, 2 * a.m - 1))
    p = LatticePoint(x, y)
    # the second shift is taken relative to the shifted composition
    assert point_shift(shift_composition(a, i), point_shift(a, p, i), j) == point_shift(a, p, i + j)


def test_point_shift_does_not_compose_on_a_fixed_composition():
    a = (1, 2)
    p = LatticePoint(0, 1)
    assert point_shift(a, point_shift(a, p, 1), 1) == LatticePoint(1, 1)
    assert point_shift(a, p, 2) == LatticePoint(0, 1)


@given(compositions())
def test_boundary_monotone(a):
    xs = [boundary_x(a, y) for y in range(a.m + 1)]
    assert xs == sorted(xs) and xs[0] == 0 and xs[-1] == a.n


@given(compositions(), words())
def test_dominates_iff_prefix_counts(a, w):
    if w.count("U") > a.m:
        return
    p = LatticePath(w)
    # at least a_0 + ... + a_d rights before the (d+1)-st up step
    rights, ok, d = 0, True, 0
    for s in w:
        if s == "R":
            rights += 1
        else:
            d += 1
            ok &= rights >= boundary_x(a, d)
    assert dominates(a, p) == ok


def test_dominates_iff_no_bad_step_exhaustive():
    for m in range(1, 8):
        for n in range(0, 9 - m):
            for a in weak_compositions(n, m):
                for length in range(0, min(12, n + m) + 1):
                    for steps in product("RU", repeat=length):
                        w = "".join(steps)
                        if w.count("U") > m or w.count("R") > n:
                            continue
                        p = LatticePath(w)
                        assert dominates(a, p) == (first_bad_step(a, p) is None)


def test_constant_composition_is_a_line():
    for c in range(4):
        for m in range(1, 5):
            a = Composition([c] * m)
            for length in range(c * m + m + 1):
                for steps in product("RU", repeat=length):
                    w = "".join(steps)
                    if w.count("U") > m:
                        continue
                    line = all(q.x >= c * q.y for q in LatticePath(w).points())
                    assert dominates(a, LatticePath(w)) == line
