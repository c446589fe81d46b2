"""Exact rational geometry: forms, integer lattices, and the simplex."""

import random
from fractions import Fraction
from math import gcd

import pytest

from quasiadj.ratgeom import (
    AffineForm,
    HalfspaceSystem,
    Infeasible,
    Unbounded,
    cube_bounds,
    cube_point,
    face_dimension,
    hnf_rows,
    integer_kernel,
    integer_rows,
    lp_feasible_point,
    lp_maximize,
    max_min_coordinate,
    rat,
    rat_vector,
    rational_rank,
    relative_interior_point,
    saturation_basis,
    solve_row_combination,
    span_equations,
)

F = Fraction


def rand_frac(rng, num=6, den=6):
    return F(rng.randint(-num, num), rng.randint(1, den))


def test_rat_coercions():
    assert rat("2/3") == F(2, 3)
    assert rat(5) == 5
    assert rat(F(1, 7)) == F(1, 7)
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(TypeError):
        rat_vector([1, 0.25])


def test_affine_form_value_and_scaling():
    f = AffineForm((F(2), F(3)), F(-1))
    assert f.value((F(1, 2), F(1, 3))) == 1
    assert f.scaled(F(1, 2)).value((F(1, 2), F(1, 3))) == F(1, 2)
    with pytest.raises(ValueError):
        f.value((F(1),))


def test_equation_key_is_scale_invariant():
    rng = random.Random(101)
    for _ in range(1000):
        r = rng.randint(1, 4)
        f = AffineForm(tuple(rand_frac(rng) for _ in range(r)), rand_frac(rng))
        factor = F(rng.randint(1, 9), rng.randint(1, 9))
        if rng.random() < 0.5:
            factor = -factor
        key = f.equation_key()
        assert f.scaled(factor).equation_key() == key
        # primitive integers, first nonzero positive
        g = 0
        for v in key:
            g = gcd(g, v)
        assert g in (0, 1)
        lead = next((v for v in key if v), 0)
        assert lead >= 0


def test_halfspace_system():
    sys_ = HalfspaceSystem(tuple(cube_bounds(2)))
    assert sys_.contains((F(1, 2), F(1, 2)))
    assert not sys_.contains((F(3, 2), F(0)))
    assert sys_.tight_set((F(0), F(1))) == (0, 3)
    with pytest.raises(ValueError):
        HalfspaceSystem((AffineForm((F(1),), F(0)), AffineForm((F(1), F(2)), F(0))))


def test_cube_point_bounds():
    assert cube_point(["1/2", 1]) == (F(1, 2), F(1))
    with pytest.raises(ValueError):
        cube_point([F(3, 2)])


def test_rational_rank_known():
    assert rational_rank([]) == 0
    assert rational_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert rational_rank([[F(1), F(0)], [F(0), F(1)]]) == 2


def test_integer_kernel_orthogonality_property():
    rng = random.Random(202)
    for _ in range(1000):
        width = rng.randint(1, 5)
        nrows = rng.randint(0, 3)
        rows = [[rng.randint(-4, 4) for _ in range(width)] for _ in range(nrows)
                ]
        ker = integer_kernel(rows, width)
        for v in ker:
            for row in rows:
                assert sum(a * b for a, b in zip(row, v)) == 0
        # rank-nullity over Q
        assert len(ker) == width - rational_rank([[F(a) for a in row] for row in rows])


def test_hnf_rows_canonical_property():
    rng = random.Random(303)
    for _ in range(1000):
        width = rng.randint(1, 4)
        nrows = rng.randint(1, 3)
        rows = [[rng.randint(-5, 5) for _ in range(width)] for _ in range(nrows)]
        h = hnf_rows(rows)
        assert hnf_rows([list(v) for v in h]) == h
        # unimodular row mixes leave the lattice, hence the basis, unchanged
        mixed = [list(r) for r in rows]
        rng.shuffle(mixed)
        if len(mixed) > 1:
            i, j = rng.sample(range(len(mixed)), 2)
            factor = rng.randint(-3, 3)
            mixed[i] = [a + factor * b for a, b in zip(mixed[i], mixed[j])]
        if mixed:
            k = rng.randrange(len(mixed))
            mixed[k] = [-a for a in mixed[k]]
        assert hnf_rows(mixed) == h
        # Hermite shape: positive pivots, entries above a pivot reduced
        pivots = []
        for row in h:
            lead = next(i for i, v in enumerate(row) if v)
            assert row[lead] > 0
            pivots.append((lead, row[lead]))
        for upper in range(len(h)):
            for lower in range(upper + 1, len(h)):
                lead, piv = pivots[lower]
                assert 0 <= h[upper][lead] < piv


def test_saturation_basis_known():
    assert saturation_basis([[F(2), F(4)]], 2) == [(1, 2)]
    assert saturation_basis([[F(2), F(3)]], 2) == [(2, 3)]
    assert saturation_basis([[F(1, 2), F(1, 3)]], 2) == [(3, 2)]
    assert saturation_basis([], 2) == []


def test_saturation_contains_original_rows_property():
    rng = random.Random(404)
    for _ in range(1000):
        width = rng.randint(1, 4)
        rows = [[rand_frac(rng, 4, 3) for _ in range(width)] for _ in range(rng.randint(1, 3))]
        sat = saturation_basis(rows, width)
        ints = integer_rows(rows)
        for row in ints:
            coeffs = solve_row_combination(sat, row)
            assert coeffs is not None
            for c in coeffs:
                assert c.denominator == 1  # saturated lattice holds every integer row


def test_solve_row_combination_property():
    rng = random.Random(505)
    for _ in range(1000):
        width = rng.randint(1, 4)
        nrows = rng.randint(1, 3)
        rows = [[rand_frac(rng, 3, 2) for _ in range(width)] for _ in range(nrows)]
        weights = [rng.randint(-3, 3) for _ in range(nrows)]
        target = [sum(w * rows[i][j] for i, w in enumerate(weights)) for j in range(width)]
        coeffs = solve_row_combination(rows, target)
        assert coeffs is not None
        rebuilt = [sum(c * rows[i][j] for i, c in enumerate(coeffs)) for j in range(width)]
        assert rebuilt == [F(t) for t in target]
    assert solve_row_combination([[F(1), F(0)]], [F(0), F(1)]) is None
    assert solve_row_combination([], [F(0), F(0)]) == []
    assert solve_row_combination([], [F(1)]) is None


def test_span_equations_point_check():
    eqs = [AffineForm((F(2), F(3)), F(-1))]
    point = (F(1, 2), F(0))
    assert span_equations(eqs, point) == [((2, 3), F(1))]
    with pytest.raises(ValueError):
        span_equations(eqs, (F(0), F(0)))


def test_lp_known_values():
    # max x + y over the triangle x, y >= 0, x + y <= 1
    ineqs = cube_bounds(2) + [AffineForm((F(1), F(1)), F(-1))]
    value, point = lp_maximize([F(1), F(1)], ineqs)
    assert value == 1
    assert sum(point) == 1
    with pytest.raises(Unbounded):
        lp_maximize([F(1)], [], width=1)
    with pytest.raises(Infeasible):
        lp_maximize([F(1)], [AffineForm((F(1),), F(1))], width=1)  # x <= -1, x >= 0


def test_lp_optimality_property():
    # witness is feasible, optimum beats every feasible lattice point
    rng = random.Random(606)
    for _ in range(1000):
        width = rng.randint(1, 3)
        ineqs = cube_bounds(width)
        anchor = tuple(F(rng.randint(0, 3), 3) for _ in range(width))
        for _ in range(rng.randint(0, 2)):
            coeffs = tuple(rand_frac(rng, 3, 2) for _ in range(width))
            slack = F(rng.randint(0, 4), 4)
            const = -(sum(c * a for c, a in zip(coeffs, anchor)) + slack)
            ineqs.append(AffineForm(coeffs, const))  # anchor stays feasible
        objective = [rand_frac(rng, 3, 2) for _ in range(width)]
        value, point = lp_maximize(objective, ineqs)
        for g in ineqs:
            assert g.value(point) <= 0
        assert value == sum(c * p for c, p in zip(objective, point))
        assert value >= sum(c * a for c, a in zip(objective, anchor))
        grid = [F(k, 2) for k in range(3)]
        for probe in _grid_points(grid, width):
            if all(g.value(probe) <= 0 for g in ineqs):
                assert value >= sum(c * p for c, p in zip(objective, probe))


def _grid_points(grid, width):
    if width == 0:
        yield ()
        return
    for rest in _grid_points(grid, width - 1):
        for v in grid:
            yield (v,) + rest


def test_relative_interior_point_simplex():
    ineqs = cube_bounds(3)
    eqs = [AffineForm((F(1), F(1), F(1)), F(-1))]
    point, implicit = relative_interior_point(ineqs, eqs, 3)
    assert implicit == ()
    assert sum(point) == 1
    for g in ineqs:
        assert g.value(point) < 0


def test_relative_interior_detects_implicit_equalities():
    # x <= 1/2 and x >= 1/2 force x = 1/2: both become implicit
    ineqs = cube_bounds(1) + [
        AffineForm((F(1),), F(-1, 2)),
        AffineForm((F(-1),), F(1, 2)),
    ]
    point, implicit = relative_interior_point(ineqs, [], 1)
    assert point == (F(1, 2),)
    assert set(implicit) == {2, 3}


def test_max_min_coordinate():
    eqs = [AffineForm((F(1), F(1), F(1), F(1)), F(-1))]
    assert max_min_coordinate(cube_bounds(4), eqs, 4) == F(1, 4)
    # the plane x1 = 0 pins the minimum at zero
    eqs0 = [AffineForm((F(1), F(0)), F(0))]
    assert max_min_coordinate(cube_bounds(2), eqs0, 2) == 0


def test_face_dimension():
    assert face_dimension([AffineForm((F(1), F(1)), F(-1))], 2) == 1
    assert face_dimension([], 3) == 3


def test_lp_feasible_point_none_when_empty():
    assert lp_feasible_point([AffineForm((F(1),), F(1))], [], 1) is None
