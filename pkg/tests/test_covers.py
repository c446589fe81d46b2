"""Homology ranks of abelian covers and Milnor fiber monodromy."""

import random
from fractions import Fraction
from math import comb

import pytest
import yaml

from quasiadj.covers import (
    ORACLE,
    PRINCIPAL,
    betti_branched,
    betti_dict,
    betti_unbranched,
    milnor_dict,
    milnor_fiber,
)
from quasiadj.resolution import cone_over, generic_arrangement

F = Fraction


def test_unbranched_arrangement_exact():
    a4 = generic_arrangement(4, 2)
    table = betti_unbranched(a4, (3, 3, 3, 3), f_mode=ORACLE)
    assert table.ranks == (1, 4, 29)
    assert table.audit["characters"] == 81
    assert table.audit["top_from_nontrivial"] == 26
    assert table.audit["top_from_trivial"] == 3
    assert table.unresolved_trivial
    lower = betti_unbranched(a4, (3, 3, 3, 3), f_mode=PRINCIPAL)
    assert lower.ranks == (1, 4, 27)
    assert lower.ranks[-1] <= table.ranks[-1]


def test_unbranched_low_degrees_are_binomial():
    table = betti_unbranched(generic_arrangement(5, 3), (2, 2, 2, 2, 2))
    assert table.ranks[:3] == (1, 5, 10)


def test_unbranched_one_dimensional_cone():
    table = betti_unbranched(cone_over((2, 3), 2, 3), (6, 6))
    assert table.ranks == (1, 2, 18)


def test_branched_values():
    a4 = generic_arrangement(4, 2)
    assert betti_branched(a4, (1, 1, 1, 1)).ranks == (1, 0, 0)
    for mode in (PRINCIPAL, ORACLE):
        assert betti_branched(a4, (2, 2, 2, 2), f_mode=mode).ranks == (1, 0, 1)
    t3 = betti_branched(a4, (3, 3, 3, 3), f_mode=ORACLE)
    assert t3.ranks == (1, 0, 6)
    assert t3.audit["buckets"]["1,2,3,4"] == 6
    assert betti_branched(cone_over((2, 3), 2, 3), (2, 2)).ranks == (1, 0, 0)


def test_branched_r2_smooth_cover():
    # z^2 = x, w^2 = y: the cover is smooth, no reduced homology anywhere
    table = betti_branched(generic_arrangement(2, 3), (2, 2))
    assert table.ranks == (1, 0, 0, 0)


def test_milnor_arrangement_exact():
    table = milnor_fiber(generic_arrangement(4, 2), 4, f_mode=ORACLE)
    assert table.ranks == (1, 3, 3)
    assert table.multiplicities == {F(1, 4): 1, F(1, 2): 1, F(3, 4): 1}
    assert table.factors == ((2, 1), (4, 1))
    assert table.polynomial_string() == "t^3 + t^2 + t + 1"
    assert table.unresolved_at_1
    lower = milnor_fiber(generic_arrangement(4, 2), 4, f_mode=PRINCIPAL)
    assert lower.factors == table.factors


def test_milnor_cone_exact():
    table = milnor_fiber(cone_over((2, 3), 2, 3), 5)
    assert table.ranks == (1, 1, 12)
    assert table.multiplicities == {F(k, 5): 3 for k in range(1, 5)}
    assert table.factors == ((5, 3),)
    assert table.f_source == PRINCIPAL


def test_milnor_order_one_has_no_nontrivial_eigenvalues():
    table = milnor_fiber(generic_arrangement(4, 2), 1, f_mode=ORACLE)
    assert table.ranks == (1, 3, 0)
    assert table.multiplicities == {}
    assert table.factors == ()
    assert table.polynomial_string() == "1"


def test_lower_bound_mode_can_undercount():
    # the one-branch quadric cone has no face data at bound 0, so the
    # principal estimate at -1 is 0 even though the true value is positive
    table = milnor_fiber(cone_over((2,), 1, 0), 2)
    assert table.f_source == PRINCIPAL
    assert table.multiplicities[F(1, 2)] == 0


def test_mode_validation():
    a4 = generic_arrangement(4, 2)
    with pytest.raises(ValueError):
        betti_unbranched(a4, (2, 2, 2, 2), f_mode="guess")
    with pytest.raises(ValueError):
        betti_unbranched(a4, (2, 2), f_mode=PRINCIPAL)  # m arity
    with pytest.raises(ValueError, match="generic arrangements"):
        betti_unbranched(cone_over((2, 3), 2, 3), (2, 2), f_mode=ORACLE)


def test_tables_serialize():
    a4 = generic_arrangement(4, 2)
    doc = yaml.safe_dump(betti_dict(betti_unbranched(a4, (2, 2, 2, 2))))
    assert yaml.safe_load(doc)["ranks"] == [1, 4, 8]
    mdoc = yaml.safe_dump(milnor_dict(milnor_fiber(a4, 2)))
    assert yaml.safe_load(mdoc)["unresolved_at_1"] is True


def test_cover_rank_properties_randomized():
    rng = random.Random(777)
    for _ in range(1000):
        r = rng.randint(1, 4)
        n = rng.randint(1, 3)
        degrees = tuple(rng.randint(1, 3) for _ in range(r))
        data = cone_over(degrees, n, rng.randint(0, 1))
        m = tuple(rng.randint(1, 3) for _ in range(r))
        table = betti_unbranched(data, m)
        assert len(table.ranks) == n + 1
        assert table.ranks[:n] == tuple(comb(r, p) for p in range(n))
        assert table.ranks[n] >= 0
        expected = 1
        for v in m:
            expected *= v
        assert table.audit["characters"] == expected
        branched = betti_branched(data, m)
        assert branched.ranks[0] == 1
        assert all(v == 0 for v in branched.ranks[1:n])
        assert branched.ranks[n] >= 0


def test_oracle_dominates_principal_property():
    rng = random.Random(888)
    for _ in range(1000):
        r = rng.randint(2, 4)
        n = rng.randint(1, r - 1)
        data = generic_arrangement(r, n)
        m = tuple(rng.randint(1, 3) for _ in range(r))
        upper = betti_unbranched(data, m, f_mode=ORACLE)
        lower = betti_unbranched(data, m, f_mode=PRINCIPAL)
        assert lower.ranks[-1] <= upper.ranks[-1]
        assert lower.ranks[:-1] == upper.ranks[:-1]
