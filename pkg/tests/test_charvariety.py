"""Translated subtori, principal components, and the torus polynomial."""

import random
from fractions import Fraction

import pytest

from quasiadj.charvariety import (
    CharacterPoint,
    PrincipalComponent,
    classify_essential,
    diagonal_character,
    exp_face,
    make_subtorus,
    polynomial_invariant,
    principal_components,
    principal_f,
    project_subtorus,
    subtorus_contains,
    torsion_characters,
)
from quasiadj.quasiadjunction import faces_of_quasiadjunction
from quasiadj.resolution import cone_over, delete_component, generic_arrangement

F = Fraction


def test_character_point_basics():
    chi = CharacterPoint((F(5, 4), F(-1, 3), F(0)))
    assert chi.phases == (F(1, 4), F(2, 3), F(0))
    assert chi.r == 3
    assert chi.order == 12
    assert chi.support() == (0, 1)
    assert not chi.is_trivial()
    assert chi.conjugate().phases == (F(3, 4), F(1, 3), F(0))
    assert chi.restrict((0, 2)).phases == (F(1, 4), F(0))
    assert chi.insert(1, F(1, 2)).phases == (F(1, 4), F(1, 2), F(2, 3), F(0))
    assert diagonal_character(F(1, 2), 2).phases == (F(1, 2), F(1, 2))
    with pytest.raises(TypeError):
        CharacterPoint((0.5,))


def test_torsion_characters_enumeration():
    chars = list(torsion_characters((2, 3)))
    assert len(chars) == 6
    assert len(set(chars)) == 6
    with pytest.raises(ValueError):
        list(torsion_characters((10000, 10000)))  # cap exceeded


def test_make_subtorus_canonicalizes():
    t = make_subtorus(2, [((2, 3), F(5, 2))])
    assert t.equations == (((2, 3), F(1, 2)),)
    assert t.codim == 1 and t.dim == 1
    # a non-saturated exponent lattice describes a disconnected set
    with pytest.raises(ValueError, match="saturated"):
        make_subtorus(2, [((4, 6), F(0))])


def test_subtorus_contains():
    big = make_subtorus(3, [((1, 1, 1), F(0))])
    # {t1 = t3, t2 = t3^-2}: on it t1 t2 t3 = 1 exactly when t3^0 = 1, always
    small = make_subtorus(3, [((1, 0, -1), F(0)), ((0, 1, 2), F(0))])
    assert subtorus_contains(big, small)
    nested_in = make_subtorus(3, [((1, 1, 1), F(0)), ((1, 0, 0), F(1, 2))])
    assert subtorus_contains(big, nested_in)
    assert not subtorus_contains(nested_in, big)
    shifted = make_subtorus(3, [((1, 1, 1), F(1, 2))])
    assert not subtorus_contains(big, shifted)


def test_project_subtorus():
    t = make_subtorus(3, [((1, 0, 0), F(0)), ((0, 1, 1), F(1, 2))])
    assert project_subtorus(t, 0).equations == (((1, 1), F(1, 2)),)
    free = make_subtorus(3, [((1, 1, 0), F(1, 2))])
    with pytest.raises(ValueError, match="not identically 1"):
        project_subtorus(free, 0)


def test_exp_face_on_cone():
    data = cone_over((2, 3), 2, 3)
    faces = faces_of_quasiadjunction(data)
    tori = {exp_face(f, data.r).equations for f in faces}
    # both integer levels exponentiate onto the same torus t1^2 t2^3 = 1
    assert tori == {(((2, 3), F(0)),)}


def test_exp_face_keeps_translation():
    data = cone_over((2, 4), 2, 2)
    tori = {exp_face(f, data.r).equations for f in faces_of_quasiadjunction(data)}
    assert (((1, 2), F(0)),) in tori     # even level
    assert (((1, 2), F(1, 2)),) in tori  # odd level


def test_principal_components_cone():
    comps = principal_components(cone_over((2, 3), 2, 3))
    assert len(comps) == 1
    comp = comps[0]
    assert comp.torus.equations == (((2, 3), F(0)),)
    assert comp.k == 3 and comp.l == 1
    assert comp.contributions == ((1, 1), (1, 3))


def test_principal_components_arrangement():
    comps = principal_components(generic_arrangement(4, 2))
    assert len(comps) == 1
    assert comps[0].torus.equations == (((1, 1, 1, 1), F(0)),)
    assert comps[0].k == 1


def test_eigenvalue_points_of_one_variable_cone():
    comps = principal_components(cone_over((6,), 1, 3))
    table = {c.torus.equations[0][1]: c.k for c in comps}
    assert table == {F(1, 6): 4, F(1, 3): 3, F(1, 2): 2, F(2, 3): 1}


def test_principal_f_values():
    a4 = generic_arrangement(4, 2)
    comps = principal_components(a4)
    assert principal_f(diagonal_character(F(1, 4), 4), comps) == 1
    assert principal_f(CharacterPoint((F(1, 2), F(1, 2), F(0), F(0))), comps) == 1
    assert principal_f(CharacterPoint((F(1, 2), F(0), F(0), F(0))), comps) == 0
    assert principal_f(CharacterPoint((F(0),) * 4), comps) == 1  # trivial lies on the torus


def test_polynomial_invariant_exact():
    assert str(polynomial_invariant(principal_components(generic_arrangement(4, 2)), 4)) == "t1*t2*t3*t4 - 1"
    assert str(polynomial_invariant(principal_components(cone_over((2, 3), 2, 0)), 2)) == "t1^2*t2^3 - 1"
    cubed = polynomial_invariant(principal_components(cone_over((2, 3), 2, 3)), 2)
    base = polynomial_invariant(principal_components(cone_over((2, 3), 2, 0)), 2)
    assert cubed == base ** 3


def test_polynomial_invariant_galois_closure():
    # components at +1 and -1 of t1 t2^2 with k = 3 and 6
    poly = polynomial_invariant(principal_components(cone_over((2, 4), 2, 2)), 2)
    t1t2sq_plus = "t1*t2^2 + 1"
    factors = {}
    comps = principal_components(cone_over((2, 4), 2, 2))
    ks = {c.torus.equations[0][1]: c.k for c in comps}
    assert ks == {F(0): 3, F(1, 2): 6}
    # (v + 1)^6 (v - 1)^3 with v = t1 t2^2, exactly
    from quasiadj.cyclotomic import LaurentPoly

    v = LaurentPoly.monomial((1, 2), 1)
    one = LaurentPoly.constant(2, 1)
    assert poly == ((v + one) ** 6 * (v - one) ** 3).normalized()


def test_polynomial_invariant_needs_codimension_one():
    point = make_subtorus(2, [((1, 0), F(1, 2)), ((0, 1), F(1, 2))])
    comp = PrincipalComponent(torus=point, k=1, l=1, contributions=((1, 1),))
    with pytest.raises(ValueError):
        polynomial_invariant([comp], 2)


def test_classify_essential():
    rep = classify_essential(cone_over((1, 1, 1, 1), 2, 0))
    assert len(rep.essential) == 1 and not rep.nonessential
    rep2 = classify_essential(cone_over((2, 3, 4), 2, 0))
    assert len(rep2.essential) == 1 and not rep2.nonessential


def test_containment_properties_randomized():
    rng = random.Random(444)
    comps = principal_components(generic_arrangement(4, 2))
    big = make_subtorus(3, [((1, 1, 1), F(0))])
    cases = 0
    while cases < 1000:
        phases = tuple(F(rng.randint(0, 5), rng.choice((1, 2, 3, 4, 6))) for _ in range(4))
        chi = CharacterPoint(phases)
        # containment is conjugation-symmetric for these self-conjugate tori
        for comp in comps:
            assert comp.contains(chi) == comp.contains(chi.conjugate())
            assert comp.contains(chi) == (sum(chi.phases) % 1 == 0)
        chi3 = CharacterPoint(phases[:3])
        assert big.contains(chi3) == (sum(chi3.phases) % 1 == 0)
        cases += 1


def test_slice_consistency_after_deletion():
    # sub-family components extended by phase 0 stay inside full components
    data = cone_over((2, 3, 4), 2, 0)
    full = principal_components(data)
    for index in range(data.r):
        sub = delete_component(data, index)
        for comp in principal_components(sub):
            for chi in torsion_characters((4,) * sub.r):
                if not comp.contains(chi):
                    continue
                extended = chi.insert(index, F(0))
                assert any(c.contains(extended) for c in full)
