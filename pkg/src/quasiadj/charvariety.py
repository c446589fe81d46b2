"""Principal components of characteristic varieties.

Faces of quasiadjunction exponentiate to translated subtori of the character
torus (C*)^r; a character is recorded by its phase vector (arg / 2 pi, a
tuple of Fractions mod 1) so that every containment question is integer and
rational arithmetic on exponent lattices; no complex numbers appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from .cyclotomic import LaurentPoly, cyclotomic_in_monomial
from .quasiadjunction import FaceOfQuasiadjunction, faces_of_quasiadjunction
from .ratgeom import hnf_rows, rat, saturation_basis, solve_row_combination
from .resolution import ResolutionData, delete_component


def _mod1(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


@dataclass(frozen=True)
class CharacterPoint:
    """A torsion character of Z^r: phases (k_1/m_1, ..., k_r/m_r) mod 1."""

    phases: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "phases", tuple(_mod1(rat(p)) for p in self.phases))

    @property
    def r(self) -> int:
        return len(self.phases)

    @property
    def order(self) -> int:
        return lcm(*(p.denominator for p in self.phases)) if self.phases else 1

    def is_trivial(self) -> bool:
        return all(p == 0 for p in self.phases)

    def conjugate(self) -> "CharacterPoint":
        return CharacterPoint(tuple(_mod1(-p) for p in self.phases))

    def restrict(self, indices) -> "CharacterPoint":
        return CharacterPoint(tuple(self.phases[i] for i in indices))

    def insert(self, index: int, phase) -> "CharacterPoint":
        phases = list(self.phases)
        phases.insert(index, rat(phase))
        return CharacterPoint(tuple(phases))

    def support(self) -> tuple[int, ...]:
        """Coordinates where the character is nontrivial."""
        return tuple(i for i, p in enumerate(self.phases) if p != 0)


def diagonal_character(phase, r: int) -> CharacterPoint:
    return CharacterPoint((rat(phase),) * r)


def torsion_characters(orders, cap: int = 1_000_000):
    """All characters with phases k_i / orders[i]; plain product order."""
    orders = [int(m) for m in orders]
    total = 1
    for m in orders:
        if m < 1:
            raise ValueError("order %d < 1" % m)
        total *= m
    if total > cap:
        raise ValueError("character sweep of size %d exceeds cap %d" % (total, cap))
    for ks in product(*(range(m) for m in orders)):
        yield CharacterPoint(tuple(Fraction(k, m) for k, m in zip(ks, orders)))


@dataclass(frozen=True)
class TranslatedSubtorus:
    """Solution set of prod_i t_i^(v_i) = exp(2 pi i beta) for (v, beta) in
    equations.  The exponent vectors form the Hermite basis of a saturated
    lattice, so the set is a single translate of a connected subtorus."""

    nvars: int
    equations: tuple[tuple[tuple[int, ...], Fraction], ...]

    def __post_init__(self):
        eqs = tuple((tuple(int(c) for c in v), _mod1(rat(b))) for v, b in self.equations)
        object.__setattr__(self, "equations", eqs)
        vectors = [list(v) for v, _ in eqs]
        if vectors:
            if [list(v) for v in hnf_rows(vectors)] != vectors:
                raise ValueError("equations are not a Hermite basis; build with make_subtorus")
            sat = saturation_basis([[Fraction(c) for c in v] for v in vectors], self.nvars)
            if [list(v) for v in sat] != vectors:
                raise ValueError("exponent lattice is not saturated; the set would be disconnected")

    @property
    def codim(self) -> int:
        return len(self.equations)

    @property
    def dim(self) -> int:
        return self.nvars - self.codim

    def contains(self, chi: CharacterPoint) -> bool:
        if chi.r != self.nvars:
            raise ValueError("character arity %d != %d" % (chi.r, self.nvars))
        for v, beta in self.equations:
            if _mod1(sum(Fraction(c) * p for c, p in zip(v, chi.phases))) != beta:
                return False
        return True


def make_subtorus(nvars: int, equations) -> TranslatedSubtorus:
    """Canonicalize generating equations into a Hermite-basis subtorus.

    The generated exponent lattice must already be saturated with phases
    consistent on it; otherwise the solution set is disconnected and not a
    translated subtorus (raise).
    """
    gens = [(tuple(int(c) for c in v), _mod1(rat(b))) for v, b in equations]
    vectors = [list(v) for v, _ in gens]
    basis = hnf_rows(vectors)
    sat = saturation_basis([[Fraction(c) for c in v] for v in vectors], nvars)
    if [list(v) for v in basis] != [list(v) for v in sat]:
        raise ValueError("exponent lattice is not saturated (disconnected solution set)")
    eqs = []
    for w in basis:
        beta = _phase_on(gens, w)
        eqs.append((tuple(w), beta))
    return TranslatedSubtorus(nvars, tuple(eqs))


def _phase_on(gens, w) -> Fraction:
    """Phase of the lattice vector w induced by generating equations."""
    coeffs = solve_row_combination([list(v) for v, _ in gens], list(w))
    if coeffs is None:
        raise ValueError("vector %s outside the generated lattice" % (w,))
    beta = sum(c * b for c, (_, b) in zip(coeffs, gens))
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError("non-integral combination for %s; lattice not saturated" % (w,))
    return _mod1(beta)


def subtorus_contains(outer: TranslatedSubtorus, inner: TranslatedSubtorus) -> bool:
    """inner subset of outer, exactly (lattice inclusion + phase match)."""
    if outer.nvars != inner.nvars:
        raise ValueError("ambient mismatch")
    inner_vectors = [list(v) for v, _ in inner.equations]
    for v, beta in outer.equations:
        coeffs = solve_row_combination(inner_vectors, list(v))
        if coeffs is None:
            return False
        # inner's lattice is saturated, so an integer vector in its span
        # has integer coordinates in the basis
        assert all(c.denominator == 1 for c in coeffs)
        got = _mod1(sum(c * b for c, (_, b) in zip(coeffs, inner.equations)))
        if got != beta:
            return False
    return True


def project_subtorus(torus: TranslatedSubtorus, index: int) -> TranslatedSubtorus:
    """Image under dropping coordinate `index`; requires t_index = 1 on the
    torus (so the projection is again a translated subtorus)."""
    unit = [0] * torus.nvars
    unit[index] = 1
    axis = TranslatedSubtorus(torus.nvars, (((tuple(unit)), Fraction(0)),))
    if not subtorus_contains(axis, torus):
        raise ValueError("t_%d is not identically 1 on the torus" % (index + 1))
    dropped = []
    for v, beta in torus.equations:
        w = list(v[:index]) + list(v[index + 1 :])
        dropped.append((tuple(w), beta))  # phase unchanged: t_index = 1
    return make_subtorus(torus.nvars - 1, dropped)


# ---------------------------------------------------------------------------
# principal components


@dataclass(frozen=True)
class PrincipalComponent:
    """A translated subtorus certified inside V_k, with the jump data that
    produced it: contributions lists the (l, k) label pairs of the faces
    exponentiating onto this torus; k is the largest such k."""

    torus: TranslatedSubtorus
    k: int
    l: int
    contributions: tuple[tuple[int, int], ...]

    def contains(self, chi: CharacterPoint) -> bool:
        return self.torus.contains(chi)


def exp_face(face: FaceOfQuasiadjunction, nvars: int) -> TranslatedSubtorus:
    """Closure of the exponential image: each span equation v . x = beta
    becomes prod t_i^(v_i) = exp(2 pi i beta)."""
    return TranslatedSubtorus(nvars, tuple((v, _mod1(beta)) for v, beta in face.span))


def principal_components(data: ResolutionData, faces=None) -> list[PrincipalComponent]:
    if faces is None:
        faces = faces_of_quasiadjunction(data)
    by_torus: dict[TranslatedSubtorus, list[tuple[int, int]]] = {}
    order: list[TranslatedSubtorus] = []
    for face in faces:
        torus = exp_face(face, data.r)
        if torus not in by_torus:
            by_torus[torus] = []
            order.append(torus)
        for l, k in sorted(face.labels.items()):
            by_torus[torus].append((l, k))
    out = []
    for torus in order:
        contributions = tuple(sorted(set(by_torus[torus])))
        k = max(c[1] for c in contributions)
        l = min(c[0] for c in contributions if c[1] == k)
        out.append(PrincipalComponent(torus, k, l, contributions))
    return out


def principal_f(chi: CharacterPoint, components) -> int:
    """max k over principal components containing chi (0 if none): a lower
    bound for the eigenspace-dimension function f."""
    best = 0
    for comp in components:
        if comp.k > best and comp.contains(chi):
            best = comp.k
    return best


# ---------------------------------------------------------------------------
# essential vs nonessential components


@dataclass(frozen=True)
class EssentialityReport:
    essential: tuple[PrincipalComponent, ...]
    nonessential: tuple[tuple[PrincipalComponent, int, PrincipalComponent], ...]


def classify_essential(
    data: ResolutionData, components=None, sub_components: dict | None = None
) -> EssentialityReport:
    """Split components into essential ones and those arising from a proper
    subunion: torus inside {t_i = 1} with its projection inside a component
    of the data with branch i deleted."""
    if components is None:
        components = principal_components(data)
    if sub_components is None:
        sub_components = {}
        for i in range(data.r):
            if data.r == 1:
                break
            try:
                sub = delete_component(data, i)
            except Exception:
                continue
            sub_components[i] = principal_components(sub)
    essential = []
    nonessential = []
    for comp in components:
        witness = None
        for i, subs in sub_components.items():
            unit = [0] * data.r
            unit[i] = 1
            axis = TranslatedSubtorus(data.r, ((tuple(unit), Fraction(0)),))
            if not subtorus_contains(axis, comp.torus):
                continue
            proj = project_subtorus(comp.torus, i)
            for sub in subs:
                if subtorus_contains(sub.torus, proj):
                    witness = (comp, i, sub)
                    break
            if witness:
                break
        if witness:
            nonessential.append(witness)
        else:
            essential.append(comp)
    return EssentialityReport(tuple(essential), tuple(nonessential))


# ---------------------------------------------------------------------------
# the torus polynomial


def polynomial_invariant(components, nvars: int) -> LaurentPoly:
    """Product over distinct codimension-one components of Phi_N(t^v)^k,
    where the component is {t^v = primitive N-th root}, normalized to a
    genuine Laurent polynomial with positive leading coefficient.

    Components of codimension >= 2 admit no divisorial description; raise.
    """
    factors: dict[tuple, int] = {}
    for comp in components:
        if comp.torus.codim != 1:
            raise ValueError(
                "component of codimension %d has no polynomial divisor" % comp.torus.codim)
        (v, beta), = comp.torus.equations
        order = beta.denominator  # beta = b/N reduced: exp(2 pi i beta) is a primitive N-th root
        key = (v, order)
        factors[key] = max(factors.get(key, 0), comp.k)
    out = LaurentPoly.constant(nvars, 1)
    for (v, order), power in sorted(factors.items()):
        out = out * (cyclotomic_in_monomial(order, v) ** power)
    return out.normalized()


# ---------------------------------------------------------------------------
# serialization


def character_dict(chi: CharacterPoint) -> dict:
    return {"phases": [str(p) for p in chi.phases], "order": chi.order}


def subtorus_dict(torus: TranslatedSubtorus) -> dict:
    return {
        "equations": [{"exponents": list(v), "phase": str(b)} for v, b in torus.equations],
        "dim": torus.dim,
    }


def component_dict(comp: PrincipalComponent) -> dict:
    return {
        "torus": subtorus_dict(comp.torus),
        "k": comp.k,
        "l": comp.l,
        "contributions": [list(c) for c in comp.contributions],
    }
