"""Ideals and faces of quasiadjunction.

For a germ phi and an exceptional component E the controlling inequality is

    a_{1,E}(1 - x_1) + ... + a_{r,E}(1 - x_r)  <=  e_E(phi) + c_E + 1

evaluated at the cube point x_i = (j_i + 1)/m_i of a branching array (j|m).
Strict inequality at every E puts phi in the ideal of quasiadjunction; the
weak version is the logarithmic ideal, and the locus of equality cuts the
faces of quasiadjunction out of the unit cube.  Everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratgeom import (
    AffineForm,
    HalfspaceSystem,
    Infeasible,
    cube_bounds,
    face_dimension,
    max_min_coordinate,
    lp_maximize,
    rational_rank,
    relative_interior_point,
    span_equations,
)
from .resolution import (
    ExceptionalComponent,
    GermBasisElement,
    QuasiArray,
    ResolutionData,
    cone_over,
)


def threshold(exc: ExceptionalComponent, germ: GermBasisElement) -> int:
    """Right-hand side e_E(phi) + c_E + 1 of the adjunction inequality."""
    return germ.valuation(exc.id) + exc.c + 1


def constraint_form(exc: ExceptionalComponent, germ: GermBasisElement) -> AffineForm:
    """The inequality for (exc, germ) in <= 0 normal form.

    value(x) = sum_i a_i (1 - x_i) - (e + c + 1), so the coefficient vector
    is -a and the constant is sum(a) - threshold.
    """
    coeffs = tuple(Fraction(-ai) for ai in exc.a)
    return AffineForm(coeffs, Fraction(sum(exc.a) - threshold(exc, germ)))


def region_system(data: ResolutionData, germ: GermBasisElement) -> HalfspaceSystem:
    """All adjunction constraints of one germ plus the cube facets."""
    forms = [constraint_form(exc, germ) for exc in data.exceptional]
    return HalfspaceSystem(tuple(forms + cube_bounds(data.r)))


@dataclass(frozen=True)
class MembershipVerdict:
    in_ideal: bool
    in_log_ideal: bool
    weight: int                       # max incidence fold among all-tight records; 0 unless boundary
    tight_exceptional: tuple[str, ...]
    x: tuple[Fraction, ...]


def _verdict_at(data: ResolutionData, germ: GermBasisElement, x) -> MembershipVerdict:
    values = {exc.id: constraint_form(exc, germ).value(x) for exc in data.exceptional}
    in_log = all(v <= 0 for v in values.values())
    in_ideal = all(v < 0 for v in values.values())
    tight = tuple(sorted(eid for eid, v in values.items() if v == 0))
    weight = 0
    if in_log and not in_ideal:
        tight_set = set(tight)
        weight = max(rec.fold for rec in data.incidence if rec.members <= tight_set)
    return MembershipVerdict(in_ideal, in_log, weight, tight, tuple(x))


def membership(data: ResolutionData, germ, array: QuasiArray) -> MembershipVerdict:
    """Verdict for the germ against the branching array (j|m)."""
    if isinstance(germ, str):
        germ = data.germ(germ)
    if array.r != data.r:
        raise ValueError("array length %d != r = %d" % (array.r, data.r))
    return _verdict_at(data, germ, array.x_point())


def multiplier_ideal_membership(data: ResolutionData, germ, gamma) -> bool:
    """phi in J(D_gamma): e_E(phi) + c_E + 1 > sum_i a_{i,E} gamma_i at every E.

    Independent of the cube machinery on purpose; the identity with
    membership(...) under gamma_i = 1 - (j_i + 1)/m_i is a test target.
    """
    if isinstance(germ, str):
        germ = data.germ(germ)
    gamma = [Fraction(g) if not isinstance(g, float) else None for g in gamma]
    if None in gamma:
        raise TypeError("floating point weight rejected")
    if len(gamma) != data.r:
        raise ValueError("gamma length %d != r = %d" % (len(gamma), data.r))
    for exc in data.exceptional:
        load = sum(Fraction(ai) * gi for ai, gi in zip(exc.a, gamma))
        if not load < germ.valuation(exc.id) + exc.c + 1:
            return False
    return True


def quotient_dims(data: ResolutionData, x) -> dict[int, int]:
    """Count germ basis elements of each positive weight at the cube point x.

    The count for weight l is the contribution dim A_{l-1}(log)/A_l(log)
    style jump the face labels record (exact for a germ basis, which the
    builtin monomial families provide).
    """
    out: dict[int, int] = {}
    for germ in data.germs:
        w = _verdict_at(data, germ, x).weight
        if w > 0:
            out[w] = out.get(w, 0) + 1
    return out


def weight_witnesses(data: ResolutionData, x) -> dict[int, tuple[str, ...]]:
    out: dict[int, list[str]] = {}
    for germ in data.germs:
        w = _verdict_at(data, germ, x).weight
        if w > 0:
            out.setdefault(w, []).append(germ.label)
    return {l: tuple(labels) for l, labels in out.items()}


# ---------------------------------------------------------------------------
# faces


@dataclass(frozen=True)
class FaceOfQuasiadjunction:
    """One face: a boundary piece of some germ's adjunction region.

    span holds the canonical integer equations (v, beta) of the affine hull;
    tight the defining germ constraints that vanish on the face; ambient the
    full inequality system (all contributing germs' constraints plus cube
    facets) so that containment can be tested exactly.
    """

    span: tuple[tuple[tuple[int, ...], Fraction], ...]
    tight: tuple[AffineForm, ...]
    ambient: HalfspaceSystem
    dim: int
    sample: tuple[Fraction, ...]
    labels: dict[int, int]
    witnesses: dict[int, tuple[str, ...]]
    germ_labels: tuple[str, ...]

    def contains(self, x) -> bool:
        if any(f.value(x) != 0 for f in self.tight):
            return False
        for v, beta in self.span:
            if sum(Fraction(c) * Fraction(p) for c, p in zip(v, x)) != beta:
                return False
        return self.ambient.contains(x)


class _Candidate:
    __slots__ = ("span", "eqs", "ineqs", "sample", "tight_keys", "tight_forms", "germs")

    def __init__(self, span, eqs, ineqs, sample, tight_forms, germ_label):
        self.span = span
        self.eqs = list(eqs)
        self.ineqs = list(ineqs)
        self.sample = sample
        self.tight_keys = {f.equation_key() for f in tight_forms}
        self.tight_forms = list(tight_forms)
        self.germs = [germ_label]


def _same_face(a: _Candidate, b: _Candidate, r: int) -> bool:
    """Exact set equality of two candidates with equal affine span."""
    for first, second in ((a, b), (b, a)):
        for g in second.ineqs:
            try:
                opt, _ = lp_maximize(g.coeffs, first.ineqs, first.eqs, r)
            except Infeasible:  # pragma: no cover - candidates are feasible
                return False
            if opt + g.const > 0:
                return False
    return True


def faces_of_quasiadjunction(data: ResolutionData) -> list[FaceOfQuasiadjunction]:
    """All faces of quasiadjunction of the union, merged across germs.

    A candidate is kept only if it carries a point with every coordinate
    strictly positive: realizable branching parameters (j_i+1)/m_i never
    vanish, so boundary pieces inside the coordinate hyperplanes bound no
    actual jump.
    """
    r = data.r
    cube = cube_bounds(r)
    nexc = len(data.exceptional)
    buckets: dict[tuple, list[_Candidate]] = {}
    order: list[tuple] = []
    for germ in data.germs:
        forms = [constraint_form(exc, germ) for exc in data.exceptional]
        for mask in range(1, 1 << nexc):
            tight_idx = [i for i in range(nexc) if mask >> i & 1]
            loose_idx = [i for i in range(nexc) if not mask >> i & 1]
            eqs = [forms[i] for i in tight_idx]
            ineqs = [forms[i] for i in loose_idx] + cube
            try:
                sample, implicit = relative_interior_point(ineqs, eqs, r)
            except Infeasible:
                continue
            if any(k < len(loose_idx) for k in implicit):
                continue  # not tight-closed; the closed mask meets the same set
            if max_min_coordinate(ineqs, eqs, r) <= 0:
                continue  # no strictly positive point
            cube_eqs = [ineqs[k] for k in implicit]
            span = tuple(span_equations(eqs + cube_eqs, sample))
            cand = _Candidate(span, eqs + cube_eqs, ineqs, sample, eqs, germ.label)
            bucket = buckets.setdefault(span, [])
            if not bucket:
                order.append(span)
            for known in bucket:
                if _same_face(known, cand, r):
                    if germ.label not in known.germs:
                        known.germs.append(germ.label)
                    for f in eqs:
                        if f.equation_key() not in known.tight_keys:
                            known.tight_keys.add(f.equation_key())
                            known.tight_forms.append(f)
                    known.ineqs.extend(cand.ineqs[: len(loose_idx)])
                    break
            else:
                bucket.append(cand)
    faces = []
    for span in order:
        for cand in buckets[span]:
            dim = r - rational_rank([[Fraction(c) for c in v] for v, _ in span])
            labels = quotient_dims(data, cand.sample)
            faces.append(
                FaceOfQuasiadjunction(
                    span=span,
                    tight=tuple(cand.tight_forms),
                    ambient=HalfspaceSystem(tuple(dict.fromkeys(cand.ineqs))),
                    dim=dim,
                    sample=cand.sample,
                    labels=labels,
                    witnesses=weight_witnesses(data, cand.sample),
                    germ_labels=tuple(cand.germs),
                )
            )
    faces.sort(key=lambda f: (-f.dim, f.span))
    return faces


# ---------------------------------------------------------------------------
# log canonical threshold


@dataclass(frozen=True)
class LogCanonicalBoundary:
    gamma: Fraction                      # largest t with (t, ..., t) log canonical
    boundary_gamma: tuple[Fraction, ...]  # the diagonal boundary weight vector
    face: FaceOfQuasiadjunction | None   # face met by the boundary point, if inside the cube

    def contains_gamma(self, gamma_point) -> bool:
        """Whether a weight vector gamma lies on the boundary face (tested in
        cube coordinates x = 1 - gamma)."""
        if self.face is None:
            return False
        x = tuple(Fraction(1) - Fraction(g) for g in gamma_point)
        return self.face.contains(x)


def lct_face(data: ResolutionData, faces=None) -> LogCanonicalBoundary:
    """The unit-germ boundary: gamma* = min_E (c_E + 1) / sum_i a_{i,E}.

    The corresponding cube point is x = 1 - gamma* on the diagonal; when it
    lies in the cube it sits on the face of quasiadjunction cut out by the
    unit germ (the log canonical threshold face).
    """
    unit = data.unit_germ
    gamma = min(Fraction(exc.c + 1, sum(exc.a)) for exc in data.exceptional)
    point = tuple(Fraction(1) - gamma for _ in range(data.r))
    face = None
    if all(0 <= v <= 1 for v in point):
        if faces is None:
            faces = faces_of_quasiadjunction(data)
        for f in faces:
            if unit.label in f.germ_labels and f.contains(point):
                face = f
                break
    return LogCanonicalBoundary(gamma, tuple(gamma for _ in range(data.r)), face)


def faces_stabilized(data: ResolutionData) -> bool:
    """For builtin families: whether raising the germ degree bound by one
    changes the set of faces (compared by affine span and labels)."""
    if data.family is None or data.family[0] != "cone":
        raise ValueError("stabilization check needs family provenance")
    degrees, n, bound = data.family[1], data.family[2], data.family[3]
    here = faces_of_quasiadjunction(data)
    there = faces_of_quasiadjunction(cone_over(degrees, n, bound + 1))
    key = lambda faces: sorted((f.span, tuple(sorted(f.labels.items()))) for f in faces)
    return key(here) == key(there)
