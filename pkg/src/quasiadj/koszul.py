"""Independent homology oracle for generic arrangements.

The complement of r generic hyperplanes through the origin of C^(n+1)
deformation-retracts to the n-skeleton of a product of circles whose
fundamental group is the quotient of Z^r by the diagonal class.  The chain
complex of the universal abelian cover of that skeleton is the Koszul-style
contraction complex on Lambda^p(Z[t^+-]^(r-1)) truncated at p <= n, with
differential contracting against (t_1 - 1, ..., t_(r-1) - 1).  Evaluating at
a torsion character and taking exact ranks over Q(zeta_N) gives twisted
homology with no reference to the quasiadjunction machinery: this module
only shares the cyclotomic substrate, so it can serve as a second route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb, lcm

from .cyclotomic import CyclotomicField, LaurentPoly, matrix_rank


@dataclass(frozen=True)
class ComplexSpec:
    """Truncated contraction complex: bases[p] are the sorted p-subsets of
    the parameters, differentials[p] the matrix of d_p with one row per
    domain generator (shape dim_p x dim_(p-1))."""

    params: int
    top: int
    bases: tuple[tuple[tuple[int, ...], ...], ...]
    differentials: tuple[tuple[tuple[LaurentPoly, ...], ...], ...]  # index p-1 holds d_p

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)

    def differential(self, p: int):
        """Matrix of d_p: C_p -> C_(p-1) (empty for p outside 1..top)."""
        if 1 <= p <= self.top:
            return self.differentials[p - 1]
        return ()


def _normalize_phases(phases) -> tuple[Fraction, ...]:
    out = []
    for p in phases:
        if isinstance(p, float):
            raise TypeError("floating point phase %r rejected" % p)
        q = Fraction(p)
        out.append(q - (q.numerator // q.denominator))
    return tuple(out)


@lru_cache(maxsize=None)
def truncated_koszul(params: int, top: int) -> ComplexSpec:
    """The contraction complex of Z[Z^params] truncated at degree top.

    d(e_S) = sum over a in S of sign * (t_a - 1) * e_(S minus a), the sign
    alternating with the position of a in S.  The composite of consecutive
    differentials is asserted to vanish identically.
    """
    if params < 0:
        raise ValueError("params %d < 0" % params)
    if not 0 <= top <= params:
        raise ValueError("truncation %d outside [0, %d]" % (top, params))
    bases = tuple(tuple(combinations(range(params), p)) for p in range(top + 1))
    gens = [
        LaurentPoly.variable(i, params) - LaurentPoly.constant(params, 1)
        for i in range(params)
    ]
    zero = LaurentPoly.zero(params)
    diffs = []
    for p in range(1, top + 1):
        index = {s: j for j, s in enumerate(bases[p - 1])}
        matrix = []
        for s in bases[p]:
            row = [zero] * len(bases[p - 1])
            for pos, a in enumerate(s):
                target = s[:pos] + s[pos + 1 :]
                entry = gens[a] if pos % 2 == 0 else -gens[a]
                row[index[target]] = row[index[target]] + entry
            matrix.append(tuple(row))
        diffs.append(tuple(matrix))
    spec = ComplexSpec(params, top, bases, tuple(diffs))
    assert composition_is_zero(spec)
    return spec


def composition_is_zero(spec: ComplexSpec) -> bool:
    """Symbolic check that d_(p-1) after d_p vanishes for every p."""
    for p in range(2, spec.top + 1):
        outer = spec.differential(p)
        inner = spec.differential(p - 1)
        for row in outer:
            for j in range(len(inner[0]) if inner else 0):
                acc = LaurentPoly.zero(spec.params)
                for t, entry in enumerate(row):
                    acc = acc + entry * inner[t][j]
                if not acc.is_zero():
                    return False
    return True


def field_for(phases) -> CyclotomicField:
    phases = _normalize_phases(phases)
    order = lcm(*(p.denominator for p in phases)) if phases else 1
    return CyclotomicField(order)


def evaluate_at(spec: ComplexSpec, phases):
    """Evaluate every differential at the character; returns (field, dict
    p -> matrix of field elements)."""
    phases = _normalize_phases(phases)
    if len(phases) != spec.params:
        raise ValueError("character arity %d != %d parameters" % (len(phases), spec.params))
    field = field_for(phases)
    mats = {}
    for p in range(1, spec.top + 1):
        mats[p] = [
            [entry.evaluate(field, phases) for entry in row] for row in spec.differential(p)
        ]
    return field, mats


def homology_ranks_at(spec: ComplexSpec, phases) -> tuple[int, ...]:
    """Exact Betti numbers of the evaluated complex in degrees 0..top.

    h_p = dim_p - rank d_p - rank d_(p+1); the top degree has no incoming
    differential, so h_top is the kernel rank of d_top.
    """
    field, mats = evaluate_at(spec, phases)
    ranks = {p: matrix_rank(field, mats[p]) if mats[p] else 0 for p in mats}
    out = []
    for p in range(spec.top + 1):
        h = spec.dims[p] - ranks.get(p, 0) - ranks.get(p + 1, 0)
        out.append(h)
    return tuple(out)


def on_support(phases) -> bool:
    """The arrangement support criterion: sum of phases integral."""
    total = sum(_normalize_phases(phases), Fraction(0))
    return total.denominator == 1


def oracle_f(r: int, n: int, phases) -> int:
    """Twisted rank of degree-n homology for the r-hyperplane arrangement.

    Off the support this is 0.  On the support the character factors through
    the (r-1)-parameter skeleton group, and the value is H_n of the evaluated
    skeleton complex: C(r-2, n) at nontrivial characters, C(r-1, n) at the
    trivial one (which is elimination output, not a cover rank; callers keep
    it labeled).
    """
    phases = _normalize_phases(phases)
    if len(phases) != r:
        raise ValueError("character arity %d != r = %d" % (len(phases), r))
    if not 1 <= n <= r - 1:
        raise ValueError("degree n = %d outside [1, %d] for the skeleton model" % (n, r - 1))
    if not on_support(phases):
        return 0
    spec = truncated_koszul(r - 1, n)
    return homology_ranks_at(spec, phases[: r - 1])[n]


def character_sweep(r: int, n: int, order: int):
    """(phases, f) for every character of order dividing `order`."""
    if order < 1:
        raise ValueError("order %d < 1" % order)
    for ks in product(range(order), repeat=r):
        phases = tuple(Fraction(k, order) for k in ks)
        yield phases, oracle_f(r, n, phases)


def cone_support(degrees, phases) -> bool:
    """Support certification for cone families: the weighted phase sum
    d_1 p_1 + ... + d_r p_r must be integral (weighted-degree grading)."""
    phases = _normalize_phases(phases)
    if len(phases) != len(degrees):
        raise ValueError("character arity %d != %d" % (len(phases), len(degrees)))
    total = sum((Fraction(d) * p for d, p in zip(degrees, phases)), Fraction(0))
    return total.denominator == 1
