"""Exact rational affine geometry inside the unit cube.

Affine forms, halfspace systems, integer lattice kernels and a small
two-phase simplex, all over fractions.Fraction.  Floating point input is
rejected at the boundary; nothing in here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction


def rat(x) -> Fraction:
    """Coerce to Fraction.  Floats are refused: exactness is the contract."""
    if isinstance(x, float):
        raise TypeError("floating point value %r rejected; pass Fraction, int or 'p/q' string" % (x,))
    return Fraction(x)


def rat_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(rat(v) for v in values)


# ---------------------------------------------------------------------------
# forms and systems


@dataclass(frozen=True)
class AffineForm:
    """coeffs . x + const; as a constraint it is read as value <= 0."""

    coeffs: tuple[Fraction, ...]
    const: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeffs", rat_vector(self.coeffs))
        object.__setattr__(self, "const", rat(self.const))

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    def value(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != len(self.coeffs):
            raise ValueError("point arity %d != form arity %d" % (len(point), len(self.coeffs)))
        return sum((c * rat(p) for c, p in zip(self.coeffs, point)), self.const)

    def scaled(self, factor) -> "AffineForm":
        f = rat(factor)
        return AffineForm(tuple(c * f for c in self.coeffs), self.const * f)

    def equation_key(self) -> tuple:
        """Canonical key for the hyperplane {value == 0}: primitive integers,
        first nonzero entry positive.  Only meaningful for equations."""
        denoms = [c.denominator for c in self.coeffs] + [self.const.denominator]
        scale = 1
        for d in denoms:
            scale = scale * d // gcd(scale, d)
        ints = [int(c * scale) for c in self.coeffs] + [int(self.const * scale)]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g:
            ints = [v // g for v in ints]
        lead = next((v for v in ints if v), 0)
        if lead < 0:
            ints = [-v for v in ints]
        return tuple(ints)


@dataclass(frozen=True)
class HalfspaceSystem:
    """Finite intersection of halfspaces {form <= 0}, all of one arity."""

    forms: tuple[AffineForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "forms", tuple(self.forms))
        arities = {f.arity for f in self.forms}
        if len(arities) > 1:
            raise ValueError("mixed arities in halfspace system: %s" % sorted(arities))

    @property
    def arity(self) -> int:
        return self.forms[0].arity if self.forms else 0

    def contains(self, point: Sequence[Fraction]) -> bool:
        return all(f.value(point) <= 0 for f in self.forms)

    def tight_set(self, point: Sequence[Fraction]) -> tuple[int, ...]:
        """Indices of forms vanishing at point.  Point need not be inside."""
        return tuple(i for i, f in enumerate(self.forms) if f.value(point) == 0)


def cube_point(values: Iterable) -> tuple[Fraction, ...]:
    pt = rat_vector(values)
    for v in pt:
        if v < 0 or v > 1:
            raise ValueError("coordinate %s outside [0, 1]" % v)
    return pt


def cube_bounds(r: int) -> list[AffineForm]:
    """The 2r facet constraints of [0,1]^r in <= 0 form."""
    forms = []
    for i in range(r):
        lo = [Fraction(0)] * r
        lo[i] = Fraction(-1)
        forms.append(AffineForm(tuple(lo), Fraction(0)))          # -x_i <= 0
        hi = [Fraction(0)] * r
        hi[i] = Fraction(1)
        forms.append(AffineForm(tuple(hi), Fraction(-1)))         # x_i - 1 <= 0
    return forms


# ---------------------------------------------------------------------------
# exact linear algebra


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    mat = [list(map(rat, row)) for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        inv = 1 / prow[col]
        mat[rank] = prow = [v * inv for v in prow]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Clear denominators row by row (rowspace is unchanged)."""
    out = []
    for row in rows:
        row = [rat(v) for v in row]
        scale = 1
        for v in row:
            scale = scale * v.denominator // gcd(scale, v.denominator)
        out.append([int(v * scale) for v in row])
    return out


def integer_kernel(rows: Sequence[Sequence[int]], width: int) -> list[tuple[int, ...]]:
    """Basis of {v in Z^width : M v = 0}, via unimodular column operations.

    The returned basis spans the kernel lattice exactly (it is saturated,
    being the kernel of an integer matrix).
    """
    mat = [list(row) for row in rows]
    for row in mat:
        if len(row) != width:
            raise ValueError("row width %d != %d" % (len(row), width))
    cols = [[mat[i][j] for i in range(len(mat))] for j in range(width)]
    tr = [[1 if i == j else 0 for i in range(width)] for j in range(width)]  # tr[j] = column j of transform
    pivot_col = 0
    for row in range(len(mat)):
        active = [j for j in range(pivot_col, width) if cols[j][row] != 0]
        if not active:
            continue
        # euclidean reduction among active columns at this row
        while True:
            active = [j for j in range(pivot_col, width) if cols[j][row] != 0]
            if len(active) <= 1:
                break
            jmin = min(active, key=lambda j: abs(cols[j][row]))
            for j in active:
                if j == jmin:
                    continue
                q = cols[j][row] // cols[jmin][row]
                if q:
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[jmin])]
                    tr[j] = [a - q * b for a, b in zip(tr[j], tr[jmin])]
        active = [j for j in range(pivot_col, width) if cols[j][row] != 0]
        if active:
            j = active[0]
            cols[pivot_col], cols[j] = cols[j], cols[pivot_col]
            tr[pivot_col], tr[j] = tr[j], tr[pivot_col]
            pivot_col += 1
    basis = [tuple(tr[j]) for j in range(pivot_col, width)]
    for v in basis:
        assert all(sum(m * x for m, x in zip(row, v)) == 0 for row in mat)
    return basis


def hnf_rows(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row Hermite normal form of a set of independent integer rows.

    Pivots positive, entries above a pivot reduced into [0, pivot); this is
    the unique canonical basis of the row lattice.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return []
    m, w = len(mat), len(mat[0])
    pr = 0
    for col in range(w):
        while True:
            nz = [i for i in range(pr, m) if mat[i][col] != 0]
            if len(nz) <= 1:
                break
            imin = min(nz, key=lambda i: abs(mat[i][col]))
            for i in nz:
                if i != imin:
                    q = mat[i][col] // mat[imin][col]
                    if q:
                        mat[i] = [a - q * b for a, b in zip(mat[i], mat[imin])]
        nz = [i for i in range(pr, m) if mat[i][col] != 0]
        if not nz:
            continue
        mat[pr], mat[nz[0]] = mat[nz[0]], mat[pr]
        if mat[pr][col] < 0:
            mat[pr] = [-v for v in mat[pr]]
        p = mat[pr][col]
        for i in range(pr):
            q = mat[i][col] // p
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[pr])]
        pr += 1
    return [tuple(r) for r in mat[:pr] if any(r)]


def saturation_basis(rows: Sequence[Sequence[Fraction]], width: int) -> list[tuple[int, ...]]:
    """Canonical basis of rowspace_Q(rows) intersect Z^width (saturated).

    Kernel of the kernel: v lies in the rational rowspace iff it is
    orthogonal to every rational kernel vector of the matrix.  The result
    is put in Hermite form, so equal rowspaces give equal bases.
    """
    ker = integer_kernel(integer_rows(rows), width)
    return hnf_rows(integer_kernel([list(v) for v in ker], width))


def solve_row_combination(rows: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Rational coefficients c with sum_i c_i rows[i] = target, or None.

    Free coefficients are set to 0, so with independent rows the answer is
    the unique representation of target in the row space.
    """
    m = len(rows)
    if m == 0:
        return [] if not any(Fraction(t) for t in target) else None
    width = len(rows[0])
    aug = [[Fraction(rows[i][j]) for i in range(m)] + [Fraction(target[j])] for j in range(width)]
    pivots = []
    rank = 0
    for col in range(m):
        piv = next((i for i in range(rank, width) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = 1 / aug[rank][col]
        aug[rank] = [v * inv for v in aug[rank]]
        for i in range(width):
            if i != rank and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, width):
        if aug[i][-1] != 0:
            return None  # inconsistent: target outside the row space
    coeffs = [Fraction(0)] * m
    for row_idx, col in enumerate(pivots):
        coeffs[col] = aug[row_idx][-1]
    return coeffs


def face_dimension(equalities: Sequence[AffineForm], width: int) -> int:
    """Dimension of the affine solution set (assumed consistent)."""
    return width - rational_rank([f.coeffs for f in equalities])


def span_equations(
    equalities: Sequence[AffineForm], point: Sequence[Fraction]
) -> list[tuple[tuple[int, ...], Fraction]]:
    """Saturated integer description of the affine span.

    Returns pairs (v, beta) with v a saturation-lattice basis vector of the
    coefficient rowspace and beta = v . point; every integer equation valid
    on the span is a Z-combination of these.
    """
    width = len(point)
    for f in equalities:
        if f.value(point) != 0:
            raise ValueError("point is not on the span")
    basis = saturation_basis([f.coeffs for f in equalities], width)
    return [(v, sum(Fraction(c) * p for c, p in zip(v, point))) for v in basis]


# ---------------------------------------------------------------------------
# two-phase simplex (variables implicitly >= 0; callers add cube bounds)


class Infeasible(Exception):
    pass


class Unbounded(Exception):
    pass


def _pivot(rows, cost, basis, pr, pc):
    piv = rows[pr][pc]
    rows[pr] = [v / piv for v in rows[pr]]
    prow = rows[pr]
    for i in range(len(rows)):
        if i != pr and rows[i][pc] != 0:
            f = rows[i][pc]
            rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
    if cost[pc] != 0:
        f = cost[pc]
        cost[:] = [a - f * b for a, b in zip(cost, prow)]
    basis[pr] = pc


def _run_simplex(rows, cost, basis):
    """Bland's rule on a canonical tableau; cost row is the z-row of a
    maximization (optimal when no negative reduced cost remains)."""
    while True:
        pc = next((j for j in range(len(cost) - 1) if cost[j] < 0), None)
        if pc is None:
            return
        ratios = [(rows[i][-1] / rows[i][pc], basis[i], i) for i in range(len(rows)) if rows[i][pc] > 0]
        if not ratios:
            raise Unbounded()
        _, _, pr = min(ratios)
        _pivot(rows, cost, basis, pr, pc)


def lp_maximize(
    objective: Sequence[Fraction],
    ineqs: Sequence[AffineForm],
    eqs: Sequence[AffineForm] = (),
    width: int | None = None,
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """max objective . x subject to x >= 0, every ineq <= 0, every eq == 0.

    Returns (optimum, witness point).  Raises Infeasible or Unbounded.
    """
    objective = rat_vector(objective)
    r = width if width is not None else len(objective)
    if len(objective) != r:
        raise ValueError("objective arity mismatch")
    nslack = len(ineqs)
    rows = []
    slack_col = lambda k: r + k
    for k, f in enumerate(ineqs):
        row = list(f.coeffs) + [Fraction(0)] * nslack + [-f.const]
        row[slack_col(k)] = Fraction(1)
        rows.append(row)
    for f in eqs:
        rows.append(list(f.coeffs) + [Fraction(0)] * nslack + [-f.const])
    ncols = r + nslack
    basis = [-1] * len(rows)
    art_cols = []
    for i, row in enumerate(rows):
        if row[-1] < 0:
            rows[i] = row = [-v for v in row]
        if i < nslack and row[slack_col(i)] == 1:
            basis[i] = slack_col(i)
    for i in range(len(rows)):
        if basis[i] == -1:
            for row2 in rows:
                row2.insert(-1, Fraction(0))
            rows[i][-2] = Fraction(1)
            basis[i] = ncols
            art_cols.append(ncols)
            ncols += 1
    # phase 1: maximize -(sum of artificials)
    cost = [Fraction(0)] * (ncols + 1)
    for j in art_cols:
        cost[j] = Fraction(1)
    for i, b in enumerate(basis):
        if b in art_cols:
            cost = [a - c for a, c in zip(cost, rows[i])]
    _run_simplex(rows, cost, basis)
    if -cost[-1] != 0:
        raise Infeasible()
    # drive remaining artificials out of the basis, then drop their columns
    # entirely so phase 2 can never pivot one back in
    keep = []
    for i in range(len(rows)):
        if basis[i] in art_cols:
            pc = next((j for j in range(r + nslack) if rows[i][j] != 0), None)
            if pc is None:
                continue  # redundant constraint: row is zero on real variables
            _pivot(rows, cost, basis, i, pc)
        keep.append(i)
    rows = [rows[i][: r + nslack] + rows[i][-1:] for i in keep]
    basis = [basis[i] for i in keep]
    ncols = r + nslack
    # phase 2
    cost = [Fraction(0)] * (ncols + 1)
    for j, c in enumerate(objective):
        cost[j] = -c
    for i, b in enumerate(basis):
        if cost[b] != 0:
            f = cost[b]
            cost = [a - f * v for a, v in zip(cost, rows[i])]
    _run_simplex(rows, cost, basis)
    point = [Fraction(0)] * r
    for i, b in enumerate(basis):
        if b < r:
            point[b] = rows[i][-1]
    value = sum(c * p for c, p in zip(objective, point))
    return value, tuple(point)


def lp_feasible_point(
    ineqs: Sequence[AffineForm], eqs: Sequence[AffineForm], width: int
) -> tuple[Fraction, ...] | None:
    try:
        _, pt = lp_maximize([Fraction(0)] * width, ineqs, eqs, width)
    except Infeasible:
        return None
    return pt


def relative_interior_point(
    ineqs: Sequence[AffineForm], eqs: Sequence[AffineForm], width: int
) -> tuple[tuple[Fraction, ...], tuple[int, ...]]:
    """A point with every non-implicit inequality strict, plus the indices of
    the implicit equalities among ineqs.

    The point is an exact average of per-constraint max-slack witnesses, so
    it lies in the relative interior of the feasible set.
    """
    base = lp_feasible_point(ineqs, eqs, width)
    if base is None:
        raise Infeasible()
    witnesses = [base]
    implicit = []
    for k, g in enumerate(ineqs):
        opt, pt = lp_maximize([-c for c in g.coeffs], ineqs, eqs, width)
        if g.value(pt) == 0:
            implicit.append(k)  # g vanishes on the whole set
        else:
            witnesses.append(pt)
    n = Fraction(len(witnesses))
    centroid = tuple(sum(w[i] for w in witnesses) / n for i in range(width))
    return centroid, tuple(implicit)


def max_min_coordinate(
    ineqs: Sequence[AffineForm], eqs: Sequence[AffineForm], width: int
) -> Fraction:
    """max over the feasible set of min_i x_i (Infeasible if empty).

    Positive optimum certifies a point with all coordinates strictly
    positive; the extra LP variable is the common lower bound delta.
    """
    wide_ineqs = []
    for f in ineqs:
        wide_ineqs.append(AffineForm(f.coeffs + (Fraction(0),), f.const))
    for i in range(width):
        coeffs = [Fraction(0)] * (width + 1)
        coeffs[i] = Fraction(-1)
        coeffs[width] = Fraction(1)
        wide_ineqs.append(AffineForm(tuple(coeffs), Fraction(0)))  # delta - x_i <= 0
    wide_eqs = [AffineForm(f.coeffs + (Fraction(0),), f.const) for f in eqs]
    objective = [Fraction(0)] * width + [Fraction(1)]
    opt, _ = lp_maximize(objective, wide_ineqs, wide_eqs, width + 1)
    return opt
