"""Exact integer/rational linear algebra and lower convex hulls.

Everything here works over ``int`` and ``fractions.Fraction``; no floats.
Inputs are small (tens of points, dimension at most 4 or 5), so the hull is
computed by brute force over candidate supporting hyperplanes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Sequence


class DimensionError(ValueError):
    """Matrix or point has the wrong shape."""


class ArityError(ValueError):
    """Wrong number of vertices for a simplex."""


class RankError(ValueError):
    """Point configuration does not affinely span the ambient space."""


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or rational string ("3", "-2/5") to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as an exact rational")


@dataclass(frozen=True)
class LiftedPoint:
    base: tuple[int, ...]
    height: Fraction

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(int(c) for c in self.base))
        object.__setattr__(self, "height", as_fraction(self.height))


def integer_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    rows = [list(r) for r in matrix]
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise DimensionError(f"matrix is not square: {[len(r) for r in rows]} columns for {size} rows")
    if size == 0:
        return 1
    for r in rows:
        for entry in r:
            if isinstance(entry, bool) or not isinstance(entry, int):
                raise TypeError(f"non-integer entry {entry!r}")
    sign = 1
    prev = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[-1][-1]


def rational_determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant over Q by Gaussian elimination."""
    rows = [[as_fraction(x) for x in r] for r in matrix]
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise DimensionError("matrix is not square")
    det = Fraction(1)
    for k in range(size):
        piv = next((i for i in range(k, size) if rows[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            det = -det
        det *= rows[k][k]
        for i in range(k + 1, size):
            factor = rows[i][k] / rows[k][k]
            if factor:
                for j in range(k, size):
                    rows[i][j] -= factor * rows[k][j]
    return det


def solve_rational(matrix, rhs) -> list[Fraction] | None:
    """Solve a square system exactly; ``None`` if singular."""
    size = len(matrix)
    aug = [[as_fraction(x) for x in row] + [as_fraction(b)] for row, b in zip(matrix, rhs)]
    for k in range(size):
        piv = next((i for i in range(k, size) if aug[i][k] != 0), None)
        if piv is None:
            return None
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = 1 / aug[k][k]
        aug[k] = [x * inv for x in aug[k]]
        for i in range(size):
            if i != k and aug[i][k]:
                f = aug[i][k]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[k])]
    return [row[-1] for row in aug]


def edge_matrix(vertices: Sequence[Sequence[int]]) -> list[list[int]]:
    origin = vertices[0]
    return [[int(c) - int(o) for c, o in zip(v, origin)] for v in vertices[1:]]


def is_unimodular_simplex(vertices: Sequence[Sequence[int]]) -> bool:
    """True iff the lattice simplex has normalized volume 1."""
    if not vertices:
        raise ArityError("no vertices given")
    dim = len(vertices[0])
    if len(vertices) != dim + 1:
        raise ArityError(f"a simplex in dimension {dim} needs {dim + 1} vertices, got {len(vertices)}")
    if any(len(v) != dim for v in vertices):
        raise DimensionError("vertices of mixed dimension")
    return abs(integer_determinant(edge_matrix(vertices))) == 1


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine span of ``points``."""
    if len(points) <= 1:
        return 0
    rows = [[as_fraction(c) - as_fraction(o) for c, o in zip(p, points[0])] for p in points[1:]]
    rank = 0
    ncols = len(rows[0])
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def simplex_volume(vertices: Sequence[Sequence]) -> Fraction:
    """Euclidean volume of a full-dimensional simplex (|det| / d!)."""
    dim = len(vertices[0])
    mat = [[as_fraction(c) - as_fraction(o) for c, o in zip(v, vertices[0])] for v in vertices[1:]]
    return abs(rational_determinant(mat)) / factorial(dim)


def _supporting_hyperplane(lifted: Sequence[LiftedPoint], idx: Sequence[int]):
    """Affine height function h(x) = <a, x> + b through the lifted points ``idx``.

    Returns (a, b) or ``None`` when the base points are affinely dependent
    (which would make the hyperplane vertical or underdetermined).
    """
    dim = len(lifted[0].base)
    matrix = [list(lifted[i].base) + [1] for i in idx]
    rhs = [lifted[i].height for i in idx]
    sol = solve_rational(matrix, rhs)
    if sol is None:
        return None
    return tuple(sol[:dim]), sol[dim]


def evaluate_affine(plane, point) -> Fraction:
    a, b = plane
    return sum((ai * xi for ai, xi in zip(a, point)), Fraction(0)) + b


def lower_hull_with_planes(points: Sequence[LiftedPoint]):
    """Maximal lower faces together with their supporting affine functions.

    Returns a list of ``(cell, plane)`` with ``cell`` a sorted tuple of point
    indices, sorted lexicographically.
    """
    pts = [p if isinstance(p, LiftedPoint) else LiftedPoint(*p) for p in points]
    if not pts:
        raise RankError("empty point set")
    dim = len(pts[0].base)
    if any(len(p.base) != dim for p in pts):
        raise DimensionError("lifted points of mixed dimension")
    if len({p.base for p in pts}) != len(pts):
        raise ValueError("two lifted points share a base coordinate")
    if affine_rank([p.base for p in pts]) < dim:
        raise RankError(f"points do not affinely span R^{dim}")

    faces: dict[tuple[int, ...], tuple] = {}
    for subset in combinations(range(len(pts)), dim + 1):
        plane = _supporting_hyperplane(pts, subset)
        if plane is None:
            continue
        on_plane = []
        below = False
        for i, p in enumerate(pts):
            diff = p.height - evaluate_affine(plane, p.base)
            if diff < 0:
                below = True
                break
            if diff == 0:
                on_plane.append(i)
        if below:
            continue
        cell = tuple(on_plane)
        faces.setdefault(cell, plane)
    return sorted(faces.items())


def lower_hull(points: Sequence[LiftedPoint]) -> list[tuple[int, ...]]:
    """Maximal faces of the lower convex hull, as sorted index tuples."""
    return [cell for cell, _ in lower_hull_with_planes(points)]


def in_convex_hull(point: Sequence, others: Sequence[Sequence]) -> bool:
    """Exact membership test by Caratheodory: try every affinely independent subset."""
    target = [as_fraction(c) for c in point]
    dim = len(target)
    if any(tuple(as_fraction(c) for c in o) == tuple(target) for o in others):
        return True
    for size in range(2, min(len(others), dim + 1) + 1):
        for subset in combinations(others, size):
            if affine_rank(subset) != size - 1:
                continue
            # barycentric coordinates: sum l_i s_i = p, sum l_i = 1
            rows = [[as_fraction(s[c]) for s in subset] for c in range(dim)] + [[Fraction(1)] * size]
            rhs = target + [Fraction(1)]
            lam = _solve_overdetermined(rows, rhs)
            if lam is not None and all(x >= 0 for x in lam):
                return True
    return False


def _solve_overdetermined(rows, rhs):
    """Exact solution of a consistent full-column-rank system, else ``None``."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    rank = 0
    pivots = []
    for col in range(ncols):
        piv = next((i for i in range(rank, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = 1 / aug[rank][col]
        aug[rank] = [x * inv for x in aug[rank]]
        for i in range(len(aug)):
            if i != rank and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[rank])]
        pivots.append(col)
        rank += 1
    if any(row[-1] != 0 for row in aug[rank:]):
        return None
    return [aug[i][-1] for i in range(ncols)]


def cell_vertices(cell_points: Sequence[Sequence[int]]) -> list[int]:
    """Positions (into ``cell_points``) of the points that are vertices of their hull."""
    out = []
    for i, p in enumerate(cell_points):
        rest = [q for j, q in enumerate(cell_points) if j != i]
        if not in_convex_hull(p, rest):
            out.append(i)
    return out


def polytope_volume(points: Sequence[Sequence[int]]) -> Fraction:
    """Volume of Conv(points) as a determinant sum over a placing triangulation.

    Heights growing very fast with the point index yield the placing
    triangulation, which is a genuine triangulation of the hull.
    """
    scale = 10 ** 6
    lifted = [LiftedPoint(tuple(p), Fraction(scale) ** i) for i, p in enumerate(points)]
    total = Fraction(0)
    dim = len(points[0])
    for cell in lower_hull(lifted):
        if len(cell) != dim + 1:
            raise ArithmeticError("placing heights produced a non-simplicial cell")
        total += simplex_volume([points[i] for i in cell])
    return total
