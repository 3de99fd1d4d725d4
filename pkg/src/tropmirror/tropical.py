"""Tropicalization of a Laurent polynomial and its regular subdivision."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .geometry import (
    DimensionError,
    LiftedPoint,
    as_fraction,
    cell_vertices,
    is_unimodular_simplex,
    lower_hull_with_planes,
    solve_rational,
)


@dataclass(frozen=True)
class Term:
    alpha: tuple[int, ...]
    rho: Fraction
    coeff: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(int(a) for a in self.alpha))
        object.__setattr__(self, "rho", as_fraction(self.rho))


@dataclass(frozen=True)
class LaurentPolySpec:
    """Exponents with heights: sum of c_a tau^rho(a) x^a.

    Coefficients and tau are carried for bookkeeping only; nothing here
    depends on them.
    """

    n: int
    terms: tuple[Term, ...]
    name: str = ""

    def __post_init__(self):
        terms = tuple(t if isinstance(t, Term) else Term(*t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if self.n < 1:
            raise ValueError("dimension must be positive")
        for t in terms:
            if len(t.alpha) != self.n:
                raise DimensionError(f"exponent {t.alpha} is not in Z^{self.n}")
        if len({t.alpha for t in terms}) != len(terms):
            raise ValueError("exponents must be pairwise distinct")
        if len(terms) < self.n + 1:
            raise ValueError(f"need at least {self.n + 1} terms, got {len(terms)}")

    @property
    def alphas(self) -> list[tuple[int, ...]]:
        return [t.alpha for t in self.terms]

    @property
    def rhos(self) -> list[Fraction]:
        return [t.rho for t in self.terms]

    def index_of(self, alpha: Sequence[int]) -> Optional[int]:
        alpha = tuple(alpha)
        for i, t in enumerate(self.terms):
            if t.alpha == alpha:
                return i
        return None

    def lifted(self) -> list[LiftedPoint]:
        return [LiftedPoint(t.alpha, t.rho) for t in self.terms]


@dataclass(frozen=True)
class TropicalFunction:
    """phi(xi) = max_a <a, xi> - rho(a)."""

    forms: tuple[tuple[tuple[int, ...], Fraction], ...]

    @classmethod
    def from_spec(cls, spec: LaurentPolySpec) -> "TropicalFunction":
        return cls(tuple((t.alpha, t.rho) for t in spec.terms))

    @property
    def n(self) -> int:
        return len(self.forms[0][0])

    def values(self, xi: Sequence) -> list[Fraction]:
        xi = [as_fraction(x) for x in xi]
        if len(xi) != self.n:
            raise DimensionError(f"point has dimension {len(xi)}, expected {self.n}")
        return [sum((a * x for a, x in zip(alpha, xi)), Fraction(0)) - rho for alpha, rho in self.forms]

    def __call__(self, xi: Sequence) -> Fraction:
        return max(self.values(xi))


def tropical_eval(phi: TropicalFunction, xi: Sequence) -> tuple[Fraction, frozenset[int]]:
    """Value of phi at ``xi`` and the set of term indices attaining it."""
    vals = phi.values(xi)
    top = max(vals)
    return top, frozenset(i for i, v in enumerate(vals) if v == top)


@dataclass(frozen=True)
class Region:
    """Result of :func:`region_classify`: a single term, or a point of Gamma."""

    argmax: frozenset[int]

    @property
    def on_gamma(self) -> bool:
        return len(self.argmax) >= 2

    @property
    def index(self) -> Optional[int]:
        return None if self.on_gamma else next(iter(self.argmax))


def region_classify(spec: LaurentPolySpec, xi: Sequence) -> Region:
    _, argmax = tropical_eval(TropicalFunction.from_spec(spec), xi)
    return Region(argmax)


@dataclass(frozen=True)
class Subdivision:
    n: int
    cells: tuple[tuple[int, ...], ...]
    # affine functions (a, b) with height = <a, x> + b on each cell
    planes: tuple = field(default=(), compare=False, repr=False)

    def vertex_indices(self) -> set[int]:
        return {i for c in self.cells for i in c}


def regular_subdivision(spec: LaurentPolySpec) -> Subdivision:
    """Cells of the subdivision of Conv(A) induced by the heights rho."""
    pairs = lower_hull_with_planes(spec.lifted())
    return Subdivision(spec.n, tuple(c for c, _ in pairs), tuple(p for _, p in pairs))


@dataclass
class DegenerationReport:
    all_cells_simplicial: bool
    all_cells_unimodular: bool
    vertices_exactly_A: bool
    zero_in_every_maximal_cell: bool
    offending_cells: list[tuple[int, ...]]
    non_simplicial: list[tuple[int, ...]] = field(default_factory=list)
    non_unimodular: list[tuple[int, ...]] = field(default_factory=list)
    missing_zero: list[tuple[int, ...]] = field(default_factory=list)
    non_vertices: list[int] = field(default_factory=list)

    @property
    def maximally_degenerate(self) -> bool:
        return self.all_cells_simplicial and self.all_cells_unimodular and self.vertices_exactly_A


def hull_vertices(spec: LaurentPolySpec, P: Subdivision) -> set[int]:
    """Indices of terms that are vertices of some cell of P."""
    out = set()
    for cell in P.cells:
        pts = [spec.terms[i].alpha for i in cell]
        if len(cell) == spec.n + 1:
            out.update(cell)
        else:
            out.update(cell[k] for k in cell_vertices(pts))
    return out


def degeneration_report(spec: LaurentPolySpec, P: Subdivision) -> DegenerationReport:
    non_simplicial = [c for c in P.cells if len(c) != spec.n + 1]
    non_unimodular = [
        c for c in P.cells
        if len(c) != spec.n + 1 or not is_unimodular_simplex([spec.terms[i].alpha for i in c])
    ]
    zero = spec.index_of((0,) * spec.n)
    missing_zero = [c for c in P.cells if zero is None or zero not in c]
    verts = hull_vertices(spec, P)
    non_vertices = [i for i in range(len(spec.terms)) if i not in verts]
    offending = sorted(set(non_simplicial) | set(non_unimodular) | set(missing_zero))
    return DegenerationReport(
        all_cells_simplicial=not non_simplicial,
        all_cells_unimodular=not non_unimodular,
        vertices_exactly_A=not non_vertices,
        zero_in_every_maximal_cell=not missing_zero,
        offending_cells=offending,
        non_simplicial=non_simplicial,
        non_unimodular=non_unimodular,
        missing_zero=missing_zero,
        non_vertices=non_vertices,
    )


def tropical_vertex(spec: LaurentPolySpec, cell: Sequence[int]) -> list[Fraction]:
    """The point of Gamma dual to a maximal simplicial cell: all its forms tie."""
    n = spec.n
    base = spec.terms[cell[0]]
    rows, rhs = [], []
    for i in cell[1:n + 1]:
        t = spec.terms[i]
        rows.append([a - b for a, b in zip(t.alpha, base.alpha)])
        rhs.append(t.rho - base.rho)
    sol = solve_rational(rows, rhs)
    if sol is None:
        raise ValueError(f"cell {cell} is not full-dimensional")
    return sol


def region_witness(spec: LaurentPolySpec, index: int, P: Optional[Subdivision] = None) -> Optional[list[Fraction]]:
    """A rational point whose unique argmax is ``index``, or ``None`` if Delta_index is empty.

    Starts from the tropical vertex of a simplicial cell containing ``index``
    and moves into the region by a direction that favours ``index`` over the
    rest of the cell, halving the step until no other form ties.
    """
    P = P or regular_subdivision(spec)
    phi = TropicalFunction.from_spec(spec)
    for cell in P.cells:
        if index not in cell or len(cell) != spec.n + 1:
            continue
        center = tropical_vertex(spec, cell)
        me = spec.terms[index].alpha
        others = [spec.terms[i].alpha for i in cell if i != index]
        direction = solve_rational([[a - b for a, b in zip(me, o)] for o in others], [1] * len(others))
        step = Fraction(1)
        for _ in range(200):
            xi = [c + step * d for c, d in zip(center, direction)]
            _, argmax = tropical_eval(phi, xi)
            if argmax == {index}:
                return xi
            step /= 2
    return None


def pants_spec(n: int) -> LaurentPolySpec:
    """x_1 + ... + x_n + 1, all heights zero."""
    terms = [Term((0,) * n, 0, "1")]
    for i in range(n):
        e = [0] * n
        e[i] = 1
        terms.append(Term(tuple(e), 0, "1"))
    return LaurentPolySpec(n, tuple(terms), name=f"pants{n}")


def local_pn_spec(n: int) -> LaurentPolySpec:
    """x_1 + ... + x_n + tau/(x_1...x_n) + 1."""
    base = pants_spec(n)
    terms = base.terms + (Term((-1,) * n, 1, "1"),)
    return LaurentPolySpec(n, terms, name=f"local_p{n}")


def hirzebruch_spec(k: int) -> LaurentPolySpec:
    """1 + 1/x_1 + 1/x_2 + tau x_2 + tau^(k+1) x_1 x_2^k."""
    terms = (
        Term((0, 0), 0, "1"),
        Term((-1, 0), 0, "1"),
        Term((0, -1), 0, "1"),
        Term((0, 1), 1, "1"),
        Term((1, k), k + 1, "1"),
    )
    return LaurentPolySpec(2, terms, name=f"hirzebruch{k}")


def cells_as_points(spec: LaurentPolySpec, P: Subdivision) -> list[list[tuple[int, ...]]]:
    return [[spec.terms[i].alpha for i in c] for c in P.cells]


def edges(P: Subdivision, spec: LaurentPolySpec) -> set[frozenset[int]]:
    """1-dimensional faces of P (only simplicial cells are decomposed)."""
    out = set()
    for c in P.cells:
        if len(c) == spec.n + 1:
            out.update(frozenset(p) for p in combinations(c, 2))
    return out
