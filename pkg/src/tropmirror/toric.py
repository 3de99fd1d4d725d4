"""Toric data of the mirror: fan, moment polytope, divisor incidence, hat spec."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .geometry import integer_determinant
from .tropical import LaurentPolySpec, Subdivision, Term, hull_vertices, regular_subdivision

# W = -z^(0,...,0,1): the superpotential is this fixed character of the torus.
def superpotential_weight(n: int) -> tuple[int, ...]:
    return (0,) * n + (1,)


@dataclass(frozen=True)
class Cone:
    rays: tuple[int, ...]
    maximal: bool
    smooth: bool | None = None
    determinant: int | None = None


@dataclass(frozen=True)
class Fan:
    rays: tuple[tuple[int, ...], ...]
    ray_terms: tuple[int, ...]  # term index of each ray
    cones: tuple[Cone, ...]

    @property
    def maximal_cones(self) -> list[Cone]:
        return [c for c in self.cones if c.maximal]

    @property
    def smooth(self) -> bool:
        return all(c.smooth for c in self.maximal_cones)


def _primitive(v):
    g = 0
    for c in v:
        g = gcd(g, c)
    return tuple(c // g for c in v) if g > 1 else tuple(v)


def build_fan(P: Subdivision, spec: LaurentPolySpec) -> Fan:
    """Rays (-a, 1) for vertices a of P; one cone per cell and per face of a simplicial cell.

    A non-simplicial maximal cell contributes only its maximal cone, which is
    marked non-smooth.
    """
    verts = sorted(hull_vertices(spec, P))
    ray_of = {t: k for k, t in enumerate(verts)}
    rays = tuple(_primitive(tuple(-a for a in spec.terms[t].alpha) + (1,)) for t in verts)

    cones: dict[tuple[int, ...], Cone] = {}
    for cell in P.cells:
        members = tuple(sorted(ray_of[t] for t in cell if t in ray_of))
        if len(cell) == spec.n + 1:
            det = integer_determinant([list(rays[r]) for r in members])
            cones[members] = Cone(members, True, abs(det) == 1, det)
            for size in range(1, len(members)):
                for face in combinations(members, size):
                    cones.setdefault(face, Cone(face, False))
        else:
            cones[members] = Cone(members, True, False, None)
    ordered = sorted(cones.values(), key=lambda c: (len(c.rays), c.rays))
    return Fan(rays, tuple(verts), tuple(ordered))


@dataclass(frozen=True)
class Facet:
    term: int
    alpha: tuple[int, ...]
    rho: Fraction

    def coefficients(self) -> list[Fraction]:
        """[c_1..c_n, c_eta, c_0] with  c . (xi, eta) + c_0 >= 0."""
        return [Fraction(-a) for a in self.alpha] + [Fraction(1), self.rho]


@dataclass(frozen=True)
class MomentPolytope:
    n: int
    facets: tuple[Facet, ...]

    def contains(self, xi, eta) -> bool:
        xi = [Fraction(x) for x in xi]
        return all(Fraction(eta) >= sum(a * x for a, x in zip(f.alpha, xi)) - f.rho for f in self.facets)


def moment_polytope(spec: LaurentPolySpec, P: Subdivision | None = None) -> MomentPolytope:
    """eta >= <a, xi> - rho(a), one inequality per term whose region is nonempty."""
    P = P or regular_subdivision(spec)
    active = sorted(hull_vertices(spec, P))
    return MomentPolytope(spec.n, tuple(Facet(i, spec.terms[i].alpha, spec.terms[i].rho) for i in active))


def divisor_incidence(P: Subdivision, spec: LaurentPolySpec) -> dict[frozenset[int], frozenset[int]]:
    """Faces of P of dimension >= 1, each mapped to the divisors meeting along its stratum.

    Keys and values are both term-index sets: divisors Z_a, a in the face,
    intersect in the orbit closure dual to that face.
    """
    out: dict[frozenset[int], frozenset[int]] = {}
    for cell in P.cells:
        if len(cell) == spec.n + 1:
            for size in range(2, len(cell) + 1):
                for face in combinations(cell, size):
                    out[frozenset(face)] = frozenset(face)
        else:
            out[frozenset(cell)] = frozenset(cell)
    return out


def meets(incidence, a: int, b: int) -> bool:
    return frozenset((a, b)) in incidence


def knorrer_hat(spec: LaurentPolySpec) -> LaurentPolySpec:
    """Spec of f(x) + x_{n+1}: lift every exponent by a zero coordinate, add e_{n+1}."""
    terms = tuple(Term(t.alpha + (0,), t.rho, t.coeff) for t in spec.terms)
    terms += (Term((0,) * spec.n + (1,), 0, "1"),)
    name = f"pants{spec.n + 1}" if spec.name == f"pants{spec.n}" else (spec.name + "_hat" if spec.name else "")
    return LaurentPolySpec(spec.n + 1, terms, name=name)
