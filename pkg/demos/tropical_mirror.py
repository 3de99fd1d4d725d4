"""
Tropical polynomials and their toric mirrors
============================================

Walks through three Laurent polynomials: the pair of pants, the local
projective plane and a Hirzebruch surface. For each one we subdivide the
Newton polytope, read off the mirror fan, and look at the moment polytope.
Everything is exact, so the printed rationals are the true values.
"""

from fractions import Fraction

from tropmirror.specio import bundled_spec
from tropmirror.toric import build_fan, moment_polytope
from tropmirror.tropical import (
    TropicalFunction,
    degeneration_report,
    region_classify,
    regular_subdivision,
    tropical_eval,
)

# The local plane: 1 + x1 + x2 + t/(x1 x2), with the last term lifted to height 1.
spec = bundled_spec("local_p2")
for k, term in enumerate(spec.terms):
    print(f"term {k}: alpha={term.alpha} rho={term.rho}")

# The tropical polynomial is a max of affine functions; evaluate it at two points.
phi = TropicalFunction.from_spec(spec)
for xi in ([Fraction(-1, 4), Fraction(-1, 4)], [Fraction(-1), Fraction(-1)]):
    value, argmax = tropical_eval(phi, xi)
    print(f"phi{tuple(str(x) for x in xi)} = {value}, attained by terms {sorted(argmax)}")
    print("  on the tropical hypersurface:", region_classify(spec, xi).on_gamma)

# The heights induce a regular subdivision: three triangles around the origin.
P = regular_subdivision(spec)
print("cells:", P.cells)
rep = degeneration_report(spec, P)
print("unimodular:", rep.all_cells_unimodular, "| origin in every cell:", rep.zero_in_every_maximal_cell)

# Each term gives the ray (-alpha, 1); each cell gives a maximal cone.
fan = build_fan(P, spec)
print("rays:", fan.rays)
print("smooth fan:", fan.smooth, "with", len(fan.maximal_cones), "maximal cones")

# The moment polytope is the epigraph of phi, cut out by one facet per term.
for facet in moment_polytope(spec).facets:
    print("  eta >=", facet.alpha, ". xi -", facet.rho)

# The Hirzebruch surface of degree 3 also subdivides into unimodular triangles,
# but one of them misses the origin, so the degeneration condition fails.
hz = bundled_spec("hirzebruch3")
rep = degeneration_report(hz, regular_subdivision(hz))
print("hirzebruch3: cells", len(regular_subdivision(hz).cells),
      "| missing origin:", rep.missing_zero)

# Pants of every dimension give a single standard simplex and the affine space as mirror.
for n in range(1, 5):
    p = bundled_spec(f"pants{n}")
    f = build_fan(regular_subdivision(p), p)
    print(f"pants{n}: {len(f.maximal_cones)} cone, smooth={f.smooth}, rays={f.rays}")
