"""
Wrapped Floer cohomology of the pair of pants
=============================================

The pair of pants Pi_1 (the sphere minus three points) carries three
Lagrangians L{0}, L{1}, L{2}. Their wrapped Floer groups are spanned by
monomials in z0, z1, z2 with half-integer exponents, and the product
simply multiplies monomials or gives zero. This demo prints the tables,
a few products and the exact triangles, then repeats the count for Pi_2.
"""

from itertools import permutations

from tropmirror.notation import format_monomial, parse_monomial
from tropmirror.pants import (
    ZERO,
    all_labels,
    check_triangle,
    enumerate_triangles,
    hw_basis,
    localized_hw_dims,
    mu2,
)

n = 1
labels = all_labels(n)
print("labels:", ", ".join(map(str, labels)))

# Generators up to doubled total degree 4. The cohomological degree is the z0 exponent doubled.
for I in labels:
    for J in labels:
        basis, _ = hw_basis(I, J, 4, n)
        shown = ", ".join(f"{format_monomial(m)} (deg {m.degree})" for m in basis)
        print(f"HW({I}, {J}): {shown}")

# u_ij is the square root of the third variable; composing there and back gives it in full.
for i, j, k in permutations(range(3)):
    u_ij = parse_monomial(f"z{k}^1/2", n)
    u_jk = parse_monomial(f"z{i}^1/2", n)
    back = mu2({i}, {j}, {i}, u_ij, u_ij, n)
    onward = mu2({i}, {j}, {k}, u_ij, u_jk, n)
    print(f"u_{j}{i} * u_{i}{j} = {format_monomial(back)}   u_{j}{k} * u_{i}{j} =",
          "0" if onward is ZERO else format_monomial(onward))

# Exact triangles come from partitions of {0, 1, 2}; the check confirms that
# consecutive maps compose to zero and that the triple product lands on the identity.
for t in enumerate_triangles(n):
    c = check_triangle(t)
    print(t, "passes" if c.passed else c.failures)

# Inverting z0 keeps only the towers that never hit the relations.
dims = localized_hw_dims({1}, {1}, 6, n)
print("localized HW(L{1}, L{1}) by parity:", {i: dims.series(i) for i in (0, 1)})

# One dimension up there are seven Lagrangians and twelve triangles.
print("Pi_2:", len(all_labels(2)), "labels,",
      sum(check_triangle(t).passed for t in enumerate_triangles(2)), "passing triangles")
