"""
Checking the mirror dictionary
==============================

On the B-side the pair of pants Pi_n is mirror to the singular fiber
Z = {z_1 ... z_{n+1} = 0} in C^{n+1}. A Lagrangian L_I goes to the structure
sheaf of a union of coordinate hyperplanes, so wrapped Floer groups should
match Ext groups over Z. This demo compares the two sides for Pi_1 and Pi_2,
then checks that restriction to the boundary Pi_{n-1} agrees with passing
to the singularity category.
"""

from tropmirror.atlas import L, check_square, local_pn_dims, mirror_assignment
from tropmirror.ext import compare_hw_ext, ext_classes, mirror_module
from tropmirror.pants import all_labels

# The mirror of L{1} in Pi_1 is the module R/(z_1) over R = C[z_1, z_2]/(z_1 z_2).
M = mirror_module({1}, 1)
print("mirror of L{1}:", M)

# Ext^k(M, M) by internal degree: a polynomial ring in degree 0, then C in every even degree.
t = ext_classes(M, M, 6, 5)
for k in range(7):
    print(f"  Ext^{k}: {t.series(k)}")

# Wrapped Floer groups and Ext groups agree once both series are aligned at their first nonzero term.
r = compare_hw_ext(1, {1}, {2}, 6, 10)
for row in r.rows[:3]:
    print(f"  k={row.k}: HW {row.hw}  Ext {row.ext}  shift {row.shift}")

# The same comparison over every ordered pair of Lagrangians in Pi_2.
ok = sum(compare_hw_ext(2, I, J, 6, 10).passed for I in all_labels(2) for J in all_labels(2))
print(f"Pi_2: {ok} of {len(all_labels(2)) ** 2} pairs agree")

# Object by object: restrict to the boundary, or take the mirror and pass to the singular locus.
report = check_square(2)
for row in report.objects:
    print(f"  {row['object']:8} -> {row['rho']:8} mirror {row['mirror']:8} "
          f"-> {row['sg_of_mirror']:12} commutes={row['commutes']}")
print("squares:", report.squares)
print("mirror and back from L{1,2}:", mirror_assignment(mirror_assignment(L({1, 2}, 2)), "inverse"))

# A closed-form aside: endomorphisms of the zero section of local P^2 in degree d.
print("local P^2:", [local_pn_dims(2, d) for d in range(5)])
