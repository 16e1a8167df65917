#!/usr/bin/env python3
"""Standard triples: taking the translation structure apart and rebuilding.

A standard triple is the abstract shape of the left translation data: a
transformation group, a transformation semigroup with right unit and left
inverses, and a bridge map phi.  Every digroup yields one; every valid triple
builds a digroup on (group element, semigroup element) pairs.  Round-tripping
a digroup through its triple reproduces the translation product table cell
for cell.
"""

from digroups import (
    builtin,
    digroup_from_triple,
    find_isomorphism,
    serialize_triple,
    translation_product_digroup,
    triple_from_digroup,
    validate_digroup,
    validate_triple,
)

n = builtin("N")
triple = triple_from_digroup(n)
print("triple of N:", len(triple.group_part), "group maps,",
      len(triple.semi_part), "semigroup maps,",
      "right unit index", triple.right_unit)
print("validates:", validate_triple(triple).ok)
print()
print(serialize_triple(triple))

built = digroup_from_triple(triple)
print("digroup built from the triple: order", built.order,
      "validates:", validate_digroup(built).ok)
flat = translation_product_digroup(n).table
print("equals the translation product table:",
      built.left == flat.left and built.right == flat.right)
print()

# For a plain group the triple is two copies of the regular representation
# and the built digroup is the direct square.
from digroups import cyclic_group, direct_product

g = cyclic_group(3)
square = digroup_from_triple(triple_from_digroup(g))
print("cyclic(3) rebuilt:", square.order, "elements, isomorphic to Z3 x Z3:",
      find_isomorphism(square, direct_product(g, g)) is not None)
print()

# Tampering with the data is caught law by law.
from digroups import StandardTriple

broken = StandardTriple(
    triple.carrier_size,
    triple.group_part,
    triple.semi_part,
    right_unit=triple.semi_part.label_of(2),
    left_inverse=triple.left_inverse,
    phi=triple.phi,
)
for violation in validate_triple(broken).violations:
    print("broken triple:", violation.law, "witnesses", violation.witnesses)
