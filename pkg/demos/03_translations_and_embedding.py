#!/usr/bin/env python3
"""Translations and the digroup counterpart of Cayley's theorem.

Reading rows of the two tables as self-maps of the carrier gives the left
translation sets.  The maps x -> a↼x collapse to a group under composition;
the maps x -> a⇀x stay n distinct and form a semigroup with a right unit and
left inverses.  Pairing the two sets yields a product digroup, and
a -> (both translations of a) embeds the source onto its diagonal, exactly as
left multiplication embeds a group into its symmetric group.
"""

from digroups import (
    builtin,
    cayley_embedding,
    find_isomorphism,
    left_translations,
    pair_action,
    phi,
    restrict,
    right_translation_product,
    right_translations,
    validate_digroup,
    verify_translation_identities,
)

n = builtin("N")

group_part, semi_part = left_translations(n)
print(f"N has {len(group_part)} distinct x -> a↼x maps (a group):")
for t in group_part.transforms:
    print("   ", t.image)
print(f"and {len(semi_part)} distinct x -> a⇀x maps (the semigroup part).")
print()

print("phi collapses the semigroup part onto the group part:", phi(n).image)
print("identity suite over all element pairs:", verify_translation_identities(n).ok)
print()

prod = cayley_embedding(n)
print(f"product digroup order: {prod.table.order} (= 2 x 6), validates:",
      validate_digroup(prod.table).ok)
print("eta:", prod.eta.image)
diag = restrict(prod.table, prod.diagonal)
print("diagonal isomorphic to N:", find_isomorphism(n, diag) is not None)
print()

# The product acts on element pairs componentwise; its identity pair is NOT
# the identity action (the second component is the translation of e, which
# need not be the identity map).
m = builtin("M")
mprod = cayley_embedding(m)
print("identity pair of M's product acting on (0, a):",
      pair_action(mprod, mprod.table.identity, (0, 1)))
print()

# Right translations mirror everything with reversed composition; the
# construction re-verifies itself at build time.
rgrp, rsemi = right_translations(n)
print(f"right translations of N: {len(rgrp)} maps x -> x⇀a, {len(rsemi)} maps x -> x↼a")
rprod = right_translation_product(n)
print("right-translation product order:", rprod.table.order,
      "diagonal isomorphic to N:",
      find_isomorphism(n, restrict(rprod.table, rprod.diagonal)) is not None)
