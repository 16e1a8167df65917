#!/usr/bin/env python3
"""A first look at digroups: the two named examples M and N.

A digroup carries two products. Writing x ⇀ y for the left product and
x ↼ y for the right one, the distinguished identity e satisfies
x⇀e = x = e↼x and x↼e = e⇀x, and every element has a unique Liu inverse y
with y⇀x = e = x↼y.  When both products coincide the digroup is an ordinary
group, so the interesting specimens are the ones where they differ.
"""

from digroups import (
    builtin,
    commutes,
    is_commutative,
    is_group,
    liu_inverse_map,
    render_table,
    validate_digroup,
)

# M is the smallest digroup that is not a group: two elements, with the left
# product projecting onto its left argument and the right product onto its
# right argument.
m = builtin("M")
print(render_table(m))
report = validate_digroup(m)
print("M is a digroup:", report.ok)
print("M commutative:", is_commutative(m), " M a group:", is_group(m))
print("Liu inverses in M:", liu_inverse_map(m).image, "(0 inverts everything)")
print()

# N is the smallest non-commutative digroup that is not a group; order 6.
n = builtin("N")
print(render_table(n))
print("N is a digroup:", validate_digroup(n).ok)
print("N commutative:", is_commutative(n))
beta = 2
print(
    "witness: β⇀β =",
    n.label(n.left[beta][beta]),
    "but β↼β =",
    n.label(n.right[beta][beta]),
    "so commutes(β, β) is",
    commutes(n, beta, beta),
)
print("Liu inverses in N:", [n.label(y) for y in liu_inverse_map(n).image])

# Break an axiom on purpose and watch the checker name the law and witness.
from digroups import DigroupTable

broken = DigroupTable(2, 0, ((0, 0), (1, 0)), m.right)
for violation in validate_digroup(broken).violations:
    print("broken table:", violation.law, "at", violation.witnesses)
