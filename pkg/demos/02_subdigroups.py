#!/usr/bin/env python3
"""Subdigroups of N: three equivalent criteria and generated closures."""

from digroups import (
    all_subdigroups,
    builtin,
    generated_subdigroup,
    restrict,
    render_table,
    subdigroup_criteria,
    validate_digroup,
)

n = builtin("N")

print("All subdigroups of N (identity e, Liu-inverse and product closed):")
for mask in all_subdigroups(n):
    members = "{" + ", ".join(n.label(x) for x in mask.sorted_members()) + "}"
    sub = restrict(n, mask)
    print(f"  {members:24s} restricted table validates: {validate_digroup(sub).ok}")

print()
print("The three criteria (restricted-table digroup / inverse-product sets /")
print("closure) always agree; a few subsets:")
for subset in ({0, 1}, {0, 2}, {0, 4, 5}, {1, 2}, set(range(6))):
    names = "{" + ", ".join(n.label(x) for x in sorted(subset)) + "}"
    print(f"  {names:24s} -> {subdigroup_criteria(n, subset)}")

print()
print("Generated subdigroups (closure of a seed plus the identity):")
for seed in ({2}, {4}, {5}, set()):
    closure = generated_subdigroup(n, seed)
    seed_names = "{" + ", ".join(n.label(x) for x in sorted(seed)) + "}"
    closure_names = "{" + ", ".join(n.label(x) for x in closure.sorted_members()) + "}"
    print(f"  <{seed_names}> = {closure_names}")

print()
print("The subdigroup {e, δ, ε}, re-indexed and rendered:")
print(render_table(restrict(n, {0, 4, 5})))
