"""Subdigroup criteria, generated closures, exhaustive subset scans."""

import itertools

import pytest
from hypothesis import given, strategies as st

from digroups import (
    SubsetMask,
    all_subdigroups,
    builtin,
    generated_subdigroup,
    is_subdigroup,
    liu_inverse_map,
    restrict,
    subdigroup_criteria,
    validate_digroup,
)


def brute_force_subdigroups(table):
    """Independent oracle: closure scan written from the definition."""
    liu = liu_inverse_map(table)
    found = []
    n = table.order
    for r in range(1, n + 1):
        for members in itertools.combinations(range(n), r):
            s = set(members)
            closed = all(liu(a) in s for a in s) and all(
                table.left[a][b] in s and table.right[a][b] in s
                for a in s
                for b in s
            )
            if closed:
                found.append(frozenset(s))
    return set(found)


def test_n_subdigroup_examples(n_table):
    assert is_subdigroup(n_table, {0, 1})  # {e, α}
    assert is_subdigroup(n_table, {0, 4, 5})  # {e, δ, ε}
    assert not is_subdigroup(n_table, {0, 2})  # β⇀β = δ escapes


def test_all_subdigroups_m(m_table):
    subs = [s.members for s in all_subdigroups(m_table)]
    assert subs == [frozenset({0}), frozenset({0, 1})]


def test_all_subdigroups_n_against_oracle(n_table):
    got = {s.members for s in all_subdigroups(n_table)}
    assert got == brute_force_subdigroups(n_table)
    for expected in ({0}, {0, 1}, {0, 4, 5}, set(range(6))):
        assert frozenset(expected) in got


def test_all_subdigroups_ascending_mask_order(n_table):
    masks = [s.mask for s in all_subdigroups(n_table)]
    assert masks == sorted(masks)


def test_trivial_1():
    t = builtin("trivial(1)")
    assert [s.members for s in all_subdigroups(t)] == [frozenset({0})]


@pytest.mark.parametrize("name", ["M", "N", "S3", "trivial(3)"])
def test_criteria_equivalence_exhaustive(name):
    table = builtin(name)
    n = table.order
    for mask in range(1 << n):
        subset = {x for x in range(n) if mask >> x & 1}
        a, b, c = subdigroup_criteria(table, subset)
        assert a == b == c, f"criteria disagree on {name} subset {subset}"


def test_criteria_empty_set(n_table):
    assert subdigroup_criteria(n_table, set()) == (False, False, False)


def test_generated_subdigroup_examples(n_table):
    assert generated_subdigroup(n_table, {2}).members == frozenset(range(6))
    assert generated_subdigroup(n_table, {4}).members == frozenset({0, 4})
    assert generated_subdigroup(n_table, set()).members == frozenset({0})


def test_generated_subdigroup_idempotent_and_monotone(n_table):
    for seed in ({1}, {2}, {4, 5}, {3}):
        closure = generated_subdigroup(n_table, seed)
        assert generated_subdigroup(n_table, closure.members).members == closure.members
        assert is_subdigroup(n_table, closure)
        assert table_identity_in(closure, n_table)


def table_identity_in(mask, table):
    return table.identity in mask.members


@given(
    st.sampled_from(["M", "N", "S3", "trivial(3)"]),
    st.sets(st.integers(0, 5), max_size=6),
)
def test_generated_subdigroup_contains_seed_and_identity(name, seed):
    table = builtin(name)
    seed = {x for x in seed if x < table.order}
    closure = generated_subdigroup(table, seed)
    assert seed <= closure.members
    assert table.identity in closure.members
    bigger = generated_subdigroup(table, closure.members | {0})
    assert closure.members <= bigger.members


def test_restricted_subdigroups_validate(n_table):
    for mask in all_subdigroups(n_table):
        sub = restrict(n_table, mask)
        assert validate_digroup(sub).ok
        assert sub.identity == sorted(mask.members).index(n_table.identity)


def test_subset_mask_range_checked():
    from digroups import MalformedTableError

    with pytest.raises(MalformedTableError):
        SubsetMask.of(3, {4})


def test_scan_cap():
    from digroups import UnsupportedOrderError
    from digroups import trivial_digroup

    with pytest.raises(UnsupportedOrderError):
        all_subdigroups(trivial_digroup(17))
