"""Standard triples: extraction, validation, and the pair digroup."""

import pytest

from digroups import (
    StandardTriple,
    Transform,
    TransformSet,
    TripleValidationError,
    builtin,
    cyclic_group,
    digroup_from_triple,
    direct_product,
    find_isomorphism,
    is_subdigroup,
    liu_inverse_map,
    restrict,
    translation_product_digroup,
    triple_from_digroup,
    validate_digroup,
    validate_triple,
)
from digroups.triples import SEMI_RIGHT_UNIT


def test_triple_sizes(m_table, n_table):
    t = triple_from_digroup(m_table)
    assert t.carrier_size == 2 and len(t.group_part) == 1 and len(t.semi_part) == 2
    t = triple_from_digroup(n_table)
    assert t.carrier_size == 6 and len(t.group_part) == 2 and len(t.semi_part) == 6
    t = triple_from_digroup(cyclic_group(2))
    assert len(t.group_part) == len(t.semi_part) == 2
    assert sorted(t.phi) == [0, 1]


def test_extracted_triples_validate(identity_suite):
    for name, table in identity_suite.items():
        report = validate_triple(triple_from_digroup(table))
        assert report.ok, (name, [v.law for v in report.violations])


def test_group_regular_representation_triple():
    # for a plain group both parts are the regular representation and the
    # bridge map is a bijection
    g = builtin("S3")
    t = triple_from_digroup(g)
    assert {x.image for x in t.group_part.transforms} == {
        x.image for x in t.semi_part.transforms
    }
    assert validate_triple(t).ok


def test_broken_right_unit_detected(n_table):
    t = triple_from_digroup(n_table)
    # swap the right unit for a non-unit transform
    broken = StandardTriple(
        t.carrier_size,
        t.group_part,
        t.semi_part,
        right_unit=t.semi_part.label_of(2),  # the transform of β
        left_inverse=t.left_inverse,
        phi=t.phi,
    )
    report = validate_triple(broken)
    assert not report.ok
    assert any(v.law == SEMI_RIGHT_UNIT for v in report.violations)


def test_digroup_from_triple_round_trip_m(m_table):
    built = digroup_from_triple(triple_from_digroup(m_table))
    assert built.order == 2
    assert validate_digroup(built).ok
    assert find_isomorphism(built, m_table) is not None


def test_digroup_from_triple_round_trip_n(n_table):
    t = triple_from_digroup(n_table)
    built = digroup_from_triple(t)
    assert built.order == 12
    assert validate_digroup(built).ok
    # the diagonal pairs (phi(j), j) form a subdigroup isomorphic to N
    ns = len(t.semi_part)
    diag = {t.phi[j] * ns + j for j in range(ns)}
    assert is_subdigroup(built, diag)
    assert find_isomorphism(n_table, restrict(built, diag)) is not None


def test_group_triple_builds_group_square():
    g = cyclic_group(3)
    built = digroup_from_triple(triple_from_digroup(g))
    assert built.order == 9
    assert find_isomorphism(built, direct_product(g, g)) is not None


def test_round_trip_equals_translation_product(identity_suite):
    # shared transform ordering makes the two construction routes agree
    # cell by cell, identity included
    for name, table in identity_suite.items():
        built = digroup_from_triple(triple_from_digroup(table))
        prod = translation_product_digroup(table).table
        assert built.left == prod.left, name
        assert built.right == prod.right, name
        assert built.identity == prod.identity, name


def test_built_liu_inverse_is_componentwise(identity_suite):
    for table in identity_suite.values():
        t = triple_from_digroup(table)
        built = digroup_from_triple(t)
        liu = liu_inverse_map(built)
        ng, ns = len(t.group_part), len(t.semi_part)
        for i in range(ng):
            a = t.group_part.transforms[i]
            inv_image = [0] * t.carrier_size
            for x, v in enumerate(a.image):
                inv_image[v] = x
            ai = t.group_part.index_of(Transform(t.carrier_size, tuple(inv_image)))
            for j in range(ns):
                assert liu(i * ns + j) == ai * ns + t.left_inverse[j]


def test_digroup_from_triple_rejects_invalid(n_table):
    t = triple_from_digroup(n_table)
    broken = StandardTriple(
        t.carrier_size,
        t.group_part,
        t.semi_part,
        right_unit=t.semi_part.label_of(4),
        left_inverse=t.left_inverse,
        phi=t.phi,
    )
    with pytest.raises(TripleValidationError):
        digroup_from_triple(broken)


def test_external_triple_with_identity_labeling(n_table):
    # rebuild the triple through explicit transform lists, as a file would
    t = triple_from_digroup(n_table)
    group = TransformSet.from_rows(
        [tr.image for tr in t.group_part.transforms], labeled_by_element=False
    )
    semi = TransformSet.from_rows(
        [tr.image for tr in t.semi_part.transforms], labeled_by_element=False
    )
    rebuilt = StandardTriple(
        t.carrier_size, group, semi, t.right_unit, t.left_inverse, t.phi
    )
    assert validate_triple(rebuilt).ok
    assert digroup_from_triple(rebuilt).left == digroup_from_triple(t).left
