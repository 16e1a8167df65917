"""Translation representations and the Cayley-style embedding.

For an element a of a digroup there are four translation maps:

    by the left product:   x -> a ⇀ x   (rows of the left table)
    by the right product:  x -> a ↼ x   (rows of the right table)
    and their right-handed mirrors x -> x ⇀ a, x -> x ↼ a (columns).

Read as sets of self-maps of the carrier these collapse: translations by the
right product form a group under composition, while the family x -> a ⇀ x is
a semigroup with a right unit and left inverses, always of size n because it
is labeled injectively by a = f(e).  The map phi sending the semigroup-part
transform of a to its group-part transform is a semigroup homomorphism.

Composing the two families pairwise turns (group part) x (semi part) into a
digroup, and a -> (both translations of a) embeds the original digroup onto
the diagonal of that product: the digroup counterpart of Cayley's theorem.
The mirrored construction on right translations is built with reversed
composition order and is verified at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

from .morphisms import find_isomorphism, is_homomorphism
from .subdigroups import SubsetMask, is_subdigroup, restrict
from .tables import (
    ConstructionError,
    DigroupTable,
    Element,
    Mapping,
    MalformedTableError,
    ValidationReport,
    Violation,
    ensure_valid,
    liu_inverse_map,
)

# Translation identity suite law codes, in report order.
TRANS_GRP_LPROD = "TRANS_GRP_LPROD"  # grp(a⇀b) = grp(a)∘grp(b)
TRANS_GRP_RPROD = "TRANS_GRP_RPROD"  # grp(a↼b) = grp(a)∘grp(b)
TRANS_MIXED_RPROD = "TRANS_MIXED_RPROD"  # semi(a↼b) = grp(a)∘semi(b)
TRANS_GRP_IDENTITY = "TRANS_GRP_IDENTITY"  # grp(e) = id
TRANS_GRP_INVERSE = "TRANS_GRP_INVERSE"  # grp(ǎ)∘grp(a) = id = grp(a)∘grp(ǎ)
TRANS_SEMI_PROD = "TRANS_SEMI_PROD"  # semi(a⇀b) = semi(a)∘semi(b)
TRANS_SEMI_MIXED = "TRANS_SEMI_MIXED"  # semi(a)∘semi(b) = semi(a)∘grp(b)
TRANS_SEMI_RIGHT_UNIT = "TRANS_SEMI_RIGHT_UNIT"  # semi(a)∘semi(e) = semi(a)
TRANS_SEMI_UNIT_SWAP = "TRANS_SEMI_UNIT_SWAP"  # semi(e)∘semi(a) = grp(a)∘semi(e)
TRANS_SEMI_LEFT_INVERSE = "TRANS_SEMI_LEFT_INVERSE"  # semi(ǎ)∘semi(a) = semi(e)
TRANS_SEMI_MIXED_INVERSE = "TRANS_SEMI_MIXED_INVERSE"  # grp(a)∘semi(ǎ) = semi(e)
PHI_IDENTITY = "PHI_IDENTITY"  # phi(semi(e)) = id
PHI_HOMOMORPHISM = "PHI_HOMOMORPHISM"  # phi(f∘g) = phi(f)∘phi(g)
PHI_UNIT_SWAP = "PHI_UNIT_SWAP"  # semi(e)∘semi(a) = phi(semi(a))∘semi(e)
PHI_LEFT_INVERSE = "PHI_LEFT_INVERSE"  # phi(semi(a))∘semi(ǎ) = semi(e)
PHI_ABSORB = "PHI_ABSORB"  # semi(a)∘phi(semi(b)) = semi(a)∘semi(b)
PHI_COMPOSE = "PHI_COMPOSE"  # phi(phi(semi(a))∘semi(b)) = phi(semi(a))∘phi(semi(b))

TRANSLATION_LAWS = (
    TRANS_GRP_LPROD,
    TRANS_GRP_RPROD,
    TRANS_MIXED_RPROD,
    TRANS_GRP_IDENTITY,
    TRANS_GRP_INVERSE,
    TRANS_SEMI_PROD,
    TRANS_SEMI_MIXED,
    TRANS_SEMI_RIGHT_UNIT,
    TRANS_SEMI_UNIT_SWAP,
    TRANS_SEMI_LEFT_INVERSE,
    TRANS_SEMI_MIXED_INVERSE,
    PHI_IDENTITY,
    PHI_HOMOMORPHISM,
    PHI_UNIT_SWAP,
    PHI_LEFT_INVERSE,
    PHI_ABSORB,
    PHI_COMPOSE,
)


@dataclass(frozen=True)
class Transform:
    """A self-map of a finite carrier; composition applies the right factor
    first: (f.compose(g))(x) = f(g(x))."""

    carrier_size: int
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(v) for v in self.image))
        if len(self.image) != self.carrier_size:
            raise MalformedTableError("transform image length != carrier size")
        for v in self.image:
            if not (0 <= v < self.carrier_size):
                raise MalformedTableError(f"transform image value {v} out of range")

    def __call__(self, x: int) -> int:
        return self.image[x]

    def compose(self, other: "Transform") -> "Transform":
        if other.carrier_size != self.carrier_size:
            raise MalformedTableError("cannot compose transforms of different carriers")
        return Transform(
            self.carrier_size, tuple(self.image[v] for v in other.image)
        )

    def is_identity(self) -> bool:
        return all(v == x for x, v in enumerate(self.image))

    def is_bijection(self) -> bool:
        return len(set(self.image)) == self.carrier_size

    @staticmethod
    def identity(n: int) -> "Transform":
        return Transform(n, tuple(range(n)))


@dataclass(frozen=True)
class TransformSet:
    """Distinct transforms with a labeling of carrier elements onto them.

    Duplicate functions collapse (set semantics); label_of records which
    transform each element's translation became, and is surjective.
    """

    carrier_size: int
    transforms: tuple[Transform, ...]
    label_of: Mapping

    def __post_init__(self):
        images = [t.image for t in self.transforms]
        if len(set(images)) != len(images):
            raise MalformedTableError("transform set contains duplicate functions")
        if set(self.label_of.image) != set(range(len(self.transforms))):
            raise MalformedTableError("element labeling must cover every transform")

    def __len__(self) -> int:
        return len(self.transforms)

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {t.image: i for i, t in enumerate(self.transforms)}

    def index_of(self, t: Transform) -> Optional[int]:
        """Index of a transform by extension, or None if absent."""
        return self._index.get(t.image)

    @staticmethod
    def from_rows(rows, labeled_by_element: bool = True) -> "TransformSet":
        """Build from per-element image rows, deduplicating in first-seen
        order.  With labeled_by_element=False the rows are taken as already
        distinct transforms labeled by their own position."""
        rows = [tuple(int(v) for v in row) for row in rows]
        if not rows:
            raise MalformedTableError("transform set needs at least one transform")
        n = len(rows[0])
        seen: dict[tuple[int, ...], int] = {}
        transforms: list[Transform] = []
        labels: list[int] = []
        for row in rows:
            if row not in seen:
                seen[row] = len(transforms)
                transforms.append(Transform(n, row))
            labels.append(seen[row])
        if not labeled_by_element and len(transforms) != len(rows):
            raise MalformedTableError("explicit transform list must be duplicate-free")
        return TransformSet(
            n, tuple(transforms), Mapping(len(rows), len(transforms), tuple(labels))
        )


class TranslationPair(NamedTuple):
    """Group-part and semigroup-part translation sets of one digroup."""

    group_part: TransformSet
    semi_part: TransformSet


def left_translations(table: DigroupTable) -> TranslationPair:
    """Left translation sets: the group part collects x -> a ↼ x (rows of the
    right table; these collapse), the semi part x -> a ⇀ x (rows of the left
    table; always n distinct members since they send e to a)."""
    group = TransformSet.from_rows(table.right)
    semi = TransformSet.from_rows(table.left)
    return TranslationPair(group, semi)


def right_translations(table: DigroupTable) -> TranslationPair:
    """Right translation sets: the group part collects x -> x ⇀ a (columns of
    the left table), the semi part x -> x ↼ a (columns of the right table;
    always n distinct since they send e to a)."""
    n = table.order
    lcols = [tuple(table.left[x][a] for x in range(n)) for a in range(n)]
    rcols = [tuple(table.right[x][a] for x in range(n)) for a in range(n)]
    group = TransformSet.from_rows(lcols)
    semi = TransformSet.from_rows(rcols)
    return TranslationPair(group, semi)


def phi(table: DigroupTable) -> Mapping:
    """The semigroup homomorphism from semi-part transforms to group-part
    transforms, indexed over the left translation sets.

    Well-defined because a semi-part transform determines its element as the
    image of e; sends the transform of e to the identity transform.
    """
    group, semi = left_translations(table)
    e = table.identity
    image = []
    for f in semi.transforms:
        a = f(e)
        image.append(group.label_of(a))
    return Mapping(len(semi), len(group), tuple(image))


def _first_violation(store: dict, law: str, witnesses: tuple[int, ...]) -> None:
    if law not in store:
        store[law] = Violation(law, witnesses)


def verify_translation_identities(table: DigroupTable) -> ValidationReport:
    """Exhaustively check every translation identity over all element pairs.

    Covers the compatibility of translations with both products, the group
    structure of the group part, the right unit and left inverses of the semi
    part, and every phi law.  One violation per law, first witness in
    lexicographic (a, b) order.
    """
    n = table.order
    e = table.identity
    group, semi = left_translations(table)
    liu = liu_inverse_map(table)
    phi_map = phi(table)
    ident = Transform.identity(n)

    def grp(a: Element) -> Transform:
        return group.transforms[group.label_of(a)]

    def sem(a: Element) -> Transform:
        return semi.transforms[semi.label_of(a)]

    found: dict[str, Violation] = {}

    if grp(e).image != ident.image:
        _first_violation(found, TRANS_GRP_IDENTITY, (e,))
    if phi_map(semi.label_of(e)) != group.index_of(ident):
        _first_violation(found, PHI_IDENTITY, (e,))

    for a in range(n):
        ai = liu(a)
        if grp(ai).compose(grp(a)).image != ident.image or grp(a).compose(
            grp(ai)
        ).image != ident.image:
            _first_violation(found, TRANS_GRP_INVERSE, (a,))
        if sem(a).compose(sem(e)).image != sem(a).image:
            _first_violation(found, TRANS_SEMI_RIGHT_UNIT, (a,))
        if sem(e).compose(sem(a)).image != grp(a).compose(sem(e)).image:
            _first_violation(found, TRANS_SEMI_UNIT_SWAP, (a,))
        if sem(ai).compose(sem(a)).image != sem(e).image:
            _first_violation(found, TRANS_SEMI_LEFT_INVERSE, (a,))
        if grp(a).compose(sem(ai)).image != sem(e).image:
            _first_violation(found, TRANS_SEMI_MIXED_INVERSE, (a,))
        pa = group.transforms[phi_map(semi.label_of(a))]
        if sem(e).compose(sem(a)).image != pa.compose(sem(e)).image:
            _first_violation(found, PHI_UNIT_SWAP, (a,))
        if pa.compose(sem(ai)).image != sem(e).image:
            _first_violation(found, PHI_LEFT_INVERSE, (a,))

    for a in range(n):
        pa = group.transforms[phi_map(semi.label_of(a))]
        for b in range(n):
            lab = table.left[a][b]
            rab = table.right[a][b]
            pb = group.transforms[phi_map(semi.label_of(b))]
            if grp(lab).image != grp(a).compose(grp(b)).image:
                _first_violation(found, TRANS_GRP_LPROD, (a, b))
            if grp(rab).image != grp(a).compose(grp(b)).image:
                _first_violation(found, TRANS_GRP_RPROD, (a, b))
            # The composite grp(a)∘semi(b) evaluates x to a↼(b⇀x), which the
            # mixed associativity law rewrites to (a↼b)⇀x: the semi transform
            # of a↼b.  This is also what keeps the product construction's
            # right operation well-defined.
            if sem(rab).image != grp(a).compose(sem(b)).image:
                _first_violation(found, TRANS_MIXED_RPROD, (a, b))
            if sem(lab).image != sem(a).compose(sem(b)).image:
                _first_violation(found, TRANS_SEMI_PROD, (a, b))
            if sem(a).compose(sem(b)).image != sem(a).compose(grp(b)).image:
                _first_violation(found, TRANS_SEMI_MIXED, (a, b))
            # phi is a homomorphism: the composite of two semi transforms is
            # the semi transform of a⇀b, so compare phi there.
            if phi_map(semi.label_of(lab)) != group.index_of(pa.compose(pb)):
                _first_violation(found, PHI_HOMOMORPHISM, (a, b))
            if sem(a).compose(pb).image != sem(a).compose(sem(b)).image:
                _first_violation(found, PHI_ABSORB, (a, b))
            mixed = pa.compose(sem(b))
            mixed_idx = semi.index_of(mixed)
            if mixed_idx is None or phi_map(mixed_idx) != group.index_of(
                pa.compose(pb)
            ):
                _first_violation(found, PHI_COMPOSE, (a, b))

    ordered = [found[law] for law in TRANSLATION_LAWS if law in found]
    return ValidationReport.from_violations(ordered)


@dataclass(frozen=True)
class ProductDigroup:
    """A digroup built on pairs of transforms, with the embedding of the
    source digroup onto its diagonal.

    pair_labels[p] gives the (first component index, second component index)
    of carrier point p; eta maps source elements into the carrier; diagonal is
    the image of eta.  first_parts and second_parts hold the transform sets
    the two components are drawn from, so pairs can act on points.
    """

    table: DigroupTable
    pair_labels: tuple[tuple[int, int], ...]
    eta: Mapping
    diagonal: SubsetMask
    first_parts: TransformSet
    second_parts: TransformSet


def _compose_index(ts: TransformSet, i: int, k: int, context: str) -> int:
    idx = ts.index_of(ts.transforms[i].compose(ts.transforms[k]))
    if idx is None:
        raise ConstructionError(f"{context}: composition escapes the transform set")
    return idx


def translation_product_digroup(table: DigroupTable) -> ProductDigroup:
    """The digroup on (group part) x (semi part) of the left translations.

    Pairs are indexed (i, j) -> i * |semi| + j.  The left product composes
    both components; the right product composes first components and sets the
    second to the semi transform of b ↼ d, where b and d are the second
    components' labels recovered as f(e).  The label route and the transform
    route phi(f)∘g must agree and the result must pass the axiom checker;
    both are verified here.
    """
    n = table.order
    e = table.identity
    group, semi = left_translations(table)
    phi_map = phi(table)
    g, s = len(group), len(semi)

    def right_second(j: int, l: int) -> int:
        b = semi.transforms[j](e)
        d = semi.transforms[l](e)
        by_label = semi.label_of(table.right[b][d])
        composed = group.transforms[phi_map(j)].compose(semi.transforms[l])
        by_transform = semi.index_of(composed)
        if by_transform != by_label:
            raise ConstructionError(
                "right product second component is not well-defined: "
                f"label route gives {by_label}, transform route {by_transform}"
            )
        return by_label

    size = g * s
    left = [[0] * size for _ in range(size)]
    right = [[0] * size for _ in range(size)]
    pair_labels = tuple((i, j) for i in range(g) for j in range(s))
    for i in range(g):
        for j in range(s):
            p = i * s + j
            for k in range(g):
                first = _compose_index(group, i, k, "translation product group part")
                for l in range(s):
                    q = k * s + l
                    left[p][q] = first * s + _compose_index(
                        semi, j, l, "translation product semi part"
                    )
                    right[p][q] = first * s + right_second(j, l)

    ident_first = group.index_of(Transform.identity(n))
    if ident_first is None:
        raise ConstructionError("group part lacks the identity transform")
    identity_pair = ident_first * s + semi.label_of(e)
    product = ensure_valid(DigroupTable(size, identity_pair, left, right))

    eta = Mapping(
        n, size, tuple(group.label_of(a) * s + semi.label_of(a) for a in range(n))
    )
    diagonal = SubsetMask.of(size, set(eta.image))
    return ProductDigroup(product, pair_labels, eta, diagonal, group, semi)


def _verify_embedding(source: DigroupTable, prod: ProductDigroup, what: str) -> None:
    if len(set(prod.eta.image)) != source.order:
        raise ConstructionError(f"{what}: embedding is not injective")
    if not is_homomorphism(source, prod.table, prod.eta):
        raise ConstructionError(f"{what}: embedding is not a homomorphism")
    if not is_subdigroup(prod.table, prod.diagonal):
        raise ConstructionError(f"{what}: diagonal is not a subdigroup")
    restricted = restrict(prod.table, prod.diagonal)
    if find_isomorphism(source, restricted) is None:
        raise ConstructionError(f"{what}: diagonal is not isomorphic to the source")


def cayley_embedding(table: DigroupTable) -> ProductDigroup:
    """The translation product together with the diagonal embedding
    a -> (group transform of a, semi transform of a), verified: eta is an
    injective homomorphism and the diagonal is a subdigroup isomorphic to the
    source."""
    prod = translation_product_digroup(table)
    _verify_embedding(table, prod, "left translation embedding")
    return prod


def pair_action(
    prod: ProductDigroup, pair: int, point: tuple[Element, Element]
) -> tuple[Element, Element]:
    """Natural componentwise action of a product carrier point on a pair of
    source elements.  The identity pair need not act as the identity map."""
    i, j = prod.pair_labels[pair]
    x, y = point
    return (prod.first_parts.transforms[i](x), prod.second_parts.transforms[j](y))


def right_translation_product(table: DigroupTable) -> ProductDigroup:
    """The mirrored product digroup on right translations.

    The carrier pairs an x -> x ↼ a transform (first component, n distinct)
    with an x -> x ⇀ a transform (second component, the group part of the
    right translations).  Because right translations reverse products under
    composition, both pair products compose second components in reversed
    order, and first components multiply through their element labels.  The
    construction is self-verifying: the result must pass the axiom checker
    and carry the diagonal embedding, otherwise it aborts loudly.
    """
    n = table.order
    e = table.identity
    group, semi = right_translations(table)
    g = len(group)

    size = n * g
    left = [[0] * size for _ in range(size)]
    right = [[0] * size for _ in range(size)]
    pair_labels = tuple((i, j) for i in range(n) for j in range(g))
    elem_of = [semi.transforms[i](e) for i in range(len(semi))]
    if sorted(elem_of) != list(range(n)):
        raise ConstructionError("right translations are not labeled injectively")
    for i in range(n):
        a = elem_of[i]
        for j in range(g):
            p = i * g + j
            for k in range(n):
                c = elem_of[k]
                lfirst = semi.label_of(table.left[a][c])
                rfirst = semi.label_of(table.right[a][c])
                for l in range(g):
                    q = k * g + l
                    second = _compose_index(
                        group, l, j, "right translation group part"
                    )
                    left[p][q] = lfirst * g + second
                    right[p][q] = rfirst * g + second

    ident_second = group.index_of(Transform.identity(n))
    if ident_second is None:
        raise ConstructionError("right translation group part lacks the identity")
    identity_pair = semi.label_of(e) * g + ident_second
    try:
        product = ensure_valid(DigroupTable(size, identity_pair, left, right))
    except ConstructionError as exc:
        raise ConstructionError(
            f"right translation product is not a digroup: {exc}"
        ) from exc

    eta = Mapping(
        n, size, tuple(semi.label_of(a) * g + group.label_of(a) for a in range(n))
    )
    diagonal = SubsetMask.of(size, set(eta.image))
    prod = ProductDigroup(product, pair_labels, eta, diagonal, semi, group)
    _verify_embedding(table, prod, "right translation embedding")
    return prod
