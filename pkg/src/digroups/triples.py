"""Standard triples: the abstract shape behind the translation product.

A standard triple on a finite carrier is a transformation group, a
transformation semigroup with a right unit and a chosen left inverse for each
member, and a compatibility map phi from the semigroup to the group
satisfying:

    f∘e = f                      (right unit)
    linv(f)∘f = e                (left inverse)
    phi(f∘g) = phi(f)∘phi(g)     phi(S)∘S ⊆ S
    phi(e)∘f = f                 e∘f = phi(f)∘e
    phi(f)∘linv(f) = e
    f∘phi(g) = f∘g               phi(phi(f)∘g) = phi(f)∘phi(g)

Every digroup yields one (its left translation sets with phi), and every
standard triple yields a digroup on (group) x (semigroup) pairs:

    (α, f) ⇀ (β, g) = (α∘β, f∘g)
    (α, f) ↼ (β, g) = (α∘β, phi(f)∘g)

with identity (1, e) and Liu inverse (α⁻¹, linv(f)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .tables import (
    ConstructionError,
    DigroupTable,
    DigroupError,
    MalformedTableError,
    ValidationReport,
    Violation,
    ensure_valid,
    liu_inverse_map,
)
from .translations import Transform, TransformSet, left_translations
from .translations import phi as translation_phi

# Triple law codes, in report order.
GROUP_BIJECTION = "GROUP_BIJECTION"
GROUP_IDENTITY = "GROUP_IDENTITY"
GROUP_CLOSURE = "GROUP_CLOSURE"
GROUP_INVERSE = "GROUP_INVERSE"
SEMI_CLOSURE = "SEMI_CLOSURE"
SEMI_RIGHT_UNIT = "SEMI_RIGHT_UNIT"
SEMI_LEFT_INVERSE = "SEMI_LEFT_INVERSE"
PHI_HOMOMORPHISM = "PHI_HOMOMORPHISM"
PHI_ABSORB = "PHI_ABSORB"
PHI_UNIT_ACTS = "PHI_UNIT_ACTS"
PHI_UNIT_SWAP = "PHI_UNIT_SWAP"
PHI_LEFT_INVERSE = "PHI_LEFT_INVERSE"
PHI_RIGHT_ABSORB = "PHI_RIGHT_ABSORB"
PHI_COMPOSE = "PHI_COMPOSE"

TRIPLE_LAWS = (
    GROUP_BIJECTION,
    GROUP_IDENTITY,
    GROUP_CLOSURE,
    GROUP_INVERSE,
    SEMI_CLOSURE,
    SEMI_RIGHT_UNIT,
    SEMI_LEFT_INVERSE,
    PHI_HOMOMORPHISM,
    PHI_ABSORB,
    PHI_UNIT_ACTS,
    PHI_UNIT_SWAP,
    PHI_LEFT_INVERSE,
    PHI_RIGHT_ABSORB,
    PHI_COMPOSE,
)


class TripleValidationError(DigroupError):
    """A digroup was requested from a triple that fails validation."""


@dataclass(frozen=True)
class StandardTriple:
    """Group part, semigroup part, right unit, left-inverse selection, and
    phi, all as transforms of a common carrier.

    right_unit indexes into semi_part; left_inverse and phi are index maps on
    semi_part (phi lands in group_part).  The left-inverse selection is given
    data, never re-searched; validation checks it satisfies both inverse laws.
    """

    carrier_size: int
    group_part: TransformSet
    semi_part: TransformSet
    right_unit: int
    left_inverse: tuple[int, ...]
    phi: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "left_inverse", tuple(int(v) for v in self.left_inverse))
        object.__setattr__(self, "phi", tuple(int(v) for v in self.phi))
        ng, ns = len(self.group_part), len(self.semi_part)
        if self.group_part.carrier_size != self.carrier_size:
            raise MalformedTableError("group part carrier size mismatch")
        if self.semi_part.carrier_size != self.carrier_size:
            raise MalformedTableError("semi part carrier size mismatch")
        if not (0 <= self.right_unit < ns):
            raise MalformedTableError("right unit index out of range")
        if len(self.left_inverse) != ns or any(
            not (0 <= v < ns) for v in self.left_inverse
        ):
            raise MalformedTableError("left inverse map must index the semi part")
        if len(self.phi) != ns or any(not (0 <= v < ng) for v in self.phi):
            raise MalformedTableError("phi must map semi indices to group indices")


def validate_triple(triple: StandardTriple) -> ValidationReport:
    """Check every standard-triple condition exhaustively over all transform
    pairs.  Violations name the failing condition with transform-index
    witnesses; one violation per law, lexicographically first witness."""
    g = triple.group_part
    s = triple.semi_part
    eu = triple.right_unit
    unit = s.transforms[eu]
    ident = Transform.identity(triple.carrier_size)

    found: dict[str, Violation] = {}

    def report(law: str, *witnesses: int) -> None:
        if law not in found:
            found[law] = Violation(law, tuple(witnesses))

    for i, t in enumerate(g.transforms):
        if not t.is_bijection():
            report(GROUP_BIJECTION, i)
    if g.index_of(ident) is None:
        report(GROUP_IDENTITY)
    for i, a in enumerate(g.transforms):
        for k, b in enumerate(g.transforms):
            if g.index_of(a.compose(b)) is None:
                report(GROUP_CLOSURE, i, k)
        if a.is_bijection():
            inv = [0] * triple.carrier_size
            for x, v in enumerate(a.image):
                inv[v] = x
            if g.index_of(Transform(triple.carrier_size, tuple(inv))) is None:
                report(GROUP_INVERSE, i)

    for j, f in enumerate(s.transforms):
        for l, h in enumerate(s.transforms):
            if s.index_of(f.compose(h)) is None:
                report(SEMI_CLOSURE, j, l)
        if f.compose(unit).image != f.image:
            report(SEMI_RIGHT_UNIT, j)
        if s.transforms[triple.left_inverse[j]].compose(f).image != unit.image:
            report(SEMI_LEFT_INVERSE, j)

    def phi_of(f: Transform) -> Transform | None:
        j = s.index_of(f)
        return g.transforms[triple.phi[j]] if j is not None else None

    for j, f in enumerate(s.transforms):
        pf = g.transforms[triple.phi[j]]
        if pf.compose(s.transforms[triple.left_inverse[j]]).image != unit.image:
            report(PHI_LEFT_INVERSE, j)
        if j == eu:
            for l, h in enumerate(s.transforms):
                if pf.compose(h).image != h.image:
                    report(PHI_UNIT_ACTS, l)
        if unit.compose(f).image != pf.compose(unit).image:
            report(PHI_UNIT_SWAP, j)
        for l, h in enumerate(s.transforms):
            ph = g.transforms[triple.phi[l]]
            composed_phi = phi_of(f.compose(h))
            if composed_phi is None or composed_phi.image != pf.compose(ph).image:
                report(PHI_HOMOMORPHISM, j, l)
            mixed = pf.compose(h)
            if s.index_of(mixed) is None:
                report(PHI_ABSORB, j, l)
            if f.compose(ph).image != f.compose(h).image:
                report(PHI_RIGHT_ABSORB, j, l)
            mixed_phi = phi_of(mixed)
            if mixed_phi is None or mixed_phi.image != pf.compose(ph).image:
                report(PHI_COMPOSE, j, l)

    ordered = [found[law] for law in TRIPLE_LAWS if law in found]
    return ValidationReport.from_violations(ordered)


def triple_from_digroup(table: DigroupTable) -> StandardTriple:
    """Extract the standard triple of a validated digroup: group part and
    semi part are its left translation sets, the right unit is the semi
    transform of e, the left inverse of the transform of a is the transform
    of the Liu inverse of a, and phi bridges the two sets."""
    group, semi = left_translations(table)
    e = table.identity
    liu = liu_inverse_map(table)
    phi_map = translation_phi(table)
    left_inverse = []
    for f in semi.transforms:
        a = f(e)
        left_inverse.append(semi.label_of(liu(a)))
    return StandardTriple(
        carrier_size=table.order,
        group_part=group,
        semi_part=semi,
        right_unit=semi.label_of(e),
        left_inverse=tuple(left_inverse),
        phi=tuple(phi_map.image),
    )


def digroup_from_triple(triple: StandardTriple) -> DigroupTable:
    """Build the pair digroup of a standard triple.

    The carrier is (group index, semi index) -> i * |semi| + j; the left
    product composes both components, the right product applies phi to the
    first factor's semi component.  Rejects triples failing validation, and
    verifies the produced table against the axiom checker.
    """
    report = validate_triple(triple)
    if not report.ok:
        raise TripleValidationError(
            "triple fails validation: " + "; ".join(v.law for v in report.violations)
        )
    g = triple.group_part
    s = triple.semi_part
    ng, ns = len(g), len(s)
    size = ng * ns

    def gi(i: int, k: int) -> int:
        idx = g.index_of(g.transforms[i].compose(g.transforms[k]))
        if idx is None:
            raise ConstructionError("group part not closed under composition")
        return idx

    def si(j: int, l: int) -> int:
        idx = s.index_of(s.transforms[j].compose(s.transforms[l]))
        if idx is None:
            raise ConstructionError("semi part not closed under composition")
        return idx

    def sphi(j: int, l: int) -> int:
        idx = s.index_of(g.transforms[triple.phi[j]].compose(s.transforms[l]))
        if idx is None:
            raise ConstructionError("phi image does not absorb into the semi part")
        return idx

    left = [[0] * size for _ in range(size)]
    right = [[0] * size for _ in range(size)]
    for i in range(ng):
        for j in range(ns):
            p = i * ns + j
            for k in range(ng):
                first = gi(i, k)
                for l in range(ns):
                    q = k * ns + l
                    left[p][q] = first * ns + si(j, l)
                    right[p][q] = first * ns + sphi(j, l)

    ident = g.index_of(Transform.identity(triple.carrier_size))
    if ident is None:
        raise ConstructionError("group part lacks the identity transform")
    identity_pair = ident * ns + triple.right_unit
    return ensure_valid(DigroupTable(size, identity_pair, left, right))
