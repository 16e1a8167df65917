"""Finite digroups as pairs of Cayley tables.

A digroup is a set G with two binary operations, the left product ``x >> y``
(written ``x ⇀ y``) and the right product ``x << y`` (written ``x ↼ y``),
together with a distinguished bar-unit e, satisfying

  1. the diassociative law, five mixed associativity identities:
       x⇀(y⇀z) = (x⇀y)⇀z = x⇀(y↼z)
       (x↼y)⇀z = x↼(y⇀z)
       (x⇀y)↼z = (x↼y)↼z = x↼(y↼z)
  2. the bar-unit laws  x⇀e = x = e↼x  and  x↼e = e⇀x,
  3. for every x a (necessarily unique) Liu inverse y with y⇀x = e = x↼y.

When the two products coincide the structure is an ordinary group and the Liu
inverse is the group inverse.  Elements are dense indices 0..n-1; the
distinguished identity may sit at any index, although all builtins put it at 0.

Tables are stored row-major with the row index as the left operand:
``left[x][y] = x ⇀ y`` and ``right[x][y] = x ↼ y``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

Element = int

# Law identifiers, in report order.  DIASSOC_1..5 are the five equalities of
# the diassociative law in the order listed in the module docstring.
DIASSOC_1 = "DIASSOC_1"  # x⇀(y⇀z) = (x⇀y)⇀z
DIASSOC_2 = "DIASSOC_2"  # (x⇀y)⇀z = x⇀(y↼z)
DIASSOC_3 = "DIASSOC_3"  # (x↼y)⇀z = x↼(y⇀z)
DIASSOC_4 = "DIASSOC_4"  # (x⇀y)↼z = (x↼y)↼z
DIASSOC_5 = "DIASSOC_5"  # (x↼y)↼z = x↼(y↼z)
BARUNIT_RIGHT = "BARUNIT_RIGHT"  # x⇀e = x
BARUNIT_LEFT = "BARUNIT_LEFT"  # e↼x = x
BARUNIT_SWAP = "BARUNIT_SWAP"  # x↼e = e⇀x
INVERSE_MISSING = "INVERSE_MISSING"  # no y with y⇀x = e = x↼y

DIGROUP_LAWS = (
    DIASSOC_1,
    DIASSOC_2,
    DIASSOC_3,
    DIASSOC_4,
    DIASSOC_5,
    BARUNIT_RIGHT,
    BARUNIT_LEFT,
    BARUNIT_SWAP,
    INVERSE_MISSING,
)


class DigroupError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTableError(DigroupError):
    """A table or mapping breaks a structural invariant (shape, range)."""


class UnsupportedOrderError(DigroupError):
    """The requested order is beyond the cap of an exhaustive routine."""


class ConstructionError(DigroupError):
    """A self-verifying construction produced an object failing its checks."""


def _as_matrix(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class DigroupTable:
    """A pointed carrier with two n x n operation tables.

    Structural well-formedness (square tables, entries in range, distinct
    labels) is enforced at construction time and raises
    :class:`MalformedTableError`.  Whether the tables satisfy the digroup
    axioms is a separate question answered by :func:`validate_digroup`.
    """

    order: int
    identity: Element
    left: tuple[tuple[Element, ...], ...]
    right: tuple[tuple[Element, ...], ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "left", _as_matrix(self.left))
        object.__setattr__(self, "right", _as_matrix(self.right))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        n = self.order
        if n < 1:
            raise MalformedTableError(f"order must be >= 1, got {n}")
        if not (0 <= self.identity < n):
            raise MalformedTableError(
                f"identity index {self.identity} out of range for order {n}"
            )
        for name, table in (("left", self.left), ("right", self.right)):
            if len(table) != n:
                raise MalformedTableError(
                    f"{name} table must have {n} rows, found {len(table)}"
                )
            for x, row in enumerate(table):
                if len(row) != n:
                    raise MalformedTableError(
                        f"{name} table row {x} must have {n} entries, found {len(row)}"
                    )
                for y, v in enumerate(row):
                    if not (0 <= v < n):
                        raise MalformedTableError(
                            f"entry {v} out of range at {name}[{x}][{y}]"
                        )
        if self.labels is not None:
            if len(self.labels) != n:
                raise MalformedTableError(
                    f"labels must have {n} entries, found {len(self.labels)}"
                )
            if len(set(self.labels)) != n:
                raise MalformedTableError("labels must be pairwise distinct")

    def lprod(self, x: Element, y: Element) -> Element:
        """Left product x ⇀ y."""
        return self.left[x][y]

    def rprod(self, x: Element, y: Element) -> Element:
        """Right product x ↼ y."""
        return self.right[x][y]

    def label(self, x: Element) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class Violation:
    """One broken law with the lexicographically first witness tuple."""

    law: str
    witnesses: tuple[Element, ...]
    lhs: Optional[Element] = None
    rhs: Optional[Element] = None


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "violations", tuple(self.violations))
        if self.ok != (not self.violations):
            raise MalformedTableError("ok flag must match emptiness of violations")

    @staticmethod
    def from_violations(violations: Sequence[Violation]) -> "ValidationReport":
        vs = tuple(violations)
        return ValidationReport(ok=not vs, violations=vs)


@dataclass(frozen=True)
class Mapping:
    """A finite function between index sets, as an image vector.

    Used for homomorphisms, Liu-inverse maps, relabelings and transform
    labelings alike.
    """

    domain_size: int
    codomain_size: int
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(v) for v in self.image))
        if len(self.image) != self.domain_size:
            raise MalformedTableError(
                f"mapping image has {len(self.image)} entries, "
                f"expected {self.domain_size}"
            )
        for x, v in enumerate(self.image):
            if not (0 <= v < self.codomain_size):
                raise MalformedTableError(f"mapping image[{x}] = {v} out of range")

    def __call__(self, x: int) -> int:
        return self.image[x]

    def is_bijection(self) -> bool:
        return self.domain_size == self.codomain_size and len(set(self.image)) == len(
            self.image
        )

    def inverse(self) -> "Mapping":
        if not self.is_bijection():
            raise MalformedTableError("cannot invert a non-bijective mapping")
        inv = [0] * self.domain_size
        for x, v in enumerate(self.image):
            inv[v] = x
        return Mapping(self.codomain_size, self.domain_size, tuple(inv))

    @staticmethod
    def identity(n: int) -> "Mapping":
        return Mapping(n, n, tuple(range(n)))


def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray, law: str) -> Optional[Violation]:
    bad = lhs != rhs
    if not bad.any():
        return None
    w = tuple(int(i) for i in np.argwhere(bad)[0])  # argwhere yields lex order
    return Violation(law, w, int(lhs[w]), int(rhs[w]))


def validate_digroup(table: DigroupTable) -> ValidationReport:
    """Decide every digroup axiom exhaustively over all n^3 triples.

    Returns a deterministic report: per broken law, one violation carrying the
    lexicographically first witness.  Structural malformation never reaches
    this function; it is rejected by the :class:`DigroupTable` constructor.
    """
    n = table.order
    e = table.identity
    L = np.array(table.left, dtype=np.int64)
    R = np.array(table.right, dtype=np.int64)

    violations: list[Violation] = []

    # Five diassociativity checks as whole tensors: A[x,y,z] patterns built by
    # fancy indexing, e.g. L[:, L] has entries L[x, L[y, z]].
    x_yz_l = L[:, L]  # x⇀(y⇀z)
    xy_z_l = L[L]  # (x⇀y)⇀z
    x_yz_lr = L[:, R]  # x⇀(y↼z)
    xy_z_rl = L[R]  # (x↼y)⇀z
    x_yz_rl = R[:, L]  # x↼(y⇀z)
    xy_z_lr = R[L]  # (x⇀y)↼z
    xy_z_r = R[R]  # (x↼y)↼z
    x_yz_r = R[:, R]  # x↼(y↼z)

    for law, lhs, rhs in (
        (DIASSOC_1, x_yz_l, xy_z_l),
        (DIASSOC_2, xy_z_l, x_yz_lr),
        (DIASSOC_3, xy_z_rl, x_yz_rl),
        (DIASSOC_4, xy_z_lr, xy_z_r),
        (DIASSOC_5, xy_z_r, x_yz_r),
    ):
        v = _first_mismatch(lhs, rhs, law)
        if v is not None:
            violations.append(v)

    idn = np.arange(n)
    v = _first_mismatch(L[:, e], idn, BARUNIT_RIGHT)
    if v is not None:
        violations.append(v)
    v = _first_mismatch(R[e, :], idn, BARUNIT_LEFT)
    if v is not None:
        violations.append(v)
    v = _first_mismatch(R[:, e], L[e, :], BARUNIT_SWAP)
    if v is not None:
        violations.append(v)

    # Liu inverse existence: some y with y⇀x = e and x↼y = e, for every x.
    has_inverse = np.any((L == e).T & (R == e), axis=1)
    if not has_inverse.all():
        x = int(np.argmin(has_inverse))
        violations.append(Violation(INVERSE_MISSING, (x,)))

    return ValidationReport.from_violations(violations)


def ensure_valid(table: DigroupTable) -> DigroupTable:
    """Validate and return the table, raising ConstructionError if it fails."""
    report = validate_digroup(table)
    if not report.ok:
        raise ConstructionError(
            f"table of order {table.order} is not a digroup: "
            + "; ".join(v.law for v in report.violations)
        )
    return table


def liu_inverse(table: DigroupTable, x: Element) -> Element:
    """The unique y with y ⇀ x = e = x ↼ y.  Requires a validated table."""
    e = table.identity
    for y in table.elements():
        if table.left[y][x] == e and table.right[x][y] == e:
            return y
    raise DigroupError(f"element {x} has no Liu inverse; table was not validated")


def liu_inverse_map(table: DigroupTable) -> Mapping:
    """Liu inverse of every element, as a self-mapping of the carrier."""
    n = table.order
    return Mapping(n, n, tuple(liu_inverse(table, x) for x in range(n)))


def commutes(table: DigroupTable, x: Element, y: Element) -> bool:
    """True iff x ⇀ y = y ↼ x."""
    return table.left[x][y] == table.right[y][x]


def is_commutative(table: DigroupTable) -> bool:
    n = table.order
    return all(commutes(table, x, y) for x in range(n) for y in range(n))


def is_group(table: DigroupTable) -> bool:
    """True iff the two products coincide entry-wise."""
    return table.left == table.right


# ---------------------------------------------------------------------------
# Builtins
# ---------------------------------------------------------------------------

_M_LABELS = ("0", "a")
_N_LABELS = ("e", "α", "β", "γ", "δ", "ε")

# Order-6 non-commutative digroup; rows are the left operand.
_N_LEFT = (
    (0, 1, 1, 1, 0, 0),
    (1, 0, 0, 0, 1, 1),
    (2, 4, 4, 4, 2, 2),
    (3, 5, 5, 5, 3, 3),
    (4, 2, 2, 2, 4, 4),
    (5, 3, 3, 3, 5, 5),
)
_N_RIGHT = (
    (0, 1, 2, 3, 4, 5),
    (1, 0, 5, 4, 3, 2),
    (1, 0, 5, 4, 3, 2),
    (1, 0, 5, 4, 3, 2),
    (0, 1, 2, 3, 4, 5),
    (0, 1, 2, 3, 4, 5),
)


def trivial_digroup(n: int, labels: Optional[Sequence[str]] = None) -> DigroupTable:
    """The projection digroup: x ⇀ y = x and x ↼ y = y, identity 0.

    Every element is a bar-unit here; 0 is the distinguished one.  The order-2
    instance is the smallest digroup that is not a group.
    """
    if n < 1:
        raise MalformedTableError("trivial digroup needs order >= 1")
    left = tuple(tuple(x for _ in range(n)) for x in range(n))
    right = tuple(tuple(range(n)) for _ in range(n))
    return DigroupTable(n, 0, left, right, tuple(labels) if labels else None)


def cyclic_group(n: int) -> DigroupTable:
    """The cyclic group of order n read as a digroup (both products equal)."""
    if n < 1:
        raise MalformedTableError("cyclic group needs order >= 1")
    rows = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    return DigroupTable(n, 0, rows, rows)


def symmetric_group_3() -> DigroupTable:
    """S3 as a digroup; elements are the permutations of three points in
    lexicographic order, composed left-to-right as functions."""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    compose = lambda p, q: tuple(p[q[k]] for k in range(3))
    rows = tuple(tuple(index[compose(p, q)] for q in perms) for p in perms)
    labels = tuple("".join(str(k) for k in p) for p in perms)
    return DigroupTable(6, 0, rows, rows, labels)


def direct_product(d1: DigroupTable, d2: DigroupTable) -> DigroupTable:
    """Componentwise product digroup on pairs (x1, x2) -> x1 * n2 + x2."""
    n1, n2 = d1.order, d2.order
    n = n1 * n2

    def pair(x1, x2):
        return x1 * n2 + x2

    left = [[0] * n for _ in range(n)]
    right = [[0] * n for _ in range(n)]
    for x1 in range(n1):
        for x2 in range(n2):
            for y1 in range(n1):
                for y2 in range(n2):
                    p, q = pair(x1, x2), pair(y1, y2)
                    left[p][q] = pair(d1.left[x1][y1], d2.left[x2][y2])
                    right[p][q] = pair(d1.right[x1][y1], d2.right[x2][y2])
    labels = None
    if d1.labels is not None and d2.labels is not None:
        labels = tuple(
            f"({d1.labels[x1]},{d2.labels[x2]})"
            for x1 in range(n1)
            for x2 in range(n2)
        )
    return DigroupTable(n, pair(d1.identity, d2.identity), left, right, labels)


def builtin(name: str) -> DigroupTable:
    """Builtin digroups by name.

    Accepted names: ``M``, ``N``, ``trivial(k)``, ``cyclic(k)`` (alias ``Zk``),
    and ``S3``.  M and N reproduce their source tables bit-exactly under the
    labels {0, a} and {e, α, β, γ, δ, ε}; M equals trivial(2).
    """
    name = name.strip()
    if name == "M":
        return trivial_digroup(2, _M_LABELS)
    if name == "N":
        return DigroupTable(6, 0, _N_LEFT, _N_RIGHT, _N_LABELS)
    if name == "S3":
        return symmetric_group_3()
    for prefix, factory in (("trivial", trivial_digroup), ("cyclic", cyclic_group)):
        if name.startswith(prefix + "(") and name.endswith(")"):
            body = name[len(prefix) + 1 : -1]
            try:
                k = int(body)
            except ValueError:
                raise DigroupError(f"bad order in builtin name {name!r}") from None
            return factory(k)
    if name.startswith("Z") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    raise DigroupError(f"unknown builtin {name!r}")


BUILTIN_NAMES = ("M", "N", "S3", "trivial(k)", "cyclic(k)", "Zk")
