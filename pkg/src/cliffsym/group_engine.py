"""Finite groups given by Cayley tables, and fingerprint identification."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, List, Optional, Sequence, Tuple

log = logging.getLogger(__name__)


class LimitExceeded(RuntimeError):
    pass


class NotNormal(ValueError):
    pass


class Unrecognized(LookupError):
    pass


@dataclass(frozen=True)
class OrderStructure:
    o2: int
    o4: int
    o8: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.o2, self.o4, self.o8)


@dataclass(frozen=True)
class FiniteGroupTable:
    elements: Tuple[Hashable, ...]
    cayley: Tuple[Tuple[int, ...], ...]
    identity_index: int = 0

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, element) -> int:
        return self.elements.index(element)

    def mul(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def inverse(self, i: int) -> int:
        row = self.cayley[i]
        return row.index(self.identity_index)

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity_index:
            x = self.cayley[x][i]
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.cayley[i][j] == self.cayley[j][i] for i in range(n) for j in range(i + 1, n))

    def subgroup(self, indices: Sequence[int]) -> "FiniteGroupTable":
        idx = sorted(set(indices))
        pos = {g: k for k, g in enumerate(idx)}
        table = tuple(tuple(pos[self.cayley[a][b]] for b in idx) for a in idx)
        return FiniteGroupTable(tuple(self.elements[g] for g in idx), table, pos[self.identity_index])

    def check_axioms(self, associativity: bool = True) -> None:
        n = self.order
        e = self.identity_index
        for i in range(n):
            row = self.cayley[i]
            if sorted(row) != list(range(n)):
                raise AssertionError(f"row {i} is not a permutation")
            if row[e] != i or self.cayley[e][i] != i:
                raise AssertionError("identity is not neutral")
        if associativity:
            c = self.cayley
            for a in range(n):
                for b in range(n):
                    ab = c[a][b]
                    for d in range(n):
                        if c[ab][d] != c[a][c[b][d]]:
                            raise AssertionError("multiplication is not associative")


def closure(generators: Sequence[Hashable], mul: Callable, limit: int = 4096,
            identity: Optional[Hashable] = None) -> FiniteGroupTable:
    """Generate the finite group spanned by ``generators`` under ``mul``.

    Elements are listed in breadth-first order starting from the identity.
    """
    gens = list(dict.fromkeys(generators))
    if identity is None:
        if not gens:
            raise ValueError("need generators or an explicit identity")
        identity = _find_identity(gens[0], mul, limit)
    elements = [identity]
    seen = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > limit:
                        raise LimitExceeded(f"closure exceeded {limit} elements")
        frontier = nxt
    table = tuple(tuple(seen[mul(a, b)] for b in elements) for a in elements)
    return FiniteGroupTable(tuple(elements), table, 0)


def _find_identity(g, mul, limit):
    x = g
    prev = None
    for _ in range(limit):
        prev, x = x, mul(x, g)
        if x == g:
            return prev
    raise LimitExceeded("generator has no finite order within the limit")


def order_structure(group: FiniteGroupTable) -> OrderStructure:
    counts = Counter(group.element_order(i) for i in range(group.order))
    extra = set(counts) - {1, 2, 4, 8}
    if extra:
        raise ValueError(f"element orders outside 1,2,4,8: {sorted(extra)}")
    return OrderStructure(counts[2], counts[4], counts[8])


def center(group: FiniteGroupTable) -> FiniteGroupTable:
    n = group.order
    c = group.cayley
    idx = [i for i in range(n) if all(c[i][j] == c[j][i] for j in range(n))]
    return group.subgroup(idx)


def factor_group(group: FiniteGroupTable, normal: FiniteGroupTable) -> FiniteGroupTable:
    """Quotient by a subgroup given with elements drawn from ``group``."""
    members = [group.index(x) for x in normal.elements]
    member_set = set(members)
    for g in range(group.order):
        gi = group.inverse(g)
        for h in members:
            if group.mul(group.mul(g, h), gi) not in member_set:
                raise NotNormal("subgroup is not normal")
    coset_of = {}
    reps: List[int] = []
    for g in range(group.order):
        if g in coset_of:
            continue
        k = len(reps)
        reps.append(g)
        for h in members:
            coset_of[group.mul(g, h)] = k
    table = tuple(tuple(coset_of[group.mul(a, b)] for b in reps) for a in reps)
    elements = tuple(frozenset(group.elements[group.mul(r, h)] for h in members) for r in reps)
    return FiniteGroupTable(elements, table, coset_of[group.identity_index])


def exponent(group: FiniteGroupTable) -> int:
    from math import lcm
    out = 1
    for i in range(group.order):
        out = lcm(out, group.element_order(i))
    return out


# -- catalog -------------------------------------------------------------------

CATALOG = (
    "trivial", "Z2", "Z4", "Z2×Z2", "Z2×Z2×Z2", "Z4×Z2", "Z8", "D4", "Q4", "Z4*×Z2",
    "Z2^4", "Z4×Z2×Z2", "Z4*×Z2×Z2", "D4×Z2", "Q4×Z2", "Z4/Z2", "Q4/Z2",
)

# (order, abelian, (o2, o4, o8)) -> name, for the genuine groups of the catalog.
FINGERPRINTS = {
    (1, True, (0, 0, 0)): "trivial",
    (2, True, (1, 0, 0)): "Z2",
    (4, True, (1, 2, 0)): "Z4",
    (4, True, (3, 0, 0)): "Z2×Z2",
    (8, True, (7, 0, 0)): "Z2×Z2×Z2",
    (8, True, (3, 4, 0)): "Z4×Z2",
    (8, True, (1, 2, 4)): "Z8",
    (8, False, (5, 2, 0)): "D4",
    (8, False, (1, 6, 0)): "Q4",
    (8, False, (3, 4, 0)): "Z4*×Z2",
    (16, True, (15, 0, 0)): "Z2^4",
    (16, True, (7, 8, 0)): "Z4×Z2×Z2",
    (16, False, (7, 8, 0)): "Z4*×Z2×Z2",
    (16, False, (11, 4, 0)): "D4×Z2",
    (16, False, (3, 12, 0)): "Q4×Z2",
}

# A set of representatives closed up to sign is named after its double cover.
SIGN_QUOTIENT = {
    "Z2": "trivial",
    "Z2×Z2": "Z2",
    "Z4": "Z4/Z2",
    "Z2×Z2×Z2": "Z2×Z2",
    "Z4×Z2": "Z4",
    "Q4": "Q4/Z2",
    "D4": "Z2×Z2",
    "Z2^4": "Z2×Z2×Z2",
    "Z4×Z2×Z2": "Z4×Z2",
    "Z4*×Z2×Z2": "Z4*×Z2",
    "D4×Z2": "D4",
    "Q4×Z2": "Q4",
}


@dataclass(frozen=True)
class GroupId:
    name: str
    label: Optional[str] = None

    def __str__(self) -> str:
        return self.name if self.label is None else f"{self.name} [{self.label}]"


def identify(order: int, abelian: bool, structure: Tuple[int, int, int]) -> GroupId:
    key = (order, bool(abelian), tuple(structure))
    try:
        return GroupId(FINGERPRINTS[key])
    except KeyError:
        raise Unrecognized(f"no catalog group with fingerprint {key}") from None


def classify_small_group(group: FiniteGroupTable) -> GroupId:
    if group.order not in (1, 2, 4, 8, 16):
        raise Unrecognized(f"order {group.order} outside the catalog")
    return identify(group.order, group.is_abelian(), order_structure(group).as_tuple())


def fingerprint(group: FiniteGroupTable) -> Tuple[int, bool, Tuple[int, int, int], int]:
    """(order, abelian, order structure, centre order), used for large groups."""
    return (group.order, group.is_abelian(), order_structure(group).as_tuple(), center(group).order)


def sign_quotient_name(cover: GroupId) -> GroupId:
    try:
        return GroupId(SIGN_QUOTIENT[cover.name])
    except KeyError:
        raise Unrecognized(f"no catalog name for {cover.name} modulo its central sign") from None
