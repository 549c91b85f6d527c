"""Spinor representations built from primitive idempotents.

The left ideal Cl·f is treated as a right module over the division ring
K = f·Cl·f. Every vector m·f (m a blade) equals ± b_k·u_l for a chosen ideal
basis b_k and division-ring unit u_l, so all matrices are read off exactly by
lookup, with no linear algebra.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import exact
from .algebra_core import (
    Multivector, Signature, all_blades, blade_label, blade_product, blade_square,
    blades_commute, idempotent_factor, mv_product, parse_blade, volume_element,
)
from .exact import Gauss, Matrix
from .group_engine import FiniteGroupTable, closure
from .structure_theory import idempotent_factor_count


class NotIdempotent(ValueError):
    pass


class FactorsInvalid(ValueError):
    pass


class RingUnrecognized(ValueError):
    pass


class NotPrimitive(ValueError):
    pass


class NotSemisimpleSplit(ValueError):
    pass


@dataclass(frozen=True)
class IdempotentSpec:
    """f = ∏ ½(1 + sign·e_blade), optionally pinning the division-ring units."""

    factors: Tuple[Tuple[int, int], ...]
    name: Optional[str] = None
    units: Optional[Tuple[int, ...]] = None

    def label(self) -> str:
        parts = [f"½(1{'+' if s > 0 else '-'}{blade_label(m)})" for m, s in self.factors]
        return "".join(parts)

    def selector(self) -> str:
        return ",".join(f"{blade_label(m)}:{'+' if s > 0 else '-'}" for m, s in self.factors)


def parse_factors(text: str) -> IdempotentSpec:
    """Parse the explicit form ``"e13:+,e24:+"``."""
    factors = []
    for chunk in text.split(","):
        blade, _, sign = chunk.strip().partition(":")
        if sign not in ("+", "-"):
            raise ValueError(f"factor {chunk!r} needs a ':+' or ':-' sign")
        factors.append((parse_blade(blade), 1 if sign == "+" else -1))
    if not factors:
        raise ValueError("empty idempotent")
    return IdempotentSpec(tuple(factors))


def make_idempotent(spec: IdempotentSpec, sig: Signature) -> Multivector:
    masks = [m for m, _ in spec.factors]
    for m in masks:
        if m == 0 or m >> sig.n:
            raise FactorsInvalid(f"factor {blade_label(m)} is not a valid non-scalar blade")
        if blade_square(m, sig) != 1:
            raise FactorsInvalid(f"{blade_label(m)} squares to -1 in {sig}")
    for a, b in itertools.combinations(masks, 2):
        if not blades_commute(a, b):
            raise FactorsInvalid(f"{blade_label(a)} and {blade_label(b)} do not commute")
    f = Multivector.scalar(1)
    for m, s in spec.factors:
        f = mv_product(f, idempotent_factor(m, s), sig)
    if f.is_zero() or mv_product(f, f, sig) != f:
        raise NotIdempotent(f"{spec.label()} is not a nonzero idempotent")
    return f


# -- catalog of idempotents ---------------------------------------------------------

def _pairs(blades: Sequence[str]) -> List[Tuple[int, ...]]:
    return [tuple(parse_blade(b) for b in group.split("*")) for group in blades]


# Factor blades for f1..fN; both sign choices are emitted as fi+ and fi-.
_CATALOG = {
    (1, 3): ["e14", "e1", "e12", "e13", "e234"],
    (4, 0): ["e1", "e2", "e3", "e4", "e1234"],
    (0, 4): ["e123", "e124", "e134", "e234", "e1234"],
    (3, 1): ["e1*e34", "e1*e24", "e2*e14", "e3*e134", "e34*e234"],
    (2, 2): ["e13*e24", "e23*e14", "e14*e124", "e24*e1234", "e1*e23", "e2*e13"],
}

# Division-ring units that the worked examples use where they differ from the
# first-found choice.
_PINNED_UNITS = {
    ((0, 4), 1): ("e1", "e13"),
    ((4, 0), 5): ("e23", "e24"),
}


def canonical_idempotents(sig: Signature, limit: Optional[int] = None) -> List[IdempotentSpec]:
    key = (sig.p, sig.q)
    if key in _CATALOG:
        out = []
        for i, group in enumerate(_pairs(_CATALOG[key]), start=1):
            units = _PINNED_UNITS.get((key, i))
            units = tuple(parse_blade(u) for u in units) if units else None
            for sign, tag in ((1, "+"), (-1, "-")):
                out.append(IdempotentSpec(tuple((m, sign) for m in group), f"f{i}{tag}", units))
        return out if limit is None else out[: 2 * limit]
    found = []
    for i, group in enumerate(search_idempotent_blades(sig), start=1):
        for sign, tag in ((1, "+"), (-1, "-")):
            found.append(IdempotentSpec(tuple((m, sign) for m in group), f"f{i}{tag}"))
        if limit is not None and i >= limit:
            break
    return found


def search_idempotent_blades(sig: Signature) -> Iterator[Tuple[int, ...]]:
    """Commuting, independent sets of k blades squaring to +1, in canonical order.

    Sets generating the same group of signed blades are reported once.
    """
    k = idempotent_factor_count(sig)
    candidates = [m for m in all_blades(sig) if m and blade_square(m, sig) == 1]
    seen = set()

    def extend(chosen: List[int], span: Dict[int, int], start: int):
        if len(chosen) == k:
            key = frozenset(span)
            if key not in seen:
                seen.add(key)
                yield tuple(chosen)
            return
        for idx in range(start, len(candidates)):
            m = candidates[idx]
            if m in span or not all(blades_commute(m, c) for c in chosen):
                continue
            new_span = dict(span)
            ok = True
            for x, sx in span.items():
                prod = blade_product(x, m, sig)
                y = prod.blade
                sy = sx * (1 if prod.phase.exponent == 0 else -1)
                if y in new_span:
                    ok = False  # the group would contain -1 or repeat a blade
                    break
                new_span[y] = sy
            if ok:
                yield from extend(chosen + [m], new_span, idx + 1)

    if k == 0:
        yield ()
        return
    yield from extend([], {0: 1}, 0)


def idempotent_group(spec: IdempotentSpec, sig: Signature) -> FiniteGroupTable:
    """T(f): the group generated by -1 and the factor blades."""
    from .algebra_core import MINUS, PLUS, SignedBlade, signed_product

    gens = [SignedBlade(MINUS, 0)] + [SignedBlade(PLUS, m) for m, _ in spec.factors]
    return closure(gens, lambda x, y: signed_product(x, y, sig), identity=SignedBlade(PLUS, 0))


def stabilizer_group(f: Multivector, sig: Signature) -> FiniteGroupTable:
    """Elements s of G(p,q) with s·f·s⁻¹ = f."""
    from .structure_theory import salingaros_group

    g = salingaros_group(sig)
    keep = []
    for i, x in enumerate(g.elements):
        b = Multivector.blade(x.blade, x.phase.value)
        if mv_product(b, f, sig) == mv_product(f, b, sig):
            keep.append(i)
    return g.subgroup(keep)


# -- division ring ----------------------------------------------------------------

# Complex 2×2 images of the quaternion units i and j; k = i·j.
QUAT_I = exact.matrix([[0, Gauss(0, -1)], [Gauss(0, -1), 0]])
QUAT_J = exact.matrix([[Gauss(0, 1), 0], [0, Gauss(0, -1)]])


@dataclass(frozen=True)
class DivisionRingBasis:
    elements: Tuple[Multivector, ...]
    blades: Tuple[int, ...]
    ring_id: str
    unit_map: Tuple[Tuple[str, str], ...]
    images: Tuple[Matrix, ...] = field(repr=False)

    @property
    def block(self) -> int:
        return len(self.images[0])

    def labels(self) -> List[str]:
        return [blade_label(m) for m in self.blades]


def _fbf(f: Multivector, mask: int, sig: Signature) -> Multivector:
    return mv_product(mv_product(f, Multivector.blade(mask), sig), f, sig)


def division_ring(f: Multivector, sig: Signature, units: Optional[Sequence[int]] = None) -> DivisionRingBasis:
    # classes of nonzero projections f·b·f, identified up to sign
    reps: List[int] = []
    seen: Dict[Multivector, int] = {}
    for m in all_blades(sig):
        x = _fbf(f, m, sig)
        if x.is_zero() or x in seen or (-x) in seen:
            continue
        seen[x] = m
        reps.append(m)
    dim = len(reps)
    neg_f = -f

    def square_is_minus(m: int) -> bool:
        x = _fbf(f, m, sig)
        return mv_product(x, x, sig) == neg_f

    def anticommute(a: int, b: int) -> bool:
        xa, xb = _fbf(f, a, sig), _fbf(f, b, sig)
        return mv_product(xa, xb, sig) == -mv_product(xb, xa, sig)

    if dim == 1:
        return DivisionRingBasis((f,), (0,), "R", (("1", "1"),), (exact.identity(1),))
    if dim == 2:
        u = reps[1]
        if square_is_minus(u):
            return DivisionRingBasis((f, _fbf(f, u, sig)), (0, u), "C",
                                     (("1", "1"), (blade_label(u), "i")),
                                     (exact.identity(1), exact.matrix([[Gauss(0, 1)]])))
        raise RingUnrecognized("two-dimensional f·Cl·f without a complex unit (idempotent not primitive)")
    if dim == 4:
        if units is None:
            negs = [m for m in reps[1:] if square_is_minus(m)]
            if not negs:
                raise RingUnrecognized("no imaginary units in a four-dimensional f·Cl·f")
            ui = negs[0]
            partners = [m for m in negs if anticommute(ui, m)]
            if not partners:
                raise RingUnrecognized("f·Cl·f is four-dimensional but not quaternionic")
            uj = partners[0]
        else:
            ui, uj = units
            if not (square_is_minus(ui) and square_is_minus(uj) and anticommute(ui, uj)):
                raise RingUnrecognized("requested units do not span a quaternion algebra")
        # the third unit is the blade of the product i·j
        uk = ui ^ uj
        sk = 1 if blade_product(ui, uj, sig).phase.exponent == 0 else -1
        blades = (0, ui, uj, uk)
        k_img = exact.scale(sk, exact.matmul(QUAT_I, QUAT_J))
        umap = (("1", "1"), (blade_label(ui), "i"), (blade_label(uj), "j"),
                (blade_label(uk), "k" if sk > 0 else "-k"))
        return DivisionRingBasis(tuple(_fbf(f, m, sig) for m in blades), blades, "H", umap,
                                 (exact.identity(2), QUAT_I, QUAT_J, k_img))
    raise RingUnrecognized(f"f·Cl·f has dimension {dim}; the idempotent is not primitive")


# -- gamma matrices ---------------------------------------------------------------

@dataclass(frozen=True)
class GammaBasis:
    """Images of e_1..e_n acting on the left ideal, as complex matrices.

    ``entries[i][r][c]`` is the division-ring entry of γ_{i+1} as a pair
    (sign, index into ``ring.blades``) or None for zero.
    """

    matrices: Tuple[Matrix, ...]
    dim: int
    source: IdempotentSpec
    sig: Signature
    ring: DivisionRingBasis
    ideal_blades: Tuple[int, ...]
    entries: Tuple[Tuple[Tuple[Optional[Tuple[int, int]], ...], ...], ...]

    @property
    def block(self) -> int:
        return self.ring.block

    @cached_property
    def _products(self) -> Dict[int, Matrix]:
        return {0: exact.identity(self.dim)}

    def product(self, mask: int) -> Matrix:
        """γ_{i1}γ_{i2}… for the generators in ``mask`` (increasing order), cached."""
        cache = self._products
        if mask not in cache:
            top = mask.bit_length() - 1
            cache[mask] = exact.matmul(self.product(mask ^ (1 << top)), self.matrices[top])
        return cache[mask]

    def ring_transpose(self, m: Matrix) -> Matrix:
        """Transpose over the division ring: blocks swap, entries stay."""
        return exact.block_transpose(m, self.block)

    def ring_conjugate(self, m: Matrix) -> Matrix:
        """Entrywise conjugation in the division ring."""
        if self.block == 1:
            return exact.conjugate(m)
        return exact.block_map(m, self.block, exact.dagger)

    def entry_label(self, i: int, r: int, c: int) -> str:
        e = self.entries[i][r][c]
        if e is None:
            return "0"
        sign, u = e
        lab = blade_label(self.ring.blades[u])
        return lab if sign > 0 else "-" + lab

    def ring_matrix(self, i: int) -> List[List[str]]:
        d = len(self.entries[i])
        return [[self.entry_label(i, r, c) for c in range(d)] for r in range(d)]

    def is_ring_symmetric(self, i: int) -> Optional[int]:
        """+1 symmetric, -1 antisymmetric, None otherwise (over the ring)."""
        m = self.matrices[i]
        t = self.ring_transpose(m)
        return _sign_relation(t, m)

    def is_ring_real(self, i: int) -> Optional[int]:
        """+1 if conjugation fixes γ_i, -1 if it negates it, else None."""
        m = self.matrices[i]
        return _sign_relation(self.ring_conjugate(m), m)


def _sign_relation(a: Matrix, b: Matrix) -> Optional[int]:
    if a == b:
        return 1
    if a == exact.scale(-1, b):
        return -1
    return None


def gamma_matrices(spec: IdempotentSpec, sig: Signature) -> GammaBasis:
    f = make_idempotent(spec, sig)
    ring = division_ring(f, sig, spec.units)
    kdim = len(ring.blades)
    ring_vecs = [mv_product(Multivector.blade(u), f, sig) for u in ring.blades]

    lookup: Dict[Multivector, Tuple[int, int, int]] = {}
    ideal: List[int] = []

    def register(m: int):
        k = len(ideal)
        ideal.append(m)
        for l, u in enumerate(ring.blades):
            prod = blade_product(m, u, sig)
            s = 1 if prod.phase.exponent == 0 else -1
            vec = mv_product(Multivector.blade(prod.blade, s), f, sig)
            lookup[vec] = (k, l, 1)
            lookup[-vec] = (k, l, -1)

    for m in all_blades(sig):
        vec = mv_product(Multivector.blade(m), f, sig)
        if vec.is_zero():
            raise NotPrimitive("blade annihilates the idempotent")
        if vec not in lookup:
            register(m)
    size = len(ideal)
    if size * kdim != 2 ** (sig.n - idempotent_factor_count(sig)):
        raise NotPrimitive(f"ideal of K-dimension {size} is not minimal")

    mats, entries = [], []
    block = ring.block
    for i in range(sig.n):
        gen = 1 << i
        cols = []
        for m in ideal:
            prod = blade_product(gen, m, sig)
            s = 1 if prod.phase.exponent == 0 else -1
            k, l, s2 = lookup[mv_product(Multivector.blade(prod.blade, s), f, sig)]
            cols.append((k, l, s2))
        ent = [[None] * size for _ in range(size)]
        for c, (k, l, s) in enumerate(cols):
            ent[k][c] = (s, l)
        entries.append(tuple(tuple(row) for row in ent))
        blocks = [[exact.scale(ent[r][c][0], ring.images[ent[r][c][1]]) if ent[r][c]
                   else _zero(block) for c in range(size)] for r in range(size)]
        mats.append(exact._assemble(blocks, block))
    return GammaBasis(tuple(mats), size * block, spec, sig, ring, tuple(ideal), tuple(entries))


def _zero(size: int) -> Matrix:
    return tuple(tuple(exact.ZERO for _ in range(size)) for _ in range(size))


def clifford_relations_hold(basis: GammaBasis) -> bool:
    n = basis.sig.n
    eye = exact.identity(basis.dim)
    for a in range(n):
        for b in range(a, n):
            ga, gb = basis.matrices[a], basis.matrices[b]
            anti = exact.add(exact.matmul(ga, gb), exact.matmul(gb, ga))
            expected = exact.scale(2 * basis.sig.metric(a + 1), eye) if a == b else _zero(basis.dim)
            if anti != expected:
                return False
    return True


def gamma_product(basis: GammaBasis, mask: int) -> Matrix:
    """γ_{i1}γ_{i2}… for the generators in ``mask`` (increasing order)."""
    return basis.product(mask)


# -- semisimple split --------------------------------------------------------------

def central_idempotents(sig: Signature) -> Tuple[Multivector, Multivector]:
    omega, square = volume_element(sig)
    if sig.n % 2 == 0 or square != 1:
        raise NotSemisimpleSplit(f"{sig} has no central split (n odd and ω² = +1 required)")
    half = Fraction(1, 2)
    plus = Multivector.from_dict({0: half, omega.blade: half})
    minus = Multivector.from_dict({0: half, omega.blade: -half})
    return plus, minus


def even_subalgebra_signature(sig: Signature) -> Signature:
    """Signature of the algebra isomorphic to the even part Cl⁺(p,q)."""
    if sig.p >= 1:
        return Signature(sig.q, sig.p - 1)
    return Signature(sig.p, sig.q - 1)
