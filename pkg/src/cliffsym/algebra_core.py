"""Real Clifford algebras Cl(p,q) and their complexification.

Blades are bitmasks: bit ``i-1`` set means generator ``e_i`` is a factor.
Generators ``e_1..e_p`` square to +1 and ``e_{p+1}..e_n`` square to -1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Tuple

from .exact import Gauss, UNIT_POWERS, ZERO


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"negative signature ({self.p},{self.q})")
        if self.p + self.q < 1:
            raise ValueError("signature needs at least one generator")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def mod8(self) -> int:
        return (self.p - self.q) % 8

    def metric(self, i: int) -> int:
        """Square of generator ``e_i`` (1-based)."""
        return 1 if i <= self.p else -1

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


@dataclass(frozen=True)
class Phase:
    """A fourth root of unity ``i**exponent``."""

    exponent: int = 0

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % 4)

    def __mul__(self, other: "Phase") -> "Phase":
        return Phase(self.exponent + other.exponent)

    def __neg__(self) -> "Phase":
        return Phase(self.exponent + 2)

    @property
    def value(self) -> Gauss:
        return UNIT_POWERS[self.exponent]

    @property
    def is_real(self) -> bool:
        return self.exponent in (0, 2)


PLUS = Phase(0)
MINUS = Phase(2)


# -- blades -----------------------------------------------------------------

def grade(mask: int) -> int:
    return bin(mask).count("1")


def indices(mask: int) -> Tuple[int, ...]:
    """1-based generator indices of a blade in increasing order."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(idx: Iterable[int]) -> int:
    m = 0
    for i in idx:
        if i < 1:
            raise ValueError(f"generator index must be positive, got {i}")
        bit = 1 << (i - 1)
        if m & bit:
            raise ValueError(f"repeated generator index {i}")
        m |= bit
    return m


def blade_label(mask: int, prefix: str = "e") -> str:
    if mask == 0:
        return "1"
    return prefix + "".join(str(i) for i in indices(mask))


def parse_blade(text: str) -> int:
    """Parse ``"e14"`` or ``"1"`` into a mask (single-digit indices)."""
    text = text.strip()
    if text == "1":
        return 0
    if not text.startswith("e") or not text[1:].isdigit():
        raise ValueError(f"cannot parse blade {text!r}")
    digits = [int(c) for c in text[1:]]
    if digits != sorted(set(digits)):
        raise ValueError(f"blade indices must be strictly increasing: {text!r}")
    return mask_of(digits)


def blade_order_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Canonical ordering: by grade, then lexicographically by indices."""
    return (grade(mask), indices(mask))


def all_blades(sig: Signature) -> list:
    return sorted(range(1 << sig.n), key=blade_order_key)


def _reorder_sign(a: int, b: int) -> int:
    """Sign from sorting the concatenated index list of a then b."""
    swaps = 0
    a >>= 1
    while a:
        swaps += grade(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def _contraction_sign(a: int, b: int, sig: Signature) -> int:
    common = a & b
    neg = grade(common >> sig.p)  # repeated generators with index > p
    return -1 if neg & 1 else 1


@dataclass(frozen=True)
class SignedBlade:
    phase: Phase
    blade: int

    def __mul__(self, other: "SignedBlade"):
        raise TypeError("use blade_product or signed_product with a signature")

    def label(self) -> str:
        head = {0: "", 1: "i·", 2: "-", 3: "-i·"}[self.phase.exponent]
        return head + blade_label(self.blade)


def blade_product(a: int, b: int, sig: Signature) -> SignedBlade:
    """The product e_a·e_b as a signed blade."""
    if a >> sig.n or b >> sig.n:
        raise ValueError("blade mask out of range for signature")
    s = _reorder_sign(a, b) * _contraction_sign(a, b, sig)
    return SignedBlade(PLUS if s > 0 else MINUS, a ^ b)


def signed_product(x: SignedBlade, y: SignedBlade, sig: Signature) -> SignedBlade:
    r = blade_product(x.blade, y.blade, sig)
    return SignedBlade(x.phase * y.phase * r.phase, r.blade)


def blade_sign(a: int, b: int, sig: Signature) -> int:
    return 1 if blade_product(a, b, sig).phase == PLUS else -1


def blade_square(mask: int, sig: Signature) -> int:
    return blade_sign(mask, mask, sig)


def blades_commute(a: int, b: int) -> bool:
    """Whether e_a and e_b commute (independent of the metric)."""
    return (grade(a) * grade(b) - grade(a & b)) % 2 == 0


# -- multivectors -----------------------------------------------------------

@dataclass(frozen=True)
class Multivector:
    """Exact linear combination of blades with Gaussian-rational coefficients."""

    terms: Tuple[Tuple[int, Gauss], ...] = field(default=())

    @staticmethod
    def from_dict(d: Dict[int, object]) -> "Multivector":
        items = []
        for m, c in d.items():
            c = Gauss.of(c)
            if not c.is_zero():
                items.append((m, c))
        items.sort(key=lambda t: blade_order_key(t[0]))
        return Multivector(tuple(items))

    @staticmethod
    def scalar(c) -> "Multivector":
        return Multivector.from_dict({0: c})

    @staticmethod
    def blade(mask: int, c=1) -> "Multivector":
        return Multivector.from_dict({mask: c})

    def as_dict(self) -> Dict[int, Gauss]:
        return dict(self.terms)

    def coefficient(self, mask: int) -> Gauss:
        return self.as_dict().get(mask, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Multivector") -> "Multivector":
        d = self.as_dict()
        for m, c in other.terms:
            d[m] = d.get(m, ZERO) + c
        return Multivector.from_dict(d)

    def __neg__(self) -> "Multivector":
        return Multivector(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def scaled(self, c) -> "Multivector":
        c = Gauss.of(c)
        return Multivector.from_dict({m: c * x for m, x in self.terms})

    def map_blades(self, sign_of) -> "Multivector":
        return Multivector.from_dict({m: c * sign_of(m) for m, c in self.terms})

    def __iter__(self) -> Iterator[Tuple[int, Gauss]]:
        return iter(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            label = blade_label(m)
            if label == "1":
                parts.append(f"({c})")
            else:
                parts.append(f"({c}){label}")
        return " + ".join(parts)


def mv_product(a: Multivector, b: Multivector, sig: Signature) -> Multivector:
    acc: Dict[int, Gauss] = {}
    for ma, ca in a.terms:
        for mb, cb in b.terms:
            s = blade_sign(ma, mb, sig)
            m = ma ^ mb
            acc[m] = acc.get(m, ZERO) + ca * cb * s
    return Multivector.from_dict(acc)


def grade_involution(a: Multivector) -> Multivector:
    return a.map_blades(lambda m: -1 if grade(m) % 2 else 1)


def reversion(a: Multivector) -> Multivector:
    return a.map_blades(lambda m: -1 if (grade(m) * (grade(m) - 1) // 2) % 2 else 1)


def conjugation(a: Multivector) -> Multivector:
    return a.map_blades(lambda m: -1 if (grade(m) * (grade(m) + 1) // 2) % 2 else 1)


def volume_element(sig: Signature) -> Tuple[SignedBlade, int]:
    """The unit pseudoscalar ω and the sign of ω²."""
    w = sig.full_mask
    return SignedBlade(PLUS, w), blade_square(w, sig)


def volume_inverse(sig: Signature) -> Multivector:
    _, sq = volume_element(sig)
    return Multivector.blade(sig.full_mask, sq)


def pseudo_conjugate(a: Multivector, sig: Signature) -> Multivector:
    """Complex conjugation relative to the real span of e_1..e_p, i·e_{p+1}..i·e_n.

    A blade with m generators of index > p equals (-i)^m times the matching
    product of the real basis vectors, so its coordinate there is c·(-i)^m.
    """
    out: Dict[int, Gauss] = {}
    for m, c in a.terms:
        negatives = grade(m >> sig.p)
        real_coord = c * UNIT_POWERS[(-negatives) % 4]
        conj = real_coord.conjugate()
        out[m] = conj * UNIT_POWERS[negatives % 4]
    return Multivector.from_dict(out)


def idempotent_factor(mask: int, sign: int) -> Multivector:
    """½(1 + sign·e_mask)."""
    half = Fraction(1, 2)
    return Multivector.from_dict({0: half, mask: half * sign})
