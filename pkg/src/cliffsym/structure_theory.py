"""Lookups indexed by the signature: rings, Salingaros types, covers, particle classes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .algebra_core import Signature
from .group_engine import GroupId, Unrecognized

RING_BY_MOD8 = {0: "R", 2: "R", 3: "C", 7: "C", 4: "H", 6: "H", 1: "R⊕R", 5: "H⊕H"}


@dataclass(frozen=True)
class RingClass:
    id: str

    @property
    def is_split(self) -> bool:
        return "⊕" in self.id

    @property
    def dimension(self) -> int:
        return {"R": 1, "C": 2, "H": 4, "R⊕R": 2, "H⊕H": 8}[self.id]


def ring_class(sig: Signature) -> RingClass:
    return RingClass(RING_BY_MOD8[sig.mod8])


# -- Salingaros vee groups -----------------------------------------------------

@dataclass(frozen=True)
class SalingarosType:
    family: str
    index: int
    central_product_label: str

    @property
    def symbol(self) -> str:
        head = {"N_odd": "N", "N_even": "N", "Ω_odd": "Ω", "Ω_even": "Ω", "S": "S"}[self.family]
        return f"{head}_{self.index}"


def _n_label(index: int) -> str:
    """Central-product label of N_index."""
    if index <= 0:
        return "Z2"
    if index % 2:
        return " ∘ ".join(["D4"] * ((index + 1) // 2))
    return " ∘ ".join(["Q4"] + ["D4"] * (index // 2 - 1))


def _join(base: str, extra: str) -> str:
    return extra if base == "Z2" else f"{base} ∘ {extra}"


def salingaros_type(sig: Signature) -> SalingarosType:
    m = sig.n // 2
    r = sig.mod8
    if sig.n % 2 == 0:
        if r in (0, 2):
            return SalingarosType("N_odd", 2 * m - 1, _n_label(2 * m - 1))
        if r in (4, 6):
            return SalingarosType("N_even", 2 * m, _n_label(2 * m))
    else:
        if r == 1:
            index = max(2 * m - 1, 0)
            return SalingarosType("Ω_odd", index, _join(_n_label(2 * m - 1), "D2"))
        if r == 5:
            return SalingarosType("Ω_even", 2 * m, _join(_n_label(2 * m), "(Z2×Z2)"))
        if r in (3, 7):
            return SalingarosType("S", m, _join(_n_label(2 * m), "Z4"))
    raise AssertionError(f"unreachable: n={sig.n}, p-q mod 8 = {r}")


def center_type(sig: Signature) -> GroupId:
    r = sig.mod8
    if r in (0, 2, 4, 6):
        return GroupId("Z2")
    if r in (1, 5):
        return GroupId("Z2×Z2")
    return GroupId("Z4")


def family_center(family: str) -> str:
    return {"N_odd": "Z2", "N_even": "Z2", "Ω_odd": "Z2×Z2", "Ω_even": "Z2×Z2", "S": "Z4"}[family]


# -- Radon–Hurwitz numbers and idempotent factor counts -----------------------

RADON_HURWITZ_BASE = (0, 1, 2, 2, 3, 3, 3, 3)


class NegativeIndex(ValueError):
    pass


def radon_hurwitz(i: int) -> int:
    if i < 0:
        raise NegativeIndex(f"Radon–Hurwitz number needs i >= 0, got {i}")
    return RADON_HURWITZ_BASE[i % 8] + 4 * (i // 8)


def _rh_shifted(i: int) -> int:
    # r_{i-8} = r_i - 4 keeps the period-8 rule valid below zero.
    return RADON_HURWITZ_BASE[i % 8] + 4 * (i // 8)


def idempotent_factor_count(sig: Signature) -> int:
    """Number k of commuting factors ½(1 ± e) in a primitive idempotent."""
    return sig.q - _rh_shifted(sig.q - sig.p)


def stabilizer_order(sig: Signature) -> int:
    """Order of the subgroup of G(p,q) fixing a primitive idempotent under conjugation."""
    return 2 ** (1 + sig.p + _rh_shifted(sig.q - sig.p))


# -- particle classes ------------------------------------------------------------

def particle_class(sig: Signature) -> str:
    r = sig.mod8
    if r in (3, 7):
        return "charged"
    if r in (4, 5, 6):
        return "neutral"
    return "truly_neutral"


# -- covering catalogs -----------------------------------------------------------

@dataclass(frozen=True)
class CptSignature:
    """Squares of P, T, PT, C, CP, CT, CPT as ±1."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    g: int

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f, self.g)

    def __str__(self) -> str:
        return sign_string(self.as_tuple())


def sign_string(signs) -> str:
    return "(" + ",".join("+" if s > 0 else "-" for s in signs) + ")"


PT_COVERS = {
    (1, 1, 1): ("Z2×Z2×Z2", "PT=TP"),
    (1, -1, -1): ("Z4×Z2", "PT=TP"),
    (-1, 1, -1): ("Z4×Z2", "PT=TP"),
    (-1, -1, 1): ("Z4×Z2", "PT=TP"),
    (-1, -1, -1): ("Q4", "PT=-TP"),
    (-1, 1, 1): ("D4", "PT=-TP"),
    (1, -1, 1): ("D4", "PT=-TP"),
    (1, 1, -1): ("D4", "PT=-TP"),
}


def pt_cover_lookup(a: int, b: int, c: int) -> Tuple[GroupId, str]:
    name, rel = PT_COVERS[(a, b, c)]
    return GroupId(name), rel


# Group-law metadata for the covers; documentation only.
PIN_NOTE = "Pin^{a,...} ≅ (Spin+(p,q) ⊙ C^{a,...}) / Z2"


def cpt_cover_lookup(s: CptSignature, abelian: bool) -> GroupId:
    plus = sum(1 for x in s.as_tuple() if x > 0)
    minus = 7 - plus
    if plus == 7 and abelian:
        return GroupId("Z2^4", PIN_NOTE)
    if plus == 3 and minus == 4:
        return GroupId("Z4×Z2×Z2" if abelian else "Z4*×Z2×Z2", PIN_NOTE)
    if plus == 1 and minus == 6 and not abelian:
        return GroupId("Q4×Z2", PIN_NOTE)
    if plus == 5 and minus == 2 and not abelian:
        return GroupId("D4×Z2", PIN_NOTE)
    raise Unrecognized(f"no CPT cover for signature {s} (abelian={abelian})")


# -- the vee group G(p,q) ----------------------------------------------------------

def salingaros_group(sig: Signature):
    """G(p,q): the signed blades ±e_A generated by e_1..e_n."""
    from .algebra_core import MINUS, PLUS, SignedBlade, signed_product
    from .group_engine import closure

    # -1 is listed explicitly: Cl(1,0) never produces it from e_1 alone
    gens = [SignedBlade(MINUS, 0)] + [SignedBlade(PLUS, 1 << i) for i in range(sig.n)]
    return closure(gens, lambda x, y: signed_product(x, y, sig),
                   limit=2 ** (sig.n + 1), identity=SignedBlade(PLUS, 0))
