"""Matrices of the eight (anti/pseudo)automorphisms and the discrete symmetry groups they form.

Physical reading: W ↔ P, E ↔ T, C = EW ↔ PT, Π ↔ C, K = ΠW ↔ CP, S = ΠE ↔ CT,
F = ΠC ↔ CPT. P, T and C may carry phase factors η_p, η_t, η_c.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import exact
from .algebra_core import Signature, blade_label, blade_order_key
from .exact import Gauss, Matrix
from .group_engine import (
    FiniteGroupTable, GroupId, Unrecognized, classify_small_group, closure, factor_group,
    sign_quotient_name,
)
from .spinor_rep import (
    GammaBasis, IdempotentSpec, NotSemisimpleSplit, even_subalgebra_signature, gamma_matrices,
    gamma_product,
)
from .structure_theory import CptSignature, cpt_cover_lookup, pt_cover_lookup, sign_string


class NoSolution(RuntimeError):
    pass


class Theorem1Violation(AssertionError):
    pass


class InvalidPhase(ValueError):
    pass


# -- phases ----------------------------------------------------------------------

PHASE_SYMBOLS = ("c", "p", "t")  # order of exponents in a phase monomial


@dataclass(frozen=True)
class PhaseValue:
    """A concrete fourth root of unity i^exponent, or a free symbol with a declared square."""

    exponent: int = 0
    symbolic: bool = False
    square: int = 1

    @property
    def value(self) -> Gauss:
        return exact.UNIT_POWERS[self.exponent % 4]

    @property
    def actual_square(self) -> int:
        if self.symbolic:
            return self.square
        return 1 if self.exponent % 2 == 0 else -1

    def __str__(self) -> str:
        if self.symbolic:
            return "sym+" if self.square > 0 else "sym-"
        return ("+1", "+i", "-1", "-i")[self.exponent % 4]


_PHASE_TEXT = {
    "+1": PhaseValue(0), "1": PhaseValue(0), "-1": PhaseValue(2),
    "+i": PhaseValue(1), "i": PhaseValue(1), "-i": PhaseValue(3),
    "sym+": PhaseValue(symbolic=True, square=1), "sym-": PhaseValue(symbolic=True, square=-1),
}


def parse_phase(text: str) -> PhaseValue:
    try:
        return _PHASE_TEXT[text.strip()]
    except KeyError:
        raise InvalidPhase(f"phase must be one of +1, -1, +i, -i, sym+, sym-; got {text!r}") from None


@dataclass(frozen=True)
class PhaseAssignment:
    eta_p: PhaseValue = PhaseValue()
    eta_t: PhaseValue = PhaseValue()
    eta_c: PhaseValue = PhaseValue()

    def by_symbol(self) -> Dict[str, PhaseValue]:
        return {"c": self.eta_c, "p": self.eta_p, "t": self.eta_t}

    def squares(self) -> Tuple[int, int, int]:
        vals = self.by_symbol()
        return tuple(v.actual_square for v in (vals[s] for s in PHASE_SYMBOLS))

    def describe(self) -> Dict[str, str]:
        return {"eta_p": str(self.eta_p), "eta_t": str(self.eta_t), "eta_c": str(self.eta_c)}


# -- dressed elements --------------------------------------------------------------

@dataclass(frozen=True)
class Dressed:
    """A matrix times a monomial in the symbolic phases (exponents 0 or 1, order c, p, t)."""

    matrix: Matrix
    exps: Tuple[int, int, int] = (0, 0, 0)


def dressed_product(x: Dressed, y: Dressed, squares: Tuple[int, int, int]) -> Dressed:
    m = exact.matmul(x.matrix, y.matrix)
    exps = []
    sign = 1
    for a, b, sq in zip(x.exps, y.exps, squares):
        e = a + b
        if e == 2:
            sign *= sq
            e = 0
        exps.append(e)
    if sign < 0:
        m = exact.scale(-1, m)
    return Dressed(m, tuple(exps))


def _negate(x: Dressed) -> Dressed:
    return Dressed(exact.scale(-1, x.matrix), x.exps)


def monomial_label(exps: Sequence[int], latex: bool = False) -> str:
    """Render η exponents, grouping symbols that share an exponent (e.g. "η_c η_pt^2")."""
    groups: Dict[int, str] = {}
    for sym, e in zip(PHASE_SYMBOLS, exps):
        if e:
            groups[e] = groups.get(e, "") + sym
    parts = sorted(groups.items(), key=lambda kv: PHASE_SYMBOLS.index(kv[1][0]))
    out = []
    for e, syms in parts:
        if latex:
            out.append(f"\\eta_{{{syms}}}" + (f"^{{{e}}}" if e > 1 else ""))
        else:
            out.append(f"η_{syms}" + (f"^{e}" if e > 1 else ""))
    return " ".join(out)


# -- solvers -----------------------------------------------------------------------

def compute_W(basis: GammaBasis) -> Matrix:
    return gamma_product(basis, basis.sig.full_mask)


def _candidate_masks(basis: GammaBasis) -> List[int]:
    return sorted(range(1 << basis.sig.n), key=blade_order_key)


def _solutions(basis: GammaBasis, twist, first_only: bool = False) -> List[int]:
    pairs = [(twist(g), g) for g in basis.matrices]
    found = []
    for mask in _candidate_masks(basis):
        m = gamma_product(basis, mask)
        if all(exact.matmul(m, t) == exact.matmul(g, m) for t, g in pairs):
            found.append(mask)
            if first_only:
                break
    return found


def solve_E_all(basis: GammaBasis) -> List[int]:
    """All gamma blades M with M·γ_iᵗ = γ_i·M (transpose over the division ring)."""
    return _solutions(basis, basis.ring_transpose)


def solve_Pi_all(basis: GammaBasis) -> List[int]:
    """All gamma blades M with M·γ̇_i = γ_i·M (conjugation over the division ring)."""
    return _solutions(basis, basis.ring_conjugate)


def solve_E(basis: GammaBasis) -> int:
    found = _solutions(basis, basis.ring_transpose, first_only=True)
    if not found:
        raise NoSolution("no gamma product realizes the reversion")
    return found[0]


def solve_Pi(basis: GammaBasis) -> int:
    found = _solutions(basis, basis.ring_conjugate, first_only=True)
    if not found:
        raise NoSolution("no gamma product realizes the pseudoautomorphism")
    if basis.ring.ring_id == "H":
        theorem1_form(found[0], basis)
    return found[0]


@dataclass(frozen=True)
class AutomorphismMatrices:
    """Exact matrices with C = E·W, K = Π·W, S = Π·E, F = Π·C.

    ``blades`` gives, per symbol, the gamma blade each matrix is ± a multiple of;
    the group is built from the sign-normalized representatives +γ_blade.
    """

    basis: GammaBasis
    W: Matrix
    E: Matrix
    C: Matrix
    Pi: Matrix
    K: Matrix
    S: Matrix
    F: Matrix
    blades: Tuple[Tuple[str, int], ...]
    E_is_scalar: bool
    Pi_is_scalar: bool

    def blade(self, symbol: str) -> int:
        return dict(self.blades)[symbol]

    def representative(self, symbol: str) -> Matrix:
        return gamma_product(self.basis, self.blade(symbol))

    def gamma_label(self, symbol: str) -> str:
        return gamma_label(self.blade(symbol))


def gamma_label(mask: int) -> str:
    return "1" if mask == 0 else "γ" + blade_label(mask)[1:]


def assemble(basis: GammaBasis) -> AutomorphismMatrices:
    w_mask = basis.sig.full_mask
    e_mask = solve_E(basis)
    pi_mask = solve_Pi(basis)
    W = compute_W(basis)
    E = gamma_product(basis, e_mask)
    Pi = gamma_product(basis, pi_mask)
    C = exact.matmul(E, W)
    K = exact.matmul(Pi, W)
    S = exact.matmul(Pi, E)
    F = exact.matmul(Pi, C)
    c_mask = e_mask ^ w_mask
    blades = (("1", 0), ("W", w_mask), ("E", e_mask), ("C", c_mask), ("Pi", pi_mask),
              ("K", pi_mask ^ w_mask), ("S", pi_mask ^ e_mask), ("F", pi_mask ^ c_mask))
    return AutomorphismMatrices(basis, W, E, C, Pi, K, S, F, blades, e_mask == 0, pi_mask == 0)


# -- ΠΠ̇ sign rule and [C,P] ---------------------------------------------------------------

def generator_reality(basis: GammaBasis) -> Tuple[List[int], List[int]]:
    """Indices (1-based) of complex and real generators over the division ring."""
    complex_gens, real_gens = [], []
    for i in range(basis.sig.n):
        rel = basis.is_ring_real(i)
        if rel == 1:
            real_gens.append(i + 1)
        elif rel == -1:
            complex_gens.append(i + 1)
    return complex_gens, real_gens


def pi_dot_product(pi_mask: int, basis: GammaBasis) -> Matrix:
    """Π·Π̇ with Π̇ the product of the conjugated generators."""
    pi = gamma_product(basis, pi_mask)
    dot = exact.identity(basis.dim)
    for i in range(basis.sig.n):
        if pi_mask >> i & 1:
            dot = exact.matmul(dot, basis.ring_conjugate(basis.matrices[i]))
    return exact.matmul(pi, dot)


def theorem1_form(pi_mask: int, basis: GammaBasis) -> int:
    """Check that Π is the product of all complex or of all real generators; return their count."""
    complex_gens, real_gens = generator_reality(basis)
    members = [i + 1 for i in range(basis.sig.n) if pi_mask >> i & 1]
    if set(members) <= set(complex_gens):
        count = len(complex_gens)
    elif set(members) <= set(real_gens):
        count = len(real_gens)
    else:
        raise Theorem1Violation(f"Π = {gamma_label(pi_mask)} mixes real and complex generators")
    if len(members) != count:
        raise Theorem1Violation(f"Π = {gamma_label(pi_mask)} does not use all {count} generators of its kind")
    return count


def theorem1_predicted_sign(count: int) -> int:
    return 1 if count % 4 in (0, 1) else -1


def pi_dot_sign(pi_mask: int, basis: GammaBasis) -> int:
    c = exact.scalar_multiple_of_identity(pi_dot_product(pi_mask, basis))
    if c not in (1, -1):
        raise Theorem1Violation("Π·Π̇ is not ±1")
    return 1 if c == 1 else -1


def theorem1_check(pi_mask: int, basis: GammaBasis) -> int:
    """Return the sign of Π·Π̇ after verifying it against the generator-count rule."""
    if pi_mask == 0:
        return 1
    count = theorem1_form(pi_mask, basis)
    sign = pi_dot_sign(pi_mask, basis)
    expected = theorem1_predicted_sign(count)
    if sign != expected:
        raise Theorem1Violation(f"Π·Π̇ = {sign:+d} but {count} generators predict {expected:+d}")
    return sign


def cp_commutation(A: AutomorphismMatrices) -> str:
    if A.Pi_is_scalar:
        return "commute"
    pw, wp = exact.matmul(A.Pi, A.W), exact.matmul(A.W, A.Pi)
    if pw == wp:
        return "commute"
    if pw == exact.scale(-1, wp):
        return "anticommute"
    raise AssertionError("Π and W neither commute nor anticommute")


# -- group assembly ------------------------------------------------------------------

SLOTS = (
    ("1", "1", (0, 0, 0)), ("P", "W", (0, 1, 0)), ("T", "E", (0, 0, 1)), ("PT", "C", (0, 1, 1)),
    ("C", "Pi", (1, 0, 0)), ("CP", "K", (1, 1, 0)), ("CT", "S", (1, 0, 1)), ("CPT", "F", (1, 1, 1)),
)


@dataclass(frozen=True)
class GroupElement:
    slot: str
    matrix_symbol: str
    blade: int
    value: Dressed
    concrete: Gauss

    @property
    def label(self) -> str:
        return element_label(self.blade, self.value.exps, self.concrete)

    def render(self, latex: bool = False) -> str:
        return element_label(self.blade, self.value.exps, self.concrete, latex)


@dataclass(frozen=True)
class CptResult:
    elements: Tuple[GroupElement, ...]
    squares: Tuple[int, ...]
    square_slots: Tuple[str, ...]
    cover: FiniteGroupTable
    group: FiniteGroupTable
    cover_id: GroupId
    group_id: GroupId
    cover_lookup: Optional[GroupId]
    cp_commutation: str
    table: Tuple[Tuple[Tuple[int, int], ...], ...]
    phases: PhaseAssignment

    @property
    def signature_string(self) -> str:
        return sign_string(self.squares)

    @property
    def signature(self) -> Optional[CptSignature]:
        return CptSignature(*self.squares) if len(self.squares) == 7 else None

    def labels(self, latex: bool = False) -> List[str]:
        return [e.render(latex) for e in self.elements]

    def rendered_table(self, latex: bool = False) -> List[List[str]]:
        labels = self.labels(latex)
        return [[("" if s > 0 else "-") + labels[k] for s, k in row] for row in self.table]


_CONCRETE_PREFIX = {(0, 1): "i", (-1, 0): "-", (0, -1): "-i"}


def element_label(blade: int, exps: Sequence[int], concrete: Gauss = exact.ONE, latex: bool = False) -> str:
    """E.g. "γ1234", "η_c γ34", "iγ12", "1" (LaTeX: "\\gamma_{1234}", "\\mathbf{1}_4")."""
    if latex:
        base = "\\mathbf{1}_4" if blade == 0 else "\\gamma_{" + blade_label(blade)[1:] + "}"
    else:
        base = gamma_label(blade)
    mono = monomial_label(exps, latex)
    head = "" if concrete == 1 else _CONCRETE_PREFIX[(int(concrete.re), int(concrete.im))]
    if mono:
        body = mono if blade == 0 and not latex else f"{mono} {base}"
    elif head and blade == 0 and not latex:
        return "-1" if head == "-" else head
    else:
        body = base
    return head + body


def _dress(A: AutomorphismMatrices, phases: PhaseAssignment, matrix_symbol: str,
           exps_pattern: Sequence[int]) -> Tuple[Dressed, Gauss]:
    m = A.representative(matrix_symbol)
    concrete = exact.ONE
    exps = []
    by_sym = phases.by_symbol()
    for sym, use in zip(PHASE_SYMBOLS, exps_pattern):
        ph = by_sym[sym]
        if not use:
            exps.append(0)
        elif ph.symbolic:
            exps.append(1)
        else:
            exps.append(0)
            concrete = concrete * ph.value
    return Dressed(exact.scale(concrete, m), tuple(exps)), concrete


def _build(slots, A: AutomorphismMatrices, phases: PhaseAssignment, commutation: str,
           reduced_cover_lookup) -> CptResult:
    squares_decl = phases.squares()
    mul = lambda x, y: dressed_product(x, y, squares_decl)  # noqa: E731
    elements: List[GroupElement] = []
    seen: Dict[Dressed, int] = {}
    for slot, msym, pattern in slots:
        value, concrete = _dress(A, phases, msym, pattern)
        if value in seen or _negate(value) in seen:
            continue
        seen[value] = len(elements)
        elements.append(GroupElement(slot, msym, A.blade(msym), value, concrete))

    identity = elements[0].value
    squares = []
    for e in elements[1:]:
        sq = mul(e.value, e.value)
        c = exact.scalar_multiple_of_identity(sq.matrix)
        if sq.exps != (0, 0, 0) or c not in (1, -1):
            raise AssertionError(f"square of {e.label} is not ±1")
        squares.append(1 if c == 1 else -1)

    minus_one = _negate(identity)
    cover = closure([e.value for e in elements] + [minus_one], mul, limit=64, identity=identity)
    cover.check_axioms()
    signs = cover.subgroup([cover.index(identity), cover.index(minus_one)])
    group = factor_group(cover, signs)
    cover_id = classify_small_group(cover)
    try:
        group_id = sign_quotient_name(cover_id)
    except Unrecognized:
        group_id = GroupId("unrecognized")

    table = []
    for x in elements:
        row = []
        for y in elements:
            prod = mul(x.value, y.value)
            if prod in seen:
                row.append((1, seen[prod]))
            elif _negate(prod) in seen:
                row.append((-1, seen[_negate(prod)]))
            else:
                raise AssertionError("element set is not closed up to sign")
        table.append(tuple(row))

    try:
        lookup = reduced_cover_lookup(tuple(squares), cover.is_abelian())
    except (Unrecognized, KeyError):
        lookup = None
    return CptResult(tuple(elements), tuple(squares), tuple(e.slot for e in elements[1:]), cover,
                     group, cover_id, group_id, lookup, commutation, tuple(table), phases)


def _cpt_lookup(squares, abelian):
    if len(squares) == 7:
        return cpt_cover_lookup(CptSignature(*squares), abelian)
    if len(squares) == 3:
        return pt_cover_lookup(*squares)[0]
    return None


def build_cpt_group(A: AutomorphismMatrices, phases: PhaseAssignment = PhaseAssignment()) -> CptResult:
    return _build(SLOTS, A, phases, cp_commutation(A), _cpt_lookup)


def cpt_for_idempotent(spec: IdempotentSpec, sig: Signature,
                       phases: PhaseAssignment = PhaseAssignment()) -> Tuple[AutomorphismMatrices, CptResult]:
    A = assemble(gamma_matrices(spec, sig))
    return A, build_cpt_group(A, phases)


# -- quotient algebras ------------------------------------------------------------

TRANSFERRED = {
    5: ("Id", "~", "bar", "bar~"),
    1: ("Id", "~"),
}

QUOTIENT_SLOTS = {
    5: (("1", "1", (0, 0, 0)), ("T", "E", (0, 0, 1)), ("C'", "Pi", (1, 0, 0)), ("C'T", "S", (1, 0, 1))),
    1: (("1", "1", (0, 0, 0)), ("T", "E", (0, 0, 1))),
}


def transferred_automorphisms(sig: Signature) -> Tuple[str, ...]:
    try:
        return TRANSFERRED[sig.mod8]
    except KeyError:
        raise NotSemisimpleSplit(f"{sig} is not of type p-q ≡ 1 or 5 (mod 8)") from None


def build_quotient_pt_group(sig: Signature, spec: IdempotentSpec,
                            phases: PhaseAssignment = PhaseAssignment()) -> CptResult:
    """Reduced group on the simple quotient, built from the even-subalgebra representation.

    Squares are reported in the order T², C'², (C'T)².
    """
    transferred_automorphisms(sig)
    A = assemble(gamma_matrices(spec, even_subalgebra_signature(sig)))
    return _build(QUOTIENT_SLOTS[sig.mod8], A, phases, cp_commutation(A), lambda s, a: None)


# -- symbolic generating table -------------------------------------------------------

SYMBOLIC_HEADER = (
    ((0, 0, 0), "1"), ((0, 1, 0), "W"), ((0, 0, 1), "E"), ((0, 1, 1), "C"),
    ((1, 0, 0), "Π"), ((1, 1, 0), "K"), ((1, 0, 1), "S"), ((1, 1, 1), "F"),
)


@dataclass(frozen=True)
class SymbolicEntry:
    exps: Tuple[int, int, int]
    left: str
    right: str

    @property
    def word(self) -> str:
        if self.left == "1":
            return self.right
        if self.right == "1":
            return self.left
        if self.left == self.right:
            return self.left + "²"
        return self.left + self.right

    def render(self, latex: bool = False) -> str:
        mono = monomial_label(self.exps, latex)
        word = self.word
        if word == "1":
            word = "1_4" if latex else "1"
        if latex:
            word = word.replace("Π", "\\Pi ").replace("²", "^2").strip()
        return f"{mono} {word}" if mono else word


def general_generating_table() -> List[List[SymbolicEntry]]:
    rows = []
    for ex, xs in SYMBOLIC_HEADER:
        row = []
        for ey, ys in SYMBOLIC_HEADER:
            row.append(SymbolicEntry(tuple(a + b for a, b in zip(ex, ey)), xs, ys))
        rows.append(row)
    return rows


_SYMBOL_TO_MATRIX = {"1": "1", "W": "W", "E": "E", "C": "C", "Π": "Pi", "K": "K", "S": "S", "F": "F"}


def evaluate_symbolic_entry(entry: SymbolicEntry, A: AutomorphismMatrices,
                            phases: PhaseAssignment) -> Dressed:
    """Specialize an entry to a concrete basis and phases, using the normalized matrices."""
    m = exact.matmul(A.representative(_SYMBOL_TO_MATRIX[entry.left]),
                     A.representative(_SYMBOL_TO_MATRIX[entry.right]))
    by_sym = phases.by_symbol()
    exps = []
    for sym, e in zip(PHASE_SYMBOLS, entry.exps):
        ph = by_sym[sym]
        if ph.symbolic:
            if e == 2:
                m = exact.scale(ph.square, m)
                e = 0
            exps.append(e)
        else:
            m = exact.scale(exact.UNIT_POWERS[(ph.exponent * e) % 4], m)
            exps.append(0)
    return Dressed(m, tuple(exps))
