import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cliffsym.algebra_core import (
    MINUS, PLUS, Multivector, Phase, Signature, SignedBlade, blade_label, blade_product,
    blade_square, blades_commute, conjugation, grade, grade_involution, idempotent_factor,
    mv_product, parse_blade, pseudo_conjugate, reversion, signed_product, volume_element,
    volume_inverse,
)
from cliffsym.exact import Gauss
from conftest import signatures

SMALL = signatures(5)


# -- independent oracles -------------------------------------------------------------

def oracle_sign(a, b, sig):
    """Bubble-sort the concatenated index list, cancelling equal neighbours with the metric."""
    seq = [i + 1 for i in range(sig.n) if a >> i & 1] + [i + 1 for i in range(sig.n) if b >> i & 1]
    sign = 1
    changed = True
    while changed:
        changed = False
        for k in range(len(seq) - 1):
            if seq[k] > seq[k + 1]:
                seq[k], seq[k + 1] = seq[k + 1], seq[k]
                sign = -sign
                changed = True
                break
            if seq[k] == seq[k + 1]:
                sign *= 1 if seq[k] <= sig.p else -1
                del seq[k:k + 2]
                changed = True
                break
    return sign, sum(1 << (i - 1) for i in seq)


def kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


PAULI_X = [[0, 1], [1, 0]]
PAULI_Z = [[1, 0], [0, -1]]
EYE2 = [[1, 0], [0, 1]]


def pauli_generators(sig):
    """n pairwise anticommuting matrices on n qubits (Jordan-Wigner strings), faithful on all blades."""
    out = []
    for k in range(sig.n):
        m = [[1]]
        for j in range(sig.n):
            m = kron(m, PAULI_Z if j < k else PAULI_X if j == k else EYE2)
        if k + 1 > sig.p:
            m = [[1j * x for x in row] for row in m]
        out.append(m)
    return out


def pauli_blade(mask, gens):
    dim = len(gens[0])
    m = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for i, g in enumerate(gens):
        if mask >> i & 1:
            m = mat_mul(m, g)
    return m


# -- blade products ----------------------------------------------------------------

def test_metric_convention():
    sig = Signature(1, 3)
    assert sig.metric(1) == 1 and sig.metric(2) == -1
    assert blade_product(0b1, 0b1, sig) == SignedBlade(PLUS, 0)
    assert blade_product(0b10, 0b10, sig) == SignedBlade(MINUS, 0)


def test_cl13_examples():
    sig = Signature(1, 3)
    assert blade_product(0b1, 0b10, sig) == SignedBlade(PLUS, 0b11)
    assert blade_product(0b11, 0b11, sig) == SignedBlade(PLUS, 0)
    assert blade_product(0b10, 0b1, sig) == SignedBlade(MINUS, 0b11)


@pytest.mark.parametrize("sig", SMALL, ids=str)
def test_blade_product_matches_bubble_sort_oracle(sig):
    for a, b in itertools.product(range(1 << sig.n), repeat=2):
        sign, blade = oracle_sign(a, b, sig)
        r = blade_product(a, b, sig)
        assert r.blade == blade
        assert (1 if r.phase == PLUS else -1) == sign


@pytest.mark.parametrize("sig", signatures(4), ids=str)
def test_blade_product_matches_matrix_representation(sig):
    gens = pauli_generators(sig)
    reps = {m: pauli_blade(m, gens) for m in range(1 << sig.n)}
    for a, b in itertools.product(range(1 << sig.n), repeat=2):
        r = blade_product(a, b, sig)
        s = 1 if r.phase == PLUS else -1
        expected = [[s * x for x in row] for row in reps[r.blade]]
        assert mat_mul(reps[a], reps[b]) == expected


@pytest.mark.parametrize("sig", SMALL, ids=str)
def test_blade_product_associative(sig):
    mul = lambda x, y: signed_product(x, y, sig)  # noqa: E731
    blades = [SignedBlade(PLUS, m) for m in range(1 << sig.n)]
    for x, y, z in itertools.product(blades, repeat=3):
        assert mul(mul(x, y), z) == mul(x, mul(y, z))


def test_blades_commute_agrees_with_products():
    sig = Signature(2, 3)
    for a, b in itertools.product(range(32), repeat=2):
        same = blade_product(a, b, sig) == blade_product(b, a, sig)
        assert blades_commute(a, b) == same


def test_out_of_range_mask():
    with pytest.raises(ValueError):
        blade_product(0b100, 1, Signature(1, 1))


def test_blade_labels_round_trip():
    for m in range(1, 64):
        assert parse_blade(blade_label(m)) == m
    assert parse_blade("1") == 0
    with pytest.raises(ValueError):
        parse_blade("e21")
    with pytest.raises(ValueError):
        parse_blade("x1")


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature(0, 0)
    with pytest.raises(ValueError):
        Signature(-1, 2)
    assert Signature(1, 4).mod8 == 5
    assert Signature(3, 2).n == 5


def test_phase_arithmetic():
    i = Phase(1)
    assert (i * i) == MINUS
    assert -PLUS == MINUS
    assert Phase(7).exponent == 3
    assert not i.is_real and MINUS.is_real
    assert i.value == Gauss(0, 1)


# -- multivectors ----------------------------------------------------------------

def test_identity_product():
    sig = Signature(1, 3)
    x = Multivector.from_dict({0b101: Gauss(2, 1), 0b11: -3})
    assert mv_product(Multivector.scalar(1), x, sig) == x
    assert mv_product(x, Multivector.scalar(1), sig) == x


def test_zero_coefficients_dropped():
    x = Multivector.from_dict({0: 1, 3: 0})
    assert x.as_dict() == {0: Gauss(1)}
    assert (x - x).is_zero()


def test_primitive_idempotent_squares_to_itself():
    sig = Signature(1, 3)
    f = idempotent_factor(0b1001, 1)
    assert mv_product(f, f, sig) == f


def test_coefficients_have_power_of_two_denominators():
    sig = Signature(2, 2)
    f = mv_product(idempotent_factor(0b101, 1), idempotent_factor(0b1010, 1), sig)
    for _, c in f:
        assert Fraction(c.re).denominator in (1, 2, 4)


coeff = st.builds(Gauss, st.integers(-3, 3), st.integers(-3, 3))


def multivectors(n):
    return st.dictionaries(st.integers(0, (1 << n) - 1), coeff, max_size=5).map(Multivector.from_dict)


@settings(max_examples=40, deadline=None)
@given(multivectors(4), multivectors(4), multivectors(4))
def test_mv_product_bilinear_and_associative(a, b, c):
    sig = Signature(1, 3)
    assert mv_product(a, b + c, sig) == mv_product(a, b, sig) + mv_product(a, c, sig)
    assert mv_product(mv_product(a, b, sig), c, sig) == mv_product(a, mv_product(b, c, sig), sig)


@settings(max_examples=40, deadline=None)
@given(multivectors(4), multivectors(4))
def test_mv_product_matches_matrix_representation(a, b):
    sig = Signature(2, 2)
    gens = pauli_generators(sig)

    def rep(x):
        dim = 1 << sig.n
        out = [[0] * dim for _ in range(dim)]
        for m, c in x:
            bm = pauli_blade(m, gens)
            z = complex(c.re, c.im)
            for i in range(dim):
                for j in range(dim):
                    out[i][j] += z * bm[i][j]
        return out

    assert rep(mv_product(a, b, sig)) == mat_mul(rep(a), rep(b))


# -- fundamental automorphisms -----------------------------------------------------------

def test_involution_examples():
    assert grade_involution(Multivector.blade(0b1)) == Multivector.blade(0b1, -1)
    assert grade_involution(Multivector.blade(0b11)) == Multivector.blade(0b11)
    assert reversion(Multivector.blade(0b111)) == Multivector.blade(0b111, -1)
    assert reversion(Multivector.scalar(5)) == Multivector.scalar(5)
    assert conjugation(Multivector.blade(0b1)) == Multivector.blade(0b1, -1)
    assert conjugation(Multivector.blade(0b1111)) == Multivector.blade(0b1111)


@pytest.mark.parametrize("sig", SMALL, ids=str)
def test_automorphism_and_antiautomorphism_laws(sig):
    blades = [Multivector.blade(m) for m in range(1 << sig.n)]
    for x, y in itertools.product(blades, repeat=2):
        xy = mv_product(x, y, sig)
        assert grade_involution(xy) == mv_product(grade_involution(x), grade_involution(y), sig)
        assert reversion(xy) == mv_product(reversion(y), reversion(x), sig)
        assert conjugation(xy) == mv_product(conjugation(y), conjugation(x), sig)


@pytest.mark.parametrize("sig", SMALL, ids=str)
def test_involutivity_and_commutativity(sig):
    for m in range(1 << sig.n):
        x = Multivector.blade(m, Gauss(1, 2))
        assert grade_involution(grade_involution(x)) == x
        assert reversion(reversion(x)) == x
        assert pseudo_conjugate(pseudo_conjugate(x, sig), sig) == x
        assert grade_involution(reversion(x)) == reversion(grade_involution(x))
        assert conjugation(x) == grade_involution(reversion(x))
        assert pseudo_conjugate(reversion(x), sig) == reversion(pseudo_conjugate(x, sig))
        assert pseudo_conjugate(grade_involution(x), sig) == grade_involution(pseudo_conjugate(x, sig))


@pytest.mark.parametrize("sig", [s for s in SMALL if s.n % 2 == 0], ids=str)
def test_grade_involution_is_inner_for_even_n(sig):
    omega = Multivector.blade(sig.full_mask)
    inv = volume_inverse(sig)
    for m in range(1 << sig.n):
        x = Multivector.blade(m)
        assert mv_product(mv_product(omega, x, sig), inv, sig) == grade_involution(x)


@pytest.mark.parametrize("sig", [s for s in SMALL if s.n % 2 == 1], ids=str)
def test_volume_element_is_central_for_odd_n(sig):
    omega = Multivector.blade(sig.full_mask)
    for m in range(1 << sig.n):
        x = Multivector.blade(m)
        assert mv_product(omega, x, sig) == mv_product(x, omega, sig)


@pytest.mark.parametrize("p,q,square", [(1, 3, -1), (1, 4, 1), (3, 2, 1), (4, 1, -1), (4, 0, 1)])
def test_volume_element_square(p, q, square):
    sig = Signature(p, q)
    w, sq = volume_element(sig)
    assert w == SignedBlade(PLUS, sig.full_mask)
    assert sq == square == oracle_sign(sig.full_mask, sig.full_mask, sig)[0]
    assert mv_product(Multivector.blade(w.blade), volume_inverse(sig), sig) == Multivector.scalar(1)


# -- pseudoautomorphism -------------------------------------------------------------------

def test_pseudo_conjugate_examples():
    sig = Signature(1, 3)
    assert pseudo_conjugate(Multivector.scalar(Gauss(0, 1)), sig) == Multivector.scalar(Gauss(0, -1))
    # e1 and i·e2 are real in the extracted subalgebra
    real = Multivector.from_dict({0b1: 1, 0b10: Gauss(0, 1), 0b110: -1})
    assert pseudo_conjugate(real, sig) == real
    assert pseudo_conjugate(Multivector.blade(0b10), sig) == Multivector.blade(0b10, -1)


def test_pseudo_conjugate_is_multiplicative_on_cl13():
    sig = Signature(1, 3)
    units = [Gauss(1), Gauss(0, 1)]
    elems = [Multivector.blade(m, u) for m in range(16) for u in units]
    for x, y in itertools.product(elems, repeat=2):
        lhs = pseudo_conjugate(mv_product(x, y, sig), sig)
        rhs = mv_product(pseudo_conjugate(x, sig), pseudo_conjugate(y, sig), sig)
        assert lhs == rhs


def test_blade_square_matches_reversion_rule():
    sig = Signature(2, 3)
    for m in range(32):
        k = grade(m)
        metric = 1
        for i in range(sig.n):
            if m >> i & 1:
                metric *= sig.metric(i + 1)
        assert blade_square(m, sig) == (-1) ** (k * (k - 1) // 2) * metric
