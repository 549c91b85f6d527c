import pytest

from cliffsym.algebra_core import Signature
from cliffsym.group_engine import (
    GroupId, Unrecognized, center, closure, exponent, factor_group, order_structure,
)
from cliffsym.spinor_rep import canonical_idempotents, idempotent_group, make_idempotent, stabilizer_group
from cliffsym.structure_theory import (
    PT_COVERS, RING_BY_MOD8, CptSignature, NegativeIndex, center_type, cpt_cover_lookup,
    family_center, idempotent_factor_count, particle_class, pt_cover_lookup, radon_hurwitz,
    ring_class, salingaros_group, salingaros_type, sign_string, stabilizer_order,
)
from conftest import WORKED_SIGNATURES, signatures

UP_TO_6 = signatures(6)


# -- Radon-Hurwitz numbers and k ---------------------------------------------------------

def test_radon_hurwitz_base_table():
    assert [radon_hurwitz(i) for i in range(8)] == [0, 1, 2, 2, 3, 3, 3, 3]


def test_radon_hurwitz_period():
    assert radon_hurwitz(8) == 4
    assert radon_hurwitz(11) == 6
    for i in range(24):
        assert radon_hurwitz(i + 8) == radon_hurwitz(i) + 4


def test_radon_hurwitz_negative():
    with pytest.raises(NegativeIndex):
        radon_hurwitz(-1)


@pytest.mark.parametrize("p,q,k", [(1, 3, 1), (3, 1, 2), (2, 2, 2), (4, 0, 1), (0, 4, 1)])
def test_idempotent_factor_count_matches_worked_examples(p, q, k):
    sig = Signature(p, q)
    assert idempotent_factor_count(sig) == k
    for spec in canonical_idempotents(sig):
        assert len(spec.factors) == k


@pytest.mark.parametrize("sig", signatures(8), ids=str)
def test_idempotent_factor_count_matches_matrix_dimensions(sig):
    # Cl = c copies of Mat_m(K) and the minimal left ideal has real dimension m*d = 2^(n-k)
    k = idempotent_factor_count(sig)
    ring = ring_class(sig)
    copies = 2 if ring.is_split else 1
    d = ring.dimension // copies
    m = 2 ** (sig.n - k) // d
    assert m * d == 2 ** (sig.n - k)
    assert copies * m * m * d == 2 ** sig.n


# -- rings, centers, particle classes ------------------------------------------------------

@pytest.mark.parametrize("r,ring,particle", [
    (0, "R", "truly_neutral"), (1, "R⊕R", "truly_neutral"), (2, "R", "truly_neutral"),
    (3, "C", "charged"), (4, "H", "neutral"), (5, "H⊕H", "neutral"), (6, "H", "neutral"),
    (7, "C", "charged"),
])
def test_ring_and_particle_class_by_residue(r, ring, particle):
    for sig in signatures(8):
        if sig.mod8 == r:
            assert ring_class(sig).id == ring == RING_BY_MOD8[r]
            assert particle_class(sig) == particle


def test_named_examples():
    assert ring_class(Signature(1, 3)).id == "H"
    assert ring_class(Signature(4, 1)).id == "C"
    assert ring_class(Signature(3, 2)).id == "R⊕R"
    assert center_type(Signature(1, 3)) == GroupId("Z2")
    assert center_type(Signature(4, 1)) == GroupId("Z4")
    assert center_type(Signature(1, 4)) == GroupId("Z2×Z2")
    assert particle_class(Signature(4, 1)) == "charged"
    assert particle_class(Signature(1, 4)) == "neutral"
    assert particle_class(Signature(3, 2)) == "truly_neutral"


@pytest.mark.parametrize("sig", UP_TO_6, ids=str)
def test_center_type_matches_computed_center(sig):
    from cliffsym.group_engine import classify_small_group

    z = center(salingaros_group(sig))
    assert classify_small_group(z) == center_type(sig)
    assert family_center(salingaros_type(sig).family) == center_type(sig).name


# -- Salingaros types ---------------------------------------------------------------------

@pytest.mark.parametrize("p,q,family,label", [
    (4, 1, "S", "Q4 ∘ D4 ∘ Z4"),
    (1, 4, "Ω_even", "Q4 ∘ D4 ∘ (Z2×Z2)"),
    (3, 2, "Ω_odd", "D4 ∘ D4 ∘ D2"),
    (1, 3, "N_even", "Q4 ∘ D4"),
    (3, 1, "N_odd", "D4 ∘ D4"),
])
def test_salingaros_labels(p, q, family, label):
    st = salingaros_type(Signature(p, q))
    assert st.family == family
    assert st.central_product_label == label


def test_salingaros_symbols():
    assert salingaros_type(Signature(4, 1)).symbol == "S_2"
    assert salingaros_type(Signature(1, 4)).symbol == "Ω_4"
    assert salingaros_type(Signature(3, 2)).symbol == "Ω_3"


# Central products realized as monomial matrices: each row holds (column, i-exponent).

def _mono(rows):
    return tuple(rows)


def _mono_mul(a, b):
    return tuple((b[c][0], (e + b[c][1]) % 4) for c, e in a)


def _kron(a, b):
    nb = len(b)
    return tuple((ca * nb + cb, (ea + eb) % 4) for ca, ea in a for cb, eb in b)


def _eye(n):
    return tuple((i, 0) for i in range(n))


FACTORS = {
    "D4": [_mono([(1, 0), (0, 0)]), _mono([(0, 0), (1, 2)])],
    "Q4": [_mono([(1, 1), (0, 1)]), _mono([(0, 1), (1, 3)])],
    "Z4": [_mono([(0, 1)])],
    "Z2": [_mono([(0, 2)])],
    "D2": [_mono([(0, 0), (1, 2)]), _mono([(0, 2), (1, 2)])],
    "(Z2×Z2)": [_mono([(0, 0), (1, 2)]), _mono([(0, 2), (1, 2)])],
}


def central_product(label):
    parts = label.split(" ∘ ")
    dims = [len(FACTORS[p][0]) for p in parts]
    gens = []
    for k, part in enumerate(parts):
        for g in FACTORS[part]:
            m = _eye(1)
            for j, d in enumerate(dims):
                m = _kron(m, g if j == k else _eye(d))
            gens.append(m)
    total = 1
    for d in dims:
        total *= d
    return closure(gens, _mono_mul, identity=_eye(total))


def fingerprint(g):
    return g.order, g.is_abelian(), order_structure(g).as_tuple(), center(g).order


@pytest.mark.parametrize("sig", UP_TO_6, ids=str)
def test_central_product_label_matches_vee_group(sig):
    label = salingaros_type(sig).central_product_label
    assert fingerprint(central_product(label)) == fingerprint(salingaros_group(sig))


@pytest.mark.parametrize("sig", UP_TO_6, ids=str)
def test_theorem2_quotient_by_center_is_elementary_abelian(sig):
    g = salingaros_group(sig)
    q = factor_group(g, center(g))
    assert q.is_abelian()
    assert exponent(q) <= 2
    assert q.order == 2 ** (2 * (sig.n // 2))
    assert g.order == 2 ** (sig.n + 1)


def test_g40_and_g04_share_fingerprint():
    assert fingerprint(salingaros_group(Signature(4, 0))) == fingerprint(salingaros_group(Signature(0, 4)))


# -- idempotent groups ------------------------------------------------------------------------

@pytest.mark.parametrize("pq", WORKED_SIGNATURES)
def test_idempotent_and_stabilizer_orders(pq):
    sig = Signature(*pq)
    k = idempotent_factor_count(sig)
    for spec in canonical_idempotents(sig):
        assert idempotent_group(spec, sig).order == 2 ** (k + 1)
        assert stabilizer_group(make_idempotent(spec, sig), sig).order == stabilizer_order(sig)


def test_stabilizer_order_examples():
    assert stabilizer_order(Signature(2, 2)) == 8
    assert stabilizer_order(Signature(1, 3)) == 16


# -- covering catalogs -------------------------------------------------------------------------

PT_COVERS = [
    ((1, 1, 1), "Z2×Z2×Z2", "PT=TP"),
    ((1, -1, -1), "Z4×Z2", "PT=TP"),
    ((-1, 1, -1), "Z4×Z2", "PT=TP"),
    ((-1, -1, 1), "Z4×Z2", "PT=TP"),
    ((-1, -1, -1), "Q4", "PT=-TP"),
    ((-1, 1, 1), "D4", "PT=-TP"),
    ((1, -1, 1), "D4", "PT=-TP"),
    ((1, 1, -1), "D4", "PT=-TP"),
]


@pytest.mark.parametrize("signs,name,rel", PT_COVERS)
def test_pt_cover_rows(signs, name, rel):
    group, relation = pt_cover_lookup(*signs)
    assert group.name == name and relation == rel


def test_pt_cover_catalog_is_exhaustive():
    assert len(PT_COVERS) == 8


def _sig_with(plus):
    return CptSignature(*([1] * plus + [-1] * (7 - plus)))


def test_cpt_cover_rows():
    assert cpt_cover_lookup(_sig_with(7), True).name == "Z2^4"
    assert cpt_cover_lookup(_sig_with(3), True).name == "Z4×Z2×Z2"
    assert cpt_cover_lookup(_sig_with(1), False).name == "Q4×Z2"
    assert cpt_cover_lookup(_sig_with(5), False).name == "D4×Z2"
    assert cpt_cover_lookup(_sig_with(3), False).name == "Z4*×Z2×Z2"
    assert cpt_cover_lookup(CptSignature(-1, -1, -1, -1, 1, 1, 1), False).name == "Z4*×Z2×Z2"


@pytest.mark.parametrize("plus,abelian", [(0, False), (2, False), (4, True), (6, False), (7, False),
                                          (5, True), (1, True)])
def test_cpt_cover_catalog_rejects_other_patterns(plus, abelian):
    with pytest.raises(Unrecognized):
        cpt_cover_lookup(_sig_with(plus), abelian)


def test_sign_string_rendering():
    assert sign_string((-1, -1, -1, -1, 1, 1, 1)) == "(-,-,-,-,+,+,+)"
    assert str(CptSignature(1, 1, -1, 1, -1, 1, 1)) == "(+,+,-,+,-,+,+)"
