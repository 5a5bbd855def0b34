import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from _families import canonical_families
from qstein.algebras import N, GradedElem, Z
from qstein.azb import AZB_INDEX, AzbAlgebra
from qstein.seminorm import (
    PDK,
    FamilyMismatch,
    InvalidParameters,
    ModulusOne,
    NormC_OC,
    NormC_OCx,
    NormN_OZ,
    NormC_Charges,
    NotSubmultiplicativeData,
    Weighted_r,
    check_submultiplicative,
    dominating_seminorm_charges_Z,
    dominating_seminorm_currents_C,
    evaluate,
    finite_support_check,
    pdk_witness,
    random_element,
    vanishing_bound,
    _qmod,
)
from qstein.scalar import as_q, parse_scalar

FAMILIES = canonical_families()


def test_evaluate_examples():
    assert evaluate(NormC_OCx(2), GradedElem(Z, {2: 1, -1: 3})) == 10
    assert evaluate(NormN_OZ(1), GradedElem(Z, {0: 1, 2: 5})) == 1
    assert evaluate(PDK(4, 2, "1/2"), GradedElem(AZB_INDEX, {(1, 0): 1})) == 4


def test_evaluate_paths():
    # rational modulus stays exact, an irrational one drops to float
    s = NormC_OCx(2)
    assert isinstance(evaluate(s, GradedElem(Z, {1: "3/5+4/5*i"})), Fraction)
    v = evaluate(s, GradedElem(Z, {1: "1+1*i"}))
    assert isinstance(v, float) and v == pytest.approx(2 * 2**0.5)


def test_family_mismatch():
    with pytest.raises(FamilyMismatch):
        evaluate(NormC_OCx(2), GradedElem(N, {1: 1}))


def test_parameter_checks():
    with pytest.raises(InvalidParameters):
        NormC_OCx("1/2")
    with pytest.raises(InvalidParameters):
        NormC_Charges(0)
    with pytest.raises(InvalidParameters):
        PDK(2, 2, "1/2")
    with pytest.raises(ModulusOne):
        PDK(2, 2, "i")
    assert not PDK(2, 2, "1/2", allow_illegal=True).params["legal"]


def test_submult_examples():
    z = GradedElem(Z, {1: 1})
    rep = check_submultiplicative(NormC_OCx(2), [(z, z)])
    assert rep.ok and rep.exact_checks == 1
    u, v = pdk_witness(2)
    bad = check_submultiplicative(PDK(2, 2, "1/2", allow_illegal=True), [(u, v)])
    assert bad.as_dict()["violations"] == [{"u": str(u), "v": str(v), "lhs": "4", "rhs": "1"}]


def test_constant_weight_variant_fails_for_large_q():
    # weight D/|q|^K for every k is not submultiplicative
    # t·z = 2 z t has weight 2·(4/2) = 4 while p(t) p(z) = 1·2
    u = GradedElem(AZB_INDEX, {(0, 1): 1})
    v = GradedElem(AZB_INDEX, {(1, 0): 1})
    const = PDK(4, 1, 2, weight="constant")
    rep = check_submultiplicative(const, [(u, v)])
    assert not rep.ok and rep.violations[0][2:] == (4, 2)
    assert check_submultiplicative(PDK(4, 1, 2), [(u, v)]).ok


@pytest.mark.parametrize("label,s", FAMILIES, ids=[f[0] for f in FAMILIES])
@pytest.mark.parametrize("kind", ["rational", "signed", "gaussian"])
def test_families_submultiplicative(label, s, kind):
    rng = random.Random(hash((label, kind)) & 0xFFFF)
    pairs = [(random_element(s.index_set, rng, kind=kind), random_element(s.index_set, rng, kind=kind)) for _ in range(150)]
    rep = check_submultiplicative(s, pairs)
    assert rep.ok, rep.as_dict()
    if kind == "rational" and "i" not in str(s):
        assert rep.exact_checks == rep.checked


@pytest.mark.parametrize("label,s", FAMILIES, ids=[f[0] for f in FAMILIES])
def test_homogeneity_and_triangle(label, s):
    rng = random.Random(3)
    for _ in range(40):
        u = random_element(s.index_set, rng, kind="signed")
        v = random_element(s.index_set, rng, kind="signed")
        c = Fraction(rng.randint(-7, 7), rng.randint(1, 4))
        assert evaluate(s, u.scale(c)) == abs(c) * evaluate(s, u)
        assert evaluate(s, u + v) <= evaluate(s, u) + evaluate(s, v)


moduli = st.sampled_from(["1/2", "-1/2", "3/10+2/5*i", "1/3", "2/3*i"])


@given(q=moduli, D=st.fractions(1, 12, max_denominator=4), K=st.integers(0, 5))
def test_pdk_witness_iff(q, D, K):
    s = PDK(D, K, q, allow_illegal=True)
    u, v = pdk_witness(K)
    rep = check_submultiplicative(s, [(u, v)])
    assert rep.exact_checks == 1
    m, exact = _qmod(as_q(parse_scalar(q)))
    assert exact
    assert (not rep.ok) == (D * m**K < 1)


@pytest.mark.parametrize("q", ["1/2", "2", "3/10+2/5*i"])
@given(data=st.data())
def test_legal_pdk_random_pairs(q, data):
    K = data.draw(st.integers(0, 3))
    m, _ = _qmod(as_q(parse_scalar(q)))
    edge = 1 / m**K if m < 1 else m**K
    D = data.draw(st.fractions(edge, edge + 6, max_denominator=3).filter(lambda d: d >= edge and d >= 1))
    s = PDK(D, K, q)
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    pairs = [(random_element(AZB_INDEX, rng), random_element(AZB_INDEX, rng)) for _ in range(10)]
    assert check_submultiplicative(s, pairs).ok


def test_dominating_currents_C_examples():
    from math import factorial

    assert dominating_seminorm_currents_C({k: Fraction(2**k, factorial(k)) for k in range(8)}) == 2
    assert dominating_seminorm_currents_C({k: Fraction(1, factorial(k)) for k in range(8)}) == 1
    with pytest.raises(NotSubmultiplicativeData):
        dominating_seminorm_currents_C({0: 1, 1: 3, 2: 5})


def test_dominating_charges_Z_examples():
    assert dominating_seminorm_charges_Z({n: 3 ** abs(n) for n in range(-5, 6)}) == (1, 3)
    assert dominating_seminorm_charges_Z({n: 1 for n in range(-5, 6)}) == (1, 1)
    with pytest.raises(NotSubmultiplicativeData):
        dominating_seminorm_charges_Z({0: 1, 1: 2, 2: 5})


@given(
    a=st.fractions(1, 5, max_denominator=3),
    C=st.fractions(0, 4, max_denominator=3),
    top=st.integers(0, 6),
    seed=st.integers(0, 10**6),
)
def test_dominating_currents_C_certifies(a, C, top, seed):
    from math import factorial

    r = {k: a * C**k / factorial(k) for k in range(top + 1)}
    Cd = dominating_seminorm_currents_C(r)
    p, ref = Weighted_r(r, "currents_C"), NormC_OC(Cd)
    M = max(1, r[0])
    rng = random.Random(seed)
    for _ in range(5):
        alpha = random_element(N, rng, degree=8, kind="signed")
        assert evaluate(p, alpha) <= M * evaluate(ref, alpha)


@given(
    a=st.fractions(1, 5, max_denominator=3),
    b=st.fractions(1, 4, max_denominator=3),
    c=st.fractions(1, 4, max_denominator=3),
    seed=st.integers(0, 10**6),
)
def test_dominating_charges_Z_certifies(a, b, c, seed):
    r = {n: a * (b**n if n >= 0 else c ** (-n)) for n in range(-6, 7)}
    M, C = dominating_seminorm_charges_Z(r)
    p, ref = Weighted_r(r, "charges"), NormC_Charges(max(C, 1))
    rng = random.Random(seed)
    for _ in range(5):
        alpha = random_element(Z, rng, degree=6, kind="signed")
        assert evaluate(p, alpha) <= M * evaluate(ref, alpha)


def test_finite_support_examples():
    assert finite_support_check({0: 1, 1: 1})
    assert not finite_support_check({0: 1, 1: Fraction(1, 2)})
    assert finite_support_check({n: 1 for n in range(-5, 6)}, tail_window=5)
    assert not finite_support_check({7: 1}, tail_window=5)


def test_vanishing_bound_examples():
    assert vanishing_bound("1/2", 2, 2) == 3
    assert vanishing_bound("1/2", 1, 1) == 1
    assert vanishing_bound(2, 2, 2) == 3
    with pytest.raises(ModulusOne):
        vanishing_bound("i", 2, 2)


@pytest.mark.parametrize("q", ["1/2", "2", "3/10+2/5*i", "-3"])
@pytest.mark.parametrize("D,K", [(4, 1), (9, 2), (30, 3)])
def test_vanishing_bound_certifies(q, D, K):
    # on legal PDK data p(t^k) = 0 beyond the bound
    s = PDK(D, K, q)
    rz = evaluate(s, GradedElem(AZB_INDEX, {(1, 0): 1}))
    rzi = evaluate(s, GradedElem(AZB_INDEX, {(-1, 0): 1}))
    Kb = vanishing_bound(q, rz, rzi)
    for k in range(Kb + 1, Kb + 6):
        assert evaluate(s, GradedElem(AZB_INDEX, {(0, k): 1})) == 0
    # and the bound is consistent with the conjugation identity z t^k z^-1 = q^-k t^k
    A = AzbAlgebra(q)
    z, zi = A.basis_elem((1, 0)), A.basis_elem((-1, 0))
    t3 = A.basis_elem((0, 3))
    assert A.mul(A.mul(z, t3), zi) == t3.scale(A.q.pow(-3))
