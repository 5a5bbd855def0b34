import random

import pytest
from hypothesis import given, strategies as st

from conftest import Q_SET
from qstein.algebras import TensorElem, check_hopf_axioms, check_pairing_duality
from qstein.azb import (
    AZB_INDEX,
    AzbAlgebra,
    AzbDual,
    GeneratorWord,
    azb_antipode,
    azb_coproduct,
    azb_counit,
    azb_dual_coproduct,
    azb_dual_mul,
    azb_dual_pair,
    azb_mul,
    azb_pair,
    classical_limit_check,
    normal_form,
    skew_iso_check,
)
from qstein.algebras import GradedElem
from qstein.qcomb import q_binomial, q_factorial
from qstein.scalar import ONE, as_q, parse_scalar

Q = parse_scalar


def E(coeffs):
    return GradedElem(AZB_INDEX, coeffs)


def W(text):
    return GeneratorWord.parse(text)


def test_mul_examples():
    q = Q("1/2")
    assert azb_mul(q, E({(1, 1): 1}), E({(2, 3): 1})) == E({(3, 4): q * q})
    assert azb_mul(q, E({(0, 1): 1}), E({(1, 0): 1})) == E({(1, 1): q})
    u = E({(2, 1): 3, (-1, 0): 1})
    assert azb_mul(q, E({(0, 0): 1}), u) == u


def test_coproduct_examples():
    q = as_q(Q("2"))
    assert azb_coproduct(q, E({(0, 1): 1})) == TensorElem({((0, 0), (0, 1)): 1, ((0, 1), (1, 0)): 1})
    assert azb_coproduct(q, E({(3, 0): 1})) == TensorElem({((3, 0), (3, 0)): 1})
    want = TensorElem({((1, i), (1 + i, 2 - i)): q_binomial(2, i, q) for i in range(3)})
    assert azb_coproduct(q, E({(1, 2): 1})) == want
    # the co-opposite variant swaps legs
    assert azb_coproduct(q, E({(0, 1): 1}), co_opposite=True) == TensorElem({((0, 1), (0, 0)): 1, ((1, 0), (0, 1)): 1})


@pytest.mark.parametrize("q", Q_SET)
def test_coproduct_from_generators(q):
    # κ is multiplicative, so κ(z^n t^k) = κ(z)^n κ(t)^k with κ(z) = z⊗z, κ(t) = 1⊗t + t⊗z
    A = AzbAlgebra(Q(q))
    kz = TensorElem({((1, 0), (1, 0)): 1})
    kzi = TensorElem({((-1, 0), (-1, 0)): 1})
    kt = TensorElem({((0, 0), (0, 1)): 1, ((0, 1), (1, 0)): 1})
    for n in range(-3, 4):
        for k in range(5):
            acc = TensorElem({((0, 0), (0, 0)): 1})
            for _ in range(abs(n)):
                acc = A.tensor_mul(acc, kz if n > 0 else kzi)
            for _ in range(k):
                acc = A.tensor_mul(acc, kt)
            assert acc == A.coproduct(A.basis_elem((n, k)))


def test_counit_examples():
    # ε is the character at the identity (z = 1, t = 0); the counit law forces ε(z^n) = 1
    assert azb_counit(E({(0, 0): 1})) == ONE
    assert azb_counit(E({(3, 0): 1})) == ONE
    assert azb_counit(E({(0, 1): 1})) == 0
    A = AzbAlgebra(Q("1/2"))
    z3 = A.basis_elem((3, 0))
    assert A.counit_leg(A.coproduct(z3), 0) == z3


@pytest.mark.parametrize("q", ["2", "1/2", "i"])
def test_antipode_examples(q):
    qq = as_q(Q(q))
    assert azb_antipode(qq, E({(0, 1): 1})) == E({(-1, 1): -qq.pow(-1)})
    # the same through the rewrite oracle: -t zinv
    assert normal_form(qq, GeneratorWord(("t", "zinv"), -ONE)) == E({(-1, 1): -qq.pow(-1)})
    assert azb_antipode(qq, E({(1, 0): 1})) == E({(-1, 0): 1})
    assert azb_antipode(qq, E({(0, 0): 1})) == E({(0, 0): 1})


@pytest.mark.parametrize("q", Q_SET)
def test_antipode_is_anti_multiplicative(q):
    A = AzbAlgebra(Q(q))
    rng = random.Random(7)
    for _ in range(30):
        i = (rng.randint(-3, 3), rng.randint(0, 3))
        j = (rng.randint(-3, 3), rng.randint(0, 3))
        u, v = A.basis_elem(i), A.basis_elem(j)
        assert A.antipode(A.mul(u, v)) == A.mul(A.antipode(v), A.antipode(u))


def test_dual_mul_examples():
    q = Q("1/2")
    assert azb_dual_mul(q, E({(2, 1): 1}), E({(3, 2): 1})) == E({(2, 3): 1})
    assert azb_dual_mul(q, E({(2, 1): 1}), E({(2, 2): 1})).is_zero()
    D = AzbDual(q)
    a = E({(1, 2): 3, (-2, 1): 1})
    assert D.mul(D.unit(6), a) == a
    assert D.mul(a, D.unit(6)) == a


def test_dual_coproduct_examples():
    q = Q("2")
    assert azb_dual_coproduct(q, E({(0, 0): 1}), 2) == TensorElem({((m, 0), (-m, 0)): 1 for m in range(-2, 3)})
    D = AzbDual(q)
    assert D.counit(E({(5, 0): 1})) == 0
    assert D.counit(E({(0, 0): 1})) == ONE


@pytest.mark.parametrize("q", ["2", "1/2", "i"])
def test_pair_examples(q):
    qq = as_q(Q(q))
    assert azb_pair(qq, E({(1, 2): 1}), E({(1, 2): 1})) == 1 + qq.value
    assert azb_pair(1, E({(1, 2): 1}), E({(1, 2): 1})) == 2
    assert azb_pair(qq, E({(1, 2): 1}), E({(2, 2): 1})) == 0
    assert azb_pair(qq, E({(0, 4): 1}), E({(0, 4): 1})) == q_factorial(4, qq)


def test_normal_form_examples():
    q = Q("3")
    assert normal_form(q, W("t z")) == E({(1, 1): q})
    assert normal_form(q, W("z zinv")) == E({(0, 0): 1})
    assert normal_form(q, W("t t z")) == E({(1, 2): q * q})
    assert normal_form(q, W("")) == E({(0, 0): 1})
    with pytest.raises(ValueError):
        W("t x")


words = st.lists(st.sampled_from(["z", "zinv", "t"]), max_size=10).map(tuple)


@pytest.mark.parametrize("q", Q_SET)
@given(w1=words, w2=words, seed=st.integers(0, 10**6))
def test_rewrite_homomorphism_and_confluence(q, w1, w2, seed):
    qq = as_q(Q(q))
    a, b = GeneratorWord(w1), GeneratorWord(w2)
    joined = normal_form(qq, a + b)
    assert joined == azb_mul(qq, normal_form(qq, a), normal_form(qq, b))
    for strategy in ("rightmost", "random"):
        assert normal_form(qq, a + b, strategy=strategy, rng=random.Random(seed)) == joined


@pytest.mark.parametrize("q", Q_SET)
def test_skew_iso(q):
    assert skew_iso_check(Q(q), window=3)


def test_skew_iso_spot_antipode():
    q = Q("1/2")
    from qstein.skew import laurent_quantum_pair

    S = laurent_quantum_pair(q).skew()
    assert AzbAlgebra(q).antipode(E({(2, 2): 1})) == S.antipode(S.elem({(2, 2): 1}))


def test_classical_limit():
    assert classical_limit_check(3)
    A = AzbAlgebra(1)
    assert A.antipode(E({(1, 1): 1})) == E({(-2, 1): -1})
    assert AzbDual(1).mul(E({(1, 1): 1}), E({(2, 1): 1})) == E({(1, 2): 1})


@pytest.mark.parametrize("q", ["2", "i"])
def test_hopf_axioms_small(q):
    assert check_hopf_axioms(AzbAlgebra(Q(q)), 3).ok
    assert check_hopf_axioms(AzbDual(Q(q)), 2).ok
    assert check_hopf_axioms(AzbAlgebra(Q(q), co_opposite=True), 2).ok


@pytest.mark.parametrize("q", ["1/2", "-1"])
def test_pairing_duality(q):
    assert check_pairing_duality(azb_dual_pair(Q(q)), 3).ok
