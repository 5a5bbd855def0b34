import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qstein.algebras import ChargesZ, CurrentsC, CurrentsCx, IndexSetMismatch, LaurentCx, PolyC, Z
from qstein.scalar import GaussianRational
from qstein.seminorm import NotSubmultiplicativeData, Weighted_r
from qstein.transform import (
    BasisMap,
    FlatCx,
    SharpC,
    SharpCx,
    SharpCyclic,
    SharpZ,
    apply,
    map_by_name,
    sample_azb_seminorms,
    verify_am_envelope,
    verify_azb_reflexivity,
    verify_cyclic_inverse,
    verify_hopf_homomorphism,
    verify_pairing_coherence,
)


def test_apply_examples():
    assert apply(SharpZ(), ChargesZ().elem({2: 1, -1: -3})) == LaurentCx().elem({2: 1, -1: -3})
    assert apply(SharpCx(), CurrentsCx().elem({3: 1})).index_set == Z
    assert apply(SharpC(), CurrentsC().elem({0: 1})) == PolyC().elem({0: 1})
    with pytest.raises(IndexSetMismatch):
        apply(SharpC(), ChargesZ().elem({1: 1}))


def test_homomorphism_examples():
    f = SharpZ()
    C, L = f.source, f.target
    assert apply(f, C.mul(C.elem({1: 1}), C.elem({2: 1}))) == L.mul(L.elem({1: 1}), L.elem({2: 1}))
    g = SharpCx()
    z2 = g.source.elem({2: 1})
    assert g.source.mul(z2, z2) == z2 and apply(g, z2) == g.target.mul(apply(g, z2), apply(g, z2))
    h = SharpC()
    t1 = h.source.elem({1: 1})
    assert apply(h, h.source.mul(t1, t1)) == h.target.elem({2: 1})


@pytest.mark.parametrize("name", ["sharpZ", "sharpCx", "sharpC", "flatZ", "flatCx", "flatC"])
def test_reindexing_maps_are_homomorphisms(name):
    assert verify_hopf_homomorphism(map_by_name(name), 6).ok


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_cyclic_homomorphism(m):
    f = SharpCyclic(m)
    assert f.exact == (m in (1, 2, 4))
    assert verify_hopf_homomorphism(f, m).ok


@pytest.mark.parametrize("m", [1, 2, 4])
def test_cyclic_inverse(m):
    assert verify_cyclic_inverse(m)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 7])
@given(data=st.data())
def test_cyclic_matches_numpy_fft(m, data):
    vals = data.draw(st.lists(st.integers(-9, 9), min_size=m, max_size=m))
    f = SharpCyclic(m)
    got = apply(f, f.source.elem({x: v for x, v in enumerate(vals) if v}))
    want = np.fft.ifft(np.array(vals, dtype=complex)) * m
    for j in range(m):
        c = got.coeff(j)
        assert abs(complex(c) - want[j]) < 1e-9


def test_negative_control_not_a_homomorphism():
    # δ^n ↦ 2 z^n is linear but breaks multiplicativity and the counit
    f = SharpZ()
    bad = BasisMap("double", f.source, f.target, lambda i: [(i, GaussianRational(2))])
    rep = verify_hopf_homomorphism(bad, 3)
    assert not rep.ok
    assert {k for k, *_ in rep.failures} >= {"mul", "counit"}
    # a transform with the conjugate root is still a homomorphism; a shifted one is not
    shifted = BasisMap("shift", f.source, f.target, lambda i: [(i + 1, GaussianRational(1))])
    assert not verify_hopf_homomorphism(shifted, 3).ok


@pytest.mark.parametrize("kind", ["Z", "C"])
def test_pairing_coherence(kind):
    assert verify_pairing_coherence(kind, 8).ok


@pytest.mark.parametrize("name", ["sharpZ", "sharpC", "sharpCx", "flatCx", "flatC", "flatZ"])
def test_am_envelope(name):
    assert verify_am_envelope(map_by_name(name), window=6, samples=60, rng=random.Random(5)).ok


def test_am_envelope_examples():
    r3 = Weighted_r({n: 3 ** abs(n) for n in range(-6, 7)})
    assert verify_am_envelope(SharpZ(), [r3], 6, 50).ok
    a2 = Weighted_r({k: Fraction(2**k, __import__("math").factorial(k)) for k in range(7)}, "currents_C")
    assert verify_am_envelope(SharpC(), [a2], 6, 50).ok
    assert verify_am_envelope(FlatCx(), None, 4, 20).ok


def test_am_envelope_rejects_bad_data():
    bad = Weighted_r({0: 1, 1: 2, 2: 5})
    with pytest.raises(NotSubmultiplicativeData):
        verify_am_envelope(SharpZ(), [bad], 4, 5)


def test_am_envelope_dense_image_negative():
    # a map missing odd targets does not have dense image
    f = SharpZ()
    sparse = BasisMap("even", f.source, f.target, lambda i: [(2 * i, GaussianRational(1))])
    rep = verify_am_envelope(sparse, [], 4, 0)
    assert not rep.ok and all(k == "dense image" for k, *_ in rep.failures)


@pytest.mark.parametrize("q", ["1/2", "2", "i", "3/5+4/5*i", "-3", "3/10+2/5*i"])
def test_azb_reflexivity(q):
    rep = verify_azb_reflexivity(q, window=3, samples=80, rng=random.Random(11))
    assert rep.ok, rep.failures[:3]


def test_reflexivity_unit_modulus_branch():
    # |q| = 1 has no vanishing bound and no p_{D,K}; only the C-norms are tested
    from qstein.seminorm import PDK, ModulusOne, vanishing_bound

    with pytest.raises(ModulusOne):
        vanishing_bound("i", 2, 2)
    with pytest.raises(ModulusOne):
        PDK(2, 1, "3/5+4/5*i")
    assert verify_azb_reflexivity("i", window=2, samples=40).ok


@pytest.mark.parametrize("q", ["1/2", "2"])
def test_sampled_seminorms_are_submultiplicative(q):
    from qstein.azb import AZB_INDEX
    from qstein.seminorm import check_submultiplicative, random_element

    rng = random.Random(2)
    for r in sample_azb_seminorms(q, rng):
        pairs = [(random_element(AZB_INDEX, rng), random_element(AZB_INDEX, rng)) for _ in range(30)]
        assert check_submultiplicative(r, pairs).ok
