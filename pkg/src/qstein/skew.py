"""Skew Hopf algebras ``H ⊙ t`` built from a quantum pair.

A quantum pair is a central grouplike ``z`` in ``H`` together with a
grouplike ``ω`` in the dual such that the two dilation operators scale each
other by ``q``::

    M*_ω(z) = q z,        M*_z(ω) = q ω.

Given operator handles for ``(M*_ω)^k`` and for multiplication by ``z^j`` on
the basis of ``H``, :class:`SkewHopf` produces the algebra with

    (a⊙t^k)(b⊙t^l) = a·(M*_ω)^k(b) ⊙ t^(k+l)
    κ(a⊙t^k)       = Σ_i (k i)_q (a'⊙t^i) ⊗ (z^i a''⊙t^(k-i))
    σ(a⊙t^k)       = (-1)^k q^(-k(k+1)/2) z^(-k) (M*_ω)^k(σ_H a) ⊙ t^k

The same class realizes the dual side: swap the roles, using ``M*_z`` as the
twist and multiplication by ``ω`` as the grouplike action.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebras import (
    DEFAULT_WINDOW,
    BasedHopfAlgebra,
    ChargesZ,
    CurrentsCx,
    DualPair,
    FunZ,
    GradedElem,
    HopfReport,
    LaurentCx,
    N,
    ProductIndex,
    TensorElem,
    _accumulate,
    _inner,
    grouplike_check,
)
from .qcomb import q_binomial, q_factorial
from .scalar import ONE, ZERO, QParam, as_q

__all__ = [
    "NonInvertibleZ",
    "QuantumPair",
    "SkewHopf",
    "laurent_quantum_pair",
    "charges_quantum_pair",
    "check_quantum_pair",
    "derived_omega_action",
    "skew_mul",
    "skew_coproduct",
    "skew_counit",
    "skew_antipode",
    "skew_pair",
    "skew_dual_pair",
    "check_antipode_by_generators",
]

BasisOp = Callable[[int, object], list]  # (power, index) -> [(index, coeff), ...]


class NonInvertibleZ(ValueError):
    """The grouplike used by the coproduct has no inverse in the base."""


class SkewHopf(BasedHopfAlgebra):
    """``base ⊙ t`` with a twist ``T`` and a grouplike action ``Z``.

    ``twist(k, i)`` is ``T^k`` on the basis vector ``i`` (``k >= 0``) and
    ``zpow(j, i)`` is multiplication by the ``j``-th power of the grouplike
    (``j`` of either sign).  ``zpow`` may raise :class:`NonInvertibleZ` for
    negative ``j``.
    """

    def __init__(self, base: BasedHopfAlgebra, twist: BasisOp, zpow: BasisOp, q, name: str | None = None):
        self.base = base
        self.twist = twist
        self.zpow = zpow
        self.q = as_q(q)
        self.index_set = ProductIndex(base.index_set, N)
        self.windowed = base.windowed
        self.name = name or f"{base.name}⊙t[q={self.q}]"

    def basis_mul(self, i, j):
        (a, k), (b, l) = i, j
        out: dict = {}
        for b2, c1 in self.twist(k, b):
            for m, c2 in self.base.basis_mul(a, b2):
                _accumulate(out, (m, k + l), c1 * c2)
        return list(out.items())

    def basis_coproduct(self, i, window):
        a, k = i
        out: dict = {}
        for (a1, a2), c in self.base.basis_coproduct(a, window):
            for s in range(k + 1):
                qb = q_binomial(k, s, self.q)
                if not qb:
                    continue
                for a2z, cz in self.zpow(s, a2):
                    _accumulate(out, ((a1, s), (a2z, k - s)), c * qb * cz)
        return list(out.items())

    def basis_counit(self, i):
        a, k = i
        return self.base.basis_counit(a) if k == 0 else ZERO

    def basis_antipode(self, i):
        a, k = i
        sign = -ONE if k % 2 else ONE
        pref = sign * self.q.pow(-(k * (k + 1) // 2))
        out: dict = {}
        for b, c1 in self.base.basis_antipode(a):
            for b2, c2 in self.twist(k, b):
                for b3, c3 in self.zpow(-k, b2):
                    _accumulate(out, (b3, k), pref * c1 * c2 * c3)
        return list(out.items())

    def unit_terms(self, window):
        return [((i, 0), c) for i, c in self.base.unit_terms(window)]

    def embed(self, a: GradedElem, k: int = 0) -> GradedElem:
        """``a ⊙ t^k`` for ``a`` in the base."""
        self.base._own(a)
        return self.elem({(i, k): c for i, c in a.coeffs.items()})


@dataclass(frozen=True)
class QuantumPair:
    """Operator data for the skew construction over ``base`` and its dual.

    ``omega_action(k, i)``: ``(M*_ω)^k`` on the base basis.
    ``z_power(j, i)``: multiplication by ``z^j`` on the base basis.
    ``z_action_dual(k, i)``: ``(M*_z)^k`` on the dual basis.
    ``omega_power(j, i)``: multiplication by ``ω^j`` on the dual basis.
    ``omega_elem(W)``: ``ω`` cut to the window ``W`` in the dual.
    """

    base: BasedHopfAlgebra
    dual: BasedHopfAlgebra
    z_elem: GradedElem
    omega_action: BasisOp
    z_power: BasisOp
    z_action_dual: BasisOp
    omega_power: BasisOp
    omega_elem: Callable[[int], GradedElem]
    q: QParam
    base_pair: DualPair

    def skew(self) -> SkewHopf:
        return SkewHopf(self.base, self.omega_action, self.z_power, self.q, f"{self.base.name}⊙t")

    def dual_skew(self) -> SkewHopf:
        return SkewHopf(self.dual, self.z_action_dual, self.omega_power, self.q, f"{self.dual.name}⊛τ")

    def skew_pair(self) -> DualPair:
        """Pairing ``⟨a⊙t^k, α⊛τ^l⟩ = [k=l] ⟨a, α⟩ (k)!_q``."""
        q = self.q
        bw = self.base_pair.w

        def weight(i):
            return bw(i[0]) * q_factorial(i[1], q)

        return DualPair(self.skew(), self.dual_skew(), weight, f"{self.base.name}⊙t/{self.dual.name}⊛τ")


def _monomial_pair(q, base: BasedHopfAlgebra, dual: BasedHopfAlgebra) -> QuantumPair:
    q = as_q(q)

    def omega_action(k, n):
        return [(n, q.pow(k * n))]

    def z_power(j, n):
        return [(n + j, ONE)]

    def z_action_dual(k, n):
        return [(n - k, ONE)]

    def omega_power(j, n):
        return [(n, q.pow(j * n))]

    def omega_elem(window):
        return dual.elem({n: q.pow(n) for n in range(-window, window + 1)})

    return QuantumPair(
        base=base,
        dual=dual,
        z_elem=base.basis_elem(1),
        omega_action=omega_action,
        z_power=z_power,
        z_action_dual=z_action_dual,
        omega_power=omega_power,
        omega_elem=omega_elem,
        q=q,
        base_pair=DualPair(base, dual, None, f"{base.name}/{dual.name}"),
    )


def laurent_quantum_pair(q) -> QuantumPair:
    """``H = LaurentCx``, ``z = z^1``, ``ω = δ^q = Σ q^n ζ_n``."""
    return _monomial_pair(q, LaurentCx(), CurrentsCx())


def charges_quantum_pair(q) -> QuantumPair:
    """The same pair realized on ``ChargesZ`` with dual ``FunZ``."""
    return _monomial_pair(q, ChargesZ(), FunZ())


def _apply_op(alg: BasedHopfAlgebra, op: BasisOp, k: int, u: GradedElem) -> GradedElem:
    out: dict = {}
    for i, a in u.coeffs.items():
        for j, c in op(k, i):
            _accumulate(out, j, a * c)
    return GradedElem._raw(alg.index_set, out)


def derived_omega_action(p: QuantumPair, a: GradedElem, window: int = DEFAULT_WINDOW) -> GradedElem:
    """``M*_ω(a) = Σ ⟨a', ω⟩ a''`` computed from the coproduct and pairing."""
    W = _inner(p.base, window)
    omega = p.omega_elem(W + max((abs(i) for i in a.coeffs), default=0))
    out: dict = {}
    for (i, j), c in p.base.coproduct(a, W).coeffs.items():
        w = p.base_pair.pair(p.base.basis_elem(i), omega)
        if w:
            _accumulate(out, j, c * w)
    return GradedElem._raw(p.base.index_set, out)


def check_quantum_pair(p: QuantumPair, window: int = DEFAULT_WINDOW) -> bool:
    """Grouplike and central ``z``, grouplike ``ω``, and the two scaling identities."""
    base, dual, z = p.base, p.dual, p.z_elem
    if not grouplike_check(base, z, window):
        return False
    for i in base.basis(window):
        e = base.basis_elem(i)
        if base.mul(z, e) != base.mul(e, z):
            return False
    if _apply_op(base, p.omega_action, 1, z) != z.scale(p.q.value):
        return False
    W = _inner(dual, window)
    omega = p.omega_elem(W)
    if not grouplike_check(dual, omega, window):
        return False
    shifted = _apply_op(dual, p.z_action_dual, 1, p.omega_elem(W + 1)).window(window)
    return shifted == omega.window(window).scale(p.q.value)


def check_antipode_by_generators(alg: BasedHopfAlgebra, generators: list, depth: int = 3) -> HopfReport:
    """Antipode axiom on generators, then on every product of up to ``depth`` of them."""
    rep = HopfReport(f"{alg.name} antipode on generator products")
    words = [(g,) for g in range(len(generators))]
    frontier = list(words)
    for _ in range(depth - 1):
        frontier = [w + (g,) for w in frontier for g in range(len(generators))]
        words.extend(frontier)
    for w in words:
        u = generators[w[0]]
        for g in w[1:]:
            u = alg.mul(u, generators[g])
        d = alg.coproduct(u)
        eps = alg.unit().scale(alg.counit(u))
        left = alg.multiply_legs(alg.apply_leg(d, 0, alg.basis_antipode))
        right = alg.multiply_legs(alg.apply_leg(d, 1, alg.basis_antipode))
        rep.record("antipode on word", w, left == eps and right == eps)
    return rep


# functional interface ---------------------------------------------------------


def _skew_of(p):
    return p.skew() if isinstance(p, QuantumPair) else p


def skew_mul(p, u: GradedElem, v: GradedElem) -> GradedElem:
    return _skew_of(p).mul(u, v)


def skew_coproduct(p, u: GradedElem, window: int = DEFAULT_WINDOW) -> TensorElem:
    return _skew_of(p).coproduct(u, window)


def skew_counit(p, u: GradedElem):
    return _skew_of(p).counit(u)


def skew_antipode(p, u: GradedElem) -> GradedElem:
    return _skew_of(p).antipode(u)


def skew_pair(p: QuantumPair, u: GradedElem, a: GradedElem):
    return p.skew_pair().pair(u, a)


def skew_dual_pair(p: QuantumPair) -> DualPair:
    return p.skew_pair()
