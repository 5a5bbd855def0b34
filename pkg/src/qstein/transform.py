"""Fourier transforms ``♯`` and inclusions ``♭`` as maps on bases.

Each :class:`BasisMap` sends a basis vector of the source algebra to a
finite combination of basis vectors of the target.  The three transforms on
ℤ, ℂ× and ℂ are plain re-indexings; on ℤ_m the transform is the discrete
Fourier transform ``δ^x ↦ Σ_j ω^(jx) 1_j`` with ``ω = exp(2πi/m)``, which is
exact for ``m`` in {1, 2, 4} and a float map otherwise.

The verification suites check the homomorphism identities, the two clauses
behind the Arens-Michael envelope statements (dense image and seminorm
domination) and the seminorm classification behind the reflexivity of
``az+b``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .algebras import (
    DEFAULT_WINDOW,
    BasedHopfAlgebra,
    ChargesZ,
    CurrentsC,
    CurrentsCx,
    CyclicCharges,
    CyclicFun,
    FunZ,
    GradedElem,
    HopfReport,
    LaurentCx,
    PolyC,
    TensorElem,
    _accumulate,
    _inner,
    _legs_in,
    dual_pair_by_tag,
)
from .azb import AZB_INDEX
from .scalar import ONE, I, ModulusClass, as_q
from .seminorm import (
    PDK,
    RN,
    InvalidParameters,
    MaxSeminorm,
    NormC_Azb,
    NormC_OC,
    NormC_OCx,
    NormN_OZ,
    SeminormSpec,
    Weighted_r,
    check_submultiplicative,
    dominating_seminorm_charges_Z,
    dominating_seminorm_currents_C,
    evaluate,
    finite_support_check,
    random_element,
    _qmod,
    vanishing_bound,
)

__all__ = [
    "BasisMap",
    "SharpZ",
    "SharpCx",
    "SharpC",
    "SharpCyclic",
    "FlatZ",
    "FlatCx",
    "FlatC",
    "map_by_name",
    "apply",
    "verify_hopf_homomorphism",
    "verify_pairing_coherence",
    "verify_am_envelope",
    "dominating_target",
    "verify_azb_reflexivity",
    "sample_azb_seminorms",
    "verify_cyclic_inverse",
]


@dataclass
class BasisMap:
    """A linear map given on basis vectors.

    ``images(i)`` returns ``[(j, c), ...]``; for the re-indexing maps it is a
    single pair with ``c = 1``.  ``exact`` is False when the images carry
    float coefficients.
    """

    name: str
    source: BasedHopfAlgebra
    target: BasedHopfAlgebra
    images: Callable
    exact: bool = True
    index_map: Callable | None = None  # set for the re-indexing maps

    def __call__(self, u: GradedElem) -> GradedElem:
        return apply(self, u)


def _reindex(name, source, target, f=lambda i: i) -> BasisMap:
    return BasisMap(name, source, target, lambda i: [(f(i), ONE)], True, f)


def SharpZ() -> BasisMap:
    """``δ^n ↦ z^n``: charges on ℤ to Laurent polynomials."""
    return _reindex("SharpZ", ChargesZ(), LaurentCx())


def SharpCx() -> BasisMap:
    """``ζ_k ↦ 1_k``: currents on ℂ× to functions on ℤ."""
    return _reindex("SharpCx", CurrentsCx(), FunZ())


def SharpC() -> BasisMap:
    """``τ^n ↦ t^n``: currents on ℂ to polynomials."""
    return _reindex("SharpC", CurrentsC(), PolyC())


def FlatZ() -> BasisMap:
    """Inclusion of finitely supported functions on ℤ (identity on the basis)."""
    return _reindex("FlatZ", FunZ(), FunZ())


def FlatCx() -> BasisMap:
    return _reindex("FlatCx", LaurentCx(), LaurentCx())


def FlatC() -> BasisMap:
    return _reindex("FlatC", PolyC(), PolyC())


_EXACT_ROOTS = {1: [ONE], 2: [ONE, -ONE], 4: [ONE, I, -ONE, -I]}


def SharpCyclic(m: int) -> BasisMap:
    """Discrete Fourier transform ``δ^x ↦ Σ_j ω^(jx) 1_j`` on ℤ_m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m in _EXACT_ROOTS:
        roots = _EXACT_ROOTS[m]
        exact = True
    else:
        roots = [complex(w) for w in np.exp(2j * np.pi * np.arange(m) / m)]
        exact = False

    def images(x):
        return [(j, roots[(j * x) % m]) for j in range(m)]

    return BasisMap(f"SharpCyclic({m})", CyclicCharges(m), CyclicFun(m), images, exact)


def map_by_name(name: str) -> BasisMap:
    """``sharpZ``, ``sharpCx``, ``sharpC``, ``cyclic:m``, ``flatZ``, ``flatCx``, ``flatC``."""
    table = {
        "sharpz": SharpZ,
        "sharpcx": SharpCx,
        "sharpc": SharpC,
        "flatz": FlatZ,
        "flatcx": FlatCx,
        "flatc": FlatC,
    }
    key = name.lower()
    if key in table:
        return table[key]()
    for prefix in ("cyclic:", "sharpcyclic:", "cyclic(", "sharpcyclic("):
        if key.startswith(prefix):
            return SharpCyclic(int(key[len(prefix) :].rstrip(")")))
    raise KeyError(f"unknown map {name!r}")


def apply(m: BasisMap, u: GradedElem) -> GradedElem:
    m.source._own(u)
    out: dict = {}
    for i, c in u.coeffs.items():
        for j, d in m.images(i):
            _accumulate(out, j, c * d)
    return GradedElem._raw(m.target.index_set, out)


def _apply_tensor(m: BasisMap, x: TensorElem) -> TensorElem:
    out: dict = {}
    for key, c in x.coeffs.items():
        partial = [((), c)]
        for i in key:
            partial = [(pre + (j,), pc * d) for pre, pc in partial for j, d in m.images(i)]
        for k, v in partial:
            _accumulate(out, k, v)
    return TensorElem(out, x.arity) if out else TensorElem({}, x.arity)


def _same(x, y, exact, tol=1e-9):
    if exact:
        return x == y
    if isinstance(x, (GradedElem, TensorElem)):
        return x.almost_equal(y, tol)
    return abs(complex(x) - complex(y)) <= tol


def verify_hopf_homomorphism(m: BasisMap, window: int = DEFAULT_WINDOW, tol: float = 1e-9) -> HopfReport:
    """Multiplicativity, unit, counit, antipode and coproduct compatibility on the window.

    For windowed algebras the unit and coproduct identities are compared on
    indices whose legs all lie in the window.
    """
    src, tgt = m.source, m.target
    rep = HopfReport(f"{m.name} homomorphism")
    idx = src.basis(window)
    W = max(_inner(src, window), _inner(tgt, window))
    keep = _legs_in(tgt, window)
    for i in idx:
        a = src.basis_elem(i)
        fa = apply(m, a)
        for j in idx:
            b = src.basis_elem(j)
            rep.record("mul", (i, j), _same(apply(m, src.mul(a, b)), tgt.mul(fa, apply(m, b)), m.exact, tol))
        rep.record("counit", i, _same(tgt.counit(fa), src.counit(a), m.exact, tol))
        rep.record("antipode", i, _same(tgt.antipode(fa), apply(m, src.antipode(a)), m.exact, tol))
        lhs = tgt.coproduct(fa, W).restrict(keep)
        rhs = _apply_tensor(m, src.coproduct(a, W)).restrict(keep)
        rep.record("coproduct", i, _same(lhs, rhs, m.exact, tol))
    u_img = apply(m, src.unit(W)).window(window)
    rep.record("unit", None, _same(u_img, tgt.unit(W).window(window), m.exact, tol))
    return rep


def verify_cyclic_inverse(m: int) -> bool:
    """Exact check that the inverse DFT ``1_j = (1/m) Σ_x ω^(-jx) δ^x`` undoes the transform."""
    if m not in _EXACT_ROOTS:
        raise ValueError("exact inverse only for m in {1, 2, 4}")
    f = SharpCyclic(m)
    roots = _EXACT_ROOTS[m]
    for j in range(m):
        pre = f.source.elem({x: roots[(-j * x) % m] / m for x in range(m)})
        if apply(f, pre) != f.target.basis_elem(j):
            return False
    return True


_COHERENT = {
    # (map on the charges side, map on the currents side, primal pair, dual pair)
    "Z": (SharpZ, SharpCx, "LaurentCx/CurrentsCx", "FunZ/ChargesZ"),
    "C": (SharpC, SharpC, "PolyC/CurrentsC", "PolyC/CurrentsC"),
}


def verify_pairing_coherence(kind: str = "Z", window: int = DEFAULT_WINDOW) -> HopfReport:
    """``⟨♯α, β⟩ = ⟨♯'β, α⟩`` on basis elements of the window.

    ``kind="Z"`` pairs ``♯_ℤ`` with ``♯_ℂ×``; ``kind="C"`` uses ``♯_ℂ`` on
    both sides, where the pairing carries the ``n!`` weight.
    """
    fa, fb, left, right = _COHERENT[kind]
    fa, fb = fa(), fb()
    lp, rp = dual_pair_by_tag(left), dual_pair_by_tag(right)
    rep = HopfReport(f"pairing coherence {kind}")
    for i in fa.source.basis(window):
        a = fa.source.basis_elem(i)
        for j in fb.source.basis(window):
            b = fb.source.basis_elem(j)
            rep.record("coherence", (i, j), lp.pair(apply(fa, a), b) == rp.pair(apply(fb, b), a))
    return rep


# Arens-Michael envelope clauses ---------------------------------------------------


def dominating_target(m: BasisMap, source: SeminormSpec) -> tuple:
    """``(M, target)`` with ``source(α) <= M · target(m(α))``.

    The constant and the target seminorm come from the fundamental-system
    constructions for the source family.
    """
    name = m.name
    if name == "SharpZ":
        M, C = dominating_seminorm_charges_Z(source.params["r"])
        return M, NormC_OCx(max(C, 1))
    if name == "SharpC":
        r = source.params["r"]
        C = dominating_seminorm_currents_C(r)
        A0 = r.get(0, Fraction(0))
        return max(Fraction(1), A0), NormC_OC(C)
    if name == "SharpCx":
        r = source.params["r"]
        if not finite_support_check(r):
            raise InvalidParameters("weights on currents on ℂ× must be 0 or >= 1")
        Nw = max((abs(n) for n, v in r.items() if v), default=0)
        return max(r.values(), default=Fraction(0)), NormN_OZ(Nw)
    if name.startswith("Flat"):
        return Fraction(1), source
    raise KeyError(f"no domination recipe for {name}")


def _default_sources(m: BasisMap) -> list:
    if m.name == "SharpZ":
        return [Weighted_r({n: Fraction(c) ** abs(n) for n in range(-8, 9)}) for c in (1, 2, 3)] + [
            Weighted_r({n: 2 ** max(n, 0) * 3 ** max(-n, 0) for n in range(-8, 9)}),
            Weighted_r({n: 5 * 2 ** abs(n) for n in range(-8, 9)}),
        ]
    if m.name == "SharpC":
        return [
            Weighted_r({k: Fraction(c**k, math.factorial(k)) for k in range(9)}, form="currents_C") for c in (1, 2, 3)
        ] + [Weighted_r({k: Fraction(3 * 2**k, math.factorial(k)) for k in range(9)}, form="currents_C")]
    if m.name == "SharpCx":
        return [
            Weighted_r({n: 1 for n in range(-N, N + 1)}, form="currents_Cx") for N in (0, 2, 5)
        ] + [Weighted_r({-1: 2, 0: 1, 3: 7}, form="currents_Cx")]
    if m.name == "FlatCx":
        return [NormC_OCx(c) for c in (1, 2, 3)]
    if m.name == "FlatC":
        return [NormC_OC(c) for c in (1, 2, 3)]
    if m.name == "FlatZ":
        return [NormN_OZ(n) for n in (0, 2, 5)]
    return []


def verify_am_envelope(
    m: BasisMap,
    sources: list | None = None,
    window: int = DEFAULT_WINDOW,
    samples: int = 200,
    rng: random.Random | None = None,
) -> HopfReport:
    """Dense-image surrogate and seminorm domination along ``m``.

    (a) every target basis vector in the window is the image of a source
    basis vector; (b) for each source seminorm ``p`` the dominating pair
    ``(M, q)`` satisfies ``p(α) <= M q(m(α))`` on sampled ``α``, and ``q`` is
    submultiplicative on sampled pairs.
    """
    rng = rng or random.Random(0)
    rep = HopfReport(f"{m.name} envelope")
    hit = set()
    for i in m.source.basis(window):
        for j, _ in m.images(i):
            hit.add(j)
    for j in m.target.basis(window):
        rep.record("dense image", j, j in hit)
    for p in sources if sources is not None else _default_sources(m):
        M, target = dominating_target(m, p)
        xs = [random_element(m.source.index_set, rng, window, kind="signed") for _ in range(samples)]
        for x in xs:
            lhs, rhs = evaluate(p, x), M * evaluate(target, apply(m, x))
            rep.record("domination", (str(p), str(x)), lhs <= rhs, (lhs, rhs))
        pairs = list(zip(xs[::2], xs[1::2]))
        pairs = [(apply(m, a), apply(m, b)) for a, b in pairs]
        sub = check_submultiplicative(target, pairs)
        rep.record("target submultiplicative", str(target), sub.ok, sub.violations[:1])
    return rep


# reflexivity of az+b ----------------------------------------------------------------


def _legal_pdk_params(q) -> list:
    """A few legal ``(D, K)`` with integer ``D``."""
    q = as_q(q)
    mod = math.sqrt(q.abs_sq())
    out = []
    for K in range(3):
        edge = mod**-K if q.modulus_class is ModulusClass.LessThanOne else mod**K
        base = max(1, math.ceil(edge - 1e-12))
        for D in (base, base + 1):
            try:
                PDK(D, K, q)
            except InvalidParameters:
                continue
            out.append((D, K))
    return out


def sample_azb_seminorms(q, rng: random.Random | None = None) -> list:
    """Submultiplicative seminorms on ``az+b`` built from generator data.

    Each is ``c · p_{D,K}`` with ``c >= 1`` or a pointwise maximum of two
    such; both operations preserve submultiplicativity.
    """
    rng = rng or random.Random(0)
    params = _legal_pdk_params(q)
    singles = [MaxSeminorm([(c, PDK(D, K, q))]) for D, K in params for c in (1, 2)]
    pairs = []
    for _ in range(4):
        (D1, K1), (D2, K2) = rng.sample(params, 2)
        pairs.append(MaxSeminorm([(1, PDK(D1, K1, q)), (rng.choice((1, 2)), PDK(D2, K2, q))]))
    return singles + pairs


def _gen(i):
    return GradedElem(AZB_INDEX, {i: 1})


def _ceil_rational(x) -> Fraction:
    """``x`` itself when rational, else a rational upper bound close to it."""
    if isinstance(x, Fraction):
        return x
    return Fraction(math.ceil(x * 10**9), 10**9)


def verify_azb_reflexivity(
    q,
    window: int = DEFAULT_WINDOW,
    samples: int = 200,
    rng: random.Random | None = None,
    tol: float = 1e-9,
) -> HopfReport:
    """Seminorm classification on ``az+b`` and its dual at window scale.

    ``|q| != 1``: (i) the vanishing bound kills ``t^k`` beyond ``K`` for each
    sampled seminorm ``r``; (ii) ``p_{D,K}`` is submultiplicative and every
    sampled ``r`` satisfies ``r <= L M p_{D,K}`` with the constants of the
    classification; (iii) ``r_N`` is submultiplicative on the dual.
    ``|q| = 1``: ``||·||_C`` is submultiplicative for several ``C``.
    """
    q = as_q(q)
    rng = rng or random.Random(0)
    rep = HopfReport(f"az+b reflexivity q={q}")
    kind = "rational" if q.modulus_class is not ModulusClass.EqualOne else "gaussian"

    def pairs(n, index_set=AZB_INDEX, k=kind):
        return [
            (random_element(index_set, rng, window, kind=k), random_element(index_set, rng, window, kind=k))
            for _ in range(n)
        ]

    if q.modulus_class is ModulusClass.EqualOne:
        for C in (1, 2, 3):
            sub = check_submultiplicative(NormC_Azb(C, q), pairs(samples), tol)
            rep.record("NormC_Azb submultiplicative", C, sub.ok, sub.violations[:1])
    else:
        mod_sq = q.abs_sq()
        qmod, _ = _qmod(q)
        for D, K in _legal_pdk_params(q):
            sub = check_submultiplicative(PDK(D, K, q), pairs(samples // 4), tol)
            rep.record("PDK submultiplicative", (D, K), sub.ok, sub.violations[:1])
        for r in sample_azb_seminorms(q, rng):
            rz, rzinv = evaluate(r, _gen((1, 0))), evaluate(r, _gen((-1, 0)))
            K = vanishing_bound(q, rz, rzinv)
            # (i) beyond K the chain r(t^k) <= r(t^k) (|q|^k r(z) r(z^-1))^l forces zero
            for k in range(K + 1, K + 4):
                factor_sq = (mod_sq**k if q.modulus_class is ModulusClass.LessThanOne else mod_sq**-k) * (
                    Fraction(rz) * Fraction(rzinv)
                ) ** 2
                rep.record("vanishing factor < 1", (str(r), k), factor_sq < 1)
                rep.record("r(t^k) = 0", (str(r), k), evaluate(r, _gen((0, k))) == 0)
            # (ii) domination r <= L M p_{D,K}
            L = max(evaluate(r, _gen((0, k))) for k in range(K + 1))
            rn = {n: evaluate(r, _gen((n, 0))) for n in range(-window, window + 1)}
            M, C = dominating_seminorm_charges_Z(rn)
            scale = qmod**K if q.modulus_class is ModulusClass.GreaterThanOne else 1 / qmod**K
            D = max(Fraction(1), _ceil_rational(C * scale))
            p = PDK(D, K, q, allow_illegal=True)
            rep.record("dominating PDK legal", str(r), p.params["legal"])
            for u, v in pairs(samples // 10, k="signed"):
                for x in (u, v):
                    lhs, rhs = evaluate(r, x), L * M * evaluate(p, x)
                    good = lhs <= rhs if isinstance(rhs, Fraction) and isinstance(lhs, Fraction) else float(lhs) <= float(rhs) * (1 + tol)
                    rep.record("r <= L M p_{D,K}", (str(r), str(x)), good, (lhs, rhs))
        for Nw in range(window + 1):
            sub = check_submultiplicative(RN(Nw, q), pairs(samples // 4), tol)
            rep.record("r_N submultiplicative", Nw, sub.ok, sub.violations[:1])
    return rep

