"""Submultiplicative seminorm families and fundamental-system constructions.

A :class:`SeminormSpec` names a family and its parameters.  Evaluation is a
finite weighted sum of coefficient moduli.  When every modulus and weight is
rational the sum is returned as an exact ``Fraction``; otherwise it is a
float and comparisons use a relative tolerance.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebras import N, ChargesZ, CurrentsC, CurrentsCx, FunZ, GradedElem, LaurentCx, PolyC, Z
from .azb import AZB_INDEX, AzbAlgebra, AzbDual
from .scalar import GaussianRational, ModulusClass, as_q, rational_sqrt

__all__ = [
    "FamilyMismatch",
    "InvalidParameters",
    "NotSubmultiplicativeData",
    "ModulusOne",
    "SeminormSpec",
    "NormC_OC",
    "NormC_OCx",
    "NormN_OZ",
    "NormN_RstarCx",
    "Weighted_r",
    "NormC_Charges",
    "PDK",
    "RN",
    "NormC_Azb",
    "MaxSeminorm",
    "evaluate",
    "check_submultiplicative",
    "SubmultReport",
    "random_element",
    "dominating_seminorm_currents_C",
    "dominating_seminorm_charges_Z",
    "finite_support_check",
    "vanishing_bound",
    "pdk_witness",
]


class FamilyMismatch(ValueError):
    """The element does not live in the algebra the seminorm is defined on."""


class InvalidParameters(ValueError):
    pass


class NotSubmultiplicativeData(ValueError):
    """Seminorm data violating ``r_(k+l) <= r_k r_l``."""


class ModulusOne(ValueError):
    pass


def _modulus(c):
    """``|c|`` as a Fraction when rational, else a float."""
    if isinstance(c, GaussianRational):
        r = rational_sqrt(c.abs_sq())
        return r if r is not None else math.sqrt(c.abs_sq())
    return abs(complex(c))


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    raise InvalidParameters(f"expected a rational parameter, got {x!r}")


@dataclass
class SeminormSpec:
    """A named seminorm family.

    ``weight(i)`` gives the weight of basis index ``i`` (zero outside the
    support of the seminorm); ``index_set`` and ``algebra`` fix where it
    lives.  ``exact`` says whether the weights are rational.
    """

    family: str
    params: dict
    index_set: object
    weight: object
    algebra: object
    exact: bool = True

    def __call__(self, u: GradedElem):
        return evaluate(self, u)

    def __str__(self):
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items() if k != "r")
        return f"{self.family}({inner})"


def NormC_OC(C) -> SeminormSpec:
    """``Σ |u_k| C^k`` on polynomials (also used on currents on ℂ)."""
    C = _frac(C)
    if C < 0:
        raise InvalidParameters("C must be >= 0")
    return SeminormSpec("NormC_OC", {"C": C}, N, lambda k: C**k, PolyC())


def NormC_OCx(C) -> SeminormSpec:
    """``Σ |u_n| C^|n|`` on Laurent polynomials."""
    C = _frac(C)
    if C < 1:
        raise InvalidParameters("C must be >= 1")
    return SeminormSpec("NormC_OCx", {"C": C}, Z, lambda n: C ** abs(n), LaurentCx())


def NormN_OZ(Nw: int) -> SeminormSpec:
    """``Σ_{|n|<=N} |u_n|`` on functions on ℤ."""
    return SeminormSpec("NormN_OZ", {"N": Nw}, Z, lambda n: Fraction(1) if abs(n) <= Nw else 0, FunZ())


def NormN_RstarCx(Nw: int) -> SeminormSpec:
    """``Σ_{|n|<=N} |α_n|`` on currents on ℂ×."""
    return SeminormSpec(
        "NormN_RstarCx", {"N": Nw}, Z, lambda n: Fraction(1) if abs(n) <= Nw else 0, CurrentsCx()
    )


def Weighted_r(r: dict, form: str = "charges") -> SeminormSpec:
    """``Σ r_n |α_n|`` on ``ChargesZ`` or ``CurrentsCx``, or ``Σ r_k |α_k| k!`` on ``CurrentsC``.

    ``form`` is ``"charges"``, ``"currents_Cx"`` or ``"currents_C"``.
    Indices missing from ``r`` get weight zero.
    """
    r = {int(k): _frac(v) for k, v in r.items()}
    if any(v < 0 for v in r.values()):
        raise InvalidParameters("weights must be nonnegative")
    if form == "charges":
        return SeminormSpec("Weighted_r", {"r": r, "form": form}, Z, lambda n: r.get(n, 0), ChargesZ())
    if form == "currents_Cx":
        return SeminormSpec("Weighted_r", {"r": r, "form": form}, Z, lambda n: r.get(n, 0), CurrentsCx())
    if form == "currents_C":
        return SeminormSpec(
            "Weighted_r",
            {"r": r, "form": form},
            N,
            lambda k: r.get(k, 0) * math.factorial(k),
            CurrentsC(),
        )
    raise InvalidParameters(f"unknown form {form!r}")


def NormC_Charges(C) -> SeminormSpec:
    """``Σ |α_n| C^|n|`` on the group algebra of ℤ."""
    C = _frac(C)
    if C < 1:
        raise InvalidParameters("C must be >= 1")
    return SeminormSpec("NormC_Charges", {"C": C}, Z, lambda n: C ** abs(n), ChargesZ())


def _qmod(q):
    """``|q|`` exactly if rational, else as a float; plus an exactness flag."""
    r = rational_sqrt(q.abs_sq())
    return (r, True) if r is not None else (math.sqrt(q.abs_sq()), False)


def PDK(D, K: int, q, weight: str = "graded", allow_illegal: bool = False) -> SeminormSpec:
    """``p_{D,K}(u) = Σ_{k<=K} Σ_n |u_{n,k}| w_k^|n|`` on ``az+b``.

    For ``|q| < 1`` the weight is ``w_k = D |q|^k`` and the parameters must
    satisfy ``D |q|^K >= 1``.  For ``|q| > 1`` the weight is ``w_k = D/|q|^k``
    with ``D/|q|^K >= 1``.  ``weight="constant"`` gives the variant with
    ``w_k = D/|q|^K`` for every ``k``, which is not submultiplicative in
    general; it is kept for the counterexample tests.  Parameters outside
    the legal range raise unless ``allow_illegal`` is set.
    """
    q = as_q(q)
    D = _frac(D)
    if D < 1:
        raise InvalidParameters("D must be >= 1")
    if q.modulus_class is ModulusClass.EqualOne:
        raise ModulusOne("p_{D,K} is defined for |q| != 1")
    m, exact = _qmod(q)
    if q.modulus_class is ModulusClass.LessThanOne:
        ws = [D * m**k for k in range(K + 1)]
    elif weight == "constant":
        ws = [D / m**K] * (K + 1)
    else:
        ws = [D / m**k for k in range(K + 1)]
    # legal range, compared on squares so the test stays exact
    edge_sq = (D * D * q.abs_sq() ** K) if q.modulus_class is ModulusClass.LessThanOne else D * D / q.abs_sq() ** K
    legal = edge_sq >= 1
    if not legal and not allow_illegal:
        raise InvalidParameters("PDK needs D|q|^K >= 1 (|q| < 1) or D/|q|^K >= 1 (|q| > 1)")

    def w(i):
        n, k = i
        return ws[k] ** abs(n) if k <= K else 0

    spec = SeminormSpec(
        "PDK",
        {"D": D, "K": K, "q": q, "weight": weight, "legal": legal},
        AZB_INDEX,
        w,
        AzbAlgebra(q),
        exact,
    )
    return spec


def RN(Nw: int, q=1) -> SeminormSpec:
    """``r_N(α) = Σ_{k<=N} Σ_{|n|<=N-k} |α_{n,k}|`` on the dual of ``az+b``."""

    def w(i):
        n, k = i
        return Fraction(1) if k <= Nw and abs(n) <= Nw - k else 0

    return SeminormSpec("RN", {"N": Nw, "q": as_q(q)}, AZB_INDEX, w, AzbDual(q))


def NormC_Azb(C, q) -> SeminormSpec:
    """``Σ |u_{n,k}| C^(k+|n|)`` on ``az+b``; submultiplicative for ``|q| = 1``."""
    C = _frac(C)
    if C < 1:
        raise InvalidParameters("C must be >= 1")
    q = as_q(q)
    return SeminormSpec("NormC_Azb", {"C": C, "q": q}, AZB_INDEX, lambda i: C ** (i[1] + abs(i[0])), AzbAlgebra(q))


@dataclass
class MaxSeminorm:
    """Pointwise ``max_j c_j p_j``: submultiplicative when each ``c_j p_j`` is."""

    terms: list  # [(c, SeminormSpec)]
    algebra: object = None
    index_set: object = None
    family: str = "Max"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        first = self.terms[0][1]
        self.algebra = first.algebra
        self.index_set = first.index_set

    def __call__(self, u):
        return evaluate(self, u)

    def __str__(self):
        return "max(" + ", ".join(f"{c}*{s}" for c, s in self.terms) + ")"


def evaluate(s, u: GradedElem):
    """Value of the seminorm on ``u``: a Fraction on the exact path, else a float."""
    if isinstance(s, MaxSeminorm):
        vals = []
        for c, p in s.terms:
            v = evaluate(p, u)
            vals.append(_frac(c) * v if isinstance(v, Fraction) else float(c) * v)
        if all(isinstance(v, Fraction) for v in vals):
            return max(vals)
        return max(float(v) for v in vals)
    if u.index_set != s.index_set:
        raise FamilyMismatch(f"{s.family} lives on {s.index_set.name}, got {u.index_set.name}")
    exact = s.exact
    terms = []
    for i, c in u.coeffs.items():
        w = s.weight(i)
        if not w:
            continue
        m = _modulus(c)
        if not isinstance(m, Fraction):
            exact = False
        terms.append((m, w))
    if exact:
        return sum((m * w for m, w in terms), Fraction(0))
    return math.fsum(float(m) * float(w) for m, w in terms)


def _le(lhs, rhs, tol) -> bool:
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        return lhs <= rhs
    return float(lhs) <= float(rhs) * (1 + tol) + tol * 1e-300


@dataclass
class SubmultReport:
    family: str
    checked: int = 0
    violations: list = field(default_factory=list)
    exact_checks: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "checked": self.checked,
            "exact": self.exact_checks,
            "violations": [
                {"u": str(u), "v": str(v), "lhs": str(lhs), "rhs": str(rhs)} for u, v, lhs, rhs in self.violations
            ],
        }


def check_submultiplicative(s, samples, tol: float = 1e-9) -> SubmultReport:
    """Check ``p(uv) <= p(u) p(v) (1 + tol)`` on each sample pair."""
    rep = SubmultReport(str(s))
    alg = s.algebra
    for u, v in samples:
        lhs = evaluate(s, alg.mul(u, v))
        pu, pv = evaluate(s, u), evaluate(s, v)
        rhs = pu * pv if isinstance(pu, Fraction) and isinstance(pv, Fraction) else float(pu) * float(pv)
        rep.checked += 1
        if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
            rep.exact_checks += 1
        if not _le(lhs, rhs, tol):
            rep.violations.append((u, v, lhs, rhs))
    return rep


def random_element(index_set, rng: random.Random, degree: int = 4, terms: int = 3, kind: str = "rational") -> GradedElem:
    """A random sparse element with indices of norm ``<= degree``.

    ``kind="rational"`` draws nonnegative rationals (the exact path),
    ``"signed"`` allows negative rationals and ``"gaussian"`` draws
    Gaussian rationals (usually the float path).
    """
    idx = index_set.enumerate(degree)
    coeffs = {}
    for _ in range(rng.randint(1, terms)):
        i = rng.choice(idx)
        num, den = rng.randint(1, 9), rng.randint(1, 5)
        if kind == "rational":
            c = GaussianRational(Fraction(num, den))
        elif kind == "signed":
            c = GaussianRational(Fraction(rng.choice((-1, 1)) * num, den))
        else:
            c = GaussianRational(Fraction(rng.randint(-9, 9), den), Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        coeffs[i] = c
    return GradedElem(index_set, coeffs)


# fundamental-system constructions ------------------------------------------------


def dominating_seminorm_currents_C(r: dict) -> Fraction:
    """``C = A_1`` where ``A_k = r_k k!``; certifies ``p <= max(1, A_0) ||·||_C``.

    Raises :class:`NotSubmultiplicativeData` when ``A_(k+l) <= A_k A_l``
    fails for some ``k, l`` with ``k + l`` in the provided support.
    """
    r = {int(k): _frac(v) for k, v in r.items()}
    A = {k: v * math.factorial(k) for k, v in r.items()}
    for k in A:
        for l in A:
            if k + l in A and A[k + l] > A[k] * A[l]:
                raise NotSubmultiplicativeData(f"A_{k + l} = {A[k + l]} > A_{k}·A_{l} = {A[k] * A[l]}")
    return A.get(1, Fraction(0))


def dominating_seminorm_charges_Z(r: dict) -> tuple:
    """``(M, C) = (r_0, max(r_1, r_-1))``; certifies ``p <= M ||·||_C``."""
    r = {int(k): _frac(v) for k, v in r.items()}
    for k in r:
        for l in r:
            if k + l in r and r[k + l] > r[k] * r[l]:
                raise NotSubmultiplicativeData(f"r_{k + l} = {r[k + l]} > r_{k}·r_{l} = {r[k] * r[l]}")
    return r.get(0, Fraction(0)), max(r.get(1, Fraction(0)), r.get(-1, Fraction(0)))


def finite_support_check(r: dict, tail_window: int | None = None) -> bool:
    """Every ``r_n`` is ``0`` or ``>= 1``; nonzero entries lie within the window."""
    r = {int(k): _frac(v) for k, v in r.items()}
    if any(v != 0 and v < 1 for v in r.values()):
        return False
    if tail_window is not None and any(v != 0 and abs(k) > tail_window for k, v in r.items()):
        return False
    return True


def vanishing_bound(q, rz, rzinv) -> int:
    """Least ``K`` beyond which a submultiplicative seminorm kills every ``t^k``.

    ``|q| < 1``: least ``K`` with ``|q|^(2K) < 1/(rz rzinv)^2``.
    ``|q| > 1``: least ``K`` with ``|q|^(2K) > (rz rzinv)^2``.
    Squares keep the comparison rational.
    """
    q = as_q(q)
    if q.modulus_class is ModulusClass.EqualOne:
        raise ModulusOne("vanishing bound needs |q| != 1")
    prod_sq = (_frac(rz) * _frac(rzinv)) ** 2
    if prod_sq <= 0:
        raise InvalidParameters("rz and rzinv must be positive")
    s = q.abs_sq()
    K, power = 0, Fraction(1)
    if q.modulus_class is ModulusClass.LessThanOne:
        while power * prod_sq >= 1:
            K += 1
            power *= s
    else:
        while power <= prod_sq:
            K += 1
            power *= s
    return K


def pdk_witness(K: int) -> tuple:
    """The pair ``u = z t^K``, ``v = z^-1`` that breaks ``p_{D,K}`` when ``D|q|^K < 1``."""
    u = GradedElem(AZB_INDEX, {(1, K): 1})
    v = GradedElem(AZB_INDEX, {(-1, 0): 1})
    return u, v
