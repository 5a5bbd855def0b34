"""Concrete based Hopf algebras on finitely supported coefficient tables.

Each algebra is described by its structure constants on a basis: the product
of two basis vectors, the coproduct, counit and antipode of one basis vector,
and the unit.  Everything else (linear extension, tensor products, axiom
checks, pairings) is generic and lives in this module.

Two of the algebras, ``FunZ`` and ``CurrentsCx``, have a unit and a
coproduct given by infinite sums.  They are cut to a window ``|n| <= W`` and
every identity involving them is compared only on keys whose legs all lie
inside the window where the truncation is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product as iproduct

from .scalar import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "IndexSetMismatch",
    "PairMismatch",
    "IndexSet",
    "Z",
    "N",
    "Zmod",
    "ProductIndex",
    "GradedElem",
    "TensorElem",
    "BasedHopfAlgebra",
    "FunZ",
    "ChargesZ",
    "LaurentCx",
    "CurrentsCx",
    "PolyC",
    "CurrentsC",
    "CyclicFun",
    "CyclicCharges",
    "DualPair",
    "HopfReport",
    "algebra_by_tag",
    "dual_pair_by_tag",
    "check_hopf_axioms",
    "check_pairing_duality",
    "grouplike_check",
    "mul",
    "unit",
    "coproduct",
    "counit",
    "antipode",
    "pair",
]

DEFAULT_WINDOW = 4


class IndexSetMismatch(ValueError):
    """An element was used with an algebra over a different index set."""


class PairMismatch(ValueError):
    """Two algebras were paired that are not a declared dual pair."""


# index sets -----------------------------------------------------------------


class IndexSet:
    name = "?"

    def normalize(self, i):
        return i

    def contains(self, i) -> bool:
        raise NotImplementedError

    def norm(self, i) -> int:
        """Size used by windows; window ``W`` means ``norm(i) <= W``."""
        raise NotImplementedError

    def enumerate(self, window: int) -> list:
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))

    def __repr__(self):
        return self.name


class _Integers(IndexSet):
    name = "Z"

    def contains(self, i):
        return isinstance(i, int)

    def norm(self, i):
        return abs(i)

    def enumerate(self, window):
        return list(range(-window, window + 1))


class _Naturals(IndexSet):
    name = "N"

    def contains(self, i):
        return isinstance(i, int) and i >= 0

    def norm(self, i):
        return i

    def enumerate(self, window):
        return list(range(window + 1))


class Zmod(IndexSet):
    def __init__(self, m: int):
        if m < 1:
            raise ValueError("Zmod needs m >= 1")
        self.m = m

    @property
    def name(self):
        return f"Z{self.m}"

    def normalize(self, i):
        return i % self.m

    def contains(self, i):
        return isinstance(i, int) and 0 <= i < self.m

    def norm(self, i):
        return 0

    def enumerate(self, window):
        return list(range(self.m))


class ProductIndex(IndexSet):
    """Pairs ``(a, b)``; windows are boxes, each coordinate bounded separately."""

    def __init__(self, first: IndexSet, second: IndexSet):
        self.first = first
        self.second = second

    @property
    def name(self):
        return f"{self.first.name}x{self.second.name}"

    def normalize(self, i):
        return (self.first.normalize(i[0]), self.second.normalize(i[1]))

    def contains(self, i):
        return (
            isinstance(i, tuple)
            and len(i) == 2
            and self.first.contains(i[0])
            and self.second.contains(i[1])
        )

    def norm(self, i):
        return max(self.first.norm(i[0]), self.second.norm(i[1]))

    def enumerate(self, window):
        return [(a, b) for a in self.first.enumerate(window) for b in self.second.enumerate(window)]


Z = _Integers()
N = _Naturals()


# elements -------------------------------------------------------------------


def _accumulate(target: dict, key, c) -> None:
    if not c:
        return
    s = target.get(key)
    if s is None:
        target[key] = c
    else:
        s = s + c
        if s:
            target[key] = s
        else:
            del target[key]


def _is_zero(c, tol=None) -> bool:
    if tol is None:
        return not c
    return abs(complex(c)) <= tol


def _sort_key(i):
    return i if isinstance(i, tuple) else (i,)


class GradedElem:
    """A finitely supported coefficient map ``index -> scalar``.

    Coefficients are normally Gaussian rationals.  Float-path code (the
    cyclic Fourier transform for general ``m``) may store Python complex
    numbers; equality is then exact float equality and
    :meth:`almost_equal` should be used instead.
    """

    __slots__ = ("index_set", "coeffs")

    def __init__(self, index_set: IndexSet, coeffs=None):
        self.index_set = index_set
        clean = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for i, c in items:
                if not index_set.contains(index_set.normalize(i)):
                    raise IndexSetMismatch(f"index {i!r} not in {index_set.name}")
                if not isinstance(c, (GaussianRational, complex, float)):
                    c = as_scalar(c)
                _accumulate(clean, index_set.normalize(i), c)
        self.coeffs = clean

    @classmethod
    def _raw(cls, index_set, coeffs):
        obj = object.__new__(cls)
        obj.index_set = index_set
        obj.coeffs = coeffs
        return obj

    @classmethod
    def basis(cls, index_set, i, c=ONE):
        return cls(index_set, {i: c})

    def coeff(self, i):
        return self.coeffs.get(i, ZERO)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: _sort_key(kv[0]))

    def support(self):
        return sorted(self.coeffs, key=_sort_key)

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if not isinstance(other, GradedElem):
            return NotImplemented
        if other.index_set != self.index_set:
            raise IndexSetMismatch(f"{self.index_set.name} vs {other.index_set.name}")
        return None

    def __add__(self, other):
        bad = self._check(other)
        if bad is NotImplemented:
            return bad
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            _accumulate(out, i, c)
        return GradedElem._raw(self.index_set, out)

    def __neg__(self):
        return GradedElem._raw(self.index_set, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        bad = self._check(other)
        if bad is NotImplemented:
            return bad
        return self + (-other)

    def scale(self, c) -> "GradedElem":
        if not isinstance(c, (GaussianRational, complex, float)):
            c = as_scalar(c)
        if not c:
            return GradedElem._raw(self.index_set, {})
        out = {}
        for i, a in self.coeffs.items():
            _accumulate(out, i, c * a)
        return GradedElem._raw(self.index_set, out)

    def __rmul__(self, c):
        if isinstance(c, GradedElem):
            return NotImplemented
        return self.scale(c)

    def restrict(self, pred) -> "GradedElem":
        return GradedElem._raw(self.index_set, {i: c for i, c in self.coeffs.items() if pred(i)})

    def window(self, w: int) -> "GradedElem":
        return self.restrict(lambda i: self.index_set.norm(i) <= w)

    def __eq__(self, other):
        if not isinstance(other, GradedElem):
            return NotImplemented
        return self.index_set == other.index_set and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.index_set, frozenset(self.coeffs.items())))

    def almost_equal(self, other, tol=1e-9) -> bool:
        keys = set(self.coeffs) | set(other.coeffs)
        return all(abs(complex(self.coeff(k)) - complex(other.coeff(k))) <= tol for k in keys)

    def __repr__(self):
        body = ", ".join(f"{i!r}: {c}" for i, c in self.items())
        return f"GradedElem({self.index_set.name}, {{{body}}})"


class TensorElem:
    """Finitely supported map from index tuples to scalars (an r-fold tensor)."""

    __slots__ = ("arity", "coeffs")

    def __init__(self, coeffs=None, arity: int = 2):
        self.arity = arity
        clean = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for key, c in items:
                key = tuple(key)
                if len(key) != arity:
                    raise ValueError(f"tensor key {key!r} does not have {arity} legs")
                if not isinstance(c, (GaussianRational, complex, float)):
                    c = as_scalar(c)
                _accumulate(clean, key, c)
        self.coeffs = clean

    @classmethod
    def _raw(cls, coeffs, arity):
        obj = object.__new__(cls)
        obj.arity = arity
        obj.coeffs = coeffs
        return obj

    @classmethod
    def pure(cls, *elems: GradedElem) -> "TensorElem":
        """``e1 ⊗ e2 ⊗ ...`` of graded elements."""
        out = {}
        for combo in iproduct(*(e.coeffs.items() for e in elems)):
            c = ONE
            for _, a in combo:
                c = c * a
            _accumulate(out, tuple(i for i, _ in combo), c)
        return cls._raw(out, len(elems))

    def coeff(self, key):
        return self.coeffs.get(tuple(key), ZERO)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: tuple(_sort_key(i) for i in kv[0]))

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        if other.arity != self.arity:
            raise ValueError("tensor arity mismatch")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            _accumulate(out, k, c)
        return TensorElem._raw(out, self.arity)

    def __neg__(self):
        return TensorElem._raw({k: -c for k, c in self.coeffs.items()}, self.arity)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorElem":
        out = {}
        for k, a in self.coeffs.items():
            _accumulate(out, k, c * a)
        return TensorElem._raw(out, self.arity)

    def __rmul__(self, c):
        return self.scale(c)

    def restrict(self, pred) -> "TensorElem":
        return TensorElem._raw({k: c for k, c in self.coeffs.items() if pred(k)}, self.arity)

    def flip(self) -> "TensorElem":
        if self.arity != 2:
            raise ValueError("flip needs a 2-tensor")
        return TensorElem._raw({(b, a): c for (a, b), c in self.coeffs.items()}, 2)

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.arity == other.arity and self.coeffs == other.coeffs

    def almost_equal(self, other, tol=1e-9) -> bool:
        keys = set(self.coeffs) | set(other.coeffs)
        return all(abs(complex(self.coeff(k)) - complex(other.coeff(k))) <= tol for k in keys)

    def __repr__(self):
        body = ", ".join(f"{k!r}: {c}" for k, c in self.items())
        return f"TensorElem({{{body}}})"


# the generic algebra ----------------------------------------------------------


class BasedHopfAlgebra:
    """A Hopf algebra given by structure constants on a basis.

    Subclasses implement the ``basis_*`` methods; each returns an iterable of
    ``(index, coeff)`` pairs (or ``((i, j), coeff)`` for the coproduct).
    ``windowed`` marks algebras whose unit and coproduct are infinite sums.
    """

    name = "?"
    index_set: IndexSet = Z
    windowed = False

    # structure constants, overridden per algebra
    def basis_mul(self, i, j):
        raise NotImplementedError

    def basis_coproduct(self, i, window: int):
        raise NotImplementedError

    def basis_counit(self, i):
        raise NotImplementedError

    def basis_antipode(self, i):
        raise NotImplementedError

    def unit_terms(self, window: int):
        raise NotImplementedError

    # helpers
    def elem(self, coeffs=None) -> GradedElem:
        return GradedElem(self.index_set, coeffs)

    def basis_elem(self, i, c=ONE) -> GradedElem:
        return GradedElem(self.index_set, {i: c})

    def basis(self, window: int) -> list:
        return self.index_set.enumerate(window)

    def in_window(self, i, window: int) -> bool:
        return self.index_set.norm(i) <= window

    def _own(self, u: GradedElem):
        if u.index_set != self.index_set:
            raise IndexSetMismatch(f"{self.name} expects {self.index_set.name}, got {u.index_set.name}")

    # linear extensions
    def mul(self, u: GradedElem, v: GradedElem) -> GradedElem:
        self._own(u)
        self._own(v)
        out: dict = {}
        for i, a in u.coeffs.items():
            for j, b in v.coeffs.items():
                ab = a * b
                for k, c in self.basis_mul(i, j):
                    _accumulate(out, k, ab * c)
        return GradedElem._raw(self.index_set, out)

    def unit(self, window: int | None = None) -> GradedElem:
        w = DEFAULT_WINDOW if window is None else window
        out: dict = {}
        for i, c in self.unit_terms(w):
            _accumulate(out, i, c)
        return GradedElem._raw(self.index_set, out)

    def coproduct(self, u: GradedElem, window: int | None = None) -> TensorElem:
        self._own(u)
        w = DEFAULT_WINDOW if window is None else window
        out: dict = {}
        for i, a in u.coeffs.items():
            for key, c in self.basis_coproduct(i, w):
                _accumulate(out, key, a * c)
        return TensorElem._raw(out, 2)

    def counit(self, u: GradedElem):
        self._own(u)
        total = ZERO
        for i, a in u.coeffs.items():
            e = self.basis_counit(i)
            if e:
                total = total + a * e
        return total

    def antipode(self, u: GradedElem) -> GradedElem:
        self._own(u)
        out: dict = {}
        for i, a in u.coeffs.items():
            for k, c in self.basis_antipode(i):
                _accumulate(out, k, a * c)
        return GradedElem._raw(self.index_set, out)

    # tensor-level operations
    def tensor_mul(self, x: TensorElem, y: TensorElem) -> TensorElem:
        """Componentwise product ``(a⊗b)(c⊗d) = ac⊗bd``."""
        if x.arity != y.arity:
            raise ValueError("tensor arity mismatch")
        out: dict = {}
        for ka, a in x.coeffs.items():
            for kb, b in y.coeffs.items():
                legs = [list(self.basis_mul(i, j)) for i, j in zip(ka, kb)]
                if not all(legs):
                    continue
                ab = a * b
                for combo in iproduct(*legs):
                    c = ab
                    for _, cc in combo:
                        c = c * cc
                    _accumulate(out, tuple(k for k, _ in combo), c)
        return TensorElem._raw(out, x.arity)

    def apply_leg(self, x: TensorElem, leg: int, op) -> TensorElem:
        """Apply a basis-level map ``op(i) -> [(j, c), ...]`` to one leg."""
        out: dict = {}
        for key, a in x.coeffs.items():
            for j, c in op(key[leg]):
                _accumulate(out, key[:leg] + (j,) + key[leg + 1 :], a * c)
        return TensorElem._raw(out, x.arity)

    def coproduct_leg(self, x: TensorElem, leg: int, window: int) -> TensorElem:
        """``id ⊗ ... ⊗ κ ⊗ ... ⊗ id`` on the given leg."""
        out: dict = {}
        for key, a in x.coeffs.items():
            for (j1, j2), c in self.basis_coproduct(key[leg], window):
                _accumulate(out, key[:leg] + (j1, j2) + key[leg + 1 :], a * c)
        return TensorElem._raw(out, x.arity + 1)

    def counit_leg(self, x: TensorElem, leg: int) -> TensorElem | GradedElem:
        out: dict = {}
        for key, a in x.coeffs.items():
            e = self.basis_counit(key[leg])
            if e:
                _accumulate(out, key[:leg] + key[leg + 1 :], a * e)
        if x.arity == 2:
            return GradedElem._raw(self.index_set, {k[0]: c for k, c in out.items()})
        return TensorElem._raw(out, x.arity - 1)

    def multiply_legs(self, x: TensorElem) -> GradedElem:
        """``μ`` on a 2-tensor."""
        out: dict = {}
        for (i, j), a in x.coeffs.items():
            for k, c in self.basis_mul(i, j):
                _accumulate(out, k, a * c)
        return GradedElem._raw(self.index_set, out)

    def __repr__(self):
        return f"<{self.name}>"


# the eight concrete algebras ----------------------------------------------------


def _window_range(window):
    return range(-window, window + 1)


class FunZ(BasedHopfAlgebra):
    """Functions on ℤ with basis the indicators ``1_n`` (pointwise product)."""

    name = "FunZ"
    index_set = Z
    windowed = True

    def basis_mul(self, i, j):
        return [(i, ONE)] if i == j else []

    def unit_terms(self, window):
        return [(n, ONE) for n in _window_range(window)]

    def basis_coproduct(self, i, window):
        return [((m, i - m), ONE) for m in _window_range(window)]

    def basis_counit(self, i):
        return ONE if i == 0 else ZERO

    def basis_antipode(self, i):
        return [(-i, ONE)]


class CurrentsCx(FunZ):
    """Currents on ℂ×, basis ``ζ_k``; same structure constants as ``FunZ``."""

    name = "CurrentsCx"


class ChargesZ(BasedHopfAlgebra):
    """Group algebra of ℤ, basis ``δ^k`` (convolution product)."""

    name = "ChargesZ"
    index_set = Z

    def basis_mul(self, i, j):
        return [(i + j, ONE)]

    def unit_terms(self, window):
        return [(0, ONE)]

    def basis_coproduct(self, i, window):
        return [((i, i), ONE)]

    def basis_counit(self, i):
        return ONE

    def basis_antipode(self, i):
        return [(-i, ONE)]


class LaurentCx(ChargesZ):
    """Laurent polynomials ``z^k`` on ℂ×; same structure constants as ``ChargesZ``."""

    name = "LaurentCx"


class PolyC(BasedHopfAlgebra):
    """Polynomials ``t^k`` on ℂ with the additive coproduct."""

    name = "PolyC"
    index_set = N

    def basis_mul(self, i, j):
        return [(i + j, ONE)]

    def unit_terms(self, window):
        return [(0, ONE)]

    def basis_coproduct(self, i, window):
        return [((a, i - a), GaussianRational(math.comb(i, a))) for a in range(i + 1)]

    def basis_counit(self, i):
        return ONE if i == 0 else ZERO

    def basis_antipode(self, i):
        return [(i, -ONE if i % 2 else ONE)]


class CurrentsC(PolyC):
    """Currents ``τ^k`` on ℂ; same structure constants as ``PolyC``."""

    name = "CurrentsC"


class CyclicFun(BasedHopfAlgebra):
    """Functions on ℤ_m with basis ``1_x`` (pointwise product)."""

    def __init__(self, m: int):
        self.m = m
        self.index_set = Zmod(m)
        self.name = f"CyclicFun({m})"

    def basis_mul(self, i, j):
        return [(i, ONE)] if i == j else []

    def unit_terms(self, window):
        return [(x, ONE) for x in range(self.m)]

    def basis_coproduct(self, i, window):
        return [((y, (i - y) % self.m), ONE) for y in range(self.m)]

    def basis_counit(self, i):
        return ONE if i == 0 else ZERO

    def basis_antipode(self, i):
        return [((-i) % self.m, ONE)]


class CyclicCharges(BasedHopfAlgebra):
    """Group algebra of ℤ_m with basis ``δ^x``."""

    def __init__(self, m: int):
        self.m = m
        self.index_set = Zmod(m)
        self.name = f"CyclicCharges({m})"

    def basis_mul(self, i, j):
        return [((i + j) % self.m, ONE)]

    def unit_terms(self, window):
        return [(0, ONE)]

    def basis_coproduct(self, i, window):
        return [((i, i), ONE)]

    def basis_counit(self, i):
        return ONE

    def basis_antipode(self, i):
        return [((-i) % self.m, ONE)]


_SIMPLE = {
    "FunZ": FunZ,
    "ChargesZ": ChargesZ,
    "LaurentCx": LaurentCx,
    "CurrentsCx": CurrentsCx,
    "PolyC": PolyC,
    "CurrentsC": CurrentsC,
}


def algebra_by_tag(tag: str) -> BasedHopfAlgebra:
    """``"FunZ"``, ``"CyclicFun(3)"``, ``"CyclicCharges:4"`` and so on."""
    if tag in _SIMPLE:
        return _SIMPLE[tag]()
    for prefix, cls in (("CyclicFun", CyclicFun), ("CyclicCharges", CyclicCharges)):
        if tag.startswith(prefix):
            rest = tag[len(prefix) :].strip("():")
            return cls(int(rest))
    raise KeyError(f"unknown algebra {tag!r}")


# dual pairs -------------------------------------------------------------------


@dataclass
class DualPair:
    """A pairing ``⟨u, α⟩ = Σ u_i α_i w(i)`` between an algebra and its dual."""

    primal: BasedHopfAlgebra
    dual: BasedHopfAlgebra
    weight: object = None  # index -> scalar; None means weight 1
    name: str = field(default="")

    def w(self, i):
        return ONE if self.weight is None else self.weight(i)

    def pair(self, u: GradedElem, a: GradedElem):
        if u.index_set != self.primal.index_set or a.index_set != self.dual.index_set:
            raise PairMismatch(f"{self.name}: wrong element types")
        total = ZERO
        small, big = (u.coeffs, a.coeffs) if len(u.coeffs) <= len(a.coeffs) else (a.coeffs, u.coeffs)
        for i, c in small.items():
            d = big.get(i)
            if d is not None:
                total = total + c * d * self.w(i)
        return total

    def pair_tensor(self, x: TensorElem, y: TensorElem):
        total = ZERO
        for key, c in x.coeffs.items():
            d = y.coeffs.get(key)
            if d is not None:
                w = ONE
                for i in key:
                    w = w * self.w(i)
                total = total + c * d * w
        return total


def _factorial_weight(k):
    return GaussianRational(math.factorial(k))


def dual_pair_by_tag(tag: str) -> DualPair:
    if tag in ("FunZ/ChargesZ", "Z"):
        return DualPair(FunZ(), ChargesZ(), None, "FunZ/ChargesZ")
    if tag in ("LaurentCx/CurrentsCx", "Cx"):
        return DualPair(LaurentCx(), CurrentsCx(), None, "LaurentCx/CurrentsCx")
    if tag in ("PolyC/CurrentsC", "C"):
        return DualPair(PolyC(), CurrentsC(), _factorial_weight, "PolyC/CurrentsC")
    if tag.startswith("Cyclic"):
        m = int(tag.split("(")[1].rstrip(")")) if "(" in tag else int(tag.split(":")[1])
        return DualPair(CyclicFun(m), CyclicCharges(m), None, f"Cyclic({m})")
    raise PairMismatch(f"unknown dual pair {tag!r}")


ALL_DUAL_PAIR_TAGS = ("FunZ/ChargesZ", "LaurentCx/CurrentsCx", "PolyC/CurrentsC", "Cyclic(3)")


# module-level conveniences ------------------------------------------------------


def _alg(alg):
    return algebra_by_tag(alg) if isinstance(alg, str) else alg


def mul(alg, u, v):
    return _alg(alg).mul(u, v)


def unit(alg, truncation: int = DEFAULT_WINDOW):
    return _alg(alg).unit(truncation)


def coproduct(alg, u, window: int = DEFAULT_WINDOW):
    return _alg(alg).coproduct(u, window)


def counit(alg, u):
    return _alg(alg).counit(u)


def antipode(alg, u):
    return _alg(alg).antipode(u)


def pair(alg_pair, u, a):
    p = dual_pair_by_tag(alg_pair) if isinstance(alg_pair, str) else alg_pair
    return p.pair(u, a)


# axiom checks ---------------------------------------------------------------------


@dataclass
class HopfReport:
    """Outcome of an axiom suite: how many identities were checked, which failed."""

    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, axiom: str, where, good: bool, detail=None):
        self.checked += 1
        if not good:
            self.failures.append((axiom, where, detail))

    def merge(self, other: "HopfReport") -> "HopfReport":
        self.checked += other.checked
        self.failures.extend(other.failures)
        return self

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} failures"
        return f"{self.name}: {self.checked} identities, {status}"


def _inner(alg: BasedHopfAlgebra, window: int) -> int:
    # truncated sums are exact on keys whose legs stay well inside this bound
    return 3 * window + 2 if alg.windowed else window


def _legs_in(alg, window):
    def pred(key):
        if not isinstance(key, tuple) or alg.index_set.contains(key):
            return alg.in_window(key, window)
        return all(alg.in_window(i, window) for i in key)

    return pred


def _eq(x, y, tol):
    if tol is None:
        return x == y
    if isinstance(x, (GradedElem, TensorElem)):
        return x.almost_equal(y, tol)
    return abs(complex(x) - complex(y)) <= tol


def check_hopf_axioms(
    alg: BasedHopfAlgebra,
    window: int = DEFAULT_WINDOW,
    *,
    assoc_window: int | None = None,
    mult_window: int | None = None,
    tol: float | None = None,
) -> HopfReport:
    """Exhaustive Hopf axiom suite on the basis elements of norm ``<= window``.

    Checks associativity, unit laws, coassociativity, both counit laws, the
    antipode axiom on both sides, multiplicativity of the coproduct and of
    the counit.  For windowed algebras the truncated sums are taken over a
    larger inner window and compared only on in-window keys.
    """
    rep = HopfReport(alg.name)
    W = _inner(alg, window)
    basis = alg.basis(window)
    inwin = _legs_in(alg, window)
    e = alg.basis_elem
    unit_w = alg.unit(W)

    aw = window if assoc_window is None else assoc_window
    abasis = alg.basis(aw)
    memo: dict = {}

    def bm(i, j):
        # basis products are reused across many triples
        key = (i, j)
        if key not in memo:
            memo[key] = list(alg.basis_mul(i, j))
        return memo[key]

    for i, j, k in iproduct(abasis, abasis, abasis):
        lhs: dict = {}
        for m, c1 in bm(i, j):
            for n, c2 in bm(m, k):
                _accumulate(lhs, n, c1 * c2)
        rhs: dict = {}
        for m, c1 in bm(j, k):
            for n, c2 in bm(i, m):
                _accumulate(rhs, n, c1 * c2)
        rep.record(
            "associativity",
            (i, j, k),
            _eq(GradedElem._raw(alg.index_set, lhs), GradedElem._raw(alg.index_set, rhs), tol),
        )

    for i in basis:
        u = e(i)
        rep.record("left unit", i, _eq(alg.mul(unit_w, u).restrict(inwin), u, tol))
        rep.record("right unit", i, _eq(alg.mul(u, unit_w).restrict(inwin), u, tol))

        d = alg.coproduct(u, W)
        d_tensor = TensorElem._raw(dict(d.coeffs), 2)
        left = alg.coproduct_leg(d_tensor, 0, W).restrict(inwin)
        right = alg.coproduct_leg(d_tensor, 1, W).restrict(inwin)
        rep.record("coassociativity", i, _eq(left, right, tol))

        rep.record("left counit", i, _eq(alg.counit_leg(d, 0).restrict(inwin), u, tol))
        rep.record("right counit", i, _eq(alg.counit_leg(d, 1).restrict(inwin), u, tol))

        eps_unit = unit_w.scale(alg.basis_counit(i)).restrict(inwin)
        s_left = alg.multiply_legs(alg.apply_leg(d, 0, alg.basis_antipode)).restrict(inwin)
        s_right = alg.multiply_legs(alg.apply_leg(d, 1, alg.basis_antipode)).restrict(inwin)
        rep.record("antipode left", i, _eq(s_left, eps_unit, tol))
        rep.record("antipode right", i, _eq(s_right, eps_unit, tol))

    mw = window if mult_window is None else mult_window
    mbasis = alg.basis(mw)
    for i, j in iproduct(mbasis, mbasis):
        uv = alg.mul(e(i), e(j))
        lhs = alg.coproduct(uv, W).restrict(inwin)
        rhs = alg.tensor_mul(alg.coproduct(e(i), W), alg.coproduct(e(j), W)).restrict(inwin)
        rep.record("coproduct multiplicative", (i, j), _eq(lhs, rhs, tol))
        ce = alg.counit(uv)
        rep.record("counit multiplicative", (i, j), _eq(ce, alg.basis_counit(i) * alg.basis_counit(j), tol))
    return rep


def check_pairing_duality(dp: DualPair, window: int = DEFAULT_WINDOW, tol=None) -> HopfReport:
    """Both adjunction identities plus unit, counit and antipode compatibility.

    ``⟨u·v, α⟩ = ⟨u⊗v, κ(α)⟩`` and ``⟨κ(u), α⊗β⟩ = ⟨u, α*β⟩`` on all basis
    elements of norm ``<= window`` on either side.
    """
    A, B = dp.primal, dp.dual
    rep = HopfReport(f"pairing {dp.name or A.name + '/' + B.name}")
    WA, WB = _inner(A, window), _inner(B, window)
    pb, db = A.basis(window), B.basis(window)
    kappa_b = {k: B.coproduct(B.basis_elem(k), WB).coeffs for k in db}
    kappa_a = {k: A.coproduct(A.basis_elem(k), WA).coeffs for k in pb}
    for i, j in iproduct(pb, pb):
        uv = A.mul(A.basis_elem(i), A.basis_elem(j))
        wij = dp.w(i) * dp.w(j)
        for k in db:
            lhs = dp.pair(uv, B.basis_elem(k))
            rhs = kappa_b[k].get((i, j), ZERO) * wij
            rep.record("<uv,a> = <u⊗v,κa>", (i, j, k), _eq(lhs, rhs, tol))
    for a, b in iproduct(db, db):
        ab = B.mul(B.basis_elem(a), B.basis_elem(b))
        wab = dp.w(a) * dp.w(b)
        for k in pb:
            lhs = kappa_a[k].get((a, b), ZERO) * wab
            rhs = dp.pair(A.basis_elem(k), ab)
            rep.record("<κu,a⊗b> = <u,ab>", (a, b, k), _eq(lhs, rhs, tol))
    for i in pb:
        u = A.basis_elem(i)
        rep.record("<u,1> = ε(u)", i, _eq(dp.pair(u, B.unit(WB)), A.counit(u), tol))
        for k in db:
            alpha = B.basis_elem(k)
            lhs = dp.pair(A.antipode(u), alpha)
            rhs = dp.pair(u, B.antipode(alpha))
            rep.record("<σu,a> = <u,σa>", (i, k), _eq(lhs, rhs, tol))
    for k in db:
        alpha = B.basis_elem(k)
        rep.record("<1,a> = ε(a)", k, _eq(dp.pair(A.unit(WA), alpha), B.counit(alpha), tol))
    return rep


def grouplike_check(alg: BasedHopfAlgebra, a: GradedElem, window: int = DEFAULT_WINDOW) -> bool:
    """κ(a) = a⊗a, ε(a) = 1 and a·σ(a) = σ(a)·a = 1 (windowed where needed)."""
    if a.is_zero():
        raise ValueError("grouplike_check needs a nonzero element")
    alg._own(a)
    W = _inner(alg, window)
    inwin = _legs_in(alg, window)
    if alg.coproduct(a, W).restrict(inwin) != TensorElem.pure(a, a).restrict(inwin):
        return False
    if alg.counit(a) != ONE:
        return False
    one = alg.unit(W).restrict(inwin)
    s = alg.antipode(a)
    return alg.mul(a, s).restrict(inwin) == one and alg.mul(s, a).restrict(inwin) == one
