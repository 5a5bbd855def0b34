"""The quantum group ``az+b`` in bigraded coefficients.

Elements are finitely supported maps ``(n, k) -> coeff`` standing for
``Σ u_{n,k} z^n t^k`` with ``t z = q z t``.  The dual side uses the same index
set for ``ζ_n τ^k``.  Structure constants are written out explicitly here;
:func:`skew_iso_check` compares them against the generic skew construction
over Laurent polynomials, and :func:`normal_form` is an independent rewrite
oracle on generator words.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .algebras import (
    DEFAULT_WINDOW,
    BasedHopfAlgebra,
    DualPair,
    GradedElem,
    N,
    ProductIndex,
    TensorElem,
    Z,
    _accumulate,
)
from .qcomb import q_binomial, q_factorial
from .scalar import ONE, ZERO, as_q, as_scalar
from .skew import laurent_quantum_pair

__all__ = [
    "AZB_INDEX",
    "AzbAlgebra",
    "AzbDual",
    "GeneratorWord",
    "azb_algebra",
    "azb_dual",
    "azb_mul",
    "azb_coproduct",
    "azb_counit",
    "azb_antipode",
    "azb_dual_mul",
    "azb_dual_coproduct",
    "azb_pair",
    "azb_dual_pair",
    "normal_form",
    "skew_iso_check",
    "classical_limit_check",
]

AZB_INDEX = ProductIndex(Z, N)


class AzbAlgebra(BasedHopfAlgebra):
    """``R_q(ℂ×⋉ℂ)`` on the basis ``z^n t^k``.

    ``co_opposite=True`` swaps the tensor legs of the coproduct, giving the
    ordering in which ``κ(t) = t⊗1 + z⊗t``; its antipode is then ``σ^-1``.
    """

    index_set = AZB_INDEX

    def __init__(self, q, co_opposite: bool = False):
        self.q = as_q(q)
        self.co_opposite = co_opposite
        self.name = f"azb[q={self.q}]" + ("^cop" if co_opposite else "")

    def basis_mul(self, i, j):
        (m, k), (n, l) = i, j
        return [((m + n, k + l), self.q.pow(k * n))]

    def unit_terms(self, window):
        return [((0, 0), ONE)]

    def basis_coproduct(self, i, window):
        n, k = i
        out = []
        for s in range(k + 1):
            c = q_binomial(k, s, self.q)
            if c:
                left, right = (n, s), (n + s, k - s)
                out.append(((right, left) if self.co_opposite else (left, right), c))
        return out

    def basis_counit(self, i):
        # evaluation at the group identity, where z = 1 and t = 0
        return ONE if i[1] == 0 else ZERO

    def basis_antipode(self, i):
        n, k = i
        sign = -ONE if k % 2 else ONE
        if self.co_opposite:
            # the co-opposite algebra takes the inverse antipode
            return [((-k - n, k), sign * self.q.pow(-(k * (k - 1) // 2) - k * n))]
        return [((-k - n, k), sign * self.q.pow(-(k * (k + 1) // 2) - k * n))]


class AzbDual(BasedHopfAlgebra):
    """The dual ``R_q*(ℂ×⋉ℂ)`` on the basis ``ζ_n τ^k``.

    Unit and coproduct are infinite sums over ``n`` and are cut to a window.
    """

    index_set = AZB_INDEX
    windowed = True

    def __init__(self, q):
        self.q = as_q(q)
        self.name = f"azb*[q={self.q}]"

    def basis_mul(self, i, j):
        (m, k), (n, l) = i, j
        return [((m, k + l), ONE)] if m == n - k else []

    def unit_terms(self, window):
        return [((n, 0), ONE) for n in range(-window, window + 1)]

    def basis_coproduct(self, i, window):
        n, k = i
        out = []
        for s in range(k + 1):
            c = q_binomial(k, s, self.q)
            if not c:
                continue
            for m in range(-window, window + 1):
                out.append((((m, s), (n - m, k - s)), c * self.q.pow(s * (n - m))))
        return out

    def basis_counit(self, i):
        # evaluation at the unit z^0 t^0 of the primal side
        return ONE if i == (0, 0) else ZERO

    def basis_antipode(self, i):
        n, k = i
        sign = -ONE if k % 2 else ONE
        return [((-n - k, k), sign * self.q.pow(-(k * (k + 1) // 2) + k * (n + k)))]


def azb_algebra(q, co_opposite: bool = False) -> AzbAlgebra:
    return AzbAlgebra(q, co_opposite)


def azb_dual(q) -> AzbDual:
    return AzbDual(q)


def azb_dual_pair(q) -> DualPair:
    """``⟨z^n t^k, ζ_m τ^l⟩ = [(n,k)=(m,l)] (k)!_q``."""
    q = as_q(q)
    return DualPair(AzbAlgebra(q), AzbDual(q), lambda i: q_factorial(i[1], q), f"azb/azb*[q={q}]")


def _elem(u) -> GradedElem:
    if isinstance(u, GradedElem):
        if u.index_set != AZB_INDEX:
            raise ValueError("expected a bigraded element")
        return u
    return GradedElem(AZB_INDEX, u)


def azb_mul(q, u, v) -> GradedElem:
    return AzbAlgebra(q).mul(_elem(u), _elem(v))


def azb_coproduct(q, u, co_opposite: bool = False) -> TensorElem:
    return AzbAlgebra(q, co_opposite).coproduct(_elem(u))


def azb_counit(u):
    """Sum of the ``t``-degree zero coefficients."""
    return AzbAlgebra(1).counit(_elem(u))


def azb_antipode(q, u) -> GradedElem:
    return AzbAlgebra(q).antipode(_elem(u))


def azb_dual_mul(q, a, b) -> GradedElem:
    return AzbDual(q).mul(_elem(a), _elem(b))


def azb_dual_coproduct(q, a, window: int = DEFAULT_WINDOW) -> TensorElem:
    return AzbDual(q).coproduct(_elem(a), window)


def azb_pair(q, u, a):
    return azb_dual_pair(q).pair(_elem(u), _elem(a))


# generator words and the rewrite oracle -------------------------------------

TOKENS = ("z", "zinv", "t")


@dataclass(frozen=True)
class GeneratorWord:
    """A scalar times a free word in ``z``, ``zinv`` and ``t``."""

    tokens: tuple = ()
    coeff: object = field(default=ONE)

    def __post_init__(self):
        bad = [x for x in self.tokens if x not in TOKENS]
        if bad:
            raise ValueError(f"unknown generator(s) {bad}")
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "coeff", as_scalar(self.coeff))

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        """Concatenation ``w1 ++ w2``."""
        return GeneratorWord(self.tokens + other.tokens, self.coeff * other.coeff)

    @classmethod
    def parse(cls, text: str, coeff=ONE) -> "GeneratorWord":
        return cls(tuple(text.split()), coeff)

    def __str__(self):
        return " ".join(self.tokens) or "1"


def _redexes(tokens):
    out = []
    for p in range(len(tokens) - 1):
        pair = (tokens[p], tokens[p + 1])
        if pair in (("t", "z"), ("t", "zinv"), ("z", "zinv"), ("zinv", "z")):
            out.append(p)
    return out


def normal_form(q, w: GeneratorWord, strategy: str = "leftmost", rng: random.Random | None = None) -> GradedElem:
    """Rewrite ``w`` to ``c z^n t^k`` using

    ``t z -> q z t``, ``t zinv -> q^-1 zinv t``, ``z zinv -> 1``, ``zinv z -> 1``.

    ``strategy`` is ``"leftmost"``, ``"rightmost"`` or ``"random"``.  Each
    step either removes two letters or one inversion of a ``t`` past a
    ``z``-letter, so rewriting terminates; the result does not depend on the
    order (checked by the tests).
    """
    q = as_q(q)
    tokens = list(w.tokens)
    c = w.coeff
    rng = rng or random.Random(0)
    while True:
        red = _redexes(tokens)
        if not red:
            break
        if strategy == "leftmost":
            p = red[0]
        elif strategy == "rightmost":
            p = red[-1]
        elif strategy == "random":
            p = rng.choice(red)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        a, b = tokens[p], tokens[p + 1]
        if a == "t":
            c = c * (q.value if b == "z" else q.value.inverse())
            tokens[p], tokens[p + 1] = b, "t"
        else:
            del tokens[p : p + 2]
    n = tokens.count("z") - tokens.count("zinv")
    k = tokens.count("t")
    # a normal word has only one kind of z-letter, all before the t's
    return GradedElem(AZB_INDEX, {(n, k): c})


def normal_form_sum(q, words, **kw) -> GradedElem:
    total = GradedElem(AZB_INDEX)
    for w in words:
        total = total + normal_form(q, w, **kw)
    return total


# comparisons -------------------------------------------------------------------


def _box(window):
    return AZB_INDEX.enumerate(window)


def skew_iso_check(q, window: int = 3, include_dual: bool = True) -> bool:
    """Structure constants of ``az+b`` equal those of the skew construction.

    Compares multiplication, coproduct, counit and antipode on the box
    ``|n| <= window, k <= window`` under ``z^n t^k ↦ z^n ⊙ t^k``; with
    ``include_dual`` also the dual side against ``CurrentsCx ⊛ τ``.
    """
    q = as_q(q)
    pairs = [(AzbAlgebra(q), laurent_quantum_pair(q).skew())]
    if include_dual:
        pairs.append((AzbDual(q), laurent_quantum_pair(q).dual_skew()))
    for A, S in pairs:
        W = 3 * window + 2 if A.windowed else window
        basis = _box(window)
        for i in basis:
            if A.basis_counit(i) != S.basis_counit(i):
                return False
            if A.antipode(A.basis_elem(i)) != S.antipode(S.basis_elem(i)):
                return False
            if A.coproduct(A.basis_elem(i), W) != S.coproduct(S.basis_elem(i), W):
                return False
            for j in basis:
                if A.mul(A.basis_elem(i), A.basis_elem(j)) != S.mul(S.basis_elem(i), S.basis_elem(j)):
                    return False
        if A.unit(W) != S.unit(W):
            return False
    return True


def _classical_primal(i, j=None, what="mul"):
    # q = 1 formulas written out directly, independent of the q-code path
    if what == "mul":
        (m, k), (n, l) = i, j
        return {(m + n, k + l): ONE}
    if what == "coproduct":
        n, k = i
        return {((n, s), (n + s, k - s)): as_scalar(math.comb(k, s)) for s in range(k + 1)}
    if what == "antipode":
        n, k = i
        return {(-k - n, k): (-ONE if k % 2 else ONE)}
    raise ValueError(what)


def _classical_dual_product(a: dict, b: dict) -> dict:
    # (α*β)_{n,k} = Σ_j α_{n,j} β_{n+j,k-j}
    out: dict = {}
    for (n, j), x in a.items():
        for (m, l), y in b.items():
            if m == n + j:
                _accumulate(out, (n, j + l), x * y)
    return out


def classical_limit_check(window: int = 3) -> bool:
    """At ``q = 1`` every structure constant matches the classical group formulas."""
    A, D = AzbAlgebra(1), AzbDual(1)
    W = 3 * window + 2
    basis = _box(window)
    for i in basis:
        if A.basis_counit(i) != (ONE if i[1] == 0 else ZERO) or D.basis_counit(i) != (ONE if i == (0, 0) else ZERO):
            return False
        if A.coproduct(A.basis_elem(i)).coeffs != _classical_primal(i, what="coproduct"):
            return False
        if A.antipode(A.basis_elem(i)).coeffs != _classical_primal(i, what="antipode"):
            return False
        n, k = i
        if D.antipode(D.basis_elem(i)).coeffs != {(-n - k, k): (-ONE if k % 2 else ONE)}:
            return False
        classical_cop = {}
        for m in range(-W, W + 1):
            for s in range(k + 1):
                classical_cop[((m, s), (n - m, k - s))] = as_scalar(math.comb(k, s))
        if D.coproduct(D.basis_elem(i), W).coeffs != classical_cop:
            return False
        for j in basis:
            if A.mul(A.basis_elem(i), A.basis_elem(j)).coeffs != _classical_primal(i, j, "mul"):
                return False
            got = D.mul(D.basis_elem(i), D.basis_elem(j)).coeffs
            if got != _classical_dual_product({i: ONE}, {j: ONE}):
                return False
    return True
