"""Quantum integers, factorials and binomial coefficients.

Binomials come from the q-Pascal recursion, which never divides, so the
values stay meaningful when q is a root of unity and some ``(n)_q`` vanish.
The factorial quotient is kept only as a cross-check.
"""

from __future__ import annotations

from functools import lru_cache

from .scalar import ONE, ZERO, GaussianRational, QParam, as_q

__all__ = [
    "QBinomialTable",
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_binomial_quotient",
    "normalize_xy_word",
    "expand_power_xy",
    "verify_quantum_binomial",
    "chu_vandermonde_terms",
    "verify_chu_vandermonde",
]


def q_int(n: int, q) -> GaussianRational:
    """``(n)_q = 1 + q + ... + q^(n-1)``; zero for ``n = 0``."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    q = as_q(q)
    total = ZERO
    for j in range(n):
        total = total + q.pow(j)
    return total


def q_factorial(n: int, q) -> GaussianRational:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    return _factorials(as_q(q), n)[n]


@lru_cache(maxsize=256)
def _factorials_cached(q: QParam, n: int) -> tuple:
    out = [ONE]
    for j in range(1, n + 1):
        out.append(out[-1] * q_int(j, q))
    return tuple(out)


def _factorials(q: QParam, n: int) -> tuple:
    # round the cache key up so nearby requests share one table
    return _factorials_cached(q, max(16, 1 << max(n, 1).bit_length()))


class QBinomialTable:
    """Triangular table of ``(n k)_q`` for ``0 <= k <= n <= max_n``."""

    def __init__(self, max_n: int, q):
        if max_n < 0:
            raise ValueError("max_n must be >= 0")
        self.q = as_q(q)
        self.max_n = max_n
        rows = [[ONE]]
        for n in range(1, max_n + 1):
            prev = rows[-1]
            row = [ONE]
            for k in range(1, n):
                row.append(prev[k - 1] + self.q.pow(k) * prev[k])
            row.append(ONE)
            rows.append(row)
        self.entries = rows

    def __call__(self, n: int, k: int) -> GaussianRational:
        if n < 0 or n > self.max_n:
            raise IndexError(f"n={n} outside table of size {self.max_n}")
        if k < 0 or k > n:
            return ZERO
        return self.entries[n][k]


@lru_cache(maxsize=256)
def _table(q: QParam, size: int) -> QBinomialTable:
    return QBinomialTable(size, q)


def q_binomial(n: int, k: int, q) -> GaussianRational:
    """``(n k)_q`` by the q-Pascal recursion; zero for ``k < 0`` or ``k > n``."""
    if n < 0:
        raise ValueError("q_binomial needs n >= 0")
    if k < 0 or k > n:
        return ZERO
    size = max(16, 1 << n.bit_length())
    return _table(as_q(q), size)(n, k)


def q_binomial_quotient(n: int, k: int, q) -> GaussianRational | None:
    """Factorial quotient ``(n)!/((k)!(n-k)!)``, or None when it divides by zero."""
    if k < 0 or k > n:
        return ZERO
    q = as_q(q)
    den = q_factorial(k, q) * q_factorial(n - k, q)
    if not den:
        return None
    return q_factorial(n, q) / den


# rewrite oracle for yx = q xy ---------------------------------------------


def normalize_xy_word(word: str, q, coeff=ONE) -> dict:
    """Rewrite a word in ``x``, ``y`` with ``yx -> q xy`` until sorted.

    Returns ``{k: c}`` meaning ``c * x^k y^(len-k)``.  Each rewrite removes
    one inversion, so the loop terminates.
    """
    q = as_q(q)
    letters = list(word)
    while True:
        pos = "".join(letters).find("yx")
        if pos < 0:
            break
        letters[pos], letters[pos + 1] = "x", "y"
        coeff = coeff * q.value
    k = letters.count("x")
    return {k: coeff} if coeff else {}


def expand_power_xy(n: int, q) -> dict:
    """Normal form of ``(x + y)^n`` built one factor at a time by rewriting."""
    q = as_q(q)
    state = {0: ONE}  # k -> coefficient of x^k y^(deg-k)
    for deg in range(n):
        nxt: dict = {}
        for k, c in state.items():
            base = "x" * k + "y" * (deg - k)
            for letter in "xy":
                for kk, cc in normalize_xy_word(base + letter, q, c).items():
                    nxt[kk] = nxt.get(kk, ZERO) + cc
        state = {k: c for k, c in nxt.items() if c}
    return state


def verify_quantum_binomial(n: int, q) -> bool:
    q = as_q(q)
    coeffs = expand_power_xy(n, q)
    return all(coeffs.get(k, ZERO) == q_binomial(n, k, q) for k in range(n + 1)) and all(
        0 <= k <= n for k in coeffs
    )


def chu_vandermonde_terms(m: int, n: int, l: int, q) -> list:
    """Summands ``q^((m-i)(l-i)) (m i)_q (n l-i)_q`` for ``0 <= i <= l``."""
    q = as_q(q)
    return [q.pow((m - i) * (l - i)) * q_binomial(m, i, q) * q_binomial(n, l - i, q) for i in range(l + 1)]


def verify_chu_vandermonde(m: int, n: int, l: int, q) -> bool:
    q = as_q(q)
    terms = chu_vandermonde_terms(m, n, l, q)
    full = sum(terms, ZERO)
    lo, hi = max(0, l - n), min(l, m)
    restricted = sum((terms[i] for i in range(lo, hi + 1)), ZERO)
    if full != restricted:
        return False
    if any(terms[i] for i in range(l + 1) if i < lo or i > hi):
        return False
    return q_binomial(m + n, l, q) == full
