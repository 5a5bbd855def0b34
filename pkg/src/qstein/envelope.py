"""Envelopes, semicharacters and rectangle membership on sample grids.

Everything here is evaluated pointwise on a finite :class:`GridDomain`.  On
ℂ× a function set ``D`` is a finite list of Laurent polynomials and its outer
envelope is ``D^□(x) = max_{u in D} |u(x)|``.  The inner envelope of the
polar is ``1/D^□``; :func:`inner_envelope_bisection` recomputes it directly
as ``max{λ > 0 : λ|u(x)| <= 1 for u in D}`` so the two can be compared.

The envelope ``f^{■□}`` of a semicharacter is realized by monomial witnesses
``c_n z^n`` with the largest ``c_n`` that keeps ``|c_n x^n| <= f(x)`` on the
grid.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebras import GradedElem, LaurentCx, Z
from .scalar import GaussianRational, I, ONE, parse_scalar

__all__ = [
    "EmptySet",
    "MissingUnit",
    "UnsupportedDescriptor",
    "GridNotClosed",
    "GridDomain",
    "default_grid",
    "integer_grid",
    "parse_grid",
    "Semicharacter",
    "rCN",
    "hC",
    "FunctionSet",
    "laurent",
    "laurent_value",
    "outer_envelope",
    "inner_envelope_of_polar",
    "inner_envelope_bisection",
    "rectangle_membership",
    "witness_set",
    "box_envelope",
    "envelope_duality_suite",
    "semicharacter_closure_suite",
    "majorization_gl1",
    "EnvelopeReport",
]

TOL = 1e-9


class EmptySet(ValueError):
    pass


class MissingUnit(ValueError):
    """The function set does not contain the constant ``1``."""


class UnsupportedDescriptor(ValueError):
    pass


class GridNotClosed(ValueError):
    pass


# grids --------------------------------------------------------------------------


@dataclass(frozen=True)
class GridDomain:
    """Sample points of ℂ× (Gaussian rationals) or of ℤ (integers).

    The group operation is multiplication on ℂ× and addition on ℤ.
    ``closed_under_product`` marks grids meant for submultiplicativity
    checks; those checks run over pairs whose product is again a point.
    """

    points: tuple
    kind: str = "Cx"
    closed_under_product: bool = True

    def __post_init__(self):
        if self.kind == "Cx" and any(not p for p in self.points):
            raise ValueError("ℂ× grid points must be nonzero")

    def op(self, x, y):
        return x * y if self.kind == "Cx" else x + y

    def product_pairs(self) -> list:
        present = set(self.points)
        return [(x, y) for x in self.points for y in self.points if self.op(x, y) in present]

    def annulus(self, lo=Fraction(1, 2), hi=Fraction(2)) -> list:
        return [x for x in self.points if lo * lo <= x.abs_sq() <= hi * hi]


def default_grid(k: int = 4) -> GridDomain:
    """``{2^j, 2^j i : |j| <= k}``."""
    pts = []
    for j in range(-k, k + 1):
        p = GaussianRational(Fraction(2) ** j)
        pts.extend([p, p * I])
    return GridDomain(tuple(pts))


def integer_grid(n: int = 6) -> GridDomain:
    return GridDomain(tuple(range(-n, n + 1)), kind="Z")


def parse_grid(spec: str) -> GridDomain:
    """``"pow2:4"``, ``"int:6"`` or a comma separated list of scalars."""
    spec = spec.strip()
    m = re.fullmatch(r"pow2:(\d+)", spec)
    if m:
        return default_grid(int(m.group(1)))
    m = re.fullmatch(r"int:(\d+)", spec)
    if m:
        return integer_grid(int(m.group(1)))
    pts = tuple(parse_scalar(p) for p in spec.split(",") if p.strip())
    return GridDomain(pts, closed_under_product=False)


# semicharacters ----------------------------------------------------------------


def _abs(x) -> float:
    return math.sqrt(x.abs_sq()) if isinstance(x, GaussianRational) else abs(complex(x))


@dataclass(frozen=True)
class Semicharacter:
    """A semicharacter given by a construction tree.

    Atoms: ``("rCN", C, N)`` with value ``C max(|x|, 1/|x|)^N`` on ℂ× and
    ``("hC", C)`` with value ``C^|n|`` on ℤ.  Combinators: ``mul``, ``add``,
    ``max`` and ``scale``.
    """

    descriptor: tuple

    def __call__(self, x):
        d = self.descriptor
        tag = d[0]
        if tag == "rCN":
            a = _abs(x)
            return float(d[1]) * max(a, 1 / a) ** d[2]
        if tag == "hC":
            return Fraction(d[1]) ** abs(x)
        if tag == "scale":
            return d[1] * d[2](x)
        f, g = d[1], d[2]
        if tag == "mul":
            return f(x) * g(x)
        if tag == "add":
            return f(x) + g(x)
        if tag == "max":
            return max(f(x), g(x))
        raise UnsupportedDescriptor(tag)

    def __mul__(self, other: "Semicharacter") -> "Semicharacter":
        return Semicharacter(("mul", self, other))

    def __add__(self, other: "Semicharacter") -> "Semicharacter":
        return Semicharacter(("add", self, other))

    def max(self, other: "Semicharacter") -> "Semicharacter":
        return Semicharacter(("max", self, other))

    def scale(self, c) -> "Semicharacter":
        c = Fraction(c)
        if c < 1:
            raise ValueError("scaling a semicharacter needs C >= 1")
        return Semicharacter(("scale", c, self))

    @property
    def is_atomic(self) -> bool:
        return self.descriptor[0] in ("rCN", "hC")

    def __str__(self):
        d = self.descriptor
        if d[0] == "rCN":
            return f"rCN({d[1]},{d[2]})"
        if d[0] == "hC":
            return f"hC({d[1]})"
        if d[0] == "scale":
            return f"{d[1]}*{d[2]}"
        sym = {"mul": "*", "add": "+", "max": " v "}[d[0]]
        return f"({d[1]}{sym}{d[2]})"


def rCN(C, N: int) -> Semicharacter:
    C = Fraction(C)
    if C < 1 or N < 0:
        raise ValueError("rCN needs C >= 1 and N >= 0")
    return Semicharacter(("rCN", C, N))


def hC(C) -> Semicharacter:
    C = Fraction(C)
    if C < 1:
        raise ValueError("hC needs C >= 1")
    return Semicharacter(("hC", C))


# function sets and envelopes ------------------------------------------------------


def laurent_value(u: GradedElem, x) -> complex:
    x = complex(x)
    return sum(complex(c) * x**n for n, c in u.coeffs.items())


@dataclass
class FunctionSet:
    """A finite set of Laurent polynomials."""

    members: list = field(default_factory=list)

    @classmethod
    def of(cls, *maps) -> "FunctionSet":
        """``FunctionSet.of({0: 1}, {1: 1}, {-1: 1})`` is ``{1, z, z^-1}``."""
        return cls([GradedElem(Z, m) for m in maps])

    @property
    def contains_unit(self) -> bool:
        one = GradedElem(Z, {0: ONE})
        return any(u == one for u in self.members)

    def __or__(self, other: "FunctionSet") -> "FunctionSet":
        return FunctionSet(self.members + other.members)

    def _require(self):
        if not self.members:
            raise EmptySet("empty function set")
        if not self.contains_unit:
            raise MissingUnit("the function set must contain 1")


def _moduli(D: FunctionSet, grid: GridDomain) -> np.ndarray:
    """``|u(x)|`` for every member (rows) and grid point (columns)."""
    xs = np.array([complex(x) for x in grid.points])
    out = np.zeros((len(D.members), len(xs)))
    for r, u in enumerate(D.members):
        vals = np.zeros(len(xs), dtype=complex)
        for n, c in u.coeffs.items():
            vals += complex(c) * xs ** float(n)
        out[r] = np.abs(vals)
    return out


def outer_envelope(D: FunctionSet, grid: GridDomain) -> dict:
    """``x ↦ max_{u in D} |u(x)|`` on the grid."""
    D._require()
    top = _moduli(D, grid).max(axis=0)
    return {x: float(v) for x, v in zip(grid.points, top)}


def inner_envelope_of_polar(D: FunctionSet, grid: GridDomain) -> dict:
    """``1 / D^□`` pointwise."""
    return {x: 1 / v for x, v in outer_envelope(D, grid).items()}


def inner_envelope_bisection(D: FunctionSet, grid: GridDomain, steps: int = 80) -> dict:
    """``max{λ > 0 : λ δ_x in D°}`` by bisection on the membership test."""
    D._require()
    table = _moduli(D, grid)
    out = {}
    for col, x in enumerate(grid.points):
        vals = table[:, col]

        def inside(lam):
            return all(lam * v <= 1 for v in vals)

        lo, hi = 0.0, 1.0
        while inside(hi):
            hi *= 2
        for _ in range(steps):
            mid = (lo + hi) / 2
            lo, hi = (mid, hi) if inside(mid) else (lo, mid)
        out[x] = lo
    return out


def rectangle_membership(u: GradedElem, f, grid: GridDomain, mode: str = "GridNecessary") -> bool:
    """Whether ``|u| <= f``.

    ``GridNecessary`` tests every grid point.  ``AnalyticSufficient`` applies
    to an ``rCN(C, N)`` atom: ``max|n| <= N`` and ``Σ|u_n| <= C`` give
    ``|u(x)| <= C max(|x|, 1/|x|)^N`` on all of ℂ×.
    """
    if mode == "GridNecessary":
        return all(abs(laurent_value(u, x)) <= f(x) * (1 + TOL) for x in grid.points)
    if mode == "AnalyticSufficient":
        if not isinstance(f, Semicharacter) or f.descriptor[0] != "rCN":
            raise UnsupportedDescriptor("AnalyticSufficient needs an rCN atom")
        _, C, Nw = f.descriptor
        if not u.coeffs:
            return True
        deg = max(abs(n) for n in u.coeffs)
        return deg <= Nw and math.fsum(_abs(c) for c in u.coeffs.values()) <= float(C) * (1 + TOL)
    raise ValueError(f"unknown mode {mode!r}")


def witness_set(f, grid: GridDomain, nmax: int | None = None) -> FunctionSet:
    """Monomials ``c_n z^n`` with ``c_n = min_x f(x)/|x|^n``, plus ``1``.

    Every member lies in ``f^■`` on the grid.  ``nmax`` defaults to the
    largest exponent of the grid radius that still matters.
    """
    if nmax is None:
        big = max(_abs(x) for x in grid.points)
        top = max(float(f(x)) for x in grid.points)
        nmax = max(1, math.ceil(math.log(top) / math.log(big)) + 1) if big > 1 else 1
    members = [GradedElem(Z, {0: ONE})]
    for n in range(-nmax, nmax + 1):
        c = min(float(f(x)) / _abs(x) ** n for x in grid.points)
        c = Fraction(c).limit_denominator(10**12)
        # round down so membership is preserved
        while any(float(c) * _abs(x) ** n > float(f(x)) for x in grid.points):
            c -= Fraction(1, 10**12)
        if c > 0:
            members.append(GradedElem(Z, {n: GaussianRational(c)}))
    return FunctionSet(members)


def box_envelope(f, grid: GridDomain) -> dict:
    """``f^{■□}`` on the grid via the witness set."""
    return outer_envelope(witness_set(f, grid), grid)


# suites -----------------------------------------------------------------------------


@dataclass
class EnvelopeReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, what: str, where, good: bool, detail=None):
        self.checked += 1
        if not good:
            self.failures.append((what, where, detail))

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} failures"
        return f"{self.name}: {self.checked} checks, {status}"


def _close(a, b, tol=TOL) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def envelope_duality_suite(f: Semicharacter, D: FunctionSet, grid: GridDomain) -> EnvelopeReport:
    """Envelope identities for ``f`` and the function set ``D`` on the grid.

    (i) ``f^{■□} <= f``, with equality for ``rCN`` atoms; (ii) idempotency of
    ``■□``; (iii) ``1/f^{■□} = (1/f)^{♦◊}`` with the right side computed by
    bisection; (iv) monotonicity of ``□`` along prefixes of ``D``.  Also
    ``D^□ · (D°)^◊ = 1`` and ``D ⊆ (D^□)^■``.
    """
    rep = EnvelopeReport(f"envelope duality for {f}")
    W = witness_set(f, grid)
    box = outer_envelope(W, grid)
    for x in grid.points:
        fx = float(f(x))
        rep.record("f■□ <= f", x, box[x] <= fx * (1 + TOL), (box[x], fx))
        if f.descriptor[0] == "rCN":
            rep.record("f■□ = f for rCN", x, _close(box[x], fx), (box[x], fx))
    box2 = outer_envelope(witness_set(lambda x: box[x], grid), grid)
    for x in grid.points:
        rep.record("idempotent", x, _close(box2[x], box[x]), (box2[x], box[x]))
    diamond = inner_envelope_bisection(W, grid)
    for x in grid.points:
        rep.record("1/f■□ = (1/f)♦◊", x, _close(1 / box[x], diamond[x]), (1 / box[x], diamond[x]))
    outer = outer_envelope(D, grid)
    inner = inner_envelope_of_polar(D, grid)
    bis = inner_envelope_bisection(D, grid)
    for x in grid.points:
        rep.record("outer·inner = 1", x, _close(outer[x] * inner[x], 1.0))
        rep.record("inner = bisection", x, _close(inner[x], bis[x]))
        rep.record("outer >= 1", x, outer[x] >= 1 - TOL)
    for u in D.members:
        rep.record("D ⊆ (D□)■", str(u), rectangle_membership(u, lambda x: outer[x], grid))
    unit_idx = next(i for i, u in enumerate(D.members) if u == GradedElem(Z, {0: ONE}))
    for k in range(1, len(D.members) + 1):
        sub = FunctionSet([D.members[unit_idx]] + D.members[:k])
        small = outer_envelope(sub, grid)
        rep.record("monotone", k, all(small[x] <= outer[x] * (1 + TOL) for x in grid.points))
    return rep


def semicharacter_closure_suite(f: Semicharacter, g: Semicharacter, grid: GridDomain) -> EnvelopeReport:
    """``f·g``, ``f+g``, ``max(f, g)`` and ``C·f`` stay submultiplicative on the grid."""
    if not grid.closed_under_product:
        raise GridNotClosed("closure checks need a product-closed grid")
    rep = EnvelopeReport(f"semicharacter closure for {f}, {g}")
    pairs = grid.product_pairs()
    family = {
        "f": f,
        "g": g,
        "f*g": f * g,
        "f+g": f + g,
        "max(f,g)": f.max(g),
        "1*f": f.scale(1),
        "3/2*f": f.scale(Fraction(3, 2)),
    }
    for name, h in family.items():
        for x, y in pairs:
            lhs, rhs = h(grid.op(x, y)), h(x) * h(y)
            good = lhs <= rhs if isinstance(lhs, Fraction) and isinstance(rhs, Fraction) else lhs <= rhs * (1 + TOL)
            rep.record(f"{name} submultiplicative", (x, y), good, (lhs, rhs))
        for x in grid.points:
            rep.record(f"{name} >= 1", x, h(x) >= 1 - TOL)
    for x, y in pairs:
        # the reciprocal is an inverse semicharacter
        a = 1 / f(x) * (1 / f(y))
        b = 1 / f(grid.op(x, y))
        rep.record("1/f supermultiplicative", (x, y), a <= b * (1 + TOL), (a, b))
    return rep


@dataclass
class Majorization:
    C: float
    N: int
    holds: bool

    def __iter__(self):
        return iter((self.C, self.N))


def majorization_gl1(g, grid: GridDomain) -> Majorization:
    """``C = max g`` on the annulus ``1/2 <= |x| <= 2`` and ``N = ceil(log2 C)``.

    ``holds`` records whether ``g <= rCN(C, N)`` on the whole grid.
    """
    ann = grid.annulus()
    if not ann:
        raise ValueError("grid has no points in the annulus 1/2 <= |x| <= 2")
    C = max(float(g(x)) for x in ann)
    Nw = max(0, math.ceil(math.log2(C) - 1e-12)) if C > 1 else 0
    bound = Semicharacter(("rCN", Fraction(C).limit_denominator(10**12), Nw))
    holds = all(float(g(x)) <= bound(x) * (1 + TOL) for x in grid.points)
    return Majorization(C, Nw, holds)


def laurent(coeffs: dict) -> GradedElem:
    """A Laurent polynomial from ``{n: c}``."""
    return LaurentCx().elem(coeffs)
