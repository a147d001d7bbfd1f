"""Product-form upper bounds on |I(G)| and their exact comparison.

A bound is a product of factors ``base ** (num / den)``.  Every verdict
(bound vs count, bound vs bound) is decided on integers after clearing
denominators; floats appear only in the ``log2`` field of reports.
"""
from __future__ import annotations

import enum
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import IsolatedVerticesError, NotApplicable, NotBipartiteError
from .graph_core import BipartiteView, Graph, bipartition


@dataclass(frozen=True, order=True)
class Factor:
    base: int
    den: int
    num: int

    @classmethod
    def make(cls, base: int, num: int, den: int) -> Factor:
        if base < 2 or num < 0 or den < 1:
            raise ValueError(f"bad factor {base}^({num}/{den})")
        g = math.gcd(num, den)
        return cls(base, den // g, num // g)

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.num, self.den)

    def to_json(self) -> dict:
        return {"base": self.base, "num": self.num, "den": self.den}


@dataclass(frozen=True)
class BoundExpr:
    factors: tuple[Factor, ...]
    provenance: str = ""

    @classmethod
    def from_factors(cls, factors: Iterable[Factor], provenance: str = "") -> BoundExpr:
        return cls(tuple(sorted(factors)), provenance)

    @property
    def log2(self) -> float:
        return math.fsum(f.num / f.den * math.log2(f.base) for f in self.factors)

    def exponents_by_base(self) -> dict[int, Fraction]:
        acc: dict[int, Fraction] = defaultdict(Fraction)
        for f in self.factors:
            acc[f.base] += f.exponent
        return {b: e for b, e in acc.items() if e}

    def to_json(self) -> dict:
        return {
            "factors": [f.to_json() for f in self.factors],
            "log2": self.log2,
            "provenance": self.provenance,
        }

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{f.base}^({f.num}/{f.den})" for f in self.factors)


class Verdict(enum.Enum):
    STRICTLY_ABOVE = "StrictlyAbove"
    TIGHT = "Tight"
    VIOLATED = "VIOLATED"


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


def _require_no_isolated(g: Graph) -> None:
    iso = g.isolated_vertices()
    if iso:
        raise IsolatedVerticesError(iso)


def kahn_bound(g: Graph) -> BoundExpr:
    """(2^{d+1} - 1)^{n / 2d} for a d-regular graph."""
    if g.n == 0:
        raise NotApplicable("graph has no vertices")
    _require_no_isolated(g)
    d = g.degree(1)
    for v in g.vertices:
        if g.degree(v) != d:
            raise NotApplicable(
                f"graph is not regular: vertex 1 has degree {d}, vertex {v} has degree {g.degree(v)}"
            )
    return BoundExpr.from_factors([Factor.make(2 ** (d + 1) - 1, g.n, 2 * d)], "kahn")


def sah_bound(g: Graph) -> BoundExpr:
    """Product over edges uv of (2^{d_u} + 2^{d_v} - 1)^{1 / (d_u d_v)}."""
    _require_no_isolated(g)
    factors = []
    for u, v in g.edges:
        du, dv = g.degree(u), g.degree(v)
        factors.append(Factor.make(2**du + 2**dv - 1, 1, du * dv))
    return BoundExpr.from_factors(factors, "sah")


def paper_bound(view: BipartiteView) -> BoundExpr:
    """Irregular-bipartite bound: over left degrees d and r in R_d, (2^d + 2^{deg r} - 1)^{1/d}."""
    g = view.graph
    _require_no_isolated(g)
    factors = []
    for d, rd in view.right_by_degree.items():
        for r in rd:
            factors.append(Factor.make(2**d + 2 ** g.degree(r) - 1, 1, d))
    return BoundExpr.from_factors(factors, "paper")


def paper_bound_both(g: Graph) -> tuple[BoundExpr, BoundExpr]:
    """Bound for the default orientation and for its flip."""
    view = bipartition(g)
    if view is None:
        raise NotBipartiteError("graph is not bipartite")
    default = paper_bound(view)
    flipped = paper_bound(view.flip())
    return (
        BoundExpr(default.factors, "paper:default"),
        BoundExpr(flipped.factors, "paper:flipped"),
    )


def _cleared(exps: dict[int, Fraction], q: int) -> int:
    out = 1
    for base, e in exps.items():
        k = e * q
        assert k.denominator == 1
        out *= base ** k.numerator
    return out


def _lcm_dens(*maps: dict[int, Fraction]) -> int:
    q = 1
    for m in maps:
        for e in m.values():
            q = math.lcm(q, e.denominator)
    return q


def compare_bound_vs_count(b: BoundExpr, c: int) -> Verdict:
    if c < 1:
        raise ValueError(f"count must be >= 1, got {c}")
    exps = b.exponents_by_base()
    q = _lcm_dens(exps)
    lhs = c**q
    rhs = _cleared(exps, q)
    if lhs < rhs:
        return Verdict.STRICTLY_ABOVE
    if lhs == rhs:
        return Verdict.TIGHT
    return Verdict.VIOLATED


def compare_bounds(a: BoundExpr, b: BoundExpr) -> Ordering:
    ea, eb = a.exponents_by_base(), b.exponents_by_base()
    # Cancel shared bases first to keep the integers small.
    for base in set(ea) & set(eb):
        common = min(ea[base], eb[base])
        ea[base] -= common
        eb[base] -= common
    ea = {k: v for k, v in ea.items() if v}
    eb = {k: v for k, v in eb.items() if v}
    q = _lcm_dens(ea, eb)
    va, vb = _cleared(ea, q), _cleared(eb, q)
    if va < vb:
        return Ordering.LESS
    if va == vb:
        return Ordering.EQUAL
    return Ordering.GREATER
