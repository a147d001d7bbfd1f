"""Entropy of the uniform independent-set indicator vector, and a step-by-step
audit of the entropy argument behind the irregular-bipartite bound.

All entropies are in bits and are computed from exact atom counts: for a
marginal with atom counts c_1..c_k summing to N, H = log2 N - sum(c log2 c) / N.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .bounds import paper_bound
from .errors import (
    InternalInvariantError,
    InvalidParameter,
    IsolatedVerticesError,
    PreconditionError,
)
from .graph_core import BipartiteView, Graph
from .indset_count import IndSetFamily, enumerate_independent_sets, vertices_to_mask

TOL = 1e-9


def _entropy_of_counts(counts: Iterable[int], total: int) -> float:
    s = math.fsum(c * math.log2(c) for c in counts if c > 1)
    return max(0.0, math.log2(total) - s / total)


class IndicatorDistribution:
    """X_i = 1{i in S} with S uniform on I(G); marginal entropies are cached per coordinate mask."""

    def __init__(self, family: IndSetFamily):
        self.family = family
        self.n = family.graph.n
        self._cache: dict[int, float] = {}

    @classmethod
    def of_graph(cls, g: Graph, cap: int | None = None) -> IndicatorDistribution:
        return cls(enumerate_independent_sets(g, cap))

    @property
    def total(self) -> int:
        return self.family.cardinality

    def mask(self, coords: Iterable[int]) -> int:
        m = 0
        for v in coords:
            if not 1 <= v <= self.n:
                raise InvalidParameter(f"coordinate {v} outside 1..{self.n}")
            m |= 1 << (v - 1)
        return m

    def marginal_counts(self, coords: Iterable[int]) -> Counter:
        m = self.mask(coords)
        return Counter(s & m for s in self.family.sets)

    def entropy_mask(self, m: int) -> float:
        hit = self._cache.get(m)
        if hit is None:
            if m == 0:
                hit = 0.0
            else:
                counts = Counter(s & m for s in self.family.sets)
                hit = _entropy_of_counts(counts.values(), self.total)
            self._cache[m] = hit
        return hit


def entropy(dist: IndicatorDistribution, coords: Iterable[int]) -> float:
    return dist.entropy_mask(dist.mask(coords))


def conditional_entropy(dist: IndicatorDistribution, a: Iterable[int], b: Iterable[int]) -> float:
    """H(X_a | X_b) = H(X_{a u b}) - H(X_b)."""
    ma, mb = dist.mask(a), dist.mask(b)
    return dist.entropy_mask(ma | mb) - dist.entropy_mask(mb)


def binary_entropy(p: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter(f"probability must lie in [0, 1], got {p}")
    out = 0.0
    for x in (p, 1.0 - p):
        if x > 0.0:
            out -= x * math.log2(x)
    return out


def shearer_check(
    dist: IndicatorDistribution,
    subsets: Iterable[Iterable[int]],
    k: int,
    coords: Iterable[int] | None = None,
    tol: float = TOL,
) -> tuple[float, float, bool]:
    """Check k * H(X_coords) <= sum_j H(X_{S_j & coords}).

    ``coords`` defaults to every vertex.  Members of a subset outside ``coords``
    are dropped before taking entropies, so subsets need not lie inside it.
    """
    if k < 1:
        raise InvalidParameter(f"k must be >= 1, got {k}")
    coords = frozenset(dist.family.graph.vertices if coords is None else coords)
    subsets = [frozenset(s) & coords for s in subsets]
    for v in sorted(coords):
        covered = sum(1 for s in subsets if v in s)
        if covered < k:
            raise PreconditionError(f"coordinate {v} lies in {covered} subsets, fewer than k={k}")
    lhs = k * entropy(dist, coords)
    rhs = math.fsum(entropy(dist, s) for s in subsets)
    return lhs, rhs, lhs <= rhs + tol


def f_r_value(x: float, d: int, dr: int) -> float:
    """h(x) + x * log2(2^d / (2^dr - 1))."""
    if not 0.0 <= x <= 1.0:
        raise InvalidParameter(f"x must lie in [0, 1], got {x}")
    if d < 1 or dr < 1:
        raise InvalidParameter(f"degrees must be >= 1, got d={d}, dr={dr}")
    return binary_entropy(x) + x * (d - math.log2(2**dr - 1))


def f_r_maximizer(d: int, dr: int) -> float:
    return 2**d / (2**d + 2**dr - 1)


@dataclass
class AuditStep:
    id: str
    lhs: float
    rhs: float
    kind: str  # "ineq" (lhs <= rhs) or "eq"
    tol: float = TOL

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        if self.kind == "eq":
            return abs(self.lhs - self.rhs) <= self.tol
        return self.slack >= -self.tol

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "kind": self.kind,
            "pass": self.passed,
        }


@dataclass
class AuditReport:
    graph: Graph
    orientation: str
    q: dict[int, Fraction] = field(default_factory=dict)
    steps: list[AuditStep] = field(default_factory=list)
    final_bound_log2: float = math.nan

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    def step(self, step_id: str) -> AuditStep:
        for s in self.steps:
            if s.id == step_id:
                return s
        raise KeyError(step_id)

    def failures(self) -> list[AuditStep]:
        return [s for s in self.steps if not s.passed]

    def to_json(self) -> dict:
        return {
            "graph": {"n": self.graph.n, "edges": sorted(self.graph.edges)},
            "orientation": self.orientation,
            "q": {str(r): [v.numerator, v.denominator] for r, v in sorted(self.q.items())},
            "steps": [s.to_json() for s in self.steps],
            "final_bound_log2": self.final_bound_log2,
            "pass": self.passed,
        }


def _q_counts(family: IndSetFamily, nbr_mask: int, r_bit: int) -> tuple[int, int, int]:
    """(#sets avoiding N(r) without r, #sets avoiding N(r) with r, #sets meeting N(r) with r)."""
    avoid_out = avoid_in = meet_in = 0
    for s in family.sets:
        if s & nbr_mask:
            if s & r_bit:
                meet_in += 1
        elif s & r_bit:
            avoid_in += 1
        else:
            avoid_out += 1
    return avoid_out, avoid_in, meet_in


def audit_bipartite_proof(
    g: Graph,
    view: BipartiteView,
    orientation: str = "default",
    cap: int | None = None,
    tol: float = TOL,
) -> AuditReport:
    """Evaluate every inequality of the entropy argument on the uniform law over I(G)."""
    if view.graph != g:
        raise InvalidParameter("view does not belong to this graph")
    iso = g.isolated_vertices()
    if iso:
        raise IsolatedVerticesError(iso)

    dist = IndicatorDistribution.of_graph(g, cap)
    fam = dist.family
    total = fam.cardinality
    report = AuditReport(g, orientation)
    steps = report.steps

    def add(step_id, lhs, rhs, kind="ineq"):
        steps.append(AuditStep(step_id, lhs, rhs, kind, tol))

    all_mask = (1 << g.n) - 1
    left_mask = vertices_to_mask(view.left)
    log_total = math.log2(total)
    add("ent01", dist.entropy_mask(all_mask), log_total, "eq")

    ld = view.left_by_degree
    rd = view.right_by_degree
    h_left = dist.entropy_mask(left_mask)
    add("ent04", h_left, math.fsum(dist.entropy_mask(vertices_to_mask(ld[d])) for d in ld))

    def cond(a_mask, b_mask):
        return dist.entropy_mask(a_mask | b_mask) - dist.entropy_mask(b_mask)

    right_mask = vertices_to_mask(view.right)
    add(
        "ent05",
        cond(right_mask, left_mask),
        math.fsum(cond(vertices_to_mask(rd[d]), left_mask) for d in rd),
    )

    # Per right vertex: H(X_r|X_L) <= H(X_r|X_N(r)) <= H(X_r|Q_r) = q_r.
    for r in sorted(view.right):
        r_bit = 1 << (r - 1)
        nbr = vertices_to_mask(g.neighbors(r))
        avoid_out, avoid_in, meet_in = _q_counts(fam, nbr, r_bit)
        avoid = avoid_out + avoid_in
        if avoid == 0:
            raise InternalInvariantError(f"no independent set avoids N({r}); the empty set should")
        q = Fraction(avoid, total)
        report.q[r] = q
        # Given Q_r = 1, X_r is a fair bit; given Q_r = 0, X_r = 0.
        add(f"ent12-r{r}", float(meet_in), 0.0, "eq")
        add(f"ent13-r{r}", float(avoid_in), float(avoid_out), "eq")
        h_given_q = (avoid / total) * _entropy_of_counts([avoid_out, avoid_in], avoid)
        h_given_l = cond(r_bit, left_mask)
        h_given_n = cond(r_bit, nbr)
        add(f"ent08-r{r}", h_given_l, h_given_n)
        add(f"ent10-r{r}", h_given_n, h_given_q)
        add(f"ent14-r{r}", h_given_q, float(q), "eq")

    for d in sorted(ld):
        members = rd[d]
        rd_mask = vertices_to_mask(members)
        add(
            f"ent07-d{d}",
            cond(rd_mask, left_mask),
            math.fsum(cond(1 << (r - 1), left_mask) for r in members),
        )
        add(f"ent15-d{d}", cond(rd_mask, left_mask), math.fsum(float(report.q[r]) for r in members))
        lhs, rhs, _ = shearer_check(dist, [g.neighbors(r) for r in members], d, coords=ld[d], tol=tol)
        add(f"ent16-d{d}", lhs / d, rhs / d)

    for r in sorted(view.right):
        q_f = float(report.q[r])
        add(
            f"ent23-r{r}",
            dist.entropy_mask(vertices_to_mask(g.neighbors(r))),
            binary_entropy(q_f) + (1 - q_f) * math.log2(2 ** g.degree(r) - 1),
        )

    rhs_terms = []
    for d in sorted(ld):
        for r in sorted(rd[d]):
            dr = g.degree(r)
            x_star = f_r_maximizer(d, dr)
            q_f = float(report.q[r])
            f_star = f_r_value(x_star, d, dr)
            add(f"ent30-d{d}-r{r}", f_r_value(q_f, d, dr), f_star)
            target = math.log2(2**d + 2**dr - 1)
            add(f"ent36-d{d}-r{r}", f_star + math.log2(2**dr - 1), target, "eq")
            rhs_terms.append(target / d)

    final_rhs = math.fsum(rhs_terms)
    report.final_bound_log2 = final_rhs
    add("ent37", log_total, final_rhs)
    add("ent37-vs-bound", final_rhs, paper_bound(view).log2, "eq")
    return report
