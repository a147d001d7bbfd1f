"""Exhaustive desk-scale sweeps over small labeled graphs."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator

from .bounds import Ordering, Verdict, compare_bound_vs_count, compare_bounds, paper_bound, sah_bound
from .entropy_audit import audit_bipartite_proof
from .graph_core import Graph, complete_bipartite, disjoint_union, view_from_sides
from .indset_count import count_independent_sets, enumerate_independent_sets
from .zhao_injection import is_cover_independent, verify_zhao_inequality, zhao_inverse, zhao_map


def bipartite_graphs(max_left: int, max_right: int, allow_isolated: bool = False) -> Iterator[tuple[Graph, frozenset]]:
    """Every labeled bipartite adjacency matrix with 1 <= a <= max_left rows and
    1 <= b <= max_right columns; rows are vertices 1..a, columns a+1..a+b.

    Yields (graph, left side).  Matrices with an all-zero row or column are
    skipped unless ``allow_isolated``.
    """
    for a in range(1, max_left + 1):
        for b in range(1, max_right + 1):
            cells = [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)]
            left = frozenset(range(1, a + 1))
            for bits in range(1 << len(cells)):
                edges = [cells[k] for k in range(len(cells)) if bits >> k & 1]
                g = Graph.from_edges(a + b, edges)
                if not allow_isolated and g.isolated_vertices():
                    continue
                yield g, left


def all_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[k] for k in range(len(pairs)) if bits >> k & 1))


def complete_bipartite_unions(max_components: int = 3, max_part: int = 4) -> Iterator[tuple[tuple, Graph]]:
    shapes = list(product(range(1, max_part + 1), repeat=2))
    for k in range(1, max_components + 1):
        for combo in combinations_with_replacement(shapes, k):
            yield combo, disjoint_union(complete_bipartite(a, b) for a, b in combo)


@dataclass
class BoundSweepStats:
    graphs: int = 0
    verdicts: dict[str, Counter] = field(default_factory=dict)
    dominance: Counter = field(default_factory=Counter)
    coincidence_checked: int = 0
    coincidence_failures: int = 0
    audits: int = 0
    audit_failures: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "graphs_checked": self.graphs,
            "verdicts": {k: {v.value: c[v] for v in Verdict} for k, c in self.verdicts.items()},
            "paper_vs_sah": {o.value: self.dominance[o] for o in Ordering},
            "left_regular_checked": self.coincidence_checked,
            "left_regular_not_equal": self.coincidence_failures,
            "audits": self.audits,
            "audit_failures": self.audit_failures,
            "violations": len(self.violations),
            "violation_examples": self.violations[:10],
        }


def run_bound_sweep(max_left: int, max_right: int, audit: bool = False) -> BoundSweepStats:
    stats = BoundSweepStats()
    for key in ("sah", "paper:default", "paper:flipped"):
        stats.verdicts[key] = Counter()
    for g, left in bipartite_graphs(max_left, max_right):
        stats.graphs += 1
        count = count_independent_sets(g)
        sah = sah_bound(g)
        v = compare_bound_vs_count(sah, count)
        stats.verdicts["sah"][v] += 1
        if v is Verdict.VIOLATED:
            stats.violations.append({"edges": sorted(g.edges), "bound": "sah"})
        view = view_from_sides(g, left)
        for name, ov in (("paper:default", view), ("paper:flipped", view.flip())):
            pb = paper_bound(ov)
            v = compare_bound_vs_count(pb, count)
            stats.verdicts[name][v] += 1
            if v is Verdict.VIOLATED:
                stats.violations.append({"edges": sorted(g.edges), "bound": name})
            order = compare_bounds(pb, sah)
            stats.dominance[order] += 1
            if order is Ordering.LESS:
                stats.violations.append({"edges": sorted(g.edges), "bound": name, "check": "dominance"})
            if ov.is_left_regular():
                stats.coincidence_checked += 1
                if order is not Ordering.EQUAL:
                    stats.coincidence_failures += 1
                    stats.violations.append({"edges": sorted(g.edges), "bound": name, "check": "coincidence"})
            if audit:
                stats.audits += 1
                report = audit_bipartite_proof(g, ov, name.split(":")[1])
                if not report.passed:
                    stats.audit_failures += 1
                    stats.violations.append(
                        {"edges": sorted(g.edges), "audit": name, "failed": [s.id for s in report.failures()]}
                    )
    return stats


@dataclass
class InjectionCheck:
    pairs: int
    distinct_images: int
    invalid_images: int
    roundtrip_failures: int

    @property
    def passed(self) -> bool:
        return (
            self.distinct_images == self.pairs
            and self.invalid_images == 0
            and self.roundtrip_failures == 0
        )


def check_injection(g: Graph) -> InjectionCheck:
    """Run the map over all |I(G)|^2 ordered pairs of independent sets."""
    sets = [frozenset(s) for s in enumerate_independent_sets(g).vertex_sets()]
    images = set()
    invalid = bad_roundtrip = pairs = 0
    for s0 in sets:
        for s1 in sets:
            pairs += 1
            img = zhao_map(g, s0, s1)
            images.add(img)
            if not is_cover_independent(g, img):
                invalid += 1
            if zhao_inverse(g, img) != (s0, s1):
                bad_roundtrip += 1
    return InjectionCheck(pairs, len(images), invalid, bad_roundtrip)


@dataclass
class ZhaoSweepStats:
    graphs: int = 0
    tight: int = 0
    strictly_above: int = 0
    violations: list[dict] = field(default_factory=list)
    injection_graphs: int = 0
    injection_pairs: int = 0
    injection_failures: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations and self.injection_failures == 0

    def to_json(self) -> dict:
        return {
            "graphs_checked": self.graphs,
            "Tight": self.tight,
            "StrictlyAbove": self.strictly_above,
            "violations": len(self.violations),
            "violation_examples": self.violations[:10],
            "injection_graphs": self.injection_graphs,
            "injection_pairs": self.injection_pairs,
            "injection_failures": self.injection_failures,
        }


def run_zhao_sweep(max_n: int, injection_max_n: int = 5) -> ZhaoSweepStats:
    stats = ZhaoSweepStats()
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            stats.graphs += 1
            sq, cover, ok = verify_zhao_inequality(g)
            if not ok:
                stats.violations.append({"n": n, "edges": sorted(g.edges), "count_sq": sq, "cover": cover})
            elif sq == cover:
                stats.tight += 1
            else:
                stats.strictly_above += 1
            if n <= injection_max_n:
                res = check_injection(g)
                stats.injection_graphs += 1
                stats.injection_pairs += res.pairs
                if not res.passed:
                    stats.injection_failures += 1
    return stats
