"""Derived combinatorial analyses.

The trace digraph of a system at an apex element, zero-clique extremes,
realization verification against target systems, and the random harness for
the hull-triple condition on point subsets.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .geom import ConvexBody, Point, common_intersection, convex_hull, intersect
from .orient import Family, family_profile
from .p3o import TripleSystemError, TripleSystem


@dataclass(frozen=True)
class TraceDigraph:
    """Arcs (A, B) for s(A,B,apex) = +1; zero triples contribute no arc."""

    apex: str
    vertices: tuple[str, ...]
    arcs: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        for a, b in self.arcs:
            if (b, a) in self.arcs:
                raise TripleSystemError(f"arcs must be antisymmetric, got both {a}->{b} and {b}->{a}")


def build_gd(sys: TripleSystem, d: str) -> TraceDigraph:
    """Trace digraph at the apex d."""
    if sys.n < 4:
        raise TripleSystemError("trace digraph needs at least 4 elements")
    di = sys.index_of(d)
    vertices = tuple(lab for lab in sys.labels if lab != d)
    arcs = set()
    for a, b in itertools.permutations(vertices, 2):
        if sys.sign_of(a, b, d) == 1:
            arcs.add((a, b))
    return TraceDigraph(d, vertices, frozenset(arcs))


def shortest_directed_cycle(g: TraceDigraph) -> Optional[int]:
    """Length of the shortest directed cycle, or None when acyclic."""
    succ: dict[str, list[str]] = {v: [] for v in g.vertices}
    for a, b in g.arcs:
        succ[a].append(b)
    best: Optional[int] = None
    for start in g.vertices:
        # BFS over arcs back to the start gives the shortest cycle through it
        dist = {start: 0}
        frontier = [start]
        steps = 0
        while frontier and (best is None or steps < best):
            steps += 1
            nxt = []
            for u in frontier:
                for w in succ[u]:
                    if w == start:
                        if best is None or steps < best:
                            best = steps
                        continue
                    if w not in dist:
                        dist[w] = steps
                        nxt.append(w)
            frontier = nxt
    return best


def max_zero_clique(sys: TripleSystem) -> tuple[int, tuple[str, ...]]:
    """Largest subset in which every triple is zero, by branch and bound."""
    n = sys.n
    if n < 3:
        return n, tuple(sys.labels)

    def compatible(s: list[int], v: int) -> bool:
        return all(sys.sign(a, b, v) == 0 for a, b in itertools.combinations(s, 2))

    best: list[int] = []
    # greedy pass for an initial bound
    for start in range(n):
        greedy = [start]
        for v in range(n):
            if v != start and compatible(greedy, v):
                greedy.append(v)
        if len(greedy) > len(best):
            best = sorted(greedy)

    def grow(current: list[int], candidates: list[int]) -> None:
        nonlocal best
        if len(current) + len(candidates) <= len(best):
            return
        if not candidates:
            if len(current) > len(best):
                best = list(current)
            return
        head, rest = candidates[0], candidates[1:]
        grow(current + [head], [v for v in rest if compatible(current + [head], v)])
        grow(current, rest)

    grow([], list(range(n)))
    return len(best), tuple(sys.labels[i] for i in best)


@dataclass(frozen=True)
class RealizationReport:
    match: bool
    mismatches: tuple[tuple[tuple[str, str, str], int, int], ...]  # triple, got, expected


def verify_realization(family: Family, target: TripleSystem) -> RealizationReport:
    """Compare the family's profile with the target, triple by triple."""
    if family.labels != target.labels:
        raise TripleSystemError("family and target label sequences differ")
    profile = family_profile(family)
    mismatches = []
    for (i, j, k), got in profile.triples():
        expected = target.signs[target.triple_index(i, j, k)]
        if got != expected:
            names = (family.labels[i], family.labels[j], family.labels[k])
            mismatches.append((names, got, expected))
    return RealizationReport(match=not mismatches, mismatches=tuple(mismatches))


@dataclass(frozen=True)
class ThrackleReport:
    size_condition: bool
    pairwise_condition: bool
    triple_condition: bool
    m_le_n: bool

    @property
    def conditions(self) -> tuple[bool, bool, bool]:
        return (self.size_condition, self.pairwise_condition, self.triple_condition)

    @property
    def all_conditions(self) -> bool:
        return all(self.conditions)


def check_thrackle_instance(
    points: Sequence[tuple[str, Point]], subsets: Sequence[Sequence[str]]
) -> ThrackleReport:
    """Exact evaluation of the three hull-system hypotheses and m <= n.

    The triple condition means every three hulls meet in a region that is
    empty or a single one of the given points (a convex subset of a finite
    set is at most a point).
    """
    by_label = dict(points)
    if len(by_label) != len(points):
        raise TripleSystemError("duplicate point labels")
    seen = set()
    for sub in subsets:
        key = frozenset(sub)
        if len(key) != len(sub):
            raise TripleSystemError(f"subset {sub!r} repeats a label")
        if key in seen:
            raise TripleSystemError(f"duplicate subset {sorted(sub)!r}")
        seen.add(key)
        for lab in sub:
            if lab not in by_label:
                raise TripleSystemError(f"subset references unknown label {lab!r}")
    n = len(points)
    m = len(subsets)
    point_set = {p for _, p in points}
    size_ok = all(1 < len(sub) < n for sub in subsets)
    hulls = [convex_hull([by_label[lab] for lab in sub]) for sub in subsets]
    pairwise_ok = all(
        intersect(hulls[i], hulls[j]) is not None
        for i, j in itertools.combinations(range(m), 2)
    )
    triple_ok = True
    for i, j, k in itertools.combinations(range(m), 3):
        region = common_intersection([hulls[i], hulls[j], hulls[k]])
        if region is None:
            continue
        if len(region.vertices) > 1 or region.vertices[0] not in point_set:
            triple_ok = False
            break
    return ThrackleReport(size_ok, pairwise_ok, triple_ok, m <= n)


@dataclass(frozen=True)
class ThrackleSearchResult:
    best_m: int
    n: int
    points: tuple[tuple[str, Point], ...]
    subsets: tuple[tuple[str, ...], ...]
    counterexample: bool


def search_thrackle_counterexample(
    n: int, trials: int, seed: int = 0
) -> ThrackleSearchResult:
    """Randomized search for instances maximizing m under the hypotheses.

    Points are drawn in a disk, subsets greedily accumulated while the
    hypotheses verify exactly.  Deterministic for a fixed seed; reports a
    counterexample only when the verified instance has m > n.
    """
    if n < 3:
        raise TripleSystemError("need n >= 3")
    rng = random.Random(seed)
    labels = [f"p{i}" for i in range(n)]
    best: Optional[ThrackleSearchResult] = None
    span = 1000
    for _ in range(trials):
        pts: list[Point] = []
        while len(pts) < n:
            x, y = rng.randrange(-span, span + 1), rng.randrange(-span, span + 1)
            if x * x + y * y <= span * span:
                p = Point(Fraction(x), Fraction(y))
                if p not in pts:
                    pts.append(p)
        labeled = list(zip(labels, pts))
        chosen: list[tuple[str, ...]] = []
        hulls: list[ConvexBody] = []
        seen: set[frozenset[str]] = set()
        for _attempt in range(6 * n):
            size = rng.randint(2, n - 1)
            sub = tuple(sorted(rng.sample(labels, size)))
            if frozenset(sub) in seen:
                continue
            hull = convex_hull([pts[labels.index(lab)] for lab in sub])
            ok = all(intersect(hull, h) is not None for h in hulls)
            if ok:
                point_set = set(pts)
                for a, b in itertools.combinations(range(len(hulls)), 2):
                    region = common_intersection([hulls[a], hulls[b], hull])
                    if region is None:
                        continue
                    if len(region.vertices) > 1 or region.vertices[0] not in point_set:
                        ok = False
                        break
            if ok:
                chosen.append(sub)
                hulls.append(hull)
                seen.add(frozenset(sub))
        if best is None or len(chosen) > best.best_m:
            report = check_thrackle_instance(labeled, chosen)
            best = ThrackleSearchResult(
                best_m=len(chosen),
                n=n,
                points=tuple(labeled),
                subsets=tuple(chosen),
                counterexample=report.all_conditions and len(chosen) > n,
            )
    if best is None:
        return ThrackleSearchResult(0, n, (), (), False)
    return best
