"""Isomorph-free exhaustive enumeration of total and partial 3-orders.

Two independent routes: a backtracking search over sorted triples with
incremental pruning on completed 4-subsets, and a naive filter oracle that
tests every raw sign assignment (small n only).  Both deduplicate through
canonical forms; the batch canonical reduction is vectorized with numpy.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .p3o import (
    TripleSystem,
    TripleSystemError,
    canonical_form,
    check_interiority,
)


class Kind(Enum):
    T3O = "t3o"
    P3O = "p3o"


class Group(Enum):
    RELABEL = "relabel"
    RELABEL_MIRROR = "relabel-mirror"


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    kind: Kind
    group: Group
    class_count: int
    representatives: tuple[TripleSystem, ...]
    nodes: int
    wall_time: float
    lower_bound: bool = False

    def summary(self) -> str:
        tag = "at least " if self.lower_bound else ""
        return (
            f"{self.kind.value} n={self.n} group={self.group.value}: "
            f"{tag}{self.class_count} classes "
            f"({self.nodes} nodes, {self.wall_time:.2f}s)"
        )


def _combs(n: int) -> list[tuple[int, int, int]]:
    return list(itertools.combinations(range(n), 3))


def _quad_ok_table() -> dict[tuple[int, int, int, int], bool]:
    """Interiority verdict for every sign pattern of a 4-subset's triples."""
    table = {}
    for pattern in itertools.product((-1, 0, 1), repeat=4):
        sys = TripleSystem(("a", "b", "c", "d"), pattern)
        table[pattern] = not check_interiority(sys)
    return table


_QUAD_OK = _quad_ok_table()


def _completion_schedule(n: int) -> list[list[tuple[int, int, int, int]]]:
    """For each triple position, the 4-subsets that become fully assigned there.

    A 4-subset {a<b<c<d} completes when its lex-largest triple (b,c,d) is
    assigned; the entry holds the positions of its four triples in
    (abc, abd, acd, bcd) order.
    """
    combs = _combs(n)
    pos = {c: i for i, c in enumerate(combs)}
    schedule: list[list[tuple[int, int, int, int]]] = [[] for _ in combs]
    for quad in itertools.combinations(range(n), 4):
        a, b, c, d = quad
        ps = (pos[(a, b, c)], pos[(a, b, d)], pos[(a, c, d)], pos[(b, c, d)])
        schedule[ps[3]].append(ps)
    return schedule


def _backtrack(
    n: int,
    values: tuple[int, ...],
    prefix: Sequence[int] = (),
    stop_depth: Optional[int] = None,
) -> tuple[list[tuple[int, ...]], int]:
    """All interiority-consistent assignments extending the given prefix.

    With stop_depth, stops early and returns consistent partials of that
    length instead of full assignments (used to split work across workers).
    """
    t_total = len(_combs(n))
    schedule = _completion_schedule(n)
    target = t_total if stop_depth is None else stop_depth
    out: list[tuple[int, ...]] = []
    partial = list(prefix)
    nodes = 0

    def consistent_at(p: int) -> bool:
        for q in schedule[p]:
            if not _QUAD_OK[(partial[q[0]], partial[q[1]], partial[q[2]], partial[q[3]])]:
                return False
        return True

    def rec(p: int) -> None:
        nonlocal nodes
        if p == target:
            out.append(tuple(partial))
            return
        for v in values:
            partial.append(v)
            nodes += 1
            if consistent_at(p):
                rec(p + 1)
            partial.pop()

    # re-validate nothing for the prefix: prefixes come from this same search
    rec(len(partial))
    return out, nodes


_PERM_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _perm_maps(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Stacked (n! x T) relabeling maps: source triple position and parity."""
    cached = _PERM_CACHE.get(n)
    if cached is not None:
        return cached
    combs = _combs(n)
    pos = {c: i for i, c in enumerate(combs)}
    srcs = []
    pars = []
    for perm in itertools.permutations(range(n)):
        src = np.empty(len(combs), dtype=np.int64)
        par = np.empty(len(combs), dtype=np.int8)
        for p, (i, j, k) in enumerate(combs):
            img = (perm[i], perm[j], perm[k])
            s = tuple(sorted(img))
            src[p] = pos[s]
            a, b, c = img
            par[p] = 1 if (a < b < c or b < c < a or c < a < b) else -1
        srcs.append(src)
        pars.append(par)
    result = (np.stack(srcs), np.stack(pars))
    _PERM_CACHE[n] = result
    return result


def _pow3(t_total: int) -> np.ndarray:
    return 3 ** np.arange(t_total - 1, -1, -1, dtype=np.int64)


def _canon_int(n: int, signs: Sequence[int], mirror: bool) -> int:
    """Canonical integer encoding of one sign assignment (vectorized)."""
    src, par = _perm_maps(n)
    s = np.asarray(signs, dtype=np.int8)
    digits = s[src] * par + 1
    pw = _pow3(len(signs))
    encs = digits.astype(np.int64) @ pw
    if mirror:
        full = int((2 * pw).sum())
        encs = np.minimum(encs, full - encs)
    return int(encs.min())


def _canonical_encodings(
    n: int, assignments: Sequence[tuple[int, ...]], group: Group
) -> np.ndarray:
    """Distinct canonical integer encodings of the given sign assignments.

    The encoding is the base-3 value of the digits sign+1 in triple order,
    matching the byte encoding used by p3o.canonical_form.
    """
    t_total = len(_combs(n))
    signs = np.array(assignments, dtype=np.int8).reshape(len(assignments), t_total)
    pow3 = _pow3(t_total)
    full = int((2 * pow3).sum())
    srcs, pars = _perm_maps(n)
    best: Optional[np.ndarray] = None
    for src, par in zip(srcs, pars):
        digits = signs[:, src] * par + 1
        enc = digits.astype(np.int64) @ pow3
        if group is Group.RELABEL_MIRROR:
            enc = np.minimum(enc, full - enc)
        best = enc if best is None else np.minimum(best, enc)
    return np.unique(best)


def _decode(n: int, enc: int) -> TripleSystem:
    t_total = len(_combs(n))
    digits = []
    for _ in range(t_total):
        enc, d = divmod(enc, 3)
        digits.append(d - 1)
    return TripleSystem(tuple("ABCDEFGH"[:n]), tuple(reversed(digits)))


def _enumerate(
    n: int,
    kind: Kind,
    group: Group,
    workers: int = 1,
    lo: int = 3,
    hi: int = 6,
) -> EnumerationReport:
    if not lo <= n <= hi:
        raise TripleSystemError(f"n must be in [{lo}, {hi}]")
    values = (-1, 1) if kind is Kind.T3O else (-1, 0, 1)
    start = time.monotonic()
    if workers > 1:
        leaves, nodes = _parallel_backtrack(n, values, workers)
    else:
        leaves, nodes = _backtrack(n, values)
    encs = _canonical_encodings(n, leaves, group) if leaves else np.array([], dtype=np.int64)
    reps = tuple(_decode(n, int(e)) for e in encs)
    return EnumerationReport(
        n=n,
        kind=kind,
        group=group,
        class_count=len(reps),
        representatives=reps,
        nodes=nodes,
        wall_time=time.monotonic() - start,
    )


def _expand_prefix(args: tuple[int, tuple[int, ...], tuple[int, ...]]):
    n, values, prefix = args
    return _backtrack(n, values, prefix=prefix)


def _parallel_backtrack(
    n: int, values: tuple[int, ...], workers: int, prefix_depth: int = 4
) -> tuple[list[tuple[int, ...]], int]:
    """Split the search tree at a fixed prefix depth across processes.

    The merged result is a plain union, so it is independent of the worker
    count and the scheduling order.
    """
    import multiprocessing as mp

    prefix_depth = min(prefix_depth, len(_combs(n)))
    prefixes, nodes = _backtrack(n, values, stop_depth=prefix_depth)
    with mp.get_context("fork").Pool(workers) as pool:
        parts = pool.map(
            _expand_prefix, [(n, values, pre) for pre in prefixes]
        )
    leaves: list[tuple[int, ...]] = []
    for part, part_nodes in parts:
        leaves.extend(part)
        nodes += part_nodes
    leaves.sort()
    return leaves, nodes


def enumerate_t3o(n: int, group: Group = Group.RELABEL_MIRROR, workers: int = 1) -> EnumerationReport:
    """All total 3-orders on n elements up to the chosen equivalence group."""
    return _enumerate(n, Kind.T3O, group, workers, lo=3, hi=6)


def enumerate_p3o(n: int, group: Group = Group.RELABEL_MIRROR, workers: int = 1) -> EnumerationReport:
    """All partial 3-orders on n elements up to the chosen equivalence group."""
    return _enumerate(n, Kind.P3O, group, workers, lo=3, hi=5)


def naive_filter_oracle(n: int, kind: Kind, group: Group) -> set[bytes]:
    """Canonical forms of all valid systems by filtering raw assignments.

    Exponential; intended as an independent oracle for n <= 5.
    """
    if n > 5:
        raise TripleSystemError("naive filter oracle supports n <= 5 only")
    values = (-1, 1) if kind is Kind.T3O else (-1, 0, 1)
    t_total = len(_combs(n))
    labels = tuple("ABCDE"[:n])
    out = set()
    for assignment in itertools.product(values, repeat=t_total):
        sys = TripleSystem(labels, assignment)
        if check_interiority(sys):
            continue
        out.add(canonical_form(sys, include_mirror=group is Group.RELABEL_MIRROR))
    return out


def _orient_int(p: tuple[int, int], q: tuple[int, int], r: tuple[int, int]) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def enumerate_point_order_types(
    n: int,
    samples: int = 10_000,
    seed: int = 0,
    group: Group = Group.RELABEL_MIRROR,
) -> EnumerationReport:
    """Monte-Carlo census of order types of n points in general position.

    Draws random integer point sets until `samples` consecutive draws add no
    new class.  Random search cannot certify completeness, so the report is
    a lower bound.
    """
    if n > 6:
        raise TripleSystemError("point order type census supports n <= 6 only")
    if samples < 1:
        raise TripleSystemError("samples must be >= 1")
    rng = random.Random(seed)
    combs = _combs(n)
    span = 10**6
    start = time.monotonic()
    mirror = group is Group.RELABEL_MIRROR
    classes: set[int] = set()
    memo: dict[tuple[int, ...], int] = {}
    streak = 0
    draws = 0
    while streak < samples:
        pts = [(rng.randrange(span), rng.randrange(span)) for _ in range(n)]
        signs = tuple(_orient_int(pts[i], pts[j], pts[k]) for i, j, k in combs)
        if 0 in signs or len(set(pts)) != n:
            continue
        draws += 1
        canon = memo.get(signs)
        if canon is None:
            canon = _canon_int(n, signs, mirror)
            memo[signs] = canon
        if canon in classes:
            streak += 1
        else:
            classes.add(canon)
            streak = 0
    reps = tuple(_decode(n, enc) for enc in sorted(classes))
    return EnumerationReport(
        n=n,
        kind=Kind.T3O,
        group=group,
        class_count=len(reps),
        representatives=reps,
        nodes=draws,
        wall_time=time.monotonic() - start,
        lower_bound=True,
    )


def extend_duplicate(sys: TripleSystem, a: str, sign: int) -> TripleSystem:
    """Add a clone a' of element a with constant sign s(a, a', x) = sign.

    The clone relates to every other element exactly as a does; the result
    restricted to the original labels is the input, and the interiority
    condition is preserved.
    """
    if sign not in (-1, 1):
        raise TripleSystemError("sign must be -1 or +1")
    ai = sys.index_of(a)
    new_label = a + "'"
    while new_label in sys.labels:
        new_label += "'"
    n = sys.n
    labels = sys.labels + (new_label,)
    signs = []
    for i, j, k in itertools.combinations(range(n + 1), 3):
        if k < n:
            signs.append(sys.sign(i, j, k))
        elif ai not in (i, j):
            signs.append(sys.sign(i, j, ai))
        elif i == ai:
            # sorted (a, x, a') is the ordered (a, a', x) with the last two swapped
            signs.append(-sign)
        else:
            # sorted (x, a, a') is a cyclic rotation of (a, a', x)
            signs.append(sign)
    return TripleSystem(labels, tuple(signs))
