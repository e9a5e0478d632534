"""Abstract partial and total 3-orders.

A TripleSystem assigns a sign in {-1, 0, +1} to every sorted triple of a
labeled ground set; ordered lookups follow the alternation law.  This module
houses the interiority axiom and the other combinatorial laws as decidable
checks, plus canonical forms for isomorphism testing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Optional, Sequence


class Law(Enum):
    INTERIORITY = "interiority"
    INTERIOR_TRANSITIVITY = "interior-transitivity"
    ZERO_PROPAGATION = "zero-propagation"
    ZERO_PROPAGATION_GENERAL = "zero-propagation-general"
    PREMISE = "premise"
    FOUR_THREE = "four-three"


_LAW_ARITY = {
    Law.INTERIORITY: 4,
    Law.INTERIOR_TRANSITIVITY: 5,
    Law.ZERO_PROPAGATION: 4,
    Law.ZERO_PROPAGATION_GENERAL: 6,
    Law.PREMISE: 4,
    Law.FOUR_THREE: 4,
}


@dataclass(frozen=True)
class Violation:
    """A witness tuple (labels) for a failed combinatorial law."""

    law: Law
    witness: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.witness) != _LAW_ARITY[self.law]:
            raise ValueError(
                f"{self.law.value} witness must have {_LAW_ARITY[self.law]} labels"
            )


class TripleSystemError(ValueError):
    """Malformed triple system input (bad labels, conflicting signs, ...)."""


# permutation parity of a length-3 tuple relative to sorted order
def _parity3(t: Sequence[int]) -> int:
    a, b, c = t
    if a < b < c or b < c < a or c < a < b:
        return 1
    return -1


@lru_cache(maxsize=None)
def _index_map(n: int) -> dict[tuple[int, int, int], int]:
    return {c: p for p, c in enumerate(itertools.combinations(range(n), 3))}


@dataclass(frozen=True)
class TripleSystem:
    """Sign assignment on sorted index triples of a labeled ground set."""

    labels: tuple[str, ...]
    signs: tuple[int, ...]  # over itertools.combinations(range(n), 3), lex order

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise TripleSystemError("labels must be unique")
        want = n * (n - 1) * (n - 2) // 6
        if len(self.signs) != want:
            raise TripleSystemError(f"expected {want} triple signs, got {len(self.signs)}")
        if any(s not in (-1, 0, 1) for s in self.signs):
            raise TripleSystemError("signs must be in {-1, 0, +1}")

    @property
    def n(self) -> int:
        return len(self.labels)

    def triple_index(self, i: int, j: int, k: int) -> int:
        """Position of the sorted triple in lexicographic combination order."""
        return _index_map(self.n)[(i, j, k)]

    def sign(self, i: int, j: int, k: int) -> int:
        """Sign of the ordered index triple (i, j, k), via alternation."""
        s = sorted((i, j, k))
        if s[0] == s[1] or s[1] == s[2]:
            raise TripleSystemError("triple indices must be distinct")
        base = self.signs[self.triple_index(*s)]
        return base * _parity3((i, j, k))

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise TripleSystemError(f"unknown label {label!r}") from None

    def sign_of(self, a: str, b: str, c: str) -> int:
        return self.sign(self.index_of(a), self.index_of(b), self.index_of(c))

    def triples(self) -> Iterable[tuple[tuple[int, int, int], int]]:
        for pos, t in enumerate(itertools.combinations(range(self.n), 3)):
            yield t, self.signs[pos]

    def zero_count(self) -> int:
        return sum(1 for s in self.signs if s == 0)

    def restrict(self, keep: Sequence[str]) -> "TripleSystem":
        """Subsystem induced on the given labels, in the given order."""
        idx = [self.index_of(x) for x in keep]
        signs = tuple(
            self.sign(idx[i], idx[j], idx[k])
            for i, j, k in itertools.combinations(range(len(idx)), 3)
        )
        return TripleSystem(tuple(keep), signs)


def make_system(
    labels: Sequence[str],
    assignments: Iterable[tuple[tuple[str, str, str], int]],
    default_zero: bool = False,
) -> TripleSystem:
    """Build a system from ordered-triple assignments.

    Each sorted triple must be covered exactly once (conflicting orderings of
    one triple are rejected); with default_zero, uncovered triples are 0.
    """
    labels = tuple(labels)
    pos = {lab: i for i, lab in enumerate(labels)}
    if len(pos) != len(labels):
        raise TripleSystemError("labels must be unique")
    n = len(labels)
    store: dict[tuple[int, int, int], int] = {}
    for (a, b, c), s in assignments:
        for lab in (a, b, c):
            if lab not in pos:
                raise TripleSystemError(f"unknown label {lab!r}")
        if s not in (-1, 0, 1):
            raise TripleSystemError(f"sign must be in {{-1,0,+1}}, got {s}")
        t = (pos[a], pos[b], pos[c])
        if len(set(t)) != 3:
            raise TripleSystemError(f"triple {(a, b, c)} has repeated labels")
        key = tuple(sorted(t))
        val = s * _parity3(t)
        if key in store and store[key] != val:
            raise TripleSystemError(f"alternation conflict on triple {(a, b, c)}")
        store[key] = val
    signs = []
    for key in itertools.combinations(range(n), 3):
        if key in store:
            signs.append(store[key])
        elif default_zero:
            signs.append(0)
        else:
            raise TripleSystemError(
                f"triple {tuple(labels[i] for i in key)} unassigned "
                "(pass default_zero=True to default to 0)"
            )
    return TripleSystem(labels, tuple(signs))


def _witness(sys: TripleSystem, idx: Iterable[int]) -> tuple[str, ...]:
    return tuple(sys.labels[i] for i in idx)


def check_interiority(sys: TripleSystem) -> list[Violation]:
    """One violation per 4-subset with s(ABD)=s(BCD)=s(CAD)=+1 but s(ABC)!=+1.

    The witness is the lexicographically first violating ordered instance;
    an empty list is exactly the partial-3-order condition.
    """
    out = []
    for quad in itertools.combinations(range(sys.n), 4):
        bad = [
            inst
            for inst in _premise_instances(sys, quad)
            if sys.sign(*inst[:3]) != 1
        ]
        if bad:
            out.append(Violation(Law.INTERIORITY, _witness(sys, min(bad))))
    return sorted(out, key=lambda v: v.witness)


def check_premise_free(sys: TripleSystem) -> list[Violation]:
    """One violation per 4-subset on which the interiority premise holds."""
    out = []
    for quad in itertools.combinations(range(sys.n), 4):
        fired = list(_premise_instances(sys, quad))
        if fired:
            out.append(Violation(Law.PREMISE, _witness(sys, min(fired))))
    return sorted(out, key=lambda v: v.witness)


def _premise_instances(
    sys: TripleSystem, quad: Sequence[int]
) -> Iterable[tuple[int, int, int, int]]:
    """Ordered instances (A,B,C,D) within one 4-subset whose premise holds,
    each cyclic class represented once (rotated to start at its smallest)."""
    for d in quad:
        rest = [x for x in quad if x != d]
        a = rest[0]
        for b, c in ((rest[1], rest[2]), (rest[2], rest[1])):
            if (
                sys.sign(a, b, d) == 1
                and sys.sign(b, c, d) == 1
                and sys.sign(c, a, d) == 1
            ):
                yield (a, b, c, d)


def is_t3o(sys: TripleSystem) -> bool:
    """True iff no zero triple and the interiority condition holds."""
    return sys.zero_count() == 0 and not check_interiority(sys)


def is_p3o(sys: TripleSystem) -> bool:
    return not check_interiority(sys)


class Containment(Enum):
    INSIDE_POS = "inside+"
    INSIDE_NEG = "inside-"
    OUTSIDE = "outside"


def containment(sys: TripleSystem, d: str, a: str, b: str, c: str) -> Containment:
    """Whether d lies inside the triple (a, b, c) in the 3-order sense.

    Inside means the three signs s(ABD), s(BCD), s(CAD) agree and are
    nonzero; the order of a, b, c does not matter.
    """
    ia, ib, ic, id_ = (sys.index_of(x) for x in (a, b, c, d))
    if len({ia, ib, ic, id_}) != 4:
        raise TripleSystemError("containment labels must be distinct")
    s1 = sys.sign(ia, ib, id_)
    s2 = sys.sign(ib, ic, id_)
    s3 = sys.sign(ic, ia, id_)
    if s1 == s2 == s3 == 1:
        return Containment.INSIDE_POS
    if s1 == s2 == s3 == -1:
        return Containment.INSIDE_NEG
    return Containment.OUTSIDE


def check_interior_transitivity(sys: TripleSystem) -> list[Violation]:
    """5-tuples (A,B,C,D,E): D inside ABC and E inside ABD but E outside ABC."""
    out = []
    n = sys.n
    labels = sys.labels
    for a, b in itertools.combinations(range(n), 2):
        others = [x for x in range(n) if x not in (a, b)]
        for c, d, e in itertools.permutations(others, 3):
            la, lb, lc, ld, le = (labels[i] for i in (a, b, c, d, e))
            if containment(sys, ld, la, lb, lc) is Containment.OUTSIDE:
                continue
            if containment(sys, le, la, lb, ld) is Containment.OUTSIDE:
                continue
            if containment(sys, le, la, lb, lc) is Containment.OUTSIDE:
                out.append(
                    Violation(Law.INTERIOR_TRANSITIVITY, (la, lb, lc, ld, le))
                )
    return sorted(out, key=lambda v: v.witness)


def check_zero_propagation(sys: TripleSystem) -> list[Violation]:
    """4-tuples (A,B,C,D): s(ABC)=s(ABD)=0 but s(ACD), s(BCD) nonzero and unequal.

    Reported once per instance with A<B and C<D.
    """
    out = []
    n = sys.n
    for a, b in itertools.combinations(range(n), 2):
        for c, d in itertools.combinations(range(n), 2):
            if len({a, b, c, d}) != 4:
                continue
            if sys.sign(a, b, c) != 0 or sys.sign(a, b, d) != 0:
                continue
            s1 = sys.sign(a, c, d)
            s2 = sys.sign(b, c, d)
            if s1 != 0 and s2 != 0 and s1 != s2:
                out.append(Violation(Law.ZERO_PROPAGATION, _witness(sys, (a, b, c, d))))
    return sorted(out, key=lambda v: v.witness)


def _zero_quad(sys: TripleSystem, quad: Sequence[int]) -> bool:
    return all(sys.sign(*t) == 0 for t in itertools.combinations(sorted(quad), 3))


def check_zero_propagation_general(sys: TripleSystem) -> list[Violation]:
    """Injective 6-tuples (A1,A2,B1,B2,C1,C2) violating pairwise zero-quadruple
    propagation: the three quadruples pairing the letter classes are all-zero,
    but s(A1B1C1) and s(A2B2C2) are nonzero and differ.
    """
    n = sys.n
    if n < 6:
        return []
    pairs = list(itertools.combinations(range(n), 2))
    zero_quads = set()
    for p, q in itertools.combinations(pairs, 2):
        if set(p) & set(q):
            continue
        quad = p + q
        if _zero_quad(sys, quad):
            zero_quads.add(frozenset((p, q)))
    out = []
    for pp, qq, rr in itertools.combinations(pairs, 3):
        ps, qs, rs = set(pp), set(qq), set(rr)
        if ps & qs or ps & rs or qs & rs:
            continue
        if (
            frozenset((pp, qq)) not in zero_quads
            or frozenset((pp, rr)) not in zero_quads
            or frozenset((qq, rr)) not in zero_quads
        ):
            continue
        a1, a2 = pp
        for b1 in qq:
            b2 = qq[0] if b1 == qq[1] else qq[1]
            for c1 in rr:
                c2 = rr[0] if c1 == rr[1] else rr[1]
                s1 = sys.sign(a1, b1, c1)
                s2 = sys.sign(a2, b2, c2)
                if s1 != 0 and s2 != 0 and s1 != s2:
                    out.append(
                        Violation(
                            Law.ZERO_PROPAGATION_GENERAL,
                            _witness(sys, (a1, a2, b1, b2, c1, c2)),
                        )
                    )
    return sorted(out, key=lambda v: v.witness)


def check_43(sys: TripleSystem) -> list[Violation]:
    """4-subsets with no zero triple (violations of the (4,3) property)."""
    out = []
    for quad in itertools.combinations(range(sys.n), 4):
        if all(sys.sign(*t) != 0 for t in itertools.combinations(quad, 3)):
            out.append(Violation(Law.FOUR_THREE, _witness(sys, quad)))
    return sorted(out, key=lambda v: v.witness)


_ENC = {-1: 0, 0: 1, 1: 2}


def relabel(sys: TripleSystem, perm: Sequence[int]) -> TripleSystem:
    """System whose element at position i is the old element perm[i]."""
    signs = tuple(
        sys.sign(perm[i], perm[j], perm[k])
        for i, j, k in itertools.combinations(range(sys.n), 3)
    )
    return TripleSystem(tuple(sys.labels[p] for p in perm), signs)


def negate(sys: TripleSystem) -> TripleSystem:
    return TripleSystem(sys.labels, tuple(-s for s in sys.signs))


_CANON_MAX_N = 8


def canonical_form(sys: TripleSystem, include_mirror: bool = True) -> bytes:
    """Minimal sign-tuple encoding over all label permutations.

    With include_mirror the global sign negation is also factored out.
    Equal canonical forms characterize equivalence under the chosen group.
    Brute force over n! permutations; fine at desk scale (n <= 8).
    """
    n = sys.n
    if n > _CANON_MAX_N:
        raise TripleSystemError(f"canonical_form is brute-force, n <= {_CANON_MAX_N} only")
    combs = list(itertools.combinations(range(n), 3))
    best: Optional[bytes] = None
    for perm in itertools.permutations(range(n)):
        enc = bytes(_ENC[sys.sign(perm[i], perm[j], perm[k])] for i, j, k in combs)
        if best is None or enc < best:
            best = enc
        if include_mirror:
            menc = bytes(2 - v for v in enc)
            if menc < best:
                best = menc
    return best if best is not None else b""


def equivalent(
    sys1: TripleSystem, sys2: TripleSystem, include_mirror: bool = True
) -> bool:
    if sys1.n != sys2.n:
        raise TripleSystemError("systems have different sizes")
    return canonical_form(sys1, include_mirror) == canonical_form(sys2, include_mirror)


def system_from_canonical(n: int, form: bytes, labels: Optional[Sequence[str]] = None) -> TripleSystem:
    """Rebuild a TripleSystem from a canonical byte encoding."""
    if labels is None:
        labels = tuple("ABCDEFGH"[:n])
    dec = {0: -1, 1: 0, 2: 1}
    return TripleSystem(tuple(labels), tuple(dec[v] for v in form))
