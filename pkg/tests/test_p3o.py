import itertools
import random

import pytest

from triord.p3o import (
    Law,
    TripleSystemError,
    TripleSystem,
    Violation,
    canonical_form,
    check_43,
    check_interior_transitivity,
    check_interiority,
    check_premise_free,
    check_zero_propagation,
    check_zero_propagation_general,
    containment,
    equivalent,
    is_t3o,
    make_system,
    negate,
    relabel,
)


def all_positive(labels):
    return make_system(labels, [(t, 1) for t in itertools.combinations(labels, 3)])


def test_make_system_alternation():
    sys = make_system("ABC", [(("A", "B", "C"), 1)])
    assert sys.sign_of("B", "C", "A") == 1
    assert sys.sign_of("A", "C", "B") == -1
    assert sys.sign_of("C", "B", "A") == -1


def test_make_system_conflict():
    with pytest.raises(TripleSystemError, match="alternation conflict"):
        make_system("ABC", [(("A", "B", "C"), 1), (("A", "C", "B"), 1)])
    # consistent double assignment is allowed
    sys = make_system("ABC", [(("A", "B", "C"), 1), (("A", "C", "B"), -1)])
    assert sys.signs == (1,)


def test_make_system_default_zero():
    sys = make_system("ABCDE", [], default_zero=True)
    assert all(s == 0 for s in sys.signs)
    assert not check_interiority(sys)
    with pytest.raises(TripleSystemError, match="unassigned"):
        make_system("ABCD", [(("A", "B", "C"), 1)])
    with pytest.raises(TripleSystemError, match="unknown label"):
        make_system("ABC", [(("A", "B", "X"), 1)])


def test_triple_index_consistency():
    for n in (3, 4, 5, 6, 7):
        labels = tuple(f"x{i}" for i in range(n))
        sys = make_system(labels, [], default_zero=True)
        for pos, t in enumerate(itertools.combinations(range(n), 3)):
            assert sys.triple_index(*t) == pos


def test_check_interiority_constructed_violation():
    sys = make_system(
        "ABCD",
        [
            (("A", "B", "D"), 1),
            (("B", "C", "D"), 1),
            (("C", "A", "D"), 1),
            (("A", "B", "C"), -1),
        ],
    )
    violations = check_interiority(sys)
    assert violations == [Violation(Law.INTERIORITY, ("A", "B", "C", "D"))]
    assert not is_t3o(sys)


def test_check_interiority_all_positive_clean():
    for n in (4, 5, 6):
        sys = all_positive(tuple(f"e{i}" for i in range(n)))
        assert check_interiority(sys) == []
        assert check_premise_free(sys) == []
        assert is_t3o(sys)


def test_premise_free_triangle_with_interior_point():
    from triord.geom import Point
    from triord.orient import points_to_p3o

    sys = points_to_p3o(
        [
            ("A", Point.of(0, 0)),
            ("B", Point.of(6, 0)),
            ("C", Point.of(0, 6)),
            ("D", Point.of(2, 2)),
        ]
    )
    assert check_interiority(sys) == []
    assert len(check_premise_free(sys)) > 0
    convex = points_to_p3o(
        [
            ("A", Point.of(0, 0)),
            ("B", Point.of(2, 0)),
            ("C", Point.of(2, 2)),
            ("D", Point.of(0, 2)),
        ]
    )
    assert check_premise_free(convex) == []


def test_interior_transitivity_nested_points_clean():
    from triord.geom import Point
    from triord.orient import points_to_p3o

    sys = points_to_p3o(
        [
            ("A", Point.of(0, 0)),
            ("B", Point.of(12, 0)),
            ("C", Point.of(0, 12)),
            ("D", Point.of(3, 3)),
            ("E", Point.of(4, 4)),
        ]
    )
    assert check_interior_transitivity(sys) == []
    assert check_interior_transitivity(all_positive("abcde")) == []


def test_zero_propagation_examples():
    toy = make_system(
        "ABCD",
        [
            (("A", "B", "C"), 0),
            (("A", "B", "D"), 0),
            (("A", "C", "D"), 1),
            (("B", "C", "D"), -1),
        ],
    )
    violations = check_zero_propagation(toy)
    assert violations == [Violation(Law.ZERO_PROPAGATION, ("A", "B", "C", "D"))]
    consistent = make_system(
        "ABCD",
        [
            (("A", "B", "C"), 0),
            (("A", "B", "D"), 0),
            (("A", "C", "D"), 1),
            (("B", "C", "D"), 1),
        ],
    )
    assert check_zero_propagation(consistent) == []


def test_zero_propagation_general():
    labels = ("A1", "A2", "B1", "B2", "C1", "C2")
    zero_quads = [
        ("A1", "A2", "B1", "B2"),
        ("A1", "A2", "C1", "C2"),
        ("B1", "B2", "C1", "C2"),
    ]
    assignments = {}
    for quad in zero_quads:
        for t in itertools.combinations(quad, 3):
            assignments[t] = 0
    assignments[("A1", "B1", "C1")] = 1
    assignments[("A2", "B2", "C2")] = -1
    sys = make_system(labels, list(assignments.items()), default_zero=True)
    violations = check_zero_propagation_general(sys)
    assert (
        Violation(Law.ZERO_PROPAGATION_GENERAL, labels) in violations
    )
    # premise unsatisfiable with fewer than three zero triples
    few = make_system("abcdef", [(t, 1) for t in itertools.combinations("abcdef", 3)])
    assert check_zero_propagation_general(few) == []
    # small systems are vacuously clean
    assert check_zero_propagation_general(all_positive("abcde")) == []


def test_check_43():
    zero = make_system("ABCDE", [], default_zero=True)
    assert check_43(zero) == []
    t3o = all_positive("ABCD")
    assert check_43(t3o) == [Violation(Law.FOUR_THREE, ("A", "B", "C", "D"))]
    t3o5 = all_positive("ABCDE")
    assert len(check_43(t3o5)) == 5


def test_canonical_form_relabeling_invariance():
    rng = random.Random(21)
    for _ in range(15):
        n = rng.randint(3, 5)
        labels = tuple(f"x{i}" for i in range(n))
        signs = tuple(
            rng.choice((-1, 0, 1))
            for _ in range(n * (n - 1) * (n - 2) // 6)
        )
        sys = TripleSystem(labels, signs)
        base = canonical_form(sys)
        base_nm = canonical_form(sys, include_mirror=False)
        for _ in range(100):
            perm = list(range(n))
            rng.shuffle(perm)
            shuffled = relabel(sys, perm)
            assert canonical_form(shuffled) == base
            assert canonical_form(shuffled, include_mirror=False) == base_nm
        assert canonical_form(negate(sys)) == base


def test_premise_free_equivalent_to_interiority_under_43():
    # with the (4,3) property, a firing premise forces a clean conclusion
    # to contradict it, so interiority-clean and premise-free coincide
    rng = random.Random(24)
    seen_nonempty = 0
    for _ in range(400):
        n = rng.randint(4, 6)
        labels = tuple(f"x{i}" for i in range(n))
        signs = tuple(
            rng.choice((-1, 0, 0, 1))
            for _ in range(n * (n - 1) * (n - 2) // 6)
        )
        sys = TripleSystem(labels, signs)
        if check_43(sys):
            continue
        seen_nonempty += 1
        assert (check_interiority(sys) == []) == (check_premise_free(sys) == [])
    assert seen_nonempty > 50


def test_canonical_form_mirror_flag():
    # a chiral partial 3-order: negation is not a relabeling
    sys = TripleSystem(tuple("abcde"), (-1, -1, -1, -1, -1, -1, -1, -1, 0, 0))
    assert check_interiority(sys) == []
    neg = negate(sys)
    assert canonical_form(sys, include_mirror=True) == canonical_form(neg, include_mirror=True)
    assert canonical_form(sys, include_mirror=False) != canonical_form(neg, include_mirror=False)
    # with a single triple, odd relabelings already act as the mirror
    tiny = make_system("ABC", [(("A", "B", "C"), 1)])
    assert canonical_form(tiny, include_mirror=False) == canonical_form(
        negate(tiny), include_mirror=False
    )


def test_equivalent():
    sys = all_positive("ABCD")
    assert equivalent(sys, sys)
    other = make_system(
        "ABCD",
        [
            (("A", "B", "C"), 1),
            (("A", "B", "D"), 1),
            (("A", "C", "D"), 1),
            (("B", "C", "D"), -1),
        ],
    )
    assert not equivalent(sys, other)
    with pytest.raises(TripleSystemError, match="different sizes"):
        equivalent(sys, all_positive("ABC"))


def test_equivalent_square_center_relabelings():
    from triord.constructions import square_center_p3o

    sys = square_center_p3o()
    rng = random.Random(22)
    perm = list(range(sys.n))
    rng.shuffle(perm)
    assert equivalent(sys, relabel(sys, perm))


def test_negation_preserves_interiority():
    # the axiom set is closed under global sign negation
    rng = random.Random(23)
    count = 0
    while count < 50:
        signs = tuple(rng.choice((-1, 0, 1)) for _ in range(10))
        sys = TripleSystem(tuple("abcde"), signs)
        if check_interiority(sys):
            continue
        count += 1
        assert check_interiority(negate(sys)) == []


def test_restrict():
    sys = all_positive("ABCDE")
    sub = sys.restrict(("B", "D", "E"))
    assert sub.labels == ("B", "D", "E")
    assert sub.signs == (1,)
    flipped = sys.restrict(("D", "B", "E"))
    assert flipped.signs == (-1,)
