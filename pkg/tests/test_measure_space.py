"""Exact set algebra, measure evaluation, atoms, and constructive splitting."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mrfgraph.measure_space import (
    AtomicSpace,
    BackendMismatchError,
    IntervalSpace,
    MeasurableSet,
    atom_set,
    boolean_combine,
    complement,
    difference,
    format_set,
    intersect,
    interval_set,
    is_atom,
    is_null,
    is_subset,
    measure,
    null_equal,
    parse_set,
    split_at_measure,
    split_nonatom,
    symdiff,
    union,
    unit_space,
)

INTERVAL_SPACE = IntervalSpace()


def iv(*pairs):
    return interval_set([(Fraction(lo), Fraction(hi)) for lo, hi in pairs])


# -- strategies -------------------------------------------------------------

atom_spaces = st.integers(1, 5).map(unit_space)


@st.composite
def weighted_spaces(draw):
    n = draw(st.integers(1, 5))
    weights = tuple(Fraction(draw(st.integers(1, 9)), draw(st.integers(1, 9)))
                    for _ in range(n))
    return AtomicSpace(weights)


@st.composite
def space_and_sets(draw, count=2):
    space = draw(weighted_spaces())
    sets = tuple(
        atom_set(i for i in range(space.n_atoms) if draw(st.booleans()))
        for _ in range(count)
    )
    return (space, *sets)


@st.composite
def interval_sets(draw, max_pieces=3):
    pieces = draw(st.integers(0, max_pieces))
    denom = draw(st.sampled_from([8, 12, 16, 24, 64]))
    cuts = draw(st.lists(st.integers(0, denom), min_size=2 * pieces,
                         max_size=2 * pieces, unique=True))
    points = sorted(Fraction(c, denom) for c in cuts)
    return interval_set((points[2 * i], points[2 * i + 1]) for i in range(pieces))


# -- construction and literals ----------------------------------------------

def test_atomic_space_rejects_nonpositive_weights():
    with pytest.raises(ValueError):
        AtomicSpace((Fraction(0), Fraction(1)))
    with pytest.raises(ValueError):
        AtomicSpace(())


def test_interval_set_canonicalizes_adjacent_pieces():
    assert iv((0, "1/3"), ("1/3", "1/2")) == iv((0, "1/2"))


def test_interval_set_rejects_bad_bounds():
    with pytest.raises(ValueError):
        iv(("1/2", "1/4"))
    with pytest.raises(ValueError):
        iv((0, "3/2"))


def test_literal_round_trips():
    for text in ("{0,2,5}", "{}", "[0,1/4)+[1/2,3/4)", "[]"):
        assert format_set(parse_set(text)) == text


def test_parse_canonicalizes_interval_literal():
    assert parse_set("[0,1/3)+[1/3,1/2)") == iv((0, "1/2"))
    assert format_set(parse_set("[0,1/3)+[1/3,1/2)")) == "[0,1/2)"
    with pytest.raises(ValueError):
        parse_set("[1/2,1/4)")
    with pytest.raises(ValueError):
        parse_set("(0,1/2)")


# -- boolean algebra --------------------------------------------------------

def test_atomic_intersection_example():
    space = unit_space(3)
    assert boolean_combine(space, atom_set([0, 1]), atom_set([1, 2]), "intersect") == atom_set([1])


def test_interval_complement_example():
    assert complement(INTERVAL_SPACE, iv(("1/4", "1/2"))) == iv((0, "1/4"), ("1/2", 1))


def test_interval_union_merges():
    assert union(INTERVAL_SPACE, iv((0, "1/3")), iv(("1/3", "1/2"))) == iv((0, "1/2"))


def test_backend_mismatch_raises():
    with pytest.raises(BackendMismatchError):
        measure(unit_space(2), iv((0, "1/2")))
    with pytest.raises(BackendMismatchError):
        union(INTERVAL_SPACE, iv((0, "1/2")), atom_set([0]))


def test_atom_index_out_of_range():
    with pytest.raises(ValueError):
        measure(unit_space(2), atom_set([5]))


@given(space_and_sets())
def test_de_morgan_atomic(args):
    space, a, b = args
    assert complement(space, union(space, a, b)) == intersect(
        space, complement(space, a), complement(space, b))
    assert complement(space, intersect(space, a, b)) == union(
        space, complement(space, a), complement(space, b))


@given(interval_sets(), interval_sets())
def test_de_morgan_interval(a, b):
    space = INTERVAL_SPACE
    assert complement(space, union(space, a, b)) == intersect(
        space, complement(space, a), complement(space, b))


@given(space_and_sets())
def test_absorption_laws(args):
    space, a, b = args
    assert union(space, a, intersect(space, a, b)) == a
    assert intersect(space, a, union(space, a, b)) == a


@given(interval_sets(), interval_sets())
def test_absorption_laws_interval(a, b):
    space = INTERVAL_SPACE
    assert union(space, a, intersect(space, a, b)) == a
    assert intersect(space, a, union(space, a, b)) == a


@given(interval_sets(), interval_sets())
def test_symdiff_definition_interval(a, b):
    space = INTERVAL_SPACE
    assert symdiff(space, a, b) == union(
        space, difference(space, a, b), difference(space, b, a))


@given(interval_sets())
def test_canonical_idempotence(a):
    assert interval_set(a.intervals) == a


@given(interval_sets(), interval_sets())
def test_boolean_outputs_are_canonical(a, b):
    for op in ("union", "intersect", "difference", "symdiff"):
        out = boolean_combine(INTERVAL_SPACE, a, b, op)
        assert interval_set(out.intervals) == out


# -- measure ----------------------------------------------------------------

def test_weighted_measure_example():
    space = AtomicSpace((Fraction(1), Fraction(2), Fraction(5)))
    assert measure(space, atom_set([0, 2])) == 6


def test_interval_measure_example():
    assert measure(INTERVAL_SPACE, iv((0, "1/4"), ("1/2", 1))) == Fraction(3, 4)


def test_null_equal_examples():
    space = unit_space(2)
    assert null_equal(space, atom_set([0]), atom_set([0]))
    assert not null_equal(space, atom_set([0]), atom_set([1]))


@given(space_and_sets())
def test_finite_additivity(args):
    space, a, b = args
    disjoint_b = difference(space, b, a)
    assert measure(space, union(space, a, disjoint_b)) == \
        measure(space, a) + measure(space, disjoint_b)


@given(interval_sets(), interval_sets())
def test_finite_additivity_interval(a, b):
    space = INTERVAL_SPACE
    disjoint_b = difference(space, b, a)
    assert measure(space, union(space, a, disjoint_b)) == \
        measure(space, a) + measure(space, disjoint_b)


# -- atoms and splitting ----------------------------------------------------

def test_is_atom_examples():
    space = unit_space(3)
    assert is_atom(space, atom_set([1]))
    assert not is_atom(space, atom_set([0, 2]))
    assert not is_atom(INTERVAL_SPACE, iv((0, "1/2")))
    assert not is_atom(space, atom_set([]))


def test_split_nonatom_atomic_example():
    space = unit_space(3)
    assert split_nonatom(space, atom_set([0, 2])) == (atom_set([0]), atom_set([2]))


def test_split_nonatom_interval_midpoint():
    left, right = split_nonatom(INTERVAL_SPACE, iv((0, "1/2")))
    assert left == iv((0, "1/4"))
    assert right == iv(("1/4", "1/2"))
    assert measure(INTERVAL_SPACE, left) == measure(INTERVAL_SPACE, right)


def test_split_nonatom_rejects_atoms_and_null():
    with pytest.raises(ValueError):
        split_nonatom(unit_space(2), atom_set([1]))
    with pytest.raises(ValueError):
        split_nonatom(unit_space(2), atom_set([]))


@given(space_and_sets(count=1))
def test_split_nonatom_reassembles(args):
    space, a = args
    if is_null(space, a) or is_atom(space, a):
        return
    left, right = split_nonatom(space, a)
    assert union(space, left, right) == a
    assert is_null(space, intersect(space, left, right))
    assert not is_null(space, left) and not is_null(space, right)


def test_split_at_measure_examples():
    space = INTERVAL_SPACE
    assert split_at_measure(space, iv((0, 1)), Fraction(1, 3)) == iv((0, "1/3"))
    part = split_at_measure(space, iv((0, "1/4"), ("1/2", 1)), Fraction(1, 2))
    assert part == iv((0, "1/4"), ("1/2", "3/4"))
    assert measure(space, part) == Fraction(1, 2)
    assert split_at_measure(space, iv((0, "1/4")), 0) == MeasurableSet("interval")


def test_split_at_measure_errors():
    with pytest.raises(ValueError):
        split_at_measure(INTERVAL_SPACE, iv((0, "1/4")), Fraction(1, 2))
    with pytest.raises(BackendMismatchError):
        split_at_measure(unit_space(2), atom_set([0]), Fraction(1, 2))


@settings(max_examples=200)
@given(interval_sets(), st.integers(0, 100))
def test_split_at_measure_exact_subset(a, percent):
    space = INTERVAL_SPACE
    r = measure(space, a) * Fraction(percent, 100)
    part = split_at_measure(space, a, r)
    assert measure(space, part) == r
    assert is_subset(space, part, a)


@given(weighted_spaces(), st.integers(0, 31))
def test_atom_dichotomy(space, mask):
    b = atom_set(i for i in range(space.n_atoms) if mask >> i & 1)
    for a in range(space.n_atoms):
        atom = atom_set([a])
        assert is_null(space, intersect(space, atom, b)) or \
            is_null(space, difference(space, atom, b))
