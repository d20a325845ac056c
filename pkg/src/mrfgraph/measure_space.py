"""Exact measure-space backends: weighted atoms and rational subintervals of [0,1).

Two finitely representable backends share one set-algebra API:

* ``AtomicSpace`` -- finitely many atoms with strictly positive rational
  weights; a measurable set is a subset of atom indices.  A set is null
  exactly when it is empty.
* ``IntervalSpace`` -- the unit interval [0,1) with length measure; a
  measurable set is a finite union of half-open rational intervals kept in
  a unique canonical form (sorted, pairwise disjoint, adjacent pieces
  merged).  The backend is non-atomic: no set is an atom.

All values are ``fractions.Fraction``; nothing in this module ever rounds.
All types are immutable and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

ATOMIC = "atomic"
INTERVAL = "interval"

_OPS = ("union", "intersect", "difference", "symdiff")


class BackendMismatchError(ValueError):
    """A set was used with a space of the other backend."""


@dataclass(frozen=True)
class AtomicSpace:
    """Purely atomic space: one strictly positive rational weight per atom."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) < 1:
            raise ValueError("an atomic space needs at least one atom")
        ws = tuple(Fraction(w) for w in self.weights)
        if any(w <= 0 for w in ws):
            raise ValueError("atom weights must be strictly positive")
        object.__setattr__(self, "weights", ws)

    @property
    def backend(self) -> str:
        return ATOMIC

    @property
    def n_atoms(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class IntervalSpace:
    """The unit interval [0,1) with exact length measure (non-atomic)."""

    @property
    def backend(self) -> str:
        return INTERVAL


MeasureSpace = AtomicSpace | IntervalSpace


def unit_space(n_atoms: int) -> AtomicSpace:
    """Counting-measure style space: ``n_atoms`` atoms of weight 1."""
    return AtomicSpace(tuple(Fraction(1) for _ in range(n_atoms)))


@dataclass(frozen=True)
class MeasurableSet:
    """A set in one backend: atom-index subset, or canonical interval union.

    Exactly one payload is populated, selected by ``backend``.  Interval
    payloads are always canonical, so structural equality coincides with
    null-equality (two canonical interval unions that differ must differ by
    a set of positive length).
    """

    backend: str
    atoms: frozenset[int] = frozenset()
    intervals: tuple[tuple[Fraction, Fraction], ...] = ()

    def __str__(self) -> str:
        return format_set(self)


def atom_set(indices: Iterable[int]) -> MeasurableSet:
    """Atomic-backend set from atom indices."""
    idx = frozenset(int(i) for i in indices)
    if any(i < 0 for i in idx):
        raise ValueError("atom indices must be non-negative")
    return MeasurableSet(ATOMIC, atoms=idx)


def interval_set(pairs: Iterable[tuple[Fraction | int | str, Fraction | int | str]]) -> MeasurableSet:
    """Interval-backend set from [lo, hi) pairs, canonicalized."""
    cleaned = []
    for lo, hi in pairs:
        lo, hi = Fraction(lo), Fraction(hi)
        if not (0 <= lo < hi <= 1):
            raise ValueError(f"intervals must satisfy 0 <= lo < hi <= 1, got [{lo},{hi})")
        cleaned.append((lo, hi))
    return MeasurableSet(INTERVAL, intervals=_canonical(cleaned))


def _canonical(pairs: Sequence[tuple[Fraction, Fraction]]) -> tuple[tuple[Fraction, Fraction], ...]:
    """Sort, merge overlapping and adjacent pieces; unique per set."""
    out: list[tuple[Fraction, Fraction]] = []
    for lo, hi in sorted(pairs):
        if out and lo <= out[-1][1]:
            prev_lo, prev_hi = out[-1]
            out[-1] = (prev_lo, max(prev_hi, hi))
        else:
            out.append((lo, hi))
    return tuple(out)


def _check(space: MeasureSpace, *sets: MeasurableSet) -> None:
    for s in sets:
        if s.backend != space.backend:
            raise BackendMismatchError(
                f"set backend {s.backend!r} used with space backend {space.backend!r}"
            )
        if s.backend == ATOMIC and s.atoms and max(s.atoms) >= space.n_atoms:
            raise ValueError(f"atom index out of range for a {space.n_atoms}-atom space")


def full_set(space: MeasureSpace) -> MeasurableSet:
    """The whole space X."""
    if space.backend == ATOMIC:
        return atom_set(range(space.n_atoms))
    return interval_set([(Fraction(0), Fraction(1))])


def empty_set(space: MeasureSpace) -> MeasurableSet:
    return MeasurableSet(space.backend)


def _interval_union(a, b):
    return _canonical(list(a) + list(b))


def _interval_intersect(a, b):
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        lo = max(a[i][0], b[j][0])
        hi = min(a[i][1], b[j][1])
        if lo < hi:
            out.append((lo, hi))
        if a[i][1] <= b[j][1]:
            i += 1
        else:
            j += 1
    return tuple(out)


def _interval_complement(a):
    out = []
    cursor = Fraction(0)
    for lo, hi in a:
        if cursor < lo:
            out.append((cursor, lo))
        cursor = hi
    if cursor < 1:
        out.append((cursor, Fraction(1)))
    return tuple(out)


def boolean_combine(space: MeasureSpace, a: MeasurableSet, b: MeasurableSet, op: str) -> MeasurableSet:
    """Exact set algebra; result is always in canonical form."""
    _check(space, a, b)
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}, expected one of {_OPS}")
    if space.backend == ATOMIC:
        x, y = a.atoms, b.atoms
        if op == "union":
            z = x | y
        elif op == "intersect":
            z = x & y
        elif op == "difference":
            z = x - y
        else:
            z = x ^ y
        return MeasurableSet(ATOMIC, atoms=z)
    x, y = a.intervals, b.intervals
    if op == "union":
        z = _interval_union(x, y)
    elif op == "intersect":
        z = _interval_intersect(x, y)
    elif op == "difference":
        z = _interval_intersect(x, _interval_complement(y))
    else:
        z = _interval_union(
            _interval_intersect(x, _interval_complement(y)),
            _interval_intersect(y, _interval_complement(x)),
        )
    return MeasurableSet(INTERVAL, intervals=z)


def complement(space: MeasureSpace, a: MeasurableSet) -> MeasurableSet:
    """Complement relative to X (all atoms, or [0,1))."""
    _check(space, a)
    if space.backend == ATOMIC:
        return MeasurableSet(ATOMIC, atoms=frozenset(range(space.n_atoms)) - a.atoms)
    return MeasurableSet(INTERVAL, intervals=_interval_complement(a.intervals))


def union(space, a, b):
    return boolean_combine(space, a, b, "union")


def intersect(space, a, b):
    return boolean_combine(space, a, b, "intersect")


def difference(space, a, b):
    return boolean_combine(space, a, b, "difference")


def symdiff(space, a, b):
    return boolean_combine(space, a, b, "symdiff")


def measure(space: MeasureSpace, a: MeasurableSet) -> Fraction:
    """Exact weight sum / length sum."""
    _check(space, a)
    if space.backend == ATOMIC:
        return sum((space.weights[i] for i in a.atoms), Fraction(0))
    return sum((hi - lo for lo, hi in a.intervals), Fraction(0))


def is_null(space: MeasureSpace, a: MeasurableSet) -> bool:
    """True when the set has measure zero.

    With strictly positive atom weights / canonical nonempty intervals this
    is the same as being empty, on both backends.
    """
    _check(space, a)
    if space.backend == ATOMIC:
        return not a.atoms
    return not a.intervals


def null_equal(space: MeasureSpace, a: MeasurableSet, b: MeasurableSet) -> bool:
    """Almost-everywhere equality of sets: the symmetric difference is null."""
    return is_null(space, symdiff(space, a, b))


def is_atom(space: MeasureSpace, a: MeasurableSet) -> bool:
    """Positive-measure set admitting no split into two positive-measure parts.

    On the interval backend this is false for every set: any set of positive
    length splits at its measure midpoint.
    """
    _check(space, a)
    if space.backend == ATOMIC:
        return len(a.atoms) == 1
    return False


def split_nonatom(space: MeasureSpace, a: MeasurableSet) -> tuple[MeasurableSet, MeasurableSet]:
    """Deterministically split a non-atom of positive measure into two
    positive-measure parts (lowest atom index vs rest; measure midpoint).
    """
    _check(space, a)
    if is_null(space, a):
        raise ValueError("cannot split a null set")
    if is_atom(space, a):
        raise ValueError("cannot split an atom")
    if space.backend == ATOMIC:
        lowest = min(a.atoms)
        left = MeasurableSet(ATOMIC, atoms=frozenset([lowest]))
        right = MeasurableSet(ATOMIC, atoms=a.atoms - {lowest})
        return left, right
    half = measure(space, a) / 2
    left = split_at_measure(space, a, half)
    return left, difference(space, a, left)


def split_at_measure(space: MeasureSpace, a: MeasurableSet, r: Fraction | int | str) -> MeasurableSet:
    """Subset of ``a`` of exact measure ``r`` by a left-to-right prefix scan.

    Interval backend only: exact subsets of a prescribed measure need not
    exist among atom subsets.
    """
    _check(space, a)
    if space.backend != INTERVAL:
        raise BackendMismatchError("split_at_measure is defined on the interval backend only")
    r = Fraction(r)
    total = measure(space, a)
    if not (0 <= r <= total):
        raise ValueError(f"target measure {r} outside [0, {total}]")
    out: list[tuple[Fraction, Fraction]] = []
    remaining = r
    for lo, hi in a.intervals:
        if remaining == 0:
            break
        length = hi - lo
        if length <= remaining:
            out.append((lo, hi))
            remaining -= length
        else:
            out.append((lo, lo + remaining))
            remaining = Fraction(0)
    return MeasurableSet(INTERVAL, intervals=tuple(out))


def is_subset(space: MeasureSpace, a: MeasurableSet, b: MeasurableSet) -> bool:
    """a contained in b up to null sets (exact containment on these backends)."""
    return is_null(space, difference(space, a, b))


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def format_set(s: MeasurableSet) -> str:
    """Canonical literal: ``{0,2,5}`` or ``[0,1/4)+[1/2,3/4)`` (``[]`` empty)."""
    if s.backend == ATOMIC:
        return "{" + ",".join(str(i) for i in sorted(s.atoms)) + "}"
    if not s.intervals:
        return "[]"
    return "+".join(f"[{format_rational(lo)},{format_rational(hi)})" for lo, hi in s.intervals)


def parse_set(text: str) -> MeasurableSet:
    """Parse a set literal produced by :func:`format_set` (exact round-trip)."""
    text = text.strip()
    if text.startswith("{"):
        if not text.endswith("}"):
            raise ValueError(f"malformed atom-set literal: {text!r}")
        body = text[1:-1].strip()
        if not body:
            return MeasurableSet(ATOMIC)
        return atom_set(int(tok) for tok in body.split(","))
    if text == "[]":
        return MeasurableSet(INTERVAL)
    if text.startswith("["):
        pieces = []
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not (chunk.startswith("[") and chunk.endswith(")")):
                raise ValueError(f"malformed interval literal: {chunk!r}")
            lo_s, hi_s = chunk[1:-1].split(",")
            pieces.append((Fraction(lo_s), Fraction(hi_s)))
        return interval_set(pieces)
    raise ValueError(f"unrecognized set literal: {text!r}")
