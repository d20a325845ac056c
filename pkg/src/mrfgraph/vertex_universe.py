"""Zero-divisor vertices: null-equivalence classes and finite-alphabet functions.

A measurable function is a zero-divisor exactly when its zero set and the
complement both have positive measure.  Up to almost-everywhere equality a
zero-divisor is determined by its zero set, so

* ``ZClass`` -- one equivalence class, canonically represented by its zero
  set.  These are the vertices of every quotient graph.
* ``ExpandedFunction`` -- an atoms -> {0,...,k-1} assignment over a purely
  atomic space; value 0 is the unique zero symbol.  These realize class
  multiplicities (k-1)^|cozero| and are the vertices of expanded graphs.

Annihilator-ideal comparisons reduce to nullity of zero-set differences:
ann(f) <= ann(g) iff Z(f) \\ Z(g) is null, and equality holds iff the zero
sets agree almost everywhere.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .measure_space import (
    ATOMIC,
    AtomicSpace,
    IntervalSpace,
    MeasurableSet,
    MeasureSpace,
    atom_set,
    complement,
    difference,
    format_set,
    interval_set,
    is_null,
    null_equal,
    parse_set,
)

UNIT_INTERVAL = IntervalSpace()


@dataclass(frozen=True)
class ZClass:
    """A null-equivalence class of zero-divisors, keyed by its zero set."""

    zero_set: MeasurableSet

    def __str__(self) -> str:
        return format_zclass(self)


def zclass(space: MeasureSpace, zero_set: MeasurableSet) -> ZClass:
    """Build a ZClass, enforcing that both the zero set and its complement
    have positive measure (the zero-divisor condition)."""
    if is_null(space, zero_set):
        raise ValueError("zero set of a zero-divisor must have positive measure")
    if is_null(space, complement(space, zero_set)):
        raise ValueError("cozero set of a zero-divisor must have positive measure")
    return ZClass(zero_set)


@dataclass(frozen=True)
class ExpandedFunction:
    """Per-atom values in {0,...,k-1}; identity is the full value vector."""

    values: tuple[int, ...]

    @property
    def zero_indices(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.values) if v == 0)

    def zero_set(self) -> MeasurableSet:
        return atom_set(self.zero_indices)

    def is_zero_divisor(self) -> bool:
        return any(v == 0 for v in self.values) and any(v != 0 for v in self.values)

    def __str__(self) -> str:
        return format_function(self)


def enumerate_zclasses(space: AtomicSpace) -> list[ZClass]:
    """All 2^n - 2 proper nonempty atom subsets as zero sets.

    Order is deterministic: ascending bitmask with bit i = atom i present.
    A single-atom space has no zero-divisors and yields the empty list.
    """
    n = space.n_atoms
    out = []
    for mask in range(1, (1 << n) - 1):
        out.append(ZClass(atom_set(i for i in range(n) if mask >> i & 1)))
    return out


def enumerate_functions(space: AtomicSpace, k: int) -> list[ExpandedFunction]:
    """All zero-divisor assignments, lexicographic; k^n - (k-1)^n - 1 of them."""
    if k < 2:
        raise ValueError("alphabet size must be at least 2")
    out = []
    for values in itertools.product(range(k), repeat=space.n_atoms):
        f = ExpandedFunction(values)
        if f.is_zero_divisor():
            out.append(f)
    return out


def class_size(space: AtomicSpace, zc: ZClass, k: int) -> int:
    """Number of alphabet-k functions in the class: (k-1)^|cozero set|."""
    if zc.zero_set.backend != ATOMIC:
        raise ValueError("class sizes are defined on the atomic backend only")
    coz = space.n_atoms - len(zc.zero_set.atoms)
    return (k - 1) ** coz


def ann_leq(space: MeasureSpace, zf: MeasurableSet, zg: MeasurableSet) -> bool:
    """ann(f) contained in ann(g), i.e. Z(f) \\ Z(g) is null."""
    return is_null(space, difference(space, zf, zg))


def ann_eq(space: MeasureSpace, zf: MeasurableSet, zg: MeasurableSet) -> bool:
    """ann(f) = ann(g), i.e. the zero sets agree almost everywhere."""
    return null_equal(space, zf, zg)


def sample_interval_class(seed, depth: int) -> ZClass:
    """Deterministic random interval-backend ZClass.

    The zero set is a union of ``depth`` disjoint rational intervals chosen
    away from 0 and 1, so both it and its complement have positive measure.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    rng = random.Random(f"zclass:{seed}:{depth}")
    denom = 3 ** depth * 64
    cuts: set[int] = set()
    while len(cuts) < 2 * depth:
        cuts.add(rng.randrange(1, denom))
    points = sorted(Fraction(c, denom) for c in cuts)
    pieces = [(points[2 * i], points[2 * i + 1]) for i in range(depth)]
    return zclass(UNIT_INTERVAL, interval_set(pieces))


def sample_interval_classes(seed, count: int, max_depth: int = 3) -> list[ZClass]:
    """``count`` deterministic samples with depths cycling through 1..max_depth."""
    return [
        sample_interval_class(f"{seed}:{i}", i % max_depth + 1)
        for i in range(count)
    ]


def format_zclass(zc: ZClass) -> str:
    return "Z=" + format_set(zc.zero_set)


def parse_zclass(text: str) -> ZClass:
    text = text.strip()
    if not text.startswith("Z="):
        raise ValueError(f"malformed class literal: {text!r}")
    return ZClass(parse_set(text[2:]))


def format_function(f: ExpandedFunction) -> str:
    return "f=[" + ",".join(str(v) for v in f.values) + "]"


def parse_function(text: str) -> ExpandedFunction:
    text = text.strip()
    if not (text.startswith("f=[") and text.endswith("]")):
        raise ValueError(f"malformed function literal: {text!r}")
    body = text[3:-1]
    values = tuple(int(tok) for tok in body.split(",")) if body else ()
    if any(v < 0 for v in values):
        raise ValueError("function values must be non-negative alphabet symbols")
    return ExpandedFunction(values)
