"""L-multi-fuzzy sets, L-fuzzy hybrid sets and their crisp alpha-cuts.

Each element of a fuzzy collection carries exactly one degree and one
multiplicity.  Elements are plain strings; the universe is implicit and an
absent element reads as ``(frame.bottom, 0)``.  Entries with count zero are
never stored, so ``==`` is extensional equality.

>>> from fuzzyhybrid import Frame
>>> U = Frame.unit()
>>> A = MultiFuzzySet(U, {"a": ("0.8", 3), "b": ("0.4", 1)})
>>> A.alpha_cut(U("1/2"))
CrispMultiset({'a': 3})
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional

from .frames import Degree, Frame, FrameMismatchError, format_degree
from .zorder import ll

__all__ = [
    "CrispHybridSet",
    "CrispMultiset",
    "HybridSet",
    "MultiFuzzySet",
    "alpha_cut",
    "cardinality",
    "intersection",
    "is_subset",
    "membership",
    "multiplicity",
    "strong_cardinality",
    "fuzzy_sum",
    "union",
]


def _as_degree(frame: Frame, d) -> Degree:
    if isinstance(d, Degree):
        if d.frame != frame:
            raise FrameMismatchError(
                f"degree {d} belongs to {d.frame.describe()}, "
                f"not {frame.describe()}"
            )
        return d
    return frame(d)


class _FuzzyCollection:
    __slots__ = ("frame", "_entries", "_hash")

    _signed = False

    def __init__(self, frame: Frame, entries: Optional[Mapping[str, tuple]] = None):
        self.frame = frame
        table: dict[str, tuple[Degree, int]] = {}
        for name, (deg, count) in (entries or {}).items():
            if not isinstance(name, str):
                raise TypeError(f"element names are strings, got {name!r}")
            if isinstance(count, bool) or int(count) != count:
                raise TypeError(f"count for {name!r} must be an integer")
            count = int(count)
            if count < 0 and not self._signed:
                raise ValueError(
                    f"{type(self).__name__} counts are nonnegative ({name}: {count})"
                )
            deg = _as_degree(frame, deg)
            if count:
                table[name] = (deg, count)
        self._entries = table
        self._hash = None

    @classmethod
    def _raw(cls, frame: Frame, table: dict):
        obj = cls.__new__(cls)
        obj.frame = frame
        obj._entries = {k: v for k, v in table.items() if v[1] != 0}
        obj._hash = None
        return obj

    # -- accessors ----------------------------------------------------------

    def __getitem__(self, x: str) -> tuple[Degree, int]:
        return self._entries.get(x, (self.frame.bottom, 0))

    def multiplicity(self, x: str) -> int:
        return self[x][1]

    def membership(self, x: str) -> Degree:
        return self[x][0]

    @property
    def support(self) -> frozenset:
        return frozenset(self._entries)

    def items(self) -> Iterator[tuple[str, Degree, int]]:
        for name in sorted(self._entries):
            deg, count = self._entries[name]
            yield name, deg, count

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._entries))

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __contains__(self, x: str) -> bool:
        return x in self._entries

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.frame == other.frame and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.frame, frozenset(self._entries.items())))
        return self._hash

    def __str__(self) -> str:
        return ", ".join(f"{n}@{format_degree(d)}*{c}" for n, d, c in self.items())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.frame.describe()}: {self or '{}'})"

    # -- measures -----------------------------------------------------------

    def cardinality(self) -> Fraction:
        return sum((d.scalar(c) for _, d, c in self.items()), Fraction(0))

    def strong_cardinality(self) -> Fraction:
        return sum((d.scalar(abs(c)) for _, d, c in self.items()), Fraction(0))

    # -- combination helpers ------------------------------------------------

    def _same(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if other.frame != self.frame:
            raise FrameMismatchError(
                f"{self.frame.describe()} vs {other.frame.describe()}"
            )

    def _pointwise(self, other, degree_op, count_op):
        self._same(other)
        table = {}
        for x in self.support | other.support:
            da, na = self[x]
            db, nb = other[x]
            table[x] = (degree_op(da, db), count_op(na, nb))
        return type(self)._raw(self.frame, table)

    def sum(self, other):
        """Pointwise join of degrees and sum of counts."""
        return self._pointwise(other, Degree.join, int.__add__)

    __add__ = sum

    def _count_leq(self, n: int, m: int) -> bool:
        raise NotImplementedError

    def issubset(self, other) -> bool:
        self._same(other)
        for x in self.support | other.support:
            da, na = self[x]
            db, nb = other[x]
            if not (da.leq(db) and self._count_leq(na, nb)):
                return False
        return True

    __le__ = issubset

    def __ge__(self, other) -> bool:
        return other.issubset(self)

    def _cut_table(self, alpha: Degree) -> dict[str, int]:
        alpha = _as_degree(self.frame, alpha)
        return {x: c for x, d, c in self.items() if alpha.leq(d)}


class MultiFuzzySet(_FuzzyCollection):
    """Finite map ``element -> (degree, count)`` with ``count >= 0``."""

    __slots__ = ()

    def _count_leq(self, n: int, m: int) -> bool:
        return n <= m

    def union(self, other: "MultiFuzzySet") -> "MultiFuzzySet":
        return self._pointwise(other, Degree.join, max)

    def intersection(self, other: "MultiFuzzySet") -> "MultiFuzzySet":
        return self._pointwise(other, Degree.meet, min)

    __or__ = union
    __and__ = intersection

    def alpha_cut(self, alpha) -> "CrispMultiset":
        return CrispMultiset(self._cut_table(alpha))

    def to_hybrid(self) -> "HybridSet":
        return HybridSet._raw(self.frame, dict(self._entries))


class HybridSet(_FuzzyCollection):
    """Finite map ``element -> (degree, count)`` with signed counts.

    Hybrid sets do not form a lattice under subsethood, so only the sum is
    offered.  Note that the sum drops an element whose counts cancel, taking
    its degree with it; the sum is therefore associative on counts but the
    degrees of a cancelled element are not recoverable.
    """

    __slots__ = ()
    _signed = True

    def _count_leq(self, n: int, m: int) -> bool:
        return ll(n, m)

    def __neg__(self) -> "HybridSet":
        return HybridSet._raw(
            self.frame, {x: (d, -c) for x, (d, c) in self._entries.items()}
        )

    def alpha_cut(self, alpha) -> "CrispHybridSet":
        return CrispHybridSet(self._cut_table(alpha))


class CrispHybridSet:
    """A plain hybrid set: ``element -> nonzero integer``."""

    __slots__ = ("_counts",)

    _signed = True

    def __init__(self, counts: Optional[Mapping[str, int] | Iterable[str]] = None):
        if counts is None:
            counts = {}
        elif not isinstance(counts, Mapping):
            bag: dict[str, int] = {}
            for x in counts:
                bag[x] = bag.get(x, 0) + 1
            counts = bag
        table = {}
        for x, n in counts.items():
            n = int(n)
            if n < 0 and not self._signed:
                raise ValueError(f"multiset counts are nonnegative ({x}: {n})")
            if n:
                table[x] = n
        self._counts = table

    def count(self, x: str) -> int:
        return self._counts.get(x, 0)

    __getitem__ = count

    @property
    def support(self) -> frozenset:
        return frozenset(self._counts)

    def items(self) -> Iterator[tuple[str, int]]:
        for x in sorted(self._counts):
            yield x, self._counts[x]

    def as_dict(self) -> dict[str, int]:
        return dict(self.items())

    def __len__(self) -> int:
        return len(self._counts)

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._counts))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CrispHybridSet):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.as_dict()!r})"

    def _combine(self, other, op, cls=None):
        keys = self.support | other.support
        cls = cls or type(self)
        return cls({x: op(self.count(x), other.count(x)) for x in keys})

    def __add__(self, other: "CrispHybridSet") -> "CrispHybridSet":
        cls = CrispMultiset if isinstance(self, CrispMultiset) and isinstance(other, CrispMultiset) else CrispHybridSet
        return self._combine(other, int.__add__, cls)

    def __neg__(self) -> "CrispHybridSet":
        return CrispHybridSet({x: -n for x, n in self._counts.items()})

    def issubset(self, other: "CrispHybridSet") -> bool:
        return all(ll(self.count(x), other.count(x)) for x in self.support | other.support)

    __le__ = issubset

    def __ge__(self, other) -> bool:
        return other.issubset(self)


class CrispMultiset(CrispHybridSet):
    """A plain multiset: ``element -> positive integer``."""

    __slots__ = ()
    _signed = False

    def issubset(self, other: CrispHybridSet) -> bool:
        return all(self.count(x) <= other.count(x) for x in self.support | other.support)

    __le__ = issubset

    def union(self, other: "CrispMultiset") -> "CrispMultiset":
        return self._combine(other, max)

    def intersection(self, other: "CrispMultiset") -> "CrispMultiset":
        return self._combine(other, min)

    __or__ = union
    __and__ = intersection


# Function spellings, mostly for symmetry with the operator forms.


def multiplicity(A: _FuzzyCollection, x: str) -> int:
    return A.multiplicity(x)


def membership(A: _FuzzyCollection, x: str) -> Degree:
    return A.membership(x)


def cardinality(A: _FuzzyCollection) -> Fraction:
    return A.cardinality()


def strong_cardinality(A: _FuzzyCollection) -> Fraction:
    return A.strong_cardinality()


def is_subset(A, B) -> bool:
    return A.issubset(B)


def union(A: MultiFuzzySet, B: MultiFuzzySet) -> MultiFuzzySet:
    return A.union(B)


def intersection(A: MultiFuzzySet, B: MultiFuzzySet) -> MultiFuzzySet:
    return A.intersection(B)


def fuzzy_sum(A, B):
    return A.sum(B)


def alpha_cut(A, alpha):
    return A.alpha_cut(alpha)
