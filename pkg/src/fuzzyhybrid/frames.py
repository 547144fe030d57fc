"""Degree algebras (frames) and their values.

Four finite-presentable frames are shipped:

* ``bool``      -- the two-element chain ``0 < 1``
* ``unit``      -- the rational unit interval with its numeric order
* ``pair``      -- pairs ``(i, j)`` of unit-interval rationals ordered
                   intuitionistically: membership goes up, non-membership down
* ``powerset``  -- subsets of a small named universe ordered by inclusion

All arithmetic is exact (:class:`fractions.Fraction`).  A :class:`Degree`
remembers the :class:`Frame` it belongs to and every binary operation
refuses to mix frames.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional

MAX_POWERSET_ATOMS = 16


class FrameError(ValueError):
    """A degree or frame declaration is malformed."""


class FrameMismatchError(FrameError):
    """Two degrees from different frames were combined."""


class FrameKind(enum.Enum):
    BOOL = "bool"
    UNIT = "unit"
    PAIR = "pair"
    POWERSET = "powerset"


@dataclass(frozen=True)
class Frame:
    """Descriptor of a degree lattice.

    ``universe`` and ``weights`` are only meaningful for the powerset kind.
    ``weights`` maps atoms to exact rationals; the value of a subset is the
    sum of its atoms' weights.  Without weights every atom counts
    ``1/len(universe)``.
    """

    kind: FrameKind
    universe: tuple[str, ...] = ()
    weights: Optional[tuple[tuple[str, Fraction], ...]] = None
    _atoms: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(self.universe))
        if self.kind is FrameKind.POWERSET:
            if not self.universe:
                raise FrameError("powerset frame needs a nonempty universe")
            if len(set(self.universe)) != len(self.universe):
                raise FrameError("powerset universe has duplicate atoms")
            if len(self.universe) > MAX_POWERSET_ATOMS:
                raise FrameError(
                    f"powerset universe limited to {MAX_POWERSET_ATOMS} atoms"
                )
        elif self.universe or self.weights is not None:
            raise FrameError(f"{self.kind.value} frame takes no universe")
        if self.weights is not None:
            table = {a: Fraction(w) for a, w in dict(self.weights).items()}
            unknown = set(table) - set(self.universe)
            if unknown:
                raise FrameError(f"weights for unknown atoms {sorted(unknown)}")
            object.__setattr__(
                self,
                "weights",
                tuple((a, table.get(a, Fraction(0))) for a in self.universe),
            )
        object.__setattr__(self, "_atoms", frozenset(self.universe))

    # -- constructors -----------------------------------------------------

    @classmethod
    def boolean(cls) -> "Frame":
        return cls(FrameKind.BOOL)

    @classmethod
    def unit(cls) -> "Frame":
        return cls(FrameKind.UNIT)

    @classmethod
    def pair(cls) -> "Frame":
        return cls(FrameKind.PAIR)

    @classmethod
    def powerset(
        cls, universe: Iterable[str], weights: Optional[Mapping[str, object]] = None
    ) -> "Frame":
        w = None
        if weights is not None:
            w = tuple((a, Fraction(v)) for a, v in weights.items())
        return cls(FrameKind.POWERSET, tuple(universe), w)

    # -- values -----------------------------------------------------------

    def __call__(self, payload) -> "Degree":
        """Build a degree of this frame from a loose payload.

        Accepts ints/Fractions/decimal strings for ``unit`` and ``bool``,
        2-sequences for ``pair`` and iterables of atom names for
        ``powerset``.
        """
        k = self.kind
        if k is FrameKind.BOOL:
            if isinstance(payload, bool):
                payload = int(payload)
            q = Fraction(payload)
            if q not in (0, 1):
                raise FrameError(f"{payload!r} is not a boolean degree")
            return Degree(self, q == 1)
        if k is FrameKind.UNIT:
            return Degree(self, _unit_rational(payload))
        if k is FrameKind.PAIR:
            try:
                i, j = payload
            except (TypeError, ValueError):
                raise FrameError(f"{payload!r} is not a pair degree") from None
            return Degree(self, (_unit_rational(i), _unit_rational(j)))
        if isinstance(payload, str):
            raise FrameError("powerset degree must be a collection of atoms")
        s = frozenset(payload)
        extra = s - self._atoms
        if extra:
            raise FrameError(f"atoms {sorted(extra)} not in the frame's universe")
        return Degree(self, s)

    @property
    def bottom(self) -> "Degree":
        k = self.kind
        if k is FrameKind.BOOL:
            return Degree(self, False)
        if k is FrameKind.UNIT:
            return Degree(self, Fraction(0))
        if k is FrameKind.PAIR:
            return Degree(self, (Fraction(0), Fraction(1)))
        return Degree(self, frozenset())

    @property
    def top(self) -> "Degree":
        k = self.kind
        if k is FrameKind.BOOL:
            return Degree(self, True)
        if k is FrameKind.UNIT:
            return Degree(self, Fraction(1))
        if k is FrameKind.PAIR:
            return Degree(self, (Fraction(1), Fraction(0)))
        return Degree(self, self._atoms)

    @property
    def is_chain(self) -> bool:
        """True for the totally ordered frames (bool, unit)."""
        return self.kind in (FrameKind.BOOL, FrameKind.UNIT)

    @property
    def is_finite(self) -> bool:
        return self.kind in (FrameKind.BOOL, FrameKind.POWERSET)

    def elements(self) -> Iterator["Degree"]:
        """Enumerate a finite frame (bool or powerset)."""
        if self.kind is FrameKind.BOOL:
            yield Degree(self, False)
            yield Degree(self, True)
        elif self.kind is FrameKind.POWERSET:
            u = self.universe
            for r in range(len(u) + 1):
                for combo in itertools.combinations(u, r):
                    yield Degree(self, frozenset(combo))
        else:
            raise FrameError(f"{self.kind.value} frame is infinite")

    def weight(self, subset: frozenset) -> Fraction:
        if self.weights is None:
            return Fraction(len(subset), len(self.universe))
        table = dict(self.weights)
        return sum((table[a] for a in subset), Fraction(0))

    def describe(self) -> str:
        """Header text as used in system files (``unit``, ``powerset {a,b}``)."""
        if self.kind is FrameKind.POWERSET:
            return "powerset {" + ",".join(self.universe) + "}"
        return self.kind.value


def _unit_rational(x) -> Fraction:
    try:
        q = Fraction(x)
    except (TypeError, ValueError):
        raise FrameError(f"{x!r} is not a rational number") from None
    if not 0 <= q <= 1:
        raise FrameError(f"{x!r} lies outside [0, 1]")
    return q


@dataclass(frozen=True)
class Degree:
    """An element of a :class:`Frame`.

    Build degrees through the frame (``Frame.unit()("1/2")``); the raw
    constructor trusts its payload.
    """

    frame: Frame
    value: object

    def _check(self, other: "Degree") -> None:
        if not isinstance(other, Degree):
            raise TypeError(f"expected a Degree, got {type(other).__name__}")
        if other.frame != self.frame:
            raise FrameMismatchError(
                f"cannot combine {self.frame.describe()} and "
                f"{other.frame.describe()} degrees"
            )

    def leq(self, other: "Degree") -> bool:
        self._check(other)
        k = self.frame.kind
        a, b = self.value, other.value
        if k is FrameKind.PAIR:
            return a[0] <= b[0] and a[1] >= b[1]
        if k is FrameKind.POWERSET:
            return a <= b
        return a <= b

    def join(self, other: "Degree") -> "Degree":
        self._check(other)
        k = self.frame.kind
        a, b = self.value, other.value
        if k is FrameKind.BOOL:
            return Degree(self.frame, a or b)
        if k is FrameKind.UNIT:
            return Degree(self.frame, max(a, b))
        if k is FrameKind.PAIR:
            return Degree(self.frame, (max(a[0], b[0]), min(a[1], b[1])))
        return Degree(self.frame, a | b)

    def meet(self, other: "Degree") -> "Degree":
        self._check(other)
        k = self.frame.kind
        a, b = self.value, other.value
        if k is FrameKind.BOOL:
            return Degree(self.frame, a and b)
        if k is FrameKind.UNIT:
            return Degree(self.frame, min(a, b))
        if k is FrameKind.PAIR:
            return Degree(self.frame, (min(a[0], b[0]), max(a[1], b[1])))
        return Degree(self.frame, a & b)

    __le__ = leq
    __or__ = join
    __and__ = meet

    def __lt__(self, other: "Degree") -> bool:
        return self.leq(other) and self != other

    def __ge__(self, other: "Degree") -> bool:
        return other.leq(self)

    def __gt__(self, other: "Degree") -> bool:
        return other < self

    def scalar(self, n: int) -> Fraction:
        """Product of this degree with an integer multiplicity.

        unit: ``q * n``; bool: ``n`` or ``0``; pair ``(i, j)``: ``i*n - j*n``;
        powerset ``S``: ``n`` times the frame's weight of ``S``.
        """
        k = self.frame.kind
        v = self.value
        if k is FrameKind.BOOL:
            return Fraction(n) if v else Fraction(0)
        if k is FrameKind.UNIT:
            return v * n
        if k is FrameKind.PAIR:
            return v[0] * n - v[1] * n
        return self.frame.weight(v) * n

    def __str__(self) -> str:
        return format_degree(self)

    def __repr__(self) -> str:
        return f"<{self.frame.describe()} {format_degree(self)}>"


def format_rational(q: Fraction) -> str:
    """Canonical exact rendering: ``3``, ``-2``, ``1/2``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_degree(d: Degree) -> str:
    k = d.frame.kind
    if k is FrameKind.BOOL:
        return "1" if d.value else "0"
    if k is FrameKind.UNIT:
        return format_rational(d.value)
    if k is FrameKind.PAIR:
        i, j = d.value
        return f"({format_rational(i)},{format_rational(j)})"
    return "{" + ",".join(a for a in d.frame.universe if a in d.value) + "}"


# Free-function spellings of the lattice operations.


def leq(a: Degree, b: Degree) -> bool:
    return a.leq(b)


def join(a: Degree, b: Degree) -> Degree:
    return a.join(b)


def meet(a: Degree, b: Degree) -> Degree:
    return a.meet(b)


def bottom(frame: Frame) -> Degree:
    return frame.bottom


def top(frame: Frame) -> Degree:
    return frame.top


def scalar(a: Degree, n: int) -> Fraction:
    return a.scalar(n)
