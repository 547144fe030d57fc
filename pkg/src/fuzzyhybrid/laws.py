"""Randomised and exhaustive checks of the algebraic laws.

Used by the ``laws`` command and by the test-suite.  Every checker
returns :class:`LawResult` records; nothing here raises on a failed law.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .frames import Degree, Frame, FrameKind
from .fuzzysets import HybridSet, MultiFuzzySet

_DENOMINATORS = (1, 2, 3, 4, 5, 6, 8, 10, 12, 100)


@dataclass
class LawResult:
    name: str
    cases: int
    failures: int
    counterexample: Optional[tuple] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} ({self.cases} cases, {self.failures} failures)"


# -- generators -------------------------------------------------------------------


def random_rational(rng: random.Random) -> Fraction:
    q = rng.choice(_DENOMINATORS)
    return Fraction(rng.randint(0, q), q)


def random_degree(frame: Frame, rng: random.Random) -> Degree:
    k = frame.kind
    if k is FrameKind.BOOL:
        return frame(rng.randint(0, 1))
    if k is FrameKind.UNIT:
        return frame(random_rational(rng))
    if k is FrameKind.PAIR:
        return frame((random_rational(rng), random_rational(rng)))
    return frame(a for a in frame.universe if rng.random() < 0.5)


def random_multifuzzy(
    frame: Frame, rng: random.Random, names: Sequence[str] = "abcd", max_count: int = 4
) -> MultiFuzzySet:
    table = {}
    for x in names:
        if rng.random() < 0.7:
            table[x] = (random_degree(frame, rng), rng.randint(1, max_count))
    return MultiFuzzySet(frame, table)


def random_hybrid(
    frame: Frame, rng: random.Random, names: Sequence[str] = "abcd", max_count: int = 4
) -> HybridSet:
    table = {}
    for x in names:
        if rng.random() < 0.7:
            n = rng.randint(1, max_count) * rng.choice((1, -1))
            table[x] = (random_degree(frame, rng), n)
    return HybridSet(frame, table)


def random_leq_pair(frame: Frame, rng: random.Random) -> tuple[Degree, Degree]:
    """A random pair ``alpha <= beta``."""
    a, b = random_degree(frame, rng), random_degree(frame, rng)
    hi = a.join(b) if rng.random() < 0.5 else b
    return a.meet(b), hi


# -- frame laws -------------------------------------------------------------------

FRAME_LAWS: list[tuple[str, int, Callable[..., bool]]] = [
    ("join idempotent", 1, lambda x: x.join(x) == x),
    ("meet idempotent", 1, lambda x: x.meet(x) == x),
    ("join commutative", 2, lambda x, y: x.join(y) == y.join(x)),
    ("meet commutative", 2, lambda x, y: x.meet(y) == y.meet(x)),
    ("join associative", 3, lambda x, y, z: x.join(y.join(z)) == x.join(y).join(z)),
    ("meet associative", 3, lambda x, y, z: x.meet(y.meet(z)) == x.meet(y).meet(z)),
    ("absorption meet/join", 2, lambda x, y: x.meet(x.join(y)) == x),
    ("absorption join/meet", 2, lambda x, y: x.join(x.meet(y)) == x),
    (
        "meet distributes over join",
        3,
        lambda x, y, z: x.meet(y.join(z)) == x.meet(y).join(x.meet(z)),
    ),
    (
        "order agrees with join and meet",
        2,
        lambda x, y: x.leq(y) == (x.join(y) == y) == (x.meet(y) == x),
    ),
    (
        "bottom <= x <= top",
        1,
        lambda x: x.frame.bottom.leq(x) and x.leq(x.frame.top),
    ),
    (
        "scalar linear in the count",
        1,
        lambda x: all(
            x.scalar(m + n) == x.scalar(m) + x.scalar(n) for m in (-3, 0, 2) for n in (-1, 4)
        ),
    ),
]


def _run(name, arity, law, cases: Iterable[tuple]) -> LawResult:
    total = fails = 0
    example = None
    for args in cases:
        total += 1
        if not law(*args):
            fails += 1
            if example is None:
                example = args
    return LawResult(name, total, fails, example)


def check_frame_laws(frame: Frame, samples: int = 10_000, seed: int = 0) -> list[LawResult]:
    """Exhaustive on finite frames, ``samples`` random tuples otherwise."""
    rng = random.Random(seed)
    results = []
    for name, arity, law in FRAME_LAWS:
        if frame.is_finite:
            cases = itertools.product(list(frame.elements()), repeat=arity)
        else:
            cases = (
                tuple(random_degree(frame, rng) for _ in range(arity)) for _ in range(samples)
            )
        results.append(_run(name, arity, law, cases))
    return results


# -- set laws ---------------------------------------------------------------------

SET_LAWS: list[tuple[str, int, Callable[..., bool]]] = [
    ("union commutative", 2, lambda A, B: A | B == B | A),
    ("intersection commutative", 2, lambda A, B: A & B == B & A),
    ("sum commutative", 2, lambda A, B: A + B == B + A),
    ("union associative", 3, lambda A, B, C: A | (B | C) == (A | B) | C),
    ("intersection associative", 3, lambda A, B, C: A & (B & C) == (A & B) & C),
    ("sum associative", 3, lambda A, B, C: A + (B + C) == (A + B) + C),
    ("union idempotent", 1, lambda A: A | A == A),
    ("intersection idempotent", 1, lambda A: A & A == A),
    (
        "intersection distributes over union",
        3,
        lambda A, B, C: A & (B | C) == (A & B) | (A & C),
    ),
    (
        "union distributes over intersection",
        3,
        lambda A, B, C: A | (B & C) == (A | B) & (A | C),
    ),
    ("sum distributes over union", 3, lambda A, B, C: A + (B | C) == (A + B) | (A + C)),
    (
        "sum distributes over intersection",
        3,
        lambda A, B, C: A + (B & C) == (A + B) & (A + C),
    ),
    ("subset iff union absorbs", 2, lambda A, B: A.issubset(B) == (A | B == B) == (A & B == A)),
]

HYBRID_LAWS: list[tuple[str, int, Callable[..., bool]]] = [
    ("hybrid sum commutative", 2, lambda A, B: A + B == B + A),
    (
        "hybrid sum associative on counts",
        3,
        lambda A, B, C: all(
            (A + (B + C)).multiplicity(x) == ((A + B) + C).multiplicity(x)
            for x in A.support | B.support | C.support
        ),
    ),
    ("hybrid sum identity", 1, lambda A: A + HybridSet(A.frame) == A),
    ("hybrid additive inverse", 1, lambda A: not (A + -A)),
    ("hybrid subset reflexive", 1, lambda A: A.issubset(A)),
]


def check_set_laws(frame: Frame, samples: int = 1000, seed: int = 0) -> list[LawResult]:
    rng = random.Random(seed)
    results = []
    for name, arity, law in SET_LAWS:
        cases = (
            tuple(random_multifuzzy(frame, rng) for _ in range(arity)) for _ in range(samples)
        )
        results.append(_run(name, arity, law, cases))
    for name, arity, law in HYBRID_LAWS:
        cases = (tuple(random_hybrid(frame, rng) for _ in range(arity)) for _ in range(samples))
        results.append(_run(name, arity, law, cases))
    return results


# -- alpha-cut laws ---------------------------------------------------------------


def _cut_cases(frame, rng, samples, gen, arity):
    for _ in range(samples):
        yield (random_degree(frame, rng),) + tuple(gen(frame, rng) for _ in range(arity))


def cut_union_law(alpha, A, B) -> bool:
    return (A | B).alpha_cut(alpha) == A.alpha_cut(alpha) | B.alpha_cut(alpha)


def cut_sum_law(alpha, A, B) -> bool:
    return (A + B).alpha_cut(alpha) == A.alpha_cut(alpha) + B.alpha_cut(alpha)


def cut_intersection_law(alpha, A, B) -> bool:
    return (A & B).alpha_cut(alpha) == A.alpha_cut(alpha) & B.alpha_cut(alpha)


def check_cut_laws(frame: Frame, samples: int = 1000, seed: int = 0) -> list[LawResult]:
    """Alpha-cut laws that hold on every frame."""
    rng = random.Random(seed)

    def antitone(gen):
        for _ in range(samples):
            a, b = random_leq_pair(frame, rng)
            yield a, b, gen(frame, rng)

    return [
        _run(
            "cut antitone (multi-fuzzy)",
            3,
            lambda a, b, A: A.alpha_cut(b).issubset(A.alpha_cut(a)),
            antitone(random_multifuzzy),
        ),
        _run(
            "cut antitone (hybrid)",
            3,
            lambda a, b, A: A.alpha_cut(b).issubset(A.alpha_cut(a)),
            antitone(random_hybrid),
        ),
        _run(
            "cut commutes with intersection",
            3,
            cut_intersection_law,
            _cut_cases(frame, rng, samples, random_multifuzzy, 2),
        ),
        _run(
            "cut of union contains union of cuts",
            3,
            lambda a, A, B: (A.alpha_cut(a) | B.alpha_cut(a)).issubset((A | B).alpha_cut(a)),
            _cut_cases(frame, rng, samples, random_multifuzzy, 2),
        ),
        _run(
            "cut of sum contains sum of cuts",
            3,
            lambda a, A, B: (A.alpha_cut(a) + B.alpha_cut(a)).issubset((A + B).alpha_cut(a)),
            _cut_cases(frame, rng, samples, random_multifuzzy, 2),
        ),
    ]


def check_all(frame: Frame, seed: int = 0) -> list[LawResult]:
    return (
        check_frame_laws(frame, seed=seed)
        + check_set_laws(frame, seed=seed)
        + check_cut_laws(frame, seed=seed)
    )
