"""General fuzzy P systems.

A system is a tree of labelled membranes.  Every region holds a
:class:`~fuzzyhybrid.fuzzysets.HybridSet` of objects and a list of
evolution rules ``u -> v``.  One computation step applies, in every region
at once, a maximal multiset of rule instances:

* an instance consumes its left-hand side from the region's *positive*
  supply; negative counts never feed a rule;
* everything it produces carries the meet of the degrees of the objects it
  consumed;
* products are routed ``here``, ``out`` (to the parent, or lost when fired
  in the skin) or ``in(j)`` (to the immediate child ``j``) and merged with
  the target region by the hybrid sum.

The computation halts when no region has an applicable rule.  Its result
is the cardinality of the output region.
"""
from __future__ import annotations

import itertools
import json
import random
from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Optional, Union

from .frames import Degree, Frame, format_rational
from .fuzzysets import HybridSet

__all__ = [
    "Configuration",
    "EngineError",
    "HaltReport",
    "Membrane",
    "OutcomeLimitError",
    "PSystem",
    "Rule",
    "Target",
    "Violation",
    "applicable",
    "enumerate_step_outcomes",
    "fire",
    "initial_configuration",
    "run",
    "select_instances",
    "step",
    "validate",
]


class EngineError(Exception):
    pass


class OutcomeLimitError(EngineError):
    def __init__(self, limit: int):
        super().__init__(f"step outcome search exceeded the limit of {limit} candidates")
        self.limit = limit


# -- structure ---------------------------------------------------------------


@dataclass(frozen=True)
class Target:
    kind: str  # "here" | "out" | "in"
    label: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("here", "out", "in"):
            raise ValueError(f"unknown target {self.kind!r}")
        if (self.kind == "in") != (self.label is not None):
            raise ValueError("only an in-target names a membrane")

    def __str__(self) -> str:
        return f"in({self.label})" if self.kind == "in" else self.kind


HERE = Target("here")
OUT = Target("out")


def into(label: int) -> Target:
    return Target("in", label)


@dataclass(frozen=True)
class Rule:
    """``lhs -> rhs``.

    ``lhs`` is a tuple of ``(object, coefficient)`` pairs, sorted and
    merged on construction.  ``rhs`` is a tuple of
    ``(object, coefficient, Target)`` triples kept in the order given.
    """

    lhs: tuple
    rhs: tuple = ()

    def __post_init__(self):
        merged: Counter = Counter()
        for obj, k in self.lhs:
            merged[obj] += k
        object.__setattr__(self, "lhs", tuple(sorted(merged.items())))
        object.__setattr__(
            self,
            "rhs",
            tuple((obj, k, t if isinstance(t, Target) else _target(t)) for obj, k, t in self.rhs),
        )

    @property
    def objects(self) -> set[str]:
        return {o for o, _ in self.lhs} | {o for o, _, _ in self.rhs}

    def __str__(self) -> str:
        left = " + ".join(f"{k} {o}" for o, k in self.lhs)
        right = " + ".join(f"{k} {o}!{t}" for o, k, t in self.rhs) or "nil"
        return f"{left} -> {right}"


def _target(t) -> Target:
    if t in ("here", None):
        return HERE
    if t == "out":
        return OUT
    if isinstance(t, int):
        return into(t)
    raise ValueError(f"cannot read target {t!r}")


@dataclass(frozen=True)
class Membrane:
    label: int
    contents: Optional[HybridSet] = None
    rules: tuple = ()
    children: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(
            self, "children", tuple(sorted(self.children, key=lambda m: m.label))
        )

    def walk(self, parent: Optional[int] = None) -> Iterator[tuple["Membrane", Optional[int]]]:
        yield self, parent
        for c in self.children:
            yield from c.walk(self.label)


def _fill_contents(m: Membrane, frame: Frame) -> Membrane:
    children = tuple(_fill_contents(c, frame) for c in m.children)
    contents = m.contents if m.contents is not None else HybridSet(frame)
    if contents is m.contents and all(a is b for a, b in zip(children, m.children)):
        return m
    return Membrane(m.label, contents, m.rules, children)


@dataclass(frozen=True)
class PSystem:
    frame: Frame
    skin: Membrane
    output: int
    alphabet: Optional[frozenset] = None

    def __post_init__(self):
        object.__setattr__(self, "skin", _fill_contents(self.skin, self.frame))
        if self.alphabet is None:
            names: set[str] = set()
            for m, _ in self.skin.walk():
                if m.contents is not None:
                    names |= m.contents.support
                for r in m.rules:
                    names |= r.objects
            object.__setattr__(self, "alphabet", frozenset(names))
        else:
            object.__setattr__(self, "alphabet", frozenset(self.alphabet))

    # Derived tables; only meaningful on a valid system.

    @property
    def membranes(self) -> dict[int, Membrane]:
        return {m.label: m for m, _ in self.skin.walk()}

    @property
    def parents(self) -> dict[int, Optional[int]]:
        return {m.label: p for m, p in self.skin.walk()}

    @property
    def labels(self) -> list[int]:
        return sorted(self.membranes)

    def rules_of(self, label: int) -> tuple:
        return self.membranes[label].rules

    def contents_of(self, label: int) -> HybridSet:
        c = self.membranes[label].contents
        return c if c is not None else HybridSet(self.frame)


@dataclass(frozen=True)
class Violation:
    message: str
    label: Optional[int] = None
    rule: Optional[int] = None

    def __str__(self) -> str:
        where = []
        if self.label is not None:
            where.append(f"membrane {self.label}")
        if self.rule is not None:
            where.append(f"rule {self.rule + 1}")
        return f"{', '.join(where)}: {self.message}" if where else self.message


def validate(system: PSystem) -> list[Violation]:
    """Return every structural problem with ``system`` (empty when valid)."""
    out: list[Violation] = []
    seen: Counter = Counter()
    children: dict[int, set[int]] = {}
    for m, _ in system.skin.walk():
        seen[m.label] += 1
        if seen[m.label] == 2:
            out.append(Violation("duplicate label", m.label))
        children.setdefault(m.label, set()).update(c.label for c in m.children)
    labels = set(seen)
    expected = set(range(1, len(labels) + 1))
    if labels != expected:
        out.append(
            Violation(
                "labels must be consecutive from 1, got " + ",".join(map(str, sorted(labels)))
            )
        )
    if system.output not in labels:
        out.append(Violation(f"output membrane {system.output} does not exist"))
    elif children[system.output]:
        out.append(Violation("output not elementary", system.output))

    alpha = system.alphabet
    for m, _ in system.skin.walk():
        if m.contents is not None:
            if m.contents.frame != system.frame:
                out.append(Violation("contents use a different frame", m.label))
            for x in sorted(m.contents.support - alpha):
                out.append(Violation(f"object {x!r} not in alphabet", m.label))
        for i, r in enumerate(m.rules):
            if not r.lhs:
                out.append(Violation("empty left-hand side", m.label, i))
            for o, k in r.lhs:
                if not isinstance(k, int) or k < 1:
                    out.append(Violation(f"left coefficient of {o!r} must be positive", m.label, i))
            for o, k, t in r.rhs:
                if not isinstance(k, int) or k == 0:
                    out.append(Violation(f"right coefficient of {o!r} must be nonzero", m.label, i))
                if t.kind == "in" and t.label not in children[m.label]:
                    out.append(
                        Violation(f"target not immediate child: in({t.label})", m.label, i)
                    )
            for o in sorted(r.objects - alpha):
                out.append(Violation(f"object {o!r} not in alphabet", m.label, i))
    return out


# -- configurations -------------------------------------------------------------


@dataclass(frozen=True)
class Configuration:
    contents: tuple  # ((label, HybridSet), ...) sorted by label
    steps: int = 0

    @classmethod
    def from_mapping(cls, contents: Mapping[int, HybridSet], steps: int = 0) -> "Configuration":
        return cls(tuple(sorted(contents.items())), steps)

    def __getitem__(self, label: int) -> HybridSet:
        for lab, c in self.contents:
            if lab == label:
                return c
        raise KeyError(f"no region labelled {label}")

    def as_dict(self) -> dict[int, HybridSet]:
        return dict(self.contents)

    def __str__(self) -> str:
        return "; ".join(f"[{lab}] {str(c) or '{}'}" for lab, c in self.contents)


def initial_configuration(system: PSystem) -> Configuration:
    return Configuration.from_mapping({lab: system.contents_of(lab) for lab in system.labels})


def _supply(region: HybridSet) -> dict[str, int]:
    return {x: c for x, _, c in region.items() if c > 0}


def _fits(rule: Rule, supply: Mapping[str, int]) -> bool:
    return all(supply.get(o, 0) >= k for o, k in rule.lhs)


def applicable(config: Configuration, system: PSystem, label: int) -> list[int]:
    """Indices of the rules of region ``label`` that can fire at least once."""
    if label not in system.membranes:
        raise EngineError(f"no region labelled {label}")
    supply = _supply(config[label])
    return [i for i, r in enumerate(system.rules_of(label)) if _fits(r, supply)]


# Selection maps each region label to a Counter {rule index: instances}.
Selection = dict


def select_instances(
    config: Configuration, system: PSystem, rng: Union[random.Random, int, None] = None
) -> Selection:
    """Greedy-random maximal choice of rule instances for every region."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    chosen: Selection = {}
    for label in system.labels:
        rules = system.rules_of(label)
        supply = _supply(config[label])
        picked: Counter = Counter()
        while True:
            addable = [i for i, r in enumerate(rules) if _fits(r, supply)]
            if not addable:
                break
            i = rng.choice(addable)
            for o, k in rules[i].lhs:
                supply[o] -= k
            picked[i] += 1
        if picked:
            chosen[label] = picked
    return chosen


def fire(config: Configuration, system: PSystem, selection: Selection) -> Configuration:
    """Apply a selection of instances simultaneously."""
    frame = system.frame
    parents = system.parents
    regions = config.as_dict()
    residue: dict[int, dict[str, tuple[Degree, int]]] = {
        lab: {x: (d, c) for x, d, c in h.items()} for lab, h in regions.items()
    }
    # deposits[label][obj] = [joined degree, summed count]
    deposits: dict[int, dict[str, list]] = {lab: {} for lab in regions}

    for label, picked in selection.items():
        rules = system.rules_of(label)
        region = regions[label]
        for i, times in picked.items():
            rule = rules[i]
            delta = frame.top
            for o, k in rule.lhs:
                delta = delta.meet(region.membership(o))
                d, c = residue[label][o]
                residue[label][o] = (d, c - k * times)
            for o, k, t in rule.rhs:
                if t.kind == "here":
                    dest = label
                elif t.kind == "out":
                    dest = parents[label]
                    if dest is None:
                        continue  # leaves the skin
                else:
                    dest = t.label
                slot = deposits[dest].setdefault(o, [frame.bottom, 0])
                slot[0] = slot[0].join(delta)
                slot[1] += k * times

    new = {}
    for lab in regions:
        base = HybridSet._raw(frame, residue[lab])
        incoming = HybridSet._raw(frame, {o: (d, n) for o, (d, n) in deposits[lab].items()})
        new[lab] = base + incoming
    return Configuration.from_mapping(new, config.steps + 1)


def step(
    config: Configuration, system: PSystem, rng: Union[random.Random, int, None] = None
) -> Optional[Configuration]:
    """One maximally parallel step, or ``None`` if nothing can fire."""
    selection = select_instances(config, system, rng)
    if not selection:
        return None
    return fire(config, system, selection)


def _maximal_vectors(rules: tuple, supply: dict[str, int], budget: list) -> Iterator[tuple]:
    """All maximal instance-count vectors for one region."""
    n = len(rules)

    def rec(i: int, left: dict[str, int], acc: list):
        budget[0] -= 1
        if budget[0] < 0:
            raise OutcomeLimitError(budget[1])
        if i == n:
            if not any(_fits(r, left) for r in rules):
                yield tuple(acc)
            return
        rule = rules[i]
        most = min((left.get(o, 0) // k for o, k in rule.lhs), default=0)
        for times in range(most + 1):
            nxt = dict(left)
            for o, k in rule.lhs:
                nxt[o] = nxt.get(o, 0) - k * times
            acc.append(times)
            yield from rec(i + 1, nxt, acc)
            acc.pop()

    yield from rec(0, dict(supply), [])


def enumerate_step_outcomes(
    config: Configuration, system: PSystem, limit: int = 10_000
) -> set[Configuration]:
    """Every configuration reachable by one maximally parallel step.

    Exhaustive; raises :class:`OutcomeLimitError` once more than ``limit``
    candidate choices have been examined.
    """
    budget = [limit, limit]
    per_region = []
    for label in system.labels:
        rules = system.rules_of(label)
        vectors = list(_maximal_vectors(rules, _supply(config[label]), budget))
        per_region.append([(label, v) for v in vectors])
    if all(all(k == 0 for k in v) for opts in per_region for _, v in opts):
        return set()
    outcomes = set()
    for combo in itertools.product(*per_region):
        budget[0] -= 1
        if budget[0] < 0:
            raise OutcomeLimitError(limit)
        selection = {}
        for label, vec in combo:
            picked = Counter({i: t for i, t in enumerate(vec) if t})
            if picked:
                selection[label] = picked
        outcomes.add(fire(config, system, selection))
    return outcomes


# -- running ---------------------------------------------------------------------


def decimal_text(q: Fraction, digits: int = 12) -> str:
    """Decimal approximation of ``q`` without trailing zeros."""
    with localcontext() as ctx:
        ctx.prec = digits
        d = (Decimal(q.numerator) / Decimal(q.denominator)).normalize()
    text = f"{d:f}"
    return "0" if text in ("-0", "0") else text


@dataclass(frozen=True)
class HaltReport:
    halted: bool
    steps: int
    result: Fraction
    strong_result: Fraction
    final: Configuration = field(repr=False)

    def to_text(self) -> str:
        return (
            f"halted={'true' if self.halted else 'false'} steps={self.steps} "
            f"result={format_rational(self.result)} ({decimal_text(self.result)}) "
            f"strong={format_rational(self.strong_result)}"
        )

    def to_record(self) -> str:
        """Single-line JSON record."""
        return json.dumps(
            {
                "halted": self.halted,
                "steps": self.steps,
                "result": format_rational(self.result),
                "result_decimal": decimal_text(self.result),
                "strong": format_rational(self.strong_result),
                "strong_decimal": decimal_text(self.strong_result),
            },
            separators=(",", ":"),
        )


Tracer = Callable[[int, Selection, Configuration], None]


def run(
    system: PSystem,
    seed: Union[int, random.Random, None] = 0,
    max_steps: int = 10_000,
    trace: Optional[Tracer] = None,
    config: Optional[Configuration] = None,
) -> HaltReport:
    """Step until halting or until ``max_steps`` steps have been taken.

    ``trace(step_number, selection, new_config)`` is called after every step.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be nonnegative")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    cfg = config if config is not None else initial_configuration(system)
    halted = False
    while True:
        selection = select_instances(cfg, system, rng)
        if not selection:
            halted = True
            break
        if cfg.steps >= max_steps:
            break
        cfg = fire(cfg, system, selection)
        if trace is not None:
            trace(cfg.steps, selection, cfg)
    out = cfg[system.output]
    return HaltReport(halted, cfg.steps, out.cardinality(), out.strong_cardinality(), cfg)
