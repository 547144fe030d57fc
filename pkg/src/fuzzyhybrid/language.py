"""Reader and writer for ``.gfps`` system descriptions.

Example::

    # computes 5/2
    frame unit
    output 2
    membrane 1 {
      objects: a@1/2*5
      rules: a -> b!in(2)
      membrane 2 { }
    }

Grammar (whitespace-insensitive, ``#`` starts a comment)::

    system    := "frame" frameSpec "output" INT membrane
    frameSpec := "unit" | "bool" | "pair" | "powerset" "{" IDENT ("," IDENT)* "}"
    membrane  := "membrane" INT "{" item* "}"
    item      := membrane | "objects" ":" obj ("," obj)* | "rules" ":" rule (";" rule)*
    obj       := IDENT "@" degree "*" SINT
    degree    := NUM | NUM "/" NUM | "(" degree "," degree ")" | "{" [IDENT ("," IDENT)*] "}"
    rule      := lterm ("+" lterm)* "->" ("nil" | rterm ("+" rterm)*)
    lterm     := [INT] IDENT
    rterm     := [SINT] IDENT ["!" ("here" | "out" | "in" "(" INT ")")]

Parsing is all-or-nothing: :func:`parse` either returns a valid
:class:`~fuzzyhybrid.psystem.PSystem` or raises :class:`ParseError`
carrying every diagnostic found.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Optional

from .frames import Degree, Frame, FrameError, FrameKind, format_degree
from .fuzzysets import HybridSet
from .psystem import HERE, OUT, Membrane, PSystem, Rule, Target, validate

__all__ = [
    "Diagnostic",
    "ParseError",
    "SourceDocument",
    "parse",
    "parse_degree",
    "parse_file",
    "serialize",
]


@dataclass(frozen=True)
class SourceDocument:
    text: str
    origin: str = "<stdin>"


@dataclass(frozen=True)
class Diagnostic:
    line: int
    column: int
    message: str
    severity: str = "error"

    def format(self, origin: str = "<input>") -> str:
        return f"{origin}:{self.line}:{self.column}: {self.severity}: {self.message}"

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class ParseError(Exception):
    def __init__(self, diagnostics: list[Diagnostic], origin: str = "<input>"):
        self.diagnostics = diagnostics
        self.origin = origin
        super().__init__("\n".join(d.format(origin) for d in diagnostics))


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT NUM PUNCT EOF
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+|\n)
  | (?P<comment>\#[^\n]*)
  | (?P<NUM>\d+(?:\.\d+)?)
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<PUNCT>->|[{}(),:;@*/+!\-])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError([Diagnostic(line, col, f"unexpected character {text[pos]!r}")])
        kind = m.lastgroup
        if kind == "ws":
            if m.group() == "\n":
                line += 1
                line_start = m.end()
        elif kind != "comment":
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


class _Fail(Exception):
    def __init__(self, tok: Token, message: str):
        self.diag = Diagnostic(tok.line, tok.column, message)


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "EOF" else repr(tok.text)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0
        self.frame: Optional[Frame] = None
        self.errors: list[Diagnostic] = []
        # positions for semantic diagnostics
        self.membrane_tok: dict[int, Token] = {}
        self.rule_tok: dict[tuple[int, int], Token] = {}

    # -- token helpers -------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "EOF":
            self.i += 1
        return t

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind in ("PUNCT", "IDENT") and t.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise _Fail(self.tok, f"expected {text!r}, found {_describe(self.tok)}")
        return self.advance()

    def ident(self, what: str = "identifier") -> Token:
        if self.tok.kind != "IDENT":
            raise _Fail(self.tok, f"expected {what}, found {_describe(self.tok)}")
        return self.advance()

    def integer(self, signed: bool = False) -> int:
        neg = False
        start = self.tok
        if signed and self.at("-"):
            self.advance()
            neg = True
        t = self.tok
        if t.kind != "NUM" or "." in t.text:
            raise _Fail(start, f"expected integer, found {_describe(t)}")
        self.advance()
        return -int(t.text) if neg else int(t.text)

    # -- grammar -----------------------------------------------------------------

    def system(self) -> PSystem:
        self.expect("frame")
        self.frame = self.frame_spec()
        self.expect("output")
        out_tok = self.tok
        output = self.integer()
        skin = self.membrane()
        if self.tok.kind != "EOF":
            raise _Fail(self.tok, f"unexpected {_describe(self.tok)} after skin membrane")
        system = PSystem(self.frame, skin, output)
        self.semantic_checks(system, out_tok)
        return system

    def frame_spec(self) -> Frame:
        t = self.ident("frame kind")
        if t.text == "unit":
            return Frame.unit()
        if t.text == "bool":
            return Frame.boolean()
        if t.text == "pair":
            return Frame.pair()
        if t.text == "powerset":
            self.expect("{")
            atoms = [self.ident("atom").text]
            while self.at(","):
                self.advance()
                atoms.append(self.ident("atom").text)
            close = self.expect("}")
            try:
                return Frame.powerset(atoms)
            except FrameError as e:
                raise _Fail(close, str(e)) from None
        raise _Fail(t, f"unknown frame kind {t.text!r} (unit, bool, pair, powerset)")

    def membrane(self) -> Membrane:
        kw = self.expect("membrane")
        label = self.integer()
        if label in self.membrane_tok:
            self.errors.append(Diagnostic(kw.line, kw.column, "duplicate label"))
        else:
            self.membrane_tok[label] = kw
        self.expect("{")
        objects: dict = {}
        rules: list[Rule] = []
        children: list[Membrane] = []
        while not self.at("}"):
            if self.at("membrane"):
                children.append(self.membrane())
            elif self.at("objects"):
                self.advance()
                self.expect(":")
                self.obj(objects)
                while self.at(","):
                    self.advance()
                    self.obj(objects)
            elif self.at("rules"):
                self.advance()
                self.expect(":")
                rules.append(self.rule(label, len(rules)))
                while self.at(";"):
                    self.advance()
                    rules.append(self.rule(label, len(rules)))
            else:
                raise _Fail(
                    self.tok,
                    f"expected 'membrane', 'objects', 'rules' or '}}', found {_describe(self.tok)}",
                )
        self.expect("}")
        contents = HybridSet(self.frame, objects)
        return Membrane(label, contents, tuple(rules), tuple(children))

    def obj(self, into: dict) -> None:
        name = self.ident("object name")
        self.expect("@")
        deg_tok = self.tok
        raw = self.degree_raw()
        self.expect("*")
        count = self.integer(signed=True)
        try:
            deg = _build_degree(self.frame, raw)
        except FrameError as e:
            self.errors.append(
                Diagnostic(deg_tok.line, deg_tok.column, f"degree not in frame: {e}")
            )
            return
        if name.text in into:
            self.errors.append(
                Diagnostic(name.line, name.column, f"object {name.text!r} listed twice")
            )
            return
        into[name.text] = (deg, count)

    def degree_raw(self):
        """Degree syntax tree: Fraction, ('pair', a, b) or ('set', [atoms])."""
        if self.at("("):
            self.advance()
            a = self.degree_raw()
            self.expect(",")
            b = self.degree_raw()
            self.expect(")")
            return ("pair", a, b)
        if self.at("{"):
            self.advance()
            atoms = []
            if not self.at("}"):
                atoms.append(self.ident("atom").text)
                while self.at(","):
                    self.advance()
                    atoms.append(self.ident("atom").text)
            self.expect("}")
            return ("set", atoms)
        t = self.tok
        if t.kind != "NUM":
            raise _Fail(t, f"expected degree, found {_describe(t)}")
        self.advance()
        q = Fraction(Decimal(t.text))
        if self.at("/"):
            self.advance()
            d = self.tok
            if d.kind != "NUM":
                raise _Fail(d, f"expected denominator, found {_describe(d)}")
            self.advance()
            den = Fraction(Decimal(d.text))
            if den == 0:
                raise _Fail(d, "zero denominator")
            q = q / den
        return q

    def rule(self, label: int, index: int) -> Rule:
        start = self.tok
        self.rule_tok[(label, index)] = start
        lhs = [self.lterm()]
        while self.at("+"):
            self.advance()
            lhs.append(self.lterm())
        self.expect("->")
        rhs = []
        if self.at("nil"):
            self.advance()
        else:
            rhs.append(self.rterm())
            while self.at("+"):
                self.advance()
                rhs.append(self.rterm())
        for o, k in lhs:
            if k < 1:
                self.errors.append(
                    Diagnostic(start.line, start.column, f"left coefficient of {o!r} must be positive")
                )
        return Rule(tuple(lhs), tuple(rhs))

    def lterm(self) -> tuple[str, int]:
        k = 1
        if self.tok.kind == "NUM":
            k = self.integer()
        return self.ident("object name").text, k

    def rterm(self) -> tuple[str, int, Target]:
        k = 1
        first = self.tok
        if self.tok.kind == "NUM" or self.at("-"):
            k = self.integer(signed=True)
            if k == 0:
                self.errors.append(
                    Diagnostic(first.line, first.column, "right coefficient must be nonzero")
                )
        name = self.ident("object name").text
        target = HERE
        if self.at("!"):
            self.advance()
            t = self.ident("target")
            if t.text == "here":
                target = HERE
            elif t.text == "out":
                target = OUT
            elif t.text == "in":
                self.expect("(")
                j = self.integer()
                self.expect(")")
                target = Target("in", j)
            else:
                raise _Fail(t, f"unknown target {t.text!r} (here, out, in(j))")
        return name, k, target

    # -- semantics ---------------------------------------------------------------

    def semantic_checks(self, system: PSystem, out_tok: Token) -> None:
        if self.errors:
            # structural problems already reported with better positions
            return
        for v in validate(system):
            tok = out_tok
            if v.rule is not None and (v.label, v.rule) in self.rule_tok:
                tok = self.rule_tok[(v.label, v.rule)]
            elif v.label is not None and v.message != "output not elementary":
                tok = self.membrane_tok.get(v.label, out_tok)
            self.errors.append(Diagnostic(tok.line, tok.column, v.message))


def _build_degree(frame: Frame, raw) -> Degree:
    k = frame.kind
    if isinstance(raw, tuple) and raw[0] == "pair":
        if k is not FrameKind.PAIR:
            raise FrameError(f"pair degree in a {k.value} frame")
        a, b = raw[1], raw[2]
        if not isinstance(a, Fraction) or not isinstance(b, Fraction):
            raise FrameError("pair components must be numbers")
        return frame((a, b))
    if isinstance(raw, tuple) and raw[0] == "set":
        if k is not FrameKind.POWERSET:
            raise FrameError(f"set degree in a {k.value} frame")
        return frame(raw[1])
    if k in (FrameKind.PAIR, FrameKind.POWERSET):
        raise FrameError(f"number given where a {k.value} degree is expected")
    return frame(raw)


def parse(doc: SourceDocument | str, origin: Optional[str] = None) -> PSystem:
    """Parse a system description; raise :class:`ParseError` on any problem."""
    if isinstance(doc, str):
        doc = SourceDocument(doc, origin or "<input>")
    try:
        tokens = tokenize(doc.text)
    except ParseError as e:
        raise ParseError(e.diagnostics, doc.origin) from None
    p = _Parser(tokens)
    try:
        system = p.system()
    except _Fail as f:
        raise ParseError(p.errors + [f.diag], doc.origin) from None
    except RecursionError:
        t = p.tok
        raise ParseError(
            p.errors + [Diagnostic(t.line, t.column, "nesting too deep")], doc.origin
        ) from None
    if p.errors:
        raise ParseError(sorted(p.errors, key=lambda d: (d.line, d.column)), doc.origin)
    return system


def parse_file(path) -> PSystem:
    with open(path, encoding="utf-8") as fh:
        return parse(SourceDocument(fh.read(), str(path)))


def parse_degree(text: str, frame: Frame) -> Degree:
    """Read a single degree literal (``1/2``, ``0.3``, ``(1/2,1/4)``, ``{a,b}``)."""
    try:
        p = _Parser(tokenize(text))
        p.frame = frame
        raw = p.degree_raw()
        if p.tok.kind != "EOF":
            raise _Fail(p.tok, f"unexpected {_describe(p.tok)} after degree")
        return _build_degree(frame, raw)
    except _Fail as f:
        raise ParseError([f.diag], "<degree>") from None
    except FrameError as e:
        raise ParseError([Diagnostic(1, 1, f"degree not in frame: {e}")], "<degree>") from None


# -- writing ----------------------------------------------------------------------


def _write_membrane(m: Membrane, frame: Frame, indent: str, out: list[str]) -> None:
    out.append(f"{indent}membrane {m.label} {{")
    inner = indent + "  "
    contents = m.contents if m.contents is not None else HybridSet(frame)
    if contents:
        objs = ", ".join(f"{x}@{format_degree(d)}*{c}" for x, d, c in contents.items())
        out.append(f"{inner}objects: {objs}")
    if m.rules:
        out.append(f"{inner}rules: " + f";\n{inner}       ".join(str(r) for r in m.rules))
    for child in m.children:
        _write_membrane(child, frame, inner, out)
    out.append(f"{indent}}}")


def serialize(system: PSystem) -> SourceDocument:
    """Canonical text of a system; :func:`parse` reads it back unchanged."""
    lines = [f"frame {system.frame.describe()}", f"output {system.output}"]
    _write_membrane(system.skin, system.frame, "", lines)
    return SourceDocument("\n".join(lines) + "\n", "<serialized>")
