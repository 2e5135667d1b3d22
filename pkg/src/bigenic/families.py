"""Named graph families and a small expression language for them.

Grammar (whitespace ignored)::

    expr  := term ('+' term)*
    term  := [int] atom
    atom  := 'P' int | 'C' int | 'K' int | 'K' int ',' int
           | 'S' int ',' int ',' int | 'T' int ',' int ',' int
           | name | 'co(' expr ')'

``co`` is the complement, ``+`` the disjoint union and a leading integer
a multiplicity, so ``co(C3+2P1)`` is the complement of a triangle plus two
isolated vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union as _U

from .errors import ResourceLimitError, ValidationError
from .graph import MAX_VERTICES, Graph, complement, disjoint_union

ALIASES = {
    "claw": "S1,1,1",
    "fork": "S1,1,2",
    "chair": "S1,1,2",
    "paw": "T0,0,1",
    "bull": "T0,1,1",
    "net": "T1,1,1",
    "hammer": "T0,0,2",
}


class FamilySyntaxError(ValidationError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.pos = pos


@dataclass(frozen=True)
class Atom:
    kind: str  # one of P, C, K, S, T
    params: tuple[int, ...]

    def __post_init__(self):
        _check_atom(self.kind, self.params)

    def __str__(self):
        return self.kind + ",".join(map(str, self.params))


@dataclass(frozen=True)
class Named:
    name: str

    def __post_init__(self):
        if self.name not in ALIASES:
            raise ValidationError(f"unknown graph name {self.name!r}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Union:
    terms: tuple[tuple[int, "FamilyExpr"], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValidationError("empty union")
        for mult, _ in self.terms:
            if mult < 1:
                raise ValidationError(f"multiplicity must be >= 1, got {mult}")

    def __str__(self):
        return "+".join(("" if m == 1 else str(m)) + str(e) for m, e in self.terms)


@dataclass(frozen=True)
class Complement:
    inner: "FamilyExpr"

    def __str__(self):
        return f"co({self.inner})"


FamilyExpr = _U[Atom, Named, Union, Complement]


def _check_atom(kind: str, params: tuple[int, ...]) -> None:
    def fail(bound: str):
        raise ValidationError(f"{kind}{','.join(map(str, params))}: requires {bound}")

    if kind == "P":
        if len(params) != 1 or params[0] < 1:
            fail("P_r with r >= 1")
    elif kind == "C":
        if len(params) != 1 or params[0] < 3:
            fail("C_r with r >= 3")
    elif kind == "K":
        if len(params) == 1:
            if params[0] < 1:
                fail("K_r with r >= 1")
        elif len(params) == 2:
            if min(params) < 1:
                fail("K_r,s with r, s >= 1")
        else:
            fail("K_r or K_r,s")
    elif kind == "S":
        if len(params) != 3:
            fail("three parameters h,i,j")
        h, i, j = params
        if not 1 <= h <= i <= j:
            fail("1 <= h <= i <= j")
    elif kind == "T":
        if len(params) != 3:
            fail("three parameters h,i,j")
        h, i, j = params
        if not 0 <= h <= i <= j:
            fail("0 <= h <= i <= j")
    else:
        raise ValidationError(f"unknown atom kind {kind!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.s = "".join(text.split())
        # Map positions in the stripped string back to the original text.
        self.where = [i for i, c in enumerate(text) if not c.isspace()] + [len(text)]
        self.pos = 0

    def error(self, message: str):
        raise FamilySyntaxError(message, self.text, self.where[min(self.pos, len(self.s))])

    def peek(self) -> str:
        return self.s[self.pos] if self.pos < len(self.s) else ""

    def int(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.s[start:self.pos])

    def parse(self) -> FamilyExpr:
        if not self.s:
            self.error("empty expression")
        expr = self.expr()
        if self.pos != len(self.s):
            self.error(f"unexpected {self.peek()!r}")
        return expr

    def expr(self) -> FamilyExpr:
        terms = [self.term()]
        while self.peek() == "+":
            self.pos += 1
            terms.append(self.term())
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Union(tuple(terms))

    def term(self) -> tuple[int, FamilyExpr]:
        mult = self.int() if self.peek().isdigit() else 1
        if mult < 1:
            self.error("multiplicity must be >= 1")
        return mult, self.atom()

    def atom(self) -> FamilyExpr:
        c = self.peek()
        if c in ("P", "C", "K", "S", "T"):
            start = self.pos
            self.pos += 1
            params = [self.int()]
            while self.peek() == ",":
                self.pos += 1
                params.append(self.int())
            try:
                return Atom(c, tuple(params))
            except ValidationError as exc:
                raise ValidationError(f"{exc} (at position {self.where[start]})") from None
        if c.isalpha() and c.islower():
            start = self.pos
            while self.peek().isalpha() and self.peek().islower():
                self.pos += 1
            word = self.s[start:self.pos]
            if word == "co":
                if self.peek() != "(":
                    self.error("expected '(' after co")
                self.pos += 1
                inner = self.expr()
                if self.peek() != ")":
                    self.error("expected ')'")
                self.pos += 1
                return Complement(inner)
            if word not in ALIASES:
                self.pos = start
                self.error(f"unknown graph name {word!r}")
            return Named(word)
        self.error("expected a graph atom" if c else "unexpected end of expression")


def parse_family(text: str) -> FamilyExpr:
    """Parse an expression; a lone term without multiplicity is returned bare."""
    return _Parser(text).parse()


def format_family(expr: FamilyExpr) -> str:
    return str(expr)


# -- constructors ----------------------------------------------------------


def path(r: int) -> Graph:
    return Graph.from_edges(r, [(v, v + 1) for v in range(r - 1)])


def cycle(r: int) -> Graph:
    return Graph.from_edges(r, [(v, (v + 1) % r) for v in range(r)])


def clique(r: int) -> Graph:
    return Graph.from_edges(r, [(u, v) for u in range(r) for v in range(u + 1, r)])


def complete_bipartite(r: int, s: int) -> Graph:
    return Graph.from_edges(r + s, [(u, r + v) for u in range(r) for v in range(s)])


def subdivided_claw(h: int, i: int, j: int) -> Graph:
    """Centre 0, then the three legs outward in order h, i, j."""
    edges = []
    nxt = 1
    for length in (h, i, j):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def t_graph(h: int, i: int, j: int) -> Graph:
    """Triangle a0 b0 c0 with pendant paths; vertices a0..ah, b0..bi, c0..cj."""
    a0, b0, c0 = 0, h + 1, h + i + 2
    edges = [(a0, b0), (b0, c0), (c0, a0)]
    for start, length in ((a0, h), (b0, i), (c0, j)):
        edges.extend((start + p, start + p + 1) for p in range(length))
    return Graph.from_edges(h + i + j + 3, edges)


def _size(expr: FamilyExpr) -> int:
    if isinstance(expr, Atom):
        p = expr.params
        if expr.kind == "K" and len(p) == 2:
            return p[0] + p[1]
        if expr.kind == "S":
            return sum(p) + 1
        if expr.kind == "T":
            return sum(p) + 3
        return p[0]
    if isinstance(expr, Named):
        return _size(parse_family(ALIASES[expr.name]))
    if isinstance(expr, Complement):
        return _size(expr.inner)
    return sum(m * _size(e) for m, e in expr.terms)


def realize(expr: FamilyExpr | str) -> Graph:
    """Concrete graph for an expression (strings are parsed first)."""
    if isinstance(expr, str):
        expr = parse_family(expr)
    size = _size(expr)
    if size > MAX_VERTICES:
        raise ResourceLimitError(f"expression {expr} has {size} vertices, limit is {MAX_VERTICES}")
    return _realize(expr)


def _realize(expr: FamilyExpr) -> Graph:
    if isinstance(expr, Atom):
        p = expr.params
        if expr.kind == "P":
            return path(p[0])
        if expr.kind == "C":
            return cycle(p[0])
        if expr.kind == "K":
            return clique(p[0]) if len(p) == 1 else complete_bipartite(*p)
        if expr.kind == "S":
            return subdivided_claw(*p)
        return t_graph(*p)
    if isinstance(expr, Named):
        return _realize(parse_family(ALIASES[expr.name]))
    if isinstance(expr, Complement):
        return complement(_realize(expr.inner))
    return disjoint_union(*(_realize(e) for m, e in expr.terms for _ in range(m)))


FIXTURES = (
    "K1,3", "C4", "4P1", "2P1+P2", "co(C4+P1)", "P5", "co(C3+2P1)", "co(C3+P2)",
    "co(P1+2P2)", "paw", "bull", "net", "hammer", "2P2", "3P2", "T0,2,2", "2C3",
    "C3+P4", "2P4", "T0,0,4",
)


def catalog_fixtures() -> dict[str, Graph]:
    """Every graph the acceptance fixtures refer to, keyed by expression."""
    return {name: realize(name) for name in FIXTURES}
