"""Group expressions: ``C4 x C2``, ``C3^2:Q8@sl23_q8``, ``PSL(2,7)``.

Grammar (whitespace is ignored)::

    expr    := term ("x" term)*
    term    := factor (":" factor "@" NAME)?
    factor  := primary ("^" INT)?
    primary := atom | "(" expr ")"

Atoms are ``C n`` (cyclic of order n), ``D n`` (dihedral of order n),
``Q n`` (generalized quaternion of order n), ``S n`` / ``A n`` (symmetric and
alternating of degree n), ``PSL(2,q)``, ``SL(2,3)``, ``Hess216``,
``Fermat d``, ``Xd d`` and ``CycMat(s,t)``.  ``G^k`` is the k-fold direct
power and is expanded while parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .builders import (
    build_alternating,
    build_cyclic,
    build_dihedral,
    build_fermat_aut,
    build_hessian216,
    build_psl2,
    build_quaternion,
    build_sl23,
    build_symmetric,
    direct_product,
    resolve_action,
    semidirect,
    xd_group,
)
from .cyclo import family_closure
from .groups import FiniteGroup, GroupError


class ParseError(ValueError):
    def __init__(self, text: str, offset: int, expected):
        self.text = text
        self.offset = offset
        self.expected = tuple(sorted(expected))
        found = repr(text[offset]) if offset < len(text) else "end of input"
        super().__init__(f"at offset {offset}: expected {' or '.join(self.expected)}, found {found}")


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple[int, ...]


@dataclass(frozen=True)
class Product:
    left: "GroupExpr"
    right: "GroupExpr"


@dataclass(frozen=True)
class Semidirect:
    normal: "GroupExpr"
    acting: "GroupExpr"
    action: str


GroupExpr = Atom | Product | Semidirect

# name -> number of integer arguments; multi-argument atoms use parentheses
SIMPLE_ATOMS = ("Fermat", "Xd", "C", "D", "Q", "S", "A")
PAREN_ATOMS = {"PSL": 2, "SL": 2, "CycMat": 2}
BARE_ATOMS = ("Hess216",)
KEYWORDS = sorted(SIMPLE_ATOMS + tuple(PAREN_ATOMS) + BARE_ATOMS, key=len, reverse=True)

_INT = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def expect(self, token: str) -> None:
        if not self.peek(token):
            raise ParseError(self.text, self.pos, {repr(token)})
        self.pos += len(token)

    def integer(self) -> int:
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise ParseError(self.text, self.pos, {"INT"})
        self.pos = m.end()
        return int(m.group())

    def expr(self) -> GroupExpr:
        node = self.term()
        while self.peek("x"):
            self.pos += 1
            node = Product(node, self.term())
        return node

    def term(self) -> GroupExpr:
        node = self.factor()
        if self.peek(":"):
            self.pos += 1
            acting = self.factor()
            self.expect("@")
            self.skip()
            m = _NAME.match(self.text, self.pos)
            if not m:
                raise ParseError(self.text, self.pos, {"NAME"})
            self.pos = m.end()
            node = Semidirect(node, acting, m.group())
        return node

    def factor(self) -> GroupExpr:
        node = self.primary()
        if self.peek("^"):
            self.pos += 1
            at = self.pos
            k = self.integer()
            if k < 1:
                raise ParseError(self.text, at, {"positive INT"})
            base = node
            for _ in range(k - 1):
                node = Product(node, base)
        return node

    def primary(self) -> GroupExpr:
        if self.peek("("):
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        for kw in KEYWORDS:
            if self.text.startswith(kw, self.pos):
                self.pos += len(kw)
                return self.atom(kw)
        raise ParseError(self.text, self.pos, {"'('", *KEYWORDS})

    def atom(self, kw: str) -> Atom:
        if kw in BARE_ATOMS:
            return Atom(kw, ())
        if kw in PAREN_ATOMS:
            self.expect("(")
            args = [self.integer()]
            for _ in range(PAREN_ATOMS[kw] - 1):
                self.expect(",")
                args.append(self.integer())
            self.expect(")")
            return Atom(kw, tuple(args))
        return Atom(kw, (self.integer(),))


def parse_group_spec(text: str) -> GroupExpr:
    p = _Parser(text)
    node = p.expr()
    p.skip()
    if p.pos != len(text):
        raise ParseError(text, p.pos, {"'x'", "':'", "end of input"})
    return node


def format_expr(node: GroupExpr) -> str:
    """Canonical text; parsing it gives back the same tree."""
    if isinstance(node, Atom):
        if node.name in BARE_ATOMS:
            return node.name
        if node.name in PAREN_ATOMS:
            return f"{node.name}({','.join(map(str, node.args))})"
        return f"{node.name}{node.args[0]}"
    if isinstance(node, Product):
        right = format_expr(node.right)
        if isinstance(node.right, Product):
            right = f"({right})"
        return f"{format_expr(node.left)} x {right}"
    parts = []
    for child in (node.normal, node.acting):
        s = format_expr(child)
        parts.append(s if isinstance(child, Atom) else f"({s})")
    return f"{parts[0]}:{parts[1]}@{node.action}"


def _build_atom(a: Atom) -> FiniteGroup:
    name, args = a.name, a.args
    if name == "C":
        return build_cyclic(args[0])
    if name == "D":
        n = args[0]
        if n % 2 or n < 6:
            raise GroupError("D n needs an even order n >= 6")
        return build_dihedral(n // 2)
    if name == "Q":
        n = args[0]
        if n < 8 or n & (n - 1):
            raise GroupError("Q n needs a power of two n >= 8")
        return build_quaternion(n.bit_length() - 1)
    if name == "S":
        return build_symmetric(args[0])
    if name == "A":
        return build_alternating(args[0])
    if name == "PSL":
        if args[0] != 2:
            raise GroupError("only PSL(2,q) is available")
        return build_psl2(args[1])
    if name == "SL":
        if args != (2, 3):
            raise GroupError("only SL(2,3) is available")
        return build_sl23()
    if name == "Hess216":
        return build_hessian216()
    if name == "Fermat":
        return build_fermat_aut(args[0])
    if name == "Xd":
        return xd_group(args[0])[0]
    if name == "CycMat":
        return family_closure(*args).group
    raise GroupError(f"unknown atom {name}")


@lru_cache(maxsize=256)
def build_expr(node: GroupExpr) -> FiniteGroup:
    """Build (and memoize) the group of an expression tree."""
    if isinstance(node, Atom):
        return _build_atom(node)
    if isinstance(node, Product):
        return direct_product(build_expr(node.left), build_expr(node.right), format_expr(node))
    N, K = build_expr(node.normal), build_expr(node.acting)
    return semidirect(N, K, resolve_action(node.action, N, K), format_expr(node))


def build_group(text: str) -> FiniteGroup:
    return build_expr(parse_group_spec(text))
