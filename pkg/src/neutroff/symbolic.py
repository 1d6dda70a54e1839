"""Nine-symbol neutrosophic offlogic with pluggable total orders."""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Union

from .values import ValidationError


class Sym(str, enum.Enum):
    TO = "TO"
    T = "T"
    TU = "TU"
    IO = "IO"
    I = "I"
    IU = "IU"
    FO = "FO"
    F = "F"
    FU = "FU"

    @classmethod
    def parse(cls, text: Union[str, "Sym"]) -> "Sym":
        if isinstance(text, cls):
            return text
        key = str(text).strip().upper().replace("_", "")
        # subscript zero is a common spelling of the over mark
        if len(key) == 2 and key[1] == "0":
            key = key[0] + "O"
        try:
            return cls(key)
        except ValueError:
            raise ValidationError(f"unknown symbol {text!r}") from None

    def __str__(self) -> str:
        return self.value


NEGATION = {
    Sym.TO: Sym.TU, Sym.TU: Sym.TO,
    Sym.IO: Sym.IU, Sym.IU: Sym.IO,
    Sym.FO: Sym.FU, Sym.FU: Sym.FO,
    Sym.T: Sym.F, Sym.F: Sym.T,
    Sym.I: Sym.I,
}


@dataclass(frozen=True)
class SymbolicOrder:
    """Ascending chain of the nine symbols plus the negation involution."""

    chain: tuple
    negation: tuple = tuple(NEGATION.items())

    def __post_init__(self):
        chain = tuple(Sym.parse(s) for s in self.chain)
        if len(chain) != 9 or set(chain) != set(Sym):
            raise ValidationError("order chain must list each of the nine symbols once")
        object.__setattr__(self, "chain", chain)
        neg = dict(self.negation)
        if set(neg) != set(Sym) or any(neg[neg[s]] != s for s in Sym):
            raise ValidationError("negation must be an involution on all nine symbols")
        object.__setattr__(self, "negation", tuple(sorted(neg.items(), key=lambda kv: chain.index(kv[0]))))

    def rank(self, s: Sym) -> int:
        return self.chain.index(Sym.parse(s))

    def neg(self, s: Sym) -> Sym:
        return dict(self.negation)[Sym.parse(s)]

    def min(self, a, b) -> Sym:
        a, b = Sym.parse(a), Sym.parse(b)
        return a if self.rank(a) <= self.rank(b) else b

    def max(self, a, b) -> Sym:
        a, b = Sym.parse(a), Sym.parse(b)
        return a if self.rank(a) >= self.rank(b) else b


DEFAULT_ORDER = SymbolicOrder((Sym.TU, Sym.IU, Sym.FU, Sym.F, Sym.I, Sym.T, Sym.FO, Sym.IO, Sym.TO))


def default_order() -> SymbolicOrder:
    return DEFAULT_ORDER


def alternate_order() -> SymbolicOrder:
    """T over F over I, extended to the over and under marks."""
    return SymbolicOrder((Sym.TU, Sym.FU, Sym.IU, Sym.I, Sym.F, Sym.T, Sym.IO, Sym.FO, Sym.TO))


def _order(order) -> SymbolicOrder:
    if order is None or order == "default":
        return DEFAULT_ORDER
    if order in ("alt", "alternate"):
        return alternate_order()
    if isinstance(order, SymbolicOrder):
        return order
    raise ValidationError(f"unknown order {order!r}")


def sym_neg(s, order=None) -> Sym:
    return _order(order).neg(s)


def sym_and(a, b, order=None) -> Sym:
    return _order(order).min(a, b)


def sym_or(a, b, order=None) -> Sym:
    return _order(order).max(a, b)


def sym_implies(a, b, order=None) -> Sym:
    o = _order(order)
    return o.max(o.neg(a), b)


def sym_equiv(p_to_q, q_to_p, order=None) -> Sym:
    """Conjunction of the two implication values."""
    return _order(order).min(p_to_q, q_to_p)


# ---------------------------------------------------------------------------
# formulas


@dataclass(frozen=True)
class Leaf:
    sym: Sym


@dataclass(frozen=True)
class Node:
    op: str  # one of ! & | -> <->
    args: tuple


Formula = Union[Leaf, Node]

_TOKEN = re.compile(r"\s*(<->|->|[!&|()~¬∧∨→↔]|[A-Za-z][A-Za-z_0-9]*)")
_ALIASES = {"~": "!", "¬": "!", "∧": "&", "∨": "|", "→": "->", "↔": "<->"}


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValidationError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        tok = m.group(1)
        out.append(_ALIASES.get(tok, tok))
        pos = m.end()
    return out


class _Parser:
    # precedence low to high: <->, ->, |, &, !
    def __init__(self, tokens: list[str]):
        self.toks = tokens
        self.k = 0

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else None

    def take(self, expect=None):
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise ValidationError(f"expected {expect or 'a token'}, found {tok or 'end of input'}")
        self.k += 1
        return tok

    def parse(self) -> Formula:
        node = self.equiv()
        if self.peek() is not None:
            raise ValidationError(f"unexpected token {self.peek()!r}")
        return node

    def equiv(self):
        node = self.implies()
        while self.peek() == "<->":
            self.take()
            node = Node("<->", (node, self.implies()))
        return node

    def implies(self):
        left = self.disj()
        if self.peek() == "->":
            self.take()
            return Node("->", (left, self.implies()))  # right-associative
        return left

    def disj(self):
        node = self.conj()
        while self.peek() == "|":
            self.take()
            node = Node("|", (node, self.conj()))
        return node

    def conj(self):
        node = self.unary()
        while self.peek() == "&":
            self.take()
            node = Node("&", (node, self.unary()))
        return node

    def unary(self):
        tok = self.peek()
        if tok == "!":
            self.take()
            return Node("!", (self.unary(),))
        if tok == "(":
            self.take()
            node = self.equiv()
            self.take(")")
            return node
        if tok is None:
            raise ValidationError("formula ended early")
        self.take()
        return Leaf(Sym.parse(tok))


def parse_formula(text: str) -> Formula:
    return _Parser(_tokenize(text)).parse()


def eval_formula(f: Union[Formula, str, Sym], order=None) -> Sym:
    o = _order(order)
    if isinstance(f, str) and not isinstance(f, Sym):
        f = parse_formula(f)
    if isinstance(f, Sym):
        return f
    if isinstance(f, Leaf):
        return f.sym
    if not isinstance(f, Node):
        raise ValidationError(f"not a formula: {f!r}")
    vals = [eval_formula(a, o) for a in f.args]
    if f.op == "!" and len(vals) == 1:
        return o.neg(vals[0])
    if len(vals) != 2:
        raise ValidationError(f"connective {f.op!r} takes two arguments")
    a, b = vals
    if f.op == "&":
        return o.min(a, b)
    if f.op == "|":
        return o.max(a, b)
    if f.op == "->":
        return sym_implies(a, b, o)
    if f.op == "<->":
        return sym_equiv(sym_implies(a, b, o), sym_implies(b, a, o), o)
    raise ValidationError(f"unknown connective {f.op!r}")


def truth_table(op: str, order=None) -> dict:
    o = _order(order)
    fn = {"&": sym_and, "|": sym_or, "->": sym_implies,
          "<->": lambda a, b, o: sym_equiv(sym_implies(a, b, o), sym_implies(b, a, o), o)}[op]
    return {(a, b): fn(a, b, o) for a, b in itertools.product(o.chain, repeat=2)}


@dataclass
class DeMorganReport:
    holds_and: bool
    holds_or: bool
    failures: list

    @property
    def holds(self) -> bool:
        return self.holds_and and self.holds_or


def de_morgan_report(order=None) -> DeMorganReport:
    """Enumerate both De Morgan laws over all 81 pairs."""
    o = _order(order)
    fails = []
    ok_and = ok_or = True
    for a, b in itertools.product(o.chain, repeat=2):
        if o.neg(o.min(a, b)) != o.max(o.neg(a), o.neg(b)):
            ok_and = False
            fails.append(("!(a&b)", a, b))
        if o.neg(o.max(a, b)) != o.min(o.neg(a), o.neg(b)):
            ok_or = False
            fails.append(("!(a|b)", a, b))
    return DeMorganReport(ok_and, ok_or, fails)
