"""Ideal documents: lexer, recursive-descent parser, evaluator and printer.

    doc      := { stmt }
    stmt     := "ring" NAME+ ";"
              | "ideal" NAME "=" expr ";"
              | "fullset" NAME "=" "{" [ expr { "," expr } ] "}" ";"
              | "assign" NAME "[" expr "]" "=" expr ";"
              | "expect" NAME "(" [ arg { "," arg } ] ")" "=" value ";"
    expr     := sum { "," sum }              -- generators of one ideal
    sum      := inter { "+" inter }
    inter    := quot { "&" quot }
    quot     := prod { ":" prod }             -- colon, left associative
    prod     := power { "*" power }
    power    := atom [ "^" INT ]
    atom     := NAME | "0" | "1" | "(" expr ")"
    value    := "true" | "false" | "inconclusive" | INT | "[" expr,* "]" | expr

Every expression denotes an ideal: a variable is the principal ideal it
generates, so ``x^2*y`` is (x^2 y) and a comma list is a sum.  ``m`` is the
maximal ideal unless the ring has a variable called m.  Juxtaposition is not
multiplication: ``x2y`` lexes as one (unknown) name.

Error codes: E1xx lexical, E2xx syntax, E3xx semantic (see the constants).
"""
from __future__ import annotations

from dataclasses import dataclass, field
import re

from ..errors import ParseError
from ..monomial import (Monomial, MonomialIdeal, Ring, colon, maximal_ideal, power, product,
                        unit_ideal, zero_ideal)

E_LEX = "E101"
E_SYNTAX = "E201"
E_EOF = "E202"
E_UNKNOWN_NAME = "E301"
E_NO_RING = "E302"
E_DUPLICATE = "E303"
E_NOT_MONOMIAL = "E304"
E_BAD_VALUE = "E305"
E_UNKNOWN_CHECK = "E306"
E_RING_AGAIN = "E307"
E_EVAL = "E308"
E_NOT_IN_FULLSET = "E309"

KEYWORDS = {"ring", "ideal", "fullset", "assign", "expect"}

# expect keys -> (argument kinds, value kind); "I" = ideal expression,
# "L" = fullset name
CHECKS = {
    "cwl": ("I", "bool"), "linear": ("I", "bool"), "full": ("I", "bool"),
    "mfull": ("I", "bool"), "ordering": ("I", "bool"),
    "fullsum": ("II", "bool"), "hv": ("II", "bool"), "componentwise": ("II", "bool"),
    "cwl_plus_linear": ("II", "bool"), "nj_sum": ("II", "bool"),
    "prime_product": ("II", "bool"), "reg_plus_one": ("II", "bool"),
    "mu_additive": ("II", "bool"), "linear_colon": ("II", "bool"),
    "ord_formula": ("II", "bool"),
    "fullset_valid": ("L", "bool"), "assemble_cwl": ("L", "bool"),
    "reg": ("I", "int"), "order": ("I", "int"), "mu": ("I", "int"), "pd": ("I", "int"),
    "ord_length": ("II", "int"), "failure_step": ("I", "int"),
    "ideal": ("I", "ideal"), "assemble": ("L", "ideal"),
    "chain": ("I", "list"),
}

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<int>[0-9]+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>[;=,+&:*^(){}\[\]])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str   # name, int, op, comment, eof
    text: str
    line: int
    col: int


def tokenize(text):
    toks = []
    line, start, pos = 1, 0, 0
    while pos < len(text):
        mt = _TOKEN_RE.match(text, pos)
        if mt is None:
            raise ParseError(E_LEX, f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = mt.lastgroup
        col = pos - start + 1
        if kind == "nl":
            line += 1
            start = mt.end()
        elif kind != "ws":
            toks.append(Token(kind, mt.group(), line, col))
        pos = mt.end()
    toks.append(Token("eof", "", line, pos - start + 1))
    return toks


# ---- AST ------------------------------------------------------------------
# positions are kept for error messages but ignored by ==

@dataclass
class Node:
    pos: tuple = field(default=(0, 0), compare=False, repr=False, kw_only=True)


@dataclass
class Name(Node):
    name: str


@dataclass
class Lit(Node):
    value: int  # 0 or 1


@dataclass
class Seq(Node):
    items: list


@dataclass
class BinOp(Node):
    op: str  # + & : *
    left: Node
    right: Node


@dataclass
class Pow(Node):
    base: Node
    exp: int


@dataclass
class RingStmt(Node):
    names: list


@dataclass
class IdealStmt(Node):
    name: str
    expr: Node


@dataclass
class FullsetStmt(Node):
    name: str
    terms: list


@dataclass
class AssignStmt(Node):
    target: str
    term: Node
    expr: Node


@dataclass
class ExpectStmt(Node):
    key: str
    args: list
    value: object  # bool, "inconclusive", int, Node, or list of Nodes


# precedence, loosest first
_PREC = {",": 0, "+": 1, "&": 2, ":": 3, "*": 4, "^": 5}


def format_expr(node, parent=-1):
    """Canonical text of an expression, with only the parentheses it needs."""
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Lit):
        return str(node.value)
    if isinstance(node, Seq):
        s = ", ".join(format_expr(x, 0) for x in node.items)
        return f"({s})" if parent >= 0 else s
    if isinstance(node, Pow):
        base = format_expr(node.base, _PREC['^'] + 1)
        if isinstance(node.base, Pow):
            base = f"({base})"
        return f"{base}^{node.exp}"
    p = _PREC[node.op]
    sep = "*" if node.op == "*" else f" {node.op} "
    s = format_expr(node.left, p) + sep + format_expr(node.right, p + 1)
    return f"({s})" if p < parent else s


def _format_value(v):
    if v is True:
        return "true"
    if v is False:
        return "false"
    if isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, list):
        return "[" + ", ".join(format_expr(t, 0) for t in v) + "]"
    return format_expr(v, 0) if not isinstance(v, Seq) else format_expr(v, 1)


def format_stmt(st):
    if isinstance(st, RingStmt):
        return "ring " + " ".join(st.names) + ";"
    if isinstance(st, IdealStmt):
        return f"ideal {st.name} = {format_expr(st.expr)};"
    if isinstance(st, FullsetStmt):
        return f"fullset {st.name} = {{" + ", ".join(format_expr(t, 0) for t in st.terms) + "};"
    if isinstance(st, AssignStmt):
        return f"assign {st.target}[{format_expr(st.term, 0)}] = {format_expr(st.expr, 0)};"
    if isinstance(st, ExpectStmt):
        args = ", ".join(format_expr(a, 0) for a in st.args)
        return f"expect {st.key}({args}) = {_format_value(st.value)};"
    raise TypeError(st)


# ---- document -----------------------------------------------------------

@dataclass
class IdealDocument:
    header: list = field(default_factory=list)       # leading comment lines, verbatim
    statements: list = field(default_factory=list)
    ring: Ring = field(default=None, compare=False)
    ideals: dict = field(default_factory=dict, compare=False)
    fullsets: dict = field(default_factory=dict, compare=False)
    assignments: dict = field(default_factory=dict, compare=False)

    @property
    def expectations(self):
        return [s for s in self.statements if isinstance(s, ExpectStmt)]

    def to_text(self):
        out = list(self.header)
        if out:
            out.append("")
        out.extend(format_stmt(s) for s in self.statements)
        return "\n".join(out) + "\n"

    __str__ = to_text

    def eval(self, node):
        """Evaluate an expression node against the document's names."""
        return _Evaluator(self).eval(node)


class _Evaluator:
    def __init__(self, doc):
        self.doc = doc

    def eval(self, node):
        doc = self.doc
        ring = doc.ring
        if ring is None:
            raise ParseError(E_NO_RING, "no ring declared before this expression", *node.pos)
        if isinstance(node, Name):
            if node.name in doc.ideals:
                return doc.ideals[node.name]
            if node.name in ring.names:
                return MonomialIdeal(ring, [ring.var(node.name)])
            if node.name == "m":
                return maximal_ideal(ring)
            raise ParseError(E_UNKNOWN_NAME, f"unknown name {node.name!r}", *node.pos)
        if isinstance(node, Lit):
            return unit_ideal(ring) if node.value == 1 else zero_ideal(ring)
        if isinstance(node, Seq):
            out = zero_ideal(ring)
            for x in node.items:
                out = out + self.eval(x)
            return out
        if isinstance(node, Pow):
            return power(self.eval(node.base), node.exp)
        a, b = self.eval(node.left), self.eval(node.right)
        try:
            if node.op == "+":
                return a + b
            if node.op == "&":
                return a & b
            if node.op == "*":
                return product(a, b)
            return colon(a, b)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(E_EVAL, str(exc), *node.pos) from None

    def monomial(self, node):
        I = self.eval(node)
        if I.mu != 1:
            raise ParseError(E_NOT_MONOMIAL, f"{format_expr(node)} is not a monomial", *node.pos)
        return Monomial(I.ring, I.exponents[0])


class Parser:
    def __init__(self, text, ring=None):
        self.toks = tokenize(text)
        self.comments = [t for t in self.toks if t.kind == "comment"]
        self.toks = [t for t in self.toks if t.kind != "comment"]
        self.i = 0
        self.doc = IdealDocument(ring=ring)
        self.ev = _Evaluator(self.doc)

    # token helpers
    @property
    def tok(self):
        return self.toks[self.i]

    def _err(self, msg, tok=None):
        tok = tok or self.tok
        code = E_EOF if tok.kind == "eof" else E_SYNTAX
        return ParseError(code, msg, tok.line, tok.col)

    def next(self):
        t = self.tok
        self.i += 1
        return t

    def at(self, text):
        return self.tok.kind == "op" and self.tok.text == text

    def expect_op(self, text):
        if not self.at(text):
            got = self.tok.text or "end of input"
            raise self._err(f"expected {text!r}, got {got!r}")
        return self.next()

    def name(self, keyword_ok=False):
        t = self.tok
        if t.kind != "name" or (t.text in KEYWORDS and not keyword_ok):
            raise self._err(f"expected a name, got {t.text or 'end of input'!r}")
        return self.next()

    # expressions
    def expr(self):
        first = self.tok
        items = [self.sum()]
        while self.at(","):
            self.next()
            items.append(self.sum())
        if len(items) == 1:
            return items[0]
        return Seq(items, pos=(first.line, first.col))

    def _binary(self, op, sub):
        left = sub()
        while self.at(op):
            t = self.next()
            left = BinOp(op, left, sub(), pos=(t.line, t.col))
        return left

    def sum(self):
        return self._binary("+", self.inter)

    def inter(self):
        return self._binary("&", self.quot)

    def quot(self):
        return self._binary(":", self.prod)

    def prod(self):
        return self._binary("*", self.power)

    def power(self):
        base = self.atom()
        if self.at("^"):
            t = self.next()
            if self.tok.kind != "int":
                raise self._err("expected an integer exponent after '^'")
            k = int(self.next().text)
            base = Pow(base, k, pos=(t.line, t.col))
            if self.at("^"):
                raise self._err("chained exponents need parentheses")
        return base

    def atom(self):
        t = self.tok
        if t.kind == "name" and t.text not in KEYWORDS:
            self.next()
            return Name(t.text, pos=(t.line, t.col))
        if t.kind == "int":
            self.next()
            if t.text not in ("0", "1"):
                raise ParseError(E_BAD_VALUE, f"integer {t.text} is not an ideal (only 0 and 1 are)",
                                 t.line, t.col)
            return Lit(int(t.text), pos=(t.line, t.col))
        if self.at("("):
            self.next()
            e = self.expr()
            self.expect_op(")")
            return e
        if t.kind == "name" and t.text in KEYWORDS:
            raise self._err(f"keyword {t.text!r} cannot be used as a name")
        raise self._err(f"unexpected {t.text or 'end of input'!r}")

    # statements
    def _declare(self, tok, kind):
        d = self.doc
        taken = set(d.ideals) | set(d.fullsets) | (set(d.ring.names) if d.ring else set())
        if tok.text in taken:
            raise ParseError(E_DUPLICATE, f"{tok.text!r} is already defined", tok.line, tok.col)

    def _need_ring(self, tok):
        if self.doc.ring is None:
            raise ParseError(E_NO_RING, f"'{tok.text}' before any ring declaration",
                             tok.line, tok.col)

    def statement(self):
        kw = self.tok
        if kw.kind != "name" or kw.text not in KEYWORDS:
            raise self._err(f"expected a statement keyword, got {kw.text!r}")
        self.next()
        pos = (kw.line, kw.col)
        d = self.doc
        if kw.text == "ring":
            if d.ring is not None:
                raise ParseError(E_RING_AGAIN, "ring declared twice", kw.line, kw.col)
            names = [self.name()]
            while self.tok.kind == "name" and self.tok.text not in KEYWORDS:
                names.append(self.next())
            self.expect_op(";")
            seen = set()
            for t in names:
                if t.text in seen:
                    raise ParseError(E_DUPLICATE, f"variable {t.text!r} declared twice",
                                     t.line, t.col)
                seen.add(t.text)
            try:
                d.ring = Ring([t.text for t in names])
            except ValueError as exc:
                raise ParseError(E_BAD_VALUE, str(exc), kw.line, kw.col) from None
            return RingStmt([t.text for t in names], pos=pos)
        self._need_ring(kw)
        if kw.text == "ideal":
            nt = self.name()
            self.expect_op("=")
            e = self.expr()
            self.expect_op(";")
            self._declare(nt, "ideal")
            d.ideals[nt.text] = self.ev.eval(e)
            return IdealStmt(nt.text, e, pos=pos)
        if kw.text == "fullset":
            nt = self.name()
            self.expect_op("=")
            self.expect_op("{")
            terms = []
            if not self.at("}"):
                terms.append(self.sum())
                while self.at(","):
                    self.next()
                    terms.append(self.sum())
            self.expect_op("}")
            self.expect_op(";")
            self._declare(nt, "fullset")
            mons = []
            for t in terms:
                f = self.ev.monomial(t)
                if f.is_unit or not f.is_squarefree:
                    raise ParseError(E_BAD_VALUE, f"{f} is not a non-unit squarefree monomial",
                                     *t.pos)
                if f in mons:
                    raise ParseError(E_DUPLICATE, f"{f} listed twice", *t.pos)
                mons.append(f)
            if not mons:
                raise ParseError(E_BAD_VALUE, "empty fullset", kw.line, kw.col)
            d.fullsets[nt.text] = mons
            d.assignments[nt.text] = {}
            return FullsetStmt(nt.text, terms, pos=pos)
        if kw.text == "assign":
            nt = self.name()
            self.expect_op("[")
            term = self.expr()
            self.expect_op("]")
            self.expect_op("=")
            e = self.expr()
            self.expect_op(";")
            if nt.text not in d.fullsets:
                raise ParseError(E_UNKNOWN_NAME, f"unknown fullset {nt.text!r}", nt.line, nt.col)
            f = self.ev.monomial(term)
            if f not in d.fullsets[nt.text]:
                raise ParseError(E_NOT_IN_FULLSET, f"{f} is not in {nt.text}", *term.pos)
            if f in d.assignments[nt.text]:
                raise ParseError(E_DUPLICATE, f"{nt.text}[{f}] assigned twice", *term.pos)
            d.assignments[nt.text][f] = self.ev.eval(e)
            return AssignStmt(nt.text, term, e, pos=pos)
        # expect
        kt = self.name(keyword_ok=True)
        if kt.text not in CHECKS:
            raise ParseError(E_UNKNOWN_CHECK, f"unknown check {kt.text!r}", kt.line, kt.col)
        kinds, vkind = CHECKS[kt.text]
        self.expect_op("(")
        args = []
        if not self.at(")"):
            args.append(self.sum())
            while self.at(","):
                self.next()
                args.append(self.sum())
        self.expect_op(")")
        if len(args) != len(kinds):
            raise ParseError(E_UNKNOWN_CHECK, f"{kt.text} takes {len(kinds)} argument(s), "
                             f"got {len(args)}", kt.line, kt.col)
        for a, k in zip(args, kinds):
            if k == "L":
                if not (isinstance(a, Name) and a.name in d.fullsets):
                    raise ParseError(E_UNKNOWN_NAME, f"{kt.text} needs a fullset name", *a.pos)
            else:
                self.ev.eval(a)
        self.expect_op("=")
        value = self.value(vkind)
        self.expect_op(";")
        return ExpectStmt(kt.text, args, value, pos=pos)

    def value(self, vkind):
        t = self.tok
        if vkind == "bool":
            if t.kind == "name" and t.text in ("true", "false", "inconclusive"):
                self.next()
                return {"true": True, "false": False}.get(t.text, t.text)
            raise ParseError(E_BAD_VALUE, "expected true, false or inconclusive", t.line, t.col)
        if vkind == "int":
            if t.kind == "int":
                self.next()
                return int(t.text)
            raise ParseError(E_BAD_VALUE, "expected an integer", t.line, t.col)
        if vkind == "list":
            self.expect_op("[")
            items = [self.sum()]
            while self.at(","):
                self.next()
                items.append(self.sum())
            self.expect_op("]")
            for x in items:
                self.ev.monomial(x)
            return items
        e = self.expr()
        self.ev.eval(e)
        return e

    def document(self):
        # leading comment block = comments before the first statement
        first = self.tok
        self.doc.header = [c.text for c in self.comments
                           if (c.line, c.col) < (first.line, first.col) or first.kind == "eof"]
        while self.tok.kind != "eof":
            self.doc.statements.append(self.statement())
        return self.doc


def parse(text, ring=None):
    """Parse and evaluate a document; raises ParseError with a code and position."""
    return Parser(text, ring).document()


def parse_ideal_expr(ring, text):
    p = Parser(text, ring)
    e = p.expr()
    if p.tok.kind != "eof":
        raise p._err(f"trailing input {p.tok.text!r}")
    return p.ev.eval(e)


def parse_monomial(ring, text):
    p = Parser(text, ring)
    e = p.expr()
    if p.tok.kind != "eof":
        raise p._err(f"trailing input {p.tok.text!r}")
    return p.ev.monomial(e)


def format_document(doc):
    return doc.to_text()
