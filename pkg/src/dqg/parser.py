"""Recursive-descent parser for algebra expressions.

Grammar (whitespace-tolerant)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor (('*' | '/' | <juxtaposition>) factor)*
    factor  := primary ['^' ['-'] INT]
    primary := INT | '(' expr ')' | '[' expr ']'
             | 't' '[' INT ',' INT ']' | 'xi' '[' IDX ';' IDX ']'
             | 'dinv' | 'det'
             | ('S' | 'Sinv' | 'star' | 'dagger' | 'ml' | 'mr') '(' expr ')'
             | 'q' | 'tau' | 'I' | Li | Mi | wi | ui | vi | zi

``IDX`` is either a comma-separated list or a run of digits (``xi[12;13]``).
Li and Mi stand for q^{-2 lambda_i} and q^{-2 mu_i}; wi, ui, vi, zi are the
raw bank variables used when printing coefficients, so printed normal forms
parse back to the same element.
"""

import re

from . import hopf
from .minors import xi
from .nfcore import Element
from .scalars import LAM, MU, SEAM1, SEAM2, CoeffFn


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.message = message
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))", re.S)
_BANK_VARS = {"w": LAM, "u": SEAM1, "v": SEAM2, "z": MU}
_X_VARS = {"L": LAM, "M": MU}
_OPERATORS = {"S": hopf.antipode, "Sinv": hopf.antipode_inverse,
              "star": hopf.star, "dagger": hopf.dagger}


def tokenize(text):
    """List of (kind, value, pos) with kind in {'int', 'name', 'op', 'end'}."""
    out = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()[],;":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append(("op", ch, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class Parser:
    """Parses and evaluates an expression in one algebra.

    Values are CoeffFn (scalars) or Element; scalars are promoted to
    elements with the coefficient placed on the left.
    """

    def __init__(self, alg, text):
        self.alg = alg
        self.F = alg.field
        self.text = text
        self.tokens = tokenize(text)
        self.k = 0

    # -- token helpers ------------------------------------------------

    @property
    def tok(self):
        return self.tokens[self.k]

    def advance(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def at(self, kind, value=None):
        t = self.tok
        return t[0] == kind and (value is None or t[1] == value)

    def expect(self, kind, value=None):
        if not self.at(kind, value):
            want = repr(value) if value is not None else kind
            raise ParseError(f"expected {want}, found {self._describe()}", self.tok[2])
        return self.advance()

    def _describe(self):
        kind, value, _ = self.tok
        return "end of input" if kind == "end" else repr(value)

    # -- value helpers ------------------------------------------------

    def element(self, v):
        return v if isinstance(v, Element) else self.alg.scalar(v)

    def scalar(self, v, pos, what):
        if isinstance(v, Element):
            if not v.terms:
                return self.F.zero
            if len(v.terms) == 1 and ((), 0) in v.terms:
                return v.terms[((), 0)]
            raise ParseError(f"{what} needs a scalar expression", pos)
        return v

    def index(self, what):
        kind, value, pos = self.expect("int")
        if not 1 <= value <= self.alg.n:
            raise ParseError(f"{what} index {value} out of range 1..{self.alg.n}", pos)
        return value

    # -- grammar ------------------------------------------------------

    def parse(self):
        if self.at("end"):
            raise ParseError("empty expression", 0)
        value = self.expr()
        if not self.at("end"):
            raise ParseError(f"unexpected {self._describe()}", self.tok[2])
        return value

    def expr(self):
        sign = 1
        if self.at("op", "+") or self.at("op", "-"):
            sign = -1 if self.advance()[1] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.at("op", "+") or self.at("op", "-"):
            op = self.advance()[1]
            rhs = self.term()
            value = self._add(value, rhs if op == "+" else -rhs)
        return value

    def _add(self, a, b):
        if isinstance(a, Element) or isinstance(b, Element):
            return self.element(a) + self.element(b)
        return a + b

    def _starts_factor(self):
        kind, value, _ = self.tok
        return kind in ("int", "name") or (kind == "op" and value in "([")

    def term(self):
        value = self.factor()
        while True:
            if self.at("op", "*"):
                self.advance()
                value = self._mul(value, self.factor())
            elif self.at("op", "/"):
                pos = self.advance()[2]
                rhs = self.scalar(self.factor(), pos, "division")
                if rhs.is_zero():
                    raise ParseError("division by zero", pos)
                value = self._mul(value, rhs.inverse())
            elif self._starts_factor():
                value = self._mul(value, self.factor())
            else:
                return value

    def _mul(self, a, b):
        if isinstance(a, Element) or isinstance(b, Element):
            return self.element(a) * self.element(b)
        return a * b

    def factor(self):
        start = self.tok[2]
        base = self.primary()
        if not self.at("op", "^"):
            return base
        self.advance()
        neg = False
        if self.at("op", "-"):
            self.advance()
            neg = True
        k = self.expect("int")[1]
        k = -k if neg else k
        if isinstance(base, CoeffFn):
            if base.is_zero() and k < 0:
                raise ParseError("division by zero", start)
            return base ** k
        if k >= 0:
            return base ** k
        if base == self.alg.det():
            return self.alg.dinv(-k)
        raise ParseError("negative powers are only defined for scalars and det", start)

    def primary(self):
        kind, value, pos = self.tok
        if kind == "int":
            self.advance()
            return self.F.const(value)
        if kind == "op" and value in "([":
            self.advance()
            inner = self.expr()
            self.expect("op", ")" if value == "(" else "]")
            return inner
        if kind != "name":
            raise ParseError(f"unexpected {self._describe()}", pos)
        self.advance()
        return self.named(value, pos)

    def named(self, name, pos):
        alg, F = self.alg, self.F
        if name == "t":
            self.expect("op", "[")
            i = self.index("row")
            self.expect("op", ",")
            j = self.index("column")
            self.expect("op", "]")
            return alg.t(i, j)
        if name == "xi":
            self.expect("op", "[")
            I = self.subset()
            self.expect("op", ";")
            J = self.subset()
            self.expect("op", "]")
            return xi(alg, I, J)
        if name == "det":
            return alg.det()
        if name == "dinv":
            return alg.dinv()
        if name in _OPERATORS or name in ("ml", "mr"):
            self.expect("op", "(")
            arg_pos = self.tok[2]
            arg = self.expr()
            self.expect("op", ")")
            if name in ("ml", "mr"):
                f = self.scalar(arg, arg_pos, name)
                if f.banks() - {LAM}:
                    raise ParseError(f"{name} takes a function of q and L1..Ln only", arg_pos)
                return alg.ml(f) if name == "ml" else alg.mr(f)
            return _OPERATORS[name](self.element(arg))
        if name == "q":
            return F.q
        if name == "tau":
            return F.tau
        if name == "I":
            return F.i
        m = re.fullmatch(r"([wuvzLM])(\d+)", name)
        if m:
            i = int(m.group(2))
            if not 1 <= i <= alg.n:
                raise ParseError(f"variable {name} out of range 1..{alg.n}", pos)
            letter = m.group(1)
            if letter in _X_VARS:
                return F.X(_X_VARS[letter], i)
            return F.var(_BANK_VARS[letter], i)
        raise ParseError(f"unknown name {name!r}", pos)

    def subset(self):
        kind, value, pos = self.tok
        if kind != "int":
            if self.at("op", ";") or self.at("op", "]"):
                return ()
            raise ParseError(f"expected an index set, found {self._describe()}", pos)
        first = self.advance()
        if self.at("op", ","):
            items = [(first[1], first[2])]
            while self.at("op", ","):
                self.advance()
                t = self.expect("int")
                items.append((t[1], t[2]))
        else:
            text = self.text[first[2]:first[2] + len(str(first[1]))]
            items = [(int(ch), first[2] + k) for k, ch in enumerate(text)]
        out = []
        for v, p in items:
            if not 1 <= v <= self.alg.n:
                raise ParseError(f"minor index {v} out of range 1..{self.alg.n}", p)
            out.append(v)
        if out != sorted(set(out)):
            raise ParseError("minor indices must be strictly increasing", pos)
        return tuple(out)


def parse_expr(alg, text):
    """Evaluate ``text`` to an Element of ``alg``."""
    p = Parser(alg, text)
    value = p.parse()
    return p.element(value)


def parse_scalar(field_alg, text):
    """Evaluate ``text`` to a CoeffFn (an expression without generators)."""
    p = Parser(field_alg, text)
    value = p.parse()
    return p.scalar(value, 0, "scalar")


__all__ = ["ParseError", "Parser", "parse_expr", "parse_scalar", "tokenize"]
