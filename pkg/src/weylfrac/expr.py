"""Surface syntax for Weyl polynomials and left fractions.

Grammar (``*`` is the noncommutative product and is never implicit)::

    statement := "let" NAME "=" expr | expr
    expr      := term (("+" | "-") term)*
    term      := unary (("*" | "∘") unary)*
    unary     := "-" unary | power
    power     := primary ("^" INT)?
    primary   := NUMBER | NAME | NAME "(" expr ("," expr)* ")"
               | "(" expr ")" | "[" expr "," expr "]"

``NUMBER`` is an integer or ``INT/INT``.  ``x`` and ``y`` are the
generators.  Built-in calls: ``inv(e)`` (promotes to fractions), ``dx(e)``,
``dy(e)``, ``hres(f, g)``, ``comeasure(f, g)`` and ``fraceq(z1, z2)``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .comeasure import ComeasurePair, comeasure_left, hres
from .leftfrac import WeylFraction, embed, equivalent, inverse
from .weyl import ONE, X, Y, WeylPoly, commutator, mul_closed, mul_rewrite, wpow

__all__ = [
    "ParseError",
    "EvalError",
    "Num",
    "Sym",
    "Neg",
    "Add",
    "Sub",
    "Mul",
    "Pow",
    "Comm",
    "Call",
    "Let",
    "Session",
    "parse",
    "parse_statement",
    "evaluate",
    "render",
    "BUILTINS",
]

RESERVED = {"x", "y", "let"}
BUILTINS = {"inv": 1, "dx": 1, "dy": 1, "hres": 2, "comeasure": 2, "fraceq": 2}


class ParseError(ValueError):
    def __init__(self, message, line, col, expected=()):
        self.line = line
        self.col = col
        self.expected = tuple(sorted(expected))
        text = f"{line}:{col}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)


class EvalError(ValueError):
    pass


# --- syntax tree -----------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Comm:
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class Let:
    name: str
    expr: object


# --- tokenizer ---------------------------------------------------------------


@dataclass(frozen=True)
class _Tok:
    kind: str  # NUM, NAME, OP, END
    text: str
    line: int
    col: int


_OPS = set("+-*^()[],=∘")


def _tokenize(text):
    toks = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j + 1 < n and text[j] == "/" and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            toks.append(_Tok("NUM", text[i:j], line, start_col))
            col += j - i
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("NAME", text[i:j], line, start_col))
            col += j - i
            i = j
        elif ch in _OPS:
            toks.append(_Tok("OP", ch, line, start_col))
            i += 1
            col += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line, start_col)
    toks.append(_Tok("END", "", line, col))
    return toks


# --- parser ------------------------------------------------------------------


_PRIMARY_START = ("NUMBER", "NAME", "(", "[", "-")


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.pos = 0

    @property
    def tok(self):
        return self.toks[self.pos]

    def _advance(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def _fail(self, expected, what=None):
        t = self.tok
        found = "end of input" if t.kind == "END" else repr(t.text)
        raise ParseError(what or f"unexpected {found}", t.line, t.col, expected)

    def _expect(self, op):
        if self.tok.kind == "OP" and self.tok.text == op:
            return self._advance()
        self._fail([op])

    def _at(self, *ops):
        return self.tok.kind == "OP" and self.tok.text in ops

    def statement(self):
        t = self.tok
        if t.kind == "NAME" and t.text == "let":
            self._advance()
            name = self.tok
            if name.kind != "NAME":
                self._fail(["NAME"])
            if name.text in RESERVED or name.text in BUILTINS:
                raise ParseError(f"{name.text!r} is reserved", name.line, name.col)
            self._advance()
            self._expect("=")
            node = Let(name.text, self.expr())
        else:
            node = self.expr()
        self.end()
        return node

    def end(self):
        if self.tok.kind != "END":
            self._fail(["+", "-", "*", "∘", "^", "end of input"])

    def expr(self):
        left = self.term()
        while self._at("+", "-"):
            op = self._advance().text
            right = self.term()
            left = Add(left, right) if op == "+" else Sub(left, right)
        return left

    def term(self):
        left = self.unary()
        while self._at("*", "∘"):
            self._advance()
            left = Mul(left, self.unary())
        return left

    def unary(self):
        if self._at("-"):
            self._advance()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.primary()
        if self._at("^"):
            self._advance()
            t = self.tok
            if t.kind != "NUM" or "/" in t.text:
                self._fail(["nonnegative integer exponent"])
            self._advance()
            return Pow(base, int(t.text))
        return base

    def primary(self):
        t = self.tok
        if t.kind == "NUM":
            self._advance()
            num, _, den = t.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator in literal", t.line, t.col)
            return Num(Fraction(int(num), int(den) if den else 1))
        if t.kind == "NAME":
            self._advance()
            if self._at("("):
                if t.text not in BUILTINS:
                    raise ParseError(f"unknown function {t.text!r}", t.line, t.col)
                self._advance()
                args = [self.expr()]
                while self._at(","):
                    self._advance()
                    args.append(self.expr())
                self._expect(")")
                if len(args) != BUILTINS[t.text]:
                    raise ParseError(
                        f"{t.text} takes {BUILTINS[t.text]} argument(s), got {len(args)}",
                        t.line,
                        t.col,
                    )
                return Call(t.text, tuple(args))
            if t.text == "let":
                raise ParseError("'let' is only allowed at the start", t.line, t.col)
            return Sym(t.text)
        if self._at("("):
            self._advance()
            e = self.expr()
            self._expect(")")
            return e
        if self._at("["):
            self._advance()
            left = self.expr()
            self._expect(",")
            right = self.expr()
            self._expect("]")
            return Comm(left, right)
        self._fail(_PRIMARY_START)


def parse(text):
    """Parse a single expression."""
    p = _Parser(text)
    e = p.expr()
    p.end()
    return e


def parse_statement(text):
    """Parse an expression or a ``let NAME = expr`` binding."""
    return _Parser(text).statement()


# --- evaluation ----------------------------------------------------------------


@dataclass
class Session:
    bindings: dict = field(default_factory=dict)
    engine: str = "closed"

    def mul(self, f, g):
        return mul_rewrite(f, g) if self.engine == "rewrite" else mul_closed(f, g)

    def run(self, text):
        """Evaluate one statement, update bindings, and return the value."""
        node = parse_statement(text)
        if isinstance(node, Let):
            value = evaluate(node.expr, self)
            self.bindings[node.name] = value
        else:
            value = evaluate(node, self)
        self.bindings["_"] = value
        return value


def _algebraic(v, what):
    if not isinstance(v, (WeylPoly, WeylFraction)):
        raise EvalError(f"{what} needs a polynomial or fraction, got {render(v)}")
    return v


def _promote(a, b):
    if isinstance(a, WeylFraction) or isinstance(b, WeylFraction):
        if isinstance(a, WeylPoly):
            a = embed(a)
        if isinstance(b, WeylPoly):
            b = embed(b)
    return a, b


def evaluate(e, session=None):
    """Evaluate an expression tree to a WeylPoly or WeylFraction.

    ``comeasure`` and ``fraceq`` produce a ComeasurePair or a bool; those may
    only appear at the top level.
    """
    s = session if session is not None else Session()
    return _eval(e, s)


def _eval(e, s):
    if isinstance(e, Num):
        return WeylPoly.const(e.value)
    if isinstance(e, Sym):
        if e.name == "x":
            return X
        if e.name == "y":
            return Y
        if e.name not in s.bindings:
            raise EvalError(f"unbound identifier {e.name!r}")
        return s.bindings[e.name]
    if isinstance(e, Neg):
        return -_algebraic(_eval(e.arg, s), "negation")
    if isinstance(e, (Add, Sub, Mul, Comm)):
        a = _algebraic(_eval(e.left, s), type(e).__name__.lower())
        b = _algebraic(_eval(e.right, s), type(e).__name__.lower())
        a, b = _promote(a, b)
        if isinstance(e, Add):
            return a + b
        if isinstance(e, Sub):
            return a - b
        if isinstance(a, WeylPoly):
            if isinstance(e, Mul):
                return s.mul(a, b)
            return s.mul(a, b) - s.mul(b, a)
        return a * b if isinstance(e, Mul) else a * b - b * a
    if isinstance(e, Pow):
        base = _algebraic(_eval(e.base, s), "power")
        if isinstance(base, WeylPoly):
            return wpow(base, e.exp, s.mul)
        return base**e.exp
    if isinstance(e, Call):
        return _call(e, s)
    if isinstance(e, Let):
        raise EvalError("'let' is a statement, not an expression")
    raise TypeError(f"not an expression node: {e!r}")


def _poly_arg(v, name):
    if isinstance(v, WeylFraction):
        if v.den.is_scalar():
            return v.num.scale(1 / v.den.scalar_value())
        raise EvalError(f"{name} needs Weyl polynomials, got a fraction")
    if not isinstance(v, WeylPoly):
        raise EvalError(f"{name} needs Weyl polynomials, got {render(v)}")
    return v


def _call(e, s):
    args = [_eval(a, s) for a in e.args]
    if e.name == "inv":
        v = _algebraic(args[0], "inv")
        if not v:
            raise ZeroDivisionError("inv(0) is undefined")
        return inverse(v if isinstance(v, WeylFraction) else embed(v))
    if e.name in ("dx", "dy"):
        v = _poly_arg(args[0], e.name)
        return v.dx() if e.name == "dx" else v.dy()
    if e.name == "fraceq":
        a, b = (_algebraic(v, "fraceq") for v in args)
        a, b = (v if isinstance(v, WeylFraction) else embed(v) for v in (a, b))
        return equivalent(a, b)
    f, g = (_poly_arg(v, e.name) for v in args)
    if not f or not g:
        raise EvalError(f"{e.name} needs nonzero arguments")
    if e.name == "hres":
        if f.deg_y == 0 and g.deg_y == 0:
            raise EvalError("hres needs at least one argument containing y")
        return WeylPoly.from_ycoeffs([hres(f, g)])
    return comeasure_left(f, g)


# --- rendering -----------------------------------------------------------------


def _monomial(p, q):
    parts = []
    if p:
        parts.append("x" if p == 1 else f"x^{p}")
    if q:
        parts.append("y" if q == 1 else f"y^{q}")
    return "*".join(parts)


def _render_poly(f):
    if not f:
        return "0"
    out = []
    for i, (p, q, c) in enumerate(f.terms()):
        mono = _monomial(p, q)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(out)


def render(v):
    """Canonical text for polynomials, fractions, comeasure pairs and bools."""
    if isinstance(v, WeylPoly):
        return _render_poly(v)
    if isinstance(v, WeylFraction):
        num = _render_poly(v.num)
        if len(v.num) > 1:
            num = f"({num})"
        return f"inv({_render_poly(v.den)}) ∘ {num}"
    if isinstance(v, ComeasurePair):
        return f"a = {_render_poly(v.a)}; b = {_render_poly(v.b)}"
    if isinstance(v, bool):
        return "true" if v else "false"
    raise TypeError(f"cannot render {v!r}")
