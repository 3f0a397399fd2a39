"""Expression language for scalars, GL_q(N) elements, functionals and tensors.

Grammar (juxtaposition multiplies, as in printed normal forms):

    sum     := tensor (('+' | '-') tensor)*
    tensor  := product ['(x)' product]
    product := unary (('*' | '/' | <juxtaposition>) unary)*
    unary   := '-' unary | power
    power   := atom ['^' ['-'] INT]
    atom    := INT | t | q | z | det | x[i,j] | <letter>[...] | name '(' args ')' | '(' sum ')'

Dual letters: l[i,j], r[i,j], l_inv[i], r_inv[i], Khat[i], Khat_inv[i], E[s],
F[s], K[s], K_inv[s], scriptE[i,j], scriptF[i,j], eps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Union

from . import braided, double, functionals, qmatrix, sigma
from .double import DoubleElement, QQElement
from .functionals import DualElement
from .qmatrix import QElement
from .scalar import RatFunc, QZContext

Value = Union[RatFunc, QElement, DualElement, DoubleElement, QQElement]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<tensor>\(x\))|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[-+*/^()\[\],]))")


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    out: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


def _to_raw(ctx: QZContext, v: Value) -> qmatrix.Raw:
    return _as_q(ctx, v).terms


def _as_q(ctx: QZContext, v: Value) -> QElement:
    if isinstance(v, QElement):
        return v
    if isinstance(v, RatFunc):
        return QElement.scalar(ctx, v)
    raise TypeError("expected an element of GL_q(N)")


def _as_dual(ctx: QZContext, v: Value) -> DualElement:
    if isinstance(v, DualElement):
        return v
    if isinstance(v, RatFunc):
        return DualElement(ctx, {(): v} if v else {})
    raise TypeError("expected a functional")


def _as_scalar(v: Value) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    raise TypeError("expected a scalar")


def _q_tensor_value(ctx: QZContext, t: Dict) -> QQElement:
    return QQElement(ctx, dict(t), normal=False)


def _dual_tensor_value(ctx: QZContext, t: Dict) -> "DualTensorValue":
    return DualTensorValue(ctx, dict(t))


class DualTensorValue:
    """Element of H_sigma (x) H_sigma, used only for printing coproducts of functionals."""

    def __init__(self, ctx: QZContext, terms):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v}

    def __str__(self) -> str:
        def key(k):
            return f"{functionals.word_str(k[0]) or '1'} (x) {functionals.word_str(k[1]) or '1'}"
        items = sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]), kv[0]))
        return qmatrix.format_terms(self.ctx, items, key_str=key)


def _fn_table(ctx: QZContext) -> Dict[str, Callable]:
    Q = lambda v: _as_q(ctx, v)
    Dl = lambda v: _as_dual(ctx, v)

    def S(v, k=1):
        if isinstance(v, DualElement):
            return functionals.dual_antipode(v) if k > 0 else functionals.dual_antipode_inv(v)
        return qmatrix.antipode_power(Q(v), k)

    def delta(v):
        if isinstance(v, DualElement):
            return _dual_tensor_value(ctx, functionals.dual_comul(v))
        if isinstance(v, DoubleElement):
            raise TypeError("Delta of a double element is not printable here")
        return _q_tensor_value(ctx, qmatrix.comultiply(Q(v)))

    def counit(v):
        if isinstance(v, DualElement):
            return functionals.dual_counit(v)
        return qmatrix.counit(Q(v))

    return {
        "nf": lambda a: Q(a),
        "sigma": lambda a, b: sigma.sigma_eval(Q(a), Q(b)),
        "sigma_inv": lambda a, b: sigma.sigma_eval(Q(a), Q(b), -1),
        "S": lambda a: S(a, 1),
        "S_inv": lambda a: S(a, -1),
        "Delta": delta,
        "counit": counit,
        "eval": lambda F, y: functionals.dual_eval(Dl(F), Q(y)),
        "gamma": lambda y: double.gamma_map(Q(y)),
        "l_of": lambda y: functionals.l_of(ctx, Q(y).terms),
        "r_of": lambda y: functionals.r_of(ctx, Q(y).terms),
        "detq": lambda: qmatrix.detq(ctx),
        "v": lambda y: sigma.v_eval(Q(y)),
        "u": lambda y: sigma.u_eval(Q(y)),
        "vartheta": lambda y: sigma.vartheta_eval(Q(y)),
        "upsilon": lambda y: sigma.upsilon_eval(Q(y)),
        "act": lambda F, y: braided.yd_action(Dl(F), Q(y)),
        "bmul": lambda a, b: braided.braided_mul(Q(a), Q(b)),
        "bS": lambda a: braided.braided_antipode(Q(a)),
        "pi": lambda a: double.pi_project(a),
    }


_LETTERS = {
    "l": ("l", 2), "r": ("r", 2), "l_inv": ("l_inv", 1), "r_inv": ("r_inv", 1),
    "Khat": ("Khat", 1), "Khat_inv": ("Khat_inv", 1), "E": ("E", 1), "F": ("F", 1),
    "K": ("K", 1), "K_inv": ("K_inv", 1), "scriptE": ("scriptE", 2), "scriptF": ("scriptF", 2),
}


class Parser:
    def __init__(self, ctx: QZContext, text: str):
        self.ctx = ctx
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.fns = _fn_table(ctx)

    # token helpers
    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.take()
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.pos)
        return t

    def parse(self) -> Value:
        v = self.sum()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected {t.text!r}", t.pos)
        return v

    # grammar
    def sum(self) -> Value:
        v = self.tensor()
        while self.peek().text in ("+", "-"):
            op = self.take()
            w = self.tensor()
            v = self.combine(v, w, op)
        return v

    def tensor(self) -> Value:
        start = self.peek().pos
        v = self.product()
        if self.peek().kind == "tensor":
            self.take()
            w = self.product()
            return self.make_tensor(v, w, start)
        return v

    def make_tensor(self, a: Value, b: Value, pos: int) -> Value:
        ctx = self.ctx
        if isinstance(a, (DualElement, RatFunc)) and isinstance(b, (QElement, RatFunc)) and not (
            isinstance(a, RatFunc) and isinstance(b, RatFunc)
        ):
            return DoubleElement.tensor(_as_dual(ctx, a), _as_q(ctx, b))
        if isinstance(a, QElement) and isinstance(b, (QElement, RatFunc)):
            return QQElement.tensor(a, _as_q(ctx, b))
        raise ParseError("a tensor needs a functional or GL_q element on the left and a GL_q element on the right", pos)

    def combine(self, a: Value, b: Value, op: Token) -> Value:
        try:
            if isinstance(a, RatFunc) and not isinstance(b, RatFunc):
                a = self.promote(a, b)
            elif isinstance(b, RatFunc) and not isinstance(a, RatFunc):
                b = self.promote(b, a)
            if type(a) is not type(b):
                raise TypeError
            return a + b if op.text == "+" else a - b
        except TypeError:
            raise ParseError(f"cannot add {_kind(a)} and {_kind(b)}", op.pos) from None

    def promote(self, c: RatFunc, like: Value) -> Value:
        ctx = self.ctx
        if isinstance(like, QElement):
            return QElement.scalar(ctx, c)
        if isinstance(like, DualElement):
            return _as_dual(ctx, c)
        if isinstance(like, DoubleElement):
            return DoubleElement.one(ctx) * c
        if isinstance(like, QQElement):
            return QQElement.one(ctx) * c
        raise TypeError

    def starts_atom(self, t: Token) -> bool:
        return t.kind in ("int", "name") or t.text == "("

    def product(self) -> Value:
        v = self.unary()
        while True:
            t = self.peek()
            if t.text in ("*", "/"):
                self.take()
                w = self.unary()
                v = self.multiply(v, w, t) if t.text == "*" else self.divide(v, w, t)
            elif self.starts_atom(t):
                w = self.unary()
                v = self.multiply(v, w, t)
            else:
                return v

    def multiply(self, a: Value, b: Value, tok: Token) -> Value:
        if isinstance(a, RatFunc) or isinstance(b, RatFunc) or type(a) is type(b):
            try:
                out = a * b
                if out is not NotImplemented:
                    return out
            except (TypeError, ValueError):
                pass
        raise ParseError(f"cannot multiply {_kind(a)} by {_kind(b)}", tok.pos)

    def divide(self, a: Value, b: Value, tok: Token) -> Value:
        if not isinstance(b, RatFunc):
            raise ParseError("only division by scalars is supported", tok.pos)
        if not b:
            raise ParseError("division by zero", tok.pos)
        return a * b.inverse()

    def unary(self) -> Value:
        if self.peek().text == "-":
            tok = self.take()
            v = self.unary()
            return self.multiply(RatFunc(-1), v, tok)
        return self.power()

    def power(self) -> Value:
        v = self.atom()
        if self.peek().text == "^":
            tok = self.take()
            sign = 1
            if self.peek().text == "-":
                self.take()
                sign = -1
            n = self.take()
            if n.kind != "int":
                raise ParseError("expected an integer exponent", n.pos)
            k = sign * int(n.text)
            if isinstance(v, QElement) and v.terms == {(-1, ()): RatFunc(1)}:
                return QElement.det_power(self.ctx, -k)
            if not isinstance(v, RatFunc) and k < 0:
                raise ParseError("negative powers need a scalar or det", tok.pos)
            return v ** k
        return v

    def index(self, count: int) -> List[int]:
        self.expect("[")
        out = []
        for p in range(count):
            t = self.take()
            if t.kind != "int":
                raise ParseError("expected an index", t.pos)
            out.append(int(t.text))
            if p < count - 1:
                self.expect(",")
        self.expect("]")
        return out

    def atom(self) -> Value:
        ctx = self.ctx
        t = self.take()
        if t.kind == "int":
            return RatFunc(int(t.text))
        if t.text == "(":
            v = self.sum()
            self.expect(")")
            return v
        if t.kind != "name":
            raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)
        name = t.text
        try:
            if name == "t":
                return RatFunc.monomial(1, 1)
            if name == "q":
                return ctx.q
            if name == "z":
                return ctx.z
            if name == "det":
                return QElement.det_power(ctx, -1)
            if name == "eps":
                return DualElement.unit(ctx)
            if name == "x" and self.peek().text == "[":
                i, j = self.index(2)
                if not (1 <= i <= ctx.n and 1 <= j <= ctx.n):
                    raise ParseError(f"generator index out of range 1..{ctx.n}", t.pos)
                return QElement.gen(ctx, i, j)
            if name in _LETTERS and self.peek().text == "[":
                kind, arity = _LETTERS[name]
                idx = self.index(arity)
                return functionals.named_generator(ctx, kind, *idx)
            if name in self.fns and self.peek().text == "(":
                self.take()
                args: List[Value] = []
                if self.peek().text != ")":
                    args.append(self.sum())
                    while self.peek().text == ",":
                        self.take()
                        args.append(self.sum())
                self.expect(")")
                return self.fns[name](*args)
        except ParseError:
            raise
        except (TypeError, ValueError, IndexError) as exc:
            raise ParseError(str(exc), t.pos) from None
        raise ParseError(f"unknown name {name!r}", t.pos)


def _kind(v) -> str:
    if isinstance(v, RatFunc):
        return "a scalar"
    if isinstance(v, QElement):
        return "a GL_q element"
    if isinstance(v, DualElement):
        return "a functional"
    if isinstance(v, DoubleElement):
        return "a double element"
    if isinstance(v, QQElement):
        return "a tensor of GL_q elements"
    return type(v).__name__


def parse(ctx: QZContext, text: str) -> Value:
    return Parser(ctx, text).parse()


def render(ctx: QZContext, v, qz: bool = True) -> str:
    """Printed form; scalars in z and q when qz is set, otherwise in t."""
    if isinstance(v, RatFunc):
        return v.in_qz(ctx) if qz else str(v)
    return str(v)
