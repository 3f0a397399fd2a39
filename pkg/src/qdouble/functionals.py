"""Functionals on SL_q(N) generated by l_x = sigma(-, x) and r_a = sigma(a, -).

A dual word is a tuple of letters.  Letters are triples (kind, a, b) with
0-based indices:

    L    (0, i, j), i >= j   l_{x_ij}
    LINV (1, i, i)           l_{S^-1(x_ii)}
    R    (2, i, j), i <= j   r_{x_ij}
    RINV (3, i, i)           r_{S^-1(x_ii)}

The letters l_ij (i < j) and r_ji (i < j) vanish and are never built.  A
word g_1...g_k evaluated on the word x_{p,c} (rows p, columns c) equals the
entry c of e_p pushed through the row transfer maps of g_1, ..., g_k, since
the iterated coproduct of x_{p,c} runs over intermediate row tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Tuple

from .qmatrix import (
    ONE,
    QElement,
    Raw,
    Word,
    add_to,
    antipode_power_raw,
    format_terms,
    mono_str,
    sweedler,
)
from .scalar import RatFunc, QZContext
from .sigma import _transfer, _weights, sigma_raw

L, LINV, R, RINV = 0, 1, 2, 3
Letter = Tuple[int, int, int]
DWord = Tuple[Letter, ...]
Vec = Tuple[Tuple[Tuple[int, ...], RatFunc], ...]


# ---------------------------------------------------------------- letter values

@lru_cache(maxsize=None)
def _rtransfer(ctx: QZContext, rows: Tuple[int, ...], a: int, b: int, sign: int) -> Vec:
    """Column tuples c with the value sigma^(sign)(x_ab, x_{rows, c})."""
    plain, diag, swap = _weights(ctx, sign)
    d = len(rows)
    order = range(d - 1, -1, -1) if sign > 0 else range(d)
    states: Dict[Tuple[int, Tuple[int, ...]], RatFunc] = {(a, ()): ONE}
    for t in order:
        p = rows[t]
        nxt: Dict[Tuple[int, Tuple[int, ...]], RatFunc] = {}
        for (k, cols), val in states.items():
            add_to(nxt, (k, cols + (p,)), val * (diag if p == k else plain))
            if k < p:
                add_to(nxt, (p, cols + (k,)), val * swap)
        states = nxt
    out: Dict[Tuple[int, ...], RatFunc] = {}
    for (k, cols), val in states.items():
        if k == b:
            if sign > 0:
                cols = cols[::-1]
            add_to(out, cols, val)
    return tuple(out.items())


def _letter_row(ctx: QZContext, letter: Letter, rows: Tuple[int, ...]) -> Vec:
    kind, a, b = letter
    if kind == L:
        return _transfer(ctx, rows, a, b, 1)
    if kind == LINV:
        return _transfer(ctx, rows, a, a, -1)
    if kind == R:
        return _rtransfer(ctx, rows, a, b, 1)
    return _rtransfer(ctx, rows, a, a, -1)


@lru_cache(maxsize=None)
def _word_row(ctx: QZContext, word: DWord, rows: Tuple[int, ...]) -> Dict[Tuple[int, ...], RatFunc]:
    if not word:
        return {rows: ONE}
    prev = _word_row(ctx, word[:-1], rows)
    acc: Dict[Tuple[int, ...], RatFunc] = {}
    last = word[-1]
    for mid, v1 in prev.items():
        for cols, v2 in _letter_row(ctx, last, mid):
            add_to(acc, cols, v1 * v2)
    return acc


def eval_word(ctx: QZContext, word: DWord, qword: Word) -> RatFunc:
    """Value of a dual word on a (possibly unsorted) word in the x_ij."""
    n = ctx.n
    rows = tuple(g // n for g in qword)
    cols = tuple(g % n for g in qword)
    return _word_row(ctx, word, rows).get(cols, RatFunc())


# ---------------------------------------------------------------- elements

def letter_str(letter: Letter) -> str:
    kind, a, b = letter
    if kind == L:
        return f"l[{a + 1},{b + 1}]"
    if kind == LINV:
        return f"l_inv[{a + 1}]"
    if kind == R:
        return f"r[{a + 1},{b + 1}]"
    return f"r_inv[{a + 1}]"


def word_str(word: DWord) -> str:
    return "*".join(letter_str(g) for g in word)


class DualElement:
    """Finite linear combination of dual words.

    Equality is structural; use functional_equal_upto for equality as functionals.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: QZContext, terms: Optional[Dict[DWord, RatFunc]] = None):
        self.ctx = ctx
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def unit(cls, ctx: QZContext) -> "DualElement":
        return cls(ctx, {(): ONE})

    @classmethod
    def zero(cls, ctx: QZContext) -> "DualElement":
        return cls(ctx, {})

    @classmethod
    def letter(cls, ctx: QZContext, letter: Letter, coef=ONE) -> "DualElement":
        kind, a, b = letter
        if not (0 <= a < ctx.n and 0 <= b < ctx.n):
            raise IndexError("dual letter index out of range")
        if (kind == L and a < b) or (kind == R and a > b):
            return cls(ctx, {})
        return cls(ctx, {(letter,): RatFunc.coerce(coef)})

    def _coerce(self, other) -> "DualElement":
        if isinstance(other, DualElement):
            if other.ctx != self.ctx:
                raise ValueError("context mismatch")
            return other
        return DualElement(self.ctx, {(): RatFunc.coerce(other)})

    def __add__(self, other) -> "DualElement":
        other = self._coerce(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            add_to(acc, k, v)
        return DualElement(self.ctx, acc)

    __radd__ = __add__

    def __neg__(self) -> "DualElement":
        return DualElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "DualElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "DualElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "DualElement":
        if isinstance(other, (int, RatFunc)):
            c = RatFunc.coerce(other)
            return DualElement(self.ctx, {k: v * c for k, v in self.terms.items()})
        if not isinstance(other, DualElement):
            return NotImplemented
        other = self._coerce(other)
        acc: Dict[DWord, RatFunc] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                add_to(acc, w1 + w2, c1 * c2)
        return DualElement(self.ctx, acc)

    def __rmul__(self, other) -> "DualElement":
        if isinstance(other, (int, RatFunc)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "DualElement":
        out = DualElement.unit(self.ctx)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, h) -> RatFunc:
        return dual_eval(self, h)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __str__(self) -> str:
        return format_terms(self.ctx, self.sorted_terms(), key_str=word_str)

    def __repr__(self) -> str:
        return f"DualElement({self})"


def dual_eval_raw(F: DualElement, raw: Raw) -> RatFunc:
    ctx = F.ctx
    acc = RatFunc()
    for (_, w), c in raw.items():
        for word, cf in F.terms.items():
            v = eval_word(ctx, word, w)
            if v:
                acc = acc + c * cf * v
    return acc


def dual_eval(F: DualElement, h: QElement) -> RatFunc:
    """<F, h>; det-powers evaluate trivially."""
    if isinstance(h, QElement):
        if h.ctx != F.ctx:
            raise ValueError("context mismatch")
        return dual_eval_raw(F, h.terms)
    return dual_eval_raw(F, h)


# ---------------------------------------------------------------- images of GL_q elements

def l_of(ctx: QZContext, raw: Raw) -> DualElement:
    """l_y for a GL_q element y, using l_{xy} = l_y l_x and l_ij = 0 for i < j."""
    n = ctx.n
    acc: Dict[DWord, RatFunc] = {}
    for (_, w), c in raw.items():
        letters = []
        for g in reversed(w):
            i, j = divmod(g, n)
            if i < j:
                break
            letters.append((L, i, j))
        else:
            add_to(acc, tuple(letters), c)
    return DualElement(ctx, acc)


def r_of(ctx: QZContext, raw: Raw) -> DualElement:
    """r_a for a GL_q element a, using r_{ab} = r_a r_b and r_ji = 0 for i < j."""
    n = ctx.n
    acc: Dict[DWord, RatFunc] = {}
    for (_, w), c in raw.items():
        letters = []
        for g in w:
            i, j = divmod(g, n)
            if i > j:
                break
            letters.append((R, i, j))
        else:
            add_to(acc, tuple(letters), c)
    return DualElement(ctx, acc)


def letter_preimage(ctx: QZContext, letter: Letter) -> Raw:
    """The GL_q element y with letter = l_y (L kinds) or r_y (R kinds)."""
    kind, a, b = letter
    g = a * ctx.n + b
    if kind in (L, R):
        return {(0, (g,)): ONE}
    return antipode_power_raw(ctx, {(0, (g,)): ONE}, -1)


# ---------------------------------------------------------------- Hopf structure

DualTensor = Dict[Tuple[DWord, DWord], RatFunc]


def _letter_coproduct(ctx: QZContext, letter: Letter) -> List[Tuple[Letter, Letter]]:
    kind, a, b = letter
    if kind == L:
        return [((L, a, k), (L, k, b)) for k in range(b, a + 1)]
    if kind == R:
        return [((R, k, b), (R, a, k)) for k in range(a, b + 1)]
    return [(letter, letter)]


def dual_comul(F: DualElement) -> DualTensor:
    """Delta on dual words as an algebra map; Delta(l_x) = l_x1 (x) l_x2, Delta(r_a) = r_a2 (x) r_a1."""
    ctx = F.ctx
    acc: DualTensor = {}
    for word, c in F.terms.items():
        parts: Dict[Tuple[DWord, DWord], RatFunc] = {((), ()): c}
        for g in word:
            nxt: Dict[Tuple[DWord, DWord], RatFunc] = {}
            for (u, v), cu in parts.items():
                for g1, g2 in _letter_coproduct(ctx, g):
                    add_to(nxt, (u + (g1,), v + (g2,)), cu)
            parts = nxt
        for k, v in parts.items():
            add_to(acc, k, v)
    return acc


def dual_comul_iter(F: DualElement, legs: int) -> Dict[Tuple[DWord, ...], RatFunc]:
    """Iterated coproduct into `legs` legs, expanding the last leg each time."""
    acc: Dict[Tuple[DWord, ...], RatFunc] = {(w,): c for w, c in F.terms.items()}
    for _ in range(legs - 1):
        nxt: Dict[Tuple[DWord, ...], RatFunc] = {}
        for key, c in acc.items():
            for (u, v), cu in dual_comul(DualElement(F.ctx, {key[-1]: ONE})).items():
                add_to(nxt, key[:-1] + (u, v), c * cu)
        acc = nxt
    return acc


def dual_counit(F: DualElement) -> RatFunc:
    acc = RatFunc()
    for word, c in F.terms.items():
        if all(g[0] in (LINV, RINV) or g[1] == g[2] for g in word):
            acc = acc + c
    return acc


@lru_cache(maxsize=None)
def _letter_antipode(ctx: QZContext, letter: Letter, power: int) -> Tuple[Tuple[DWord, RatFunc], ...]:
    """S^power of one letter for power = +1 or -1."""
    kind, a, b = letter
    if kind in (LINV, RINV):
        return ((((kind - 1, a, a),), ONE),)
    if a == b:
        return ((((kind + 1, a, a),), ONE),)
    raw = antipode_power_raw(ctx, {(0, (a * ctx.n + b,)): ONE}, -power)
    image = l_of(ctx, raw) if kind == L else r_of(ctx, raw)
    return tuple(image.terms.items())


def _dual_antipode_power(F: DualElement, power: int) -> DualElement:
    ctx = F.ctx
    acc: Dict[DWord, RatFunc] = {}
    for word, c in F.terms.items():
        parts: Dict[DWord, RatFunc] = {(): c}
        for g in word:
            nxt: Dict[DWord, RatFunc] = {}
            for u, cu in parts.items():
                for v, cv in _letter_antipode(ctx, g, power):
                    add_to(nxt, v + u, cu * cv)
            parts = nxt
        for k, v in parts.items():
            add_to(acc, k, v)
    return DualElement(ctx, acc)


def dual_antipode(F: DualElement) -> DualElement:
    """S(l_x) = l_{S^-1 x}, S(r_a) = r_{S^-1 a}, anti-multiplicative."""
    return _dual_antipode_power(F, 1)


def dual_antipode_inv(F: DualElement) -> DualElement:
    return _dual_antipode_power(F, -1)


def dual_mul(F: DualElement, G: DualElement) -> DualElement:
    return F * G


# ---------------------------------------------------------------- named generators

def _check(ctx: QZContext, *idx: int, top: Optional[int] = None) -> None:
    top = ctx.n if top is None else top
    for i in idx:
        if not 1 <= i <= top:
            raise IndexError(f"index {i} out of range 1..{top}")


def l_gen(ctx: QZContext, i: int, j: int) -> DualElement:
    """l_ij, zero when i < j."""
    _check(ctx, i, j)
    return l_of(ctx, {(0, ((i - 1) * ctx.n + j - 1,)): ONE})


def r_gen(ctx: QZContext, i: int, j: int) -> DualElement:
    """r_ij, zero when i > j."""
    _check(ctx, i, j)
    return r_of(ctx, {(0, ((i - 1) * ctx.n + j - 1,)): ONE})


def khat(ctx: QZContext, i: int) -> DualElement:
    _check(ctx, i)
    return DualElement.letter(ctx, (L, i - 1, i - 1))


def khat_inv(ctx: QZContext, i: int) -> DualElement:
    _check(ctx, i)
    return DualElement.letter(ctx, (LINV, i - 1, i - 1))


def r_inv(ctx: QZContext, i: int) -> DualElement:
    _check(ctx, i)
    return DualElement.letter(ctx, (RINV, i - 1, i - 1))


def gen_E(ctx: QZContext, s: int) -> DualElement:
    _check(ctx, s, top=ctx.n - 1)
    return khat_inv(ctx, s + 1) * l_gen(ctx, s + 1, s)


def gen_F(ctx: QZContext, s: int) -> DualElement:
    _check(ctx, s, top=ctx.n - 1)
    return (r_inv(ctx, s) * r_gen(ctx, s, s + 1)) * ctx.qdiff.inverse() ** 2


def gen_K(ctx: QZContext, i: int) -> DualElement:
    _check(ctx, i, top=ctx.n - 1)
    return khat_inv(ctx, i + 1) * khat(ctx, i)


def gen_K_inv(ctx: QZContext, i: int) -> DualElement:
    _check(ctx, i, top=ctx.n - 1)
    return khat(ctx, i + 1) * khat_inv(ctx, i)


def q_commutator(ctx: QZContext, x: DualElement, y: DualElement) -> DualElement:
    """[x, y]_q = q x y - y x."""
    return x * y * ctx.q - y * x


def script_E(ctx: QZContext, i: int, j: int, base=gen_E) -> DualElement:
    """E_{j,j} = 1, E_{j+1,j} = q^-1 E_j, E_{i+1,j} = (q^2 - 1)^-1 [E_{i,j}, E_i]_q."""
    _check(ctx, i, j)
    if i < j:
        raise IndexError("script E needs i >= j")
    if i == j:
        return DualElement.unit(ctx)
    if i == j + 1:
        return base(ctx, j) * ctx.q.inverse()
    prev = script_E(ctx, i - 1, j, base)
    return q_commutator(ctx, prev, base(ctx, i - 1)) * (ctx.qpow(2) - 1).inverse()


def script_F(ctx: QZContext, i: int, j: int) -> DualElement:
    """F_{i,i} = 1, F_{i,i+1} = q (1 - q^-2)^2 F_i, F_{i,j+1} = (1 - q^-2) [F_j, F_{i,j}]_q."""
    _check(ctx, i, j)
    if j < i:
        raise IndexError("script F needs i <= j")
    if i == j:
        return DualElement.unit(ctx)
    c = 1 - ctx.qpow(-2)
    if j == i + 1:
        return gen_F(ctx, i) * (ctx.q * c * c)
    prev = script_F(ctx, i, j - 1)
    return q_commutator(ctx, gen_F(ctx, j - 1), prev) * c


NAMED = {
    "Khat": (khat, 1),
    "Khat_inv": (khat_inv, 1),
    "E": (gen_E, 1),
    "F": (gen_F, 1),
    "K": (gen_K, 1),
    "K_inv": (gen_K_inv, 1),
    "scriptE": (script_E, 2),
    "scriptF": (script_F, 2),
    "l": (l_gen, 2),
    "r": (r_gen, 2),
    "l_inv": (khat_inv, 1),
    "r_inv": (r_inv, 1),
}


def named_generator(ctx: QZContext, kind: str, *index: int) -> DualElement:
    try:
        fn, arity = NAMED[kind]
    except KeyError:
        raise ValueError(f"unknown generator {kind!r}") from None
    if len(index) != arity:
        raise ValueError(f"{kind} takes {arity} index(es)")
    return fn(ctx, *index)


# ---------------------------------------------------------------- bounded-degree equality

@dataclass
class Comparison:
    """Outcome of a bounded-degree comparison; truthy iff equal."""

    equal: bool
    degree: int
    witness: Optional[str] = None
    left: Optional[RatFunc] = None
    right: Optional[RatFunc] = None
    ctx: Optional[QZContext] = None

    def __bool__(self) -> bool:
        return self.equal

    def detail(self) -> str:
        if self.equal:
            return f"verified up to degree {self.degree}"
        show = (lambda v: v.in_qz(self.ctx)) if self.ctx is not None else str
        return f"differs on {self.witness}: {show(self.left)} vs {show(self.right)}"


@lru_cache(maxsize=None)
def monomials_upto(ctx: QZContext, d: int) -> Tuple[Word, ...]:
    """Sorted words of length <= d, shortest first, lexicographic within a length."""
    out: List[Word] = []
    for k in range(d + 1):
        out.extend(combinations_with_replacement(range(ctx.n * ctx.n), k))
    return tuple(out)


def functional_equal_upto(F: DualElement, G: DualElement, d: int = 4) -> Comparison:
    """Compare F and G on every PBW monomial of length <= d."""
    ctx = F.ctx
    if G.ctx != ctx:
        raise ValueError("context mismatch")
    if F.terms == G.terms:
        return Comparison(True, d)
    diff = F - G
    for w in monomials_upto(ctx, d):
        v = RatFunc()
        for word, c in diff.terms.items():
            x = eval_word(ctx, word, w)
            if x:
                v = v + c * x
        if v:
            mono = {(0, w): ONE}
            return Comparison(False, d, mono_str(ctx, (0, w)) or "1", dual_eval_raw(F, mono), dual_eval_raw(G, mono), ctx)
    return Comparison(True, d)


def tensor_equal_upto(ctx: QZContext, A: DualTensor, B: DualTensor, d: int = 3) -> Comparison:
    """Compare two elements of H (x) H on all pairs of PBW monomials of length <= d."""
    diff: DualTensor = dict(A)
    for k, v in B.items():
        add_to(diff, k, -v)
    if not diff:
        return Comparison(True, d)
    monos = monomials_upto(ctx, d)
    firsts = {u for u, _ in diff}
    seconds = {v for _, v in diff}
    val1 = {u: [eval_word(ctx, u, w) for w in monos] for u in firsts}
    val2 = {v: [eval_word(ctx, v, w) for w in monos] for v in seconds}
    for a, wa in enumerate(monos):
        for b, wb in enumerate(monos):
            tot = RatFunc()
            for (u, v), c in diff.items():
                x = val1[u][a]
                if x:
                    y = val2[v][b]
                    if y:
                        tot = tot + c * x * y
            if tot:
                wit = f"{mono_str(ctx, (0, wa)) or '1'} (x) {mono_str(ctx, (0, wb)) or '1'}"
                return Comparison(False, d, wit, tensor_value(ctx, A, wa, wb), tensor_value(ctx, B, wa, wb), ctx)
    return Comparison(True, d)


def tensor_value(ctx: QZContext, T: DualTensor, w1: Word, w2: Word) -> RatFunc:
    acc = RatFunc()
    for (u, v), c in T.items():
        x = eval_word(ctx, u, w1)
        if x:
            acc = acc + c * x * eval_word(ctx, v, w2)
    return acc


def tensor_from(F: DualElement, G: DualElement) -> DualTensor:
    acc: DualTensor = {}
    for u, cu in F.terms.items():
        for v, cv in G.terms.items():
            add_to(acc, (u, v), cu * cv)
    return acc


def tensor_mul(A: DualTensor, B: DualTensor) -> DualTensor:
    acc: DualTensor = {}
    for (u1, v1), c1 in A.items():
        for (u2, v2), c2 in B.items():
            add_to(acc, (u1 + u2, v1 + v2), c1 * c2)
    return acc


def tensor_add(*parts: DualTensor) -> DualTensor:
    acc: DualTensor = {}
    for p in parts:
        for k, v in p.items():
            add_to(acc, k, v)
    return acc


# ---------------------------------------------------------------- Borel pairing

def _word_preimage(ctx: QZContext, word: DWord, reverse: bool) -> Raw:
    acc: Raw = {(0, ()): ONE}
    for g in (reversed(word) if reverse else word):
        piece = letter_preimage(ctx, g)
        nxt: Raw = {}
        for (e1, w1), c1 in acc.items():
            for (e2, w2), c2 in piece.items():
                add_to(nxt, (e1 + e2, w1 + w2), c1 * c2)
        acc = nxt
    return acc


def borel_pair(u: DualElement, v: DualElement) -> RatFunc:
    """<r_a, l_x> = sigma(a, x) on H_r (x) H_l."""
    ctx = u.ctx
    acc = RatFunc()
    for wu, cu in u.terms.items():
        if any(g[0] not in (R, RINV) for g in wu):
            raise ValueError("left argument must use r-letters only")
        a = _word_preimage(ctx, wu, reverse=False)
        for wv, cv in v.terms.items():
            if any(g[0] not in (L, LINV) for g in wv):
                raise ValueError("right argument must use l-letters only")
            x = _word_preimage(ctx, wv, reverse=True)
            val = sigma_raw(ctx, a, x)
            if val:
                acc = acc + cu * cv * val
    return acc


def _phi_E(ctx: QZContext, s: int) -> DualElement:
    return gen_F(ctx, s)


def phi(F: DualElement) -> DualElement:
    """Algebra map H_l -> H_r with Khat_i -> Khat_i^-1 and E_s -> F_s."""
    ctx = F.ctx
    out = DualElement.zero(ctx)
    for word, c in F.terms.items():
        img = DualElement.unit(ctx) * c
        for kind, a, b in word:
            if kind == LINV:
                piece = DualElement.letter(ctx, (R, a, a))
            elif kind == L and a == b:
                piece = DualElement.letter(ctx, (RINV, a, a))
            elif kind == L:
                # l_{ab} = E_{a,b} Khat_a
                piece = script_E(ctx, a + 1, b + 1, base=_phi_E) * DualElement.letter(ctx, (RINV, a, a))
            else:
                raise ValueError("phi is defined on l-letters only")
            img = img * piece
        out = out + img
    return out


def self_pair(u: DualElement, v: DualElement) -> RatFunc:
    """Self-duality pairing of H_l: <u, v> = <phi(u), v>."""
    return borel_pair(phi(u), v)


# ---------------------------------------------------------------- straightening l_y r_a

def _mono_raw(m) -> Raw:
    return {m: ONE}


def straighten_lr_sides(a: QElement, y: QElement) -> Tuple[DualElement, DualElement]:
    """l_y r_a and sigma(a_1, S y_3) sigma(a_3, y_1) r_{a_2} l_{y_2}."""
    ctx = a.ctx
    lhs = l_of(ctx, y.terms) * r_of(ctx, a.terms)
    rhs = DualElement.zero(ctx)
    ys = list(sweedler(ctx, y.terms, 3))
    for ca, (a1, a2, a3) in sweedler(ctx, a.terms, 3):
        for cy, (y1, y2, y3) in ys:
            v = sigma_raw(ctx, _mono_raw(a3), _mono_raw(y1))
            if not v:
                continue
            v = v * sigma_raw(ctx, _mono_raw(a1), antipode_power_raw(ctx, _mono_raw(y3), 1))
            if v:
                rhs = rhs + r_of(ctx, _mono_raw(a2)) * l_of(ctx, _mono_raw(y2)) * (ca * cy * v)
    return lhs, rhs


def straighten_rl_sides(a: QElement, y: QElement) -> Tuple[DualElement, DualElement]:
    """r_a l_y and sigma(S^-1 a_3, y_1) sigma(a_1, y_3) l_{y_2} r_{a_2}."""
    ctx = a.ctx
    lhs = r_of(ctx, a.terms) * l_of(ctx, y.terms)
    rhs = DualElement.zero(ctx)
    ys = list(sweedler(ctx, y.terms, 3))
    for ca, (a1, a2, a3) in sweedler(ctx, a.terms, 3):
        for cy, (y1, y2, y3) in ys:
            v = sigma_raw(ctx, _mono_raw(a1), _mono_raw(y3))
            if not v:
                continue
            v = v * sigma_raw(ctx, antipode_power_raw(ctx, _mono_raw(a3), -1), _mono_raw(y1))
            if v:
                rhs = rhs + l_of(ctx, _mono_raw(y2)) * r_of(ctx, _mono_raw(a2)) * (ca * cy * v)
    return lhs, rhs
