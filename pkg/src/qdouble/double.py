"""Generalized quantum doubles over the coquasitriangular GL_q(N).

DoubleElement lives in D(H_sigma^cop, SL_q(N)): pairs (dual word, monomial).
Sweedler subscripts of the dual factor are taken in H_sigma itself, and
S_U below is the antipode of H_sigma.  QQElement lives in D(H, H) with both
factors monomials, the double built from sigma as a skew pairing.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Optional, Tuple

from .functionals import (
    Comparison,
    DualElement,
    DualTensor,
    DWord,
    dual_antipode_inv,
    dual_comul,
    dual_comul_iter,
    dual_counit,
    dual_eval_raw,
    eval_word,
    functional_equal_upto,
    l_of,
    tensor_equal_upto,
    word_str,
)
from .qmatrix import (
    ONE,
    Mono,
    QElement,
    Raw,
    add_to,
    antipode_power_mono,
    antipode_power_raw,
    counit_word,
    format_terms,
    mono_str,
    nf_word,
    sweedler,
    to_mq,
)
from .scalar import RatFunc, QZContext
from .sigma import sigma_raw, upsilon_eval, upsilon_inv, vartheta_eval, vartheta_inv

DKey = Tuple[DWord, Mono]


def _nf_mono(ctx: QZContext, mono: Mono):
    e, w = mono
    for v, c in nf_word(ctx, w):
        yield (e, v), c


class DoubleElement:
    """Element of D(H_sigma^cop, SL_q(N)); Q-legs are kept in normal form."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: QZContext, terms: Optional[Dict[DKey, RatFunc]] = None, normal: bool = True):
        self.ctx = ctx
        terms = terms or {}
        if not normal:
            acc: Dict[DKey, RatFunc] = {}
            for (f, m), c in terms.items():
                for m2, c2 in _nf_mono(ctx, m):
                    add_to(acc, (f, m2), c * c2)
            terms = acc
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def tensor(cls, F: DualElement, y: QElement) -> "DoubleElement":
        if F.ctx != y.ctx:
            raise ValueError("context mismatch")
        acc: Dict[DKey, RatFunc] = {}
        for w, c in F.terms.items():
            for m, cm in y.terms.items():
                add_to(acc, (w, m), c * cm)
        return cls(F.ctx, acc)

    @classmethod
    def one(cls, ctx: QZContext) -> "DoubleElement":
        return cls(ctx, {((), (0, ())): ONE})

    def __add__(self, other: "DoubleElement") -> "DoubleElement":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            add_to(acc, k, v)
        return DoubleElement(self.ctx, acc)

    def __neg__(self) -> "DoubleElement":
        return DoubleElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "DoubleElement") -> "DoubleElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, RatFunc)):
            c = RatFunc.coerce(other)
            return DoubleElement(self.ctx, {k: v * c for k, v in self.terms.items()})
        if isinstance(other, DoubleElement):
            return d_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, RatFunc)):
            return self * other
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def by_q_leg(self, k: Optional[int] = None) -> Dict[tuple, DualElement]:
        """Group as sum of DualElement (x) M_q word after clearing det-powers with det_q^k."""
        if k is None:
            k = max((m[0] for _, m in self.terms), default=0)
        groups: Dict[tuple, Dict[DWord, RatFunc]] = {}
        for (f, m), c in self.terms.items():
            for w, cw in to_mq(self.ctx, {m: ONE}, k).items():
                add_to(groups.setdefault(w, {}), f, c * cw)
        return {w: DualElement(self.ctx, t) for w, t in groups.items() if t}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]), kv[0][0], len(kv[0][1][1]), kv[0][1]))

    def __str__(self) -> str:
        def key(k):
            f, m = k
            fs = word_str(f) or "1"
            ms = mono_str(self.ctx, m) or "1"
            return f"{fs} (x) {ms}"
        return format_terms(self.ctx, self.sorted_terms(), key_str=key)

    def __repr__(self) -> str:
        return f"DoubleElement({self})"


def double_equal(a: DoubleElement, b: DoubleElement, d: int = 3) -> Comparison:
    """Compare dual legs semantically after aligning the Q legs in M_q(N)."""
    if a.terms == b.terms:
        return Comparison(True, d)
    k = max([m[0] for _, m in a.terms] + [m[0] for _, m in b.terms] + [0])
    ga, gb = a.by_q_leg(k), b.by_q_leg(k)
    zero = DualElement.zero(a.ctx)
    for w in sorted(set(ga) | set(gb), key=lambda w: (len(w), w)):
        res = functional_equal_upto(ga.get(w, zero), gb.get(w, zero), d)
        if not res:
            res.witness = f"({res.witness}) on Q-leg {mono_str(a.ctx, (0, w)) or '1'}"
            return res
    return Comparison(True, d)


# ---------------------------------------------------------------- structure maps

@lru_cache(maxsize=None)
def _dmul_kernel(ctx: QZContext, n: DWord, x: Mono) -> Tuple[Tuple[Tuple[DWord, Mono], RatFunc], ...]:
    """Terms <n_3, x_1><S_U^-1(n_1), x_3> n_2 (x) x_2 for single words n and x."""
    acc: Dict[Tuple[DWord, Mono], RatFunc] = {}
    legs_n = dual_comul_iter(DualElement(ctx, {n: ONE}), 3)
    legs_x = list(sweedler(ctx, {x: ONE}, 3))
    for (n1, n2, n3), cn in legs_n.items():
        for cx, (x1, x2, x3) in legs_x:
            a = eval_word(ctx, n3, x1[1])
            if not a:
                continue
            b = dual_eval_raw(DualElement(ctx, {n1: ONE}), antipode_power_mono(ctx, x3, -1))
            if b:
                add_to(acc, (n2, x2), cn * cx * a * b)
    return tuple(acc.items())


def d_mul(a: DoubleElement, b: DoubleElement) -> DoubleElement:
    """(m (x) x)(n (x) y) = <n_3, x_1><S_U^-1(n_1), x_3> m n_2 (x) x_2 y."""
    ctx = a.ctx
    if b.ctx != ctx:
        raise ValueError("context mismatch")
    acc: Dict[DKey, RatFunc] = {}
    for (m, x), c1 in a.terms.items():
        for (n, y), c2 in b.terms.items():
            for (n2, x2), k in _dmul_kernel(ctx, n, x):
                mono = (x2[0] + y[0], x2[1] + y[1])
                add_to(acc, (m + n2, mono), c1 * c2 * k)
    return DoubleElement(ctx, acc, normal=False)


DTensor = Dict[Tuple[DKey, DKey], RatFunc]


def d_comul(a: DoubleElement) -> DTensor:
    """Delta(F (x) y) = (F_2 (x) y_1) (x) (F_1 (x) y_2)."""
    ctx = a.ctx
    acc: DTensor = {}
    for (f, y), c in a.terms.items():
        fl = dual_comul(DualElement(ctx, {f: ONE}))
        for cy, (y1, y2) in sweedler(ctx, {y: ONE}, 2):
            for m1, c1 in _nf_mono(ctx, y1):
                for m2, c2 in _nf_mono(ctx, y2):
                    for (f1, f2), cf in fl.items():
                        add_to(acc, ((f2, m1), (f1, m2)), c * cy * c1 * c2 * cf)
    return acc


def d_counit(a: DoubleElement) -> RatFunc:
    acc = RatFunc()
    for (f, (e, w)), c in a.terms.items():
        if counit_word(a.ctx, w):
            acc = acc + c * dual_counit(DualElement(a.ctx, {f: ONE}))
    return acc


def d_antipode(a: DoubleElement) -> DoubleElement:
    """S(m (x) x) = <m_1, x_3><m_3, S_V^-1(x_1)> S_U^-1(m_2) (x) S_V(x_2)."""
    ctx = a.ctx
    acc: Dict[DKey, RatFunc] = {}
    for (m, x), c in a.terms.items():
        legs_m = dual_comul_iter(DualElement(ctx, {m: ONE}), 3)
        for cx, (x1, x2, x3) in sweedler(ctx, {x: ONE}, 3):
            sx1 = antipode_power_mono(ctx, x1, -1)
            sx2 = antipode_power_mono(ctx, x2, 1)
            for (m1, m2, m3), cm in legs_m.items():
                v = eval_word(ctx, m1, x3[1])
                if not v:
                    continue
                v = v * dual_eval_raw(DualElement(ctx, {m3: ONE}), sx1)
                if not v:
                    continue
                sm2 = dual_antipode_inv(DualElement(ctx, {m2: ONE}))
                for f, cf in sm2.terms.items():
                    for mono, cs in sx2.items():
                        add_to(acc, (f, mono), c * cx * cm * v * cf * cs)
    return DoubleElement(ctx, acc, normal=False)


def d_multiply_legs(ctx: QZContext, t: DTensor) -> DoubleElement:
    """m(t) = sum a b over the legs of t."""
    out = DoubleElement(ctx, {})
    for (k1, k2), c in t.items():
        out = out + d_mul(DoubleElement(ctx, {k1: c}), DoubleElement(ctx, {k2: ONE}))
    return out


def d_tensor_equal(ctx: QZContext, a: DTensor, b: DTensor, d: int = 3) -> Comparison:
    """Equality in D (x) D: align Q legs in M_q(N), compare dual legs in H (x) H."""
    if a == b:
        return Comparison(True, d)
    keys = [k for t in (a, b) for k in t]
    k1 = max([x[0][1][0] for x in keys] + [0])
    k2 = max([x[1][1][0] for x in keys] + [0])

    def group(t: DTensor):
        out: Dict[tuple, DualTensor] = {}
        for ((f1, m1), (f2, m2)), c in t.items():
            for w1, c1 in to_mq(ctx, {m1: ONE}, k1).items():
                for w2, c2 in to_mq(ctx, {m2: ONE}, k2).items():
                    add_to(out.setdefault((w1, w2), {}), (f1, f2), c * c1 * c2)
        return out

    ga, gb = group(a), group(b)
    for key in sorted(set(ga) | set(gb)):
        res = tensor_equal_upto(ctx, ga.get(key, {}), gb.get(key, {}), d)
        if not res:
            res.witness = f"({res.witness}) on Q-legs {mono_str(ctx, (0, key[0])) or '1'} (x) {mono_str(ctx, (0, key[1])) or '1'}"
            return res
    return Comparison(True, d)


# ---------------------------------------------------------------- gamma and the projection

def gamma_map(y: QElement) -> DualElement:
    """gamma(y) = l_{S^-1(y)}."""
    return l_of(y.ctx, antipode_power_raw(y.ctx, y.terms, -1))


def gamma_raw(ctx: QZContext, raw: Raw) -> DualElement:
    return l_of(ctx, antipode_power_raw(ctx, raw, -1))


def i_embed(F: DualElement) -> DoubleElement:
    return DoubleElement(F.ctx, {(w, (0, ())): c for w, c in F.terms.items()})


def j_embed(y: QElement) -> DoubleElement:
    return DoubleElement.tensor(DualElement.unit(y.ctx), y)


def pi_project(a: DoubleElement) -> DualElement:
    """pi(F (x) y) = F gamma(y)."""
    ctx = a.ctx
    out = DualElement.zero(ctx)
    for (f, m), c in a.terms.items():
        out = out + DualElement(ctx, {f: c}) * gamma_raw(ctx, {m: ONE})
    return out


def gamma_condition_sides(y: QElement, F: DualElement) -> Tuple[DualElement, DualElement]:
    """gamma(y) F and sum <F_1, S^-1 y_3><F_3, y_1> F_2 gamma(y_2)."""
    ctx = y.ctx
    lhs = gamma_map(y) * F
    rhs = DualElement.zero(ctx)
    legs_f = dual_comul_iter(F, 3)
    for cy, (y1, y2, y3) in sweedler(ctx, y.terms, 3):
        s3 = antipode_power_mono(ctx, y3, -1)
        g2 = gamma_raw(ctx, {y2: ONE})
        for (f1, f2, f3), cf in legs_f.items():
            a = eval_word(ctx, f3, y1[1])
            if not a:
                continue
            b = dual_eval_raw(DualElement(ctx, {f1: ONE}), s3)
            if b:
                rhs = rhs + DualElement(ctx, {f2: cy * cf * a * b}) * g2
    return lhs, rhs


def check_gamma_condition(y: QElement, F: DualElement, d: int = 3) -> Comparison:
    lhs, rhs = gamma_condition_sides(y, F)
    return functional_equal_upto(lhs, rhs, d)


def gamma_prime_sides(y: QElement, F: DualElement) -> Tuple[DualElement, DualElement]:
    """<F_1, y_2> gamma(y_1) F_2 and <F_2, y_1> F_1 gamma(y_2)."""
    ctx = y.ctx
    lhs = DualElement.zero(ctx)
    rhs = DualElement.zero(ctx)
    legs_f = dual_comul(F)
    for cy, (y1, y2) in sweedler(ctx, y.terms, 2):
        g1 = gamma_raw(ctx, {y1: ONE})
        g2 = gamma_raw(ctx, {y2: ONE})
        for (f1, f2), cf in legs_f.items():
            a = eval_word(ctx, f1, y2[1])
            if a:
                lhs = lhs + g1 * DualElement(ctx, {f2: cy * cf * a})
            b = eval_word(ctx, f2, y1[1])
            if b:
                rhs = rhs + DualElement(ctx, {f1: cy * cf * b}) * g2
    return lhs, rhs


def gammagamma_sides(x: QElement, y: QElement) -> Tuple[DualElement, DualElement]:
    """<gamma(x_2), y_2> gamma(y_1) gamma(x_1) and <gamma(x_1), y_1> gamma(x_2) gamma(y_2)."""
    ctx = x.ctx
    lhs = DualElement.zero(ctx)
    rhs = DualElement.zero(ctx)
    xs = list(sweedler(ctx, x.terms, 2))
    ys = list(sweedler(ctx, y.terms, 2))
    for cx, (x1, x2) in xs:
        gx1 = gamma_raw(ctx, {x1: ONE})
        gx2 = gamma_raw(ctx, {x2: ONE})
        for cy, (y1, y2) in ys:
            a = dual_eval_raw(gx2, {y2: ONE})
            if a:
                lhs = lhs + gamma_raw(ctx, {y1: ONE}) * gx1 * (cx * cy * a)
            b = dual_eval_raw(gx1, {y1: ONE})
            if b:
                rhs = rhs + gx2 * gamma_raw(ctx, {y2: ONE}) * (cx * cy * b)
    return lhs, rhs


def vgamma_sides(x: QElement, upsilon: bool = False) -> Tuple[DualElement, DualElement]:
    """gamma(S^2 x) against vartheta^-1(x_1) gamma(x_2) vartheta(x_3) (or the upsilon form)."""
    ctx = x.ctx
    lhs = gamma_raw(ctx, antipode_power_raw(ctx, x.terms, 2))
    if upsilon:
        first, last = upsilon_eval, upsilon_inv
    else:
        first, last = vartheta_inv, vartheta_eval
    rhs = DualElement.zero(ctx)
    for c, (x1, x2, x3) in sweedler(ctx, x.terms, 3):
        a = first(QElement(ctx, {x1: ONE}, normal=True))
        if not a:
            continue
        b = last(QElement(ctx, {x3: ONE}, normal=True))
        if b:
            rhs = rhs + gamma_raw(ctx, {x2: ONE}) * (c * a * b)
    return lhs, rhs


# ---------------------------------------------------------------- D(H, H)

QQKey = Tuple[Mono, Mono]


class QQElement:
    """Element of D(H, H) for H = GL_q(N) with the skew pairing sigma."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: QZContext, terms: Optional[Dict[QQKey, RatFunc]] = None, normal: bool = True):
        self.ctx = ctx
        terms = terms or {}
        if not normal:
            acc: Dict[QQKey, RatFunc] = {}
            for (m1, m2), c in terms.items():
                for a, ca in _nf_mono(ctx, m1):
                    for b, cb in _nf_mono(ctx, m2):
                        add_to(acc, (a, b), c * ca * cb)
            terms = acc
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def tensor(cls, b: QElement, h: QElement) -> "QQElement":
        acc: Dict[QQKey, RatFunc] = {}
        for m1, c1 in b.terms.items():
            for m2, c2 in h.terms.items():
                add_to(acc, (m1, m2), c1 * c2)
        return cls(b.ctx, acc)

    @classmethod
    def one(cls, ctx: QZContext) -> "QQElement":
        return cls(ctx, {((0, ()), (0, ())): ONE})

    def __add__(self, other: "QQElement") -> "QQElement":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            add_to(acc, k, v)
        return QQElement(self.ctx, acc)

    def __neg__(self) -> "QQElement":
        return QQElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "QQElement") -> "QQElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, RatFunc)):
            c = RatFunc.coerce(other)
            return QQElement(self.ctx, {k: v * c for k, v in self.terms.items()})
        if isinstance(other, QQElement):
            return dd_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QQElement):
            return NotImplemented
        if self.terms == other.terms:
            return True
        keys = list(self.terms) + list(other.terms)
        k1 = max([m[0] for m, _ in keys] + [0])
        k2 = max([m[0] for _, m in keys] + [0])
        return _qq_mq(self, k1, k2) == _qq_mq(other, k1, k2)

    __hash__ = None

    def __str__(self) -> str:
        def key(k):
            return f"{mono_str(self.ctx, k[0]) or '1'} (x) {mono_str(self.ctx, k[1]) or '1'}"
        items = sorted(self.terms.items(), key=lambda kv: (kv[0][0][1], kv[0][1][1], kv[0]))
        return format_terms(self.ctx, items, key_str=key)


def _qq_mq(a: QQElement, k1: int, k2: int):
    acc: Dict[tuple, RatFunc] = {}
    for (m1, m2), c in a.terms.items():
        for w1, c1 in to_mq(a.ctx, {m1: ONE}, k1).items():
            for w2, c2 in to_mq(a.ctx, {m2: ONE}, k2).items():
                add_to(acc, (w1, w2), c * c1 * c2)
    return acc


@lru_cache(maxsize=None)
def _dd_kernel(ctx: QZContext, b2: Mono, h1: Mono) -> Tuple[Tuple[Tuple[Mono, Mono], RatFunc], ...]:
    """sigma(b'_1, h_1) sigma^-1(b'_3, h_3) b'_2 (x) h_2."""
    acc: Dict[Tuple[Mono, Mono], RatFunc] = {}
    hs = list(sweedler(ctx, {h1: ONE}, 3))
    for cb, (p1, p2, p3) in sweedler(ctx, {b2: ONE}, 3):
        for ch, (s1, s2, s3) in hs:
            a = sigma_raw(ctx, {p1: ONE}, {s1: ONE})
            if not a:
                continue
            b = sigma_raw(ctx, {p3: ONE}, {s3: ONE}, -1)
            if b:
                add_to(acc, (p2, s2), cb * ch * a * b)
    return tuple(acc.items())


def dd_mul(x: QQElement, y: QQElement) -> QQElement:
    """(b (x) h)(b' (x) h') = sigma(b'_1, h_1) sigma^-1(b'_3, h_3) b b'_2 (x) h_2 h'."""
    ctx = x.ctx
    acc: Dict[QQKey, RatFunc] = {}
    for (b, h), c1 in x.terms.items():
        for (b2, h2), c2 in y.terms.items():
            for (p2, s2), k in _dd_kernel(ctx, b2, h):
                add_to(acc, ((b[0] + p2[0], b[1] + p2[1]), (s2[0] + h2[0], s2[1] + h2[1])), c1 * c2 * k)
    return QQElement(ctx, acc, normal=False)


def dd_comul(x: QQElement) -> Dict[Tuple[QQKey, QQKey], RatFunc]:
    """Tensor product coalgebra: (b_1 (x) h_1) (x) (b_2 (x) h_2), legs normalized."""
    ctx = x.ctx
    acc: Dict[Tuple[QQKey, QQKey], RatFunc] = {}
    for (b, h), c in x.terms.items():
        for cb, (b1, b2) in sweedler(ctx, {b: ONE}, 2):
            for ch, (h1, h2) in sweedler(ctx, {h: ONE}, 2):
                add_to(acc, ((b1, h1), (b2, h2)), c * cb * ch)
    return acc


def mult_projection(x: QQElement) -> QElement:
    """b (x) h -> b h."""
    ctx = x.ctx
    raw: Raw = {}
    for (b, h), c in x.terms.items():
        add_to(raw, (b[0] + h[0], b[1] + h[1]), c)
    return QElement(ctx, raw)


def omega_eval(x: QQElement, y: QQElement) -> RatFunc:
    """omega(b (x) h, b' (x) h') = sigma(b_1, h'_1) sigma(b_2, b'_1) sigma(h_1, h'_2) sigma(S b'_2, h_2)."""
    ctx = x.ctx
    acc = RatFunc()
    for (b, h), c1 in x.terms.items():
        bs = list(sweedler(ctx, {b: ONE}, 2))
        hs = list(sweedler(ctx, {h: ONE}, 2))
        for (bp, hp), c2 in y.terms.items():
            bps = list(sweedler(ctx, {bp: ONE}, 2))
            hps = list(sweedler(ctx, {hp: ONE}, 2))
            for cb, (b1, b2) in bs:
                for chp, (hp1, hp2) in hps:
                    v1 = sigma_raw(ctx, {b1: ONE}, {hp1: ONE})
                    if not v1:
                        continue
                    for ch, (h1, h2) in hs:
                        v3 = sigma_raw(ctx, {h1: ONE}, {hp2: ONE})
                        if not v3:
                            continue
                        for cbp, (bp1, bp2) in bps:
                            v2 = sigma_raw(ctx, {b2: ONE}, {bp1: ONE})
                            if not v2:
                                continue
                            v4 = sigma_raw(ctx, antipode_power_mono(ctx, bp2, 1), {h2: ONE})
                            if v4:
                                acc = acc + c1 * c2 * cb * chp * ch * cbp * v1 * v2 * v3 * v4
    return acc
