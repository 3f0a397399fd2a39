"""The coquasitriangular form sigma on GL_q(N) and the functionals built from it.

Evaluation uses the structure of the generator table.  For a left word with
rows p and columns c, splitting a right letter x_ab over the left word is a
walk a = k_0 -> k_1 -> ... -> k_d = b, and only two local moves have nonzero
weight: keep the column (c_t = p_t, state unchanged) or swap (p_t < k, c_t = k,
new state p_t).  Pairing against a whole right word composes these transfer
maps, so sigma(Y, W) is one coefficient of a row vector pushed through the
letters of W.  Det-powers are transparent because sigma(det_q, -) = epsilon.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Tuple

from .qmatrix import (
    ONE,
    QElement,
    Raw,
    Word,
    add_to,
    antipode_power_mono,
    antipode_power_raw,
    counit_word,
    split_word,
    sweedler,
)
from .scalar import RatFunc, QZContext

Vec = Tuple[Tuple[Tuple[int, ...], RatFunc], ...]


@lru_cache(maxsize=None)
def _weights(ctx: QZContext, sign: int) -> Tuple[RatFunc, RatFunc, RatFunc]:
    """(z, z*q, z*(q - q^-1)) for sign +1 and the inverted table for sign -1."""
    if sign > 0:
        return ctx.z, ctx.z * ctx.q, ctx.z * ctx.qdiff
    zi, qi = ctx.z.inverse(), ctx.q.inverse()
    return zi, zi * qi, zi * (qi - ctx.q)


def generator_value(ctx: QZContext, g: int, h: int, sign: int = 1) -> RatFunc:
    """sigma^(sign)(x_g, x_h) from the generator table."""
    n = ctx.n
    p, c = divmod(g, n)
    k, k2 = divmod(h, n)
    plain, diag, swap = _weights(ctx, sign)
    if p == c and k == k2:
        return diag if p == k else plain
    if c == k and p == k2 and p < c:
        return swap
    return RatFunc()


@lru_cache(maxsize=None)
def _transfer(ctx: QZContext, rows: Tuple[int, ...], a: int, b: int, sign: int) -> Vec:
    """Column tuples c with the value sigma^(sign)(x_{rows, c}, x_ab)."""
    plain, diag, swap = _weights(ctx, sign)
    d = len(rows)
    order = range(d) if sign > 0 else range(d - 1, -1, -1)
    states: Dict[Tuple[int, Tuple[int, ...]], RatFunc] = {(a, ()): ONE}
    for t in order:
        p = rows[t]
        nxt: Dict[Tuple[int, Tuple[int, ...]], RatFunc] = {}
        for (k, cols), val in states.items():
            add_to(nxt, (k, cols + (p,)), val * (diag if p == k else plain))
            if p < k:
                add_to(nxt, (p, cols + (k,)), val * swap)
        states = nxt
    out: Dict[Tuple[int, ...], RatFunc] = {}
    for (k, cols), val in states.items():
        if k == b:
            if sign < 0:
                cols = cols[::-1]
            add_to(out, cols, val)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _push(ctx: QZContext, rows: Tuple[int, ...], right: Word, sign: int) -> Vec:
    """Row vector e_rows pushed through the transfer maps of the right word."""
    if not right:
        return ((rows, ONE),)
    n = ctx.n
    if sign > 0:
        first, rest = right[0], right[1:]
        prev = _push(ctx, rows, rest, sign)
    else:
        first, rest = right[-1], right[:-1]
        prev = _push(ctx, rows, rest, sign)
    a, b = divmod(first, n)
    acc: Dict[Tuple[int, ...], RatFunc] = {}
    for mid, v1 in prev:
        for cols, v2 in _transfer(ctx, mid, a, b, sign):
            add_to(acc, cols, v1 * v2)
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _push_dict(ctx: QZContext, rows: Tuple[int, ...], right: Word, sign: int) -> Dict[Tuple[int, ...], RatFunc]:
    return dict(_push(ctx, rows, right, sign))


def sigma_words(ctx: QZContext, left: Word, right: Word, sign: int = 1) -> RatFunc:
    """sigma^(sign) on two words, ordered or not."""
    n = ctx.n
    rows = tuple(g // n for g in left)
    cols = tuple(g % n for g in left)
    return _push_dict(ctx, rows, right, sign).get(cols, RatFunc())


def sigma_raw(ctx: QZContext, a: Raw, b: Raw, sign: int = 1) -> RatFunc:
    acc = RatFunc()
    for (_, w1), c1 in a.items():
        for (_, w2), c2 in b.items():
            v = sigma_words(ctx, w1, w2, sign)
            if v:
                acc = acc + c1 * c2 * v
    return acc


def sigma_eval(a: QElement, b: QElement, sign: int = 1) -> RatFunc:
    if a.ctx != b.ctx:
        raise ValueError("context mismatch")
    return sigma_raw(a.ctx, a.terms, b.terms, sign)


def sigma_twisted(a: QElement, k: int, b: QElement, l: int, sign: int = 1) -> RatFunc:
    """sigma^(sign)(S^k a, S^l b)."""
    if a.ctx != b.ctx:
        raise ValueError("context mismatch")
    ctx = a.ctx
    return sigma_raw(ctx, antipode_power_raw(ctx, a.terms, k), antipode_power_raw(ctx, b.terms, l), sign)


def sigma_recursive(ctx: QZContext, left: Word, right: Word, sign: int = 1) -> RatFunc:
    """Reference evaluation straight from the pairing axioms and the generator table."""
    if not left:
        return RatFunc(counit_word(ctx, right))
    if not right:
        return RatFunc(counit_word(ctx, left))
    if len(right) > 1:
        # sigma(g, hh') = sigma(g_2, h) sigma(g_1, h'), inverse: sigma^-1(g_1, h) sigma^-1(g_2, h')
        acc = RatFunc()
        for g1, g2 in split_word(ctx, left, 2):
            if sign > 0:
                acc = acc + sigma_recursive(ctx, g2, right[:1], sign) * sigma_recursive(ctx, g1, right[1:], sign)
            else:
                acc = acc + sigma_recursive(ctx, g1, right[:1], sign) * sigma_recursive(ctx, g2, right[1:], sign)
        return acc
    if len(left) == 1:
        return generator_value(ctx, left[0], right[0], sign)
    # sigma(hh', g) = sigma(h, g_1) sigma(h', g_2), inverse swaps the legs
    acc = RatFunc()
    for g1, g2 in split_word(ctx, right, 2):
        if sign > 0:
            acc = acc + sigma_recursive(ctx, left[:1], g1, sign) * sigma_recursive(ctx, left[1:], g2, sign)
        else:
            acc = acc + sigma_recursive(ctx, left[:1], g2, sign) * sigma_recursive(ctx, left[1:], g1, sign)
    return acc


# ---------------------------------------------------------------- derived functionals

def _two_leg(ctx: QZContext, raw: Raw, fn) -> RatFunc:
    acc = RatFunc()
    for c, (m1, m2) in sweedler(ctx, raw, 2):
        v = fn(m1, m2)
        if v:
            acc = acc + c * v
    return acc


def _s(ctx: QZContext, mono, k: int) -> Raw:
    return antipode_power_mono(ctx, mono, k)


def v_eval(h: QElement) -> RatFunc:
    """v(h) = sigma(h_1, S h_2)."""
    ctx = h.ctx
    return _two_leg(ctx, h.terms, lambda m1, m2: sigma_raw(ctx, {m1: ONE}, _s(ctx, m2, 1)))


def v_inv(h: QElement) -> RatFunc:
    """v^-1(h) = sigma(S^2 h_1, h_2)."""
    ctx = h.ctx
    return _two_leg(ctx, h.terms, lambda m1, m2: sigma_raw(ctx, _s(ctx, m1, 2), {m2: ONE}))


def u_eval(h: QElement) -> RatFunc:
    """u(h) = sigma(h_2, S h_1)."""
    ctx = h.ctx
    return _two_leg(ctx, h.terms, lambda m1, m2: sigma_raw(ctx, {m2: ONE}, _s(ctx, m1, 1)))


def u_inv(h: QElement) -> RatFunc:
    """u^-1(h) = sigma(S^2 h_2, h_1)."""
    ctx = h.ctx
    return _two_leg(ctx, h.terms, lambda m1, m2: sigma_raw(ctx, _s(ctx, m2, 2), {m1: ONE}))


def vartheta_eval(x: QElement) -> RatFunc:
    """vartheta(x) = <gamma(x_1), S x_2> = sigma(S x_2, S^-1 x_1)."""
    ctx = x.ctx
    return _two_leg(ctx, x.terms, lambda m1, m2: sigma_raw(ctx, _s(ctx, m2, 1), _s(ctx, m1, -1)))


def vartheta_inv(x: QElement) -> RatFunc:
    """vartheta^-1(x) = <gamma(S^2 x_1), x_2> = sigma^-1(x_2, S^2 x_1)."""
    ctx = x.ctx
    return _two_leg(ctx, x.terms, lambda m1, m2: sigma_raw(ctx, {m2: ONE}, _s(ctx, m1, 2), -1))


def upsilon_eval(x: QElement) -> RatFunc:
    """upsilon(x) = <gamma(x_2), S x_1> = sigma^-1(S x_1, x_2)."""
    ctx = x.ctx
    return _two_leg(ctx, x.terms, lambda m1, m2: sigma_raw(ctx, _s(ctx, m1, 1), {m2: ONE}, -1))


def upsilon_inv(x: QElement) -> RatFunc:
    """upsilon^-1(x) = <gamma(S^2 x_2), x_1> = sigma^-1(x_1, S^2 x_2)."""
    ctx = x.ctx
    return _two_leg(ctx, x.terms, lambda m1, m2: sigma_raw(ctx, {m1: ONE}, _s(ctx, m2, 2), -1))


def convolve(f, g, h: QElement) -> RatFunc:
    """(f * g)(h) = f(h_1) g(h_2) for functionals on QElements."""
    ctx = h.ctx
    acc = RatFunc()
    for c, (m1, m2) in sweedler(ctx, h.terms, 2):
        a = f(QElement(ctx, {m1: ONE}, normal=True))
        if a:
            acc = acc + c * a * g(QElement(ctx, {m2: ONE}, normal=True))
    return acc
