"""Quantum matrices M_q(N) with an adjoined central inverse determinant.

Generators x_ij are encoded as integers g = (i-1)*N + (j-1), so the
row-major order on index pairs is the integer order.  A monomial is a pair
(det_power, word) where det_power counts factors of D = det_q^{-1}
(negative values are formal powers of det_q).  Words inside a QElement are
always sorted; the helpers working on "raw" dictionaries accept any word.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterable, Iterator, List, Tuple

from .scalar import ONE, RatFunc, QZContext

Word = Tuple[int, ...]
Mono = Tuple[int, Word]
Raw = Dict[Mono, RatFunc]

EMPTY: Mono = (0, ())


def code(ctx: QZContext, i: int, j: int) -> int:
    if not (1 <= i <= ctx.n and 1 <= j <= ctx.n):
        raise IndexError(f"generator x[{i},{j}] out of range for N={ctx.n}")
    return (i - 1) * ctx.n + (j - 1)


def decode(ctx: QZContext, g: int) -> Tuple[int, int]:
    r, c = divmod(g, ctx.n)
    return r + 1, c + 1


def weight(ctx: QZContext, word: Word) -> int:
    """Sum of (col - row) over the letters; S^2 scales a word by q^(2*weight)."""
    n = ctx.n
    return sum(g % n - g // n for g in word)


def add_to(acc: dict, key, coef: RatFunc) -> None:
    old = acc.get(key)
    if old is None:
        acc[key] = coef
    else:
        new = old + coef
        if new:
            acc[key] = new
        else:
            del acc[key]


# ---------------------------------------------------------------- normal form

@lru_cache(maxsize=None)
def _swap_rule(ctx: QZContext, a: int, b: int) -> Tuple[Tuple[RatFunc, Tuple[int, int]], ...]:
    """Rewrite the out-of-order pair a*b (a > b) as sorted pairs."""
    n = ctx.n
    r1, c1 = divmod(a, n)
    r2, c2 = divmod(b, n)
    if r1 == r2 or c1 == c2:
        return ((ctx.q, (b, a)),)
    if c1 < c2:
        return ((ONE, (b, a)),)
    # r1 > r2 and c1 > c2
    return ((ONE, (b, a)), (ctx.qdiff, (r2 * n + c1, r1 * n + c2)))


@lru_cache(maxsize=None)
def _insert(ctx: QZContext, u: Word, g: int) -> Tuple[Tuple[Word, RatFunc], ...]:
    """Normal form of (sorted word u) * x_g."""
    if not u or u[-1] <= g:
        return ((u + (g,), ONE),)
    acc: Dict[Word, RatFunc] = {}
    head = u[:-1]
    for c, (b1, b2) in _swap_rule(ctx, u[-1], g):
        for v, cv in _insert(ctx, head, b1):
            for w, cw in _insert(ctx, v, b2):
                add_to(acc, w, c * cv * cw)
    return tuple(acc.items())


@lru_cache(maxsize=None)
def nf_word(ctx: QZContext, word: Word) -> Tuple[Tuple[Word, RatFunc], ...]:
    """Normal form of an arbitrary word as sorted words with coefficients."""
    if len(word) <= 1:
        return ((word, ONE),)
    if all(word[k] <= word[k + 1] for k in range(len(word) - 1)):
        return ((word, ONE),)
    acc: Dict[Word, RatFunc] = {}
    for v, cv in nf_word(ctx, word[:-1]):
        for w, cw in _insert(ctx, v, word[-1]):
            add_to(acc, w, cv * cw)
    return tuple(acc.items())


def nf_leftmost(ctx: QZContext, word: Word) -> Dict[Word, RatFunc]:
    """Reference normal form that always rewrites the leftmost disordered pair."""
    acc: Dict[Word, RatFunc] = {}
    todo = [(word, ONE)]
    while todo:
        w, c = todo.pop()
        for k in range(len(w) - 1):
            if w[k] > w[k + 1]:
                for c2, (b1, b2) in _swap_rule(ctx, w[k], w[k + 1]):
                    todo.append((w[:k] + (b1, b2) + w[k + 2:], c * c2))
                break
        else:
            add_to(acc, w, c)
    return acc


def normalize(ctx: QZContext, raw: Raw) -> Raw:
    acc: Raw = {}
    for (e, w), c in raw.items():
        for v, cv in nf_word(ctx, w):
            add_to(acc, (e, v), c * cv)
    return acc


def raw_mul(a: Raw, b: Raw) -> Raw:
    acc: Raw = {}
    for (e1, w1), c1 in a.items():
        for (e2, w2), c2 in b.items():
            add_to(acc, (e1 + e2, w1 + w2), c1 * c2)
    return acc


def raw_scale(a: Raw, c: RatFunc) -> Raw:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


# ---------------------------------------------------------------- elements

class QElement:
    """Element of the GL_q(N) representative algebra, stored in normal form."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: QZContext, terms: Raw | None = None, normal: bool = False):
        self.ctx = ctx
        if terms is None:
            terms = {}
        elif not normal:
            terms = normalize(ctx, terms)
        else:
            terms = {k: v for k, v in terms.items() if v}
        self.terms = terms

    @classmethod
    def gen(cls, ctx: QZContext, i: int, j: int) -> "QElement":
        return cls(ctx, {(0, (code(ctx, i, j),)): ONE}, normal=True)

    @classmethod
    def one(cls, ctx: QZContext) -> "QElement":
        return cls(ctx, {EMPTY: ONE}, normal=True)

    @classmethod
    def zero(cls, ctx: QZContext) -> "QElement":
        return cls(ctx, {}, normal=True)

    @classmethod
    def scalar(cls, ctx: QZContext, c) -> "QElement":
        c = RatFunc.coerce(c)
        return cls(ctx, {EMPTY: c} if c else {}, normal=True)

    @classmethod
    def det_power(cls, ctx: QZContext, e: int) -> "QElement":
        """D^e as a formal monomial (e < 0 means det_q^{-e})."""
        return cls(ctx, {(e, ()): ONE}, normal=True)

    @classmethod
    def from_word(cls, ctx: QZContext, pairs: Iterable[Tuple[int, int]], det: int = 0, coef=ONE) -> "QElement":
        word = tuple(code(ctx, i, j) for i, j in pairs)
        return cls(ctx, {(det, word): RatFunc.coerce(coef)})

    def _check(self, other: "QElement") -> None:
        if other.ctx != self.ctx:
            raise ValueError("context mismatch")

    def __add__(self, other) -> "QElement":
        if not isinstance(other, QElement):
            other = QElement.scalar(self.ctx, other)
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            add_to(acc, k, v)
        return QElement(self.ctx, acc, normal=True)

    __radd__ = __add__

    def __neg__(self) -> "QElement":
        return QElement(self.ctx, {k: -v for k, v in self.terms.items()}, normal=True)

    def __sub__(self, other) -> "QElement":
        if not isinstance(other, QElement):
            other = QElement.scalar(self.ctx, other)
        return self + (-other)

    def __rsub__(self, other) -> "QElement":
        return QElement.scalar(self.ctx, other) - self

    def __mul__(self, other) -> "QElement":
        if isinstance(other, (int, RatFunc)):
            return QElement(self.ctx, raw_scale(self.terms, RatFunc.coerce(other)), normal=True)
        if not isinstance(other, QElement):
            return NotImplemented
        self._check(other)
        return QElement(self.ctx, raw_mul(self.terms, other.terms))

    def __rmul__(self, other) -> "QElement":
        if isinstance(other, (int, RatFunc)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "QElement":
        if k < 0:
            raise ValueError("negative powers are only available for det")
        out = QElement.one(self.ctx)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def max_det(self) -> int:
        return max((e for e, _ in self.terms), default=0)

    def to_mq(self, k: int) -> Dict[Word, RatFunc]:
        """Normal form in M_q(N) of self * det_q^k; requires k >= every det-power."""
        return to_mq(self.ctx, self.terms, k)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, RatFunc)):
            other = QElement.scalar(self.ctx, other)
        if not isinstance(other, QElement):
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        if self.terms == other.terms:
            return True
        k = max(self.max_det(), other.max_det())
        return self.to_mq(k) == other.to_mq(k)

    __hash__ = None

    def sorted_terms(self) -> List[Tuple[Mono, RatFunc]]:
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][1]), kv[0][1], kv[0][0]))

    def __str__(self) -> str:
        return format_terms(self.ctx, self.sorted_terms())

    def __repr__(self) -> str:
        return f"QElement({self})"


def mono_str(ctx: QZContext, mono: Mono) -> str:
    e, w = mono
    s = "".join("x[%d,%d]" % decode(ctx, g) for g in w)
    if e:
        d = "det" if e == -1 else f"det^{-e}"
        s = f"{s} * {d}" if s else d
    return s


def format_terms(ctx: QZContext, items, key_str=None) -> str:
    """Render a list of (key, coefficient) pairs as a signed sum."""
    if key_str is None:
        key_str = lambda m: mono_str(ctx, m)
    if not items:
        return "0"
    out = []
    for key, c in items:
        body = key_str(key)
        if not body:
            piece = c.in_qz(ctx)
            sign = ""
        elif c == 1:
            piece, sign = body, ""
        elif c == -1:
            piece, sign = body, "-"
        else:
            sign = ""
            cs = c.in_qz(ctx)
            if c.qz_needs_parens(ctx):
                piece = f"({cs}) * {body}"
            else:
                piece = f"{cs} * {body}"
        if sign == "-":
            out.append(("-", piece))
        elif piece.startswith("-") and not piece.startswith("-("):
            out.append(("-", piece[1:]))
        else:
            out.append(("+", piece))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, piece in out[1:]:
        s += f" {sign} {piece}"
    return s


# ---------------------------------------------------------------- det_q and GL_q equality

@lru_cache(maxsize=None)
def _inversions(p: Tuple[int, ...]) -> int:
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


@lru_cache(maxsize=None)
def quantum_minor(ctx: QZContext, rows: Tuple[int, ...], cols: Tuple[int, ...]) -> Tuple[Tuple[Word, RatFunc], ...]:
    """Sum over bijections rows -> cols of (-q)^(-inversions) x_{r p(r)} in row order."""
    minus_qinv = -ctx.q.inverse()
    out = []
    for p in permutations(cols):
        word = tuple((r - 1) * ctx.n + (c - 1) for r, c in zip(rows, p))
        out.append((word, minus_qinv ** _inversions(p)))
    return tuple(out)


@lru_cache(maxsize=None)
def detq_raw(ctx: QZContext) -> Tuple[Tuple[Word, RatFunc], ...]:
    full = tuple(range(1, ctx.n + 1))
    return quantum_minor(ctx, full, full)


def detq(ctx: QZContext) -> QElement:
    return QElement(ctx, {(0, w): c for w, c in detq_raw(ctx)})


@lru_cache(maxsize=None)
def _detq_pow(ctx: QZContext, k: int) -> Tuple[Tuple[Word, RatFunc], ...]:
    if k == 0:
        return (((), ONE),)
    acc: Dict[Word, RatFunc] = {}
    for w1, c1 in _detq_pow(ctx, k - 1):
        for w2, c2 in detq_raw(ctx):
            for v, cv in nf_word(ctx, w1 + w2):
                add_to(acc, v, c1 * c2 * cv)
    return tuple(acc.items())


def to_mq(ctx: QZContext, raw: Raw, k: int) -> Dict[Word, RatFunc]:
    acc: Dict[Word, RatFunc] = {}
    for (e, w), c in raw.items():
        if e > k:
            raise ValueError("det-power exceeds the clearing exponent")
        for dw, dc in _detq_pow(ctx, k - e):
            for v, cv in nf_word(ctx, dw + w):
                add_to(acc, v, c * dc * cv)
    return acc


def sl_reduce(ctx: QZContext, raw: Raw) -> Dict[Word, RatFunc]:
    """Image in M_q(N) after setting D = det_q = 1 formally (drops det-powers)."""
    acc: Dict[Word, RatFunc] = {}
    for (e, w), c in raw.items():
        for v, cv in nf_word(ctx, w):
            add_to(acc, v, c * cv)
    return acc


def sl_equal(a: QElement, b: QElement) -> bool:
    """Exact equality in SL_q(N) = M_q(N)/(det_q - 1).

    With c = a - b mapped to M_q(N), c lies in (det_q - 1) M_q(N) iff the
    homogeneous components f_k defined by f_k = det_q f_{k-N} - c_k vanish for
    every k above deg(c) - N.
    """
    ctx = a.ctx
    c = sl_reduce(ctx, (a - b).terms)
    if not c:
        return True
    by_deg: Dict[int, Dict[Word, RatFunc]] = {}
    for w, v in c.items():
        by_deg.setdefault(len(w), {})[w] = v
    top = max(by_deg)
    n = ctx.n
    f: Dict[int, Dict[Word, RatFunc]] = {}
    for k in range(top + 1):
        acc: Dict[Word, RatFunc] = {}
        for dw, dc in detq_raw(ctx):
            for w, v in f.get(k - n, {}).items():
                for u, cu in nf_word(ctx, dw + w):
                    add_to(acc, u, dc * v * cu)
        for w, v in by_deg.get(k, {}).items():
            add_to(acc, w, -v)
        f[k] = acc
    return all(not f[k] for k in range(max(0, top - n + 1), top + 1))


# ---------------------------------------------------------------- coalgebra

@lru_cache(maxsize=None)
def split_word(ctx: QZContext, word: Word, legs: int) -> Tuple[Tuple[Word, ...], ...]:
    """Iterated comatrix coproduct of a word into `legs` tensor legs."""
    if legs == 1:
        return ((word,),)
    if not word:
        return (((),) * legs,)
    n = ctx.n
    head = split_word(ctx, word[:-1], legs)
    r, c = divmod(word[-1], n)
    paths = []
    for mids in product(range(n), repeat=legs - 1):
        idx = (r,) + mids + (c,)
        paths.append(tuple(idx[k] * n + idx[k + 1] for k in range(legs)))
    return tuple(tuple(h[k] + (p[k],) for k in range(legs)) for h in head for p in paths)


def sweedler(ctx: QZContext, raw: Raw, legs: int) -> Iterator[Tuple[RatFunc, Tuple[Mono, ...]]]:
    """Terms of Delta^(legs-1) applied to a raw element; D is grouplike."""
    for (e, w), c in raw.items():
        for parts in split_word(ctx, w, legs):
            yield c, tuple((e, p) for p in parts)


def comultiply(a: QElement) -> Dict[Tuple[Mono, Mono], RatFunc]:
    ctx = a.ctx
    acc: Dict[Tuple[Mono, Mono], RatFunc] = {}
    for c, (m1, m2) in sweedler(ctx, a.terms, 2):
        for w1, c1 in nf_word(ctx, m1[1]):
            for w2, c2 in nf_word(ctx, m2[1]):
                add_to(acc, ((m1[0], w1), (m2[0], w2)), c * c1 * c2)
    return acc


def counit_word(ctx: QZContext, word: Word) -> int:
    n = ctx.n
    return 1 if all(g // n == g % n for g in word) else 0


def counit_raw(ctx: QZContext, raw: Raw) -> RatFunc:
    acc = RatFunc()
    for (e, w), c in raw.items():
        if counit_word(ctx, w):
            acc = acc + c
    return acc


def counit(a: QElement) -> RatFunc:
    return counit_raw(a.ctx, a.terms)


# ---------------------------------------------------------------- antipode

@lru_cache(maxsize=None)
def antipode_gen(ctx: QZContext, g: int) -> Tuple[Tuple[Word, RatFunc], ...]:
    """S(x_ij) without its D factor: (-q)^(j-i) times the minor deleting row j, column i."""
    i, j = decode(ctx, g)
    full = range(1, ctx.n + 1)
    rows = tuple(r for r in full if r != j)
    cols = tuple(c for c in full if c != i)
    scale = (-ctx.q) ** (j - i)
    return tuple((w, scale * c) for w, c in quantum_minor(ctx, rows, cols))


@lru_cache(maxsize=None)
def _antipode_word(ctx: QZContext, word: Word) -> Tuple[Tuple[Word, RatFunc], ...]:
    if not word:
        return (((), ONE),)
    acc: Dict[Word, RatFunc] = {}
    for w1, c1 in antipode_gen(ctx, word[-1]):
        for w2, c2 in _antipode_word(ctx, word[:-1]):
            add_to(acc, w1 + w2, c1 * c2)
    return tuple(acc.items())


def antipode_power_mono(ctx: QZContext, mono: Mono, k: int) -> Raw:
    """S^k on one monomial, as a raw (unsorted) element."""
    e, w = mono
    if k % 2 == 0:
        return {mono: ctx.qpow(k * weight(ctx, w))}
    scale = ctx.qpow((k - 1) * weight(ctx, w))
    det = len(w) - e
    return {(det, v): scale * c for v, c in _antipode_word(ctx, w)}


def antipode_power_raw(ctx: QZContext, raw: Raw, k: int) -> Raw:
    if k == 0:
        return dict(raw)
    acc: Raw = {}
    for mono, c in raw.items():
        for m2, c2 in antipode_power_mono(ctx, mono, k).items():
            add_to(acc, m2, c * c2)
    return acc


def antipode(a: QElement) -> QElement:
    return QElement(a.ctx, antipode_power_raw(a.ctx, a.terms, 1))


def antipode_inv(a: QElement) -> QElement:
    return QElement(a.ctx, antipode_power_raw(a.ctx, a.terms, -1))


def antipode_power(a: QElement, k: int) -> QElement:
    return QElement(a.ctx, antipode_power_raw(a.ctx, a.terms, k))


# ---------------------------------------------------------------- FRT braiding

def frt_braiding(ctx: QZContext) -> Dict[Tuple[Tuple[int, int], Tuple[int, int]], RatFunc]:
    """Matrix of c on e_i (x) e_j, keyed by (output basis pair, input basis pair)."""
    mat = {}
    for i in range(1, ctx.n + 1):
        for j in range(1, ctx.n + 1):
            mat[((j, i), (i, j))] = ctx.q if i == j else ONE
            if i > j:
                mat[((i, j), (i, j))] = ctx.qdiff
    return mat


def check_qybe(mat: Dict[tuple, RatFunc], braid: bool = False):
    """R12 R13 R23 = R23 R13 R12 for R keyed by (output pair, input pair).

    Returns (True, None) or (False, (basis triple, left value, right value)).
    """
    cols: Dict[tuple, List[Tuple[tuple, RatFunc]]] = {}
    labels = set()
    for (out, inp), v in mat.items():
        if v:
            cols.setdefault(inp, []).append((out, v))
        labels.update(out)
        labels.update(inp)
    labels = sorted(labels)

    def apply(vec: Dict[tuple, RatFunc], a: int, b: int) -> Dict[tuple, RatFunc]:
        acc: Dict[tuple, RatFunc] = {}
        for key, c in vec.items():
            for (u, v), r in cols.get((key[a], key[b]), ()):
                new = list(key)
                new[a], new[b] = u, v
                add_to(acc, tuple(new), c * r)
        return acc

    for triple in product(labels, repeat=3):
        vec = {triple: ONE}
        if braid:
            lhs = apply(apply(apply(vec, 0, 1), 1, 2), 0, 1)
            rhs = apply(apply(apply(vec, 1, 2), 0, 1), 1, 2)
        else:
            lhs = apply(apply(apply(vec, 1, 2), 0, 2), 0, 1)
            rhs = apply(apply(apply(vec, 0, 1), 0, 2), 1, 2)
        if lhs != rhs:
            return False, (triple, lhs, rhs)
    return True, None


def check_braid_relation(mat: Dict[tuple, RatFunc]):
    """c12 c23 c12 = c23 c12 c23, the form of the equation satisfied by a braiding."""
    return check_qybe(mat, braid=True)


def flip(mat: Dict[tuple, RatFunc]) -> Dict[tuple, RatFunc]:
    """tau o c: swap the output legs."""
    return {((out[1], out[0]), inp): v for (out, inp), v in mat.items()}


# ---------------------------------------------------------------- SL_q(N) comparison

def sl_tops(ctx: QZContext, keys: Iterable[Tuple[Mono, ...]]) -> List[Dict[int, int]]:
    """Per leg, the top word length seen in each residue class mod N."""
    tops: List[Dict[int, int]] = []
    for key in keys:
        while len(tops) < len(key):
            tops.append({})
        for p, (_, w) in enumerate(key):
            r = len(w) % ctx.n
            tops[p][r] = max(tops[p].get(r, 0), len(w))
    return tops


def sl_lift_with(ctx: QZContext, terms: Dict[Tuple[Mono, ...], RatFunc], tops: List[Dict[int, int]]) -> Dict[Tuple[Word, ...], RatFunc]:
    """Lift every leg to the top degree of its class by multiplying with powers of det_q."""
    n = ctx.n
    acc: Dict[Tuple[Word, ...], RatFunc] = {}
    for key, c in terms.items():
        parts = []
        for p, (e, w) in enumerate(key):
            k = e + (tops[p][len(w) % n] - len(w)) // n
            parts.append(list(to_mq(ctx, {(e, w): ONE}, k).items()))
        for combo in product(*parts):
            v = c
            for _, cv in combo:
                v = v * cv
            add_to(acc, tuple(w for w, _ in combo), v)
    return acc


def sl_lift(ctx: QZContext, terms: Dict[Tuple[Mono, ...], RatFunc]) -> Dict[Tuple[Word, ...], RatFunc]:
    """Canonical image of a tensor over SL_q(N) in a product of homogeneous pieces of M_q(N).

    SL_q(N) is Z/N-graded and each graded piece is the union of the images of
    M_q(N)_k, k in a fixed class, which embed into each other by multiplication
    with det_q.  Lifting every leg to the top degree of its class makes
    equality in SL_q(N)^{(x) r} an equality of dictionaries.
    """
    return sl_lift_with(ctx, terms, sl_tops(ctx, terms))


def sl_tensor_equal(ctx: QZContext, a: Dict[Tuple[Mono, ...], RatFunc], b: Dict[Tuple[Mono, ...], RatFunc]) -> bool:
    """Exact equality of two tensors in SL_q(N)^{(x) r} given by GL_q representatives."""
    if a == b:
        return True
    diff = dict(a)
    for k, v in b.items():
        add_to(diff, k, -v)
    return not sl_lift(ctx, diff)


def sl_diff(ctx: QZContext, a: Dict[Tuple[Mono, ...], RatFunc], b: Dict[Tuple[Mono, ...], RatFunc]) -> Dict[Tuple[Word, ...], RatFunc]:
    """Lifted difference a - b; empty iff a = b in SL_q(N)."""
    diff = dict(a)
    for k, v in b.items():
        add_to(diff, k, -v)
    return sl_lift(ctx, diff)


def gl_tensor_equal(ctx: QZContext, a: Dict[Tuple[Mono, ...], RatFunc], b: Dict[Tuple[Mono, ...], RatFunc]) -> bool:
    """Exact equality of two tensors over GL_q(N), clearing det-powers leg by leg."""
    if a == b:
        return True
    diff = dict(a)
    for k, v in b.items():
        add_to(diff, k, -v)
    if not diff:
        return True
    legs = len(next(iter(diff)))
    ks = [max(0, max(key[p][0] for key in diff)) for p in range(legs)]
    acc: Dict[Tuple[Word, ...], RatFunc] = {}
    for key, c in diff.items():
        parts = [list(to_mq(ctx, {m: ONE}, ks[p]).items()) for p, m in enumerate(key)]
        for combo in product(*parts):
            v = c
            for _, cv in combo:
                v = v * cv
            add_to(acc, tuple(w for w, _ in combo), v)
    return not acc
