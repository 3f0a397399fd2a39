"""Randomized algebraic invariants."""

from hypothesis import HealthCheck, given, settings, strategies as st

from qdouble.functionals import DualElement, dual_comul, dual_counit, gen_E, gen_F, khat, khat_inv, l_gen, r_gen
from qdouble.parsing import parse, render
from qdouble.qmatrix import QElement, add_to, antipode, comultiply, counit, gl_tensor_equal
from qdouble.scalar import QZContext, RatFunc
from qdouble.sigma import sigma_eval

CTX = {2: QZContext(2), 3: QZContext(3)}
SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

ratfuncs = st.builds(
    lambda num, den, shift: sum((RatFunc.monomial(c, k) for k, c in enumerate(num)), RatFunc())
    / (sum((RatFunc.monomial(c, k) for k, c in enumerate(den)), RatFunc()) or RatFunc(1))
    * RatFunc.monomial(1, shift),
    st.lists(st.integers(-4, 4), max_size=4),
    st.lists(st.integers(-3, 3), min_size=1, max_size=3),
    st.integers(-3, 3),
)


@st.composite
def elements(draw, n=2, max_len=3, max_terms=2, det=False):
    ctx = CTX[n]
    pairs = st.tuples(st.integers(1, n), st.integers(1, n))
    acc = QElement.zero(ctx)
    for _ in range(draw(st.integers(1, max_terms))):
        word = draw(st.lists(pairs, max_size=max_len))
        e = draw(st.integers(-1, 1)) if det else 0
        c = draw(st.sampled_from([RatFunc(1), RatFunc(-1), ctx.q, ctx.q.inverse(), ctx.z, ctx.qdiff]))
        acc = acc + QElement.from_word(ctx, word, det=e) * c
    return acc


@st.composite
def functionals(draw, n=2):
    ctx = CTX[n]
    letters = [khat(ctx, 1), khat_inv(ctx, 2), gen_E(ctx, 1), gen_F(ctx, 1), l_gen(ctx, 2, 1), r_gen(ctx, 1, 2)]
    F = DualElement.unit(ctx)
    for L in draw(st.lists(st.sampled_from(letters), min_size=1, max_size=2)):
        F = F * L
    return F


# ---------------------------------------------------------------- scalars

@SETTINGS
@given(ratfuncs, ratfuncs, ratfuncs)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1


@SETTINGS
@given(ratfuncs)
def test_scalar_round_trip(a):
    ctx = CTX[2]
    assert parse(ctx, render(ctx, a, qz=False)) == a
    assert parse(ctx, render(ctx, a)) == a


# ---------------------------------------------------------------- quantum matrices

@SETTINGS
@given(elements(), elements(), elements())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@SETTINGS
@given(elements(n=3, max_len=2), elements(n=3, max_len=2), elements(n=3, max_len=1))
def test_associativity_n3(a, b, c):
    assert (a * b) * c == a * (b * c)


def _tensor_product(A, B, ctx):
    acc = {}
    for (a1, a2), ca in A.items():
        for (b1, b2), cb in B.items():
            left = QElement(ctx, {a1: ca}, normal=True) * QElement(ctx, {b1: cb}, normal=True)
            right = QElement(ctx, {a2: 1}, normal=True) * QElement(ctx, {b2: 1}, normal=True)
            for m1, c1 in left.terms.items():
                for m2, c2 in right.terms.items():
                    add_to(acc, (m1, m2), c1 * c2)
    return acc


@SETTINGS
@given(elements(max_len=2), elements(max_len=2))
def test_coproduct_multiplicative(a, b):
    ctx = a.ctx
    assert gl_tensor_equal(ctx, comultiply(a * b), _tensor_product(comultiply(a), comultiply(b), ctx))


@SETTINGS
@given(elements(), elements())
def test_counit_multiplicative(a, b):
    assert counit(a * b) == counit(a) * counit(b)


@SETTINGS
@given(elements(max_len=2), elements(max_len=2))
def test_antipode_antimultiplicative(a, b):
    assert antipode(a * b) == antipode(b) * antipode(a)


@SETTINGS
@given(elements(det=True, max_len=3, max_terms=3))
def test_element_round_trip(a):
    ctx = a.ctx
    b = parse(ctx, str(a))
    if isinstance(b, RatFunc):
        # constants print as bare scalars
        b = QElement.scalar(ctx, b)
    assert b.terms == a.terms


# ---------------------------------------------------------------- pairing and functionals

@SETTINGS
@given(elements(max_len=2, max_terms=1), elements(max_len=1, max_terms=1), elements(max_len=2, max_terms=1))
def test_sigma_splits_left_argument(a, b, g):
    ctx = g.ctx
    rhs = RatFunc()
    for (g1, g2), c in comultiply(g).items():
        rhs = rhs + c * sigma_eval(a, QElement(ctx, {g1: 1}, normal=True)) * sigma_eval(b, QElement(ctx, {g2: 1}, normal=True))
    assert sigma_eval(a * b, g) == rhs


@SETTINGS
@given(elements(max_len=1, max_terms=1), elements(max_len=2, max_terms=1), elements(max_len=1, max_terms=1))
def test_sigma_splits_right_argument(g, h, k):
    ctx = g.ctx
    rhs = RatFunc()
    for (g1, g2), c in comultiply(g).items():
        rhs = rhs + c * sigma_eval(QElement(ctx, {g2: 1}, normal=True), h) * sigma_eval(QElement(ctx, {g1: 1}, normal=True), k)
    assert sigma_eval(g, h * k) == rhs


@SETTINGS
@given(functionals(), elements(max_len=2), elements(max_len=2))
def test_functional_coproduct_dual_to_product(F, a, b):
    ctx = F.ctx
    rhs = RatFunc()
    for (u, v), c in dual_comul(F).items():
        rhs = rhs + c * DualElement(ctx, {u: 1})(a) * DualElement(ctx, {v: 1})(b)
    assert F(a * b) == rhs


@SETTINGS
@given(functionals(), functionals(), elements(max_len=2))
def test_functional_product_is_convolution(F, G, h):
    ctx = h.ctx
    rhs = RatFunc()
    for (m1, m2), c in comultiply(h).items():
        rhs = rhs + c * F(QElement(ctx, {m1: 1}, normal=True)) * G(QElement(ctx, {m2: 1}, normal=True))
    assert (F * G)(h) == rhs
    assert dual_counit(F * G) == dual_counit(F) * dual_counit(G)


@SETTINGS
@given(functionals())
def test_functional_round_trip(F):
    G = parse(F.ctx, str(F))
    assert G == F
