import pytest

from qdouble.qmatrix import (
    QElement,
    antipode,
    antipode_inv,
    antipode_power,
    check_braid_relation,
    check_qybe,
    comultiply,
    counit,
    detq,
    flip,
    frt_braiding,
    gl_tensor_equal,
    sl_equal,
)
from qdouble.scalar import QZContext


def test_reordering_rule(ctx2, x, P):
    # x22 x11 = x11 x22 + (q - q^-1) x12 x21
    assert x(2, 2) * x(1, 1) == P("x[1,1]x[2,2] + (q - q^-1) x[1,2]x[2,1]")
    assert x(1, 2) * x(1, 1) == x(1, 1) * x(1, 2) * ctx2.q
    assert x(2, 1) * x(1, 2) == x(1, 2) * x(2, 1)


def test_associativity_sample(ctx3):
    g = lambda i, j: QElement.gen(ctx3, i, j)
    a, b, c = g(3, 3) * g(1, 2), g(2, 1) + g(1, 3), g(3, 1) * g(2, 2)
    assert (a * b) * c == a * (b * c)


def test_detq_n2(ctx2, P):
    assert detq(ctx2) == P("x[1,1]x[2,2] - q^-1 x[1,2]x[2,1]")
    assert counit(detq(ctx2)) == 1


@pytest.mark.parametrize("n", [2, 3])
def test_detq_central_and_grouplike(n):
    ctx = QZContext(n)
    D = detq(ctx)
    for i, j in ctx.gens():
        g = QElement.gen(ctx, i, j)
        assert D * g == g * D
    want = {}
    for m1, c1 in D.terms.items():
        for m2, c2 in D.terms.items():
            want[(m1, m2)] = c1 * c2
    assert gl_tensor_equal(ctx, comultiply(D), want)


def test_antipode_values(ctx2, x, P):
    assert antipode(x(1, 1)) == P("x[2,2] det^-1")
    assert antipode(x(1, 2)) == P("-q x[1,2] det^-1")


def test_detq_inverse(ctx2, x):
    D = QElement.det_power(ctx2, 1)
    assert detq(ctx2) * D == QElement.one(ctx2)


@pytest.mark.parametrize("n", [2, 3])
def test_antipode_axiom(n):
    ctx = QZContext(n)
    for i, j in ctx.gens():
        acc = QElement.zero(ctx)
        for k in range(1, n + 1):
            acc = acc + antipode(QElement.gen(ctx, i, k)) * QElement.gen(ctx, k, j)
        assert acc == QElement.one(ctx) * int(i == j)


@pytest.mark.parametrize("n", [2, 3])
def test_square_of_antipode_scales(n):
    ctx = QZContext(n)
    for i, j in ctx.gens():
        g = QElement.gen(ctx, i, j)
        assert antipode_power(g, 2) == g * ctx.qpow(2 * (j - i))
        assert antipode(antipode_inv(g)) == g


def test_coassociativity_x11(ctx3):
    g = QElement.gen(ctx3, 1, 1)
    left, right = {}, {}
    for (a, b), c in comultiply(g).items():
        for (a1, a2), c1 in comultiply(QElement(ctx3, {a: c}, normal=True)).items():
            left[(a1, a2, b)] = c1
        for (b1, b2), c2 in comultiply(QElement(ctx3, {b: c}, normal=True)).items():
            right[(a, b1, b2)] = c2
    assert left == right


def test_counit(ctx2, x):
    assert counit(x(1, 1) * x(2, 2)) == 1
    assert counit(x(1, 2)) == 0


def test_frt_braiding(ctx2):
    c = frt_braiding(ctx2)
    assert check_braid_relation(c)[0]
    assert check_qybe(flip(c))[0]
    # c itself is a braid operator; with the flip left in, the R12 R13 R23 form fails
    ok, (triple, _, _) = check_qybe(c)
    assert not ok and triple == (1, 1, 2)


def test_sl_equality(ctx2, x):
    D = detq(ctx2)
    assert sl_equal(D * x(1, 2), x(1, 2))
    assert not (D * x(1, 2) == x(1, 2))


def test_context_mismatch(ctx2, ctx3):
    with pytest.raises(ValueError):
        QElement.gen(ctx2, 1, 1) + QElement.gen(ctx3, 1, 1)


def test_generator_range(ctx2):
    with pytest.raises((IndexError, ValueError)):
        QElement.gen(ctx2, 3, 1)
