import pytest

from qdouble.functionals import (
    DualElement,
    borel_pair,
    dual_antipode,
    dual_comul,
    dual_counit,
    eval_word,
    functional_equal_upto,
    gen_E,
    gen_F,
    gen_K,
    khat,
    khat_inv,
    l_gen,
    named_generator,
    r_gen,
    r_inv,
    script_E,
    self_pair,
)
from qdouble.qmatrix import QElement, antipode
from qdouble.scalar import QZContext


def test_generator_values(ctx2, x):
    qd = ctx2.qdiff
    assert gen_E(ctx2, 1)(x(1, 2)) == qd
    assert gen_F(ctx2, 1)(x(2, 1)) == qd.inverse()
    assert gen_E(ctx2, 1)(x(2, 1)) == 0
    assert khat(ctx2, 1)(x(1, 1)) == ctx2.z * ctx2.q
    assert khat_inv(ctx2, 2)(x(2, 2)) == (ctx2.z * ctx2.q).inverse()
    assert gen_K(ctx2, 1)(x(1, 1)) == ctx2.q


def test_split_through_coproduct(ctx2, x):
    assert gen_E(ctx2, 1)(x(1, 1) * x(1, 2)) == ctx2.qdiff


def test_vanishing_letters(ctx3):
    assert l_gen(ctx3, 1, 2).is_zero()
    assert r_gen(ctx3, 3, 1).is_zero()
    assert not l_gen(ctx3, 3, 1).is_zero()


def test_letters_are_sigma(ctx3):
    from qdouble.sigma import sigma_eval
    for i, j in ctx3.gens():
        for m, n in ctx3.gens():
            y = QElement.gen(ctx3, m, n)
            if i >= j:
                assert l_gen(ctx3, i, j)(y) == sigma_eval(y, QElement.gen(ctx3, i, j))
            if i <= j:
                assert r_gen(ctx3, i, j)(y) == sigma_eval(QElement.gen(ctx3, i, j), y)


def test_bounded_comparison_witness(ctx2):
    res = functional_equal_upto(gen_E(ctx2, 1), gen_F(ctx2, 1), 1)
    assert not res
    assert res.witness == "x[1,2]"
    assert "differs on x[1,2]" in res.detail()


def test_bounded_comparison_equal(ctx2):
    lhs = khat(ctx2, 1) * khat_inv(ctx2, 1)
    assert functional_equal_upto(lhs, DualElement.unit(ctx2), 4)


def test_coproduct_is_dual_to_product(ctx2, x):
    F = gen_E(ctx2, 1)
    a = b = x(1, 1) + x(1, 2)
    total = 0
    for (u, v), c in dual_comul(F).items():
        total = total + c * DualElement(ctx2, {u: 1})(a) * DualElement(ctx2, {v: 1})(b)
    assert total == F(a * b)


def test_counit_and_antipode(ctx2):
    assert dual_counit(khat(ctx2, 1)) == 1
    assert dual_counit(gen_E(ctx2, 1)) == 0
    assert functional_equal_upto(dual_antipode(khat(ctx2, 1)), khat_inv(ctx2, 1), 3)


def test_script_e_depth_two(ctx3):
    lhs, rhs = l_gen(ctx3, 3, 1), script_E(ctx3, 3, 1) * khat(ctx3, 3)
    assert functional_equal_upto(lhs, rhs, 3)


def test_pairings(ctx2):
    assert borel_pair(gen_F(ctx2, 1), gen_E(ctx2, 1)) == ctx2.qdiff.inverse()
    assert borel_pair(r_gen(ctx2, 1, 1), khat(ctx2, 2)) == ctx2.z
    assert borel_pair(r_inv(ctx2, 1), khat(ctx2, 1)) == (ctx2.z * ctx2.q).inverse()
    assert self_pair(gen_E(ctx2, 1), gen_E(ctx2, 1)) == ctx2.qdiff.inverse()
    assert self_pair(khat(ctx2, 1), khat(ctx2, 1)) == (ctx2.z * ctx2.q).inverse()


def test_named_generator_lookup(ctx2):
    assert named_generator(ctx2, "E", 1) == gen_E(ctx2, 1)
    with pytest.raises((KeyError, ValueError)):
        named_generator(ctx2, "G", 1)
    with pytest.raises((IndexError, ValueError)):
        named_generator(ctx2, "E", 2)


def test_r_letter_on_antipode_of_generator(ctx3):
    z, q, qd = ctx3.z, ctx3.q, ctx3.qdiff
    for s in (1, 2):
        sx = antipode(QElement.gen(ctx3, s, s + 1))
        assert l_gen(ctx3, s + 1, s)(sx) == -z.inverse() * qd
        sy = antipode(QElement.gen(ctx3, s + 1, s))
        assert r_gen(ctx3, s, s + 1)(sy) == -z.inverse() * q ** -2 * qd
