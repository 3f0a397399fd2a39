import pytest

from qdouble.scalar import QZContext, RatFunc, scalar_q, scalar_z


def test_default_instantiation():
    for n in (2, 3, 4):
        ctx = QZContext(n)
        assert ctx.z ** n == ctx.q.inverse()
        assert scalar_q(ctx) == ctx.q and scalar_z(ctx) == ctx.z


def test_reduced_form():
    t = RatFunc.monomial(1, 1)
    a = (t * t - 1) / (t - 1)
    assert a == t + 1
    assert str(a) == str(t + 1)


def test_sign_normalised_denominator():
    t = RatFunc.monomial(1, 1)
    assert (1 / (-t)) == -(1 / t)


def test_integer_equality():
    assert RatFunc(3) == 3
    assert RatFunc(0) == 0
    assert not RatFunc(0)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        RatFunc(0).inverse()


def test_qz_printing(ctx2):
    assert ctx2.qdiff.in_qz(ctx2) == "q - q^-1"
    assert (ctx2.z * ctx2.qdiff).in_qz(ctx2) == "z*(q - q^-1)"
    # at N = 2, z^-1 = z q is printed in the reduced form
    assert ctx2.z.inverse().in_qz(ctx2) == "z*q"


def test_bad_context():
    with pytest.raises(ValueError):
        QZContext(1)
