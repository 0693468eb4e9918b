import pytest
from hypothesis import given

from qsymops.compositions import compositions_up_to, omega
from qsymops.oracle import expand_F, expand_M, expand_elem, series_op
from qsymops.qsym import (
    QSymElem,
    TensorElem,
    antipode,
    coproduct,
    counit,
    e,
    from_f,
    fundamental,
    h,
    m_to_f,
    monomial,
    mul,
    one,
    sweedler_sum,
)

from conftest import comps

M = monomial
N, D = 6, 5


def test_monomial_and_unit():
    assert M(()) == one() == 1
    assert M((2, 1)).terms == {(2, 1): 1}
    assert str(M((1,))) == "M[1]"


def test_fundamental_examples():
    assert fundamental((2,)) == M((2,)) + M((1, 1))
    assert fundamental(()) == one()
    assert fundamental((1, 1)) == M((1, 1))
    # oracle: F_(2) expanded directly equals the M-side expansion
    assert expand_F((2,), N, D) == expand_elem(fundamental((2,)), N, D)


@pytest.mark.parametrize("alpha", [a for a in compositions_up_to(4)])
def test_fundamental_matches_oracle(alpha):
    assert expand_F(alpha, N, D) == expand_elem(fundamental(alpha), N, D)


def test_mul_examples():
    m1 = M((1,))
    assert m1 * m1 == M((1, 1)).scale(2) + M((2,))
    assert mul(m1, m1) == series_free_square()
    assert one() * M((2, 1)) == M((2, 1))
    assert M((2,)) * M((1,)) == M((2, 1)) + M((1, 2)) + M((3,))


def series_free_square():
    # (x1 + ... + x6)^2 read back into the M basis
    sq = series_op("mul", expand_M((1,), N, D), expand_M((1,), N, D))
    assert sq == expand_M((2,), N, D) + expand_M((1, 1), N, D).scale(2)
    return M((2,)) + M((1, 1)).scale(2)


def test_coproduct_examples():
    assert coproduct(M((1, 1))) == TensorElem({((), (1, 1)): 1, ((1,), (1,)): 1, ((1, 1), ()): 1})
    assert coproduct(one()) == TensorElem({((), ()): 1})
    assert coproduct(M((2,))) == TensorElem({((), (2,)): 1, ((2,), ()): 1})


def test_counit_examples():
    assert counit(one()) == 1
    assert counit(M((3,))) == 0
    assert counit(one().scale(5) + M((1,)).scale(2)) == 5


def test_antipode_examples():
    assert antipode(one()) == one()
    assert antipode(fundamental((2,))) == fundamental((1, 1))
    assert antipode(M((1,))) == -M((1,))


def test_m_to_f_examples():
    # F_(1,1) = M_(1,1), and F_(2) = M_(2) + M_(1,1)
    assert m_to_f(M((1, 1))) == {(1, 1): 1}
    assert m_to_f(M((2,))) == {(2,): 1, (1, 1): -1}
    assert m_to_f(one()) == {(): 1}
    assert m_to_f(fundamental((2, 1))) == {(2, 1): 1}


def test_h_e():
    assert h(0) == one() and e(0) == one()
    assert h(1) == M((1,)) == e(1)
    assert h(2) == M((2,)) + M((1, 1))
    assert e(2) == M((1, 1))
    assert expand_elem(e(2), N, D) == expand_M((1, 1), N, D)
    with pytest.raises(ValueError):
        h(-1)


@given(comps(6))
def test_f_round_trip(a):
    assert m_to_f(from_f({a: 3})) == {a: 3}
    assert from_f(m_to_f(M(a))) == M(a)


@given(comps(5))
def test_antipode_on_f(a):
    assert antipode(fundamental(a)) == fundamental(omega(a)).scale((-1) ** sum(a))


@given(comps(5))
def test_antipode_convolution(a):
    f = M(a)
    assert sweedler_sum(f, lambda x, y: antipode(x) * y) == counit(f)
    assert sweedler_sum(f, lambda x, y: x * antipode(y)) == counit(f)


@given(comps(3), comps(3))
def test_coproduct_is_multiplicative(a, b):
    assert coproduct(M(a) * M(b)) == coproduct(M(a)) * coproduct(M(b))


@given(comps(3), comps(3), comps(3))
def test_mul_associative_commutative(a, b, c):
    x, y, z = M(a), M(b), M(c)
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x


def test_degree_and_format():
    f = M((1, 2)).scale(2) - M((3,))
    assert f.degree() == 3
    assert QSymElem().degree() == float("-inf")
    assert str(f) == "-M[3] + 2*M[1,2]"
    assert str(QSymElem()) == "0"
    assert str(-M((1,))) == "-M[1]"


def test_huge_coefficients():
    big = 10 ** 40
    f = M((1,)).scale(big)
    assert (f * f).coeff((1, 1)) == 2 * big * big
