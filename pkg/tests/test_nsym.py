import pytest
from hypothesis import given

from qsymops.compositions import compositions_up_to
from qsymops.dendriform import belg, prec
from qsymops.immaculate import dual_immaculate_tableaux
from qsymops.nsym import (
    NSymElem,
    W,
    f_setminus,
    omega_sum,
    pairing,
    perp,
    ribbon,
    ribbon_mul,
    zabrocki_dual_immaculate,
)
from qsymops.qsym import counit, fundamental, h, monomial, one

from conftest import comps

M, F, R = monomial, fundamental, ribbon


def test_ribbon_mul_examples():
    assert ribbon_mul(R((1,)), R((1,))) == R((1, 1)) + R((2,))
    assert ribbon_mul(R(()), R((2, 1))) == R((2, 1))
    assert ribbon_mul(R((2,)), R((1, 1))) == R((2, 1, 1)) + R((3, 1))
    assert str(R((1,)) * R((1,))) == "R[2] + R[1,1]"


def test_pairing_examples():
    assert pairing(R((1, 2)), F((1, 2))) == 1
    assert pairing(R((1, 2)), F((2, 1))) == 0
    assert pairing(R(()), M((2,))) == 0


def test_perp_examples():
    assert perp(R(()), M((2, 1))) == M((2, 1))
    assert perp(R((1,)), F((1, 2))) == F((2,))
    assert perp(R((2,)), F((2,))) == one()
    assert perp(NSymElem(), M((1,))) == 0


def test_w_examples():
    assert W(1, one()) == F((1,)) == M((1,))
    assert W(2, one()) == F((2,))
    assert W(1, M((1,))) == M((1, 1))
    for bad in (0, -1):
        with pytest.raises(ValueError):
            W(bad, one())


def test_zabrocki_examples():
    assert zabrocki_dual_immaculate(()) == one()
    assert zabrocki_dual_immaculate((2,)) == M((2,)) + M((1, 1))
    assert zabrocki_dual_immaculate((1, 1)) == M((1, 1))


def test_f_setminus_examples():
    assert f_setminus((2, 1), 2) == 0
    assert f_setminus((2, 1), 1) == F((2,))
    assert f_setminus((3,), 1) == F((2,))


@given(comps(3), comps(3), comps(5))
def test_adjointness(g, x, f):
    # (g x, f) = (x, g^perp f)
    assert pairing(R(g) * R(x), F(f)) == pairing(R(x), perp(R(g), F(f)))


@given(comps(2), comps(2), comps(5))
def test_perp_reverses_products(x, y, f):
    assert perp(R(x) * R(y), M(f)) == perp(R(y), perp(R(x), M(f)))


@given(comps(2), comps(2), comps(2))
def test_ribbon_associative(a, b, c):
    x, y, z = R(a), R(b), R(c)
    assert (x * y) * z == x * (y * z)
    assert R(()) * x == x == x * R(())


@pytest.mark.parametrize("beta", list(compositions_up_to(4)))
def test_hmdless(beta):
    for m in range(1, 4):
        assert W(m, M(beta)) == prec(h(m), M(beta))


@pytest.mark.parametrize("beta", list(compositions_up_to(4)))
def test_analogue0(beta):
    assert omega_sum(M(beta), F) == counit(M(beta))


@pytest.mark.parametrize("beta", list(compositions_up_to(4)))
def test_analogue_minus(beta):
    f = M(beta)
    for m in range(1, 4):
        lhs = omega_sum(f, lambda a: f_setminus(a, m)).scale((-1) ** m)
        assert lhs == counit(perp(R((1,) * m), f))


@given(comps(3, 1), comps(3))
def test_hmdless_lemma_nonconstant(a, f):
    lhs = omega_sum(M(f), lambda alpha: belg(F(alpha), M(a)))
    assert lhs == prec(M(a), M(f))


def test_hmdless_lemma_unit_pair():
    # with 1 < 1 = 0 the left side keeps belg(1, 1) = 1
    assert omega_sum(one(), lambda alpha: belg(F(alpha), one())) == one()
    assert prec(one(), one()) == 0


@given(comps(5))
def test_zabrocki_equals_tableaux(a):
    assert zabrocki_dual_immaculate(a) == dual_immaculate_tableaux(a)
