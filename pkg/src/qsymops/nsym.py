"""NSym in the ribbon basis, its pairing with QSym, and perp operators.

Only what the creation-operator formulas need: the ribbon product, the
pairing ``(R_a, F_b) = [a == b]``, ``g^perp`` and the operators ``W_m``.
"""

from __future__ import annotations

from functools import reduce
from typing import Callable

from ._linear import LinearCombination
from .compositions import composition, compositions_of, concat, odot, omega
from .qsym import QSymElem, coproduct, fundamental, m_to_f, one


class NSymElem(LinearCombination):
    """Noncommutative symmetric function as ``{composition: coeff}`` in the R basis."""

    prefix = "R"
    __slots__ = ()

    def _product(self, a, b):
        return _ribbon_basis(a, b)


def _ribbon_basis(a, b) -> dict:
    if not a or not b:
        return {a + b: 1}
    return {concat(a, b): 1, odot(a, b): 1}


def ribbon(alpha) -> NSymElem:
    return NSymElem({composition(alpha): 1})


def ribbon_mul(x: NSymElem, y: NSymElem) -> NSymElem:
    return x * y


def pairing(x: NSymElem, f: QSymElem) -> int:
    coords = m_to_f(f)
    return sum(c * coords.get(alpha, 0) for alpha, c in x.terms.items())


def perp(g: NSymElem, f: QSymElem) -> QSymElem:
    """``g^perp f = sum_(f) (g, f1) f2``."""
    gt = g.terms
    if not gt:
        return QSymElem()
    sizes = {sum(a) for a in gt}
    out: dict = {}
    cache: dict = {}
    for (left, right), c in coproduct(f).terms.items():
        if sum(left) not in sizes:
            continue
        if left not in cache:
            coords = m_to_f(QSymElem({left: 1}))
            cache[left] = sum(gc * coords.get(a, 0) for a, gc in gt.items())
        p = cache[left]
        if p:
            out[right] = out.get(right, 0) + c * p
    return QSymElem(out)


def omega_sum(f: QSymElem, factor: Callable[[tuple], QSymElem]) -> QSymElem:
    """``sum_a (-1)^|a| factor(a) * R_{omega(a)}^perp f`` over ``|a| <= deg f``.

    Terms with ``|a| > deg f`` vanish, so the truncation is exact.
    """
    if f.is_zero():
        return QSymElem()
    total = QSymElem()
    for k in range(int(f.degree()) + 1):
        sign = -1 if k % 2 else 1
        for alpha in compositions_of(k):
            p = perp(ribbon(omega(alpha)), f)
            if p.is_zero():
                continue
            left = factor(alpha)
            if left.is_zero():
                continue
            total = total + (left * p).scale(sign)
    return total


def W(m: int, f: QSymElem) -> QSymElem:
    """Creation operator ``W_m = sum_a (-1)^|a| F_{a odot (m)} R_{omega(a)}^perp``."""
    if m < 1:
        raise ValueError(f"W_m needs a positive m, got {m}")
    return omega_sum(f, lambda alpha: fundamental(odot(alpha, (m,))))


def zabrocki_dual_immaculate(alpha) -> QSymElem:
    """``(W_{a1} o W_{a2} o ... o W_{al})(1)``."""
    alpha = composition(alpha)
    return reduce(lambda acc, part: W(part, acc), reversed(alpha), one())


def f_setminus(alpha, m: int) -> QSymElem:
    """``F_alpha`` with ``m`` removed from its last part (zero if impossible)."""
    alpha = composition(alpha)
    if m < 1:
        raise ValueError("m must be positive")
    if not alpha or alpha[-1] < m:
        return QSymElem()
    if alpha[-1] == m:
        return fundamental(alpha[:-1])
    return fundamental(alpha[:-1] + (alpha[-1] - m,))

