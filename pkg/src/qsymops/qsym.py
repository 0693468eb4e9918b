"""The Hopf algebra QSym over the integers, held in the monomial basis."""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from . import kernels
from ._linear import LinearCombination, format_key
from .compositions import composition, omega, refinements, sort_key


class QSymElem(LinearCombination):
    """A quasisymmetric function as ``{composition: coeff}`` in the M basis.

    ``*`` is the ordinary (overlapping-shuffle) product.
    """

    prefix = "M"
    __slots__ = ()

    def _product(self, a, b):
        return _mul_basis(a, b)

    def to_f(self) -> dict:
        return m_to_f(self)


class TensorElem(LinearCombination):
    """Element of QSym (x) QSym, keyed by pairs of compositions."""

    __slots__ = ()

    @staticmethod
    def _weight(key):
        return sum(key[0]) + sum(key[1])

    @classmethod
    def one(cls):
        return cls({((), ()): 1})

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self)({((), ()): other})
        return super()._coerce(other)

    def constant_term(self):
        return self._terms.get(((), ()), 0)

    def items(self):
        return iter(sorted(self._terms.items(),
                           key=lambda kv: (sort_key(kv[0][0]), sort_key(kv[0][1]))))

    def _product(self, k1, k2):
        out: dict = {}
        for g1, c1 in _mul_basis(k1[0], k2[0]).items():
            for g2, c2 in _mul_basis(k1[1], k2[1]).items():
                key = (g1, g2)
                out[key] = out.get(key, 0) + c1 * c2
        return out

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self.items():
            s = f"M{format_key(a)} (x) M{format_key(b)}"
            parts.append(("- " if c < 0 else "+ ") + (f"{abs(c)}*" if abs(c) != 1 else "") + s)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


@lru_cache(maxsize=None)
def _mul_basis_cached(a: tuple, b: tuple) -> tuple:
    return tuple(kernels.qshuffle(a, b).items())


def _mul_basis(a, b) -> dict:
    return dict(_mul_basis_cached(a, b))


def monomial(alpha) -> QSymElem:
    return QSymElem({composition(alpha): 1})


def one() -> QSymElem:
    return QSymElem.one()


@lru_cache(maxsize=None)
def _fundamental(alpha: tuple) -> QSymElem:
    return QSymElem({beta: 1 for beta in refinements(alpha)})


def fundamental(alpha) -> QSymElem:
    """``F_alpha`` written in the M basis (sum over refinements of ``alpha``)."""
    return _fundamental(composition(alpha))


def mul(f: QSymElem, g: QSymElem) -> QSymElem:
    return f * g


def coproduct(f: QSymElem) -> TensorElem:
    """Deconcatenation: ``M_a -> sum_i M_{a[:i]} (x) M_{a[i:]}``."""
    out: dict = {}
    for alpha, c in f.terms.items():
        for i in range(len(alpha) + 1):
            key = (alpha[:i], alpha[i:])
            out[key] = out.get(key, 0) + c
    return TensorElem(out)


def counit(f: QSymElem) -> int:
    return f.constant_term()


@lru_cache(maxsize=None)
def _m_to_f_basis(beta: tuple) -> tuple:
    n = len(beta)
    return tuple((gamma, (-1) ** (len(gamma) - n)) for gamma in refinements(beta))


def m_to_f(f: QSymElem) -> dict:
    """F-basis coordinates of ``f`` by Moebius inversion over refinement."""
    out: dict = {}
    for beta, c in f.terms.items():
        for gamma, s in _m_to_f_basis(beta):
            out[gamma] = out.get(gamma, 0) + s * c
    return {k: v for k, v in out.items() if v}


def from_f(coords: Mapping) -> QSymElem:
    """Build an element from F-basis coordinates."""
    out: dict = {}
    for alpha, c in coords.items():
        for beta in _fundamental(tuple(alpha)).terms:
            out[beta] = out.get(beta, 0) + c
    return QSymElem(out)


def antipode(f: QSymElem) -> QSymElem:
    """``S(F_a) = (-1)^|a| F_{omega(a)}``, applied in F coordinates."""
    coords = m_to_f(f)
    return from_f({omega(a): (-1) ** sum(a) * c for a, c in coords.items()})


def h(m: int) -> QSymElem:
    if m < 0:
        raise ValueError("h(m) needs m >= 0")
    return one() if m == 0 else fundamental((m,))


def e(m: int) -> QSymElem:
    if m < 0:
        raise ValueError("e(m) needs m >= 0")
    return monomial((1,) * m)


def tensor_map(t: TensorElem, left, right) -> TensorElem:
    """Apply ``left (x) right`` where both map a composition to a QSymElem."""
    out: dict = {}
    for (a, b), c in t.terms.items():
        for a2, c1 in left(a).terms.items():
            for b2, c2 in right(b).terms.items():
                out[(a2, b2)] = out.get((a2, b2), 0) + c * c1 * c2
    return TensorElem(out)


def sweedler_sum(f: QSymElem, combine) -> QSymElem:
    """``sum_(f) combine(M_{f1}, M_{f2})`` weighted by the coproduct coefficients."""
    total = QSymElem()
    for (a, b), c in coproduct(f).terms.items():
        total = total + combine(QSymElem({a: 1}), QSymElem({b: 1})).scale(c)
    return total
