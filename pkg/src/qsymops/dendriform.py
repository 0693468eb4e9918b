"""Restricted products on QSym.

``prec`` keeps only the overlapping shuffles whose first part comes from the
left factor alone; ``belg`` and ``tvim`` are concatenation-type products.
``succeq``, ``succ`` and ``preceq`` are derived from ``prec`` and the
ordinary product.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from itertools import combinations
from typing import Iterable

from . import kernels
from .compositions import composition, concat, odot
from .qsym import QSymElem, one


@lru_cache(maxsize=None)
def _prec_basis_cached(a: tuple, b: tuple) -> tuple:
    if not a:
        return ()
    head = (a[0],)
    return tuple((head + g, c) for g, c in kernels.qshuffle(a[1:], b).items())


def _prec_basis(a, b) -> dict:
    return dict(_prec_basis_cached(a, b))


def _smap_count_reference(alpha, beta, gamma) -> int:
    """Count gamma-smaps by enumerating strictly increasing maps directly."""
    n = len(gamma)
    count = 0
    for img0 in combinations(range(1, n + 1), len(alpha)):
        for img1 in combinations(range(1, n + 1), len(beta)):
            lo0 = img0[0] if img0 else float("inf")
            lo1 = img1[0] if img1 else float("inf")
            if not lo0 < lo1:
                continue
            fiber = [0] * (n + 1)
            for v, p in zip(img0, alpha):
                fiber[v] += p
            for v, q in zip(img1, beta):
                fiber[v] += q
            if all(fiber[u + 1] == gamma[u] for u in range(n)):
                count += 1
    return count


def smap_count(alpha, beta, gamma, reference: bool = False) -> int:
    """Structure constant of ``M_gamma`` in ``M_alpha < M_beta``.

    With ``reference=True`` the maps are enumerated by brute force.
    """
    alpha, beta, gamma = composition(alpha), composition(beta), composition(gamma)
    if sum(gamma) != sum(alpha) + sum(beta):
        return 0
    if reference:
        return _smap_count_reference(alpha, beta, gamma)
    return _prec_basis(alpha, beta).get(gamma, 0)


def prec(f: QSymElem, g: QSymElem) -> QSymElem:
    return f.bilinear(g, _prec_basis)


def succeq(f: QSymElem, g: QSymElem) -> QSymElem:
    return f * g - prec(f, g)


def succ(f: QSymElem, g: QSymElem) -> QSymElem:
    return prec(g, f)


def preceq(f: QSymElem, g: QSymElem) -> QSymElem:
    return f * g - succ(f, g)


def _belg_basis(a, b) -> dict:
    if not a or not b:
        return {a + b: 1}
    return {concat(a, b): 1, odot(a, b): 1}


def _tvim_basis(a, b) -> dict:
    return {a + b: 1}


def belg(f: QSymElem, g: QSymElem) -> QSymElem:
    return f.bilinear(g, _belg_basis)


def tvim(f: QSymElem, g: QSymElem) -> QSymElem:
    return f.bilinear(g, _tvim_basis)


def _chain(op, parts: Iterable[QSymElem]) -> QSymElem:
    # both products are associative, so a left fold is unambiguous
    return reduce(op, list(parts) + [one()])


def belg_chain(parts: Iterable[QSymElem]) -> QSymElem:
    return _chain(belg, parts)


def tvim_chain(parts: Iterable[QSymElem]) -> QSymElem:
    return _chain(tvim, parts)


OPERATIONS = {
    "mul": lambda f, g: f * g,
    "prec": prec,
    "succeq": succeq,
    "preceq": preceq,
    "succ": succ,
    "belg": belg,
    "tvim": tvim,
}


def apply(name: str, f: QSymElem, g: QSymElem) -> QSymElem:
    try:
        op = OPERATIONS[name]
    except KeyError:
        raise ValueError(f"unknown operation {name!r}; expected one of {sorted(OPERATIONS)}") from None
    return op(f, g)
