"""Immaculate tableaux and the dual immaculate functions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations_with_replacement
from typing import Iterator

from . import kernels
from .compositions import composition, compositions_of
from .dendriform import prec
from .qsym import QSymElem, h, one


@dataclass(frozen=True)
class ImmaculateTableau:
    """Filling of a composition diagram.

    The first column strictly increases downwards and every row weakly
    increases.  ``rows[i]`` has length ``shape[i]``.
    """

    shape: tuple
    rows: tuple

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError("row lengths do not match the shape")
        firsts = [r[0] for r in self.rows]
        if any(a >= b for a, b in zip(firsts, firsts[1:])):
            raise ValueError("first column must be strictly increasing")
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])) or (r and r[0] < 1):
                raise ValueError("rows must be weakly increasing positive entries")

    def entries(self) -> list:
        return [x for r in self.rows for x in r]

    def content(self):
        """Content composition, or ``None`` when the entries skip a value."""
        ents = self.entries()
        k = max(ents, default=0)
        counts = [0] * k
        for x in ents:
            counts[x - 1] += 1
        if any(c == 0 for c in counts):
            return None
        return tuple(counts)

    def monomial(self, nvars: int) -> tuple:
        """Exponent vector of ``x_T`` in ``nvars`` variables."""
        exps = [0] * nvars
        for x in self.entries():
            exps[x - 1] += 1
        return tuple(exps)


def enumerate_tableaux(alpha, max_entry: int) -> Iterator[ImmaculateTableau]:
    """All immaculate tableaux of shape ``alpha`` with entries at most ``max_entry``.

    Rows are filled top to bottom; each row's first entry must exceed the
    previous row's first entry.
    """
    alpha = composition(alpha)

    def rec(i, lower, rows):
        if i == len(alpha):
            yield ImmaculateTableau(alpha, tuple(rows))
            return
        for first in range(lower, max_entry + 1):
            for rest in combinations_with_replacement(range(first, max_entry + 1), alpha[i] - 1):
                rows.append((first,) + rest)
                yield from rec(i + 1, first + 1, rows)
                rows.pop()

    yield from rec(0, 1, [])


def count_tableaux(alpha, beta) -> int:
    """``K_{alpha,beta}``: immaculate tableaux of shape ``alpha`` and content ``beta``."""
    alpha, beta = composition(alpha), composition(beta)
    if sum(alpha) != sum(beta):
        return 0
    return kernels.immaculate_count(alpha, beta)


@lru_cache(maxsize=None)
def _dual_immaculate_tableaux(alpha: tuple) -> QSymElem:
    n = sum(alpha)
    return QSymElem({beta: count_tableaux(alpha, beta) for beta in compositions_of(n)})


def dual_immaculate_tableaux(alpha) -> QSymElem:
    return _dual_immaculate_tableaux(composition(alpha))


def dual_immaculate_creation(alpha) -> QSymElem:
    """``h_{a1} < (h_{a2} < (... < (h_{al} < 1)))``."""
    alpha = composition(alpha)
    return reduce(lambda acc, part: prec(h(part), acc), reversed(alpha), one())
