"""WQSym and FQSym: packed words, standardization and the five lifted operations.

Words are tuples of positive ints (letter ``i`` stands for ``X_i``).
``WQSymElem`` is keyed by packed words (the ``M_u`` basis) and
``FQSymElem`` by permutations (the ``G_sigma`` basis).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from . import kernels
from ._linear import LinearCombination
from .qsym import QSymElem

INF = float("inf")


def word_sort_key(w):
    return (len(w), tuple(-x for x in w))


class WQSymElem(LinearCombination):
    prefix = "M"
    __slots__ = ()
    sort_key = staticmethod(word_sort_key)

    @staticmethod
    def _weight(key):
        return len(key)

    def _product(self, u, v):
        return _filtered(u, v, "mul")


class FQSymElem(LinearCombination):
    prefix = "G"
    __slots__ = ()
    sort_key = staticmethod(word_sort_key)

    @staticmethod
    def _weight(key):
        return len(key)

    def _product(self, s, t):
        return to_fqsym(g_basis(s) * g_basis(t)).terms


def _check_word(w) -> tuple:
    w = tuple(int(x) for x in w)
    if any(x < 1 for x in w):
        raise ValueError(f"word letters must be positive, got {w}")
    return w


def is_packed(w) -> bool:
    return set(w) == set(range(1, len(set(w)) + 1))


def is_permutation(w) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def pack(w) -> tuple:
    """Relabel the letters of ``w`` onto ``1..k`` preserving their order."""
    w = _check_word(w)
    rank = {x: i + 1 for i, x in enumerate(sorted(set(w)))}
    return tuple(rank[x] for x in w)


def std(w) -> tuple:
    """Standardization: ties between equal letters are broken left to right."""
    w = _check_word(w)
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def shift(w, j: int) -> tuple:
    """``w^{+j}``: add ``j >= 0`` to every letter."""
    if j < 0:
        raise ValueError("shift amount must be nonnegative")
    return tuple(x + j for x in w)


def parikh(u) -> tuple:
    """Exponent sequence of the commutative image of ``u``, read in letter order."""
    counts: dict = {}
    for x in u:
        counts[x] = counts.get(x, 0) + 1
    return tuple(counts[x] for x in sorted(counts))


def packed_words(n: int) -> Iterator[tuple]:
    """All packed words of length ``n`` (brute force over ``{1..n}^n``)."""
    for w in product(range(1, n + 1), repeat=n):
        if is_packed(w):
            yield w


def _supp_bounds(w):
    return (min(w) if w else INF, max(w) if w else 0)


def _condition(op: str, left, right) -> bool:
    lo1, hi1 = _supp_bounds(left)
    lo2, _ = _supp_bounds(right)
    if op == "mul":
        return True
    if op == "prec":
        return lo1 < lo2
    if op == "circ":
        return lo1 == lo2
    if op == "succ":
        return lo1 > lo2
    if op == "belg":
        return hi1 <= lo2
    if op == "tvim":
        return hi1 < lo2
    raise ValueError(f"unknown operation {op!r}; expected one of {sorted(WQ_OPS)}")


WQ_OPS = ("prec", "circ", "succ", "belg", "tvim")


@lru_cache(maxsize=None)
def _filtered_cached(u: tuple, v: tuple, op: str) -> tuple:
    out = []
    ell = len(u)
    for phi, psi in kernels.qshuffle_maps(max(u, default=0), max(v, default=0)):
        w = tuple(phi[x - 1] for x in u) + tuple(psi[x - 1] for x in v)
        if _condition(op, w[:ell], w[ell:]):
            out.append(w)
    return tuple(out)


def _filtered(u, v, op) -> dict:
    return {w: 1 for w in _filtered_cached(u, v, op)}


def _filtered_naive(u, v, op) -> dict:
    ell = len(u)
    out = {}
    for w in packed_words(len(u) + len(v)):
        if pack(w[:ell]) == u and pack(w[ell:]) == v and _condition(op, w[:ell], w[ell:]):
            out[w] = 1
    return out


def _as_wqsym(x) -> WQSymElem:
    if isinstance(x, WQSymElem):
        return x
    if isinstance(x, FQSymElem):
        return fq_to_wq(x)
    w = _check_word(x)
    if not is_packed(w):
        raise ValueError(f"{w} is not a packed word")
    return WQSymElem({w: 1})


def wq_mul(a, b, naive: bool = False) -> WQSymElem:
    """Product in WQSym.  Arguments are packed words or ``WQSymElem``."""
    return wq_op("mul", a, b, naive=naive)


def wq_op(op: str, a, b, naive: bool = False) -> WQSymElem:
    """One of ``prec, circ, succ, belg, tvim`` (or ``mul``) on WQSym.

    The sum runs over packed ``w`` with ``pack(w[:l]) = u``, ``pack(w[l:]) = v``
    and the op's support condition.  ``naive=True`` filters every packed word
    of the right length instead of building the candidates directly.
    """
    if op != "mul" and op not in WQ_OPS:
        raise ValueError(f"unknown operation {op!r}; expected one of {list(WQ_OPS)}")
    rule = _filtered_naive if naive else _filtered
    return _as_wqsym(a).bilinear(_as_wqsym(b), lambda u, v: rule(u, v, op))


FQ_OPS = ("succ", "belg")


def _split_perms(s: tuple, t: tuple) -> Iterator[tuple]:
    ell, m = len(s), len(t)
    n = ell + m
    for first in combinations(range(1, n + 1), ell):
        rest = [x for x in range(1, n + 1) if x not in first]
        yield tuple(first[x - 1] for x in s) + tuple(rest[x - 1] for x in t)


def fq_op(op: str, a, b) -> FQSymElem:
    """``succ`` or ``belg`` on FQSym in the G basis (the only two that preserve it)."""
    if op not in FQ_OPS:
        raise ValueError(f"operation {op!r} does not preserve FQSym; expected one of {list(FQ_OPS)}")

    def rule(s, t):
        ell = len(s)
        return {p: 1 for p in _split_perms(s, t) if _condition(op, p[:ell], p[ell:])}

    return _as_fqsym(a).bilinear(_as_fqsym(b), rule)


def _as_fqsym(x) -> FQSymElem:
    if isinstance(x, FQSymElem):
        return x
    s = _check_word(x)
    if not is_permutation(s):
        raise ValueError(f"{s} is not a permutation")
    return FQSymElem({s: 1})


@lru_cache(maxsize=None)
def _std_fiber(sigma: tuple) -> tuple:
    # positions of 1, 2, ..., n in sigma; value i+1 may equal value i in w
    # exactly when i+1 sits to the right of i
    n = len(sigma)
    pos = [0] * (n + 1)
    for i, x in enumerate(sigma):
        pos[x] = i
    free = [i for i in range(1, n) if pos[i + 1] > pos[i]]
    out = []
    for k in range(len(free) + 1):
        for merge in combinations(free, k):
            merged = set(merge)
            letter = [0] * (n + 1)
            cur = 0
            for i in range(1, n + 1):
                if i - 1 not in merged:
                    cur += 1
                letter[i] = cur
            out.append(tuple(letter[x] for x in sigma))
    return tuple(out)


def g_basis(sigma) -> WQSymElem:
    """``G_sigma`` as the sum of ``M_w`` over packed ``w`` with ``std w = sigma``."""
    s = _check_word(sigma)
    if not is_permutation(s):
        raise ValueError(f"{s} is not a permutation")
    return WQSymElem({w: 1 for w in _std_fiber(s)})


def fq_to_wq(f: FQSymElem) -> WQSymElem:
    """Embed FQSym into WQSym."""
    out: dict = {}
    for s, c in f.terms.items():
        for w in _std_fiber(s):
            out[w] = out.get(w, 0) + c
    return WQSymElem(out)


def to_fqsym(f: WQSymElem):
    """The FQSym preimage of ``f``, or ``None`` if ``f`` is not in FQSym.

    Terms are grouped by standardization; each fiber must be complete with a
    constant coefficient.
    """
    groups: dict = {}
    for w, c in f.terms.items():
        groups.setdefault(std(w), {})[w] = c
    out = {}
    for sigma, fiber in groups.items():
        full = _std_fiber(sigma)
        coeffs = {fiber.get(w, 0) for w in full}
        if len(coeffs) != 1 or len(fiber) != len(full):
            return None
        out[sigma] = coeffs.pop()
    return FQSymElem(out)


def project(f) -> QSymElem:
    """``pi``: send ``M_u`` to ``M_{parikh(u)}``."""
    f = _as_wqsym(f)
    out: dict = {}
    for u, c in f.terms.items():
        key = parikh(u)
        out[key] = out.get(key, 0) + c
    return QSymElem(out)


def H(m: int) -> FQSymElem:
    if m < 0:
        raise ValueError("m must be >= 0")
    return FQSymElem({tuple(range(1, m + 1)): 1})


def E(m: int) -> FQSymElem:
    if m < 0:
        raise ValueError("m must be >= 0")
    return FQSymElem({tuple(range(m, 0, -1)): 1})
