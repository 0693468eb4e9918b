"""Brute-force ground truth in finitely many variables.

``TruncSeries`` is a polynomial in ``x_1..x_n`` with every monomial of degree
above ``d`` discarded; ``NCTruncSeries`` is the same for words in
``X_1..X_n``.  The restricted products are applied monomial by monomial from
their support conditions, with no reference to any basis of QSym or WQSym.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product

from . import kernels
from .compositions import composition, partial_sums

INF = float("inf")

SERIES_OPS = ("mul", "prec", "succeq", "preceq", "succ", "circ", "belg", "tvim")
NC_OPS = ("mul", "prec", "circ", "succ", "belg", "tvim")


def supp_min(m) -> float:
    """Smallest variable index in the support of an exponent vector, ``inf`` if none."""
    for i, e in enumerate(m):
        if e:
            return i + 1
    return INF


def supp_max(m) -> int:
    """Largest variable index in the support; 0 for the constant monomial."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i + 1
    return 0


@dataclass(frozen=True)
class TruncSeries:
    n: int
    d: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, c in self.terms.items():
            m = tuple(m)
            if len(m) != self.n:
                raise ValueError(f"monomial {m} has wrong number of variables")
            if c and sum(m) <= self.d:
                clean[m] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, n, d, c=1):
        return cls(n, d, {(0,) * n: c})

    @classmethod
    def variable(cls, i, n, d):
        m = [0] * n
        m[i - 1] = 1
        return cls(n, d, {tuple(m): 1})

    def _check(self, other):
        if not isinstance(other, TruncSeries) or (self.n, self.d) != (other.n, other.d):
            raise ValueError("series must share the number of variables and degree bound")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return TruncSeries(self.n, self.d, out)

    def __neg__(self):
        return TruncSeries(self.n, self.d, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return TruncSeries(self.n, self.d, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return series_op("mul", self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.n, self.d, self.terms) == (other.n, other.d, other.terms)

    def __hash__(self):
        return hash((self.n, self.d, frozenset(self.terms.items())))


def series_op(op: str, f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Restricted product of two truncated series, monomial by monomial."""
    f._check(g)
    try:
        code = kernels.OP_CODES[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}; expected one of {list(SERIES_OPS)}") from None
    return TruncSeries(f.n, f.d, kernels.series_product(f.terms, g.terms, code, f.d))


def _need(alpha, d):
    if sum(alpha) > d:
        raise ValueError(f"|{alpha}| exceeds degree bound {d}")


def expand_M(alpha, n: int, d: int) -> TruncSeries:
    """``sum over i_1 < ... < i_l <= n`` of ``x_{i_1}^{a_1} ... x_{i_l}^{a_l}``."""
    alpha = composition(alpha)
    _need(alpha, d)
    out = {}
    for idx in combinations(range(n), len(alpha)):
        m = [0] * n
        for i, a in zip(idx, alpha):
            m[i] = a
        out[tuple(m)] = 1
    return TruncSeries(n, d, out)


def expand_F(alpha, n: int, d: int) -> TruncSeries:
    """Weakly increasing index sequences with strict ascents at the partial sums."""
    alpha = composition(alpha)
    _need(alpha, d)
    size, cuts = partial_sums(alpha)
    strict = set(cuts)
    out: dict = {}
    for idx in combinations_with_replacement(range(n), size):
        if any(idx[j - 1] == idx[j] for j in strict):
            continue
        m = [0] * n
        for i in idx:
            m[i] += 1
        m = tuple(m)
        out[m] = out.get(m, 0) + 1
    return TruncSeries(n, d, out)


def expand_elem(f, n: int, d: int) -> TruncSeries:
    """Expand a ``QSymElem`` (M basis) into ``n`` variables."""
    if f.degree() > d:
        raise ValueError(f"element degree {f.degree()} exceeds bound {d}")
    total = TruncSeries(n, d)
    for alpha, c in f.terms.items():
        total = total + expand_M(alpha, n, d).scale(c)
    return total


@dataclass(frozen=True)
class NCTruncSeries:
    n: int
    d: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            w = tuple(w)
            if any(x < 1 or x > self.n for x in w):
                raise ValueError(f"word {w} uses letters outside 1..{self.n}")
            if c and len(w) <= self.d:
                clean[w] = int(c)
        object.__setattr__(self, "terms", clean)

    def _check(self, other):
        if not isinstance(other, NCTruncSeries) or (self.n, self.d) != (other.n, other.d):
            raise ValueError("series must share the alphabet size and length bound")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCTruncSeries(self.n, self.d, out)

    def __neg__(self):
        return NCTruncSeries(self.n, self.d, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return NCTruncSeries(self.n, self.d, {w: c * v for w, v in self.terms.items()})

    def constant_term(self) -> int:
        return self.terms.get((), 0)


def nc_series_op(op: str, f: NCTruncSeries, g: NCTruncSeries) -> NCTruncSeries:
    f._check(g)
    if op not in NC_OPS:
        raise ValueError(f"unknown operation {op!r}; expected one of {list(NC_OPS)}")
    code = kernels.OP_CODES[op]
    return NCTruncSeries(f.n, f.d, kernels.word_product(f.terms, g.terms, code, f.d))


def _pack(w):
    rank = {x: i + 1 for i, x in enumerate(sorted(set(w)))}
    return tuple(rank[x] for x in w)


def expand_Mu(u, n: int, d: int) -> NCTruncSeries:
    """All words over ``X_1..X_n`` whose packing is ``u``."""
    u = tuple(u)
    if len(u) > d:
        raise ValueError(f"length of {u} exceeds bound {d}")
    out = {}
    for w in product(range(1, n + 1), repeat=len(u)):
        if _pack(w) == u:
            out[w] = 1
    return NCTruncSeries(n, d, out)


def expand_wq_elem(f, n: int, d: int) -> NCTruncSeries:
    total = NCTruncSeries(n, d)
    for u, c in f.terms.items():
        total = total + expand_Mu(u, n, d).scale(c)
    return total
