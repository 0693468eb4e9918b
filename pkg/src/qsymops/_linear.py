"""Sparse integer linear combinations over tuple-indexed bases."""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping

from .compositions import sort_key


def clean(terms: Mapping) -> dict:
    return {k: int(v) for k, v in terms.items() if v}


class LinearCombination:
    """Immutable finite map ``basis key -> nonzero int``.

    Subclasses set ``prefix`` (used by ``str``) and implement ``_product``
    on basis keys when the space has a multiplication.
    """

    prefix = "?"
    __slots__ = ("_terms", "_hash")
    sort_key = staticmethod(sort_key)

    def __init__(self, terms: Mapping | None = None):
        self._terms = clean(terms or {})
        self._hash = None

    @classmethod
    def basis(cls, key) -> "LinearCombination":
        return cls({tuple(key): 1})

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def zero(cls):
        return cls()

    # mapping-ish access
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator:
        return iter(sorted(self._terms.items(), key=lambda kv: self.sort_key(kv[0])))

    def coeff(self, key) -> int:
        return self._terms.get(tuple(key), 0)

    def support(self) -> list:
        return sorted(self._terms, key=self.sort_key)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> float:
        """Largest basis-key weight, ``-inf`` for zero."""
        if not self._terms:
            return float("-inf")
        return max(self._weight(k) for k in self._terms)

    @staticmethod
    def _weight(key) -> int:
        return sum(key)

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def homogeneous_part(self, n: int):
        return type(self)({k: c for k, c in self._terms.items() if self._weight(k) == n})

    def map_basis(self, f: Callable):
        """Apply a linear map given on basis keys (``f`` returns an element)."""
        out: dict = {}
        for k, c in self._terms.items():
            for k2, c2 in f(k)._terms.items():
                out[k2] = out.get(k2, 0) + c * c2
        return type(self)(out)

    # vector space structure
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self)({(): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int):
        return type(self)({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, type(self)):
            return self.bilinear(other, self._product)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def bilinear(self, other, rule: Callable):
        """Extend ``rule(key1, key2) -> {key: coeff}`` bilinearly."""
        out: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                for k, c in rule(k1, k2).items():
                    out[k] = out.get(k, 0) + c1 * c2 * c
        return type(self)(out)

    def _product(self, k1, k2) -> dict:
        raise TypeError(f"{type(self).__name__} has no product")

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self)({(): other})
        if not isinstance(other, LinearCombination) or type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        return format_terms(self.items(), self.prefix)


def format_key(key) -> str:
    return "[" + ",".join(str(p) for p in key) + "]"


def format_terms(items: Iterable, prefix: str) -> str:
    """Render terms as ``"2*M[1,2] - M[3]"``; ``"0"`` when empty."""
    parts = []
    for key, c in items:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = f"{prefix}{format_key(key)}"
        if mag != 1:
            body = f"{mag}*{body}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
