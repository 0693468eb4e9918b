"""Compositions and their partial-sum sets.

A composition is a plain tuple of positive ints; ``()`` is the empty
composition.  Everything here is pure and works on tuples directly.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

Composition = tuple


class PartialSumSet(NamedTuple):
    """The pair ``(n, D)`` where ``D`` is a sorted tuple inside ``{1..n-1}``."""

    n: int
    elems: tuple


def composition(parts: Iterable[int]) -> Composition:
    """Validate ``parts`` and return them as a composition tuple."""
    alpha = tuple(int(p) for p in parts)
    for p in alpha:
        if p < 1:
            raise ValueError(f"composition parts must be positive, got {alpha}")
    return alpha


def size(alpha: Composition) -> int:
    return sum(alpha)


def partial_sums(alpha: Composition) -> PartialSumSet:
    out = []
    s = 0
    for p in alpha[:-1]:
        s += p
        out.append(s)
    return PartialSumSet(sum(alpha), tuple(out))


def from_partial_sums(s) -> Composition:
    """Inverse of :func:`partial_sums`.  Accepts a ``PartialSumSet`` or ``(n, elems)``."""
    n, elems = s
    cuts = sorted(elems)
    # sequences must already be strictly increasing; sets are taken as given
    ordered = isinstance(elems, (set, frozenset)) or list(elems) == cuts
    if n < 0 or not ordered or len(set(cuts)) != len(cuts) or any(c < 1 or c > n - 1 for c in cuts):
        raise ValueError(f"malformed partial-sum set: n={n}, elems={tuple(elems)}")
    if n == 0:
        return ()
    bounds = [0, *cuts, n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def concat(alpha: Composition, beta: Composition) -> Composition:
    return tuple(alpha) + tuple(beta)


def odot(alpha: Composition, beta: Composition) -> Composition:
    """Concatenate, merging the last part of ``alpha`` with the first of ``beta``."""
    if not alpha:
        return tuple(beta)
    if not beta:
        return tuple(alpha)
    return alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]


def reverse(alpha: Composition) -> Composition:
    return tuple(reversed(alpha))


def omega(alpha: Composition) -> Composition:
    """Conjugate composition: ``D(omega a)`` is the complement of ``D(rev a)``."""
    n, d = partial_sums(reverse(alpha))
    if n == 0:
        return ()
    taken = set(d)
    return from_partial_sums((n, [i for i in range(1, n) if i not in taken]))


def _subsets_of_cuts(alpha: Composition, keep_superset: bool) -> Iterator[Composition]:
    n, d = partial_sums(alpha)
    if keep_superset:
        free = [i for i in range(1, n) if i not in set(d)]
        for k in range(len(free) + 1):
            for extra in combinations(free, k):
                yield from_partial_sums((n, sorted(d + extra)))
    else:
        for k in range(len(d) + 1):
            for sub in combinations(d, k):
                yield from_partial_sums((n, sub))


def coarsenings(alpha: Composition) -> set:
    """All ``beta`` with ``|beta| = |alpha|`` and ``D(beta)`` inside ``D(alpha)``."""
    return set(_subsets_of_cuts(tuple(alpha), keep_superset=False))


def refinements(alpha: Composition) -> set:
    """All ``beta`` with ``|beta| = |alpha|`` and ``D(beta)`` containing ``D(alpha)``."""
    return set(_subsets_of_cuts(tuple(alpha), keep_superset=True))


def compositions_of(n: int) -> Iterator[Composition]:
    """Yield every composition of ``n``, largest first part first.

    Within the same size this is reverse lexicographic order, e.g.
    ``3 -> (3,), (2, 1), (1, 2), (1, 1, 1)``.
    """
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


def compositions_up_to(n: int) -> Iterator[Composition]:
    for k in range(n + 1):
        yield from compositions_of(k)


def lex_leq(beta: Composition, alpha: Composition) -> bool:
    """Lexicographic comparison; a proper prefix counts as smaller."""
    return tuple(beta) <= tuple(alpha)


def sort_key(alpha: Composition):
    """Canonical order: by size, then reverse lexicographic within a size.

    Matches :func:`compositions_of` so printed and serialized output lines
    up with iteration order.
    """
    return (sum(alpha), tuple(-p for p in alpha), -len(alpha))


def parse_composition(text: str) -> Composition:
    """Parse ``"[2,1,3]"`` (or ``"[]"``) into a composition."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"composition must be bracketed, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        return composition(int(p) for p in body.split(","))
    except ValueError as exc:
        raise ValueError(f"bad composition {text!r}: {exc}") from None


def format_composition(alpha: Composition) -> str:
    return "[" + ",".join(str(p) for p in alpha) + "]"
