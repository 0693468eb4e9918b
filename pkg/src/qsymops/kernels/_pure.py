"""Pure-Python hot kernels.  Same signatures as the compiled ``_ckernels``."""

from __future__ import annotations

from functools import lru_cache

# op codes shared with the compiled kernel (see kernels/__init__.py)
MUL, PREC, SUCCEQ, PRECEQ, SUCC, CIRC, BELG, TVIM = range(8)


@lru_cache(maxsize=None)
def _qshuffle(a: tuple, b: tuple) -> tuple:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: dict = {}
    for head, (ra, rb) in ((a[0], (a[1:], b)), (b[0], (a, b[1:])), (a[0] + b[0], (a[1:], b[1:]))):
        for g, c in _qshuffle(ra, rb):
            key = (head,) + g
            out[key] = out.get(key, 0) + c
    return tuple(out.items())


def qshuffle(a, b) -> dict:
    """Overlapping-shuffle multiset of two int sequences as ``{gamma: count}``.

    At each step the next part of gamma is the next part of ``a``, the next
    part of ``b``, or their sum.
    """
    return dict(_qshuffle(tuple(a), tuple(b)))


def qshuffle_maps(p: int, q: int) -> list:
    """All pairs ``(phi, psi)`` of strictly increasing maps ``[p] -> [k]``,
    ``[q] -> [k]`` whose images together cover ``{1..k}``.

    ``phi`` and ``psi`` are returned as tuples of their values.
    """
    out = []

    def rec(i, j, k, phi, psi):
        if i == p and j == q:
            out.append((tuple(phi), tuple(psi)))
            return
        k += 1
        if i < p:
            phi.append(k)
            rec(i + 1, j, k, phi, psi)
            if j < q:
                psi.append(k)
                rec(i + 1, j + 1, k, phi, psi)
                psi.pop()
            phi.pop()
        if j < q:
            psi.append(k)
            rec(i, j + 1, k, phi, psi)
            psi.pop()

    rec(0, 0, 0, [], [])
    return out


def immaculate_count(shape, content) -> int:
    """Number of immaculate tableaux of the given shape and content."""
    shape = tuple(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        return 0
    if not shape:
        return 1
    ell = len(shape)
    k = len(content)

    @lru_cache(maxsize=None)
    def rec(j: int, started: int, caps: tuple) -> int:
        # j: current value (0-based index into content); started: rows begun
        if j == k:
            return 1 if started == ell and not any(caps) else 0
        total = 0
        # either no new row starts at value j+1, or row `started` starts here
        options = [(started, caps, content[j])]
        if started < ell:
            c = list(caps)
            c.append(shape[started] - 1)
            if content[j] >= 1:
                options.append((started + 1, tuple(c), content[j] - 1))
        for st, cp, left in options:
            total += _distribute(j, st, cp, left)
        return total

    def _distribute(j, st, caps, left):
        # put `left` copies of value j+1 into the started rows, within caps
        total = 0

        def go(i, left, newcaps):
            nonlocal total
            if i == len(caps):
                if left == 0:
                    total += rec(j + 1, st, tuple(newcaps))
                return
            for t in range(min(left, caps[i]) + 1):
                newcaps.append(caps[i] - t)
                go(i + 1, left - t, newcaps)
                newcaps.pop()

        go(0, left, [])
        return total

    return rec(0, 0, ())


def _supp(m):
    lo = 0
    hi = 0
    for i, e in enumerate(m):
        if e:
            if not lo:
                lo = i + 1
            hi = i + 1
    return lo, hi


def _keep(op, lo_m, hi_m, lo_n, hi_n, inf):
    lm = lo_m or inf
    ln = lo_n or inf
    if op == MUL:
        return True
    if op == PREC:
        return lm < ln
    if op == SUCCEQ:
        return lm >= ln
    if op == PRECEQ:
        return lm <= ln
    if op == SUCC:
        return lm > ln
    if op == CIRC:
        return lm == ln
    if op == BELG:
        return hi_m <= ln
    if op == TVIM:
        return hi_m < ln
    raise ValueError(f"unknown op code {op}")


def series_product(f: dict, g: dict, op: int, d: int) -> dict:
    """Monomial-wise restricted product of truncated commutative series.

    Keys are exponent tuples of equal length; products of degree > d are dropped.
    """
    out: dict = {}
    inf = 1 << 62
    gs = [(n, c, _supp(n), sum(n)) for n, c in g.items()]
    for m, a in f.items():
        lo_m, hi_m = _supp(m)
        dm = sum(m)
        for n, b, (lo_n, hi_n), dn in gs:
            if dm + dn > d or not _keep(op, lo_m, hi_m, lo_n, hi_n, inf):
                continue
            key = tuple(x + y for x, y in zip(m, n))
            v = out.get(key, 0) + a * b
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def word_product(f: dict, g: dict, op: int, d: int) -> dict:
    """Word-wise restricted product of truncated noncommutative series."""
    out: dict = {}
    inf = 1 << 62
    gs = [(w, c, min(w) if w else 0, max(w) if w else 0) for w, c in g.items()]
    for u, a in f.items():
        lo_u = min(u) if u else 0
        hi_u = max(u) if u else 0
        for w, b, lo_w, hi_w in gs:
            if len(u) + len(w) > d or not _keep(op, lo_u, hi_u, lo_w, hi_w, inf):
                continue
            key = u + w
            v = out.get(key, 0) + a * b
            if v:
                out[key] = v
            else:
                del out[key]
    return out
