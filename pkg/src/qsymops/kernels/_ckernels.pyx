# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels.  Mirrors ``_pure`` exactly; counts stay Python ints."""

cdef enum:
    MAXLEN = 128

MUL, PREC, SUCCEQ, PRECEQ, SUCC, CIRC, BELG, TVIM = range(8)


cdef void _qs_rec(long* a, int na, int i, long* b, int nb, int j,
                  long* buf, int depth, dict out):
    cdef tuple key
    cdef int t
    if i == na and j == nb:
        key = tuple([buf[t] for t in range(depth)])
        out[key] = out.get(key, 0) + 1
        return
    if i < na:
        buf[depth] = a[i]
        _qs_rec(a, na, i + 1, b, nb, j, buf, depth + 1, out)
    if j < nb:
        buf[depth] = b[j]
        _qs_rec(a, na, i, b, nb, j + 1, buf, depth + 1, out)
    if i < na and j < nb:
        buf[depth] = a[i] + b[j]
        _qs_rec(a, na, i + 1, b, nb, j + 1, buf, depth + 1, out)


def qshuffle(a, b):
    cdef int na = len(a), nb = len(b), t
    cdef long ca[MAXLEN]
    cdef long cb[MAXLEN]
    cdef long buf[2 * MAXLEN]
    if na > MAXLEN or nb > MAXLEN:
        raise ValueError("sequence too long for compiled kernel")
    for t in range(na):
        ca[t] = a[t]
    for t in range(nb):
        cb[t] = b[t]
    cdef dict out = {}
    _qs_rec(ca, na, 0, cb, nb, 0, buf, 0, out)
    return out


cdef void _qm_rec(int p, int q, int i, int j, int k,
                  long* phi, long* psi, list out):
    cdef int t
    if i == p and j == q:
        out.append((tuple([phi[t] for t in range(p)]),
                    tuple([psi[t] for t in range(q)])))
        return
    k += 1
    if i < p:
        phi[i] = k
        _qm_rec(p, q, i + 1, j, k, phi, psi, out)
        if j < q:
            psi[j] = k
            _qm_rec(p, q, i + 1, j + 1, k, phi, psi, out)
    if j < q:
        psi[j] = k
        _qm_rec(p, q, i, j + 1, k, phi, psi, out)


def qshuffle_maps(int p, int q):
    cdef long phi[MAXLEN]
    cdef long psi[MAXLEN]
    if p > MAXLEN or q > MAXLEN:
        raise ValueError("length too large for compiled kernel")
    cdef list out = []
    _qm_rec(p, q, 0, 0, 0, phi, psi, out)
    return out


cdef object _imm_rec(long* shape, int ell, long* content, int k,
                     int j, int started, long* caps):
    # caps[0:started] are remaining free cells per started row
    cdef int t
    cdef object total = 0
    if j == k:
        if started != ell:
            return 0
        for t in range(started):
            if caps[t] != 0:
                return 0
        return 1
    total += _imm_dist(shape, ell, content, k, j, started, caps, 0, content[j])
    if started < ell and content[j] >= 1:
        caps[started] = shape[started] - 1
        total += _imm_dist(shape, ell, content, k, j, started + 1, caps, 0,
                           content[j] - 1)
    return total


cdef object _imm_dist(long* shape, int ell, long* content, int k,
                      int j, int started, long* caps, int i, long left):
    cdef object total = 0
    cdef long t, m, saved
    if i == started:
        if left == 0:
            return _imm_rec(shape, ell, content, k, j + 1, started, caps)
        return 0
    saved = caps[i]
    m = saved if saved < left else left
    t = 0
    while t <= m:
        caps[i] = saved - t
        total += _imm_dist(shape, ell, content, k, j, started, caps, i + 1, left - t)
        t += 1
    caps[i] = saved
    return total


def immaculate_count(shape, content):
    cdef int ell = len(shape), k = len(content), t
    if sum(shape) != sum(content):
        return 0
    if ell == 0:
        return 1
    if ell > MAXLEN or k > MAXLEN:
        raise ValueError("shape too long for compiled kernel")
    cdef long cs[MAXLEN]
    cdef long cc[MAXLEN]
    cdef long caps[MAXLEN]
    for t in range(ell):
        cs[t] = shape[t]
    for t in range(k):
        cc[t] = content[t]
    return _imm_rec(cs, ell, cc, k, 0, 0, caps)


cdef inline bint _keep(int op, long lm, long hm, long ln, long hn):
    if op == 0:
        return True
    if op == 1:
        return lm < ln
    if op == 2:
        return lm >= ln
    if op == 3:
        return lm <= ln
    if op == 4:
        return lm > ln
    if op == 5:
        return lm == ln
    if op == 6:
        return hm <= ln
    return hm < ln


cdef long INF = 1 << 62


def series_product(dict f, dict g, int op, int d):
    if op < 0 or op > 7:
        raise ValueError(f"unknown op code {op}")
    cdef dict out = {}
    cdef list gs = []
    cdef long lo, hi, deg, lo_m, hi_m, dm, i, e
    cdef tuple m, n, key
    for n, c in g.items():
        lo = 0; hi = 0; deg = 0
        for i in range(len(n)):
            e = n[i]
            if e:
                if lo == 0:
                    lo = i + 1
                hi = i + 1
                deg += e
        gs.append((n, c, lo if lo else INF, hi, deg))
    for m, a in f.items():
        lo_m = 0; hi_m = 0; dm = 0
        for i in range(len(m)):
            e = m[i]
            if e:
                if lo_m == 0:
                    lo_m = i + 1
                hi_m = i + 1
                dm += e
        if lo_m == 0:
            lo_m = INF
        for n, b, lo, hi, deg in gs:
            if dm + deg > d or not _keep(op, lo_m, hi_m, lo, hi):
                continue
            key = tuple([m[i] + n[i] for i in range(len(m))])
            v = out.get(key, 0) + a * b
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def word_product(dict f, dict g, int op, int d):
    if op < 0 or op > 7:
        raise ValueError(f"unknown op code {op}")
    cdef dict out = {}
    cdef list gs = []
    cdef tuple u, w
    cdef long lo_u, hi_u, lo_w, hi_w
    for w, c in g.items():
        gs.append((w, c, min(w) if w else INF, max(w) if w else 0))
    for u, a in f.items():
        lo_u = min(u) if u else INF
        hi_u = max(u) if u else 0
        for w, b, lo_w, hi_w in gs:
            if len(u) + len(w) > d or not _keep(op, lo_u, hi_u, lo_w, hi_w):
                continue
            key = u + w
            v = out.get(key, 0) + a * b
            if v:
                out[key] = v
            else:
                del out[key]
    return out
