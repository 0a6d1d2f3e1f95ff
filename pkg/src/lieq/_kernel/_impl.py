"""Integer matrix reduction kernels.

These loops are where the package spends its time: module canonicalization,
kernels, quotients and product presentations all reduce to repeated Smith
normal form and row-echelon passes over arbitrary-precision integer rows.

The same source is compiled with Cython at build time (setup.py copies it to
``_compiled.pyx``); ``lieq._kernel`` picks the compiled module when present.
Keep this file plain -- list-of-list matrices, no decorators, no dataclasses --
so the two backends stay behaviourally identical.
"""


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    """Exact product of two list-of-list integer matrices."""
    if not a:
        return []
    inner = len(b)
    bcols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * bcols
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(bcols):
                    y = bk[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def snf_with_transforms(mat, nrows, ncols):
    """Smith normal form with full transform tracking.

    Returns ``(d, u, v, vinv)`` with ``u * mat * v == d``, ``u`` and ``v``
    unimodular, ``vinv`` the exact inverse of ``v``, and ``d`` diagonal with
    non-negative entries satisfying d[0][0] | d[1][1] | ...
    """
    a = [list(row) for row in mat]
    u = identity_matrix(nrows)
    v = identity_matrix(ncols)
    vinv = identity_matrix(ncols)
    t = 0
    limit = nrows if nrows < ncols else ncols
    while t < limit:
        # Pivot: entry of least magnitude in the trailing block.
        pi = -1
        pj = -1
        best = 0
        found_unit = False
        for i in range(t, nrows):
            ai = a[i]
            for j in range(t, ncols):
                x = ai[j]
                if x:
                    if x < 0:
                        x = -x
                    if pi < 0 or x < best:
                        pi = i
                        pj = j
                        best = x
                        if x == 1:
                            found_unit = True
                            break
            if found_unit:
                break
        if pi < 0:
            break
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for r in range(t, nrows):
                ar = a[r]
                ar[t], ar[pj] = ar[pj], ar[t]
            for r in range(ncols):
                vr = v[r]
                vr[t], vr[pj] = vr[pj], vr[t]
            vinv[t], vinv[pj] = vinv[pj], vinv[t]
        while True:
            again = False
            for i in range(t + 1, nrows):
                x = a[i][t]
                if x:
                    piv = a[t][t]
                    q = x // piv
                    if q:
                        ai = a[i]
                        at = a[t]
                        for k in range(t, ncols):
                            ai[k] -= q * at[k]
                        ui = u[i]
                        ut = u[t]
                        for k in range(nrows):
                            ui[k] -= q * ut[k]
                    if a[i][t]:
                        # Remainder is smaller than the pivot: swap and redo.
                        a[t], a[i] = a[i], a[t]
                        u[t], u[i] = u[i], u[t]
                        again = True
            if again:
                continue
            for j in range(t + 1, ncols):
                x = a[t][j]
                if x:
                    piv = a[t][t]
                    q = x // piv
                    if q:
                        for r in range(t, nrows):
                            ar = a[r]
                            ar[j] -= q * ar[t]
                        for r in range(ncols):
                            vr = v[r]
                            vr[j] -= q * vr[t]
                        vt = vinv[t]
                        vj = vinv[j]
                        for k in range(ncols):
                            vt[k] += q * vj[k]
                    if a[t][j]:
                        for r in range(t, nrows):
                            ar = a[r]
                            ar[t], ar[j] = ar[j], ar[t]
                        for r in range(ncols):
                            vr = v[r]
                            vr[t], vr[j] = vr[j], vr[t]
                        vinv[t], vinv[j] = vinv[j], vinv[t]
                        again = True
            if again:
                continue
            # Divisibility sweep: the pivot must divide the trailing block.
            piv = a[t][t]
            bad = -1
            for i in range(t + 1, nrows):
                ai = a[i]
                for j in range(t + 1, ncols):
                    if ai[j] % piv:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            at = a[t]
            ab = a[bad]
            for k in range(t, ncols):
                at[k] += ab[k]
            ut = u[t]
            ub = u[bad]
            for k in range(nrows):
                ut[k] += ub[k]
        if a[t][t] < 0:
            at = a[t]
            for k in range(t, ncols):
                at[k] = -at[k]
            ut = u[t]
            for k in range(nrows):
                ut[k] = -ut[k]
        t += 1
    return a, u, v, vinv


def hnf_rows_with_kernel(rows, ncols):
    """Hermite reduction with companion tracking.

    Returns (basis, kernel): ``basis`` spans the input row lattice, ``kernel``
    is a lattice basis of { x : x @ rows == 0 }. Row-by-row reduction keeps
    intermediate entries far smaller than a full Smith reduction would on
    tall stacks, which is why kernels are computed this way.
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = {}
    kernel = []
    for idx in range(nrows):
        r = rows[idx]
        cr = [1 if k == idx else 0 for k in range(nrows)]
        c = 0
        placed = False
        while c < ncols:
            x = r[c]
            if x == 0:
                c += 1
                continue
            entry = pivots.get(c)
            if entry is None:
                if x < 0:
                    for k in range(c, ncols):
                        r[k] = -r[k]
                    for k in range(nrows):
                        cr[k] = -cr[k]
                pivots[c] = (r, cr)
                placed = True
                break
            p, cp = entry
            while True:
                q = r[c] // p[c]
                if q:
                    for k in range(c, ncols):
                        r[k] -= q * p[k]
                    for k in range(nrows):
                        cr[k] -= q * cp[k]
                if r[c] == 0:
                    break
                p, r = r, p
                cp, cr = cr, cp
                pivots[c] = (p, cp)
        if not placed:
            kernel.append(tuple(cr))
    basis = []
    for c in sorted(pivots):
        p, cp = pivots[c]
        if p[c] < 0:
            for k in range(c, ncols):
                p[k] = -p[k]
        basis.append(p)
    return basis, kernel


def hnf_rows(rows, ncols):
    """Reduce integer rows to a small generating set of the same row lattice.

    Incremental Hermite-style echelon without transform tracking: returns at
    most ``ncols`` rows, sorted by pivot column, spanning exactly the input
    lattice. Used to compress large relation lists before running the SNF.
    """
    pivots = {}
    for row in rows:
        r = list(row)
        c = 0
        while c < ncols:
            x = r[c]
            if x == 0:
                c += 1
                continue
            p = pivots.get(c)
            if p is None:
                if x < 0:
                    for k in range(c, ncols):
                        r[k] = -r[k]
                pivots[c] = r
                break
            while True:
                q = r[c] // p[c]
                if q:
                    for k in range(c, ncols):
                        r[k] -= q * p[k]
                if r[c] == 0:
                    break
                p, r = r, p
                pivots[c] = p
            # r is now zero at column c; keep scanning it.
    out = []
    for c in sorted(pivots):
        p = pivots[c]
        if p[c] < 0:
            for k in range(c, ncols):
                p[k] = -p[k]
        out.append(p)
    return out
