"""Pure-Python kernels for table-backed finite-field linear algebra and forms.

Mirror of the compiled `_fastcore` extension: identical signatures, identical
results.  Elements are integer codes; `ft` is a table bundle with attributes
q, exp, log, zech, nlog (see gf.FieldTables).  Zech logarithms make addition a
couple of list lookups, so even the pure path stays usable at desk scale.
"""
from ._formtables import MONS, RAISE

BACKEND = "pure"


def mat_mul(ft, A, B, n):
    q1, exp, log, zech = ft.q - 1, ft.exp, ft.log, ft.zech
    out = [0] * (n * n)
    for i in range(n):
        row = i * n
        for j in range(n):
            acc = 0
            for k in range(n):
                a = A[row + k]
                if not a:
                    continue
                b = B[k * n + j]
                if not b:
                    continue
                m = exp[log[a] + log[b]]
                if acc == 0:
                    acc = m
                else:
                    d = zech[(log[m] - log[acc]) % q1]
                    acc = 0 if d < 0 else exp[(log[acc] + d) % q1]
            out[row + j] = acc
    return out


def mat_vec(ft, A, v, n):
    q1, exp, log, zech = ft.q - 1, ft.exp, ft.log, ft.zech
    out = [0] * n
    for i in range(n):
        row = i * n
        acc = 0
        for k in range(n):
            a = A[row + k]
            if not a:
                continue
            b = v[k]
            if not b:
                continue
            m = exp[log[a] + log[b]]
            if acc == 0:
                acc = m
            else:
                d = zech[(log[m] - log[acc]) % q1]
                acc = 0 if d < 0 else exp[(log[acc] + d) % q1]
        out[i] = acc
    return out


def _add(ft, a, b):
    if a == 0:
        return b
    if b == 0:
        return a
    d = ft.zech[(ft.log[b] - ft.log[a]) % (ft.q - 1)]
    return 0 if d < 0 else ft.exp[(ft.log[a] + d) % (ft.q - 1)]


def _mul(ft, a, b):
    if a == 0 or b == 0:
        return 0
    return ft.exp[ft.log[a] + ft.log[b]]


def _neg(ft, a):
    if a == 0:
        return 0
    return ft.exp[(ft.log[a] + ft.nlog) % (ft.q - 1)]


def _inv(ft, a):
    return ft.exp[(ft.q - 1 - ft.log[a]) % (ft.q - 1)]


def _elim(ft, A, rhs, n, m):
    """Row-reduce the n x (n+m) system [A | rhs]; return solved rhs or None."""
    W = [list(A[i * n:(i + 1) * n]) + list(rhs[i * m:(i + 1) * m]) for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if W[r][col]:
                piv = r
                break
        if piv is None:
            return None
        if piv != col:
            W[col], W[piv] = W[piv], W[col]
        pivinv = _inv(ft, W[col][col])
        W[col] = [_mul(ft, x, pivinv) for x in W[col]]
        for r in range(n):
            if r != col and W[r][col]:
                f = _neg(ft, W[r][col])
                Wr, Wc = W[r], W[col]
                for c in range(col, n + m):
                    Wr[c] = _add(ft, Wr[c], _mul(ft, f, Wc[c]))
    out = []
    for i in range(n):
        out.extend(W[i][n:])
    return out


def mat_inv(ft, A, n):
    ident = [0] * (n * n)
    for i in range(n):
        ident[i * n + i] = 1
    return _elim(ft, A, ident, n, n)


def mat_solve(ft, A, b, n):
    return _elim(ft, A, list(b), n, 1)


def form_map(ft, coeffs, M, nin, nout, deg):
    """Coefficients of f(Mu): x_i := sum_j M[i*nout+j] u_j, f homogeneous."""
    mons_in = MONS[(nin, deg)]
    out = [0] * len(MONS[(nout, deg)])
    for ci, c in enumerate(coeffs):
        if not c:
            continue
        poly = [c]
        d = 0
        mon = mons_in[ci]
        for var in range(nin):
            row = var * nout
            for _ in range(mon[var]):
                raise_tab = RAISE[(nout, d)]
                new = [0] * len(MONS[(nout, d + 1)])
                for mi, pc in enumerate(poly):
                    if not pc:
                        continue
                    base = mi * nout
                    for j in range(nout):
                        mj = M[row + j]
                        if mj:
                            t = raise_tab[base + j]
                            new[t] = _add(ft, new[t], _mul(ft, pc, mj))
                poly = new
                d += 1
        for i, pc in enumerate(poly):
            if pc:
                out[i] = _add(ft, out[i], pc)
    return out


def form_eval(ft, coeffs, nvars, deg, pt):
    mons = MONS[(nvars, deg)]
    total = 0
    for c, mon in zip(coeffs, mons):
        if not c:
            continue
        v = c
        for var in range(nvars):
            e = mon[var]
            if e:
                x = pt[var]
                if x == 0:
                    v = 0
                    break
                for _ in range(e):
                    v = _mul(ft, v, x)
        if v:
            total = _add(ft, total, v)
    return total


def all_zero_at_images(ft, coeffs, nvars, deg, M, pts, npts):
    for t in range(npts):
        p = pts[t * nvars:(t + 1) * nvars]
        img = mat_vec(ft, M, p, nvars)
        if form_eval(ft, coeffs, nvars, deg, img):
            return False
    return True


def scan_surface(ft, f, partials, nvars, deg):
    """Scan P^(nvars-1)(GF(q)) in canonical order.

    Returns (count of points with f=0, flat list of points where f and all
    partials vanish).  partials may be None to count only.
    """
    q = ft.q
    count = 0
    sing = []
    pt = [0] * nvars
    for lead in range(nvars):
        for i in range(lead):
            pt[i] = 0
        pt[lead] = 1
        nfree = nvars - lead - 1
        total = q ** nfree
        for counter in range(total):
            rem = counter
            for i in range(nvars - 1, lead, -1):
                pt[i] = rem % q
                rem //= q
            if form_eval(ft, f, nvars, deg, pt):
                continue
            count += 1
            if partials is not None:
                ok = True
                for pc in partials:
                    if form_eval(ft, pc, nvars, deg - 1, pt):
                        ok = False
                        break
                if ok:
                    sing.extend(pt)
    return count, sing
