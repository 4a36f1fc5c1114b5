"""Projective linear algebra over exact fields: points and collineations of
P^3, frame reconstruction, rational canonical forms, and descent of
projective conjugacy for order-3 elements.
"""
from . import kernels
from .errors import DegenerateFrame, DivisionByZero, FieldMismatch, WrongOrder
from .gf import FieldElement, Poly, factor_univariate


def _codes_of(field, values):
    out = []
    for v in values:
        if isinstance(v, FieldElement):
            if v.field is not field:
                raise FieldMismatch("mixed fields")
            out.append(v.code)
        else:
            out.append(v % field.p)
    return out


class ProjPoint:
    """Point of P^3, normalized so the first nonzero coordinate is 1."""

    __slots__ = ("field", "codes")

    def __init__(self, field, coords):
        codes = _codes_of(field, coords)
        if len(codes) != 4 or not any(codes):
            raise ValueError("a projective point needs 4 coordinates, not all zero")
        lead = next(c for c in codes if c)
        if lead != 1:
            li = field.inv_c(lead)
            codes = [field.mul_c(c, li) for c in codes]
        self.field = field
        self.codes = tuple(codes)

    @classmethod
    def from_codes(cls, field, codes):
        return cls(field, [FieldElement(field, c) for c in codes])

    def __eq__(self, other):
        return (isinstance(other, ProjPoint) and self.field is other.field
                and self.codes == other.codes)

    def __hash__(self):
        return hash((id(self.field), self.codes))

    def __repr__(self):
        return "[" + ":".join(self.field.render_c(c) for c in self.codes) + "]"

    @property
    def coords(self):
        return tuple(FieldElement(self.field, c) for c in self.codes)


class Collineation:
    """Element of PGL4: invertible 4x4 matrix, first nonzero entry scaled to 1."""

    __slots__ = ("field", "codes")

    def __init__(self, field, rows):
        if isinstance(rows[0], (list, tuple)):
            flat = [x for row in rows for x in row]
        else:
            flat = list(rows)
        codes = _codes_of(field, flat)
        if len(codes) != 16:
            raise ValueError("a collineation is a 4x4 matrix")
        lead = next((c for c in codes if c), 0)
        if lead == 0:
            raise ValueError("zero matrix")
        if lead != 1:
            li = field.inv_c(lead)
            codes = [field.mul_c(c, li) for c in codes]
        if kernels.mat_inv(field.tables(), codes, 4) is None:
            raise ValueError("singular matrix is not a collineation")
        self.field = field
        self.codes = tuple(codes)

    @classmethod
    def from_codes(cls, field, codes):
        return cls(field, [FieldElement(field, c) for c in codes])

    def __eq__(self, other):
        return (isinstance(other, Collineation) and self.field is other.field
                and self.codes == other.codes)

    def __hash__(self):
        return hash((id(self.field), self.codes))

    def __repr__(self):
        f = self.field
        rows = [" ".join(f.render_c(self.codes[i * 4 + j]) for j in range(4))
                for i in range(4)]
        return "[" + "; ".join(rows) + "]"

    def rows(self):
        return [[FieldElement(self.field, self.codes[i * 4 + j]) for j in range(4)]
                for i in range(4)]

    def compose(self, other):
        """self after other: (self*other)(x) = self(other(x))."""
        if other.field is not self.field:
            raise FieldMismatch("mixed fields")
        prod = kernels.mat_mul(self.field.tables(), list(self.codes),
                               list(other.codes), 4)
        return Collineation.from_codes(self.field, prod)

    def __mul__(self, other):
        return self.compose(other)

    def inverse(self):
        inv = kernels.mat_inv(self.field.tables(), list(self.codes), 4)
        return Collineation.from_codes(self.field, inv)

    def order(self, cap=200):
        ident = identity(self.field)
        g = self
        for n in range(1, cap + 1):
            if g == ident:
                return n
            g = g * self
        raise ValueError(f"order exceeds {cap}")

    @classmethod
    def diagonal(cls, field, entries):
        codes = _codes_of(field, entries)
        rows = [[0] * 4 for _ in range(4)]
        for i, c in enumerate(codes):
            rows[i][i] = FieldElement(field, c)
        return cls(field, rows)

    @classmethod
    def coordinate_permutation(cls, field, perm):
        """Collineation sending the point e_i to e_perm[i]."""
        rows = [[0] * 4 for _ in range(4)]
        for i in range(4):
            rows[perm[i]][i] = 1
        return cls(field, rows)


def identity(field):
    return Collineation(field, [[1 if i == j else 0 for j in range(4)] for i in range(4)])


def act_on_point(g, x):
    """Image of a point under a collineation, normalized."""
    if g.field is not x.field:
        raise FieldMismatch("collineation and point over different fields")
    img = kernels.mat_vec(g.field.tables(), list(g.codes), list(x.codes), 4)
    return ProjPoint.from_codes(g.field, img)


def frame_solve(src, dst):
    """The unique collineation with src[i] -> dst[i] for projective frames.

    Raises DegenerateFrame when the five source points are not a frame;
    returns None when no collineation maps src to dst (dst degenerate).
    """
    if len(src) != 5 or len(dst) != 5:
        raise ValueError("frames consist of 5 points")
    field = src[0].field
    ft = field.tables()

    def standardize(points, strict):
        # columns = first four points; solve for weights putting the fifth at [1:1:1:1]
        A = [0] * 16
        for j in range(4):
            for i in range(4):
                A[i * 4 + j] = points[j].codes[i]
        w = kernels.mat_solve(ft, A, list(points[4].codes), 4)
        if w is None or not all(w):
            if strict:
                raise DegenerateFrame("four of the five points are dependent")
            return None
        scaled = list(A)
        for j in range(4):
            for i in range(4):
                scaled[i * 4 + j] = field.mul_c(scaled[i * 4 + j], w[j])
        return scaled

    A_src = standardize(src, strict=True)
    A_dst = standardize(dst, strict=False)
    if A_dst is None:
        return None
    inv_src = kernels.mat_inv(ft, A_src, 4)
    return Collineation.from_codes(field, kernels.mat_mul(ft, A_dst, inv_src, 4))


# ---------------------------------------------------------------------------
# rational canonical form

class RationalCanonicalForm:
    """Elementary-divisor data: ordered ((irreducible coeffs), exponent) blocks."""

    __slots__ = ("field", "blocks")

    def __init__(self, field, blocks):
        self.field = field
        self.blocks = tuple(sorted(
            blocks, key=lambda bm: (len(bm[0]) - 1, bm[0], bm[1])))

    def __eq__(self, other):
        return (isinstance(other, RationalCanonicalForm)
                and self.field is other.field and self.blocks == other.blocks)

    def __hash__(self):
        return hash((id(self.field), self.blocks))

    def __repr__(self):
        parts = [f"({Poly.from_codes(self.field, cs)})^{m}" for cs, m in self.blocks]
        return " + ".join(parts)


def _poly_matrix_smith_invariants(field, entries, n):
    """Invariant factors of an n x n matrix over F[t] (list of Poly entries)."""
    M = [[entries[i][j] for j in range(n)] for i in range(n)]
    zero = Poly(field, [0])
    invariants = []
    for top in range(n):
        while True:
            # find minimal-degree nonzero entry in the remaining block
            best = None
            for i in range(top, n):
                for j in range(top, n):
                    e = M[i][j]
                    if not e.is_zero and (best is None or e.degree < best[0]):
                        best = (e.degree, i, j)
            if best is None:
                invariants.append(zero)
                break
            _, bi, bj = best
            M[top], M[bi] = M[bi], M[top]
            for row in M:
                row[top], row[bj] = row[bj], row[top]
            piv = M[top][top]
            dirty = False
            for i in range(top + 1, n):
                q, r = M[i][top].divmod(piv)
                if not q.is_zero:
                    for j in range(top, n):
                        M[i][j] = M[i][j] - q * M[top][j]
                if not r.is_zero:
                    dirty = True
            for j in range(top + 1, n):
                q, r = M[top][j].divmod(piv)
                if not q.is_zero:
                    for i in range(top, n):
                        M[i][j] = M[i][j] - q * M[i][top]
                if not r.is_zero:
                    dirty = True
            if dirty:
                continue
            # pivot must divide every remaining entry for true invariant factors
            fixup = False
            for i in range(top + 1, n):
                for j in range(top + 1, n):
                    if not (M[i][j] % piv).is_zero:
                        for jj in range(top, n):
                            M[top][jj] = M[top][jj] + M[i][jj]
                        fixup = True
                        break
                if fixup:
                    break
            if fixup:
                continue
            invariants.append(piv.monic())
            break
    return invariants


def rcf(matrix, field=None):
    """Rational canonical form as elementary divisors; complete conjugacy invariant."""
    rows = matrix.rows() if isinstance(matrix, Collineation) else matrix
    n = len(rows)
    if field is None:
        probe = rows[0][0]
        field = probe.field if isinstance(probe, FieldElement) else None
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            v = rows[i][j]
            code = v.code if isinstance(v, FieldElement) else v % field.p
            const = Poly.from_codes(field, [field.neg_c(code)])
            if i == j:
                row.append(const + Poly(field, [0, 1]))
            else:
                row.append(const)
        entries.append(row)
    invariants = _poly_matrix_smith_invariants(field, entries, n)
    blocks = []
    for inv in invariants:
        if inv.is_zero or inv.degree <= 0:
            continue
        for fct, mult in factor_univariate(inv):
            blocks.append((fct.coeffs, mult))
    return RationalCanonicalForm(field, blocks)


# ---------------------------------------------------------------------------
# projective conjugacy of order-3 elements (scalar descent)

def _matrix_order_pgl(g, cap=12):
    ident = identity(g.field)
    h = g
    for n in range(1, cap + 1):
        if h == ident:
            return n
        h = h * g
    return None


def _scale_matrix(field, codes, lam):
    return [field.mul_c(c, lam) for c in codes]


def _det4(field, codes):
    # product of elimination pivots, sign handled by row swaps
    M = [list(codes[i * 4:(i + 1) * 4]) for i in range(4)]
    det = 1
    for col in range(4):
        piv = next((r for r in range(col, 4) if M[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = field.neg_c(det)
        det = field.mul_c(det, M[col][col])
        inv = field.inv_c(M[col][col])
        for r in range(col + 1, 4):
            if M[r][col]:
                f = field.mul_c(M[r][col], inv)
                for c in range(col, 4):
                    M[r][c] = field.sub_c(M[r][c], field.mul_c(f, M[col][c]))
    return det


def _cyclic_chunks(field, mat_codes, poly):
    """Basis of ker(poly(A)) grouped into cyclic chains of length deg(poly)."""
    ft = field.tables()
    n = 4
    # poly(A) as a matrix
    acc = [0] * 16
    power = [1 if i % 5 == 0 else 0 for i in range(16)]  # identity
    for c in poly.coeffs:
        if c:
            acc = [field.add_c(a, field.mul_c(c, x)) for a, x in zip(acc, power)]
        power = kernels.mat_mul(ft, power, mat_codes, 4)
    # nullspace by column reduction of acc
    M = [list(acc[i * 4:(i + 1) * 4]) for i in range(n)]
    pivots = []
    col_of_pivot = {}
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = field.inv_c(M[r][c])
        M[r] = [field.mul_c(x, inv) for x in M[r]]
        for i in range(n):
            if i != r and M[i][c]:
                f = field.neg_c(M[i][c])
                M[i] = [field.add_c(x, field.mul_c(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        col_of_pivot[c] = r
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for pc in pivots:
            v[pc] = field.neg_c(M[col_of_pivot[pc]][fc])
        basis.append(v)
    # greedy cyclic chains v, Av, ..., A^(d-1)v
    d = poly.degree
    chains = []
    span_rows = []

    def in_span(vec):
        vv = list(vec)
        for row in span_rows:
            lead = next((i for i in range(n) if row[i]), None)
            if lead is not None and vv[lead]:
                f = field.mul_c(vv[lead], field.inv_c(row[lead]))
                vv = [field.sub_c(a, field.mul_c(f, b)) for a, b in zip(vv, row)]
        if any(vv):
            span_rows.append(vv)
            return False
        return True

    for v in basis:
        if in_span(v):
            continue
        chain = [v]
        cur = v
        for _ in range(d - 1):
            cur = kernels.mat_vec(ft, mat_codes, cur, 4)
            in_span(cur)
            chain.append(cur)
        chains.append(chain)
    return chains


def pgl_conjugate_order3(a, b):
    """Conjugating collineation C with C a C^-1 = b in PGL4, or None.

    Both inputs must have order 3; characteristic must differ from 3.  The
    forced scalar between matrix lifts is computed exactly from the cubes and
    determinants, and the witness stays over the ground field.
    """
    field = a.field
    if field.p == 3:
        raise WrongOrder("characteristic 3 excluded for order-3 conjugacy descent")
    if _matrix_order_pgl(a) != 3:
        raise WrongOrder("first argument is not of order 3 in PGL4")
    if _matrix_order_pgl(b) != 3:
        raise WrongOrder("second argument is not of order 3 in PGL4")
    ft = field.tables()
    A = list(a.codes)
    B = list(b.codes)
    A3 = kernels.mat_mul(ft, kernels.mat_mul(ft, A, A, 4), A, 4)
    B3 = kernels.mat_mul(ft, kernels.mat_mul(ft, B, B, 4), B, 4)
    s = A3[0]  # A^3 = s*I
    t = B3[0]
    detA, detB = _det4(field, A), _det4(field, B)
    # lambda = lambda^4 / lambda^3 = (t detA) / (s detB)
    lam = field.mul_c(field.mul_c(t, detA), field.inv_c(field.mul_c(s, detB)))
    Bl = _scale_matrix(field, B, lam)
    # conjugate in GL iff the elementary divisors agree
    fe = FieldElement
    rows_A = [[fe(field, A[i * 4 + j]) for j in range(4)] for i in range(4)]
    rows_B = [[fe(field, Bl[i * 4 + j]) for j in range(4)] for i in range(4)]
    if rcf(rows_A, field) != rcf(rows_B, field):
        return None
    # both are semisimple (t^3 - s is squarefree away from char 3): build the
    # change of basis from matching primary kernels
    char_factors = [f for f, _ in factor_univariate(_charpoly(field, A))]
    cols_A, cols_B = [], []
    for fct in char_factors:
        for chain in _cyclic_chunks(field, A, fct):
            cols_A.extend(chain)
        for chain in _cyclic_chunks(field, Bl, fct):
            cols_B.extend(chain)
    P_A = [0] * 16
    P_B = [0] * 16
    for j, col in enumerate(cols_A):
        for i in range(4):
            P_A[i * 4 + j] = col[i]
    for j, col in enumerate(cols_B):
        for i in range(4):
            P_B[i * 4 + j] = col[i]
    C = kernels.mat_mul(ft, P_B, kernels.mat_inv(ft, P_A, 4), 4)
    witness = Collineation.from_codes(field, C)
    # verify exactly
    lhs = witness.compose(a).compose(witness.inverse())
    if lhs != Collineation.from_codes(field, Bl):
        return None
    return witness


def _charpoly(field, codes):
    """det(tI - A) over the field, via the Smith pivot product."""
    entries = []
    for i in range(4):
        row = []
        for j in range(4):
            const = Poly.from_codes(field, [field.neg_c(codes[i * 4 + j])])
            row.append(const + Poly(field, [0, 1]) if i == j else const)
        entries.append(row)
    invs = _poly_matrix_smith_invariants(field, entries, 4)
    out = Poly(field, [1])
    for f in invs:
        out = out * f
    return out.monic()
