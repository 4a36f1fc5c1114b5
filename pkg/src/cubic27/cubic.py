"""Cubic forms in four variables: the surface catalog, evaluation and
partials, singular-locus search, collineation action, diagonal weights and
plane-section classification.
"""
from dataclasses import dataclass

from . import kernels
from ._formtables import MIDX, MONS
from .errors import (FieldMismatch, NotDiagonal, PlaneInsideSurface,
                     SearchTooLarge, UnknownName)
from .gf import (FieldElement, Poly, embedding_table, factor_univariate,
                 make_field, poly_roots)
from .projlin import Collineation, ProjPoint

MON4 = MONS[(4, 3)]
MIDX4 = MIDX[(4, 3)]
MON3 = MONS[(3, 3)]
MIDX3 = MIDX[(3, 3)]
VARS = "xyzt"

SCAN_BUDGET_POINTS = 200_000
DEFAULT_DEPTH = 6


def _proj_count(q, nvars):
    return sum(q ** i for i in range(nvars))


def _lcm(a, b):
    g, x = a, b
    while x:
        g, x = x, g % x
    return a // g * b


class CubicForm:
    """Homogeneous cubic in (x, y, z, t) as 20 coefficients in a fixed order."""

    __slots__ = ("field", "codes")

    def __init__(self, field, codes):
        codes = tuple(codes)
        if len(codes) != len(MON4) or not any(codes):
            raise ValueError("a cubic form needs 20 coefficients, not all zero")
        self.field = field
        self.codes = codes

    @classmethod
    def from_terms(cls, field, terms):
        """terms: map exponent-tuple -> coefficient (int or FieldElement)."""
        codes = [0] * len(MON4)
        for mon, c in terms.items():
            code = c.code if isinstance(c, FieldElement) else c % field.p
            codes[MIDX4[mon]] = code
        return cls(field, codes)

    def __eq__(self, other):
        return (isinstance(other, CubicForm) and self.field is other.field
                and self.codes == other.codes)

    def __hash__(self):
        return hash((id(self.field), self.codes))

    def __repr__(self):
        return render_form(self)

    def coefficient(self, mon):
        return FieldElement(self.field, self.codes[MIDX4[mon]])

    def embed_to(self, ext):
        if ext is self.field:
            return self
        tab = embedding_table(self.field, ext)
        return CubicForm(ext, [tab[c] for c in self.codes])

    def normalized(self):
        """Scale so the first nonzero coefficient is 1; returns (form, scalar)."""
        lead = next(c for c in self.codes if c)
        if lead == 1:
            return self, FieldElement(self.field, 1)
        li = self.field.inv_c(lead)
        return (CubicForm(self.field, [self.field.mul_c(c, li) for c in self.codes]),
                FieldElement(self.field, lead))

    def partials(self):
        """The four partial derivatives as quadric coefficient lists."""
        f = self.field
        out = [[0] * len(MONS[(4, 2)]) for _ in range(4)]
        q_idx = MIDX[(4, 2)]
        for c, mon in zip(self.codes, MON4):
            if not c:
                continue
            for v in range(4):
                e = mon[v]
                if e:
                    m2 = list(mon)
                    m2[v] -= 1
                    j = q_idx[tuple(m2)]
                    out[v][j] = f.add_c(out[v][j], f.mul_c(c, e % f.p))
        return out

    def is_proportional_to(self, other):
        """The scalar lambda with self = lambda*other, or None."""
        if other.field is not self.field:
            raise FieldMismatch("forms over different fields")
        f = self.field
        lam = None
        for a, b in zip(self.codes, other.codes):
            if (a == 0) != (b == 0):
                return None
            if a:
                cur = f.mul_c(a, f.inv_c(b))
                if lam is None:
                    lam = cur
                elif lam != cur:
                    return None
        return FieldElement(f, lam)


def substitute(form, matrix):
    """The cubic f(Mx).  M is a Collineation or a flat/nested code matrix."""
    if isinstance(matrix, Collineation):
        if matrix.field is not form.field:
            raise FieldMismatch("form and matrix over different fields")
        flat = list(matrix.codes)
    elif matrix and isinstance(matrix[0], (list, tuple)):
        flat = [v.code if isinstance(v, FieldElement) else v % form.field.p
                for row in matrix for v in row]
    else:
        flat = [v.code if isinstance(v, FieldElement) else v for v in matrix]
    codes = kernels.form_map(form.field.tables(), list(form.codes), flat, 4, 4, 3)
    return CubicForm(form.field, codes)


def apply_collineation(form, g):
    """Push a form forward along a collineation: (f o g^-1 normalized, scalar).

    Applying g then h equals applying h*g (a right action on forms).
    """
    moved = substitute(form, g.inverse())
    return moved.normalized()


def eval_form(form, point):
    f = form.field
    if isinstance(point, ProjPoint):
        if point.field is not f:
            tab = embedding_table(point.field, f)
            point = ProjPoint.from_codes(f, [tab[c] for c in point.codes])
        codes = list(point.codes)
    else:
        codes = [v.code if isinstance(v, FieldElement) else v % f.p for v in point]
    return FieldElement(f, kernels.form_eval(f.tables(), list(form.codes), 4, 3, codes))


def eval_and_partials(form, point):
    """(f(P), (df/dx, df/dy, df/dz, df/dt)(P)) with exact embedding of P."""
    f = form.field
    if isinstance(point, ProjPoint) and point.field is not f:
        tab = embedding_table(point.field, f)
        point = ProjPoint.from_codes(f, [tab[c] for c in point.codes])
    value = eval_form(form, point)
    codes = list(point.codes) if isinstance(point, ProjPoint) else [
        v.code if isinstance(v, FieldElement) else v % f.p for v in point]
    parts = tuple(FieldElement(f, kernels.form_eval(f.tables(), pc, 4, 2, codes))
                  for pc in form.partials())
    return value, parts


# ---------------------------------------------------------------------------
# surface catalog

CATALOG_ALIASES = {
    "fermat": "fermat",
    "clebsch": "clebsch",
    "chain": "chain",
    "s_1_1": "chain",
    "cyclic": "cyclic",
    "s_1_2": "cyclic",
}

CATALOG_NAMES = ("fermat", "clebsch", "chain", "cyclic")


def catalog_surface(name, field):
    """Named surfaces: fermat, clebsch, chain (alias s_1_1), cyclic (alias s_1_2)."""
    key = CATALOG_ALIASES.get(str(name).lower())
    if key is None:
        raise UnknownName(f"unknown surface {name!r}")
    if key == "fermat":
        return CubicForm.from_terms(field, {
            (3, 0, 0, 0): 1, (0, 3, 0, 0): 1, (0, 0, 3, 0): 1, (0, 0, 0, 3): 1})
    if key == "chain":
        # t^3 + t z^2 - x y^2 + x^2 z
        return CubicForm.from_terms(field, {
            (0, 0, 0, 3): 1, (0, 0, 2, 1): 1, (1, 2, 0, 0): -1, (2, 0, 1, 0): 1})
    if key == "cyclic":
        # x^2 t + y^2 z + z^2 y + t^2 x
        return CubicForm.from_terms(field, {
            (2, 0, 0, 1): 1, (0, 2, 1, 0): 1, (0, 1, 2, 0): 1, (1, 0, 0, 2): 1})
    # clebsch: eliminate the fifth coordinate w = -(x+y+z+t) from the
    # degree-3 elementary symmetric equation; valid in every characteristic
    terms = {}
    vs = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]

    def bump(m, d):
        terms[m] = terms.get(m, 0) + d

    for i in range(4):
        for j in range(i + 1, 4):
            for k in range(j + 1, 4):
                bump(tuple(vs[i][a] + vs[j][a] + vs[k][a] for a in range(4)), 1)
    for i in range(4):
        for j in range(4):
            for k in range(j + 1, 4):
                bump(tuple(vs[i][a] + vs[j][a] + vs[k][a] for a in range(4)), -1)
    return CubicForm.from_terms(field, terms)


def render_form(form):
    f = form.field
    parts = []
    for c, mon in zip(form.codes, MON4):
        if not c:
            continue
        mono = "*".join(
            (v if e == 1 else f"{v}^{e}") for v, e in zip(VARS, mon) if e)
        cs = f.render_c(c)
        if cs == "1" and mono:
            parts.append(mono)
        elif "+" in cs:
            parts.append(f"({cs})*{mono}")
        else:
            parts.append(f"{cs}*{mono}")
    return " + ".join(parts)


def parse_form(text, field):
    """Parse the term syntax "x^2*t + y^2*z" or a catalog name."""
    key = CATALOG_ALIASES.get(text.strip().lower())
    if key is not None:
        return catalog_surface(key, field)
    codes = [0] * len(MON4)
    cleaned = text.replace(" ", "").replace("-", "+-")
    for term in cleaned.split("+"):
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        coef = field.one
        expo = [0, 0, 0, 0]
        for atom in term.split("*"):
            if not atom:
                continue
            if atom[0] in VARS:
                v, _, e = atom.partition("^")
                expo[VARS.index(v)] += int(e) if e else 1
            else:
                coef = coef * FieldElement(field, field.parse_c(atom.strip("()")))
        if sum(expo) != 3:
            raise ValueError(f"term {term!r} is not of degree 3")
        if neg:
            coef = -coef
        i = MIDX4[tuple(expo)]
        codes[i] = field.add_c(codes[i], coef.code)
    return CubicForm(field, codes)


# ---------------------------------------------------------------------------
# singular locus

@dataclass
class SingularityReport:
    surface: CubicForm
    nonreduced_or_everywhere_singular: bool
    points: list  # (extension degree, ProjPoint over GF(q^degree), orbit size)
    search_bound: int
    budget: int
    repeated_factor: object = None

    @property
    def is_singular(self):
        return self.nonreduced_or_everywhere_singular or bool(self.points)


def auto_depth(q, budget=SCAN_BUDGET_POINTS, cap=DEFAULT_DEPTH):
    """Largest depth whose cumulative projective scan fits the point budget."""
    total = 0
    depth = 0
    for d in range(1, cap + 1):
        total += _proj_count(q ** d, 4)
        if total > budget:
            break
        depth = d
    return max(depth, 1)


def _frobenius_orbit(field, codes, q_base):
    orbit = []
    cur = tuple(codes)
    while cur not in orbit:
        orbit.append(cur)
        cur = tuple(field.pow_c(c, q_base) for c in cur)
    return orbit


def singular_locus(form, depth=None, budget=SCAN_BUDGET_POINTS):
    """Exhaustive singular-point scan over GF(q^d) for d = 1..depth.

    With depth=None the bound is the largest d <= 6 fitting the point budget;
    an explicit depth whose scan exceeds the budget raises SearchTooLarge.
    The bound used is recorded in the report: it is a search cap, not a
    theorem about the field of definition of singular points.
    """
    base = form.field
    q = base.q
    if depth is None:
        depth = auto_depth(q, budget)
    else:
        if depth > 12:
            raise ValueError("depth capped at 12")
        cost = sum(_proj_count(q ** d, 4) for d in range(1, depth + 1))
        if cost > budget:
            raise SearchTooLarge(
                f"scanning P^3 over GF({q}^d) for d <= {depth} costs {cost} points "
                f"(budget {budget}); lower the depth or raise the budget")
    partials = form.partials()
    nonreduced = all(not any(pc) for pc in partials)
    points = []
    seen = set()
    for d in range(1, depth + 1):
        ext = make_field(base.p, base.k * d)
        lifted = form.embed_to(ext)
        _, sing = kernels.scan_surface(ext.tables(), list(lifted.codes),
                                       lifted.partials(), 4, 3)
        for i in range(0, len(sing), 4):
            codes = sing[i:i + 4]
            orbit = _frobenius_orbit(ext, codes, q)
            if len(orbit) != d:
                continue  # defined over a smaller field; reported there
            key = (d, min(orbit))
            if key in seen:
                continue
            seen.add(key)
            points.append((d, ProjPoint.from_codes(ext, min(orbit)), len(orbit)))
    repeated = None
    if points or nonreduced:
        repeated = _repeated_linear_factor(form)
        if repeated is not None:
            nonreduced = True
    return SingularityReport(form, nonreduced, points, depth, budget, repeated)


def _linear_forms(field):
    q = field.q
    for lead in range(4):
        for counter in range(q ** (3 - lead)):
            codes = [0] * 4
            codes[lead] = 1
            rem = counter
            for i in range(3, lead, -1):
                codes[i] = rem % q
                rem //= q
            yield codes


def _plane_basis(field, plane_codes):
    """Echelon basis of {sum plane[i] x_i = 0} as a flat 4x3 column matrix."""
    piv = next(i for i in range(4) if plane_codes[i])
    inv = field.inv_c(plane_codes[piv])
    basis = []
    for j in range(4):
        if j == piv:
            continue
        v = [0] * 4
        v[j] = 1
        v[piv] = field.neg_c(field.mul_c(plane_codes[j], inv))
        basis.append(v)
    flat = [0] * 12
    for col, v in enumerate(basis):
        for row in range(4):
            flat[row * 3 + col] = v[row]
    return flat


def restrict_to_plane(form, plane_codes):
    """The ternary cubic cut out on the plane, in its echelon basis."""
    flat = _plane_basis(form.field, plane_codes)
    return kernels.form_map(form.field.tables(), list(form.codes), flat, 4, 3, 3)


def _repeated_linear_factor(form, ext_cap=2, form_budget=6000):
    """A linear form l with l | f and l | every partial, over GF(q^e), e<=2.

    Such an l satisfies l^2 | f, certifying a nonreduced surface.  The search
    is exhaustive over normalized linear forms while the count fits the
    budget; larger fields fall back to the all-partials-zero criterion.
    """
    base = form.field
    for e in range(1, ext_cap + 1):
        if base.k * e > 12:
            break
        ext = make_field(base.p, base.k * e)
        if _proj_count(ext.q, 4) > form_budget:
            break
        lifted = form.embed_to(ext)
        parts = lifted.partials()
        for plane in _linear_forms(ext):
            rest = restrict_to_plane(lifted, plane)
            if any(rest):
                continue
            flat = _plane_basis(ext, plane)
            if all(not any(kernels.form_map(ext.tables(), pc, flat, 4, 3, 2))
                   for pc in parts):
                return (ext, tuple(plane))
    return None


def surface_point_count(form, depth=1):
    """[|S(GF(q^d))| for d = 1..depth]: an isomorphism invariant."""
    base = form.field
    out = []
    for d in range(1, depth + 1):
        ext = make_field(base.p, base.k * d)
        lifted = form.embed_to(ext)
        count, _ = kernels.scan_surface(ext.tables(), list(lifted.codes), None, 4, 3)
        out.append(count)
    return out


# ---------------------------------------------------------------------------
# diagonal weights

def monomial_weights(g, field=None):
    """Partition of the 20 cubic monomials by the scalar a diagonal map applies.

    Accepts a diagonal Collineation (weights read from its normalized
    representative) or an explicit 4-entry diagonal, used verbatim.
    """
    if isinstance(g, (list, tuple)):
        entries = g
        if field is None:
            field = next(v.field for v in entries if isinstance(v, FieldElement))
        diag = [v.code if isinstance(v, FieldElement) else v % field.p
                for v in entries]
        if not all(diag):
            raise NotDiagonal("diagonal entries must be invertible")
    else:
        field = g.field
        for i in range(4):
            for j in range(4):
                if i != j and g.codes[i * 4 + j]:
                    raise NotDiagonal("monomial weights need a diagonal collineation")
        diag = [g.codes[i * 4 + i] for i in range(4)]
    groups = {}
    for mon in MON4:
        w = 1
        for v in range(4):
            for _ in range(mon[v]):
                w = field.mul_c(w, diag[v])
        groups.setdefault(w, []).append(mon)
    return {FieldElement(field, w): ms for w, ms in groups.items()}


# ---------------------------------------------------------------------------
# plane-section classification

SECTION_CLASSES = ("smooth", "nodal_irreducible", "cuspidal_irreducible",
                   "conic_plus_line", "three_lines", "line_with_double_line",
                   "triple_line", "other_reducible")


def _ternary_eval(field, codes, pt, deg=3):
    return kernels.form_eval(field.tables(), list(codes), 3, deg, list(pt))


def _restrict_line3(field, codes, A, B, deg=3):
    """Binary form coefficients of g(aA + bB), dense order a^deg .. b^deg."""
    flat = []
    for i in range(3):
        flat.extend([A[i], B[i]])
    return kernels.form_map(field.tables(), list(codes), flat, 3, 2, deg)


def _binary_form_roots(field, coeffs, deg):
    """Projective roots ((s, t) codes, field, multiplicity) of a binary form."""
    if not any(coeffs):
        return None
    asc = list(reversed(coeffs))
    poly = Poly.from_codes(field, asc)
    out = []
    if poly.degree > 0:
        for fct, mult in factor_univariate(poly):
            if fct.degree == 0:
                continue
            e = fct.degree
            ext = make_field(field.p, field.k * e)
            tab = embedding_table(field, ext)
            lifted = Poly.from_codes(ext, [tab[c] for c in fct.coeffs])
            for r in poly_roots(lifted):
                out.append(((r.code, 1), ext, mult))
    inf_mult = 0
    for c in coeffs:
        if c:
            break
        inf_mult += 1
    if inf_mult:
        out.append(((1, 0), field, inf_mult))
    return out


def _rank3(field, rows):
    M = [list(r) for r in rows]
    n = len(M)
    rank = 0
    for c in range(3):
        piv = next((i for i in range(rank, n) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = field.inv_c(M[rank][c])
        M[rank] = [field.mul_c(x, inv) for x in M[rank]]
        for i in range(n):
            if i != rank and M[i][c]:
                f = field.neg_c(M[i][c])
                M[i] = [field.add_c(x, field.mul_c(f, y)) for x, y in zip(M[i], M[rank])]
        rank += 1
    return rank


def _complete_basis3(field, P):
    """Two standard points completing P to a basis of the plane."""
    out = []
    for cand in ([1, 0, 0], [0, 1, 0], [0, 0, 1]):
        if _rank3(field, [list(P)] + out + [cand]) == 2 + len(out):
            out.append(cand)
        if len(out) == 2:
            return out
    raise AssertionError("could not complete the basis")


def _pencil_coefficients(field, codes, P, C1, C2):
    """For lines span(P, C1 + s C2): the three vanishing conditions as
    polynomials in s (each an ascending code list)."""
    flat = []
    for i in range(3):
        flat.extend([P[i], C1[i], C2[i]])
    expanded = kernels.form_map(field.tables(), list(codes), flat, 3, 3, 3)
    out = []
    for k in (1, 2, 3):
        poly_s = [0] * (k + 1)
        for ci, mon in zip(expanded, MON3):
            if ci and mon[0] == 3 - k:
                poly_s[mon[2]] = ci
        out.append(poly_s)
    return out


def _lines_through_point(field, codes, P):
    """Line components of {g=0} through P, as (ext_field, second point)."""
    C1, C2 = _complete_basis3(field, P)
    lines = []
    if not any(_restrict_line3(field, codes, P, C2)):
        lines.append((field, tuple(C2)))
    s_polys = [Poly.from_codes(field, cs)
               for cs in _pencil_coefficients(field, codes, P, C1, C2)]
    g = s_polys[0]
    for sp in s_polys[1:]:
        g = g.gcd(sp) if not g.is_zero else sp
    if g.is_zero:
        # tiny-field cone: test each pencil direction directly
        for s in range(field.q):
            Q = [field.add_c(C1[i], field.mul_c(s, C2[i])) for i in range(3)]
            if not any(_restrict_line3(field, codes, P, Q)):
                lines.append((field, tuple(Q)))
        return lines
    if g.degree > 0:
        for fct, _ in factor_univariate(g):
            if fct.degree == 0:
                continue
            e = fct.degree
            ext = make_field(field.p, field.k * e)
            tab = embedding_table(field, ext)
            lifted = Poly.from_codes(ext, [tab[c] for c in fct.coeffs])
            for r in poly_roots(lifted):
                Q = [ext.add_c(tab[C1[i]], ext.mul_c(r.code, tab[C2[i]]))
                     for i in range(3)]
                lines.append((ext, tuple(Q)))
    return lines


def _line_key(field, P, Q):
    """Canonical echelon key of the line span(P, Q) in the given field."""
    M = [list(P), list(Q)]
    if _rank3(field, M) < 2:
        return None
    rank = 0
    for c in range(3):
        piv = next((i for i in range(rank, 2) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = field.inv_c(M[rank][c])
        M[rank] = [field.mul_c(x, inv) for x in M[rank]]
        for i in range(2):
            if i != rank and M[i][c]:
                f = field.neg_c(M[i][c])
                M[i] = [field.add_c(x, field.mul_c(f, y)) for x, y in zip(M[i], M[rank])]
        rank += 1
        if rank == 2:
            break
    return (tuple(M[0]), tuple(M[1]))


def _divide_linear3(field, codes, line_pts, deg):
    """Quotient of a ternary form by the linear form vanishing on the line."""
    A, B = line_pts
    for cand in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        flat = [0] * 9
        cols = [list(A), list(B), list(cand)]
        for col, v in enumerate(cols):
            for row in range(3):
                flat[row * 3 + col] = v[row]
        if kernels.mat_inv(field.tables(), flat, 3) is not None:
            break
    else:
        raise AssertionError("degenerate line")
    transformed = kernels.form_map(field.tables(), list(codes), flat, 3, 3, deg)
    mons = MONS[(3, deg)]
    down = MONS[(3, deg - 1)]
    didx = {m: i for i, m in enumerate(down)}
    quot = [0] * len(down)
    for c, mon in zip(transformed, mons):
        if mon[2] == 0:
            if c:
                return None
            continue
        quot[didx[(mon[0], mon[1], mon[2] - 1)]] = c
    inv = kernels.mat_inv(field.tables(), flat, 3)
    return kernels.form_map(field.tables(), quot, inv, 3, 3, deg - 1)


def _polar_flat(field, codes):
    idx = MIDX[(3, 2)]
    flat = [0] * 9
    for i in range(3):
        for j in range(3):
            if i == j:
                m = tuple(2 if v == i else 0 for v in range(3))
                flat[i * 3 + j] = field.mul_c(2 % field.p, codes[idx[m]])
            else:
                m = tuple(1 if v in (i, j) else 0 for v in range(3))
                flat[i * 3 + j] = codes[idx[m]]
    return flat


def _nullspace3(field, flat):
    M = [list(flat[i * 3:(i + 1) * 3]) for i in range(3)]
    pivots = []
    r = 0
    for c in range(3):
        piv = next((i for i in range(r, 3) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = field.inv_c(M[r][c])
        M[r] = [field.mul_c(x, inv) for x in M[r]]
        for i in range(3):
            if i != r and M[i][c]:
                f = field.neg_c(M[i][c])
                M[i] = [field.add_c(x, field.mul_c(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append((c, r))
        r += 1
    free = [c for c in range(3) if c not in [p for p, _ in pivots]]
    out = []
    for fc in free:
        v = [0] * 3
        v[fc] = 1
        for pc, pr in pivots:
            v[pc] = field.neg_c(M[pr][fc])
        out.append(v)
    return out


def conic_is_degenerate(field, codes):
    """Char-agnostic test: the conic is singular iff the radical of its polar
    bilinear form contains a point of the conic (the 3x3 polar matrix is
    alternating in characteristic 2, so its kernel is always nontrivial)."""
    null = _nullspace3(field, _polar_flat(field, codes))
    if not null:
        return False
    return any(_ternary_eval(field, codes, v, deg=2) == 0 for v in null)


def _ternary_singular_points(field, g):
    """Rational singular points of the cubic curve {g=0}."""
    idxq = MIDX[(3, 2)]
    parts = [[0] * len(idxq) for _ in range(3)]
    for c, mon in zip(g, MON3):
        if not c:
            continue
        for v in range(3):
            if mon[v]:
                m2 = list(mon)
                m2[v] -= 1
                j = idxq[tuple(m2)]
                parts[v][j] = field.add_c(parts[v][j], field.mul_c(c, mon[v] % field.p))
    out = []
    q = field.q
    for lead in range(3):
        for counter in range(q ** (2 - lead)):
            pt = [0] * 3
            pt[lead] = 1
            rem = counter
            for i in range(2, lead, -1):
                pt[i] = rem % q
                rem //= q
            if _ternary_eval(field, g, pt) != 0:
                continue
            if all(_ternary_eval(field, pc, pt, deg=2) == 0 for pc in parts):
                out.append(pt)
    return out


def _tangent_cone_root_count(field, g, P):
    """Distinct projective roots of the quadratic tangent cone at P."""
    C1, C2 = _complete_basis3(field, P)
    flat = []
    for i in range(3):
        flat.extend([P[i], C1[i], C2[i]])
    expanded = kernels.form_map(field.tables(), list(g), flat, 3, 3, 3)
    quad = [0, 0, 0]
    for c, mon in zip(expanded, MON3):
        if c and mon[0] == 1:
            quad[mon[2]] = c
    roots = _binary_form_roots(field, quad, 2)
    if roots is None:
        raise AssertionError("zero tangent cone on an irreducible cubic")
    distinct = set()
    for (s, t), ext, _ in roots:
        key = (ext.k, s, t) if t else ("inf",)
        distinct.add(key)
    return len(distinct)


def classify_plane_section(form, plane):
    """Geometric class of the plane section of the surface.

    plane: 4 coefficients of a nonzero linear form.  Line components are
    found over their splitting extensions (degree <= 6); irreducible sections
    are separated by the tangent cone at the unique singular point.
    """
    field = form.field
    plane_codes = [v.code if isinstance(v, FieldElement) else v % field.p
                   for v in plane]
    if not any(plane_codes):
        raise ValueError("plane must be a nonzero linear form")
    g = restrict_to_plane(form, plane_codes)
    if not any(g):
        raise PlaneInsideSurface("the plane lies inside the surface")
    return classify_ternary_cubic(field, g)


def classify_ternary_cubic(field, g):
    # every line component meets a probe line in a point of the curve, so the
    # pencil analysis at the probe intersection points finds all of them
    probes = (((1, 0, 0), (0, 1, 0)), ((1, 0, 0), (0, 0, 1)), ((0, 1, 0), (0, 0, 1)),
              ((1, 1, 0), (0, 0, 1)), ((1, 0, 1), (0, 1, 0)), ((0, 1, 1), (1, 0, 0)),
              ((1, 1, 1), (1, 0, 1)))
    probe = None
    for A, B in probes:
        r = _restrict_line3(field, list(g), list(A), list(B))
        if any(r):
            probe = (A, B, r)
            break
    assert probe is not None, "every probe line lies in the cubic"
    A, B, r = probe
    raw_lines = []
    for (s, t), ext, _ in _binary_form_roots(field, r, 3):
        tab = embedding_table(field, ext)
        P = [ext.add_c(ext.mul_c(s, tab[A[i]]), ext.mul_c(t, tab[B[i]]))
             for i in range(3)]
        g_ext = [tab[c] for c in g]
        for lext, Q in _lines_through_point(ext, g_ext, P):
            t2 = embedding_table(ext, lext)
            raw_lines.append((lext, tuple(t2[c] for c in P), Q))
    if not raw_lines:
        sing = _ternary_singular_points(field, g)
        if not sing:
            return "smooth"
        n = _tangent_cone_root_count(field, g, sing[0])
        return "nodal_irreducible" if n == 2 else "cuspidal_irreducible"
    # lift everything into the join field and deduplicate
    top_k = field.k
    for lext, _, _ in raw_lines:
        top_k = _lcm(top_k, lext.k)
    top = make_field(field.p, top_k)
    lines = {}
    for lext, P, Q in raw_lines:
        t2 = embedding_table(lext, top)
        Pt = tuple(t2[c] for c in P)
        Qt = tuple(t2[c] for c in Q)
        key = _line_key(top, Pt, Qt)
        if key is not None:
            lines.setdefault(key, (Pt, Qt))
    tab = embedding_table(field, top)
    rem = [tab[c] for c in g]
    deg = 3
    mults = []
    for Pt, Qt in lines.values():
        m = 0
        while deg >= 1:
            nxt = _divide_linear3(top, rem, (Pt, Qt), deg)
            if nxt is None:
                break
            rem = nxt
            deg -= 1
            m += 1
        mults.append(m)
    total = sum(mults)
    if total == 3:
        ms = sorted(mults, reverse=True)
        if ms[0] == 3:
            return "triple_line"
        if ms[0] == 2:
            return "line_with_double_line"
        return "three_lines"
    if total == 1:
        # the residual conic has no line components over <= degree-6
        # extensions, so it is geometrically irreducible iff nondegenerate
        if conic_is_degenerate(top, rem):
            return "other_reducible"
        return "conic_plus_line"
    return "other_reducible"
