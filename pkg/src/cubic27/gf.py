"""Exact arithmetic in GF(p^k): canonical moduli, tower embeddings, Frobenius,
roots of unity, and univariate root finding.

Elements are stored as integer codes: the base-p digits of the code are the
coefficients of the residue polynomial, lowest degree first.  Code order is
therefore the canonical element order (coefficients compared low-degree
first) used for every "smallest" tie-break in the toolkit.
"""
from functools import lru_cache
from itertools import product

from . import kernels
from .errors import (CharacteristicDivides, DegreeOutOfRange, DivisionByZero,
                     FieldMismatch, NonPrime, NotASubfield, ZeroPolynomial)

TABLE_LIMIT = 1 << 16
MAX_DEGREE = 12
MAX_ORDER = 1 << 40


def is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin, valid far beyond 2^40
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over the prime field (coefficient tuples, low degree first)

def _pmod_divrem(num, den, p):
    num = list(num)
    dd = len(den) - 1
    while len(den) > 1 and den[-1] == 0:
        den = den[:-1]
        dd -= 1
    inv_lead = pow(den[-1], p - 2, p)
    quot = [0] * max(1, len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] * inv_lead % p
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _prime_poly_irreducible(mod, p):
    k = len(mod) - 1
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for cs in product(range(p), repeat=d):
            _, rem = _pmod_divrem(mod, list(cs) + [1], p)
            if rem == [0]:
                return False
    return True


@lru_cache(maxsize=None)
def canonical_modulus(p, k):
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    if k == 1:
        return (0, 1)
    for cs in product(range(p), repeat=k):
        mod = tuple(cs) + (1,)
        if _prime_poly_irreducible(mod, p):
            return mod
    raise AssertionError("no irreducible polynomial found")


class FieldTables:
    """Discrete-log tables: exp, log and Zech logarithms for GF(q), q <= 2^16."""

    __slots__ = ("p", "q", "exp", "log", "zech", "nlog", "_np")

    def __init__(self, field):
        p, q = field.p, field.q
        self.p, self.q = p, q
        gen = field._find_generator()
        exp = [0] * (2 * (q - 1))
        log = [-1] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            exp[i + q - 1] = x
            log[x] = i
            x = field._mul_poly(x, gen)
        assert x == 1, "generator order mismatch"
        zech = [-1] * (q - 1)
        for k in range(q - 1):
            s = field._add_poly(1, exp[k])
            zech[k] = -1 if s == 0 else log[s]
        self.exp, self.log, self.zech = exp, log, zech
        self.nlog = 0 if p == 2 else (q - 1) // 2
        self._np = None

    def numpy(self):
        if self._np is None:
            import numpy as np

            self._np = (np.asarray(self.exp, dtype=np.int64),
                        np.asarray(self.log, dtype=np.int64),
                        np.asarray(self.zech, dtype=np.int64))
        return self._np


_REGISTRY = {}


class FieldDescriptor:
    """Canonical descriptor of GF(p^k).  Interned: one object per (p, k)."""

    def __init__(self, p, k, _token=None):
        if _token is not _MAKE_TOKEN:
            raise TypeError("use make_field(p, k)")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = canonical_modulus(p, k)
        self._tables = None
        self._embeddings = {}
        self._frob_table = None
        self._generator = None

    # -- representation -----------------------------------------------------
    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (make_field, (self.p, self.k))

    # -- code-level polynomial arithmetic (always available) ----------------
    def decode(self, code):
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(code % p)
            code //= p
        return tuple(out)

    def encode(self, coeffs):
        e = 0
        for c in reversed(list(coeffs)):
            e = e * self.p + (c % self.p)
        return e

    def _add_poly(self, a, b):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _neg_poly(self, a):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def _mul_poly(self, a, b):
        p, k, mod = self.p, self.k, self.modulus
        ca, cb = self.decode(a), self.decode(b)
        res = [0] * (2 * k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    res[i + j] = (res[i + j] + x * y) % p
        for i in range(2 * k - 2, k - 1, -1):
            c = res[i]
            if c:
                res[i] = 0
                for j in range(k):
                    res[i - k + j] = (res[i - k + j] - c * mod[j]) % p
        return self.encode(res[:k])

    def _inv_poly(self, a):
        # extended Euclid in GF(p)[t]
        p = self.p
        r0, r1 = list(self.modulus), list(self.decode(a))
        while len(r1) > 1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [0], [1]
        while r1 != [0]:
            quot, rem = _pmod_divrem(r0, r1, p)
            snew = list(s0)
            ln = max(len(snew), len(quot) + len(s1) - 1)
            snew += [0] * (ln - len(snew))
            for i, qc in enumerate(quot):
                if qc:
                    for j, sc in enumerate(s1):
                        snew[i + j] = (snew[i + j] - qc * sc) % p
            r0, r1, s0, s1 = r1, rem, s1, snew
        lead_inv = pow(r0[-1], p - 2, p)
        inv = [c * lead_inv % p for c in s0]
        inv = (inv + [0] * self.k)[: self.k]
        return self.encode(inv)

    # -- table-backed fast ops ----------------------------------------------
    def tables(self):
        if self._tables is None and self.q <= TABLE_LIMIT:
            self._tables = FieldTables(self)
        return self._tables

    def _find_generator(self):
        if self._generator is not None:
            return self._generator
        n = self.q - 1
        fac = []
        m, d = n, 2
        while d * d <= m:
            if m % d == 0:
                fac.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            fac.append(m)
        for cand in range(1, self.q):
            if all(self._pow_poly(cand, n // f) != 1 for f in fac):
                self._generator = cand
                return cand
        raise AssertionError("no generator found")

    def _pow_poly(self, a, e):
        if a == 0:
            return 0 if e else 1
        r, base = 1, a
        e %= self.q - 1
        while e:
            if e & 1:
                r = self._mul_poly(r, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return r

    # -- public code ops (prefer tables) ------------------------------------
    def add_c(self, a, b):
        t = self.tables()
        if t is None:
            return self._add_poly(a, b)
        if a == 0:
            return b
        if b == 0:
            return a
        d = t.zech[(t.log[b] - t.log[a]) % (self.q - 1)]
        return 0 if d < 0 else t.exp[(t.log[a] + d) % (self.q - 1)]

    def neg_c(self, a):
        t = self.tables()
        if t is None or a == 0:
            return self._neg_poly(a) if t is None else 0
        return t.exp[(t.log[a] + t.nlog) % (self.q - 1)]

    def sub_c(self, a, b):
        return self.add_c(a, self.neg_c(b))

    def mul_c(self, a, b):
        t = self.tables()
        if t is None:
            return self._mul_poly(a, b)
        if a == 0 or b == 0:
            return 0
        return t.exp[t.log[a] + t.log[b]]

    def inv_c(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        t = self.tables()
        if t is None:
            return self._inv_poly(a)
        return t.exp[(self.q - 1 - t.log[a]) % (self.q - 1)]

    def pow_c(self, a, e):
        if a == 0:
            return 0 if e > 0 else 1
        t = self.tables()
        if t is None:
            return self._pow_poly(a, e)
        return t.exp[(t.log[a] * e) % (self.q - 1)]

    def frob_c(self, a):
        return self.pow_c(a, self.p)

    def frobenius_table(self):
        """x -> x^p as a code lookup list."""
        if self._frob_table is None:
            self._frob_table = [self.frob_c(a) for a in range(self.q)]
        return self._frob_table

    # -- elements ------------------------------------------------------------
    def element(self, value):
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldMismatch(f"{value!r} not in {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return FieldElement(self, self.encode(value))

    def from_code(self, code):
        return FieldElement(self, code)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def gen(self):
        """The residue class of t (rendered as "g")."""
        return FieldElement(self, self.p if self.k > 1 else 1)

    def elements(self):
        return (FieldElement(self, c) for c in range(self.q))

    # -- element text --------------------------------------------------------
    def render_c(self, code):
        if self.k == 1:
            return str(code)
        terms = []
        for e in range(self.k - 1, -1, -1):
            c = self.decode(code)[e]
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                gpow = "g" if e == 1 else f"g^{e}"
                terms.append(gpow if c == 1 else f"{c}*{gpow}")
        return "+".join(terms) if terms else "0"

    def parse_c(self, text):
        text = text.replace(" ", "").replace("-", "+-")
        if not text or text == "+":
            raise ValueError("empty element literal")
        coeffs = [0] * self.k
        for term in text.split("+"):
            if not term:
                continue
            sign = 1
            if term.startswith("-"):
                sign, term = -1, term[1:]
            coef, _, gpart = term.partition("g")
            if "g" in term:
                c = int(coef.rstrip("*")) if coef else 1
                e = int(gpart[1:]) if gpart.startswith("^") else 1
            else:
                c, e = int(term), 0
            if e >= self.k:
                raise ValueError(f"power g^{e} out of range for {self}")
            coeffs[e] = (coeffs[e] + sign * c) % self.p
        return self.encode(coeffs)


_MAKE_TOKEN = object()


def make_field(p, k=1):
    """Canonical descriptor of GF(p^k); idempotent."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if not 1 <= k <= MAX_DEGREE:
        raise DegreeOutOfRange(f"extension degree {k} outside [1, {MAX_DEGREE}]")
    if p ** k > MAX_ORDER:
        raise DegreeOutOfRange(f"field order {p}^{k} exceeds 2^40")
    key = (p, k)
    f = _REGISTRY.get(key)
    if f is None:
        f = FieldDescriptor(p, k, _token=_MAKE_TOKEN)
        _REGISTRY[key] = f
    return f


def parse_field(text):
    """Parse a field literal: "GF(9)", "GF(3^2)" or "GF(3,2)"."""
    t = text.strip()
    if not (t.upper().startswith("GF(") and t.endswith(")")):
        raise ValueError(f"bad field literal: {text!r}")
    body = t[3:-1]
    if "^" in body:
        p, k = (int(x) for x in body.split("^"))
    elif "," in body:
        p, k = (int(x) for x in body.split(","))
    else:
        q = int(body)
        p = None
        for d in range(2, q + 1):
            if q % d == 0:
                p = d
                break
        k = 0
        m = q
        while m > 1:
            if m % p:
                raise ValueError(f"{q} is not a prime power")
            m //= p
            k += 1
    return make_field(p, k)


class FieldElement:
    """Immutable element of a FieldDescriptor, stored as an integer code."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        return NotImplemented if c is NotImplemented else FieldElement(self.field, self.field.add_c(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        return NotImplemented if c is NotImplemented else FieldElement(self.field, self.field.sub_c(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        return NotImplemented if c is NotImplemented else FieldElement(self.field, self.field.sub_c(c, self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        return NotImplemented if c is NotImplemented else FieldElement(self.field, self.field.mul_c(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        if c == 0:
            raise DivisionByZero("division by zero")
        return FieldElement(self.field, self.field.mul_c(self.code, self.field.inv_c(c)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_c(self.code))

    def __pow__(self, e):
        if e < 0:
            return FieldElement(self.field, self.field.pow_c(self.field.inv_c(self.code), -e))
        return FieldElement(self.field, self.field.pow_c(self.code, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv_c(self.code))

    def frobenius(self):
        """x -> x^p, the generator of the absolute Galois action."""
        return FieldElement(self.field, self.field.frob_c(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p and self.field.decode(self.code)[1:] == (0,) * (self.field.k - 1)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __lt__(self, other):
        return self.code < self._coerce(other)

    def __bool__(self):
        return self.code != 0

    @property
    def coeffs(self):
        return self.field.decode(self.code)

    def __repr__(self):
        return self.field.render_c(self.code)


def field_arith(op, *operands):
    """Named dispatch kept for the command-line layer."""
    a = operands[0]
    f = a.field
    if op == "add":
        return a + operands[1]
    if op == "mul":
        return a * operands[1]
    if op == "inv":
        if a.code == 0:
            raise DivisionByZero("inv(0)")
        return a.inverse()
    if op == "pow":
        return a ** operands[1]
    if op == "frobenius":
        return a.frobenius()
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# tower embeddings

def embedding_table(src, dst):
    """Code table for the canonical embedding GF(p^d) -> GF(p^m), d | m.

    The image of the source generator is the lexicographically smallest root
    of the source modulus in the target field.
    """
    if src is dst:
        return list(range(src.q))
    key = (src.p, src.k)
    tab = dst._embeddings.get(key)
    if tab is not None:
        return tab
    if src.p != dst.p or dst.k % src.k:
        raise NotASubfield(f"{src} does not embed in {dst}")
    modulus = Poly(dst, [c % dst.p for c in src.modulus])
    roots = poly_roots(modulus)
    root = roots[0].code
    tab = [0] * src.q
    for code in range(src.q):
        acc = 0
        for c in reversed(src.decode(code)):
            acc = dst.add_c(dst.mul_c(acc, root), c % dst.p)
        tab[code] = acc
    dst._embeddings[key] = tab
    return tab


def embed(x, target):
    """Ring embedding of x into the target field along the canonical tower."""
    tab = embedding_table(x.field, target)
    return FieldElement(target, tab[x.code])


def relative_frobenius(x, d):
    """x -> x^(p^d): Frobenius relative to the subfield GF(p^d)."""
    return FieldElement(x.field, x.field.pow_c(x.code, x.field.p ** d))


def subfield_codes(src, dst):
    """The set of dst codes lying in the embedded copy of src."""
    return set(embedding_table(src, dst))


def nth_root_of_unity(field, n):
    """Smallest primitive n-th root of unity, or None when n does not divide q-1."""
    if n <= 0:
        raise ValueError("n must be positive")
    if n % field.p == 0:
        raise CharacteristicDivides(f"gcd({n}, {field.p}) != 1")
    if (field.q - 1) % n:
        return None
    g = field._find_generator()
    z0 = field.pow_c(g, (field.q - 1) // n)
    best = None
    x = 1
    from math import gcd

    for j in range(n):
        if j and gcd(j, n) == 1 and (best is None or x < best):
            best = x
        x = field.mul_c(x, z0)
    if n == 1:
        best = 1
    return FieldElement(field, best)


# ---------------------------------------------------------------------------
# univariate polynomials

class Poly:
    """Univariate polynomial over a field; coefficients ascending, normalized."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        codes = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field is not field:
                    raise FieldMismatch("mixed fields in polynomial")
                codes.append(c.code)
            else:
                codes.append(c % field.p)
        while len(codes) > 1 and codes[-1] == 0:
            codes.pop()
        self.field = field
        self.coeffs = tuple(codes)

    @classmethod
    def from_codes(cls, field, codes):
        return cls(field, [FieldElement(field, c) for c in codes])

    @classmethod
    def _raw(cls, field, codes):
        # internal: codes already reduced, skip the element round trip
        p = cls.__new__(cls)
        codes = list(codes)
        while len(codes) > 1 and codes[-1] == 0:
            codes.pop()
        p.field = field
        p.coeffs = tuple(codes)
        return p

    @property
    def degree(self):
        return -1 if self.is_zero else len(self.coeffs) - 1

    @property
    def is_zero(self):
        return self.coeffs == (0,)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self):
        f = self.field
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c and self.degree >= 0:
                continue
            cs = f.render_c(c)
            if e == 0:
                terms.append(cs)
            else:
                x = "t" if e == 1 else f"t^{e}"
                terms.append(x if cs == "1" else f"({cs})*{x}" if "+" in cs else f"{cs}*{x}")
        return " + ".join(terms) if terms else "0"

    def __add__(self, other):
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly._raw(f, [f.add_c(x, y) for x, y in zip(a, b)])

    def __sub__(self, other):
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly._raw(f, [f.sub_c(x, y) for x, y in zip(a, b)])

    def __mul__(self, other):
        f = self.field
        if self.is_zero or other.is_zero:
            return Poly._raw(f, [0])
        res = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        res[i + j] = f.add_c(res[i + j], f.mul_c(x, y))
        return Poly._raw(f, res)

    def scale(self, c):
        f = self.field
        code = c.code if isinstance(c, FieldElement) else c % f.p
        return Poly._raw(f, [f.mul_c(x, code) for x in self.coeffs])

    def divmod(self, other):
        f = self.field
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        num = list(self.coeffs)
        den = other.coeffs
        dd = len(den) - 1
        if len(num) - 1 < dd:
            return Poly._raw(f, [0]), self
        inv_lead = f.inv_c(den[-1])
        quot = [0] * (len(num) - dd)
        for i in range(len(num) - 1, dd - 1, -1):
            c = f.mul_c(num[i], inv_lead)
            if c:
                quot[i - dd] = c
                for j in range(dd + 1):
                    num[i - dd + j] = f.sub_c(num[i - dd + j], f.mul_c(c, den[j]))
        return Poly._raw(f, quot), Poly._raw(f, num)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if self.is_zero:
            return self
        inv = self.field.inv_c(self.coeffs[-1])
        return Poly._raw(self.field, [self.field.mul_c(c, inv) for c in self.coeffs])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def eval_c(self, x):
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add_c(f.mul_c(acc, x), c)
        return acc

    def derivative(self):
        f = self.field
        if len(self.coeffs) == 1:
            return Poly._raw(f, [0])
        return Poly._raw(f, [f.mul_c(c, e % f.p) for e, c in enumerate(self.coeffs)][1:])

    def pow_mod(self, e, mod):
        f = self.field
        result = Poly(f, [1])
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def shift_x(self, c):
        """p(x + c) for a code c."""
        f = self.field
        out = Poly._raw(f, [0])
        xc = Poly._raw(f, [c, 1])
        for coef in reversed(self.coeffs):
            out = out * xc + Poly._raw(f, [coef])
        return out


def _distinct_root_part(fpoly):
    """gcd(f, x^q - x): the product of (x - r) over distinct roots in the field."""
    field = fpoly.field
    x = Poly(field, [0, 1])
    xq = x.pow_mod(field.q, fpoly)
    return fpoly.gcd(xq - x)


def _split_linear(h, roots):
    """Deterministically split a product of distinct linear factors."""
    field = h.field
    if h.degree <= 0:
        return
    if h.degree == 1:
        c0, c1 = h.coeffs
        roots.append(field.mul_c(field.neg_c(c0), field.inv_c(c1)))
        return
    q = field.q
    if field.p == 2:
        m = field.k if field.q == 2 ** field.k else None
        # trace map splitting: Tr(cx) = sum (cx)^(2^i)
        for ccode in range(1, q):
            x = Poly.from_codes(field, [0, ccode])
            tr = Poly(field, [0])
            term = x
            for _ in range(m):
                tr = tr + term
                term = (term * term) % h
            d = h.gcd(tr)
            if 0 < d.degree < h.degree:
                _split_linear(d, roots)
                _split_linear(h // d, roots)
                return
    else:
        e = (q - 1) // 2
        for ccode in range(q):
            s = Poly.from_codes(field, [ccode, 1]).pow_mod(e, h) - Poly(field, [1])
            d = h.gcd(s)
            if 0 < d.degree < h.degree:
                _split_linear(d, roots)
                _split_linear(h // d, roots)
                return
    raise AssertionError("deterministic splitting failed")


def poly_roots(fpoly):
    """All roots in the coefficient field, with multiplicity, in code order."""
    if fpoly.is_zero:
        raise ZeroPolynomial("root finding on the zero polynomial")
    field = fpoly.field
    distinct = []
    if field.q <= TABLE_LIMIT:
        for code in range(field.q):
            if fpoly.eval_c(code) == 0:
                distinct.append(code)
    else:
        g = _distinct_root_part(fpoly)
        _split_linear(g, distinct)
        distinct.sort()
    out = []
    for r in distinct:
        lin = Poly.from_codes(field, [field.neg_c(r), 1])
        rem = fpoly
        while True:
            quot, rest = rem.divmod(lin)
            if not rest.is_zero:
                break
            out.append(FieldElement(field, r))
            rem = quot
    out.sort(key=lambda e: e.code)
    return out


def roots_in_extension(fpoly, ext_degree):
    """Roots of f over GF(q^e), as elements of the extension field."""
    base = fpoly.field
    ext = make_field(base.p, base.k * ext_degree)
    tab = embedding_table(base, ext)
    lifted = Poly(ext, [FieldElement(ext, tab[c]) for c in fpoly.coeffs])
    return poly_roots(lifted), ext


def factor_univariate(fpoly):
    """Irreducible factorization [(monic factor, multiplicity)], degree <= 6.

    Found by collecting root orbits in extension fields; canonical order by
    (degree, coefficient codes).
    """
    if fpoly.is_zero:
        raise ZeroPolynomial("factoring the zero polynomial")
    field = fpoly.field
    deg = fpoly.degree
    if deg > 6:
        raise ValueError("factor_univariate is limited to degree <= 6")
    factors = {}
    rem = fpoly.monic()
    for e in range(1, deg + 1):
        if rem.degree < e:
            break
        roots, ext = roots_in_extension(rem, e)
        tab = embedding_table(field, ext)
        seen = set()
        for r in roots:
            if r.code in seen:
                continue
            orbit = []
            x = r.code
            while x not in orbit:
                orbit.append(x)
                x = ext.pow_c(x, field.q)
            if len(orbit) != e:
                for x in orbit:
                    seen.add(x)
                continue
            for x in orbit:
                seen.add(x)
            # minimal polynomial over the base field: prod (t - x) over the orbit
            mp = Poly(ext, [1])
            for x in orbit:
                mp = mp * Poly.from_codes(ext, [ext.neg_c(x), 1])
            inv = {v: c for c, v in enumerate(tab)}
            base_poly = Poly(field, [FieldElement(field, inv[c]) for c in mp.coeffs])
            mult = 0
            while True:
                quot, rest = rem.divmod(base_poly)
                if not rest.is_zero:
                    break
                mult += 1
                rem = quot
            if mult:
                factors[base_poly.coeffs] = factors.get(base_poly.coeffs, 0) + mult
        if rem.degree == 0:
            break
    if rem.degree > 0:
        factors[rem.coeffs] = factors.get(rem.coeffs, 0) + 1
    out = [(Poly.from_codes(field, cs), m) for cs, m in factors.items()]
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out
