import random

import pytest

from cubic27 import gf
from cubic27.errors import (CharacteristicDivides, DegreeOutOfRange,
                            DivisionByZero, FieldMismatch, NonPrime,
                            NotASubfield, ZeroPolynomial)


def test_make_field_canonical():
    F2 = gf.make_field(2, 1)
    assert (F2.p, F2.k, F2.q) == (2, 1, 2)
    F4 = gf.make_field(2, 2)
    assert F4.modulus == (1, 1, 1)  # t^2+t+1, the only irreducible quadratic
    F9 = gf.make_field(3, 2)
    assert F9.modulus == (1, 0, 1)  # smallest monic irreducible quadratic over GF(3)
    assert gf.make_field(3, 2) is F9  # interned


def test_make_field_errors():
    with pytest.raises(NonPrime):
        gf.make_field(6)
    with pytest.raises(DegreeOutOfRange):
        gf.make_field(2, 13)
    with pytest.raises(DegreeOutOfRange):
        gf.make_field(2, 0)


def test_parse_field():
    assert gf.parse_field("GF(9)") is gf.make_field(3, 2)
    assert gf.parse_field("GF(3^2)") is gf.make_field(3, 2)
    assert gf.parse_field("GF(7)") is gf.make_field(7, 1)
    with pytest.raises(ValueError):
        gf.parse_field("GF(12)")


def test_gf4_arithmetic():
    F4 = gf.make_field(2, 2)
    w = gf.nth_root_of_unity(F4, 3)
    assert w * w == w + 1  # omega^2 = omega + 1
    assert w ** 3 == F4.one
    assert gf.field_arith("pow", w, 3) == F4.one


def test_gf9_multiplicative_order():
    F9 = gf.make_field(3, 2)
    for x in F9.elements():
        if x.code:
            assert x ** 8 == F9.one


@pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3), (5, 1), (7, 1), (3, 4)])
def test_field_axioms_exhaustive(p, k):
    # exhaustive associativity/distributivity and inverses for q <= 81
    F = gf.make_field(p, k)
    els = list(range(F.q))
    sample = els if F.q <= 9 else random.Random(0).sample(els, 9)
    for a in sample:
        for b in sample:
            for c in sample:
                assert F.mul_c(a, F.mul_c(b, c)) == F.mul_c(F.mul_c(a, b), c)
                assert F.add_c(a, F.add_c(b, c)) == F.add_c(F.add_c(a, b), c)
                assert F.mul_c(a, F.add_c(b, c)) == F.add_c(F.mul_c(a, b), F.mul_c(a, c))
    for a in els:
        if a:
            assert F.mul_c(a, F.inv_c(a)) == 1
        assert F.add_c(a, F.neg_c(a)) == 0


def test_division_by_zero():
    F4 = gf.make_field(2, 2)
    with pytest.raises(DivisionByZero):
        F4.one / F4.zero
    with pytest.raises(DivisionByZero):
        gf.field_arith("inv", F4.zero)


def test_field_mismatch():
    a = gf.make_field(2, 2).one
    b = gf.make_field(3, 1).one
    with pytest.raises(FieldMismatch):
        a + b


def test_frobenius_fixes_prime_field_exactly():
    for (p, k) in [(2, 2), (3, 2), (2, 3), (3, 4)]:
        F = gf.make_field(p, k)
        fixed = [a for a in range(F.q) if F.frob_c(a) == a]
        assert sorted(fixed) == sorted(gf.embedding_table(gf.make_field(p, 1), F))
        # ring homomorphism
        r = random.Random(1)
        for _ in range(20):
            a, b = r.randrange(F.q), r.randrange(F.q)
            assert F.frob_c(F.add_c(a, b)) == F.add_c(F.frob_c(a), F.frob_c(b))
            assert F.frob_c(F.mul_c(a, b)) == F.mul_c(F.frob_c(a), F.frob_c(b))


def test_embed_tower_round_trip():
    F9 = gf.make_field(3, 2)
    F81 = gf.make_field(3, 4)
    r = random.Random(2)
    for _ in range(20):
        x = gf.FieldElement(F9, r.randrange(9))
        y = gf.embed(x, F81)
        assert gf.relative_frobenius(y, 2) == y  # fixed by Gal(F81/F9)
    # minimal polynomial preserved
    F4, F16 = gf.make_field(2, 2), gf.make_field(2, 4)
    w = gf.nth_root_of_unity(F4, 3)
    img = gf.embed(w, F16)
    assert img * img + img + 1 == F16.zero
    assert gf.embed(gf.make_field(2).one, F4) == F4.one


def test_embed_not_a_subfield():
    with pytest.raises(NotASubfield):
        gf.embed(gf.make_field(2, 2).one, gf.make_field(2, 3))
    with pytest.raises(NotASubfield):
        gf.embed(gf.make_field(2).one, gf.make_field(3))


def test_nth_root_of_unity():
    assert gf.nth_root_of_unity(gf.make_field(2), 3) is None  # |GF(2)*| = 1
    w = gf.nth_root_of_unity(gf.make_field(2, 2), 3)
    assert w is not None and w.code == 2  # omega = g, primitive
    assert gf.nth_root_of_unity(gf.make_field(3, 2), 8) is not None
    assert gf.nth_root_of_unity(gf.make_field(3), 4) is None
    with pytest.raises(CharacteristicDivides):
        gf.nth_root_of_unity(gf.make_field(3), 6)
    # presence iff n | q-1
    for (p, k) in [(2, 2), (3, 2), (5, 1), (7, 1)]:
        F = gf.make_field(p, k)
        for n in range(1, 13):
            if n % p == 0:
                continue
            z = gf.nth_root_of_unity(F, n)
            assert (z is not None) == ((F.q - 1) % n == 0)
            if z is not None:
                assert z ** n == F.one
                for d in range(1, n):
                    assert z ** d != F.one or d == n


def test_root_of_unity_char2_identity():
    # (zeta5 + zeta5^4)^3 = 1 in characteristic 2
    F16 = gf.make_field(2, 4)
    z5 = gf.nth_root_of_unity(F16, 5)
    u = z5 + z5 ** 4
    assert u ** 3 == F16.one


def test_poly_roots_examples():
    F4 = gf.make_field(2, 2)
    roots = gf.poly_roots(gf.Poly(F4, [1, 1, 1]))
    assert [r.code for r in roots] == [2, 3]  # omega, omega^2
    F9 = gf.make_field(3, 2)
    i = gf.nth_root_of_unity(F9, 4)
    r1 = gf.poly_roots(gf.Poly(F9, [1, 1, 0, 1]))
    assert set(r1) == {F9.one, F9.one + i, F9.one - i}
    r2 = gf.poly_roots(gf.Poly(F9, [-1, 1, 0, 1]))
    assert set(r2) == {-F9.one, -F9.one + i, -F9.one - i}


def test_poly_roots_brute_force_agreement():
    r = random.Random(3)
    for (p, k) in [(2, 2), (3, 2), (5, 1), (2, 3), (3, 4)]:
        F = gf.make_field(p, k)
        for _ in range(10):
            coeffs = [r.randrange(F.q) for _ in range(r.randrange(2, 7))]
            if not any(coeffs):
                coeffs[-1] = 1
            f = gf.Poly.from_codes(F, coeffs)
            if f.is_zero:
                continue
            got = [x.code for x in gf.poly_roots(f)]
            expect = sorted(c for c in range(F.q) if f.eval_c(c) == 0)
            assert sorted(set(got)) == expect


def test_poly_roots_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        gf.poly_roots(gf.Poly(gf.make_field(2), [0]))


def test_poly_roots_multiplicity():
    F3 = gf.make_field(3)
    lin = gf.Poly(F3, [-1, 1])
    f = lin * lin * gf.Poly(F3, [1, 0, 1])
    assert [r.code for r in gf.poly_roots(f)] == [1, 1]


def test_split_linear_path():
    # exercise the gcd-splitting used for fields above the table limit
    for (p, k) in [(5, 1), (2, 3)]:
        F = gf.make_field(p, k)
        codes = sorted(set(range(1, min(F.q, 5))))
        f = gf.Poly(F, [1])
        for c in codes:
            f = f * gf.Poly.from_codes(F, [F.neg_c(c), 1])
        found = []
        gf._split_linear(f, found)
        assert sorted(found) == codes


def test_factor_univariate():
    F3 = gf.make_field(3)
    fac = gf.factor_univariate(gf.Poly(F3, [1, 0, 0, 0, 1]))
    assert [(f.coeffs, m) for f, m in fac] == [((2, 1, 1), 1), ((2, 2, 1), 1)]
    F4 = gf.make_field(2, 2)
    fac = gf.factor_univariate(gf.Poly(F4, [1, 1, 1]))  # splits over GF(4)
    assert all(f.degree == 1 for f, _ in fac) and len(fac) == 2


def test_element_render_parse_round_trip():
    F9 = gf.make_field(3, 2)
    for c in range(9):
        assert F9.parse_c(F9.render_c(c)) == c
    assert F9.render_c(4) == "g+1"
    F25 = gf.make_field(5, 2)
    for c in range(25):
        assert F25.parse_c(F25.render_c(c)) == c


def test_element_ordering_low_degree_first():
    F9 = gf.make_field(3, 2)
    # code order: 0,1,2 then g,g+1,g+2,2g,...
    assert F9.from_code(1) < F9.from_code(2) < F9.gen


def test_big_field_fallback_ops():
    # prime field above the table limit exercises the polynomial fallback
    F = gf.make_field(65537)
    assert F.tables() is None
    a, b = 12345, 54321
    assert F.mul_c(a, F.inv_c(a)) == 1
    assert F.add_c(a, b) == (a + b) % 65537
    assert F.pow_c(a, 65536) == 1
