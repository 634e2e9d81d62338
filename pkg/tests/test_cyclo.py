import random
from fractions import Fraction

import pytest

from twistalex.cyclo import (CYC, cyclotomic_polynomial, evaluate_at_root_of_unity,
                             is_cyclotomic_irreducible_mod_p, multiplicative_order)
from twistalex.laurent import parse_poly
from twistalex.snf import resultant


def test_cyclotomic_small():
    assert cyclotomic_polynomial(1).to_text() == "-1 + t"
    assert cyclotomic_polynomial(2).to_text() == "1 + t"
    assert cyclotomic_polynomial(3).to_text() == "1 + t + t^2"
    assert cyclotomic_polynomial(6).to_text() == "1 - t + t^2"
    assert cyclotomic_polynomial(12).to_text() == "1 - t^2 + t^4"


def test_cyclotomic_product_is_tn_minus_1():
    for n in (1, 2, 4, 6, 12, 15):
        acc = parse_poly("1")
        for d in range(1, n + 1):
            if n % d == 0:
                acc = acc * cyclotomic_polynomial(d)
        assert acc == parse_poly(f"-1 + t^{n}")


def test_irreducibility_mod_p():
    assert is_cyclotomic_irreducible_mod_p(3, 2)        # the A_4 case
    assert is_cyclotomic_irreducible_mod_p(1, 5)
    assert not is_cyclotomic_irreducible_mod_p(8, 7)    # ord_8(7) = 2 < 4
    assert is_cyclotomic_irreducible_mod_p(2, 3)
    with pytest.raises(ValueError):
        is_cyclotomic_irreducible_mod_p(6, 3)


def test_multiplicative_order_brute_force():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(2, 40)
        a = rng.randint(1, n - 1)
        from math import gcd

        if gcd(a, n) != 1:
            continue
        k = multiplicative_order(a, n)
        assert pow(a, k, n) == 1
        assert all(pow(a, j, n) != 1 for j in range(1, k))


def test_field_axioms_and_inverse():
    F = CYC(12)
    rng = random.Random(11)
    for _ in range(40):
        a = tuple(Fraction(rng.randint(-3, 3)) for _ in range(F.degree))
        b = tuple(Fraction(rng.randint(-3, 3)) for _ in range(F.degree))
        assert F.eq(F.mul(a, b), F.mul(b, a))
        if not F.is_zero(a):
            assert F.eq(F.mul(a, F.inv(a)), F.one())


def test_zeta_orders():
    for m in (1, 2, 3, 4, 6, 12):
        F = CYC(m)
        z = F.zeta(1)
        acc = F.one()
        for k in range(1, m + 1):
            acc = F.mul(acc, z)
            if k < m:
                assert not F.eq(acc, F.one()), (m, k)
        assert F.eq(acc, F.one())


def test_embeddings():
    F12, F3, F4 = CYC(12), CYC(3), CYC(4)
    z3 = F12.embed(F3.zeta(1), F3)
    assert F12.eq(z3, F12.zeta(4))
    i = F12.embed(F4.zeta(1), F4)
    assert F12.eq(i, F12.zeta(3))


def test_evaluation_930_products():
    d930 = parse_poly("1 - 5*t + 12*t^2 - 17*t^3 + 12*t^4 - 5*t^5 + t^6")
    F3 = CYC(3)
    a = evaluate_at_root_of_unity(d930, 3, 1)
    b = evaluate_at_root_of_unity(d930, 3, 2)
    prod = F3.mul(a, b)
    assert F3.rational_value(prod) == 484
    # at zeta_1 = 1: coefficient sum
    F1 = CYC(1)
    v = evaluate_at_root_of_unity(d930, 1, 1)
    assert F1.rational_value(v) == -1
    # Delta(-1)^2 * Delta(1) = ±2809
    F2 = CYC(2)
    m1 = F2.rational_value(evaluate_at_root_of_unity(d930, 2, 1))
    p1 = F1.rational_value(evaluate_at_root_of_unity(d930, 1, 0))
    assert abs(m1 * m1 * p1) == 2809


def test_galois_product_equals_resultant():
    # prod over k coprime to m of f(zeta_m^k) = ± Res(f, Phi_m)
    d930 = parse_poly("1 - 5*t + 12*t^2 - 17*t^3 + 12*t^4 - 5*t^5 + t^6")
    for m in (3, 4, 6):
        F = CYC(m)
        acc = F.one()
        from math import gcd

        for k in range(1, m + 1):
            if gcd(k, m) == 1:
                acc = F.mul(acc, evaluate_at_root_of_unity(d930, m, k))
        val = F.rational_value(acc)
        coeffs, _ = d930.coeff_list()
        phi_coeffs, _ = cyclotomic_polynomial(m).coeff_list()
        res = resultant(coeffs, phi_coeffs)
        assert abs(val) == abs(res)
