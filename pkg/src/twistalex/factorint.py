"""Factorization of integer Laurent polynomials into Q-irreducible factors.

Route: primitive/squarefree reduction, deterministic Berlekamp factorization
modulo a small good prime, linear multifactor Hensel lifting past a
Mignotte-style coefficient bound, then subset recombination.  Degrees are
capped at 64; everything this package needs to factor has degree <= 10.
"""
from __future__ import annotations

from math import gcd, isqrt

from .domains import ZZ, QQ
from .laurent import LaurentPoly

DEGREE_CAP = 64

_SMALL_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113)


# --------------------------------------------------- dense helpers, F_p and Z

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pdivmod(a, b, p):
    a = [x % p for x in a]
    b = [x % p for x in b]
    _trim(a)
    _trim(b)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] % p
        if c:
            f = c * inv % p
            q[i] = f
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - f * y) % p
    return q, _trim(a)


def _pgcd(a, b, p):
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        _, r = _pdivmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _pext_inverse(a, mod, p):
    """Inverse of a modulo mod in F_p[x] (they must be coprime)."""
    r0, r1 = _trim([x % p for x in mod]), _trim([x % p for x in a])
    s0, s1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        qs1 = _pmul(q, s1, p)
        s2 = [( (s0[i] if i < len(s0) else 0) - (qs1[i] if i < len(qs1) else 0) ) % p
              for i in range(max(len(s0), len(qs1)))]
        r0, r1 = r1, r
        s0, s1 = s1, _trim(s2)
    if len(r0) != 1:
        raise ArithmeticError("polynomials not coprime mod p")
    c = pow(r0[0], -1, p)
    return _trim([x * c % p for x in s0])


def _ppowmod(base, e, mod, p):
    out = [1]
    b = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            out = _pdivmod(_pmul(out, b, p), mod, p)[1]
        b = _pdivmod(_pmul(b, b, p), mod, p)[1]
        e >>= 1
    return out


def _pderiv(a, p):
    return _trim([(i * a[i]) % p for i in range(1, len(a))])


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _zderiv(a):
    return _trim([i * a[i] for i in range(1, len(a))])


def _sym_mod(a, m):
    out = []
    for x in a:
        r = x % m
        out.append(r - m if r > m // 2 else r)
    return _trim(out)


def _content(a):
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def _primitive(a):
    g = _content(a)
    if g in (0, 1):
        return list(a)
    return [x // g for x in a]


def _zdivexact(a, b):
    """Exact division in Z[x]; returns None when not exact."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    q = [0] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db]
        if c % b[-1]:
            return None
        f = c // b[-1]
        q[i] = f
        if f:
            for j, y in enumerate(b):
                a[i + j] -= f * y
    return q if not _trim(a) else None


# -------------------------------------------------------------------- stages

def _berlekamp(f, p):
    """Monic irreducible factors of a squarefree monic f over F_p (deterministic)."""
    n = len(f) - 1
    if n <= 1:
        return [list(f)]
    xp = _ppowmod([0, 1], p, f, p)
    cols = []
    cur = [1]
    for _ in range(n):
        cols.append(list(cur) + [0] * (n - len(cur)))
        cur = _pdivmod(_pmul(cur, xp, p), f, p)[1]
    # v is Frobenius-fixed iff (Q - I) v = 0, Q[i][j] = coeff_i of x^(jp)
    q = [[(cols[j][i] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = _nullspace_mod_p(q, p)
    if len(basis) == 1:
        return [list(f)]
    factors = [list(f)]
    for v in basis:
        if len(factors) == len(basis):
            break
        vpoly = _trim(list(v))
        if len(vpoly) <= 1:
            continue
        next_factors = []
        for g in factors:
            if len(g) - 1 <= 1:
                next_factors.append(g)
                continue
            rem = g
            pieces = []
            for c in range(p):
                if len(rem) - 1 == 0:
                    break
                shifted = [(vpoly[0] - c) % p] + vpoly[1:]
                h = _pgcd(rem, shifted, p)
                if 0 < len(h) - 1:
                    pieces.append(h)
                    rem = _pdivmod(rem, h, p)[0]
            if len(rem) - 1 > 0:
                inv = pow(rem[-1], -1, p)
                pieces.append([x * inv % p for x in rem])
            next_factors.extend(pieces if pieces else [g])
        factors = next_factors
    return factors


def _nullspace_mod_p(m, p):
    n = len(m)
    a = [row[:] for row in m]
    pivots = {}
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if a[i][c] % p), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(n):
            if i != r and a[i][c] % p:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots[c] = r
        r += 1
    basis = []
    for fc in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[fc] = 1
        for c, row in pivots.items():
            v[c] = (-a[row][fc]) % p
        basis.append(v)
    return basis


def _hensel_lift_linear(f, facs, p, target):
    """Lift monic coprime factors of monic f from mod p to mod p^k >= target.

    Linear lifting: at modulus m = p^k the corrections delta_i solve
    sum_i delta_i * prod_{j != i} g_j = e (mod p) via precomputed inverses.
    """
    r = len(facs)
    G = [list(g) for g in facs]
    # h_i = inverse of prod_{j != i} g_j modulo g_i, all mod p
    invs = []
    for i in range(r):
        prod = [1]
        for j in range(r):
            if j != i:
                prod = _pmul(prod, facs[j], p)
        invs.append(_pext_inverse(prod, facs[i], p))
    m = p
    while m < target:
        prod = [1]
        for g in G:
            prod = _zmul(prod, g)
        diff = [x - y for x, y in zip(f + [0] * max(0, len(prod) - len(f)),
                                      prod + [0] * max(0, len(f) - len(prod)))]
        e = [(x // m) % p for x in diff]
        _trim(e)
        if e:
            for i in range(r):
                di = _pdivmod(_pmul(e, invs[i], p), G_mod_p(G[i], p), p)[1]
                for k, v in enumerate(di):
                    G[i][k] += m * (v % p)
        m *= p
    return G, m


def G_mod_p(g, p):
    return [x % p for x in g]


def _factor_squarefree_primitive(f):
    """Q-irreducible factors (primitive, positive leading coeff) of a
    primitive squarefree integer polynomial with positive leading coeff."""
    n = len(f) - 1
    if n <= 1:
        return [list(f)]
    if n > DEGREE_CAP:
        raise ValueError(f"degree {n} exceeds the factorization cap {DEGREE_CAP}")
    lc = f[-1]
    if lc != 1:
        # monicify: F(y) = lc^(n-1) * f(y/lc), factor, map back via y -> lc*x
        F = [a * lc ** (n - 1 - i) for i, a in enumerate(f[:-1])] + [1]
        out = []
        for G in _factor_squarefree_monic(F):
            g = _primitive([v * lc**i for i, v in enumerate(G)])
            if g[-1] < 0:
                g = [-x for x in g]
            out.append(g)
        out.sort(key=lambda g: (len(g), g))
        return out
    return _factor_squarefree_monic(f)


def _factor_squarefree_monic(f):
    """Irreducible factors of a monic squarefree integer polynomial."""
    n = len(f) - 1
    if n <= 1:
        return [list(f)]
    p = None
    for cand in _SMALL_PRIMES:
        fp = _trim([x % cand for x in f])
        if len(fp) - 1 != n:
            continue
        if len(_pgcd(fp, _pderiv(fp, cand), cand)) == 1:
            p = cand
            break
    if p is None:
        raise ArithmeticError("no good prime found below the cap")
    modular = _berlekamp([x % p for x in f], p)
    if len(modular) == 1:
        return [list(f)]
    modular.sort(key=lambda g: (len(g), g))
    norm2 = isqrt(sum(x * x for x in f)) + 1
    bound = (1 << (n + 1)) * norm2
    target = 2 * bound + 1
    lifted, m = _hensel_lift_linear(list(f), modular, p, target)
    found = []
    remaining = list(range(len(lifted)))
    fcur = list(f)
    size = 1
    while 2 * size <= len(remaining):
        progress = False
        for subset in _subsets(remaining, size):
            cand = [1]
            for i in subset:
                cand = _sym_mod(_zmul(cand, lifted[i]), m)
            q = _zdivexact(fcur, cand)
            if q is not None:
                found.append(cand)
                remaining = [i for i in remaining if i not in subset]
                fcur = q
                progress = True
                break
        if not progress:
            size += 1
    if len(fcur) - 1 > 0:
        found.append(fcur)
    found.sort(key=lambda g: (len(g), g))
    return found


def _subsets(items, size):
    from itertools import combinations

    yield from combinations(items, size)


# ----------------------------------------------------------------- public API

def factor_integer_poly(f: LaurentPoly):
    """Factor a nonzero integer Laurent polynomial.

    Returns (unit, content, t_power, factors) with unit in {+1, -1}, content a
    positive integer, and factors a sorted list of (primitive Q-irreducible
    polynomial with positive leading coefficient, multiplicity) such that

        f = unit * content * t^t_power * prod g_i^e_i.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.dom is not ZZ and f.dom.name != "ZZ":
        raise TypeError("factor_integer_poly expects integer coefficients")
    t_power = f.low()
    coeffs, _ = f.shift(-t_power).coeff_list()
    content = _content(coeffs)
    unit = 1
    prim = [x // content for x in coeffs]
    if prim[-1] < 0:
        unit = -1
        prim = [-x for x in prim]
    if len(prim) - 1 == 0:
        return unit, content, t_power, []
    # squarefree part via gcd with the derivative over Q
    fq = LaurentPoly(QQ, {e: QQ.coerce(v) for e, v in enumerate(prim)})
    g = fq.gcd(fq.derivative())
    if len(g) == 1 and g.low() == 0:
        sqfree = list(prim)
    else:
        quot = fq.exact_div(g)
        qc, _ = quot.coeff_list()
        from math import lcm

        den = 1
        for v in qc:
            den = lcm(den, v.denominator)
        sqfree = _primitive([int(v * den) for v in qc])
        if sqfree[-1] < 0:
            sqfree = [-x for x in sqfree]
    irreducibles = _factor_squarefree_primitive(sqfree)
    factors = []
    rem = list(prim)
    for g_ in irreducibles:
        mult = 0
        while True:
            q = _zdivexact(rem, g_)
            if q is None:
                break
            rem = q
            mult += 1
        if mult:
            factors.append((LaurentPoly(ZZ, dict(enumerate(g_))), mult))
    if len(_trim(list(rem))) != 1 or abs(rem[0]) != 1:
        raise ArithmeticError("factor recombination failed to exhaust the input")
    unit *= rem[0]
    return unit, content, t_power, factors


def verify_factorization(f: LaurentPoly, unit: int, content: int, t_power: int, factors) -> bool:
    acc = LaurentPoly(ZZ, {t_power: unit * content})
    for g, mult in factors:
        for _ in range(mult):
            acc = acc * g
    return acc == f


def is_irreducible(f: LaurentPoly) -> bool:
    """Q-irreducibility of a primitive integer polynomial (unit t-powers aside)."""
    unit, content, _, factors = factor_integer_poly(f)
    return content == 1 and len(factors) == 1 and factors[0][1] == 1
