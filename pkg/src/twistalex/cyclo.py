"""Cyclotomic fields Q(zeta_m) with exact power-basis arithmetic.

Elements are tuples of Fractions of length deg(Phi_m), the coordinates in the
basis 1, x, ..., x^(deg-1) modulo the m-th cyclotomic polynomial.  Roots of
unity never degrade to floats anywhere in this package.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .domains import Domain
from .laurent import LaurentPoly
from . import domains


def _euler_phi(n: int) -> int:
    out, k = n, n
    p = 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            out -= out // p
        p += 1
    if k > 1:
        out -= out // k
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial as a monic integer polynomial.

    Computed by dividing t^n - 1 by all Phi_d with d | n, d < n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    f = LaurentPoly(domains.ZZ, {n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            f = f.exact_div(cyclotomic_polynomial(d))
    return f


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def is_cyclotomic_irreducible_mod_p(n: int, p: int) -> bool:
    """True iff Phi_n is irreducible over F_p; equivalent to ord_n(p) = phi(n)."""
    if gcd(n, p) != 1:
        raise ValueError(f"gcd({n},{p}) != 1")
    if n == 1:
        return True
    return multiplicative_order(p, n) == _euler_phi(n)


class CyclotomicField(Domain):
    """Q(zeta_m); elements are coordinate tuples in the power basis mod Phi_m."""

    is_field = True

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.m = m
        self.name = f"Q(zeta_{m})"
        phi = cyclotomic_polynomial(m)
        self.degree = phi.deg() if m > 1 else 1
        if m == 1:
            self.degree = 1
        coeffs, _ = phi.coeff_list()
        self._phi = [Fraction(v) for v in coeffs]
        # reduction table: x^(deg+j) expressed in the power basis
        d = self.degree
        self._red: list[tuple[Fraction, ...]] = []
        cur = [Fraction(0)] * d
        if d > 0:
            # x^d = -(phi - x^d)
            base = [-c for c in self._phi[:d]]
            cur = list(base)
            self._red.append(tuple(cur))
            for _ in range(d - 1):
                top = cur[d - 1]
                cur = [Fraction(0)] + cur[: d - 1]
                if top:
                    cur = [c + top * b for c, b in zip(cur, base)]
                self._red.append(tuple(cur))
        # powers of zeta_m in the basis, for fast root-of-unity access
        self._zeta_pows: list[tuple[Fraction, ...]] = []
        z = self.one() if m == 1 else self._monomial(1)
        w = self.one()
        for _ in range(m):
            self._zeta_pows.append(w)
            w = self.mul(w, z)

    def _monomial(self, k: int):
        v = [Fraction(0)] * self.degree
        if k < self.degree:
            v[k] = Fraction(1)
            return tuple(v)
        return self._red[k - self.degree]

    # ------------------------------------------------------------- domain API
    def zero(self):
        return (Fraction(0),) * self.degree

    def one(self):
        v = [Fraction(0)] * self.degree
        v[0] = Fraction(1)
        return tuple(v)

    def coerce(self, x):
        if isinstance(x, tuple) and len(x) == self.degree:
            return tuple(Fraction(v) for v in x)
        if isinstance(x, (int, Fraction)):
            return self.from_rational(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def from_rational(self, q: Fraction):
        v = [Fraction(0)] * self.degree
        v[0] = Fraction(q)
        return tuple(v)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
        out = list(prod[:d])
        for j in range(d, 2 * d - 1):
            c = prod[j]
            if c:
                red = self._red[j - d]
                for i in range(d):
                    if red[i]:
                        out[i] += c * red[i]
        return tuple(out)

    def is_zero(self, a):
        return all(not x for x in a)

    def eq(self, a, b):
        return all(x == y for x, y in zip(a, b))

    def inv(self, a):
        """Inverse via the extended Euclidean algorithm in Q[x] mod Phi_m."""
        if self.is_zero(a):
            raise ZeroDivisionError(f"division by zero in {self.name}")
        # work with plain coefficient lists
        r0 = list(self._phi)
        r1 = list(a)
        while r1 and not r1[-1]:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def polydivmod(num, den):
            num = list(num)
            q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
            for i in range(len(num) - len(den), -1, -1):
                if num[i + len(den) - 1]:
                    f = num[i + len(den) - 1] / den[-1]
                    q[i] = f
                    for j, dv in enumerate(den):
                        num[i + j] -= f * dv
            while num and not num[-1]:
                num.pop()
            return q, num

        while r1:
            q, r = polydivmod(r0, r1)
            # s_next = s0 - q*s1
            s2 = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qv in enumerate(q):
                if qv:
                    for j, sv in enumerate(s1):
                        s2[i + j] -= qv * sv
            while s2 and not s2[-1]:
                s2.pop()
            r0, r1, s0, s1 = r1, r, s1, s2
        # r0 = gcd (a nonzero constant since Phi_m is irreducible)
        if len(r0) != 1:
            raise ArithmeticError("gcd with Phi_m not constant; element not invertible")
        c = r0[0]
        inv = [v / c for v in s0]
        inv = inv[: self.degree] + [Fraction(0)] * max(0, self.degree - len(inv))
        # s0 may have degree >= deg; reduce just in case
        if len(s0) > self.degree:
            acc = self.zero()
            for k, v in enumerate(s0):
                if v:
                    acc = self.add(acc, self.scale(self._monomial(k), v / c))
            return acc
        return tuple(inv)

    def scale(self, a, q: Fraction):
        return tuple(x * q for x in a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # ------------------------------------------------------------- utilities
    def zeta(self, k: int = 1):
        """zeta_m^k as an element."""
        return self._zeta_pows[k % self.m]

    def is_rational(self, a) -> bool:
        return all(not x for x in a[1:])

    def rational_value(self, a) -> Fraction:
        if not self.is_rational(a):
            raise ValueError(f"{self.to_str(a)} is not rational")
        return a[0]

    def embed(self, a, src: "CyclotomicField"):
        """Embed an element of Q(zeta_src) along zeta_src -> zeta_m^(m/src)."""
        if self.m % src.m:
            raise ValueError(f"no embedding {src.name} -> {self.name}")
        step = self.m // src.m
        acc = self.zero()
        for k, v in enumerate(a):
            if v:
                acc = self.add(acc, self.scale(self.zeta(step * k), v))
        return acc

    def to_str(self, a) -> str:
        if self.is_rational(a):
            return str(a[0])
        parts = []
        for k, v in enumerate(a):
            if not v:
                continue
            if k == 0:
                parts.append(str(v))
            else:
                zp = f"z{self.m}" if k == 1 else f"z{self.m}^{k}"
                parts.append(zp if v == 1 else ("-" + zp if v == -1 else f"{v}*{zp}"))
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    def sort_key(self, a):
        return tuple(a)


@lru_cache(maxsize=None)
def CYC(m: int) -> CyclotomicField:
    return CyclotomicField(m)


def evaluate_at_root_of_unity(f: LaurentPoly, m: int, k: int = 1):
    """f(zeta_m^k) computed exactly in Q(zeta_m); returns a CYC(m) element."""
    F = CYC(m)
    acc = F.zero()
    for e, v in f.c.items():
        acc = F.add(acc, F.scale(F.zeta(k * e), Fraction(v)))
    return acc
