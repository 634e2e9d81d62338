"""Exact coefficient domains.

Coefficients are plain Python data (int for ZZ and GF(p), Fraction for QQ,
coordinate tuples for cyclotomic fields in cyclo.py); a domain object supplies
the ring operations.  Keeping elements unboxed matters in the determinant and
polynomial hot loops.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class ExactDivisionError(ArithmeticError):
    """Raised when an exact division does not come out exact."""


class Domain:
    is_field = False
    name = "?"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return a == self.zero()

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))

    def div(self, a, b):
        """Exact division; raises ExactDivisionError when b does not divide a."""
        raise NotImplementedError

    def inv(self, a):
        return self.div(self.one(), a)

    def to_str(self, a) -> str:
        return str(a)

    # total order used only to pick deterministic canonical representatives
    def sort_key(self, a):
        return a

    def __repr__(self):
        return self.name


class IntegerDomain(Domain):
    name = "ZZ"

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        raise TypeError(f"cannot coerce {x!r} into ZZ")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in ZZ")
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionError(f"{b} does not divide {a} in ZZ")
        return q


class RationalDomain(Domain):
    name = "QQ"
    is_field = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return Fraction(a) / b


class PrimeField(Domain):
    """GF(p), elements stored as ints in 0..p-1."""

    is_field = True

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return a * pow(b, -1, self.p) % self.p


ZZ = IntegerDomain()
QQ = RationalDomain()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def domain_join(a: Domain, b: Domain) -> Domain:
    """Smallest common domain two coefficient domains both embed into."""
    from .cyclo import CyclotomicField, CYC  # local import: cyclo depends on laurent

    if a is b:
        return a
    pair = {a.name, b.name}
    if pair == {"ZZ", "QQ"}:
        return QQ
    if isinstance(a, CyclotomicField) or isinstance(b, CyclotomicField):
        ms = [d.m for d in (a, b) if isinstance(d, CyclotomicField)]
        others = [d for d in (a, b) if not isinstance(d, CyclotomicField)]
        if others and others[0].name not in ("ZZ", "QQ"):
            raise TypeError(f"no common domain for {a} and {b}")
        from math import lcm

        return CYC(lcm(*ms)) if len(ms) == 2 else CYC(ms[0])
    raise TypeError(f"no common domain for {a} and {b}")


def convert(x, src: Domain, dst: Domain):
    """Move an element along the canonical embedding src -> dst."""
    from .cyclo import CyclotomicField

    if src is dst:
        return x
    if isinstance(dst, CyclotomicField):
        if isinstance(src, CyclotomicField):
            return dst.embed(x, src)
        return dst.from_rational(Fraction(x))
    if src.name == "ZZ":
        return dst.coerce(x)
    if src.name == "QQ":
        return dst.coerce(x)
    raise TypeError(f"no conversion {src} -> {dst}")
