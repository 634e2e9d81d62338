"""Wada's invariant of a presentation and a representation.

The value is det((rho tensor t^phi)(M_j)) / det((rho tensor t^phi)(1 - g_j))
for an admissible deleted column j, as a reduced rational function over the
coefficient field, together with the unit subgroup {± t^k r} describing its
indeterminacy (r ranges over the subgroup generated by determinants of the
image).  doteq comparison and canonical text forms quotient that unit out.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CyclotomicField
from .domains import Domain, QQ, convert
from .fox import GroupRingElement, alexander_fox_matrix, specialize_element, specialize_matrix
from .laurent import LaurentPoly, RationalFunction
from .polydet import det_poly_matrix
from .presentation import KnotPresentation


class WadaError(ArithmeticError):
    pass


@dataclass(frozen=True)
class TwistedPolynomial:
    value: RationalFunction
    det_subgroup: tuple          # generators of the det-image subgroup
    column: int
    label: str = ""

    @property
    def dom(self) -> Domain:
        return self.value.dom

    def units(self):
        return unit_subgroup(self.dom, self.det_subgroup)

    def canonical(self) -> "TwistedPolynomial":
        num, den = canonical_pair(self.value, self.units())
        return TwistedPolynomial(RationalFunction(num, den, reduce=False),
                                 self.det_subgroup, self.column, self.label)

    def is_laurent(self) -> bool:
        return self.value.is_laurent()

    def scale(self, c) -> "TwistedPolynomial":
        return TwistedPolynomial(self.value.scale(c), self.det_subgroup,
                                 self.column, self.label)

    def to_text(self) -> str:
        c = self.canonical()
        num = c.value.num.to_text()
        den = c.value.den.to_text()
        return num if den == "1" else f"({num}) / ({den})"


def _field_of(dom: Domain) -> Domain:
    if dom.is_field:
        return dom
    if dom.name == "ZZ":
        return QQ
    raise TypeError(f"no fraction field wired for {dom.name}")


def unit_subgroup(dom: Domain, gens) -> tuple:
    """Closure of the subgroup of dom* generated by gens (all finite here)."""
    one = dom.one()
    elems = {dom.sort_key(one): one}
    frontier = [one]
    gens = [g for g in gens]
    inv_gens = [dom.inv(g) for g in gens]
    cap = 20000
    while frontier:
        nxt = []
        for x in frontier:
            for g in list(gens) + inv_gens:
                y = dom.mul(x, g)
                k = dom.sort_key(y)
                if k not in elems:
                    elems[k] = y
                    nxt.append(y)
                    if len(elems) > cap:
                        raise WadaError("determinant subgroup is not finite enough")
        frontier = nxt
    return tuple(elems.values())


def wada_invariant(pres: KnotPresentation, rep, column: int | None = None,
                   _precomputed_fox=None) -> TwistedPolynomial:
    """Wada's invariant of (pres, rep), reduced over the coefficient field.

    The column defaults to the first generator with phi != 0 whose denominator
    determinant is nonzero; a requested column with vanishing denominator is
    an error rather than a division by zero.
    """
    dom = rep.dom
    field = _field_of(dom)
    fox = _precomputed_fox if _precomputed_fox is not None else alexander_fox_matrix(pres)
    n = rep.dim

    def denominator_for(j: int) -> LaurentPoly:
        one_minus = GroupRingElement.one() - GroupRingElement.from_word(((j, 1),))
        block = specialize_element(one_minus, rep, pres)
        return det_poly_matrix(block, dom)

    if column is not None and not 0 <= column < pres.generator_count:
        raise WadaError(f"column {column} out of range")
    candidates = [column] if column is not None else [
        j for j in range(pres.generator_count) if pres.phi[j] != 0
    ]
    chosen = None
    den = None
    for j in candidates:
        if pres.phi[j] == 0 and column is not None:
            raise WadaError(f"column {j} has phi = 0")
        d = denominator_for(j)
        if not d.is_zero():
            chosen, den = j, d
            break
    if chosen is None:
        raise WadaError("no admissible column: every denominator determinant vanishes")
    big = specialize_matrix(fox, rep, pres)
    cols = [c for c in range(pres.generator_count * n)
            if not chosen * n <= c < (chosen + 1) * n]
    minor = [[row[c] for c in cols] for row in big]
    num = det_poly_matrix(minor, dom)
    if dom is not field:
        num = num.copy_to(field)
        den = den.copy_to(field)
    dets = rep.det_image_generators()
    dets = tuple(convert(d_, dom, field) for d_ in dets)
    value = RationalFunction(num, den)
    return TwistedPolynomial(value, dets, chosen, label=getattr(rep, "label", ""))


# ----------------------------------------------------------- doteq machinery

def _scalar_ratio(dom: Domain, p: LaurentPoly, q: LaurentPoly):
    """c with p = c*q, or None."""
    if p.is_zero() and q.is_zero():
        return dom.one()
    if p.is_zero() or q.is_zero():
        return None
    lp, lq = p.low(), q.low()
    p = p.shift(-lp)
    q = q.shift(-lq)
    if p.c.keys() != q.c.keys():
        return None
    from .domains import ExactDivisionError

    try:
        c = dom.div(p.c[0], q.c[0])
    except (ExactDivisionError, ZeroDivisionError):
        return None
    for e, v in p.c.items():
        if not dom.eq(v, dom.mul(c, q.c[e])):
            return None
    return c


def doteq_equal(a: TwistedPolynomial, b: TwistedPolynomial) -> bool:
    """Equality up to units ± t^k r with r in the declared det subgroup."""
    dom = a.dom
    if dom.name != b.dom.name:
        raise WadaError(f"incomparable coefficient fields {a.dom} vs {b.dom}")
    ua = {dom.sort_key(u) for u in a.units()}
    ub = {dom.sort_key(u) for u in b.units()}
    if ua != ub:
        raise WadaError("incomparable indeterminacy subgroups")
    p = a.value.num * b.value.den
    q = b.value.num * a.value.den
    c = _scalar_ratio(dom, p, q)
    if c is None:
        return False
    negc = dom.neg(c)
    return dom.sort_key(c) in ua or dom.sort_key(negc) in ua


def doteq_poly(a: TwistedPolynomial, f: LaurentPoly) -> bool:
    """a doteq a plain Laurent polynomial (coerced to a's field)."""
    field = a.dom
    fc = f if f.dom is field else f.copy_to(field)
    b = TwistedPolynomial(RationalFunction(fc, LaurentPoly.one(field)),
                          a.det_subgroup, a.column)
    return doteq_equal(a, b)


def canonical_pair(value: RationalFunction, units) -> tuple[LaurentPoly, LaurentPoly]:
    """Canonical (num, den): den monic at lowest exponent 0, num shifted to 0
    and normalized by the lexicographically least unit multiple."""
    dom = value.dom
    num, den = value.num, value.den
    den = den.shift(-den.low()) if not den.is_zero() else den
    if num.is_zero():
        return num, den
    num = num.shift(-num.low())
    zero_key = dom.sort_key(dom.zero())
    best = None
    for u in units:
        for sgn in (dom.one(), dom.neg(dom.one())):
            cand = num.scale(dom.mul(u, sgn))
            positive = dom.sort_key(cand.c[0]) > zero_key
            key = (not positive, tuple(dom.sort_key(cand[e]) for e in range(num.deg() + 1)))
            if best is None or key < best[0]:
                best = (key, cand)
    return best[1], den


# ------------------------------------------------------------------ satellite

def satellite_scale_factor(delta_c: LaurentPoly, eigen_dom: CyclotomicField, eigenvalues):
    """prod Delta_C(z_i), computed exactly in eigen_dom."""
    acc = eigen_dom.one()
    for z in eigenvalues:
        val = eigen_dom.zero()
        for e, v in delta_c.c.items():
            ze = eigen_dom.one()
            if e >= 0:
                for _ in range(e):
                    ze = eigen_dom.mul(ze, z)
            else:
                zi = eigen_dom.inv(z)
                for _ in range(-e):
                    ze = eigen_dom.mul(ze, zi)
            val = eigen_dom.add(val, eigen_dom.scale(ze, Fraction(v)))
        acc = eigen_dom.mul(acc, val)
    return acc


def satellite_twisted(dk: TwistedPolynomial, delta_c: LaurentPoly,
                      eigen_dom: CyclotomicField, eigenvalues) -> TwistedPolynomial:
    """The satellite's twisted polynomial: dk scaled by prod Delta_C(z_i).

    The eigenvalues are the exact spectrum of rho(axis) (e.g. orbit character
    values from monodromy_orbit_values); that the axis is null-homologous is
    the caller's obligation, invisible from these inputs.
    """
    factor = satellite_scale_factor(delta_c, eigen_dom, eigenvalues)
    if eigen_dom.is_rational(factor):
        c = dk.dom.coerce(eigen_dom.rational_value(factor))
        return dk.scale(c)
    if isinstance(dk.dom, CyclotomicField):
        target = dk.dom
        if target.m % eigen_dom.m == 0:
            return dk.scale(target.embed(factor, eigen_dom))
    raise WadaError("eigenvalue field does not embed into the polynomial's field")
