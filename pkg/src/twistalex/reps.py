"""Representation constructors and combinators.

Everything built here is monomial (permutation blocks times diagonal scalings)
until a conjugation makes it dense, so word evaluation and relator checks stay
linear in the dimension.  Constructors attached to a presentation verify every
relator at build time.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from math import comb, gcd, lcm

from . import words
from .cyclo import CYC, CyclotomicField, is_cyclotomic_irreducible_mod_p
from .domains import Domain, GF, QQ, ZZ, convert, domain_join
from .matrix import (Dense, Monomial, as_monomial, gen_inv, gen_mul, identity,
                     mat_convert, mat_eq, mat_mul, to_dense)
from .metabelian import (Character, DihedralData, apn_field,
                         branched_cover_homology, characters_of_quotient)
from .presentation import KnotPresentation


class RepresentationError(ValueError):
    pass


class Representation:
    """Finite-dimensional exact-matrix assignment to the generators."""

    def __init__(self, dim: int, dom: Domain, images: dict, pres: KnotPresentation | None,
                 label: str = "", check: bool = True):
        self.dim = dim
        self.dom = dom
        self.images = images
        self.pres = pres
        self.label = label
        self._inv_cache: dict = {}
        if check and pres is not None:
            bad = self.failing_relator()
            if bad is not None:
                raise RepresentationError(
                    f"relator does not map to the identity under {label or 'representation'}"
                )

    # ------------------------------------------------------------ evaluation
    def image_of_gen(self, g: int, e: int):
        if e >= 0:
            base = self.images[g]
        else:
            base = self._inv_cache.get(g)
            if base is None:
                base = gen_inv(self.dom, self.images[g])
                self._inv_cache[g] = base
        out = None
        for _ in range(abs(e)):
            out = base if out is None else gen_mul(self.dom, out, base)
        return out

    def image_of_word(self, w: words.Word):
        out: object = Monomial.identity(self.dom, self.dim)
        for g, e in w:
            out = gen_mul(self.dom, out, self.image_of_gen(g, e))
        return out

    def failing_relator(self):
        if self.pres is None:
            return None
        for r in self.pres.relators:
            img = self.image_of_word(r)
            if isinstance(img, Monomial):
                if not img.is_identity(self.dom):
                    return r
            elif not mat_eq(self.dom, to_dense(self.dom, img), identity(self.dom, self.dim)):
                return r
        return None

    def check_relators(self) -> bool:
        return self.failing_relator() is None

    # ------------------------------------------------------------ invariants
    def det_image_generators(self):
        """Determinants of the generator images; they generate the det subgroup."""
        outs = []
        for g in sorted(self.images):
            img = self.images[g]
            if isinstance(img, Monomial):
                outs.append(img.det(self.dom))
            else:
                outs.append(_dense_det(self.dom, img))
        return tuple(outs)

    # ----------------------------------------------------------- combinators
    def conjugate(self, pmat: Dense) -> "Representation":
        pinv = gen_inv(self.dom, pmat)
        images = {
            g: mat_mul(self.dom, mat_mul(self.dom, to_dense(self.dom, pinv),
                                         to_dense(self.dom, img)), to_dense(self.dom, pmat))
            for g, img in self.images.items()
        }
        return Representation(self.dim, self.dom, images, self.pres,
                              label=f"conj({self.label})")

    def convert_domain(self, dst: Domain) -> "Representation":
        images = {}
        for g, img in self.images.items():
            if isinstance(img, Monomial):
                images[g] = img.convert(self.dom, dst)
            else:
                images[g] = mat_convert(img, self.dom, dst)
        return Representation(self.dim, dst, images, self.pres, label=self.label, check=False)


def _dense_det(dom: Domain, m: Dense):
    n = len(m)
    if n == 0:
        return dom.one()
    if dom.is_field:
        from .polydet import _det_field

        return _det_field([list(r) for r in m], dom)
    from .snf import det_int

    if dom.name == "ZZ":
        return det_int([list(r) for r in m])
    raise TypeError(f"determinant over {dom.name} not supported for dense matrices")


# ------------------------------------------------------- simple constructors

def rep_trivial(pres: KnotPresentation, dom: Domain = ZZ) -> Representation:
    images = {g: Monomial.identity(dom, 1) for g in range(pres.generator_count)}
    return Representation(1, dom, images, pres, label="trivial")


def rep_onedim(pres: KnotPresentation, z, dom: Domain | None = None) -> Representation:
    """Every generator maps to [z^phi(g)] (z on the meridians)."""
    if dom is None:
        dom = ZZ if isinstance(z, int) else QQ if isinstance(z, Fraction) else None
        if dom is None:
            raise TypeError("pass the coefficient domain for non-rational z")
    z = dom.coerce(z) if isinstance(z, (int, Fraction)) else z
    if dom.is_zero(z):
        raise RepresentationError("z must be invertible")
    images = {}
    for g in range(pres.generator_count):
        e = pres.phi[g]
        val = dom.one()
        for _ in range(abs(e)):
            val = dom.mul(val, z)
        if e < 0:
            val = dom.inv(val)
        images[g] = Monomial((0,), (val,))
    return Representation(1, dom, images, pres, label="onedim")


# ------------------------------------------------- dihedral and metacyclic

def metacyclic_gen_images(m: int, p: int, k: int):
    """Permutation images of x and y in G(m,p|k) acting on Z/p:
    y: n -> n-1, x: n -> k n."""
    x = Monomial.permutation(ZZ, tuple((k * n) % p for n in range(p)))
    y = Monomial.permutation(ZZ, tuple((n - 1) % p for n in range(p)))
    return x, y


def rep_metacyclic(pres: KnotPresentation, m: int, p: int, k: int, colors) -> Representation:
    """The p-dimensional permutation representation of an epimorphism onto
    G(m,p|k): generator g_i -> x^phi(g_i) y^(colors[i])."""
    if pow(k, m, p) != 1 or any(pow(k, l, p) == 1 for l in range(1, m)):
        raise RepresentationError(f"{k} is not a primitive {m}-th root of 1 mod {p}")
    if len(colors) != pres.generator_count:
        raise RepresentationError("one color per generator required")
    images = {}
    for g in range(pres.generator_count):
        e = pres.phi[g] % m
        c = colors[g] % p
        # x^e y^c acting on Z/p: n -> k^e (n - c)
        ke = pow(k, e, p)
        images[g] = Monomial.permutation(ZZ, tuple((ke * (n - c)) % p for n in range(p)))
    return Representation(p, ZZ, images, pres, label=f"metacyclic(m={m},p={p},k={k})")


def rep_dihedral(pres: KnotPresentation, data: DihedralData) -> Representation:
    """D_p = G(2, p | -1); generator g_i -> x y^(c_i) as a permutation of Z/p."""
    rep = rep_metacyclic(pres, 2, data.p, -1 % data.p, data.colors)
    rep.label = f"dihedral(p={data.p})"
    return rep


# --------------------------------------------------------------- gamma reps

class GammaRep:
    """gamma: Z/n x| A_{p,n} acting on the free Z-module with basis A_{p,n}."""

    def __init__(self, p: int, n: int):
        if gcd(n, p) != 1:
            raise RepresentationError("n and p must be coprime")
        self.p = p
        self.n = n
        self.d, self.comp = apn_field(n, p)
        self.elements = sorted(iproduct(range(p), repeat=self.d))
        self.index = {v: i for i, v in enumerate(self.elements)}
        self.dim = p**self.d

    def t_apply(self, v, j: int = 1):
        out = list(v)
        for _ in range(j % self.n):
            out = [sum(self.comp[i][l] * out[l] for l in range(self.d)) % self.p
                   for i in range(self.d)]
        return tuple(out)

    def image(self, j: int, a) -> Monomial:
        """gamma((j, a)): basis vector e_v -> e_{t^j v + a}."""
        a = tuple(x % self.p for x in a)
        perm = []
        for v in self.elements:
            tv = self.t_apply(v, j)
            target = tuple((x + y) % self.p for x, y in zip(tv, a))
            perm.append(self.index[target])
        return Monomial.permutation(ZZ, tuple(perm))

    def group_elements(self):
        for j in range(self.n):
            for a in self.elements:
                yield (j, a)


def rep_gamma(p: int, n: int) -> GammaRep:
    return GammaRep(p, n)


def rep_gamma_compose(pres: KnotPresentation, n: int, p0: int, assignment) -> Representation:
    """gamma composed with the epimorphism sending meridian i to (1, a_i)."""
    gam = GammaRep(p0, n)
    if len(assignment) != pres.generator_count:
        raise RepresentationError("one A-element per generator required")
    images = {g: gam.image(pres.phi[g], assignment[g]) for g in range(pres.generator_count)}
    rep = Representation(gam.dim, ZZ, images, pres, label=f"gamma(p={p0},n={n})")
    rep.gamma = gam
    return rep


class GammaSummand:
    """One block of the complex splitting of gamma: either the trivial line or
    the n-dimensional block induced from an additive character orbit."""

    def __init__(self, gam: GammaRep, u, dom: CyclotomicField):
        self.gam = gam
        self.u = u  # None for the trivial summand
        self.dom = dom
        self.dim = 1 if u is None else gam.n

    def _chi(self, v):
        """Additive character chi_u(v) = zeta_p^(u . v)."""
        e = sum(x * y for x, y in zip(self.u, v)) % self.gam.p
        return self.dom.zeta(e * (self.dom.m // self.gam.p))

    def image(self, j: int, a) -> Monomial:
        if self.u is None:
            return Monomial.identity(self.dom, 1)
        n = self.gam.n
        # z = 1 block: cyclic shift^j times diag(chi(t^(-i-j) a)); the i+j
        # twist is what makes this a homomorphism for the composition law
        # (j,a)(j',a') = (j+j', a + t^j a') used by the epimorphism solver
        shift = Monomial(tuple((i + j) % n for i in range(n)), (self.dom.one(),) * n)
        scales = tuple(self._chi(self.gam.t_apply(a, (-i - j) % n)) for i in range(n))
        diag = Monomial(tuple(range(n)), scales)
        return shift.mul(diag, self.dom)


def gamma_summands(p: int, n: int):
    """gamma_0, gamma_1, ..., gamma_l over CYC(p); needs phi_n irreducible mod p."""
    if not is_cyclotomic_irreducible_mod_p(n, p):
        raise RepresentationError(f"phi_{n} is reducible mod {p}; the Z/{n}-action "
                                  "on characters need not be free")
    gam = GammaRep(p, n)
    dom = CYC(p)
    # orbits of the dual t-action on nonzero additive characters u
    # (u . t v) = (T^t u . v): dual action is the transpose companion matrix
    d = gam.d
    tt = [[gam.comp[j][i] for j in range(d)] for i in range(d)]

    def dual_t(u):
        return tuple(sum(tt[i][l] * u[l] for l in range(d)) % p for i in range(d))

    seen = set()
    reps = []
    for u in sorted(iproduct(range(p), repeat=d)):
        if all(x == 0 for x in u) or u in seen:
            continue
        orbit = []
        v = u
        for _ in range(n):
            orbit.append(v)
            v = dual_t(v)
        if len(set(orbit)) != n:
            raise RepresentationError("character orbit is not free")
        seen.update(orbit)
        reps.append(u)
    out = [GammaSummand(gam, None, dom)]
    out.extend(GammaSummand(gam, u, dom) for u in reps)
    return out


def summand_compose(pres: KnotPresentation, summand: GammaSummand, assignment) -> Representation:
    images = {
        g: summand.image(pres.phi[g], assignment[g]) for g in range(pres.generator_count)
    }
    return Representation(summand.dim, summand.dom, images, pres,
                          label=f"gamma_summand(p={summand.gam.p},n={summand.gam.n})")


# --------------------------------------------------------- metabelian blocks

# The h-classes of Wirtinger generators are read off from the Alexander-module
# presentation with the base meridian's column deleted; conjugation by the
# base meridian acts as multiplication by t on that module.  (Both t and t^-1
# conventions define the same representation theory; this one passes the
# relator check, which pins it.)

def default_sl_z(n: int, dom: CyclotomicField):
    """A deterministic z with z^n = (-1)^(n+1): zeta_2n for even n, 1 for odd."""
    if n % 2 == 0:
        return dom.zeta(dom.m // (2 * n))
    return dom.one()


def rep_metabelian(pres: KnotPresentation, n: int, chi: Character, z=None,
                   dom: CyclotomicField | None = None) -> Representation:
    """The block representation from a character chi of H/(t^n - 1).

    Meridian g_j maps to the z-cycle block times diag(chi(t^l h_j)) where h_j
    is the class of g_j relative to the base meridian.
    """
    if not pres.is_wirtinger_like():
        raise RepresentationError("metabelian lift needs all phi = 1")
    if n % chi.period:
        raise RepresentationError(
            f"character of period {chi.period} does not factor through H/(t^{n}-1)")
    m_chi = chi.modulus
    if dom is None:
        m_dom = lcm(m_chi, 2 * n if n % 2 == 0 else 1)
        dom = CYC(m_dom)
    if z is None:
        z = default_sl_z(n, dom)
    z = dom.coerce(z) if isinstance(z, (int, Fraction)) else z
    if dom.is_zero(z):
        raise RepresentationError("z must be nonzero")
    base = chi.components[0].quotient
    mp_rank = base.rank
    deleted = pres_deleted_column(pres)
    shift_perm = tuple((i + 1) % n for i in range(n))
    images = {}
    for g in range(pres.generator_count):
        if g == deleted:
            scales = tuple(dom.one() for _ in range(n))
        else:
            j = g - 1 if g > deleted else g
            vals = []
            for l in range(n):
                # diag entry l is chi(t^-l h); with the forward z-cycle block
                # this composes by (1,h)(1,h') = (2, h + t(h'-...)+...) exactly
                # matching h_k = h_i + t(h_j - h_i) from Wirtinger relators
                v = chi.value_basis(j, -l)
                vals.append(dom.embed(v, CYC(m_chi)) if dom.m != m_chi else v)
            scales = tuple(vals)
        zblock = Monomial(shift_perm, (z,) * n)
        diag = Monomial(tuple(range(n)), scales)
        images[g] = zblock.mul(diag, dom)
    label = f"metabelian(n={n})"
    return Representation(n, dom, images, pres, label=label)


def pres_deleted_column(pres: KnotPresentation) -> int:
    return next(i for i, v in enumerate(pres.phi) if v != 0)


def is_irreducible_metabelian(chi: Character, n: int, rank: int) -> bool:
    """alpha_(n,chi) is irreducible iff chi, t chi, ..., t^(n-1) chi are distinct."""
    return chi.orbit_size(rank) == n


def tensor_metabelian_identity(pres: KnotPresentation, k1: int, chi1: Character,
                               k2: int, chi2: Character) -> bool:
    """The coprime tensor identity as an exact matrix statement.

    The basis f_i = e_(i mod k1) (x) e_(i mod k2) conjugates the tensor of the
    two block representations into the k1*k2 block representation of the
    product character, entrywise.
    """
    if gcd(k1, k2) != 1:
        raise RepresentationError("tensor identity needs coprime block sizes")
    a1 = rep_metabelian(pres, k1, chi1)
    a2 = rep_metabelian(pres, k2, chi2)
    a12 = rep_tensor(a1, a2)
    dom = a12.dom
    z1 = convert(default_sl_z(k1, a1.dom), a1.dom, dom) if isinstance(a1.dom, CyclotomicField) \
        else dom.coerce(1)
    z2 = convert(default_sl_z(k2, a2.dom), a2.dom, dom) if isinstance(a2.dom, CyclotomicField) \
        else dom.coerce(1)
    z12 = dom.mul(z1, z2)
    chi12 = chi1.mul(chi2)
    a6 = rep_metabelian(pres, k1 * k2, chi12, z=z12, dom=dom)
    n = k1 * k2
    q = Monomial(tuple((i % k1) * k2 + (i % k2) for i in range(n)), (dom.one(),) * n)
    qinv = q.inv(dom)
    for g in range(pres.generator_count):
        lhs = qinv.mul(as_monomial(dom, a12.images[g]), dom).mul(q, dom)
        rhs = as_monomial(dom, a6.images[g])
        if lhs.perm != rhs.perm or any(
            not dom.eq(x, y) for x, y in zip(lhs.scales, rhs.scales)
        ):
            return False
    return True


# ------------------------------------------------------------- combinators

def rep_tensor(a: Representation, b: Representation) -> Representation:
    if a.pres is not b.pres:
        raise RepresentationError("tensor factors must share a presentation")
    dom = domain_join(a.dom, b.dom)
    aa = a if a.dom is dom else a.convert_domain(dom)
    bb = b if b.dom is dom else b.convert_domain(dom)
    images = {}
    for g in aa.images:
        x, y = aa.images[g], bb.images[g]
        if isinstance(x, Monomial) and isinstance(y, Monomial):
            images[g] = x.kron(y, dom)
        else:
            from .matrix import kron

            images[g] = kron(dom, to_dense(dom, x), to_dense(dom, y))
    return Representation(a.dim * b.dim, dom, images, a.pres,
                          label=f"tensor({a.label},{b.label})")


def rep_direct_sum(a: Representation, b: Representation) -> Representation:
    if a.pres is not b.pres:
        raise RepresentationError("summands must share a presentation")
    dom = domain_join(a.dom, b.dom)
    aa = a if a.dom is dom else a.convert_domain(dom)
    bb = b if b.dom is dom else b.convert_domain(dom)
    images = {}
    for g in aa.images:
        x, y = aa.images[g], bb.images[g]
        if isinstance(x, Monomial) and isinstance(y, Monomial):
            images[g] = x.direct_sum(y, dom)
        else:
            from .matrix import direct_sum

            images[g] = direct_sum(dom, to_dense(dom, x), to_dense(dom, y))
    return Representation(a.dim + b.dim, dom, images, a.pres,
                          label=f"sum({a.label},{b.label})")


def rep_mod_p(a: Representation, p: int) -> Representation:
    if a.dom.name != "ZZ":
        raise RepresentationError("mod-p reduction needs integer entries")
    dom = GF(p)
    images = {}
    for g, img in a.images.items():
        if isinstance(img, Monomial):
            images[g] = Monomial(img.perm, tuple(s % p for s in img.scales))
        else:
            images[g] = tuple(tuple(x % p for x in row) for row in img)
    return Representation(a.dim, dom, images, a.pres, label=f"modp({a.label},{p})")


# ------------------------------------------------- Vandermonde triangle form

def vandermonde_basis(p: int) -> Dense:
    """Basis v_i = sum_k k^i s^k of F_p[s]/(s^p - 1), as the matrix with
    columns v_i in the s-power basis.  Convention: 0^0 = 1, which is what
    makes (k^i) a Vandermonde matrix and the triangular form below work."""
    _check_odd_prime(p)
    dom = GF(p)
    return tuple(
        tuple(pow(k, i, p) if (k, i) != (0, 0) else 1 for i in range(p))
        for k in range(p)
    )


def dihedral_xy_on_vp(p: int):
    """x, y of D_p acting on F_p[s]/(s^p-1): x: s^k -> s^(-k), y: s^k -> s^(k+1)."""
    dom = GF(p)
    x = Monomial.permutation(dom, tuple((-k) % p for k in range(p)))
    y = Monomial.permutation(dom, tuple((k + 1) % p for k in range(p)))
    return x, y


def triangular_form(p: int):
    """Images of x and y in the v-basis: diag((-1)^i) and the unipotent
    upper-triangular matrix with entries binom(i,j)(-1)^(i-j)."""
    _check_odd_prime(p)
    dom = GF(p)
    b = vandermonde_basis(p)
    binv = gen_inv(dom, b)
    x, y = dihedral_xy_on_vp(p)
    xv = mat_mul(dom, mat_mul(dom, binv, x.to_dense(dom)), b)
    yv = mat_mul(dom, mat_mul(dom, binv, y.to_dense(dom)), b)
    return xv, yv, b


def triangular_form_expected(p: int):
    dom = GF(p)
    x = tuple(
        tuple((pow(-1, i, p) if i == j else 0) for j in range(p)) for i in range(p)
    )
    y = tuple(
        tuple(comb(j, i) * pow(-1, j - i, p) % p if i <= j else 0 for j in range(p))
        for i in range(p)
    )
    return x, y


def _check_odd_prime(p: int):
    GF(p)
    if p == 2:
        raise ValueError("p must be an odd prime")


# ------------------------------------------------------------ spec strings

def parse_rep_spec(spec: str, pres: KnotPresentation) -> Representation:
    """Parse CLI representation spec strings.

    Grammar: trivial | onedim:z=Z | dihedral:p=P:colors=c0,c1,... |
    metacyclic:m=M:p=P:k=K:colors=... | gamma:p=P:n=N[:a=...] |
    metabelian:n=N:m=M:chi=I[:z=Z] | tensor(A,B) | sum(A,B) | modp(A,P)
    """
    spec = spec.strip()
    for comb_name in ("tensor", "sum", "modp"):
        if spec.startswith(comb_name + "(") and spec.endswith(")"):
            inner = spec[len(comb_name) + 1 : -1]
            parts = _split_top_level(inner)
            if comb_name == "modp":
                return rep_mod_p(parse_rep_spec(",".join(parts[:-1]), pres), int(parts[-1]))
            # inner specs may themselves contain commas (colors lists); try
            # every top-level split point until both halves parse
            combine = rep_tensor if comb_name == "tensor" else rep_direct_sum
            last_err = None
            for i in range(1, len(parts)):
                left = ",".join(parts[:i])
                right = ",".join(parts[i:])
                try:
                    return combine(parse_rep_spec(left, pres), parse_rep_spec(right, pres))
                except (RepresentationError, ValueError, KeyError) as exc:
                    last_err = exc
            raise RepresentationError(f"cannot split combinator arguments in {spec!r}") \
                from last_err
    fields = spec.split(":")
    kind = fields[0]
    kv = {}
    for f in fields[1:]:
        key, _, val = f.partition("=")
        kv[key] = val
    if kind == "trivial":
        return rep_trivial(pres)
    if kind == "onedim":
        z, dom = _parse_scalar(kv.get("z", "1"))
        return rep_onedim(pres, z, dom)
    if kind == "dihedral":
        p = int(kv["p"])
        colors = tuple(int(c) for c in kv["colors"].split(","))
        return rep_dihedral(pres, DihedralData(p, colors))
    if kind == "metacyclic":
        return rep_metacyclic(pres, int(kv["m"]), int(kv["p"]), int(kv["k"]),
                              tuple(int(c) for c in kv["colors"].split(",")))
    if kind == "gamma":
        p0, n = int(kv["p"]), int(kv["n"])
        if "a" in kv:
            d, _ = apn_field(n, p0)
            assignment = tuple(
                tuple(int(x) for x in part.split(".")) for part in kv["a"].split(",")
            )
        else:
            from .metabelian import find_zn_apn_epis

            epis = find_zn_apn_epis(pres, n, p0)
            if not epis:
                raise RepresentationError(f"no epimorphism onto Z/{n} x| A_{{{p0},{n}}}")
            assignment = epis[0]
        return rep_gamma_compose(pres, n, p0, assignment)
    if kind == "metabelian":
        n = int(kv["n"])
        m = int(kv["m"])
        idx = int(kv.get("chi", "1"))
        q = branched_cover_homology(pres, n)
        chars = characters_of_quotient(q, m)
        if idx >= len(chars):
            raise RepresentationError(f"chi index {idx} out of range ({len(chars)} characters)")
        z = None
        if "z" in kv:
            zval, zdom = _parse_scalar(kv["z"])
            mchi = chars[idx].modulus
            dom = CYC(lcm(mchi, zdom.m if isinstance(zdom, CyclotomicField) else 1))
            z = convert(zval, zdom, dom) if isinstance(zdom, CyclotomicField) else dom.coerce(zval)
            return rep_metabelian(pres, n, chars[idx], z, dom)
        return rep_metabelian(pres, n, chars[idx])
    raise RepresentationError(f"unknown representation spec {spec!r}")


def _split_top_level(s: str):
    parts = []
    depth = 0
    cur = []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _parse_scalar(text: str):
    """Parse scalar tokens: integers, fractions, i, z<m>^<k> roots of unity."""
    t = text.strip()
    if t == "i":
        return CYC(4).zeta(1), CYC(4)
    if t == "-i":
        return CYC(4).zeta(3), CYC(4)
    if t.startswith("z") or t.startswith("zeta"):
        body = t[4:] if t.startswith("zeta") else t[1:]
        body = body.lstrip("_")
        if "^" in body:
            mtext, _, ktext = body.partition("^")
            m, k = int(mtext), int(ktext)
        else:
            m, k = int(body), 1
        return CYC(m).zeta(k), CYC(m)
    if "/" in t:
        return Fraction(t), QQ
    return int(t), ZZ


def rep_spec_of_coloring(d: DihedralData) -> str:
    return f"dihedral:p={d.p}:colors=" + ",".join(str(c) for c in d.colors)
