"""Alexander module, branched cyclic cover quotients, characters, and
epimorphism searches onto D_p, G(m,p|k) and Z/n x| A_{p,n}.

The module H = H_1 of the infinite cyclic cover is presented by the
abelianized Fox matrix with the base meridian's column deleted; for a
presentation with all phi = 1 the j-th basis vector of that presentation is
exactly the class of g_j g_0^{-1}.  Finite quotients H/(t^k - 1) are integer
cokernels of the companion blow-up and carry the t-action with them, which is
what characters and orbit values are read from.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import gcd, lcm

from . import words
from .cyclo import CYC, cyclotomic_polynomial
from .domains import GF, ZZ
from .fox import alexander_fox_matrix
from .laurent import LaurentPoly
from .polydet import det_poly_matrix
from .presentation import KnotPresentation, PresentationError
from .snf import AbelianGroupStructure, cokernel_structure, resultant

_ENUM_CAP = 500_000


# ------------------------------------------------------------ module objects

@dataclass(frozen=True)
class ModulePresentation:
    """Square presentation matrix of H over Z[t^±1]."""

    matrix: tuple  # tuple of tuples of LaurentPoly over ZZ
    pres: KnotPresentation | None = None
    deleted_column: int = 0

    @property
    def rank(self) -> int:
        return len(self.matrix)


@dataclass(frozen=True)
class SeifertData:
    v: tuple  # 2g x 2g integer Seifert matrix, as tuple of row tuples

    def __post_init__(self):
        n = len(self.v)
        if any(len(row) != n for row in self.v):
            raise ValueError("Seifert matrix must be square")

    @property
    def genus2(self) -> int:
        return len(self.v)

    def det(self) -> int:
        from .snf import det_int

        return det_int([list(r) for r in self.v])

    def monodromy(self):
        """M = V^-1 V^t; only available when V is unimodular over Z."""
        d = self.det()
        if d == 0:
            raise ValueError("Seifert matrix is singular")
        if abs(d) != 1:
            raise ValueError(
                "monodromy route needs a unimodular Seifert matrix; "
                "use the module presentation route instead"
            )
        n = self.genus2
        from .matrix import mat_inverse, mat_mul
        from .domains import QQ

        vq = tuple(tuple(Fraction(x) for x in row) for row in self.v)
        inv = mat_inverse(QQ, vq)
        vt = tuple(tuple(Fraction(self.v[j][i]) for j in range(n)) for i in range(n))
        m = mat_mul(QQ, inv, vt)
        return [[int(x) for x in row] for row in m]

    def module_presentation(self) -> ModulePresentation:
        """H is presented by tV - V^t for any Seifert matrix V."""
        n = self.genus2
        rows = tuple(
            tuple(
                LaurentPoly(ZZ, {1: self.v[i][j], 0: -self.v[j][i]})
                for j in range(n)
            )
            for i in range(n)
        )
        return ModulePresentation(rows)

    def alexander_polynomial(self) -> LaurentPoly:
        return alexander_polynomial(self.module_presentation())


def parse_seifert_file(text: str) -> SeifertData:
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(tuple(int(x) for x in line.split()))
    return SeifertData(tuple(rows))


def _abelianized_deleted_matrix(pres: KnotPresentation, base: int):
    fox = alexander_fox_matrix(pres)
    rows = []
    for r in fox:
        row = []
        for j, entry in enumerate(r):
            if j == base:
                continue
            c: dict[int, int] = {}
            for w, coeff in entry.terms.items():
                e = pres.word_phi(w)
                c[e] = c.get(e, 0) + coeff
            row.append(LaurentPoly(ZZ, c))
        rows.append(tuple(row))
    return tuple(rows)


def alexander_module(pres: KnotPresentation) -> ModulePresentation:
    """Delete a meridional generator's column from the abelianized Fox matrix.

    The cokernel presents H only when the deleted generator has phi = ±1 (the
    remaining basis vectors are then the classes g_j g_base^(-phi_j)); a
    presentation without a meridional generator has no module route here.
    """
    base = next((i for i, v in enumerate(pres.phi) if v == 1), None)
    if base is None:
        base = next((i for i, v in enumerate(pres.phi) if v == -1), None)
    if base is None:
        if pres.generator_count == 1:
            base = 0
        else:
            raise PresentationError(
                "module presentation needs a generator with phi = ±1")
    return ModulePresentation(_abelianized_deleted_matrix(pres, base), pres, base)


def alexander_polynomial(src) -> LaurentPoly:
    """Delta_K normalized to lowest exponent 0 and positive lowest coefficient.

    For a presentation, any column with phi = e != 0 serves: the deleted
    determinant is Delta * (t^e - 1)/(t - 1) up to units, and the cyclotomic
    cofactor 1 + t + ... + t^(e-1) is divided back out.
    """
    if isinstance(src, KnotPresentation):
        base = next((i for i, v in enumerate(src.phi) if abs(v) == 1), None)
        if base is not None or src.generator_count == 1:
            src = alexander_module(src)
        else:
            e = next((v for v in src.phi if v != 0), None)
            if e is None:
                raise PresentationError("no generator with phi != 0")
            col = src.phi.index(e)
            d = det_poly_matrix(
                [list(r) for r in _abelianized_deleted_matrix(src, col)], ZZ)
            d = normalize_integer_poly(d)
            cofactor = LaurentPoly(ZZ, {j: 1 for j in range(abs(e))})
            return normalize_integer_poly(d.exact_div(cofactor))
    if isinstance(src, SeifertData):
        src = src.module_presentation()
    d = det_poly_matrix([list(r) for r in src.matrix], ZZ)
    return normalize_integer_poly(d)


def normalize_integer_poly(f: LaurentPoly) -> LaurentPoly:
    if f.is_zero():
        return f
    f = f.shift(-f.low())
    if f.c[0] < 0:
        f = -f
    return f


# --------------------------------------------------------- finite quotients

@dataclass(frozen=True)
class FiniteQuotientModule:
    """H/(t^k - 1) as an integer cokernel plus the t-action on the ambient."""

    k: int
    structure: AbelianGroupStructure
    U: tuple          # SNF transform rows (ambient -> SNF coordinates)
    diag: tuple       # all diagonal entries of the SNF (1s and 0s included)
    taction: tuple    # ambient t-action matrix
    rank: int         # generator count of the source presentation
    source: str = "module"

    @property
    def ambient_dim(self) -> int:
        return len(self.U)

    def basis_vector(self, j: int, level: int = 0):
        v = [0] * self.ambient_dim
        if self.source == "module":
            v[j * self.k + (level % self.k)] = 1
        else:
            v[j] = 1
        return v

    def t_apply(self, vec, power: int = 1):
        v = list(vec)
        for _ in range(power % self.k):
            v = [sum(r * x for r, x in zip(row, v)) for row in self.taction]
        return v

    def snf_coords(self, vec):
        return [sum(r * x for r, x in zip(row, vec)) for row in self.U]


def _companion_blowup(mp: ModulePresentation, k: int):
    """Replace t by the k x k cyclic-shift matrix in the presentation matrix.

    The ambient lattice is generator space (basis v_j tensor t^l); column
    (i, l) is the relation t^l * rho_i expressed in that basis, so the integer
    cokernel of the column span is H/(t^k - 1) with usable coordinates.
    """
    r = mp.rank
    n = r * k
    out = [[0] * n for _ in range(n)]
    for i in range(r):
        for j in range(r):
            f = mp.matrix[i][j]
            for e, v in f.c.items():
                for l in range(k):
                    # t^(l+e) v_j coefficient of the column t^l rho_i
                    out[j * k + (l + e) % k][i * k + l] += v
    return out


def branched_cover_homology(src, k: int) -> FiniteQuotientModule:
    """H/(t^k - 1) with its abelian-group structure and t-action.

    Module route: companion blow-up of the presentation matrix, integer
    cokernel via Smith normal form.  Monodromy route (SeifertData with
    unimodular V): cokernel of id - M^k with M = V^-1 V^t.
    """
    if k < 1:
        raise ValueError("cover degree must be >= 1")
    if isinstance(src, KnotPresentation):
        src = alexander_module(src)
    if isinstance(src, SeifertData):
        m = src.monodromy()
        n = len(m)
        mk = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(k):
            mk = [[sum(mk[i][l] * m[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        a = [[(1 if i == j else 0) - mk[i][j] for j in range(n)] for i in range(n)]
        structure, U, diag = cokernel_structure(a)
        return FiniteQuotientModule(
            k, structure, tuple(tuple(r) for r in U), tuple(diag),
            tuple(tuple(r) for r in m), n, source="monodromy",
        )
    blow = _companion_blowup(src, k)
    structure, U, diag = cokernel_structure(blow)
    r = src.rank
    n = r * k
    t = [[0] * n for _ in range(n)]
    for j in range(r):
        for l in range(k):
            t[j * k + (l + 1) % k][j * k + l] = 1
    return FiniteQuotientModule(
        k, structure, tuple(tuple(row) for row in U), tuple(diag),
        tuple(tuple(row) for row in t), r, source="module",
    )


def order_from_alexander(delta: LaurentPoly, k: int) -> int:
    """|H/(t^k - 1)| = |Res(Delta, t^k - 1)|; 0 signals an infinite quotient."""
    f = delta.shift(-delta.low())
    coeffs, _ = f.coeff_list()
    tk = [-1] + [0] * (k - 1) + [1]
    return abs(resultant(coeffs, tk))


# ----------------------------------------------------------------- characters

@dataclass(frozen=True)
class CharComponent:
    quotient: FiniteQuotientModule
    zeta_exponents: tuple[int, ...]  # per SNF coordinate, exponent of zeta_m
    m: int

    def exponent_on(self, vec) -> int:
        coords = self.quotient.snf_coords(vec)
        return sum(c * e for c, e in zip(coords, self.zeta_exponents)) % self.m


@dataclass(frozen=True)
class Character:
    """Character on H factoring through finite quotients H/(t^k - 1).

    A product of components; each component evaluates through its own
    quotient.  Values are exact roots of unity in CYC(order lcm).
    """

    components: tuple[CharComponent, ...]

    @property
    def modulus(self) -> int:
        return lcm(*(c.m for c in self.components)) if self.components else 1

    @property
    def period(self) -> int:
        return lcm(*(c.quotient.k for c in self.components)) if self.components else 1

    def value_basis(self, j: int, shift: int = 0):
        """chi(t^shift v_j) in CYC(modulus)."""
        m = self.modulus
        F = CYC(m)
        e = 0
        for comp in self.components:
            vec = comp.quotient.basis_vector(j)
            vec = comp.quotient.t_apply(vec, shift)
            e += (m // comp.m) * comp.exponent_on(vec)
        return F.zeta(e % m)

    def mul(self, other: "Character") -> "Character":
        return Character(self.components + other.components)

    def is_trivial(self) -> bool:
        return all(all(e % c.m == 0 for e in c.zeta_exponents) for c in self.components)

    def table(self, rank: int, period: int | None = None):
        """Values chi(t^s v_j) as a tuple of tuples; the comparison key."""
        n = period or self.period
        return tuple(
            tuple(self.value_basis(j, s) for s in range(n)) for j in range(rank)
        )

    def t_shift(self, power: int = 1) -> "Character":
        """The character h -> chi(t^power h)."""
        return _ShiftedCharacter(self, power)

    def orbit_size(self, rank: int) -> int:
        base = self.table(rank)
        n = self.period
        for s in range(1, n + 1):
            if n % s:
                continue
            shifted = tuple(
                tuple(self.value_basis(j, t + s) for t in range(n)) for j in range(rank)
            )
            if shifted == base:
                return s
        return n


class _ShiftedCharacter(Character):
    def __init__(self, base: Character, power: int):
        object.__setattr__(self, "components", base.components)
        object.__setattr__(self, "_base", base)
        object.__setattr__(self, "_power", power)

    def value_basis(self, j: int, shift: int = 0):
        return self._base.value_basis(j, shift + self._power)


def characters_of_quotient(q: FiniteQuotientModule, m: int):
    """All homomorphisms from the finite quotient to mu_m, trivial included."""
    if m < 1:
        raise ValueError("target order must be >= 1")
    if q.structure.free_rank:
        raise ValueError("quotient is infinite; characters to mu_m not enumerable")
    choices = []
    for d in q.diag:
        if d in (0, 1):
            choices.append((0,))
        else:
            g = gcd(m, d)
            choices.append(tuple(j * (m // g) for j in range(g)))
    out = []
    for exps in iproduct(*choices):
        out.append(Character((CharComponent(q, tuple(exps), m),)))
    return out


def monodromy_orbit_values(s: SeifertData, e, n: int, chi: Character):
    """(chi(e), chi(Me), ..., chi(M^{n-1} e)) as exact CYC values.

    chi must be a character of a quotient built from the same Seifert data by
    the monodromy route; e is an ambient integer vector.
    """
    comp = chi.components[0]
    q = comp.quotient
    if q.source != "monodromy" or q.k != n:
        raise ValueError("character does not live on the degree-n monodromy quotient")
    if len(e) != q.ambient_dim:
        raise ValueError("class vector has the wrong dimension")
    m = chi.modulus
    F = CYC(m)
    out = []
    vec = list(e)
    for _ in range(n):
        ex = 0
        for c in chi.components:
            ex += (m // c.m) * c.exponent_on(vec)
        out.append(F.zeta(ex % m))
        vec = q.t_apply(vec)
    return out


# -------------------------------------------------------------- epi searches

@dataclass(frozen=True)
class DihedralData:
    """A nontrivial p-coloring: generator i gets x*y^(colors[i]) in D_p."""

    p: int
    colors: tuple[int, ...]


def _require_wirtinger(pres: KnotPresentation):
    if not pres.is_wirtinger_like():
        raise PresentationError(
            "epimorphism search needs a Wirtinger-like presentation (all phi = 1)"
        )


def _nullspace_gf(rows, p: int, nvars: int):
    """Nullspace basis of a system over GF(p) given as coefficient rows."""
    a = [[x % p for x in row] for row in rows]
    pivots = {}
    r = 0
    for c in range(nvars):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots[c] = r
        r += 1
    basis = []
    for fc in (c for c in range(nvars) if c not in pivots):
        v = [0] * nvars
        v[fc] = 1
        for c, row in pivots.items():
            v[c] = (-a[row][fc]) % p
        basis.append(v)
    return basis


def _enumerate_span(basis, p: int):
    dim = len(basis)
    if p**dim > _ENUM_CAP:
        raise ValueError("coloring solution space too large to enumerate")
    for combo in iproduct(range(p), repeat=dim):
        v = [0] * len(basis[0]) if basis else []
        for c, b in zip(combo, basis):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, b)]
        yield v


def find_dihedral_epis(pres: KnotPresentation, p0: int) -> list[DihedralData]:
    """All nontrivial p0-colorings up to translation and scaling.

    A relator, flattened to letters s_1 ... s_2m (signs are irrelevant since
    reflections are involutions), imposes sum_j (-1)^j c(s_j) = 0 mod p0.
    """
    _require_wirtinger(pres)
    if p0 < 3 or p0 % 2 == 0:
        raise ValueError("p0 must be an odd prime")
    GF(p0)  # validates primality
    n = pres.generator_count
    rows = []
    for r in pres.relators:
        row = [0] * n
        for pos, (g, _sign) in enumerate(words.letters(r)):
            row[g] += -1 if pos % 2 == 0 else 1
        rows.append(row)
    basis = _nullspace_gf(rows, p0, n)
    seen = set()
    out = []
    for v in _enumerate_span(basis, p0):
        if len(set(v)) <= 1:
            continue  # constant = not surjective
        norm = _normalize_coloring(v, p0)
        if norm not in seen:
            seen.add(norm)
            out.append(DihedralData(p0, norm))
    out.sort(key=lambda d: d.colors)
    return out


def _normalize_coloring(v, p: int):
    base = v[0]
    shifted = [(x - base) % p for x in v]
    first = next(x for x in shifted if x)
    inv = pow(first, -1, p)
    return tuple(x * inv % p for x in shifted)


def find_metacyclic_epis(pres: KnotPresentation, m: int, p0: int, k: int):
    """Meridian assignments g_i -> x y^(c_i) in G(m, p0 | k), up to symmetry.

    Words evaluate through the normal form x^e y^c with
    (e, c) * (e', c') = (e + e', c k^(-e') + c'); relators give F_p0-linear
    conditions on the colors.
    """
    _require_wirtinger(pres)
    if pow(k, m, p0) != 1 or any(pow(k, l, p0) == 1 for l in range(1, m)):
        raise ValueError(f"{k} is not a primitive {m}-th root of unity mod {p0}")
    n = pres.generator_count
    kinv = pow(k, -1, p0)
    rows = []
    for r in pres.relators:
        coeff = [0] * n  # accumulated linear form
        exp = 0
        for g, sign in words.letters(r):
            if sign > 0:
                # (exp, L) * (1, c_g): L*k^-1 + c_g
                coeff = [c * kinv % p0 for c in coeff]
                coeff[g] = (coeff[g] + 1) % p0
                exp += 1
            else:
                # inverse of (1, c_g) is (-1, -c_g * k)
                coeff = [c * k % p0 for c in coeff]
                coeff[g] = (coeff[g] - k) % p0
                exp -= 1
        if exp % m:
            raise PresentationError("relator not balanced in the cyclic part")
        rows.append(coeff)
    basis = _nullspace_gf(rows, p0, n)
    seen = set()
    out = []
    for v in _enumerate_span(basis, p0):
        if len(set(v)) <= 1:
            continue
        norm = _normalize_coloring(v, p0)
        if norm not in seen:
            seen.add(norm)
            out.append(norm)
    return sorted(out)


def apn_field(n: int, p0: int):
    """A_{p0,n} = F_p0[t]/(phi_n) as (degree, companion matrix columns)."""
    if gcd(n, p0) != 1:
        raise ValueError("n and p0 must be coprime")
    phi = cyclotomic_polynomial(n)
    coeffs, _ = phi.coeff_list()
    cm = [c % p0 for c in coeffs]
    d = len(cm) - 1
    # companion matrix of phi_n mod p0: t * e_i = e_{i+1}, t*e_{d-1} = -phi tail
    comp = [[0] * d for _ in range(d)]
    for i in range(d - 1):
        comp[i + 1][i] = 1
    for i in range(d):
        comp[i][d - 1] = (-cm[i]) % p0
    return d, comp


def _apn_mul_matrix(poly_class, comp, p0):
    """Multiplication-by-a matrix on A for a = sum poly_class[e] * t^e."""
    d = len(comp)
    # columns: a * e_j
    cols = []
    for j in range(d):
        v = [0] * d
        v[j] = 1
        acc = [0] * d
        cur = v
        for e in range(len(poly_class)):
            c = poly_class[e]
            if c:
                acc = [(x + c * y) % p0 for x, y in zip(acc, cur)]
            cur = [sum(comp[i][l] * cur[l] for l in range(d)) % p0 for i in range(d)]
        cols.append(acc)
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def find_zn_apn_epis(pres: KnotPresentation, n: int, p0: int):
    """Epimorphisms onto Z/n x| A_{p0,n} with meridians mapping to (1, a_i).

    Composition law (j, a)(j', a') = (j + j', a + t^j a'); each relator yields
    an A-linear condition sum_i L_i a_i = 0, solved as a GF(p0) system on the
    coordinate vectors of the a_i.
    """
    _require_wirtinger(pres)
    if n < 2:
        raise ValueError("n must be >= 2")
    d, comp = apn_field(n, p0)
    ng = pres.generator_count
    nvars = d * ng
    # t^e as matrices, e in a window large enough for the relator sweeps
    rows = []
    for r in pres.relators:
        # L: per generator, a polynomial class in t (dict exp -> count)
        L = [dict() for _ in range(ng)]
        j = 0
        for g, sign in words.letters(r):
            if sign > 0:
                L[g][j] = L[g].get(j, 0) + 1
                j += 1
            else:
                j -= 1
                L[g][j] = L[g].get(j, 0) - 1
        if j != 0:
            raise PresentationError("relator not phi-balanced")
        # expand to d rows over GF(p0); t^e for negative e uses e mod n
        blocks = []
        for i in range(ng):
            if not L[i]:
                blocks.append(None)
                continue
            cls = [0] * n
            for e, c in L[i].items():
                cls[e % n] = (cls[e % n] + c) % p0
            blocks.append(_apn_mul_matrix(cls, comp, p0))
        for rr in range(d):
            row = [0] * nvars
            for i in range(ng):
                if blocks[i] is None:
                    continue
                for cc in range(d):
                    row[i * d + cc] = blocks[i][rr][cc]
            rows.append(row)
    basis = _nullspace_gf(rows, p0, nvars)
    seen = set()
    out = []
    for v in _enumerate_span(basis, p0):
        ais = [tuple(v[i * d : (i + 1) * d]) for i in range(ng)]
        if len(set(ais)) <= 1:
            continue  # A-part not generated
        norm = _normalize_apn(ais, d, comp, n, p0)
        if norm not in seen:
            seen.add(norm)
            out.append(norm)
    return sorted(out)


def _normalize_apn(ais, d, comp, n, p0):
    """Translate so a_0 = 0 (conjugation by (0,c) adds (1-t)c to every a_i,
    and 1-t is invertible on A for n >= 2 coprime to p0, so subtracting a_0 is
    realizable) and scale by units of A to a lex-min representative."""
    moved = [tuple((x - y) % p0 for x, y in zip(a, ais[0])) for a in ais]
    best = None
    for u in iproduct(range(p0), repeat=d):
        if all(x == 0 for x in u):
            continue
        mu = _apn_mul_matrix(list(u), comp, p0)
        if _matrank_gf(mu, p0) != d:
            continue
        cand = tuple(
            tuple(sum(mu[i][j] * a[j] for j in range(d)) % p0 for i in range(d))
            for a in moved
        )
        if best is None or cand < best:
            best = cand
    return best


def _matinv_gf(m, p):
    n = len(m)
    a = [row[:] + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] % p), None)
        if piv is None:
            raise ValueError("matrix not invertible mod p")
        a[c], a[piv] = a[piv], a[c]
        inv = pow(a[c][c], -1, p)
        a[c] = [x * inv % p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] % p:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def _matrank_gf(m, p):
    a = [[x % p for x in row] for row in m]
    rank = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank
