"""Univariate polynomials over an exact field context.

A Poly is an immutable coefficient tuple (constant term first) over one
FieldCtx.  The module provides the arithmetic the rest of the package
leans on: gcd/xgcd, modular composition, CRT, squarefree decomposition,
full factorization over Q and over finite fields (including extension
towers over F_p), and root-finding inside a named extension.

Factorization routes:
  * finite fields: squarefree split (with p-th root descent), then
    distinct-degree via gcd(x^(q^k) - x, f), then equal-degree splitting
    (quadratic-residue test for odd q, trace polynomials for q = 2^e);
  * rationals: Yun squarefree split, then per part a Zassenhaus round --
    factor modulo a good prime, Hensel-lift past the Landau-Mignotte
    bound, recombine subsets by trial division.  Degree is soft-capped
    at 24.
Root-finding in L = K[x]/(f):
  * finite K: gcd with x^|L| - x followed by degree-1 splitting;
  * K = Q: the norm trick -- an integer shift s with squarefree
    resultant Res_x(f(x), g(y - s x)), factored over Q, mapped back to
    linear factors by gcds over L.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CtxMismatch,
    DivisionByZero,
    NonCoprimeModuli,
    NotAnExtension,
    UnsupportedField,
    ZeroPolynomial,
)
from .exactfield import (
    ExtensionField,
    FieldElem,
    PrimeField,
    RationalField,
    prime_field,
    rationals,
)


class Poly:
    """Dense univariate polynomial over a field context."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        cs = [ctx.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    # -- constructors --

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls(ctx, (1,))

    @classmethod
    def x(cls, ctx):
        return cls(ctx, (0, 1))

    @classmethod
    def constant(cls, ctx, c):
        return cls(ctx, (c,))

    # -- structure --

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def monic(self):
        if self.is_zero():
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        if self.is_monic():
            return self
        inv = self.lc.inverse()
        return Poly(self.ctx, [c * inv for c in self.coeffs])

    def coeff(self, i):
        return self.coeffs[i] if i <= self.degree else self.ctx.zero

    # -- ring operations --

    def _same(self, other):
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise CtxMismatch("polynomials over different fields")
            return other
        try:
            return Poly.constant(self.ctx, other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        other = self._same(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.ctx, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._same(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._same(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElem) and other.ctx == self.ctx:
            return Poly(self.ctx, [c * other for c in self.coeffs])
        other = self._same(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.ctx)
        zero = self.ctx.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        acc = Poly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __divmod__(self, other):
        other = self._same(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(self.ctx), self
        inv = other.lc.inverse()
        r = list(self.coeffs)
        b = other.coeffs
        q = [self.ctx.zero] * (len(r) - len(b) + 1)
        for k in range(len(r) - len(b), -1, -1):
            c = r[k + len(b) - 1] * inv
            if c.is_zero():
                continue
            q[k] = c
            for i, bc in enumerate(b):
                r[k + i] = r[k + i] - c * bc
        return Poly(self.ctx, q), Poly(self.ctx, r[: len(b) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, point):
        """Horner evaluation at a field element."""
        point = self.ctx.coerce(point)
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose(self, inner):
        """self(inner) without reduction."""
        inner = self._same(inner)
        acc = Poly.zero(self.ctx)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(self.ctx, c)
        return acc

    def derivative(self):
        return Poly(self.ctx, [i * c for i, c in enumerate(self.coeffs)][1:])

    # -- comparison and display --

    def __eq__(self, other):
        if isinstance(other, Poly):
            return other.ctx == self.ctx and other.coeffs == self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def key(self):
        """Deterministic sort key: degree, then coefficients from the top."""
        return (self.degree, tuple(c.key() for c in reversed(self.coeffs)))

    def __repr__(self):
        return "Poly(%s)" % self

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
            else:
                xs = "x" if i == 1 else "x^%d" % i
                if c.is_one():
                    parts.append(xs)
                elif cs == "-1":
                    parts.append("-" + xs)
                else:
                    parts.append("%s%s" % (cs if "/" not in cs and " " not in cs else "(%s)" % cs, xs))
        out = parts[0]
        for term in parts[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out


def poly_embed(a, L):
    """Map a polynomial over K into L[x] for an extension L of K."""
    if not isinstance(L, ExtensionField) or L.base != a.ctx:
        raise NotAnExtension("target is not an extension of the coefficient field")
    return Poly(L, [L.embed(c) for c in a.coeffs])


# -- gcd family --


def poly_gcd(a, b):
    """Monic greatest common divisor (zero when both inputs are zero)."""
    if a.ctx != b.ctx:
        raise CtxMismatch("gcd over different fields")
    while not b.is_zero():
        a, b = b, (a % b)
        if not b.is_zero():
            b = b.monic()  # keeps rational coefficients small
    return a if a.is_zero() else a.monic()


def poly_xgcd(a, b):
    """(g, s, t) with s*a + t*b = g, g monic or zero."""
    if a.ctx != b.ctx:
        raise CtxMismatch("xgcd over different fields")
    ctx = a.ctx
    r0, r1 = a, b
    s0, s1 = Poly.one(ctx), Poly.zero(ctx)
    t0, t1 = Poly.zero(ctx), Poly.one(ctx)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = r0.lc.inverse()
    return r0.monic(), s0 * inv, t0 * inv


def poly_lcm(a, b):
    g = poly_gcd(a, b)
    if g.is_zero():
        return g
    return ((a * b) // g).monic()


# -- modular composition, powering, CRT --


def poly_compose_mod(outer, inner, modulus):
    """outer(inner) reduced modulo `modulus`."""
    if outer.ctx != inner.ctx or outer.ctx != modulus.ctx:
        raise CtxMismatch("composition over different fields")
    if modulus.is_zero():
        raise DivisionByZero("composition modulo zero")
    acc = Poly.zero(outer.ctx)
    inner = inner % modulus
    for c in reversed(outer.coeffs):
        acc = (acc * inner + Poly.constant(outer.ctx, c)) % modulus
    return acc


def poly_pow_mod(base, e, modulus):
    """base**e reduced modulo `modulus` (e >= 0)."""
    if e < 0:
        raise ValueError("negative exponent")
    acc = Poly.one(base.ctx) % modulus
    base = base % modulus
    while e:
        if e & 1:
            acc = (acc * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return acc


def poly_crt(residues, moduli):
    """The unique polynomial below the product degree hitting every residue."""
    if len(residues) != len(moduli) or not moduli:
        raise ValueError("need matching nonempty residue/modulus lists")
    acc_r = residues[0] % moduli[0]
    acc_m = moduli[0]
    for r, m in zip(residues[1:], moduli[1:]):
        g, u, v = poly_xgcd(acc_m, m)
        if g.degree != 0:
            raise NonCoprimeModuli("moduli share the factor %s" % g)
        # u*acc_m + v*m = 1
        diff = (r - acc_r) % m
        acc_r = (acc_r + acc_m * ((u * diff) % m)) % (acc_m * m)
        acc_m = acc_m * m
    return acc_r


# -- squarefree decomposition --


def squarefree_decomposition(f):
    """[(g_i, m_i)] with f = lc * prod g_i^m_i, the g_i squarefree coprime monic."""
    if f.is_zero():
        raise ZeroPolynomial("squarefree decomposition of zero")
    f = f.monic()
    if f.degree < 1:
        return []
    if f.ctx.characteristic == 0:
        return _squarefree_char0(f)
    return _squarefree_charp(f)


def squarefree_part(f):
    """Product of the distinct irreducible factors of f, monic."""
    out = Poly.one(f.ctx)
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out


def _squarefree_char0(f):
    d = f.derivative()
    u = poly_gcd(f, d)
    v, w = f // u, d // u
    out, k = [], 1
    while True:
        z = w - v.derivative()
        if z.is_zero():
            if v.degree >= 1:
                out.append((v, k))
            return out
        h = poly_gcd(v, z)
        if h.degree >= 1:
            out.append((h, k))
        v, w = v // h, z // h
        k += 1


def _pth_root_poly(f):
    # every exponent in f is divisible by p; take p-th roots of coefficients
    ctx = f.ctx
    p = ctx.characteristic
    q = ctx.order()
    if q is None:
        raise UnsupportedField("p-th root needs a finite field")
    root_exp = q // p
    out = []
    for i in range(0, f.degree + 1, p):
        out.append(f.coeff(i) ** root_exp)
    return Poly(ctx, out)


def _squarefree_charp(f):
    p = f.ctx.characteristic
    out = []
    d = f.derivative()
    if d.is_zero():
        return [(g, m * p) for g, m in _squarefree_charp(_pth_root_poly(f))]
    c = poly_gcd(f, d)
    w = f // c
    k = 1
    while w.degree >= 1:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree >= 1:
            out.append((z, k))
        c = c // y
        w = y
        k += 1
    if c.degree >= 1:
        out.extend((g, m * p) for g, m in _squarefree_charp(_pth_root_poly(c)))
    return out


# -- factorization --


@dataclass(frozen=True)
class Factorization:
    """unit * prod(poly**mult) == the factored input, factors monic sorted."""

    unit: FieldElem
    factors: tuple

    def expand(self):
        out = Poly.constant(self.unit.ctx, self.unit)
        for f, m in self.factors:
            out = out * f**m
        return out


QF_DEGREE_CAP = 24


def poly_factor(a, seed=0):
    """Factor into monic irreducibles over Q, F_p, or a finite extension."""
    if a.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    ctx = a.ctx
    unit = a.lc
    f = a.monic()
    if f.degree == 0:
        return Factorization(unit, ())
    if isinstance(ctx, RationalField):
        pairs = _factor_rationals(f)
    elif ctx.is_finite():
        rng = random.Random(seed)
        pairs = []
        for g, m in squarefree_decomposition(f):
            for h in _factor_squarefree_finite(g, rng):
                pairs.append((h, m))
    else:
        raise UnsupportedField("factorization over %s is not supported" % ctx.short_name())
    pairs.sort(key=lambda im: im[0].key())
    return Factorization(unit, tuple(pairs))


def is_irreducible(f, seed=0):
    if f.is_zero():
        raise ZeroPolynomial("irreducibility of zero is undefined")
    if f.degree < 1:
        return False
    fact = poly_factor(f, seed=seed)
    return len(fact.factors) == 1 and fact.factors[0][1] == 1


# finite-field route


def _factor_squarefree_finite(f, rng):
    """Irreducible factors of a squarefree monic f over a finite field."""
    out = []
    for g, k in _distinct_degree(f):
        out.extend(_equal_degree(g, k, rng))
    return out


def _distinct_degree(f):
    """[(product of irreducible factors of degree k, k)] for squarefree f."""
    ctx = f.ctx
    q = ctx.order()
    out = []
    h = Poly.x(ctx)
    fstar = f
    k = 0
    while fstar.degree >= 2 * (k + 1):
        k += 1
        h = poly_pow_mod(h, q, fstar)
        g = poly_gcd(h - Poly.x(ctx), fstar)
        if g.degree >= 1:
            out.append((g, k))
            fstar = fstar // g
            h = h % fstar
    if fstar.degree >= 1:
        out.append((fstar, fstar.degree))
    return out


def _random_poly_below(ctx, n, rng):
    # a nonconstant polynomial of degree < n (n >= 2)
    while True:
        coeffs = [_random_elem(ctx, rng) for _ in range(n)]
        p = Poly(ctx, coeffs)
        if p.degree >= 1:
            return p


def _random_elem(ctx, rng):
    if isinstance(ctx, PrimeField):
        return ctx.coerce(rng.randrange(ctx.p))
    if isinstance(ctx, ExtensionField):
        return FieldElem(ctx, tuple(_random_elem(ctx.base, rng) for _ in range(ctx.degree)))
    raise UnsupportedField("random elements need a finite field")


def _equal_degree(f, k, rng):
    """Split a squarefree monic f whose irreducible factors all have degree k."""
    if f.degree == k:
        return [f.monic()]
    ctx = f.ctx
    q = ctx.order()
    p = ctx.characteristic
    n = f.degree
    while True:
        a = _random_poly_below(ctx, n, rng)
        g = poly_gcd(a, f)
        if 1 <= g.degree < n:
            d = g
        elif p != 2:
            b = poly_pow_mod(a, (q**k - 1) // 2, f)
            d = poly_gcd(b - Poly.one(ctx), f)
            if not (1 <= d.degree < n):
                continue
        else:
            # char 2: trace polynomial over F_2 splits the product ring
            e = 0
            qq = q
            while qq > 1:
                qq //= 2
                e += 1
            t = a
            b = a
            for _ in range(e * k - 1):
                b = (b * b) % f
                t = t + b
            d = poly_gcd(t, f)
            if not (1 <= d.degree < n):
                continue
        left = _equal_degree(d.monic(), k, rng)
        right = _equal_degree((f // d).monic(), k, rng)
        return left + right


# rational route


def _factor_rationals(f):
    """[(factor, mult)] for monic f over Q."""
    out = []
    for part, mult in squarefree_decomposition(f):
        if part.degree == 0:
            continue
        prim = _q_to_primitive_int(part)
        for zfac in _zz_factor_squarefree(prim):
            out.append((_int_to_monic_q(zfac), mult))
    return out


def _q_to_primitive_int(f):
    """Primitive integer coefficient list (constant first, positive lc)."""
    den = 1
    for c in f.coeffs:
        den = den * c.val.denominator // math.gcd(den, c.val.denominator)
    ints = [int(c.val * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_to_monic_q(zf):
    Q = rationals()
    lc = zf[-1]
    return Poly(Q, [Fraction(c, lc) for c in zf])


def _primes():
    yield 2
    n = 3
    while True:
        if _is_prime_small(n):
            yield n
        n += 2


def _is_prime_small(n):
    d = 3
    if n % 2 == 0:
        return n == 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _zz_factor_squarefree(P):
    """Irreducible primitive integer factors of a primitive squarefree P."""
    n = len(P) - 1
    if n == 1:
        return [P]
    if n > QF_DEGREE_CAP:
        raise UnsupportedField(
            "rational factorization capped at degree %d (got %d)" % (QF_DEGREE_CAP, n)
        )
    lc = P[-1]
    chosen = None
    for p in _primes():
        if lc % p == 0:
            continue
        Fp = prime_field(p)
        fp = Poly(Fp, P)
        if fp.degree == n and poly_gcd(fp, fp.derivative()).degree == 0:
            chosen = (p, fp.monic())
            break
    p, fp = chosen
    rng = random.Random(0)
    modular = sorted(_factor_squarefree_finite(fp, rng), key=lambda g: g.key())
    if len(modular) == 1:
        return [P]
    A = max(abs(c) for c in P)
    B = (math.isqrt(n + 1) + 1) * (1 << n) * A * abs(lc)
    ell = 1
    while p**ell <= 2 * B:
        ell += 1
    flist = [[c.val for c in g.coeffs] for g in modular]
    lifted = _hensel_lift(p, list(P), flist, ell)
    return _zz_recombine(P, lifted, p**ell)


# integer coefficient lists, constant first


def _zstrip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _zstrip(out)


def _zadd(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    return _zstrip(out)


def _zsub(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _zstrip(out)


def _ztrunc(a, m):
    """Coefficients reduced into the symmetric range (-m/2, m/2]."""
    out = []
    half = m // 2
    for c in a:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    return _zstrip(out)


def _zdivmod_monic_mod(a, b, m):
    """Division by b with invertible-mod-m leading coefficient, in Z/m."""
    r = [c % m for c in a]
    _zstrip(r)
    inv = pow(b[-1] % m, -1, m)
    if len(r) < len(b):
        return [], r
    q = [0] * (len(r) - len(b) + 1)
    for k in range(len(r) - len(b), -1, -1):
        idx = k + len(b) - 1
        c = (r[idx] * inv) % m if idx < len(r) else 0
        if c == 0:
            continue
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] = (r[k + i] - c * bc) % m
        _zstrip(r)
    return _zstrip(q), r


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: f == g*h and s*g + t*h == 1 advance from m to m**2."""
    M = m * m
    e = _ztrunc(_zsub(f, _zmul(g, h)), M)
    q, r = _zdivmod_monic_mod(_zmul(s, e), h, M)
    g1 = _ztrunc(_zadd(_zadd(g, _zmul(t, e)), _zmul(q, g)), M)
    h1 = _ztrunc(_zadd(h, r), M)
    b = _ztrunc(_zsub(_zadd(_zmul(s, g1), _zmul(t, h1)), [1]), M)
    c, d = _zdivmod_monic_mod(_zmul(s, b), h1, M)
    s1 = _ztrunc(_zsub(s, d), M)
    t1 = _ztrunc(_zsub(_zsub(t, _zmul(t, b)), _zmul(c, g1)), M)
    return g1, h1, s1, t1


def _hensel_lift(p, f, flist, ell):
    """Lift monic mod-p factors of f to factors mod p**ell (recursive split)."""
    r = len(flist)
    pl = p**ell
    if r == 1:
        inv = pow(f[-1] % pl, -1, pl)
        return [_ztrunc([c * inv for c in f], pl)]
    k = r // 2
    Fp = prime_field(p)
    g = [f[-1] % p]
    for part in flist[:k]:
        g = [c % p for c in _zmul(g, part)]
    h = [1]
    for part in flist[k:]:
        h = [c % p for c in _zmul(h, part)]
    gp, hp = Poly(Fp, g), Poly(Fp, h)
    one, s, t = poly_xgcd(gp, hp)
    assert one.is_one(), "mod-p factors are not coprime"
    g, h = _ztrunc(g, p), _ztrunc(h, p)
    s = _ztrunc([c.val for c in s.coeffs], p)
    t = _ztrunc([c.val for c in t.coeffs], p)
    m = p
    steps = max(1, (ell - 1).bit_length())
    for _ in range(steps):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    g = _ztrunc(g, pl)
    h = _ztrunc(h, pl)
    return _hensel_lift(p, g, flist[:k], ell) + _hensel_lift(p, h, flist[k:], ell)


def _z_primitive(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    out = [c // g for c in a]
    if out[-1] < 0:
        out = [-c for c in out]
    return out


def _z_trial_divide(P, g):
    """Quotient list if primitive g divides P over Z, else None."""
    Q = rationals()
    pa, pb = Poly(Q, P), Poly(Q, g)
    q, r = divmod(pa, pb)
    if not r.is_zero():
        return None
    return [int(c.val) for c in q.coeffs]


def _zz_recombine(P, lifted, pl):
    """Zassenhaus subset search over the lifted modular factors."""
    out = []
    live = list(range(len(lifted)))
    current = list(P)
    s = 1
    while 2 * s <= len(live):
        hit = None
        for combo in itertools.combinations(live, s):
            g = [current[-1]]
            for i in combo:
                g = _ztrunc(_zmul(g, lifted[i]), pl)
            g = _z_primitive(g)
            q = _z_trial_divide(current, g)
            if q is not None:
                hit = (combo, g, q)
                break
        if hit is None:
            s += 1
            continue
        combo, g, q = hit
        out.append(g)
        current = _z_primitive(q)
        live = [i for i in live if i not in combo]
    if len(current) > 1:
        out.append(_z_primitive(current))
    return out


# -- resultants and interpolation (used by the rational root path) --


def poly_resultant(a, b):
    """Resultant of two polynomials over a common field."""
    if a.ctx != b.ctx:
        raise CtxMismatch("resultant over different fields")
    ctx = a.ctx
    if a.is_zero() or b.is_zero():
        return ctx.zero
    res = ctx.one
    A, B = a, b
    while B.degree > 0:
        R = A % B
        if R.is_zero():
            return ctx.zero if B.degree > 0 else res
        res = res * (B.lc ** (A.degree - R.degree))
        if (A.degree * B.degree) % 2 == 1:
            res = -res
        A, B = B, R
    return res * (B.lc**A.degree)


def _lagrange(ctx, points):
    """Interpolating polynomial through (x_i, y_i) pairs of field elements."""
    total = Poly.zero(ctx)
    for i, (xi, yi) in enumerate(points):
        if yi.is_zero():
            continue
        term = Poly.constant(ctx, yi)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            term = term * Poly(ctx, [-xj, ctx.one]) * ((xi - xj).inverse())
        total = total + term
    return total


# -- roots inside an extension --


def poly_roots_in_ext(g, L, seed=0):
    """Roots of g (over K) lying in the extension L = K[x]/(f).

    Returns a tuple of (root, expression) pairs sorted by expression key;
    the expression is a polynomial over K of degree < deg f evaluating to
    the root at the distinguished generator.
    """
    if not isinstance(L, ExtensionField):
        raise NotAnExtension("root search needs an extension field")
    if g.ctx != L.base:
        raise CtxMismatch("polynomial is not over the base of the extension")
    if g.is_zero():
        raise ZeroPolynomial("every element is a root of zero")
    if g.degree == 0:
        return ()
    if L.is_finite():
        roots = _roots_finite(g, L, seed)
    elif isinstance(L.base, RationalField):
        roots = _roots_trager(g, L)
    else:
        raise UnsupportedField("root-finding supported over finite fields and Q")
    pairs = [(beta, Poly(L.base, list(beta.val))) for beta in roots]
    pairs.sort(key=lambda pr: pr[1].key())
    return tuple(pairs)


def _roots_finite(g, L, seed):
    q = L.order()
    gl = poly_embed(g, L)
    gl = gl.monic()
    if gl.degree == 1:
        return [-gl.coeffs[0]]
    x = Poly.x(L)
    h = poly_gcd(poly_pow_mod(x, q, gl) - x, gl)
    if h.degree == 0:
        return []
    rng = random.Random(seed)
    linears = _equal_degree(h.monic(), 1, rng)
    return [-lin.coeffs[0] for lin in linears]


def _roots_trager(g, L):
    K = L.base
    f = Poly(K, [c for c in L.modulus_coeffs])
    d = f.degree
    g = squarefree_part(g) if poly_gcd(g, g.derivative()).degree > 0 else g.monic()
    D = d * g.degree
    shift = None
    for s in range(1, 4 * D * D + 5):
        pts = []
        sK = K.coerce(s)
        for y0 in range(D + 1):
            y0K = K.coerce(y0)
            gy = g.compose(Poly(K, [y0K, -sK]))
            pts.append((y0K, poly_resultant(f, gy)))
        N = _lagrange(K, pts)
        if N.is_zero():
            continue
        if poly_gcd(N, N.derivative()).degree == 0:
            shift = (s, N)
            break
    if shift is None:
        raise UnsupportedField("no squarefree shift found for the norm resultant")
    s, N = shift
    roots = []
    alpha = L.generator
    gl = poly_embed(g, L)
    for h, _ in poly_factor(N).factors:
        hl = poly_embed(h, L)
        shifted = hl.compose(Poly(L, [L.coerce(Fraction(s)) * alpha, L.one]))
        cand = poly_gcd(gl, shifted)
        if cand.degree == 1:
            beta = -cand.coeffs[0]
            if not gl(beta).is_zero():
                raise AssertionError("norm-resultant root fails to satisfy the input")
            roots.append(beta)
    return roots
