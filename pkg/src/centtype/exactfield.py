"""Exact field arithmetic: rationals, prime fields, and algebraic extensions.

A FieldCtx owns the arithmetic of one field and FieldElem is an immutable
(ctx, value) pair.  Values are canonical at construction, so element
equality is representational equality: a Fraction in lowest terms for the
rationals, a residue in [0, p) for a prime field, and a coefficient vector
over the immediate base field for an extension.  Extensions may be stacked
(towers), and every context is hashable and value-comparable.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    CompositeModulus,
    CtxMismatch,
    DivisionByZero,
    ParseError,
    ReducibleModulus,
    UnsupportedField,
)


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldElem:
    """Immutable field element; supports +, -, *, /, ** and equality."""

    __slots__ = ("ctx", "val")

    def __init__(self, ctx, val):
        self.ctx = ctx
        self.val = val

    def _coerce_other(self, other):
        try:
            return self.ctx.coerce(other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx._add(self.val, other.val))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx._sub(self.val, other.val))

    def __rsub__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx._sub(other.val, self.val))

    def __mul__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx._mul(self.val, other.val))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx._neg(self.val))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        acc = self.ctx.one
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return FieldElem(self.ctx, self.ctx._inv(self.val))

    def is_zero(self):
        return self.val == self.ctx.zero.val

    def is_one(self):
        return self.val == self.ctx.one.val

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                return NotImplemented if not isinstance(other.ctx, FieldCtx) else False
            return self.val == other.val
        coerced = self._coerce_other(other)
        if coerced is None:
            return NotImplemented
        return self.val == coerced.val

    def __hash__(self):
        return hash((self.ctx, self.val))

    def key(self):
        """Deterministic sort key within one context."""
        return self.ctx._key(self.val)

    def __repr__(self):
        return "FieldElem(%s, %s)" % (self.ctx.short_name(), self.ctx._fmt(self.val))

    def __str__(self):
        return self.ctx._fmt(self.val)


class FieldCtx:
    """Arithmetic context of one field."""

    kind = "?"

    # subclasses provide: characteristic, _add, _sub, _mul, _neg, _inv,
    # coerce, order(), _key, _fmt, descriptor(), short_name()

    def elem(self, value):
        return self.coerce(value)

    def order(self):
        """Number of elements, or None for infinite fields."""
        return None

    def is_finite(self):
        return self.order() is not None

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result


class RationalField(FieldCtx):
    """The field of rational numbers with canonical Fraction payloads."""

    kind = "Q"
    characteristic = 0

    def __init__(self):
        self.zero = FieldElem(self, Fraction(0))
        self.one = FieldElem(self, Fraction(1))

    def coerce(self, v):
        if isinstance(v, FieldElem):
            if v.ctx != self:
                raise CtxMismatch("element of %s used over Q" % v.ctx.short_name())
            return v
        if isinstance(v, bool):
            raise TypeError("bool is not a field value")
        if isinstance(v, int):
            return FieldElem(self, Fraction(v))
        if isinstance(v, Fraction):
            return FieldElem(self, v)
        if isinstance(v, float):
            raise TypeError("floating point is not supported; use Fraction")
        raise TypeError("cannot coerce %r into Q" % (v,))

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / a

    def _key(self, a):
        return (a.numerator, a.denominator)

    def _fmt(self, a):
        return str(a)

    def short_name(self):
        return "Q"

    def descriptor(self):
        return {"kind": "Q"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"


class PrimeField(FieldCtx):
    """Integers modulo a prime p, residues stored in [0, p)."""

    kind = "Fp"

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise CompositeModulus("modulus %r is not prime" % (p,))
        self.p = p
        self.characteristic = p
        self.zero = FieldElem(self, 0)
        self.one = FieldElem(self, 1 % p)

    def coerce(self, v):
        if isinstance(v, FieldElem):
            if v.ctx != self:
                raise CtxMismatch(
                    "element of %s used over %s" % (v.ctx.short_name(), self.short_name())
                )
            return v
        if isinstance(v, bool):
            raise TypeError("bool is not a field value")
        if isinstance(v, int):
            return FieldElem(self, v % self.p)
        if isinstance(v, Fraction):
            num = v.numerator % self.p
            den = v.denominator % self.p
            if den == 0:
                raise DivisionByZero("denominator divisible by %d" % self.p)
            return FieldElem(self, (num * pow(den, -1, self.p)) % self.p)
        if isinstance(v, float):
            raise TypeError("floating point is not supported")
        raise TypeError("cannot coerce %r into %s" % (v, self.short_name()))

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _key(self, a):
        return a

    def _fmt(self, a):
        return str(a)

    def order(self):
        return self.p

    def short_name(self):
        return "F%d" % self.p

    def descriptor(self):
        return {"kind": "Fp", "p": self.p}

    def elements(self):
        for i in range(self.p):
            yield FieldElem(self, i)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


class ExtensionField(FieldCtx):
    """base[x]/(modulus): elements are coefficient vectors over the base.

    The modulus is monic of degree d >= 1 over the immediate base; an
    element payload is a tuple of exactly d base elements (c0, ..., c_{d-1})
    meaning c0 + c1*t + ... where t is the distinguished generator (the
    coset of x).
    """

    kind = "ext"

    def __init__(self, base, modulus_coeffs):
        # modulus_coeffs: sequence of base-coercible values, monic, deg >= 1.
        self.base = base
        coeffs = tuple(base.coerce(c) for c in modulus_coeffs)
        if len(coeffs) < 2 or not coeffs[-1].is_one():
            raise ReducibleModulus("modulus must be monic of degree >= 1")
        self.modulus_coeffs = coeffs
        self.degree = len(coeffs) - 1
        self.characteristic = base.characteristic
        d = self.degree
        self._red = tuple(-c for c in coeffs[:d])  # x^d = sum _red[i] * x^i
        zb = base.zero
        self.zero = FieldElem(self, (zb,) * d)
        self.one = FieldElem(self, (base.one,) + (zb,) * (d - 1))

    @property
    def generator(self):
        """The coset of x."""
        d = self.degree
        if d == 1:
            return FieldElem(self, (self._red[0],))
        zb = self.base.zero
        vec = [zb] * d
        vec[1] = self.base.one
        return FieldElem(self, tuple(vec))

    def embed(self, elem):
        """Lift an element of the immediate base into this extension."""
        e = self.base.coerce(elem)
        zb = self.base.zero
        return FieldElem(self, (e,) + (zb,) * (self.degree - 1))

    def coerce(self, v):
        if isinstance(v, FieldElem):
            if v.ctx == self:
                return v
            if v.ctx == self.base:
                return self.embed(v)
            raise CtxMismatch(
                "element of %s used over %s" % (v.ctx.short_name(), self.short_name())
            )
        if isinstance(v, (tuple, list)):
            if len(v) > self.degree:
                raise TypeError("vector longer than extension degree")
            vec = [self.base.coerce(c) for c in v]
            vec.extend([self.base.zero] * (self.degree - len(vec)))
            return FieldElem(self, tuple(vec))
        if isinstance(v, float):
            raise TypeError("floating point is not supported")
        return self.embed(self.base.coerce(v))

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        d = self.degree
        zb = self.base.zero
        conv = [zb] * (2 * d - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                if not y.is_zero():
                    conv[i + j] = conv[i + j] + x * y
        red = self._red
        for k in range(2 * d - 2, d - 1, -1):
            c = conv[k]
            if not c.is_zero():
                lo = k - d
                for i, r in enumerate(red):
                    conv[lo + i] = conv[lo + i] + c * r
        return tuple(conv[:d])

    def _inv(self, a):
        g, s = _vec_invert(self.base, list(a), list(self.modulus_coeffs))
        if g is None:
            raise DivisionByZero("element not invertible (reducible modulus?)")
        d = self.degree
        s = s[:d]
        s.extend([self.base.zero] * (d - len(s)))
        return tuple(s)

    def _key(self, a):
        return tuple(self.base._key(c.val) for c in a)

    def _fmt(self, a):
        return "(" + ", ".join(self.base._fmt(c.val) for c in a) + ")"

    def order(self):
        q = self.base.order()
        return None if q is None else q**self.degree

    def elements(self):
        if not self.is_finite():
            raise UnsupportedField("cannot enumerate an infinite field")
        import itertools

        base_elems = list(self.base.elements())
        for vec in itertools.product(base_elems, repeat=self.degree):
            yield FieldElem(self, tuple(vec))

    def short_name(self):
        return "%s[x]/(deg %d)" % (self.base.short_name(), self.degree)

    def descriptor(self):
        return {
            "kind": "ext",
            "base": self.base.descriptor(),
            "modulus": [elem_to_json(c) for c in self.modulus_coeffs],
        }

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus_coeffs == self.modulus_coeffs
        )

    def __hash__(self):
        return hash(("ext", self.base, self.modulus_coeffs))

    def __repr__(self):
        return "ExtensionField(%r, deg=%d)" % (self.base, self.degree)


# -- coefficient-vector polynomial helpers (used for extension inversion) --


def _vec_strip(a):
    while a and a[-1].is_zero():
        a.pop()
    return a


def _vec_divmod(ctx, a, b):
    # b nonzero; coefficient lists over ctx, low order first
    b = list(b)
    _vec_strip(b)
    inv_lc = b[-1].inverse()
    r = list(a)
    _vec_strip(r)
    q = [ctx.zero] * max(0, len(r) - len(b) + 1)
    while len(r) >= len(b):
        c = r[-1] * inv_lc
        k = len(r) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] = r[k + i] - c * bc
        _vec_strip(r)
    return q, r


def _vec_invert(ctx, a, m):
    """Inverse of a modulo m over ctx; returns (unit, inv) or (None, None)."""
    _vec_strip(a)
    if not a:
        return None, None
    r0, r1 = list(m), list(a)
    t0, t1 = [], [ctx.one]
    while r1:
        q, r = _vec_divmod(ctx, r0, r1)
        r0, r1 = r1, r
        qt = _vec_mul(ctx, q, t1)
        t0, t1 = t1, _vec_sub(ctx, t0, qt)
    if len(r0) != 1:
        return None, None
    inv_unit = r0[0].inverse()
    inv = [c * inv_unit for c in t0]
    _, inv = _vec_divmod_keep(ctx, inv, m)
    return r0[0], inv


def _vec_mul(ctx, a, b):
    if not a or not b:
        return []
    out = [ctx.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _vec_strip(out)


def _vec_sub(ctx, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else ctx.zero
        y = b[i] if i < len(b) else ctx.zero
        out.append(x - y)
    return _vec_strip(out)


def _vec_divmod_keep(ctx, a, m):
    if len(a) < len(m):
        return [], a
    return _vec_divmod(ctx, a, m)


# -- construction helpers --

_Q_SINGLETON = RationalField()


def rationals():
    """The field Q."""
    return _Q_SINGLETON


def prime_field(p):
    """The prime field F_p."""
    return PrimeField(p)


def extension_field(base, modulus, check=True):
    """base[x]/(modulus) for a monic irreducible modulus.

    `modulus` is a Poly over `base` or a coefficient sequence (constant
    first).  With check=True the modulus is verified irreducible over the
    base and ReducibleModulus is raised otherwise.
    """
    coeffs = getattr(modulus, "coeffs", None)
    if coeffs is None:
        coeffs = tuple(modulus)
    L = ExtensionField(base, coeffs)
    if check:
        from . import upoly

        f = upoly.Poly(base, coeffs)
        if f.degree > 1:
            fact = upoly.poly_factor(f)
            if len(fact.factors) != 1 or fact.factors[0][1] != 1:
                raise ReducibleModulus("modulus %s is reducible over %s" % (f, base.short_name()))
    return L


def make_field(spec):
    """Build a field from 'Q', 'F<p>', or a JSON descriptor dict."""
    if isinstance(spec, FieldCtx):
        return spec
    if isinstance(spec, str):
        s = spec.strip()
        if s in ("Q", "q"):
            return rationals()
        if s.startswith("F"):
            body = s[1:].lstrip("_")
            if body.isdigit():
                return prime_field(int(body))
        raise ParseError("unrecognized field spec %r" % spec)
    if isinstance(spec, dict):
        return field_from_descriptor(spec)
    raise ParseError("unrecognized field spec %r" % (spec,))


# -- JSON element and descriptor codecs --


def elem_to_json(e):
    """JSON value for an element: 'a/b' over Q, int over F_p, list over ext."""
    ctx = e.ctx
    if isinstance(ctx, RationalField):
        return "%d/%d" % (e.val.numerator, e.val.denominator)
    if isinstance(ctx, PrimeField):
        return e.val
    return [elem_to_json(c) for c in e.val]


def elem_from_json(ctx, v):
    if isinstance(ctx, RationalField):
        if isinstance(v, int):
            return ctx.coerce(v)
        if isinstance(v, str):
            try:
                return ctx.coerce(Fraction(v.strip()))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError("bad rational %r" % v) from exc
        raise ParseError("bad rational %r" % (v,))
    if isinstance(ctx, PrimeField):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParseError("bad residue %r" % (v,))
        return ctx.coerce(v)
    if isinstance(ctx, ExtensionField):
        if isinstance(v, (int, str)):
            return ctx.coerce(elem_from_json(ctx.base, v))
        if isinstance(v, list):
            if len(v) > ctx.degree:
                raise ParseError("vector longer than extension degree")
            return ctx.coerce([elem_from_json(ctx.base, c) for c in v])
        raise ParseError("bad extension element %r" % (v,))
    raise ParseError("unknown field kind")


def field_from_descriptor(d):
    if not isinstance(d, dict) or "kind" not in d:
        raise ParseError("bad field descriptor %r" % (d,))
    kind = d["kind"]
    if kind == "Q":
        return rationals()
    if kind == "Fp":
        p = d.get("p")
        if not isinstance(p, int):
            raise ParseError("bad prime in descriptor %r" % (d,))
        return prime_field(p)
    if kind == "ext":
        base = field_from_descriptor(d.get("base"))
        mod = d.get("modulus")
        if not isinstance(mod, list) or len(mod) < 2:
            raise ParseError("bad extension modulus %r" % (mod,))
        coeffs = [elem_from_json(base, c) for c in mod]
        return extension_field(base, coeffs)
    raise ParseError("unknown field kind %r" % (kind,))
