"""Cycle types, Green types, and generalized types of matrices.

The cycle type of X collects, for each monic irreducible f dividing the
characteristic polynomial, the partition of multiplicities of f across
the invariant factors.  The Green type forgets each f down to its
degree.  The generalized type sits in between: it forgets f down to its
equivalence class under

    f ~ g  iff  deg f = deg g and g has a root in K[x]/(f),

which is exactly the relation deciding conjugacy of centralizer
algebras.  Over a finite field every two irreducibles of equal degree
are equivalent, so the generalized type carries the same information as
the Green type there; over Q it is strictly finer.

`poly_equivalent` does not just decide the relation: it returns a
matched pair (r, s) with r mapping the distinguished root of f to a
root of g and s inverting it on that root, so s(r(x)) = x mod f.  The
witness constructions downstream rely on that inverse pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CtxMismatch, NotIrreducible, SizeMismatch
from .exactfield import ExtensionField
from .exactmat import Matrix, frobenius_form
from .upoly import (
    Poly,
    is_irreducible,
    poly_compose_mod,
    poly_factor,
    poly_roots_in_ext,
)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts."""

    parts: tuple

    def __init__(self, parts=()):
        ps = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in ps):
            raise ValueError("partition parts must be positive")
        object.__setattr__(self, "parts", ps)

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def mults(self):
        """{part: multiplicity}."""
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def conjugate(self):
        if not self.parts:
            return Partition(())
        cols = [sum(1 for p in self.parts if p > i) for i in range(self.parts[0])]
        return Partition(cols)

    def replicate(self, d):
        """Each part repeated d times: the partition written d*lambda."""
        if d < 0:
            raise ValueError("negative replication")
        return Partition([p for p in self.parts for _ in range(d)])

    def stretch(self, c):
        """Each part multiplied by c."""
        if c <= 0:
            raise ValueError("stretch factor must be positive")
        return Partition([p * c for p in self.parts])

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.parts) + ")"


def partitions_of(n):
    """All partitions of n, parts decreasing, in reverse lex order."""
    if n < 0:
        raise ValueError("negative weight")

    def rec(total, cap):
        if total == 0:
            yield ()
            return
        for first in range(min(total, cap), 0, -1):
            for rest in rec(total - first, first):
                yield (first,) + rest

    for tup in rec(n, n):
        yield Partition(tup)


def cent_dim_weight(lam):
    """Sum of squared conjugate parts: the centralizer dimension carried
    by one irreducible with multiplicity partition lam, per unit degree."""
    return sum(c * c for c in lam.conjugate().parts)


def dominance_leq(a, b):
    """True iff a is dominated by b (same weight, prefix sums never ahead)."""
    if a.size != b.size:
        return False
    pa = pb = 0
    for i in range(max(len(a.parts), len(b.parts))):
        pa += a.parts[i] if i < len(a.parts) else 0
        pb += b.parts[i] if i < len(b.parts) else 0
        if pa > pb:
            return False
    return True


# -- the three type levels --


def _canon_entries(entries):
    out = []
    for f, lam in entries:
        if not isinstance(lam, Partition):
            lam = Partition(lam)
        out.append((f, lam))
    out.sort(key=lambda fl: (fl[0].degree, fl[1].parts, fl[0].key()))
    return tuple(out)


@dataclass(frozen=True)
class CycleType:
    """Pairs (monic irreducible, multiplicity partition), canonically sorted."""

    entries: tuple

    def __init__(self, entries):
        object.__setattr__(self, "entries", _canon_entries(entries))

    @property
    def ctx(self):
        return self.entries[0][0].ctx

    @property
    def size(self):
        return sum(f.degree * lam.size for f, lam in self.entries)

    def green(self):
        return GreenType([(f.degree, lam) for f, lam in self.entries])

    def generalized(self):
        return GeneralizedType(self.entries)

    def __str__(self):
        return " ".join("(%s)^%s" % (f, lam) for f, lam in self.entries)


@dataclass(frozen=True)
class GreenType:
    """Pairs (degree, multiplicity partition) with repetition, sorted."""

    entries: tuple

    def __init__(self, entries):
        out = []
        for d, lam in entries:
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            out.append((int(d), lam))
        out.sort(key=lambda dl: (dl[0], dl[1].parts))
        object.__setattr__(self, "entries", tuple(out))

    @property
    def size(self):
        return sum(d * lam.size for d, lam in self.entries)

    def __str__(self):
        return " ".join("%d^%s" % (d, lam) for d, lam in self.entries)


@dataclass(frozen=True, eq=False)
class GeneralizedType:
    """Pairs (class representative, multiplicity partition).

    Each irreducible stands for its own ~ class, so two equal generalized
    types may carry different representatives; equality goes through the
    class matching, and hashing through the Green projection.
    """

    entries: tuple

    def __init__(self, entries):
        object.__setattr__(self, "entries", _canon_entries(entries))

    @property
    def ctx(self):
        return self.entries[0][0].ctx

    @property
    def size(self):
        return sum(f.degree * lam.size for f, lam in self.entries)

    def green(self):
        return GreenType([(f.degree, lam) for f, lam in self.entries])

    def __eq__(self, other):
        if not isinstance(other, GeneralizedType):
            return NotImplemented
        if other.ctx != self.ctx:
            return False
        return gentype_matching(self, other) is not None

    def __hash__(self):
        return hash(self.green())

    def __str__(self):
        return " ".join("[%s]^%s" % (f, lam) for f, lam in self.entries)


def cent_dim_formula(t):
    """Centralizer algebra dimension from a type: sum of deg * weight."""
    total = 0
    for head, lam in t.entries:
        d = head if isinstance(head, int) else head.degree
        total += d * cent_dim_weight(lam)
    return total


# -- computing types of matrices --


def cycle_type(X, seed=0):
    """Cycle type of a square matrix from its invariant factors."""
    form = frobenius_form(X)
    mults = {}
    for dpoly in form.invariant_factors:
        for f, m in poly_factor(dpoly, seed=seed).factors:
            mults.setdefault(f, []).append(m)
    return CycleType([(f, Partition(ms)) for f, ms in mults.items()])


def green_type(X, seed=0):
    return cycle_type(X, seed=seed).green()


def generalized_type(X, seed=0):
    return cycle_type(X, seed=seed).generalized()


# -- the ~ relation with inverse-pair witnesses --


@lru_cache(maxsize=4096)
def _irreducible_or_raise(f):
    if f.degree < 1 or not is_irreducible(f):
        raise NotIrreducible("%s is not irreducible over %s" % (f, f.ctx.short_name()))
    return True


@lru_cache(maxsize=4096)
def _poly_equivalent_cached(f, g):
    if f.degree != g.degree:
        return None
    x = Poly.x(f.ctx)
    if f == g:
        return (x, x)
    L = ExtensionField(f.ctx, f.coeffs)
    roots = poly_roots_in_ext(g, L)
    if not roots:
        return None
    beta, r = roots[0]
    d = f.degree
    K = f.ctx
    powers = []
    acc = L.one
    for _ in range(d):
        powers.append(tuple(acc.val))
        acc = acc * beta
    B = Matrix.from_columns(K, powers)
    svec = B.solve_right(L.generator.val)
    if svec is None:
        raise AssertionError("powers of a generating root failed to span")
    s = Poly(K, svec)
    if not poly_compose_mod(g, r, f).is_zero():
        raise AssertionError("claimed root is not a root")
    if not poly_compose_mod(f, s, g).is_zero():
        raise AssertionError("inverse witness misses the source")
    if not ((poly_compose_mod(s, r, f) - x) % f).is_zero():
        raise AssertionError("witness pair does not invert modulo the source")
    if not ((poly_compose_mod(r, s, g) - x) % g).is_zero():
        raise AssertionError("witness pair does not invert modulo the target")
    return (r, s)


def poly_equivalent(f, g):
    """Witness pair (r, s) when f ~ g, else None.

    Both inputs must be monic irreducible over the same field.  On
    success, r sends the distinguished root of f to a root of g, s sends
    it back, and the pair satisfies g(r) = 0 mod f, f(s) = 0 mod g,
    s(r(x)) = x mod f, r(s(x)) = x mod g.
    """
    if f.ctx != g.ctx:
        raise CtxMismatch("equivalence over different fields")
    f, g = f.monic(), g.monic()
    _irreducible_or_raise(f)
    _irreducible_or_raise(g)
    return _poly_equivalent_cached(f, g)


def gentype_matching(ta, tb):
    """Pairing of generalized-type entries, or None when the types differ.

    Returns a tuple of ((f_a, lam), (f_b, lam), (r, s)) triples covering
    every entry once, with (r, s) the inverse pair for f_a ~ f_b.
    """
    if not isinstance(ta, GeneralizedType) or not isinstance(tb, GeneralizedType):
        raise SizeMismatch("matching needs two generalized types")
    if ta.ctx != tb.ctx:
        raise CtxMismatch("matching over different fields")
    if len(ta.entries) != len(tb.entries):
        return None
    buckets = {}
    for i, (f, lam) in enumerate(tb.entries):
        buckets.setdefault((f.degree, lam.parts), []).append(i)
    used = set()
    out = []
    for f, lam in ta.entries:
        hit = None
        for i in buckets.get((f.degree, lam.parts), ()):
            if i in used:
                continue
            rs = poly_equivalent(f, tb.entries[i][0])
            if rs is not None:
                hit = (i, rs)
                break
        if hit is None:
            return None
        i, rs = hit
        used.add(i)
        out.append(((f, lam), tb.entries[i], rs))
    return tuple(out)


def gentype_equal(ta, tb):
    """Decide equality of generalized types via class matching."""
    return gentype_matching(ta, tb) is not None
