"""Equality of permutation centralizers in S_n and A_n.

Write g = v_1 v_2 ... v_n where v_i collects the cycles of g of length
i.  Two permutations are locally equivalent at i when the layers have
the same support and w_i is a power v_i^k with k invertible modulo i
(at i = 1 this just compares fixed-point sets).  Centralizers in S_n
are equal iff g and h are equivalent at every layer, or differ by one
of two swaps between a transposition and a pair of fixed points on the
same points.  In A_n more exotic variations appear (a repaired double
transposition, 3-point blocks trading roles between 3-cycles and fixed
triples, and a pair of odd cycles powered by different exponents),
each gated by an "elsewhere only odd cycles of distinct lengths"
condition that keeps the ambient centralizer free of odd permutations.

The decision procedures work on precomputed `CycleLayers`; the
brute-force counterparts enumerate the full group and serve as
independent oracles for small n.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import OddPermutation, ParseError, TooLarge


class Permutation:
    """Permutation of {1, ..., n} stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(int(v) for v in images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ParseError("images %r are not a bijection of 1..%d" % (imgs, n))
        self.images = imgs

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles, n=None):
        top = max((p for c in cycles for p in c), default=0)
        n = top if n is None else n
        if n < top:
            raise ParseError("cycle point %d exceeds degree %d" % (top, n))
        imgs = list(range(1, n + 1))
        seen = set()
        for c in cycles:
            for p in c:
                if not isinstance(p, int) or p < 1:
                    raise ParseError("bad cycle point %r" % (p,))
                if p in seen:
                    raise ParseError("point %d repeated across cycles" % p)
                seen.add(p)
            for j, p in enumerate(c):
                imgs[p - 1] = c[(j + 1) % len(c)]
        return cls(imgs)

    @classmethod
    def parse(cls, text, n=None):
        """Cycle notation like '(1 2)(3 4)'; '()' is the identity."""
        s = text.strip()
        if s in ("", "()", "id", "e"):
            return cls.identity(n or 0)
        if s[0] != "(" or s[-1] != ")":
            raise ParseError("bad cycle notation %r" % text)
        cycles = []
        for chunk in s[1:-1].split(")("):
            pts = chunk.replace(",", " ").split()
            if not pts:
                raise ParseError("empty cycle in %r" % text)
            try:
                cycles.append(tuple(int(p) for p in pts))
            except ValueError as exc:
                raise ParseError("bad cycle point in %r" % text) from exc
        return cls.from_cycles(cycles, n=n)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point - 1]

    def extend(self, n):
        """Same permutation viewed in S_n (new points fixed)."""
        if n < self.degree:
            raise ParseError("cannot shrink a permutation")
        return Permutation(self.images + tuple(range(self.degree + 1, n + 1)))

    def __mul__(self, other):
        """(g * h)(x) = g(h(x))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        n = max(self.degree, other.degree)
        g, h = self.extend(n), other.extend(n)
        return Permutation(g.images[h.images[i] - 1] for i in range(n))

    def inverse(self):
        out = [0] * self.degree
        for i, v in enumerate(self.images):
            out[v - 1] = i + 1
        return Permutation(out)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        acc = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def cycles(self, include_fixed=False):
        """Disjoint cycles, each starting at its least point, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            c = [start]
            seen[start - 1] = True
            p = self.images[start - 1]
            while p != start:
                c.append(p)
                seen[p - 1] = True
                p = self.images[p - 1]
            if len(c) > 1 or include_fixed:
                out.append(tuple(c))
        return tuple(out)

    def fixed_points(self):
        return frozenset(i + 1 for i, v in enumerate(self.images) if v == i + 1)

    def support(self):
        return frozenset(i + 1 for i, v in enumerate(self.images) if v != i + 1)

    def is_even(self):
        flips = sum(len(c) - 1 for c in self.cycles())
        return flips % 2 == 0

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return other.images == self.images
        return NotImplemented

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation.parse(%r, n=%d)" % (str(self), self.degree)

    def __str__(self):
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cs)


class CycleLayers:
    """Cycles of one permutation grouped by length, layer by layer."""

    __slots__ = ("degree", "images", "even", "_cycles", "_supports", "_limages")

    def __init__(self, g):
        self.degree = g.degree
        self.images = g.images
        self.even = g.is_even()
        by_len = {}
        for c in g.cycles(include_fixed=True):
            by_len.setdefault(len(c), []).append(c)
        self._cycles = {i: tuple(cs) for i, cs in by_len.items()}
        self._supports = {
            i: frozenset(p for c in cs for p in c) for i, cs in self._cycles.items()
        }
        self._limages = {}

    def lengths(self):
        return tuple(sorted(self._cycles))

    def cycles(self, i):
        return self._cycles.get(i, ())

    def support(self, i):
        return self._supports.get(i, frozenset())

    def layer_images(self, i):
        """Image tuple of v_i, the product of the length-i cycles."""
        cached = self._limages.get(i)
        if cached is None:
            imgs = list(range(1, self.degree + 1))
            for c in self.cycles(i):
                for j, p in enumerate(c):
                    imgs[p - 1] = c[(j + 1) % i]
            cached = tuple(imgs)
            self._limages[i] = cached
        return cached

    def layer_perm(self, i):
        return Permutation(self.layer_images(i))


def cycle_layers(g):
    return CycleLayers(g)


def _layer_is_power(cycles_a, images_b, i, k):
    # does the layer of b equal (layer of a)^k on the cycles of a
    for c in cycles_a:
        for j, p in enumerate(c):
            if images_b[p - 1] != c[(j + k) % i]:
                return False
    return True


def _local_k(la, lb, i):
    """Smallest k in [1, i] coprime with i such that w_i = v_i^k."""
    ca = la.cycles(i)
    cb = lb.cycles(i)
    if not ca and not cb:
        return 1
    if la.support(i) != lb.support(i):
        return None
    if i == 1:
        return 1
    ib = lb.layer_images(i)
    for k in range(1, i + 1):
        if math.gcd(k, i) == 1 and _layer_is_power(ca, ib, i, k):
            return k
    return None


def locally_equivalent(g, h, i):
    """Smallest valid exponent at layer i, or None."""
    if g.degree != h.degree:
        return None
    return _local_k(CycleLayers(g), CycleLayers(h), i)


def perm_equivalent(g, h):
    """Locally equivalent at every layer."""
    if g.degree != h.degree:
        return False
    la, lb = CycleLayers(g), CycleLayers(h)
    return all(
        _local_k(la, lb, i) is not None for i in set(la.lengths()) | set(lb.lengths())
    )


@dataclass(frozen=True)
class VariationReport:
    """Decision together with which theorem branch produced it."""

    equal: bool
    kind: str
    variation: tuple = ()
    details: dict = field(default_factory=dict)


def _bad_layers(la, lb):
    out = []
    for i in sorted(set(la.lengths()) | set(lb.lengths())):
        if _local_k(la, lb, i) is None:
            out.append(i)
    return out


def _pattern_s1(la, lb):
    """One transposition and no fixed points against exactly those two
    points fixed and no transpositions."""
    if len(la.cycles(2)) != 1 or la.cycles(1) or lb.cycles(2):
        return None
    if lb.support(1) != la.support(2):
        return None
    return {"swap": sorted(la.support(2))}

def _pattern_s2(la, lb):
    """A transposition plus two fixed points, with the roles of the two
    point pairs exchanged."""
    if len(la.cycles(2)) != 1 or len(la.cycles(1)) != 2:
        return None
    if len(lb.cycles(2)) != 1 or len(lb.cycles(1)) != 2:
        return None
    if lb.support(1) != la.support(2) or lb.support(2) != la.support(1):
        return None
    return {
        "transpositions": [sorted(la.support(2)), sorted(lb.support(2))],
    }


def _elsewhere_odd_distinct(layers, excluded):
    """Outside the excluded lengths: no even cycles, no repeated length."""
    for i in layers.lengths():
        if i in excluded:
            continue
        cs = layers.cycles(i)
        if not cs:
            continue
        if i % 2 == 0 or len(cs) > 1:
            return False
    return True


def _pattern_a2(la, lb):
    """Two double transpositions on the same four points, repaired."""
    if len(la.cycles(2)) != 2 or len(lb.cycles(2)) != 2:
        return None
    if la.support(2) != lb.support(2):
        return None
    if not (_elsewhere_odd_distinct(la, {2}) and _elsewhere_odd_distinct(lb, {2})):
        return None
    return {"points": sorted(la.support(2))}


def _pattern_a3(la, lb):
    """Three-point blocks trading roles between a 3-cycle and a fixed
    triple.

    In the even part of the centralizer, a 3-cycle on a block B and
    three fixed points on B contribute the same subgroup (the cyclic
    group Alt(B)), and with two or more blocks the block swaps are odd,
    so they drop out.  Hence the centralizers agree exactly when both
    elements decompose layers 1 and 3 into the same 3-point blocks:
    at most two blocks in total, each independently a 3-cycle or a
    fixed triple, at most one fixed triple per element (a larger fixed
    set brings in a non-cyclic alternating group, and a fixed pair
    would pair with an odd block swap), orientations free."""
    if not (_elsewhere_odd_distinct(la, {1, 3}) and _elsewhere_odd_distinct(lb, {1, 3})):
        return None
    sides = []
    for layers in (la, lb):
        cycles3 = layers.cycles(3)
        fixed = layers.support(1)
        if len(fixed) not in (0, 3):
            return None
        if len(cycles3) > (1 if fixed else 2):
            return None
        blocks = {frozenset(c) for c in cycles3}
        if fixed:
            blocks.add(frozenset(fixed))
        sides.append(blocks)
    if sides[0] != sides[1]:
        return None
    return {"blocks": sorted(sorted(b) for b in sides[0])}


def _pattern_a4(la, lb, m):
    """Two m-cycles (m odd) powered by exponents distinct modulo m."""
    if m % 2 == 0 or m < 3:
        return None
    ca, cb = la.cycles(m), lb.cycles(m)
    if len(ca) != 2 or len(cb) != 2:
        return None
    if {frozenset(c) for c in ca} != {frozenset(c) for c in cb}:
        return None
    if not (_elsewhere_odd_distinct(la, {m}) and _elsewhere_odd_distinct(lb, {m})):
        return None
    ib = lb.layer_images(m)
    exps = []
    for c in ca:
        target = ib[c[0] - 1]
        try:
            e = c.index(target)
        except ValueError:
            return None
        if math.gcd(e, m) != 1:
            return None
        if not _layer_is_power((c,), ib, m, e):
            return None
        exps.append(e)
    if exps[0] % m == exps[1] % m:
        return None
    return {"length": m, "exponents": exps}


def _decide_sn(la, lb):
    if la.degree != lb.degree:
        return VariationReport(False, "not-equal", details={"reason": "degrees differ"})
    bad = _bad_layers(la, lb)
    if not bad:
        return VariationReport(True, "equivalent")
    if set(bad) == {1, 2}:
        for a, b in ((la, lb), (lb, la)):
            d = _pattern_s1(a, b)
            if d is not None:
                return VariationReport(True, "S-case-1", (1, 2), d)
            d = _pattern_s2(a, b)
            if d is not None:
                return VariationReport(True, "S-case-2", (1, 2), d)
    return VariationReport(False, "not-equal", tuple(bad))


def _decide_an(la, lb):
    if la.degree != lb.degree:
        return VariationReport(False, "not-equal", details={"reason": "degrees differ"})
    bad = _bad_layers(la, lb)
    if not bad:
        return VariationReport(True, "equivalent")
    bset = set(bad)
    if bset == {1, 2}:
        for a, b in ((la, lb), (lb, la)):
            d = _pattern_s2(a, b)
            if d is not None:
                return VariationReport(True, "A-case-1", (1, 2), d)
    if bset == {2}:
        d = _pattern_a2(la, lb)
        if d is not None:
            return VariationReport(True, "A-case-2", (2,), d)
    if bset == {1, 3}:
        d = _pattern_a3(la, lb)
        if d is not None:
            return VariationReport(True, "A-case-3", (1, 3), d)
    if len(bad) == 1:
        d = _pattern_a4(la, lb, bad[0])
        if d is not None:
            return VariationReport(True, "A-case-4", (bad[0],), d)
    return VariationReport(False, "not-equal", tuple(bad))


def sn_cent_equal(g, h):
    """Do g and h have equal centralizers in the full symmetric group?"""
    return _decide_sn(CycleLayers(g), CycleLayers(h))


def an_cent_equal(g, h):
    """Do g and h have equal centralizers in the alternating group?

    Both inputs must be even permutations.
    """
    if not g.is_even():
        raise OddPermutation("first argument is odd")
    if not h.is_even():
        raise OddPermutation("second argument is odd")
    return _decide_an(CycleLayers(g), CycleLayers(h))


def cent_order_sn(g):
    """Order of the centralizer in S_n from the cycle structure."""
    layers = CycleLayers(g)
    out = 1
    for i in layers.lengths():
        mi = len(layers.cycles(i))
        out *= i**mi * math.factorial(mi)
    return out


# -- brute force --


def _all_images(n):
    return tuple(itertools.permutations(range(1, n + 1)))


def _commutes(x, g):
    for i in range(len(g)):
        if x[g[i] - 1] != g[x[i] - 1]:
            return False
    return True


def _centralizer_images(g_images, universe):
    return frozenset(x for x in universe if _commutes(x, g_images))


def perm_centralizer_bruteforce(g, group="S"):
    """Centralizer of g by full enumeration of S_n or A_n (n <= 9)."""
    n = g.degree
    if n > 9:
        raise TooLarge("brute force capped at degree 9 (got %d)" % n)
    if group not in ("S", "A"):
        raise ParseError("group must be 'S' or 'A'")
    if group == "A" and not g.is_even():
        raise OddPermutation("element lies outside the alternating group")
    cent = _centralizer_images(g.images, _all_images(n))
    perms = (Permutation(x) for x in cent)
    if group == "A":
        return frozenset(p for p in perms if p.is_even())
    return frozenset(perms)
