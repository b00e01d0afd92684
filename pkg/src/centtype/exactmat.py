"""Exact dense matrices and the rational canonical form.

Matrices are immutable tuples of FieldElem rows over one FieldCtx.  On
top of the usual arithmetic the module provides reduced row echelon
form, kernels, inverses, and `frobenius_form`, which computes invariant
factors together with an explicit change of basis.

The canonical form is built by cyclic decomposition: repeatedly find a
vector whose order in the quotient module V/Z is the quotient's minimal
polynomial (combining candidate vectors through a coprime lcm split),
correct it to an honest complement generator, and append its Krylov
chain to the basis.  Dependency bookkeeping runs through `_Echelon`,
which remembers how every reduced row decomposes over the tracked
inserts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotSquare, SingularMatrix, SizeMismatch
from .upoly import Poly


class Matrix:
    """Immutable matrix over a field context."""

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx, rows):
        rs = tuple(tuple(ctx.coerce(c) for c in row) for row in rows)
        if not rs or not rs[0]:
            raise SizeMismatch("matrices must have at least one row and column")
        w = len(rs[0])
        if any(len(r) != w for r in rs):
            raise SizeMismatch("ragged rows")
        self.ctx = ctx
        self.rows = rs

    # -- constructors --

    @classmethod
    def identity(cls, ctx, n):
        one, zero = ctx.one, ctx.zero
        return cls(ctx, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, ctx, n, m=None):
        m = n if m is None else m
        z = ctx.zero
        return cls(ctx, [[z] * m for _ in range(n)])

    @classmethod
    def from_columns(cls, ctx, cols):
        return cls(ctx, [[col[i] for col in cols] for i in range(len(cols[0]))])

    # -- shape --

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self):
        return self.nrows == self.ncols

    def _require_square(self):
        if not self.is_square():
            raise NotSquare("%dx%d matrix" % self.shape)

    def entry(self, i, j):
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def transpose(self):
        return Matrix(self.ctx, zip(*self.rows))

    def trace(self):
        self._require_square()
        t = self.ctx.zero
        for i in range(self.nrows):
            t = t + self.rows[i][i]
        return t

    def is_zero_matrix(self):
        return all(c.is_zero() for r in self.rows for c in r)

    # -- arithmetic --

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.shape != self.shape or other.ctx != self.ctx:
            raise SizeMismatch("sum of %s and %s matrices" % (self.shape, other.shape))
        return Matrix(
            self.ctx,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Matrix(self.ctx, [[-c for c in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if other.ctx != self.ctx:
                raise SizeMismatch("product over different fields")
            if self.ncols != other.nrows:
                raise SizeMismatch("product of %s and %s" % (self.shape, other.shape))
            bt = tuple(zip(*other.rows))
            zero = self.ctx.zero
            out = []
            for ra in self.rows:
                row = []
                for cb in bt:
                    s = zero
                    for a, b in zip(ra, cb):
                        if not (a.is_zero() or b.is_zero()):
                            s = s + a * b
                    row.append(s)
                out.append(row)
            return Matrix(self.ctx, out)
        try:
            c = self.ctx.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Matrix(self.ctx, [[c * v for v in r] for r in self.rows])

    def __rmul__(self, other):
        if isinstance(other, Matrix):
            return NotImplemented
        try:
            c = self.ctx.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Matrix(self.ctx, [[c * v for v in r] for r in self.rows])

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        self._require_square()
        acc = Matrix.identity(self.ctx, self.nrows)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def apply(self, vec):
        """Matrix-vector product; vec is a sequence of ncols entries."""
        vec = [self.ctx.coerce(v) for v in vec]
        if len(vec) != self.ncols:
            raise SizeMismatch("vector of length %d under %s" % (len(vec), self.shape))
        zero = self.ctx.zero
        out = []
        for r in self.rows:
            s = zero
            for a, b in zip(r, vec):
                if not (a.is_zero() or b.is_zero()):
                    s = s + a * b
            out.append(s)
        return tuple(out)

    # -- equality and display --

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return other.ctx == self.ctx and other.rows == self.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.rows))

    def key(self):
        return tuple(tuple(c.key() for c in r) for r in self.rows)

    def __repr__(self):
        return "Matrix(%s, %s)" % (
            self.ctx.short_name(),
            [[str(c) for c in r] for r in self.rows],
        )

    # -- elimination --

    def rref(self):
        """(reduced row echelon Matrix, pivot column tuple)."""
        rows = [list(r) for r in self.rows]
        n, m = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(m):
            sel = None
            for i in range(r, n):
                if not rows[i][c].is_zero():
                    sel = i
                    break
            if sel is None:
                continue
            rows[r], rows[sel] = rows[sel], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [v * inv for v in rows[r]]
            for i in range(n):
                if i == r:
                    continue
                f = rows[i][c]
                if f.is_zero():
                    continue
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == n:
                break
        return Matrix(self.ctx, rows), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def det(self):
        self._require_square()
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = self.ctx.one
        for c in range(n):
            sel = None
            for i in range(c, n):
                if not rows[i][c].is_zero():
                    sel = i
                    break
            if sel is None:
                return self.ctx.zero
            if sel != c:
                rows[c], rows[sel] = rows[sel], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = rows[c][c].inverse()
            for i in range(c + 1, n):
                f = rows[i][c] * inv
                if f.is_zero():
                    continue
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return det

    def inverse(self):
        self._require_square()
        n = self.nrows
        ident = Matrix.identity(self.ctx, n)
        aug = Matrix(self.ctx, [list(a) + list(b) for a, b in zip(self.rows, ident.rows)])
        red, pivots = aug.rref()
        if pivots[:n] != tuple(range(n)):
            raise SingularMatrix("matrix of rank %d" % len([p for p in pivots if p < n]))
        return Matrix(self.ctx, [r[n:] for r in red.rows])

    def kernel(self):
        """Basis of the right null space as a tuple of vectors."""
        red, pivots = self.rref()
        pivset = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivset]
        out = []
        for j in free:
            vec = [self.ctx.zero] * self.ncols
            vec[j] = self.ctx.one
            for r, pc in enumerate(pivots):
                vec[pc] = -red.rows[r][j]
            out.append(tuple(vec))
        return tuple(out)

    def rowspace_rref(self):
        """Canonical basis of the row space (zero rows dropped)."""
        red, pivots = self.rref()
        return tuple(red.rows[i] for i in range(len(pivots)))

    def solve_right(self, rhs):
        """One solution x of self * x = rhs, or None if inconsistent."""
        rhs = [self.ctx.coerce(v) for v in rhs]
        if len(rhs) != self.nrows:
            raise SizeMismatch("rhs of length %d for %s" % (len(rhs), self.shape))
        aug = Matrix(self.ctx, [list(r) + [b] for r, b in zip(self.rows, rhs)])
        red, pivots = aug.rref()
        if pivots and pivots[-1] == self.ncols:
            return None
        x = [self.ctx.zero] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = red.rows[r][self.ncols]
        return tuple(x)


def companion(f):
    """Companion matrix of a monic polynomial of degree >= 1."""
    f = f.monic()
    n = f.degree
    if n < 1:
        raise SizeMismatch("companion matrix needs degree >= 1")
    ctx = f.ctx
    zero, one = ctx.zero, ctx.one
    rows = []
    for i in range(n):
        row = [zero] * n
        if i > 0:
            row[i - 1] = one
        row[n - 1] = -f.coeff(i)
        rows.append(row)
    return Matrix(ctx, rows)


def block_diag(blocks):
    """Block-diagonal matrix from square blocks over one field."""
    blocks = list(blocks)
    if not blocks:
        raise SizeMismatch("no blocks")
    ctx = blocks[0].ctx
    n = sum(b.nrows for b in blocks)
    zero = ctx.zero
    rows = [[zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        b._require_square()
        if b.ctx != ctx:
            raise SizeMismatch("blocks over different fields")
        for i in range(b.nrows):
            for j in range(b.nrows):
                rows[off + i][off + j] = b.rows[i][j]
        off += b.nrows
    return Matrix(ctx, rows)


def mat_eval_poly(f, A):
    """f(A) by Horner's rule."""
    A._require_square()
    if f.ctx != A.ctx:
        raise SizeMismatch("polynomial and matrix over different fields")
    n = A.nrows
    acc = Matrix.zero(A.ctx, n)
    ident = Matrix.identity(A.ctx, n)
    for c in reversed(f.coeffs):
        acc = acc * A + c * ident
    return acc


def matrix_embed(M, L):
    """Entrywise lift of a matrix over K into an extension L of K."""
    return Matrix(L, [[L.embed(c) for c in r] for r in M.rows])


class _Echelon:
    """Row space in reduced echelon form with dependency bookkeeping.

    Untracked inserts are seeds; tracked inserts carry a tag.  Every
    stored row remembers its expression over the tagged originals modulo
    the seed span, so `express` can decompose a vector over the tracked
    inserts.
    """

    def __init__(self, ctx, width):
        self.ctx = ctx
        self.width = width
        self.rows = []  # (pivot index, normalized row, {tag: coeff})

    @property
    def dim(self):
        return len(self.rows)

    def _reduce(self, vec):
        work = [self.ctx.coerce(v) for v in vec]
        if len(work) != self.width:
            raise SizeMismatch("vector of length %d in width-%d echelon" % (len(work), self.width))
        acc = {}
        for pivot, row, combo in self.rows:
            c = work[pivot]
            if c.is_zero():
                continue
            for i, rv in enumerate(row):
                if not rv.is_zero():
                    work[i] = work[i] - c * rv
            for t, v in combo.items():
                acc[t] = acc.get(t, self.ctx.zero) + c * v
        return work, acc

    def insert(self, vec, tag=None):
        """Add a vector.  Returns None if independent, else the
        dependency {tag: coeff} with vec == sum(coeff * original) modulo
        the seed span."""
        work, acc = self._reduce(vec)
        piv = next((i for i, c in enumerate(work) if not c.is_zero()), None)
        if piv is None:
            return {t: v for t, v in acc.items() if not v.is_zero()}
        inv = work[piv].inverse()
        row_n = [c * inv for c in work]
        combo_n = {t: -v * inv for t, v in acc.items() if not v.is_zero()}
        if tag is not None:
            combo_n[tag] = combo_n.get(tag, self.ctx.zero) + inv
        fixed = []
        for pivot, row, combo in self.rows:
            c = row[piv]
            if not c.is_zero():
                row = [a - c * b for a, b in zip(row, row_n)]
                combo = dict(combo)
                for t, v in combo_n.items():
                    combo[t] = combo.get(t, self.ctx.zero) - c * v
                combo = {t: v for t, v in combo.items() if not v.is_zero()}
            fixed.append((pivot, row, combo))
        fixed.append((piv, row_n, combo_n))
        self.rows = fixed
        return None

    def express(self, vec):
        """{tag: coeff} with vec == sum(coeff * original) modulo seeds,
        or None when vec is outside the stored span."""
        work, acc = self._reduce(vec)
        if any(not c.is_zero() for c in work):
            return None
        return {t: v for t, v in acc.items() if not v.is_zero()}

    def contains(self, vec):
        return self.express(vec) is not None


# -- rational canonical form --


@dataclass(frozen=True)
class FrobeniusForm:
    """Invariant factors d_1 | d_2 | ... | d_k (monic, increasing
    divisibility), the block-companion form, and a transform with
    form == transform * A * transform.inverse()."""

    invariant_factors: tuple
    form: Matrix
    transform: Matrix


def _unit_vec(ctx, n, i):
    v = [ctx.zero] * n
    v[i] = ctx.one
    return tuple(v)


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _coset_order(A, u, seeds):
    """Order of the coset of u in V / span(seeds) as a module over K[x].

    Returns (f, chain): f monic with f(A)u in the span, chain the Krylov
    vectors u, Au, ..., A^(deg f - 1) u.
    """
    ctx = A.ctx
    ech = _Echelon(ctx, A.nrows)
    for s in seeds:
        ech.insert(s)
    chain = []
    vec = u
    k = 0
    while True:
        dep = ech.insert(vec, tag=k)
        if dep is not None:
            coeffs = [ctx.zero] * (k + 1)
            for j, c in dep.items():
                coeffs[j] = -c
            coeffs[k] = ctx.one
            return Poly(ctx, coeffs), chain
        chain.append(vec)
        vec = A.apply(vec)
        k += 1


def _lcm_coprime_split(f, g):
    """(f1, g1) coprime with f1 | f, g1 | g and f1 * g1 = lcm(f, g)."""
    from .upoly import poly_gcd

    d = poly_gcd(f, g)
    lcm = ((f * g) // d).monic()
    f1 = (f // d).monic()
    while True:
        h = poly_gcd(f // f1, f1)
        if h.degree == 0:
            break
        f1 = (f1 * h).monic()
    g1 = (lcm // f1).monic()
    if poly_gcd(f1, g1).degree != 0 or not (f1 * g1 - lcm).is_zero():
        raise AssertionError("coprime lcm split failed")
    return f1, g1


def frobenius_form(A):
    """Cyclic decomposition of a square matrix.

    The invariant factors come out monic in increasing divisibility
    order, their companion blocks form `form`, and `transform` conjugates
    A onto it.
    """
    A._require_square()
    ctx = A.ctx
    n = A.nrows
    chains = []  # (generator, invariant factor, Krylov chain), largest first
    all_krylov = []
    dim = 0
    while dim < n:
        u, f = None, None
        for i in range(n):
            e = _unit_vec(ctx, n, i)
            g, _ = _coset_order(A, e, all_krylov)
            if g.degree == 0:
                continue
            if u is None:
                u, f = e, g
                continue
            if (f % g).is_zero():
                continue
            if (g % f).is_zero():
                u, f = e, g
                continue
            f1, g1 = _lcm_coprime_split(f, g)
            u = _vadd(
                mat_eval_poly(f // f1, A).apply(u),
                mat_eval_poly(g // g1, A).apply(e),
            )
            f = f1 * g1
        fu = mat_eval_poly(f, A).apply(u)
        if chains:
            ech = _Echelon(ctx, n)
            for ci, (_, _, kry) in enumerate(chains):
                for j, kv in enumerate(kry):
                    ech.insert(kv, tag=(ci, j))
            expr = ech.express(fu)
            if expr is None:
                raise AssertionError("conductor image escaped the accumulated span")
            for ci, (v, _, kry) in enumerate(chains):
                gi = Poly(ctx, [expr.get((ci, j), ctx.zero) for j in range(len(kry))])
                if gi.is_zero():
                    continue
                q, r = divmod(gi, f)
                if not r.is_zero():
                    raise AssertionError("conductor fails to divide a chain coefficient")
                u = _vsub(u, mat_eval_poly(q, A).apply(v))
        elif any(not c.is_zero() for c in fu):
            raise AssertionError("minimal polynomial does not annihilate its witness")
        g, chain = _coset_order(A, u, all_krylov)
        if not (g - f).is_zero() or len(chain) != f.degree:
            raise AssertionError("corrected generator changed order")
        chains.append((u, f, chain))
        all_krylov.extend(chain)
        dim += f.degree
    chains.reverse()
    factors = tuple(f for _, f, _ in chains)
    for a, b in zip(factors, factors[1:]):
        if not (b % a).is_zero():
            raise AssertionError("invariant factors fail the divisibility chain")
    cols = []
    for _, _, chain in chains:
        cols.extend(chain)
    Q = Matrix.from_columns(ctx, cols)
    P = Q.inverse()
    F = block_diag([companion(f) for f in factors])
    if __debug__:
        if P * A * Q != F:
            raise AssertionError("canonical form verification failed")
    return FrobeniusForm(factors, F, P)


def minpoly(A):
    """Minimal polynomial: the largest invariant factor."""
    return frobenius_form(A).invariant_factors[-1]


def charpoly(A):
    """Characteristic polynomial: the product of the invariant factors."""
    form = frobenius_form(A)
    out = Poly.one(A.ctx)
    for f in form.invariant_factors:
        out = out * f
    return out


def similar_conjugator(A, B):
    """S with S.inverse() * A * S == B, or None if A and B are not similar."""
    if A.ctx != B.ctx or A.shape != B.shape:
        return None
    fa = frobenius_form(A)
    fb = frobenius_form(B)
    if fa.invariant_factors != fb.invariant_factors:
        return None
    S = fa.transform.inverse() * fb.transform
    if __debug__:
        if S.inverse() * A * S != B:
            raise AssertionError("conjugator verification failed")
    return S


def restrict_to_basis(A, basis):
    """Matrix of A on an invariant subspace in the given basis coordinates."""
    B = Matrix.from_columns(A.ctx, list(basis))
    cols = []
    for v in basis:
        y = B.solve_right(A.apply(v))
        if y is None:
            raise SizeMismatch("subspace is not invariant under the matrix")
        cols.append(y)
    return Matrix.from_columns(A.ctx, cols)
