"""Centralizer algebras: bases, conjugacy certificates, witnesses.

The central fact driving this module: the centralizer algebras of X and
Y are conjugate inside GL_n(K) exactly when X and Y have the same
generalized type.  The positive direction is effective, and everything
here returns checkable objects:

  * `centralizer_basis` solves the commutant equation XB = BX exactly;
  * `witness_polynomials` produces p, q with p(X) similar to Y and q(Y)
    similar to X whenever the generalized types agree;
  * `centralizers_conjugate` turns the witness into an explicit
    conjugator and re-verifies the span identity before reporting;
  * `cent_conjugate_bruteforce` is an independent oracle that searches
    all of GL_n(F_p) for a conjugator, for small instances.

Witness construction per primary component of type f^lambda matched to
g^lambda via the inverse pair (r, s): if r already maps the canonical
f^lambda matrix onto class g^lambda, take p = r.  Otherwise t = s o r
fixes every root of f while f o t gains a factor f^2, so iterating
sigma <- t(sigma) modulo f^max(lambda) doubles the f-adic valuation of
f o sigma until it vanishes; then sigma(X) is the semisimple part S and
p = r o sigma + x - sigma evaluates to r(S) + (X - S), which lands in
class g^lambda.  Components are glued by the Chinese Remainder Theorem.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    CtxMismatch,
    NonSquarefreeDerivativeUnit,
    NotSquare,
    SingularMatrix,
    SizeMismatch,
    TooLarge,
    VerificationError,
)
from .exactfield import PrimeField, prime_field
from .exactmat import (
    Matrix,
    block_diag,
    companion,
    frobenius_form,
    mat_eval_poly,
    minpoly,
    restrict_to_basis,
    similar_conjugator,
)
from .typealg import CycleType, cycle_type, gentype_matching
from .upoly import Poly, poly_compose_mod, poly_crt, poly_gcd, poly_xgcd, squarefree_part


# -- centralizer bases --


@dataclass(frozen=True)
class CentralizerBasis:
    """Basis of the algebra of matrices commuting with a fixed matrix."""

    matrices: tuple

    @property
    def dim(self):
        return len(self.matrices)

    def contains(self, M):
        base = [_vectorize(B) for B in self.matrices]
        stacked = Matrix(M.ctx, base + [_vectorize(M)])
        return stacked.rank() == len(base)


def _vectorize(M):
    return [c for row in M.rows for c in row]


def _span_rref(ctx, mats):
    """Canonical row-space basis of a list of vectorized matrices."""
    return Matrix(ctx, [_vectorize(M) for M in mats]).rowspace_rref()


def centralizer_basis(X):
    """Solve XB - BX = 0: basis of the centralizer algebra of X."""
    if not X.is_square():
        raise NotSquare("%dx%d matrix" % X.shape)
    ctx = X.ctx
    n = X.nrows
    zero = ctx.zero
    rows = []
    for i in range(n):
        for j in range(n):
            row = [zero] * (n * n)
            for k in range(n):
                row[k * n + j] = row[k * n + j] + X.rows[i][k]
            for l in range(n):
                row[i * n + l] = row[i * n + l] - X.rows[l][j]
            rows.append(row)
    kernel = Matrix(ctx, rows).kernel()
    mats = tuple(
        Matrix(ctx, [vec[r * n : (r + 1) * n] for r in range(n)]) for vec in kernel
    )
    return CentralizerBasis(mats)


def cent_dim(X):
    """Dimension of the centralizer algebra, by solving the commutant
    equation (independent of the partition formula)."""
    return centralizer_basis(X).dim


def cent_span_equal(X, Y):
    """Are Cent(X) and Cent(Y) literally equal as matrix subspaces?"""
    if X.ctx != Y.ctx or X.shape != Y.shape:
        return False
    bx = centralizer_basis(X)
    by = centralizer_basis(Y)
    return _span_rref(X.ctx, bx.matrices) == _span_rref(Y.ctx, by.matrices)


# -- primary decomposition --


@dataclass(frozen=True)
class PrimaryComponent:
    """One f-primary summand: ker f(X)^m with X restricted to it."""

    poly: Poly
    partition: object
    basis: tuple
    restriction: Matrix


def primary_decomposition(X, seed=0):
    """Primary components of X, ordered like its cycle type entries."""
    ct = cycle_type(X, seed=seed)
    out = []
    for f, lam in ct.entries:
        power = mat_eval_poly(f, X) ** lam.parts[0]
        basis = power.kernel()
        if len(basis) != f.degree * lam.size:
            raise AssertionError("primary component has unexpected dimension")
        out.append(
            PrimaryComponent(
                poly=f,
                partition=lam,
                basis=basis,
                restriction=restrict_to_basis(X, basis),
            )
        )
    return tuple(out)


# -- Jordan-Chevalley decomposition --


@dataclass(frozen=True)
class JCDecomposition:
    """X = semisimple + nilpotent with both parts polynomial in X;
    poly evaluates to the semisimple part."""

    semisimple: Matrix
    nilpotent: Matrix
    poly: Poly


def jordan_chevalley(X):
    """Newton iteration for the semisimple part inside K[x]/(minpoly)."""
    if not X.is_square():
        raise NotSquare("%dx%d matrix" % X.shape)
    ctx = X.ctx
    m = minpoly(X)
    msf = squarefree_part(m)
    z = Poly.x(ctx) % m
    for _ in range(64):
        val = poly_compose_mod(msf, z, m)
        if val.is_zero():
            break
        deriv = poly_compose_mod(msf.derivative(), z, m)
        g, a, _ = poly_xgcd(deriv, m)
        if g.degree != 0:
            raise NonSquarefreeDerivativeUnit(
                "derivative of the squarefree part is not invertible modulo %s" % m
            )
        z = (z - val * a) % m
    else:
        raise AssertionError("Newton iteration failed to stabilize")
    S = mat_eval_poly(z, X)
    N = X - S
    n = X.nrows
    if S + N != X:
        raise AssertionError("parts do not sum back")
    if S * N != N * S:
        raise AssertionError("parts do not commute")
    if not (N**n).is_zero_matrix():
        raise AssertionError("nilpotent part is not nilpotent")
    ms = minpoly(S)
    if poly_gcd(ms, ms.derivative()).degree != 0:
        raise AssertionError("semisimple part has a repeated factor")
    return JCDecomposition(semisimple=S, nilpotent=N, poly=z)


# -- witness polynomials --


def _component_witness(f, lam, g, rs):
    """Polynomial sending the class f^lam onto the class g^lam."""
    r, s = rs
    ctx = f.ctx
    x = Poly.x(ctx)
    if f == g:
        return x
    M = block_diag([companion(f**part) for part in lam.parts])
    target = CycleType([(g, lam)])
    if cycle_type(mat_eval_poly(r, M)) == target:
        return r
    mm = f ** lam.parts[0]
    t = poly_compose_mod(s, r, mm)
    sigma = t
    bound = min(M.nrows * math.factorial(f.degree), 64)
    for _ in range(bound):
        if poly_compose_mod(f, sigma, mm).is_zero():
            break
        sigma = poly_compose_mod(t, sigma, mm)
    else:
        raise AssertionError("valuation-doubling iteration failed to stabilize")
    pc = (poly_compose_mod(r, sigma, mm) + x - sigma) % mm
    if cycle_type(mat_eval_poly(pc, M)) != target:
        raise VerificationError("component witness missed the target class")
    return pc


def _glue_direction(match):
    residues, moduli = [], []
    for (f, lam), (g, _), rs in match:
        mc = f ** lam.parts[0]
        residues.append(_component_witness(f, lam, g, rs) % mc)
        moduli.append(mc)
    if len(moduli) == 1:
        return residues[0]
    return poly_crt(residues, moduli)


def _reverse_match(match):
    return tuple((eb, ea, (rs[1], rs[0])) for ea, eb, rs in match)


def witness_polynomials(X, Y, seed=0):
    """(p, q) with p(X) similar to Y and q(Y) similar to X, or None.

    Exists exactly when X and Y have the same generalized type.  Both
    directions are verified against the invariant factors before
    returning; a failed verification raises VerificationError.
    """
    if X.ctx != Y.ctx:
        raise CtxMismatch("witnesses over different fields")
    if not X.is_square() or X.shape != Y.shape:
        raise SizeMismatch("witnesses need square matrices of equal size")
    ta = cycle_type(X, seed=seed)
    tb = cycle_type(Y, seed=seed)
    match = gentype_matching(ta.generalized(), tb.generalized())
    if match is None:
        return None
    p = _glue_direction(match)
    q = _glue_direction(_reverse_match(match))
    fy = frobenius_form(Y).invariant_factors
    if frobenius_form(mat_eval_poly(p, X)).invariant_factors != fy:
        raise VerificationError("p(X) is not similar to Y")
    fx = frobenius_form(X).invariant_factors
    if frobenius_form(mat_eval_poly(q, Y)).invariant_factors != fx:
        raise VerificationError("q(Y) is not similar to X")
    return p, q


# -- conjugacy of centralizer algebras --


@dataclass(frozen=True)
class ConjugacyCertificate:
    """Decision with evidence.

    When conjugate: p(X) is similar to Y via the conjugator U (that is,
    U^-1 p(X) U = Y), q(Y) is similar to X, and U^-1 Cent(X) U equals
    Cent(Y); the span identity is re-verified before the certificate is
    issued.  When not conjugate, the two generalized types differ and
    the witness fields are None.
    """

    conjugate: bool
    gentype_x: object
    gentype_y: object
    p: object = None
    q: object = None
    conjugator: object = None


def centralizers_conjugate(X, Y, seed=0):
    """Decide conjugacy of the centralizer algebras and certify it."""
    if X.ctx != Y.ctx:
        raise CtxMismatch("conjugacy over different fields")
    if not X.is_square() or X.shape != Y.shape:
        raise SizeMismatch("conjugacy needs square matrices of equal size")
    ta = cycle_type(X, seed=seed)
    tb = cycle_type(Y, seed=seed)
    gta, gtb = ta.generalized(), tb.generalized()
    match = gentype_matching(gta, gtb)
    if match is None:
        return ConjugacyCertificate(False, gta, gtb)
    p = _glue_direction(match)
    q = _glue_direction(_reverse_match(match))
    U = similar_conjugator(mat_eval_poly(p, X), Y)
    if U is None:
        raise VerificationError("p(X) is not similar to Y")
    if frobenius_form(mat_eval_poly(q, Y)).invariant_factors != frobenius_form(X).invariant_factors:
        raise VerificationError("q(Y) is not similar to X")
    Uinv = U.inverse()
    bx = centralizer_basis(X)
    by = centralizer_basis(Y)
    moved = [Uinv * B * U for B in bx.matrices]
    if _span_rref(X.ctx, moved) != _span_rref(X.ctx, by.matrices):
        raise VerificationError("conjugated centralizer span mismatch")
    return ConjugacyCertificate(True, gta, gtb, p=p, q=q, conjugator=U)


# -- brute-force oracle over small prime fields --


@lru_cache(maxsize=None)
def _gl_with_inverses(p, n):
    ctx = prime_field(p)
    out = []
    for entries in itertools.product(range(p), repeat=n * n):
        M = Matrix(ctx, [entries[i * n : (i + 1) * n] for i in range(n)])
        try:
            inv = M.inverse()
        except SingularMatrix:
            continue
        out.append((M, inv))
    return tuple(out)


def cent_conjugate_bruteforce(X, Y):
    """Search all of GL_n(F_p) for U with U^-1 Cent(X) U = Cent(Y).

    Independent of the type machinery; guards against instances with
    more than 2^25 candidate matrices.
    """
    if X.ctx != Y.ctx:
        raise CtxMismatch("conjugacy over different fields")
    if not isinstance(X.ctx, PrimeField):
        raise TooLarge("brute force runs over prime fields only")
    if not X.is_square() or X.shape != Y.shape:
        raise SizeMismatch("conjugacy needs square matrices of equal size")
    p, n = X.ctx.p, X.nrows
    if p ** (n * n) > 1 << 25:
        raise TooLarge("GL_%d(F_%d) enumeration is out of range" % (n, p))
    bx = centralizer_basis(X)
    by = centralizer_basis(Y)
    if bx.dim != by.dim:
        return False
    target = _span_rref(X.ctx, by.matrices)
    for U, Uinv in _gl_with_inverses(p, n):
        moved = [Uinv * B * U for B in bx.matrices]
        if _span_rref(X.ctx, moved) == target:
            return True
    return False
