import random

import pytest

from centtype import (
    Matrix,
    NotSquare,
    Poly,
    SingularMatrix,
    SizeMismatch,
    block_diag,
    charpoly,
    companion,
    frobenius_form,
    mat_eval_poly,
    minpoly,
    prime_field,
    rationals,
    restrict_to_basis,
)
from centtype.construct import random_invertible, random_matrix

Q = rationals()
F2 = prime_field(2)
F5 = prime_field(5)


def test_matrix_constructors():
    M = Matrix(Q, [[1, 2], [3, 4]])
    assert M.shape == (2, 2)
    assert M.entry(0, 1) == Q.elem(2)
    assert Matrix.identity(Q, 3) * M.zero(Q, 3, 2) == M.zero(Q, 3, 2)
    with pytest.raises(SizeMismatch):
        Matrix(Q, [[1, 2], [3]])


def test_matrix_ring_ops():
    rng = random.Random(4)
    for ctx in (Q, F5):
        for _ in range(15):
            A = random_matrix(ctx, 3, rng)
            B = random_matrix(ctx, 3, rng)
            C = random_matrix(ctx, 3, rng)
            assert A + B == B + A
            assert (A * B) * C == A * (B * C)
            assert A * (B + C) == A * B + A * C
            assert (A.transpose()).transpose() == A
            assert (A * B).transpose() == B.transpose() * A.transpose()


def test_rref_rank_kernel():
    rng = random.Random(8)
    for ctx in (Q, F2, F5):
        for _ in range(20):
            m = rng.randrange(1, 5)
            n = rng.randrange(1, 5)
            A = random_matrix(ctx, m, rng) if m == n else Matrix(
                ctx, [[random_matrix(ctx, 1, rng).entry(0, 0) for _ in range(n)] for _ in range(m)]
            )
            r = A.rank()
            ker = A.kernel()
            assert len(ker) == n - r
            for v in ker:
                assert all(e == ctx.zero for e in A.apply(v))
    A = Matrix(Q, [[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    assert A.rank() == 2
    assert len(A.kernel()) == 1


def test_det_inverse():
    rng = random.Random(21)
    for ctx in (Q, F5):
        for _ in range(15):
            n = rng.randrange(1, 5)
            A = random_invertible(ctx, n, rng)
            Ainv = A.inverse()
            assert A * Ainv == Matrix.identity(ctx, n)
            assert A.det() * Ainv.det() == ctx.one
    S = Matrix(Q, [[1, 2], [2, 4]])
    assert S.det() == Q.zero
    with pytest.raises(SingularMatrix):
        S.inverse()


def test_det_multiplicative():
    rng = random.Random(13)
    for _ in range(15):
        A = random_matrix(F5, 4, rng)
        B = random_matrix(F5, 4, rng)
        assert (A * B).det() == A.det() * B.det()


def test_solve_right():
    A = Matrix(Q, [[2, 1], [1, 3]])
    b = (Q.elem(5), Q.elem(10))
    x = A.solve_right(b)
    assert A.apply(x) == b
    S = Matrix(Q, [[1, 1], [1, 1]])
    assert S.solve_right((Q.elem(0), Q.elem(1))) is None


def test_charpoly_minpoly():
    C = companion(Poly(Q, [-2, 0, 1]))
    assert charpoly(C) == Poly(Q, [-2, 0, 1])
    assert minpoly(C) == Poly(Q, [-2, 0, 1])
    # scalar matrix: charpoly (x-c)^n, minpoly x-c
    S = Matrix(Q, [[3, 0], [0, 3]])
    assert charpoly(S) == Poly(Q, [-3, 1]) ** 2
    assert minpoly(S) == Poly(Q, [-3, 1])
    with pytest.raises(NotSquare):
        charpoly(Matrix(Q, [[1, 2, 3], [4, 5, 6]]))


def test_minpoly_divides_charpoly():
    rng = random.Random(31)
    for ctx in (Q, F2, F5):
        for _ in range(20):
            A = random_matrix(ctx, rng.randrange(1, 5), rng)
            cp = charpoly(A)
            mp = minpoly(A)
            assert (cp % mp).is_zero()
            assert mat_eval_poly(mp, A).is_zero_matrix()


def test_companion():
    f = Poly(F5, [2, 3, 0, 1])
    C = companion(f)
    assert C.shape == (3, 3)
    assert charpoly(C) == f
    assert minpoly(C) == f
    # non-monic input is normalized, constants are rejected
    assert companion(Poly(F5, [4, 1, 0, 2])) == companion(Poly(F5, [4, 1, 0, 2]).monic())
    with pytest.raises(SizeMismatch):
        companion(Poly(F5, [2]))


def test_block_diag():
    A = companion(Poly(Q, [-2, 0, 1]))
    B = companion(Poly(Q, [-1, 1]))
    M = block_diag([A, B])
    assert M.shape == (3, 3)
    assert charpoly(M) == charpoly(A) * charpoly(B)


def test_mat_eval_poly():
    rng = random.Random(6)
    A = random_matrix(F5, 3, rng)
    f = Poly(F5, [1, 2, 0, 3])
    g = Poly(F5, [4, 0, 1])
    assert mat_eval_poly(f, A) * mat_eval_poly(g, A) == mat_eval_poly(f * g, A)
    assert mat_eval_poly(f + g, A) == mat_eval_poly(f, A) + mat_eval_poly(g, A)
    assert mat_eval_poly(Poly(F5, [1]), A) == Matrix.identity(F5, 3)


def test_frobenius_form_fixture():
    # diag(1, 1) has invariant factors (x-1, x-1)
    S = Matrix(Q, [[1, 0], [0, 1]])
    ff = frobenius_form(S)
    assert ff.invariant_factors == (Poly(Q, [-1, 1]), Poly(Q, [-1, 1]))
    C = companion(Poly(Q, [1, 2, 3, 1]))
    assert frobenius_form(C).invariant_factors == (Poly(Q, [1, 2, 3, 1]),)


def test_frobenius_form_random():
    rng = random.Random(77)
    for ctx in (Q, F2, F5):
        for _ in range(15):
            n = rng.randrange(1, 5)
            A = random_matrix(ctx, n, rng)
            ff = frobenius_form(A)
            # divisibility chain and reconstruction
            prev = None
            for d in ff.invariant_factors:
                assert d.is_monic()
                if prev is not None:
                    assert (d % prev).is_zero()
                prev = d
            assert sum(d.degree for d in ff.invariant_factors) == n
            assert ff.form == block_diag([companion(d) for d in ff.invariant_factors])
            P = ff.transform
            assert P * A * P.inverse() == ff.form
            assert ff.invariant_factors[-1] == minpoly(A)


def test_frobenius_form_similarity_invariance():
    rng = random.Random(19)
    for _ in range(10):
        A = random_matrix(F5, 4, rng)
        U = random_invertible(F5, 4, rng)
        B = U.inverse() * A * U
        assert frobenius_form(A).invariant_factors == frobenius_form(B).invariant_factors


def test_restrict_to_basis():
    # restriction of the companion of (x-1)(x-2) to the x-1 eigenspace
    A = Matrix(Q, [[1, 0], [0, 2]])
    basis = ((Q.elem(1), Q.elem(0)),)
    R = restrict_to_basis(A, basis)
    assert R == Matrix(Q, [[1]])
