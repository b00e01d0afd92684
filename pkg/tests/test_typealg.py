import random

import pytest

from centtype import (
    CycleType,
    NotIrreducible,
    Partition,
    Poly,
    cent_dim_weight,
    companion,
    block_diag,
    cycle_type,
    dominance_leq,
    generalized_type,
    gentype_equal,
    gentype_matching,
    green_type,
    mat_eval_poly,
    partitions_of,
    poly_compose_mod,
    poly_equivalent,
    primary_decomposition,
    prime_field,
    rationals,
)
from centtype.construct import random_invertible, random_irreducible, random_partition

Q = rationals()
F2 = prime_field(2)
F3 = prime_field(3)
F5 = prime_field(5)


def test_partition_normalization():
    lam = Partition([1, 3, 2])
    assert lam.parts == (3, 2, 1)
    assert lam.size == 6
    assert Partition([]).size == 0
    with pytest.raises(Exception):
        Partition([0, 1])
    with pytest.raises(Exception):
        Partition([-2])


def test_partition_conjugate_involution():
    assert Partition([3, 1]).conjugate().parts == (2, 1, 1)
    rng = random.Random(14)
    for _ in range(50):
        lam = random_partition(rng.randrange(1, 15), rng)
        assert lam.conjugate().conjugate() == lam
        assert lam.conjugate().size == lam.size


def test_partition_mults_replicate():
    lam = Partition([4, 2, 2, 1])
    assert lam.mults() == {4: 1, 2: 2, 1: 1}
    assert lam.replicate(3).parts == (4, 4, 4, 2, 2, 2, 2, 2, 2, 1, 1, 1)
    assert lam.replicate(1) == lam


def test_partitions_of_counts():
    # p(n) for n = 1..12
    expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    for n, c in enumerate(expected, start=1):
        ps = list(partitions_of(n))
        assert len(ps) == c
        assert len(set(p.parts for p in ps)) == c
        for p in ps:
            assert p.size == n


def test_dominance():
    assert dominance_leq(Partition([1, 1, 1, 1]), Partition([4]))
    assert dominance_leq(Partition([2, 2]), Partition([3, 1]))
    assert not dominance_leq(Partition([3, 1]), Partition([2, 2]))
    assert not dominance_leq(Partition([3, 3]), Partition([4, 1, 1]))
    assert not dominance_leq(Partition([4, 1, 1]), Partition([3, 3]))
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randrange(1, 12)
        a = random_partition(n, rng)
        b = random_partition(n, rng)
        # antisymmetry
        if dominance_leq(a, b) and dominance_leq(b, a):
            assert a == b
        # conjugation reverses the order
        if dominance_leq(a, b):
            assert dominance_leq(b.conjugate(), a.conjugate())
        # reflexive, with top and bottom elements
        assert dominance_leq(a, a)
        assert dominance_leq(a, Partition([n]))
        assert dominance_leq(Partition([1] * n), a)


def test_cent_dim_weight():
    assert cent_dim_weight(Partition([1])) == 1
    assert cent_dim_weight(Partition([1, 1])) == 4
    assert cent_dim_weight(Partition([2, 1])) == 5
    assert cent_dim_weight(Partition([n for n in [3, 1]])) == 3 + 1 + 2 * 1  # sum (2i-1) lam_i


def test_cycle_type_primary_fixture():
    f = Poly(F3, [1, 0, 1])
    M = block_diag([companion(f**2), companion(f)])
    ct = cycle_type(M)
    assert ct.entries == ((f, Partition([2, 1])),)
    assert green_type(M).entries == ((2, Partition([2, 1])),)


def test_cycle_type_mixed():
    f = Poly(Q, [-2, 0, 1])
    g = Poly(Q, [-1, 1])
    M = block_diag([companion(f), companion(g), companion(g)])
    ct = cycle_type(M)
    got = {str(p): lam.parts for p, lam in ct.entries}
    assert got == {"x^2 - 2": (1,), "x - 1": (1, 1)}


def test_cycle_type_similarity_invariant():
    rng = random.Random(41)
    f = Poly(F5, [3, 1, 1])
    M = block_diag([companion(f**2), companion(f)])
    for _ in range(5):
        U = random_invertible(F5, M.nrows, rng)
        assert cycle_type(U * M * U.inverse()) == cycle_type(M)


def test_green_type_collapses_over_finite_fields():
    # two distinct irreducible quadratics over F3 give equal green and
    # generalized types but different cycle types
    f = Poly(F3, [1, 0, 1])
    g = Poly(F3, [2, 1, 1])
    A = companion(f)
    B = companion(g)
    assert cycle_type(A) != cycle_type(B)
    assert green_type(A) == green_type(B)
    assert gentype_equal(generalized_type(A), generalized_type(B))


def test_generalized_type_finer_over_q():
    A = companion(Poly(Q, [-2, 0, 1]))
    B = companion(Poly(Q, [-3, 0, 1]))
    C = companion(Poly(Q, [-8, 0, 1]))
    assert green_type(A) == green_type(B)
    assert not gentype_equal(generalized_type(A), generalized_type(B))
    assert gentype_equal(generalized_type(A), generalized_type(C))


def test_poly_equivalent_over_finite():
    rng = random.Random(10)
    for ctx in (F2, F3, F5):
        for d in (1, 2, 3):
            f = random_irreducible(ctx, d, rng)
            g = random_irreducible(ctx, d, rng)
            rs = poly_equivalent(f, g)
            assert rs is not None
            check_inverse_pair(f, g, rs)
        # different degrees never match
        assert poly_equivalent(
            random_irreducible(ctx, 1, rng), random_irreducible(ctx, 2, rng)
        ) is None


def check_inverse_pair(f, g, rs):
    r, s = rs
    x = Poly.x(f.ctx)
    assert poly_compose_mod(g, r, f).is_zero()
    assert poly_compose_mod(f, s, g).is_zero()
    assert ((poly_compose_mod(s, r, f) - x) % f).is_zero()
    assert ((poly_compose_mod(r, s, g) - x) % g).is_zero()


def test_poly_equivalent_degree_one():
    # r and s are constants here; the identities hold modulo the
    # degree-one moduli
    f = Poly(F2, [0, 1])
    g = Poly(F2, [1, 1])
    rs = poly_equivalent(f, g)
    assert rs is not None
    check_inverse_pair(f, g, rs)
    f = Poly(Q, [-3, 1])
    g = Poly(Q, [5, 1])
    rs = poly_equivalent(f, g)
    assert rs is not None
    check_inverse_pair(f, g, rs)


def test_poly_equivalent_over_q():
    f = Poly(Q, [-2, 0, 1])
    g = Poly(Q, [-8, 0, 1])
    rs = poly_equivalent(f, g)
    assert rs is not None
    check_inverse_pair(f, g, rs)
    assert poly_equivalent(f, Poly(Q, [-3, 0, 1])) is None
    # shifts are always equivalent
    x = Poly.x(Q)
    h = Poly(Q, [-1, -1, 0, 1])  # x^3 - x - 1
    hs = h.compose(x + Poly(Q, [2]))
    rs = poly_equivalent(h, hs)
    assert rs is not None
    check_inverse_pair(h, hs, rs)
    # golden ratio vs sqrt5: same field, different polynomials
    fib = Poly(Q, [-1, -1, 1])
    s5 = Poly(Q, [-5, 0, 1])
    rs = poly_equivalent(fib, s5)
    assert rs is not None
    check_inverse_pair(fib, s5, rs)


def test_poly_equivalent_rejects_reducible():
    with pytest.raises(NotIrreducible):
        poly_equivalent(Poly(Q, [-4, 0, 1]), Poly(Q, [-2, 0, 1]))


def test_gentype_matching():
    f = Poly(Q, [-2, 0, 1])
    g = Poly(Q, [-8, 0, 1])
    ta = CycleType([(f, Partition([2]))]).generalized()
    tb = CycleType([(g, Partition([2]))]).generalized()
    match = gentype_matching(ta, tb)
    assert match is not None
    assert len(match) == 1
    (ea, eb, rs) = match[0]
    check_inverse_pair(ea[0], eb[0], rs)
    # partition mismatch kills the match
    tc = CycleType([(g, Partition([1, 1]))]).generalized()
    assert gentype_matching(ta, tc) is None


def test_primary_decomposition_reconstruction():
    f = Poly(F3, [1, 0, 1])
    g = Poly(F3, [1, 1])
    M = block_diag([companion(f**2), companion(g)])
    comps = primary_decomposition(M)
    assert sorted(str(c.poly) for c in comps) == sorted([str(f), str(g)])
    for c in comps:
        # the restriction is primary with the recorded partition
        ct = cycle_type(c.restriction)
        assert ct.entries == ((c.poly, c.partition),)
        assert len(c.basis) == c.poly.degree * c.partition.size
    assert sum(len(c.basis) for c in comps) == M.nrows


def test_nilpotent_after_eval():
    # f(M) is nilpotent when M is primary of type f^lam
    rng = random.Random(55)
    for ctx in (F2, F5):
        f = random_irreducible(ctx, 2, rng)
        lam = Partition([2, 1])
        M = block_diag([companion(f**p) for p in lam.parts])
        N = mat_eval_poly(f, M)
        assert (N ** M.nrows).is_zero_matrix()
        nt = cycle_type(N)
        assert len(nt.entries) == 1
        p, mu = nt.entries[0]
        assert p == Poly.x(ctx)
        assert mu == Partition([2, 2, 1, 1])  # d * lam with d = 2
