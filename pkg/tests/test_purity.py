import random

from pptor import corpus, purity
from pptor.groups import (
    FgGroup,
    Subgroup,
    abelian_groups_upto,
    all_subgroups,
    is_isomorphic,
    quotient,
)


def test_socle_of_z4_not_pure():
    M = FgGroup((4,))
    H = Subgroup.from_generators(M, [M.element([2])])
    assert not purity.is_pure(H, M)
    n, a = purity.purity_witness(H, M)
    assert n == 2 and a.coords == (2,)


def test_direct_summand_is_pure():
    M = FgGroup((4, 2))
    H = Subgroup.from_generators(M, [M.element([0, 1])])
    assert purity.is_pure(H, M)
    assert purity.purity_witness(H, M) is None


def test_2z_in_z_not_pure():
    M = FgGroup((0,))
    H = Subgroup.from_generators(M, [M.element([2])])
    assert not purity.is_pure(H, M)


def test_pure_iff_splitting_exhaustive_small():
    for M in abelian_groups_upto(16):
        for H in all_subgroups(M):
            assert purity.is_pure(H, M) == purity.is_pure_via_splitting(H, M)


def test_complement_properties():
    for M in abelian_groups_upto(16):
        for H in all_subgroups(M):
            K = purity.complement(H, M)
            if K is None:
                assert not purity.is_pure(H, M)
                continue
            assert purity.is_pure(H, M)
            assert H.sum(K) == M.full_subgroup()
            assert H.intersection(K).order() == 1
            assert is_isomorphic(K.as_group(), quotient(M, H))


def test_torsion_radical():
    M = FgGroup((0, 6, 4))
    T = purity.torsion_radical(M)
    assert T.order() == 24
    assert is_isomorphic(T.as_group(), FgGroup((6, 4)))
    assert purity.is_pure(T, M)
    assert purity.torsion_radical(quotient(M, T)).order() == 1


def test_torsion_functorial_random():
    rng = random.Random(14)
    for _ in range(60):
        M = corpus.random_group(rng)
        N = corpus.random_group(rng)
        f = corpus.random_homomorphism(rng, M, N)
        assert f.image_of_subgroup(purity.torsion_radical(M)) <= \
            purity.torsion_radical(N)


def test_primary_component():
    M = FgGroup((12, 18))
    P2 = purity.primary_component(M, 2)
    P3 = purity.primary_component(M, 3)
    assert P2.order() == 8
    assert P3.order() == 27
    assert P2.sum(P3) == M.full_subgroup()
    assert is_isomorphic(P2.as_group(), FgGroup((4, 2)))


def test_order_patterns():
    op = purity.OrderPattern
    assert purity.in_torsion_of_pe(op("zero"))
    assert purity.in_torsion_of_pe(op("finite-support", p=2, exponent=3))
    assert purity.in_torsion_of_pe(op("eventually-constant", p=3, exponent=2))
    assert not purity.in_torsion_of_pe(op("strictly-increasing", p=2))
