import random

import pytest

from pptor import corpus, ppsolve
from pptor.formulas import normalize, parse
from pptor.groups import FgGroup, Subgroup, abelian_groups_upto, all_subgroups
from pptor.kernels import brute_force_solutions
from pptor.purity import is_pure


def test_evaluate_socle_in_z8_z2():
    M = FgGroup((8, 2))
    S = ppsolve.evaluate(parse("2*x = 0"), M)
    assert S.order() == 4


def test_evaluate_divisible_layer():
    M = FgGroup((8, 2))
    S = ppsolve.evaluate(parse("2*x = 0 & E y. x = 4*y"), M)
    assert S.order() == 2
    assert S.contains(M.element([4, 0]))
    assert not S.contains(M.element([0, 1]))


def test_evaluate_two_free_vars():
    M = FgGroup((4,))
    S = ppsolve.evaluate(parse("x1 = 2*x2"), M)
    # pairs (2b mod 4, b): 4 solutions in M^2
    assert S.order() == 4
    assert S.contains(ppsolve.power_group(M, 2).element([2, 1]))


def test_evaluate_against_brute_force_random():
    rng = random.Random(12)
    for _ in range(150):
        f = corpus.random_formula(rng)
        M = corpus.random_group(rng, moduli_pool=(2, 3, 4, 8),
                                max_rank=2, free_ok=False)
        m = normalize(f)
        S = ppsolve.evaluate(f, M)
        want = brute_force_solutions(m.C, m.D, M.moduli)
        assert S.order() == len(want)
        for assign in want:
            flat = [c for x in assign for c in x]
            assert S.contains(S.ambient.element(flat))


def test_evaluate_free_group():
    M = FgGroup((0,))
    S = ppsolve.evaluate(parse("E y. x = 2*y"), M)
    assert S.contains(M.element([2]))
    assert not S.contains(M.element([1]))


def test_index():
    B = FgGroup((8,))
    f = parse("E y. x = 2*y")
    g = parse("E y. x = 4*y")
    assert ppsolve.index(f, g, B) == 2
    with pytest.raises(ppsolve.InclusionFailure):
        ppsolve.index(g, f, B)


def test_find_constrained_hom():
    M, N = FgGroup((4,)), FgGroup((8,))
    h = ppsolve.find_constrained_hom(M, N, [(M.element([1]), N.element([2]))])
    assert h is not None
    assert h(M.element([1])) == N.element([2])
    assert ppsolve.find_constrained_hom(
        M, N, [(M.element([1]), N.element([1]))]) is None


def test_find_constrained_hom_matches_enumeration():
    rng = random.Random(13)
    for _ in range(80):
        M = corpus.random_group(rng, max_rank=2, moduli_pool=(2, 3, 4),
                                free_ok=False)
        N = corpus.random_group(rng, max_rank=2, moduli_pool=(2, 4, 8),
                                free_ok=False)
        a = corpus.random_element(rng, M)
        b = corpus.random_element(rng, N)
        found = ppsolve.find_constrained_hom(M, N, [(a, b)]) is not None
        exists = any(h(a) == b for h in ppsolve.enumerate_homs(M, N))
        assert found == exists


def _pure_subgroups(N):
    return [S for S in all_subgroups(N) if is_pure(S, N)]


def test_descriptor_equals_oracle_small():
    records = []
    for N in abelian_groups_upto(6):
        for S in _pure_subgroups(N):
            key = S.as_group().moduli
            for a in N.elements():
                d = ppsolve.pp_type_descriptor(a, S, N, check_purity=False)
                records.append((key, d, a, S, N))
    for i, (k1, d1, a1, S1, N1) in enumerate(records):
        for k2, d2, a2, S2, N2 in records[i:]:
            if k1 != k2:
                continue
            assert ppsolve.pp_type_equal(d1, d2) == \
                ppsolve.hom_oracle_equal(a1, S1, N1, a2, S2, N2)


def test_descriptor_rejects_impure_base():
    N = FgGroup((4,))
    S = Subgroup.from_generators(N, [N.element([2])])
    with pytest.raises(ppsolve.PpSolveError):
        ppsolve.pp_type_descriptor(N.element([1]), S, N)


def test_count_types_frozen_values():
    zero = FgGroup(())
    assert ppsolve.count_types(zero, 1) == 1
    assert ppsolve.count_types(zero, 2) == 2
    assert ppsolve.count_types(zero, 4) == 5


def test_count_types_oracle_agreement():
    zero = FgGroup(())
    for bound in (1, 2, 3, 4):
        assert ppsolve.count_types(zero, bound) == \
            ppsolve.count_types(zero, bound, use_oracle=True)
    M = FgGroup((2,))
    assert ppsolve.count_types(M, 4) == ppsolve.count_types(M, 4, use_oracle=True)
