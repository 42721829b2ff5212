import random

import pytest

from pptor import cardinals as C
from pptor import corpus, invariants
from pptor.groups import FgGroup, GroupError, direct_sum, is_isomorphic


def test_ulm_of_cyclic():
    inv = invariants.ulm_invariants(FgGroup((8,)))
    assert inv.alpha_dict() == {(2, 3): 1}
    assert inv.gamma == ()


def test_ulm_of_mixed_primary():
    G = FgGroup((2, 4, 4, 9))
    inv = invariants.ulm_invariants(G)
    assert inv.alpha_dict() == {(2, 1): 1, (2, 2): 2, (3, 2): 1}


def test_ulm_additivity_random():
    rng = random.Random(16)
    for _ in range(60):
        G = corpus.random_group(rng, moduli_pool=(2, 3, 4, 8, 9), free_ok=False)
        H = corpus.random_group(rng, moduli_pool=(2, 3, 4, 8, 9), free_ok=False)
        assert invariants.ulm_invariants(direct_sum(G, H)) == \
            invariants.ulm_invariants(G) + invariants.ulm_invariants(H)


def test_reconstruct_round_trip():
    rng = random.Random(17)
    for _ in range(60):
        G = corpus.random_group(rng, moduli_pool=(2, 3, 4, 8, 9), free_ok=False)
        assert is_isomorphic(
            invariants.reconstruct(invariants.ulm_invariants(G)), G)


def test_ulm_rejects_infinite_group():
    with pytest.raises(GroupError):
        invariants.ulm_invariants(FgGroup((0, 2)))


def test_symbolic_rendering():
    assert invariants.Cyclic(2, 3).render() == "Z(2^3)"
    assert invariants.Prufer(5).render() == "Z(5^inf)"
    assert invariants.DirectPower(invariants.Prufer(2), C.ALEPH0).render() == \
        "Z(2^inf)^(aleph0)"
    s = invariants.SumOverN(invariants.DirectPower(
        invariants.Cyclic("p", "n"), C.Var("λ")))
    assert s.render() == "Sum_n(Z(p^n)^(λ))"


def test_limit_model_tor_w1():
    tpl = invariants.limit_model_template(C.Var("λ"), "w1", "Tor")
    assert tpl.text == \
        "t(Prod_p(PE(Sum_n(Z(p^n)^(λ))))) ⊕ Sum_p(Z(p^inf)^(λ))"
    assert tpl.warning is not None  # λ-stability is open for a bare variable


def test_limit_model_cofinality_w_adds_power():
    w1 = invariants.limit_model_template(C.Var("λ"), "w1", 2).text
    w = invariants.limit_model_template(C.Var("λ"), "w", 2).text
    head1, tail1 = w1.split(" ⊕ ", 1)
    headw, tailw = w.split(" ⊕ ", 1)
    assert tail1 == tailw
    assert headw == head1 + "^(aleph0)"


def test_limit_model_no_warning_for_provably_stable():
    lam = C.parse_cardinal("2^aleph0")
    tpl = invariants.limit_model_template(lam, "w1", "Tor")
    assert tpl.warning is None


def test_limit_model_rejects_unstable():
    with pytest.raises(GroupError):
        invariants.limit_model_template(C.parse_cardinal("beth(w)"), "w1", "Tor")


def test_limit_model_rejects_bad_variant():
    with pytest.raises(GroupError):
        invariants.limit_model_template(C.Var("λ"), "w1", "nope")
    with pytest.raises(GroupError):
        invariants.limit_model_template(C.Var("λ"), "up", "Tor")
