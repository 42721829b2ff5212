from pptor import chains, ppsolve
from pptor.formulas import is_low, parse
from pptor.groups import FgGroup, is_isomorphic


def test_witness_formula_shape():
    f = chains.witness_formula(2, 3)
    assert f.free_vars == ("x",)
    assert is_low(f)
    # over Z/16: elements of order ≤ 2 divisible by 8
    M = FgGroup((16,))
    S = ppsolve.evaluate(f, M)
    assert S.order() == 2
    assert S.contains(M.element([8]))


def test_witness_chain_group():
    chain, B = chains.witness_chain(2, 3, 2)
    assert is_isomorphic(B, FgGroup((2, 2, 4, 4, 8, 8)))
    assert chain.low_head


def test_chain_descent_and_stabilization():
    chain, B = chains.witness_chain(2, 3, 1)
    ev = chains.evaluate_chain(chain, B, 4)
    orders = [S.order() for S in ev.levels]
    assert orders == [8, 4, 2, 1, 1]
    for a, b in zip(ev.levels, ev.levels[1:]):
        assert b <= a
    assert chains.stabilization_index(chain, B, 4) == 3


def test_chain_indices_are_p_to_k():
    for p, k in ((2, 1), (2, 3), (3, 2)):
        chain, B = chains.witness_chain(p, 2, k)
        for n in range(2):
            assert ppsolve.index(chain(n), chain(n + 1), B) == p ** k


def test_stabilization_not_found_when_still_moving():
    chain, B = chains.witness_chain(2, 5, 1)
    # range ends while the chain is still strictly descending
    assert chains.stabilization_index(chain, B, 3) is None


def test_witness_b_elements():
    bs = chains.witness_b_elements(2, 4)
    chain, B = chains.witness_chain(2, 4, 1)
    assert len(bs) == 5  # partial sums b_0 = 0 through b_4
    for n in range(4):
        a = bs[n + 1] + (-bs[n])
        assert ppsolve.evaluate(chain(n), B).contains(a)
        assert not ppsolve.evaluate(chain(n + 1), B).contains(a)


def test_generic_formula_chain():
    template = lambda n: parse(f"3*x = 0 & E y. x = {3 ** n}*y") \
        if n else parse("3*x = 0")
    chain = chains.FormulaChain(template)
    B = FgGroup((27,))
    ev = chains.evaluate_chain(chain, B, 3)
    assert [S.order() for S in ev.levels] == [3, 3, 3, 1]
