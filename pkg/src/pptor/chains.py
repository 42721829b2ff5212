"""Low-pp descending chains: evaluation, stabilization detection, and the
strict-descent witness chain on truncations of B = ⊕_n ℤ(pⁿ)^k.

The witness chain is φ_n(x) := (p·x = 0 ∧ ∃y. x = pⁿ·y); φ₀ is low and on
the truncation B = ⊕_{m≤M0}(ℤ/p^m)^k the chain descends strictly with
index p^k per step until it hits 0 at n = M0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .formulas import Equation, PpFormula, is_low
from .groups import Element, FgGroup, Subgroup, direct_sum
from .ppsolve import evaluate

NOT_FOUND = None


@dataclass
class FormulaChain:
    """Closed-form chain n ↦ φ_n(x); low_head records is_low(template(0))."""

    template: Callable[[int], PpFormula]
    low_head: bool = field(init=False)

    def __post_init__(self):
        f0 = self.template(0)
        if len(f0.free_vars) != 1:
            raise ValueError("chain formulas must have one free variable")
        self.low_head = is_low(f0)

    def __call__(self, n: int) -> PpFormula:
        return self.template(n)


@dataclass
class ChainEvaluation:
    levels: list[Subgroup]
    descending: bool
    first_ascent: int | None  # least n with φ_n[M] ⊉ φ_{n+1}[M]


def evaluate_chain(c: FormulaChain, M: FgGroup, n_max: int) -> ChainEvaluation:
    levels = [evaluate(c(n), M) for n in range(n_max + 1)]
    first_ascent = None
    for n in range(n_max):
        if not (levels[n + 1] <= levels[n]):
            first_ascent = n
            break
    return ChainEvaluation(levels, first_ascent is None, first_ascent)


def stabilization_index(c: FormulaChain, M: FgGroup, n_max: int):
    """Least n₀ with φ_{n₀}[M] = … = φ_{n_max}[M], or NOT_FOUND (None)."""
    levels = evaluate_chain(c, M, n_max).levels
    if n_max >= 1 and levels[n_max - 1] != levels[n_max]:
        return NOT_FOUND  # still moving at the end of the range
    n0 = n_max
    while n0 > 0 and levels[n0 - 1] == levels[n_max]:
        n0 -= 1
    return n0


def witness_formula(p: int, n: int) -> PpFormula:
    """φ_n(x) = (p·x = 0 ∧ ∃y. x = pⁿ·y)."""
    eq1 = Equation(((p, "x"),), ((0, "x"),))
    eq2 = Equation(((1, "x"),), ((p ** n, "y"),))
    return PpFormula(("x",), ("y",), (eq1, eq2))


def witness_chain(p: int, M0: int, k: int) -> tuple[FormulaChain, FgGroup]:
    """The Theorem-ss witness chain and its truncated group
    B = ⊕_{m≤M0} (ℤ/p^m)^k."""
    if M0 < 1 or k < 1:
        raise ValueError("M0 and k must be at least 1")
    B = direct_sum(*[FgGroup((p ** m,) * k) for m in range(1, M0 + 1)])
    return FormulaChain(lambda n: witness_formula(p, n)), B


def witness_b_elements(p: int, M0: int) -> list[Element]:
    """The proof's elements b_n = a_0 + a_1 + ⋯ + a_{n−1} (k = 1), where
    a_n ∈ φ_n[B] \\ φ_{n+1}[B]; existence of each a_n is verified."""
    chain, B = witness_chain(p, M0, 1)
    a = []
    for n in range(M0):
        Sn = evaluate(chain(n), B)
        Sn1 = evaluate(chain(n + 1), B)
        found = None
        for e in Sn.elements():
            if not Sn1.contains(e):
                found = e
                break
        if found is None:
            raise AssertionError(f"strict descent fails at level {n}")
        a.append(found)
    out = [B.zero()]
    for n in range(1, M0 + 1):
        out.append(out[-1] + a[n - 1])
    return out
