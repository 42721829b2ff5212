"""Purity, torsion radical, primary components, complements, and the
bounded-order membership criterion for t(PE(B)).

Purity of H ≤ M is decided by the classical criterion n·M ∩ H = n·H; for
finitely generated groups it is enough to range n over the divisors of the
torsion exponents of M and M/H (beyond those, both sides stop changing on
torsion and agree on free parts).  A splitting-based decision (existence of
a retraction M → H) is kept as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .groups import (
    FgGroup,
    GroupError,
    Subgroup,
    quotient,
)
from .intlinalg import hermite_row_basis, kernel_basis


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _scaled_lattice(n: int, basis, rank: int):
    return [[n * v for v in row] for row in basis]


def _torsion_exponent(M: FgGroup) -> int:
    inv = [d for d in M.invariant_factors]
    return inv[-1] if inv else 1


def is_pure(H: Subgroup, M: FgGroup) -> bool:
    """n·M ∩ H = n·H for the relevant n (pure ⟺ pp-preserving)."""
    if H.ambient != M:
        raise GroupError("subgroup of a different group")
    e = lcm(_torsion_exponent(M), _torsion_exponent(quotient(M, H)))
    full = M.full_subgroup()
    for n in _divisors(e):
        if n == 1:
            continue
        nM = Subgroup(M, _scaled_lattice(n, full.basis, M.rank))
        nH = Subgroup(M, _scaled_lattice(n, H.basis, M.rank))
        if nM.intersection(H) != nH:
            return False
    return True


def purity_witness(H: Subgroup, M: FgGroup):
    """(n, element) with element ∈ n·M ∩ H but ∉ n·H, or None if pure."""
    e = lcm(_torsion_exponent(M), _torsion_exponent(quotient(M, H)))
    full = M.full_subgroup()
    for n in _divisors(e):
        if n == 1:
            continue
        nM = Subgroup(M, _scaled_lattice(n, full.basis, M.rank))
        nH = Subgroup(M, _scaled_lattice(n, H.basis, M.rank))
        meet = nM.intersection(H)
        if meet != nH:
            for a in meet.elements():
                if not nH.contains(a):
                    return n, a
    return None


def is_pure_via_splitting(H: Subgroup, M: FgGroup) -> bool:
    """Independent decision: H is pure in a f.g. group iff it is a direct
    summand, iff a retraction M → H exists."""
    return _retraction(H, M) is not None


def _retraction(H: Subgroup, M: FgGroup):
    from .ppsolve import find_constrained_hom

    Hg, emb = H.as_group_with_embedding()
    cons = [(tuple(emb[i]),
             tuple(1 if j == i else 0 for j in range(Hg.rank)))
            for i in range(Hg.rank)]
    return find_constrained_hom(M, Hg, cons)


def torsion_radical(M: FgGroup) -> Subgroup:
    """t(M): the elements of finite order (= union of ψ[M], ψ low)."""
    return Subgroup(M, M.torsion_lattice())


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def primary_component(M: FgGroup, p: int) -> Subgroup:
    """The p-primary part of a torsion group M."""
    if not _is_prime(p):
        raise GroupError(f"{p} is not prime")
    if any(m == 0 for m in M.moduli):
        raise GroupError("primary components require a torsion group")
    g = M.rank
    rows = []
    for i, m in enumerate(M.moduli):
        q = m
        while q % p == 0:
            q //= p
        rows.append([q if j == i else 0 for j in range(g)])
    return Subgroup(M, rows)


def complement(H: Subgroup, M: FgGroup):
    """K with H ⊕ K = M, or None.

    For finite torsion M a complement exists iff H is pure (Lemma mod
    (1)⇔(5) at finite scale); construction: kernel of a retraction M → H.
    """
    if H.ambient != M:
        raise GroupError("subgroup of a different group")
    if not M.is_finite:
        raise GroupError("complement search requires a finite group")
    if not is_pure(H, M):
        return None
    r = _retraction(H, M)
    assert r is not None, "pure subgroup of a finite group must split"
    K = _hom_kernel(r)
    # sanity: direct-sum certificate
    assert H.sum(K) == M.full_subgroup()
    assert H.intersection(K).order() == 1
    return K


def _hom_kernel(h) -> Subgroup:
    """Kernel of a Homomorphism as a Subgroup of its source."""
    src, tgt = h.source, h.target
    g, t = src.rank, tgt.rank
    if t == 0:
        return src.full_subgroup()
    # unknowns (x, s): Σ_i x_i·A[i][j] + mod_j·s_j = 0 for each target coord
    A = []
    for j in range(t):
        row = [h.matrix[i][j] for i in range(g)]
        row += [tgt.moduli[j] if k == j else 0 for k in range(t)]
        A.append(row)
    rows = [vec[:g] for vec in kernel_basis(A)]
    return Subgroup(src, hermite_row_basis(rows) if rows else [])


# ---------------------------------------------------------------------------
# Order patterns: membership in t(PE(B)) inside Π_n B_n


@dataclass(frozen=True)
class OrderPattern:
    """Order sequence of an element of Π_n B_n with B_n ℤ(pⁿ)-homogeneous.

    kind 'zero': the zero sequence; 'finite-support': all but finitely many
    components vanish (bound: the largest order); 'eventually-constant':
    orders equal p^exponent from some index on; 'strictly-increasing':
    component n has order p^{rate·n + offset} with rate ≥ 1.
    """

    kind: str
    p: int = 2
    exponent: int = 0
    rate: int = 1
    offset: int = 0

    def __post_init__(self):
        if self.kind not in ("zero", "finite-support", "eventually-constant",
                            "strictly-increasing"):
            raise GroupError(f"unrecognized order pattern {self.kind!r}")
        if self.kind == "strictly-increasing" and self.rate < 1:
            raise GroupError("strictly-increasing pattern needs rate >= 1")


def in_torsion_of_pe(pattern: OrderPattern) -> bool:
    """True iff the order sequence is bounded — the membership criterion
    for t(PE(B)) inside Π_n B_n (bounded orders ⟺ torsion element)."""
    if pattern.kind in ("zero", "finite-support", "eventually-constant"):
        return True
    return False
