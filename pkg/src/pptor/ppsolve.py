"""pp-formula evaluation and pp-types over finitely generated abelian groups.

evaluate solves C·x̄ + D·ȳ = 0 coordinate by coordinate: in ℤ/m the free
solutions are the projection onto the x̄-block of the integer kernel of
[C | D | m·I], a lattice cached per (C, D, m).

pp-types of elements over a parameter subgroup are decided two ways: a
canonical descriptor (memberships a − m ∈ p^k N + N[p^l]) and an exact
bidirectional homomorphism oracle, valid because finite abelian groups are
pure-injective.  The oracle is authoritative; the acceptance suite pins
their agreement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import PpFormula, normalize
from .groups import (
    Element,
    FgGroup,
    GroupError,
    Homomorphism,
    Subgroup,
    abelian_groups_upto,
    direct_sum,
    is_isomorphic,
)
from .intlinalg import hermite_row_basis, kernel_basis, lattice_sum, solve_diophantine


class PpSolveError(ValueError):
    pass


# ---------------------------------------------------------------------------
# evaluation

_coord_cache: dict = {}


def _coordinate_lattice(C, D, m: int):
    """HNF basis (in ℤ^nfree) of the solutions of C·x + D·y ≡ 0 mod m.

    m = 0 means the coordinate is a copy of ℤ.
    """
    key = (C, D, m)
    hit = _coord_cache.get(key)
    if hit is not None:
        return hit
    neq = len(C)
    nfree = len(C[0]) if neq else 0
    nbound = len(D[0]) if neq else 0
    if neq == 0:
        rows = [[1 if j == i else 0 for j in range(nfree)] for i in range(nfree)]
    else:
        A = [
            list(C[e]) + list(D[e])
            + [m if k == e else 0 for k in range(neq)]
            for e in range(neq)
        ]
        if m == 0:
            A = [row[: nfree + nbound] for row in A]
        proj = [vec[:nfree] for vec in kernel_basis(A)]
        if m != 0:
            proj += [[m if j == i else 0 for j in range(nfree)]
                     for i in range(nfree)]
        rows = hermite_row_basis(proj)
    rows = tuple(tuple(r) for r in rows)
    _coord_cache[key] = rows
    return rows


def power_group(M: FgGroup, n: int) -> FgGroup:
    return direct_sum(*([M] * n)) if n else FgGroup(())


def evaluate(f: PpFormula, M: FgGroup) -> Subgroup:
    """The solution set {ā ∈ M^n : M ⊨ f(ā)} as a Subgroup of M^n."""
    mf = normalize(f)
    n = len(f.free_vars)
    P = power_group(M, n)
    rank = M.rank
    rows = []
    for c in range(rank):
        lat = _coordinate_lattice(mf.C, mf.D, M.moduli[c])
        for r in lat:
            row = [0] * (n * rank)
            for i, v in enumerate(r):
                row[i * rank + c] = v
            rows.append(row)
    return Subgroup(P, rows)


@dataclass
class InclusionFailure(PpSolveError):
    witness: tuple

    def __str__(self):
        return f"inclusion violated; witness {self.witness}"


def index(f: PpFormula, g: PpFormula, M: FgGroup):
    """[f[M] : g[M]], checking g[M] ⊆ f[M] first (witness on failure)."""
    if len(f.free_vars) != len(g.free_vars):
        raise PpSolveError("formulas have different free arities")
    Sf = evaluate(f, M)
    Sg = evaluate(g, M)
    fb = list(map(list, Sf.basis))
    from .intlinalg import in_lattice

    for r in Sg.basis:
        if not in_lattice(fb, list(r)):
            wit = Sf.ambient.element(r)
            raise InclusionFailure(tuple(wit.coords))
    return Sg.index_in(Sf)


# ---------------------------------------------------------------------------
# constrained homomorphisms (the pp-type oracle)


def find_constrained_hom(source: FgGroup, target: FgGroup, constraints):
    """A Homomorphism source → target with f(a) = b for each (a, b) in
    constraints (elements, or coordinate sequences), or None.

    Solved as one integer linear system in the matrix entries, with one
    slack unknown per congruence modulo a target modulus.
    """
    r1, r2 = source.rank, target.rank
    nx = r1 * r2
    rows_A: list[list[int]] = []
    rhs: list[int] = []
    slack_mods: list[int] = []  # modulus per congruence row (0 = exact)

    def add_congruence(coeff_x: dict[int, int], t: int, value: int):
        rows_A.append([coeff_x.get(i, 0) for i in range(nx)])
        slack_mods.append(t)
        rhs.append(value)

    # compatibility: d_i · f(e_i) = 0
    for i, d in enumerate(source.moduli):
        if d == 0:
            continue
        for j, t in enumerate(target.moduli):
            add_congruence({i * r2 + j: d}, t, 0)
    # interpolation constraints
    for a, b in constraints:
        ac = a.coords if isinstance(a, Element) else tuple(a)
        bc = b.coords if isinstance(b, Element) else tuple(b)
        for j, t in enumerate(target.moduli):
            add_congruence(
                {i * r2 + j: ac[i] for i in range(r1)}, t, bc[j]
            )

    nslack = sum(1 for t in slack_mods if t)
    A = []
    si = 0
    for row, t in zip(rows_A, slack_mods):
        srow = [0] * nslack
        if t:
            srow[si] = t
            si += 1
        A.append(row + srow)
    sol = solve_diophantine(A, rhs)
    if sol is None:
        return None
    matrix = [[sol[i * r2 + j] for j in range(r2)] for i in range(r1)]
    return Homomorphism(source, target, matrix)


def enumerate_homs(source: FgGroup, target: FgGroup):
    """All homomorphisms source → target by DFS over generator images.

    Independent cross-check for find_constrained_hom; finite groups only.
    """
    if not (source.is_finite and target.is_finite):
        raise GroupError("hom enumeration requires finite groups")
    cand = []
    for d in source.moduli:
        ann = target.annihilator_lattice(d)
        opts = []
        seen = set()
        H = Subgroup(target, ann)
        for e in H.elements():
            if e.coords not in seen:
                seen.add(e.coords)
                opts.append(list(e.coords))
        cand.append(sorted(opts))
    for combo in _product(cand):
        yield Homomorphism(source, target, combo)


def _product(lists):
    if not lists:
        yield []
        return
    for head in lists[0]:
        for tail in _product(lists[1:]):
            yield [head] + tail


# ---------------------------------------------------------------------------
# pp-type descriptors


def _v_p(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _primes_of(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PpTypeDescriptor:
    """Satisfied canonical conditions of a over M inside N.

    A condition (p, k, l, m) asserts a − m ∈ p^k N + N[p^l]; that family
    generates every pp-definable subgroup of a finite abelian group (the
    lattice generated by the two chains p^k N and N[p^l]), so the table
    pins the pp-type.  k, l run up to K_p = v_p(exp N); m over the
    parameter group in its abstract coordinates.
    """

    m_moduli: tuple[int, ...]
    kp: tuple[tuple[int, int], ...]  # (p, K_p) pairs, ascending p
    satisfied: frozenset  # (p, k, l, m_abstract_coords)

    def lookup(self, p: int, k: int, l: int, m_coords) -> bool:
        kp = dict(self.kp)
        K = kp.get(p, 0)
        if min(k, K) == 0:
            return True  # p^0·N + N[p^l] = N contains everything
        return (p, min(k, K), min(l, K), tuple(m_coords)) in self.satisfied


def _mixed_sum_lattice(N: FgGroup, p: int, k: int, l: int):
    """HNF coordinate lattice of p^k N + N[p^l]."""
    g = N.rank
    pk = p ** k
    pkN = [[pk if j == i else 0 for j in range(g)] for i in range(g)]
    return lattice_sum(pkN, N.annihilator_lattice(p ** l), N.relation_basis)


def pp_type_descriptor(a: Element, M: Subgroup, N: FgGroup,
                       check_purity: bool = True,
                       identification=None) -> PpTypeDescriptor:
    """Descriptor of a over the parameter subgroup M inside N.

    By default parameters are indexed through M's canonical abstract form;
    identification=(Mg, emb) overrides this with an explicit reference group
    Mg and embedding rows emb (ambient coords per Mg coordinate), so types
    over differently embedded copies of the same group stay comparable.
    """
    if a.group != N or (isinstance(M, Subgroup) and M.ambient != N):
        raise PpSolveError("element/parameter group not inside the ambient group")
    if not N.is_finite:
        raise PpSolveError("pp-type descriptors require a finite ambient group")
    if check_purity:
        from .purity import is_pure

        if not is_pure(M, N):
            raise PpSolveError("parameter subgroup is not pure in the ambient group")
    if identification is None:
        Mg, emb = M.as_group_with_embedding()
    else:
        Mg, emb = identification
    exp = N.exponent()
    primes = _primes_of(exp) if exp > 1 else []
    kp = tuple((p, _v_p(exp, p)) for p in primes)
    params = []
    for x in Mg.elements():
        amb = N.element(
            [sum(c * emb[i][j] for i, c in enumerate(x.coords))
             for j in range(N.rank)]
        )
        params.append((x.coords, amb))
    sat = set()
    from .intlinalg import in_lattice

    for p, K in kp:
        for k in range(K + 1):
            for l in range(K + 1):
                lat = _mixed_sum_lattice(N, p, k, l)
                for mc, amb in params:
                    d = a - amb
                    if in_lattice(lat, list(d.coords)):
                        sat.add((p, k, l, mc))
    return PpTypeDescriptor(Mg.moduli, kp, frozenset(sat))


def pp_type_equal(d1: PpTypeDescriptor, d2: PpTypeDescriptor) -> bool:
    """Clamped comparison: conditions beyond K_p repeat the K_p value."""
    if d1.m_moduli != d2.m_moduli:
        raise PpSolveError("descriptors over different parameter groups")
    primes = sorted({p for p, _ in d1.kp} | {p for p, _ in d2.kp})
    kp1, kp2 = dict(d1.kp), dict(d2.kp)
    from itertools import product as iproduct

    m_space = list(iproduct(*(range(max(m, 1)) for m in d1.m_moduli)))
    for p in primes:
        K = max(kp1.get(p, 0), kp2.get(p, 0))
        for k in range(K + 1):
            for l in range(K + 1):
                for mc in m_space:
                    if d1.lookup(p, k, l, mc) != d2.lookup(p, k, l, mc):
                        return False
    return True


def hom_oracle_equal(a1: Element, M1: Subgroup, N1: FgGroup,
                     a2: Element, M2: Subgroup, N2: FgGroup) -> bool:
    """Authoritative pp-type equality: homomorphisms N1 → N2 and N2 → N1,
    each fixing the common parameter group pointwise and exchanging a1, a2.

    Valid because finite abelian groups are pure-injective: a type-preserving
    partial map extends to a homomorphism, and conversely homomorphisms
    preserve pp-formulas.
    """
    M1g, emb1 = M1.as_group_with_embedding()
    M2g, emb2 = M2.as_group_with_embedding()
    if M1g.moduli != M2g.moduli:
        raise PpSolveError("parameter groups are not identified")

    def amb(N, emb, coords):
        return N.element(
            [sum(c * emb[i][j] for i, c in enumerate(coords))
             for j in range(N.rank)]
        )

    cons12 = [(amb(N1, emb1, g.coords), amb(N2, emb2, g.coords))
              for g in M1g.generators()]
    cons12.append((a1, a2))
    cons21 = [(b, a) for a, b in cons12]
    return (find_constrained_hom(N1, N2, cons12) is not None
            and find_constrained_hom(N2, N1, cons21) is not None)


# ---------------------------------------------------------------------------
# type counting


def _pure_embeddings(M: FgGroup, N: FgGroup):
    """All pure embeddings M → N as (Subgroup, emb) with emb a row of
    ambient coordinates per coordinate of M."""
    from .purity import is_pure

    if M.order() == 1:
        yield N.zero_subgroup(), [[0] * N.rank for _ in range(M.rank)]
        return
    cand = []
    for d in M.moduli:
        H = Subgroup(N, N.annihilator_lattice(d))
        cand.append(sorted(set(e.coords for e in H.elements())))
    for combo in _product(cand):
        images = [N.element(c) for c in combo]
        if not _is_injective(M, N, images):
            continue
        S = Subgroup.from_generators(N, images)
        if is_pure(S, N):
            yield S, [list(im.coords) for im in images]


def _is_injective(M, N, images):
    seen = set()
    for x in M.elements():
        img = N.zero()
        for c, im in zip(x.coords, images):
            img = img + c * im
        if img.coords in seen:
            return False
        seen.add(img.coords)
    return True


def count_types(M: FgGroup, bound: int, use_oracle: bool = False) -> int:
    """Number of pp-types over M realized in pure torsion extensions of
    order ≤ bound (classes of triples (N, embedding, a))."""
    if not M.is_finite:
        raise PpSolveError("count_types requires a finite parameter group")
    if bound < M.order():
        raise PpSolveError("bound must be at least |M|")
    reps = []  # (descriptor, (a, emb, N)) representatives
    for N in abelian_groups_upto(bound):
        for S, emb in _pure_embeddings(M, N):
            if not is_isomorphic(S.as_group(), M):
                continue
            for a in N.elements():
                d = pp_type_descriptor(a, S, N, check_purity=False,
                                       identification=(M, emb))
                hit = False
                for dr, (ar, embr, Nr) in reps:
                    if pp_type_equal(d, dr):
                        if use_oracle:
                            assert _oracle_equal_emb(
                                a, emb, N, ar, embr, Nr, M)
                        hit = True
                        break
                if not hit:
                    reps.append((d, (a, emb, N)))
    return len(reps)


def _oracle_equal_emb(a1, emb1, N1, a2, emb2, N2, Mref: FgGroup) -> bool:
    cons12 = [(N1.element(r1), N2.element(r2))
              for r1, r2 in zip(emb1, emb2)]
    cons12.append((a1, a2))
    cons21 = [(b, a) for a, b in cons12]
    return (find_constrained_hom(N1, N2, cons12) is not None
            and find_constrained_hom(N2, N1, cons21) is not None)
