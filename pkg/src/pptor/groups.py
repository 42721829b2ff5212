"""Finitely generated abelian groups with exact integer arithmetic.

A group is stored as a tuple of coordinate moduli: modulus 0 means an
infinite cyclic coordinate, modulus m ≥ 1 a ℤ/m coordinate.  Subgroups are
row lattices R ⊆ L ⊆ ℤ^g (R the relation lattice) kept in canonical
Hermite form, so equality of subgroups is equality of matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, inf, lcm

from .intlinalg import (
    hermite_row_basis,
    in_lattice,
    lattice_coords,
    lattice_index,
    lattice_intersection,
    lattice_sum,
    smith_normal_form,
    snf_diagonal,
)


class GroupError(ValueError):
    pass


def _prime_factors(n: int) -> dict[int, int]:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class FgGroup:
    """ℤ^g modulo the lattice spanned by m_i·e_i for each nonzero modulus."""

    def __init__(self, moduli=()):
        moduli = tuple(int(m) for m in moduli)
        if any(m < 0 for m in moduli):
            raise GroupError("moduli must be nonnegative")
        self.moduli = moduli
        self._canonical = None

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def relation_basis(self) -> list[list[int]]:
        g = self.rank
        return [
            [m if j == i else 0 for j in range(g)]
            for i, m in enumerate(self.moduli)
            if m != 0
        ]

    def _canonical_form(self):
        if self._canonical is None:
            diag = snf_diagonal(self.relation_basis) if self.relation_basis else []
            nonzero = [d for d in diag if d]
            free = self.rank - len(nonzero)
            self._canonical = (tuple(d for d in nonzero if d != 1), free)
        return self._canonical

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self._canonical_form()[0]

    @property
    def free_rank(self) -> int:
        return self._canonical_form()[1]

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self):
        if not self.is_finite:
            return inf
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def exponent(self) -> int:
        if not self.is_finite:
            raise GroupError("exponent is defined for finite groups only")
        inv = self.invariant_factors
        return inv[-1] if inv else 1

    def element(self, coords) -> "Element":
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise GroupError(f"expected {self.rank} coordinates, got {len(coords)}")
        coords = tuple(
            c % m if m else c for c, m in zip(coords, self.moduli)
        )
        return Element(self, coords)

    def zero(self) -> "Element":
        return self.element((0,) * self.rank)

    def generators(self) -> list["Element"]:
        g = self.rank
        return [self.element([1 if j == i else 0 for j in range(g)])
                for i in range(g) if self.moduli[i] != 1]

    def elements(self):
        """All elements; finite groups only."""
        if not self.is_finite:
            raise GroupError("cannot enumerate an infinite group")
        for coords in itertools.product(*(range(max(m, 1)) for m in self.moduli)):
            yield Element(self, coords)

    def annihilator_lattice(self, n: int) -> list[list[int]]:
        """HNF basis of {x ∈ ℤ^g : n·x ∈ relation lattice} (coords of M[n])."""
        g = self.rank
        rows = []
        for i, m in enumerate(self.moduli):
            # n·x_i ≡ 0 (mod m) ⟺ x_i ≡ 0 (mod m/gcd(m,n)); on a free
            # coordinate n·x_i = 0 forces x_i = 0 unless n = 0
            if m == 0:
                if n == 0:
                    rows.append([1 if j == i else 0 for j in range(g)])
                continue
            step = m // gcd(m, n) if n else 1
            rows.append([step if j == i else 0 for j in range(g)])
        return hermite_row_basis(rows) if rows else []

    def torsion_lattice(self) -> list[list[int]]:
        """HNF basis of the coordinate lattice of t(M)."""
        g = self.rank
        rows = [
            [1 if j == i else 0 for j in range(g)]
            for i, m in enumerate(self.moduli)
            if m != 0
        ]
        return hermite_row_basis(rows) if rows else []

    def subgroup(self, gens) -> "Subgroup":
        return Subgroup.from_generators(self, gens)

    def full_subgroup(self) -> "Subgroup":
        g = self.rank
        return Subgroup(self, [[1 if j == i else 0 for j in range(g)]
                               for i in range(g)])

    def zero_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.relation_basis)

    def __eq__(self, other):
        return isinstance(other, FgGroup) and self.moduli == other.moduli

    def __hash__(self):
        return hash(self.moduli)

    def __str__(self):
        if not self.moduli:
            return "0"
        parts = []
        for m in self.moduli:
            parts.append("Z" if m == 0 else f"Z/{m}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FgGroup({self.moduli})"


@dataclass(frozen=True)
class Element:
    group: FgGroup
    coords: tuple[int, ...]

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return self.group.element(
            [a + b for a, b in zip(self.coords, other.coords)]
        )

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return self.group.element(
            [a - b for a, b in zip(self.coords, other.coords)]
        )

    def __neg__(self) -> "Element":
        return self.group.element([-a for a in self.coords])

    def __rmul__(self, n: int) -> "Element":
        return self.group.element([n * a for a in self.coords])

    def _check(self, other):
        if self.group != other.group:
            raise GroupError("elements of different groups")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def order(self):
        """Least n ≥ 1 with n·a = 0, or inf for infinite order."""
        n = 1
        for c, m in zip(self.coords, self.group.moduli):
            if m == 0:
                if c != 0:
                    return inf
            elif c % m:
                n = lcm(n, m // gcd(m, c % m))
        return n

    def __str__(self):
        return "(" + ", ".join(map(str, self.coords)) + ")"


def order_of(a: Element):
    return a.order()


class Subgroup:
    """A subgroup of an FgGroup, canonically a row lattice R ⊆ L ⊆ ℤ^g."""

    def __init__(self, ambient: FgGroup, lattice_rows):
        self.ambient = ambient
        rows = [list(map(int, r)) for r in lattice_rows]
        basis = hermite_row_basis(rows + ambient.relation_basis)
        self.basis = tuple(tuple(r) for r in basis)

    @classmethod
    def from_generators(cls, ambient: FgGroup, gens) -> "Subgroup":
        rows = []
        for g in gens:
            if isinstance(g, Element):
                if g.group != ambient:
                    raise GroupError("generator not in the ambient group")
                rows.append(list(g.coords))
            else:
                rows.append(list(map(int, g)))
                if len(rows[-1]) != ambient.rank:
                    raise GroupError("generator has wrong length")
        return cls(ambient, rows)

    def contains(self, a: Element) -> bool:
        if a.group != self.ambient:
            raise GroupError("element not in the ambient group")
        return in_lattice(list(map(list, self.basis)), list(a.coords))

    def __le__(self, other: "Subgroup") -> bool:
        if self.ambient != other.ambient:
            raise GroupError("subgroups of different groups")
        ob = list(map(list, other.basis))
        return all(in_lattice(ob, list(r)) for r in self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def order(self):
        """|L/R|, i.e. the number of elements, or inf."""
        idx = lattice_index(list(map(list, self.basis)),
                            self.ambient.relation_basis)
        return inf if idx is None else idx

    def sum(self, other: "Subgroup") -> "Subgroup":
        if self.ambient != other.ambient:
            raise GroupError("subgroups of different groups")
        return Subgroup(self.ambient, lattice_sum(self.basis, other.basis))

    __add__ = sum

    def intersection(self, other: "Subgroup") -> "Subgroup":
        if self.ambient != other.ambient:
            raise GroupError("subgroups of different groups")
        rows = lattice_intersection(list(map(list, self.basis)),
                                    list(map(list, other.basis)))
        return Subgroup(self.ambient, rows)

    def add_element(self, a: Element) -> "Subgroup":
        return Subgroup(self.ambient, list(self.basis) + [list(a.coords)])

    def index_in(self, other: "Subgroup"):
        """[other : self]; self ⊆ other required."""
        if not self <= other:
            raise GroupError("not a sub-subgroup")
        idx = lattice_index(list(map(list, other.basis)),
                            list(map(list, self.basis)))
        return inf if idx is None else idx

    def elements(self):
        """Elements of the subgroup as ambient Elements; finite only."""
        grp, emb = self.as_group_with_embedding()
        for x in grp.elements():
            yield self.ambient.element(
                [sum(c * emb[i][j] for i, c in enumerate(x.coords))
                 for j in range(self.ambient.rank)]
            )

    def as_group_with_embedding(self):
        """(H as an abstract FgGroup, rows = ambient coords of its generators).

        H = L/R; relative to the basis rows of L, R has coordinate lattice
        given by lattice_coords of each R-basis row.
        """
        L = list(map(list, self.basis))
        g = self.ambient.rank
        if not L:
            return FgGroup(()), []
        rel = []
        for row in self.ambient.relation_basis:
            coeffs = lattice_coords(L, row)
            assert coeffs is not None
            rel.append(coeffs)
        grp, proj = _group_from_lattice(len(L), hermite_row_basis(rel))
        # proj maps ℤ^{|L|} coords onto grp coords; invert on generators:
        # generator i of grp corresponds to the lattice vector with
        # projection e_i.  Solve via the unimodular change of basis inside
        # _group_from_lattice, which returns the embedding too.
        emb_rows = _lattice_section(len(L), hermite_row_basis(rel), grp, proj)
        embed = [[sum(er[i] * L[i][j] for i in range(len(L))) for j in range(g)]
                 for er in emb_rows]
        return grp, embed

    def as_group(self) -> FgGroup:
        return self.as_group_with_embedding()[0]

    def __str__(self):
        return f"<{len(self.basis)} basis rows in {self.ambient}>"

    __repr__ = __str__


def _group_from_lattice(ngens: int, lattice: list[list[int]]):
    """(ℤ^ngens / lattice, projection matrix V).

    Coordinates of x in the quotient are (x·V)_i mod s_i restricted to the
    kept columns; returned group has one coordinate per kept column.
    """
    if not lattice:
        grp = FgGroup((0,) * ngens)
        V = [[1 if i == j else 0 for j in range(ngens)] for i in range(ngens)]
        return grp, {"V": V, "moduli": [0] * ngens, "keep": list(range(ngens))}
    _, S, V = smith_normal_form(lattice)
    k = len(lattice)
    diag = [S[i][i] for i in range(min(k, ngens))]
    moduli = [diag[i] if i < len(diag) else 0 for i in range(ngens)]
    keep = [i for i, m in enumerate(moduli) if m != 1]
    grp = FgGroup(tuple(moduli[i] for i in keep))
    return grp, {"V": V, "moduli": moduli, "keep": keep}


def _project_coords(proj, x):
    V = proj["V"]
    n = len(V)
    a = [sum(x[r] * V[r][i] for r in range(n)) for i in range(n)]
    return [a[i] % proj["moduli"][i] if proj["moduli"][i] else a[i]
            for i in proj["keep"]]


def _lattice_section(ngens: int, lattice, grp: FgGroup, proj):
    """Rows: for each quotient generator e_i, a ℤ^ngens vector mapping to it."""
    V = proj["V"]
    # x = a·V^{-1}; generator i of the quotient is a = e_{keep[i]},
    # so the section row is row keep[i] of V^{-1}.
    _, _, _, _, Vi = _inverse_via_snf(V)
    return [Vi[i] for i in proj["keep"]]


def _inverse_via_snf(V):
    # V is unimodular; invert exactly
    U, S, W, Ui, Wi = smith_normal_form([list(r) for r in V], inverses=True)
    # V = Ui S Wi with S = I (up to signs ±1 impossible: SNF diag of unimodular
    # is all ones), so V^{-1} = W S^{-1} U = W U
    n = len(V)
    assert all(S[i][i] == 1 for i in range(n))
    inv = [[sum(W[i][t] * U[t][j] for t in range(n)) for j in range(n)]
           for i in range(n)]
    return U, S, W, Ui, inv


def group_from_presentation(rel, ngens: int) -> FgGroup:
    """ℤ^ngens modulo the lattice spanned by the rows of rel."""
    rows = [list(map(int, r)) for r in rel]
    for r in rows:
        if len(r) != ngens:
            raise GroupError("relation row has wrong length")
    return _group_from_lattice(ngens, hermite_row_basis(rows))[0]


def quotient(M: FgGroup, H: Subgroup) -> FgGroup:
    return quotient_with_projection(M, H)[0]


def quotient_with_projection(M: FgGroup, H: Subgroup):
    """(M/H, map sending an Element of M to its image Element of M/H)."""
    if H.ambient != M:
        raise GroupError("subgroup of a different group")
    grp, proj = _group_from_lattice(M.rank, list(map(list, H.basis)))

    def project(a: Element) -> Element:
        return grp.element(_project_coords(proj, list(a.coords)))

    return grp, project


def is_isomorphic(M: FgGroup, N: FgGroup) -> bool:
    return (M.invariant_factors == N.invariant_factors
            and M.free_rank == N.free_rank)


def direct_sum(*groups: FgGroup) -> FgGroup:
    moduli = tuple(m for G in groups for m in G.moduli)
    return FgGroup(moduli)


class Homomorphism:
    """Given by a matrix: row i is the image of source generator e_i."""

    def __init__(self, source: FgGroup, target: FgGroup, matrix):
        self.source = source
        self.target = target
        self.matrix = tuple(tuple(int(c) for c in row) for row in matrix)
        if len(self.matrix) != source.rank:
            raise GroupError("one image row per source generator required")
        for row, m in zip(self.matrix, source.moduli):
            if len(row) != target.rank:
                raise GroupError("image row has wrong length")
            if m != 0:
                img = target.element(row)
                if not (m * img).is_zero():
                    raise GroupError(
                        f"incompatible homomorphism: {m}·{img} ≠ 0 in target"
                    )

    def __call__(self, a: Element) -> Element:
        if a.group != self.source:
            raise GroupError("element not in the source group")
        g = self.target.rank
        return self.target.element(
            [sum(c * self.matrix[i][j] for i, c in enumerate(a.coords))
             for j in range(g)]
        )

    def image_of_subgroup(self, H: Subgroup) -> Subgroup:
        if H.ambient != self.source:
            raise GroupError("subgroup of a different group")
        g = self.target.rank
        rows = [
            [sum(c * self.matrix[i][j] for i, c in enumerate(r))
             for j in range(g)]
            for r in H.basis
        ]
        return Subgroup(self.target, rows)

    def image(self) -> Subgroup:
        return self.image_of_subgroup(self.source.full_subgroup())


# ---------------------------------------------------------------------------
# group DSL: Z, Z/n, +, ^, parentheses


def parse_group(text: str) -> FgGroup:
    """Parse e.g. '(Z/4)^3 + Z/2 + Z^2' into an FgGroup."""
    tokens = _tokenize_group(text)
    pos = [0]

    def peek():
        return tokens[pos[0]]

    def take(kind=None):
        tok = tokens[pos[0]]
        if kind and tok[0] != kind:
            raise GroupError(f"expected {kind!r}, got {tok[1]!r} in group expression")
        pos[0] += 1
        return tok

    def parse_expr():
        parts = [parse_power()]
        while peek()[0] == "+":
            take()
            parts.append(parse_power())
        return direct_sum(*parts)

    def parse_power():
        base = parse_base()
        if peek()[0] == "^":
            take()
            n = take("int")[1]
            if n < 0:
                raise GroupError("negative power in group expression")
            return direct_sum(*([base] * n))
        return base

    def parse_base():
        tok = peek()
        if tok[0] == "(":
            take()
            g = parse_expr()
            take(")")
            return g
        if tok[0] == "Z":
            take()
            if peek()[0] == "/":
                take()
                n = take("int")[1]
                if n < 1:
                    raise GroupError("Z/n requires n >= 1")
                return FgGroup((n,))
            return FgGroup((0,))
        if tok[0] == "int" and tok[1] == 0:
            take()
            return FgGroup(())
        raise GroupError(f"unexpected token {tok[1]!r} in group expression")

    g = parse_expr()
    if peek()[0] != "eof":
        raise GroupError(f"unexpected trailing token {peek()[1]!r}")
    return g


def _tokenize_group(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
            continue
        if ch == "Z":
            tokens.append(("Z", "Z"))
            i += 1
            continue
        if ch in "+^/()":
            tokens.append((ch, ch))
            i += 1
            continue
        raise GroupError(f"unexpected character {ch!r} in group expression")
    tokens.append(("eof", None))
    return tokens


# ---------------------------------------------------------------------------
# enumeration helpers


def _partitions(n: int):
    """Partitions of n as non-increasing tuples."""
    if n == 0:
        yield ()
        return
    def rec(n, maxpart):
        if n == 0:
            yield ()
            return
        for first in range(min(n, maxpart), 0, -1):
            for rest in rec(n - first, first):
                yield (first,) + rest
    yield from rec(n, n)


def abelian_groups_of_order(n: int) -> list[FgGroup]:
    """All abelian groups of order n, one per isomorphism class."""
    if n < 1:
        raise GroupError("order must be positive")
    factors = _prime_factors(n)
    per_prime = []
    for p, e in sorted(factors.items()):
        per_prime.append([tuple(p ** a for a in part) for part in _partitions(e)])
    out = []
    for combo in itertools.product(*per_prime) if per_prime else [()]:
        moduli = tuple(m for part in combo for m in part)
        out.append(FgGroup(moduli))
    return out


def abelian_groups_upto(n: int) -> list[FgGroup]:
    return [G for k in range(1, n + 1) for G in abelian_groups_of_order(k)]


def all_subgroups(M: FgGroup) -> list[Subgroup]:
    """All subgroups of a finite group, by closure under element addition."""
    if not M.is_finite:
        raise GroupError("subgroup enumeration requires a finite group")
    elems = list(M.elements())
    zero = M.zero_subgroup()
    seen = {zero.basis: zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for H in frontier:
            for a in elems:
                if H.contains(a):
                    continue
                H2 = H.add_element(a)
                if H2.basis not in seen:
                    seen[H2.basis] = H2
                    nxt.append(H2)
        frontier = nxt
    return sorted(seen.values(), key=lambda H: (H.order(), H.basis))
