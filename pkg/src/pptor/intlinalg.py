"""Exact integer matrix algebra: Smith and Hermite normal forms, kernels,
Diophantine solving, and row-lattice arithmetic.

Everything here works on plain Python ints (arbitrary precision); matrices
are lists of lists.  Pivoting is deterministic (smallest absolute value,
ties broken by lowest index) so all outputs are reproducible.
"""

from __future__ import annotations

from math import gcd

Matrix = list[list[int]]


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    n = len(B[0]) if B else 0
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] if B else [0] * n
            for row in A]


def mat_vec(A: Matrix, v: list[int]) -> list[int]:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def det(A: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(A: Matrix, inverses: bool = False):
    """Return (U, S, V) with U*A*V = S, U and V unimodular, S diagonal and
    S[0][0] | S[1][1] | ... with nonnegative diagonal.

    With inverses=True returns (U, S, V, Uinv, Vinv).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [[int(x) for x in row] for row in A]
    U = identity_matrix(m)
    V = identity_matrix(n)
    Ui = identity_matrix(m) if inverses else None
    Vi = identity_matrix(n) if inverses else None

    def row_add(i, j, q):  # row_i += q * row_j
        S[i] = [a + q * b for a, b in zip(S[i], S[j])]
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]
        if Ui is not None:
            for r in range(m):
                Ui[r][j] -= q * Ui[r][i]

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]
        if Ui is not None:
            for r in range(m):
                Ui[r][i], Ui[r][j] = Ui[r][j], Ui[r][i]

    def row_neg(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]
        if Ui is not None:
            for r in range(m):
                Ui[r][i] = -Ui[r][i]

    def col_add(j, k, q):  # col_j += q * col_k
        for r in range(m):
            S[r][j] += q * S[r][k]
        for r in range(n):
            V[r][j] += q * V[r][k]
        if Vi is not None:
            Vi[k] = [a - q * b for a, b in zip(Vi[k], Vi[j])]

    def col_swap(j, k):
        for r in range(m):
            S[r][j], S[r][k] = S[r][k], S[r][j]
        for r in range(n):
            V[r][j], V[r][k] = V[r][k], V[r][j]
        if Vi is not None:
            Vi[j], Vi[k] = Vi[k], Vi[j]

    t = 0
    while t < min(m, n):
        done = False
        while True:
            # deterministic pivot: smallest |entry| in the block, row-major ties
            piv = None
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    v = abs(S[i][j])
                    if v and (best is None or v < best):
                        best = v
                        piv = (i, j)
            if piv is None:
                done = True
                break
            row_swap(t, piv[0])
            col_swap(t, piv[1])
            if S[t][t] < 0:
                row_neg(t)
            changed = False
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // S[t][t]
                    row_add(i, t, -q)
                    if S[i][t]:
                        changed = True
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // S[t][t]
                    col_add(j, t, -q)
                    if S[t][j]:
                        changed = True
            if changed:
                continue  # smaller remainders appeared; re-select pivot
            # divisibility: pivot must divide the remaining block
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % S[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if done:
            break
        t += 1
    if inverses:
        return U, S, V, Ui, Vi
    return U, S, V


def snf_diagonal(A: Matrix) -> list[int]:
    _, S, _ = smith_normal_form(A)
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


def hermite_row_basis(rows) -> list[list[int]]:
    """Unique row Hermite normal form of the lattice spanned by ``rows``.

    Echelon with positive pivots, entries above each pivot reduced into
    [0, pivot); zero rows dropped.  Two generating sets of the same lattice
    produce identical output.
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    if not work:
        return []
    n = len(work[0])
    basis: list[list[int]] = []
    r = 0
    for j in range(n):
        # gcd-eliminate column j among work[r:]
        while True:
            nz = [i for i in range(r, len(work)) if work[i][j]]
            if len(nz) <= 1:
                break
            # smallest |entry| becomes the eliminator
            k = min(nz, key=lambda i: (abs(work[i][j]), i))
            work[r], work[k] = work[k], work[r]
            for i in range(r + 1, len(work)):
                if work[i][j]:
                    q = work[i][j] // work[r][j]
                    work[i] = [a - q * b for a, b in zip(work[i], work[r])]
        nz = [i for i in range(r, len(work)) if work[i][j]]
        if not nz:
            continue
        work[r], work[nz[0]] = work[nz[0]], work[r]
        if work[r][j] < 0:
            work[r] = [-a for a in work[r]]
        basis.append(work[r])
        r += 1
    # reduce entries above pivots
    for idx in range(len(basis)):
        row = basis[idx]
        j = next(c for c, v in enumerate(row) if v)
        for k in range(idx):
            q = basis[k][j] // row[j]
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], row)]
    return [row for row in basis if any(row)]


def _pivot_col(row) -> int:
    return next(c for c, v in enumerate(row) if v)


def lattice_coords(basis: list[list[int]], v) -> list[int] | None:
    """Coefficients expressing v in an echelon (HNF) basis, or None."""
    v = list(map(int, v))
    coeffs = []
    for row in basis:
        j = _pivot_col(row)
        if v[j] % row[j]:
            return None
        q = v[j] // row[j]
        coeffs.append(q)
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    if any(v):
        return None
    return coeffs


def in_lattice(basis: list[list[int]], v) -> bool:
    return lattice_coords(basis, v) is not None


def reduce_mod_lattice(basis: list[list[int]], v) -> list[int]:
    """Canonical coset representative of v modulo the row lattice."""
    v = list(map(int, v))
    for row in basis:
        j = _pivot_col(row)
        q = v[j] // row[j]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return v


def kernel_basis(A: Matrix) -> list[list[int]]:
    """Basis of the integer kernel {x : A x = 0}."""
    m = len(A)
    n = len(A[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return identity_matrix(n)
    _, S, V = smith_normal_form(A)
    diag = [S[i][i] for i in range(min(m, n))]
    cols = [j for j in range(n) if j >= len(diag) or diag[j] == 0]
    return [[V[r][j] for r in range(n)] for j in cols]


def solve_diophantine(A: Matrix, b: list[int]) -> list[int] | None:
    """One integer solution x of A x = b, or None if unsolvable."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [0] * n
    U, S, V = smith_normal_form(A)
    c = mat_vec(U, b)
    y = [0] * n
    for i in range(m):
        s = S[i][i] if i < min(m, n) else 0
        if s == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % s:
                return None
            if i < n:
                y[i] = c[i] // s
    return mat_vec(V, y)


def lattice_sum(*bases) -> list[list[int]]:
    rows = [row for b in bases for row in b]
    return hermite_row_basis(rows)


def lattice_intersection(b1: list[list[int]], b2: list[list[int]]) -> list[list[int]]:
    """HNF basis of the intersection of two row lattices."""
    if not b1 or not b2:
        return []
    n = len(b1[0])
    k1, k2 = len(b1), len(b2)
    # x·b1 = y·b2  <=>  [b1^T | -b2^T]·(x;y) = 0
    A = [[b1[i][c] for i in range(k1)] + [-b2[j][c] for j in range(k2)]
         for c in range(n)]
    rows = []
    for vec in kernel_basis(A):
        x = vec[:k1]
        rows.append([sum(x[i] * b1[i][c] for i in range(k1)) for c in range(n)])
    return hermite_row_basis(rows)


def lattice_index(outer: list[list[int]], inner: list[list[int]]):
    """Index [outer : inner] for row lattices with inner ⊆ outer.

    Returns a positive int, or None when the index is infinite.
    """
    if len(inner) < len(outer):
        return None
    Q = []
    for row in inner:
        coeffs = lattice_coords(outer, row)
        if coeffs is None:
            raise ValueError("inner lattice not contained in outer lattice")
        Q.append(coeffs)
    d = det(Q)
    return abs(d) if d else None
