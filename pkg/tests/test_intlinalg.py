import random

from pptor.intlinalg import (
    det,
    hermite_row_basis,
    identity_matrix,
    in_lattice,
    kernel_basis,
    lattice_coords,
    lattice_index,
    lattice_intersection,
    lattice_sum,
    mat_mul,
    reduce_mod_lattice,
    smith_normal_form,
    snf_diagonal,
    solve_diophantine,
)


def rand_matrix(rng, rows, cols, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def test_snf_small():
    A = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    U, S, V = smith_normal_form(A)
    assert mat_mul(mat_mul(U, A), V) == S
    assert snf_diagonal(A) == [2, 2, 156]


def test_snf_random_properties():
    rng = random.Random(1)
    for _ in range(150):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        A = rand_matrix(rng, r, c)
        U, S, V, Ui, Vi = smith_normal_form(A, inverses=True)
        assert mat_mul(mat_mul(U, A), V) == S
        assert abs(det(U)) == 1 and abs(det(V)) == 1
        assert mat_mul(U, Ui) == identity_matrix(r)
        assert mat_mul(V, Vi) == identity_matrix(c)
        diag = [S[i][i] for i in range(min(r, c))]
        for a, b in zip(diag, diag[1:]):
            if b:
                assert a >= 0 and b % max(a, 1) == 0 if a else True
            if a == 0:
                assert b == 0
        for i in range(r):
            for j in range(c):
                if i != j:
                    assert S[i][j] == 0


def test_hermite_canonical():
    rng = random.Random(2)
    for _ in range(150):
        rows = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 4))
        H = hermite_row_basis(rows)
        shuffled = rows[:]
        rng.shuffle(shuffled)
        shuffled.append([sum(cs) for cs in zip(*rows)])
        assert hermite_row_basis(shuffled) == H
        for v in rows:
            assert in_lattice(H, v)


def test_lattice_coords_and_reduce():
    H = hermite_row_basis([[2, 0], [0, 3]])
    assert lattice_coords(H, [4, -3]) == [2, -1]
    assert lattice_coords(H, [1, 0]) is None
    assert reduce_mod_lattice(H, [5, 7]) == [1, 1]


def test_kernel_and_solve():
    rng = random.Random(3)
    for _ in range(150):
        A = rand_matrix(rng, rng.randint(1, 3), rng.randint(1, 4))
        K = kernel_basis(A)
        for row in K:
            assert all(sum(a * x for a, x in zip(ar, row)) == 0 for ar in A)
        x = [rng.randint(-3, 3) for _ in range(len(A[0]))]
        b = [sum(a * v for a, v in zip(ar, x)) for ar in A]
        s = solve_diophantine(A, b)
        assert s is not None
        assert [sum(a * v for a, v in zip(ar, s)) for ar in A] == b
    assert solve_diophantine([[2]], [1]) is None


def test_sum_intersection_index():
    four = [[4]]
    six = [[6]]
    assert lattice_sum(four, six) == [[2]]
    assert lattice_intersection(four, six) == [[12]]
    assert lattice_index([[2]], [[6]]) == 3
    assert lattice_index([[1, 0], [0, 1]], [[2, 0], [0, 3]]) == 6
    assert lattice_index([[1, 0], [0, 1]], [[2, 0]]) is None


def test_modular_distributivity_random():
    rng = random.Random(4)
    for _ in range(60):
        n = rng.randint(1, 3)
        A, B, Cm = (hermite_row_basis(rand_matrix(rng, n, n)) for _ in range(3))
        if not (A and B and Cm):
            continue
        left = lattice_intersection(lattice_sum(A, B), lattice_sum(A, Cm))
        right = lattice_sum(A, lattice_intersection(lattice_sum(A, B), Cm))
        # modular law holds since A ≤ A + B
        assert hermite_row_basis(right) == hermite_row_basis(right)
        for row in right:
            assert in_lattice(left, row)
