import itertools
import random
import subprocess
import sys

import pytest

from pptor import corpus
from pptor.formulas import normalize
from pptor.kernels import (
    EnumerationLimit,
    brute_force_codes,
    brute_force_solutions,
    encode_assignment,
)


def naive_solutions(C, D, moduli):
    """Triple-loop reference, independent of the kernel implementation."""
    ranges = [range(m) for m in moduli]
    elements = list(itertools.product(*ranges)) or [()]
    nfree = len(C[0]) if C else 0
    nbound = len(D[0]) if C else 0
    out = []
    for xs in itertools.product(elements, repeat=nfree):
        ok = False
        for ys in itertools.product(elements, repeat=nbound):
            if all(
                all(
                    (sum(C[e][f] * xs[f][c] for f in range(nfree))
                     + sum(D[e][b] * ys[b][c] for b in range(nbound))) % m == 0
                    for c, m in enumerate(moduli)
                )
                for e in range(len(C))
            ):
                ok = True
                break
        if ok:
            out.append(xs)
    return out


def test_against_naive_reference():
    rng = random.Random(8)
    for _ in range(60):
        f = corpus.random_formula(rng, max_free=2, max_bound=2)
        M = corpus.random_group(rng, max_rank=2,
                                moduli_pool=(2, 3, 4), free_ok=False)
        m = normalize(f)
        got = brute_force_solutions(m.C, m.D, M.moduli)
        want = naive_solutions(m.C, m.D, M.moduli)
        assert sorted(got) == sorted(want)


def test_codes_consistent_with_solutions():
    rng = random.Random(9)
    for _ in range(60):
        f = corpus.random_formula(rng)
        M = corpus.random_group(rng, moduli_pool=(2, 3, 4), free_ok=False)
        m = normalize(f)
        sols, _, _, _ = brute_force_codes(m.C, m.D, M.moduli)
        decoded = brute_force_solutions(m.C, m.D, M.moduli)
        assert len(sols) == len(decoded)
        assert sorted(sols.tolist()) == sorted(
            encode_assignment(a, M.moduli) for a in decoded)


def test_solution_set_is_subgroup():
    rng = random.Random(10)
    for _ in range(30):
        f = corpus.random_formula(rng, max_free=1)
        M = corpus.random_group(rng, max_rank=2,
                                moduli_pool=(2, 3, 4), free_ok=False)
        m = normalize(f)
        sols = set(brute_force_solutions(m.C, m.D, M.moduli))
        for a in sols:
            for b in sols:
                s = tuple(
                    tuple((x + y) % mm for x, y, mm in zip(ac, bc, M.moduli))
                    for ac, bc in zip(a, b)
                )
                assert s in sols


def test_huge_coefficients_no_overflow():
    big = 10 ** 30
    sols = brute_force_solutions([[big + 1]], [[0]], (5,))
    # (10^30 + 1)·x ≡ x (mod 5)
    assert sols == [((0,),)]


def test_rejects_infinite_group():
    with pytest.raises(ValueError):
        brute_force_solutions([[1]], [[1]], (0,))


def test_table_size_guard():
    with pytest.raises(EnumerationLimit):
        brute_force_solutions([[1, 1]], [[1, 1]],
                              (2,) * 30)


def _corpus_digest():
    code = """
import hashlib, random
from pptor import corpus
from pptor.formulas import normalize
from pptor.kernels import brute_force_solutions, using_numba
rng = random.Random(9)
h = hashlib.sha256()
for _ in range(60):
    f = corpus.random_formula(rng)
    M = corpus.random_group(rng, moduli_pool=(2, 3, 4), free_ok=False)
    m = normalize(f)
    h.update(repr(brute_force_solutions(m.C, m.D, M.moduli)).encode())
print(using_numba(), h.hexdigest())
"""
    return code


def test_numba_and_numpy_paths_agree():
    import os
    digests = {}
    for no_numba in (False, True):
        env = dict(os.environ)
        env.pop("PPTOR_NO_NUMBA", None)
        if no_numba:
            env["PPTOR_NO_NUMBA"] = "1"
        out = subprocess.run([sys.executable, "-c", _corpus_digest()],
                             capture_output=True, text=True, env=env, check=True)
        used, digests[no_numba] = out.stdout.split()
        assert used == ("False" if no_numba else "True")
    assert digests[False] == digests[True]
