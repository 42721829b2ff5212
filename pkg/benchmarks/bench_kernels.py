"""Compare the numba and pure-numpy brute-force kernels on a fixed corpus.

Run:  python benchmarks/bench_kernels.py
The two paths are selected by PPTOR_NO_NUMBA; each runs in a subprocess so
the flag is read at import time, exactly as in normal use.  The digest line
doubles as a correctness check: both paths must produce identical output.
"""

import os
import subprocess
import sys

WORKLOAD = """
import hashlib, random, time
from pptor import corpus
from pptor.formulas import normalize
from pptor.kernels import brute_force_solutions, using_numba

rng = random.Random(2026)
cases = []
for _ in range(300):
    f = corpus.random_formula(rng, max_free=2, max_bound=3)
    M = corpus.random_group(rng, moduli_pool=(2, 3, 4, 8, 9), max_rank=2,
                            free_ok=False)
    cases.append((normalize(f), M.moduli))

# warm up (JIT compilation on the numba path)
brute_force_solutions(cases[0][0].C, cases[0][0].D, cases[0][1])

h = hashlib.sha256()
t0 = time.perf_counter()
for m, moduli in cases:
    h.update(repr(brute_force_solutions(m.C, m.D, moduli)).encode())
dt = time.perf_counter() - t0
print(f"numba={using_numba()} time={dt:.3f}s digest={h.hexdigest()[:16]}")
"""


def run(no_numba: bool) -> str:
    env = dict(os.environ)
    env.pop("PPTOR_NO_NUMBA", None)
    if no_numba:
        env["PPTOR_NO_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKLOAD],
                         capture_output=True, text=True, env=env, check=True)
    return out.stdout.strip()


def main() -> int:
    lines = [run(False), run(True)]
    for line in lines:
        print(line)
    digests = {line.split("digest=")[1] for line in lines}
    if len(digests) != 1:
        print("MISMATCH: the two paths disagree", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
