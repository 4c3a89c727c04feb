"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row runs one kernel on the same input under both backends and checks
that the outputs agree before reporting the speedup.
"""

import argparse
import time

import numpy as np

from liftedcodes import kernels
from liftedcodes.code import all_vectors
from liftedcodes.lifted import HammingSpec, LiftedCode


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def cases():
    big = LiftedCode(HammingSpec(2, 3), 4).code     # 4096 cosets, degree 105
    mid = LiftedCode(HammingSpec(2, 3), 2).code     # 64 cosets, 4^7 vectors
    rep = LiftedCode(HammingSpec(2, 2), 4).code     # 256 cosets, degree 45
    nbr_big = kernels.neighbor_table(big.generators, big.field.p, big.key_digits)
    nbr_rep = kernels.neighbor_table(rep.generators, rep.field.p, rep.key_digits)
    nbr_mid = kernels.neighbor_table(mid.generators, mid.field.p, mid.key_digits)
    dist_mid = kernels.bfs_from(nbr_mid, 0)
    vecs = np.asarray(kernels.vector_syndromes(mid.contributions, mid.field.p, mid.key_digits))
    space = all_vectors(mid.Q, mid.n)
    words = mid.codewords()
    near = kernels.nearest_distances(space, words)

    yield "neighbor_table (2,3,4)", lambda k: k.neighbor_table(big.generators, big.field.p, big.key_digits)
    yield "bfs_from (2,3,4)", lambda k: k.bfs_from(nbr_big, 0)
    yield "all_sources_regularity (2,3,2)", lambda k: k.all_sources_regularity(nbr_mid)
    yield "all_sources_regularity (2,2,4)", lambda k: k.all_sources_regularity(nbr_rep)
    yield "layer_counts (2,3,2)", lambda k: k.layer_counts(nbr_mid, dist_mid)
    yield "vector_syndromes (2,3,2)", lambda k: k.vector_syndromes(mid.contributions, mid.field.p, mid.key_digits)
    yield "nearest_distances (2,3,2)", lambda k: k.nearest_distances(space, words)
    yield "hamming_layer_counts (2,3,2)", lambda k: k.hamming_layer_counts(near, mid.Q, mid.n)
    assert len(vecs) == mid.Q ** mid.n


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    if "cython" not in kernels.backends:
        print("compiled backend not built; only the fallback is available")
        return 1
    py, cy = kernels.backends["python"], kernels.backends["cython"]
    print(f"{'kernel':<34}{'python':>12}{'cython':>12}{'speedup':>10}")
    for name, run in cases():
        t_py, out_py = _time(lambda: run(py), args.repeat)
        t_cy, out_cy = _time(lambda: run(cy), args.repeat)
        if not _same(out_py, out_cy):
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:<34}{t_py * 1e3:10.1f}ms{t_cy * 1e3:10.2f}ms{t_py / t_cy:9.0f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
