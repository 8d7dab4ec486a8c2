"""Time the compiled and pure-Python kernels on the same random inputs.

    python3 benchmarks/bench_kernels.py [--sizes 8,16,32] [--repeat 5]

Prints one line per (kernel, n) with the best time of each backend and the
speedup, after checking that both return identical results.
"""
import argparse
import random
import timeit

from affknuth import _kernels_py

try:
    from affknuth import _kernels
except ImportError:
    _kernels = None


def random_balls(n, rng, spread=3):
    cols = [c + n * rng.randint(-spread, spread) for c in rng.sample(range(1, n + 1), n)]
    return list(range(1, n + 1)), cols


def cases(n, rng):
    rows, cols = random_balls(n, rng)
    m = max(_kernels_py.chain_lengths(rows, cols, n))
    init = [_kernels_py.NEG_INF] * n
    init[0] = 1
    srows = sorted(rng.sample(range(1, n + 1), m))
    scols = sorted(rng.sample(range(1, n + 1), m))
    bound = _kernels_py.stream_bounds(rows, cols, srows, scols, n)
    return {
        "chain_lengths": (rows, cols, n),
        "maxplus_numbering": (rows, cols, n, m, init),
        "minplus_numbering": (rows, cols, n, m, bound),
        "stream_bounds": (rows, cols, srows, scols, n),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="8,16,32")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels are not built; only the Python backend is available")
    rng = random.Random(args.seed)
    print(f"{'kernel':20} {'n':>4} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for n in (int(s) for s in args.sizes.split(",")):
        for name, call_args in cases(n, rng).items():
            py = getattr(_kernels_py, name)
            t_py = min(timeit.repeat(lambda: py(*call_args), number=1, repeat=args.repeat))
            if _kernels is None:
                print(f"{name:20} {n:4} {t_py * 1e3:10.3f} {'-':>10} {'-':>8}")
                continue
            cy = getattr(_kernels, name)
            if cy(*call_args) != py(*call_args):
                raise SystemExit(f"{name} disagrees between backends at n={n}")
            t_cy = min(timeit.repeat(lambda: cy(*call_args), number=1, repeat=args.repeat))
            print(f"{name:20} {n:4} {t_py * 1e3:10.3f} {t_cy * 1e3:10.3f} {t_py / t_cy:8.1f}x")


if __name__ == "__main__":
    main()
