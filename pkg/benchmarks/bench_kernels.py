"""Compare the pure-Python and compiled kernels on realistic workloads.

Run:  python3 benchmarks/bench_kernels.py
"""

import random
import time

from samfilt._kernels import pure

try:
    from samfilt._kernels import _fast
except ImportError:
    _fast = None


def timeit(fn, *args, repeat=5):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return best


def bench(name, args_fn):
    args = args_fn()
    t_pure = timeit(getattr(pure, name), *args)
    line = "%-24s pure %8.4f ms" % (name, t_pure * 1e3)
    if _fast is not None:
        t_fast = timeit(getattr(_fast, name), *args)
        line += "   compiled %8.4f ms   speedup %5.1fx" % (
            t_fast * 1e3,
            t_pure / t_fast if t_fast > 0 else float("inf"),
        )
        got_pure = getattr(pure, name)(*args)
        got_fast = getattr(_fast, name)(*args)
        assert got_pure == got_fast, "implementations disagree on %s" % name
    else:
        line += "   (no compiled kernels built)"
    print(line)


def main():
    rng = random.Random(20240817)

    def big_cloud():
        return ([tuple(rng.randrange(400) for _ in range(2)) for _ in range(20000)],)

    def cloud_3d():
        return ([tuple(rng.randrange(40) for _ in range(3)) for _ in range(4000)],)

    def staircase():
        rows = [(1, 2, 100000), (2, 1, 100000), (3, 5, 120000)]
        return (rows, 0, 0)

    def union_count():
        rows = [(1, 2, 60000), (2, 1, 60000), (1, 1, 50000)]
        return (rows,)

    def colength_args():
        gens = pure.staircase_gens_2d([(1, 2, 100000), (2, 1, 100000)])
        return (gens,)

    bench("reduce_antichain", big_cloud)
    bench("reduce_antichain", cloud_3d)
    bench("staircase_gens_2d", staircase)
    bench("prefix_union_count_2d", union_count)
    bench("colength_2d", colength_args)


if __name__ == "__main__":
    main()
