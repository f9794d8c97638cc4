"""Time the numba and numpy backends on exhaustive S_n scans.

    python benchmarks/bench_kernels.py --n 7 8 9 --repeat 3
"""
import argparse
import time

from baxterlab import _kernels as k


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--n", type=int, nargs="+", default=[7, 8, 9])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not k.HAVE_NUMBA:
        raise SystemExit("numba backend unavailable; unset BAXTERLAB_BACKEND=numpy to compare")
    k._scan_baxter_nb(3, 0)  # compile

    print(f"{'n':>3} {'perms':>10} {'count':>8} {'numba s':>9} {'numpy s':>9} {'speedup':>8}")
    for n in args.n:
        t_nb, (c_nb, tab_nb) = best_of(lambda: k._scan_baxter_nb(n, 0), args.repeat)
        t_np, (c_np, tab_np) = best_of(lambda: k.scan_baxter_numpy(n, 0), args.repeat)
        assert int(c_nb) == c_np and (tab_nb == tab_np).all()
        print(f"{n:>3} {k.scan_size(n):>10} {c_np:>8} {t_nb:>9.4f} {t_np:>9.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
