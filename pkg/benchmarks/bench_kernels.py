"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs once per importable backend; the table reports the best
of ``--repeat`` wall-clock runs and the speedup of the compiled kernels.
"""

import argparse
import timeit

from digitop import kernels
from digitop.homotopy import homotopy_class, is_irreducible
from digitop.hspace import search_hspace_multiplications
from digitop.image import cycle, enumerate_images, make_image, path
from digitop.maps import enumerate_continuous_maps, identity_map


def all_maps_c10():
    # the cap guards accidental blow-ups; C10 self-maps are a few hundred thousand
    C10 = cycle(10)
    return sum(1 for _ in enumerate_continuous_maps(C10, C10, cap=10))


def path_class():
    P = path(7)
    return sum(len(homotopy_class(identity_map(P), cat, budget=10**6).members) for cat in (1, 2))


def irreducibility_sweep():
    return sum(is_irreducible(X, 2).yes for n in range(1, 6) for X in enumerate_images(n))


def graphs_on_six():
    return sum(1 for _ in enumerate_images(6))


def np2_search():
    X = make_image(3, [(0, 1), (0, 2)])
    return sum(1 for _ in search_hspace_multiplications(X, 0, 2))


WORKLOADS = [all_maps_c10, path_class, irreducibility_sweep, graphs_on_six, np2_search]


def run(name, fn, repeat):
    saved = kernels.compiled_backend
    if name == "python":
        kernels.compiled_backend = None
    try:
        return min(timeit.repeat(fn, number=1, repeat=repeat))
    finally:
        kernels.compiled_backend = saved


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    names = kernels.available_backends()
    print(f"{'workload':24}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for fn in WORKLOADS:
        times = [run(n, fn, args.repeat) for n in names]
        row = f"{fn.__name__:24}" + "".join(f"{t:11.3f}s" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
