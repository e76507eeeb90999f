"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each row runs one kernel on one workload under both backends, checks that the
outputs agree, and reports the best-of-N wall time and the speedup.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from slicetree._kernels import BACKENDS
from slicetree.generators import complete, cycle, prism, random_two_connected, theta_ring
from slicetree.symmetry import _search_order, refine_colours


def _automorphism_args(g):
    colours = refine_colours(g)
    return (
        np.ascontiguousarray(g.matrix),
        np.asarray(colours, dtype=np.int32),
        np.asarray(_search_order(g, colours), dtype=np.int32),
        10**6,
    )


def workloads():
    big = random_two_connected(200, 600, 1)
    indptr, indices = big.csr
    mask = np.zeros(big.n, dtype=np.uint8)
    mask[::7] = 1
    yield "component_labels  random n=200 m=600", "component_labels", (indptr, indices, mask)
    yield "articulation      random n=200 m=600", "articulation_points", (indptr, indices, -1)
    for g, name in [(cycle(60), "cycle n=60"), (random_two_connected(80, 160, 2), "random n=80 m=160")]:
        yield f"cut_pairs         {name}", "cut_pairs", g.csr
    for g, name in [(theta_ring(3, 2), "tripod n=12 (|G|=1296)"), (complete(8), "K8 (|G|=40320)"), (prism(6), "prism 6")]:
        yield f"automorphisms     {name}", "automorphisms", _automorphism_args(g)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if "cython" not in BACKENDS:
        print("compiled kernels not built; only the Python backend is available")
    names = sorted(BACKENDS)
    print(f"{'workload':42s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn, fargs in workloads():
        times, outs = {}, {}
        for name in names:
            kernel = getattr(BACKENDS[name], fn)
            outs[name] = kernel(*fargs)
            number = 1 if name == "python" else 5
            times[name] = min(timeit.repeat(lambda: kernel(*fargs), number=number, repeat=args.repeat)) / number
        first = outs[names[0]]
        same = all(_same(first, o) for o in outs.values())
        row = f"{label:42s}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
        if len(names) == 2:
            row += f"{times['python'] / times['cython']:11.1f}x"
        print(row + ("" if same else "   MISMATCH"))


def _same(a, b) -> bool:
    if isinstance(a, tuple) and len(a) == 2 and isinstance(a[0], np.ndarray):
        return a[1] == b[1] and np.array_equal(a[0], b[0])
    if isinstance(a, list) and a and isinstance(a[0], tuple):
        return sorted(a) == sorted(b)
    return a == b


if __name__ == "__main__":
    main()
