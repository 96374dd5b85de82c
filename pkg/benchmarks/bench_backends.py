"""Benchmark the compiled kernel against the pure-Python fallback.

Micro-benchmarks hit the raw kernel functions; the end-to-end rows swap
the selected backend in place and run the full identity suite, so both
paths execute exactly the same package code.

Usage: python3 benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import random
import time
from fractions import Fraction

from qpknot import Monomial, _kernel
from qpknot import _pykernel

try:
    from qpknot import _ckernel
except ImportError:
    _ckernel = None

_KERNEL_FUNCS = (
    "mono_mul",
    "mono_pow",
    "mono_deg",
    "mono_cmp",
    "poly_add",
    "poly_neg",
    "poly_mul",
    "poly_term_mul",
    "poly_accum_term_mul",
)


def swap_backend(impl):
    for name in _KERNEL_FUNCS:
        setattr(_kernel, name, getattr(impl, name))
    _kernel.BACKEND = impl.IMPL


def make_inputs(seed=7):
    rng = random.Random(seed)
    monos = []
    for _ in range(200):
        exps = {
            v: Fraction(rng.randint(-6, 6), rng.choice((1, 1, 2, 3)))
            for v in rng.sample("apqt", rng.randint(1, 3))
        }
        monos.append(Monomial(exps)._key)
    def poly(n_terms):
        return {m: rng.randint(-9, 9) or 1 for m in rng.sample(monos, n_terms)}
    return monos, poly(40), poly(40)


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    monos, p1, p2 = make_inputs()

    def micro_rows(impl):
        def run_mono_mul():
            mul = impl.mono_mul
            for m1 in monos:
                for m2 in monos:
                    mul(m1, m2)

        def run_poly_mul():
            for _ in range(200):
                impl.poly_mul(p1, p2)

        def run_poly_add():
            acc = {}
            for _ in range(2000):
                acc = impl.poly_add(acc, p1)
                acc = impl.poly_add(acc, p2)

        return {
            "mono_mul 40k pairs": run_mono_mul,
            "poly_mul 40x40 x200": run_poly_mul,
            "poly_add x4000": run_poly_add,
        }

    def end_to_end():
        from qpknot.verify import run_all

        reports = run_all(100)
        assert all(r.passed for r in reports)

    impls = [("python", _pykernel)] + ([("c", _ckernel)] if _ckernel else [])
    results = {}
    for label, impl in impls:
        rows = dict(micro_rows(impl))
        swap_backend(impl)
        rows["verify suite n_max=100"] = end_to_end
        for name, fn in rows.items():
            results.setdefault(name, {})[label] = bench(fn, args.repeat)
    swap_backend(_ckernel or _pykernel)

    width = max(len(n) for n in results)
    header = f"{'benchmark':<{width}}  {'python':>9}"
    if _ckernel:
        header += f"  {'c':>9}  {'speedup':>7}"
    print(header)
    print("-" * len(header))
    for name, times in results.items():
        line = f"{name:<{width}}  {times['python']:>8.3f}s"
        if _ckernel:
            line += f"  {times['c']:>8.3f}s  {times['python'] / times['c']:>6.2f}x"
        print(line)
    if not _ckernel:
        print("\ncompiled kernel not built; showing pure-Python timings only")


if __name__ == "__main__":
    main()
