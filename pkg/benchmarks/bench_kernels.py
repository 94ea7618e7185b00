"""Compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row runs the same call under both backends, checks that the results are
equal, and reports the best wall time of ``--repeat`` runs.
"""
import argparse
import itertools
import time

from tritotient import _backend
from tritotient.sl2core import m_product

_PRODUCTS = [
    (m.a, m.b, m.c, m.d)
    for m in map(m_product, itertools.product(range(2, 6), repeat=7))
]

CASES = [
    ("words_with_det(2000)", lambda: _backend.words_with_det(2000)),
    ("count_words_with_det(5000)", lambda: _backend.count_words_with_det(5000)),
    ("unimodular_words(10)", lambda: _backend.unimodular_words(10)),
    ("euclid_word(10**6-1, 10**6)", lambda: _backend.euclid_word(10**6 - 1, 10**6)),
    ("factorize 4^7 products", lambda: [_backend.factorize_entries(*m) for m in _PRODUCTS]),
    ("word_calculus_sweep(7, 6)", lambda: _backend.word_calculus_sweep(7, 6)),
]


def best_time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _backend.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the python backend is available")
    print(f"{'kernel':32s}" + "".join(f"{b:>12s}" for b in backends) + "   speedup")
    for name, fn in CASES:
        times = {}
        results = {}
        for b in backends:
            prev = _backend.use_backend(b)
            try:
                times[b], results[b] = best_time(fn, args.repeat)
            finally:
                _backend.use_backend(prev)
        same = len({repr(r) for r in results.values()}) == 1
        row = f"{name:32s}" + "".join(f"{times[b]:11.4f}s" for b in backends)
        if len(backends) == 2:
            row += f"   {times['python'] / times['compiled']:6.1f}x"
        if not same:
            row += "   RESULTS DIFFER"
        print(row)


if __name__ == "__main__":
    main()
