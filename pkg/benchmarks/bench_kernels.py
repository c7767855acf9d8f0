"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Inputs are seeded, so runs are comparable across machines.
"""

import argparse
import random
import timeit

from pathcat import _fallback

try:
    from pathcat import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_words(rng, count, length):
    out = []
    for _ in range(count):
        dim, word = rng.randint(2, 6), []
        for _ in range(length):
            if dim >= 1 and rng.random() < 0.5:
                word.insert(0, (0, rng.randint(0, dim)))
                dim -= 1
            else:
                word.insert(0, (1, rng.randint(0, dim)))
                dim += 1
        out.append(word)
    return out


def random_matrix(rng, nrows, ncols, density):
    rows = []
    for _ in range(nrows):
        rows.append({c: rng.choice((-2, -1, 1, 1, 2)) for c in range(ncols) if rng.random() < density})
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    words = random_words(rng, 2000, 12)
    matrices = [random_matrix(rng, 60, 60, 0.08) for _ in range(5)]

    cases = [
        ("normalize_word x2000", lambda k: [k.normalize_word(w) for w in words]),
        ("snf_diagonal 60x60 x5", lambda k: [k(m) for m in matrices]),
    ]
    print(f"{'kernel':<24}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for name, job in cases:
        if name.startswith("snf"):
            py = lambda: job(lambda m: _fallback.snf_diagonal(m, 60))
            cy = (lambda: job(lambda m: _fallback._fix_divisibility(_ckernels.snf_diagonal_int64(m, 60)))) if _ckernels else None
        else:
            py = lambda: job(_fallback)
            cy = (lambda: job(_ckernels)) if _ckernels else None
        if cy is not None:
            assert py() == cy(), f"{name}: backends disagree"
        t_py = min(timeit.repeat(py, number=1, repeat=args.repeat)) * 1e3
        if cy is None:
            print(f"{name:<24}{t_py:>14.1f}{'n/a':>14}{'':>10}")
            continue
        t_cy = min(timeit.repeat(cy, number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<24}{t_py:>14.1f}{t_cy:>14.1f}{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
