"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import timeit

from fpgroups import constructions as C
from fpgroups._kernels import _pykernels
from fpgroups.presentations import Presentation, closure_codes
from fpgroups.words import Word

try:
    from fpgroups._kernels import _ckernels
except ImportError:
    _ckernels = None


def workloads(rng):
    W = Presentation(("a", "b"), tuple(C.encoding_words()))
    rstar_list = closure_codes(W)
    rstar = sorted(set(rstar_list))
    idx = W.index()
    # a long trivial word: products of conjugated relators
    parts = []
    for _ in range(6):
        r = rng.choice(W.relations)
        g = Word.from_letters((rng.choice("ab"), rng.choice((1, -1))) for _ in range(10))
        parts.append(g * r * g.inverse())
    trivial = [c for p in parts for c in p.codes(idx)]
    noise = [rng.choice((1, -1, 2, -2)) for _ in range(200_000)]
    return rstar_list, rstar, trivial, noise


def bench(k, data, repeat):
    rstar_list, rstar, trivial, noise = data
    scan = k.free_reduce_codes(noise[:20_000])
    table = k.DehnTable(rstar)

    def dehn():
        w = k.free_reduce_codes(trivial)
        while True:
            hit = k.dehn_find(w, table, 0)
            if hit is None:
                return w
            i, length, j = hit
            repl = [-c for c in reversed(rstar[j][length:])]
            w = k.free_reduce_codes(w[:i] + repl + w[i + length:])

    cases = {
        "free_reduce (200k letters)": lambda: k.free_reduce_codes(noise),
        "max_overlaps (|R*| = 3664)": lambda: k.max_overlaps(rstar_list),
        "dehn reduce (conjugate product)": dehn,
        "dehn scan (20k random letters)": lambda: k.dehn_find(scan, table, 0),
    }
    return {name: min(timeit.repeat(fn, number=1, repeat=repeat)) for name, fn in cases.items()}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    data = workloads(random.Random(0))
    py = bench(_pykernels, data, args.repeat)
    cy = bench(_ckernels, data, args.repeat) if _ckernels else None
    print(f"{'kernel':34} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, t in py.items():
        if cy:
            print(f"{name:34} {t:10.4f} {cy[name]:10.4f} {t / cy[name]:7.1f}x")
        else:
            print(f"{name:34} {t:10.4f} {'n/a':>10} {'':>8}")


if __name__ == "__main__":
    main()
