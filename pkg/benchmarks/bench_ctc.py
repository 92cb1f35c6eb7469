#!/usr/bin/env python3
"""Benchmark the compiled CTC kernel against the pure-numpy fallback.

The alpha/beta recurrences dominate recognizer training and perturbation
crafting, so this is the number that decides whether the extension is
worth building. Shapes mirror the bundled pipeline: ~100 frames/second
inputs with character-level targets.

Usage: python benchmarks/bench_ctc.py [--repeats N]
"""

import argparse
import time

import numpy as np

from speechcloak import ctc

CASES = [
    ("short utterance (3 s, 20 chars)", 298, 20),
    ("crafting crop (9 s, 60 chars)", 898, 60),
    ("eval clip (12 s, 85 chars)", 1198, 85),
]


def make_case(rng, n_frames, n_labels, n_classes=29):
    logits = rng.normal(size=(n_frames, n_classes))
    lp = logits - np.log(np.exp(logits).sum(axis=1, keepdims=True))
    labels = rng.integers(0, n_classes - 1, n_labels)
    ext, skip = ctc.extend_labels(labels, blank=n_classes - 1)
    lp_ext = np.ascontiguousarray(lp[:, ext])
    return lp_ext, skip


def bench(kernel, lp_ext, skip, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        _, _, loglike = kernel.alpha_beta(lp_ext, skip)
        best = min(best, time.perf_counter() - t0)
    return best, loglike


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    backends = ctc.available_backends()
    print(f"active backend: {ctc.BACKEND}; available: {sorted(backends)}")
    print(f"{'case':<32} " + " ".join(f"{name:>12}" for name in sorted(backends))
          + f" {'speedup':>9}")

    rng = np.random.default_rng(0)
    for name, n_frames, n_labels in CASES:
        lp_ext, skip = make_case(rng, n_frames, n_labels)
        times = {}
        loglikes = {}
        for backend, kernel in backends.items():
            times[backend], loglikes[backend] = bench(kernel, lp_ext, skip, args.repeats)
        values = list(loglikes.values())
        assert all(abs(v - values[0]) <= 1e-9 for v in values), "kernels disagree"
        row = f"{name:<32} " + " ".join(
            f"{times[b] * 1000:>10.2f}ms" for b in sorted(backends)
        )
        if len(times) == 2:
            row += f" {times['python'] / times['compiled']:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
