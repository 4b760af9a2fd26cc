"""Timing sweeps for encoding and unencoding, with log-log slope fits."""

from __future__ import annotations

import csv
import gc
import math
import random
import statistics
import time
from typing import Callable, Iterable, TextIO

import numpy as np

from .codec import encode, encode_naive, new_code, precompute, random_message, unencode
from .curve import hermitian, norm_trace

__all__ = ["CSV_COLUMNS", "fit_slope", "median_time", "slopes", "sweep", "write_csv"]

CSV_COLUMNS = ["family", "q", "n", "m", "op", "path", "seconds", "ops-estimate"]


def median_time(fn: Callable[[], object], repeats: int = 5, min_sample: float = 0.1) -> float:
    """Median seconds per call over ``repeats`` samples, after one warm-up.

    Each sample loops ``fn`` until it lasts at least ``min_sample`` seconds,
    so sub-millisecond calls are not dominated by timer and scheduler jitter.
    The cyclic garbage collector is paused while timing, as in :mod:`timeit`.
    """
    gc_was_enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        return _median_time(fn, repeats, min_sample)
    finally:
        if gc_was_enabled:
            gc.enable()


def _median_time(fn, repeats, min_sample):
    t = time.perf_counter()
    fn()
    warm = time.perf_counter() - t
    number = max(1, math.ceil(min_sample / max(warm, 1e-9)))
    times = []
    for _ in range(repeats):
        t = time.perf_counter()
        for _ in range(number):
            fn()
        times.append((time.perf_counter() - t) / number)
    return statistics.median(times)


def _lg(x: float) -> float:
    return math.log2(max(x, 2))


def _family(name: str, size: int):
    if name == "hermitian":
        C, P = hermitian(size)
        return C, P, size * size
    if name == "normtrace":
        C, P = norm_trace(2, size)
        return C, P, 2**size
    raise ValueError(f"unknown benchmark family {name!r}")


def sweep(
    family: str = "hermitian",
    sizes: Iterable[int] = (4, 8, 16),
    repeats: int = 5,
    naive: bool = True,
    general_max_n: int = 64,
    seed: int = 0,
) -> list[dict]:
    """One row per (size, op, path) with m = n - 1.

    Operation-count estimates are rough: (m + a n_X) log^2 for fast encode,
    n m for naive encode, n log^2 n for semi-grid unencode and
    a^2 n_X log^2 for the Groebner path.
    """
    rng = random.Random(seed)
    rows = []
    for size in sizes:
        C, P, q = _family(family, size)
        n = P.n
        code = new_code(C, P, n - 1)
        msg = random_message(code, rng)
        cw = encode(code, msg)
        a, nx = C.a, P.n_x
        base = {"family": family, "q": q, "n": n, "m": code.m}

        def row(op, path, secs, ops):
            rows.append({**base, "op": op, "path": path, "seconds": secs, "ops-estimate": int(ops)})

        w = code.m + a * nx
        row("encode", "fast", median_time(lambda: encode(code, msg), repeats), w * _lg(w) ** 2)
        if naive:
            row("encode", "naive", median_time(lambda: encode_naive(code, msg), repeats), n * code.m)
        row("unencode", "semigrid", median_time(lambda: unencode(code, cw), repeats), n * _lg(n) ** 2)
        if n <= general_max_n:
            precompute(code)
            row(
                "unencode",
                "general",
                median_time(lambda: unencode(code, cw, force_general=True), repeats),
                a * a * nx * _lg(a * nx) ** 2,
            )
    return rows


def fit_slope(ns: Iterable[float], seconds: Iterable[float]) -> float:
    """Least-squares slope of log(seconds) against log(n)."""
    x = np.log(np.asarray(list(ns), dtype=float))
    y = np.log(np.asarray(list(seconds), dtype=float))
    return float(np.polyfit(x, y, 1)[0])


def slopes(rows: list[dict]) -> dict[tuple[str, str], float]:
    """Fitted slope per (op, path) that was measured at two or more sizes."""
    groups: dict[tuple[str, str], list[tuple[int, float]]] = {}
    for r in rows:
        groups.setdefault((r["op"], r["path"]), []).append((r["n"], r["seconds"]))
    return {
        key: fit_slope([n for n, _ in pts], [s for _, s in pts])
        for key, pts in groups.items()
        if len(pts) >= 2
    }


def write_csv(rows: list[dict], fh: TextIO) -> None:
    w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({**r, "seconds": f"{r['seconds']:.6g}"})
