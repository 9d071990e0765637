"""
Brute-force reference counts.

Everything here enumerates skew matrices exhaustively and is written to be
independent of the formula path: ranks come from a skew (two rows/columns
at a time) Schur-complement reduction rather than row echelon form, and
traces are full matrix products tr(F A) = sum_ij F_ij A_ji rather than the
inner-product shortcut.  Only the field arithmetic and the entry-vector
encoding are shared with the rest of the package.

Work is split into contiguous index ranges that may run in separate
processes; partial results are merged by addition in range order.
"""

from __future__ import annotations

import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, permutations

import numpy as np

from . import skewmat
from .errors import BudgetExceeded, TooLarge
from .field import Field
from .skewmat import SkewMatrix, n_entries

FAST_BUDGET = 10**6
SLOW_BUDGET = 2**25
_CHUNK = 1 << 15


def skew_ranks(field: Field, full: np.ndarray) -> np.ndarray:
    """Ranks of a batch of dense skew matrices, shape (B, m, m).

    Repeatedly pick a nonzero a_ij, replace A by its Schur complement
    A - (A[:, j] A[i, :] - A[:, i] A[j, :]) / a_ij, which zeroes rows and
    columns i and j, and add 2 to the rank.
    """
    a = np.array(full, dtype=np.int64, copy=True)
    b, m, _ = a.shape
    rk = np.zeros(b, dtype=np.int64)
    flat_upper = np.triu(np.ones((m, m), dtype=bool), 1).reshape(-1)
    live = np.arange(b)
    for _ in range(m // 2):
        sub = a[live]
        nz = (sub.reshape(len(live), -1) != 0) & flat_upper
        has = nz.any(axis=1)
        live, sub, nz = live[has], sub[has], nz[has]
        if live.size == 0:
            break
        pos = nz.argmax(axis=1)
        i, j = pos // m, pos % m
        r = np.arange(live.size)
        inv = field.inv(sub[r, i, j])
        col_j, col_i = sub[r, :, j], sub[r, :, i]
        row_i, row_j = sub[r, i, :], sub[r, j, :]
        if field.k == 1:
            # one reduction mod p; magnitudes stay far below 2^63
            upd = col_j[:, :, None] * row_i[:, None, :] - col_i[:, :, None] * row_j[:, None, :]
            sub = (sub - upd * inv[:, None, None]) % field.p
        else:
            upd = field.sub(
                field.mul(col_j[:, :, None], row_i[:, None, :]),
                field.mul(col_i[:, :, None], row_j[:, None, :]),
            )
            sub = field.sub(sub, field.mul(upd, inv[:, None, None]))
        assert not sub[r, i, :].any() and not sub[r, j, :].any()
        a[live] = sub
        rk[live] += 2
    return rk


def full_traces(field: Field, f_full: np.ndarray, a_full: np.ndarray) -> np.ndarray:
    """tr(F A) for one or several F (shape (K, m, m)) against a batch A (B, m, m); returns (K, B)."""
    f_full = np.asarray(f_full, dtype=np.int64)
    if f_full.ndim == 2:
        f_full = f_full[None]
    kk, m, _ = f_full.shape
    f_flat = f_full.reshape(kk, m * m)
    at_flat = np.swapaxes(a_full, -1, -2).reshape(a_full.shape[0], m * m)
    if field.k == 1:
        # small exact integers: safe in float64 BLAS
        out = np.rint(f_flat.astype(np.float64) @ at_flat.T.astype(np.float64)).astype(np.int64)
        return out % field.p
    return field.dot(f_flat[:, None, :], at_flat[None, :, :])


# ---------------------------------------------------------------------------
# range workers


def _census_range(field: Field, m: int, lo: int, hi: int, f_fulls: np.ndarray):
    """Rank histogram and per-(F, rank) counts of tr(F A) != 0 over indices [lo, hi)."""
    hist = np.zeros(m + 1, dtype=np.int64)
    counts = np.zeros((len(f_fulls), m + 1), dtype=np.int64)
    for start in range(lo, hi, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, hi), dtype=np.int64)
        full = skewmat.expand(field, skewmat.decode(field, m, idx), m)
        ranks = skew_ranks(field, full)
        hist += np.bincount(ranks, minlength=m + 1)
        if len(f_fulls):
            nz = full_traces(field, f_fulls, full) != 0
            for i in range(len(f_fulls)):
                counts[i] += np.bincount(ranks[nz[i]], minlength=m + 1)
    return hist, counts


def _run(field: Field, m: int, f_fulls, budget: int, workers: int):
    total = skewmat.check_budget(field, m, budget)
    f_fulls = np.asarray(f_fulls, dtype=np.int64).reshape(-1, m, m)
    ranges = skewmat.index_ranges(total, max(workers, 1) * 4 if workers > 1 else 1)
    if workers > 1 and len(ranges) > 1:
        ctx = mp.get_context("fork")
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
            futures = [pool.submit(_census_range, field, m, lo, hi, f_fulls) for lo, hi in ranges]
            parts = [fut.result() for fut in futures]
    else:
        parts = [_census_range(field, m, lo, hi, f_fulls) for lo, hi in ranges]
    hist = np.zeros(m + 1, dtype=np.int64)
    counts = np.zeros((len(f_fulls), m + 1), dtype=np.int64)
    for h, c in parts:
        hist += h
        counts += c
    return hist, counts


def bf_rank_histogram(
    field: Field, m: int, budget: int = FAST_BUDGET, workers: int = 1
) -> dict[int, int]:
    """rank -> number of skew matrices of that rank, by exhaustion (all ranks 0..m listed)."""
    hist, _ = _run(field, m, [], budget, workers)
    return {r: int(c) for r, c in enumerate(hist)}


def census(field: Field, m: int, fs, budget: int = FAST_BUDGET, workers: int = 1):
    """One pass over all skew m x m matrices A.

    Returns (hist, counts): hist[r] is the number of A of rank r, and
    counts[i, r] the number of those with tr(fs[i] A) != 0.
    """
    fulls = [f.full() if isinstance(f, SkewMatrix) else f for f in fs]
    return _run(field, m, fulls, budget, workers)


def bf_w_table(field: Field, m: int, budget: int = FAST_BUDGET, workers: int = 1) -> dict[tuple[int, int], int]:
    """(k, r) -> |{A : rank A = 2r, tr(E_{2k} A) != 0}| for 1 <= k, r <= m // 2."""
    ks = range(1, m // 2 + 1)
    e_fulls = [skewmat.standard_form(field, m, k).full() for k in ks]
    _, counts = _run(field, m, e_fulls, budget, workers)
    return {(k, r): int(counts[k - 1, 2 * r]) for k in ks for r in range(1, m // 2 + 1)}


def bf_w_small(field: Field, k: int, r: int, m: int, budget: int = FAST_BUDGET, workers: int = 1) -> int:
    e = skewmat.standard_form(field, m, k).full()
    _, counts = _run(field, m, [e], budget, workers)
    return int(counts[0, 2 * r]) if 0 <= 2 * r <= m else 0


def bf_affine_weights(
    field: Field, m: int, t: int, fs: list[SkewMatrix], budget: int = FAST_BUDGET, workers: int = 1
) -> list[int]:
    """Affine weights |{A : rank A <= 2t, tr(F A) != 0}| for each F."""
    _, counts = _run(field, m, [f.full() for f in fs], budget, workers)
    return [int(c[: 2 * t + 1].sum()) for c in counts]


# ---------------------------------------------------------------------------
# weight enumerator


def bf_projective_points(field: Field, m: int, t: int, budget: int = FAST_BUDGET) -> np.ndarray:
    """Entry vectors of one representative per projective point of rank <= 2t."""
    total = skewmat.check_budget(field, m, budget)
    keep = []
    for start in range(1, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        ent = skewmat.decode(field, m, idx)
        lead = ent[np.arange(len(ent)), (ent != 0).argmax(axis=1)]
        ent = ent[lead == 1]
        ranks = skew_ranks(field, skewmat.expand(field, ent, m))
        keep.append(ent[ranks <= 2 * t])
    return np.concatenate(keep)


def _spectrum_range(field, m, points_t_flat, lo, hi):
    hist: dict[int, int] = {}
    for start in range(lo, hi, _CHUNK // 8):
        idx = np.arange(start, min(start + _CHUNK // 8, hi), dtype=np.int64)
        f_full = skewmat.expand(field, skewmat.decode(field, m, idx), m)
        f_flat = f_full.reshape(len(idx), m * m)
        if field.k == 1:
            tr = np.rint(f_flat.astype(np.float64) @ points_t_flat.T).astype(np.int64) % field.p
        else:
            tr = field.dot(f_flat[:, None, :], points_t_flat[None, :, :].astype(np.int64))
        for w, c in zip(*np.unique(np.count_nonzero(tr, axis=1), return_counts=True)):
            hist[int(w)] = hist.get(int(w), 0) + int(c)
    return hist


def bf_weight_enumerator(
    field: Field, m: int, t: int, budget: int = FAST_BUDGET, workers: int = 1, work_budget: int = 2 * 10**9
) -> dict[int, int]:
    """Projective weight -> count, by evaluating every F on every point."""
    points = bf_projective_points(field, m, t, budget)
    total = skewmat.count_all(field, m)
    if total * len(points) > work_budget:
        raise BudgetExceeded(f"{total} x {len(points)} evaluations exceed {work_budget}")
    full = skewmat.expand(field, points, m)
    pts = np.swapaxes(full, -1, -2).reshape(len(points), m * m)
    if field.k == 1:
        pts = pts.astype(np.float64)
    ranges = skewmat.index_ranges(total, workers * 4 if workers > 1 else 1)
    if workers > 1 and len(ranges) > 1:
        ctx = mp.get_context("fork")
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
            parts = [f.result() for f in [pool.submit(_spectrum_range, field, m, pts, lo, hi) for lo, hi in ranges]]
    else:
        parts = [_spectrum_range(field, m, pts, lo, hi) for lo, hi in ranges]
    hist: dict[int, int] = {}
    for part in parts:
        for w, c in part.items():
            hist[w] = hist.get(w, 0) + c
    return dict(sorted(hist.items()))


# ---------------------------------------------------------------------------
# minors


def _det(field: Field, a: list[list[int]]) -> int:
    """Leibniz expansion."""
    n = len(a)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for x, y in combinations(perm, 2) if x > y)
        term = 1
        for i, j in enumerate(perm):
            term = field.mul(term, a[i][j])
            if term == 0:
                break
        if term:
            total = field.sub(total, term) if inversions % 2 else field.add(total, term)
    return total


def rank_via_minors(a: SkewMatrix, t: int) -> bool:
    """True iff every (2t+1)-minor of A vanishes, i.e. rank(A) <= 2t."""
    m = a.m
    if m > 6:
        raise TooLarge(f"minor enumeration limited to m <= 6, got {m}")
    size = 2 * t + 1
    if size > m:
        return True
    if size <= 0:
        return a.is_zero()
    full = a.full().tolist()
    for rows in combinations(range(m), size):
        for cols in combinations(range(m), size):
            if _det(a.field, [[full[i][j] for j in cols] for i in rows]):
                return False
    return True
