"""
Skew-symmetric matrices over a finite field.

A skew-symmetric m x m matrix is stored as its C(m, 2) strictly upper
entries in the fixed pair order (1,2), (1,3), ..., (1,m), (2,3), ..., (m-1,m).
The diagonal is zero and the lower triangle is the negated upper triangle.

Enumeration is index addressable: the matrix with entry vector ``e`` has
index ``sum(e[j] * q**j)``, so entry 0 is the least significant digit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch, IndexOutOfRange, RankTooLarge
from .field import Field, gauss_rank, matmul

DEFAULT_BUDGET = 2**31


@lru_cache(maxsize=None)
def pairs(m: int) -> tuple[tuple[int, int], ...]:
    """0-based (i, j), i < j, in the fixed entry order."""
    return tuple(combinations(range(m), 2))


def n_entries(m: int) -> int:
    return m * (m - 1) // 2


@lru_cache(maxsize=None)
def _pair_arrays(m: int) -> tuple[np.ndarray, np.ndarray]:
    ps = pairs(m)
    return (np.array([i for i, _ in ps], dtype=np.intp), np.array([j for _, j in ps], dtype=np.intp))


@dataclass(frozen=True)
class SkewMatrix:
    field: Field
    m: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != n_entries(self.m):
            raise DimensionMismatch(
                f"{len(self.entries)} entries given, m = {self.m} needs {n_entries(self.m)}"
            )

    @classmethod
    def from_full(cls, field: Field, a) -> "SkewMatrix":
        """Build from a dense m x m array; checks skew-symmetry."""
        a = np.asarray(a, dtype=np.int64)
        m = a.shape[0]
        if a.shape != (m, m):
            raise DimensionMismatch(f"not square: {a.shape}")
        if np.any(np.diag(a)) or np.any(a.T != field.neg(a)):
            raise ValueError("matrix is not skew-symmetric")
        iu, ju = _pair_arrays(m)
        return cls(field, m, tuple(int(x) for x in a[iu, ju]))

    @classmethod
    def zero(cls, field: Field, m: int) -> "SkewMatrix":
        return cls(field, m, (0,) * n_entries(m))

    def full(self) -> np.ndarray:
        """Dense m x m array of field indices."""
        return expand(self.field, np.array(self.entries, dtype=np.int64), self.m)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """Entry a_{ij} with 1-based indices."""
        i, j = ij
        if not (1 <= i <= self.m and 1 <= j <= self.m):
            raise IndexOutOfRange(f"({i}, {j}) outside 1..{self.m}")
        if i == j:
            return 0
        if i < j:
            return self.entries[pair_index(self.m, i, j)]
        return self.field.neg(self.entries[pair_index(self.m, j, i)])

    def scale(self, c: int) -> "SkewMatrix":
        return SkewMatrix(self.field, self.m, tuple(self.field.mul(c, x) for x in self.entries))

    def index(self) -> int:
        q = self.field.q
        return sum(e * q**j for j, e in enumerate(self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self) -> str:
        return " ".join(map(str, self.entries))


def pair_index(m: int, i: int, j: int) -> int:
    """Position of the 1-based pair (i, j), i < j, in the entry vector."""
    if not 1 <= i < j <= m:
        raise IndexOutOfRange(f"need 1 <= i < j <= m, got ({i}, {j}) with m = {m}")
    i0 = i - 1
    return i0 * m - i0 * (i0 + 1) // 2 + (j - i - 1)


def expand(field: Field, entries: np.ndarray, m: int) -> np.ndarray:
    """Dense skew matrices from entry vectors; works on a trailing axis of length C(m,2)."""
    entries = np.asarray(entries, dtype=np.int64)
    out = np.zeros(entries.shape[:-1] + (m, m), dtype=np.int64)
    iu, ju = _pair_arrays(m)
    out[..., iu, ju] = entries
    out[..., ju, iu] = field.neg(entries)
    return out


def decode(field: Field, m: int, indices) -> np.ndarray:
    """Entry vectors (one per row) of the matrices with the given enumeration indices."""
    idx = np.asarray(indices, dtype=np.int64)
    n = n_entries(m)
    pows = field.q ** np.arange(n, dtype=np.int64)
    return (idx[..., None] // pows) % field.q


def from_index(field: Field, m: int, index: int) -> SkewMatrix:
    q = field.q
    return SkewMatrix(field, m, tuple((index // q**j) % q for j in range(n_entries(m))))


# ---------------------------------------------------------------------------
# constructors


def elementary(field: Field, m: int, k: int, l: int) -> SkewMatrix:
    """E(k, l): +1 at (k, l), -1 at (l, k), zero elsewhere (1-based)."""
    pos = pair_index(m, k, l)
    entries = [0] * n_entries(m)
    entries[pos] = 1
    return SkewMatrix(field, m, tuple(entries))


def standard_form(field: Field, m: int, k: int) -> SkewMatrix:
    """E_{2k}: k diagonal blocks [[0, 1], [-1, 0]] followed by zeros."""
    if k < 0 or 2 * k > m:
        raise RankTooLarge(f"rank {2 * k} impossible for m = {m}")
    entries = [0] * n_entries(m)
    for b in range(k):
        entries[pair_index(m, 2 * b + 1, 2 * b + 2)] = 1
    return SkewMatrix(field, m, tuple(entries))


# ---------------------------------------------------------------------------
# rank and trace


def rank(a: SkewMatrix) -> int:
    """Rank by Gaussian elimination on the expanded matrix."""
    r = gauss_rank(a.field, a.full())
    assert r % 2 == 0, "skew-symmetric rank must be even"
    return r


def batch_rank(field: Field, entries: np.ndarray, m: int) -> np.ndarray:
    """Ranks of many skew matrices at once.

    ``entries`` has shape (B, C(m,2)).  Gaussian elimination runs column by
    column on all B matrices in lockstep; each matrix keeps its own set of
    already-used pivot rows, so no row swaps are needed.
    """
    a = expand(field, entries, m)
    b = a.shape[0]
    used = np.zeros((b, m), dtype=bool)
    rk = np.zeros(b, dtype=np.int64)
    rows = np.arange(b)
    for c in range(m):
        cand = (a[:, :, c] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        sel = rows[has]
        piv = cand[has].argmax(axis=1)
        sub = a[sel]
        pivot_row = sub[np.arange(sel.size), piv]
        pivot_row = field.mul(field.inv(pivot_row[:, c])[:, None], pivot_row)
        factors = sub[:, :, c].copy()
        factors[np.arange(sel.size), piv] = 0
        sub = field.sub(sub, field.mul(factors[:, :, None], pivot_row[:, None, :]))
        sub[np.arange(sel.size), piv] = pivot_row
        a[sel] = sub
        used[sel, piv] = True
        rk[sel] += 1
    return rk


def trace_pair(f: SkewMatrix, a: SkewMatrix) -> int:
    """tr(F A) through the identity tr(F A) = -2 * sum_{i<j} f_ij a_ij."""
    if f.m != a.m:
        raise DimensionMismatch(f"sizes {f.m} and {a.m} differ")
    field = f.field
    s = 0
    for x, y in zip(f.entries, a.entries):
        if x and y:
            s = field.add(s, field.mul(x, y))
    out = field.mul(field.neg(field.from_int(2)), s)
    if __debug__ and f.m <= 4:
        assert out == full_trace(field, f.full(), a.full())
    return out


def full_trace(field: Field, f: np.ndarray, a: np.ndarray) -> int:
    """tr(F A) = sum_{i,j} F_ij A_ji computed from dense matrices."""
    return int(field.dot(np.asarray(f).reshape(-1), np.asarray(a).T.reshape(-1)))


def congruent(l: np.ndarray, f: SkewMatrix) -> SkewMatrix:
    """L F L^T as a skew matrix."""
    field = f.field
    full = matmul(field, matmul(field, l, f.full()), np.asarray(l).T)
    return SkewMatrix.from_full(field, full)


# ---------------------------------------------------------------------------
# normal form and sampling


def congruence_normal_form(f: SkewMatrix) -> tuple[np.ndarray, int]:
    """Invertible L and k with L F L^T = E_{2k}.

    Skew elimination: bring the first nonzero entry (in entry order) of the
    trailing block to position (2s+1, 2s+2), scale it to 1, then clear the
    rest of that row/column pair by congruent row/column operations.
    """
    field, m = f.field, f.m
    cur = f.full()
    L = np.eye(m, dtype=np.int64)

    def apply(r: np.ndarray):
        nonlocal cur, L
        cur = matmul(field, matmul(field, r, cur), r.T)
        L = matmul(field, r, L)

    k = 0
    while 2 * k + 1 < m:
        s = 2 * k
        piv = next(
            ((i, j) for i, j in pairs(m) if i >= s and cur[i, j] != 0),
            None,
        )
        if piv is None:
            break
        i, j = piv
        # permutation moving i -> s, j -> s+1
        order = list(range(m))
        order.remove(i)
        order.remove(j)
        order[s:s] = [i, j]
        perm = np.zeros((m, m), dtype=np.int64)
        perm[np.arange(m), order] = 1
        apply(perm)
        scale = np.eye(m, dtype=np.int64)
        scale[s + 1, s + 1] = field.inv(int(cur[s, s + 1]))
        apply(scale)
        clear = np.eye(m, dtype=np.int64)
        for l in range(s + 2, m):
            # row_l += c*row_s + d*row_{s+1}
            clear[l, s] = field.neg(int(cur[l, s + 1]))
            clear[l, s + 1] = int(cur[l, s])
        apply(clear)
        k += 1
    assert np.array_equal(cur, standard_form(field, m, k).full())
    return L, k


def random_invertible(field: Field, m: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        l = rng.integers(0, field.q, size=(m, m))
        if gauss_rank(field, l) == m:
            return l


def random_of_rank(field: Field, m: int, k: int, seed: int | np.random.Generator | None = None) -> SkewMatrix:
    """L^T E_{2k} L for a random invertible L; rank exactly 2k."""
    e = standard_form(field, m, k)
    rng = np.random.default_rng(seed)
    l = random_invertible(field, m, rng)
    return congruent(l.T, e)


def random_skew(field: Field, m: int, seed: int | np.random.Generator | None = None) -> SkewMatrix:
    rng = np.random.default_rng(seed)
    return SkewMatrix(field, m, tuple(int(x) for x in rng.integers(0, field.q, n_entries(m))))


# ---------------------------------------------------------------------------
# enumeration


def count_all(field: Field, m: int) -> int:
    return field.q ** n_entries(m)


def check_budget(field: Field, m: int, budget: int = DEFAULT_BUDGET) -> int:
    total = count_all(field, m)
    if total > budget:
        raise BudgetExceeded(f"{field.q}^{n_entries(m)} = {total} matrices exceed budget {budget}")
    return total


def index_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split [0, total) into at most ``parts`` contiguous ranges."""
    parts = max(1, min(parts, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts) if bounds[i] < bounds[i + 1]]


def enumerate_chunks(
    field: Field,
    m: int,
    start: int = 0,
    stop: int | None = None,
    chunk: int = 1 << 16,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (indices, entry vectors) blocks covering [start, stop)."""
    total = check_budget(field, m, budget)
    stop = total if stop is None else min(stop, total)
    for lo in range(start, stop, chunk):
        idx = np.arange(lo, min(lo + chunk, stop), dtype=np.int64)
        yield idx, decode(field, m, idx)


def enumerate_all(
    field: Field, m: int, start: int = 0, stop: int | None = None, budget: int = DEFAULT_BUDGET
) -> Iterator[SkewMatrix]:
    """Every skew matrix with index in [start, stop), in index order."""
    for _, block in enumerate_chunks(field, m, start, stop, budget=budget):
        for row in block.tolist():
            yield SkewMatrix(field, m, tuple(row))
