"""
Exact counts of skew-symmetric matrices by rank.

All values are Python integers; there is no floating point here.  Ranks are
passed as the even rank itself (``r2``) for :func:`n_a` and as half ranks
(``t``) for :func:`N_a` and :func:`code_length`, mirroring how the code
C_A(2t, m) is parametrised.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .errors import InvalidParams


def _exact_div(num: int, den: int) -> int:
    quo, rem = divmod(num, den)
    assert rem == 0, f"{num} not divisible by {den}"
    return quo


@lru_cache(maxsize=None)
def n_a(q: int, r2: int, m: int) -> int:
    """Number of m x m skew-symmetric matrices over GF(q) of rank exactly r2.

    Odd or out-of-range ranks give 0.  The zero matrix is the only matrix of
    rank 0, so ``n_a(q, 0, m) == 1`` for every m >= 0.
    """
    if m < 0 or r2 < 0 or r2 % 2 or r2 > m:
        return 0
    r = r2 // 2
    if r == 0:
        return 1
    num = 1
    for i in range(2 * r):
        num *= q ** (m - i) - 1
    den = 1
    for i in range(r):
        den *= q ** (2 * (r - i)) - 1
    return q ** (r * (r - 1)) * _exact_div(num, den)


def N_a(q: int, t: int, m: int) -> int:
    """Number of skew matrices of rank <= 2t."""
    if t < 0 or 2 * t > m:
        raise InvalidParams(f"need 0 <= 2t <= m, got t = {t}, m = {m}")
    return _N_a(q, t, m)


@lru_cache(maxsize=None)
def _N_a(q: int, t: int, m: int) -> int:
    # callers inside the package may ask for 2t > m; the sum simply saturates
    if t < 0:
        return 0
    return sum(n_a(q, 2 * r, m) for r in range(t + 1))


def code_length(q: int, t: int, m: int) -> int:
    """Number of GF(q)-points of the projective variety of rank <= 2t matrices."""
    if t < 1 or 2 * t > m:
        raise InvalidParams(f"need 1 <= t <= m // 2, got t = {t}, m = {m}")
    return _exact_div(N_a(q, t, m) - 1, q - 1)


def gaussian_binomial(q: int, m: int, j: int) -> int:
    """The q-binomial coefficient [m choose j]_q."""
    if j < 0 or j > m:
        return 0
    num = den = 1
    for i in range(j):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return _exact_div(num, den)


@dataclass(frozen=True)
class CountTable:
    q: int
    m: int
    t: int
    n_a: dict[int, int] = dc_field(default_factory=dict)
    N_a: int = 0
    length: int = 0

    def to_json(self) -> dict:
        # big integers as decimal strings
        return {
            "q": self.q,
            "m": self.m,
            "t": self.t,
            "n_a": {str(r): str(v) for r, v in self.n_a.items()},
            "N_a": str(self.N_a),
            "length": str(self.length),
        }


def count_table(q: int, t: int, m: int) -> CountTable:
    """All rank counts for size m together with N_a(2t, m) and the code length."""
    length = code_length(q, t, m)
    counts = {2 * r: n_a(q, 2 * r, m) for r in range(m // 2 + 1)}
    assert sum(counts.values()) == q ** (m * (m - 1) // 2)
    return CountTable(q=q, m=m, t=t, n_a=counts, N_a=N_a(q, t, m), length=length)
