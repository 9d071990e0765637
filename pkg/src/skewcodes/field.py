"""
Finite fields GF(p^k) of odd characteristic.

Elements are plain integers in ``[0, q)``.  The integer ``sum c_i * p**i``
encodes the polynomial ``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` reduced
modulo a fixed monic irreducible polynomial.  Index 0 is the additive
identity and index 1 the multiplicative identity.

Every arithmetic method accepts either Python/numpy integer scalars or
numpy integer arrays (elementwise, with broadcasting).  Scalars come back
as ``int``; arrays come back as ``int64`` arrays.

For k = 1 arithmetic is plain modular arithmetic.  For k > 1 products go
through log/antilog tables built from the smallest primitive element and
sums are digitwise mod p (through a full addition table when q is small).
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldTooLarge,
    InvalidParams,
    NotPrime,
)

MAX_ORDER = 2**16
_ADD_TABLE_MAX = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists low degree first


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial b."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - db
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return a


def _monic_polys(p: int, degree: int):
    """Monic polynomials of a given degree, low-degree coefficient most significant."""
    for coeffs in product(range(p), repeat=degree):
        yield list(coeffs) + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] % p != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not any(_poly_mod(poly, f, p)):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k (low degree first)."""
    for poly in _monic_polys(p, k):
        if is_irreducible(poly, p):
            return tuple(poly)
    raise RuntimeError(f"no irreducible polynomial of degree {k} over GF({p})")


# ---------------------------------------------------------------------------


class Field:
    """Finite field GF(p^k), p an odd prime.

    Build instances with :func:`make_field`.  A field is immutable after
    construction and safe to share between processes.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus)
        self._build_tables()

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        idx = np.arange(q, dtype=np.int64)
        self._pows = p ** np.arange(k, dtype=np.int64)
        self._digits = (idx[:, None] // self._pows) % p
        self._neg = ((p - self._digits) % p) @ self._pows
        if k == 1:
            self.primitive = self._find_primitive_prime()
            self._exp = self._log = None
            self._add = None
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = [pow(int(a), p - 2, p) for a in range(1, q)]
            self._inv = inv
        else:
            self._exp, self._log, self.primitive = self._log_tables()
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = self._exp[(-self._log[1:]) % (q - 1)]
            self._inv = inv
            if q <= _ADD_TABLE_MAX:
                self._add = ((self._digits[:, None, :] + self._digits[None, :, :]) % p) @ self._pows
            else:
                self._add = None
        for arr in (self._digits, self._neg, self._inv, self._exp, self._log, self._add):
            if arr is not None:
                arr.flags.writeable = False
        self._neg_list = self._neg.tolist()
        self._inv_list = self._inv.tolist()
        if k > 1:
            self._exp_list = self._exp.tolist()
            self._log_list = self._log.tolist()
            self._digits_list = [tuple(d) for d in self._digits.tolist()]

    def _find_primitive_prime(self) -> int:
        p = self.p
        for g in range(1, p):
            x, order = g, 1
            while x != 1:
                x = x * g % p
                order += 1
            if order == p - 1:
                return g
        raise RuntimeError("no primitive element")  # pragma: no cover

    def _poly_mul_index(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da = [(a // p**i) % p for i in range(k)]
        db = [(b // p**i) % p for i in range(k)]
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, list(self.modulus), p)
        rem += [0] * (k - len(rem))
        return sum(c * p**i for i, c in enumerate(rem))

    def _poly_pow_index(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._poly_mul_index(out, a)
            a = self._poly_mul_index(a, a)
            e >>= 1
        return out

    def _log_tables(self):
        q = self.q
        n = q - 1
        prime_factors = [d for d in range(2, n + 1) if n % d == 0 and is_prime(d)]
        g = next(
            g
            for g in range(2, q)
            if all(self._poly_pow_index(g, n // d) != 1 for d in prime_factors)
        )
        exp = [1] * n
        for i in range(1, n):
            exp[i] = self._poly_mul_index(exp[i - 1], g)
        exp_arr = np.array(exp, dtype=np.int64)
        log_arr = np.zeros(q, dtype=np.int64)
        log_arr[exp_arr] = np.arange(n)
        assert len(set(exp)) == n
        return exp_arr, log_arr, g

    # -- identity / repr -----------------------------------------------------

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={self.modulus_str()})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.k, self.modulus) == (
            other.p,
            other.k,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __reduce__(self):
        return (Field, (self.p, self.k, self.modulus))

    def modulus_str(self) -> str:
        """Human-readable modulus, e.g. ``x^2 + 1``."""
        if self.k == 1:
            return "x"
        terms = []
        for i in range(self.k, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if c == 1 and i else (f"{c}" if i == 0 else f"{c}{mono}"))
        return " + ".join(terms)

    @property
    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic ------------------------------------------------------------

    @staticmethod
    def _is_scalar(a) -> bool:
        return isinstance(a, (int, np.integer))

    def add(self, a, b):
        if self.k == 1:
            if self._is_scalar(a) and self._is_scalar(b):
                return (int(a) + int(b)) % self.p
            return (np.asarray(a, dtype=np.int64) + b) % self.p
        if self._is_scalar(a) and self._is_scalar(b):
            da, db, p = self._digits_list[a], self._digits_list[b], self.p
            return sum(((x + y) % p) * p**i for i, (x, y) in enumerate(zip(da, db)))
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._add is not None:
            return self._add[a, b]
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._pows

    def neg(self, a):
        if self.k == 1:
            if self._is_scalar(a):
                return (-int(a)) % self.p
            return (-np.asarray(a, dtype=np.int64)) % self.p
        if self._is_scalar(a):
            return self._neg_list[a]
        return self._neg[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            if self._is_scalar(a) and self._is_scalar(b):
                return int(a) * int(b) % self.p
            return (np.asarray(a, dtype=np.int64) * b) % self.p
        if self._is_scalar(a) and self._is_scalar(b):
            if a == 0 or b == 0:
                return 0
            return self._exp_list[(self._log_list[a] + self._log_list[b]) % (self.q - 1)]
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        if self._is_scalar(a):
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return self._inv_list[a]
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(q)."""
        return n % self.p

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def dot(self, a, b):
        """Field inner product along the last axis."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a * b).sum(axis=-1) % self.p
        prods = self.mul(a, b)
        out = prods[..., 0]
        for j in range(1, prods.shape[-1]):
            out = self.add(out, prods[..., j])
        return out


def make_field(p: int, k: int = 1) -> Field:
    """Return GF(p^k) with the lexicographically smallest monic irreducible modulus.

    >>> make_field(3, 2).modulus
    (1, 0, 1)
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported; p must be odd")
    if k < 1:
        raise InvalidParams(f"extension degree must be >= 1, got {k}")
    if p**k > MAX_ORDER:
        raise FieldTooLarge(f"q = {p}^{k} exceeds {MAX_ORDER}")
    modulus = (0, 1) if k == 1 else smallest_irreducible(p, k)
    return Field(p, k, modulus)


def parse_order(text: str) -> Field:
    """Parse ``"p"``, ``"p^k"`` or a prime power such as ``"9"`` into a field."""
    text = text.strip()
    try:
        if "^" in text:
            base, exp = text.split("^")
            return make_field(int(base), int(exp))
        q = int(text)
    except ValueError as exc:
        raise InvalidParams(f"cannot parse field order {text!r}") from exc
    if q < 2:
        raise InvalidParams(f"invalid field order {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return make_field(p, k)


# ---------------------------------------------------------------------------
# dense linear algebra on small matrices of field indices


def matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[1] != b.shape[0]:
        raise InvalidParams(f"shape mismatch {a.shape} @ {b.shape}")
    return field.dot(a[:, None, :], b.T[None, :, :])


def gauss_rank(field: Field, a: np.ndarray) -> int:
    """Rank of a dense matrix by row reduction."""
    rows = np.array(a, dtype=np.int64, copy=True)
    if rows.size == 0:
        return 0
    n_rows, n_cols = rows.shape
    rank = 0
    for c in range(n_cols):
        nz = np.nonzero(rows[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        rows[[rank, piv]] = rows[[piv, rank]]
        rows[rank] = field.mul(field.inv(int(rows[rank, c])), rows[rank])
        others = np.nonzero(rows[:, c])[0]
        others = others[others != rank]
        if others.size:
            factors = field.neg(rows[others, c])
            rows[others] = field.add(rows[others], field.mul(factors[:, None], rows[rank][None, :]))
        rank += 1
        if rank == n_rows:
            break
    return rank
