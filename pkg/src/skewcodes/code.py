"""
The projective code C_A(2t, m) and its affine companion.

Generator columns are the GF(q)-points of the variety of skew matrices of
rank <= 2t, each given by its normalized entry vector (first nonzero
coordinate equal to 1), sorted lexicographically.  Rows follow the fixed
pair order of :mod:`skewcodes.skewmat`.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

import numpy as np

from . import skewmat
from .counting import code_length, n_a
from .errors import BudgetExceeded, DimensionMismatch, InvalidParams
from .field import Field, gauss_rank, make_field, parse_order
from .skewmat import SkewMatrix, n_entries
from .weights import class_weight

FORMATS = ("plain", "json", "csv")
_CHUNK = 1 << 17


@dataclass(frozen=True)
class CodeParams:
    field: Field
    m: int
    t: int

    def __post_init__(self):
        if self.m < 2:
            raise InvalidParams(f"m must be >= 2, got {self.m}")
        if not 1 <= self.t <= self.m // 2:
            raise InvalidParams(f"t must satisfy 1 <= t <= {self.m // 2}, got {self.t}")
        if self.field.p % 2 == 0:  # pragma: no cover - make_field already refuses
            raise InvalidParams("odd characteristic required")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def dimension(self) -> int:
        return n_entries(self.m)

    @property
    def length(self) -> int:
        return code_length(self.q, self.t, self.m)

    def __str__(self) -> str:
        return f"C_A({2 * self.t}, {self.m}) over GF({self.q})"


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    params: CodeParams
    matrix: np.ndarray  # shape (C(m,2), length)

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    def column(self, i: int) -> SkewMatrix:
        p = self.params
        return SkewMatrix(p.field, p.m, tuple(int(x) for x in self.matrix[:, i]))

    def rank(self) -> int:
        return gauss_rank(self.params.field, self.matrix)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GeneratorMatrix)
            and self.params == other.params
            and np.array_equal(self.matrix, other.matrix)
        )


# ---------------------------------------------------------------------------
# point enumeration


def _normalized_blocks(field: Field, n: int) -> Iterator[np.ndarray]:
    """All entry vectors whose first nonzero coordinate is 1, in blocks."""
    q = field.q
    for lead in range(n):
        free = n - lead - 1
        total = q**free
        pows = q ** np.arange(free, dtype=np.int64)
        for lo in range(0, total, _CHUNK):
            idx = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
            block = np.zeros((idx.size, n), dtype=np.int64)
            block[:, lead] = 1
            if free:
                block[:, lead + 1 :] = (idx[:, None] // pows) % q
            yield block


def projective_points(params: CodeParams, budget: int = skewmat.DEFAULT_BUDGET) -> np.ndarray:
    """Normalized representatives of the variety's points, sorted, one per row."""
    field, m, t = params.field, params.m, params.t
    n = n_entries(m)
    candidates = (field.q**n - 1) // (field.q - 1)
    if candidates > budget:
        raise BudgetExceeded(f"{candidates} projective points exceed budget {budget}")
    keep = []
    for block in _normalized_blocks(field, n):
        if 2 * t < m - 1:
            block = block[skewmat.batch_rank(field, block, m) <= 2 * t]
        keep.append(block)
    pts = np.concatenate(keep) if keep else np.zeros((0, n), dtype=np.int64)
    pts = pts[np.lexsort(pts.T[::-1])]
    assert pts.shape[0] == params.length
    return pts


def generator_matrix(params: CodeParams, budget: int = skewmat.DEFAULT_BUDGET) -> GeneratorMatrix:
    pts = projective_points(params, budget)
    mat = np.ascontiguousarray(pts.T)
    mat.flags.writeable = False
    return GeneratorMatrix(params, mat)


def affine_blocks(params: CodeParams, budget: int = skewmat.DEFAULT_BUDGET) -> Iterator[np.ndarray]:
    """Entry vectors of every matrix of rank <= 2t (including 0), in index order."""
    field, m, t = params.field, params.m, params.t
    for _, block in skewmat.enumerate_chunks(field, m, chunk=_CHUNK, budget=budget):
        if 2 * t < m - 1:
            block = block[skewmat.batch_rank(field, block, m) <= 2 * t]
        yield block


# ---------------------------------------------------------------------------
# codewords


def _evaluate(field: Field, f: SkewMatrix, points: np.ndarray) -> np.ndarray:
    """Values of the linear form with coefficients 2 f_ij at each point (one per row)."""
    coeffs = np.array([field.mul(field.from_int(2), x) for x in f.entries], dtype=np.int64)
    return field.dot(points, coeffs[None, :])


def codeword_from_matrix(
    params: CodeParams,
    f: SkewMatrix,
    projective: bool = True,
    gmatrix: GeneratorMatrix | None = None,
) -> np.ndarray:
    """The codeword (-tr(F B))_B over the generator columns or over the affine cone."""
    if f.m != params.m:
        raise DimensionMismatch(f"F has size {f.m}, code has m = {params.m}")
    field = params.field
    if projective:
        gm = gmatrix if gmatrix is not None else generator_matrix(params)
        points = gm.matrix.T
        word = _evaluate(field, f, points)
    else:
        points = np.concatenate(list(affine_blocks(params)))
        word = _evaluate(field, f, points)
    if __debug__:
        ff = f.full()
        for i in range(min(32, len(points))):
            b = skewmat.expand(field, points[i], params.m)
            assert word[i] == field.neg(skewmat.full_trace(field, ff, b))
    return word


def hamming_weight(word: np.ndarray) -> int:
    return int(np.count_nonzero(word))


def affine_weight(params: CodeParams, f: SkewMatrix, budget: int = skewmat.DEFAULT_BUDGET) -> int:
    """Weight of the affine codeword of F, streamed block by block."""
    return sum(hamming_weight(_evaluate(params.field, f, b)) for b in affine_blocks(params, budget))


def weight_enumerator(params: CodeParams) -> dict[int, int]:
    """Map projective weight -> number of codewords, from the closed forms."""
    q, m, t = params.q, params.m, params.t
    spectrum: dict[int, int] = {0: 1}
    for k in range(1, m // 2 + 1):
        w = class_weight(q, k, t, m) // (q - 1)
        spectrum[w] = spectrum.get(w, 0) + n_a(q, 2 * k, m)
    assert sum(spectrum.values()) == q ** n_entries(m)
    return dict(sorted(spectrum.items()))


# ---------------------------------------------------------------------------
# export / import


def export(gm: GeneratorMatrix, fmt: str = "plain", out: str | Path | None = None) -> str:
    """Serialize a generator matrix; optionally also write it to ``out``."""
    if fmt not in FORMATS:
        raise InvalidParams(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    p = gm.params
    header = [p.q, p.m, p.t, gm.rows, gm.cols]
    rows = gm.matrix.tolist()
    if fmt == "plain":
        lines = [" ".join(map(str, header))] + [" ".join(map(str, r)) for r in rows]
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        text = (
            json.dumps(
                {
                    "q": p.q,
                    "p": p.field.p,
                    "k": p.field.k,
                    "modulus": list(p.field.modulus),
                    "m": p.m,
                    "t": p.t,
                    "rows": gm.rows,
                    "cols": gm.cols,
                    "matrix": rows,
                },
                separators=(",", ":"),
            )
            + "\n"
        )
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue()
    if out is not None:
        Path(out).write_text(text)
    return text


def parse(text: str, fmt: str = "plain") -> GeneratorMatrix:
    """Inverse of :func:`export`."""
    if fmt not in FORMATS:
        raise InvalidParams(f"unknown format {fmt!r}")
    if fmt == "json":
        obj = json.loads(text)
        field = make_field(obj["p"], obj["k"])
        mat = np.array(obj["matrix"], dtype=np.int64).reshape(obj["rows"], obj["cols"])
        params = CodeParams(field, obj["m"], obj["t"])
    else:
        if fmt == "plain":
            table = [list(map(int, line.split())) for line in text.splitlines() if line.strip()]
        else:
            table = [list(map(int, r)) for r in csv.reader(io.StringIO(text)) if r]
        q, m, t, n_rows, n_cols = table[0]
        params = CodeParams(parse_order(str(q)), m, t)
        mat = np.array(table[1:], dtype=np.int64).reshape(n_rows, n_cols)
    mat.flags.writeable = False
    return GeneratorMatrix(params, mat)
