import json

import numpy as np
import pytest

from skewcodes import code, oracle, skewmat
from skewcodes.code import (
    CodeParams,
    codeword_from_matrix,
    export,
    generator_matrix,
    hamming_weight,
    parse,
    weight_enumerator,
)
from skewcodes.errors import BudgetExceeded, DimensionMismatch, InvalidParams
from skewcodes.field import gauss_rank, make_field
from skewcodes.weights import class_weight


@pytest.fixture(scope="module")
def c24(gf3):
    params = CodeParams(gf3, 4, 1)
    return params, generator_matrix(params)


def test_params_validation(gf3):
    with pytest.raises(InvalidParams):
        CodeParams(gf3, 4, 3)
    with pytest.raises(InvalidParams):
        CodeParams(gf3, 1, 1)
    with pytest.raises(InvalidParams):
        CodeParams(gf3, 4, 0)


def test_generator_24(c24):
    params, gm = c24
    assert (gm.rows, gm.cols) == (6, 130)
    assert gm.rank() == 6


def test_generator_columns_are_normalized_sorted_points(c24):
    params, gm = c24
    cols = gm.matrix.T
    for col in cols:
        lead = col[np.nonzero(col)[0][0]]
        assert lead == 1
        assert skewmat.rank(skewmat.SkewMatrix(params.field, 4, tuple(int(x) for x in col))) <= 2
    assert [tuple(c) for c in cols.tolist()] == sorted(tuple(c) for c in cols.tolist())
    assert len({tuple(c) for c in cols.tolist()}) == 130


def test_generator_44_is_all_of_projective_space(gf3):
    gm = generator_matrix(CodeParams(gf3, 4, 2))
    assert gm.cols == 364 == (3**6 - 1) // 2
    assert gm.rank() == 6


def test_generator_trivial(gf3):
    gm = generator_matrix(CodeParams(gf3, 2, 1))
    assert gm.matrix.tolist() == [[1]]


@pytest.mark.parametrize("p,k,m,t", [(3, 1, 5, 1), (3, 1, 5, 2), (5, 1, 4, 1), (3, 2, 4, 1), (3, 2, 3, 1)])
def test_generator_length_dimension(p, k, m, t):
    params = CodeParams(make_field(p, k), m, t)
    gm = generator_matrix(params)
    assert gm.cols == params.length
    assert gm.rank() == params.dimension
    # same point set as the oracle's independent enumeration
    bf = oracle.bf_projective_points(params.field, m, t)
    assert sorted(map(tuple, bf.tolist())) == sorted(map(tuple, gm.matrix.T.tolist()))


def test_budget(gf3):
    with pytest.raises(BudgetExceeded):
        generator_matrix(CodeParams(gf3, 6, 2), budget=10**5)


def test_codeword_examples(gf3, c24):
    params, gm = c24
    assert not codeword_from_matrix(params, skewmat.SkewMatrix.zero(gf3, 4), gmatrix=gm).any()
    w1 = codeword_from_matrix(params, skewmat.standard_form(gf3, 4, 1), gmatrix=gm)
    w2 = codeword_from_matrix(params, skewmat.standard_form(gf3, 4, 2), gmatrix=gm)
    assert hamming_weight(w1) == 81
    assert hamming_weight(w2) == 90
    with pytest.raises(DimensionMismatch):
        codeword_from_matrix(params, skewmat.standard_form(gf3, 3, 1), gmatrix=gm)


def test_codeword_is_minus_trace(gf5):
    params = CodeParams(gf5, 4, 1)
    gm = generator_matrix(params)
    f = skewmat.random_skew(gf5, 4, 3)
    word = codeword_from_matrix(params, f, gmatrix=gm)
    expected = [gf5.neg(skewmat.trace_pair(f, gm.column(i))) for i in range(gm.cols)]
    assert word.tolist() == expected


@pytest.mark.parametrize("p,k,m,t", [(3, 1, 4, 1), (3, 1, 5, 1), (5, 1, 4, 1), (3, 2, 3, 1)])
def test_affine_weight_ratio(p, k, m, t):
    params = CodeParams(make_field(p, k), m, t)
    gm = generator_matrix(params)
    rng = np.random.default_rng(2)
    for _ in range(4):
        f = skewmat.random_skew(params.field, m, rng)
        proj = hamming_weight(codeword_from_matrix(params, f, gmatrix=gm))
        aff = hamming_weight(codeword_from_matrix(params, f, projective=False))
        assert aff == (params.q - 1) * proj
        assert code.affine_weight(params, f) == aff


@pytest.mark.parametrize("p,k,m,t", [(3, 1, 4, 1), (3, 1, 5, 1), (3, 1, 5, 2), (5, 1, 4, 1), (3, 2, 4, 1)])
def test_basis_codewords_independent(p, k, m, t):
    params = CodeParams(make_field(p, k), m, t)
    gm = generator_matrix(params)
    words = [
        codeword_from_matrix(params, skewmat.elementary(params.field, m, i + 1, j + 1), gmatrix=gm)
        for i, j in skewmat.pairs(m)
    ]
    assert gauss_rank(params.field, np.array(words)) == params.dimension


@pytest.mark.parametrize("m,t", [(4, 1), (5, 1), (5, 2)])
def test_rank_class_invariance(gf3, m, t):
    params = CodeParams(gf3, m, t)
    gm = generator_matrix(params)
    for k in range(1, m // 2 + 1):
        seen = {
            hamming_weight(codeword_from_matrix(params, skewmat.random_of_rank(gf3, m, k, seed), gmatrix=gm))
            for seed in range(4)
        }
        assert seen == {class_weight(3, k, t, m) // 2}


def test_weight_enumerator_examples(gf3):
    assert weight_enumerator(CodeParams(gf3, 4, 1)) == {0: 1, 81: 260, 90: 468}
    assert weight_enumerator(CodeParams(gf3, 4, 2)) == {0: 1, 243: 728}
    n_a45 = 3**2 * (3**5 - 1) * (3**4 - 1) * (3**3 - 1) * (3**2 - 1) // ((3**4 - 1) * (3**2 - 1))
    assert n_a45 == 56628
    assert weight_enumerator(CodeParams(gf3, 5, 1)) == {0: 1, 729: 2420, class_weight(3, 2, 1, 5) // 2: n_a45}


@pytest.mark.parametrize("fmt", ["plain", "json", "csv"])
def test_export_roundtrip(c24, fmt, tmp_path):
    _, gm = c24
    out = tmp_path / f"g.{fmt}"
    text = export(gm, fmt, out)
    assert out.read_text() == text
    assert parse(text, fmt) == gm
    assert export(gm, fmt) == text


def test_export_roundtrip_extension_field(gf9):
    gm = generator_matrix(CodeParams(gf9, 3, 1))
    for fmt in ("plain", "json", "csv"):
        assert parse(export(gm, fmt), fmt) == gm


def test_export_plain_trivial(gf3):
    gm = generator_matrix(CodeParams(gf3, 2, 1))
    assert export(gm, "plain") == "3 2 1 1 1\n1\n"
    assert json.loads(export(gm, "json"))["matrix"] == [[1]]


def test_export_unknown_format(c24):
    with pytest.raises(InvalidParams):
        export(c24[1], "xml")
