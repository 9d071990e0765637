"""Linear codes from skew-symmetric determinantal varieties over odd-characteristic fields."""

from .code import CodeParams, GeneratorMatrix, codeword_from_matrix, generator_matrix, weight_enumerator
from .counting import N_a, code_length, count_table, gaussian_binomial, n_a
from .field import Field, make_field
from .skewmat import SkewMatrix
from .weights import class_weight, min_distance, min_weight_count, weight_report, w_small

__all__ = [
    "CodeParams",
    "Field",
    "GeneratorMatrix",
    "N_a",
    "SkewMatrix",
    "class_weight",
    "code_length",
    "codeword_from_matrix",
    "count_table",
    "gaussian_binomial",
    "generator_matrix",
    "make_field",
    "min_distance",
    "min_weight_count",
    "n_a",
    "w_small",
    "weight_enumerator",
    "weight_report",
]
__version__ = "0.1.0"
