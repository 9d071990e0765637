"""
Generator matrix and weight spectrum
====================================

Columns are the normalized projective points of rank at most 2t in a
fixed order; codewords come from evaluating the trace pairing.
"""

import numpy as np

from skewcodes import skewmat
from skewcodes.code import CodeParams, codeword_from_matrix, export, generator_matrix, hamming_weight, weight_enumerator
from skewcodes.field import make_field

gf3 = make_field(3)
params = CodeParams(gf3, 4, 1)
gm = generator_matrix(params)
print(f"{gm.rows} x {gm.cols} generator matrix, rank {gm.rank()}")
print(export(gm, "plain").splitlines()[0])

###############################################################################
# Weights of a few codewords, one per rank class.

for k in (1, 2):
    word = codeword_from_matrix(params, skewmat.standard_form(gf3, 4, k), gmatrix=gm)
    print(f"E_{2 * k}: weight {hamming_weight(word)}")

###############################################################################
# The full spectrum follows from the class sizes and class weights.

print(weight_enumerator(params))
rng = np.random.default_rng(0)
f = skewmat.random_skew(gf3, 4, rng)
print("random F of rank", skewmat.rank(f), "has weight", hamming_weight(codeword_from_matrix(params, f, gmatrix=gm)))
