"""
Checking the formulas by exhaustive enumeration
===============================================

The oracle walks over every skew matrix of a small size and counts ranks
and nonzero traces directly, independently of the recursion.
"""

from skewcodes import oracle
from skewcodes.code import CodeParams, weight_enumerator
from skewcodes.counting import n_a
from skewcodes.field import make_field
from skewcodes.weights import w_small

gf3 = make_field(3)
hist = oracle.bf_rank_histogram(gf3, 5)
print("rank histogram m=5:", hist)
print("formula           :", {r: n_a(3, r, 5) for r in range(6)})

###############################################################################
# The recursion for w_{2k}(2r, m) against the census.

for (k, r), count in sorted(oracle.bf_w_table(gf3, 5).items()):
    print(f"w_{2 * k}({2 * r}, 5): census {count}, recursion {w_small(3, k, r, 5)}")

###############################################################################
# Whole weight spectrum by brute force versus the formula.

print(oracle.bf_weight_enumerator(gf3, 4, 1))
print(weight_enumerator(CodeParams(gf3, 4, 1)))
