"""
Weights by rank class and the minimum distance
==============================================

A codeword depends only on the rank of its skew matrix F.  The rank-2
class has the smallest weight whenever t < m // 2.
"""

from skewcodes.weights import class_weight, min_distance, min_weight_count, weight_report

rep = weight_report(3, 1, 4)
print("projective weights by rank class:", rep.projective_weights)
print("d =", rep.min_distance, "count =", rep.min_weight_count, f"({rep.min_weight_qualifier})")

###############################################################################
# For q = 3, m = 6, t = 2 the rank-2 class is still the minimum, but the
# classes above it are not ordered by rank: the rank-6 class is lighter
# than the rank-4 class.

for k in (1, 2, 3):
    print(f"rank {2 * k}: affine weight {class_weight(3, k, 2, 6)}")
rep = weight_report(3, 2, 6)
print("order of classes by weight:", rep.observed_order, "monotone:", rep.monotone)
print("d =", min_distance(3, 2, 6), "count =", min_weight_count(3, 2, 6))
