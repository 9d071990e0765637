"""
Counting skew matrices of bounded rank
======================================

n_a(2r, m) counts m x m skew matrices of rank 2r.  The code length is the
number of projective points of rank at most 2t.
"""

from skewcodes.counting import N_a, code_length, count_table, n_a

for r in range(3):
    print(f"n_a({2 * r}, 4) over GF(3) = {n_a(3, 2 * r, 4)}")
print("total:", sum(n_a(3, 2 * r, 4) for r in range(3)), "= 3^6 =", 3**6)

###############################################################################
# Cumulative counts and projective lengths.

for t in (1, 2):
    print(f"t={t}: N_a = {N_a(3, t, 4)}, length = {code_length(3, t, 4)}")

###############################################################################
# The counts are exact integers, so large parameters are no problem.

table = count_table(27, 5, 12)
print("q=27, m=12, t=5 length has", len(str(table.length)), "digits")
