"""
Finite fields and skew-symmetric matrices
=========================================

Elements of GF(p^k) are packed integers in base p.  Skew matrices are
stored by their strict upper triangle.
"""

from skewcodes import skewmat
from skewcodes.field import make_field

# GF(9) is built from the smallest monic irreducible quadratic, x^2 + 1
gf9 = make_field(3, 2)
print(gf9, "modulus:", gf9.modulus_str(), "primitive element:", gf9.primitive)
print("3 * 4 =", gf9.mul(3, 4), "  1 / 5 =", gf9.inv(5))

###############################################################################
# A skew matrix over GF(3) and its rank.  Skew ranks are always even.

gf3 = make_field(3)
a = skewmat.SkewMatrix(gf3, 4, (1, 0, 2, 1, 0, 1))
print(a)
print("rank:", skewmat.rank(a))

###############################################################################
# Congruence A -> L A L^T preserves rank; the normal form exposes it as
# a block diagonal matrix E_{2k}.

l, k = skewmat.congruence_normal_form(a)
print("normal form has k =", k)
print(skewmat.congruent(l, a))
