"""
Division, gcds and factorization in three semirings
===================================================

"""

from semiringkit import Boolean, Naturals, TropicalNat
from semiringkit.euclid import naturals_structure, remainder_chain, tropical_structure
from semiringkit.factor import check_kaplansky, factor_accp, gcd_set, is_prime_element

N, T, B = Naturals(), TropicalNat(), Boolean()

# the Euclidean algorithm keeps dividing until the remainder hits zero
chain = remainder_chain(naturals_structure(), 12, 18)
print("remainders:", chain.remainders, "gcd:", chain.gcd)

# in the min-plus semiring, zero is infinity and division is subtraction
chain = remainder_chain(tropical_structure(), 3, 5)
print("tropical remainders:", chain.remainders)

print("gcd of 12, 18, 30:", gcd_set(N, [12, 18, 30]))
print("tropical gcd of 3, 5, 9:", gcd_set(T, [3, 5, 9]))

# 4 is not prime: it divides 2*2 but not 2
print(is_prime_element(N, 4))

# tropically every finite value is a sum of ones
print("12 =", factor_accp(N, 12).factors)
print("3 (tropical) =", factor_accp(T, 3).factors)

# unique factorization versus prime elements in prime ideals
for s, bound in ((N, 200), (T, 50), (B, 10)):
    v = check_kaplansky(s, bound)
    print(s.describe(), "holds" if v.holds else "fails", v.note)
