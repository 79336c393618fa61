"""
Fractions, integrality and Goldman-Krull semidomains
====================================================

"""

from fractions import Fraction

from semiringkit import MCSet, Naturals, TropicalNat
from semiringkit.finite import enumerate_semirings
from semiringkit.frac import (
    Frac,
    check_gk_equivalences,
    check_integrally_closed,
    check_local_global_nilpotent,
    is_goldman_krull,
    localize,
    search_integral_witness,
)

N, T = Naturals(), TropicalNat()

dyadic = localize(N, MCSet.parse("powers:2"))
print(dyadic.describe(), "contains 3/4:", dyadic.contains(Fraction(3, 4)),
      "contains 1/3:", dyadic.contains(Fraction(1, 3)))

# tropical fractions collapse to integer differences
print("3/1 over TropicalNat is", Frac(T, 3, 1).value)

# 3/2 satisfies no monic equation with small coefficients
print("equation for 3/2:", search_integral_witness(N, Fraction(3, 2), 3, 20))
print("equation for 4/2:", search_integral_witness(N, Fraction(4, 2), 3, 20))

v = check_integrally_closed(N, [MCSet.parse("powers:2"), MCSet.parse("powers:3")])
print(v.name, v.holds)

# N is not Goldman-Krull: every u misses some prime (p)
v = is_goldman_krull(N, bound=30)
print("u=30 is missed by", v.witness["u_to_p"][30])
print(is_goldman_krull(T))
print(check_gk_equivalences(N, 2, 30).witness)

# nilpotent-freeness is a local property on the order 3 tables
for S in enumerate_semirings(3):
    print(S.describe(), check_local_global_nilpotent(S).witness)
