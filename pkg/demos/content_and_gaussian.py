"""
Contents of polynomials and the Gaussian property
=================================================

"""

from semiringkit import Boolean, Naturals, TropicalNat
from semiringkit.ideals import ideal, ideal_difference, ideal_mul
from semiringkit.poly import check_content_formula, check_gaussian, content, parse_polynomial, poly_mul

N, T, B = Naturals(), TropicalNat(), Boolean()

f = parse_polynomial("2 + 3 X", N)
g = parse_polynomial("3 + 2 X", N)
fg = poly_mul(f, g)
print("f*g =", fg)

# c(fg) = (6, 13) while c(f)c(g) = (4, 6, 9): 4 separates them
cfg, prod = content(fg), ideal_mul(content(f), content(g))
print(cfg, "vs", prod, "separated by", ideal_difference(cfg, prod))

# no power of c(f) repairs the gap over N
print(check_content_formula(N, f, g))

# the tropical semiring is Gaussian; this sweeps 4095 polynomials pairwise
print(check_gaussian(T, degree_bound=3, coeff_bound=6))
print(check_gaussian(B, degree_bound=3))

# ideal arithmetic by itself
print(ideal_mul(ideal(N, 2, 3), ideal(N, 2, 3)))
