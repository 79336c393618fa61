"""Commutative semirings as executable objects.

Families: :class:`Naturals`, :class:`Boolean`, :class:`TropicalNat`
(min-plus), table-defined :class:`FiniteSemiring`, polynomials
(:class:`PolynomialOver`) and fractions/localizations
(:class:`FractionsOver`).  Each structural statement about them is a
function returning a :class:`Verdict`.
"""

from .core import (
    INF,
    Boolean,
    Element,
    MCSet,
    Naturals,
    Semiring,
    TropicalNat,
    Verdict,
    check_laws,
    is_semidomain,
    is_unit,
)
from .errors import *  # noqa: F401,F403
from .euclid import (
    EuclideanStructure,
    div_rem,
    euclidean_gcd,
    euclidean_structure,
    find_euclidean_norm,
    remainder_chain,
    star_norm,
    star_structure,
    verify_structure,
)
from .factor import (
    associates,
    check_gcd_identities,
    check_kaplansky,
    check_saturated_prime_products,
    divides,
    factor_accp,
    gcd_set,
    is_irreducible,
    is_prime_element,
)
from .finite import (
    FiniteSemiring,
    chain3,
    check_saturated_complement,
    classify_ideal,
    enumerate_ideals,
    enumerate_semirings,
    ideal_generated,
    localize_finite,
    spectrum,
    validate_tables,
    z2,
)
from .frac import (
    Frac,
    FractionsOver,
    IntegralEquation,
    check_gk_equivalences,
    check_integral_equation,
    check_integrally_closed,
    check_pisd_gk,
    fractions_equal,
    is_goldman_krull,
    is_nilpotent_free,
    localize,
    search_integral_witness,
)
from .ideals import IdealRep, ideal, ideal_equal, ideal_mul, registered_spectrum
from .poly import (
    Polynomial,
    PolynomialOver,
    check_content_formula,
    check_gaussian,
    content,
    parse_polynomial,
    poly_mul,
)

__version__ = "0.1.0"
