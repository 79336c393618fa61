import itertools
from dataclasses import replace

import pytest

from oracles import gcd_by_divisors
from semiringkit.core import INF, Naturals
from semiringkit.errors import BrokenNorm, DivisionByZero, NoDecomposition, NonTermination, ZeroInputs
from semiringkit.euclid import (
    boolean_structure,
    check_subtractive_principal,
    div_rem,
    euclidean_gcd,
    euclidean_structure,
    find_euclidean_norm,
    naturals_structure,
    norm_table,
    remainder_chain,
    star_argmin,
    star_norm,
    star_structure,
    tropical_structure,
    verify_structure,
)
from semiringkit.factor import associates
from semiringkit.finite import chain3, enumerate_semirings

NE = naturals_structure()
TE = tropical_structure()


def test_naturals_division():
    assert div_rem(NE, 17, 5) == (3, 2)
    with pytest.raises(DivisionByZero):
        div_rem(NE, 3, 0)


def test_tropical_division():
    assert div_rem(TE, 5, 3) == (2, INF)
    assert div_rem(TE, 1, 3) == (0, 1)
    assert div_rem(TE, INF, 3) == (INF, INF)


def test_division_is_rechecked():
    liar = replace(NE, divide=lambda a, b: (0, 0))
    with pytest.raises(NoDecomposition):
        div_rem(liar, 7, 2)


def test_gcd_examples():
    assert euclidean_gcd(NE, 12, 18) == 6
    assert euclidean_gcd(NE, 5, 0) == 5
    assert euclidean_gcd(NE, 0, 5) == 5
    assert euclidean_gcd(TE, 3, 5) == 3
    with pytest.raises(ZeroInputs):
        euclidean_gcd(NE, 0, 0)


def test_remainder_chain_shape():
    chain = remainder_chain(NE, 12, 18)
    assert chain.remainders == (12, 18, 12, 6, 0)
    assert chain.gcd == 6


def test_gcd_against_divisor_oracle():
    for a, b in itertools.product(range(0, 61), repeat=2):
        if a or b:
            g = euclidean_gcd(NE, a, b)
            assert g == gcd_by_divisors(a, b)
            assert associates(Naturals(), g, gcd_by_divisors(a, b))


def test_nonterminating_structure_detected():
    # a norm that never decreases makes the chain loop
    stuck = replace(NE, norm=lambda a: INF if a == 0 else 1,
                    divide=lambda a, b: (0, a))
    with pytest.raises((NonTermination, NoDecomposition)):
        remainder_chain(stuck, 3, 5, max_steps=50)


def test_star_norm_closed_forms():
    assert star_norm(NE, 7) == 7
    assert star_argmin(NE, 7) == 1
    assert star_norm(TE, 4) == 4


def test_broken_star_multiplier_is_caught():
    bad = replace(NE, star_multiplier=lambda a: 2)
    with pytest.raises(BrokenNorm):
        star_argmin(bad, 5, bound=20)


def test_verify_registered_structures():
    assert verify_structure(NE, 60).holds
    assert verify_structure(TE, 60).holds
    assert verify_structure(boolean_structure()).holds


def test_star_structure_is_euclidean():
    assert verify_structure(star_structure(NE), 40).holds
    assert verify_structure(star_structure(TE), 40).holds


def test_chain3_norm():
    E = find_euclidean_norm(chain3())
    assert E is not None
    assert norm_table(E) == {0: INF, 1: 0, 2: 1}
    assert verify_structure(E).holds


def test_norm_search_can_fail():
    assert find_euclidean_norm(chain3(), value_cap=0) is None
    missing = [S for S in enumerate_semirings(4) if find_euclidean_norm(S) is None]
    assert len(missing) == 7


def test_found_norms_verify_order3():
    for S in itertools.chain(enumerate_semirings(2), enumerate_semirings(3)):
        E = find_euclidean_norm(S)
        if E is None:
            continue
        assert verify_structure(E).holds
        assert verify_structure(star_structure(E)).holds
        assert check_subtractive_principal(S).holds


def test_registry():
    assert euclidean_structure(Naturals()).name == "Naturals/identity"
    E = euclidean_structure(chain3())
    assert euclidean_gcd(E, 2, 1) in (1, 2)
