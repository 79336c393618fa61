import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import sumset_members
from semiringkit.core import INF, Boolean, Naturals, TropicalNat
from semiringkit.errors import BaseMismatch, ParseError
from semiringkit.finite import chain3, enumerate_semirings, z2
from semiringkit.ideals import (
    ideal,
    ideal_contains,
    ideal_difference,
    ideal_equal,
    ideal_mul,
    nat_ideal_contains,
    whole,
    zero_ideal,
)
from semiringkit.poly import (
    Polynomial,
    _gaussian_pair,
    check_content_formula,
    check_gaussian,
    content,
    format_polynomial,
    is_subtractive_pis,
    parse_polynomial,
    poly_add,
    poly_mul,
    tropical_products,
)

N, T, B = Naturals(), TropicalNat(), Boolean()


def P(base, *coeffs):
    return Polynomial(base, coeffs)


# ---------------------------------------------------------------- arithmetic


def test_poly_mul_examples():
    assert poly_mul(P(N, 1, 1), P(N, 1, 1)).coeffs == (1, 2, 1)
    assert poly_mul(P(B, 1, 1), P(B, 1, 1)).coeffs == (1, 1, 1)
    assert poly_mul(P(T, 0, 1), P(T, 0, 1)).coeffs == (0, 1, 2)


def test_zero_polynomial():
    assert P(N).degree == -1 and P(N, 0, 0).coeffs == ()
    assert P(T, INF).degree == -1
    assert poly_mul(P(N, 3), P(N)).degree == -1


def test_base_mismatch():
    with pytest.raises(BaseMismatch):
        poly_mul(P(N, 1), P(B, 1))
    with pytest.raises(BaseMismatch):
        poly_add(P(N, 1), P(T, 1))
    with pytest.raises(BaseMismatch):
        ideal_mul(ideal(N, 2), ideal(T, 2))


def naive_mul(base, f, g):
    out = [base.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = base.add(out[i + j], base.mul(a, b))
    return out


coeff_lists = st.lists(st.integers(min_value=0, max_value=9), min_size=1, max_size=5)


@given(coeff_lists, coeff_lists)
def test_mul_matches_naive_convolution(f, g):
    for base in (N, T):
        prod = poly_mul(Polynomial(base, tuple(f)), Polynomial(base, tuple(g)))
        assert prod == Polynomial(base, tuple(naive_mul(base, f, g)))


@given(coeff_lists, coeff_lists)
def test_degree_additivity(f, g):
    for base in (N, T):
        pf, pg = Polynomial(base, tuple(f)), Polynomial(base, tuple(g))
        if pf.degree >= 0 and pg.degree >= 0:
            assert poly_mul(pf, pg).degree == pf.degree + pg.degree


def test_polynomial_laws_sampled():
    rng = random.Random(3)
    for _ in range(200):
        f, g, h = (P(N, *(rng.randrange(5) for _ in range(rng.randrange(4)))) for _ in range(3))
        assert poly_mul(f, poly_add(g, h)) == poly_add(poly_mul(f, g), poly_mul(f, h))
        assert poly_mul(poly_mul(f, g), h) == poly_mul(f, poly_mul(g, h))


# ---------------------------------------------------------------- ideals


def test_content_examples():
    assert content(P(N, 2, 3)).generators == (2, 3)
    assert ideal_equal(content(P(N, 1, 1)), whole(N))
    assert content(P(N)).is_zero()
    assert content(P(N, 2, 3, 7)).generators == (2, 3)


def test_ideal_mul_examples():
    I = ideal(N, 2, 3)
    assert ideal_mul(I, I).generators == (4, 6, 9)
    assert ideal_equal(ideal_mul(I, whole(N)), I)
    S = chain3()
    J = ideal(S, 2)
    assert ideal_mul(J, J).members == frozenset({0, 2})


def test_ideal_equal_examples():
    assert ideal_equal(ideal(N, 2, 3), ideal(N, 2, 3, 7))
    assert ideal_difference(ideal(N, 6, 13), ideal(N, 4, 6, 9)) == 4
    assert ideal_equal(ideal(N, 5, 8), ideal(N, 5, 8))
    assert ideal_equal(ideal(T, 3, 5), ideal(T, 3))
    assert str(zero_ideal(T)) == "(inf)" and str(zero_ideal(N)) == "(0)"


gens_strategy = st.lists(st.integers(min_value=1, max_value=15), min_size=1, max_size=4)


@settings(max_examples=200)
@given(gens_strategy, st.integers(min_value=0, max_value=400))
def test_nat_membership_against_sumset(gens, x):
    assert nat_ideal_contains(gens, x) == (x in sumset_members(gens, x))


@given(gens_strategy, gens_strategy, gens_strategy)
def test_ideal_equal_is_an_equivalence(a, b, c):
    I, J, K = ideal(N, *a), ideal(N, *b), ideal(N, *c)
    assert ideal_equal(I, I)
    assert ideal_equal(I, J) == ideal_equal(J, I)
    if ideal_equal(I, J) and ideal_equal(J, K):
        assert ideal_equal(I, K)


@given(gens_strategy, gens_strategy)
def test_ideal_equal_against_window_oracle(a, b):
    limit = 2 * max(a + b) ** 2
    same = sumset_members(a, limit) == sumset_members(b, limit)
    assert ideal_equal(ideal(N, *a), ideal(N, *b)) == same


# ---------------------------------------------------------------- content formula


def test_content_formula_boolean_exhaustive():
    polys = [P(B, *c) for d in range(4) for c in itertools.product((0, 1), repeat=d + 1)]
    for f, g in itertools.product(polys, repeat=2):
        v = check_content_formula(B, f, g)
        assert v.holds and v.witness["n"] == 1


def test_content_formula_tropical():
    v = check_content_formula(T, P(T, 0, 1), P(T, 0, 2))
    assert v.holds and v.witness["n"] == 1 and v.note == ""


def test_content_formula_naturals_fails_with_warning():
    v = check_content_formula(N, P(N, 2, 3), P(N, 3, 2))
    assert not v.holds
    assert "not registered subtractive" in v.note
    assert v.witness["misses"][0] == {"n": 1, "separating_element": 4}
    assert len(v.witness["misses"]) == 8


# ---------------------------------------------------------------- Gaussian


def test_gaussian_boolean():
    v = check_gaussian(B, degree_bound=3)
    assert v.holds and v.bounds["exhaustive"]


def test_gaussian_naturals_counterexample():
    v = check_gaussian(N)
    assert not v.holds
    w = v.witness
    assert (w["f"], w["g"]) == (str(P(N, 2, 3)), str(P(N, 3, 2)))
    assert w["c(fg)"].generators == (6, 13)
    assert w["c(f)c(g)"].generators == (4, 6, 9)
    assert w["separating_element"] == 4 and not nat_ideal_contains((6, 13), 4)


def test_gaussian_tropical_exhaustive():
    v = check_gaussian(T, degree_bound=3, coeff_bound=6)
    assert v.holds and v.bounds["exhaustive"]


def test_tropical_batch_matches_generic_route():
    rng = random.Random(11)
    vals = list(range(7)) + [INF]
    polys = [tuple(rng.choice(vals) for _ in range(4)) for _ in range(40)]
    arr = np.array(polys, dtype=float)
    batch = tropical_products(arr, arr)
    for i, j in itertools.product(range(40), repeat=2):
        f, g = P(T, *polys[i]), P(T, *polys[j])
        prod = poly_mul(f, g)
        expect = list(prod.coeffs) + [INF] * (7 - len(prod.coeffs))
        assert list(batch[i, j]) == expect
        if f.degree >= 0 and g.degree >= 0:
            assert _gaussian_pair(f, g)[0] is None


def test_content_containment_everywhere():
    rng = random.Random(5)
    for base in (N, T):
        for _ in range(300):
            f, g = (P(base, *(rng.randrange(8) for _ in range(rng.randrange(1, 4))))
                    for _ in range(2))
            assert ideal_contains(ideal_mul(content(f), content(g)), content(poly_mul(f, g)))


def test_gaussian_on_finite_subtractive_pis():
    found = []
    for n in (2, 3):
        for S in enumerate_semirings(n):
            if is_subtractive_pis(S):
                found.append(S.describe())
                assert check_gaussian(S, degree_bound=2).holds, S.describe()
    assert len(found) == 6


# ---------------------------------------------------------------- literals


def test_parse_and_format():
    f = parse_polynomial("2 + 3 X", N)
    assert f.coeffs == (2, 3)
    assert parse_polynomial("1 + X^2", N).coeffs == (1, 0, 1)
    assert parse_polynomial("inf + 1 X", T).coeffs == (INF, 1)
    assert format_polynomial(P(T, 0, 1, 2)) == "0 + 1 X + 2 X^2"
    assert format_polynomial(P(T)) == "inf"
    for text in ("2 + + 3", "2 + y", "-1 + X"):
        with pytest.raises(ParseError):
            parse_polynomial(text, N)
    with pytest.raises(ParseError):
        parse_polynomial("2 X", B)


@given(coeff_lists)
def test_format_round_trip(c):
    for base in (N, T):
        f = Polynomial(base, tuple(c))
        assert parse_polynomial(format_polynomial(f), base) == f


def test_finite_bases_zero():
    assert content(P(z2(), 1, 1)).members == frozenset({0, 1})
