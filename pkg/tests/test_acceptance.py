"""One test per acceptance criterion; each prints a pass/fail line with its runtime."""

import contextlib
import itertools
import subprocess
import sys
import time
from collections import Counter
from fractions import Fraction

import conftest
from oracles import gcd_by_divisors, trial_division
from semiringkit.core import Boolean, MCSet, Naturals, TropicalNat, check_laws
from semiringkit.euclid import (
    check_subtractive_principal,
    euclidean_gcd,
    find_euclidean_norm,
    naturals_structure,
    star_norm,
    star_structure,
    tropical_structure,
    verify_structure,
)
from semiringkit.factor import (
    check_gcd_identities,
    check_kaplansky,
    factor_accp,
)
from semiringkit.finite import (
    check_saturated_complement,
    enumerate_ideals,
    enumerate_semirings,
    is_principal,
    is_subtractive,
    mc_sets,
)
from semiringkit.frac import (
    NaturalFractions,
    TropicalFractions,
    check_gk_equivalences,
    check_integrally_closed,
    check_local_global_nilpotent,
    check_pisd_gk,
    is_goldman_krull,
    natural_gk_refuter,
    principal_subtractive_sweep,
    search_integral_witness,
)
from semiringkit.ideals import nat_ideal_contains
from semiringkit.poly import PolynomialOver, check_gaussian, is_subtractive_pis

N, T, B = Naturals(), TropicalNat(), Boolean()


@contextlib.contextmanager
def criterion(number: int, desc: str, limit: float):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        line = f"criterion {number} {status} ({elapsed:.2f}s, limit {limit:g}s): {desc}"
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)


def small_semirings(max_order=3):
    for n in range(2, max_order + 1):
        yield from enumerate_semirings(n)


def test_criterion_01_axioms():
    with criterion(1, "axiom suite on infinite families and order <= 3 tables", 10):
        families = [N, T, PolynomialOver(N), PolynomialOver(T), NaturalFractions(),
                    TropicalFractions()]
        for s in families:
            v = check_laws(s, samples=10_000, seed=0)
            assert v.holds, v
        for S in small_semirings():
            assert check_laws(S).holds, S.describe()


def test_criterion_02_gcd_oracle():
    with criterion(2, "euclidean gcd equals divisor gcd on N and min on TropicalNat", 5):
        E = naturals_structure()
        for a, b in itertools.product(range(201), repeat=2):
            if a or b:
                assert euclidean_gcd(E, a, b) == gcd_by_divisors(a, b), (a, b)
        E = tropical_structure()
        for a, b in itertools.product(range(101), repeat=2):
            assert euclidean_gcd(E, a, b) == min(a, b)


def test_criterion_03_star_norm():
    with criterion(3, "minimised norm inequalities and re-verification", 10):
        E = naturals_structure()
        star = {a: star_norm(E, a) for a in range(1, 201)}
        for a in range(1, 201):
            assert star[a] <= E.norm(a)
            for s in range(1, 201):
                assert star[a] <= E.norm(s * a)
        assert verify_structure(star_structure(E)).holds
        checked = 0
        for S in itertools.chain(small_semirings(3), enumerate_semirings(4)):
            F = find_euclidean_norm(S)
            if F is None:
                continue
            checked += 1
            for a in S.elements():
                d = star_norm(F, a)
                assert d <= F.norm(a)
                assert all(d <= F.norm(S.mul(s, a)) for s in S.elements())
            assert verify_structure(star_structure(F)).holds, S.describe()
        assert checked > 0


def test_criterion_04_subtractive_principal():
    with criterion(4, "subtractive ideals are principal under a Euclidean norm (order <= 3)", 60):
        with_norm = 0
        for S in small_semirings():
            if find_euclidean_norm(S) is None:
                continue
            with_norm += 1
            ideals = enumerate_ideals(S)
            for I in ideals:
                if is_subtractive(S, I):
                    assert is_principal(S, I), (S.describe(), I)
            if all(is_subtractive(S, I) for I in ideals):
                assert all(is_principal(S, I) for I in ideals)
            assert check_subtractive_principal(S).holds
        assert with_norm > 0


def test_criterion_05_saturated_complement():
    with criterion(5, "saturation iff complement is a union of primes (order <= 3)", 60):
        count = 0
        for S in small_semirings():
            for W in mc_sets(S):
                v = check_saturated_complement(S, W)
                assert v.holds, (S.describe(), W, v.witness)
                count += 1
        assert count == 27


def test_criterion_06_kaplansky():
    with criterion(6, "Kaplansky criterion on N (200), TropicalNat (50), Boolean", 10):
        for s, bound in ((N, 200), (T, 50)):
            v = check_kaplansky(s, bound)
            assert v.holds and v.witness["ufsd"] and v.witness["prime_ideal_side"], v
        assert check_kaplansky(B).holds


def test_criterion_07_factorization():
    with criterion(7, "factorization matches trial division up to 10^4; tropical m is m ones", 10):
        for x in range(2, 10_001):
            f = factor_accp(N, x)
            assert Counter(f.factors) == Counter(trial_division(x)), x
            assert f.unit == 1
        for m in range(1, 201):
            assert factor_accp(T, m).factors == (1,) * m


def test_criterion_08_gcd_identities():
    with criterion(8, "gcd identities on N (<= 50) and TropicalNat (<= 30)", 10):
        assert check_gcd_identities(N, 50).holds
        assert check_gcd_identities(T, 30).holds


def test_criterion_09_gaussian():
    with criterion(9, "Gaussian: Boolean and TropicalNat hold, N fails at 4, finite subtractive PIS hold", 60):
        assert check_gaussian(B, degree_bound=3, coeff_bound=6).holds
        assert check_gaussian(T, degree_bound=3, coeff_bound=6).holds
        v = check_gaussian(N)
        assert not v.holds and v.witness["separating_element"] == 4
        assert v.witness["c(fg)"].generators == (6, 13)
        assert not nat_ideal_contains((6, 13), 4)
        pis = [S for S in small_semirings(4) if is_subtractive_pis(S)]
        assert pis
        for S in pis:
            assert check_gaussian(S, degree_bound=3 if S.order <= 3 else 2).holds, S.describe()


def test_criterion_10_integral_closure():
    with criterion(10, "3/2 has no integral equation; principal ideals subtractive; local-global", 30):
        assert search_integral_witness(N, Fraction(3, 2), 3, 20) is None
        assert principal_subtractive_sweep(N, 100).holds
        v = check_integrally_closed(N, [MCSet.parse("powers:2"), MCSet.parse("powers:3")])
        assert v.holds, v.witness


def test_criterion_11_nilpotent_local_global():
    with criterion(11, "nilpotent-free local-global agreement (order <= 4)", 300):
        for S in small_semirings(4):
            assert check_local_global_nilpotent(S).holds, S.describe()


def test_criterion_12_goldman_krull():
    with criterion(12, "GK: TropicalNat holds with u=1, N refuted for u <= 100, Boolean holds", 10):
        v = check_gk_equivalences(T, 1, 30)
        w = v.witness
        assert v.holds and w["primes_contain_u"] and w["ideals_contain_power"]
        assert w["fraction_field_is_S[1/u]"]
        assert is_goldman_krull(T).witness == 1
        v = check_pisd_gk(T)
        assert v.holds and v.witness["primes"] == 2
        v = is_goldman_krull(N, bound=100)
        assert not v.holds
        for u in range(1, 101):
            p = v.witness["u_to_p"][u]
            assert p == natural_gk_refuter(u) and u % p != 0
        assert is_goldman_krull(B).holds and check_pisd_gk(B).holds


def test_criterion_13_determinism():
    with criterion(13, "check all --json is byte-identical across two runs", 600):
        cmd = [sys.executable, "-m", "semiringkit", "check", "all", "--json"]
        first = subprocess.run(cmd, capture_output=True, check=False)
        second = subprocess.run(cmd, capture_output=True, check=False)
        assert first.returncode == 0, first.stderr.decode()
        assert first.stdout == second.stdout
        assert first.stdout
