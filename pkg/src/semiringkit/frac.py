"""Fractions and localization of semidomains, integrality, nilpotents and
Goldman-Krull detection.

Localizations of N, TropicalNat and Boolean are represented inside their
fraction semifield: N-fractions are :class:`fractions.Fraction` values,
tropical fractions are integers (the difference ``num - den``) with
``INF``, and Boolean fractions are Boolean.  Finite carriers are localized
by the quotient construction in :mod:`semiringkit.finite`.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from .core import INF, Boolean, MCSet, Naturals, Semiring, TropicalNat, Verdict
from .errors import (
    BaseMismatch,
    DivisionByZero,
    NotMCSet,
    NotPISD,
    ParseError,
    UnregisteredSpectrum,
    UnsupportedFamily,
    ZeroSemiring,
)
from .factor import divides, quotient
from .finite import (
    FiniteSemiring,
    enumerate_ideals,
    is_principal,
    localize_finite,
    maximal_ideals,
)
from .ideals import IdealRep, registered_spectrum


def _prime_support(n: int) -> frozenset:
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return frozenset(out)


def _as_mcset(T) -> MCSet:
    if isinstance(T, MCSet):
        return T
    if isinstance(T, str):
        return MCSet.parse(T)
    return MCSet.of(T)


# ---------------------------------------------------------------- semiring


@dataclass(frozen=True)
class FractionsOver(Semiring):
    """The localization ``base_T`` of N, TropicalNat or Boolean.

    ``T = nonzero`` gives the fraction semifield.  Values are canonical
    fraction values, see the module docstring.
    """

    base: Semiring
    T: MCSet

    def __post_init__(self):
        if not isinstance(self.base, (Naturals, TropicalNat, Boolean)):
            raise UnsupportedFamily(f"no fraction representation for {self.base.describe()}")
        if self.T.kind == "set":
            raise NotMCSet("explicit member sets are for finite carriers")
        if self.T.kind == "powers":
            for g in self.T.generators:
                if not self.base.contains(g):
                    raise NotMCSet(f"{g!r} is not an element of {self.base.describe()}")
                if g == self.base.zero:
                    raise ZeroSemiring("denominator set contains zero")

    @property
    def finite(self) -> bool:
        return isinstance(self.base, Boolean)

    @property
    def zero(self):
        return Fraction(0) if isinstance(self.base, Naturals) else self.base.zero

    @property
    def one(self):
        return Fraction(1) if isinstance(self.base, Naturals) else self.base.one

    # the denominators that actually invert something
    @property
    def _inverted(self) -> tuple:
        if self.T.kind == "units":
            return ()
        if self.T.kind == "nonzero":
            return ("all",)
        return tuple(g for g in self.T.generators if not self.base.is_unit(g))

    def is_semifield(self) -> bool:
        if isinstance(self.base, Boolean):
            return True
        inv = self._inverted
        return "all" in inv or (isinstance(self.base, TropicalNat) and bool(inv))

    def allowed_primes(self) -> frozenset | None:
        """Primes allowed in reduced denominators (N only); None means all."""
        if "all" in self._inverted:
            return None
        return frozenset().union(*(_prime_support(g) for g in self._inverted))

    def add(self, a, b):
        if isinstance(self.base, Naturals):
            return a + b
        return self.base.add(a, b)

    def mul(self, a, b):
        if isinstance(self.base, TropicalNat):
            return INF if INF in (a, b) else a + b
        return self.base.mul(a, b) if isinstance(self.base, Boolean) else a * b

    def divide(self, a, b):
        """``a / b`` for ``b`` invertible here."""
        if b == self.zero:
            raise DivisionByZero("fraction with zero denominator")
        if isinstance(self.base, Naturals):
            out = Fraction(a) / Fraction(b)
        elif isinstance(self.base, TropicalNat):
            out = INF if a == INF else a - b
        else:
            out = a
        if not self.contains(out):
            raise DivisionByZero(f"{self.format(b)} is not invertible in {self.describe()}")
        return out

    def contains(self, a) -> bool:
        if isinstance(self.base, Naturals):
            if isinstance(a, bool) or not isinstance(a, (int, Fraction)) or a < 0:
                return False
            allowed = self.allowed_primes()
            den = Fraction(a).denominator
            return allowed is None or _prime_support(den) <= allowed
        if isinstance(self.base, TropicalNat):
            if a == INF and isinstance(a, float):
                return True
            if isinstance(a, bool) or not isinstance(a, int):
                return False
            return a >= 0 or self.is_semifield()
        return self.base.contains(a)

    def is_unit(self, a) -> bool:
        if a == self.zero:
            return False
        if isinstance(self.base, TropicalNat):
            return self.contains(-a)
        if isinstance(self.base, Naturals):
            return self.contains(1 / Fraction(a))
        return True

    def denominators_up_to(self, bound: int) -> list:
        """Members of T of size at most ``bound`` (N only)."""
        if self.T.kind == "nonzero":
            return list(range(1, bound + 1))
        out = {1}
        for g in self._inverted:
            out |= {x * g ** k for x in out for k in range(1, bound.bit_length() + 1)
                    if x * g ** k <= bound}
        return sorted(out)

    def elements(self):
        return self.base.elements()

    def elements_up_to(self, bound: int) -> Iterable:
        if isinstance(self.base, Naturals):
            seen = set()
            for den in self.denominators_up_to(bound):
                for num in range(bound + 1):
                    seen.add(Fraction(num, den))
            return sorted(seen)
        if isinstance(self.base, TropicalNat):
            low = -bound if self.is_semifield() else 0
            return list(range(low, bound + 1)) + [INF]
        return list(self.base.elements())

    def size(self, a) -> int:
        if isinstance(self.base, Naturals):
            return max(Fraction(a).numerator, Fraction(a).denominator)
        if isinstance(self.base, TropicalNat):
            return 0 if a == INF else abs(a)
        return a

    def random_element(self, rng: random.Random):
        if isinstance(self.base, Boolean):
            return rng.choice((0, 1))
        if isinstance(self.base, TropicalNat):
            if rng.random() < 0.1:
                return INF
            low = -50 if self.is_semifield() else 0
            return rng.randrange(low, 51)
        dens = self.denominators_up_to(64)
        return Fraction(rng.randrange(0, 200), rng.choice(dens))

    def is_semidomain(self) -> Verdict:
        return Verdict("semidomain", True, note="localization of a semidomain")

    def format(self, a) -> str:
        return self.base.format(a) if isinstance(self.base, TropicalNat) else str(a)

    def describe(self) -> str:
        if self.T.kind == "nonzero":
            return f"F({self.base.describe()})"
        return f"{self.base.describe()}[{self.T}^-1]"


def NaturalFractions(T="nonzero") -> FractionsOver:
    return FractionsOver(Naturals(), _as_mcset(T))


def TropicalFractions(T="nonzero") -> FractionsOver:
    return FractionsOver(TropicalNat(), _as_mcset(T))


def BooleanFractions(T="nonzero") -> FractionsOver:
    return FractionsOver(Boolean(), _as_mcset(T))


def localize(s: Semiring, T) -> Semiring:
    """``s_T``; ``T = nonzero`` gives the fraction semifield.

    Finite tables are localized by the three-factor quotient and come back
    as a :class:`FiniteSemiring`.
    """
    T = _as_mcset(T)
    if isinstance(s, FractionsOver):
        if T.kind in ("units",):
            return s
        if T.kind == "nonzero":
            return FractionsOver(s.base, T)
        raise UnsupportedFamily("localize the base with a combined MC-set instead")
    if isinstance(s, Boolean):
        if T.kind == "powers" and 0 in T.generators:
            raise ZeroSemiring("denominator set contains zero")
        if T.kind == "set":
            members = set(T.generators)
            if 0 in members:
                raise ZeroSemiring("denominator set contains zero")
            if 1 not in members:
                raise NotMCSet(f"{T} does not contain one")
            T = MCSet.units()
        return FractionsOver(s, T)
    if isinstance(s, (Naturals, TropicalNat)):
        return FractionsOver(s, T)
    if isinstance(s, FiniteSemiring):
        return localize_finite(s, T).semiring
    raise UnsupportedFamily(f"localization not available over {s.describe()}")


def fraction_field(R: Semiring) -> Semiring:
    """The fraction semifield containing ``R`` (semidomains only)."""
    if isinstance(R, FractionsOver):
        return FractionsOver(R.base, MCSet.nonzero())
    if isinstance(R, (Naturals, TropicalNat, Boolean)):
        return FractionsOver(R, MCSet.nonzero())
    if R.finite and R.is_semidomain():
        # a finite semidomain is already a semifield
        return R
    raise UnsupportedFamily(f"no fraction semifield for {R.describe()}")


def embed(R: Semiring, a):
    """``a`` as a value of :func:`fraction_field` of ``R``."""
    if isinstance(R, Naturals):
        return Fraction(a)
    return a


def _divide(K: Semiring, a, b):
    if isinstance(K, FractionsOver):
        return K.divide(a, b)
    q = quotient(K, b, a)
    if q is None:
        raise DivisionByZero(f"{b} does not divide {a} in {K.describe()}")
    return q


# ---------------------------------------------------------------- fractions


@dataclass(frozen=True)
class Frac:
    """The fraction ``num/den`` over the semidomain ``base``."""

    base: Semiring
    num: Any
    den: Any

    def __post_init__(self):
        if self.den == self.base.zero:
            raise DivisionByZero("fraction with zero denominator")

    @property
    def value(self):
        """Canonical value in the fraction semifield of ``base``."""
        K = fraction_field(self.base)
        return _divide(K, embed(self.base, self.num), embed(self.base, self.den))

    def __str__(self) -> str:
        return f"{self.base.format(self.num)}/{self.base.format(self.den)}"

    def to_dict(self) -> str:
        return str(self)


def parse_fraction(text: str, base: Semiring) -> Frac:
    """``a/b`` or ``a`` with family literals (``inf`` for the tropical zero)."""
    from .poly import parse_element

    num, sep, den = text.partition("/")
    if not num.strip():
        raise ParseError(f"bad fraction {text!r}")
    a = parse_element(num, base)
    b = parse_element(den, base) if sep else base.one
    return Frac(base, a, b)


def fractions_equal(x: Frac, y: Frac) -> bool:
    """Cross multiplication: ``a/s == b/t`` iff ``a*t == b*s``."""
    if x.base != y.base:
        raise BaseMismatch(f"{x.base.describe()} vs {y.base.describe()}")
    S = x.base
    return S.mul(x.num, y.den) == S.mul(y.num, x.den)


# ---------------------------------------------------------------- integrality


@dataclass(frozen=True)
class IntegralEquation:
    """``u^n + a1 u^(n-1) + ... + an = b1 u^(n-1) + ... + bn``."""

    lhs: tuple
    rhs: tuple

    def __post_init__(self):
        if len(self.lhs) != len(self.rhs) or not self.lhs:
            raise ValueError("need n >= 1 coefficients on each side")

    @property
    def degree(self) -> int:
        return len(self.lhs)

    def to_dict(self) -> dict:
        return {"degree": self.degree, "lhs": list(self.lhs), "rhs": list(self.rhs)}


def _sides(K: Semiring, R: Semiring, x, eq: IntegralEquation):
    n = eq.degree
    powers = [K.one]
    for _ in range(n):
        powers.append(K.mul(powers[-1], x))
    left = powers[n]
    right = K.zero
    for i in range(1, n + 1):
        left = K.add(left, K.mul(embed(R, eq.lhs[i - 1]), powers[n - i]))
        right = K.add(right, K.mul(embed(R, eq.rhs[i - 1]), powers[n - i]))
    return left, right


def _value_of(u, R: Semiring):
    if isinstance(u, Frac):
        return u.base, u.value
    if R is None:
        raise ValueError("a bare value needs its base semidomain")
    return R, u


def check_integral_equation(u, eq: IntegralEquation, R: Semiring | None = None) -> bool:
    """Evaluate both sides in the fraction semifield and compare.

    ``u`` is a :class:`Frac`, or a fraction value together with ``R``.
    """
    R, x = _value_of(u, R)
    left, right = _sides(fraction_field(R), R, x, eq)
    return left == right


def _rational_valued(R: Semiring) -> bool:
    return isinstance(R, Naturals) or (isinstance(R, FractionsOver) and isinstance(R.base, Naturals))


def search_integral_witness(R: Semiring, u, degree_bound: int = 3, coeff_bound: int = 20):
    """First equation (by degree, then coefficients) over ``R`` satisfied by ``u``.

    Coefficients range over ``R.elements_up_to(coeff_bound)``.  For N and
    its localizations addition cancels inside the rationals, so the search
    runs over the differences ``c_i = b_i - a_i`` and solves for the last
    one; this visits exactly the same equations as the naive product.
    Returns None when nothing is found within the bounds.
    """
    R, x = _value_of(u, R)
    K = fraction_field(R)
    coeffs = list(R.elements_up_to(coeff_bound))
    if _rational_valued(R):
        return _search_by_differences(R, Fraction(x), coeffs, degree_bound)
    for n in range(1, degree_bound + 1):
        for lhs in itertools.product(coeffs, repeat=n):
            for rhs in itertools.product(coeffs, repeat=n):
                eq = IntegralEquation(lhs, rhs)
                left, right = _sides(K, R, x, eq)
                if left == right:
                    return eq
    return None


def _search_by_differences(R, x: Fraction, coeffs, degree_bound):
    coeffs = [Fraction(c) for c in coeffs]
    split: dict = {}
    for a in coeffs:
        for b in coeffs:
            split.setdefault(b - a, (a, b))
    diffs = sorted(split)

    def native(c):
        return int(c) if isinstance(R, Naturals) else c

    for n in range(1, degree_bound + 1):
        powers = [x ** k for k in range(n + 1)]
        for prefix in itertools.product(diffs, repeat=n - 1):
            partial = sum(c * powers[n - i] for i, c in enumerate(prefix, start=1))
            last = powers[n] - partial
            if last in split:
                pairs = [split[c] for c in (*prefix, last)]
                return IntegralEquation(tuple(native(a) for a, _ in pairs),
                                        tuple(native(b) for _, b in pairs))
    return None


def non_members(R: Semiring, count: int, bound: int = 12) -> list:
    """The first ``count`` values of the fraction semifield outside ``R``,
    ordered by size (numerator and denominator at most ``bound``)."""
    K = fraction_field(R)
    if K == R or (isinstance(R, FractionsOver) and R.is_semifield()):
        return []
    out = []
    for x in K.elements_up_to(bound):
        if not R.contains(int(x) if isinstance(R, Naturals) and x.denominator == 1 else x):
            out.append(x)
    out.sort(key=lambda v: (K.size(v), v))
    return out[:count]


def principal_subtractive_sweep(s: Semiring, bound: int = 100) -> Verdict:
    """``a + b`` and ``a`` in ``(n)`` force ``b`` in ``(n)``, for ``a, b, n <= bound``."""
    name = f"principal-subtractive/{s.describe()}"
    elems = list(s.elements_up_to(bound)) if not s.finite else list(s.elements())
    for n in elems:
        if n == s.zero:
            continue
        inside = [a for a in elems if divides(s, n, a)]
        for a in inside:
            for b in elems:
                if divides(s, n, s.add(a, b)) and not divides(s, n, b):
                    return Verdict(name, False, witness={"n": n, "a": a, "b": b},
                                   bounds={"bound": bound})
    return Verdict(name, True, bounds={"bound": bound})


GCD_SEMIDOMAINS = (Naturals, TropicalNat, Boolean)


def _search_route(R, degree_bound, coeff_bound, sample):
    found = {}
    tested = non_members(R, sample)
    for x in tested:
        eq = search_integral_witness(R, x, degree_bound, coeff_bound)
        if eq is not None:
            found[str(x)] = eq
    return tested, found


def check_integrally_closed(base: Semiring, T_list=(), degree_bound: int = 3,
                            coeff_bound: int = 20, sample: int = 10) -> Verdict:
    """Integral closedness of ``base`` and of each localization in ``T_list``.

    Structural route: ``base`` is a registered gcd semidomain whose principal
    ideals pass the subtractivity sweep.  Search route: no equation within
    the bounds for the first ``sample`` non-members.  The search route also
    runs on every localization; the verdict holds when everything agrees.
    """
    name = f"integrally-closed/{base.describe()}"
    bounds = {"degree_bound": degree_bound, "coeff_bound": coeff_bound, "sample": sample}
    sweep = principal_subtractive_sweep(base, 100)
    structural = isinstance(base, GCD_SEMIDOMAINS) and sweep.holds
    tested, found = _search_route(base, degree_bound, coeff_bound, sample)
    local = {}
    for T in T_list:
        R = localize(base, T)
        t, f = _search_route(R, degree_bound, min(coeff_bound, 6), sample)
        local[R.describe()] = {"tested": len(t), "equations": f}
    local_ok = all(not v["equations"] for v in local.values())
    holds = structural and not found and local_ok
    witness = {
        "structural": structural,
        "search_tested": [str(x) for x in tested],
        "search_equations": found,
        "localizations": local,
    }
    note = "F(S) = S: nothing to test" if not tested and not T_list else ""
    return Verdict(name, holds, witness=witness, note=note, bounds=bounds)


# ---------------------------------------------------------------- nilpotents


def is_nilpotent_free(s: Semiring) -> Verdict:
    """No nonzero ``a`` with ``a*a == 0`` (which rules out all nilpotents)."""
    name = f"nilpotent-free/{s.describe()}"
    if s.finite:
        for a in s.elements():
            if a != s.zero and s.mul(a, a) == s.zero:
                return Verdict(name, False, witness=a, bounds={"exhaustive": True})
        return Verdict(name, True, bounds={"exhaustive": True})
    from .poly import PolynomialOver

    if isinstance(s, (Naturals, TropicalNat, FractionsOver)):
        return Verdict(name, True, note="semidomain: a*a == 0 forces a == 0")
    if isinstance(s, PolynomialOver) and isinstance(s.base, (Naturals, TropicalNat, Boolean)):
        return Verdict(name, True, note="polynomials over a semidomain form a semidomain")
    raise UnsupportedFamily(f"nilpotent check not available over {s.describe()}")


def check_local_global_nilpotent(S: Semiring) -> Verdict:
    """Nilpotent-freeness of ``S`` against that of every ``S_M``, M maximal."""
    name = f"nilpotent-local-global/{S.describe()}"
    global_v = is_nilpotent_free(S)
    local = {}
    for M in maximal_ideals(S):
        comp = MCSet.of(a for a in S.elements() if a not in M)
        L = localize(S, comp)
        local[str(sorted(M))] = is_nilpotent_free(L).holds
    agree = global_v.holds == all(local.values())
    return Verdict(name, agree, witness={"global": global_v.holds, "local": local},
                   bounds={"exhaustive": True})


# ---------------------------------------------------------------- Goldman-Krull


def natural_gk_refuter(u: int, avoid: Iterable[int] = ()) -> int:
    """Least prime dividing neither ``u`` nor any number in ``avoid``;
    the ideal ``(p)`` is then a nonzero prime missing ``u``."""
    if u <= 0:
        raise ValueError("candidate must be a positive integer")
    avoid = [a for a in avoid if a > 1]
    p = 2
    while u % p == 0 or any(a % p == 0 for a in avoid):
        p += 1
        while any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
            p += 1
    return p


def _finite_gk(s: Semiring, name: str) -> Verdict:
    nonzero = [P for P in registered_spectrum(s).primes if not P.is_zero()]
    common = set(s.elements())
    for P in nonzero:
        common &= P.members
    common.discard(s.zero)
    if not common:
        return Verdict(name, False, witness={"nonzero_primes": [sorted(P.members) for P in nonzero]},
                       note="nonzero primes meet only in zero")
    u = min(common)
    note = "no nonzero primes: empty intersection is the whole semiring" if not nonzero else ""
    return Verdict(name, True, witness=u, note=note)


def is_goldman_krull(base: Semiring, bound: int = 100) -> Verdict:
    """Whether the nonzero primes have a common nonzero element.

    Over N the verdict fails and its witness maps each candidate
    ``u <= bound`` to a prime ideal ``(p)`` missing it.
    """
    name = f"goldman-krull/{base.describe()}"
    if isinstance(base, TropicalNat):
        reg = registered_spectrum(base)
        (P,) = reg.nonzero()
        return Verdict(name, True, witness=min(P.generators),
                       note="unique nonzero prime (1) = {x >= 1} with inf")
    if isinstance(base, Naturals):
        refuted = {u: natural_gk_refuter(u) for u in range(1, bound + 1)}
        return Verdict(name, False, witness={"refuter": "least prime not dividing u",
                                             "u_to_p": refuted},
                       bounds={"bound": bound})
    if isinstance(base, FractionsOver):
        if base.is_semifield():
            u = 1 if isinstance(base.base, TropicalNat) else base.one
            return Verdict(name, True, witness=u,
                           note="semifield: empty intersection is the whole semiring")
        if isinstance(base.base, TropicalNat):
            return is_goldman_krull(base.base, bound)
        avoid = base._inverted
        refuted = {}
        for x in base.elements_up_to(12):
            if x != 0 and len(refuted) < bound:
                refuted[str(x)] = natural_gk_refuter(Fraction(x).numerator, avoid)
        return Verdict(name, False, witness={"refuter": "least prime not dividing the "
                                             "numerator or an inverted element",
                                             "u_to_p": refuted}, bounds={"bound": bound})
    if base.finite:
        return _finite_gk(base, name)
    raise UnregisteredSpectrum(f"no spectrum registered for {base.describe()}")


def _power_in(s: Semiring, I: IdealRep, u, bound: int):
    p = u
    for k in range(1, bound + 1):
        if p in I:
            return k
        p = s.mul(p, u)
    return None


def check_gk_equivalences(base: Semiring, u, bound: int = 30) -> Verdict:
    """The three Goldman-Krull conditions for ``u`` at scope ``bound``.

    (1) every registered nonzero prime contains ``u``; (2) every ideal
    ``(m)``, ``m`` nonzero of size <= bound, contains some ``u^k``,
    ``k <= bound``; (3) each ``1/s`` (``s`` as in (2)) equals ``t/u^n``
    for some ``n <= bound``, i.e. ``s | u^n``.  Holds when the three agree.
    """
    if u == base.zero or not base.contains(u):
        raise ValueError("u must be a nonzero element")
    reg = registered_spectrum(base, bound)
    elems = [m for m in (base.elements() if base.finite else base.elements_up_to(bound))
             if m != base.zero]
    miss_prime = next((P for P in reg.nonzero() if u not in P), None)
    miss_ideal = next((m for m in elems if _power_in(base, IdealRep(base, (m,)), u, bound) is None),
                      None)
    miss_frac = None
    for s in elems:
        p = u
        for _ in range(bound):
            if divides(base, s, p):
                break
            p = base.mul(p, u)
        else:
            miss_frac = s
            break
    c1, c2, c3 = miss_prime is None, miss_ideal is None, miss_frac is None
    witness = {
        "u": u,
        "primes_contain_u": c1,
        "ideals_contain_power": c2,
        "fraction_field_is_S[1/u]": c3,
        "prime_missing_u": miss_prime,
        "ideal_without_power": miss_ideal,
        "inverse_not_reached": miss_frac,
    }
    return Verdict(f"gk-equivalences/{base.describe()}", c1 == c2 == c3, witness=witness,
                   note=reg.note, bounds={"bound": bound})


def _principal_search(base: Semiring, I: IdealRep, limit: int):
    """Some ``n <= limit`` with ``(n) == I``, checked on 0..M^2+M."""
    from .ideals import ideal_equal

    for n in base.elements_up_to(limit):
        if ideal_equal(IdealRep(base, (n,)), I):
            return n
    return None


def registered_pisd(base: Semiring) -> bool:
    if isinstance(base, (TropicalNat, Boolean)):
        return True
    if isinstance(base, FractionsOver):
        return base.is_semifield()
    if base.finite:
        return bool(base.is_semidomain()) and all(is_principal(base, I)
                                                 for I in enumerate_ideals(base))
    return False


def check_pisd_gk(base: Semiring) -> Verdict:
    """A PISD is Goldman-Krull iff it has finitely many primes."""
    if isinstance(base, Naturals):
        I = IdealRep(base, (2, 3))
        n = _principal_search(base, I, 3)
        if n is None:
            raise NotPISD("Naturals: the ideal (2, 3) equals no (n) with n <= 3")
    if not registered_pisd(base):
        raise NotPISD(f"{base.describe()} is not a registered PISD")
    name = f"pisd-gk/{base.describe()}"
    gk = is_goldman_krull(base)
    if isinstance(base, FractionsOver):
        count, complete = 1, True
    else:
        reg = registered_spectrum(base)
        count, complete = len(reg.primes), reg.complete
    finite_spec = complete
    return Verdict(name, gk.holds == finite_spec,
                   witness={"goldman_krull": gk.holds, "primes": count,
                            "spectrum_finite": finite_spec})


def exhibits_fraction_field(base: Semiring, gens: list, bound: int = 30) -> Verdict:
    """Whether ``F(S) = S[gens]`` shows up at scope ``bound``.

    Each ``1/s`` with ``s`` nonzero of size <= bound must equal a single term
    ``t * prod(g_i^e_i)`` with ``e_i <= bound``; sums are not searched.
    """
    K = fraction_field(base)
    vals = [g.value if isinstance(g, Frac) else g for g in gens]
    name = f"fraction-field-generated/{base.describe()}"
    elems = [s for s in (base.elements() if base.finite else base.elements_up_to(bound))
             if s != base.zero]
    for s in elems:
        target = _divide(K, K.one, embed(base, s))
        if not _single_term(base, K, vals, target, bound):
            return Verdict(name, False, witness=s, bounds={"bound": bound})
    return Verdict(name, True, bounds={"bound": bound})


def _single_term(base, K, vals, target, bound) -> bool:
    for exps in itertools.product(range(bound + 1), repeat=len(vals)):
        mono = K.one
        for v, e in zip(vals, exps):
            for _ in range(e):
                mono = K.mul(mono, v)
        if mono == K.zero:
            continue
        t = _divide(K, target, mono)
        if isinstance(base, Naturals) and Fraction(t).denominator == 1:
            t = int(t)
        if base.contains(t):
            return True
    return False


def single_generator(base: Semiring, gens: list) -> Frac:
    """``1/(u1*...*un)`` for generators ``s_i/u_i``."""
    return Frac(base, base.one, base.prod(g.den for g in gens))


__all__ = [
    "FractionsOver", "NaturalFractions", "TropicalFractions", "BooleanFractions", "Frac",
    "IntegralEquation", "localize", "fraction_field", "embed", "parse_fraction",
    "fractions_equal", "check_integral_equation", "search_integral_witness", "non_members",
    "principal_subtractive_sweep", "check_integrally_closed", "is_nilpotent_free",
    "check_local_global_nilpotent", "natural_gk_refuter", "is_goldman_krull",
    "check_gk_equivalences", "registered_pisd", "check_pisd_gk", "exhibits_fraction_field",
    "single_generator",
]
