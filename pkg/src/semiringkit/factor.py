"""Divisibility, irreducibles and primes, ACCP factorization, and gcds.

Decisions on N, TropicalNat and finite carriers are exact.  Statements
quantifying over an infinite carrier (primality in the divisibility form,
the Kaplansky criterion) are checked up to an explicit bound recorded in
the returned :class:`~semiringkit.core.Verdict`.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Any, Iterable

from .core import INF, Naturals, Semiring, TropicalNat, Verdict
from .errors import AllZero, DepthExceeded, DivisionByZero, NoGcd, NotFactorable, UnsupportedFamily
from .euclid import euclidean_gcd, naturals_structure, tropical_structure
from .ideals import registered_spectrum


# ---------------------------------------------------------------- divisibility


@functools.singledispatch
def quotient(s: Semiring, b, a):
    """Some ``x`` with ``a == b*x``, or None.  Raises on ``b == 0``."""
    if s.finite:
        _nonzero(s, b)
        return next((x for x in s.elements() if s.mul(b, x) == a), None)
    raise UnsupportedFamily(f"divisibility not available over {s.describe()}")


def _nonzero(s, b):
    if b == s.zero:
        raise DivisionByZero(f"divisor is zero in {s.describe()}")


@quotient.register
def _(s: Naturals, b, a):
    _nonzero(s, b)
    q, r = divmod(a, b)
    return q if r == 0 else None


@quotient.register
def _(s: TropicalNat, b, a):
    _nonzero(s, b)
    if a == INF:
        return INF
    return a - b if b <= a else None


def divides(s: Semiring, b, a) -> bool:
    """``b | a``: some ``x`` has ``a == b*x``."""
    return quotient(s, b, a) is not None


def units(s: Semiring) -> list:
    if s.finite:
        return [u for u in s.elements() if s.is_unit(u)]
    if isinstance(s, (Naturals, TropicalNat)):
        return [s.one]
    raise UnsupportedFamily(f"unit group not registered for {s.describe()}")


def associates(s: Semiring, a, b) -> bool:
    """``a == u*b`` for a unit ``u``."""
    return any(s.mul(u, b) == a for u in units(s))


def associates_by_ideals(s: Semiring, a, b) -> bool:
    """``(a) == (b)``, i.e. mutual divisibility (zero only with zero)."""
    if a == s.zero or b == s.zero:
        return a == b
    return divides(s, a, b) and divides(s, b, a)


# ---------------------------------------------------------------- irreducibles and primes


def _least_divisor(n: int) -> int:
    if n % 2 == 0:
        return 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return d
    return n


def is_classical_prime(n: int) -> bool:
    return n >= 2 and _least_divisor(n) == n


def is_irreducible(s: Semiring, x) -> bool:
    """Nonzero nonunit whose every factorization has a unit factor."""
    if x == s.zero or s.is_unit(x):
        return False
    if isinstance(s, Naturals):
        return is_classical_prime(x)
    if isinstance(s, TropicalNat):
        return x == 1
    if s.finite:
        return all(
            s.is_unit(a) or s.is_unit(b)
            for a in s.elements() for b in s.elements() if s.mul(a, b) == x
        )
    raise UnsupportedFamily(f"irreducibility not available over {s.describe()}")


def prime_by_divisibility(s: Semiring, p, bound: int = 500) -> Verdict:
    """Search ``a, b`` of size <= bound with ``p | ab`` but ``p`` dividing neither.

    Exhaustive on finite carriers.  Zero and units are never prime here.
    """
    name = f"prime-element/{s.describe()}"
    bounds = {} if s.finite else {"bound": bound}
    if p == s.zero:
        return Verdict(name, False, witness=p, note="zero is excluded", bounds=bounds)
    if s.is_unit(p):
        return Verdict(name, False, witness=p, note="units are not prime", bounds=bounds)
    elems = list(s.elements_up_to(bound))
    div = {a: divides(s, p, a) for a in elems}
    for a in elems:
        if div[a]:
            continue
        for b in elems:
            if not div[b] and divides(s, p, s.mul(a, b)):
                return Verdict(name, False, witness=(a, b),
                               note=f"p divides {s.format(s.mul(a, b))} but neither factor",
                               bounds=bounds)
    return Verdict(name, True, bounds=bounds)


def is_prime_element(s: Semiring, p, bound: int = 500) -> Verdict:
    """Whether ``(p)`` is a prime ideal, in the form ``p | ab => p | a or p | b``.

    N uses the classical test and reports the least divisor pair as the
    counterexample; TropicalNat has the single prime ``1`` (witness
    ``(1, p - 1)`` otherwise).  Other families search exhaustively or up to
    ``bound``.
    """
    name = f"prime-element/{s.describe()}"
    if isinstance(s, Naturals):
        if p in (0, 1):
            return Verdict(name, False, witness=p, note="zero and units are not prime")
        d = _least_divisor(p)
        if d == p:
            return Verdict(name, True, note="classical prime")
        return Verdict(name, False, witness=(d, p // d), note=f"{p} = {d}*{p // d}")
    if isinstance(s, TropicalNat):
        if p == INF or p == 0:
            return Verdict(name, False, witness=p, note="zero and units are not prime")
        if p == 1:
            return Verdict(name, True, note="a + b >= 1 forces a >= 1 or b >= 1")
        return Verdict(name, False, witness=(1, p - 1), note=f"{p} = 1 + {p - 1}")
    return prime_by_divisibility(s, p, bound)


# ---------------------------------------------------------------- factorization


@dataclass(frozen=True)
class Factorization:
    subject: Any
    unit: Any
    factors: tuple

    def product(self, s: Semiring):
        return s.mul(self.unit, s.prod(self.factors))

    def to_dict(self) -> dict:
        return {"subject": self.subject, "unit": self.unit, "factors": list(self.factors)}


def _proper_split(s: Semiring, x):
    """``(a, b)`` nonunits with ``x == a*b``, or None if ``x`` is irreducible."""
    if isinstance(s, Naturals):
        d = _least_divisor(x)
        return None if d == x else (d, x // d)
    if isinstance(s, TropicalNat):
        return None if x == 1 else (1, x - 1)
    if s.finite:
        for a in s.elements():
            if a == s.zero or s.is_unit(a):
                continue
            for b in s.elements():
                if b != s.zero and not s.is_unit(b) and s.mul(a, b) == x:
                    return a, b
        return None
    raise UnsupportedFamily(f"factorization not available over {s.describe()}")


def factor_accp(s: Semiring, x, max_depth: int | None = None) -> Factorization:
    """Split ``x`` into irreducibles by repeated proper factorization.

    On N the least nontrivial divisor is split off first, so factors come
    out ascending.  Each split must strictly shrink the element; otherwise
    :class:`DepthExceeded` signals a family without ACCP.
    """
    if x == s.zero or s.is_unit(x):
        raise NotFactorable(f"{s.format(x)} is zero or a unit")
    if max_depth is None:
        max_depth = len(list(s.elements())) if s.finite else 10_000
    factors = []
    stack = [(x, 0)]
    while stack:
        y, depth = stack.pop()
        if depth > max_depth:
            raise DepthExceeded(f"splitting {s.format(x)} exceeded depth {max_depth}")
        split = _proper_split(s, y)
        if split is None:
            factors.append(y)
            continue
        a, b = split
        if not s.finite and not (s.size(a) < s.size(y) and s.size(b) < s.size(y)):
            raise DepthExceeded(f"split {a}*{b} of {y} does not descend")
        stack.append((b, depth + 1))
        stack.append((a, depth + 1))
    if isinstance(s, Naturals):
        factors.sort()
    result = Factorization(x, s.one, tuple(factors))
    if result.product(s) != x:
        raise AssertionError(f"factorization of {x} does not multiply back")
    return result


# ---------------------------------------------------------------- gcd


def gcd_set(s: Semiring, A: Iterable):
    """A greatest common divisor of ``A`` (some member nonzero).

    N folds the Euclidean algorithm over the set; TropicalNat takes the
    least finite member; finite carriers search all candidates.
    """
    A = list(A)
    nonzero = [a for a in A if a != s.zero]
    if not nonzero:
        raise AllZero("gcd of a set with no nonzero element")
    if isinstance(s, Naturals):
        E = naturals_structure()
        return functools.reduce(lambda x, y: euclidean_gcd(E, x, y), nonzero)
    if isinstance(s, TropicalNat):
        return min(nonzero)
    if s.finite:
        common = [d for d in s.elements() if d != s.zero and all(divides(s, d, a) for a in A)]
        for d in common:
            if all(divides(s, e, d) for e in common):
                return d
        raise NoGcd(f"no gcd of {A} in {s.describe()}")
    raise UnsupportedFamily(f"gcd not available over {s.describe()}")


def _gcd2(s: Semiring):
    # pairwise gcd with caching for the identity sweeps
    if isinstance(s, Naturals):
        E = naturals_structure()
        return functools.lru_cache(maxsize=None)(lambda a, b: euclidean_gcd(E, a, b))
    if isinstance(s, TropicalNat):
        E = tropical_structure()
        return functools.lru_cache(maxsize=None)(lambda a, b: euclidean_gcd(E, a, b))
    return functools.lru_cache(maxsize=None)(lambda a, b: gcd_set(s, (a, b)))


def check_gcd_identities(s: Semiring, bound: int = 50) -> Verdict:
    """Sweep the three gcd identities over elements of size <= bound.

    1. ``gcd(ab, ac) ~ a gcd(b, c)``
    2. ``d = gcd(a, b)`` gives ``gcd(a/d, b/d) ~ 1``
    3. ``gcd(a, b) ~ 1`` and ``gcd(a, c) ~ 1`` give ``gcd(a, bc) ~ 1``

    where ``~`` is equality up to associates; tuples where a gcd is
    undefined (all arguments zero) are skipped.
    """
    name = f"gcd-identities/{s.describe()}"
    bounds = {"exhaustive": True} if s.finite else {"bound": bound}
    elems = list(s.elements_up_to(bound))
    zero, one = s.zero, s.one
    gcd = _gcd2(s)
    unit = s.is_unit

    def same(x, y):
        return associates(s, x, y)

    for a, b, c in itertools.product(elems, repeat=3):
        ab, ac = s.mul(a, b), s.mul(a, c)
        if (ab != zero or ac != zero) and not same(gcd(ab, ac), s.mul(a, gcd(b, c))):
            return Verdict(name, False, witness={"identity": 1, "a": a, "b": b, "c": c},
                           bounds=bounds)
        if (a != zero or b != zero) and (a != zero or c != zero):
            if unit(gcd(a, b)) and unit(gcd(a, c)) and not unit(gcd(a, s.mul(b, c))):
                return Verdict(name, False, witness={"identity": 3, "a": a, "b": b, "c": c},
                               bounds=bounds)
    for a, b in itertools.product(elems, repeat=2):
        if a == zero and b == zero:
            continue
        d = gcd(a, b)
        qa, qb = quotient(s, d, a), quotient(s, d, b)
        if qa is None or qb is None or not same(gcd(qa, qb), one):
            return Verdict(name, False, witness={"identity": 2, "a": a, "b": b}, bounds=bounds)
    return Verdict(name, True, bounds=bounds)


# ---------------------------------------------------------------- UFSD checks


def _nonzero_nonunits(s: Semiring, bound: int):
    return [x for x in s.elements_up_to(bound) if x != s.zero and not s.is_unit(x)]


def check_kaplansky(s: Semiring, bound: int = 200) -> Verdict:
    """Both sides of: UFSD iff every nonzero prime ideal holds a prime element.

    UFSD side: every irreducible of size <= bound is prime, and every
    nonzero nonunit of size <= bound factors.  Ideal side: each registered
    nonzero prime ideal contains a prime element of size <= bound.  Holds
    when both sides hold.
    """
    name = f"kaplansky/{s.describe()}"
    bounds = {} if s.finite else {"bound": bound}
    candidates = _nonzero_nonunits(s, bound)
    uf1_fail = next((x for x in candidates
                     if is_irreducible(s, x) and not is_prime_element(s, x, bound)), None)
    uf2_fail = None
    for x in candidates:
        try:
            factor_accp(s, x)
        except (DepthExceeded, NotFactorable):
            uf2_fail = x
            break
    ufsd = uf1_fail is None and uf2_fail is None
    registry = registered_spectrum(s, bound)
    primes = [x for x in candidates if is_prime_element(s, x, bound)]
    found, missing = [], []
    for P in registry.nonzero():
        hit = next((x for x in primes if x in P), None)
        (missing if hit is None else found).append((str(P), hit))
    ideal_side = not missing
    witness = {
        "ufsd": ufsd, "uf1_counterexample": uf1_fail, "uf2_counterexample": uf2_fail,
        "prime_ideal_side": ideal_side,
        "prime_elements_found": [list(f) for f in found],
        "primes_without_prime_element": [m[0] for m in missing],
    }
    note = "vacuous: no nonzero prime ideals" if not registry.nonzero() else registry.note
    return Verdict(name, ufsd and ideal_side, witness=witness, note=note, bounds=bounds)


def in_prime_product_set(s: Semiring, x) -> bool:
    """``x`` is a unit times a (possibly empty) product of prime elements."""
    if x == s.zero:
        return False
    if s.is_unit(x):
        return True
    try:
        fac = factor_accp(s, x)
    except NotFactorable:
        return False
    return all(is_prime_element(s, p) for p in fac.factors)


def check_saturated_prime_products(s: Semiring, bound: int = 100) -> Verdict:
    """The set W of unit-times-primes products is saturated, for ``a, b <= bound``."""
    name = f"saturated-prime-products/{s.describe()}"
    bounds = {} if s.finite else {"bound": bound}
    elems = list(s.elements_up_to(bound))
    member = functools.lru_cache(maxsize=None)(lambda x: in_prime_product_set(s, x))
    if not member(s.one):
        return Verdict(name, False, witness=s.one, note="one is not in W", bounds=bounds)
    for a, b in itertools.product(elems, repeat=2):
        if member(s.mul(a, b)) and not (member(a) and member(b)):
            return Verdict(name, False, witness=(a, b), bounds=bounds)
    size = sum(member(x) for x in elems)
    return Verdict(name, True, note=f"|W within bound| = {size}", bounds=bounds)


def check_factorizations(s: Semiring, bound: int = 1000) -> Verdict:
    """Every nonzero nonunit up to ``bound`` factors into irreducibles that
    multiply back to it."""
    name = f"factorization/{s.describe()}"
    bounds = {} if s.finite else {"bound": bound}
    for x in _nonzero_nonunits(s, bound):
        try:
            fac = factor_accp(s, x)
        except DepthExceeded:
            return Verdict(name, False, witness=x, note="no factorization", bounds=bounds)
        bad = next((p for p in fac.factors if not is_irreducible(s, p)), None)
        if bad is not None:
            return Verdict(name, False, witness={"x": x, "reducible_factor": bad}, bounds=bounds)
    return Verdict(name, True, bounds=bounds)


# ---------------------------------------------------------------- PISD checks


def _ideals_in_scope(s: Semiring, bound: int) -> list:
    from .ideals import IdealRep, zero_ideal

    if s.finite:
        from .finite import enumerate_ideals

        return [IdealRep(s, tuple(sorted(I))) for I in enumerate_ideals(s)]
    if isinstance(s, TropicalNat):
        # every ideal is (m) or the zero ideal
        return [zero_ideal(s)] + [IdealRep(s, (m,)) for m in range(bound + 1)]
    raise UnsupportedFamily(f"ideal enumeration not available over {s.describe()}")


def check_pisd_properties(s: Semiring, bound: int = 200) -> Verdict:
    """Consequences of being a PISD: nonzero primes are maximal, irreducibles
    are exactly the primes, and every nonzero nonunit factors (ACCP).

    Finite carriers are checked exhaustively, TropicalNat up to ``bound``.
    """
    from .ideals import ideal_contains, ideal_equal

    name = f"pisd-properties/{s.describe()}"
    bounds = {} if s.finite else {"bound": bound}
    ideals = _ideals_in_scope(s, bound)
    whole = [I for I in ideals if s.one in I]
    for P in registered_spectrum(s, bound).nonzero():
        for J in ideals:
            strictly_between = (ideal_contains(J, P) and not ideal_equal(J, P)
                                and not any(ideal_equal(J, W) for W in whole))
            if strictly_between:
                return Verdict(name, False, witness={"prime": str(P), "larger_ideal": str(J)},
                               note="nonzero prime is not maximal", bounds=bounds)
    for x in _nonzero_nonunits(s, bound):
        if bool(is_irreducible(s, x)) != bool(is_prime_element(s, x, bound)):
            return Verdict(name, False, witness=x, note="irreducible and prime disagree",
                           bounds=bounds)
        try:
            factor_accp(s, x)
        except DepthExceeded:
            return Verdict(name, False, witness=x, note="factorization does not terminate",
                           bounds=bounds)
    return Verdict(name, True, bounds=bounds)


__all__ = [
    "quotient", "divides", "units", "associates", "associates_by_ideals",
    "is_classical_prime", "is_irreducible", "prime_by_divisibility", "is_prime_element",
    "Factorization", "factor_accp", "gcd_set", "check_gcd_identities", "check_kaplansky",
    "in_prime_product_set", "check_saturated_prime_products", "check_pisd_properties",
    "check_factorizations",
]
