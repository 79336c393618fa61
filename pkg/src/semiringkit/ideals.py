"""Finitely generated ideals over every family, plus spectrum registries.

Membership is decided per family:

* finite carriers: closure to an explicit member set;
* naturals: the ideal generated by ``G`` is the additive monoid generated by
  ``G``, decided by a reachability table up to the queried value;
* tropical: the ideal generated by ``G`` is ``{x >= min G}`` with infinity;
* fractions and polynomials: not supported.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable

from .core import INF, Naturals, Semiring, TropicalNat
from .errors import BaseMismatch, UnregisteredSpectrum, UnsupportedFamily
from .finite import ideal_generated, spectrum


@functools.lru_cache(maxsize=4096)
def _reachable(gens: tuple, limit: int) -> bytearray:
    table = bytearray(limit + 1)
    table[0] = 1
    for x in range(1, limit + 1):
        for g in gens:
            if g <= x and table[x - g]:
                table[x] = 1
                break
    return table


def _round_up(limit: int) -> int:
    # share cached tables between nearby queries
    return max(64, 1 << (limit - 1).bit_length())


def nat_ideal_contains(gens: Iterable[int], x: int) -> bool:
    """``x`` is a nonnegative integer combination of ``gens``."""
    gens = tuple(sorted({g for g in gens if g > 0}))
    if x == 0:
        return True
    if not gens:
        return False
    d = math.gcd(*gens)
    if x % d:
        return False
    if x in gens or len(gens) == 1:
        return True
    # Schur: every multiple of d from d*(g1/d - 1)*(gk/d - 1) on is reachable
    if x >= d * (gens[0] // d - 1) * (gens[-1] // d - 1):
        return True
    return bool(_reachable(gens, _round_up(x))[x])


@dataclass(frozen=True)
class IdealRep:
    """Ideal of ``base`` generated by ``generators``."""

    base: Semiring
    generators: tuple

    def __post_init__(self):
        z = self.base.zero
        gens = []
        for g in self.generators:
            if g != z and g not in gens:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(sorted(gens, key=_sort_key)))

    def __contains__(self, x) -> bool:
        return ideal_contains_element(self, x)

    @property
    def members(self) -> frozenset:
        """Explicit member set (finite carriers only)."""
        if not self.base.finite:
            raise UnsupportedFamily("member sets exist only for finite carriers")
        return _finite_members(self.base, self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def to_dict(self) -> dict:
        data = {"generators": [self.base.format(g) for g in self.generators]}
        if self.base.finite:
            data["members"] = sorted(self.members, key=_sort_key)
        return data

    def __str__(self) -> str:
        gens = self.generators or (self.base.zero,)
        return "(" + ", ".join(self.base.format(g) for g in gens) + ")"


def _sort_key(x):
    return (0, x) if isinstance(x, (int, float)) else (1, repr(x))


@functools.lru_cache(maxsize=8192)
def _finite_members(base, gens) -> frozenset:
    return ideal_generated(base, gens)


def ideal(base: Semiring, *gens) -> IdealRep:
    return IdealRep(base, tuple(gens))


def whole(base: Semiring) -> IdealRep:
    return IdealRep(base, (base.one,))


def zero_ideal(base: Semiring) -> IdealRep:
    return IdealRep(base, ())


def ideal_contains_element(I: IdealRep, x) -> bool:
    base = I.base
    if base.finite:
        return x in I.members
    if isinstance(base, Naturals):
        return nat_ideal_contains(I.generators, x)
    if isinstance(base, TropicalNat):
        if x == INF:
            return True
        return bool(I.generators) and x >= min(I.generators)
    raise UnsupportedFamily(f"ideal membership not available over {base.describe()}")


def minimal_generators(I: IdealRep) -> IdealRep:
    """Drop generators lying in the ideal of the others."""
    base = I.base
    if isinstance(base, TropicalNat):
        return IdealRep(base, (min(I.generators),) if I.generators else ())
    gens = list(I.generators)
    if isinstance(base, Naturals):
        gens.sort()
        keep: list = []
        for g in gens:
            if not nat_ideal_contains(keep, g):
                keep.append(g)
        return IdealRep(base, tuple(keep))
    if base.finite:
        keep = list(gens)
        for g in gens:
            rest = [h for h in keep if h != g]
            if g in IdealRep(base, tuple(rest)):
                keep = rest
        return IdealRep(base, tuple(keep))
    return I


def _check_base(I: IdealRep, J: IdealRep):
    if I.base != J.base:
        raise BaseMismatch(f"{I.base.describe()} vs {J.base.describe()}")


def ideal_mul(I: IdealRep, J: IdealRep) -> IdealRep:
    """Ideal generated by pairwise products of generators."""
    _check_base(I, J)
    base = I.base
    prods = {base.mul(a, b) for a in I.generators for b in J.generators}
    return minimal_generators(IdealRep(base, tuple(prods)))


def ideal_power(I: IdealRep, n: int) -> IdealRep:
    result = whole(I.base)
    for _ in range(n):
        result = ideal_mul(result, I)
    return result


def comparison_bound(I: IdealRep, J: IdealRep) -> int:
    """Agreement bound for ideals of N: ``M*M + M`` with ``M`` the largest generator."""
    m = max((*I.generators, *J.generators), default=0)
    return m * m + m


def ideal_difference(I: IdealRep, J: IdealRep):
    """Least element in exactly one of the two ideals, or None if equal.

    Over N this uses two routes: mutual generator membership, and agreement
    of both ideals on ``0..comparison_bound``.  They must agree.
    """
    _check_base(I, J)
    base = I.base
    if base.finite:
        diff = I.members ^ J.members
        return min(diff, key=_sort_key) if diff else None
    if isinstance(base, TropicalNat):
        a = min(I.generators, default=INF)
        b = min(J.generators, default=INF)
        return None if a == b else min(a, b)
    if isinstance(base, Naturals):
        by_gens = all(g in J for g in I.generators) and all(g in I for g in J.generators)
        witness = None
        for x in range(comparison_bound(I, J) + 1):
            if (x in I) != (x in J):
                witness = x
                break
        if by_gens != (witness is None):
            raise AssertionError("generator and window comparisons disagree")
        return witness
    raise UnsupportedFamily(f"ideal comparison not available over {base.describe()}")


def ideal_equal(I: IdealRep, J: IdealRep) -> bool:
    return ideal_difference(I, J) is None


def ideal_contains(I: IdealRep, J: IdealRep) -> bool:
    """``J`` is a subset of ``I``."""
    _check_base(I, J)
    return all(g in I for g in J.generators)


# ---------------------------------------------------------------- spectra


@dataclass(frozen=True)
class SpectrumRegistry:
    """Known prime ideals of a family; ``complete`` when they are all of Spec."""

    base: Semiring
    primes: tuple
    complete: bool
    note: str = ""

    def nonzero(self) -> tuple:
        return tuple(P for P in self.primes if not P.is_zero())


def _primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, n + 1, p)))
    return [p for p in range(n + 1) if sieve[p]]


def registered_spectrum(s: Semiring, bound: int = 200) -> SpectrumRegistry:
    """Prime ideals per family.

    TropicalNat and finite carriers are complete.  For N only the zero
    ideal, ``(p)`` for primes ``p <= bound`` and the ideal generated by
    ``{2, 3}`` are registered.
    """
    if isinstance(s, TropicalNat):
        return SpectrumRegistry(s, (zero_ideal(s), ideal(s, 1)), True,
                                note="ideals are {x >= m} with infinity; primes are (inf) and (1)")
    if s.finite:
        primes = tuple(IdealRep(s, tuple(sorted(P, key=_sort_key))) for P in spectrum(s))
        return SpectrumRegistry(s, tuple(minimal_generators(P) for P in primes), True,
                                note="exhaustive")
    if isinstance(s, Naturals):
        primes = [zero_ideal(s)] + [ideal(s, p) for p in _primes_up_to(bound)] + [ideal(s, 2, 3)]
        return SpectrumRegistry(s, tuple(primes), False,
                                note=f"partial: (0), (p) for primes p <= {bound}, (2, 3)")
    raise UnregisteredSpectrum(f"no spectrum registered for {s.describe()}")


def is_prime_ideal_bounded(I: IdealRep, bound: int) -> bool:
    """Primality of an ideal with ``a, b`` ranging over elements of size <= bound."""
    s = I.base
    elems = list(s.elements_up_to(bound))
    if s.one in I:
        return False
    return all(a in I or b in I for a in elems for b in elems if s.mul(a, b) in I)


__all__ = [
    "IdealRep", "SpectrumRegistry", "ideal", "whole", "zero_ideal", "nat_ideal_contains",
    "ideal_contains_element", "minimal_generators", "ideal_mul", "ideal_power",
    "comparison_bound", "ideal_difference", "ideal_equal", "ideal_contains",
    "registered_spectrum", "is_prime_ideal_bounded",
]
