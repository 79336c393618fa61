"""Euclidean norms valued in N with infinity, and the Euclidean gcd.

A norm maps zero, and only zero, to ``INF``; each family registers a
constructive division with remainder because existence of ``(q, r)`` alone
gives no uniform way to compute it.  :func:`div_rem` re-checks every
answer against ``a == b*q + r``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .core import INF, Boolean, Naturals, Semiring, TropicalNat, Verdict
from .errors import (
    BrokenNorm,
    DivisionByZero,
    NoDecomposition,
    NonTermination,
    UnboundedSearch,
    UnsupportedFamily,
    ZeroInputs,
)

DEFAULT_SWEEP = 1000


@dataclass(frozen=True)
class EuclideanStructure:
    """A semiring with a norm and a division procedure.

    ``star_multiplier`` returns an ``s`` minimising ``norm(s*a)``; infinite
    carriers need it for :func:`star_norm`.
    """

    semiring: Semiring
    norm: Callable[[Any], Any]
    divide: Callable[[Any, Any], tuple]
    star_multiplier: Optional[Callable[[Any], Any]] = None
    name: str = ""

    def describe(self) -> str:
        return self.name or f"{self.semiring.describe()} norm"


def _nat_norm(a):
    return INF if a == 0 else a


def naturals_structure() -> EuclideanStructure:
    """Identity norm on N with ordinary integer division."""
    return EuclideanStructure(
        Naturals(), _nat_norm, lambda a, b: divmod(a, b),
        star_multiplier=lambda a: 1, name="Naturals/identity",
    )


def _trop_divide(a, b):
    if a == INF:
        return INF, INF
    if a >= b:
        return a - b, INF
    return 0, a


def tropical_structure() -> EuclideanStructure:
    """Norm ``a -> a`` on the min-plus semiring; ``INF`` is the zero.

    ``a >= b`` divides exactly with quotient ``a - b``; otherwise ``a`` is
    its own remainder with quotient ``0`` since ``min(b, a) = a``.
    """
    return EuclideanStructure(
        TropicalNat(), lambda a: a, _trop_divide,
        star_multiplier=lambda a: 0, name="TropicalNat/value",
    )


def boolean_structure() -> EuclideanStructure:
    return EuclideanStructure(
        Boolean(), lambda a: INF if a == 0 else 0, lambda a, b: (a, 0),
        name="Boolean/trivial",
    )


def table_structure(S: Semiring, norm: dict, name: str = "") -> EuclideanStructure:
    """Structure on a finite carrier from an explicit norm table.

    Division picks the first ``(q, r)`` in index order, preferring ``r = 0``.
    """
    elems = list(S.elements())
    norm = dict(norm)

    def divide(a, b):
        best = None
        for q in elems:
            bq = S.mul(b, q)
            for r in elems:
                if S.add(bq, r) != a:
                    continue
                if r == S.zero:
                    return q, r
                if best is None and norm[r] < norm[b]:
                    best = (q, r)
        if best is None:
            raise NoDecomposition(f"no admissible remainder for {a} / {b}")
        return best

    return EuclideanStructure(S, norm.__getitem__, divide, name=name or f"{S.describe()}/table")


def euclidean_structure(s: Semiring) -> EuclideanStructure:
    """The registered structure of a family (searched for finite tables)."""
    if isinstance(s, Naturals):
        return naturals_structure()
    if isinstance(s, TropicalNat):
        return tropical_structure()
    if isinstance(s, Boolean):
        return boolean_structure()
    if s.finite:
        E = find_euclidean_norm(s)
        if E is None:
            raise UnsupportedFamily(f"{s.describe()} admits no Euclidean norm")
        return E
    raise UnsupportedFamily(f"no Euclidean structure registered for {s.describe()}")


def div_rem(E: EuclideanStructure, a, b) -> tuple:
    """``(q, r)`` with ``a == b*q + r`` and ``r`` zero or of smaller norm than ``b``."""
    S = E.semiring
    if b == S.zero:
        raise DivisionByZero(f"division by zero in {S.describe()}")
    q, r = E.divide(a, b)
    if S.add(S.mul(b, q), r) != a:
        raise NoDecomposition(f"{a} != {b}*{q} + {r}")
    if r != S.zero and not E.norm(r) < E.norm(b):
        raise NoDecomposition(f"remainder {r} of {a} / {b} does not decrease the norm")
    return q, r


def star_argmin(E: EuclideanStructure, a, bound: int = DEFAULT_SWEEP, verify: bool = True):
    """An ``s`` minimising ``norm(s*a)``.

    Exhaustive on finite carriers.  Otherwise the registered closed form is
    used, checked against every ``s`` of size at most ``bound`` unless
    ``verify`` is false.
    """
    S = E.semiring
    if S.finite:
        return min(S.elements(), key=lambda s: (E.norm(S.mul(s, a)), repr(s)))
    if E.star_multiplier is None:
        raise UnboundedSearch(f"{E.describe()} has no registered minimiser")
    s0 = E.star_multiplier(a)
    if not verify:
        return s0
    best = E.norm(S.mul(s0, a))
    for s in S.elements_up_to(bound):
        if E.norm(S.mul(s, a)) < best:
            raise BrokenNorm(f"closed form for {a} beaten by multiplier {s}")
    return s0


def star_norm(E: EuclideanStructure, a, bound: int = DEFAULT_SWEEP):
    """``min(norm(s*a))`` over all ``s``."""
    S = E.semiring
    return E.norm(S.mul(star_argmin(E, a, bound), a))


def star_structure(E: EuclideanStructure, bound: int = DEFAULT_SWEEP) -> EuclideanStructure:
    """The minimised norm, again Euclidean.

    To divide ``a`` by ``b`` take the minimising ``s`` for ``b``, divide
    ``a`` by ``s*b`` in the original structure and fold ``s`` into the
    quotient.  On infinite carriers the closed-form minimiser of ``E`` is
    used unswept here; :func:`verify_structure` on ``E`` sweeps it.
    """
    S = E.semiring

    @functools.lru_cache(maxsize=None)
    def argmin(a):
        return star_argmin(E, a, bound, verify=False)

    def norm(a):
        return E.norm(S.mul(argmin(a), a))

    def divide(a, b):
        s = argmin(b)
        q, r = div_rem(E, a, S.mul(s, b))
        return S.mul(s, q), r

    return EuclideanStructure(S, norm, divide, star_multiplier=(lambda a: S.one),
                              name=f"{E.describe()}*")


@dataclass(frozen=True)
class RemainderChain:
    """``remainders[0] = a``, ``remainders[1] = b``, then ``r_0, r_1, ...``
    ending in zero (unless ``b`` was zero); ``quotients[k]`` produced
    ``remainders[k + 2]``."""

    remainders: tuple
    quotients: tuple
    gcd: Any


def remainder_chain(E: EuclideanStructure, a, b, max_steps: int = 100_000) -> RemainderChain:
    S = E.semiring
    zero = S.zero
    if a == zero and b == zero:
        raise ZeroInputs("gcd of two zero elements")
    if b == zero:
        return RemainderChain((a, b), (), a)
    rems = [a, b]
    quots = []
    while rems[-1] != zero:
        if len(quots) >= max_steps:
            raise NonTermination(f"remainder chain exceeded {max_steps} steps")
        q, r = div_rem(E, rems[-2], rems[-1])
        if r != zero and not E.norm(r) < E.norm(rems[-1]):
            raise NonTermination(f"norm did not decrease at remainder {r}")
        quots.append(q)
        rems.append(r)
    g = rems[-2]
    # back-substitute cofactors x_k with r_k = g * x_k to certify g | a and g | b
    xs = [S.zero, S.one]
    for k in range(len(quots) - 1, -1, -1):
        xs.append(S.add(S.mul(xs[-1], quots[k]), xs[-2]))
    cof_b, cof_a = xs[-2], xs[-1]
    if S.mul(g, cof_a) != a or S.mul(g, cof_b) != b:
        raise NoDecomposition(f"gcd candidate {g} does not divide both inputs")
    return RemainderChain(tuple(rems), tuple(quots), g)


def euclidean_gcd(E: EuclideanStructure, a, b):
    """Last nonzero remainder of the Euclidean chain starting at ``a, b``."""
    return remainder_chain(E, a, b).gcd


# ---------------------------------------------------------------- norm search


def find_euclidean_norm(S: Semiring, value_cap: int | None = None) -> EuclideanStructure | None:
    """Search norms on a finite carrier, values in ``0..value_cap`` (default n).

    Assignments to the nonzero indices are tried in increasing lexicographic
    order; the first valid one wins.  A pair ``(a, b)`` is pruned as soon
    as every admissible remainder has a known norm not below ``norm(b)``.
    """
    elems = list(S.elements())
    zero = S.zero
    nonzero = [x for x in elems if x != zero]
    cap = len(elems) if value_cap is None else value_cap
    remainders = {}
    for a in elems:
        for b in nonzero:
            rs = {r for q in elems for r in elems if S.add(S.mul(b, q), r) == a}
            if zero in rs:
                continue
            remainders[(a, b)] = sorted(rs, key=repr)
    norm: dict = {zero: INF}

    def feasible() -> bool:
        for (a, b), rs in remainders.items():
            nb = norm.get(b)
            if nb is None:
                continue
            if not any(norm.get(r) is None or norm[r] < nb for r in rs):
                return False
        return True

    def search(k):
        if k == len(nonzero):
            return True
        x = nonzero[k]
        for v in range(cap + 1):
            norm[x] = v
            if feasible() and search(k + 1):
                return True
        del norm[x]
        return False

    if not search(0):
        return None
    return table_structure(S, norm)


def norm_table(E: EuclideanStructure) -> dict:
    return {a: E.norm(a) for a in E.semiring.elements()}


def verify_structure(E: EuclideanStructure, bound: int = 200, sweep: int = DEFAULT_SWEEP) -> Verdict:
    """Check both norm conditions and the minimised-norm inequalities.

    Finite carriers are checked exhaustively; infinite ones over elements of
    size at most ``bound``.
    """
    S = E.semiring
    name = f"euclidean/{E.describe()}"
    elems = list(S.elements_up_to(bound))
    bounds = {"exhaustive": True} if S.finite else {"bound": bound, "sweep": sweep}
    for s in elems:
        if (E.norm(s) == INF) != (s == S.zero):
            return Verdict(name, False, witness=s, note="norm is INF exactly at zero fails",
                           bounds=bounds)
    for a, b in itertools.product(elems, repeat=2):
        if b == S.zero:
            continue
        try:
            div_rem(E, a, b)
        except NoDecomposition as exc:
            return Verdict(name, False, witness=(a, b), note=f"division fails: {exc}",
                           bounds=bounds)
    star = {a: star_norm(E, a, sweep) for a in elems}
    for a in elems:
        if not star[a] <= E.norm(a):
            return Verdict(name, False, witness=a, note="minimised norm exceeds norm",
                           bounds=bounds)
    for s, b in itertools.product(elems, repeat=2):
        if not star[b] <= E.norm(S.mul(s, b)):
            return Verdict(name, False, witness=(s, b),
                           note="minimised norm exceeds norm of a multiple", bounds=bounds)
    return Verdict(name, True, bounds=bounds)


def check_subtractive_principal(S: Semiring, value_cap: int | None = None) -> Verdict:
    """On a finite carrier with a Euclidean norm every subtractive ideal is
    principal, so an all-subtractive one has only principal ideals.

    Holds vacuously (with a note) when the norm search finds nothing.
    """
    from .finite import enumerate_ideals, is_principal, is_subtractive

    name = f"subtractive-principal/{S.describe()}"
    E = find_euclidean_norm(S, value_cap)
    if E is None:
        return Verdict(name, True, note="no Euclidean norm found", bounds={"exhaustive": True})
    ideals = enumerate_ideals(S)
    for I in ideals:
        if is_subtractive(S, I) and not is_principal(S, I):
            return Verdict(name, False, witness={"ideal": sorted(I), "norm": norm_table(E)},
                           bounds={"exhaustive": True})
    all_sub = all(is_subtractive(S, I) for I in ideals)
    return Verdict(name, True, witness={"norm": norm_table(E), "all_subtractive": all_sub},
                   bounds={"exhaustive": True})


__all__ = [
    "EuclideanStructure", "RemainderChain", "naturals_structure", "tropical_structure",
    "boolean_structure", "table_structure", "euclidean_structure", "div_rem", "star_argmin",
    "star_norm", "star_structure", "remainder_chain", "euclidean_gcd", "find_euclidean_norm",
    "norm_table", "verify_structure", "check_subtractive_principal",
]
