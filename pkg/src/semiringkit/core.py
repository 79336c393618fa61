"""Semiring handles, elements, and the axioms as checkable predicates.

Every family (naturals, Boolean, tropical, finite tables, polynomials,
fractions) is a :class:`Semiring` subclass operating on plain hashable
Python values.  :class:`Element` wraps a value together with its handle for
operator syntax and mismatch detection::

    >>> N = Naturals()
    >>> N(2) + N(3)
    Naturals(5)
    >>> T = TropicalNat()
    >>> T(2) + T(3), T(2) * T(3)
    (TropicalNat(2), TropicalNat(5))
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Iterator

from .errors import NotMCSet, SemiringMismatch

INF = math.inf


def jsonable(value: Any) -> Any:
    """Convert verdict payloads into JSON-ready data with a stable layout."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return "inf" if value == INF else value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        items = [jsonable(v) for v in value]
        try:
            return sorted(items)
        except TypeError:
            return sorted(items, key=repr)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return str(value)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a theorem check; truthy iff ``holds``."""

    name: str
    holds: bool
    witness: Any = None
    note: str = ""
    bounds: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "witness": jsonable(self.witness),
            "bounds": jsonable(self.bounds),
            "note": self.note,
        }


class Semiring:
    """A commutative semiring with absorbing zero and one != zero.

    Subclasses supply ``zero``, ``one``, :meth:`add`, :meth:`mul` and
    :meth:`contains`.  Finite carriers set ``finite = True`` and implement
    :meth:`elements`; infinite ones implement :meth:`elements_up_to` and
    :meth:`random_element` so bounded sweeps and random law checks work.
    """

    name = "semiring"
    finite = False
    zero: Any = 0
    one: Any = 1

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def elements(self) -> Iterable:
        raise NotImplementedError(f"{self.describe()} has an infinite carrier")

    def elements_up_to(self, bound: int) -> Iterable:
        """Elements whose canonical size is at most ``bound``."""
        if self.finite:
            return self.elements()
        raise NotImplementedError

    def size(self, a) -> int:
        return 0

    def random_element(self, rng: random.Random):
        return rng.choice(list(self.elements()))

    def is_unit(self, a) -> bool:
        if not self.finite:
            raise NotImplementedError
        return any(self.mul(a, b) == self.one for b in self.elements())

    def is_semidomain(self) -> Verdict:
        if not self.finite:
            raise NotImplementedError
        return _exhaustive_cancellation(self)

    def sum(self, values: Iterable):
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total

    def prod(self, values: Iterable):
        total = self.one
        for v in values:
            total = self.mul(total, v)
        return total

    def power(self, a, n: int):
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def format(self, a) -> str:
        return str(a)

    def describe(self) -> str:
        return self.name

    def __call__(self, value) -> "Element":
        if not self.contains(value):
            raise ValueError(f"{value!r} is not an element of {self.describe()}")
        return Element(self, value)

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class _Singleton(Semiring):
    # families without parameters compare equal by type
    def __eq__(self, other) -> bool:
        return type(other) is type(self)

    def __hash__(self) -> int:
        return hash(type(self).__name__)


class Naturals(_Singleton):
    """The natural numbers with ordinary arithmetic (arbitrary precision)."""

    name = "Naturals"

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def contains(self, a) -> bool:
        return isinstance(a, int) and not isinstance(a, bool) and a >= 0

    def is_unit(self, a) -> bool:
        return a == 1

    def elements_up_to(self, bound: int) -> Iterable:
        return range(bound + 1)

    def size(self, a) -> int:
        return a

    def random_element(self, rng: random.Random):
        roll = rng.random()
        if roll < 0.2:
            return rng.randrange(0, 11)
        if roll < 0.9:
            return rng.randrange(0, 1000)
        return rng.getrandbits(160)

    def is_semidomain(self) -> Verdict:
        return Verdict("semidomain", True, note="Naturals: a*b = a*c with a > 0 forces b = c")


class Boolean(_Singleton):
    """The two-element semifield {0, 1} with or/and."""

    name = "Boolean"
    finite = True

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        return a & b

    def contains(self, a) -> bool:
        return a in (0, 1) and not isinstance(a, bool)

    def elements(self) -> Iterable:
        return (0, 1)

    def size(self, a) -> int:
        return a

    def is_unit(self, a) -> bool:
        return a == 1

    def is_semidomain(self) -> Verdict:
        return Verdict("semidomain", True, note="Boolean: two-element semifield")


class TropicalNat(_Singleton):
    """Min-plus semiring on N with infinity: zero is ``INF``, one is ``0``."""

    name = "TropicalNat"
    zero = INF
    one = 0

    def add(self, a, b):
        return a if a <= b else b

    def mul(self, a, b):
        if a == INF or b == INF:
            return INF
        return a + b

    def contains(self, a) -> bool:
        if a == INF and isinstance(a, float):
            return True
        return isinstance(a, int) and not isinstance(a, bool) and a >= 0

    def is_unit(self, a) -> bool:
        return a == 0

    def elements_up_to(self, bound: int) -> Iterator:
        yield from range(bound + 1)
        yield INF

    def size(self, a) -> int:
        return 0 if a == INF else a

    def random_element(self, rng: random.Random):
        roll = rng.random()
        if roll < 0.1:
            return INF
        if roll < 0.3:
            return rng.randrange(0, 6)
        return rng.randrange(0, 1000)

    def format(self, a) -> str:
        return "inf" if a == INF else str(a)

    def is_semidomain(self) -> Verdict:
        return Verdict(
            "semidomain", True,
            note="TropicalNat: a + b = a + c with finite a forces b = c",
        )


@dataclass(frozen=True)
class Element:
    """A value tagged with the semiring it lives in."""

    semiring: Semiring
    value: Any

    def _other(self, other) -> Any:
        if isinstance(other, Element):
            if other.semiring != self.semiring:
                raise SemiringMismatch(
                    f"{self.semiring.describe()} vs {other.semiring.describe()}"
                )
            return other.value
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Element(self.semiring, self.semiring.add(self.value, v))

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Element(self.semiring, self.semiring.mul(self.value, v))

    def __pow__(self, n: int):
        return Element(self.semiring, self.semiring.power(self.value, n))

    def is_zero(self) -> bool:
        return self.value == self.semiring.zero

    def __repr__(self) -> str:
        return f"{self.semiring.describe()}({self.semiring.format(self.value)})"


def _value(s: Semiring, x) -> Any:
    if isinstance(x, Element):
        if x.semiring != s:
            raise SemiringMismatch(f"element of {x.semiring.describe()} used in {s.describe()}")
        return x.value
    return x


def _rewrap(s: Semiring, result, *inputs):
    if any(isinstance(x, Element) for x in inputs):
        return Element(s, result)
    return result


def add(s: Semiring, a, b):
    return _rewrap(s, s.add(_value(s, a), _value(s, b)), a, b)


def mul(s: Semiring, a, b):
    return _rewrap(s, s.mul(_value(s, a), _value(s, b)), a, b)


def is_unit(s: Semiring, a) -> bool:
    return s.is_unit(_value(s, a))


def is_semidomain(s: Semiring) -> Verdict:
    return s.is_semidomain()


def _exhaustive_cancellation(s: Semiring) -> Verdict:
    elems = list(s.elements())
    for a in elems:
        if a == s.zero:
            continue
        for b, c in itertools.combinations(elems, 2):
            if s.mul(a, b) == s.mul(a, c):
                return Verdict(
                    "semidomain", False, witness=(a, b, c),
                    note="a*b = a*c with a nonzero but b != c",
                )
    return Verdict("semidomain", True, note=f"exhaustive over {len(elems)} elements")


LAWS = (
    "additive commutativity",
    "additive associativity",
    "additive identity",
    "multiplicative commutativity",
    "multiplicative associativity",
    "multiplicative identity",
    "distributivity",
    "absorption",
)


def law_failure(s: Semiring, a, b, c) -> str | None:
    """Name of the first law failing on the triple, or None."""
    add_, mul_ = s.add, s.mul
    if add_(a, b) != add_(b, a):
        return LAWS[0]
    if add_(add_(a, b), c) != add_(a, add_(b, c)):
        return LAWS[1]
    if add_(a, s.zero) != a:
        return LAWS[2]
    if mul_(a, b) != mul_(b, a):
        return LAWS[3]
    if mul_(mul_(a, b), c) != mul_(a, mul_(b, c)):
        return LAWS[4]
    if mul_(a, s.one) != a:
        return LAWS[5]
    if mul_(a, add_(b, c)) != add_(mul_(a, b), mul_(a, c)):
        return LAWS[6]
    if mul_(a, s.zero) != s.zero:
        return LAWS[7]
    return None


def check_laws(s: Semiring, samples: int = 10_000, seed: int = 0) -> Verdict:
    """Check the semiring axioms: exhaustively on finite carriers, else on
    ``samples`` random triples drawn with ``seed``."""
    name = f"laws/{s.describe()}"
    if s.zero == s.one:
        return Verdict(name, False, witness=(s.zero,), note="zero equals one")
    if s.finite:
        elems = list(s.elements())
        triples: Iterable = itertools.product(elems, repeat=3)
        bounds = {"exhaustive": len(elems) ** 3}
    else:
        rng = random.Random(seed)
        pick = s.random_element
        triples = ((pick(rng), pick(rng), pick(rng)) for _ in range(samples))
        bounds = {"samples": samples, "seed": seed}
    for a, b, c in triples:
        law = law_failure(s, a, b, c)
        if law is not None:
            return Verdict(name, False, witness=(a, b, c), note=law, bounds=bounds)
    return Verdict(name, True, bounds=bounds)


@dataclass(frozen=True)
class MCSet:
    """A multiplicatively closed set, described by kind.

    ``units`` and ``nonzero`` are resolved per family; ``powers`` is the
    monoid generated by ``generators``; ``set`` lists members explicitly
    (finite carriers only).
    """

    kind: str
    generators: tuple = ()

    @classmethod
    def units(cls) -> "MCSet":
        return cls("units")

    @classmethod
    def nonzero(cls) -> "MCSet":
        return cls("nonzero")

    @classmethod
    def powers(cls, *gens) -> "MCSet":
        return cls("powers", tuple(gens))

    @classmethod
    def of(cls, members: Iterable) -> "MCSet":
        return cls("set", tuple(sorted(set(members), key=repr)))

    @classmethod
    def parse(cls, text: str, element=int) -> "MCSet":
        """Parse ``units | nonzero | powers:<e>[,<e>...] | set:{i,j,...}``."""
        text = text.strip()
        if text in ("units", "nonzero"):
            return cls(text)
        head, sep, rest = text.partition(":")
        if not sep:
            raise ValueError(f"unknown MC-set {text!r}")
        items = [t for t in rest.strip().strip("{}").split(",") if t.strip()]
        if head == "powers":
            return cls.powers(*(element(t.strip()) for t in items))
        if head == "set":
            return cls.of(int(t) for t in items)
        raise ValueError(f"unknown MC-set {text!r}")

    def __str__(self) -> str:
        if self.kind in ("units", "nonzero"):
            return self.kind
        inner = ",".join(str(g) for g in self.generators)
        return f"powers:{inner}" if self.kind == "powers" else f"set:{{{inner}}}"

    def to_dict(self) -> str:
        return str(self)


def resolve_mcset(s: Semiring, T: MCSet | Iterable) -> frozenset:
    """Member set of ``T`` inside a finite carrier; raises NotMCSet if ``T``
    misses one or is not closed under multiplication."""
    if not isinstance(T, MCSet):
        T = MCSet.of(T)
    elems = list(s.elements())
    if T.kind == "units":
        members = {a for a in elems if s.is_unit(a)}
    elif T.kind == "nonzero":
        members = {a for a in elems if a != s.zero}
    elif T.kind == "powers":
        members = {s.one}
        frontier = set(T.generators)
        while frontier - members:
            members |= frontier
            frontier = {s.mul(a, b) for a in members for b in members}
    else:
        members = set(T.generators)
    members = frozenset(members)
    if s.one not in members:
        raise NotMCSet(f"{T} does not contain one")
    for a in members:
        for b in members:
            if s.mul(a, b) not in members:
                raise NotMCSet(f"{T} is not closed: {a}*{b} = {s.mul(a, b)}")
    return members


__all__ = [
    "INF", "Verdict", "Semiring", "Naturals", "Boolean", "TropicalNat", "Element",
    "add", "mul", "is_unit", "is_semidomain", "check_laws", "law_failure", "LAWS",
    "MCSet", "resolve_mcset", "jsonable",
]
