"""Table-defined finite semirings.

Element ``0`` is always index 0 and element ``1`` is index 1.  The helpers
here (ideals, spectrum, MC-sets, localization) accept any semiring with a
finite carrier, so they work on :class:`~semiringkit.core.Boolean` as well
as on :class:`FiniteSemiring` tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .core import MCSet, Semiring, Verdict, resolve_mcset
from .errors import (
    AxiomViolation,
    CapExceeded,
    NotMCSet,
    ParseError,
    TableShapeError,
    ZeroEqualsOne,
    ZeroSemiring,
)

ENUMERATION_CAP = 4


@dataclass(frozen=True)
class FiniteSemiring(Semiring):
    add_table: tuple
    mul_table: tuple
    name: str = field(default="", compare=False)

    finite = True
    zero = 0
    one = 1

    @property
    def order(self) -> int:
        return len(self.add_table)

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def contains(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.order

    def elements(self) -> range:
        return range(self.order)

    def size(self, a) -> int:
        return a

    def describe(self) -> str:
        return self.name or f"Table{self.order}"

    def __repr__(self) -> str:
        return f"FiniteSemiring(order={self.order}, name={self.describe()!r})"


class Violation(NamedTuple):
    axiom: str
    witness: tuple


def _tables(order, add_table, mul_table):
    def norm(table, label):
        rows = [tuple(int(x) for x in row) for row in table]
        if len(rows) != order or any(len(r) != order for r in rows):
            raise TableShapeError(f"{label} table is not {order}x{order}")
        if any(not 0 <= x < order for r in rows for x in r):
            raise TableShapeError(f"{label} table has entries outside 0..{order - 1}")
        return tuple(rows)

    if order < 2:
        raise ZeroEqualsOne(f"order {order} leaves no room for distinct zero and one")
    return norm(add_table, "add"), norm(mul_table, "mul")


def table_violations(order, add_table, mul_table) -> list[Violation]:
    """Every axiom that fails, each with its first witnessing tuple."""
    A, M = _tables(order, add_table, mul_table)
    n = range(order)
    found: dict[str, tuple] = {}

    def note(axiom, witness):
        found.setdefault(axiom, witness)

    for s in n:
        if M[0][s] != 0:
            note("absorption", (0, s))
        if M[s][0] != 0:
            note("absorption", (s, 0))
        if A[0][s] != s:
            note("additive identity", (0, s))
        if M[1][s] != s:
            note("multiplicative identity", (1, s))
    for a, b in itertools.product(n, repeat=2):
        if A[a][b] != A[b][a]:
            note("additive commutativity", (a, b))
        if M[a][b] != M[b][a]:
            note("multiplicative commutativity", (a, b))
    for a, b, c in itertools.product(n, repeat=3):
        if A[A[a][b]][c] != A[a][A[b][c]]:
            note("additive associativity", (a, b, c))
        if M[M[a][b]][c] != M[a][M[b][c]]:
            note("multiplicative associativity", (a, b, c))
        if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
            note("distributivity", (a, b, c))
    order_of = [
        "absorption", "additive identity", "multiplicative identity",
        "additive commutativity", "multiplicative commutativity",
        "additive associativity", "multiplicative associativity", "distributivity",
    ]
    return [Violation(ax, found[ax]) for ax in order_of if ax in found]


def validate_tables(order, add_table, mul_table, name: str = "") -> FiniteSemiring:
    """Build a :class:`FiniteSemiring`, raising :class:`AxiomViolation`
    listing every failed axiom."""
    A, M = _tables(order, add_table, mul_table)
    violations = table_violations(order, A, M)
    if violations:
        raise AxiomViolation(violations)
    return FiniteSemiring(A, M, name=name)


def boolean_table() -> FiniteSemiring:
    return FiniteSemiring(((0, 1), (1, 1)), ((0, 0), (0, 1)), name="Boolean")


def z2() -> FiniteSemiring:
    return FiniteSemiring(((0, 1), (1, 0)), ((0, 0), (0, 1)), name="Z2")


def chain3() -> FiniteSemiring:
    """0 < u < 1 with max as addition and min as multiplication; u is index 2."""
    order = (0, 2, 1)  # rank of each index in the chain
    elems = range(3)
    add = tuple(tuple(max(a, b, key=order.__getitem__) for b in elems) for a in elems)
    mul = tuple(tuple(min(a, b, key=order.__getitem__) for b in elems) for a in elems)
    return FiniteSemiring(add, mul, name="chain3")


# ---------------------------------------------------------------- ideals


def is_ideal(S: Semiring, members: Iterable) -> bool:
    members = set(members)
    if S.zero not in members:
        return False
    for a in members:
        for b in members:
            if S.add(a, b) not in members:
                return False
        for s in S.elements():
            if S.mul(s, a) not in members:
                return False
    return True


def ideal_generated(S: Semiring, gens: Iterable = ()) -> frozenset:
    """Least ideal containing ``gens``, by closure to a fixpoint."""
    elems = list(S.elements())
    members = {S.zero}
    for g in gens:
        members.update(S.mul(s, g) for s in elems)
    while True:
        new = {S.add(a, b) for a in members for b in members} - members
        if not new:
            return frozenset(members)
        for x in new:
            members.update(S.mul(s, x) for s in elems)


def principal_ideal(S: Semiring, a) -> frozenset:
    return frozenset(S.mul(s, a) for s in S.elements())


def _ideal_key(I: frozenset):
    return (len(I), sorted(I, key=repr))


def enumerate_ideals(S: Semiring) -> list[frozenset]:
    """All ideals, sorted by (size, sorted members), found by subset filtering."""
    nonzero = [a for a in S.elements() if a != S.zero]
    found = []
    for k in range(len(nonzero) + 1):
        for combo in itertools.combinations(nonzero, k):
            cand = frozenset((S.zero, *combo))
            if is_ideal(S, cand):
                found.append(cand)
    return sorted(found, key=_ideal_key)


@dataclass(frozen=True)
class IdealFlags:
    subtractive: bool
    prime: bool
    maximal: bool
    principal: bool
    proper: bool

    def to_dict(self) -> dict:
        return {
            "subtractive": self.subtractive, "prime": self.prime,
            "maximal": self.maximal, "principal": self.principal, "proper": self.proper,
        }


def is_subtractive(S: Semiring, I: frozenset) -> bool:
    return all(b in I for a in I for b in S.elements() if S.add(a, b) in I)


def is_prime_ideal(S: Semiring, I: frozenset) -> bool:
    elems = list(S.elements())
    if len(I) == len(elems):
        return False
    return all(a in I or b in I for a in elems for b in elems if S.mul(a, b) in I)


def is_principal(S: Semiring, I: frozenset) -> bool:
    return any(principal_ideal(S, a) == I for a in S.elements())


def classify_ideal(S: Semiring, I: Iterable, ideals: list | None = None) -> IdealFlags:
    I = frozenset(I)
    elems = set(S.elements())
    proper = I != elems
    if ideals is None:
        ideals = enumerate_ideals(S)
    maximal = proper and not any(I < J < elems for J in ideals)
    return IdealFlags(
        subtractive=is_subtractive(S, I),
        prime=is_prime_ideal(S, I),
        maximal=maximal,
        principal=is_principal(S, I),
        proper=proper,
    )


def spectrum(S: Semiring) -> list[frozenset]:
    return [I for I in enumerate_ideals(S) if is_prime_ideal(S, I)]


def maximal_ideals(S: Semiring) -> list[frozenset]:
    ideals = enumerate_ideals(S)
    return [I for I in ideals if classify_ideal(S, I, ideals).maximal]


def ideal_summary(S: Semiring) -> dict:
    """Counts used by the enumeration report."""
    ideals = enumerate_ideals(S)
    flags = [classify_ideal(S, I, ideals) for I in ideals]
    return {
        "ideals": len(ideals),
        "primes": sum(f.prime for f in flags),
        "subtractive": all(f.subtractive for f in flags),
        "principal": all(f.principal for f in flags),
    }


# ---------------------------------------------------------------- MC-sets


def is_mcset(S: Semiring, W: Iterable) -> bool:
    W = set(W)
    return S.one in W and all(S.mul(a, b) in W for a in W for b in W)


def is_saturated(S: Semiring, W: Iterable) -> bool:
    W = set(W)
    elems = list(S.elements())
    return all(
        (S.mul(a, b) in W) == (a in W and b in W) for a in elems for b in elems
    )


def mc_sets(S: Semiring) -> list[frozenset]:
    """Every MC-set of a finite carrier, sorted like ideals."""
    others = [a for a in S.elements() if a != S.one]
    found = []
    for k in range(len(others) + 1):
        for combo in itertools.combinations(others, k):
            W = frozenset((S.one, *combo))
            if is_mcset(S, W):
                found.append(W)
    return sorted(found, key=_ideal_key)


def check_saturated_complement(S: Semiring, W: Iterable) -> Verdict:
    """Saturation of ``W`` against its complement being a union of primes.

    The verdict holds when the two statements agree.  The witness reports
    saturation, the covering primes disjoint from ``W`` and any complement
    element they miss.
    """
    W = frozenset(W)
    if not is_mcset(S, W):
        raise NotMCSet(f"{sorted(W)} is not multiplicatively closed with one")
    saturated = is_saturated(S, W)
    complement = frozenset(S.elements()) - W
    covering = [P for P in spectrum(S) if not (P & W)]
    union = frozenset().union(*covering) if covering else frozenset()
    uncovered = sorted(complement - union, key=repr)
    covered = union == complement
    witness = {
        "saturated": saturated,
        "complement_is_union_of_primes": covered,
        "covering_primes": [sorted(P, key=repr) for P in covering],
        "uncovered": uncovered,
    }
    return Verdict(
        f"saturated-complement/{S.describe()}", saturated == covered, witness=witness,
    )


# ---------------------------------------------------------------- enumeration


def _assoc_ok(T, n) -> bool:
    # every fully determined associativity instance must agree
    for a in range(n):
        Ta = T[a]
        for b in range(n):
            ab = Ta[b]
            if ab < 0:
                continue
            Tab = T[ab]
            for c in range(n):
                left = Tab[c]
                bc = T[b][c]
                if left < 0 or bc < 0:
                    continue
                right = Ta[bc]
                if right >= 0 and left != right:
                    return False
    return True


def _distrib_ok(A, M, n) -> bool:
    for a in range(n):
        Ma = M[a]
        for b in range(n):
            ab = Ma[b]
            if ab < 0:
                continue
            Aab = A[ab]
            for c in range(n):
                ac = Ma[c]
                left = Ma[A[b][c]]
                if ac < 0 or left < 0:
                    continue
                if left != Aab[ac]:
                    return False
    return True


def _fill(T, cells, n, ok) -> Iterator[None]:
    """Backtrack over symmetric ``cells`` of ``T``; yield at each complete fill."""
    if not cells:
        yield None
        return
    (i, j), rest = cells[0], cells[1:]
    for v in range(n):
        T[i][j] = T[j][i] = v
        if ok():
            yield from _fill(T, rest, n, ok)
    T[i][j] = T[j][i] = -1


def enumerate_semirings(order: int, cap: int = ENUMERATION_CAP, unique: bool = False) -> Iterator[FiniteSemiring]:
    """Every table pair of the given order satisfying the semiring axioms.

    Zero and one are pinned to indices 0 and 1.  Identity, absorption and
    commutativity are imposed up front; associativity and distributivity
    prune the backtracking as cells are filled.  The output order is
    deterministic.  ``unique=True`` drops tables isomorphic (fixing 0 and
    1) to one already produced.
    """
    if order > cap:
        raise CapExceeded(f"order {order} exceeds cap {cap}")
    if order < 2:
        raise ZeroEqualsOne("order must be at least 2")
    n = order
    A = [[-1] * n for _ in range(n)]
    M = [[-1] * n for _ in range(n)]
    for x in range(n):
        A[0][x] = A[x][0] = x
        M[0][x] = M[x][0] = 0
        M[1][x] = M[x][1] = x
    add_cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    mul_cells = [(i, j) for i in range(2, n) for j in range(i, n)]
    seen = set()
    count = 0
    for _ in _fill(A, add_cells, n, lambda: _assoc_ok(A, n)):
        for _ in _fill(M, mul_cells, n, lambda: _assoc_ok(M, n) and _distrib_ok(A, M, n)):
            add = tuple(tuple(r) for r in A)
            mul = tuple(tuple(r) for r in M)
            if unique:
                key = canonical_form(add, mul)
                if key in seen:
                    continue
                seen.add(key)
            count += 1
            yield FiniteSemiring(add, mul, name=f"S{n}.{count}")


def canonical_form(add, mul) -> tuple:
    """Lexicographically least relabelling of indices >= 2."""
    n = len(add)
    best = None
    for perm in itertools.permutations(range(2, n)):
        p = (0, 1, *perm)
        inv = [0] * n
        for i, v in enumerate(p):
            inv[v] = i
        key = tuple(
            tuple(p[T[inv[a]][inv[b]]] for b in range(n)) for T in (add, mul) for a in range(n)
        )
        if best is None or key < best:
            best = key
    return best


# ---------------------------------------------------------------- localization


@dataclass(frozen=True)
class FiniteLocalization:
    """The quotient ``(S x T)/~`` and the class index of every pair."""

    source: Semiring
    denominators: frozenset
    semiring: FiniteSemiring
    classes: dict = field(compare=False, hash=False)

    def image(self, a) -> int:
        """Canonical map ``a -> a/1``."""
        return self.classes[(a, self.source.one)]

    def of(self, a, s) -> int:
        return self.classes[(a, s)]


def localize_finite(S: Semiring, T) -> FiniteLocalization:
    """Localize a finite semiring at an MC-set.

    Pairs ``(a, s)`` and ``(b, t)`` are identified when ``u*a*t == u*b*s``
    for some ``u`` in ``T``; this three-factor rule stays correct with zero
    divisors.  Raises :class:`ZeroSemiring` when zero and one collapse.
    """
    D = resolve_mcset(S, T)
    if S.zero in D:
        raise ZeroSemiring("denominator set contains zero")
    elems = list(S.elements())
    dens = sorted(D, key=repr)
    pairs = [(a, s) for a in elems for s in dens]
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    mul = S.mul
    for i, (a, s) in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            b, t = pairs[j]
            at, bs = mul(a, t), mul(b, s)
            if any(mul(u, at) == mul(u, bs) for u in dens):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    index = {p: k for k, p in enumerate(pairs)}
    zero_root = find(index[(S.zero, S.one)])
    one_root = find(index[(S.one, S.one)])
    if zero_root == one_root:
        raise ZeroSemiring("zero and one collapse in the quotient")
    roots = sorted({find(i) for i in range(len(pairs))})
    roots.remove(zero_root)
    roots.remove(one_root)
    label = {zero_root: 0, one_root: 1}
    for k, r in enumerate(roots, start=2):
        label[r] = k
    classes = {p: label[find(i)] for i, p in enumerate(pairs)}
    reps = {}
    for p in pairs:
        reps.setdefault(classes[p], p)
    n = len(label)

    def op(x, y, kind):
        (a, s), (b, t) = reps[x], reps[y]
        if kind == "add":
            pair = (S.add(mul(a, t), mul(b, s)), mul(s, t))
        else:
            pair = (mul(a, b), mul(s, t))
        return classes[pair]

    add_table = tuple(tuple(op(x, y, "add") for y in range(n)) for x in range(n))
    mul_table = tuple(tuple(op(x, y, "mul") for y in range(n)) for x in range(n))
    name = f"{S.describe()}[{','.join(map(str, dens))}^-1]"
    return FiniteLocalization(S, D, FiniteSemiring(add_table, mul_table, name=name), classes)


def is_isomorphism(S: Semiring, R: Semiring, mapping: dict) -> bool:
    """``mapping`` is a bijection S -> R preserving 0, 1, + and *."""
    src, dst = list(S.elements()), set(R.elements())
    if set(mapping.values()) != dst or len(mapping) != len(src) or len(src) != len(dst):
        return False
    if mapping[S.zero] != R.zero or mapping[S.one] != R.one:
        return False
    return all(
        mapping[S.add(a, b)] == R.add(mapping[a], mapping[b])
        and mapping[S.mul(a, b)] == R.mul(mapping[a], mapping[b])
        for a in src for b in src
    )


# ---------------------------------------------------------------- table files


def dump_table(S: Semiring) -> str:
    """Render in the table file format (``order``, ``add``, ``mul`` blocks)."""
    elems = list(S.elements())
    lines = [f"order {len(elems)}", "add"]
    lines += [" ".join(str(S.add(a, b)) for b in elems) for a in elems]
    lines.append("mul")
    lines += [" ".join(str(S.mul(a, b)) for b in elems) for a in elems]
    return "\n".join(lines) + "\n"


def load_table(text: str, validate: bool = True, name: str = ""):
    """Parse the table file format.

    Blank lines and ``#`` comments are ignored.  Returns a validated
    :class:`FiniteSemiring` (raising :class:`AxiomViolation`) or, with
    ``validate=False``, the raw ``(order, add, mul)`` triple.
    """
    order = None
    blocks: dict[str, list] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "order":
            if len(words) != 2 or not words[1].isdigit():
                raise ParseError("expected 'order <n>'", lineno, 1)
            order = int(words[1])
            continue
        if words[0] in ("add", "mul") and len(words) == 1:
            current = words[0]
            blocks[current] = []
            continue
        if current is None:
            raise ParseError(f"unexpected {words[0]!r}", lineno, 1)
        row = []
        col = 1
        for w in words:
            col = raw.index(w, col - 1) + 1
            if not w.isdigit():
                raise ParseError(f"bad index {w!r}", lineno, col)
            row.append(int(w))
            col += len(w)
        blocks[current].append((lineno, row))
    if order is None:
        raise ParseError("missing 'order' line")
    tables = []
    for key in ("add", "mul"):
        if key not in blocks:
            raise ParseError(f"missing '{key}' block")
        rows = blocks[key]
        if len(rows) != order:
            where = rows[-1][0] if rows else None
            raise ParseError(f"{key} block has {len(rows)} rows, expected {order}", where)
        for lineno, row in rows:
            if len(row) != order:
                raise ParseError(f"{key} row has {len(row)} entries, expected {order}", lineno)
            for k, x in enumerate(row):
                if x >= order:
                    raise ParseError(f"index {x} out of range", lineno, k + 1)
        tables.append(tuple(tuple(r) for _, r in rows))
    if not validate:
        return order, tables[0], tables[1]
    return validate_tables(order, tables[0], tables[1], name=name)


def read_table_file(path, validate: bool = True):
    from pathlib import Path

    p = Path(path)
    return load_table(p.read_text(encoding="utf-8"), validate=validate, name=p.stem)


__all__ = [
    "FiniteSemiring", "Violation", "IdealFlags", "FiniteLocalization", "ENUMERATION_CAP",
    "table_violations", "validate_tables", "boolean_table", "z2", "chain3",
    "is_ideal", "ideal_generated", "principal_ideal", "enumerate_ideals", "classify_ideal",
    "is_subtractive", "is_prime_ideal", "is_principal", "spectrum", "maximal_ideals",
    "ideal_summary", "is_mcset", "is_saturated", "mc_sets", "check_saturated_complement",
    "enumerate_semirings", "canonical_form", "localize_finite", "is_isomorphism",
    "dump_table", "load_table", "read_table_file", "MCSet",
]
