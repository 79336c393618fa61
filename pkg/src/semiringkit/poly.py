"""Univariate polynomials over a semiring, content ideals and Gaussianity.

The content of ``f`` is the ideal generated by its coefficients.  A base
is Gaussian when ``c(fg) == c(f) c(g)`` for every pair; over N this fails
already for ``f = 2 + 3X``, ``g = 3 + 2X``.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass

import numpy as np

from .core import INF, Boolean, Semiring, TropicalNat, Verdict
from .errors import BaseMismatch, ParseError
from .factor import quotient
from .finite import enumerate_ideals, is_principal, is_subtractive
from .ideals import (
    IdealRep,
    ideal_contains,
    ideal_difference,
    ideal_equal,
    ideal_mul,
    ideal_power,
    minimal_generators,
)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients ``a0, a1, ...`` with trailing zeros stripped."""

    base: Semiring
    coeffs: tuple

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1] == self.base.zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return poly_mul(self, other)

    def __str__(self) -> str:
        return format_polynomial(self)

    def to_dict(self) -> str:
        return str(self)


def _same_base(f: Polynomial, g: Polynomial) -> Semiring:
    if f.base != g.base:
        raise BaseMismatch(f"{f.base.describe()} vs {g.base.describe()}")
    return f.base


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    S = _same_base(f, g)
    fs, gs = f.coeffs, g.coeffs
    n = max(len(fs), len(gs))
    z = S.zero
    return Polynomial(S, tuple(
        S.add(fs[k] if k < len(fs) else z, gs[k] if k < len(gs) else z) for k in range(n)
    ))


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Convolution with the base operations."""
    S = _same_base(f, g)
    if f.is_zero() or g.is_zero():
        return Polynomial(S, ())
    out = [S.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = S.add(out[i + j], S.mul(a, b))
    return Polynomial(S, tuple(out))


@dataclass(frozen=True)
class PolynomialOver(Semiring):
    """The semiring ``base[X]`` whose values are :class:`Polynomial`."""

    base: Semiring
    max_random_degree: int = 3

    @property
    def zero(self):
        return Polynomial(self.base, ())

    @property
    def one(self):
        return Polynomial(self.base, (self.base.one,))

    def add(self, a, b):
        return poly_add(a, b)

    def mul(self, a, b):
        return poly_mul(a, b)

    def contains(self, a) -> bool:
        return isinstance(a, Polynomial) and a.base == self.base and all(
            self.base.contains(c) for c in a.coeffs
        )

    def is_unit(self, a) -> bool:
        """Constant with a unit coefficient (valid over semidomain bases)."""
        return a.degree == 0 and self.base.is_unit(a.coeffs[0])

    def size(self, a) -> int:
        return max((self.base.size(c) for c in a.coeffs), default=0) + max(a.degree, 0)

    def random_element(self, rng: random.Random):
        deg = rng.randrange(-1, self.max_random_degree + 1)
        return Polynomial(self.base, tuple(self.base.random_element(rng) for _ in range(deg + 1)))

    def format(self, a) -> str:
        return format_polynomial(a)

    def describe(self) -> str:
        return f"{self.base.describe()}[X]"


@quotient.register
def _(s: PolynomialOver, b, a):
    """Bounded search for ``x`` of degree ``deg a - deg b``.

    Coefficients range over the whole carrier for finite bases and over
    elements no larger than the largest coefficient of ``a`` otherwise.
    """
    from .factor import _nonzero

    _nonzero(s, b)
    if a.is_zero():
        return s.zero
    deg = a.degree - b.degree
    if deg < 0:
        return None
    base = s.base
    if base.finite:
        cands = list(base.elements())
    else:
        cands = list(base.elements_up_to(max(base.size(c) for c in a.coeffs)))
    for coeffs in itertools.product(cands, repeat=deg + 1):
        x = Polynomial(base, coeffs)
        if x.degree == deg and poly_mul(b, x) == a:
            return x
    return None


# ---------------------------------------------------------------- content


def content(f: Polynomial) -> IdealRep:
    """Ideal generated by the coefficients, minimalised where supported."""
    return minimal_generators(IdealRep(f.base, f.coeffs))


def registered_subtractive(base: Semiring) -> bool:
    """Every ideal subtractive: Boolean and TropicalNat by registration,
    finite carriers by exhaustive check; N is not (2 + 1 = 3 in (2, 3))."""
    if isinstance(base, (Boolean, TropicalNat)):
        return True
    if base.finite:
        return all(is_subtractive(base, I) for I in enumerate_ideals(base))
    return False


def is_subtractive_pis(base: Semiring) -> bool:
    ideals = enumerate_ideals(base)
    return all(is_subtractive(base, I) and is_principal(base, I) for I in ideals)


def check_content_formula(base: Semiring, f: Polynomial, g: Polynomial, n_max: int = 8) -> Verdict:
    """Least ``n <= n_max`` with ``c(f)^n c(g) == c(f)^(n-1) c(fg)``.

    The formula is guaranteed for subtractive bases; elsewhere the search
    still runs and the note records the failed hypothesis.
    """
    for p in (f, g):
        if p.base != base:
            raise BaseMismatch(f"{p.base.describe()} vs {base.describe()}")
    name = f"content-formula/{base.describe()}"
    note = "" if registered_subtractive(base) else "warning: base not registered subtractive"
    cf, cg, cfg = content(f), content(g), content(poly_mul(f, g))
    misses = []
    for n in range(1, n_max + 1):
        lhs = ideal_mul(ideal_power(cf, n), cg)
        rhs = ideal_mul(ideal_power(cf, n - 1), cfg)
        diff = ideal_difference(lhs, rhs)
        if diff is None:
            return Verdict(name, True, witness={"n": n}, note=note, bounds={"n_max": n_max})
        misses.append({"n": n, "separating_element": diff})
    return Verdict(name, False, witness={"f": str(f), "g": str(g), "misses": misses},
                   note=note, bounds={"n_max": n_max})


def all_polynomials(base: Semiring, degree_bound: int, coeffs=None) -> list[Polynomial]:
    """Every polynomial of degree <= degree_bound with coefficients from ``coeffs``
    (the whole carrier by default for finite bases)."""
    cands = list(base.elements()) if coeffs is None else list(coeffs)
    seen = {}
    for tup in itertools.product(cands, repeat=degree_bound + 1):
        p = Polynomial(base, tup)
        seen.setdefault(p.coeffs, p)
    return list(seen.values())


KNOWN_PROBES = {
    "Naturals": [((2, 3), (3, 2))],
}


def _gaussian_pair(f, g):
    cfg = content(poly_mul(f, g))
    prod = ideal_mul(content(f), content(g))
    if not ideal_contains(prod, cfg):
        raise AssertionError(f"c(fg) not inside c(f)c(g) for {f}, {g}")
    return ideal_difference(cfg, prod), cfg, prod


def _failure(name, f, g, diff, cfg, prod, bounds):
    witness = {"f": str(f), "g": str(g), "c(fg)": cfg, "c(f)c(g)": prod,
               "separating_element": diff}
    return Verdict(name, False, witness=witness, bounds=bounds)


def check_gaussian(base: Semiring, degree_bound: int = 3, coeff_bound: int = 6,
                   trials: int = 1000, seed: int = 0) -> Verdict:
    """Test ``c(fg) == c(f)c(g)``.

    Finite bases: every pair of degree <= degree_bound.  TropicalNat: every
    pair with finite coefficients <= coeff_bound (vectorised).  Other
    infinite bases: registered probe pairs, then ``trials`` random pairs
    drawn with ``seed``.  The first counterexample is reported.
    """
    name = f"gaussian/{base.describe()}"
    if base.finite:
        bounds = {"degree_bound": degree_bound, "exhaustive": True}
        polys = all_polynomials(base, degree_bound)
        for f, g in itertools.combinations_with_replacement(polys, 2):
            diff, cfg, prod = _gaussian_pair(f, g)
            if diff is not None:
                return _failure(name, f, g, diff, cfg, prod, bounds)
        return Verdict(name, True, note=f"{len(polys)} polynomials", bounds=bounds)
    if isinstance(base, TropicalNat):
        return _tropical_gaussian(degree_bound, coeff_bound)
    bounds = {"degree_bound": degree_bound, "coeff_bound": coeff_bound,
              "trials": trials, "seed": seed}
    rng = random.Random(seed)
    pairs = [(Polynomial(base, f), Polynomial(base, g))
             for f, g in KNOWN_PROBES.get(base.describe(), [])]
    for _ in range(trials):
        f, g = (Polynomial(base, tuple(rng.randrange(coeff_bound + 1)
                                       for _ in range(rng.randrange(degree_bound + 1) + 1)))
                for _ in range(2))
        pairs.append((f, g))
    for f, g in pairs:
        diff, cfg, prod = _gaussian_pair(f, g)
        if diff is not None:
            return _failure(name, f, g, diff, cfg, prod, bounds)
    return Verdict(name, True, note=f"{len(pairs)} pairs", bounds=bounds)


def tropical_products(F: np.ndarray, G: np.ndarray) -> np.ndarray:
    """Min-plus convolution of every row of ``F`` with every row of ``G``.

    Rows are coefficient vectors padded with ``inf``; the result has shape
    ``(len(F), len(G), F.shape[1] + G.shape[1] - 1)``.
    """
    nf, df = F.shape
    ng, dg = G.shape
    out = np.full((nf, ng, df + dg - 1), np.inf)
    for i in range(df):
        out[:, :, i:i + dg] = np.minimum(out[:, :, i:i + dg], F[:, i, None, None] + G[None, :, :])
    return out


def _tropical_gaussian(degree_bound: int, coeff_bound: int) -> Verdict:
    """Exhaustive: finite coefficients <= coeff_bound, inner ones may be ``inf``.

    Tropical ideals compare by their least finite generator, so
    ``c(fg) == c(f)c(g)`` reads ``min(fg) == min(f) + min(g)``.
    """
    name = "gaussian/TropicalNat"
    bounds = {"degree_bound": degree_bound, "coeff_bound": coeff_bound, "exhaustive": True}
    T = TropicalNat()
    lead = list(range(coeff_bound + 1))
    inner = lead + [INF]
    rows = []
    for d in range(degree_bound + 1):
        for low in itertools.product(inner, repeat=d):
            for top in lead:
                rows.append(low + (top,) + (INF,) * (degree_bound - d))
    P = np.array(rows, dtype=float)
    mins = P.min(axis=1)
    for start in range(0, len(P), 256):
        block = P[start:start + 256]
        prod_min = tropical_products(block, P).min(axis=2)
        expect = mins[start:start + 256, None] + mins[None, :]
        bad = np.argwhere(prod_min != expect)
        if bad.size:
            i, j = bad[0]
            f = Polynomial(T, tuple(int(x) if x != INF else INF for x in block[i]))
            g = Polynomial(T, tuple(int(x) if x != INF else INF for x in P[j]))
            diff, cfg, prod = _gaussian_pair(f, g)
            return _failure(name, f, g, diff, cfg, prod, bounds)
    return Verdict(name, True, note=f"{len(P)} polynomials, {len(P) ** 2} pairs", bounds=bounds)


# ---------------------------------------------------------------- literals


_TERM = re.compile(r"^\s*([^\sX*]*)\s*\*?\s*(X(?:\s*\^\s*(\d+))?)?\s*$")


def parse_polynomial(text: str, base: Semiring) -> Polynomial:
    """Parse ``a0 + a1 X + a2 X^2 ...``; ``inf`` is the tropical zero.

    ``+`` separates terms (the formal sum, regardless of the base's
    addition); a bare ``X`` has coefficient one.
    """
    coeffs: dict[int, object] = {}
    for raw in text.split("+"):
        if not raw.strip():
            raise ParseError(f"empty term in {text!r}")
        m = _TERM.match(raw)
        if not m or (not m.group(1) and not m.group(2)):
            raise ParseError(f"cannot read term {raw.strip()!r}")
        lit, xpart, exp = m.groups()
        power = 0 if not xpart else int(exp) if exp else 1
        value = parse_element(lit, base) if lit else base.one
        if power in coeffs:
            value = base.add(coeffs[power], value)
        coeffs[power] = value
    top = max(coeffs)
    return Polynomial(base, tuple(coeffs.get(k, base.zero) for k in range(top + 1)))


def parse_element(text: str, base: Semiring):
    text = text.strip()
    if text == "inf":
        value = INF
    else:
        try:
            value = int(text)
        except ValueError:
            raise ParseError(f"bad coefficient {text!r}") from None
    if not base.contains(value):
        raise ParseError(f"{text!r} is not an element of {base.describe()}")
    return value


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0" if not isinstance(f.base, TropicalNat) else "inf"
    terms = []
    for k, c in enumerate(f.coeffs):
        if c == f.base.zero:
            continue
        lit = f.base.format(c)
        terms.append(lit if k == 0 else f"{lit} X" if k == 1 else f"{lit} X^{k}")
    return " + ".join(terms)


__all__ = [
    "Polynomial", "PolynomialOver", "IdealRep", "poly_add", "poly_mul", "content",
    "ideal_mul", "ideal_equal", "ideal_difference", "ideal_contains", "registered_subtractive",
    "is_subtractive_pis", "check_content_formula", "all_polynomials", "check_gaussian",
    "tropical_products", "parse_polynomial", "parse_element", "format_polynomial", "KNOWN_PROBES",
]
