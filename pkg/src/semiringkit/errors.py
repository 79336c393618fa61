"""Exception hierarchy for semiringkit."""


class SemiringError(Exception):
    """Base class for every error raised by the package."""


class SemiringMismatch(SemiringError):
    """Two elements belonging to different semiring handles were combined."""


class BaseMismatch(SemiringError):
    """Polynomials, ideals or fractions over different bases were combined."""


class ZeroEqualsOne(SemiringError):
    """A table has fewer than two elements, so zero and one cannot differ."""


class TableShapeError(SemiringError, ValueError):
    """Operation tables are not n-by-n with entries in 0..n-1."""


class AxiomViolation(SemiringError):
    """One or more semiring axioms fail on a finite table.

    ``violations`` holds every failure found, one per axiom, each with the
    witnessing index tuple.  ``axiom`` and ``witness`` describe the first.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0]
        self.axiom = first.axiom
        self.witness = first.witness
        lines = ", ".join(f"{v.axiom} at {v.witness}" for v in self.violations)
        super().__init__(f"axiom violations: {lines}")


class DivisionByZero(SemiringError, ZeroDivisionError):
    pass


class NoDecomposition(SemiringError):
    """A registered division procedure broke its own postcondition."""


class BrokenNorm(SemiringError):
    """A registered closed-form minimiser disagrees with a verification sweep."""


class UnboundedSearch(SemiringError):
    """A minimisation over an infinite carrier has no registered closed form."""


class ZeroInputs(SemiringError):
    """gcd requested for two zero elements."""


class NonTermination(SemiringError):
    """A remainder chain failed to strictly decrease in norm."""


class NotFactorable(SemiringError):
    """Factorization was requested for zero or a unit."""


class DepthExceeded(SemiringError):
    """Factor splitting did not strictly descend; the family is not ACCP."""


class NoGcd(SemiringError):
    """No greatest common divisor exists for the given set."""


class AllZero(SemiringError):
    """gcd requested for a set with no nonzero member."""


class NotMCSet(SemiringError):
    """A purported multiplicatively closed set misses one or is not closed."""


class ZeroSemiring(SemiringError):
    """Localization collapsed zero and one (the denominator set contains 0)."""


class CapExceeded(SemiringError):
    """Enumeration requested above the configured order cap."""


class UnregisteredSpectrum(SemiringError):
    """No spectrum procedure is registered for this family."""


class NotPISD(SemiringError):
    """The family is not registered as a principal ideal semidomain."""


class UnsupportedFamily(SemiringError):
    """The operation has no procedure for this semiring family."""


class ParseError(SemiringError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
