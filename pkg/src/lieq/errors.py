"""Exception types shared across the package."""


class LieqError(Exception):
    """Base class for all package errors."""


class ValidationError(LieqError):
    """An algebraic structure failed its invariant checks.

    Carries the full validation report; the message cites the first failing
    invariant together with a witness.
    """

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class NotAnIdeal(LieqError):
    """The given submodule is not closed under bracketing with the algebra."""


class BracketNotWellDefined(LieqError):
    """A product bracket did not descend to the presented quotient.

    Never expected on valid input; signals an implementation bug.
    """


class NotWellDefined(LieqError):
    """A constructed homomorphism did not kill the source relations."""


class NotAbelianInput(LieqError):
    """An operation restricted to abelian algebras got a non-abelian one."""


class TooLarge(LieqError):
    """A brute-force enumeration exceeded its size cap."""


class AlgebraSyntaxError(LieqError):
    """Malformed algebra file."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class DuplicateBracket(AlgebraSyntaxError):
    """The same unordered generator pair was assigned twice."""
