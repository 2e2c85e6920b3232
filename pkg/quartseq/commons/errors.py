from typing import Optional


class QuartseqError(Exception):
    """Base class of every error raised by the library.

    Attributes
    ----------
    exit_code: int
        The command line exit code the error maps to.
    """

    exit_code = 4


class ParameterError(QuartseqError):
    """Exception raised when a parameter of a component or of the configuration is invalid."""

    exit_code = 2

    def __init__(self, component_name: str, param_name: str, error_type: str) -> None:
        """Initialise a parameter error.

        Parameters
        ----------
        component_name: str
            The name of the component (or configuration section) the exception comes from.
        param_name: str
            The name of the parameter causing the exception.
        error_type: str
            The kind of error associated with the exception.
        """
        message = (
            f"A parameter error occurred in {component_name} due to parameter {param_name}. "
            f"Parameter error type: {error_type}"
        )
        super().__init__(message)


class DivisionByZero(QuartseqError, ZeroDivisionError):
    """Exception raised on an exact division by zero."""

    exit_code = 2

    def __init__(self, operation: str = "division") -> None:
        super().__init__(f"Exact {operation} by zero.")


class ZeroHeightInput(QuartseqError):
    """Exception raised when the naive height of zero is requested."""

    def __init__(self) -> None:
        super().__init__("The logarithmic height of 0 is undefined.")


class NotMonic(QuartseqError):
    """Exception raised when a square root decomposition receives a non monic polynomial."""

    def __init__(self, leading_coefficient: str) -> None:
        super().__init__(
            f"Polynomial is not monic, leading coefficient is {leading_coefficient}."
        )


class OddDegree(QuartseqError):
    """Exception raised when a square root decomposition receives a polynomial of odd degree."""

    def __init__(self, degree: int) -> None:
        super().__init__(f"Polynomial degree {degree} is odd.")


class NoRationalRoot(QuartseqError):
    """Exception raised when no rational function root is consistent across specialisations."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"No rational function root found: {reason}.")


class DegreeBoundExceeded(QuartseqError):
    """Exception raised when interpolated roots need more than the allowed degrees."""

    def __init__(self, degree_bound: int) -> None:
        super().__init__(
            f"Candidate roots do not fit numerator/denominator degree bound {degree_bound}."
        )


class SingularQuartic(QuartseqError):
    """Exception raised when a quartic curve has a vanishing discriminant."""

    def __init__(self, quartic: str) -> None:
        super().__init__(f"Quartic {quartic} is singular.")


class NoRationalPoint(QuartseqError):
    """Exception raised when a quartic has neither a marked point nor a square leading coefficient."""

    def __init__(self) -> None:
        super().__init__(
            "Quartic curve has no marked rational point and its leading coefficient is not a square."
        )


class NoRationalTwoTorsion(QuartseqError):
    """Exception raised when a Weierstrass cubic has no root in the base field."""

    def __init__(self, model: str) -> None:
        super().__init__(f"Weierstrass model {model} has no rational 2-torsion point.")


class LeadingCoefficientNotSquare(QuartseqError):
    """Exception raised when a binary quartic leading coefficient is not a square."""

    def __init__(self, leading_coefficient: str) -> None:
        super().__init__(f"Leading coefficient {leading_coefficient} is not a square.")


class SingularCurve(QuartseqError):
    """Exception raised when a Weierstrass model has a vanishing discriminant."""

    def __init__(self, model: str) -> None:
        super().__init__(f"Weierstrass model {model} is singular.")


class PrecisionNotReached(QuartseqError):
    """Exception raised when canonical height estimates do not stabilise."""

    def __init__(self, doublings: int, tolerance: float) -> None:
        super().__init__(
            f"Canonical height estimate did not stabilise to {tolerance} within {doublings} doublings."
        )


class TorsionInput(QuartseqError):
    """Exception raised when an independence certificate receives a torsion point."""

    def __init__(self, index: int, order: int) -> None:
        super().__init__(f"Point number {index} is torsion of order {order}.")


class DegenerateSequence(QuartseqError):
    """Exception raised when the squares of a sequence collide."""

    exit_code = 2

    def __init__(self, t: str, first_offset: str, second_offset: str) -> None:
        super().__init__(
            f"Degenerate sequence at t = {t}: (t{first_offset})^2 = (t{second_offset})^2."
        )


class SingularSpecialization(QuartseqError):
    """Exception raised when a value of t is a pole or makes a curve singular."""

    exit_code = 2

    def __init__(self, t: str, reason: str) -> None:
        super().__init__(f"Specialisation at t = {t} is singular: {reason}.")


class SingularSystem(QuartseqError):
    """Exception raised when the linear system in (a, b, c) is singular."""

    exit_code = 2

    def __init__(self, t: str) -> None:
        super().__init__(f"Linear system in (a, b, c) is singular at t = {t}.")


class NoKillingSubstitution(QuartseqError):
    """Exception raised when no substitution q = rho w kills the discriminant."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"No discriminant killing substitution: {reason}.")


class NotAPerfectSquare(QuartseqError):
    """Exception raised when the killed quartic is not the square of a binary quadratic."""

    def __init__(self, factorisation: Optional[str] = None) -> None:
        message = "Killed quartic is not a perfect square."
        if factorisation:
            message += f" Square-free factorisation: {factorisation}"
        super().__init__(message)


class PointIsTorsion(QuartseqError):
    """Exception raised when the walk starts from a torsion point."""

    def __init__(self, t: str, order: int) -> None:
        super().__init__(f"Point at t = {t} is torsion of order {order}.")


class ExhaustedMultiples(QuartseqError):
    """Exception raised when the walk reaches its multiple cap."""

    exit_code = 3

    def __init__(self, produced: int, requested: int, cap: int) -> None:
        super().__init__(
            f"Only {produced} of {requested} curves produced within {cap} multiples."
        )


class IdentityCheckFailed(QuartseqError):
    """Exception raised when an exact identity fails."""

    exit_code = 4

    def __init__(self, identity: str, detail: str = "") -> None:
        message = f"Identity check {identity} failed."
        if detail:
            message += f" {detail}"
        super().__init__(message)


class RecordParseError(QuartseqError):
    """Exception raised when a serialised record cannot be read."""

    exit_code = 2

    def __init__(self, location: str, reason: str) -> None:
        super().__init__(f"Cannot parse {location}: {reason}.")
