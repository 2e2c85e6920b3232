from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from sympy import QQ

from ..algorithm.exact import Rational, format_rational
from ..algorithm.polyalg import Scalar, domain_of, format_function, is_symbolic, specialize, to_scalar
from ..commons.errors import DegenerateSequence
from .curve_schema import EvenQuartic, Point

HALF_OFFSETS: Tuple[Rational, ...] = tuple(QQ(k, 2) for k in (-5, -3, -1, 1, 3, 5))
FIXED_OFFSETS: Tuple[Rational, ...] = tuple(QQ(k) for k in (-2, -1, 0, 1, 2, 3))
# Offsets of the witnesses d, e, f, g, h, k.
WITNESS_OFFSETS: Tuple[Rational, ...] = tuple(QQ(k) for k in (-1, 0, 1, -2, 2, 3))
WITNESS_NAMES = ("d", "e", "f", "g", "h", "k")


def _format_offset(offset: Rational) -> str:
    if not offset:
        return ""
    text = format_rational(abs(offset))
    return f" + {text}" if offset > 0 else f" - {text}"


def collision_values(offsets: Sequence[Rational]) -> List[Rational]:
    """Values of t making two squares (t + i)^2, (t + j)^2 equal: t = -(i + j) / 2."""
    return sorted({-(i + j) / 2 for i, j in combinations(offsets, 2)})


class ConsecutiveSquares:
    """The x-values (t + i)^2 of a sequence of consecutive squares.

    Subclasses fix the offsets i. A symbolic t never collides; a rational t is
    rejected when two of the squares coincide.
    """

    offsets: Tuple[Rational, ...] = ()

    def __init__(self, t: Scalar) -> None:
        """Initialise the sequence.

        Parameters
        ----------
        t : Scalar
            A rational number or the generator of Q(t).

        Raises
        ------
        DegenerateSequence
            If two of the squares coincide.
        """
        self.t = t if is_symbolic(t) else QQ.convert(t)
        collision = self.collision()
        if collision is not None:
            first, second = collision
            raise DegenerateSequence(
                t=format_rational(self.t),
                first_offset=_format_offset(first),
                second_offset=_format_offset(second),
            )

    @property
    def is_symbolic(self) -> bool:
        return is_symbolic(self.t)

    @property
    def domain(self):
        return domain_of(self.t)

    def collision(self) -> Optional[Tuple[Rational, Rational]]:
        """The first pair of offsets with equal squares, None when all are distinct."""
        if self.is_symbolic:
            return None
        for i, j in combinations(self.offsets, 2):
            if not (self.t + (i + j) / 2):
                return i, j
        return None

    def root(self, offset: Rational) -> Scalar:
        return self.t + to_scalar(offset, self.domain)

    def x_value(self, offset: Rational) -> Scalar:
        return self.root(offset) ** 2

    def x_values(self) -> List[Scalar]:
        return [self.x_value(offset) for offset in self.offsets]

    def specialize(self, tau: Rational) -> "ConsecutiveSquares":
        return type(self)(specialize(self.t, tau) if self.is_symbolic else self.t)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(t={format_function(self.t)})"


class HalfOffsetSequence(ConsecutiveSquares):
    """Squares (t + i)^2 for i in {-5/2, -3/2, -1/2, 1/2, 3/2, 5/2}."""

    offsets = HALF_OFFSETS


class SequenceSpec(ConsecutiveSquares):
    """Squares (t + i)^2 for i in {-2, -1, 0, 1, 2, 3}.

    With u = t - 3 the squares are (u + 1)^2, ..., (u + 6)^2.
    """

    offsets = FIXED_OFFSETS

    def witness_x_values(self) -> List[Scalar]:
        """x-values of the witnesses d, e, f, g, h, k, in that order."""
        return [self.x_value(offset) for offset in WITNESS_OFFSETS]


def is_consecutive_square_sequence(
    t: Scalar, offsets: Sequence[Rational], x_values: Sequence[Scalar]
) -> bool:
    """Check x_i = (t + offset_i)^2 with successive offsets differing by 1 once sorted."""
    if len(offsets) != len(x_values) or len(set(offsets)) != len(offsets):
        return False
    ordered = sorted(offsets)
    if any(second - first != 1 for first, second in zip(ordered, ordered[1:])):
        return False
    domain = domain_of(t, *x_values)
    t = to_scalar(t, domain)
    return all(
        not (to_scalar(x, domain) - (t + to_scalar(offset, domain)) ** 2)
        for offset, x in zip(offsets, x_values)
    )


@dataclass(frozen=True)
class SequenceWitness:
    """y-values tying an even quartic to the sequence of a :class:`SequenceSpec`.

    Attributes
    ----------
    sequence: SequenceSpec
        The sequence, giving x-values (t-1)^2, t^2, (t+1)^2, (t-2)^2, (t+2)^2, (t+3)^2.
    d, e, f, g, h, k: Scalar
        The matching y-values.
    """

    sequence: SequenceSpec
    d: Scalar
    e: Scalar
    f: Scalar
    g: Scalar
    h: Scalar
    k: Scalar

    @property
    def values(self) -> Tuple[Scalar, ...]:
        return (self.d, self.e, self.f, self.g, self.h, self.k)

    def points(self) -> List[Point]:
        """The six points ordered by offset -2, ..., 3."""
        by_offset = {
            offset: Point(self.sequence.x_value(offset), value)
            for offset, value in zip(WITNESS_OFFSETS, self.values)
        }
        return [by_offset[offset] for offset in FIXED_OFFSETS]

    def has_zero(self) -> bool:
        return any(not value for value in self.values)

    def lies_on(self, curve: EvenQuartic) -> bool:
        return all(curve.contains(point) for point in self.points())


@dataclass(frozen=True)
class MestreDecomposition:
    """P = Q^2 - R for the degree 12 product of a :class:`HalfOffsetSequence`.

    Attributes
    ----------
    P, Q, R: PolyElement
        Even univariate polynomials in x, with deg Q = 6 and deg R <= 4.
    """

    P: object
    Q: object
    R: object

    def holds(self) -> bool:
        return not (self.Q**2 - self.R - self.P)


@dataclass(frozen=True)
class SquareRelation:
    """y^2 at (t + target)^2 as lambda1 d^2 + lambda2 e^2 + lambda3 f^2.

    Attributes
    ----------
    target_offset: Rational
        The offset j of the target square.
    coefficients: Tuple[Scalar, Scalar, Scalar]
        The coefficients lambda1, lambda2, lambda3; they sum to 1.
    """

    target_offset: Rational
    coefficients: Tuple[Scalar, Scalar, Scalar]

    @property
    def total(self) -> Scalar:
        first, second, third = self.coefficients
        return first + second + third

    def evaluate(self, d, e, f):
        first, second, third = self.coefficients
        return first * d**2 + second * e**2 + third * f**2

    def specialize(self, tau: Rational) -> "SquareRelation":
        return SquareRelation(
            self.target_offset, tuple(specialize(c, tau) for c in self.coefficients)
        )


@dataclass(frozen=True)
class ParamPoint:
    """Projective parameters (p : q : w) of the quadric parametrisation."""

    p: Scalar
    q: Scalar
    w: Scalar

    def __post_init__(self) -> None:
        if not (self.p or self.q or self.w):
            raise ValueError("(p : q : w) cannot be (0 : 0 : 0).")


REFERENCE_PATH = "reference"
INTERPOLATED_PATH = "interpolated"


@dataclass(frozen=True)
class QKill:
    """Substitution q = rho w cancelling the p-discriminant of the h-quartic.

    Attributes
    ----------
    rho: Scalar
        The rational function rho(t).
    path: str
        REFERENCE_PATH when the tabulated rho was verified, INTERPOLATED_PATH
        when rho was recovered from specialisations.
    candidates: List[Scalar]
        Every verified root, rho being the first.
    """

    rho: Scalar
    path: str = REFERENCE_PATH
    candidates: List[Scalar] = field(default_factory=list)
