from dataclasses import dataclass
from typing import Optional, Tuple

from sympy.polys.rings import PolyElement

from ..algorithm.polyalg import (
    BinaryQuartic,
    Scalar,
    domain_of,
    flat_ring,
    flatten,
    format_function,
    polynomial_ring,
    specialize,
    square_root,
    to_scalar,
)
from ..commons.errors import SingularCurve, SingularQuartic


@dataclass(frozen=True)
class Point:
    """A point of a curve model, or the point at infinity when both coordinates are None.

    On a quartic model the point at infinity stands for the rational point with
    y / x^2 equal to the positive square root of the leading coefficient.
    """

    x: Optional[Scalar] = None
    y: Optional[Scalar] = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def specialize(self, tau) -> "Point":
        if self.is_infinity:
            return self
        return Point(specialize(self.x, tau), specialize(self.y, tau))

    def __str__(self) -> str:
        if self.is_infinity:
            return "Infinity"
        return f"({format_function(self.x)}, {format_function(self.y)})"


INFINITY = Point()


def _flat_curve_equation(rhs: PolyElement) -> Tuple[PolyElement, PolyElement]:
    """Flat form L y^2 = G(x) of the curve y^2 = rhs(x), in Q[t, x, y]."""
    flat = flat_ring("x,y")
    G, L = flatten(rhs)
    embedded = flat.from_dict({monom + (0,): c for monom, c in G.items()})
    scale = flat.from_dict({monom + (0,): c for monom, c in L.items()})
    return scale, embedded


@dataclass(frozen=True)
class WeierstrassModel:
    """Curve y^2 = x^3 + a2 x^2 + a4 x + a6 over Q or Q(t).

    Attributes
    ----------
    a2, a4, a6: Scalar
        The coefficients, all in the same field.
    """

    a2: Scalar
    a4: Scalar
    a6: Scalar

    def __post_init__(self) -> None:
        domain = domain_of(self.a2, self.a4, self.a6)
        for name in ("a2", "a4", "a6"):
            object.__setattr__(self, name, to_scalar(getattr(self, name), domain))
        if not self.discriminant:
            raise SingularCurve(model=str(self))

    @property
    def domain(self):
        return domain_of(self.a2, self.a4, self.a6)

    @property
    def b_invariants(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        b2 = 4 * self.a2
        b4 = 2 * self.a4
        b6 = 4 * self.a6
        b8 = 4 * self.a2 * self.a6 - self.a4**2
        return b2, b4, b6, b8

    @property
    def discriminant(self) -> Scalar:
        b2, b4, b6, b8 = self.b_invariants
        return -(b2**2) * b8 - 8 * b4**3 - 27 * b6**2 + 9 * b2 * b4 * b6

    @property
    def c4(self) -> Scalar:
        b2, b4, _, _ = self.b_invariants
        return b2**2 - 24 * b4

    def rhs(self, x: Scalar) -> Scalar:
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def contains(self, point: Point) -> bool:
        if point.is_infinity:
            return True
        return not (point.y**2 - self.rhs(point.x))

    def specialize(self, tau) -> "WeierstrassModel":
        return WeierstrassModel(
            specialize(self.a2, tau), specialize(self.a4, tau), specialize(self.a6, tau)
        )

    def cubic(self) -> PolyElement:
        x = polynomial_ring("x", self.domain).gens[0]
        return x**3 + self.a2 * x**2 + self.a4 * x + self.a6

    def flat_equation(self) -> Tuple[PolyElement, PolyElement]:
        return _flat_curve_equation(self.cubic())

    def __str__(self) -> str:
        return (
            f"y^2 = x^3 + ({format_function(self.a2)}) x^2 + "
            f"({format_function(self.a4)}) x + ({format_function(self.a6)})"
        )


@dataclass(frozen=True)
class QuarticCurve:
    """Curve y^2 = A x^4 + B x^3 + C x^2 + D x + E with an optional marked rational point.

    Attributes
    ----------
    A, B, C, D, E: Scalar
        The coefficients, with a non zero discriminant.
    marked: Point, optional
        A rational point of the curve; INFINITY marks the point at infinity,
        which requires A to be a square.
    """

    A: Scalar
    B: Scalar
    C: Scalar
    D: Scalar
    E: Scalar
    marked: Optional[Point] = None

    def __post_init__(self) -> None:
        form = BinaryQuartic(self.A, self.B, self.C, self.D, self.E)
        for name, value in zip("ABCDE", form.coefficients):
            object.__setattr__(self, name, value)
        if not form.discriminant:
            raise SingularQuartic(quartic=str(self))
        if self.marked is not None:
            if self.marked.is_infinity:
                if square_root(self.A) is None:
                    raise ValueError("Point at infinity is not rational: A is not a square.")
            elif not self.contains(self.marked):
                raise ValueError(f"Marked point {self.marked} is not on {self}.")

    @property
    def coefficients(self) -> Tuple[Scalar, ...]:
        return (self.A, self.B, self.C, self.D, self.E)

    @property
    def domain(self):
        return domain_of(*self.coefficients)

    @property
    def form(self) -> BinaryQuartic:
        return BinaryQuartic(*self.coefficients)

    def rhs(self, x: Scalar) -> Scalar:
        return (((self.A * x + self.B) * x + self.C) * x + self.D) * x + self.E

    def contains(self, point: Point) -> bool:
        if point.is_infinity:
            return square_root(self.A) is not None
        return not (point.y**2 - self.rhs(point.x))

    def polynomial(self) -> PolyElement:
        x = polynomial_ring("x", self.domain).gens[0]
        A, B, C, D, E = self.coefficients
        return A * x**4 + B * x**3 + C * x**2 + D * x + E

    def flat_equation(self) -> Tuple[PolyElement, PolyElement]:
        return _flat_curve_equation(self.polynomial())

    def with_marked(self, point: Point) -> "QuarticCurve":
        return QuarticCurve(*self.coefficients, marked=point)

    def specialize(self, tau) -> "QuarticCurve":
        marked = self.marked.specialize(tau) if self.marked is not None else None
        return QuarticCurve(*(specialize(c, tau) for c in self.coefficients), marked=marked)

    def __str__(self) -> str:
        terms = " + ".join(
            f"({format_function(c)}) x^{4 - i}" for i, c in enumerate(self.coefficients)
        )
        return f"y^2 = {terms}"


@dataclass(frozen=True)
class EvenQuartic:
    """The target family y^2 = a x^4 + b x^2 + c.

    Attributes
    ----------
    a, b, c: Scalar
        The coefficients.
    """

    a: Scalar
    b: Scalar
    c: Scalar

    def __post_init__(self) -> None:
        domain = domain_of(self.a, self.b, self.c)
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, to_scalar(getattr(self, name), domain))

    @property
    def domain(self):
        return domain_of(self.a, self.b, self.c)

    @property
    def is_degenerate(self) -> bool:
        return not self.a

    @property
    def is_nonsingular(self) -> bool:
        """The quartic has distinct roots: a c (b^2 - 4 a c) is non zero."""
        return bool(self.a * self.c * (self.b**2 - 4 * self.a * self.c))

    def rhs(self, x: Scalar) -> Scalar:
        x2 = x * x
        return (self.a * x2 + self.b) * x2 + self.c

    def contains(self, point: Point) -> bool:
        return not point.is_infinity and not (point.y**2 - self.rhs(point.x))

    def as_quartic(self, marked: Optional[Point] = None) -> QuarticCurve:
        zero = self.domain.zero
        return QuarticCurve(self.a, zero, self.b, zero, self.c, marked=marked)

    def two_torsion_jacobian(self) -> WeierstrassModel:
        """Jacobian of the even quartic in the form y^2 = x (x^2 - 2 b x + b^2 - 4 a c)."""
        return WeierstrassModel(-2 * self.b, self.b**2 - 4 * self.a * self.c, self.domain.zero)

    def specialize(self, tau) -> "EvenQuartic":
        return EvenQuartic(specialize(self.a, tau), specialize(self.b, tau), specialize(self.c, tau))

    def __str__(self) -> str:
        return (
            f"y^2 = ({format_function(self.a)}) x^4 + ({format_function(self.b)}) x^2 "
            f"+ ({format_function(self.c)})"
        )
