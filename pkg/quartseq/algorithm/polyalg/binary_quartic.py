from dataclasses import dataclass
from typing import Tuple

from sympy.polys.rings import PolyElement

from .fields import Scalar, domain_of, polynomial_ring, specialize, to_scalar


@dataclass(frozen=True)
class BinaryQuartic:
    """Binary quartic form F(p, w) = A p^4 + B p^3 w + C p^2 w^2 + D p w^3 + E w^4.

    Attributes
    ----------
    A, B, C, D, E: Scalar
        Coefficients in Q or Q(t), not all zero.
    """

    A: Scalar
    B: Scalar
    C: Scalar
    D: Scalar
    E: Scalar

    def __post_init__(self) -> None:
        if not any(self.coefficients):
            raise ValueError("A binary quartic needs a non zero coefficient.")
        domain = domain_of(*self.coefficients)
        for name in "ABCDE":
            object.__setattr__(self, name, to_scalar(getattr(self, name), domain))

    @property
    def coefficients(self) -> Tuple[Scalar, ...]:
        return (self.A, self.B, self.C, self.D, self.E)

    @property
    def domain(self):
        return domain_of(*self.coefficients)

    @classmethod
    def from_form(cls, form: PolyElement, p: PolyElement, w: PolyElement) -> "BinaryQuartic":
        """Read a homogeneous quartic in the generators p and w of a polynomial ring.

        Raises
        ------
        ValueError
            If the form involves other generators or is not homogeneous of degree 4.
        """
        ring = form.ring
        p_index, w_index = ring.index(p), ring.index(w)
        coefficients = [ring.domain.zero] * 5
        for monom, coefficient in form.items():
            others = [e for i, e in enumerate(monom) if i not in (p_index, w_index)]
            if any(others) or monom[p_index] + monom[w_index] != 4:
                raise ValueError(f"{form} is not a binary quartic in {p}, {w}.")
            coefficients[4 - monom[p_index]] = coefficient
        return cls(*coefficients)

    def as_form(self) -> PolyElement:
        """The quartic in the ring of forms in (p, w) over its field."""
        forms = polynomial_ring("p,w", self.domain)
        return forms.from_dict(
            {(4 - i, i): coefficient for i, coefficient in enumerate(self.coefficients)}
        )

    def dehomogenize(self) -> PolyElement:
        """F(p, 1) as a univariate polynomial in p."""
        univariate = polynomial_ring("p", self.domain)
        return univariate.from_dict(
            {(4 - i,): coefficient for i, coefficient in enumerate(self.coefficients)}
        )

    def homogenize(self, poly: PolyElement, degree: int) -> PolyElement:
        """Lift a univariate polynomial in p to a form of the given degree in (p, w)."""
        forms = polynomial_ring("p,w", self.domain)
        return forms.from_dict(
            {(d, degree - d): coefficient for (d,), coefficient in poly.items()}
        )

    def evaluate(self, p: Scalar, w: Scalar) -> Scalar:
        return sum(
            (c * p ** (4 - i) * w**i for i, c in enumerate(self.coefficients)),
            self.domain.zero,
        )

    def specialize(self, tau) -> "BinaryQuartic":
        return BinaryQuartic(*(specialize(c, tau) for c in self.coefficients))

    def reversed(self) -> "BinaryQuartic":
        """The form F(w, p)."""
        return BinaryQuartic(*reversed(self.coefficients))

    @property
    def I(self) -> Scalar:
        A, B, C, D, E = self.coefficients
        return 12 * A * E - 3 * B * D + C**2

    @property
    def J(self) -> Scalar:
        A, B, C, D, E = self.coefficients
        return (
            72 * A * C * E
            + 9 * B * C * D
            - 27 * A * D**2
            - 27 * B**2 * E
            - 2 * C**3
        )

    @property
    def discriminant(self) -> Scalar:
        return (4 * self.I**3 - self.J**2) / 27

    def resultant_discriminant(self) -> Scalar:
        """Discriminant through the resultant of F(p, 1) and its derivative.

        The shear w -> w + s p (determinant 1) moves a non zero value into the
        leading coefficient when A vanishes.
        """
        shifted = self
        s = 0
        while not shifted.A:
            s += 1
            shifted = self._sheared(s)
        return shifted.dehomogenize().discriminant()

    def _sheared(self, s: int) -> "BinaryQuartic":
        forms = polynomial_ring("p,w", self.domain)
        p, w = forms.gens
        return BinaryQuartic.from_form(self.as_form().compose(w, w + s * p), p, w)


def quartic_invariants(F: BinaryQuartic) -> Tuple[Scalar, Scalar, Scalar]:
    """Classical invariants (I, J) and discriminant (4 I^3 - J^2) / 27 of a binary quartic."""
    return F.I, F.J, F.discriminant


def scaled_discriminant(A, B, C, D, E):
    """4 I^3 - J^2, that is 27 times the discriminant, for coefficients in any ring over Q.

    Used with polynomial coefficients, where the roots of the discriminant in
    a free parameter are searched.
    """
    I = 12 * A * E - 3 * B * D + C**2
    J = 72 * A * C * E + 9 * B * C * D - 27 * A * D**2 - 27 * B**2 * E - 2 * C**3
    return 4 * I**3 - J**2
