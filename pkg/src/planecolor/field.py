"""Exact arithmetic in the degree-4 field Q(sqrt(3), sqrt(11)).

Every coordinate, midpoint, centroid, and squared distance handled by this
package lives in the field with basis {1, sqrt3, sqrt11, sqrt33} over the
rationals.  Elements stay in canonical form (reduced ``Fraction``
coefficients with positive denominators), so equality is componentwise and
exact.  The one approximate operation, :meth:`FieldScalar.approx`, exists
for rendering only and is never consulted by verification logic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

_SQRT3 = math.sqrt(3.0)
_SQRT11 = math.sqrt(11.0)
_SQRT33 = math.sqrt(33.0)

_ZERO = Fraction(0)

RationalLike = int | Fraction


@dataclass(frozen=True, eq=False)
class FieldScalar:
    """``r0 + r3*sqrt(3) + r11*sqrt(11) + r33*sqrt(33)`` with rational coefficients.

    The basis is linearly independent over Q, so two values are equal iff
    all four coefficients are equal.  Instances are immutable and safe to
    share; every operation returns a new canonical value.
    """

    r0: Fraction = _ZERO
    r3: Fraction = _ZERO
    r11: Fraction = _ZERO
    r33: Fraction = _ZERO

    def __post_init__(self) -> None:
        for name in ("r0", "r3", "r11", "r33"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, Fraction(v))

    @classmethod
    def from_rational(cls, q: RationalLike) -> FieldScalar:
        return cls(Fraction(q))

    def __add__(self, other: FieldScalar) -> FieldScalar:
        if not isinstance(other, FieldScalar):
            return NotImplemented
        return FieldScalar(
            self.r0 + other.r0,
            self.r3 + other.r3,
            self.r11 + other.r11,
            self.r33 + other.r33,
        )

    def __sub__(self, other: FieldScalar) -> FieldScalar:
        if not isinstance(other, FieldScalar):
            return NotImplemented
        return FieldScalar(
            self.r0 - other.r0,
            self.r3 - other.r3,
            self.r11 - other.r11,
            self.r33 - other.r33,
        )

    def __neg__(self) -> FieldScalar:
        return FieldScalar(-self.r0, -self.r3, -self.r11, -self.r33)

    def __mul__(self, other: FieldScalar | RationalLike) -> FieldScalar:
        if isinstance(other, (int, Fraction)):
            return FieldScalar(
                self.r0 * other, self.r3 * other, self.r11 * other, self.r33 * other
            )
        if not isinstance(other, FieldScalar):
            return NotImplemented
        a0, a1, a2, a3 = self.r0, self.r3, self.r11, self.r33
        b0, b1, b2, b3 = other.r0, other.r3, other.r11, other.r33
        # sqrt3*sqrt11 = sqrt33, sqrt3*sqrt33 = 3*sqrt11, sqrt11*sqrt33 = 11*sqrt3
        return FieldScalar(
            a0 * b0 + 3 * a1 * b1 + 11 * a2 * b2 + 33 * a3 * b3,
            a0 * b1 + a1 * b0 + 11 * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 + 3 * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )

    __rmul__ = __mul__

    def __truediv__(self, divisor: RationalLike) -> FieldScalar:
        """Division by a nonzero rational scalar (general field inverses are not needed)."""
        q = Fraction(divisor)
        return FieldScalar(self.r0 / q, self.r3 / q, self.r11 / q, self.r33 / q)

    def square(self) -> FieldScalar:
        a0, a1, a2, a3 = self.r0, self.r3, self.r11, self.r33
        # Fast paths for the two shapes lattice coordinates take.
        if not a1 and not a2 and not a3:
            return FieldScalar(a0 * a0)
        if not a0 and not a2 and not a3:
            return FieldScalar(3 * a1 * a1)
        return self * self

    def is_rational(self) -> bool:
        return not self.r3 and not self.r11 and not self.r33

    def eq_rational(self, q: RationalLike) -> bool:
        """True iff the value equals the rational ``q`` exactly."""
        return self.is_rational() and self.r0 == q

    def approx(self) -> float:
        """Double-precision evaluation, for rendering only.

        Correctly rounded constants keep the round-off below ~1e-12 per unit
        of coefficient magnitude; verification never reads this value.
        """
        return (
            float(self.r0)
            + float(self.r3) * _SQRT3
            + float(self.r11) * _SQRT11
            + float(self.r33) * _SQRT33
        )

    __float__ = approx

    def __bool__(self) -> bool:
        return bool(self.r0 or self.r3 or self.r11 or self.r33)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldScalar):
            return (
                self.r0 == other.r0
                and self.r3 == other.r3
                and self.r11 == other.r11
                and self.r33 == other.r33
            )
        if isinstance(other, (int, Fraction)):
            return self.eq_rational(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.r0)  # keeps hash(FieldScalar(q)) == hash(q)
        return hash((self.r0, self.r3, self.r11, self.r33))

    def __str__(self) -> str:
        parts: list[str] = []
        for coef, surd in (
            (self.r0, ""),
            (self.r3, "sqrt(3)"),
            (self.r11, "sqrt(11)"),
            (self.r33, "sqrt(33)"),
        ):
            if not coef:
                continue
            if not surd:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(surd)
            elif coef == -1:
                parts.append(f"-{surd}")
            else:
                parts.append(f"{coef}*{surd}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"FieldScalar({self})"


ZERO = FieldScalar()
ONE = FieldScalar(Fraction(1))
SQRT3 = FieldScalar(_ZERO, Fraction(1))
SQRT11 = FieldScalar(_ZERO, _ZERO, Fraction(1))
SQRT33 = FieldScalar(_ZERO, _ZERO, _ZERO, Fraction(1))


def scalar(q: RationalLike) -> FieldScalar:
    """Shorthand for embedding a rational into the field."""
    return FieldScalar(Fraction(q))


@dataclass(frozen=True)
class PlanePoint:
    """A point of the plane with exact field coordinates.

    ``label`` and ``quad`` are carried for bookkeeping only and do not
    participate in equality or hashing: two points are the same iff their
    coordinates agree.  ``quad`` records the integer quadruple ``[a,b,c,d]``
    when the point was built from one, enabling the integer closed-form
    distance cross-check.
    """

    x: FieldScalar
    y: FieldScalar
    label: str | None = field(default=None, compare=False)
    quad: tuple[int, int, int, int] | None = field(default=None, compare=False)

    @classmethod
    def from_quadruple(cls, a: int, b: int, c: int, d: int, label: str | None = None) -> PlanePoint:
        """The point ((a*sqrt3 + b*sqrt11)/12, (c + d*sqrt33)/12)."""
        x = FieldScalar(_ZERO, Fraction(a, 12), Fraction(b, 12), _ZERO)
        y = FieldScalar(Fraction(c, 12), _ZERO, _ZERO, Fraction(d, 12))
        return cls(x, y, label=label, quad=(a, b, c, d))

    def approx(self) -> tuple[float, float]:
        return (self.x.approx(), self.y.approx())

    def __str__(self) -> str:
        if self.label is not None:
            return self.label
        return f"({self.x}, {self.y})"
