"""Exact coefficient domains: rationals and the quadratic field Q(sqrt(3)).

The rational domain is `fractions.Fraction` (arbitrary precision, always
reduced, positive denominator).  `QSqrt3` adjoins sqrt(3), which is where the
tangent-line slopes cot(k*pi/12) and the half-integer trig values live.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

DOMAIN_RATIONAL = "rational"
DOMAIN_QSQRT3 = "qsqrt3"
DOMAIN_FLOAT = "float"

_SQRT3 = 3 ** 0.5


class DomainMismatchError(TypeError):
    """Raised when polynomial operands live in incompatible domains."""


@dataclass(frozen=True)
class QSqrt3:
    """An element a + b*sqrt(3) with rational a, b."""

    a: Fraction
    b: Fraction = Fraction(0)

    @staticmethod
    def of(value) -> "QSqrt3":
        if isinstance(value, QSqrt3):
            return value
        return QSqrt3(Fraction(value))

    def __add__(self, other):
        other = QSqrt3.of(other)
        return QSqrt3(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt3(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-QSqrt3.of(other))

    def __rsub__(self, other):
        return QSqrt3.of(other) + (-self)

    def __mul__(self, other):
        other = QSqrt3.of(other)
        return QSqrt3(
            self.a * other.a + 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QSqrt3.of(other)
        norm = other.a * other.a - 3 * other.b * other.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(3))")
        conj = QSqrt3(other.a / norm, -other.b / norm)
        return self * conj

    def __rtruediv__(self, other):
        return QSqrt3.of(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return QSqrt3(Fraction(1)) / self ** (-n)
        out = QSqrt3(Fraction(1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QSqrt3):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QSqrt3":
        return QSqrt3(self.a, -self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * _SQRT3

    def __repr__(self):
        if self.b == 0:
            return f"QSqrt3({self.a})"
        return f"QSqrt3({self.a}, {self.b})"


# Exact trig values on the 12th / 6th subdivisions of pi.  tan(pi/2) is the
# vertical direction and has no finite value.
_TAN_PI12 = {
    0: QSqrt3(Fraction(0)),
    1: QSqrt3(Fraction(2), Fraction(-1)),   # tan(pi/12)  = 2 - sqrt(3)
    2: QSqrt3(Fraction(0), Fraction(1, 3)),  # tan(pi/6)   = sqrt(3)/3
    3: QSqrt3(Fraction(1)),
    4: QSqrt3(Fraction(0), Fraction(1)),     # tan(pi/3)   = sqrt(3)
    5: QSqrt3(Fraction(2), Fraction(1)),     # tan(5pi/12) = 2 + sqrt(3)
}

_COS_PI6 = {
    0: QSqrt3(Fraction(1)),
    1: QSqrt3(Fraction(0), Fraction(1, 2)),
    2: QSqrt3(Fraction(1, 2)),
    3: QSqrt3(Fraction(0)),
    4: QSqrt3(Fraction(-1, 2)),
    5: QSqrt3(Fraction(0), Fraction(-1, 2)),
    6: QSqrt3(Fraction(-1)),
}


def tan_pi12(k: int) -> QSqrt3 | None:
    """tan(k*pi/12), exactly; None when the direction is vertical."""
    k %= 12
    if k == 6:
        return None
    if k < 6:
        return _TAN_PI12[k]
    return -_TAN_PI12[12 - k]


def cos_pi6(k: int) -> QSqrt3:
    """cos(k*pi/6), exactly."""
    k %= 12
    return _COS_PI6[k if k <= 6 else 12 - k]


def sin_pi6(k: int) -> QSqrt3:
    """sin(k*pi/6) = cos((3-k)*pi/6), exactly."""
    return cos_pi6(3 - k)


def join_domain(d1: str, d2: str) -> str:
    """Smallest domain containing both operands; floats never mix with exact."""
    if d1 == d2:
        return d1
    pair = {d1, d2}
    if pair == {DOMAIN_RATIONAL, DOMAIN_QSQRT3}:
        return DOMAIN_QSQRT3
    raise DomainMismatchError(f"incompatible coefficient domains: {d1} vs {d2}")


def coerce_coeff(value, domain: str):
    """Convert a raw coefficient into the canonical type of `domain`."""
    if domain == DOMAIN_FLOAT:
        return float(value)
    if domain == DOMAIN_QSQRT3:
        return QSqrt3.of(value)
    if isinstance(value, QSqrt3):
        if not value.is_rational:
            raise DomainMismatchError("sqrt(3) part present in rational domain")
        return value.a
    return Fraction(value)
