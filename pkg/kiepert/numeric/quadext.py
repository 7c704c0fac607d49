"""Exact arithmetic in the quadratic field Q(sqrt(3))."""

import math
from fractions import Fraction
from typing import Any, Union

RationalLike = Union[int, Fraction, str]

SQRT3_FLOAT = math.sqrt(3.0)


def _sgn(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def format_fraction(q: Fraction) -> str:
    """Render a rational as "p/q", denominator always present."""
    return f"{q.numerator}/{q.denominator}"


class QuadExt:
    """The number a + b*sqrt(3) with rational a, b.

    Instances are treated as immutable. Arithmetic with ints and Fractions stays
    exact; arithmetic with a float degrades to a float.
    """

    __slots__ = ("a", "b")

    a: Fraction
    b: Fraction

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0) -> None:
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def sqrt3(cls) -> "QuadExt":
        return cls(0, 1)

    @classmethod
    def coerce(cls, value: Any) -> "QuadExt":
        if isinstance(value, QuadExt):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot represent {value!r} exactly in Q(sqrt(3))")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm a^2 - 3 b^2."""
        return self.a * self.a - 3 * self.b * self.b

    def sign(self) -> int:
        """Exact sign, decided by comparing a^2 with 3 b^2."""
        sa, sb = _sgn(self.a), _sgn(self.b)
        if sa >= 0 and sb >= 0:
            return 1 if (sa or sb) else 0
        if sa <= 0 and sb <= 0:
            return -1
        # opposite signs: the larger of |a| and |b|*sqrt(3) wins
        return sa if self.norm() > 0 else sb

    def sqrt(self) -> "QuadExt | None":
        """Nonnegative square root inside Q(sqrt(3)), or None if it leaves the field."""
        s = self.sign()
        if s < 0:
            return None
        if s == 0:
            return QuadExt()
        n = rational_sqrt(self.norm())
        if n is None:
            return None
        for branch in (n, -n):
            c = rational_sqrt((self.a + branch) / 2)
            d = rational_sqrt((self.a - branch) / 6)
            if c is None or d is None:
                continue
            root = QuadExt(c, d if self.b >= 0 else -d)
            if root * root == self:
                return root if root.sign() >= 0 else -root
        return None

    # arithmetic

    def __add__(self, other: Any) -> Any:
        if isinstance(other, QuadExt):
            return QuadExt(self.a + other.a, self.b + other.b)
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.a + other, self.b)
        if isinstance(other, float):
            return float(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b)

    def __pos__(self) -> "QuadExt":
        return self

    def __sub__(self, other: Any) -> Any:
        if isinstance(other, QuadExt):
            return QuadExt(self.a - other.a, self.b - other.b)
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.a - other, self.b)
        if isinstance(other, float):
            return float(self) - other
        return NotImplemented

    def __rsub__(self, other: Any) -> Any:
        if isinstance(other, (int, Fraction)):
            return QuadExt(other - self.a, -self.b)
        if isinstance(other, float):
            return other - float(self)
        return NotImplemented

    def __mul__(self, other: Any) -> Any:
        if isinstance(other, QuadExt):
            return QuadExt(
                self.a * other.a + 3 * self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.a * other, self.b * other)
        if isinstance(other, float):
            return float(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(3))")
        return QuadExt(self.a / n, -self.b / n)

    def __truediv__(self, other: Any) -> Any:
        if isinstance(other, QuadExt):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt(3))")
            return QuadExt(self.a / other, self.b / other)
        if isinstance(other, float):
            return float(self) / other
        return NotImplemented

    def __rtruediv__(self, other: Any) -> Any:
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        if isinstance(other, float):
            return other / float(self)
        return NotImplemented

    def __pow__(self, exponent: int) -> "QuadExt":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadExt(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __abs__(self) -> "QuadExt":
        return -self if self.sign() < 0 else self

    # comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other: Any) -> bool:
        return (self - QuadExt.coerce(other)).sign() < 0

    def __le__(self, other: Any) -> bool:
        return (self - QuadExt.coerce(other)).sign() <= 0

    def __gt__(self, other: Any) -> bool:
        return (self - QuadExt.coerce(other)).sign() > 0

    def __ge__(self, other: Any) -> bool:
        return (self - QuadExt.coerce(other)).sign() >= 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * SQRT3_FLOAT

    # serialization

    def to_json(self) -> dict[str, str]:
        return {"a": format_fraction(self.a), "b": format_fraction(self.b)}

    @classmethod
    def from_json(cls, data: dict[str, str]) -> "QuadExt":
        return cls(Fraction(data["a"]), Fraction(data["b"]))

    def __repr__(self) -> str:
        return f"QuadExt({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt(3)"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt(3)"


SQRT3 = QuadExt.sqrt3()
