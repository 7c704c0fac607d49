import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..errors import DegenerateLeadingCoefficient, NotARoot
from . import Scalar, current_tolerance, exact, is_exact, is_zero, sign_of, simplify, sqrt

logger = logging.getLogger(__name__)

# Denominator bound used when snapping a float root back to an exact rational.
SNAP_DENOMINATOR = 10**6


@dataclass(frozen=True)
class Poly:
    """Coefficients lowest degree first; trailing exact zeros are dropped."""

    coeffs: tuple[Scalar, ...]
    residual: float = field(default=0.0, compare=False)

    def __post_init__(self) -> None:
        coeffs = [exact(c) for c in self.coeffs]
        while len(coeffs) > 1 and is_exact(coeffs[-1]) and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs) or (exact(0),))

    @classmethod
    def of(cls, *coeffs: Scalar) -> "Poly":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1]

    @property
    def is_exact(self) -> bool:
        return is_exact(*self.coeffs)

    def coefficient_scale(self) -> float:
        return max((abs(float(c)) for c in self.coeffs), default=0.0)

    def trimmed(self) -> "Poly":
        """Drop leading coefficients that vanish relative to the coefficient scale."""
        scale = self.coefficient_scale() or 1.0
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and is_zero(coeffs[-1], scale):
            coeffs.pop()
        return Poly(tuple(coeffs))

    def __call__(self, x: Any) -> Any:
        acc: Any = exact(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            return Poly(tuple(c * other for c in self.coeffs))
        out: list[Scalar] = [exact(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def derivative(self) -> "Poly":
        return Poly(tuple(c * k for k, c in enumerate(self.coeffs))[1:] or (0,))

    def as_float(self) -> "Poly":
        return Poly(tuple(float(c) for c in self.coeffs))

    def __str__(self) -> str:
        terms = [f"({c})*x^{k}" for k, c in enumerate(self.coeffs) if not (is_exact(c) and c == 0)]
        return " + ".join(reversed(terms)) or "0"


def deflate(p: Poly, root: Scalar) -> Poly:
    """Synthetic division by (x - root).

    The quotient records the relative size of the discarded remainder as its
    residual; a remainder that is not zero (exact) or not below tolerance raises.
    """
    if p.degree < 1:
        raise NotARoot("cannot deflate a constant polynomial")
    acc: Scalar = exact(0)
    quotient: list[Scalar] = []
    for c in reversed(p.coeffs):
        acc = acc * root + c
        quotient.append(acc)
    remainder = quotient.pop()
    bound = p.coefficient_scale() * max(1.0, abs(float(root))) ** p.degree
    residual = abs(float(remainder)) / bound if bound > 0 else abs(float(remainder))
    if is_exact(remainder):
        if remainder != 0:
            raise NotARoot(f"{root} is not a root (remainder {remainder})")
    elif residual > current_tolerance().eps:
        raise NotARoot(f"{root} is not a root (relative remainder {residual:.3e})")
    return Poly(tuple(reversed(quotient)), residual=residual)


def _cube_root(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _polish(p: Poly, dp: Poly, x: float) -> float:
    """One guarded Newton step: kept only if it shrinks |p(x)|."""
    fx = p(x)
    dfx = dp(x)
    if dfx == 0 or not math.isfinite(dfx):
        return x
    candidate = x - fx / dfx
    if math.isfinite(candidate) and abs(p(candidate)) < abs(fx):
        return candidate
    return x


def solve_cubic_real(p: Poly) -> list[float]:
    """All real roots of a cubic, ascending, repeated roots listed with multiplicity.

    Three real roots (negative discriminant) use the trigonometric method, one
    real root uses Cardano; every root gets one guarded Newton step.
    """
    fp = p.as_float()
    a0, a1, a2, a3 = (fp.coeffs + (0.0,) * 4)[:4]
    scale = fp.coefficient_scale()
    if fp.degree < 3 or abs(a3) <= current_tolerance().eps * scale:
        raise DegenerateLeadingCoefficient(f"leading coefficient {a3!r} vanishes")

    b, c, d = a2 / a3, a1 / a3, a0 / a3
    shift = b / 3.0
    pp = c - b * b / 3.0
    qq = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = (qq / 2.0) ** 2 + (pp / 3.0) ** 3
    disc_scale = max((qq / 2.0) ** 2, abs(pp / 3.0) ** 3)

    roots: list[float]
    if abs(disc) <= current_tolerance().eps * disc_scale:
        if abs(pp) <= current_tolerance().eps * max(1.0, b * b):
            roots = [-_cube_root(qq)] * 3
        else:
            simple, double = 3.0 * qq / pp, -3.0 * qq / (2.0 * pp)
            roots = [simple, double, double]
    elif disc < 0:
        r = 2.0 * math.sqrt(-pp / 3.0)
        arg = (3.0 * qq) / (pp * r)
        phi = math.acos(max(-1.0, min(1.0, arg)))
        roots = [r * math.cos((phi - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    else:
        s = math.sqrt(disc)
        roots = [_cube_root(-qq / 2.0 + s) + _cube_root(-qq / 2.0 - s)]

    dfp = fp.derivative()
    return sorted(_polish(fp, dfp, t - shift) for t in roots)


def solve_quadratic(p: Poly) -> list[Scalar]:
    """Real roots of a quadratic, exact whenever the discriminant's root is."""
    c, b, a = p.coeffs
    disc = b * b - 4 * a * c
    scale = max(abs(float(b)) ** 2, abs(float(4 * a * c)))
    s = sign_of(disc, scale)
    if s < 0:
        return []
    if s == 0:
        return [simplify(-b / (2 * a))]
    root = sqrt(disc)
    # avoid cancellation in the numeric tier
    if not is_exact(root, a, b, c):
        q = -0.5 * (float(b) + math.copysign(float(root), float(b)))
        pair = [q / float(a), float(c) / q] if q != 0 else [0.0, 0.0]
        return sorted(pair)
    return sorted((simplify((-b - root) / (2 * a)), simplify((-b + root) / (2 * a))), key=float)


def _snap_rational_root(p: Poly, approx: float) -> Fraction | None:
    if not math.isfinite(approx):
        return None
    candidate = Fraction(approx).limit_denominator(SNAP_DENOMINATOR)
    return candidate if p(candidate) == 0 else None


def real_roots(p: Poly) -> list[Scalar]:
    """Real roots of a polynomial of degree <= 3, ascending.

    Exact cubics are solved numerically first; a float root that snaps to an
    exact rational root lets the rest be recovered exactly by deflation.
    """
    p = p.trimmed()
    if p.degree <= 0:
        return []
    if p.degree == 1:
        return [simplify(-p.coeffs[0] / p.coeffs[1])]
    if p.degree == 2:
        return solve_quadratic(p)
    if p.degree > 3:
        raise ValueError(f"degree {p.degree} polynomials are out of scope")
    approx = solve_cubic_real(p)
    if p.is_exact:
        for guess in approx:
            root = _snap_rational_root(p, guess)
            if root is not None:
                rest = real_roots(deflate(p, root))
                return sorted([root, *rest], key=float)
        logger.debug("cubic %s has no snappable rational root; roots stay numeric", p)
    return approx
