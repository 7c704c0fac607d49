"""Scalar tiers: exact rationals, exact Q(sqrt(3)) and tolerance-governed floats."""

import logging
import math
import re
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Union

from .approx import DEFAULT_EPS, ApproxReal, Check, Tolerance, current_tolerance, tolerance
from .quadext import SQRT3, QuadExt, format_fraction, rational_sqrt

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, QuadExt, float]

__all__ = [
    "DEFAULT_EPS",
    "SQRT3",
    "ApproxReal",
    "Check",
    "QuadExt",
    "Scalar",
    "Tolerance",
    "check_proportional",
    "check_zero",
    "current_tolerance",
    "exact",
    "format_fraction",
    "is_exact",
    "is_zero",
    "norm",
    "parse_scalar",
    "sign_of",
    "simplify",
    "sqrt",
    "tolerance",
]


def is_exact(*values: Scalar) -> bool:
    return not any(isinstance(v, float) for v in values)


def exact(value: Scalar) -> Scalar:
    """Promote ints to Fractions; leave other tiers alone."""
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


def simplify(value: Scalar) -> Scalar:
    """Collapse a QuadExt with no sqrt(3) part to a plain Fraction."""
    if isinstance(value, QuadExt) and value.is_rational:
        return value.a
    return exact(value)


def is_zero(value: Scalar, scale: float | None = None) -> bool:
    """Exact tiers compare with 0; floats use eps * scale."""
    if isinstance(value, float):
        tol = current_tolerance()
        return ApproxReal(value, tol.scale if scale is None else scale).is_zero(tol.eps)
    return value == 0


def sign_of(value: Scalar, scale: float | None = None) -> int:
    if isinstance(value, QuadExt):
        return value.sign()
    if isinstance(value, float):
        tol = current_tolerance()
        return ApproxReal(value, tol.scale if scale is None else scale).sign(tol.eps)
    return (value > 0) - (value < 0)


def sqrt(value: Scalar) -> Scalar:
    """Square root that stays exact while the result lies in Q(sqrt(3))."""
    if isinstance(value, float):
        return math.sqrt(max(value, 0.0))
    root = QuadExt.coerce(exact(value)).sqrt()
    if root is None:
        logger.debug("sqrt(%s) leaves Q(sqrt(3)); falling back to float", value)
        return math.sqrt(max(float(value), 0.0))
    return simplify(root)


def norm(values: Iterable[Scalar]) -> float:
    return math.sqrt(sum(float(v) ** 2 for v in values))


def check_zero(value: Scalar, normalizer: float = 1.0) -> Check:
    """Verdict on value == 0 with the residual |value| / normalizer."""
    residual = abs(float(value))
    if normalizer > 0:
        residual /= normalizer
    if is_exact(value):
        return Check(passed=value == 0, residual=residual)
    return Check(passed=residual <= current_tolerance().eps, residual=residual)


def check_proportional(u: Sequence[Scalar], v: Sequence[Scalar]) -> Check:
    """Are two coefficient vectors equal up to a nonzero scale?

    The residual is the sine of the angle between them.
    """
    minors = [u[i] * v[j] - u[j] * v[i] for i in range(len(u)) for j in range(i + 1, len(u))]
    denom = norm(u) * norm(v)
    residual = norm(minors) / denom if denom > 0 else math.inf
    if is_exact(*u, *v):
        return Check(passed=all(m == 0 for m in minors), residual=residual)
    return Check(passed=residual <= current_tolerance().eps, residual=residual)


# one signed term: "3", "-1/2", "2.5", "3/4*sqrt3", "sqrt(3)/2", "+2sqrt3"
_TERM = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?P<coef>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?)?"
    r"(?P<root>\*?(?:sqrt3|sqrt\(3\)))?"
    r"(?:/(?P<rden>\d+))?"
)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ZeroDivisionError as e:
        raise ValueError(f"zero denominator in {text!r}") from e


def parse_scalar(text: str) -> Scalar:
    """Parse "p/q", "1.5" (exact) or sums of such terms and multiples of sqrt3.

    Rejects any input that is not consumed entirely.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty number")
    a = b = Fraction(0)
    has_root = False
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
        sign, coef, root, rden = m.group("sign", "coef", "root", "rden")
        if pos > 0 and not sign:
            raise ValueError(f"missing operator before {s[pos:]!r} in {text!r}")
        if not coef and not root:
            raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
        if (root and root.startswith("*") and not coef) or (rden and not root):
            raise ValueError(f"malformed term {m.group(0)!r} in {text!r}")
        value = _rational(coef) if coef else Fraction(1)
        if rden:
            if int(rden) == 0:
                raise ValueError(f"zero denominator in {text!r}")
            value /= int(rden)
        if sign == "-":
            value = -value
        if root:
            b += value
            has_root = True
        else:
            a += value
        pos = m.end()
    return QuadExt(a, b) if has_root else a
