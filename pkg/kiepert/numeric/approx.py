"""Tolerance-governed real numbers and the active tolerance context."""

from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_EPS = 1e-9


class Tolerance(BaseModel):
    """Relative tolerance policy: a value is zero when |value| <= eps * scale."""

    model_config = ConfigDict(frozen=True)

    eps: float = Field(default=DEFAULT_EPS, gt=0)
    scale: float = Field(default=1.0, gt=0)

    @property
    def threshold(self) -> float:
        return self.eps * self.scale


_current: ContextVar[Tolerance] = ContextVar("kiepert_tolerance", default=Tolerance())


def current_tolerance() -> Tolerance:
    return _current.get()


@contextmanager
def tolerance(eps: float | None = None, scale: float | None = None) -> Iterator[Tolerance]:
    """Temporarily override the active tolerance for the current context."""
    base = _current.get()
    active = Tolerance(
        eps=base.eps if eps is None else eps,
        scale=base.scale if scale is None else scale,
    )
    token = _current.set(active)
    try:
        yield active
    finally:
        _current.reset(token)


@dataclass(frozen=True, slots=True)
class ApproxReal:
    """A double paired with the geometric extent it is measured against."""

    value: float
    scale: float = 1.0

    def is_zero(self, eps: float | None = None) -> bool:
        eps = current_tolerance().eps if eps is None else eps
        return abs(self.value) <= eps * self.scale

    def sign(self, eps: float | None = None) -> int:
        if self.is_zero(eps):
            return 0
        return 1 if self.value > 0 else -1

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True, slots=True)
class Check:
    """A verdict together with the scale-free residual it was decided on."""

    passed: bool
    residual: float

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def all_of(cls, checks: "list[Check]") -> "Check":
        return cls(
            passed=all(c.passed for c in checks),
            residual=max((c.residual for c in checks), default=0.0),
        )
