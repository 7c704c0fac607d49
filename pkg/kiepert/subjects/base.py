import argparse
import asyncio
import logging
from abc import ABC, abstractmethod
from typing import Any

from ..config import KiepertConfig
from ..errors import PreconditionError, VerificationError
from ..formatter import check_model
from ..models import TrialReport, VerifyReport
from ..numeric import Check, tolerance

logger = logging.getLogger(__name__)


def trial_report(
    index: int, checks: dict[str, Check], notes: dict[str, str] | None = None
) -> TrialReport:
    return TrialReport(
        index=index,
        passed=all(checks.values()),
        checks=[check_model(name, check) for name, check in checks.items()],
        notes=notes or {},
    )


class BaseSubject(ABC):
    """Abstract base class for `verify` subjects."""

    def __init__(self, config: KiepertConfig, eps: float) -> None:
        self.config = config
        self.eps = eps

    @property
    @abstractmethod
    def name(self) -> str:
        """Subject name as typed after `verify`."""
        pass

    @abstractmethod
    def plan(self, args: argparse.Namespace) -> list[Any]:
        """Parameters of every trial, in report order."""
        pass

    @abstractmethod
    def run_trial(self, index: int, params: Any) -> TrialReport:
        """Run one trial and collect its certificates."""
        pass

    def describe(self, args: argparse.Namespace) -> dict[str, Any]:
        """Parameters echoed at the top of the report."""
        return {}

    def given_input(self, args: argparse.Namespace) -> bool:
        """True when the trial parameters came from the command line."""
        return False

    def _guarded(self, index: int, params: Any, strict: bool) -> TrialReport:
        logger.info("Verifying %s trial %d...", self.name, index)
        # bad user input aborts the run; a degenerate generated case only fails its trial
        caught: tuple[type[Exception], ...] = (
            (VerificationError,) if strict else (VerificationError, PreconditionError)
        )
        with tolerance(self.eps):
            try:
                return self.run_trial(index, params)
            except caught as exc:
                logger.info("%s trial %d failed: %s", self.name, index, exc)
                return TrialReport(
                    index=index, passed=False, error=f"{type(exc).__name__}: {exc}"
                )

    async def verify(self, args: argparse.Namespace) -> VerifyReport:
        """Fan the trials out to worker threads; the report keeps plan order."""
        plan = self.plan(args)
        strict = self.given_input(args)
        trials = await asyncio.gather(
            *(
                asyncio.to_thread(self._guarded, i, params, strict)
                for i, params in enumerate(plan)
            )
        )
        return VerifyReport(
            subject=self.name, tolerance=self.eps, params=self.describe(args), trials=list(trials)
        )
