from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator


class CheckModel(BaseModel):
    """One named verdict with the residual it was decided on."""
    name: str
    passed: bool
    residual: float


class TrialReport(BaseModel):
    """Outcome of one verification trial."""
    index: int
    passed: bool
    checks: list[CheckModel] = []
    notes: dict[str, str] = {}
    error: str | None = None


class VerifyReport(BaseModel):
    """Aggregated report for `verify <subject>`."""
    subject: str
    tolerance: float
    params: dict[str, Any] = {}
    trials: list[TrialReport] = []

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.trials)


class SceneModel(BaseModel):
    """Serializable Yiu scene; scalars use the exact or decimal JSON encodings."""
    triangle: list[Any]
    fermat: dict[str, Any]
    conic: dict[str, Any]
    yiu: dict[str, Any]
    frame: dict[str, Any] = {}
    perspectors: dict[str, list[Any]] = {}
    axes: dict[str, Any] = {}
    certificates: list[CheckModel] = []


class AttemptModel(BaseModel):
    yiu_vertex: Any
    v: Any = None
    triangle: list[Any] | None = None
    checks: list[CheckModel] = []
    error: str | None = None
    valid: bool = False


class ReconstructionReport(BaseModel):
    vertex: Any
    fermat: dict[str, Any]
    center: Any
    pqr: list[Any]
    candidates: list[list[Any]] = []
    multiplicity: list[int] = []
    unique: bool = False
    attempts: list[AttemptModel] = []


class FigureSpec(BaseModel):
    """What to draw and where; the viewport is in scene coordinates."""
    kind: Literal["yiu", "construction"] = "yiu"
    width: int = Field(default=800, gt=0)
    height: int = Field(default=800, gt=0)
    padding: float = Field(default=0.15, ge=0)
    viewport: tuple[float, float, float, float] | None = None
    styles: dict[str, str] = {
        "conic": "fill:none;stroke:#1f4e9c;stroke-width:1.6",
        "circle": "fill:none;stroke:#8a8a8a;stroke-width:1;stroke-dasharray:5,3",
        "reference": "fill:none;stroke:#000000;stroke-width:1.4",
        "yiu": "fill:none;stroke:#c0392b;stroke-width:1.4",
        "radical_axis": "fill:none;stroke:#27ae60;stroke-width:1;stroke-dasharray:2,2",
        "perspector_axis": "fill:none;stroke:#8e44ad;stroke-width:1",
        "construction": "fill:none;stroke:#d35400;stroke-width:1;stroke-dasharray:4,2",
        "labels": "font-family:sans-serif;font-size:12px;fill:#222222",
    }

    @model_validator(mode="after")
    def _viewport_nonempty(self) -> "FigureSpec":
        if self.viewport is not None:
            xmin, ymin, xmax, ymax = self.viewport
            if not (xmax > xmin and ymax > ymin):
                raise ValueError("viewport must have positive width and height")
        return self
