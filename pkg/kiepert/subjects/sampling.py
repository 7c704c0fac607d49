import logging
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..centers import Triangle, fermat_pair
from ..collineation import UNIT_CIRCLE, Homography
from ..conics import Conic
from ..errors import KiepertError, PreconditionError
from ..kiepert_yiu import hessian_line
from ..numeric.linalg import Matrix3
from ..projective import Point

logger = logging.getLogger(__name__)

EXTENT = 10.0
MIN_SIDE_GAP = 0.05
MIN_ANGLE_DEG = 10.0
MIN_FERMAT_SEPARATION = 1e-2
MAX_CONDITION = 1e3
MIN_ARC_GAP = 0.5
# |w| / |(x, y, w)| below this counts as too close to the line at infinity
MIN_W_RATIO = 0.1
MAX_DRAWS = 1000


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream per trial, so trials can run in any order."""
    return np.random.default_rng([seed, index])


def well_conditioned(xy: npt.NDArray[np.float64]) -> bool:
    """Not nearly isoceles and no angle below MIN_ANGLE_DEG."""
    edges = np.roll(xy, -1, axis=0) - xy
    sides = np.sort(np.sum(edges**2, axis=1))
    if sides[0] <= 0 or np.min(np.diff(sides)) / sides[-1] < MIN_SIDE_GAP:
        return False
    u = np.roll(xy, -1, axis=0) - xy
    v = np.roll(xy, 1, axis=0) - xy
    cos = np.sum(u * v, axis=1) / (np.linalg.norm(u, axis=1) * np.linalg.norm(v, axis=1))
    angles = np.degrees(np.arccos(np.clip(cos, -1.0, 1.0)))
    return bool(angles.min() >= MIN_ANGLE_DEG)


def random_scalene_triangle(rng: np.random.Generator, extent: float = EXTENT) -> Triangle:
    """Uniform vertices in [-extent, extent]^2, redrawn until well conditioned."""
    for _ in range(MAX_DRAWS):
        xy = rng.uniform(-extent, extent, size=(3, 2))
        if not well_conditioned(xy):
            continue
        t = Triangle(*(Point.affine(float(x), float(y)) for x, y in xy))
        longest = max(float(s) for s in t.side_sq)
        if float(fermat_pair(t).separation_sq) < MIN_FERMAT_SEPARATION**2 * longest:
            continue
        return t
    raise PreconditionError(f"no well-conditioned triangle in {MAX_DRAWS} draws")


def random_homography(rng: np.random.Generator, spread: float = 0.3) -> Homography:
    """Identity plus Gaussian noise, redrawn while badly conditioned."""
    for _ in range(MAX_DRAWS):
        m = np.eye(3) + spread * rng.normal(size=(3, 3))
        if np.linalg.cond(m) < MAX_CONDITION:
            return Homography(_matrix(m))
    raise PreconditionError("no well-conditioned homography")


def _matrix(m: npt.NDArray[np.float64]) -> Matrix3:
    (a, b, c), (d, e, f), (g, h, i) = m.tolist()
    return ((a, b, c), (d, e, f), (g, h, i))


def _far_from_infinity(p: Point) -> bool:
    w = abs(float(p.w))
    return w >= MIN_W_RATIO * math.sqrt(sum(float(c) ** 2 for c in p.coords))


def _unit(p: Point) -> npt.NDArray[np.float64]:
    v = np.array([float(c) for c in p.coords])
    return v / np.linalg.norm(v)


@dataclass(frozen=True, eq=False)
class InscribedInstance:
    conic: Conic
    triangle: Triangle
    hessian_point: Point


def random_inscribed(rng: np.random.Generator) -> InscribedInstance:
    """A projective image of the unit circle, a triangle on it and a point of its Hessian line."""
    for _ in range(MAX_DRAWS):
        h = random_homography(rng)
        theta = np.sort(rng.uniform(0.0, 2 * math.pi, size=3))
        gaps = np.diff(np.concatenate([theta, [theta[0] + 2 * math.pi]]))
        if gaps.min() < MIN_ARC_GAP:
            continue
        images = [h.apply(Point(float(math.cos(a)), float(math.sin(a)), 1.0)) for a in theta]
        if not all(_far_from_infinity(p) for p in images):
            continue
        try:
            k = h.apply_conic(UNIT_CIRCLE)
            t = Triangle(*images)
            hessian = hessian_line(k, t)
        except KiepertError as exc:
            logger.debug("rejected inscribed draw: %s", exc)
            continue
        meets = [_unit(p) for p in hessian.points]
        phi = rng.uniform(0.0, math.pi)
        s = math.cos(phi) * meets[0] + math.sin(phi) * meets[1]
        s /= np.linalg.norm(s)
        # s must stay clear of the tangent meets, where a chord through s is tangent
        if min(np.linalg.norm(np.cross(s, m)) for m in meets) < 0.05:
            continue
        return InscribedInstance(k, t, Point(*(float(c) for c in s)))
    raise PreconditionError("no usable inscribed instance")


def conjugating_homography(rng: np.random.Generator, inst: InscribedInstance) -> Homography:
    """Random homography keeping the triangle's image away from the line at infinity."""
    for _ in range(MAX_DRAWS):
        g = random_homography(rng)
        if all(_far_from_infinity(g.apply(v)) for v in inst.triangle.vertices):
            return g
    raise PreconditionError("no conjugating homography keeps the triangle finite")


@dataclass(frozen=True)
class SceneSource:
    """Either an explicit triangle or the seed and index of a random one."""

    seed: int
    index: int
    explicit: Triangle | None = None

    def triangle(self) -> Triangle:
        if self.explicit is not None:
            return self.explicit
        return random_scalene_triangle(trial_rng(self.seed, self.index))
