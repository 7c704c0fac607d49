class KiepertError(Exception):
    """Base class for every error raised by the kiepert package."""


class PreconditionError(KiepertError):
    """An input violates an operation's contract (CLI exit code 2)."""


class VerificationError(KiepertError):
    """A computed certificate failed its check (CLI exit code 1)."""


# numeric kernel
class DegenerateLeadingCoefficient(PreconditionError):
    pass


class NotARoot(VerificationError):
    pass


# projective core
class IdenticalElements(PreconditionError):
    pass


class CoincidentFermatPoints(PreconditionError):
    pass


# conics
class NoUniqueConic(PreconditionError):
    pass


class DegenerateConic(PreconditionError):
    pass


class NotCentral(PreconditionError):
    pass


class PointNotOnConic(PreconditionError):
    pass


class PoleUndefined(PreconditionError):
    pass


class ConcentricCircles(PreconditionError):
    pass


class FewerThanThreeRealIntersections(VerificationError):
    pass


# triangle centers
class DegenerateTriangle(PreconditionError):
    pass


class LinesNotConcurrent(VerificationError):
    pass


# kiepert / yiu constructions
class NotScalene(PreconditionError):
    pass


class SceneInvariantViolated(VerificationError):
    pass


class NotPerspective(VerificationError):
    pass


class NotTriplyPerspective(VerificationError):
    pass


class DegenerateHexagon(PreconditionError):
    pass


# oracle
class DegenerateParameter(PreconditionError):
    pass


class DegenerateParameters(DegenerateParameter):
    pass


class OracleFormulaMismatch(VerificationError):
    pass


# collineation
class DegenerateFrame(PreconditionError):
    pass


class TangentChord(PreconditionError):
    pass


class NotOnHessianLine(PreconditionError):
    pass


# reconstruction
class VertexNotOnConic(PreconditionError):
    pass


class DegenerateScene(VerificationError):
    pass


class NoValidCandidate(VerificationError):
    def __init__(self, message: str, result: object | None = None) -> None:
        super().__init__(message)
        self.result = result


# cli
class SceneFormatError(PreconditionError):
    pass


class ConfigError(PreconditionError):
    """Unusable settings from the config file, KIEPERT_TOL or --tol."""
