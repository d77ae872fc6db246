"""Exception types shared across the package."""


class SolitonLabError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SolitonLabError):
    """Evaluation requested at (or too close to) an excluded point."""


class DegenerateError(SolitonLabError):
    """Tangent plane is lightlike: no unit normal / second form there."""


class UnsupportedEvaluator(SolitonLabError):
    """Field evaluator does not admit complex substitution."""


class PathError(SolitonLabError):
    """No pole-avoiding integration path within the detour budget."""


class UnknownSurface(SolitonLabError):
    """Requested catalog surface name does not exist."""


class ExcludedPoint(SolitonLabError):
    """Identity arguments violate the validity hypotheses."""


class JacobianSingular(SolitonLabError):
    """Graph projection of a parametrized surface degenerates at a point."""
