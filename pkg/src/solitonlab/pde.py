"""Residual evaluators for the three graph PDEs, the Wick-rotation operators
connecting their solution sets, and the catalog of exact solutions.

The three equations, for a field u(a, b) with jets taken in (a, b):

* Born-Infeld:  (1 + u_a^2) u_bb - 2 u_a u_b u_ab + (u_b^2 - 1) u_aa = 0
* maximal:      (1 - u_a^2) u_bb + 2 u_a u_b u_ab + (1 - u_b^2) u_aa = 0
* minimal:      (1 + u_a^2) u_bb - 2 u_a u_b u_ab + (1 + u_b^2) u_aa = 0

Substituting a -> i a carries maximal solutions to Born-Infeld solutions and
back; substituting b -> i b does the same for minimal solutions.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import jetmath as jm
from .core import Backend, ExactJet, Jet2, ScalarField2, jet
from .errors import UnknownSurface, UnsupportedEvaluator

DEFAULT_MARGIN = 1e-2


class Equation(enum.Enum):
    BORN_INFELD = "born_infeld"
    MAXIMAL = "maximal"
    MINIMAL = "minimal"


@dataclass(frozen=True)
class Realness:
    """Whether a catalog solution is real-valued, and where."""

    kind: str  # "real" | "complex" | "conditional"
    predicate: Optional[Callable[[float, float], bool]] = None


REAL = Realness("real")
COMPLEX = Realness("complex")


@dataclass(frozen=True)
class SolutionEntry:
    name: str
    field: ScalarField2
    equation: Equation
    domain_note: str
    realness: Realness


def _residual_from_jet(j: Jet2, equation: Equation) -> complex:
    if equation is Equation.BORN_INFELD:
        return (1 + j.vx ** 2) * j.vtt - 2 * j.vx * j.vt * j.vxt + (j.vt ** 2 - 1) * j.vxx
    if equation is Equation.MAXIMAL:
        return (1 - j.vx ** 2) * j.vtt + 2 * j.vx * j.vt * j.vxt + (1 - j.vt ** 2) * j.vxx
    return (1 + j.vx ** 2) * j.vtt - 2 * j.vx * j.vt * j.vxt + (1 + j.vt ** 2) * j.vxx


def born_infeld_residual(fld: ScalarField2, a: float, b: float) -> complex:
    return _residual_from_jet(jet(fld, a, b), Equation.BORN_INFELD)


def maximal_residual(fld: ScalarField2, a: float, b: float) -> complex:
    return _residual_from_jet(jet(fld, a, b), Equation.MAXIMAL)


def minimal_residual(fld: ScalarField2, a: float, b: float) -> complex:
    return _residual_from_jet(jet(fld, a, b), Equation.MINIMAL)


def gradient_spacelike(fld: ScalarField2, a: float, b: float) -> bool:
    """Whether u_a^2 + u_b^2 < 1 at (a, b); meaningful for real-valued fields."""
    j = jet(fld, a, b)
    return j.vx.real ** 2 + j.vt.real ** 2 < 1.0


def equation_residual(fld: ScalarField2, equation: Equation, a: float, b: float) -> complex:
    return _residual_from_jet(jet(fld, a, b), equation)


# -- Wick rotations -------------------------------------------------------

def _require_exact(fld: ScalarField2, what: str) -> None:
    if not isinstance(fld.backend, ExactJet):
        raise UnsupportedEvaluator(
            f"{what} needs an ExactJet-backed evaluator so the complex "
            "substitution is well-defined"
        )


def wick_rotate_x(fld: ScalarField2,
                  exclusions: Optional[Callable[[float, float], bool]] = None) -> ScalarField2:
    """The field (a, b) -> fld(i a, b).  Maps maximal solutions to Born-Infeld
    solutions and conversely."""
    _require_exact(fld, "wick_rotate_x")
    ev = fld.evaluator
    return ScalarField2(lambda a, b: ev(1j * a, b), fld.backend, exclusions)


def wick_rotate_t(fld: ScalarField2,
                  exclusions: Optional[Callable[[float, float], bool]] = None) -> ScalarField2:
    """The field (a, b) -> fld(a, i b).  Maps Born-Infeld solutions to minimal
    solutions and conversely."""
    _require_exact(fld, "wick_rotate_t")
    ev = fld.evaluator
    return ScalarField2(lambda a, b: ev(a, 1j * b), fld.backend, exclusions)


# -- grids and reports -----------------------------------------------------

@dataclass(frozen=True)
class GridSpec:
    a_min: float
    a_max: float
    b_min: float
    b_max: float
    na: int
    nb: int

    def __post_init__(self):
        if self.na < 2 or self.nb < 2:
            raise ValueError("grid needs at least 2 points per axis")

    def points(self):
        da = (self.a_max - self.a_min) / (self.na - 1)
        db = (self.b_max - self.b_min) / (self.nb - 1)
        return [(self.a_min + i * da, self.b_min + j * db)
                for i in range(self.na) for j in range(self.nb)]

    def step(self) -> float:
        return max((self.a_max - self.a_min) / (self.na - 1),
                   (self.b_max - self.b_min) / (self.nb - 1))

    def as_text(self) -> str:
        return (f"{self.a_min:g}:{self.a_max:g}:{self.b_min:g}:{self.b_max:g}"
                f":{self.na}:{self.nb}")

    @staticmethod
    def parse(text: str) -> "GridSpec":
        parts = text.split(":")
        if len(parts) != 6:
            raise ValueError("grid spec must be a_min:a_max:b_min:b_max:na:nb")
        return GridSpec(float(parts[0]), float(parts[1]), float(parts[2]),
                        float(parts[3]), int(parts[4]), int(parts[5]))


@dataclass
class ResidualReport:
    grid: list
    residuals: list
    max_abs: float
    backend: str
    excluded_count: int
    name: str = ""
    equation: str = ""
    grid_spec: str = ""
    worst_point: Optional[tuple] = None

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "equation": self.equation,
            "backend": self.backend,
            "grid_spec": self.grid_spec,
            "max_abs": self.max_abs,
            "worst_point": list(self.worst_point) if self.worst_point else None,
            "excluded_count": self.excluded_count,
        }


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SOLITON_LAB_THREADS", "1")))
    except ValueError:
        return 1


def residual_sweep(fld: ScalarField2, equation: Equation, grid: GridSpec,
                   name: str = "") -> ResidualReport:
    """Evaluate the residual of ``equation`` over the grid, skipping excluded
    points.  Deterministic: output order is grid order regardless of workers."""
    pts = grid.points()
    kept = [p for p in pts if not fld.excluded(*p)]
    excluded = len(pts) - len(kept)

    def one(p):
        return equation_residual(fld, equation, p[0], p[1])

    workers = _worker_count()
    if workers > 1 and len(kept) > 64:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            residuals = list(ex.map(one, kept))
    else:
        residuals = [one(p) for p in kept]

    max_abs, worst = 0.0, None
    for p, r in zip(kept, residuals):
        if abs(r) >= max_abs:
            max_abs, worst = abs(r), p
    backend = "exact" if isinstance(fld.backend, ExactJet) else f"central(h={fld.backend.h:g})"
    return ResidualReport(kept, residuals, max_abs, backend, excluded,
                          name=name, equation=equation.value,
                          grid_spec=grid.as_text(), worst_point=worst)


# -- catalog ---------------------------------------------------------------

def _field(ev, exclusions=None, backend: Backend = None) -> ScalarField2:
    return ScalarField2(ev, backend or ExactJet(), exclusions)


def helicoid_first_kind_field(k: float = 1.0, margin: float = DEFAULT_MARGIN) -> ScalarField2:
    return _field(lambda a, b: jm.atan(b / a) / k,
                  lambda a, b: abs(a) <= margin)


def helicoid_second_kind_field(k: float = 1.0) -> ScalarField2:
    return _field(lambda a, b: a * jm.tanh(k * b))


def lorentzian_catenoid_field(margin: float = DEFAULT_MARGIN) -> ScalarField2:
    return _field(lambda a, b: jm.asinh(jm.sqrt(a * a + b * b)),
                  lambda a, b: a * a + b * b <= margin * margin)


def scherk_first_kind_field() -> ScalarField2:
    return _field(lambda a, b: jm.log(jm.cosh(b)) - jm.log(jm.cosh(a)))


def wick_helicoid_first_kind_field(k: float = 1.0, margin: float = DEFAULT_MARGIN) -> ScalarField2:
    return _field(lambda a, b: -1j / k * jm.atanh(b / a),
                  lambda a, b: abs(a) <= margin or abs(b) >= abs(a) * (1 - margin))


def wick_helicoid_second_kind_field(k: float = 1.0) -> ScalarField2:
    return _field(lambda a, b: 1j * a * jm.tanh(k * b))


def wick_scherk_field(margin: float = DEFAULT_MARGIN) -> ScalarField2:
    return _field(lambda a, b: jm.log(jm.cosh(b)) - jm.log(jm.cos(a)),
                  lambda a, b: abs(math.cos(a)) <= margin)


def wick_lorentzian_catenoid_field(margin: float = DEFAULT_MARGIN) -> ScalarField2:
    # Wick rotation of the Lorentzian catenoid; real where |b| > |a|.
    return _field(lambda a, b: jm.asinh(jm.sqrt(b * b - a * a)),
                  lambda a, b: abs(b) - abs(a) <= margin)


def helicoid_minimal_field(margin: float = DEFAULT_MARGIN) -> ScalarField2:
    return _field(lambda a, b: jm.atan(b / a),
                  lambda a, b: abs(a) <= margin)


def scherk_minimal_field(margin: float = DEFAULT_MARGIN) -> ScalarField2:
    return _field(lambda a, b: jm.log(jm.cos(b)) - jm.log(jm.cos(a)),
                  lambda a, b: abs(math.cos(a)) <= margin or abs(math.cos(b)) <= margin)


_CATALOG_BUILDERS = {
    "helicoid_first_kind": (
        helicoid_first_kind_field, Equation.MAXIMAL,
        "a != 0; k != 0 (default 1)", REAL),
    "helicoid_second_kind": (
        helicoid_second_kind_field, Equation.MAXIMAL, "entire plane", REAL),
    "lorentzian_catenoid": (
        lorentzian_catenoid_field, Equation.MAXIMAL, "(a, b) != (0, 0)", REAL),
    "scherk_first_kind": (
        scherk_first_kind_field, Equation.MAXIMAL, "entire plane", REAL),
    "wick_helicoid_first_kind": (
        wick_helicoid_first_kind_field, Equation.BORN_INFELD,
        "|b| < |a| (conservative implementation choice)", COMPLEX),
    "wick_helicoid_second_kind": (
        wick_helicoid_second_kind_field, Equation.BORN_INFELD, "entire plane", COMPLEX),
    "wick_scherk": (
        wick_scherk_field, Equation.BORN_INFELD, "cos a != 0",
        Realness("conditional", lambda a, b: math.cos(a) > 0)),
    "wick_lorentzian_catenoid": (
        wick_lorentzian_catenoid_field, Equation.BORN_INFELD, "|b| > |a|", REAL),
    "helicoid_minimal": (
        helicoid_minimal_field, Equation.MINIMAL, "a != 0", REAL),
    "scherk_minimal": (
        scherk_minimal_field, Equation.MINIMAL, "cos a != 0, cos b != 0", REAL),
}

# Default sweep grids keep a safe distance from each entry's singular locus.
DEFAULT_GRIDS = {
    "helicoid_first_kind": GridSpec(0.5, 2.5, -1.0, 1.0, 41, 41),
    "helicoid_second_kind": GridSpec(-1.0, 1.0, -1.0, 1.0, 41, 41),
    "lorentzian_catenoid": GridSpec(0.5, 2.0, -1.0, 1.0, 41, 41),
    "scherk_first_kind": GridSpec(-1.0, 1.0, -1.0, 1.0, 41, 41),
    "wick_helicoid_first_kind": GridSpec(1.0, 3.0, -0.6, 0.6, 41, 41),
    "wick_helicoid_second_kind": GridSpec(-1.0, 1.0, -1.0, 1.0, 41, 41),
    "wick_scherk": GridSpec(-1.2, 1.2, -1.0, 1.0, 41, 41),
    "wick_lorentzian_catenoid": GridSpec(-0.8, 0.8, 1.0, 3.0, 41, 41),
    "helicoid_minimal": GridSpec(0.5, 2.5, -1.0, 1.0, 41, 41),
    "scherk_minimal": GridSpec(-1.0, 1.0, -1.0, 1.0, 41, 41),
}

# Grids on which the x-Wick rotation of each maximal entry stays finite.
WICK_GRIDS = {
    "helicoid_first_kind": GridSpec(1.0, 3.0, -0.8, 0.8, 21, 21),
    "helicoid_second_kind": GridSpec(-1.0, 1.0, -1.0, 1.0, 21, 21),
    "lorentzian_catenoid": GridSpec(-0.8, 0.8, 1.0, 3.0, 21, 21),
    "scherk_first_kind": GridSpec(-1.2, 1.2, -1.0, 1.0, 21, 21),
}


def catalog_names() -> list:
    return sorted(_CATALOG_BUILDERS)


def solution(name: str, k: float = 1.0, margin: float = DEFAULT_MARGIN) -> SolutionEntry:
    """Build a catalog entry; ``k`` feeds the helicoid families, others ignore it."""
    try:
        builder, eqn, note, realness = _CATALOG_BUILDERS[name]
    except KeyError:
        raise UnknownSurface(f"no catalog solution named {name!r}") from None
    kwargs = {}
    code = builder.__code__
    if "k" in code.co_varnames[:code.co_argcount]:
        kwargs["k"] = k
    if "margin" in code.co_varnames[:code.co_argcount]:
        kwargs["margin"] = margin
    return SolutionEntry(name, builder(**kwargs), eqn, note, realness)


def catalog() -> list:
    return [solution(n) for n in catalog_names()]
