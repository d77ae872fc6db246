"""Lorentzian geometry of graphs X(y, z) = (phi(y, z), y, z) over the
timelike plane {x = 0} of L^3, plus isothermal-immersion checks for
parametrized surfaces.

With W := 1 + phi_y^2 - phi_z^2 the graph is timelike where W > 0, spacelike
where W < 0, and its tangent plane degenerates (lightlike) where W = 0.  The
first-form determinant is EG - F^2 = -W.  Wherever W != 0 the mean curvature
reduces to a single formula

    H = -(1/2) * N_BI / |W|^(3/2),

where N_BI = (1 + phi_y^2) phi_zz - 2 phi_y phi_z phi_yz + (phi_z^2 - 1) phi_yy
is the Born-Infeld numerator; H = 0 is exactly the Born-Infeld equation in
the graph variables.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .core import Jet2, LVec3, ScalarField2, jet, lorentz_inner
from .errors import DegenerateError, DomainError
from .jetmath import TJet
from .pde import GridSpec, wick_lorentzian_catenoid_field

TOL_DEGENERATE = 1e-9  # far above roundoff, far below grid-scale variation
_REAL_TOL = 1e-9


class CausalClass(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


@dataclass(frozen=True)
class FundForms:
    E: float
    F: float
    G: float
    e: float
    f2: float
    g: float
    disc: float  # EG - F^2


@dataclass(frozen=True)
class GraphPointReport:
    point: tuple
    forms: Optional[FundForms]
    causal: CausalClass
    normal: Optional[LVec3]
    H: Optional[float]

    def to_json_dict(self) -> dict:
        return {
            "point": list(self.point),
            "causal": self.causal.value,
            "forms": None if self.forms is None else {
                "E": self.forms.E, "F": self.forms.F, "G": self.forms.G,
                "e": self.forms.e, "f2": self.forms.f2, "g": self.forms.g,
                "disc": self.forms.disc,
            },
            "normal": None if self.normal is None else [self.normal.x, self.normal.y, self.normal.z],
            "H": self.H,
        }


def _real(v: complex, what: str) -> float:
    if abs(v.imag) > _REAL_TOL * (1.0 + abs(v.real)):
        raise DomainError(f"{what} is not real-valued here (imag={v.imag:g})")
    return v.real


def _real_jet(fld: ScalarField2, y: float, z: float) -> Jet2:
    j = jet(fld, y, z)
    _real(j.v, "field value")
    return j


def timelike_indicator(fld: ScalarField2, y: float, z: float) -> float:
    """W = 1 + phi_y^2 - phi_z^2; sign gives the causal character."""
    j = _real_jet(fld, y, z)
    return _real(1 + j.vx ** 2 - j.vt ** 2, "causal indicator")


def _jet_off_degenerate(fld: ScalarField2, y: float, z: float, tol: float):
    """(jet, W) at a non-degenerate point; DegenerateError when |W| <= tol or
    when the gradient itself blows up (which on a graph happens exactly where
    the tangent plane degenerates)."""
    try:
        j = _real_jet(fld, y, z)
        w = _real(1 + j.vx ** 2 - j.vt ** 2, "causal indicator")
    except (ZeroDivisionError, ValueError, OverflowError) as exc:
        raise DegenerateError(f"jet is singular at ({y}, {z}); gradient blows up "
                              "on the degenerate set") from exc
    if abs(w) <= tol:
        raise DegenerateError(f"tangent plane degenerates at ({y}, {z}): "
                              f"|1 + phi_y^2 - phi_z^2| = {abs(w):g}")
    return j, w


def fundamental_forms(fld: ScalarField2, y: float, z: float,
                      tol: float = TOL_DEGENERATE) -> FundForms:
    j, w = _jet_off_degenerate(fld, y, z, tol)
    py, pz = j.vx.real, j.vt.real
    s = math.sqrt(abs(w))
    E = py * py + 1.0
    G = pz * pz - 1.0
    F = py * pz
    return FundForms(E=E, F=F, G=G,
                     e=j.vxx.real / s, f2=j.vxt.real / s, g=j.vtt.real / s,
                     disc=E * G - F * F)


def causal_classify(fld: ScalarField2, y: float, z: float,
                    tol: float = TOL_DEGENERATE) -> CausalClass:
    """Timelike if W > tol, spacelike if W < -tol, else lightlike.

    Points where the jet cannot be computed as a finite real number (the
    gradient of a graph blows up exactly where its tangent plane degenerates)
    classify as lightlike rather than raising.
    """
    try:
        j = jet(fld, y, z)
        w = 1 + j.vx ** 2 - j.vt ** 2
    except (DomainError, ZeroDivisionError, ValueError, OverflowError):
        return CausalClass.LIGHTLIKE
    if abs(w.imag) > _REAL_TOL * (1.0 + abs(w.real)) or not math.isfinite(w.real):
        return CausalClass.LIGHTLIKE
    if w.real > tol:
        return CausalClass.TIMELIKE
    if w.real < -tol:
        return CausalClass.SPACELIKE
    return CausalClass.LIGHTLIKE


def unit_normal(fld: ScalarField2, y: float, z: float,
                tol: float = TOL_DEGENERATE) -> LVec3:
    """N = (1, -phi_y, phi_z)/sqrt|W|; <N,N> = +1 on timelike points, -1 on
    spacelike ones."""
    j, w = _jet_off_degenerate(fld, y, z, tol)
    s = math.sqrt(abs(w))
    return LVec3(1.0 / s, -j.vx.real / s, j.vt.real / s)


def _numerator_from_jet(j: Jet2) -> complex:
    return (1 + j.vx ** 2) * j.vtt - 2 * j.vx * j.vt * j.vxt + (j.vt ** 2 - 1) * j.vxx


def born_infeld_numerator(fld: ScalarField2, y: float, z: float) -> float:
    """(1 + phi_y^2) phi_zz - 2 phi_y phi_z phi_yz + (phi_z^2 - 1) phi_yy."""
    j = _real_jet(fld, y, z)
    return _real(_numerator_from_jet(j), "Born-Infeld numerator")


def mean_curvature(fld: ScalarField2, y: float, z: float,
                   tol: float = TOL_DEGENERATE) -> float:
    """H = (eps/2)(eG - 2 f F + g E)/(EG - F^2) with eps = +1 timelike,
    -1 spacelike; algebraically equal to -(1/2) N_BI / |W|^(3/2)."""
    j, w = _jet_off_degenerate(fld, y, z, tol)
    num = _real(_numerator_from_jet(j), "Born-Infeld numerator")
    return -0.5 * num / abs(w) ** 1.5


def graph_point_report(fld: ScalarField2, y: float, z: float,
                       tol: float = TOL_DEGENERATE) -> GraphPointReport:
    causal = causal_classify(fld, y, z, tol)
    if causal is CausalClass.LIGHTLIKE:
        return GraphPointReport((y, z), None, causal, None, None)
    return GraphPointReport((y, z), fundamental_forms(fld, y, z, tol), causal,
                            unit_normal(fld, y, z, tol), mean_curvature(fld, y, z, tol))


def classify_grid(fld: ScalarField2, grid: GridSpec,
                  tol: float = TOL_DEGENERATE) -> list:
    """Rows (y, z, class, H) for a grid sweep; H is NaN off non-degenerate
    points and excluded points are skipped entirely."""
    rows = []
    for (y, z) in grid.points():
        if fld.excluded(y, z):
            continue
        causal = causal_classify(fld, y, z, tol)
        if causal is CausalClass.LIGHTLIKE:
            rows.append((y, z, causal.value, math.nan))
        else:
            rows.append((y, z, causal.value, mean_curvature(fld, y, z, tol)))
    return rows


# -- Example-1 graph: x = asinh(sqrt(z^2 - y^2)) ---------------------------

def example1_graph() -> ScalarField2:
    """The Born-Infeld soliton graph whose tangent planes degenerate exactly
    on {y = +-z}.  The open region z^2 < y^2 (complex values) is excluded;
    the degenerate lines themselves are kept so they can be classified."""
    base = wick_lorentzian_catenoid_field(margin=0.0)
    return ScalarField2(base.evaluator, base.backend,
                        domain_exclusions=lambda y, z: z * z - y * y < 0.0)


# -- isothermal immersion check --------------------------------------------

def surface_jets(surface, zeta: complex):
    """Order-2 jets of the three components of a parametrized surface in the
    real parameters (u, v) of zeta = u + iv."""
    if surface.excluded(zeta):
        raise DomainError(f"parameter {zeta} is outside the surface domain")
    ju = TJet.seed_a(zeta.real)
    jv = TJet.seed_b(zeta.imag)
    comps = surface.components(ju, jv)
    out = []
    for c in comps:
        if not isinstance(c, TJet):
            c = TJet(complex(c))
        out.append(Jet2(c.f, c.fx, c.ft, c.fxx, c.fxt, c.ftt))
    return tuple(out)


def isothermal_check(surface, zeta: complex):
    """(conformal_defect, cross_defect, harmonic_defect) at zeta.

    conformal = |<X_u,X_u> - <X_v,X_v>|, cross = |<X_u,X_v>|, harmonic =
    max component of |X_uu + X_vv|.  All three below tolerance certifies an
    isothermal maximal immersion at the point.
    """
    jx, jy, jz = surface_jets(surface, zeta)
    xu = LVec3(jx.vx, jy.vx, jz.vx)
    xv = LVec3(jx.vt, jy.vt, jz.vt)
    conformal = abs(lorentz_inner(xu, xu) - lorentz_inner(xv, xv))
    cross = abs(lorentz_inner(xu, xv))
    harmonic = max(abs(jx.vxx + jx.vtt), abs(jy.vxx + jy.vtt), abs(jz.vxx + jz.vtt))
    return conformal, cross, harmonic
