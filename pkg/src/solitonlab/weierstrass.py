"""Weierstrass-Enneper integration of maximal surfaces from data M(omega),
plus the catalog of closed-form parametrized surfaces.

Two integral representations are supported.  Writing X = (x, y, z) with z on
the timelike axis:

* standard:   x = Re Int M (1 + w^2),  y = Re Int i M (1 - w^2),  z = Re Int -2 M w
* alternate:  x = Re Int M (1 + w^2),  y = Re Int 2 i M w,        z = Re Int M (w^2 - 1)

Integration constants are fixed so that the catalog closed forms are matched
exactly at each datum's base point.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

from . import jetmath as jm
from .core import LVec3
from .errors import DomainError, UnknownSurface
from .quadrature import DEFAULT_POLE_MARGIN, build_path, integrate_segments

_REAL_TOL = 1e-9


class Variant(enum.Enum):
    STANDARD = "standard"
    ALTERNATE = "alternate"


@dataclass(frozen=True)
class WEData:
    """Weierstrass-Enneper input: M, representation variant, base point and,
    when known, closed-form antiderivatives of the three integrands."""

    M: Callable
    variant: Variant
    base: complex
    antiderivatives: Optional[tuple] = None
    pole_set: tuple = ()
    name: str = ""


@dataclass(frozen=True)
class SurfaceMap:
    """Parametrized surface zeta = u + iv -> L^3.

    ``components(u, v)`` accepts numbers or Taylor jets and returns the three
    coordinates; ``eval`` wraps it for plain complex parameters and checks
    the result is real.
    """

    components: Callable
    domain_exclusions: Optional[Callable[[complex], bool]] = None
    branch_note: str = ""

    def excluded(self, zeta: complex) -> bool:
        return self.domain_exclusions is not None and bool(self.domain_exclusions(zeta))

    def eval(self, zeta: complex) -> LVec3:
        zeta = complex(zeta)
        if self.excluded(zeta):
            raise DomainError(f"parameter {zeta} is outside the surface domain")
        vals = []
        for c in self.components(zeta.real, zeta.imag):
            c = complex(c)
            if abs(c.imag) > _REAL_TOL * (1.0 + abs(c.real)):
                raise DomainError(f"surface component not real at {zeta}: {c}")
            vals.append(c.real)
        return LVec3(*vals)


def integrand(data: WEData) -> Callable:
    """The three holomorphic integrands of the representation, as a vector."""
    M = data.M
    if data.variant is Variant.STANDARD:
        return lambda w: (M(w) * (1 + w * w), 1j * M(w) * (1 - w * w), -2 * M(w) * w)
    return lambda w: (M(w) * (1 + w * w), 2j * M(w) * w, M(w) * (w * w - 1))


def closed_form_point(data: WEData, zeta: complex) -> LVec3:
    """Surface point from the closed-form antiderivatives (real parts)."""
    if data.antiderivatives is None:
        raise ValueError("datum has no closed-form antiderivatives")
    a1, a2, a3 = data.antiderivatives
    return LVec3(a1(zeta).real, a2(zeta).real, a3(zeta).real)


def we_integrate(data: WEData, zeta: complex,
                 margin: float = DEFAULT_POLE_MARGIN,
                 path: Optional[list] = None) -> LVec3:
    """Surface point at zeta by numeric quadrature from the base point.

    A straight base->zeta segment is used when it clears the poles by the
    margin; otherwise a polyline detour.  ``path`` overrides the automatic
    choice (for path-independence checks).
    """
    zeta = complex(zeta)
    for p in data.pole_set:
        if abs(zeta - p) < 1e-12:
            raise DomainError(f"{zeta} is a pole of the Weierstrass data")
    if path is None:
        path = build_path(complex(data.base), zeta, data.pole_set, margin)
    vec = integrate_segments(integrand(data), path)
    if data.antiderivatives is not None:
        base_val = closed_form_point(data, complex(data.base))
    else:
        base_val = LVec3(0.0, 0.0, 0.0)
    return LVec3(base_val.x + vec[0].real, base_val.y + vec[1].real,
                 base_val.z + vec[2].real)


def we_data_rotation(data: WEData, theta: float) -> WEData:
    """Associate-family rotation of the data: M -> e^{-i theta} M.

    The integrands are linear in M, so closed-form antiderivatives rotate by
    the same factor.
    """
    phase = cmath.exp(-1j * theta)
    M = data.M
    antis = None
    if data.antiderivatives is not None:
        a1, a2, a3 = data.antiderivatives
        antis = (lambda w: phase * a1(w), lambda w: phase * a2(w), lambda w: phase * a3(w))
    return WEData(lambda w: phase * M(w), data.variant, data.base, antis,
                  data.pole_set, name=data.name)


# -- catalog surfaces -------------------------------------------------------

def _near(zeta: complex, p: complex, margin: float) -> bool:
    return abs(zeta - p) <= margin


def _on_negative_axis(zeta: complex, margin: float) -> bool:
    return zeta.real <= 0.0 and abs(zeta.imag) <= margin


def catalog_surface(name: str, margin: float = DEFAULT_POLE_MARGIN) -> SurfaceMap:
    """Closed-form parametrizations used throughout the catalog.

    * lorentzian_helicoid:   (Im(t - 1/t)/2, -Re(t + 1/t)/2, arg t)
    * lorentzian_catenoid:   (-Re(t - 1/t)/2, -Im(t + 1/t)/2, -ln|t|)
    * scherk_first_kind:     (ln|(z+1)/(z-1)|, ln|(z-i)/(z+i)|, ln|(z^2-1)/(z^2+1)|)
    * helicoid_second_kind:  (-Im(z - 1/z)/2, -ln|z|, -Im(z + 1/z)/2)
    """
    if name == "lorentzian_helicoid":
        def comps(u, v):
            tau = u + 1j * v
            w = jm.log(tau)
            return (0.5 * jm.im(tau - 1 / tau), -0.5 * jm.re(tau + 1 / tau), jm.im(w))
        return SurfaceMap(
            comps,
            lambda z: abs(z) <= margin or _on_negative_axis(z, margin),
            "arg on the principal branch; the ray arg = pi is excluded")
    if name == "lorentzian_catenoid":
        def comps(u, v):
            tau = u + 1j * v
            return (-0.5 * jm.re(tau - 1 / tau), -0.5 * jm.im(tau + 1 / tau),
                    -jm.re(jm.log(tau)))
        return SurfaceMap(comps, lambda z: abs(z) <= margin,
                          "single-valued away from the puncture at 0")
    if name == "scherk_first_kind":
        def comps(u, v):
            z = u + 1j * v
            return (jm.re(jm.log((z + 1) / (z - 1))),
                    jm.re(jm.log((z - 1j) / (z + 1j))),
                    jm.re(jm.log((z * z - 1) / (z * z + 1))))
        return SurfaceMap(
            comps,
            lambda z: any(_near(z, p, margin) for p in (1, -1, 1j, -1j)),
            "real parts of logs are single-valued off the four punctures")
    if name == "helicoid_second_kind":
        def comps(u, v):
            z = u + 1j * v
            return (-0.5 * jm.im(z - 1 / z), -jm.re(jm.log(z)), -0.5 * jm.im(z + 1 / z))
        return SurfaceMap(comps, lambda z: abs(z) <= margin,
                          "single-valued away from the puncture at 0")
    raise UnknownSurface(f"no catalog surface named {name!r}")


SURFACE_NAMES = ("lorentzian_helicoid", "lorentzian_catenoid",
                 "scherk_first_kind", "helicoid_second_kind")


def we_catalog(name: str) -> WEData:
    """Weierstrass data, with closed-form antiderivatives, for the catalog.

    The helicoid/catenoid data reproduce those surfaces up to a Lorentz
    isometry (z -> -z for the helicoid, a half-turn about the z axis for the
    catenoid): the standard representation fixes the component signs and the
    catalog closed forms were chosen to match the parametrizations above.
    """
    if name == "scherk_first_kind":
        return WEData(
            M=lambda w: 2.0 / (1 - w ** 4),
            variant=Variant.STANDARD,
            base=2.0 + 0j,
            antiderivatives=(
                lambda w: cmath.log((w + 1) / (w - 1)),
                lambda w: cmath.log((w - 1j) / (w + 1j)),
                lambda w: cmath.log((w * w - 1) / (w * w + 1)),
            ),
            pole_set=(1, -1, 1j, -1j),
            name=name,
        )
    if name == "helicoid_second_kind":
        return WEData(
            M=lambda w: 0.5j / (w * w),
            variant=Variant.ALTERNATE,
            base=1.0 + 0j,
            antiderivatives=(
                lambda w: 0.5j * (w - 1 / w),
                lambda w: -cmath.log(w),
                lambda w: 0.5j * (w + 1 / w),
            ),
            pole_set=(0j,),
            name=name,
        )
    if name == "lorentzian_helicoid":
        return WEData(
            M=lambda w: -0.5j / (w * w),
            variant=Variant.STANDARD,
            base=1.0 + 0j,
            antiderivatives=(
                lambda w: -0.5j * (w - 1 / w),
                lambda w: -0.5 * (w + 1 / w),
                lambda w: 1j * cmath.log(w),
            ),
            pole_set=(0j,),
            name=name,
        )
    if name == "lorentzian_catenoid":
        return WEData(
            M=lambda w: 0.5 / (w * w),
            variant=Variant.STANDARD,
            base=1.0 + 0j,
            antiderivatives=(
                lambda w: 0.5 * (w - 1 / w),
                lambda w: -0.5j * (w + 1 / w),
                lambda w: -cmath.log(w),
            ),
            pole_set=(0j,),
            name=name,
        )
    raise UnknownSurface(f"no Weierstrass datum named {name!r}")


# -- nonparametric relations ------------------------------------------------

def _rel_scherk(x, y, z):
    return abs(z - (math.log(math.cosh(y)) - math.log(math.cosh(x))))


def _rel_helicoid2(x, y, z):
    if x * x > math.cosh(y) ** 2 * (1 + 1e-12):
        raise DomainError(f"helicoid-2 relation needs x^2 <= cosh^2 y, got x={x}, y={y}")
    return abs(z + x * math.tanh(y))


def _rel_lorentzian_helicoid(x, y, z):
    if x == 0.0:
        raise DomainError("relation undefined on x = 0")
    return abs(z - (0.5 * math.pi + math.atan(y / x)))


def _rel_lorentzian_catenoid(x, y, z):
    # the catenoid x^2 + y^2 = sinh^2 z is symmetric under z -> -z; the
    # relation fixes the sheet by |z|
    return abs(abs(z) - math.asinh(math.hypot(x, y)))


RELATIONS = {
    "scherk_first_kind": _rel_scherk,
    "helicoid_second_kind": _rel_helicoid2,
    "lorentzian_helicoid": _rel_lorentzian_helicoid,
    "lorentzian_catenoid": _rel_lorentzian_catenoid,
}


def nonparametric_check(surface: SurfaceMap, relation: str, zeta: complex) -> float:
    """|defining relation| at the surface point over parameter zeta."""
    try:
        rel = RELATIONS[relation]
    except KeyError:
        raise UnknownSurface(f"no nonparametric relation named {relation!r}") from None
    p = surface.eval(zeta)
    return rel(p.x, p.y, p.z)
