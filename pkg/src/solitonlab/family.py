"""Conjugate maximal surfaces, the associate family, the one-parameter family
of complex Born-Infeld solitons derived from it, and verification of the
Whitham general-solution form.

Surface components are stored in split form: functions of (tau, sigma) where
sigma is an independent stand-in for the conjugate variable.  Evaluating at
sigma = conj(tau) recovers the real surface; substituting tau = i zeta,
sigma = -i conj(zeta) performs the isothermal change of coordinates in which
the soliton family and the Whitham data G, H live.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

from . import jetmath as jm
from .errors import DomainError, JacobianSingular
from .jetmath import TJet
from .pde import ResidualReport
from .quadrature import DEFAULT_POLE_MARGIN, build_path, integrate_segments
from .weierstrass import SurfaceMap

Comps = Callable  # (tau, sigma) -> (x, t, f), jet-friendly


@dataclass(frozen=True)
class ConjugatePair:
    """Isothermal parametrizations X1, X2 with X1 + i X2 holomorphic."""

    name: str
    comps1: Comps
    comps2: Comps
    comps1_zeta: Optional[Comps] = None
    comps2_zeta: Optional[Comps] = None
    tau_exclusions: Optional[Callable[[complex], bool]] = None
    zeta_exclusions: Optional[Callable[[complex], bool]] = None
    F: Optional[Callable] = None

    def zeta_comps(self):
        c1 = self.comps1_zeta or isothermal_substitution(self.comps1)
        c2 = self.comps2_zeta or isothermal_substitution(self.comps2)
        return c1, c2

    def surface1(self) -> SurfaceMap:
        return _surface_from_comps(self.comps1, self.tau_exclusions)

    def surface2(self) -> SurfaceMap:
        return _surface_from_comps(self.comps2, self.tau_exclusions)

    def zeta_excluded(self, zeta: complex) -> bool:
        return self.zeta_exclusions is not None and bool(self.zeta_exclusions(zeta))


def isothermal_substitution(comps: Comps) -> Comps:
    """The reparametrization tau = i zeta, sigma = -i xi applied to split-form
    components (xi standing in for conj(zeta))."""
    return lambda zeta, xi: comps(1j * zeta, -1j * xi)


def _surface_from_comps(comps: Comps, exclusions) -> SurfaceMap:
    def components(u, v):
        tau = u + 1j * v
        sigma = u - 1j * v
        return comps(tau, sigma)
    return SurfaceMap(components, exclusions)


def helicoid_catenoid_pair(margin: float = DEFAULT_POLE_MARGIN) -> ConjugatePair:
    """The Lorentzian helicoid and Lorentzian catenoid, which are conjugate:
    X1 + i X2 = (-(i/2)(tau - 1/tau), -(1/2)(tau + 1/tau), -i log tau).

    The zeta-space components are the normalized closed forms of the soliton
    construction (f1 = -(i/2)(log zeta - log xi), f2 = -(1/2)(log zeta + log xi));
    they absorb the constant that a raw substitution into the tau forms picks
    up from log(i).
    """
    def comps1(tau, sigma):
        p = tau - 1 / tau
        q = sigma - 1 / sigma
        r = tau + 1 / tau
        s = sigma + 1 / sigma
        return (-0.25j * (p - q), -0.25 * (r + s), -0.5j * (jm.log(tau) - jm.log(sigma)))

    def comps2(tau, sigma):
        p = tau - 1 / tau
        q = sigma - 1 / sigma
        r = tau + 1 / tau
        s = sigma + 1 / sigma
        return (-0.25 * (p + q), 0.25j * (r - s), -0.5 * (jm.log(tau) + jm.log(sigma)))

    def comps1_zeta(zeta, xi):
        A = zeta + 1 / zeta
        Ab = xi + 1 / xi
        B = zeta - 1 / zeta
        Bb = xi - 1 / xi
        return (0.25 * (A + Ab), -0.25j * (B - Bb),
                -0.5j * (jm.log(zeta) - jm.log(xi)))

    def comps2_zeta(zeta, xi):
        A = zeta + 1 / zeta
        Ab = xi + 1 / xi
        B = zeta - 1 / zeta
        Bb = xi - 1 / xi
        return (-0.25j * (A - Ab), -0.25 * (B + Bb),
                -0.5 * (jm.log(zeta) + jm.log(xi)))

    def excl(z):
        return abs(z) <= margin or (z.real <= 0.0 and abs(z.imag) <= margin)

    return ConjugatePair("helicoid_catenoid", comps1, comps2,
                         comps1_zeta, comps2_zeta,
                         tau_exclusions=excl, zeta_exclusions=excl)


# -- associate family and conjugacy ----------------------------------------

def associate_family(pair: ConjugatePair, theta: float) -> SurfaceMap:
    """cos(theta) X1 + sin(theta) X2, an isothermal maximal immersion for
    every real theta."""
    ct, st = math.cos(theta), math.sin(theta)

    def components(u, v):
        tau = u + 1j * v
        sigma = u - 1j * v
        a = pair.comps1(tau, sigma)
        b = pair.comps2(tau, sigma)
        return tuple(ct * ai + st * bi for ai, bi in zip(a, b))

    return SurfaceMap(components, pair.tau_exclusions)


def conjugacy_check(pair: ConjugatePair, zeta: complex) -> float:
    """Max over components of the Cauchy-Riemann defect of X1 + i X2 at zeta,
    |(d/du + i d/dv)(X1 + iX2)| / 2, estimated from exact jets."""
    zeta = complex(zeta)
    if pair.tau_exclusions is not None and pair.tau_exclusions(zeta):
        raise DomainError(f"{zeta} is outside the pair's common domain")
    ju = TJet.seed_a(zeta.real)
    jv = TJet.seed_b(zeta.imag)
    tau = ju + 1j * jv
    sigma = ju - 1j * jv
    a = pair.comps1(tau, sigma)
    b = pair.comps2(tau, sigma)
    worst = 0.0
    for ai, bi in zip(a, b):
        w = ai + 1j * bi
        wu = w.fx if isinstance(w, TJet) else 0j
        wv = w.ft if isinstance(w, TJet) else 0j
        worst = max(worst, 0.5 * abs(wu + 1j * wv))
    return worst


# -- soliton family ----------------------------------------------------------

@dataclass(frozen=True)
class SolitonFamilyPoint:
    theta: float
    zeta: complex
    xs: complex
    ts: complex
    phis: complex


def soliton_family(pair: ConjugatePair, theta: float, zeta: complex) -> SolitonFamilyPoint:
    """The complex soliton X_theta^s = (i(x1 c + x2 s), t1 c + t2 s, f1 c + f2 s)
    evaluated in the zeta coordinates (c = cos theta, s = sin theta)."""
    zeta = complex(zeta)
    if pair.zeta_excluded(zeta):
        raise DomainError(f"{zeta} is outside the family's zeta domain")
    c1, c2 = pair.zeta_comps()
    xi = zeta.conjugate()
    x1, t1, f1 = (complex(w) for w in c1(zeta, xi))
    x2, t2, f2 = (complex(w) for w in c2(zeta, xi))
    ct, st = math.cos(theta), math.sin(theta)
    return SolitonFamilyPoint(
        theta, zeta,
        xs=1j * (x1 * ct + x2 * st),
        ts=t1 * ct + t2 * st,
        phis=f1 * ct + f2 * st,
    )


# -- Whitham form ------------------------------------------------------------

@dataclass(frozen=True)
class WhithamPair:
    """Data (G, H) of the general Born-Infeld solution, constrained by
    conj(G(conj zeta)) = -H(zeta)."""

    Gfun: Callable
    Hfun: Callable
    theta: float
    base: complex = 1.0 + 0j
    pole_set: tuple = (0j,)
    offsets: tuple = (0j, 0j, 0j)


def catalog_whitham(theta: float) -> WhithamPair:
    """G(xb) = (i/(2 xb)) e^{i theta}, H(z) = (i/(2 z)) e^{-i theta}: the data
    of the helicoid/catenoid soliton family."""
    gp = 0.5j * cmath.exp(1j * theta)
    hp = 0.5j * cmath.exp(-1j * theta)
    return WhithamPair(lambda xb: gp / xb, lambda z: hp / z, theta)


def whitham_constraint_defect(wp: WhithamPair, zeta: complex) -> float:
    """|conj(G(conj zeta)) + H(zeta)|; zero characterizes admissible data."""
    g = complex(wp.Gfun(complex(zeta).conjugate()))
    h = complex(wp.Hfun(complex(zeta)))
    return abs(g.conjugate() + h)


def holomorphic_derivative(fn: Callable, z: complex) -> complex:
    """f'(z) by first-order jet propagation; falls back to a five-point
    stencil for evaluators that reject jets."""
    try:
        out = fn(TJet(complex(z), 1.0 + 0j))
    except TypeError:
        h = 1e-3
        return complex(-fn(z + 2 * h) + 8 * fn(z + h) - 8 * fn(z - h) + fn(z - 2 * h)) / (12 * h)
    if isinstance(out, TJet):
        return out.fx
    return 0j


def calibrate_offsets(wp: WhithamPair, pair: ConjugatePair) -> WhithamPair:
    """Solve the three integration constants at the base point so the family
    and the (G, H) integral form coincide there."""
    p0 = soliton_family(pair, wp.theta, wp.base)
    c1 = (p0.xs - p0.ts) - complex(wp.Gfun(complex(wp.base).conjugate()))
    c2 = (p0.xs + p0.ts) - complex(wp.Hfun(complex(wp.base)))
    c3 = p0.phis
    return replace(wp, offsets=(c1, c2, c3))


def whitham_verify(wp: WhithamPair, point: SolitonFamilyPoint,
                   margin: float = DEFAULT_POLE_MARGIN):
    """Defects (d1, d2, d3) of the three Whitham equations at the point:

        d1 = |xs - ts - (G(zb) - Int z^2 H' dz)       - c1|
        d2 = |xs + ts - (H(z)  - Int zb^2 G' dzb)     - c2|
        d3 = |phis    - (Int z H' dz + Int zb (-G') dzb) - c3|

    Integrals run from the base point along pole-avoiding paths; the c_j are
    the pair's calibrated offsets.
    """
    z = complex(point.zeta)
    zb = z.conjugate()
    base = complex(wp.base)
    baseb = base.conjugate()
    poles = wp.pole_set
    polesb = tuple(complex(p).conjugate() for p in poles)

    path_h = build_path(base, z, poles, margin)
    path_g = build_path(baseb, zb, polesb, margin)

    hp = lambda w: holomorphic_derivative(wp.Hfun, w)
    gp = lambda w: holomorphic_derivative(wp.Gfun, w)

    q1 = integrate_segments(lambda w: [w * w * hp(w)], path_h)[0]
    q3h = integrate_segments(lambda w: [w * hp(w)], path_h)[0]
    q2 = integrate_segments(lambda w: [w * w * gp(w)], path_g)[0]
    q3g = integrate_segments(lambda w: [w * gp(w)], path_g)[0]

    c1, c2, c3 = wp.offsets
    d1 = abs((point.xs - point.ts) - (complex(wp.Gfun(zb)) - q1) - c1)
    d2 = abs((point.xs + point.ts) - (complex(wp.Hfun(z)) - q2) - c2)
    d3 = abs(point.phis - (q3h - q3g) - c3)
    return d1, d2, d3


# -- Born-Infeld residual of the family as a complex graph ------------------

def _family_jets(pair: ConjugatePair, theta: float, zeta: complex):
    ju = TJet.seed_a(zeta.real)
    jv = TJet.seed_b(zeta.imag)
    zj = ju + 1j * jv
    xij = ju - 1j * jv
    c1, c2 = pair.zeta_comps()
    x1, t1, f1 = (w if isinstance(w, TJet) else TJet(complex(w)) for w in c1(zj, xij))
    x2, t2, f2 = (w if isinstance(w, TJet) else TJet(complex(w)) for w in c2(zj, xij))
    ct, st = math.cos(theta), math.sin(theta)
    xs = 1j * (x1 * ct + x2 * st)
    ts = t1 * ct + t2 * st
    ps = f1 * ct + f2 * st
    return xs, ts, ps


def graph_residual_from_jets(xs: TJet, ts: TJet, ps: TJet,
                             det_tol: float = 1e-10) -> complex:
    """Born-Infeld residual of phi as a function of the graph variables
    (x, t) = (xs, ts), via the chain rule through the (u, v) parametrization."""
    det = xs.fx * ts.ft - xs.ft * ts.fx
    if abs(det) <= det_tol:
        raise JacobianSingular(f"graph projection degenerates (|det| = {abs(det):g})")
    # B = J^{-1}; columns (u_x, v_x) and (u_t, v_t)
    b11, b12 = ts.ft / det, -xs.ft / det
    b21, b22 = -ts.fx / det, xs.fx / det
    # dB/du = -B (dJ/du) B, dB/dv = -B (dJ/dv) B
    def dB(j11, j12, j21, j22):
        m11 = b11 * j11 + b12 * j21
        m12 = b11 * j12 + b12 * j22
        m21 = b21 * j11 + b22 * j21
        m22 = b21 * j12 + b22 * j22
        return (-(m11 * b11 + m12 * b21), -(m11 * b12 + m12 * b22),
                -(m21 * b11 + m22 * b21), -(m21 * b12 + m22 * b22))

    du11, du12, du21, du22 = dB(xs.fxx, xs.fxt, ts.fxx, ts.fxt)
    dv11, dv12, dv21, dv22 = dB(xs.fxt, xs.ftt, ts.fxt, ts.ftt)

    px = ps.fx * b11 + ps.ft * b21
    pt = ps.fx * b12 + ps.ft * b22
    # du/dv of px and pt
    px_u = ps.fxx * b11 + ps.fxt * b21 + ps.fx * du11 + ps.ft * du21
    px_v = ps.fxt * b11 + ps.ftt * b21 + ps.fx * dv11 + ps.ft * dv21
    pt_u = ps.fxx * b12 + ps.fxt * b22 + ps.fx * du12 + ps.ft * du22
    pt_v = ps.fxt * b12 + ps.ftt * b22 + ps.fx * dv12 + ps.ft * dv22

    pxx = px_u * b11 + px_v * b21
    pxt = px_u * b12 + px_v * b22
    ptt = pt_u * b12 + pt_v * b22
    return (1 + px * px) * ptt - 2 * px * pt * pxt + (pt * pt - 1) * pxx


def complex_bi_residual_on_family(pair: ConjugatePair, theta: float, grid,
                                  det_tol: float = 1e-10) -> ResidualReport:
    """Born-Infeld residual of phi_theta^s as a function of its complex graph
    variables, over a list of zeta points."""
    kept, residuals = [], []
    excluded = 0
    for zeta in grid:
        zeta = complex(zeta)
        if pair.zeta_excluded(zeta):
            excluded += 1
            continue
        xs, ts, ps = _family_jets(pair, theta, zeta)
        residuals.append(graph_residual_from_jets(xs, ts, ps, det_tol))
        kept.append((zeta.real, zeta.imag))
    max_abs, worst = 0.0, None
    for p, r in zip(kept, residuals):
        if abs(r) >= max_abs:
            max_abs, worst = abs(r), p
    return ResidualReport(kept, residuals, max_abs, "exact", excluded,
                          name=f"{pair.name} soliton family",
                          equation="born_infeld", grid_spec=f"{len(grid)} points",
                          worst_point=worst)
