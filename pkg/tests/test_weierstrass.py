import math

import numpy as np
import pytest

from solitonlab.errors import DomainError, PathError, UnknownSurface
from solitonlab.geometry import isothermal_check
from solitonlab.quadrature import build_path, contour_integral
from solitonlab.weierstrass import (
    SURFACE_NAMES,
    SurfaceMap,
    Variant,
    WEData,
    catalog_surface,
    closed_form_point,
    nonparametric_check,
    we_catalog,
    we_data_rotation,
    we_integrate,
)

# sampling sectors that stay inside each datum's simply-connected region
# (away from poles, and for the helicoid away from the branch cut of arg)
_SAMPLERS = {
    "scherk_first_kind": (0.4, 2.6, -0.75 * math.pi, 0.75 * math.pi,
                          (1, -1, 1j, -1j)),
    "helicoid_second_kind": (0.3, 2.5, -0.95 * math.pi, 0.95 * math.pi, (0j,)),
    "lorentzian_helicoid": (0.3, 2.5, -0.75 * math.pi, 0.75 * math.pi, (0j,)),
    "lorentzian_catenoid": (0.3, 2.5, -0.95 * math.pi, 0.95 * math.pi, (0j,)),
}


def _sample_points(name, n, seed=0):
    r_lo, r_hi, a_lo, a_hi, avoid = _SAMPLERS[name]
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        r = rng.uniform(r_lo, r_hi)
        a = rng.uniform(a_lo, a_hi)
        z = r * complex(math.cos(a), math.sin(a))
        if min(abs(z - p) for p in avoid) < 0.15:
            continue
        out.append(z)
    return out


def test_scherk_standard_x_at_two_is_ln3():
    d = we_catalog("scherk_first_kind")
    assert d.variant is Variant.STANDARD
    p = we_integrate(d, 2.0 + 0j)
    assert abs(p.x - math.log(3.0)) <= 1e-10
    assert abs(p.z - math.log(3.0 / 5.0)) <= 1e-10


def test_helicoid2_alternate_y_at_two_is_minus_ln2():
    d = we_catalog("helicoid_second_kind")
    assert d.variant is Variant.ALTERNATE
    p = we_integrate(d, 2.0 + 0j)
    assert abs(p.y - (-math.log(2.0))) <= 1e-10


def test_zero_data_integrates_to_origin():
    d = WEData(M=lambda w: 0j, variant=Variant.STANDARD, base=0j)
    for z in (1 + 1j, -2 + 0.3j, 0.5j):
        p = we_integrate(d, z)
        assert abs(p.x) + abs(p.y) + abs(p.z) <= 1e-14


@pytest.mark.parametrize("name", SURFACE_NAMES)
def test_quadrature_matches_closed_forms_at_50_points(name):
    d = we_catalog(name)
    for z in _sample_points(name, 50):
        num = we_integrate(d, z)
        cf = closed_form_point(d, z)
        err = max(abs(num.x - cf.x), abs(num.y - cf.y), abs(num.z - cf.z))
        assert err <= 1e-8, (name, z, err)


def test_catalog_surface_values():
    cat = catalog_surface("lorentzian_catenoid")
    assert abs(cat.eval(1 + 1j).z - (-0.5 * math.log(2.0))) <= 1e-12
    sch = catalog_surface("scherk_first_kind")
    assert abs(sch.eval(2 + 0j).z - math.log(3.0 / 5.0)) <= 1e-12
    hel = catalog_surface("lorentzian_helicoid")
    p = hel.eval(1j)
    assert abs(p.x - 1.0) <= 1e-12 and abs(p.y) <= 1e-12
    assert abs(p.z - math.pi / 2) <= 1e-12


def test_unknown_surface_raises():
    with pytest.raises(UnknownSurface):
        catalog_surface("klein_bottle")
    with pytest.raises(UnknownSurface):
        we_catalog("klein_bottle")


def test_pole_evaluation_is_domain_error():
    d = we_catalog("helicoid_second_kind")
    with pytest.raises(DomainError):
        we_integrate(d, 0j)


@pytest.mark.parametrize("name", SURFACE_NAMES)
def test_catalog_surfaces_are_isothermal(name):
    surf = catalog_surface(name)
    for z in _sample_points(name, 40, seed=3):
        if surf.excluded(z):
            continue
        c, f, h = isothermal_check(surf, z)
        assert max(c, f, h) <= 1e-6, (name, z)


def test_path_independence_of_real_parts():
    # two homotopic polylines (straight vs forced detour) agree
    d = we_catalog("scherk_first_kind")
    for z in (2.5 + 0.8j, 1.4 - 0.9j):
        straight = we_integrate(d, z)
        mid = 0.5 * (complex(d.base) + z)
        perp = 1j * (z - complex(d.base)) / abs(z - complex(d.base))
        detour = [complex(d.base), mid + 0.35 * perp, z]
        bent = we_integrate(d, z, path=detour)
        err = max(abs(straight.x - bent.x), abs(straight.y - bent.y),
                  abs(straight.z - bent.z))
        assert err <= 1e-8


def test_scherk_domain_condition_on_samples():
    # the parametrization lands where sech^2 x + sech^2 y > 1
    surf = catalog_surface("scherk_first_kind")
    for z in _sample_points("scherk_first_kind", 60, seed=5):
        p = surf.eval(z)
        assert 1.0 / math.cosh(p.x) ** 2 + 1.0 / math.cosh(p.y) ** 2 > 1.0


def test_nonparametric_relations():
    sch = catalog_surface("scherk_first_kind")
    assert nonparametric_check(sch, "scherk_first_kind", 2 + 0j) <= 1e-10
    h2 = catalog_surface("helicoid_second_kind")
    assert nonparametric_check(h2, "helicoid_second_kind", 1 + 0.5j) <= 1e-10
    cat = catalog_surface("lorentzian_catenoid")
    assert nonparametric_check(cat, "lorentzian_catenoid", 2 + 0j) <= 1e-10
    hel = catalog_surface("lorentzian_helicoid")
    assert nonparametric_check(hel, "lorentzian_helicoid", 1 + 1j) <= 1e-10


def test_nonparametric_relation_domain_errors():
    # a point with x^2 > cosh^2 y is outside the helicoid-2 graph
    off_surface = SurfaceMap(lambda u, v: (3.0 + 0 * u, 0.0 * v, 0.0 * u))
    with pytest.raises(DomainError):
        nonparametric_check(off_surface, "helicoid_second_kind", 0j)
    on_axis = SurfaceMap(lambda u, v: (0.0 * u, 1.0 + 0 * v, 0.0 * u))
    with pytest.raises(DomainError):
        nonparametric_check(on_axis, "lorentzian_helicoid", 0j)


def test_nonparametric_relation_over_grids():
    for name, rel in (("scherk_first_kind", "scherk_first_kind"),
                      ("helicoid_second_kind", "helicoid_second_kind")):
        surf = catalog_surface(name)
        for z in _sample_points(name, 30, seed=9):
            assert nonparametric_check(surf, rel, z) <= 1e-10


def test_rotation_theta_zero_and_pi():
    d = we_catalog("scherk_first_kind")
    r0 = we_data_rotation(d, 0.0)
    rpi = we_data_rotation(d, math.pi)
    for w in (0.3 + 0.2j, 2 - 1j):
        assert abs(r0.M(w) - d.M(w)) <= 1e-15
        assert abs(rpi.M(w) + d.M(w)) <= 1e-12


def test_rotation_matches_conjugate_combination():
    # Re(e^{-i theta} A) = cos theta Re A + sin theta Im A: the rotated datum
    # integrates to cos theta X1 + sin theta X2 with X2 = Im of the
    # antiderivatives (the conjugate surface)
    theta = math.pi / 3
    d = we_catalog("scherk_first_kind")
    rot = we_data_rotation(d, theta)
    a1, a2, a3 = d.antiderivatives
    for z in (2.4 + 0.4j, 1.8 - 0.5j, 2.1 + 0.6j):
        p = we_integrate(rot, z)
        for got, anti in ((p.x, a1), (p.y, a2), (p.z, a3)):
            w = anti(z)
            expect = math.cos(theta) * w.real + math.sin(theta) * w.imag
            assert abs(got - expect) <= 1e-6


def test_build_path_detours_and_fails():
    path = build_path(0j, 2 + 0j, poles=(1 + 0j,))
    assert len(path) == 3  # forced around the pole
    wall = tuple(1 + 0.005j * k for k in range(-540, 541))
    with pytest.raises(PathError):
        build_path(0j, 2 + 0j, poles=wall)


def test_contour_integral_residue():
    # closed-ish rectangle around 0 picks up 2 pi i for dz/z
    corners = [1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j, 1 + 1j]
    total = 0j
    for a, b in zip(corners[:-1], corners[1:]):
        total += contour_integral(lambda w: 1 / w, a, b)
    assert abs(total - 2j * math.pi) <= 1e-10
