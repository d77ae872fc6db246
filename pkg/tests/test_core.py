import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from solitonlab import jetmath as jm
from solitonlab.core import (
    CentralDiff,
    LVec3,
    ScalarField2,
    jet,
    lorentz_inner,
    with_backend,
)
from solitonlab.errors import DomainError
from solitonlab.pde import DEFAULT_GRIDS, catalog_names, solution

finite = st.floats(min_value=-10, max_value=10, allow_nan=False)


def test_lorentz_inner_signature():
    assert lorentz_inner(LVec3(1, 0, 0), LVec3(1, 0, 0)) == 1
    assert lorentz_inner(LVec3(0, 0, 1), LVec3(0, 0, 1)) == -1
    assert lorentz_inner(LVec3(1, 0, 1), LVec3(1, 0, 1)) == 0


@given(finite, finite, finite, finite, finite, finite)
def test_lorentz_inner_symmetric(ax, ay, az, bx, by, bz):
    a, b = LVec3(ax, ay, az), LVec3(bx, by, bz)
    assert lorentz_inner(a, b) == lorentz_inner(b, a)


@given(finite, finite, finite, finite, finite, finite, finite)
def test_lorentz_inner_linear_in_first_slot(ax, ay, az, bx, by, bz, c):
    a, b = LVec3(ax, ay, az), LVec3(bx, by, bz)
    lhs = lorentz_inner(LVec3(c * ax, c * ay, c * az), b)
    assert lhs == pytest.approx(c * lorentz_inner(a, b), abs=1e-6, rel=1e-9)


@given(st.floats(min_value=-5, max_value=5, allow_nan=False))
def test_unit_timelike_plane_vector(s):
    v = LVec3(math.cosh(s), 0.0, math.sinh(s))
    assert lorentz_inner(v, v) == pytest.approx(1.0, abs=1e-9)


@given(st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False))
def test_conjugation_involution(z):
    assert jm.conj(jm.conj(z)) == z


def test_complex_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        (1 + 2j) / (0 + 0j)


def test_jet_bilinear_field():
    fld = ScalarField2(lambda a, b: a * b)
    j = jet(fld, 2.0, 3.0)
    assert j.v == 6 and j.vx == 3 and j.vt == 2
    assert j.vxt == 1 and j.vxx == 0 and j.vtt == 0


def test_jet_constant_field():
    fld = ScalarField2(lambda a, b: 4.25)
    j = jet(fld, 0.3, -1.2)
    assert j.v == 4.25
    assert j.vx == j.vt == j.vxx == j.vxt == j.vtt == 0


def test_jet_quadratic_exact():
    # degree <= 2 polynomials are exact under the jet backend
    fld = ScalarField2(lambda a, b: 3 * a * a - 2 * a * b + 5 * b * b + a - 7)
    j = jet(fld, 1.5, -0.5)
    assert j.v == 3 * 2.25 - 2 * 1.5 * -0.5 + 5 * 0.25 + 1.5 - 7
    assert j.vx == 6 * 1.5 - 2 * -0.5 + 1
    assert j.vt == -2 * 1.5 + 10 * -0.5
    assert (j.vxx, j.vxt, j.vtt) == (6, -2, 10)


def test_jet_backends_agree_on_catenoid_profile():
    fld = ScalarField2(lambda a, b: jm.asinh(jm.sqrt(a * a + b * b)))
    je = jet(fld, 1.0, 1.0)
    jc = jet(with_backend(fld, CentralDiff(1e-4)), 1.0, 1.0)
    assert abs(je.vx - jc.vx) <= 1e-6


def test_backends_agree_on_all_catalog_fields():
    rng = np.random.default_rng(7)
    for name in catalog_names():
        fld = solution(name).field
        g = DEFAULT_GRIDS[name]
        pts = 0
        while pts < 100:
            a = rng.uniform(g.a_min, g.a_max)
            b = rng.uniform(g.b_min, g.b_max)
            if fld.excluded(a, b):
                continue
            pts += 1
            je = jet(fld, a, b)
            jc = jet(with_backend(fld, CentralDiff(1e-4)), a, b)
            for attr in ("v", "vx", "vt", "vxx", "vxt", "vtt"):
                assert abs(getattr(je, attr) - getattr(jc, attr)) <= 1e-6, (name, attr, a, b)


def test_central_diff_second_order_convergence():
    fld = ScalarField2(lambda a, b: jm.exp(a + b))
    exact = jet(fld, 0.3, 0.4)

    def err(h):
        j = jet(with_backend(fld, CentralDiff(h)), 0.3, 0.4)
        return max(abs(getattr(j, k) - getattr(exact, k))
                   for k in ("vx", "vt", "vxx", "vxt", "vtt"))

    e1, e2, e3 = err(1e-2), err(5e-3), err(2.5e-3)
    assert math.log2(e1 / e2) >= 1.9
    assert math.log2(e2 / e3) >= 1.9


def test_domain_error_when_stencil_touches_exclusion():
    fld = ScalarField2(lambda a, b: 1.0 / a,
                       backend=CentralDiff(1e-2),
                       domain_exclusions=lambda a, b: abs(a) < 5e-3)
    with pytest.raises(DomainError):
        jet(fld, 0.008, 0.0)  # stencil reaches a - h = -0.002
    jet(fld, 0.5, 0.0)  # interior point is fine


def test_exact_jet_fallback_for_foreign_primitives():
    fld = ScalarField2(lambda a, b: math.sin(a) + b)
    j = jet(fld, 0.3, 0.1)
    assert j.backend_used == "central-fallback"
    assert abs(j.vx - math.cos(0.3)) <= 1e-8


def test_jetmath_primitives_against_cmath():
    # spot-check first/second derivative rules on a nontrivial composite
    fld = ScalarField2(
        lambda a, b: jm.tan(a) * jm.atanh(b) + jm.power(jm.cosh(a), 3) - jm.atan(a * b))
    je = jet(fld, 0.4, 0.3)
    jc = jet(with_backend(fld, CentralDiff(1e-4)), 0.4, 0.3)
    for attr in ("v", "vx", "vt", "vxx", "vxt", "vtt"):
        assert abs(getattr(je, attr) - getattr(jc, attr)) <= 1e-6


def test_complex_valued_field_is_first_class():
    fld = ScalarField2(lambda a, b: 1j * a * jm.tanh(b))
    j = jet(fld, 0.7, 0.2)
    assert abs(j.vx - 1j * math.tanh(0.2)) < 1e-14
