import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solitonlab.errors import ExcludedPoint
from solitonlab.identities import (
    REGISTRY,
    arctan_tail,
    convergence_order,
    helicoid2_identity,
    lorentz_helicoid_identity,
    quadrant_constant,
    ram_arctan_sum,
    ram_cos_product,
    scherk_identity,
)
from solitonlab.weierstrass import catalog_surface


# -- Ramanujan cosine product -------------------------------------------------

def test_cos_product_trivial_x_zero():
    for K in (1, 7, 100):
        r = ram_cos_product(0.0, 0.4, K)
        assert r.partial == 1.0 and r.abs_err == 0.0


def test_cos_product_convergence_and_halving():
    r1 = ram_cos_product(0.3, 0.2, 10 ** 4)
    r2 = ram_cos_product(0.3, 0.2, 2 * 10 ** 4)
    assert r1.abs_err <= 5e-3
    ratio = r1.abs_err / r2.abs_err
    assert 2.0 * 0.8 <= ratio <= 2.0 * 1.2  # halves within +-20%
    assert abs(r1.lhs - cmath.cos(0.5) / cmath.cos(0.2)) <= 1e-15


def test_cos_product_x_equals_a():
    r = ram_cos_product(0.5, 0.5, 10 ** 4)
    assert abs(r.lhs - cmath.cos(1.0) / cmath.cos(0.5)) <= 1e-15
    assert r.abs_err <= 5e-3
    r2 = ram_cos_product(0.5, 0.5, 2 * 10 ** 4)
    assert 1.6 <= r.abs_err / r2.abs_err <= 2.4


def test_cos_product_complex_arguments():
    X, A = 0.3 + 0.2j, 0.1 - 0.4j
    r = ram_cos_product(X, A, 10 ** 4)
    assert r.abs_err <= 1e-4
    assert r.est_order >= 0.9


def test_cos_product_error_model_on_random_arguments():
    # empirical 1/K model: err(2K) stays within 2x of err(K)/2
    rng = np.random.default_rng(21)
    for _ in range(50):
        X = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        A = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        r1 = ram_cos_product(X, A, 10 ** 4)
        r2 = ram_cos_product(X, A, 2 * 10 ** 4)
        if r1.abs_err < 1e-12:
            continue  # degenerate cancellation, nothing to model
        predicted = r1.abs_err / 2
        assert r2.abs_err <= 2 * predicted


def test_cos_product_excluded_near_half_odd_pi():
    with pytest.raises(ExcludedPoint):
        ram_cos_product(0.3, math.pi / 2 + 1e-9, 10)
    with pytest.raises(ExcludedPoint):
        ram_cos_product(0.3, -3 * math.pi / 2, 10)


# -- Ramanujan arctangent sum -------------------------------------------------

def test_arctan_sum_trivial_x_zero():
    for K in (1, 10, 1000):
        r = ram_arctan_sum(0.0, 0.7, K)
        assert r.partial == 0.0 and r.lhs == 0.0 and r.abs_err == 0.0


def test_arctan_sum_convergence_and_tail_correction():
    raw = ram_arctan_sum(1.0, 0.7, 10 ** 4)
    assert raw.abs_err <= 1e-4
    corrected = ram_arctan_sum(1.0, 0.7, 10 ** 4, tail_correction=True)
    assert corrected.abs_err * 10 <= raw.abs_err
    # the paired terms decay like 1/k^2, so the raw error tracks the
    # closed-form tail estimate
    assert raw.abs_err == pytest.approx(abs(arctan_tail(1.0, 0.7, 10 ** 4)), rel=0.05)


def test_arctan_sum_against_high_K_oracle():
    # reference partial at K = 10^7 pins the limit far below the K = 10^4 error
    ref = ram_arctan_sum(1.0, 0.7, 10 ** 7)
    assert ref.abs_err <= 2e-8
    r = ram_arctan_sum(1.0, 0.7, 10 ** 4)
    assert abs(r.partial - ref.partial) == pytest.approx(r.abs_err, rel=1e-2)


def test_arctan_sum_order_without_tail():
    r = ram_arctan_sum(0.5, 1.2, 10 ** 4)
    assert r.est_order >= 0.9


def test_arctan_sum_excluded_near_pi_multiples():
    with pytest.raises(ExcludedPoint):
        ram_arctan_sum(1.0, math.pi, 10)
    with pytest.raises(ExcludedPoint):
        ram_arctan_sum(1.0, 1e-9, 10)


# -- Scherk identity ----------------------------------------------------------

def test_scherk_identity_at_two():
    r3 = scherk_identity(2 + 0j, 10 ** 3)
    r4 = scherk_identity(2 + 0j, 10 ** 4)
    assert abs(r3.lhs - math.log(3 / 5)) <= 1e-15
    assert r4.abs_err < r3.abs_err
    assert r4.est_order >= 0.9


def test_scherk_identity_imaginary_axis_reduction():
    # x(i s) = 0, so the identity reduces to the pure cosh-ratio series
    s = 2.0
    r = scherk_identity(1j * s, 10 ** 4)
    y = math.log(abs((s - 1) / (s + 1)))
    assert abs(r.lhs - math.log(math.cosh(y))) <= 1e-12  # cosh(0) = 1
    assert r.abs_err <= 1e-3


def test_scherk_identity_symmetric_ray_terms_vanish():
    # on arg zeta = pi/4 the x and y coordinates are opposite, every paired
    # term cancels and the lhs is 0
    for s in (0.5, 1.7, 3.0):
        z = s * cmath.exp(1j * math.pi / 4)
        r = scherk_identity(z, 50)
        assert abs(r.lhs) <= 1e-14
        assert abs(r.partial) <= 1e-13


@given(st.floats(min_value=0.2, max_value=3.0),
       st.floats(min_value=-math.pi, max_value=math.pi))
@settings(max_examples=60, deadline=None)
def test_scherk_identity_symmetry_under_negation(r, a):
    z = r * cmath.exp(1j * a)
    if min(abs(z - p) for p in (1, -1, 1j, -1j)) <= 2e-2:
        return
    p1 = scherk_identity(z, 200)
    p2 = scherk_identity(-z, 200)
    assert abs(p1.partial - p2.partial) <= 1e-12
    assert abs(p1.lhs - p2.lhs) <= 1e-12


def test_scherk_identity_excluded_points():
    for p in (1 + 0j, -1 + 0j, 1j, -1j, 1.005 + 0j):
        with pytest.raises(ExcludedPoint):
            scherk_identity(p, 10)


# -- helicoid-of-second-kind identity ----------------------------------------

def test_helicoid2_closed_form_values():
    r = helicoid2_identity(1 + 1j, 10 ** 4)
    assert abs(r.lhs - (1 / 3)) <= 1e-15
    assert r.abs_err <= 1e-4
    r = helicoid2_identity(2j, 10 ** 4)
    assert abs(r.lhs - 0.6) <= 1e-15
    assert r.abs_err <= 1e-4


def test_helicoid2_imaginary_residue_vanishes():
    for K in (10 ** 2, 10 ** 3, 10 ** 4):
        r = helicoid2_identity(1.3 + 0.6j, K)
        assert abs(r.partial.imag) <= 10 * r.abs_err


def test_helicoid2_unit_circle_excluded():
    with pytest.raises(ExcludedPoint):
        helicoid2_identity(cmath.exp(0.7j), 10)
    with pytest.raises(ExcludedPoint):
        helicoid2_identity(1.5 + 0j, 10)  # real axis: lhs undefined


def test_helicoid2_matches_catalog_surface_ratio():
    surf = catalog_surface("helicoid_second_kind")
    rng = np.random.default_rng(17)
    done = 0
    while done < 20:
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if abs(z) < 0.3 or abs(abs(z) - 1) < 0.05 or abs((z - 1 / z).imag) < 0.1:
            continue
        done += 1
        p = surf.eval(z)
        r = helicoid2_identity(z, 10)
        assert abs(r.lhs - p.z / p.x) <= 1e-10


# -- Lorentzian helicoid identity --------------------------------------------

def test_quadrant_constant_table():
    half = math.pi / 2
    # 4 open quadrants
    assert quadrant_constant(1.0, 1.0) == half
    assert quadrant_constant(-1.0, 1.0) == -half
    assert quadrant_constant(-1.0, -1.0) == half
    assert quadrant_constant(1.0, -1.0) == -half
    # both axes
    assert quadrant_constant(0.0, 2.0) == half
    assert quadrant_constant(0.0, -2.0) == half
    assert quadrant_constant(1.5, 0.0) == half
    assert quadrant_constant(-1.5, 0.0) == half


def test_lorentz_identity_first_quadrant_convergence():
    r = lorentz_helicoid_identity(1 + 1j, 10 ** 4)
    assert r.abs_err <= 1e-3
    r2 = lorentz_helicoid_identity(1 + 1j, 10 ** 5)
    assert r2.abs_err < r.abs_err


def test_lorentz_identity_on_upper_imaginary_axis():
    # u = 0: both sides are finite and equal (pi/2 exactly)
    r = lorentz_helicoid_identity(1j, 10 ** 4)
    assert abs(r.lhs - math.pi / 2) <= 1e-12
    assert r.abs_err <= 1e-12


def test_lorentz_identity_fourth_quadrant_convergence():
    r = lorentz_helicoid_identity(1.2 - 0.8j, 10 ** 4)
    assert r.abs_err <= 1e-3


def test_lorentz_identity_left_half_plane_agrees_mod_pi():
    # with lhs read as the principal argument, the left half-plane defect
    # converges to pi (the proof's arctan branch); mod pi it vanishes
    for z in (-1 + 1j, -1 - 1j, -0.7 + 1.4j):
        r = lorentz_helicoid_identity(z, 10 ** 4)
        mod = min(abs(r.abs_err - k * math.pi) for k in (0, 1))
        assert mod <= 1e-3
        assert abs(r.abs_err - math.pi) <= 1e-3


def test_lorentz_identity_excluded_points():
    with pytest.raises(ExcludedPoint):
        lorentz_helicoid_identity(0.001 + 0j, 10)
    with pytest.raises(ExcludedPoint):
        lorentz_helicoid_identity(-1 + 0.001j, 10)  # principal-arg cut


# -- convergence order machinery ----------------------------------------------

def test_convergence_order_monotone_errors():
    rs = convergence_order(REGISTRY["ram_arctan_sum"], (1.0, 0.7), [100, 1000, 10000])
    errs = [r.abs_err for r in rs]
    assert errs[0] > errs[1] > errs[2]
    assert all(r.est_order >= 0.9 for r in rs[1:])

    rs = convergence_order(REGISTRY["scherk_identity"], (2 + 0j,), [100, 1000, 10000])
    errs = [r.abs_err for r in rs]
    assert errs[0] > errs[1] > errs[2]


def test_convergence_order_rejects_excluded_and_unsorted():
    with pytest.raises(ExcludedPoint):
        convergence_order(REGISTRY["scherk_identity"], (1j,), [10, 100])
    with pytest.raises(ValueError):
        convergence_order(REGISTRY["ram_arctan_sum"], (1.0, 0.7), [100, 10])
