"""Numerical verification of the two Ramanujan identities and the three
surface-derived identities, with truncation control, tail estimation and
convergence-order measurement.

Every evaluation reports a ``TruncationResult`` carrying the partial
sum/product at K, the closed-form left-hand side, the absolute error and the
observed convergence order (fitted from the errors at K and 2K).  Products
are accumulated in log space to avoid underflow at large K; sums and products
are chunked so very large K stay memory-bounded.

Identity arguments are validity-gated: evaluation at an excluded point raises
``ExcludedPoint`` rather than returning NaN.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np
from scipy.special import polygamma

from .errors import ExcludedPoint

EXCLUSION_RADIUS = 1e-2
_CHUNK = 1_000_000


class Kind(enum.Enum):
    SUM = "sum"
    PRODUCT = "product"


@dataclass(frozen=True)
class TruncationResult:
    K: int
    partial: complex
    lhs: complex
    abs_err: float
    est_order: float


@dataclass(frozen=True)
class IdentitySpec:
    """One identity: closed-form lhs, the k-th series term (or product
    factor), the k-independent lead term/factor, and a validity predicate."""

    name: str
    lhs: Callable
    rhs_term: Callable  # (k array, args) -> term/factor values
    lead: Callable      # args -> additive lead (SUM) or scalar factor (PRODUCT)
    kind: Kind
    validity: Callable  # args -> bool


def _accumulate(spec: IdentitySpec, args, k_lo: int, k_hi: int) -> complex:
    """Sum of terms (SUM) or of log factors (PRODUCT) for k in [k_lo, k_hi]."""
    total = 0j
    k = k_lo
    while k <= k_hi:
        hi = min(k + _CHUNK - 1, k_hi)
        ks = np.arange(k, hi + 1)
        vals = spec.rhs_term(ks, args)
        if spec.kind is Kind.PRODUCT:
            vals = np.log(np.asarray(vals, dtype=complex))
        total += complex(np.sum(vals))
        k = hi + 1
    return total


def _finish(spec: IdentitySpec, args, acc: complex) -> complex:
    if spec.kind is Kind.PRODUCT:
        return complex(spec.lead(args)) * cmath.exp(acc)
    return complex(spec.lead(args)) + acc


def evaluate(spec: IdentitySpec, args, K: int,
             correction: Optional[Callable] = None) -> TruncationResult:
    """Run the identity at K; est_order is fitted from the errors at K and 2K.

    ``correction(args, K)`` is an optional additive tail estimate applied
    before measuring the error (the reported partial stays uncorrected).
    """
    if not spec.validity(args):
        raise ExcludedPoint(f"{spec.name}: arguments {args!r} violate the "
                            "identity's hypotheses")
    if K < 1:
        raise ValueError("K must be >= 1")
    lhs = complex(spec.lhs(args))
    acc_k = _accumulate(spec, args, 1, K)
    acc_2k = acc_k + _accumulate(spec, args, K + 1, 2 * K)

    def err(acc, kk):
        p = _finish(spec, args, acc)
        if correction is not None:
            p = p + correction(args, kk)
        return abs(p - lhs)

    e1, e2 = err(acc_k, K), err(acc_2k, 2 * K)
    order = math.log2(e1 / e2) if e1 > 0 and e2 > 0 else math.inf
    return TruncationResult(K, _finish(spec, args, acc_k), lhs, e1, order)


# -- the five identities ------------------------------------------------------

def _half_odd_distance(A: complex) -> float:
    """Distance from A to the nearest odd multiple of pi/2."""
    m = round(A.real / math.pi - 0.5)
    return min(abs(A - (2 * m + 1) * math.pi / 2), abs(A - (2 * m + 3) * math.pi / 2),
               abs(A - (2 * m - 1) * math.pi / 2))


def _cos_lhs(args):
    X, A = args
    return cmath.cos(X + A) / cmath.cos(A)


def _cos_term(k, args):
    X, A = args
    c = (k - 0.5) * math.pi
    return (1 - X / (c - A)) * (1 + X / (c + A))


RAM_COS_PRODUCT = IdentitySpec(
    "ram_cos_product", _cos_lhs, _cos_term, lambda args: 1.0, Kind.PRODUCT,
    validity=lambda args: _half_odd_distance(complex(args[1])) > 1e-6,
)


def _atan_lhs(args):
    X, A = args
    return math.atan(math.tanh(X) / math.tan(A))


def _atan_term(k, args):
    X, A = args
    return np.arctan(X / (k * math.pi + A)) - np.arctan(X / (k * math.pi - A))


def _pi_multiple_distance(A: float) -> float:
    return abs(A - round(A / math.pi) * math.pi)


RAM_ARCTAN_SUM = IdentitySpec(
    "ram_arctan_sum", _atan_lhs, _atan_term,
    lambda args: math.atan(args[0] / args[1]), Kind.SUM,
    validity=lambda args: _pi_multiple_distance(float(args[1])) > 1e-6,
)


def _scherk_xy(zeta: complex):
    x = math.log(abs((zeta + 1) / (zeta - 1)))
    y = math.log(abs((zeta - 1j) / (zeta + 1j)))
    return x, y


def _scherk_lhs(args):
    zeta = complex(args[0])
    return math.log(abs((zeta * zeta - 1) / (zeta * zeta + 1)))


def _scherk_term(k, args):
    # the two log series of the identity, paired per k: each pair collapses
    # to a real log of a positive ratio
    x, y = _scherk_xy(complex(args[0]))
    c2 = ((k - 0.5) * math.pi) ** 2
    return np.log((c2 + y * y) / (c2 + x * x))


SCHERK_IDENTITY = IdentitySpec(
    "scherk_identity", _scherk_lhs, _scherk_term, lambda args: 0.0, Kind.SUM,
    validity=lambda args: min(abs(complex(args[0]) - p)
                              for p in (1, -1, 1j, -1j)) > EXCLUSION_RADIUS,
)


def _heli2_lhs(args):
    zeta = complex(args[0])
    return (zeta + 1 / zeta).imag / (zeta - 1 / zeta).imag


def _heli2_term(k, args):
    L = math.log(abs(complex(args[0])))
    num = ((k - 1) * math.pi + 1j * L) * (k * math.pi - 1j * L)
    den = ((k - 0.5) * math.pi + 1j * L) * ((k - 0.5) * math.pi - 1j * L)
    return num / den


def _heli2_valid(args) -> bool:
    zeta = complex(args[0])
    if abs(zeta) <= EXCLUSION_RADIUS:
        return False
    if abs(abs(zeta) - 1.0) <= EXCLUSION_RADIUS:
        return False  # ln|zeta| = 0 collapses the k = 1 factor
    return abs((zeta - 1 / zeta).imag) > EXCLUSION_RADIUS


HELICOID2_IDENTITY = IdentitySpec(
    "helicoid2_identity", _heli2_lhs, _heli2_term,
    lambda args: 1 / 1j, Kind.PRODUCT, _heli2_valid,
)


def quadrant_constant(u: float, v: float) -> float:
    """+pi/2 when u and v share a sign or either vanishes, else -pi/2."""
    return 0.5 * math.pi if u * v >= 0 else -0.5 * math.pi


def _lorentz_lhs(args):
    zeta = complex(args[0])
    R = (zeta + 1 / zeta).real
    I = (zeta - 1 / zeta).imag
    y, x = -0.5 * R, 0.5 * I
    t = math.tanh(y)
    inner = 0.0 if t == 0.0 else math.atan(t / math.tan(x))
    return cmath.log(zeta).imag - inner


def _lorentz_term(k, args):
    zeta = complex(args[0])
    R = (zeta + 1 / zeta).real
    I = (zeta - 1 / zeta).imag
    return np.arctan(R / (I - 2 * k * math.pi)) + np.arctan(R / (I + 2 * k * math.pi))


def _lorentz_valid(args) -> bool:
    zeta = complex(args[0])
    if abs(zeta) <= EXCLUSION_RADIUS:
        return False
    if zeta.real <= 0.0 and abs(zeta.imag) <= EXCLUSION_RADIUS:
        return False  # principal-arg branch cut
    return abs((zeta - 1 / zeta).imag) > 1e-9  # cot argument x != 0


LORENTZ_HELICOID_IDENTITY = IdentitySpec(
    "lorentz_helicoid_identity", _lorentz_lhs, _lorentz_term,
    lambda args: quadrant_constant(complex(args[0]).real, complex(args[0]).imag),
    Kind.SUM, _lorentz_valid,
)

REGISTRY = {s.name: s for s in (
    RAM_COS_PRODUCT, RAM_ARCTAN_SUM, SCHERK_IDENTITY,
    HELICOID2_IDENTITY, LORENTZ_HELICOID_IDENTITY,
)}


# -- public operations --------------------------------------------------------

def ram_cos_product(X: complex, A: complex, K: int) -> TruncationResult:
    return evaluate(RAM_COS_PRODUCT, (complex(X), complex(A)), K)


def arctan_tail(X: float, A: float, K: int) -> float:
    """Closed-form estimate of the omitted tail: the paired terms behave like
    -2XA/(pi^2 k^2), and sum_{k>K} 1/k^2 = psi'(K + 1)."""
    return -2.0 * X * A / math.pi ** 2 * float(polygamma(1, K + 1))


def ram_arctan_sum(X: float, A: float, K: int,
                   tail_correction: bool = False) -> TruncationResult:
    corr = (lambda args, kk: arctan_tail(args[0], args[1], kk)) if tail_correction else None
    return evaluate(RAM_ARCTAN_SUM, (float(X), float(A)), K, correction=corr)


def scherk_identity(zeta: complex, K: int) -> TruncationResult:
    return evaluate(SCHERK_IDENTITY, (complex(zeta),), K)


def helicoid2_identity(zeta: complex, K: int) -> TruncationResult:
    return evaluate(HELICOID2_IDENTITY, (complex(zeta),), K)


def lorentz_helicoid_identity(zeta: complex, K: int) -> TruncationResult:
    """Literal form of the third identity: lhs uses the principal argument
    Im(log zeta) and the constant follows the quadrant rule.  The defect
    converges to 0 for Re zeta > 0 (and on the upper imaginary axis); in the
    left half-plane the two sides agree modulo pi (the proof's arctan branch),
    which ``convergence mod pi`` tests can assert.
    """
    return evaluate(LORENTZ_HELICOID_IDENTITY, (complex(zeta),), K)


def convergence_order(spec: IdentitySpec, args, K_list) -> list:
    """Run the identity at each K (increasing); est_order between consecutive
    runs replaces the single-run K-vs-2K estimate."""
    if list(K_list) != sorted(K_list):
        raise ValueError("K_list must be increasing")
    results = [evaluate(spec, args, int(K)) for K in K_list]
    out = []
    for i, r in enumerate(results):
        if i == 0:
            out.append(r)
            continue
        prev = results[i - 1]
        if prev.abs_err > 0 and r.abs_err > 0:
            order = math.log(prev.abs_err / r.abs_err) / math.log(r.K / prev.K)
        else:
            order = math.inf
        out.append(replace(r, est_order=order))
    return out
