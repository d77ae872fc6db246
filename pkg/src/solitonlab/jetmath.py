"""Second-order Taylor-jet arithmetic for complex-valued functions of two
real variables.

A ``TJet`` carries the value and all partial derivatives up to order 2 of a
function f(a, b) at a point, with complex coefficients.  Propagating jets
through an expression built from the primitives below yields derivatives
that are exact up to roundoff (no truncation error).

The module-level functions (``exp``, ``log``, ``atan``, ...) dispatch on
their argument: a plain number goes through :mod:`cmath`, a ``TJet`` through
the chain rule.  Field evaluators written against these functions can
therefore be called with numbers, complex numbers, or jets interchangeably.

``conj``, ``re`` and ``im`` act coefficient-wise; this is valid because the
jet variables are real, so conjugation commutes with differentiation.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

_NUMBER = (int, float, complex)


@dataclass(frozen=True, slots=True)
class TJet:
    """Order-2 Taylor jet of f(a, b): value, gradient and Hessian entries."""

    f: complex
    fx: complex = 0j  # d/da
    ft: complex = 0j  # d/db
    fxx: complex = 0j
    fxt: complex = 0j
    ftt: complex = 0j

    @staticmethod
    def seed_a(a) -> "TJet":
        """Jet of the coordinate function (a, b) -> a."""
        return TJet(complex(a), 1.0 + 0j)

    @staticmethod
    def seed_b(b) -> "TJet":
        """Jet of the coordinate function (a, b) -> b."""
        return TJet(complex(b), 0j, 1.0 + 0j)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TJet):
            return TJet(self.f + other.f, self.fx + other.fx, self.ft + other.ft,
                        self.fxx + other.fxx, self.fxt + other.fxt, self.ftt + other.ftt)
        if isinstance(other, _NUMBER):
            return TJet(self.f + other, self.fx, self.ft, self.fxx, self.fxt, self.ftt)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TJet(-self.f, -self.fx, -self.ft, -self.fxx, -self.fxt, -self.ftt)

    def __sub__(self, other):
        if isinstance(other, (TJet,) + _NUMBER):
            return self + (-other if isinstance(other, TJet) else -complex(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _NUMBER):
            return (-self) + complex(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TJet):
            s, o = self, other
            return TJet(
                s.f * o.f,
                s.fx * o.f + s.f * o.fx,
                s.ft * o.f + s.f * o.ft,
                s.fxx * o.f + 2 * s.fx * o.fx + s.f * o.fxx,
                s.fxt * o.f + s.fx * o.ft + s.ft * o.fx + s.f * o.fxt,
                s.ftt * o.f + 2 * s.ft * o.ft + s.f * o.ftt,
            )
        if isinstance(other, _NUMBER):
            c = complex(other)
            return TJet(self.f * c, self.fx * c, self.ft * c,
                        self.fxx * c, self.fxt * c, self.ftt * c)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TJet):
            return self * other._reciprocal()
        if isinstance(other, _NUMBER):
            return self * (1.0 / complex(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _NUMBER):
            return self._reciprocal() * complex(other)
        return NotImplemented

    def __pow__(self, p):
        if isinstance(p, int) or (isinstance(p, float) and p.is_integer()):
            return self._int_pow(int(p))
        if isinstance(p, _NUMBER):
            w = self.f ** p
            return self._compose(w, p * self.f ** (p - 1), p * (p - 1) * self.f ** (p - 2))
        return NotImplemented

    # -- composition helpers ----------------------------------------------

    def _compose(self, g0, g1, g2) -> "TJet":
        """Chain rule for g(self) given g, g', g'' at self.f."""
        return TJet(
            g0,
            g1 * self.fx,
            g1 * self.ft,
            g2 * self.fx * self.fx + g1 * self.fxx,
            g2 * self.fx * self.ft + g1 * self.fxt,
            g2 * self.ft * self.ft + g1 * self.ftt,
        )

    def _reciprocal(self) -> "TJet":
        w = 1.0 / self.f  # ZeroDivisionError propagates, by design
        return self._compose(w, -w * w, 2 * w * w * w)

    def _int_pow(self, n: int) -> "TJet":
        if n == 0:
            return TJet(1.0 + 0j)
        if n < 0:
            return self._int_pow(-n)._reciprocal()
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    # -- coefficient-wise maps (valid for real jet variables) -------------

    def conjugate(self) -> "TJet":
        return TJet(self.f.conjugate(), self.fx.conjugate(), self.ft.conjugate(),
                    self.fxx.conjugate(), self.fxt.conjugate(), self.ftt.conjugate())

    def real_part(self) -> "TJet":
        return TJet(complex(self.f.real), complex(self.fx.real), complex(self.ft.real),
                    complex(self.fxx.real), complex(self.fxt.real), complex(self.ftt.real))

    def imag_part(self) -> "TJet":
        return TJet(complex(self.f.imag), complex(self.fx.imag), complex(self.ft.imag),
                    complex(self.fxx.imag), complex(self.fxt.imag), complex(self.ftt.imag))


def _dispatch(z, jet_rule, num_fn):
    if isinstance(z, TJet):
        return jet_rule(z)
    if isinstance(z, _NUMBER):
        return num_fn(complex(z))
    raise TypeError(f"unsupported operand type {type(z).__name__!r}")


def exp(z):
    return _dispatch(z, lambda j: j._compose(*(cmath.exp(j.f),) * 3), cmath.exp)


def log(z):
    def rule(j):
        w = 1.0 / j.f
        return j._compose(cmath.log(j.f), w, -w * w)
    return _dispatch(z, rule, cmath.log)


def sqrt(z):
    def rule(j):
        r = cmath.sqrt(j.f)
        d1 = 0.5 / r
        return j._compose(r, d1, -0.25 / (j.f * r))
    return _dispatch(z, rule, cmath.sqrt)


def sin(z):
    def rule(j):
        s, c = cmath.sin(j.f), cmath.cos(j.f)
        return j._compose(s, c, -s)
    return _dispatch(z, rule, cmath.sin)


def cos(z):
    def rule(j):
        s, c = cmath.sin(j.f), cmath.cos(j.f)
        return j._compose(c, -s, -c)
    return _dispatch(z, rule, cmath.cos)


def tan(z):
    def rule(j):
        t = cmath.tan(j.f)
        sec2 = 1 + t * t
        return j._compose(t, sec2, 2 * t * sec2)
    return _dispatch(z, rule, cmath.tan)


def sinh(z):
    def rule(j):
        s, c = cmath.sinh(j.f), cmath.cosh(j.f)
        return j._compose(s, c, s)
    return _dispatch(z, rule, cmath.sinh)


def cosh(z):
    def rule(j):
        s, c = cmath.sinh(j.f), cmath.cosh(j.f)
        return j._compose(c, s, c)
    return _dispatch(z, rule, cmath.cosh)


def tanh(z):
    def rule(j):
        t = cmath.tanh(j.f)
        sech2 = 1 - t * t
        return j._compose(t, sech2, -2 * t * sech2)
    return _dispatch(z, rule, cmath.tanh)


def atan(z):
    def rule(j):
        d = 1 + j.f * j.f
        return j._compose(cmath.atan(j.f), 1 / d, -2 * j.f / (d * d))
    return _dispatch(z, rule, cmath.atan)


def atanh(z):
    def rule(j):
        d = 1 - j.f * j.f
        return j._compose(cmath.atanh(j.f), 1 / d, 2 * j.f / (d * d))
    return _dispatch(z, rule, cmath.atanh)


def asinh(z):
    def rule(j):
        d = 1 + j.f * j.f
        r = cmath.sqrt(d)
        return j._compose(cmath.asinh(j.f), 1 / r, -j.f / (d * r))
    return _dispatch(z, rule, cmath.asinh)


def power(z, p):
    if isinstance(z, TJet):
        return z ** p
    return complex(z) ** p


def conj(z):
    return z.conjugate()


def re(z):
    if isinstance(z, TJet):
        return z.real_part()
    return complex(z).real


def im(z):
    if isinstance(z, TJet):
        return z.imag_part()
    return complex(z).imag
