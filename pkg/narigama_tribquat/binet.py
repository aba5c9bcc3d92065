"""
The numeric side: roots of the characteristic cubic l^3 - x^2 l^2 - x l - 1 = 0 and the
closed forms built from them (Binet values, exponential generating functions and the
partial-fraction form of the shifted generating functions).

Every closed form here is a sum over the three roots of `c_r * r^(n+s) * u_r`, where u_r
is the biquaternion 1 + r i + r^2 j + r^3 k. For the Tribonacci kinds c_r is the
partial-fraction weight 1/P'(r) and s = 1; for the Tribonacci-Lucas kinds c_r = 1, s = 0.
"""
import cmath
import dataclasses
import math

import numpy as np
from loguru import logger

from .problem import ConvergenceFailure
from .problem import IndexOutOfDomain
from .problem import InvalidArgument
from .problem import SingularDenominator
from .quaternion import NUMQUAT_ZERO
from .quaternion import NumQuat
from .quaternion import numquat
from .quaternion import quat_eval
from .sequences import Kind
from .sequences import SequenceTable
from .sequences import sequence_term
from .series import shifted_numerator
from .settings import Settings
from .settings import get_settings


@dataclasses.dataclass(frozen=True)
class CubicRoots:
    x0: float
    alpha: complex  # the real root, largest real part
    omega1: complex  # positive imaginary part
    omega2: complex
    tol: float

    def as_tuple(self) -> tuple[complex, complex, complex]:
        return (self.alpha, self.omega1, self.omega2)

    def swapped(self) -> "CubicRoots":
        """The same roots with the conjugate pair exchanged."""
        return dataclasses.replace(self, omega1=self.omega2, omega2=self.omega1)

    def to_json(self) -> dict:
        return {
            "x": self.x0,
            "alpha": [self.alpha.real, self.alpha.imag],
            "omega1": [self.omega1.real, self.omega1.imag],
            "omega2": [self.omega2.real, self.omega2.imag],
            "tol": self.tol,
        }


def _characteristic(x0: float, lam: complex) -> complex:
    return ((lam - x0 * x0) * lam - x0) * lam - 1


def _characteristic_prime(x0: float, lam: complex) -> complex:
    return (3 * lam - 2 * x0 * x0) * lam - x0


def _newton(x0: float, lam: complex, max_iter: int) -> complex:
    for iteration in range(max_iter):
        slope = _characteristic_prime(x0, lam)
        if slope == 0:
            break
        step = _characteristic(x0, lam) / slope
        lam -= step
        if abs(step) <= 1e-17 * (1 + abs(lam)):
            logger.trace("newton settled on {} after {} step(s)", lam, iteration + 1)
            break
    return lam


def root_residuals(roots: CubicRoots) -> dict[str, float]:
    """How far the roots are from satisfying the cubic and its Vieta relations.

    Residuals of the cubic are scaled by 1 + |r|^3, the sum relation by max(1, x^2).
    """
    x0 = roots.x0
    alpha, omega1, omega2 = roots.as_tuple()
    residuals = {
        "cubic_{}".format(name): abs(_characteristic(x0, r)) / (1 + abs(r) ** 3)
        for name, r in (("alpha", alpha), ("omega1", omega1), ("omega2", omega2))
    }
    residuals["root_sum"] = abs(alpha + omega1 + omega2 - x0 * x0) / max(1.0, x0 * x0)
    residuals["root_product"] = abs(alpha * omega1 * omega2 - 1)
    residuals["alpha_imag"] = abs(alpha.imag)
    return residuals


def solve_cubic(x0: float, tol: float | None = None, settings: Settings | None = None) -> CubicRoots:
    settings = settings or get_settings()
    tol = settings.root_tol if tol is None else tol

    if not x0 > 0 or not math.isfinite(x0):
        raise InvalidArgument("The cubic is only considered for positive real x, got x={}".format(x0))

    # eigenvalues of the companion matrix, then polish each one
    raw = np.roots([1.0, -x0 * x0, -x0, -1.0])
    polished = [_newton(x0, complex(r), settings.newton_max_iter) for r in raw]

    polished.sort(key=lambda r: r.real, reverse=True)
    alpha, rest = polished[0], sorted(polished[1:], key=lambda r: r.imag, reverse=True)
    omega1, omega2 = rest

    # real coefficients: alpha is real and the remaining pair is conjugate
    if abs(alpha.imag) < tol:
        alpha = complex(alpha.real, 0.0)
    if abs(omega1.imag) > tol:
        omega2 = omega1.conjugate()

    roots = CubicRoots(x0=x0, alpha=alpha, omega1=omega1, omega2=omega2, tol=tol)
    residuals = root_residuals(roots)
    failed = {name: value for name, value in residuals.items() if value >= tol}
    if failed or alpha.real <= 0:
        err = "Roots for x={} missed tolerance {}".format(x0, tol)
        raise ConvergenceFailure(err, context={"residuals": residuals})

    logger.debug("roots for x={}: alpha={} omega1={} omega2={}", x0, alpha, omega1, omega2)
    return roots


def quat_constants(roots: CubicRoots) -> tuple[NumQuat, NumQuat, NumQuat]:
    """u_r = 1 + r i + r^2 j + r^3 k for r = alpha, omega1, omega2."""
    return tuple(numquat(1, r, r**2, r**3) for r in roots.as_tuple())


def _weights(roots: CubicRoots) -> tuple[complex, complex, complex]:
    alpha, omega1, omega2 = roots.as_tuple()
    denominators = (
        (alpha - omega1) * (alpha - omega2),
        (alpha - omega1) * (omega1 - omega2),
        (alpha - omega2) * (omega1 - omega2),
    )
    if min(abs(d) for d in denominators) < roots.tol:
        raise SingularDenominator("Repeated roots at x={}".format(roots.x0), context=roots.to_json())

    d_alpha, d_omega1, d_omega2 = denominators
    return (1 / d_alpha, -1 / d_omega1, 1 / d_omega2)


def _root_terms(kind: Kind, roots: CubicRoots) -> list[tuple[complex, complex, int, NumQuat]]:
    """(root, coefficient, exponent shift, u_r) for each root."""
    if kind.scalar is Kind.TRIB:
        coefficients, shift = _weights(roots), 1
    else:
        coefficients, shift = (1, 1, 1), 0
    return list(zip(roots.as_tuple(), coefficients, (shift,) * 3, quat_constants(roots), strict=True))


def _check_index(n: int):
    if n < 0:
        raise IndexOutOfDomain("Binet forms are stated for n >= 0, got n={}".format(n))


def binet_trib(n: int, roots: CubicRoots) -> complex:
    _check_index(n)
    return sum(c * r ** (n + s) for r, c, s, _ in _root_terms(Kind.TRIB, roots))


def binet_trib_lucas(n: int, roots: CubicRoots) -> complex:
    _check_index(n)
    return sum(r**n for r in roots.as_tuple())


def binet_quat(kind: Kind, n: int, roots: CubicRoots) -> NumQuat:
    _check_index(n)
    value = NUMQUAT_ZERO
    for r, c, s, u in _root_terms(kind, roots):
        value = value + (c * r ** (n + s)) * u
    return value


def binet_value(kind: Kind, n: int, roots: CubicRoots) -> complex | NumQuat:
    if kind.is_quaternion:
        return binet_quat(kind, n, roots)
    if kind is Kind.TRIB:
        return binet_trib(n, roots)
    return binet_trib_lucas(n, roots)


def _require_quaternion(kind: Kind):
    if not kind.is_quaternion:
        raise InvalidArgument("Expected a quaternion kind (QT or Qt), got {}".format(kind))


def egf_eval(
    kind: Kind,
    roots: CubicRoots,
    y0: float,
    order: int,
    table: SequenceTable | None = None,
    settings: Settings | None = None,
) -> tuple[NumQuat, NumQuat]:
    """(sum of the first order+1 terms Q_n(x0) y0^n / n!, closed form in exponentials)."""
    _require_quaternion(kind)
    settings = settings or get_settings()

    # the tail is bounded by the largest root's exponential series remainder
    largest = max(abs(r) for r in roots.as_tuple()) * abs(y0)
    if largest:
        tail = math.exp((order + 1) * math.log(largest) - math.lgamma(order + 2))
        if tail > settings.tol_abs:
            err = "Order {} leaves a tail of {:.3e} at y={}, above {}".format(order, tail, y0, settings.tol_abs)
            raise InvalidArgument(err)

    truncated = NUMQUAT_ZERO
    for n in range(order + 1):
        term = quat_eval(sequence_term(kind, n, table), roots.x0)
        truncated = truncated + (y0**n / math.factorial(n)) * term

    closed = NUMQUAT_ZERO
    for r, c, s, u in _root_terms(kind, roots):
        closed = closed + (c * r**s * cmath.exp(r * y0)) * u

    return truncated, closed


def shifted_gf_eval(
    kind: Kind,
    m: int,
    roots: CubicRoots,
    y0: float,
    table: SequenceTable | None = None,
) -> tuple[NumQuat, NumQuat]:
    """(the shifted rational generating function at (x0, y0), its partial-fraction form)."""
    _require_quaternion(kind)
    x0 = roots.x0

    denominator = 1 - x0 * x0 * y0 - x0 * y0 * y0 - y0**3
    if abs(denominator) < roots.tol:
        raise InvalidArgument("y={} is a pole of the generating function at x={}".format(y0, x0))

    numerator = NUMQUAT_ZERO
    for power, coefficient in enumerate(shifted_numerator(kind, m, table).coeffs):
        numerator = numerator + (complex(y0) ** power) * quat_eval(coefficient, x0)
    rational = (1 / denominator) * numerator

    closed = NUMQUAT_ZERO
    for r, c, s, u in _root_terms(kind, roots):
        closed = closed + (c * r ** (m + s) / (1 - r * y0)) * u

    return rational, closed
