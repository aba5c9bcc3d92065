"""
Quaternions over a commutative coefficient ring.

The same class serves every instantiation the package needs: `Poly` components for the
symbolic sequences, complex components for the Binet side (biquaternions, the complex
unit commutes with i, j, k) and `Fraction` components for exact evaluation. Ring
elements are central, so scaling from either side gives the same result.
"""
import cmath
import dataclasses
from collections.abc import Callable
from fractions import Fraction
from typing import Generic
from typing import TypeVar

from .ring import Poly
from .ring import poly_eval_complex
from .ring import poly_eval_exact


R = TypeVar("R")  # the coefficient ring, must be commutative
S = TypeVar("S")


@dataclasses.dataclass(frozen=True)
class Quaternion(Generic[R]):
    r: R
    i: R
    j: R
    k: R

    def components(self) -> tuple[R, R, R, R]:
        return (self.r, self.i, self.j, self.k)

    def map(self, fn: Callable[[R], S]) -> "Quaternion[S]":
        return Quaternion(fn(self.r), fn(self.i), fn(self.j), fn(self.k))

    def to_json(self) -> dict:
        return {"r": _encode(self.r), "i": _encode(self.i), "j": _encode(self.j), "k": _encode(self.k)}

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return quat_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return quat_sub(self, other)

    def __neg__(self):
        return quat_neg(self)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        return quat_scale(other, self)

    def __rmul__(self, other):
        return quat_scale(other, self)

    def __str__(self) -> str:
        return "({}) + ({})i + ({})j + ({})k".format(*self.components())


QPoly = Quaternion[Poly]
NumQuat = Quaternion[complex]


def _encode(c):
    if isinstance(c, Poly):
        return c.to_json()
    if isinstance(c, complex | float):
        c = complex(c)
        return [c.real, c.imag]
    # int and Fraction, exact
    return str(c)


def qpoly(r: Poly | int, i: Poly | int, j: Poly | int, k: Poly | int) -> QPoly:
    """Build a QPoly, promoting integer components to constant polynomials."""

    def promote(c):
        return c if isinstance(c, Poly) else Poly.const(c)

    return Quaternion(promote(r), promote(i), promote(j), promote(k))


def numquat(r: complex, i: complex, j: complex, k: complex) -> NumQuat:
    return Quaternion(complex(r), complex(i), complex(j), complex(k))


def qpoly_from_json(data: dict) -> QPoly:
    return Quaternion(*(Poly.from_json(data[key]) for key in "rijk"))


def numquat_from_json(data: dict) -> NumQuat:
    return Quaternion(*(complex(*data[key]) for key in "rijk"))


QPOLY_ZERO = qpoly(0, 0, 0, 0)
QPOLY_ONE = qpoly(1, 0, 0, 0)
NUMQUAT_ZERO = numquat(0, 0, 0, 0)


def quat_add(a: Quaternion[R], b: Quaternion[R]) -> Quaternion[R]:
    return Quaternion(a.r + b.r, a.i + b.i, a.j + b.j, a.k + b.k)


def quat_neg(a: Quaternion[R]) -> Quaternion[R]:
    return Quaternion(-a.r, -a.i, -a.j, -a.k)


def quat_sub(a: Quaternion[R], b: Quaternion[R]) -> Quaternion[R]:
    return Quaternion(a.r - b.r, a.i - b.i, a.j - b.j, a.k - b.k)


def quat_mul(a: Quaternion[R], b: Quaternion[R]) -> Quaternion[R]:
    """The Hamilton product, i^2 = j^2 = k^2 = ijk = -1."""
    return Quaternion(
        a.r * b.r - a.i * b.i - a.j * b.j - a.k * b.k,
        a.r * b.i + a.i * b.r + a.j * b.k - a.k * b.j,
        a.r * b.j - a.i * b.k + a.j * b.r + a.k * b.i,
        a.r * b.k + a.i * b.j - a.j * b.i + a.k * b.r,
    )


def quat_conj(a: Quaternion[R]) -> Quaternion[R]:
    return Quaternion(a.r, -a.i, -a.j, -a.k)


def quat_scale(c, a: Quaternion[R]) -> Quaternion[R]:
    return Quaternion(c * a.r, c * a.i, c * a.j, c * a.k)


def quat_norm(a: Quaternion[R]) -> R:
    """The scalar part of a * conj(a), every other part of that product cancels."""
    return a.r * a.r + a.i * a.i + a.j * a.j + a.k * a.k


def quat_eval(q: QPoly, z: complex) -> NumQuat:
    return q.map(lambda p: poly_eval_complex(p, z))


def quat_eval_exact(q: QPoly, x0: Fraction | int) -> Quaternion[Fraction]:
    return q.map(lambda p: poly_eval_exact(p, x0))


def quat_isclose(a: NumQuat, b: NumQuat, rel_tol: float, abs_tol: float) -> bool:
    return all(
        cmath.isclose(ca, cb, rel_tol=rel_tol, abs_tol=abs_tol)
        for ca, cb in zip(a.components(), b.components(), strict=True)
    )
