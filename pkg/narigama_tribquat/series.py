"""
Truncated formal power series in y with Poly or QPoly coefficients.

Unlike a polynomial, a series of order N always stores N+1 coefficients: zeros are
explicit because the truncation order carries information (coefficients past N are
unknown, not zero).
"""
import dataclasses
from typing import Generic
from typing import TypeVar

from .problem import IndexOutOfDomain
from .problem import InvalidArgument
from .problem import NonUnitConstantTerm
from .quaternion import QPoly
from .quaternion import qpoly
from .ring import ONE
from .ring import ZERO
from .ring import Poly
from .ring import X
from .sequences import Kind
from .sequences import SequenceTable
from .sequences import sequence_term


R = TypeVar("R")


@dataclasses.dataclass(frozen=True)
class TruncSeries(Generic[R]):
    coeffs: tuple[R, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise InvalidArgument("A truncated series holds at least the y^0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> R:
        return self.coeffs[m]

    def __len__(self) -> int:
        return len(self.coeffs)

    def coefficient(self, m: int) -> R:
        """Coefficient of y^m, zero past the stored terms."""
        if m < len(self.coeffs):
            return self.coeffs[m]
        return _zero_like(self.coeffs[0])

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]


def _zero_like(c):
    return c - c


# 1 - x^2 y - x y^2 - y^3, shared by every generating function here
DENOMINATOR: TruncSeries[Poly] = TruncSeries((ONE, -(X**2), -X, -ONE))


def series_mul(a: TruncSeries, b: TruncSeries, order: int) -> TruncSeries:
    """Cauchy product truncated at y^order. Factors keep their left/right position."""
    out = []
    for m in range(order + 1):
        acc = _zero_like(a[0] * b[0])
        for k in range(max(0, m - b.order), min(m, a.order) + 1):
            acc = acc + a[k] * b[m - k]
        out.append(acc)
    return TruncSeries(out)


def series_from_rational(numer: TruncSeries, denom: TruncSeries[Poly], order: int) -> TruncSeries:
    """The unique s with s * denom = numer (mod y^(order+1)).

    Denominator coefficients are scalars (central), so s_m = numer_m - sum_k denom_k s_{m-k}.
    """
    if order < 0:
        raise InvalidArgument("Series order must be >= 0, got {}".format(order))
    if denom[0] != ONE:
        raise NonUnitConstantTerm("Denominator constant term is {}".format(denom[0]))

    out = []
    for m in range(order + 1):
        acc = numer.coefficient(m)
        for k in range(1, min(m, denom.order) + 1):
            if not denom[k].is_zero():
                acc = acc - denom[k] * out[m - k]
        out.append(acc)
    return TruncSeries(out)


def gf_trib(order: int) -> TruncSeries[Poly]:
    """y / (1 - x^2 y - x y^2 - y^3)"""
    return series_from_rational(TruncSeries((ZERO, ONE)), DENOMINATOR, order)


def gf_trib_lucas(order: int) -> TruncSeries[Poly]:
    """(3 - 2x^2 y - x y^2) / (1 - x^2 y - x y^2 - y^3)"""
    numer = TruncSeries((Poly.const(3), -2 * X**2, -X))
    return series_from_rational(numer, DENOMINATOR, order)


# numerators as printed, grouped by power of y
_TRIB_QUAT_NUMERATOR = TruncSeries(
    (
        qpoly(0, 1, X**2, X**4 + X),
        qpoly(1, 0, X, X**3 + 1),
        qpoly(0, 0, 1, X**2),
    ),
)

_TRIB_LUCAS_QUAT_NUMERATOR = TruncSeries(
    (
        qpoly(3, X**2, X**4 + 2 * X, X**6 + 3 * X**3 + 3),
        qpoly(-2 * X**2, 2 * X, X**3 + 3, X**5 + 3 * X**2),
        qpoly(-X, 3, X**2, X**4 + 2 * X),
    ),
)


def gf_trib_quat(order: int) -> TruncSeries[QPoly]:
    return series_from_rational(_TRIB_QUAT_NUMERATOR, DENOMINATOR, order)


def gf_trib_lucas_quat(order: int) -> TruncSeries[QPoly]:
    return series_from_rational(_TRIB_LUCAS_QUAT_NUMERATOR, DENOMINATOR, order)


def shifted_numerator(kind: Kind, m: int, table: SequenceTable | None = None) -> TruncSeries:
    """s_m + (x s_{m-1} + s_{m-2}) y + s_{m-1} y^2, for m >= 2."""
    if m < 2:
        raise IndexOutOfDomain("The shifted generating function needs m >= 2, got m={}".format(m))

    def term(n):
        return sequence_term(kind, n, table)

    return TruncSeries((term(m), X * term(m - 1) + term(m - 2), term(m - 1)))


def gf_shifted(kind: Kind, m: int, order: int, table: SequenceTable | None = None) -> TruncSeries:
    return series_from_rational(shifted_numerator(kind, m, table), DENOMINATOR, order)


def generating_function(kind: Kind, order: int, shift: int | None = None) -> TruncSeries:
    if shift is not None:
        return gf_shifted(kind, shift, order)

    return {
        Kind.TRIB: gf_trib,
        Kind.TRIB_LUCAS: gf_trib_lucas,
        Kind.TRIB_QUAT: gf_trib_quat,
        Kind.TRIB_LUCAS_QUAT: gf_trib_lucas_quat,
    }[kind](order)
