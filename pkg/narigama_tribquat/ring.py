"""
Exact dense univariate polynomials in x over Python's arbitrary-precision integers.

A polynomial is stored as a tuple of coefficients in ascending powers, e.g. (1, 10, 5)
is 1 + 10x + 5x^2. Trailing zeros are stripped on construction, so the zero polynomial
is the empty tuple and equality is plain tuple equality.
"""
import dataclasses
import operator
from fractions import Fraction


# degree of the zero polynomial
NEG_INFINITY = float("-inf")


def _normalize(coeffs) -> tuple[int, ...]:
    coeffs = tuple(operator.index(c) for c in coeffs)
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return coeffs[:n]


@dataclasses.dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "Poly":
        if degree < 0:
            raise ValueError("Negative exponents never occur, got x^{}".format(degree))
        return cls((0,) * degree + (c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls.monomial(1)

    @classmethod
    def from_json(cls, data: list[str]) -> "Poly":
        return cls(tuple(int(c) for c in data))

    @property
    def degree(self) -> int | float:
        """len(coeffs) - 1, or NEG_INFINITY for the zero polynomial."""
        if not self.coeffs:
            return NEG_INFINITY
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return poly_neg(self)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_add(self, poly_neg(other))

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return poly_add(Poly.const(other), poly_neg(self))

    def __mul__(self, other):
        if isinstance(other, int):
            return poly_scale(other, self)
        if not isinstance(other, Poly):
            # quaternions and matrices handle Poly scalars through __rmul__
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        return poly_pow(self, exponent)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"

        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue

            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                variable = "x" if power == 1 else "x^{}".format(power)
                body = variable if magnitude == 1 else "{}{}".format(magnitude, variable)
            terms.append((sign, body))

        first_sign, first_body = terms[0]
        text = first_body if first_sign == "+" else "-{}".format(first_body)
        for sign, body in terms[1:]:
            text += " {} {}".format(sign, body)
        return text


ZERO = Poly()
ONE = Poly.const(1)
X = Poly.x()


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    res = list(a.coeffs)
    for index, c in enumerate(b.coeffs):
        res[index] += c
    return Poly(res)


def poly_neg(a: Poly) -> Poly:
    return Poly(-c for c in a.coeffs)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_scale(c: int, a: Poly) -> Poly:
    return Poly(c * coeff for coeff in a.coeffs)


def poly_shift(a: Poly, degree: int) -> Poly:
    """Multiply by x^degree."""
    if not a.coeffs:
        return a
    return Poly((0,) * degree + a.coeffs)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a.coeffs or not b.coeffs:
        return ZERO

    res = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j, bj in enumerate(b.coeffs):
            res[i + j] += ai * bj
    return Poly(res)


def poly_pow(a: Poly, exponent: int) -> Poly:
    if exponent < 0:
        raise ValueError("Negative exponents never occur, got {}".format(exponent))

    # square and multiply
    result, base = ONE, a
    while exponent:
        if exponent & 1:
            result = poly_mul(result, base)
        base = poly_mul(base, base)
        exponent >>= 1
    return result


def _horner(coeffs: tuple[int, ...], x0, zero):
    acc = zero
    for c in reversed(coeffs):
        acc = acc * x0 + c
    return acc


def poly_eval_exact(p: Poly, x0: Fraction | int) -> Fraction:
    return _horner(p.coeffs, Fraction(x0), Fraction(0))


def poly_eval_complex(p: Poly, z: complex) -> complex:
    return _horner(p.coeffs, complex(z), 0j)
