import dataclasses
from typing import Generic
from typing import TypeVar

from .problem import IndexOutOfDomain
from .problem import InvalidArgument
from .quaternion import QPoly
from .ring import ONE
from .ring import ZERO
from .ring import Poly
from .ring import X
from .sequences import TRIBONACCI
from .sequences import SequenceTable


R = TypeVar("R")  # Poly or QPoly


@dataclasses.dataclass(frozen=True)
class Mat3(Generic[R]):
    rows: tuple[tuple[R, R, R], tuple[R, R, R], tuple[R, R, R]]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise InvalidArgument("Mat3 needs exactly 3 rows of 3 entries")
        object.__setattr__(self, "rows", rows)

    def __getitem__(self, index: tuple[int, int]) -> R:
        row, col = index
        return self.rows[row][col]

    def __mul__(self, other):
        if not isinstance(other, Mat3):
            return NotImplemented
        return mat_mul(self, other)

    def column(self, col: int) -> tuple[R, R, R]:
        return tuple(row[col] for row in self.rows)

    def to_json(self) -> list:
        return [[entry.to_json() for entry in row] for row in self.rows]


def mat_identity() -> Mat3[Poly]:
    return Mat3(((ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)))


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    """Row by column. Factors keep their order, quaternion entries do not commute."""
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = a[i, 0] * b[0, j]
            for k in (1, 2):
                acc = acc + a[i, k] * b[k, j]
            row.append(acc)
        rows.append(tuple(row))
    return Mat3(tuple(rows))


def mat_pow(m: Mat3, n: int) -> Mat3:
    if n < 0:
        raise IndexOutOfDomain("Matrix powers are taken for n >= 0, got n={}".format(n))
    if n == 0:
        return mat_identity()

    # square and multiply
    result, base = None, m
    while n:
        if n & 1:
            result = base if result is None else mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def mat_apply(m: Mat3, column: tuple) -> tuple:
    """m times a column vector."""
    return tuple(m[i, 0] * column[0] + m[i, 1] * column[1] + m[i, 2] * column[2] for i in range(3))


def mat_det(m: Mat3[Poly]) -> Poly:
    """Cofactor expansion along the first row, commutative entries only."""
    (a, b, c), (d, e, f), (g, h, i) = m.rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def s_matrix() -> Mat3[Poly]:
    """The companion matrix of s_n = x^2 s_{n-1} + x s_{n-2} + s_{n-3}."""
    return Mat3(((X**2, X, ONE), (ONE, ZERO, ZERO), (ZERO, ONE, ZERO)))


def s_power_closed(n: int, table: SequenceTable = TRIBONACCI) -> Mat3[Poly]:
    """S^n(x) assembled from T_{n+1} .. T_{n-3}, using the backward values for n < 3."""
    if n < 1:
        raise IndexOutOfDomain("The closed form of S^n is stated for n >= 1, got n={}".format(n))

    t = table.term
    return Mat3(
        (
            (t(n + 1), X * t(n) + t(n - 1), t(n)),
            (t(n), X * t(n - 1) + t(n - 2), t(n - 1)),
            (t(n - 1), X * t(n - 2) + t(n - 3), t(n - 2)),
        ),
    )


def p_term(n: int, table: SequenceTable = TRIBONACCI) -> QPoly:
    """P_{T,n}(x) = x Q_{T,n}(x) + Q_{T,n-1}(x), n >= 1."""
    return X * table.quat(n) + table.quat(n - 1)


def qs_matrix(table: SequenceTable = TRIBONACCI) -> Mat3[QPoly]:
    q = table.quat
    return Mat3(
        (
            (q(4), p_term(3, table), q(3)),
            (q(3), p_term(2, table), q(2)),
            (q(2), p_term(1, table), q(1)),
        ),
    )


def qs_product_theorem(n: int, table: SequenceTable = TRIBONACCI) -> tuple[Mat3[QPoly], Mat3[QPoly]]:
    """(Q_S(x) S^n(x), the matrix of shifted Q_T and P_T terms)."""
    if n < 0:
        raise IndexOutOfDomain("The product theorem is stated for n >= 0, got n={}".format(n))

    left = mat_mul(qs_matrix(table), mat_pow(s_matrix(), n))

    q = table.quat
    right = Mat3(
        (
            (q(n + 4), p_term(n + 3, table), q(n + 3)),
            (q(n + 3), p_term(n + 2, table), q(n + 2)),
            (q(n + 2), p_term(n + 1, table), q(n + 1)),
        ),
    )
    return left, right


def corollary_decomposition(n: int, table: SequenceTable = TRIBONACCI) -> tuple[QPoly, QPoly]:
    """(Q_{T,n+2}, Q_{T,2} T_{n+1} + (x Q_{T,1} + Q_{T,0}) T_n + Q_{T,1} T_{n-1})."""
    if n < 0:
        raise IndexOutOfDomain("The decomposition is stated for n >= 0, got n={}".format(n))

    q, t = table.quat, table.term
    combination = q(2) * t(n + 1) + (X * q(1) + q(0)) * t(n) + q(1) * t(n - 1)
    return q(n + 2), combination
