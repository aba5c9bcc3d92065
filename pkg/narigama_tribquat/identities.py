"""
One verifier per identity. Every verifier is deterministic and side-effect free, scans an
index range in order and stops at the first failure, reporting the index and the
difference left side minus right side.

Symbolic identities are compared exactly in Z[x]. Numeric ones (Binet, exponential
generating functions, partial fractions) are compared on a grid of x values with the
tolerances from `Settings`.
"""
import cmath
import dataclasses
import enum
import math
from collections.abc import Callable
from collections.abc import Iterable
from fractions import Fraction
from typing import Any

from loguru import logger

from .binet import binet_value
from .binet import egf_eval
from .binet import root_residuals
from .binet import shifted_gf_eval
from .binet import solve_cubic
from .matrixrep import Mat3
from .matrixrep import corollary_decomposition
from .matrixrep import mat_apply
from .matrixrep import mat_det
from .matrixrep import mat_pow
from .matrixrep import qs_product_theorem
from .matrixrep import s_matrix
from .matrixrep import s_power_closed
from .problem import ConvergenceFailure
from .problem import InconsistentIdentity
from .problem import InvalidArgument
from .quaternion import QPOLY_ZERO
from .quaternion import QPoly
from .quaternion import Quaternion
from .quaternion import qpoly
from .quaternion import quat_eval
from .quaternion import quat_eval_exact
from .quaternion import quat_isclose
from .ring import ONE
from .ring import ZERO
from .ring import Poly
from .ring import X
from .ring import poly_eval_complex
from .ring import poly_eval_exact
from .ring import poly_shift
from .sequences import RECURRENCE
from .sequences import TRIB_LUCAS_SEEDS
from .sequences import TRIB_SEEDS
from .sequences import TRIBONACCI
from .sequences import TRIBONACCI_LUCAS
from .sequences import Kind
from .sequences import SequenceTable
from .sequences import sequence_term
from .series import generating_function
from .series import gf_shifted
from .settings import Settings
from .settings import get_settings


DEFAULT_X_GRID = (0.5, 1.0, 2.0)
DEFAULT_Y_GRID = (0.1, 0.3)
SHIFT_M_MAX = 8
SHIFTED_BINET_Y = 0.1

# Binet terms grow like alpha^(2n), past this magnitude the relative tolerance is relaxed
LARGE_MAGNITUDE = 1e10
LARGE_REL_TOL = 1e-6

# delta(x) and omega(x) of the partial sum formula
DELTA = X**2 + X
OMEGA = qpoly(1, 1, X**2 + X + 1, X**4 + X**3 + X**2 + X + 1)

# sign of omega(x) in the partial sum formula, pinned by resolve_summation_sign_symbolic
SUMMATION_SIGN = -1


class Identity(enum.StrEnum):
    RECURRENCE_QT = "recurrence-QT"
    RECURRENCE_QL = "recurrence-Qt"
    GF_T = "gf-T"
    GF_L = "gf-t"
    GF_QT = "gf-QT"
    GF_QL = "gf-Qt"
    GF_SHIFTED_QT = "gf-shifted-QT"
    GF_SHIFTED_QL = "gf-shifted-Qt"
    BINOMIAL_QT = "binomial-QT"
    BINOMIAL_QL = "binomial-Qt"
    SUMMATION = "summation"
    SUMMATION_SCALAR = "summation-scalar"
    MATRIX_POWER = "matrix-power"
    MATRIX_VECTOR = "matrix-vector"
    MATRIX_PRODUCT = "matrix-product"
    COROLLARY = "corollary"
    DETERMINANT = "determinant"
    SPECIALIZATION = "specialization"
    ROOTS = "roots"
    BINET_T = "binet-T"
    BINET_L = "binet-t"
    BINET_QT = "binet-QT"
    BINET_QL = "binet-Qt"
    EGF_QT = "egf-QT"
    EGF_QL = "egf-Qt"
    SHIFTED_BINET_QT = "shifted-binet-QT"
    SHIFTED_BINET_QL = "shifted-binet-Qt"


def _encode(value: Any):
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, complex | float):
        value = complex(value)
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {key: _encode(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [_encode(item) for item in value]
    return str(value)


@dataclasses.dataclass(frozen=True)
class Failure:
    index: int
    difference: Any  # left minus right, in whatever ring the identity lives
    detail: dict | None = None  # where on a numeric grid the failure happened

    def to_json(self) -> dict:
        data = {"index": self.index, "difference": _encode(self.difference)}
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclasses.dataclass(frozen=True)
class VerifyReport:
    identity_id: str
    range_checked: tuple[int, int]
    first_failure: Failure | None = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def to_json(self) -> dict:
        return {
            "identity": self.identity_id,
            "range": list(self.range_checked),
            "passed": self.passed,
            "first_failure": self.first_failure.to_json() if self.first_failure else None,
        }


def _difference(left, right):
    """None when both sides are equal, otherwise left - right."""
    if left == right:
        return None
    if isinstance(left, Mat3):
        rows = zip(left.rows, right.rows, strict=True)
        return Mat3(tuple(tuple(a - b for a, b in zip(ra, rb, strict=True)) for ra, rb in rows))
    if isinstance(left, tuple):
        return tuple(a - b for a, b in zip(left, right, strict=True))
    return left - right


def _scan(identity_id: str, lo: int, hi: int, check: Callable[[int], Any]) -> VerifyReport:
    """Run check(n) for lo <= n <= hi, check returns None on success or a difference."""
    logger.debug("verifying {} over {}..{}", identity_id, lo, hi)
    for n in range(lo, hi + 1):
        difference = check(n)
        if difference is not None:
            logger.warning("{} failed at n={}", identity_id, n)
            return VerifyReport(identity_id, (lo, hi), Failure(n, difference))
    return VerifyReport(identity_id, (lo, hi))


def _check_n_max(n_max: int):
    if n_max < 0:
        raise InvalidArgument("n_max must be >= 0, got {}".format(n_max))


def _tag(kind: Kind) -> str:
    return kind.value


# --- symbolic identities -------------------------------------------------------------


def verify_recurrence(
    kind: Kind,
    n_max: int,
    table: SequenceTable | None = None,
    coefficients: tuple[Poly, Poly, Poly] = RECURRENCE,
) -> VerifyReport:
    """Q_{n+3} = x^2 Q_{n+2} + x Q_{n+1} + Q_n for 0 <= n <= n_max, seeded as stated."""
    _check_n_max(n_max)
    stated = TRIB_SEEDS if kind.scalar is Kind.TRIB else TRIB_LUCAS_SEEDS
    canonical = TRIBONACCI if kind.scalar is Kind.TRIB else TRIBONACCI_LUCAS
    table = table or canonical
    a, b, c = coefficients

    def term(n):
        return sequence_term(kind, n, table)

    def check(n):
        if n == 0 and table.seeds != stated:
            return _difference(table.seeds, stated)
        return _difference(term(n + 3), a * term(n + 2) + b * term(n + 1) + c * term(n))

    return _scan("recurrence-{}".format(_tag(kind)), 0, n_max, check)


def verify_generating_function(kind: Kind, order: int, table: SequenceTable | None = None) -> VerifyReport:
    """Coefficient m of the closed-form generating function equals term m."""
    _check_n_max(order)
    series = generating_function(kind, order)
    return _scan(
        "gf-{}".format(_tag(kind)),
        0,
        order,
        lambda m: _difference(series[m], sequence_term(kind, m, table)),
    )


def verify_shifted(
    kind: Kind,
    n_max: int,
    m_max: int = SHIFT_M_MAX,
    table: SequenceTable | None = None,
) -> VerifyReport:
    """Coefficient n of the shifted generating function equals term n+m, for 2 <= m <= m_max."""
    _check_n_max(n_max)
    identity_id = "gf-shifted-{}".format(_tag(kind))
    logger.debug("verifying {} for m in 2..{}", identity_id, m_max)

    for m in range(2, m_max + 1):
        series = gf_shifted(kind, m, n_max, table)

        def check(n, series=series, m=m):
            return _difference(series[n], sequence_term(kind, n + m, table))

        report = _scan(identity_id, 0, n_max, check)
        if not report.passed:
            failure = dataclasses.replace(report.first_failure, detail={"m": m})
            return dataclasses.replace(report, first_failure=failure)
    return VerifyReport(identity_id, (0, n_max))


def binomial_sum(kind: Kind, n: int, table: SequenceTable | None = None) -> QPoly:
    """sum_{r=0}^{n} sum_{s=0}^{r} C(n,r) C(r,s) x^(r+s) Q_{r+s}(x)"""
    acc = 0 * sequence_term(kind, 0, table)
    for r in range(n + 1):
        for s in range(r + 1):
            shifted = _times_x_power(sequence_term(kind, r + s, table), r + s)
            acc = acc + (math.comb(n, r) * math.comb(r, s)) * shifted
    return acc


def _times_x_power(value: Poly | QPoly, degree: int) -> Poly | QPoly:
    if isinstance(value, Poly):
        return poly_shift(value, degree)
    return value.map(lambda p: poly_shift(p, degree))


def verify_binomial_sum(kind: Kind, n_max: int, table: SequenceTable | None = None) -> VerifyReport:
    _check_n_max(n_max)
    return _scan(
        "binomial-{}".format(_tag(kind)),
        0,
        n_max,
        lambda n: _difference(binomial_sum(kind, n, table), sequence_term(kind, 3 * n, table)),
    )


def summation_right(n: int, sign: int, table: SequenceTable = TRIBONACCI) -> QPoly:
    """Q_{T,n+2} + (1 - x^2) Q_{T,n+1} + Q_{T,n} + sign * omega(x)"""
    q = table.quat
    return q(n + 2) + (1 - X**2) * q(n + 1) + q(n) + sign * OMEGA


def partial_sums(table: SequenceTable, n_max: int) -> list[QPoly]:
    sums, acc = [], QPOLY_ZERO
    for n in range(n_max + 1):
        acc = acc + table.quat(n)
        sums.append(acc)
    return sums


def resolve_summation_sign_symbolic(sample_n: int = 0, table: SequenceTable = TRIBONACCI) -> int:
    """The sign of omega(x) that makes the delta-multiplied partial sum formula a polynomial identity."""
    left = DELTA * partial_sums(table, sample_n)[sample_n]
    matches = [sign for sign in (1, -1) if left == summation_right(sample_n, sign, table)]
    if len(matches) != 1:
        raise InconsistentIdentity("Symbolic sign check at n={} matched {}".format(sample_n, matches or "nothing"))
    return matches[0]


def resolve_summation_sign(sample_n: int, sample_x: Fraction | int | str, table: SequenceTable = TRIBONACCI) -> int:
    """The sign of omega(x) that makes the partial sum formula hold exactly at a rational x."""
    x0 = Fraction(sample_x)
    delta = x0 * x0 + x0
    if delta == 0:
        raise InvalidArgument("delta(x) vanishes at x={}, the formula excludes x in {{-1, 0}}".format(x0))

    total = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    for n in range(sample_n + 1):
        total = total + quat_eval_exact(table.quat(n), x0)

    omega = quat_eval_exact(OMEGA, x0)
    base = (
        quat_eval_exact(table.quat(sample_n + 2), x0)
        + (1 - x0 * x0) * quat_eval_exact(table.quat(sample_n + 1), x0)
        + quat_eval_exact(table.quat(sample_n), x0)
    )

    matches = [sign for sign in (1, -1) if total == (1 / delta) * (base + sign * omega)]
    if len(matches) != 1:
        err = "Numeric sign check at n={}, x={} matched {}".format(sample_n, x0, matches or "nothing")
        raise InconsistentIdentity(err, context={"sum": total.to_json()})
    return matches[0]


def verify_summation(n_max: int, sign: int = SUMMATION_SIGN, table: SequenceTable = TRIBONACCI) -> VerifyReport:
    """delta(x) sum_{l<=n} Q_{T,l} = Q_{T,n+2} + (1 - x^2) Q_{T,n+1} + Q_{T,n} + sign * omega(x)"""
    _check_n_max(n_max)
    sums = partial_sums(table, n_max)
    return _scan("summation", 0, n_max, lambda n: _difference(DELTA * sums[n], summation_right(n, sign, table)))


def verify_scalar_summation(n_max: int, table: SequenceTable = TRIBONACCI) -> VerifyReport:
    """delta(x) sum_{l<=n} T_l = T_{n+2} + (1 - x^2) T_{n+1} + T_n - 1"""
    _check_n_max(n_max)
    t = table.term
    sums, acc = [], ZERO
    for n in range(n_max + 1):
        acc = acc + t(n)
        sums.append(acc)

    return _scan(
        "summation-scalar",
        0,
        n_max,
        lambda n: _difference(DELTA * sums[n], t(n + 2) + (1 - X**2) * t(n + 1) + t(n) - 1),
    )


def verify_matrix_power(n_max: int, table: SequenceTable = TRIBONACCI) -> VerifyReport:
    """S^n(x) by square and multiply equals the closed form in T terms, 1 <= n <= n_max."""
    _check_n_max(n_max)
    s = s_matrix()
    return _scan("matrix-power", 1, n_max, lambda n: _difference(mat_pow(s, n), s_power_closed(n, table)))


def verify_matrix_vector(n_max: int, table: SequenceTable = TRIBONACCI) -> VerifyReport:
    """S^n(x) (T_2, T_1, T_0) = (T_{n+2}, T_{n+1}, T_n)"""
    _check_n_max(n_max)
    s, t = s_matrix(), table.term
    seed = (t(2), t(1), t(0))
    return _scan(
        "matrix-vector",
        0,
        n_max,
        lambda n: _difference(mat_apply(mat_pow(s, n), seed), (t(n + 2), t(n + 1), t(n))),
    )


def verify_matrix_product(n_max: int, table: SequenceTable = TRIBONACCI) -> VerifyReport:
    _check_n_max(n_max)
    return _scan("matrix-product", 0, n_max, lambda n: _difference(*qs_product_theorem(n, table)))


def verify_corollary(n_max: int, table: SequenceTable = TRIBONACCI) -> VerifyReport:
    _check_n_max(n_max)
    return _scan("corollary", 0, n_max, lambda n: _difference(*corollary_decomposition(n, table)))


def verify_determinant(n_max: int) -> VerifyReport:
    """det S^n(x) = 1, n = 1 is det S(x) itself."""
    _check_n_max(n_max)
    s = s_matrix()
    return _scan("determinant", 0, n_max, lambda n: _difference(mat_det(mat_pow(s, n)), ONE))


def integer_oracle(seeds: tuple[int, int, int], count: int) -> list[int]:
    """The x = 1 sequence straight from the integer recurrence, independent of Poly."""
    values = list(seeds)
    while len(values) < count:
        values.append(values[-1] + values[-2] + values[-3])
    return values[:count]


def verify_specialization(
    n_max: int,
    trib: SequenceTable = TRIBONACCI,
    lucas: SequenceTable = TRIBONACCI_LUCAS,
) -> VerifyReport:
    """At x = 1, T_n(1) and t_n(1) are the Tribonacci and Tribonacci-Lucas numbers."""
    _check_n_max(n_max)
    tribonacci = integer_oracle((0, 1, 1), n_max + 1)
    tribonacci_lucas = integer_oracle((3, 1, 3), n_max + 1)

    def check(n):
        got = (poly_eval_exact(trib.term(n), 1), poly_eval_exact(lucas.term(n), 1))
        return _difference(got, (Fraction(tribonacci[n]), Fraction(tribonacci_lucas[n])))

    return _scan("specialization", 0, n_max, check)


# --- numeric identities --------------------------------------------------------------


def _rel_tol(magnitude: float, settings: Settings) -> float:
    if magnitude > LARGE_MAGNITUDE:
        return max(settings.tol_rel, LARGE_REL_TOL)
    return settings.tol_rel


def _numeric_difference(left, right, settings: Settings):
    if isinstance(left, Quaternion):
        magnitude = max(abs(c) for c in left.components() + right.components())
        rel_tol = _rel_tol(magnitude, settings)
        close = quat_isclose(left, right, rel_tol=rel_tol, abs_tol=settings.tol_abs)
    else:
        rel_tol = _rel_tol(max(abs(left), abs(right)), settings)
        close = cmath.isclose(left, right, rel_tol=rel_tol, abs_tol=settings.tol_abs)
    return None if close else left - right


def _scan_grid(identity_id: str, points: Iterable, lo: int, hi: int, check) -> VerifyReport:
    """_scan repeated over grid points, a failure records the point it happened at."""
    for point in points:
        report = _scan(identity_id, lo, hi, lambda n, point=point: check(point, n))
        if not report.passed:
            failure = dataclasses.replace(report.first_failure, detail=point)
            return dataclasses.replace(report, first_failure=failure)
    return VerifyReport(identity_id, (lo, hi))


def verify_roots(x_grid: Iterable[float], settings: Settings | None = None) -> VerifyReport:
    """The roots satisfy the cubic, sum to x^2 and multiply to 1, at every grid point."""
    settings = settings or get_settings()
    x_grid = tuple(x_grid)

    def check(index):
        try:
            roots = solve_cubic(x_grid[index], settings=settings)
        except ConvergenceFailure as ex:
            return ex.context

        failed = {name: value for name, value in root_residuals(roots).items() if value >= settings.root_tol}
        return failed or None

    return _scan("roots", 0, len(x_grid) - 1, check)


def verify_binet(
    kind: Kind,
    x_grid: Iterable[float],
    n_max: int,
    table: SequenceTable | None = None,
    settings: Settings | None = None,
) -> VerifyReport:
    """The Binet value at x0 matches the exact term evaluated at x0."""
    _check_n_max(n_max)
    settings = settings or get_settings()
    roots = {x0: solve_cubic(x0, settings=settings) for x0 in x_grid}

    def check(point, n):
        x0 = point["x"]
        term = sequence_term(kind, n, table)
        exact = quat_eval(term, x0) if kind.is_quaternion else poly_eval_complex(term, x0)
        return _numeric_difference(binet_value(kind, n, roots[x0]), exact, settings)

    points = [{"x": x0} for x0 in roots]
    return _scan_grid("binet-{}".format(_tag(kind)), points, 0, n_max, check)


def verify_egf(
    kind: Kind,
    x_grid: Iterable[float],
    y_grid: Iterable[float] = DEFAULT_Y_GRID,
    order: int | None = None,
    table: SequenceTable | None = None,
    settings: Settings | None = None,
) -> VerifyReport:
    """The truncated exponential sum matches the closed form at every (x, y) on the grid."""
    settings = settings or get_settings()
    order = settings.egf_order if order is None else order
    points = [{"x": x0, "y": y0} for x0 in x_grid for y0 in y_grid]
    roots = {x0: solve_cubic(x0, settings=settings) for x0 in {point["x"] for point in points}}

    def check(point, _):
        truncated, closed = egf_eval(kind, roots[point["x"]], point["y"], order, table, settings)
        return _numeric_difference(truncated, closed, settings)

    return _scan_grid("egf-{}".format(_tag(kind)), points, order, order, check)


def verify_shifted_binet(
    kind: Kind,
    x_grid: Iterable[float],
    m_max: int = SHIFT_M_MAX,
    y0: float = SHIFTED_BINET_Y,
    table: SequenceTable | None = None,
    settings: Settings | None = None,
) -> VerifyReport:
    """The shifted rational generating function equals its partial fractions over the roots."""
    settings = settings or get_settings()
    roots = {x0: solve_cubic(x0, settings=settings) for x0 in x_grid}

    def check(point, m):
        rational, closed = shifted_gf_eval(kind, m, roots[point["x"]], y0, table)
        return _numeric_difference(rational, closed, settings)

    points = [{"x": x0, "y": y0} for x0 in roots]
    return _scan_grid("shifted-binet-{}".format(_tag(kind)), points, 2, m_max, check)


# --- aggregation ---------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class Plan:
    """What verify_all runs against: ranges, grids and the sequence tables under test."""

    n_max: int
    x_grid: tuple[float, ...] = DEFAULT_X_GRID
    y_grid: tuple[float, ...] = DEFAULT_Y_GRID
    trib: SequenceTable = TRIBONACCI
    lucas: SequenceTable = TRIBONACCI_LUCAS
    settings: Settings = dataclasses.field(default_factory=get_settings)

    def table(self, kind: Kind) -> SequenceTable:
        return self.trib if kind.scalar is Kind.TRIB else self.lucas


def _symbolic(plan: Plan) -> dict[Identity, Callable[[], VerifyReport]]:
    n, t = plan.n_max, plan.table
    qt, ql = Kind.TRIB_QUAT, Kind.TRIB_LUCAS_QUAT
    return {
        Identity.RECURRENCE_QT: lambda: verify_recurrence(qt, n, t(qt)),
        Identity.RECURRENCE_QL: lambda: verify_recurrence(ql, n, t(ql)),
        Identity.GF_T: lambda: verify_generating_function(Kind.TRIB, n, t(Kind.TRIB)),
        Identity.GF_L: lambda: verify_generating_function(Kind.TRIB_LUCAS, n, t(Kind.TRIB_LUCAS)),
        Identity.GF_QT: lambda: verify_generating_function(qt, n, t(qt)),
        Identity.GF_QL: lambda: verify_generating_function(ql, n, t(ql)),
        Identity.GF_SHIFTED_QT: lambda: verify_shifted(qt, n, table=t(qt)),
        Identity.GF_SHIFTED_QL: lambda: verify_shifted(ql, n, table=t(ql)),
        Identity.BINOMIAL_QT: lambda: verify_binomial_sum(qt, n, t(qt)),
        Identity.BINOMIAL_QL: lambda: verify_binomial_sum(ql, n, t(ql)),
        Identity.SUMMATION: lambda: verify_summation(n, table=plan.trib),
        Identity.SUMMATION_SCALAR: lambda: verify_scalar_summation(n, plan.trib),
        Identity.MATRIX_POWER: lambda: verify_matrix_power(n, plan.trib),
        Identity.MATRIX_VECTOR: lambda: verify_matrix_vector(n, plan.trib),
        Identity.MATRIX_PRODUCT: lambda: verify_matrix_product(n, plan.trib),
        Identity.COROLLARY: lambda: verify_corollary(n, plan.trib),
        Identity.DETERMINANT: lambda: verify_determinant(n),
        Identity.SPECIALIZATION: lambda: verify_specialization(n, plan.trib, plan.lucas),
    }


def _numeric(plan: Plan) -> dict[Identity, Callable[[], VerifyReport]]:
    n, t, xs, settings = plan.n_max, plan.table, plan.x_grid, plan.settings
    qt, ql = Kind.TRIB_QUAT, Kind.TRIB_LUCAS_QUAT
    return {
        Identity.ROOTS: lambda: verify_roots(xs, settings),
        Identity.BINET_T: lambda: verify_binet(Kind.TRIB, xs, n, t(Kind.TRIB), settings),
        Identity.BINET_L: lambda: verify_binet(Kind.TRIB_LUCAS, xs, n, t(Kind.TRIB_LUCAS), settings),
        Identity.BINET_QT: lambda: verify_binet(qt, xs, n, t(qt), settings),
        Identity.BINET_QL: lambda: verify_binet(ql, xs, n, t(ql), settings),
        Identity.EGF_QT: lambda: verify_egf(qt, xs, plan.y_grid, table=t(qt), settings=settings),
        Identity.EGF_QL: lambda: verify_egf(ql, xs, plan.y_grid, table=t(ql), settings=settings),
        Identity.SHIFTED_BINET_QT: lambda: verify_shifted_binet(qt, xs, table=t(qt), settings=settings),
        Identity.SHIFTED_BINET_QL: lambda: verify_shifted_binet(ql, xs, table=t(ql), settings=settings),
    }


def verify_identity(identity: Identity, plan: Plan) -> VerifyReport:
    _check_n_max(plan.n_max)
    numeric = _numeric(plan)
    if identity in numeric and not plan.x_grid:
        raise InvalidArgument("{} is checked numerically and needs a non-empty x grid".format(identity))
    return (_symbolic(plan) | numeric)[identity]()


def verify_all(
    n_max: int,
    x_grid: Iterable[float] = DEFAULT_X_GRID,
    trib: SequenceTable = TRIBONACCI,
    lucas: SequenceTable = TRIBONACCI_LUCAS,
    settings: Settings | None = None,
) -> list[VerifyReport]:
    """Every verifier, numeric ones only when the x grid is non-empty."""
    _check_n_max(n_max)
    plan = Plan(n_max=n_max, x_grid=tuple(x_grid), trib=trib, lucas=lucas, settings=settings or get_settings())

    verifiers = _symbolic(plan)
    if plan.x_grid:
        verifiers |= _numeric(plan)

    reports = [verify() for verify in verifiers.values()]
    failed = [report.identity_id for report in reports if not report.passed]
    logger.info("verified {} identities, {} failed {}", len(reports), len(failed), failed)
    return reports
