import cmath
import math

import pytest

import narigama_tribquat
from narigama_tribquat.binet import CubicRoots
from narigama_tribquat.binet import binet_quat
from narigama_tribquat.binet import binet_trib
from narigama_tribquat.binet import binet_trib_lucas
from narigama_tribquat.binet import binet_value
from narigama_tribquat.binet import egf_eval
from narigama_tribquat.binet import quat_constants
from narigama_tribquat.binet import root_residuals
from narigama_tribquat.binet import shifted_gf_eval
from narigama_tribquat.binet import solve_cubic
from narigama_tribquat.quaternion import numquat
from narigama_tribquat.quaternion import quat_eval
from narigama_tribquat.quaternion import quat_isclose
from narigama_tribquat.sequences import Kind
from narigama_tribquat.sequences import trib_quat


TRIBONACCI_CONSTANT = 1.8392867552141612


def close(a, b, rel_tol=1e-8, abs_tol=1e-10) -> bool:
    return cmath.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_tol)


def test_tribonacci_constant(roots: CubicRoots):
    assert roots.alpha.imag == 0
    assert math.isclose(roots.alpha.real, TRIBONACCI_CONSTANT, abs_tol=1e-12)
    assert roots.omega1.imag > 0
    assert roots.omega2 == roots.omega1.conjugate()


@pytest.mark.parametrize("x0", [0.5, 1.0, 2.0, 3.0, 10.0])
def test_root_relations(x0: float, settings):
    roots = solve_cubic(x0, settings=settings)
    alpha, omega1, omega2 = roots.as_tuple()

    assert all(value < 1e-12 for value in root_residuals(roots).values())
    assert close(alpha + omega1 + omega2, x0 * x0, rel_tol=1e-12)
    assert close(alpha * omega1 + alpha * omega2 + omega1 * omega2, -x0, rel_tol=1e-9)
    assert close(alpha * omega1 * omega2, 1, rel_tol=1e-12)


@pytest.mark.parametrize("x0", [0.0, -1.0, math.nan, math.inf])
def test_solve_cubic_rejects_bad_x(x0: float):
    with pytest.raises(narigama_tribquat.problem.InvalidArgument):
        solve_cubic(x0)


def test_solve_cubic_reports_residuals():
    # nothing is below a zero tolerance
    with pytest.raises(narigama_tribquat.problem.ConvergenceFailure) as ex:
        solve_cubic(1.0, tol=0.0)

    assert set(ex.value.to_dict()["context"]["residuals"]) >= {"cubic_alpha", "root_sum", "root_product"}


def test_quat_constants(roots: CubicRoots):
    u_alpha, _, _ = quat_constants(roots)
    expected = numquat(1, 1.83929, 3.38298, 6.22226)
    assert quat_isclose(u_alpha, expected, rel_tol=1e-5, abs_tol=0)


def test_binet_trib(roots: CubicRoots):
    assert close(binet_trib(0, roots), 0)
    assert close(binet_trib(1, roots), 1)
    assert close(binet_trib(10, roots), 149)
    assert abs(binet_trib(10, roots).imag) < 1e-9


def test_binet_trib_lucas(roots: CubicRoots):
    assert close(binet_trib_lucas(0, roots), 3)
    assert close(binet_trib_lucas(1, roots), 1)
    assert close(binet_trib_lucas(7, roots), 71)
    assert close(binet_trib_lucas(8, roots), 131)

    roots = solve_cubic(0.5)
    assert close(binet_trib_lucas(1, roots), 0.25)


def test_binet_quat(roots: CubicRoots):
    assert quat_isclose(binet_quat(Kind.TRIB_QUAT, 0, roots), numquat(0, 1, 1, 2), rel_tol=1e-8, abs_tol=1e-10)

    half = solve_cubic(0.5)
    expected = numquat(3, 0.25, 1.0625, 3.390625)
    assert quat_isclose(binet_quat(Kind.TRIB_LUCAS_QUAT, 0, half), expected, rel_tol=1e-8, abs_tol=1e-10)

    exact = quat_eval(trib_quat(12), 0.5)
    assert quat_isclose(binet_quat(Kind.TRIB_QUAT, 12, half), exact, rel_tol=1e-8, abs_tol=1e-10)


def test_binet_ignores_pair_order(roots: CubicRoots):
    for kind in Kind:
        a, b = binet_value(kind, 9, roots), binet_value(kind, 9, roots.swapped())
        if kind.is_quaternion:
            assert quat_isclose(a, b, rel_tol=1e-12, abs_tol=1e-12)
        else:
            assert close(a, b, rel_tol=1e-12)


def test_binet_rejects_negative_index(roots: CubicRoots):
    with pytest.raises(narigama_tribquat.problem.IndexOutOfDomain):
        binet_trib(-1, roots)

    with pytest.raises(narigama_tribquat.problem.IndexOutOfDomain):
        binet_quat(Kind.TRIB_LUCAS_QUAT, -1, roots)


def test_repeated_roots_are_singular():
    roots = CubicRoots(x0=1.0, alpha=2 + 0j, omega1=0.5 + 0j, omega2=0.5 + 0j, tol=1e-12)

    with pytest.raises(narigama_tribquat.problem.SingularDenominator):
        binet_trib(3, roots)

    with pytest.raises(narigama_tribquat.problem.SingularDenominator):
        binet_quat(Kind.TRIB_QUAT, 3, roots)


@pytest.mark.parametrize("kind", [Kind.TRIB_QUAT, Kind.TRIB_LUCAS_QUAT])
@pytest.mark.parametrize("y0", [0.1, 0.3])
def test_egf(kind: Kind, y0: float, roots: CubicRoots, settings):
    truncated, closed = egf_eval(kind, roots, y0, 40, settings=settings)
    assert quat_isclose(truncated, closed, rel_tol=1e-8, abs_tol=1e-10)


def test_egf_rejects_short_expansions(roots: CubicRoots, settings):
    with pytest.raises(narigama_tribquat.problem.InvalidArgument):
        egf_eval(Kind.TRIB_QUAT, roots, 0.3, 2, settings=settings)

    with pytest.raises(narigama_tribquat.problem.InvalidArgument):
        egf_eval(Kind.TRIB, roots, 0.3, 40, settings=settings)


@pytest.mark.parametrize("kind", [Kind.TRIB_QUAT, Kind.TRIB_LUCAS_QUAT])
@pytest.mark.parametrize("m", [2, 3, 8])
def test_shifted_gf_eval(kind: Kind, m: int):
    roots = solve_cubic(2.0)
    rational, closed = shifted_gf_eval(kind, m, roots, 0.1)
    assert quat_isclose(rational, closed, rel_tol=1e-8, abs_tol=1e-10)


def test_shifted_gf_eval_at_a_pole(roots: CubicRoots):
    # 1/alpha is a root of 1 - y - y^2 - y^3
    with pytest.raises(narigama_tribquat.problem.InvalidArgument):
        shifted_gf_eval(Kind.TRIB_QUAT, 2, roots, 1 / roots.alpha.real)
