import random

import pytest

import narigama_tribquat
from narigama_tribquat.matrixrep import Mat3
from narigama_tribquat.matrixrep import corollary_decomposition
from narigama_tribquat.matrixrep import mat_apply
from narigama_tribquat.matrixrep import mat_det
from narigama_tribquat.matrixrep import mat_identity
from narigama_tribquat.matrixrep import mat_mul
from narigama_tribquat.matrixrep import mat_pow
from narigama_tribquat.matrixrep import qs_matrix
from narigama_tribquat.matrixrep import qs_product_theorem
from narigama_tribquat.matrixrep import s_matrix
from narigama_tribquat.matrixrep import s_power_closed
from narigama_tribquat.quaternion import QPOLY_ZERO
from narigama_tribquat.quaternion import qpoly
from narigama_tribquat.ring import ONE
from narigama_tribquat.ring import ZERO
from narigama_tribquat.ring import Poly
from narigama_tribquat.ring import X
from narigama_tribquat.sequences import trib_poly
from narigama_tribquat.sequences import trib_quat


def test_s_matrix():
    assert s_matrix().rows == ((X**2, X, ONE), (ONE, ZERO, ZERO), (ZERO, ONE, ZERO))
    assert s_power_closed(1) == s_matrix()


def test_mat_pow():
    s = s_matrix()
    assert mat_pow(s, 0) == mat_identity()
    assert mat_pow(s, 1) == s
    assert mat_pow(s, 5) == mat_mul(mat_mul(mat_mul(mat_mul(s, s), s), s), s)
    assert mat_pow(s, 5)[0, 0] == trib_poly(6)

    with pytest.raises(narigama_tribquat.problem.IndexOutOfDomain):
        mat_pow(s, -1)


@pytest.mark.parametrize("n", range(1, 21))
def test_s_power_closed(n: int):
    assert mat_pow(s_matrix(), n) == s_power_closed(n)


def test_s_power_closed_domain():
    with pytest.raises(narigama_tribquat.problem.IndexOutOfDomain):
        s_power_closed(0)


def test_mat_apply():
    seed = (trib_poly(2), trib_poly(1), trib_poly(0))
    assert mat_apply(mat_pow(s_matrix(), 7), seed) == (trib_poly(9), trib_poly(8), trib_poly(7))


def test_mat_det():
    assert mat_det(s_matrix()) == ONE
    assert mat_det(mat_pow(s_matrix(), 9)) == ONE
    assert mat_det(mat_identity()) == ONE


def test_mat_mul_keeps_factor_order():
    i, j = qpoly(0, 1, 0, 0), qpoly(0, 0, 1, 0)
    z = QPOLY_ZERO
    diag_i = Mat3(((i, z, z), (z, i, z), (z, z, i)))
    diag_j = Mat3(((j, z, z), (z, j, z), (z, z, j)))

    assert (diag_i * diag_j)[1, 1] == qpoly(0, 0, 0, 1)
    assert (diag_j * diag_i)[1, 1] == qpoly(0, 0, 0, -1)


def test_mat3_shape():
    with pytest.raises(narigama_tribquat.problem.InvalidArgument):
        Mat3(((ONE, ZERO), (ZERO, ONE)))


def test_qs_matrix():
    q = qs_matrix()
    assert q[0, 0] == trib_quat(4)
    assert q[2, 1] == X * trib_quat(1) + trib_quat(0)
    assert q.column(2) == (trib_quat(3), trib_quat(2), trib_quat(1))


@pytest.mark.parametrize("n", [0, 1, 2, 7, 20])
def test_qs_product_theorem(n: int):
    left, right = qs_product_theorem(n)
    assert left == right


@pytest.mark.parametrize("n", [0, 1, 5, 30])
def test_corollary_decomposition(n: int):
    expected, combination = corollary_decomposition(n)
    assert expected == trib_quat(n + 2)
    assert combination == expected


def test_to_json():
    assert mat_identity().to_json() == [[["1"], [], []], [[], ["1"], []], [[], [], ["1"]]]


def random_qpoly_matrix(rng: random.Random) -> Mat3:
    def entry():
        return qpoly(*(Poly(rng.randint(-4, 4) for _ in range(rng.randint(0, 3))) for _ in range(4)))

    return Mat3(tuple(tuple(entry() for _ in range(3)) for _ in range(3)))


def test_mat_pow_adds_exponents():
    rng = random.Random(12)
    s = s_matrix()
    for _ in range(20):
        a, b = rng.randint(0, 12), rng.randint(0, 12)
        assert mat_pow(s, a + b) == mat_mul(mat_pow(s, a), mat_pow(s, b))


def test_mat_mul_is_associative():
    rng = random.Random(8)
    for _ in range(10):
        left, right = random_qpoly_matrix(rng), random_qpoly_matrix(rng)
        middle = mat_pow(s_matrix(), rng.randint(0, 6))
        assert mat_mul(mat_mul(left, middle), right) == mat_mul(left, mat_mul(middle, right))
        assert mat_mul(mat_mul(qs_matrix(), middle), left) == mat_mul(qs_matrix(), mat_mul(middle, left))
