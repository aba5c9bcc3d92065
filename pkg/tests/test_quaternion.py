import cmath
import random
from fractions import Fraction

from narigama_tribquat.quaternion import QPOLY_ONE
from narigama_tribquat.quaternion import QPOLY_ZERO
from narigama_tribquat.quaternion import Quaternion
from narigama_tribquat.quaternion import numquat
from narigama_tribquat.quaternion import numquat_from_json
from narigama_tribquat.quaternion import qpoly
from narigama_tribquat.quaternion import qpoly_from_json
from narigama_tribquat.quaternion import quat_add
from narigama_tribquat.quaternion import quat_conj
from narigama_tribquat.quaternion import quat_eval
from narigama_tribquat.quaternion import quat_eval_exact
from narigama_tribquat.quaternion import quat_isclose
from narigama_tribquat.quaternion import quat_mul
from narigama_tribquat.quaternion import quat_norm
from narigama_tribquat.ring import Poly
from narigama_tribquat.ring import X


I = qpoly(0, 1, 0, 0)
J = qpoly(0, 0, 1, 0)
K = qpoly(0, 0, 0, 1)


def random_qpoly(rng: random.Random) -> Quaternion:
    return Quaternion(*(Poly(rng.randint(-5, 5) for _ in range(rng.randint(0, 4))) for _ in range(4)))


def random_numquat(rng: random.Random) -> Quaternion:
    return numquat(*(complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(4)))


def test_hamilton_rules():
    minus_one = -QPOLY_ONE
    assert I * I == J * J == K * K == minus_one
    assert I * J * K == minus_one
    assert I * J == K
    assert J * I == -K
    assert J * K == I
    assert K * I == J


def test_mul_does_not_commute():
    a = qpoly(1, X, 0, 2)
    b = qpoly(0, 1, X**2, 0)
    assert quat_mul(a, b) != quat_mul(b, a)


def test_scalars_are_central():
    q = qpoly(1, X, X**2, 3)
    assert (X + 1) * q == q * (X + 1) == qpoly(X + 1, X**2 + X, X**3 + X**2, 3 * X + 3)
    assert 0 * q == QPOLY_ZERO


def test_norm():
    rng = random.Random(7)
    for _ in range(25):
        q = random_qpoly(rng)
        norm = quat_norm(q)
        assert q * quat_conj(q) == qpoly(norm, 0, 0, 0)
        assert quat_conj(q) * q == qpoly(norm, 0, 0, 0)


def test_mul_is_associative():
    rng = random.Random(99)
    for _ in range(25):
        a, b, c = random_qpoly(rng), random_qpoly(rng), random_qpoly(rng)
        assert (a * b) * c == a * (b * c)


def test_eval():
    q = qpoly(0, 1, X**2, X**4 + X)
    assert quat_eval_exact(q, 1) == Quaternion(Fraction(0), Fraction(1), Fraction(1), Fraction(2))
    assert quat_eval_exact(q, Fraction(1, 2)).k == Fraction(9, 16)
    assert quat_eval(q, 2.0) == numquat(0, 1, 4, 18)


def test_isclose():
    a = numquat(1, 2, 3, 4)
    assert quat_isclose(a, numquat(1, 2, 3, 4 + 1e-12), rel_tol=1e-8, abs_tol=1e-10)
    assert not quat_isclose(a, numquat(1, 2, 3, 4.1), rel_tol=1e-8, abs_tol=1e-10)


def test_json():
    q = qpoly(0, 1, X**2, 3)
    assert q.to_json() == {"r": [], "i": ["1"], "j": ["0", "0", "1"], "k": ["3"]}
    assert qpoly_from_json(q.to_json()) == q
    assert numquat(1, 1j, 0, 0).to_json() == {"r": [1.0, 0.0], "i": [0.0, 1.0], "j": [0.0, 0.0], "k": [0.0, 0.0]}
    encoded = {"r": [1.0, 0.0], "i": [0.0, 1.0], "j": [0.0, 0.0], "k": [-2.5, 0.0]}
    assert numquat_from_json(encoded) == numquat(1, 1j, 0, -2.5)
    assert quat_eval_exact(q, Fraction(1, 2)).to_json() == {"r": "0", "i": "1", "j": "1/4", "k": "3"}


def test_conj_reverses_products():
    rng = random.Random(5)
    for _ in range(25):
        a, b = random_qpoly(rng), random_qpoly(rng)
        assert quat_conj(a * b) == quat_conj(b) * quat_conj(a)


def test_mul_distributes_over_add():
    rng = random.Random(11)
    for _ in range(25):
        a, b, c = random_qpoly(rng), random_qpoly(rng), random_qpoly(rng)
        assert quat_mul(a, quat_add(b, c)) == quat_add(quat_mul(a, b), quat_mul(a, c))
        assert quat_mul(quat_add(b, c), a) == quat_add(quat_mul(b, a), quat_mul(c, a))


def test_complex_mul_is_associative():
    rng = random.Random(3)
    for _ in range(25):
        a, b, c = random_numquat(rng), random_numquat(rng), random_numquat(rng)
        assert quat_isclose((a * b) * c, a * (b * c), rel_tol=1e-9, abs_tol=1e-9)


def test_eval_is_multiplicative():
    rng = random.Random(21)
    for _ in range(25):
        a, b = random_qpoly(rng), random_qpoly(rng)
        z = cmath.rect(rng.uniform(0.1, 1.5), rng.uniform(-cmath.pi, cmath.pi))
        assert quat_isclose(quat_eval(a * b, z), quat_eval(a, z) * quat_eval(b, z), rel_tol=1e-9, abs_tol=1e-9)
