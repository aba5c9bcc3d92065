import pytest

import narigama_tribquat
from narigama_tribquat.ring import ONE
from narigama_tribquat.ring import Poly
from narigama_tribquat.ring import X
from narigama_tribquat.sequences import SequenceTable


@pytest.fixture(autouse=True)
def _settings_cache():
    # settings are cached per process, make sure monkeypatched envvars are seen
    narigama_tribquat.settings.get_settings.cache_clear()
    yield
    narigama_tribquat.settings.get_settings.cache_clear()


@pytest.fixture
def settings() -> narigama_tribquat.settings.Settings:
    return narigama_tribquat.settings.get_settings()


@pytest.fixture
def roots(settings):
    """Roots of l^3 - l^2 - l - 1, the x = 1 cubic."""
    return narigama_tribquat.binet.solve_cubic(1.0, settings=settings)


# tables that break one thing each, used as negative controls. The Tribonacci ones
# extend backwards like the real table so the matrix checks can run against them.


@pytest.fixture
def trib_bad_seed() -> SequenceTable:
    return SequenceTable("T", (Poly(), ONE, X**2 + 1), min_index=-3)


@pytest.fixture
def trib_bad_coefficient() -> SequenceTable:
    return SequenceTable("T", (Poly(), ONE, X**2), coefficients=(X**2, 2 * X, ONE), min_index=-3)


@pytest.fixture
def lucas_bad_seed() -> SequenceTable:
    return SequenceTable("t", (Poly.const(3), X**2, X**4 + X))


@pytest.fixture
def lucas_bad_coefficient() -> SequenceTable:
    return SequenceTable("t", (Poly.const(3), X**2, X**4 + 2 * X), coefficients=(X**2, X, 2 * ONE))
