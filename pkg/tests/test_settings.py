import dataclasses

import pytest

import narigama_tribquat
from narigama_tribquat.settings import Settings
from narigama_tribquat.settings import env


def test_settings_defaults(monkeypatch: pytest.MonkeyPatch):
    for key in ("TRIBQ_TOL_ABS", "TRIBQ_TOL_REL", "TRIBQ_ROOT_TOL", "TRIBQ_N_MAX", "TRIBQ_ORDER", "TRIBQ_EGF_ORDER"):
        monkeypatch.delenv(key, raising=False)

    settings = Settings()
    assert settings.tol_abs == 1e-10
    assert settings.tol_rel == 1e-8
    assert settings.root_tol == 1e-12
    assert settings.n_max == 20
    assert settings.order == 20
    assert settings.egf_order == 40


def test_settings_from_env(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv("TRIBQ_TOL_REL", "1e-6")
    monkeypatch.setenv("TRIBQ_NEWTON_MAX_ITER", "7")

    settings = narigama_tribquat.settings.get_settings()
    assert settings.tol_rel == 1e-6
    assert settings.newton_max_iter == 7


def test_pytest_env_applies():
    # set in pyproject.toml
    assert narigama_tribquat.settings.get_settings().n_max == 12


def test_get_settings_is_cached():
    assert narigama_tribquat.settings.get_settings() is narigama_tribquat.settings.get_settings()


def test_settings_are_frozen(settings):
    with pytest.raises(dataclasses.FrozenInstanceError):
        settings.tol_rel = 1.0


def test_env_without_default(monkeypatch: pytest.MonkeyPatch):
    @dataclasses.dataclass(frozen=True)
    class Config:
        database_url: str = env("TRIBQ_TEST_MANDATORY")

    monkeypatch.delenv("TRIBQ_TEST_MANDATORY", raising=False)
    with pytest.raises(KeyError):
        Config()

    monkeypatch.setenv("TRIBQ_TEST_MANDATORY", "here")
    assert Config().database_url == "here"
