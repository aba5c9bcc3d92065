import dataclasses
import functools
import os


def env(key, convert=str, **kwargs):
    """
    A factory around `dataclasses.field` that loads a setting from the environment.

    Args:
        key: in the format of either KEY or KEY:DEFAULT
        convert: a function that accepts a string and returns a different type
        kwargs: any kwargs to be passed to `dataclasses.field`

    Returns:
        dataclasses.field

    Raises:
        KeyError: in the event an envvar isn't found and doesn't have a default
    """
    key, partition, default = key.partition(":")

    def default_factory(key=key, default=default, convert=convert):
        if key in os.environ:
            return convert(os.environ[key])

        # no default was given, so the setting is mandatory
        if not partition:
            raise KeyError(key)

        return convert(default)

    return dataclasses.field(default_factory=default_factory, **kwargs)


@dataclasses.dataclass(frozen=True)
class Settings:
    # numeric comparisons, Binet terms grow like alpha^(2n) so both bounds matter
    tol_abs: float = env("TRIBQ_TOL_ABS:1e-10", float)
    tol_rel: float = env("TRIBQ_TOL_REL:1e-8", float)

    # cubic solver
    root_tol: float = env("TRIBQ_ROOT_TOL:1e-12", float)
    newton_max_iter: int = env("TRIBQ_NEWTON_MAX_ITER:50", int)

    # cli defaults
    n_max: int = env("TRIBQ_N_MAX:20", int)
    order: int = env("TRIBQ_ORDER:20", int)
    egf_order: int = env("TRIBQ_EGF_ORDER:40", int)

    log_level: str = env("TRIBQ_LOG_LEVEL:WARNING")


@functools.cache
def get_settings() -> Settings:
    """Load settings once, call `get_settings.cache_clear()` to re-read the environment."""
    return Settings()
