import os
from dataclasses import dataclass
from typing import Callable, TypeVar

from .errors import ParameterError

T = TypeVar("T")


def _read(name: str, default: T, cast: Callable[[str], T]) -> T:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return cast(raw)
    except ValueError:
        raise ParameterError(
            component_name="configuration",
            param_name=name,
            error_type=f"Cannot convert {raw!r} with {cast.__name__}",
        )


@dataclass(frozen=True)
class Settings:
    """Numeric knobs of the constructions, read from the environment.

    Attributes
    ----------
    log_level: str
        Level name of the package logger.
    height_tolerance: float
        Stabilisation threshold of canonical height estimates.
    height_max_doublings: int
        Maximum number of doublings used by the height estimator.
    gram_threshold: float
        Gram determinant above which points are reported independent.
    interpolation_samples: int
        Number of specialisations used by rational root interpolation.
    interpolation_degree: int
        Numerator and denominator degree bound of interpolated roots.
    random_seed: int
        Seed of the specialisation sampler.
    walk_cap_factor: int
        The walk stops after walk_cap_factor * count multiples.
    """

    log_level: str = "WARNING"
    height_tolerance: float = 1e-3
    height_max_doublings: int = 8
    gram_threshold: float = 1e-3
    interpolation_samples: int = 24
    interpolation_degree: int = 8
    random_seed: int = 0
    walk_cap_factor: int = 5

    def __post_init__(self) -> None:
        positives = {
            "height_tolerance": self.height_tolerance,
            "height_max_doublings": self.height_max_doublings,
            "gram_threshold": self.gram_threshold,
            "interpolation_samples": self.interpolation_samples,
            "interpolation_degree": self.interpolation_degree,
            "walk_cap_factor": self.walk_cap_factor,
        }
        for name, value in positives.items():
            if value <= 0:
                raise ParameterError(
                    component_name="configuration",
                    param_name=name,
                    error_type="Value must be positive",
                )


def load_settings() -> Settings:
    """Read the settings from the environment, falling back on defaults.

    Returns
    -------
    Settings
        The validated settings.
    """
    defaults = Settings()
    return Settings(
        log_level=os.getenv("QUARTSEQ_LOG_LEVEL", defaults.log_level).upper(),
        height_tolerance=_read(
            "QUARTSEQ_HEIGHT_TOLERANCE", defaults.height_tolerance, float
        ),
        height_max_doublings=_read(
            "QUARTSEQ_HEIGHT_MAX_DOUBLINGS", defaults.height_max_doublings, int
        ),
        gram_threshold=_read("QUARTSEQ_GRAM_THRESHOLD", defaults.gram_threshold, float),
        interpolation_samples=_read(
            "QUARTSEQ_INTERPOLATION_SAMPLES", defaults.interpolation_samples, int
        ),
        interpolation_degree=_read(
            "QUARTSEQ_INTERPOLATION_DEGREE", defaults.interpolation_degree, int
        ),
        random_seed=_read("QUARTSEQ_RANDOM_SEED", defaults.random_seed, int),
        walk_cap_factor=_read("QUARTSEQ_WALK_CAP_FACTOR", defaults.walk_cap_factor, int),
    )
