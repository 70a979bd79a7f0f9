"""Configuration loader with validation."""

import os
from dataclasses import dataclass

from dotenv import load_dotenv

# Library defaults. Functions take these as keyword defaults; Config overrides them.
ENUMERATION_LIMIT = 1_000_000
LEIBNIZ_MAX_DIM = 8
AUTO_LEIBNIZ_MAX_DIM = 5
SYLVESTER_ROUTE_MAX_DIM = 16
DECIDE_MAX_P = 101
PRODUCT_ROUTE_MAX_P = 1021
INTERP_BUDGET_FACTOR = 4
INTERP_MAX_EXTENSION = 4
EXT_CANDIDATE_FACTOR = 64
MAX_EXPONENT = 2**31 - 1
MAX_EXPANDED_TERMS = 4096
MAX_PRIME = 2**61

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class Config:
    """Application configuration."""

    log_level: str = "WARNING"
    seed: int = 0

    # Guards
    enumeration_limit: int = ENUMERATION_LIMIT
    leibniz_max_dim: int = LEIBNIZ_MAX_DIM
    auto_leibniz_max_dim: int = AUTO_LEIBNIZ_MAX_DIM
    sylvester_route_max_dim: int = SYLVESTER_ROUTE_MAX_DIM
    decide_max_p: int = DECIDE_MAX_P
    product_route_max_p: int = PRODUCT_ROUTE_MAX_P

    # Evaluation-interpolation resultant
    interp_budget_factor: int = INTERP_BUDGET_FACTOR
    interp_max_extension: int = INTERP_MAX_EXTENSION

    # Wall-clock columns break byte-identical reruns, so they are opt-in
    record_timing: bool = False

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from environment variables."""
        load_dotenv()

        log_level = os.getenv("FFELIM_LOG_LEVEL", "WARNING").upper()
        seed = int(os.getenv("FFELIM_SEED", "0"))

        enumeration_limit = int(os.getenv("FFELIM_ENUMERATION_LIMIT", str(ENUMERATION_LIMIT)))
        leibniz_max_dim = int(os.getenv("FFELIM_LEIBNIZ_MAX_DIM", str(LEIBNIZ_MAX_DIM)))
        auto_leibniz_max_dim = int(
            os.getenv("FFELIM_AUTO_LEIBNIZ_MAX_DIM", str(AUTO_LEIBNIZ_MAX_DIM))
        )
        sylvester_route_max_dim = int(
            os.getenv("FFELIM_SYLVESTER_ROUTE_MAX_DIM", str(SYLVESTER_ROUTE_MAX_DIM))
        )
        decide_max_p = int(os.getenv("FFELIM_DECIDE_MAX_P", str(DECIDE_MAX_P)))
        product_route_max_p = int(
            os.getenv("FFELIM_PRODUCT_ROUTE_MAX_P", str(PRODUCT_ROUTE_MAX_P))
        )

        interp_budget_factor = int(
            os.getenv("FFELIM_INTERP_BUDGET_FACTOR", str(INTERP_BUDGET_FACTOR))
        )
        interp_max_extension = int(
            os.getenv("FFELIM_INTERP_MAX_EXTENSION", str(INTERP_MAX_EXTENSION))
        )

        record_timing = os.getenv("FFELIM_RECORD_TIMING", "false").lower() == "true"

        return cls(
            log_level=log_level,
            seed=seed,
            enumeration_limit=enumeration_limit,
            leibniz_max_dim=leibniz_max_dim,
            auto_leibniz_max_dim=auto_leibniz_max_dim,
            sylvester_route_max_dim=sylvester_route_max_dim,
            decide_max_p=decide_max_p,
            product_route_max_p=product_route_max_p,
            interp_budget_factor=interp_budget_factor,
            interp_max_extension=interp_max_extension,
            record_timing=record_timing,
        )

    def validate(self) -> None:
        """Validate configuration values."""
        if self.log_level.upper() not in LOG_LEVELS:
            raise ValueError(f"FFELIM_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}")
        if self.seed < 0:
            raise ValueError("FFELIM_SEED must be >= 0")
        if self.enumeration_limit < 1:
            raise ValueError("FFELIM_ENUMERATION_LIMIT must be >= 1")
        if self.leibniz_max_dim < 1:
            raise ValueError("FFELIM_LEIBNIZ_MAX_DIM must be >= 1")
        if not 0 <= self.auto_leibniz_max_dim <= self.leibniz_max_dim:
            raise ValueError(
                "FFELIM_AUTO_LEIBNIZ_MAX_DIM must be between 0 and FFELIM_LEIBNIZ_MAX_DIM"
            )
        if self.sylvester_route_max_dim < 2:
            raise ValueError("FFELIM_SYLVESTER_ROUTE_MAX_DIM must be >= 2")
        if self.decide_max_p < 2:
            raise ValueError("FFELIM_DECIDE_MAX_P must be >= 2")
        if self.product_route_max_p < 2:
            raise ValueError("FFELIM_PRODUCT_ROUTE_MAX_P must be >= 2")
        if self.interp_budget_factor < 1:
            raise ValueError("FFELIM_INTERP_BUDGET_FACTOR must be >= 1")
        if self.interp_max_extension < 1:
            raise ValueError("FFELIM_INTERP_MAX_EXTENSION must be >= 1")
