"""
Configuration settings for tkkforge.
"""
import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Application configuration."""

    # Application settings
    APP_NAME: str = os.getenv("APP_NAME", "tkkforge")

    # Verification settings
    DEFAULT_SEED: int = int(os.getenv("TKK_DEFAULT_SEED", "20240601"))
    SPOT_CHECKS: int = int(os.getenv("TKK_SPOT_CHECKS", "8"))
    SPOT_RANGE: int = int(os.getenv("TKK_SPOT_RANGE", "4"))
    RELATION_SAMPLES: int = int(os.getenv("TKK_RELATION_SAMPLES", "6"))

    # Ungraded wedge spaces grow as binomial(dim, 3)
    UNGRADED_DIM_CAP: int = int(os.getenv("TKK_UNGRADED_DIM_CAP", "24"))

    # Observability
    OTEL_SERVICE_NAME: str = os.getenv("OTEL_SERVICE_NAME", "tkkforge")
    OTEL_EXPORTER_ENDPOINT: str = os.getenv("OTEL_EXPORTER_OTLP_ENDPOINT", "")
    TRACE_CONSOLE: bool = os.getenv("TKK_TRACE_CONSOLE", "").lower() == "true"
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")
    LOG_JSON: bool = os.getenv("LOG_JSON", "").lower() == "true"


config = Config()
