"""
Configuration Module for the knot-move invariant engine
Handles all environment variables and settings
"""

import logging
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

BACKEND_DIR = Path(__file__).parent


class Config:
    """Central configuration class"""

    # ================== SKEIN ENGINE LIMITS ==================
    BRACKET_CROSSING_LIMIT = int(os.getenv("BRACKET_CROSSING_LIMIT", "20"))
    KAUFFMAN_CROSSING_LIMIT = int(os.getenv("KAUFFMAN_CROSSING_LIMIT", "12"))
    BRACKET_METHOD = os.getenv("BRACKET_METHOD", "contract")
    BRACKET_METHODS = ("contract", "states")

    # ================== REPORTING ==================
    FLOAT_DIGITS = int(os.getenv("FLOAT_DIGITS", "6"))
    MOVE_SUITE_SEED = int(os.getenv("MOVE_SUITE_SEED", "5"))
    DENSITY_MAX_K = int(os.getenv("DENSITY_MAX_K", "40"))

    # ================== DIRECTORIES ==================
    CATALOG_PATH = Path(os.getenv("CATALOG_PATH", str(BACKEND_DIR / "data" / "catalog.json")))
    REPORT_DIR = Path(os.getenv("REPORT_DIR", "./reports"))

    # ================== LOGGING ==================
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
    LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    # ================== API CONFIGURATION ==================
    API_HOST = os.getenv("API_HOST", "0.0.0.0")
    API_PORT = int(os.getenv("API_PORT", "8000"))
    CORS_ORIGINS = [o.strip() for o in os.getenv("CORS_ORIGINS", "http://localhost:3000").split(",") if o.strip()]

    @classmethod
    def create_directories(cls):
        """Create necessary directories"""
        cls.REPORT_DIR.mkdir(parents=True, exist_ok=True)

    @classmethod
    def setup_logging(cls):
        """Configure the root logger once from LOG_LEVEL"""
        level = getattr(logging, cls.LOG_LEVEL.upper(), logging.INFO)
        logging.basicConfig(level=level, format=cls.LOG_FORMAT)

    @classmethod
    def validate_config(cls):
        """Validate critical configuration"""
        errors = []

        if cls.BRACKET_CROSSING_LIMIT <= 0:
            errors.append("BRACKET_CROSSING_LIMIT must be positive")

        if cls.KAUFFMAN_CROSSING_LIMIT <= 0:
            errors.append("KAUFFMAN_CROSSING_LIMIT must be positive")

        if cls.BRACKET_METHOD not in cls.BRACKET_METHODS:
            errors.append(f"BRACKET_METHOD must be one of {', '.join(cls.BRACKET_METHODS)}")

        if cls.FLOAT_DIGITS <= 0:
            errors.append("FLOAT_DIGITS must be positive")

        if cls.DENSITY_MAX_K < 1:
            errors.append("DENSITY_MAX_K must be at least 1")

        if not cls.CATALOG_PATH.exists():
            errors.append(f"Catalog file not found: {cls.CATALOG_PATH}")

        return errors
