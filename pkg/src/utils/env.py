import logging
import os
from pathlib import Path

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEGREE_BOUND_VARIABLE = "BSATO_DEGREE_BOUND"
DEFAULT_DEGREE_BOUND = 6


def find_project_root() -> Path:
    """
    Find the project root directory (where .env or pyproject.toml is located).

    Returns:
        Path: Path to the project root, or the checkout containing this module if not found
    """
    current_path = Path.cwd().resolve()

    while current_path != current_path.parent:
        if (current_path / ".env").exists() or (current_path / "pyproject.toml").exists():
            return current_path
        current_path = current_path.parent

    return Path(__file__).resolve().parents[2]


def load_environment() -> bool:
    """Load environment variables from .env file at project root."""
    try:
        env_path = find_project_root() / ".env"

        if env_path.exists():
            logger.debug(f"Loading environment variables from {env_path}")
            load_dotenv(env_path)
            return True
        logger.debug("No .env file found at project root")
        return False
    except OSError as e:
        logger.error(f"Error loading environment variables: {e}")
        return False


def default_degree_bound() -> int:
    """
    The degree bound from BSATO_DEGREE_BOUND, or 6.

    Raises:
        ValueError: If the variable is set but not a positive integer
    """
    raw = os.environ.get(DEGREE_BOUND_VARIABLE)
    if raw is None or raw.strip() == "":
        return DEFAULT_DEGREE_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{DEGREE_BOUND_VARIABLE} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{DEGREE_BOUND_VARIABLE} must be positive, got {value}")
    return value
