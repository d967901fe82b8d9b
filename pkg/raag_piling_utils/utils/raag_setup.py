import logging
import os
import sys

# ==============================================================
# Common utilities
# ==============================================================
TAG = "raag-pilings"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def dprint_str(text):
    return f"[{TAG}]: {text}"


def dprint(text):
    print(dprint_str(text), file=sys.stderr)


# ==============================================================
# Logging setup
# ==============================================================
def setup_logging(default_level: str = "WARNING") -> str:
    """Configure the root logger from LOG_LEVEL and return the level used."""
    level = os.environ.get("LOG_LEVEL", default_level).upper()
    logging.basicConfig(level=level, format=LOG_FORMAT)
    return level


# ==============================================================
# Environment variables utilities
# ==============================================================
def env_int(name: str, default: int) -> int:
    return int(os.environ.get(name, default))


def env_float(name: str, default: float) -> float:
    return float(os.environ.get(name, default))


def env_list(name: str, default, cast=int) -> list:
    """Read a list from the environment.

    pass a custom list as a comma separated str, eg: export RAAG_TEST_SEEDS="0,7,42"
    """
    value = os.environ.get(name, default)
    if isinstance(value, str):
        value = [cast(v) for v in value.split(",") if v.strip()]
    return list(value)


def oracle_state_cap() -> int:
    return env_int("RAAG_ORACLE_STATE_CAP", 10**6)
