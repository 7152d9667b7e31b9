import logging, logging.config
import os
import yaml
from pathlib import Path

from .config import ScreenlabConfig

ENV_SCREENLAB_CONFIG = "SCREENLAB_CONFIG_PATH"
ENV_SCREENLAB_JOBS = "SCREENLAB_JOBS"
LOGGING_CONFIG_PATH = "screenlab-logging.yaml"
SCREENLAB_CONFIG_PATH = "screenlab.yaml"


def config_dir() -> Path:
    """Directory holding screenlab.yaml and screenlab-logging.yaml."""
    path = os.getenv(ENV_SCREENLAB_CONFIG)
    return Path(os.getcwd()) if path is None else Path(path)


def initialize_logging():
    path = config_dir() / LOGGING_CONFIG_PATH
    if not path.is_file():
        logging.basicConfig(level=logging.INFO)
        logging.info(f"No '{path}', using basic logging.")
        return
    with open(path, "r", encoding="utf-8") as f:
        logging_config = yaml.safe_load(f)
    logging.config.dictConfig(logging_config)
    logging.info("Screenlab logging initialized.")


def load_screenlab_config() -> ScreenlabConfig:
    path = config_dir() / SCREENLAB_CONFIG_PATH
    screenlab_config = {}
    if path.is_file():
        with open(path, "r", encoding="utf-8") as f:
            screenlab_config = yaml.safe_load(f) or {}
    jobs = os.getenv(ENV_SCREENLAB_JOBS)
    if jobs is not None:
        screenlab_config["jobs"] = int(jobs)
    return ScreenlabConfig(**screenlab_config)
