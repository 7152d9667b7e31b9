from .app_loader import config_dir, initialize_logging, load_screenlab_config
from .config import ScreenlabConfig


__all__ = [
    config_dir.__name__,
    initialize_logging.__name__,
    load_screenlab_config.__name__,
    ScreenlabConfig.__name__,
]
