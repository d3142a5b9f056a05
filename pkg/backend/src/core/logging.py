"""
Logging setup
loguru sinks for stderr and an optional rotating file
"""
import sys

from loguru import logger

from .config import EngineSettings

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level} | {module}:{function}:{line} - {message}"


def configure_logging(settings: EngineSettings) -> None:
    """Route all engine logs away from stdout, which carries the JSON result"""
    logger.remove()
    logger.add(sys.stderr, level=settings.log_level, format=LOG_FORMAT)
    if settings.log_file is not None:
        logger.add(
            str(settings.log_file),
            rotation="10 MB",
            retention="7 days",
            level=settings.log_level,
            format=LOG_FORMAT,
        )
