from .config import EngineSettings, get_settings
from .errors import IntersectorError

__all__ = ["EngineSettings", "get_settings", "IntersectorError"]
