"""
Yardımcı modüller
"""
from utils.logger import LoggingTimer, resolve_level, set_level, setup_logger

__all__ = ['LoggingTimer', 'resolve_level', 'set_level', 'setup_logger']
