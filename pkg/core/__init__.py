from core.config import get_settings, Settings
from core.logging_config import logger
from core.exceptions import DuoidalError, InputError

__all__ = ['get_settings', 'Settings', 'logger', 'DuoidalError', 'InputError']
