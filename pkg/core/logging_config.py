import logging
import sys
from typing import IO, Optional

from pythonjsonlogger import jsonlogger

from core.config import get_settings
from core.labels import jsonable

settings = get_settings()

LOG_FORMAT = '%(asctime)s %(name)s %(levelname)s %(message)s'


def _encode_extra(value):
    # witnesses in `extra` are label tuples, sets and numpy arrays
    encoded = jsonable(value)
    return encoded if encoded is not value else repr(value)


def setup_logging(level: Optional[str] = None, stream: Optional[IO[str]] = None) -> logging.Logger:
    """Route every record to one JSON handler; stdout stays reserved for reports"""
    root = logging.getLogger()
    resolved = logging.getLevelName((level or settings.log_level).upper())
    root.setLevel(resolved if isinstance(resolved, int) else logging.WARNING)

    for handler in root.handlers[:]:
        root.removeHandler(handler)

    json_handler = logging.StreamHandler(stream or sys.stderr)
    json_handler.setFormatter(jsonlogger.JsonFormatter(LOG_FORMAT, timestamp=True, json_default=_encode_extra))
    root.addHandler(json_handler)
    return root


logger = setup_logging()
