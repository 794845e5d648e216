import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Generic, Iterable, Type, TypeVar

from pydantic import BaseModel, ValidationError

from core.exceptions import DuoidalError, InputError
from core.logging_config import logger

SchemaT = TypeVar("SchemaT", bound=BaseModel)
ResultT = TypeVar("ResultT")


class BaseLoader(ABC, Generic[SchemaT, ResultT]):
    """Base class for every JSON input format.

    `run` reads the file, validates it against `schema` and hands the
    validated document to `build`. Every failure on the way surfaces as an
    InputError carrying the file and, when pydantic knows it, the field.
    """

    schema: Type[SchemaT]

    def __init__(self, source_name: str, path: str):
        self.source_name = source_name
        self.path = Path(path)

    def fetch_data(self) -> Any:
        """Read the raw JSON document"""
        if not self.path.exists():
            raise InputError("file not found", location=str(self.path))
        try:
            with self.path.open(encoding="utf-8") as handle:
                return json.load(handle)
        except json.JSONDecodeError as e:
            raise InputError(f"malformed JSON: {e.msg}", location=f"{self.path}:{e.lineno}:{e.colno}")

    def validate(self, data: Any) -> SchemaT:
        try:
            return self.schema.model_validate(data)
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(part) for part in first["loc"])
            raise InputError(first["msg"], location=f"{self.path}:{where}" if where else str(self.path))

    def detect_unknown_fields(self, data: Any) -> None:
        """Warn about top-level keys the schema does not know."""
        if not isinstance(data, dict):
            return
        expected = set(self.schema.model_fields)
        for field in data:
            if field not in expected:
                logger.warning("Unknown input field ignored", extra={
                    "source": self.source_name,
                    "path": str(self.path),
                    "field": field,
                })

    @abstractmethod
    def build(self, document: SchemaT) -> ResultT:
        """Turn the validated document into domain objects"""

    def run(self) -> ResultT:
        logger.info("Loading input", extra={"source": self.source_name, "path": str(self.path)})
        data = self.fetch_data()
        self.detect_unknown_fields(data)
        document = self.validate(data)
        try:
            result = self.build(document)
        except InputError:
            raise
        except DuoidalError as e:
            # malformed structure in the file maps to exit code 2
            raise InputError(str(e), location=str(self.path)) from e
        logger.info("Loaded input", extra={"source": self.source_name, "path": str(self.path)})
        return result


def has_keys(data: Any, keys: Iterable[str]) -> bool:
    return isinstance(data, dict) and all(k in data for k in keys)
