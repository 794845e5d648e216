from ingestion.base import BaseLoader
from ingestion.span_source import (
    CategoryLoader,
    ComoduleMonoidLoader,
    HopfModuleLoader,
    ModuleLoader,
    SpanCollectionLoader,
    SpanLoader,
)
from ingestion.bim_source import BialgebroidLoader, BimSuiteLoader

__all__ = [
    'BaseLoader',
    'CategoryLoader',
    'ComoduleMonoidLoader',
    'HopfModuleLoader',
    'ModuleLoader',
    'SpanCollectionLoader',
    'SpanLoader',
    'BialgebroidLoader',
    'BimSuiteLoader',
]
