from typing import Any, Hashable


def format_label(label: Hashable) -> str:
    """Canonical string form of an element label: atoms as-is, tuples as (a,b)"""
    if isinstance(label, tuple):
        return "(" + ",".join(format_label(part) for part in label) + ")"
    return str(label)


def jsonable(value: Any) -> Any:
    """Turn nested tuples/sets of labels into JSON-friendly lists"""
    if isinstance(value, (tuple, list)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v) for v in value), key=repr)
    if isinstance(value, dict):
        return {format_label(k): jsonable(v) for k, v in value.items()}
    if hasattr(value, "tolist"):
        return value.tolist()
    if hasattr(value, "item"):
        return value.item()
    return value
