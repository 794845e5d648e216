import json
from pathlib import Path

import pytest

from bim.algebra import diagonal_algebra, ground_algebra, truncated_polynomials
from bim.catalog import group_algebra_c2, idempotent_monoid_algebra, pair_bialgebroid
from bim.duoidal import BimDuoidal
from linalg.field import PrimeField
from span.catalog import (
    cyclic_group,
    discrete,
    enumerate_categories,
    idempotent_monoid,
    indiscrete,
    named_categories,
    symmetric_group,
    walking_arrow,
)
from span.spans import ObjectSet, Span

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data_dir():
    """Directory holding the shipped JSON examples"""
    return DATA_DIR


@pytest.fixture
def write_json(tmp_path):
    """Write a document to a temporary JSON file and return its path"""
    def _write(document, name="input.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture(scope="session")
def F3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def F5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def F101():
    return PrimeField(101)


@pytest.fixture
def XY():
    return ObjectSet(("x", "y"))


@pytest.fixture
def sample_spans(XY):
    """A handful of small spans over {x, y}"""
    return [
        Span.from_triples(XY, []),
        Span.from_triples(XY, [("u", "x", "x")]),
        Span.from_triples(XY, [("v", "x", "y"), ("w", "y", "x")]),
        Span.from_triples(XY, [("p", "x", "y"), ("q", "x", "y"), ("r", "y", "y")]),
    ]


@pytest.fixture(scope="session")
def category_corpus():
    """Every category with at most 2 objects and 4 arrows, plus the named ones"""
    return enumerate_categories(max_objects=2, max_arrows=4) + named_categories()


@pytest.fixture
def C2():
    return cyclic_group(2)


@pytest.fixture
def C3():
    return cyclic_group(3)


@pytest.fixture
def S3():
    return symmetric_group(3)


@pytest.fixture
def idempotent():
    return idempotent_monoid()


@pytest.fixture
def arrow():
    return walking_arrow()


@pytest.fixture
def chaotic():
    return indiscrete(["x", "y"])


@pytest.fixture
def points():
    return discrete(["x", "y"])


@pytest.fixture
def dual_numbers(F5):
    return truncated_polynomials(F5, 2)


@pytest.fixture
def D_ground(F5):
    return BimDuoidal(ground_algebra(F5))


@pytest.fixture
def D_dual(dual_numbers):
    return BimDuoidal(dual_numbers)


@pytest.fixture
def D_split(F5):
    return BimDuoidal(diagonal_algebra(F5, 2))


@pytest.fixture
def group_c2_f3(F3):
    return group_algebra_c2(F3)


@pytest.fixture
def group_c2_f101(F101):
    return group_algebra_c2(F101)


@pytest.fixture
def idempotent_f3(F3):
    return idempotent_monoid_algebra(F3)


@pytest.fixture
def pair_dual(F5):
    return pair_bialgebroid(truncated_polynomials(F5, 2))
