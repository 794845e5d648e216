from typing import List, Optional, Tuple

import numpy as np

from bim.algebra import Bimodule, FDAlgebra, symmetric_bimodule
from bim.bialgebroid import Bialgebroid
from bim.duoidal import BimDuoidal
from ingestion.base import BaseLoader
from linalg.field import PrimeField
from schemas.inputs import AlgebraSchema, BialgebroidSchema, BimoduleSchema, BimSuiteSchema, RModuleSchema


def algebra_from_schema(field: PrimeField, doc: AlgebraSchema) -> FDAlgebra:
    return FDAlgebra(field, np.array(doc.mul, dtype=np.int64), np.array(doc.unit, dtype=np.int64), name=doc.name)


def _matrices(matrices, dim: int) -> tuple:
    return tuple(np.array(m, dtype=np.int64).reshape(dim, dim) for m in matrices)


def bimodule_from_schema(R: FDAlgebra, doc: BimoduleSchema) -> Bimodule:
    return Bimodule(R, doc.dim, _matrices(doc.left, doc.dim), _matrices(doc.right, doc.dim), name=doc.name)


def rmodule_from_schema(R: FDAlgebra, doc: RModuleSchema) -> Bimodule:
    return symmetric_bimodule(R, _matrices(doc.action, doc.dim), name=doc.name)


class BimSuiteLoader(BaseLoader[BimSuiteSchema, Tuple[BimDuoidal, Optional[List[Bimodule]]]]):
    """Base algebra and optional bimodules; the module list is None when left out."""
    schema = BimSuiteSchema

    def __init__(self, path: str, field: PrimeField):
        super().__init__("bimodules", path)
        self.field = field

    def build(self, document: BimSuiteSchema) -> Tuple[BimDuoidal, Optional[List[Bimodule]]]:
        D = BimDuoidal(algebra_from_schema(self.field, document.algebra))
        if document.modules is None:
            return D, None
        return D, [bimodule_from_schema(D.R, m) for m in document.modules]


class BialgebroidLoader(BaseLoader[BialgebroidSchema, Tuple[Bialgebroid, List[Bimodule]]]):
    """A bialgebroid and the R-modules listed alongside it."""
    schema = BialgebroidSchema

    def __init__(self, path: str, field: PrimeField):
        super().__init__("bialgebroid", path)
        self.field = field

    def build(self, document: BialgebroidSchema) -> Tuple[Bialgebroid, List[Bimodule]]:
        D = BimDuoidal(algebra_from_schema(self.field, document.base))
        A = algebra_from_schema(self.field, document.algebra)
        B = Bialgebroid(
            D,
            A,
            np.array(document.s, dtype=np.int64),
            np.array(document.t, dtype=np.int64),
            np.array(document.Delta, dtype=np.int64).reshape(-1, A.dim),
            np.array(document.eps, dtype=np.int64),
            name=document.name,
        )
        return B, [rmodule_from_schema(D.R, m) for m in document.rmodules]
