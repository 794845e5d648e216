from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

Matrix = List[List[int]]


class ArrowSchema(BaseModel):
    """One arrow of a span: a name with source and target objects"""
    name: str
    src: str
    tgt: str


class SpanSchema(BaseModel):
    """Schema for a single span over a finite object set"""
    objects: List[str]
    arrows: List[ArrowSchema] = Field(default_factory=list)

    @field_validator('objects')
    @classmethod
    def unique_objects(cls, v):
        if len(set(v)) != len(v):
            raise ValueError("object labels must be distinct")
        return v

    @model_validator(mode='after')
    def arrows_over_objects(self):
        names = set()
        for arrow in self.arrows:
            if arrow.name in names:
                raise ValueError(f"duplicate arrow {arrow.name!r}")
            names.add(arrow.name)
            for end in (arrow.src, arrow.tgt):
                if end not in self.objects:
                    raise ValueError(f"arrow {arrow.name!r} touches unknown object {end!r}")
        return self


class SpanCollectionSchema(BaseModel):
    """Several spans over one object set; an absent list means a random corpus"""
    objects: List[str]
    spans: Optional[List[List[ArrowSchema]]] = None

    @field_validator('objects')
    @classmethod
    def unique_objects(cls, v):
        if len(set(v)) != len(v):
            raise ValueError("object labels must be distinct")
        return v


class CompositionSchema(BaseModel):
    f: str
    g: str
    fg: str


class CategorySchema(SpanSchema):
    """Schema for a small category: a span with identities and a composition table"""
    name: str = "A"
    identities: Dict[str, str]
    compose: List[CompositionSchema] = Field(default_factory=list)

    @model_validator(mode='after')
    def known_arrows(self):
        names = {a.name for a in self.arrows}
        for obj, arrow in self.identities.items():
            if obj not in self.objects or arrow not in names:
                raise ValueError(f"identity {obj!r} -> {arrow!r} is not an object/arrow pair")
        for entry in self.compose:
            for label in (entry.f, entry.g, entry.fg):
                if label not in names:
                    raise ValueError(f"composition mentions unknown arrow {label!r}")
        return self


class ActionSchema(BaseModel):
    q: str
    a: str
    qa: str


class ModuleSchema(BaseModel):
    """A right module over a small category; carrier arrows live over the category's objects"""
    name: str = "Q"
    category: CategorySchema
    carrier: List[ArrowSchema]
    action: List[ActionSchema]


class HopfModuleSchema(ModuleSchema):
    grade: Dict[str, str]


class ComoduleMonoidSchema(BaseModel):
    """A category graded over a base category by a functor on arrows"""
    category: CategorySchema
    base: CategorySchema
    grade: Dict[str, str]


class AlgebraSchema(BaseModel):
    """Schema for a finite-dimensional algebra given by structure constants"""
    name: str = "R"
    dim: int = Field(..., ge=1)
    mul: List[List[List[int]]]
    unit: List[int]

    @model_validator(mode='after')
    def shapes(self):
        n = self.dim
        if len(self.unit) != n:
            raise ValueError(f"unit has {len(self.unit)} coordinates, expected {n}")
        if len(self.mul) != n or any(len(row) != n or any(len(c) != n for c in row) for row in self.mul):
            raise ValueError(f"mul must be a {n}x{n}x{n} array")
        return self


def _square(matrix: Matrix, n: int) -> bool:
    return len(matrix) == n and all(len(row) == n for row in matrix)


class BimoduleSchema(BaseModel):
    """Left and right actions, one square matrix per basis element of the base algebra"""
    name: str = "M"
    dim: int = Field(..., ge=0)
    left: List[Matrix]
    right: List[Matrix]

    @model_validator(mode='after')
    def square_actions(self):
        for side in (self.left, self.right):
            for matrix in side:
                if not _square(matrix, self.dim):
                    raise ValueError(f"action matrices must be {self.dim}x{self.dim}")
        if len(self.left) != len(self.right):
            raise ValueError("left and right need one matrix per basis element each")
        return self


class RModuleSchema(BaseModel):
    """An R-module: one action matrix per basis element of R"""
    name: str = "N"
    dim: int = Field(..., ge=0)
    action: List[Matrix]

    @model_validator(mode='after')
    def square_actions(self):
        if not self.action or any(not _square(m, self.dim) for m in self.action):
            raise ValueError(f"action needs {self.dim}x{self.dim} matrices, one per basis element")
        return self


class BimSuiteSchema(BaseModel):
    """Base algebra plus bimodules for the duoidal axiom checks"""
    algebra: AlgebraSchema
    modules: Optional[List[BimoduleSchema]] = None


class BialgebroidSchema(BaseModel):
    """Schema for a bialgebroid; Delta is given on raw tensors A⊗A or on classes of A•A"""
    name: str = "A"
    base: AlgebraSchema
    algebra: AlgebraSchema
    s: Matrix
    t: Matrix
    Delta: Matrix
    eps: Matrix
    rmodules: List[RModuleSchema] = Field(default_factory=list)

    @model_validator(mode='after')
    def map_shapes(self):
        dR, dA = self.base.dim, self.algebra.dim
        for label, matrix, rows, cols in (("s", self.s, dA, dR), ("t", self.t, dA, dR), ("eps", self.eps, dR, dA)):
            if len(matrix) != rows or any(len(row) != cols for row in matrix):
                raise ValueError(f"{label} must be {rows}x{cols}")
        if any(len(row) != dA for row in self.Delta):
            raise ValueError(f"Delta must have {dA} columns")
        return self
