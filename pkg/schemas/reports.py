from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field


class DiagramResult(BaseModel):
    """One axiom diagram evaluated on a tuple of inputs"""
    diagram: str
    status: Literal["pass", "fail"]
    witness: Optional[Any] = None


class Report(BaseModel):
    """Collection of diagram results about one subject"""
    subject: str
    entries: List[DiagramResult] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(entry.status == "pass" for entry in self.entries)

    def record(self, diagram: str, ok: bool, witness: Any = None) -> bool:
        self.entries.append(DiagramResult(
            diagram=diagram,
            status="pass" if ok else "fail",
            witness=None if ok else witness,
        ))
        return ok

    def extend(self, other: "Report", prefix: str = "") -> None:
        for entry in other.entries:
            self.entries.append(entry.model_copy(update={"diagram": prefix + entry.diagram}))

    def absorb(self, other: "Report", where: Any = None) -> None:
        """Merge another run of the same diagrams, keeping the first failure of each.

        `where` identifies the inputs of `other` and is attached to its failures.
        """
        index = {entry.diagram: k for k, entry in enumerate(self.entries)}
        for entry in other.entries:
            if entry.status == "fail":
                entry = entry.model_copy(update={"witness": {"tuple": where, "witness": entry.witness}})
            k = index.get(entry.diagram)
            if k is None:
                index[entry.diagram] = len(self.entries)
                self.entries.append(entry)
            elif self.entries[k].status == "pass" and entry.status == "fail":
                self.entries[k] = entry

    def failures(self) -> List[DiagramResult]:
        return [entry for entry in self.entries if entry.status == "fail"]


class FiniteMapReport(BaseModel):
    """A materialized map of finite sets with its invertibility verdict"""
    name: str
    domain_size: int
    codomain_size: int
    injective: bool
    surjective: bool
    assignment: Dict[str, Any]
    collision: Optional[List[Any]] = None
    missed: Optional[Any] = None
    inverse_checked: Optional[bool] = None
    mapping: Any = Field(default=None, exclude=True)

    @computed_field
    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    model_config = ConfigDict(arbitrary_types_allowed=True)


class LinearMapReport(BaseModel):
    """A matrix over GF(p) with rank and, when it exists, its inverse"""
    name: str
    rows: int
    cols: int
    rank: int
    matrix: List[List[int]]
    inverse: Optional[List[List[int]]] = None
    kernel_witness: Optional[List[int]] = None

    @computed_field
    @property
    def invertible(self) -> bool:
        return self.inverse is not None


class Verdict(BaseModel):
    holds: bool
    detail: str = ""
    witness: Optional[Any] = None


class GroupoidVerdict(Verdict):
    inverses: Optional[Dict[str, str]] = None
