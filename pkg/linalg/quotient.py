from dataclasses import dataclass

import numpy as np

from core.exceptions import DimensionMismatch, FieldError, WellDefinednessError
from linalg.field import Matrix, PrimeField


@dataclass(frozen=True)
class QuotientSpace:
    """A quotient V/W with a fixed splitting.

    `projection` is (dim V/W x dim V), `section` is (dim V x dim V/W) with
    projection . section = id, and `relations` is a column basis of W,
    the kernel of the projection.
    """
    field: PrimeField
    ambient_dim: int
    projection: Matrix
    section: Matrix
    relations: Matrix

    @property
    def dim(self) -> int:
        return self.projection.shape[0]

    @classmethod
    def from_projection(cls, field: PrimeField, projection: Matrix, section: Matrix = None) -> "QuotientSpace":
        """Wrap a surjection, computing its kernel (and a section if none is given)."""
        projection = field.reduce(projection)
        if section is None:
            section = field.right_inverse(projection)
        return cls(
            field=field,
            ambient_dim=projection.shape[1],
            projection=projection,
            section=field.reduce(section),
            relations=field.kernel(projection),
        )

    def idempotent(self) -> Matrix:
        return self.field.matmul(self.section, self.projection)

    def check(self) -> bool:
        f = self.field
        return (
            f.equal(f.matmul(self.projection, self.section), f.eye(self.dim))
            and f.is_zero(f.matmul(self.projection, self.relations))
            and self.relations.shape[1] + self.dim == self.ambient_dim
        )


def quotient_by(field: PrimeField, ambient_dim: int, relations: Matrix) -> QuotientSpace:
    """Quotient of GF(p)^n by the span of the columns of `relations`.

    The quotient basis is the set of non-pivot coordinates of the reduced
    relation matrix.
    """
    relations = field.reduce(relations)
    if relations.size == 0:
        relations = field.zeros(ambient_dim, 0)
    if relations.shape[0] != ambient_dim:
        raise DimensionMismatch(f"relations of height {relations.shape[0]} in dimension {ambient_dim}")
    R, pivots = field.rref(relations.T)
    pivot_set = set(pivots)
    free = [j for j in range(ambient_dim) if j not in pivot_set]
    projection = field.zeros(len(free), ambient_dim)
    section = field.zeros(ambient_dim, len(free))
    for idx, j in enumerate(free):
        projection[idx, j] = 1
        section[j, idx] = 1
    for i, pc in enumerate(pivots):
        projection[:, pc] = (-R[i, free]) % field.p
    basis = field.reduce(R[:len(pivots)].T) if pivots else field.zeros(ambient_dim, 0)
    return QuotientSpace(field, ambient_dim, projection, section, basis)


def equalizer(field: PrimeField, f: Matrix, g: Matrix) -> Matrix:
    """Column basis of ker(f - g), the equalizer of f and g."""
    if f.shape != g.shape:
        raise DimensionMismatch(f"parallel pair of shapes {f.shape} and {g.shape}")
    E = field.kernel(field.sub(f, g))
    if not field.equal(field.matmul(f, E), field.matmul(g, E)):
        raise FieldError("equalizer does not equalize")
    return E


def coequalizer(field: PrimeField, f: Matrix, g: Matrix) -> QuotientSpace:
    """Quotient of the codomain by the image of f - g."""
    if f.shape != g.shape:
        raise DimensionMismatch(f"parallel pair of shapes {f.shape} and {g.shape}")
    q = quotient_by(field, f.shape[0], field.sub(f, g))
    if not field.equal(field.matmul(q.projection, f), field.matmul(q.projection, g)):
        raise FieldError("coequalizer does not coequalize")
    return q


def descend(field: PrimeField, W: Matrix, quotient: QuotientSpace, name: str = "map") -> Matrix:
    """The map induced by W on the quotient; W must vanish on the relations."""
    if W.shape[1] != quotient.ambient_dim:
        raise DimensionMismatch(f"{name}: {W.shape} on ambient dimension {quotient.ambient_dim}")
    leak = field.matmul(W, quotient.relations)
    if not field.is_zero(leak):
        column = int(np.nonzero(np.any(leak != 0, axis=0))[0][0])
        raise WellDefinednessError(
            f"{name} is not constant on classes",
            witness=quotient.relations[:, column].tolist(),
        )
    return field.matmul(W, quotient.section)


def stable_under(field: PrimeField, action: Matrix, quotient: QuotientSpace) -> bool:
    """Whether `action` maps the relation subspace into itself."""
    return field.is_zero(field.matmul(quotient.projection, action, quotient.relations))
