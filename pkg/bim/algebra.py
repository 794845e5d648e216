"""Finite-dimensional algebras by structure constants, and bimodules over them."""
from dataclasses import InitVar, dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.exceptions import AlgebraError, BimoduleError, DimensionMismatch
from linalg.field import Matrix, PrimeField
from linalg.quotient import QuotientSpace


@dataclass(frozen=True, eq=False)
class FDAlgebra:
    """Basis e_0..e_{n-1} with e_i e_j = sum_k mul[i, j, k] e_k."""
    field: PrimeField
    mul: np.ndarray
    unit: np.ndarray
    name: str = "R"
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        mul = self.field.reduce(self.mul)
        unit = self.field.reduce(self.unit).reshape(-1)
        n = unit.shape[0]
        if mul.shape != (n, n, n):
            raise DimensionMismatch(f"structure constants of shape {mul.shape} for dimension {n}")
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "unit", unit)
        if validate:
            problem = self.axiom_violation()
            if problem is not None:
                raise AlgebraError(f"{self.name}: {problem[0]}", witness=problem[1])

    @property
    def dim(self) -> int:
        return self.unit.shape[0]

    def basis(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def product(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        partial = np.einsum("i,ijk->jk", self.field.reduce(a).reshape(-1), self.mul) % self.field.p
        return np.einsum("j,jk->k", self.field.reduce(b).reshape(-1), partial) % self.field.p

    def left_mult(self, a: np.ndarray) -> Matrix:
        """L_a with L_a x = a x."""
        return (np.einsum("i,ijk->kj", self.field.reduce(a).reshape(-1), self.mul) % self.field.p).astype(np.int64)

    def right_mult(self, b: np.ndarray) -> Matrix:
        """R_b with R_b x = x b."""
        return (np.einsum("j,ijk->ki", self.field.reduce(b).reshape(-1), self.mul) % self.field.p).astype(np.int64)

    @cached_property
    def mult_matrix(self) -> Matrix:
        """m: A⊗A -> A on raw tensors, column i*n + j is e_i e_j."""
        n = self.dim
        return self.field.reduce(self.mul.reshape(n * n, n).T)

    @cached_property
    def unit_column(self) -> Matrix:
        return self.unit.reshape(-1, 1)

    def axiom_violation(self) -> Optional[Tuple[str, list]]:
        f = self.field
        n = self.dim
        for i in range(n):
            e = self.basis(i)
            if not f.equal(self.product(self.unit, e), e) or not f.equal(self.product(e, self.unit), e):
                return "unit law", [i]
        for i in range(n):
            Li = self.left_mult(self.basis(i))
            for j in range(n):
                # (e_i e_j) x = e_i (e_j x)
                lhs = self.left_mult(self.product(self.basis(i), self.basis(j)))
                if not f.equal(lhs, f.matmul(Li, self.left_mult(self.basis(j)))):
                    return "associativity", [i, j]
        return None

    def commutator_witness(self) -> Optional[List[int]]:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if not self.field.equal(self.product(self.basis(i), self.basis(j)), self.product(self.basis(j), self.basis(i))):
                    return [i, j]
        return None

    def is_commutative(self) -> bool:
        return self.commutator_witness() is None

    def require_commutative(self) -> None:
        witness = self.commutator_witness()
        if witness is not None:
            raise AlgebraError(f"{self.name} is not commutative", witness=witness)

    def is_homomorphism(self, phi: Matrix, source: "FDAlgebra") -> Optional[List[int]]:
        """First basis pair on which phi: source -> self fails to be multiplicative, or [-1] for the unit."""
        f = self.field
        if not f.equal(f.matmul(phi, source.unit_column), self.unit_column):
            return [-1]
        for i in range(source.dim):
            for j in range(source.dim):
                lhs = f.matmul(phi, source.product(source.basis(i), source.basis(j)).reshape(-1, 1))
                rhs = self.product(phi[:, i], phi[:, j]).reshape(-1, 1)
                if not f.equal(lhs, rhs):
                    return [i, j]
        return None


@dataclass(frozen=True, eq=False)
class TensorOrigin:
    """How a product bimodule was formed: a quotient of left ⊗ right."""
    kind: str
    left: "Bimodule"
    right: "Bimodule"
    quotient: QuotientSpace


@dataclass(frozen=True, eq=False)
class Bimodule:
    """Left and right actions of the basis of R, as matrices on columns."""
    R: FDAlgebra
    dim: int
    left: Tuple[Matrix, ...]
    right: Tuple[Matrix, ...]
    name: str = "M"
    origin: Optional[TensorOrigin] = None
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        f = self.R.field
        object.__setattr__(self, "left", tuple(f.reduce(m).reshape(self.dim, self.dim) for m in self.left))
        object.__setattr__(self, "right", tuple(f.reduce(m).reshape(self.dim, self.dim) for m in self.right))
        if len(self.left) != self.R.dim or len(self.right) != self.R.dim:
            raise BimoduleError(f"{self.name}: need one action matrix per basis element of {self.R.name}")
        if validate:
            problem = self.axiom_violation()
            if problem is not None:
                raise BimoduleError(f"{self.name}: {problem[0]}", witness=problem[1])

    @property
    def field(self) -> PrimeField:
        return self.R.field

    def act_left(self, r: np.ndarray) -> Matrix:
        return self._combine(self.left, r)

    def act_right(self, r: np.ndarray) -> Matrix:
        return self._combine(self.right, r)

    def _combine(self, matrices: Sequence[Matrix], r: np.ndarray) -> Matrix:
        f = self.field
        total = f.zeros(self.dim, self.dim)
        for coeff, m in zip(f.reduce(r).reshape(-1), matrices):
            total = (total + int(coeff) * m) % f.p
        return total

    def axiom_violation(self) -> Optional[Tuple[str, list]]:
        f, R = self.field, self.R
        eye = f.eye(self.dim)
        if not f.equal(self.act_left(R.unit), eye):
            return "left action is not unital", []
        if not f.equal(self.act_right(R.unit), eye):
            return "right action is not unital", []
        for i in range(R.dim):
            for j in range(R.dim):
                prod = R.product(R.basis(i), R.basis(j))
                if not f.equal(f.matmul(self.left[i], self.left[j]), self.act_left(prod)):
                    return "left action is not associative", [i, j]
                if not f.equal(f.matmul(self.right[j], self.right[i]), self.act_right(prod)):
                    return "right action is not associative", [i, j]
                if not f.equal(f.matmul(self.left[i], self.right[j]), f.matmul(self.right[j], self.left[i])):
                    return "actions do not commute", [i, j]
        return None

    def commutator_space(self) -> Matrix:
        """Columns spanning [M, R] = {r.m - m.r}."""
        f = self.field
        if not self.R.dim or not self.dim:
            return f.zeros(self.dim, 0)
        return f.image(np.concatenate([f.sub(l, r) for l, r in zip(self.left, self.right)], axis=1))

    def is_symmetric(self) -> bool:
        return self.commutator_space().shape[1] == 0

    def change_basis(self, P: Matrix, name: str = None) -> "Bimodule":
        f = self.field
        P_inv = f.invert(P)
        if P_inv is None:
            raise BimoduleError("basis change is singular")
        return Bimodule(
            self.R,
            self.dim,
            tuple(f.matmul(P, m, P_inv) for m in self.left),
            tuple(f.matmul(P, m, P_inv) for m in self.right),
            name=name or self.name,
        )


@dataclass(frozen=True, eq=False)
class BimoduleMap:
    domain: Bimodule
    codomain: Bimodule
    matrix: Matrix
    name: str = "map"

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.dim, self.domain.dim):
            raise DimensionMismatch(
                f"{self.name}: matrix {self.matrix.shape} between dimensions {self.domain.dim} and {self.codomain.dim}"
            )

    def then(self, other: "BimoduleMap") -> "BimoduleMap":
        """`other` after `self`."""
        if other.domain.dim != self.codomain.dim:
            raise DimensionMismatch(f"cannot compose {self.name} with {other.name}")
        return BimoduleMap(self.domain, other.codomain, self.domain.field.matmul(other.matrix, self.matrix), f"{other.name}.{self.name}")

    def linearity_violation(self) -> Optional[Tuple[str, int]]:
        f = self.domain.field
        for i in range(self.domain.R.dim):
            if not f.equal(f.matmul(self.matrix, self.domain.left[i]), f.matmul(self.codomain.left[i], self.matrix)):
                return "left", i
            if not f.equal(f.matmul(self.matrix, self.domain.right[i]), f.matmul(self.codomain.right[i], self.matrix)):
                return "right", i
        return None

    def inverse(self) -> Optional["BimoduleMap"]:
        inv = self.domain.field.invert(self.matrix)
        if inv is None:
            return None
        return BimoduleMap(self.codomain, self.domain, inv, f"{self.name}^-1")


def chain(*maps: BimoduleMap) -> BimoduleMap:
    result = maps[0]
    for step in maps[1:]:
        result = result.then(step)
    return result


# Named algebras

def ground_algebra(field: PrimeField) -> FDAlgebra:
    return FDAlgebra(field, np.ones((1, 1, 1), dtype=np.int64), np.array([1]), name=f"F{field.p}")


def truncated_polynomials(field: PrimeField, n: int) -> FDAlgebra:
    """F_p[t]/(t^n) on the basis 1, t, ..., t^(n-1)."""
    mul = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i + j < n:
                mul[i, j, i + j] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    return FDAlgebra(field, mul, unit, name=f"F{field.p}[t]/(t^{n})")


def diagonal_algebra(field: PrimeField, n: int) -> FDAlgebra:
    """F_p^n with orthogonal idempotents."""
    mul = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        mul[i, i, i] = 1
    return FDAlgebra(field, mul, np.ones(n, dtype=np.int64), name=f"F{field.p}^{n}")


def monoid_algebra(field: PrimeField, elements: Sequence[str], table: dict, unit: str, name: str = None) -> FDAlgebra:
    """Linear span of a finite monoid; `table[(f, g)]` is the product fg."""
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    mul = np.zeros((n, n, n), dtype=np.int64)
    for (f, g), fg in table.items():
        mul[index[f], index[g], index[fg]] = 1
    unit_vec = np.zeros(n, dtype=np.int64)
    unit_vec[index[unit]] = 1
    return FDAlgebra(field, mul, unit_vec, name=name or f"F{field.p}[{','.join(elements)}]")


def tensor_algebra(A: FDAlgebra, B: FDAlgebra) -> FDAlgebra:
    """A⊗B with basis e_i⊗f_j at position i*dim(B) + j."""
    mul = np.einsum("ikm,jln->ijklmn", A.mul, B.mul)
    n = A.dim * B.dim
    mul = mul.reshape(n, n, n) % A.field.p
    return FDAlgebra(A.field, mul, np.kron(A.unit, B.unit), name=f"{A.name}⊗{B.name}")


def regular_bimodule(R: FDAlgebra, name: str = "J") -> Bimodule:
    mats = tuple(R.left_mult(R.basis(i)) for i in range(R.dim))
    return Bimodule(R, R.dim, mats, mats, name=name)


def enveloping_bimodule(R: FDAlgebra, name: str = "I") -> Bimodule:
    """R⊗R, R acting on the left factor from the left and on the right factor from the right."""
    f = R.field
    eye = f.eye(R.dim)
    left = tuple(f.tensor(R.left_mult(R.basis(i)), eye) for i in range(R.dim))
    right = tuple(f.tensor(eye, R.right_mult(R.basis(i))) for i in range(R.dim))
    return Bimodule(R, R.dim * R.dim, left, right, name=name)


def symmetric_bimodule(R: FDAlgebra, actions: Sequence[Matrix], name: str = "N") -> Bimodule:
    """An R-module viewed as a bimodule with equal actions."""
    actions = tuple(actions)
    dim = actions[0].shape[0] if actions else 0
    return Bimodule(R, dim, actions, actions, name=name)


def direct_sum(M: Bimodule, N: Bimodule, name: str = None) -> Bimodule:
    f = M.field

    def block(a: Matrix, b: Matrix) -> Matrix:
        out = f.zeros(M.dim + N.dim, M.dim + N.dim)
        out[:M.dim, :M.dim] = a
        out[M.dim:, M.dim:] = b
        return out

    return Bimodule(
        M.R,
        M.dim + N.dim,
        tuple(block(a, b) for a, b in zip(M.left, N.left)),
        tuple(block(a, b) for a, b in zip(M.right, N.right)),
        name=name or f"{M.name}⊕{N.name}",
    )
