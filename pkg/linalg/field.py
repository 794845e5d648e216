from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from core.config import get_settings, is_prime
from core.exceptions import DimensionMismatch, FieldError

Matrix = np.ndarray


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic and dense linear algebra over GF(p).

    Matrices are int64 numpy arrays with entries in [0, p). Vectors are
    columns; a map V -> W is a (dim W x dim V) matrix.
    """
    p: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p >= 2 ** 15:
            raise FieldError(f"not a supported prime: {self.p}")

    @classmethod
    def from_settings(cls) -> "PrimeField":
        return cls(get_settings().prime)

    # Construction helpers

    def reduce(self, A) -> Matrix:
        return np.asarray(A, dtype=np.int64) % self.p

    def zeros(self, rows: int, cols: int) -> Matrix:
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n: int) -> Matrix:
        return np.eye(n, dtype=np.int64)

    def unit(self, n: int, i: int) -> Matrix:
        v = np.zeros((n, 1), dtype=np.int64)
        v[i, 0] = 1
        return v

    def inv_scalar(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise FieldError("zero has no inverse")
        return pow(a, self.p - 2, self.p)

    # Arithmetic

    def matmul(self, *factors: Matrix) -> Matrix:
        result = factors[0]
        for factor in factors[1:]:
            if result.shape[1] != factor.shape[0]:
                raise DimensionMismatch(
                    f"cannot compose {result.shape} with {factor.shape}"
                )
            result = (result @ factor) % self.p
        return self.reduce(result)

    def add(self, A: Matrix, B: Matrix) -> Matrix:
        if A.shape != B.shape:
            raise DimensionMismatch(f"cannot add {A.shape} and {B.shape}")
        return (A + B) % self.p

    def sub(self, A: Matrix, B: Matrix) -> Matrix:
        if A.shape != B.shape:
            raise DimensionMismatch(f"cannot subtract {A.shape} and {B.shape}")
        return (A - B) % self.p

    def scale(self, c: int, A: Matrix) -> Matrix:
        return (int(c) % self.p * A) % self.p

    def tensor(self, A: Matrix, B: Matrix) -> Matrix:
        return np.kron(A, B) % self.p

    def equal(self, A: Matrix, B: Matrix) -> bool:
        return A.shape == B.shape and bool(np.all((A - B) % self.p == 0))

    def is_zero(self, A: Matrix) -> bool:
        return bool(np.all(A % self.p == 0))

    # Elimination

    def rref(self, A: Matrix) -> Tuple[Matrix, List[int]]:
        """Reduced row echelon form and pivot columns."""
        M = self.reduce(A).copy()
        rows, cols = M.shape
        pivots: List[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nonzero = np.nonzero(M[r:, c])[0]
            if nonzero.size == 0:
                continue
            pivot = r + int(nonzero[0])
            if pivot != r:
                M[[r, pivot]] = M[[pivot, r]]
            M[r] = (M[r] * self.inv_scalar(M[r, c])) % self.p
            column = M[:, c].copy()
            column[r] = 0
            others = np.nonzero(column)[0]
            if others.size:
                M[others] = (M[others] - np.outer(column[others], M[r])) % self.p
            pivots.append(c)
            r += 1
        return M, pivots

    def rank(self, A: Matrix) -> int:
        return len(self.rref(A)[1])

    def kernel(self, A: Matrix) -> Matrix:
        """Columns form a basis of {x | A x = 0}."""
        rows, cols = A.shape
        R, pivots = self.rref(A)
        pivot_set = set(pivots)
        free = [j for j in range(cols) if j not in pivot_set]
        basis = self.zeros(cols, len(free))
        for k, f in enumerate(free):
            basis[f, k] = 1
            for i, pc in enumerate(pivots):
                basis[pc, k] = (-R[i, f]) % self.p
        return basis

    def image(self, A: Matrix) -> Matrix:
        """Independent columns of A spanning its column space."""
        _, pivots = self.rref(A)
        return self.reduce(A[:, pivots])

    def solve(self, A: Matrix, b: Matrix) -> Optional[Matrix]:
        """One solution of A x = b (free variables zero), or None."""
        b = b.reshape(-1, 1) if b.ndim == 1 else b
        if A.shape[0] != b.shape[0]:
            raise DimensionMismatch(f"system {A.shape} with right side {b.shape}")
        cols = A.shape[1]
        R, pivots = self.rref(np.concatenate([self.reduce(A), self.reduce(b)], axis=1))
        if pivots and pivots[-1] >= cols:
            return None
        x = self.zeros(cols, b.shape[1])
        for i, pc in enumerate(pivots):
            x[pc] = R[i, cols:]
        return x

    def invert(self, A: Matrix) -> Optional[Matrix]:
        n, m = A.shape
        if n != m:
            raise DimensionMismatch(f"cannot invert a {n}x{m} matrix")
        R, pivots = self.rref(np.concatenate([self.reduce(A), self.eye(n)], axis=1))
        if [pc for pc in pivots if pc < n] != list(range(n)):
            return None
        return self.reduce(R[:, n:])

    def right_inverse(self, A: Matrix) -> Matrix:
        """S with A S = id, for A of full row rank."""
        S = self.solve(A, self.eye(A.shape[0]))
        if S is None:
            raise FieldError(f"matrix of shape {A.shape} is not surjective")
        return S

    def is_injective(self, A: Matrix) -> bool:
        return self.rank(A) == A.shape[1]

    def is_surjective(self, A: Matrix) -> bool:
        return self.rank(A) == A.shape[0]

    def is_invertible(self, A: Matrix) -> bool:
        return A.shape[0] == A.shape[1] and self.invert(A) is not None
