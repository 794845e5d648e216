"""The duoidal category bim(R) of finite-dimensional bimodules over a commutative R.

M•N is M⊗N modulo m·r⊗n - m⊗r·n, with R acting on the left through M and
on the right through N. M∘N is M⊗N modulo r·m·r'⊗n - m⊗r·n·r', with both
outer actions through M. Every product remembers how it was formed, so a
structure map can be written on raw tensors of its constituent bimodules
and pushed down to the quotients, checking well-definedness on the way.
"""
from math import prod
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from bim.algebra import Bimodule, BimoduleMap, FDAlgebra, TensorOrigin, enveloping_bimodule, regular_bimodule
from core.exceptions import BimoduleError, DimensionMismatch
from core.logging_config import logger
from linalg.field import Matrix
from linalg.quotient import QuotientSpace, descend, quotient_by

RelationHook = Callable[[str, Matrix], Matrix]

BULLET = "•"
CIRC = "∘"


def permutation_matrix(dims: Sequence[int], order: Sequence[int]) -> Matrix:
    """Matrix sending ⊗ of factors with sizes `dims` to the factors taken in `order`."""
    n = prod(dims)
    source_index = np.arange(n).reshape(tuple(dims)).transpose(tuple(order)).ravel()
    P = np.zeros((n, n), dtype=np.int64)
    P[np.arange(n), source_index] = 1
    return P


class BimDuoidal:
    """Products, units and structure maps of bim(R) for one fixed R."""

    def __init__(self, R: FDAlgebra, relation_hook: Optional[RelationHook] = None):
        R.require_commutative()
        self.R = R
        self.field = R.field
        self.relation_hook = relation_hook
        self.I = enveloping_bimodule(R, "I")
        self.J = regular_bimodule(R, "J")
        self._products: Dict[Tuple[str, int, int], Tuple[Bimodule, Bimodule, Bimodule]] = {}

    # Products

    def bullet(self, M: Bimodule, N: Bimodule) -> Bimodule:
        f = self.field
        relations = [
            f.sub(f.tensor(M.right[i], f.eye(N.dim)), f.tensor(f.eye(M.dim), N.left[i]))
            for i in range(self.R.dim)
        ]
        return self._product(
            BULLET, M, N, relations,
            left=[f.tensor(L, f.eye(N.dim)) for L in M.left],
            right=[f.tensor(f.eye(M.dim), Rt) for Rt in N.right],
        )

    def circ(self, M: Bimodule, N: Bimodule) -> Bimodule:
        f = self.field
        relations = [
            f.sub(
                f.tensor(f.matmul(M.left[i], M.right[j]), f.eye(N.dim)),
                f.tensor(f.eye(M.dim), f.matmul(N.left[i], N.right[j])),
            )
            for i in range(self.R.dim)
            for j in range(self.R.dim)
        ]
        return self._product(
            CIRC, M, N, relations,
            left=[f.tensor(L, f.eye(N.dim)) for L in M.left],
            right=[f.tensor(Rt, f.eye(N.dim)) for Rt in M.right],
        )

    def _product(self, kind: str, M: Bimodule, N: Bimodule, relations: List[Matrix], left, right) -> Bimodule:
        if M.R is not N.R or M.R is not self.R:
            raise BimoduleError(f"{M.name}{kind}{N.name}: bimodules over different algebras")
        key = (kind, id(M), id(N))
        cached = self._products.get(key)
        if cached is not None:
            return cached[2]
        f = self.field
        ambient = M.dim * N.dim
        stacked = np.concatenate(relations, axis=1) if relations else f.zeros(ambient, 0)
        if self.relation_hook is not None:
            stacked = self.relation_hook(kind, stacked)
        q = quotient_by(f, ambient, stacked)
        name = f"({M.name}{kind}{N.name})"
        induced_left = tuple(descend(f, f.matmul(q.projection, L), q, f"{name} left action") for L in left)
        induced_right = tuple(descend(f, f.matmul(q.projection, Rt), q, f"{name} right action") for Rt in right)
        P = Bimodule(self.R, q.dim, induced_left, induced_right, name=name, origin=TensorOrigin(kind, M, N, q))
        self._products[key] = (M, N, P)
        logger.debug("Formed bimodule product", extra={"product": name, "ambient": ambient, "dim": q.dim})
        return P

    def factor_map(self, P: Bimodule) -> Matrix:
        """Raw tensors of the two factors of P onto the classes of P."""
        if P.origin is None:
            raise BimoduleError(f"{P.name} is not a tensor product")
        return P.origin.quotient.projection

    def bullet_tensor(self, M: Bimodule, N: Bimodule) -> Tuple[Bimodule, Matrix]:
        P = self.bullet(M, N)
        return P, self.factor_map(P)

    def circ_tensor(self, M: Bimodule, N: Bimodule) -> Tuple[Bimodule, Matrix]:
        P = self.circ(M, N)
        return P, self.factor_map(P)

    # Canonical maps

    def flatten(self, P: Bimodule, stops: Sequence[Bimodule]) -> Tuple[List[Bimodule], Matrix, Matrix]:
        """Unfold P into its constituents down to `stops`.

        Returns the constituents in order, the projection from their raw
        tensor product onto P and a section of it.
        """
        f = self.field
        if any(P is s for s in stops) or P.origin is None:
            return [P], f.eye(P.dim), f.eye(P.dim)
        o = P.origin
        left_leaves, left_proj, left_sect = self.flatten(o.left, stops)
        right_leaves, right_proj, right_sect = self.flatten(o.right, stops)
        proj = f.matmul(o.quotient.projection, f.tensor(left_proj, right_proj))
        sect = f.matmul(f.tensor(left_sect, right_sect), o.quotient.section)
        return left_leaves + right_leaves, proj, sect

    def _leaves(self, P: Bimodule, stops: Sequence[Bimodule]) -> Tuple[Matrix, Matrix]:
        leaves, proj, sect = self.flatten(P, stops)
        if len(leaves) != len(stops) or any(a is not b for a, b in zip(leaves, stops)):
            raise DimensionMismatch(
                f"{P.name} does not unfold into {[s.name for s in stops]}"
            )
        return proj, sect

    def canonical(
        self,
        source: Bimodule,
        source_stops: Sequence[Bimodule],
        target: Bimodule,
        target_stops: Sequence[Bimodule],
        raw: Matrix,
        name: str,
    ) -> BimoduleMap:
        """Push a map between raw tensor products down to the quotients."""
        f = self.field
        source_proj, source_sect = self._leaves(source, source_stops)
        target_proj, _ = self._leaves(target, target_stops)
        quotient = QuotientSpace.from_projection(f, source_proj, source_sect)
        matrix = descend(f, f.matmul(target_proj, raw), quotient, name)
        return BimoduleMap(source, target, matrix, name)

    def lift(self, P: Bimodule, stops: Sequence[Bimodule]) -> Matrix:
        """Section of P into raw tensors of `stops`."""
        return self._leaves(P, stops)[1]

    def project(self, P: Bimodule, stops: Sequence[Bimodule]) -> Matrix:
        return self._leaves(P, stops)[0]

    def identity(self, M: Bimodule) -> BimoduleMap:
        return BimoduleMap(M, M, self.field.eye(M.dim), "id")

    def bullet_map(self, f: BimoduleMap, g: BimoduleMap) -> BimoduleMap:
        return self.canonical(
            self.bullet(f.domain, g.domain), [f.domain, g.domain],
            self.bullet(f.codomain, g.codomain), [f.codomain, g.codomain],
            self.field.tensor(f.matrix, g.matrix), f"({f.name}•{g.name})",
        )

    def circ_map(self, f: BimoduleMap, g: BimoduleMap) -> BimoduleMap:
        return self.canonical(
            self.circ(f.domain, g.domain), [f.domain, g.domain],
            self.circ(f.codomain, g.codomain), [f.codomain, g.codomain],
            self.field.tensor(f.matrix, g.matrix), f"({f.name}∘{g.name})",
        )

    def _associator(self, product, M: Bimodule, N: Bimodule, P: Bimodule, name: str) -> BimoduleMap:
        source = product(product(M, N), P)
        target = product(M, product(N, P))
        return self.canonical(source, [M, N, P], target, [M, N, P], self.field.eye(M.dim * N.dim * P.dim), name)

    def alpha_bullet(self, M: Bimodule, N: Bimodule, P: Bimodule) -> BimoduleMap:
        return self._associator(self.bullet, M, N, P, "α•")

    def alpha_circ(self, M: Bimodule, N: Bimodule, P: Bimodule) -> BimoduleMap:
        return self._associator(self.circ, M, N, P, "α∘")

    def lambda_bullet(self, M: Bimodule) -> BimoduleMap:
        """J•M -> M, r•m ↦ r·m"""
        raw = np.concatenate(M.left, axis=1)
        return self.canonical(self.bullet(self.J, M), [self.J, M], M, [M], raw, "λ•")

    def rho_bullet(self, M: Bimodule) -> BimoduleMap:
        """M•J -> M, m•r ↦ m·r"""
        raw = np.stack(M.right, axis=2).reshape(M.dim, M.dim * self.R.dim)
        return self.canonical(self.bullet(M, self.J), [M, self.J], M, [M], raw, "ρ•")

    def _sandwiches(self, M: Bimodule) -> List[Matrix]:
        """x·m·y for the basis pairs (x, y), in the order of the basis of I."""
        n = self.R.dim
        return [self.field.matmul(M.left[x], M.right[y]) for x in range(n) for y in range(n)]

    def lambda_circ(self, M: Bimodule) -> BimoduleMap:
        """I∘M -> M, (x⊗y)∘m ↦ x·m·y"""
        raw = np.concatenate(self._sandwiches(M), axis=1)
        return self.canonical(self.circ(self.I, M), [self.I, M], M, [M], raw, "λ∘")

    def rho_circ(self, M: Bimodule) -> BimoduleMap:
        """M∘I -> M, m∘(x⊗y) ↦ x·m·y"""
        raw = np.stack(self._sandwiches(M), axis=2).reshape(M.dim, M.dim * self.R.dim ** 2)
        return self.canonical(self.circ(M, self.I), [M, self.I], M, [M], raw, "ρ∘")

    def delta(self) -> BimoduleMap:
        """δ: I -> I•I, x⊗y ↦ (x⊗1)•(1⊗y)"""
        R, f = self.R, self.field
        n = R.dim
        columns = []
        for x in range(n):
            for y in range(n):
                columns.append(np.kron(np.kron(R.basis(x), R.unit), np.kron(R.unit, R.basis(y))))
        raw = f.reduce(np.stack(columns, axis=1))
        return self.canonical(self.I, [self.I], self.bullet(self.I, self.I), [self.I, self.I], raw, "δ")

    def varpi(self) -> BimoduleMap:
        """ϖ: J∘J -> J, a∘b ↦ ab"""
        return self.canonical(self.circ(self.J, self.J), [self.J, self.J], self.J, [self.J], self.R.mult_matrix, "ϖ")

    def tau(self) -> BimoduleMap:
        """τ: I -> J, a⊗b ↦ ab"""
        return BimoduleMap(self.I, self.J, self.R.mult_matrix, "τ")

    def interchange(self, M: Bimodule, N: Bimodule, M2: Bimodule, N2: Bimodule) -> BimoduleMap:
        """ζ: (M•N)∘(M2•N2) -> (M∘M2)•(N∘N2), (m•n)∘(m2•n2) ↦ (m∘m2)•(n∘n2)."""
        source = self.circ(self.bullet(M, N), self.bullet(M2, N2))
        target = self.bullet(self.circ(M, M2), self.circ(N, N2))
        raw = permutation_matrix([M.dim, N.dim, M2.dim, N2.dim], [0, 2, 1, 3])
        return self.canonical(source, [M, N, M2, N2], target, [M, M2, N, N2], raw, "ζ")

    def commutator_quotient(self, M: Bimodule) -> Tuple[Bimodule, Matrix]:
        """M/[M,R] with its projection; the actions agree on it."""
        f = self.field
        q = quotient_by(f, M.dim, M.commutator_space())
        left = tuple(descend(f, f.matmul(q.projection, L), q, f"{M.name}/[{M.name},R]") for L in M.left)
        return Bimodule(self.R, q.dim, left, left, name=f"{M.name}/[{M.name},R]"), q.projection


