"""Named base algebras and bialgebroids used by the tests, the CLI and data/."""
from typing import Dict, Sequence

import numpy as np

from bim.algebra import FDAlgebra, diagonal_algebra, ground_algebra, monoid_algebra, tensor_algebra, truncated_polynomials
from bim.bialgebroid import Bialgebroid
from bim.duoidal import BimDuoidal, permutation_matrix
from core.exceptions import CategoryError
from linalg.field import PrimeField
from span.category import SmallCat


def monoid_bialgebroid(field: PrimeField, elements: Sequence[str], table: Dict, unit: str, name: str = None) -> Bialgebroid:
    """The monoid algebra over the ground field with Δ(g) = g⊗g and ε(g) = 1."""
    A = monoid_algebra(field, elements, table, unit, name=name)
    D = BimDuoidal(ground_algebra(field))
    n = A.dim
    delta = np.zeros((n * n, n), dtype=np.int64)
    for i in range(n):
        delta[i * n + i, i] = 1
    s = A.unit.reshape(-1, 1)
    return Bialgebroid(D, A, s, s, delta, np.ones((1, n), dtype=np.int64), name=A.name)


def category_bialgebroid(field: PrimeField, C: SmallCat) -> Bialgebroid:
    """Monoid bialgebroid of a one-object category."""
    if len(C.objects) != 1:
        raise CategoryError(f"{C.name} has {len(C.objects)} objects, the monoid algebra needs one")
    elements = [str(a) for a in C.arrows]
    table = {(str(f), str(g)): str(fg) for (f, g), fg in C.table.items()}
    unit = str(C.unit(C.objects.elements[0]))
    return monoid_bialgebroid(field, elements, table, unit, name=f"F{field.p}[{C.name}]")


def group_algebra_c2(field: PrimeField) -> Bialgebroid:
    table = {("1", "1"): "1", ("1", "g"): "g", ("g", "1"): "g", ("g", "g"): "1"}
    return monoid_bialgebroid(field, ["1", "g"], table, "1", name=f"F{field.p}C2")


def idempotent_monoid_algebra(field: PrimeField) -> Bialgebroid:
    table = {("1", "1"): "1", ("1", "m"): "m", ("m", "1"): "m", ("m", "m"): "m"}
    return monoid_bialgebroid(field, ["1", "m"], table, "1", name=f"F{field.p}{{1,m}}")


def pair_bialgebroid(R: FDAlgebra) -> Bialgebroid:
    """R⊗R with s(r) = r⊗1, t(r) = 1⊗r, Δ(x⊗y) = (x⊗1)•(1⊗y) and ε(x⊗y) = xy."""
    D = BimDuoidal(R)
    A = tensor_algebra(R, R)
    n = R.dim
    s = np.stack([np.kron(R.basis(i), R.unit) for i in range(n)], axis=1)
    t = np.stack([np.kron(R.unit, R.basis(i)) for i in range(n)], axis=1)
    delta = np.stack(
        [np.kron(np.kron(R.basis(x), R.unit), np.kron(R.unit, R.basis(y))) for x in range(n) for y in range(n)],
        axis=1,
    )
    return Bialgebroid(D, A, s, t, delta, R.mult_matrix, name=f"{R.name}⊗{R.name}")


def flip(R: FDAlgebra) -> np.ndarray:
    """x⊗y ↦ y⊗x on R⊗R."""
    return permutation_matrix([R.dim, R.dim], [1, 0])


def named_algebras(field: PrimeField) -> Dict[str, FDAlgebra]:
    return {
        "ground": ground_algebra(field),
        "dual_numbers": truncated_polynomials(field, 2),
        "split": diagonal_algebra(field, 2),
    }


def named_bialgebroids(field: PrimeField) -> Dict[str, Bialgebroid]:
    return {
        "c2": group_algebra_c2(field),
        "idempotent_monoid": idempotent_monoid_algebra(field),
        "pair": pair_bialgebroid(truncated_polynomials(field, 2)),
    }
