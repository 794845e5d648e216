"""Seeded random bimodules, R-modules and Hopf modules over a fixed base algebra."""
import random
from typing import List, Sequence

import numpy as np

from bim.algebra import Bimodule, direct_sum
from bim.bialgebroid import Bialgebroid, HopfModuleBim, free_hopf_module, regular_hopf_module
from bim.duoidal import BimDuoidal
from linalg.field import Matrix
from linalg.quotient import descend, quotient_by


def random_vector(rng: random.Random, p: int, n: int) -> np.ndarray:
    return np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)


def random_invertible(rng: random.Random, D: BimDuoidal, n: int) -> Matrix:
    f = D.field
    while True:
        P = np.array([[rng.randrange(f.p) for _ in range(n)] for _ in range(n)], dtype=np.int64)
        if f.invert(P) is not None:
            return P


def submodule_closure(M: Bimodule, generators: Matrix) -> Matrix:
    """Column basis of the smallest sub-bimodule containing the generators."""
    f = M.field
    span = f.image(generators) if generators.size else f.zeros(M.dim, 0)
    actions = list(M.left) + list(M.right)
    while True:
        if not span.shape[1]:
            return span
        grown = np.concatenate([span] + [f.matmul(a, span) for a in actions], axis=1)
        grown = f.image(grown)
        if grown.shape[1] == span.shape[1]:
            return span
        span = grown


def quotient_module(M: Bimodule, sub: Matrix, name: str) -> Bimodule:
    f = M.field
    q = quotient_by(f, M.dim, sub)
    left = tuple(descend(f, f.matmul(q.projection, a), q, name) for a in M.left)
    right = tuple(descend(f, f.matmul(q.projection, a), q, name) for a in M.right)
    return Bimodule(M.R, q.dim, left, right, name=name)


def random_quotient(rng: random.Random, M: Bimodule, max_dim: int, name: str) -> Bimodule:
    """M modulo random sub-bimodules until the dimension is at most max_dim."""
    f = M.field
    generators = f.zeros(M.dim, 0)
    while True:
        sub = submodule_closure(M, generators)
        if M.dim - sub.shape[1] <= max_dim and (sub.shape[1] or rng.random() < 0.5):
            return quotient_module(M, sub, name)
        generators = np.concatenate([generators, random_vector(rng, f.p, M.dim).reshape(-1, 1)], axis=1)


def random_bimodule(rng: random.Random, D: BimDuoidal, max_dim: int = 3, name: str = "M") -> Bimodule:
    """A quotient of I, of J or of I⊕J, in a random basis."""
    choice = rng.randrange(3)
    if choice == 0:
        base = D.I
    elif choice == 1:
        base = D.J
    else:
        base = direct_sum(D.I, D.J)
    M = random_quotient(rng, base, max_dim, name)
    if not M.dim:
        return M
    return M.change_basis(random_invertible(rng, D, M.dim), name=name)


def random_rmodule(rng: random.Random, D: BimDuoidal, max_dim: int = 4, name: str = "N") -> Bimodule:
    """A quotient of J⊕J, so left and right actions agree."""
    M = random_quotient(rng, direct_sum(D.J, D.J), max_dim, name)
    if not M.dim:
        return M
    return M.change_basis(random_invertible(rng, D, M.dim), name=name)


def bimodule_corpus(D: BimDuoidal, size: int, seed: int, max_dim: int = 3) -> List[Bimodule]:
    rng = random.Random(seed)
    return [random_bimodule(rng, D, max_dim, name=f"M{i}") for i in range(size)]


def rmodule_corpus(D: BimDuoidal, size: int, seed: int, max_dim: int = 4) -> List[Bimodule]:
    rng = random.Random(seed)
    return [random_rmodule(rng, D, max_dim, name=f"N{i}") for i in range(size)]


def hopf_module_corpus(B: Bialgebroid, rmodules: Sequence[Bimodule]) -> List[HopfModuleBim]:
    """The regular Hopf module and the free ones N•A."""
    return [regular_hopf_module(B)] + [free_hopf_module(B, N) for N in rmodules]
