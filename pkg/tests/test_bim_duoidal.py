import numpy as np
import pytest

from bim import axioms as bim_axioms
from bim.algebra import (
    Bimodule,
    FDAlgebra,
    diagonal_algebra,
    direct_sum,
    ground_algebra,
    monoid_algebra,
    regular_bimodule,
    symmetric_bimodule,
    tensor_algebra,
    truncated_polynomials,
)
from bim.axioms import check_duoidal_axioms_bim, check_idempotent_criteria, check_J_module
from bim.duoidal import BULLET, BimDuoidal, permutation_matrix
from bim.generators import bimodule_corpus, rmodule_corpus
from core.exceptions import AlgebraError, BimoduleError, DimensionMismatch, DuoidalError
from linalg.field import PrimeField


def matrix_algebra(field: PrimeField) -> FDAlgebra:
    """2x2 matrices on the basis E00, E01, E10, E11"""
    mul = np.zeros((4, 4, 4), dtype=np.int64)
    for i in range(2):
        for j in range(2):
            for l in range(2):
                mul[i * 2 + j, j * 2 + l, i * 2 + l] = 1
    return FDAlgebra(field, mul, np.array([1, 0, 0, 1]), name="M2")


def skew_bimodule(R: FDAlgebra) -> Bimodule:
    """t acts on the left only, so [M, R] is one-dimensional"""
    t = np.array([[0, 0], [1, 0]])
    return Bimodule(R, 2, (np.eye(2, dtype=np.int64), t), (np.eye(2, dtype=np.int64), np.zeros((2, 2), dtype=np.int64)), name="skew")


@pytest.mark.bim
@pytest.mark.unit
class TestAlgebras:
    """Finite-dimensional algebras and bimodules"""

    def test_dual_numbers(self, dual_numbers):
        t = dual_numbers.basis(1)
        assert dual_numbers.is_commutative()
        assert not dual_numbers.product(t, t).any()

    def test_matrix_algebra_is_not_commutative(self, F5):
        M2 = matrix_algebra(F5)
        assert M2.commutator_witness() is not None
        with pytest.raises(AlgebraError):
            BimDuoidal(M2)

    def test_non_associative_rejected(self, F5):
        """e1 e1 = e2, e1 e2 = e1, everything else past the unit zero"""
        mul = np.zeros((3, 3, 3), dtype=np.int64)
        for i in range(3):
            mul[0, i, i] = mul[i, 0, i] = 1
        mul[1, 1, 2] = 1
        mul[1, 2, 1] = 1
        with pytest.raises(AlgebraError):
            FDAlgebra(F5, mul, np.array([1, 0, 0]))

    def test_bad_shape_rejected(self, F5):
        with pytest.raises(DimensionMismatch):
            FDAlgebra(F5, np.zeros((2, 2, 3), dtype=np.int64), np.array([1, 0]))

    def test_tensor_algebra(self, dual_numbers):
        """(t⊗1)(1⊗t) = t⊗t at index 3"""
        A = tensor_algebra(dual_numbers, dual_numbers)
        assert A.dim == 4
        assert list(A.product(A.basis(2), A.basis(1))) == [0, 0, 0, 1]

    def test_monoid_algebra_homomorphism(self, F5):
        table = {("1", "1"): "1", ("1", "g"): "g", ("g", "1"): "g", ("g", "g"): "1"}
        C2 = monoid_algebra(F5, ["1", "g"], table, "1")
        swap_sign = np.array([[1, 0], [0, 4]])
        assert C2.is_homomorphism(swap_sign, C2) is None
        assert C2.is_homomorphism(np.array([[1, 0], [0, 2]]), C2) == [1, 1]

    def test_non_commuting_actions_rejected(self, dual_numbers):
        t = np.array([[0, 0], [1, 0]])
        s = np.array([[0, 1], [0, 0]])
        eye = np.eye(2, dtype=np.int64)
        with pytest.raises(BimoduleError):
            Bimodule(dual_numbers, 2, (eye, t), (eye, s))

    def test_commutator_space(self, dual_numbers):
        assert regular_bimodule(dual_numbers).is_symmetric()
        assert skew_bimodule(dual_numbers).commutator_space().shape == (2, 1)

    def test_change_basis_keeps_axioms(self, dual_numbers):
        M = skew_bimodule(dual_numbers).change_basis(np.array([[1, 1], [0, 1]]))
        assert M.axiom_violation() is None
        with pytest.raises(BimoduleError):
            M.change_basis(np.array([[1, 1], [1, 1]]))

    def test_direct_sum(self, dual_numbers):
        M = direct_sum(regular_bimodule(dual_numbers), skew_bimodule(dual_numbers))
        assert M.dim == 4
        assert not M.is_symmetric()


@pytest.mark.bim
class TestProducts:
    """The two tensor products over R and the structure maps"""

    def test_unit_dimensions(self, D_dual):
        assert D_dual.I.dim == 4
        assert D_dual.J.dim == 2

    def test_bullet_of_units(self, D_dual):
        """J•J ≅ J and I•I ≅ R⊗R⊗R"""
        assert D_dual.bullet(D_dual.J, D_dual.J).dim == 2
        assert D_dual.bullet(D_dual.I, D_dual.I).dim == 8

    def test_tensor_factor_maps(self, D_dual, dual_numbers):
        """Products come with the surjection from raw tensors"""
        f = D_dual.field
        P, factor = D_dual.bullet_tensor(D_dual.J, D_dual.J)
        assert P.dim == 2
        assert factor.shape == (2, 4)
        assert f.is_surjective(factor)
        M = skew_bimodule(dual_numbers)
        Q, factor = D_dual.circ_tensor(D_dual.I, M)
        assert Q.dim == M.dim
        assert factor.shape == (M.dim, D_dual.I.dim * M.dim)

    def test_varpi_is_multiplication_iso(self, D_dual):
        """J∘J has dim 2 and ϖ is invertible"""
        P, _ = D_dual.circ_tensor(D_dual.J, D_dual.J)
        assert P.dim == 2
        assert D_dual.field.is_invertible(D_dual.varpi().matrix)

    def test_products_are_cached(self, D_dual):
        J = D_dual.J
        assert D_dual.circ(J, J) is D_dual.circ(J, J)

    def test_unitors_invertible(self, D_dual, dual_numbers):
        M = skew_bimodule(dual_numbers)
        f = D_dual.field
        for unitor in (D_dual.lambda_bullet(M), D_dual.rho_bullet(M), D_dual.lambda_circ(M), D_dual.rho_circ(M)):
            assert f.is_invertible(unitor.matrix), unitor.name
            assert unitor.linearity_violation() is None

    def test_tau_and_delta_are_bilinear(self, D_dual):
        assert D_dual.tau().linearity_violation() is None
        assert D_dual.delta().linearity_violation() is None

    def test_foreign_algebra_rejected(self, D_dual, F5):
        other = regular_bimodule(truncated_polynomials(F5, 2))
        with pytest.raises(BimoduleError):
            D_dual.bullet(D_dual.J, other)

    def test_permutation_matrix(self):
        P = permutation_matrix([2, 3], [1, 0])
        a = np.array([1, 2])
        b = np.array([3, 4, 5])
        assert list(P @ np.kron(a, b)) == list(np.kron(b, a))

    def test_commutator_quotient(self, D_dual, dual_numbers):
        Mc, projection = D_dual.commutator_quotient(skew_bimodule(dual_numbers))
        assert Mc.dim == 1
        assert projection.shape == (1, 2)
        assert Mc.is_symmetric()

    def test_interchange_shape(self, D_dual):
        J = D_dual.J
        z = D_dual.interchange(J, J, J, J)
        assert z.matrix.shape == (2, 2)
        assert D_dual.field.is_invertible(z.matrix)


@pytest.mark.bim
class TestBimAxioms:
    """Duoidal axioms of bim(R) as matrix identities"""

    def test_units_only(self, D_split):
        report = check_duoidal_axioms_bim(D_split, [])
        assert report.passed, report.failures()
        assert "ϖ is invertible" in [e.diagram for e in report.entries]

    def test_named_modules(self, D_dual, dual_numbers):
        modules = [D_dual.J, skew_bimodule(dual_numbers)]
        report = check_duoidal_axioms_bim(D_dual, modules)
        assert report.passed, report.failures()

    def test_ground_field_corpus(self, D_ground):
        modules = bimodule_corpus(D_ground, 2, seed=11, max_dim=2)
        assert check_duoidal_axioms_bim(D_ground, modules).passed

    def test_every_ordered_tuple_is_evaluated(self, D_dual, dual_numbers, monkeypatch):
        """Repeated and non-adjacent modules are combined too"""
        seen = {"hexagons": [], "squares": []}
        monkeypatch.setattr(bim_axioms, "check_associativity", lambda D, ms, report: seen["hexagons"].append(tuple(map(id, ms))))
        monkeypatch.setattr(bim_axioms, "check_unitality", lambda D, A, B, report: seen["squares"].append((id(A), id(B))))
        J, M, I = D_dual.J, skew_bimodule(dual_numbers), D_dual.I
        j, m, i = id(J), id(M), id(I)
        check_duoidal_axioms_bim(D_dual, [J, M, I])
        assert len(seen["hexagons"]) == 3 ** 6
        assert (m, m, m, m, m, m) in seen["hexagons"]
        assert (j, i, j, i, j, i) in seen["hexagons"]
        assert len(seen["squares"]) == 9
        assert (m, m) in seen["squares"] and (i, j) in seen["squares"]

    def test_explicit_tuples(self, D_dual, dual_numbers, monkeypatch):
        """Given six-tuples, the unit squares use their consecutive pairs"""
        seen = []
        monkeypatch.setattr(bim_axioms, "check_associativity", lambda D, ms, report: None)
        monkeypatch.setattr(bim_axioms, "check_unitality", lambda D, A, B, report: seen.append((A.name, B.name)))
        modules = [D_dual.J, skew_bimodule(dual_numbers)]
        check_duoidal_axioms_bim(D_dual, modules, tuples=[(0, 1, 1, 1, 0, 1)])
        assert seen == [("J", "skew"), ("skew", "skew")]

    def test_tuple_out_of_range(self, D_dual):
        with pytest.raises(DuoidalError):
            check_duoidal_axioms_bim(D_dual, [D_dual.J], tuples=[(0, 0, 0, 0, 0, 1)])

    @pytest.mark.property
    @pytest.mark.parametrize("p,builder", [
        (3, lambda F: truncated_polynomials(F, 3)),
        (3, ground_algebra),
        (5, lambda F: truncated_polynomials(F, 2)),
        (5, lambda F: diagonal_algebra(F, 2)),
    ])
    def test_hundred_random_tuples(self, p, builder):
        """25 random six-tuples per algebra, dim R at most 3"""
        D = BimDuoidal(builder(PrimeField(p)))
        modules = bimodule_corpus(D, 6 * 25, seed=p, max_dim=2)
        tuples = [tuple(range(6 * k, 6 * k + 6)) for k in range(25)]
        report = check_duoidal_axioms_bim(D, modules, tuples=tuples)
        assert report.passed, report.failures()

    @pytest.mark.property
    def test_random_corpus(self, D_dual):
        modules = bimodule_corpus(D_dual, 2, seed=5, max_dim=2)
        assert all(M.dim <= 2 for M in modules)
        assert check_duoidal_axioms_bim(D_dual, modules).passed

    def test_broken_relations_are_reported(self, dual_numbers):
        """Replacing the • relations by a non-stable span breaks the I comonoid"""
        def hook(kind, relations):
            if kind != BULLET:
                return relations
            column = np.zeros((relations.shape[0], 1), dtype=np.int64)
            column[0, 0] = 1
            return column

        D = BimDuoidal(dual_numbers, relation_hook=hook)
        report = check_duoidal_axioms_bim(D, [])
        assert not report.passed
        failed = [e.diagram for e in report.failures()]
        assert "I comonoid: coassociativity" in failed


@pytest.mark.bim
class TestIdempotentCriteria:
    """M∘τ is invertible exactly for J-modules"""

    def test_symmetric_module(self, D_dual):
        report = check_idempotent_criteria(D_dual, D_dual.J)
        assert report.passed
        assert len(report.entries) == 2

    def test_skew_module(self, D_dual, dual_numbers):
        M = skew_bimodule(dual_numbers)
        assert not check_J_module(D_dual, M)
        report = check_idempotent_criteria(D_dual, M)
        assert report.passed
        assert len(report.entries) == 1

    def test_enveloping_module(self, D_dual):
        assert check_idempotent_criteria(D_dual, D_dual.I).passed

    def test_rmodules_are_J_modules(self, D_dual):
        for N in rmodule_corpus(D_dual, 4, seed=2, max_dim=3):
            assert check_J_module(D_dual, N)
            assert check_idempotent_criteria(D_dual, N).passed

    def test_symmetric_bimodule_helper(self, dual_numbers):
        N = symmetric_bimodule(dual_numbers, [np.eye(1, dtype=np.int64), np.zeros((1, 1), dtype=np.int64)])
        assert N.dim == 1
        assert N.is_symmetric()

    def test_ground_field_everything_symmetric(self, D_ground):
        for M in bimodule_corpus(D_ground, 3, seed=1):
            assert M.is_symmetric()
