import numpy as np
import pytest

from bim.algebra import truncated_polynomials
from bim.bialgebroid import (
    Antipode,
    Bialgebroid,
    NotHopf,
    RightComoduleBim,
    check_antipode_axioms,
    check_bialgebroid,
    check_translation_identities,
    check_varsigma_hat_linearity,
    compute_antipode,
    free_comodule,
    is_hopf_algebroid,
    regular_comodule,
    varsigma,
    varsigma_hat,
)
from bim.catalog import category_bialgebroid, flip, named_algebras, named_bialgebroids
from bim.duoidal import BimDuoidal
from bim.generators import bimodule_corpus, rmodule_corpus
from core.exceptions import CategoryError, DimensionMismatch, ModuleAxiomError
from span.catalog import cyclic_group, walking_arrow


@pytest.mark.bim
class TestBialgebroidAxioms:
    """Bialgebroid axioms as matrix identities"""

    def test_group_algebra(self, group_c2_f3, group_c2_f101):
        for B in (group_c2_f3, group_c2_f101):
            report = check_bialgebroid(B)
            assert report.passed, report.failures()

    def test_idempotent_monoid_algebra(self, idempotent_f3):
        assert check_bialgebroid(idempotent_f3).passed

    def test_pair_bialgebroid(self, pair_dual):
        assert pair_dual.AA.dim == 8
        report = check_bialgebroid(pair_dual)
        assert report.passed, report.failures()

    def test_corrupted_counit(self, group_c2_f3):
        B = group_c2_f3
        broken = Bialgebroid(B.D, B.A, B.s, B.t, B.Delta, np.array([[1, 2]]), name="broken")
        report = check_bialgebroid(broken)
        assert not report.passed
        assert "left counit" in [e.diagram for e in report.failures()]

    def test_wrong_source_shape(self, group_c2_f3):
        B = group_c2_f3
        with pytest.raises(DimensionMismatch):
            Bialgebroid(B.D, B.A, np.ones((3, 1), dtype=np.int64), B.t, B.Delta, B.eps)

    def test_wrong_delta_shape(self, group_c2_f3):
        B = group_c2_f3
        with pytest.raises(DimensionMismatch):
            Bialgebroid(B.D, B.A, B.s, B.t, np.zeros((3, 2), dtype=np.int64), B.eps)

    def test_delta_in_quotient_coordinates(self, pair_dual):
        """Δ given on the classes of A•A gives the same bialgebroid"""
        B = pair_dual
        assert B.Delta.shape == (8, 4)
        again = Bialgebroid(B.D, B.A, B.s, B.t, B.Delta, B.eps, name="again")
        assert np.array_equal(again.Delta, B.Delta)
        assert check_bialgebroid(again).passed

    def test_source_and_target(self, pair_dual):
        t = pair_dual.R.basis(1)
        assert list(pair_dual.source(t)) == [0, 0, 1, 0]
        assert list(pair_dual.target(t)) == [0, 1, 0, 0]


@pytest.mark.bim
class TestVarsigmaHat:
    """ς̂: A⋆A -> A•A"""

    def test_group_algebra_invertible(self, group_c2_f3):
        report = varsigma_hat(group_c2_f3)
        assert report.invertible
        assert report.kernel_witness is None

    def test_idempotent_kernel(self, idempotent_f3):
        """The kernel is spanned by m⋆1 - m⋆m"""
        report = varsigma_hat(idempotent_f3)
        assert not report.invertible
        assert report.rank == 3
        w = report.kernel_witness
        assert w[0] == 0 and w[1] == 0
        assert w[2] != 0
        assert (w[2] + w[3]) % 3 == 0

    @pytest.mark.parametrize("name", ["c2", "idempotent_monoid", "pair"])
    def test_linearity(self, F5, name):
        B = named_bialgebroids(F5)[name]
        report = check_varsigma_hat_linearity(B)
        assert report.passed, report.failures()


@pytest.mark.bim
class TestAntipode:
    """Antipode synthesized from the inverse of ς̂"""

    def test_group_algebra(self, group_c2_f3):
        result = compute_antipode(group_c2_f3)
        assert isinstance(result, Antipode)
        assert np.array_equal(result.S, np.eye(2, dtype=np.int64))
        assert check_antipode_axioms(group_c2_f3, result.S).passed

    def test_cyclic_group_inverts(self, F5):
        C3 = cyclic_group(3)
        B = category_bialgebroid(F5, C3)
        labels = [str(a) for a in C3.arrows]
        result = compute_antipode(B)
        assert isinstance(result, Antipode)
        i, j = labels.index("g1"), labels.index("g2")
        assert result.S[j, i] == 1 and result.S[i, j] == 1
        assert result.S[labels.index("1"), labels.index("1")] == 1

    def test_pair_antipode_is_flip(self, pair_dual):
        result = compute_antipode(pair_dual)
        assert isinstance(result, Antipode)
        assert np.array_equal(result.S, flip(pair_dual.R))
        report = check_antipode_axioms(pair_dual, result.S)
        assert report.passed, report.failures()

    def test_identity_is_not_an_antipode_of_pair(self, pair_dual):
        report = check_antipode_axioms(pair_dual, np.eye(4, dtype=np.int64))
        assert not report.passed
        assert report.failures()[0].diagram == "S(a s(r)) = t(r) S(a)"

    def test_idempotent_has_no_antipode(self, idempotent_f3):
        result = compute_antipode(idempotent_f3)
        assert isinstance(result, NotHopf)
        assert result.kernel_witness is not None

    @pytest.mark.parametrize("name", ["c2", "pair"])
    def test_translation_identities(self, F5, name):
        B = named_bialgebroids(F5)[name]
        result = compute_antipode(B)
        report = check_translation_identities(B, result)
        assert report.passed, report.failures()

    def test_flip_is_an_involution(self, dual_numbers):
        P = flip(dual_numbers)
        assert np.array_equal(P @ P, np.eye(4, dtype=np.int64))


@pytest.mark.bim
class TestComodules:
    """Right comodules and the Galois maps ς_Q"""

    def test_regular_comodule(self, group_c2_f3, pair_dual):
        for B in (group_c2_f3, pair_dual):
            assert regular_comodule(B).check().passed

    def test_free_comodule(self, pair_dual):
        Q = free_comodule(pair_dual, pair_dual.D.J)
        assert Q.name == f"J•{pair_dual.name}"
        assert Q.check().passed

    def test_wrong_coaction_shape(self, group_c2_f3):
        B = group_c2_f3
        with pytest.raises(DimensionMismatch):
            RightComoduleBim(B, B.bimodule, np.zeros((3, 2), dtype=np.int64))

    def test_zero_coaction_rejected(self, group_c2_f3):
        B = group_c2_f3
        Q = RightComoduleBim(B, B.bimodule, np.zeros((4, 2), dtype=np.int64), name="zero")
        with pytest.raises(ModuleAxiomError):
            varsigma(B, Q)

    def test_varsigma_on_regular_comodule(self, group_c2_f3, idempotent_f3):
        assert varsigma(group_c2_f3, regular_comodule(group_c2_f3)).invertible
        assert not varsigma(idempotent_f3, regular_comodule(idempotent_f3)).invertible


@pytest.mark.bim
class TestHopfVerdict:
    """Hopf algebroid decision with its cross-checks"""

    def test_group_algebra_is_hopf(self, group_c2_f3):
        verdict = is_hopf_algebroid(group_c2_f3, [regular_comodule(group_c2_f3)])
        assert verdict.holds
        assert verdict.detail == "antipode axioms hold"

    def test_pair_is_hopf(self, pair_dual):
        assert is_hopf_algebroid(pair_dual).holds

    def test_idempotent_is_not_hopf(self, idempotent_f3):
        verdict = is_hopf_algebroid(idempotent_f3)
        assert not verdict.holds
        assert verdict.detail == "ς̂ is singular"
        assert verdict.witness["kernel_witness"] is not None


@pytest.mark.bim
@pytest.mark.unit
class TestCatalog:
    """Named algebras, bialgebroids and seeded corpora"""

    def test_named_bialgebroids(self, F3):
        assert set(named_bialgebroids(F3)) == {"c2", "idempotent_monoid", "pair"}

    def test_named_algebras_are_commutative(self, F5):
        for R in named_algebras(F5).values():
            assert R.is_commutative()

    def test_category_bialgebroid_needs_one_object(self, F3):
        with pytest.raises(CategoryError):
            category_bialgebroid(F3, walking_arrow())

    def test_corpora_are_deterministic(self, F5):
        D = BimDuoidal(truncated_polynomials(F5, 2))
        first = bimodule_corpus(D, 3, seed=7, max_dim=2)
        second = bimodule_corpus(D, 3, seed=7, max_dim=2)
        assert [M.dim for M in first] == [M.dim for M in second]
        for M, N in zip(first, second):
            assert all(np.array_equal(a, b) for a, b in zip(M.left + M.right, N.left + N.right))

    def test_rmodule_corpus_bounds(self, D_dual):
        modules = rmodule_corpus(D_dual, 5, seed=3, max_dim=3)
        assert [M.name for M in modules] == ["N0", "N1", "N2", "N3", "N4"]
        assert all(M.dim <= 3 and M.is_symmetric() for M in modules)
