import numpy as np
import pytest

from bim.algebra import Bimodule, symmetric_bimodule
from bim.bialgebroid import (
    HopfModuleBim,
    check_dual_coinvariants,
    comparison_counit,
    comparison_unit,
    dual_coinvariants,
    dual_coinvariants_oracle,
    dual_fthm_check,
    free_hopf_module,
    regular_hopf_module,
)
from bim.generators import hopf_module_corpus, rmodule_corpus
from core.exceptions import BimoduleError, ModuleAxiomError, PreconditionError
from schemas.reports import Report


@pytest.mark.bim
class TestHopfModules:
    """Right A-modules with a compatible coaction"""

    def test_regular_hopf_module(self, group_c2_f3, pair_dual):
        for B in (group_c2_f3, pair_dual):
            X = regular_hopf_module(B)
            assert X.dim == B.dim
            assert X.check().passed

    def test_free_hopf_module(self, pair_dual):
        X = free_hopf_module(pair_dual, pair_dual.D.J)
        assert X.dim == 4
        assert X.compatibility_violation() is None

    def test_free_needs_an_rmodule(self, pair_dual):
        R = pair_dual.R
        eye = np.eye(2, dtype=np.int64)
        skew = Bimodule(R, 2, (eye, np.array([[0, 0], [1, 0]])), (eye, np.zeros((2, 2), dtype=np.int64)), name="skew")
        with pytest.raises(BimoduleError):
            free_hopf_module(pair_dual, skew)

    def test_zero_action_rejected(self, group_c2_f3):
        B = group_c2_f3
        zero = np.zeros((2, 2), dtype=np.int64)
        with pytest.raises(ModuleAxiomError):
            HopfModuleBim(B, B.bimodule, (zero, zero), B.Delta, name="zero")

    def test_action_count_checked(self, group_c2_f3):
        B = group_c2_f3
        with pytest.raises(BimoduleError):
            HopfModuleBim(B, B.bimodule, (np.eye(2, dtype=np.int64),), B.Delta)

    def test_corpus(self, group_c2_f3):
        rmodules = rmodule_corpus(group_c2_f3.D, 3, seed=4, max_dim=2)
        corpus = hopf_module_corpus(group_c2_f3, rmodules)
        assert len(corpus) == 4
        assert corpus[0].name == group_c2_f3.name
        assert all(X.check().passed for X in corpus)


@pytest.mark.bim
class TestDualCoinvariants:
    """D(X) = X modulo x·a - x·s(ε(a))"""

    def test_regular_group_algebra(self, group_c2_f3):
        dual = dual_coinvariants(regular_hopf_module(group_c2_f3))
        assert dual.module.dim == 1
        assert dual.module.is_symmetric()

    def test_free_module_recovers_base(self, pair_dual):
        N = pair_dual.D.J
        X = free_hopf_module(pair_dual, N)
        assert dual_coinvariants(X).module.dim == N.dim
        assert dual_coinvariants_oracle(X).dim == N.dim

    @pytest.mark.parametrize("fixture", ["group_c2_f3", "pair_dual"])
    def test_matches_coequalizer(self, request, fixture):
        B = request.getfixturevalue(fixture)
        report = Report(subject="coinvariants")
        assert check_dual_coinvariants(regular_hopf_module(B), report)
        assert report.passed

    def test_unit_and_counit_shapes(self, group_c2_f3):
        B = group_c2_f3
        N = symmetric_bimodule(B.R, [np.eye(2, dtype=np.int64)], name="F^2")
        X = free_hopf_module(B, N)
        unit = comparison_unit(B, N, X)
        assert unit.shape == (N.dim, N.dim)
        assert B.field.is_invertible(unit)
        counit, dual, target = comparison_counit(X)
        assert counit.shape == (target.dim, X.dim)
        assert dual.module.dim == N.dim


@pytest.mark.bim
class TestDualComparison:
    """N ↦ N•A is an equivalence onto Hopf modules when A is Hopf"""

    def test_group_algebra(self, group_c2_f3):
        B = group_c2_f3
        rmodules = rmodule_corpus(B.D, 10, seed=2, max_dim=3)
        report = dual_fthm_check(B, rmodules, [regular_hopf_module(B)])
        assert report.passed, report.failures()
        assert any(e.diagram.endswith("counit inverse is [x]•a ↦ x₀·S(x₁)a") for e in report.entries)

    def test_pair_bialgebroid(self, pair_dual):
        report = dual_fthm_check(pair_dual, [pair_dual.D.J], [regular_hopf_module(pair_dual)])
        assert report.passed, report.failures()

    @pytest.mark.property
    @pytest.mark.parametrize("name", ["group_c2_f3", "pair_dual"])
    def test_ten_random_rmodules(self, request, name):
        """Unit and counit are invertible on ten random R-modules and their free Hopf modules"""
        B = request.getfixturevalue(name)
        rmodules = rmodule_corpus(B.D, 10, seed=17, max_dim=3)
        report = dual_fthm_check(B, rmodules, [regular_hopf_module(B)])
        assert report.passed, report.failures()
        units = [e for e in report.entries if "unit N -> D(N•A) invertible" in e.diagram]
        assert len(units) == 10

    def test_requires_hopf(self, idempotent_f3):
        with pytest.raises(PreconditionError) as excinfo:
            dual_fthm_check(idempotent_f3, [])
        assert excinfo.value.witness["kernel_witness"] is not None
