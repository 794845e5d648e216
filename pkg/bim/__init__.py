from bim.algebra import Bimodule, BimoduleMap, FDAlgebra
from bim.duoidal import BimDuoidal
from bim.axioms import check_duoidal_axioms_bim, check_idempotent_criteria, check_J_module
from bim.bialgebroid import (
    Antipode,
    Bialgebroid,
    HopfModuleBim,
    NotHopf,
    RightComoduleBim,
    check_antipode_axioms,
    check_bialgebroid,
    compute_antipode,
    dual_fthm_check,
    is_hopf_algebroid,
    varsigma,
    varsigma_hat,
)

__all__ = [
    'Bimodule', 'BimoduleMap', 'FDAlgebra', 'BimDuoidal',
    'check_duoidal_axioms_bim', 'check_idempotent_criteria', 'check_J_module',
    'Antipode', 'Bialgebroid', 'HopfModuleBim', 'NotHopf', 'RightComoduleBim',
    'check_antipode_axioms', 'check_bialgebroid', 'compute_antipode', 'dual_fthm_check',
    'is_hopf_algebroid', 'varsigma', 'varsigma_hat',
]
