from span.spans import ObjectSet, Span, SpanMap, bullet, circ, interchange, unit_I, unit_J
from span.axioms import check_duoidal_axioms
from span.category import (
    ComoduleMonoidSpan,
    HopfModuleSpan,
    SliceObject,
    SmallCat,
    SpanComodule,
    SpanModule,
    check_bimonoid,
)
from span.beta import beta_general, beta_on_module, check_beta_identities
from span.groupoid import counterexample_module, is_groupoid_direct, is_groupoid_via_beta
from span.hopf import (
    coinvariants,
    comparison_K,
    fthm_counit,
    fthm_unit,
    theta_contraction,
    verify_fthm,
)
from span.galois import (
    beta_relative,
    check_comodule_monoid,
    check_relative_hopf,
    coinvariant_submonoid,
    is_galois,
    relative_tensor,
)

__all__ = [
    'ObjectSet', 'Span', 'SpanMap', 'bullet', 'circ', 'interchange', 'unit_I', 'unit_J',
    'check_duoidal_axioms',
    'ComoduleMonoidSpan', 'HopfModuleSpan', 'SliceObject', 'SmallCat', 'SpanComodule', 'SpanModule',
    'check_bimonoid',
    'beta_general', 'beta_on_module', 'check_beta_identities',
    'counterexample_module', 'is_groupoid_direct', 'is_groupoid_via_beta',
    'coinvariants', 'comparison_K', 'fthm_counit', 'fthm_unit', 'theta_contraction', 'verify_fthm',
    'beta_relative', 'check_comodule_monoid', 'check_relative_hopf', 'coinvariant_submonoid',
    'is_galois', 'relative_tensor',
]
