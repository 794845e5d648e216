"""Hopf modules over a small category: coinvariants, the comparison functor,
the Fundamental Theorem checks and the contraction of the coinvariant fork."""
from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import PreconditionError
from core.labels import format_label, jsonable
from core.logging_config import logger
from schemas.reports import FiniteMapReport, Report
from span.axioms import compare_paths
from span.beta import beta_map, beta_on_module, free_module, map_report
from span.category import HopfModuleSpan, SliceObject, SmallCat, SpanModule, self_hopf_module, trivially_graded
from span.galois import is_galois
from span.groupoid import asymmetric_pairs, counterexample_module, inverse_table, is_groupoid_direct
from span.spans import (
    Label,
    Span,
    SpanMap,
    alpha_bullet,
    alpha_circ,
    bullet,
    bullet_map,
    chain,
    circ,
    circ_map,
    delta_I,
    identity,
    lambda_bullet,
    rho_bullet,
    tau,
    unit_I,
    unit_J,
    varpi_J,
)


def coinvariant_fork(Xh: HopfModuleSpan) -> Tuple[SpanMap, SpanMap]:
    """φ⁰ = ρ•I and φ¹ = ((X•η)•I).α⁻¹.(X•δ), both X•I -> (X•A)•I."""
    A = Xh.cat
    P = Xh.carrier
    I = unit_I(A.objects)
    phi0 = bullet_map(Xh.comodule().coaction(), identity(I))
    phi0 = SpanMap(phi0.domain, phi0.codomain, phi0.assignment, "φ0")
    phi1 = chain(
        bullet_map(identity(P), delta_I(A.objects)),
        alpha_bullet(P, I, I).inverse(),
        bullet_map(bullet_map(identity(P), A.eta()), identity(I)),
    )
    phi1 = SpanMap(phi1.domain, phi1.codomain, phi1.assignment, "φ1")
    return phi0, phi1


def coinvariants(Xh: HopfModuleSpan) -> SliceObject:
    """Loops x with c(x) the identity at s(x), anchored at s(x).

    Computed as the equalizer of the fork φ⁰, φ¹ and cross-checked against
    the direct description."""
    phi0, phi1 = coinvariant_fork(Xh)
    agreeing = [(x, o) for x, o in phi0.domain.arrows if phi0((x, o)) == phi1((x, o))]
    A = Xh.cat
    direct = [
        x for x in Xh.carrier.arrows
        if Xh.carrier.src[x] == Xh.carrier.tgt[x] and Xh.grade[x] == A.unit(Xh.carrier.src[x])
    ]
    if [x for x, _ in agreeing] != direct:
        raise PreconditionError("equalizer of the coinvariant fork disagrees with the direct formula")
    return SliceObject(A.objects, tuple(x for x, _ in agreeing), {x: o for x, o in agreeing})


def coinvariant_inclusion(Xh: HopfModuleSpan, Z: SliceObject) -> SpanMap:
    I = unit_I(Xh.cat.objects)
    return SpanMap(Z.as_span(), bullet(Xh.carrier, I), {z: (z, Z.anchor[z]) for z in Z.points}, "ι")


def comparison_K(A: SmallCat, Z: SliceObject, name: str = "Z") -> HopfModuleSpan:
    """Z∘A with action (z, a).b = (z, a.b) and grade (z, a) ↦ a."""
    module = free_module(A, Z.as_span(), name=name)
    return HopfModuleSpan(module, {(z, a): a for z, a in module.carrier.arrows})


def right_ideal_module(A: SmallCat, g: Label) -> HopfModuleSpan:
    """gA = {g.a}, a Hopf module graded by the inclusion into A."""
    elements = [A.dot(g, a) for a in A.arrows if A.tgt(a) == A.src(g)]
    carrier = A.carrier.restrict(elements)
    action = {
        (q, b): A.dot(q, b)
        for q in carrier.arrows
        for b in A.arrows
        if A.tgt(b) == A.src(q)
    }
    module = SpanModule(A, carrier, action, name=f"{format_label(g)}A")
    return HopfModuleSpan(module, {q: q for q in carrier.arrows})


def counit_map(A: SmallCat, Xh: HopfModuleSpan) -> SpanMap:
    """ε_X: coinvariants(X)∘A -> X, (x, a) ↦ x.a."""
    Z = coinvariants(Xh)
    domain = circ(Z.as_span(), A.carrier)
    return SpanMap(domain, Xh.carrier, {(x, a): Xh.act(x, a) for x, a in domain.arrows}, "ε_X")


def fthm_counit(A: SmallCat, Xh: HopfModuleSpan) -> FiniteMapReport:
    eps = counit_map(A, Xh)
    report = map_report(f"counit_{Xh.name}", eps)
    inverses, _ = inverse_table(A)
    if inverses is not None:
        inverse = _counit_inverse(A, Xh, eps, inverses)
        report.inverse_checked = (
            inverse is not None
            and chain(eps, inverse).disagreement(identity(eps.domain)) is None
            and chain(inverse, eps).disagreement(identity(Xh.carrier)) is None
        )
    return report


def _counit_inverse(A: SmallCat, Xh: HopfModuleSpan, eps: SpanMap, inverse: Dict[Label, Label]) -> Optional[SpanMap]:
    """x ↦ (x.c(x)⁻¹, c(x))."""
    assignment = {}
    for x in Xh.carrier.arrows:
        c = Xh.grade[x]
        image = (Xh.act(x, inverse[c]), c)
        if image not in eps.domain:
            return None
        assignment[x] = image
    return SpanMap(Xh.carrier, eps.domain, assignment, "ε_X^-1")


def unit_map(A: SmallCat, Z: SliceObject) -> SpanMap:
    """ν_Z: Z -> coinvariants(K(Z)), z ↦ (z, 1_anchor(z))."""
    coinv = coinvariants(comparison_K(A, Z))
    return SpanMap(
        Z.as_span(),
        coinv.as_span(),
        {z: (z, A.unit(Z.anchor[z])) for z in Z.points},
        "ν_Z",
    )


def fthm_unit(A: SmallCat, Z: SliceObject) -> FiniteMapReport:
    return map_report("unit", unit_map(A, Z))


def check_unit_coinvariants_contraction(A: SmallCat) -> Report:
    """The fork I -> A•I ⇉ (A•A)•I of A over itself splits."""
    X = A.objects
    C, I = A.carrier, unit_I(X)
    Xh = self_hopf_module(A)
    phi0, phi1 = coinvariant_fork(Xh)
    e = chain(delta_I(X), bullet_map(A.eta(), identity(I)))
    t = chain(
        bullet_map(bullet_map(A.epsilon(), identity(C)), identity(I)),
        bullet_map(lambda_bullet(C), identity(I)),
    )
    s = chain(bullet_map(A.epsilon(), identity(I)), lambda_bullet(I))
    report = Report(subject=f"coinvariants of {A.name} over itself")
    compare_paths(report, "fork", lambda: chain(e, phi0), lambda: chain(e, phi1))
    compare_paths(report, "s.e = id", lambda: chain(e, s), lambda: identity(I))
    compare_paths(report, "t.φ0 = id", lambda: chain(phi0, t), lambda: identity(bullet(C, I)))
    compare_paths(report, "t.φ1 = e.s", lambda: chain(phi1, t), lambda: chain(s, e))
    report.record("coinvariants are the identities", len(coinvariants(Xh)) == len(X), len(coinvariants(Xh)))
    return report


def theta_map(A: SmallCat, Xh: HopfModuleSpan) -> SpanMap:
    """θ: ((X•A)•I)∘J -> (X•I)∘J."""
    X = A.objects
    P, C = Xh.carrier, A.carrier
    I, J = unit_I(X), unit_J(X)
    XI = bullet(P, I)
    beta_inverse = beta_map(A, Xh.module).inverse()
    return chain(
        circ_map(bullet_map(beta_inverse, identity(I)), identity(J)),
        circ_map(bullet_map(circ_map(identity(XI), A.epsilon()), tau(X)), identity(J)),
        circ_map(rho_bullet(circ(XI, J)), identity(J)),
        alpha_circ(XI, J, J),
        circ_map(identity(XI), varpi_J(X)),
    )


def theta_contraction(A: SmallCat, Xh: HopfModuleSpan) -> Report:
    """Contraction identities of the coinvariant fork after applying (-)∘J."""
    verdict = is_groupoid_direct(A)
    if not verdict.holds:
        raise PreconditionError(f"{A.name} is not a groupoid", witness=verdict.witness)
    J = unit_J(A.objects)
    theta = theta_map(A, Xh)
    phi0, phi1 = coinvariant_fork(Xh)
    phi0J = circ_map(phi0, identity(J))
    phi1J = circ_map(phi1, identity(J))
    report = Report(subject=f"theta contraction for {Xh.name} over {A.name}")
    compare_paths(report, "θ.(φ1∘J) = id", lambda: chain(phi1J, theta), lambda: identity(phi1J.domain))
    compare_paths(
        report, "(φ1∘J).θ.(φ0∘J) = (φ0∘J).θ.(φ0∘J)",
        lambda: chain(phi0J, theta, phi1J),
        lambda: chain(phi0J, theta, phi0J),
    )

    # The idempotent θ.(φ0∘J) splits through the coinvariants.
    Z = coinvariants(Xh)
    upsilon = circ_map(coinvariant_inclusion(Xh, Z), identity(J))
    idempotent = chain(phi0J, theta)
    preimage = {y: x for x, y in upsilon.assignment.items()}
    outside = next((w for w in idempotent.domain.arrows if idempotent(w) not in preimage), None)
    if outside is not None:
        report.record("θ.(φ0∘J) factors through the coinvariants", False, jsonable(outside))
        return report
    pi = SpanMap(idempotent.domain, upsilon.domain, {w: preimage[idempotent(w)] for w in idempotent.domain.arrows}, "π")
    compare_paths(report, "π.υ = id", lambda: chain(upsilon, pi), lambda: identity(upsilon.domain))
    compare_paths(report, "υ.π = θ.(φ0∘J)", lambda: chain(pi, upsilon), lambda: idempotent)
    return report


def decision_modules(A: SmallCat) -> List[SpanModule]:
    """The modules the groupoid decision procedure runs β on."""
    return [A.regular_module()] + [counterexample_module(A, u, v)[0] for u, v in asymmetric_pairs(A)]


def verify_fthm(A: SmallCat, corpus: Sequence[HopfModuleSpan], slices: Sequence[SliceObject]) -> Report:
    """Evaluate the three legs of the Fundamental Theorem on a corpus and
    cross-check them with direct groupoid detection."""
    groupoid = is_groupoid_direct(A).holds
    report = Report(subject=f"fundamental theorem for {A.name}")
    modules = decision_modules(A) + [Xh.module for Xh in corpus]

    galois = is_galois(trivially_graded(A), modules)
    report.record("(i) A is a Galois extension of its coinvariants", galois.holds, galois.witness)

    beta_witness = None
    for Q in modules:
        beta = beta_on_module(A, Q)
        if not beta.bijective:
            beta_witness = {"module": Q.name, "collision": beta.collision, "missed": beta.missed}
            break
    report.record("(ii) beta is bijective", beta_witness is None, beta_witness)

    comparison_witness = None
    hopf_modules = list(corpus) + [right_ideal_module(A, g) for g in A.arrows]
    for Xh in hopf_modules:
        counit = fthm_counit(A, Xh)
        if not counit.bijective or counit.inverse_checked is False:
            comparison_witness = {
                "counit": Xh.name,
                "collision": counit.collision,
                "missed": counit.missed,
            }
            break
    if comparison_witness is None:
        for Z in slices:
            unit = fthm_unit(A, Z)
            if not unit.bijective:
                comparison_witness = {"unit": jsonable(Z.points), "collision": unit.collision, "missed": unit.missed}
                break
    report.record("(iii) comparison unit and counit are bijective", comparison_witness is None, comparison_witness)

    legs = [entry.status == "pass" for entry in report.entries]
    agree = all(leg == groupoid for leg in legs)
    report.record("legs agree with direct groupoid detection", agree, {"groupoid": groupoid, "legs": legs})
    logger.info("Checked fundamental theorem", extra={
        "category": A.name,
        "groupoid": groupoid,
        "legs": legs,
        "corpus": len(corpus),
        "slices": len(slices),
    })
    return report
