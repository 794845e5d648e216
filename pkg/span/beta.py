from typing import Optional

from core.exceptions import ModuleAxiomError, SpanError
from core.labels import jsonable
from core.logging_config import logger
from schemas.reports import FiniteMapReport, Report
from span.axioms import compare_paths
from span.category import SmallCat, SpanModule
from span.spans import (
    Span,
    SpanMap,
    alpha_bullet,
    bullet,
    bullet_map,
    chain,
    circ,
    circ_map,
    delta_I,
    identity,
    interchange,
    lambda_circ,
    relabel,
    rho_bullet,
    rho_circ,
    tau,
    unit_I,
)


def map_report(name: str, f: SpanMap) -> FiniteMapReport:
    collision = f.collision()
    missed = f.missed()
    return FiniteMapReport(
        name=name,
        domain_size=len(f.domain),
        codomain_size=len(f.codomain),
        injective=collision is None,
        surjective=missed is None,
        assignment=jsonable(f.assignment),
        collision=jsonable(list(collision)) if collision else None,
        missed=jsonable(missed),
        mapping=f,
    )


def _require_module(A: SmallCat, Q: SpanModule) -> None:
    if Q.cat.arrows != A.arrows:
        raise ModuleAxiomError(f"{Q.name} is a module over a different category")
    violation = Q.axiom_violation()
    if violation is not None:
        raise ModuleAxiomError(f"{Q.name} violates the module {violation[0]} law", witness=jsonable(violation[1]))


def beta_map(A: SmallCat, Q: SpanModule) -> SpanMap:
    """β_Q: (Q•I)∘A -> Q•A as the composite through Δ, ζ and the action."""
    _require_module(A, Q)
    C = A.carrier
    I = unit_I(A.objects)
    try:
        return chain(
            circ_map(identity(bullet(Q.carrier, I)), A.delta()),
            interchange(Q.carrier, I, C, C),
            bullet_map(identity(circ(Q.carrier, C)), lambda_circ(C)),
            bullet_map(Q.gamma(), identity(C)),
        )
    except SpanError as e:
        raise ModuleAxiomError(f"{Q.name} action leaves the carrier", witness=e.witness)


def beta_on_module(A: SmallCat, Q: SpanModule) -> FiniteMapReport:
    """β_Q on pairs (q, a) with q a loop at t(a): (q, a) ↦ (q.a, a)."""
    beta = beta_map(A, Q)
    _, loops = relabel(beta.domain, {((q, x), a): (q, a) for (q, x), a in beta.domain.arrows})
    report = map_report(f"beta_{Q.name}", loops.inverse().then(beta))
    logger.info("Computed beta", extra={
        "category": A.name,
        "module": Q.name,
        "bijective": report.bijective,
    })
    return report


def beta_general_map(A: SmallCat, Q: SpanModule, M: Span) -> SpanMap:
    """β_{Q,M}: (Q•M)∘A -> Q•(M∘A), ((q,m),a) ↦ (q.a, (m,a))."""
    _require_module(A, Q)
    C = A.carrier
    return chain(
        circ_map(identity(bullet(Q.carrier, M)), A.delta()),
        interchange(Q.carrier, M, C, C),
        bullet_map(Q.gamma(), identity(circ(M, C))),
    )


def beta_general(A: SmallCat, Q: SpanModule, M: Span, name: str = "M") -> FiniteMapReport:
    return map_report(f"beta_{Q.name},{name}", beta_general_map(A, Q, M))


def diagonal_module(Q: SpanModule) -> SpanModule:
    """Q•A with ((q, a'), b) ↦ (q.b, a'.b)."""
    A = Q.cat
    carrier = bullet(Q.carrier, A.carrier)
    action = {}
    for q, a in carrier.arrows:
        for b in A.arrows:
            if A.tgt(b) == Q.carrier.src[q]:
                action[((q, a), b)] = (Q.act(q, b), A.dot(a, b))
    return SpanModule(A, carrier, action, name=f"{Q.name}•A")


def free_module(A: SmallCat, M: Span, name: str = "M") -> SpanModule:
    """M∘A with ((m, a), b) ↦ (m, a.b)."""
    carrier = circ(M, A.carrier)
    action = {}
    for m, a in carrier.arrows:
        for b in A.arrows:
            if A.tgt(b) == A.src(a):
                action[((m, a), b)] = (m, A.dot(a, b))
    return SpanModule(A, carrier, action, name=f"{name}∘A")


def check_beta_identities(A: SmallCat, Q: SpanModule, M: Optional[Span] = None) -> Report:
    """Compatibility of β with the counit, the unit and the comultiplication."""
    _require_module(A, Q)
    M = M if M is not None else Q.carrier
    X = A.objects
    C, I = A.carrier, unit_I(X)
    P = Q.carrier
    idA, idI, idQ = identity(C), identity(I), identity(P)
    QI = bullet(P, I)
    beta = beta_map(A, Q)
    report = Report(subject=f"beta identities for {Q.name} over {A.name}")

    compare_paths(
        report, "beta_{Q,I} is beta_Q up to the unitor",
        lambda: chain(beta_general_map(A, Q, I), bullet_map(idQ, lambda_circ(C))),
        lambda: beta,
    )
    compare_paths(
        report, "beta and the counit",
        lambda: chain(
            circ_map(bullet_map(idQ, tau(X)), idA),
            circ_map(rho_bullet(P), idA),
            Q.gamma(),
        ),
        lambda: chain(beta, bullet_map(idQ, A.epsilon()), rho_bullet(P)),
    )
    compare_paths(
        report, "beta and the unit",
        lambda: chain(rho_circ(QI).inverse(), circ_map(identity(QI), A.eta()), beta),
        lambda: bullet_map(idQ, A.eta()),
    )
    compare_paths(
        report, "beta and the comultiplication",
        lambda: chain(
            circ_map(bullet_map(idQ, delta_I(X)), idA),
            circ_map(alpha_bullet(P, I, I).inverse(), idA),
            circ_map(bullet_map(bullet_map(idQ, A.eta()), idI), idA),
            beta_map(A, diagonal_module(Q)),
        ),
        lambda: chain(beta, bullet_map(idQ, A.delta()), alpha_bullet(P, C, C).inverse()),
    )
    compare_paths(
        report, "beta on free modules",
        lambda: chain(
            circ_map(bullet_map(rho_circ(M).inverse(), idI), idA),
            circ_map(bullet_map(circ_map(identity(M), A.eta()), idI), idA),
            beta_map(A, free_module(A, M)),
        ),
        lambda: chain(
            circ_map(identity(bullet(M, I)), A.delta()),
            interchange(M, I, C, C),
            bullet_map(identity(circ(M, C)), lambda_circ(C)),
        ),
    )
    return report
