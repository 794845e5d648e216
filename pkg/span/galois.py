"""Comodule monoids over a small category, their coinvariant submonoid,
relative products and the Galois condition."""
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from core.exceptions import ModuleAxiomError, SpanError, WellDefinednessError
from core.labels import jsonable
from core.logging_config import logger
from schemas.reports import FiniteMapReport, Report, Verdict
from span.axioms import compare_paths
from span.beta import map_report
from span.category import ComoduleMonoidSpan, SmallCat, SpanModule
from span.disjoint_set import DisjointSet
from span.spans import (
    Label,
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
    rho_bullet,
    tau,
    unit_I,
)


def check_comodule_monoid(B: ComoduleMonoidSpan) -> Report:
    """The grade is a map of spans, multiplicative and unital."""
    report = Report(subject=f"comodule monoid {B.cat.name} over {B.base.name}")
    c = B.grade_map()
    report.record("grade is a map of spans", c.span_violation() is None, jsonable(c.span_violation()))
    if c.span_violation() is not None:
        return report
    A, C = B.base, B.cat
    bad = next(
        ((f, g) for (f, g), fg in C.table.items() if B.grade[fg] != A.dot(B.grade[f], B.grade[g])),
        None,
    )
    report.record("grade is multiplicative", bad is None, jsonable(bad))
    bad = next((x for x in C.objects if B.grade[C.unit(x)] != A.unit(x)), None)
    report.record("grade is unital", bad is None, bad)

    # Coaction b ↦ (b, c(b)) is coassociative and counital.
    rho = SpanMap(C.carrier, bullet(C.carrier, A.carrier), {b: (b, B.grade[b]) for b in C.arrows}, "ρ")
    compare_paths(
        report, "coaction: coassociativity",
        lambda: chain(rho, bullet_map(rho, identity(A.carrier)), alpha_bullet(C.carrier, A.carrier, A.carrier)),
        lambda: chain(rho, bullet_map(identity(C.carrier), A.delta())),
    )
    compare_paths(
        report, "coaction: counit",
        lambda: chain(rho, bullet_map(identity(C.carrier), A.epsilon()), rho_bullet(C.carrier)),
        lambda: identity(C.carrier),
    )
    return report


@dataclass(frozen=True, eq=False)
class RelativeHopfModule:
    """A module X over B with a grade X -> A compatible through the grade of B."""
    comodule_monoid: ComoduleMonoidSpan
    module: SpanModule
    grade: Dict[Label, Label]


def check_relative_hopf(B: ComoduleMonoidSpan, Xr: RelativeHopfModule) -> Report:
    report = Report(subject=f"relative Hopf module {Xr.module.name}")
    A = B.base
    c = SpanMap(Xr.module.carrier, A.carrier, dict(Xr.grade), "c_X")
    report.record("grade is a map of spans", c.span_violation() is None, jsonable(c.span_violation()))
    if c.span_violation() is not None:
        return report
    bad = next(
        ((x, b) for (x, b), xb in Xr.module.action.items() if Xr.grade[xb] != A.dot(Xr.grade[x], B.grade[b])),
        None,
    )
    report.record("c(x.b) = c(x).c(b)", bad is None, jsonable(bad))
    return report


def coinvariant_submonoid(B: ComoduleMonoidSpan) -> Tuple[SmallCat, SpanMap]:
    """Loops b with c(b) an identity, and the inclusion ω into B."""
    C = B.cat
    A = B.base
    elements = [b for b in C.arrows if C.src(b) == C.tgt(b) and B.grade[b] == A.unit(C.src(b))]
    carrier = C.carrier.restrict(elements)
    table = {
        (f, g): C.dot(f, g)
        for f in carrier.arrows
        for g in carrier.arrows
        if carrier.src[f] == carrier.tgt[g]
    }
    Bc = SmallCat(carrier, dict(C.identities), table, name=f"{C.name}^c")
    omega = SpanMap(carrier, C.carrier, {b: b for b in carrier.arrows}, "ω")
    bad = next(((f, g) for (f, g), fg in Bc.table.items() if omega(fg) != C.dot(omega(f), omega(g))), None)
    if bad is not None:
        raise WellDefinednessError("inclusion of coinvariants is not multiplicative", witness=jsonable(bad))
    return Bc, omega


def restricted_module(Q: SpanModule, Bc: SmallCat) -> SpanModule:
    """Q•I as a module over the coinvariant submonoid: ((q, o), b') ↦ (q.b', o)."""
    carrier = bullet(Q.carrier, unit_I(Q.carrier.objects))
    action = {
        ((q, o), b): (Q.act(q, b), o)
        for q, o in carrier.arrows
        for b in Bc.arrows
        if Bc.tgt(b) == o
    }
    return SpanModule(Bc, carrier, action, name=f"{Q.name}•I")


def relative_tensor(P: SpanModule, B: SmallCat, Bc: SmallCat) -> Tuple[Span, SpanMap]:
    """P∘_{Bc}B: P∘B modulo (p.b', b) ~ (p, b'.b) for b' in Bc.

    Classes are labelled by their earliest member."""
    raw = circ(P.carrier, B.carrier)
    classes = DisjointSet(raw.arrows)
    for p in P.carrier.arrows:
        for b1 in Bc.arrows:
            if Bc.tgt(b1) != P.carrier.src[p]:
                continue
            for b in B.arrows:
                if B.tgt(b) == Bc.src(b1):
                    classes.union((P.act(p, b1), b), (p, B.dot(b1, b)))
    representatives = {}
    for members in classes.classes():
        for member in members:
            representatives[member] = members[0]
    quotient = raw.restrict(set(representatives.values()))
    projection = SpanMap(raw, quotient, representatives, "quotient")
    if projection.span_violation() is not None:
        raise SpanError("relation identifies arrows with different endpoints", witness=jsonable(projection.span_violation()))
    return quotient, projection


def beta_zero(Bm: ComoduleMonoidSpan, Q: SpanModule) -> SpanMap:
    """β⁰_Q: (Q•I)∘B -> Q•A, ((q, o), b) ↦ (q.b, c(b))."""
    B = Bm.cat
    A = Bm.base
    I = unit_I(B.objects)
    rho = SpanMap(B.carrier, bullet(B.carrier, A.carrier), {b: (b, Bm.grade[b]) for b in B.arrows}, "ρ")
    return chain(
        circ_map(identity(bullet(Q.carrier, I)), rho),
        interchange(Q.carrier, I, B.carrier, A.carrier),
        bullet_map(Q.gamma(), lambda_circ(A.carrier)),
    )


def beta_relative(Bm: ComoduleMonoidSpan, Q: SpanModule) -> FiniteMapReport:
    """β_Q: (Q•I)∘_{Bc}B -> Q•A induced by β⁰_Q."""
    if Q.cat.arrows != Bm.cat.arrows:
        raise ModuleAxiomError(f"{Q.name} is not a module over {Bm.cat.name}")
    violation = Q.axiom_violation()
    if violation is not None:
        raise ModuleAxiomError(f"{Q.name} violates the module {violation[0]} law", witness=jsonable(violation[1]))
    Bc, _ = coinvariant_submonoid(Bm)
    P = restricted_module(Q, Bc)
    quotient, projection = relative_tensor(P, Bm.cat, Bc)
    b0 = beta_zero(Bm, Q)
    induced = {}
    for x in projection.domain.arrows:
        cls = projection(x)
        if cls in induced and induced[cls] != b0(x):
            raise WellDefinednessError("β⁰ is not constant on a class", witness=jsonable([cls, x]))
        induced[cls] = b0(x)
    beta = SpanMap(quotient, b0.codomain, induced, "β")
    report = map_report(f"beta_{Q.name}", beta)
    logger.info("Computed relative beta", extra={
        "comodule_monoid": Bm.cat.name,
        "module": Q.name,
        "classes": len(quotient),
        "bijective": report.bijective,
    })
    return report


def lambda0(Bm: ComoduleMonoidSpan, M: Span) -> SpanMap:
    """λ⁰_M: (M•I)∘B -> (M∘B)•A, ((m, x), b) ↦ ((m, b), c(b))."""
    B, A = Bm.cat, Bm.base
    I = unit_I(B.objects)
    rho = SpanMap(B.carrier, bullet(B.carrier, A.carrier), {b: (b, Bm.grade[b]) for b in B.arrows}, "ρ")
    return chain(
        circ_map(identity(bullet(M, I)), rho),
        interchange(M, I, B.carrier, A.carrier),
        bullet_map(identity(circ(M, B.carrier)), lambda_circ(A.carrier)),
    )


def check_lambda0(Bm: ComoduleMonoidSpan, M: Span) -> Report:
    """λ⁰ is comultiplicative and counital."""
    B, A = Bm.cat, Bm.base
    X = B.objects
    I = unit_I(X)
    idM, idB = identity(M), identity(B.carrier)
    MB = circ(M, B.carrier)
    report = Report(subject="lifting comonad morphism")
    compare_paths(
        report, "λ0 counit",
        lambda: chain(circ_map(bullet_map(idM, tau(X)), idB), circ_map(rho_bullet(M), idB)),
        lambda: chain(lambda0(Bm, M), bullet_map(identity(MB), A.epsilon()), rho_bullet(MB)),
    )
    compare_paths(
        report, "λ0 comultiplication",
        lambda: chain(
            circ_map(bullet_map(idM, delta_I(X)), idB),
            circ_map(alpha_bullet(M, I, I).inverse(), idB),
            lambda0(Bm, bullet(M, I)),
            bullet_map(lambda0(Bm, M), identity(A.carrier)),
        ),
        lambda: chain(
            lambda0(Bm, M),
            bullet_map(identity(MB), A.delta()),
            alpha_bullet(MB, A.carrier, A.carrier).inverse(),
        ),
    )
    return report


def is_galois(Bm: ComoduleMonoidSpan, corpus: Sequence[SpanModule]) -> Verdict:
    """Comodule-monoid axioms plus bijectivity of β on B itself and every corpus module."""
    axioms = check_comodule_monoid(Bm)
    if not axioms.passed:
        failed = axioms.failures()[0]
        return Verdict(holds=False, detail=f"not a comodule monoid: {failed.diagram}", witness=failed.witness)
    for Q in [Bm.cat.regular_module()] + list(corpus):
        report = beta_relative(Bm, Q)
        if not report.bijective:
            return Verdict(
                holds=False,
                detail=f"beta is not bijective on {Q.name}",
                witness={"module": Q.name, "collision": report.collision, "missed": report.missed},
            )
    return Verdict(holds=True, detail=f"beta bijective on {len(corpus) + 1} modules")
