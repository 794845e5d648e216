"""The idempotent (co)monads M ↦ M∘J and M ↦ M•I of span(X) and idempotent splitting."""
from typing import Tuple

from core.exceptions import SpanError
from core.labels import jsonable
from schemas.reports import Report
from span.spans import Span, SpanMap, bullet, bullet_map, circ, circ_map, identity, tau, unit_I, unit_J


def check_idempotent_criteria_span(M: Span) -> Report:
    X = M.objects
    report = Report(subject=f"idempotent criteria for a span with {len(M)} arrows")

    MJ = circ(M, unit_J(X))
    forget = {(m, j): (m, j[1]) for m, j in MJ.arrows}
    ok = len(MJ) == len(M) * len(X) and len(set(forget.values())) == len(MJ)
    report.record("M∘J ≅ M×X", ok, None if ok else {"size": len(MJ), "expected": len(M) * len(X)})

    MI = bullet(M, unit_I(X))
    firsts = [m for m, _ in MI.arrows]
    ok = firsts == M.loops()
    report.record("M•I ≅ loops(M)", ok, None if ok else {"size": len(MI), "loops": len(M.loops())})

    bullet_tau = bullet_map(identity(M), tau(X))
    is_slice = len(M.loops()) == len(M)
    ok = bullet_tau.is_bijective() == is_slice
    report.record("M•τ invertible iff s = t", ok, None if ok else {
        "bijective": bullet_tau.is_bijective(),
        "non_loop": jsonable(next((a for a in M.arrows if M.src[a] != M.tgt[a]), None)),
    })

    if is_slice:
        outer = bullet_map(circ_map(identity(M), tau(X)), identity(unit_I(X)))
        ok = outer.is_bijective()
        report.record("(M∘τ)•I invertible", ok, None if ok else jsonable(outer.collision() or outer.missed()))
    return report


def split_idempotent(e: SpanMap) -> Tuple[Span, SpanMap, SpanMap]:
    """Factor an idempotent e: M -> M as M -> Im(e) -> M.

    Returns the image, the retraction onto it and the inclusion.
    """
    M = e.domain
    if e.codomain is not M:
        raise SpanError(f"{e.name} is not an endomorphism")
    bad = next((x for x in M.arrows if e(e(x)) != e(x)), None)
    if bad is not None:
        raise SpanError(f"{e.name} is not idempotent", witness=jsonable(bad))
    image = M.restrict(set(e.assignment.values()))
    retraction = SpanMap(M, image, dict(e.assignment), "r")
    inclusion = SpanMap(image, M, {y: y for y in image.arrows}, "i")
    return image, retraction, inclusion
