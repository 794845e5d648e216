from itertools import product
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from core.exceptions import DuoidalError, SpanError
from core.labels import jsonable
from core.logging_config import logger
from schemas.reports import Report
from span.spans import (
    InterchangeHook,
    ObjectSet,
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
    interchange,
    lambda_bullet,
    lambda_circ,
    rho_bullet,
    rho_circ,
    spans_over,
    tau,
    unit_I,
    unit_J,
    varpi_J,
)


def compare_paths(report: Report, diagram: str, left: Callable[[], SpanMap], right: Callable[[], SpanMap]) -> bool:
    """Evaluate both legs of a diagram and record whether they agree pointwise."""
    try:
        f, g = left(), right()
    except SpanError as e:
        return report.record(diagram, False, jsonable(e.witness))
    witness = f.disagreement(g)
    if witness is not None:
        logger.warning("Diagram does not commute", extra={
            "diagram": diagram,
            "witness": repr(witness),
        })
        return report.record(diagram, False, {
            "element": jsonable(witness),
            "left": jsonable(f(witness)),
            "right": jsonable(g(witness)),
        })
    return report.record(diagram, True)


IndexTuple = Tuple[int, ...]


def tuple_plan(
    count: int,
    tuples: Optional[Iterable[Sequence[int]]] = None,
) -> Tuple[List[IndexTuple], List[IndexTuple]]:
    """Index tuples for the six-argument and two-argument diagrams.

    Without `tuples` every ordered tuple over the `count` inputs is used,
    repetitions included. Given explicit six-tuples, the two-argument
    diagrams run on their three consecutive pairs.
    """
    if tuples is None:
        return list(product(range(count), repeat=6)), list(product(range(count), repeat=2))
    hexagons = [tuple(t) for t in tuples]
    for t in hexagons:
        if len(t) != 6 or any(not 0 <= i < count for i in t):
            raise DuoidalError(f"axiom tuple {t} does not pick six of {count} inputs")
    squares = list(dict.fromkeys(pair for t in hexagons for pair in (t[0:2], t[2:4], t[4:6])))
    return hexagons, squares


def check_unit_compatibility(X: ObjectSet, report: Report) -> None:
    """(J, ϖ, τ) is a ∘-monoid and (I, δ, τ) is a •-comonoid."""
    I, J = unit_I(X), unit_J(X)
    varpi, delta, t = varpi_J(X), delta_I(X), tau(X)
    idI, idJ = identity(I), identity(J)

    compare_paths(
        report, "J monoid: associativity",
        lambda: chain(circ_map(varpi, idJ), varpi),
        lambda: chain(alpha_circ(J, J, J), circ_map(idJ, varpi), varpi),
    )
    compare_paths(
        report, "J monoid: left unit",
        lambda: chain(circ_map(t, idJ), varpi),
        lambda: lambda_circ(J),
    )
    compare_paths(
        report, "J monoid: right unit",
        lambda: chain(circ_map(idJ, t), varpi),
        lambda: rho_circ(J),
    )
    compare_paths(
        report, "I comonoid: coassociativity",
        lambda: chain(delta, bullet_map(delta, idI), alpha_bullet(I, I, I)),
        lambda: chain(delta, bullet_map(idI, delta)),
    )
    compare_paths(
        report, "I comonoid: left counit",
        lambda: chain(delta, bullet_map(t, idI), lambda_bullet(I)),
        lambda: idI,
    )
    compare_paths(
        report, "I comonoid: right counit",
        lambda: chain(delta, bullet_map(idI, t), rho_bullet(I)),
        lambda: idI,
    )


def check_associativity(spans: Sequence[Span], report: Report, hook: Optional[InterchangeHook] = None) -> None:
    A, B, C, D, E, F = spans

    def z(*args):
        return interchange(*args, hook=hook)

    compare_paths(
        report, "associativity: ∘ hexagon",
        lambda: chain(
            circ_map(z(A, B, C, D), identity(bullet(E, F))),
            z(circ(A, C), circ(B, D), E, F),
            bullet_map(alpha_circ(A, C, E), alpha_circ(B, D, F)),
        ),
        lambda: chain(
            alpha_circ(bullet(A, B), bullet(C, D), bullet(E, F)),
            circ_map(identity(bullet(A, B)), z(C, D, E, F)),
            z(A, B, circ(C, E), circ(D, F)),
        ),
    )
    compare_paths(
        report, "associativity: • hexagon",
        lambda: chain(
            z(bullet(A, B), C, bullet(D, E), F),
            bullet_map(z(A, B, D, E), identity(circ(C, F))),
            alpha_bullet(circ(A, D), circ(B, E), circ(C, F)),
        ),
        lambda: chain(
            circ_map(alpha_bullet(A, B, C), alpha_bullet(D, E, F)),
            z(A, bullet(B, C), D, bullet(E, F)),
            bullet_map(identity(circ(A, D)), z(B, C, E, F)),
        ),
    )


def check_unitality(A: Span, B: Span, report: Report, hook: Optional[InterchangeHook] = None) -> None:
    X = A.objects
    I, J = unit_I(X), unit_J(X)

    def z(*args):
        return interchange(*args, hook=hook)

    compare_paths(
        report, "unitality: I∘(A•B)",
        lambda: lambda_circ(bullet(A, B)),
        lambda: chain(
            circ_map(delta_I(X), identity(bullet(A, B))),
            z(I, I, A, B),
            bullet_map(lambda_circ(A), lambda_circ(B)),
        ),
    )
    compare_paths(
        report, "unitality: (A•B)∘I",
        lambda: rho_circ(bullet(A, B)),
        lambda: chain(
            circ_map(identity(bullet(A, B)), delta_I(X)),
            z(A, B, I, I),
            bullet_map(rho_circ(A), rho_circ(B)),
        ),
    )
    compare_paths(
        report, "unitality: (J•A)∘(J•B)",
        lambda: chain(
            z(J, A, J, B),
            bullet_map(varpi_J(X), identity(circ(A, B))),
            lambda_bullet(circ(A, B)),
        ),
        lambda: circ_map(lambda_bullet(A), lambda_bullet(B)),
    )
    compare_paths(
        report, "unitality: (A•J)∘(B•J)",
        lambda: chain(
            z(A, J, B, J),
            bullet_map(identity(circ(A, B)), varpi_J(X)),
            rho_bullet(circ(A, B)),
        ),
        lambda: circ_map(rho_bullet(A), rho_bullet(B)),
    )
    compare_paths(
        report, "unitality: (A•I)∘(B•J) through τ",
        lambda: chain(
            z(A, I, B, J),
            bullet_map(identity(circ(A, B)), lambda_circ(J)),
            rho_bullet(circ(A, B)),
        ),
        lambda: chain(
            circ_map(identity(bullet(A, I)), rho_bullet(B)),
            circ_map(bullet_map(identity(A), tau(X)), identity(B)),
            circ_map(rho_bullet(A), identity(B)),
        ),
    )


def check_duoidal_axioms(
    X: ObjectSet,
    spans: Sequence[Span],
    interchange_hook: Optional[InterchangeHook] = None,
    tuples: Optional[Iterable[Sequence[int]]] = None,
) -> Report:
    """Evaluate every duoidal axiom diagram pointwise on tuples drawn from `spans`.

    By default the hexagons run on every ordered six-tuple of `spans` and the
    unit squares on every ordered pair. `tuples` restricts the run to the
    given index six-tuples. The report holds one entry per diagram; a failing
    entry carries the indices of the first tuple that broke it.
    """
    spans_over(X, spans)
    report = Report(subject=f"span duoidal axioms over {len(X)} objects")
    check_unit_compatibility(X, report)
    hexagons, squares = tuple_plan(len(spans), tuples)
    for index in hexagons:
        run = Report(subject=report.subject)
        check_associativity([spans[i] for i in index], run, interchange_hook)
        report.absorb(run, list(index))
    for i, j in squares:
        run = Report(subject=report.subject)
        check_unitality(spans[i], spans[j], run, interchange_hook)
        report.absorb(run, [i, j])
    logger.info("Checked span duoidal axioms", extra={
        "objects": len(X),
        "spans": len(spans),
        "tuples": len(hexagons) + len(squares),
        "passed": report.passed,
    })
    return report
