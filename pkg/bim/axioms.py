from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from bim.algebra import Bimodule, BimoduleMap, chain
from bim.duoidal import BimDuoidal
from core.exceptions import DuoidalError
from core.logging_config import logger
from schemas.reports import Report
from span.axioms import tuple_plan


def first_difference(f: BimoduleMap, g: BimoduleMap) -> Optional[int]:
    """Index of the first basis vector on which the two matrices differ."""
    diff = (f.matrix - g.matrix) % f.domain.field.p
    columns = np.nonzero(np.any(diff != 0, axis=0))[0]
    return int(columns[0]) if columns.size else None


def compare_maps(report: Report, diagram: str, left: Callable[[], BimoduleMap], right: Callable[[], BimoduleMap]) -> bool:
    try:
        f, g = left(), right()
        if f.matrix.shape != g.matrix.shape:
            return report.record(diagram, False, {"shapes": [list(f.matrix.shape), list(g.matrix.shape)]})
    except DuoidalError as e:
        logger.warning("Diagram could not be evaluated", extra={"diagram": diagram, "error": str(e)})
        return report.record(diagram, False, {"error": str(e), "witness": e.witness})
    column = first_difference(f, g)
    if column is not None:
        logger.warning("Diagram does not commute", extra={"diagram": diagram, "basis_vector": column})
        return report.record(diagram, False, {
            "basis_vector": column,
            "left": f.matrix[:, column].tolist(),
            "right": g.matrix[:, column].tolist(),
        })
    return report.record(diagram, True)


def check_unit_compatibility(D: BimDuoidal, report: Report) -> None:
    """(J, ϖ, τ) is a ∘-monoid and (I, δ, τ) is a •-comonoid."""
    I, J = D.I, D.J
    idI, idJ = D.identity(I), D.identity(J)

    compare_maps(
        report, "J monoid: associativity",
        lambda: chain(D.circ_map(D.varpi(), idJ), D.varpi()),
        lambda: chain(D.alpha_circ(J, J, J), D.circ_map(idJ, D.varpi()), D.varpi()),
    )
    compare_maps(
        report, "J monoid: left unit",
        lambda: chain(D.circ_map(D.tau(), idJ), D.varpi()),
        lambda: D.lambda_circ(J),
    )
    compare_maps(
        report, "J monoid: right unit",
        lambda: chain(D.circ_map(idJ, D.tau()), D.varpi()),
        lambda: D.rho_circ(J),
    )
    compare_maps(
        report, "I comonoid: coassociativity",
        lambda: chain(D.delta(), D.bullet_map(D.delta(), idI), D.alpha_bullet(I, I, I)),
        lambda: chain(D.delta(), D.bullet_map(idI, D.delta())),
    )
    compare_maps(
        report, "I comonoid: left counit",
        lambda: chain(D.delta(), D.bullet_map(D.tau(), idI), D.lambda_bullet(I)),
        lambda: idI,
    )
    compare_maps(
        report, "I comonoid: right counit",
        lambda: chain(D.delta(), D.bullet_map(idI, D.tau()), D.rho_bullet(I)),
        lambda: idI,
    )


def check_associativity(D: BimDuoidal, modules: Sequence[Bimodule], report: Report) -> None:
    A, B, C, E, F, G = modules
    z, ident = D.interchange, D.identity

    compare_maps(
        report, "associativity: ∘ hexagon",
        lambda: chain(
            D.circ_map(z(A, B, C, E), ident(D.bullet(F, G))),
            z(D.circ(A, C), D.circ(B, E), F, G),
            D.bullet_map(D.alpha_circ(A, C, F), D.alpha_circ(B, E, G)),
        ),
        lambda: chain(
            D.alpha_circ(D.bullet(A, B), D.bullet(C, E), D.bullet(F, G)),
            D.circ_map(ident(D.bullet(A, B)), z(C, E, F, G)),
            z(A, B, D.circ(C, F), D.circ(E, G)),
        ),
    )
    compare_maps(
        report, "associativity: • hexagon",
        lambda: chain(
            z(D.bullet(A, B), C, D.bullet(E, F), G),
            D.bullet_map(z(A, B, E, F), ident(D.circ(C, G))),
            D.alpha_bullet(D.circ(A, E), D.circ(B, F), D.circ(C, G)),
        ),
        lambda: chain(
            D.circ_map(D.alpha_bullet(A, B, C), D.alpha_bullet(E, F, G)),
            z(A, D.bullet(B, C), E, D.bullet(F, G)),
            D.bullet_map(ident(D.circ(A, E)), z(B, C, F, G)),
        ),
    )


def check_unitality(D: BimDuoidal, A: Bimodule, B: Bimodule, report: Report) -> None:
    I, J = D.I, D.J
    z, ident = D.interchange, D.identity

    compare_maps(
        report, "unitality: I∘(A•B)",
        lambda: D.lambda_circ(D.bullet(A, B)),
        lambda: chain(
            D.circ_map(D.delta(), ident(D.bullet(A, B))),
            z(I, I, A, B),
            D.bullet_map(D.lambda_circ(A), D.lambda_circ(B)),
        ),
    )
    compare_maps(
        report, "unitality: (A•B)∘I",
        lambda: D.rho_circ(D.bullet(A, B)),
        lambda: chain(
            D.circ_map(ident(D.bullet(A, B)), D.delta()),
            z(A, B, I, I),
            D.bullet_map(D.rho_circ(A), D.rho_circ(B)),
        ),
    )
    compare_maps(
        report, "unitality: (J•A)∘(J•B)",
        lambda: chain(
            z(J, A, J, B),
            D.bullet_map(D.varpi(), ident(D.circ(A, B))),
            D.lambda_bullet(D.circ(A, B)),
        ),
        lambda: D.circ_map(D.lambda_bullet(A), D.lambda_bullet(B)),
    )
    compare_maps(
        report, "unitality: (A•J)∘(B•J)",
        lambda: chain(
            z(A, J, B, J),
            D.bullet_map(ident(D.circ(A, B)), D.varpi()),
            D.rho_bullet(D.circ(A, B)),
        ),
        lambda: D.circ_map(D.rho_bullet(A), D.rho_bullet(B)),
    )
    compare_maps(
        report, "unitality: (A•I)∘(B•J) through τ",
        lambda: chain(
            z(A, I, B, J),
            D.bullet_map(ident(D.circ(A, B)), D.lambda_circ(J)),
            D.rho_bullet(D.circ(A, B)),
        ),
        lambda: chain(
            D.circ_map(ident(D.bullet(A, I)), D.rho_bullet(B)),
            D.circ_map(D.bullet_map(ident(A), D.tau()), ident(B)),
            D.circ_map(D.rho_bullet(A), ident(B)),
        ),
    )


def check_duoidal_axioms_bim(
    D: BimDuoidal,
    modules: Sequence[Bimodule],
    tuples: Optional[Iterable[Sequence[int]]] = None,
) -> Report:
    """Evaluate the duoidal axioms of bim(R) as matrix identities on `modules`.

    Every ordered six-tuple and pair of `modules` is used unless `tuples`
    names the index six-tuples to run, as in `span.axioms.check_duoidal_axioms`.

    Errors raised while forming a product or descending a map (for instance
    a relation span that is not stable under the actions) are recorded as
    failures of the diagram being evaluated.
    """
    report = Report(subject=f"bim({D.R.name}) duoidal axioms")
    check_unit_compatibility(D, report)
    compare_maps(report, "ϖ is invertible", lambda: chain(D.varpi(), _inverse(D.varpi())), lambda: D.identity(D.J))
    hexagons, squares = tuple_plan(len(modules), tuples)
    for index in hexagons:
        run = Report(subject=report.subject)
        check_associativity(D, [modules[i] for i in index], run)
        report.absorb(run, list(index))
    for i, j in squares:
        run = Report(subject=report.subject)
        check_unitality(D, modules[i], modules[j], run)
        report.absorb(run, [i, j])
    logger.info("Checked bim duoidal axioms", extra={
        "algebra": D.R.name,
        "modules": len(modules),
        "tuples": len(hexagons) + len(squares),
        "passed": report.passed,
    })
    return report


def _inverse(f: BimoduleMap) -> BimoduleMap:
    inv = f.inverse()
    if inv is None:
        raise DuoidalError(f"{f.name} is singular", witness=f.domain.field.kernel(f.matrix)[:, 0].tolist())
    return inv


def check_J_module(D: BimDuoidal, M: Bimodule) -> bool:
    """Whether M is a J-module, that is [M, R] = 0."""
    return M.is_symmetric()


def check_idempotent_criteria(D: BimDuoidal, M: Bimodule) -> Report:
    """M∘τ is invertible exactly when [M,R] = 0, and then (M•τ)∘J is invertible."""
    f = D.field
    report = Report(subject=f"idempotent criteria for {M.name}")
    symmetric = check_J_module(D, M)
    circ_tau = D.circ_map(D.identity(M), D.tau())
    circ_tau_iso = f.is_invertible(circ_tau.matrix)
    report.record(
        "M∘τ invertible iff [M,R] = 0",
        circ_tau_iso == symmetric,
        {"symmetric": symmetric, "M∘τ invertible": circ_tau_iso, "rank": f.rank(circ_tau.matrix)},
    )
    if circ_tau_iso:
        outer = D.circ_map(D.bullet_map(D.identity(M), D.tau()), D.identity(D.J))
        ok = f.is_invertible(outer.matrix)
        report.record("(M•τ)∘J invertible", ok, None if ok else {"rank": f.rank(outer.matrix), "shape": list(outer.matrix.shape)})
    return report
