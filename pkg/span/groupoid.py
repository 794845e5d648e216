from typing import Dict, List, Optional, Tuple

from core.exceptions import ConstructionInapplicable
from core.labels import format_label, jsonable
from core.logging_config import logger
from schemas.reports import GroupoidVerdict
from span.beta import beta_on_module
from span.category import SmallCat, SpanModule
from span.spans import Label, Span


def inverse_table(A: SmallCat) -> Tuple[Optional[Dict[Label, Label]], Optional[Label]]:
    """Two-sided inverses of every arrow, or the first arrow without one."""
    inverses: Dict[Label, Label] = {}
    for a in A.arrows:
        x, y = A.src(a), A.tgt(a)
        found = next(
            (b for b in A.hom(y, x) if A.dot(a, b) == A.unit(y) and A.dot(b, a) == A.unit(x)),
            None,
        )
        if found is None:
            return None, a
        inverses[a] = found
    return inverses, None


def is_groupoid_direct(A: SmallCat) -> GroupoidVerdict:
    """Search a two-sided inverse for every arrow."""
    inverses, bad = inverse_table(A)
    if inverses is None:
        return GroupoidVerdict(
            holds=False,
            detail=f"{format_label(bad)} has no inverse",
            witness=jsonable(bad),
        )
    return GroupoidVerdict(
        holds=True,
        detail="every arrow is invertible",
        inverses={format_label(a): format_label(b) for a, b in inverses.items()},
    )


def asymmetric_pairs(A: SmallCat) -> List[Tuple[str, str]]:
    """Ordered object pairs (u, v) with no arrow u -> v but some arrow v -> u."""
    return [
        (u, v)
        for u in A.objects
        for v in A.objects
        if not A.hom(u, v) and A.hom(v, u)
    ]


def counterexample_module(A: SmallCat, u: str, v: str) -> Tuple[SpanModule, Tuple[Tuple[Label, Label], Tuple[Label, Label]]]:
    """A module on which β fails to be injective, for u, v with hom(u, v) empty and hom(v, u) not.

    Over each object w sit two arrows q_w, p_w: w -> u when hom(u, w) is
    non-empty and a single arrow r_w: w -> u otherwise. Acting by a moves
    q_{t(a)} to q_{s(a)} while that exists and collapses it to r_{s(a)}
    otherwise; p behaves like q and r_{t(a)}.a = r_{s(a)}.
    """
    if A.hom(u, v) or not A.hom(v, u):
        raise ConstructionInapplicable(
            f"construction needs no arrow {u} -> {v} and some arrow {v} -> {u}",
            witness=[u, v],
        )
    reachable = {w: bool(A.hom(u, w)) for w in A.objects}
    triples = []
    for w in A.objects:
        if reachable[w]:
            triples += [(f"q_{w}", w, u), (f"p_{w}", w, u)]
        else:
            triples.append((f"r_{w}", w, u))
    carrier = Span.from_triples(A.objects, triples)

    def moved(kind: str, w: str) -> str:
        return f"{kind}_{w}" if reachable[w] else f"r_{w}"

    action = {}
    for a in A.arrows:
        s, t = A.src(a), A.tgt(a)
        if reachable[t]:
            action[(f"q_{t}", a)] = moved("q", s)
            action[(f"p_{t}", a)] = moved("p", s)
        else:
            action[(f"r_{t}", a)] = f"r_{s}"
    module = SpanModule(A, carrier, action, name=f"Q[{u},{v}]")

    b = A.hom(v, u)[0]
    collision = ((f"q_{u}", b), (f"p_{u}", b))
    logger.info("Built counterexample module", extra={
        "category": A.name,
        "u": u,
        "v": v,
        "size": len(carrier),
    })
    return module, collision


def _inverses_from_beta(A: SmallCat, beta_inverse: Dict[Label, Label]) -> Optional[Dict[Label, Label]]:
    """Read inverses off β_A⁻¹: a loop c at x has inverse the first leg of β⁻¹(1_x, c);
    a general a has inverse (b.a)⁻¹.b for any b going back."""
    loop_inverse = {}
    for c in A.arrows:
        x = A.src(c)
        if A.tgt(c) == x:
            q, _ = beta_inverse[(A.unit(x), c)]
            loop_inverse[c] = q
    inverses = {}
    for a in A.arrows:
        back = A.hom(A.tgt(a), A.src(a))
        if not back:
            return None
        b = back[0]
        inverses[a] = A.dot(loop_inverse[A.dot(b, a)], b)
    return inverses


def is_groupoid_via_beta(A: SmallCat) -> GroupoidVerdict:
    """Decide groupoidness through β alone: β_A, then β on the counterexample
    module of every asymmetric object pair."""
    regular = beta_on_module(A, A.regular_module())
    if not regular.bijective:
        return GroupoidVerdict(
            holds=False,
            detail="beta_A is not bijective",
            witness={"collision": regular.collision, "missed": regular.missed},
        )
    for u, v in asymmetric_pairs(A):
        module, expected = counterexample_module(A, u, v)
        report = beta_on_module(A, module)
        if not report.bijective:
            logger.info("Counterexample module detects non-groupoid", extra={
                "category": A.name,
                "u": u,
                "v": v,
            })
            return GroupoidVerdict(
                holds=False,
                detail=f"beta is not injective on the counterexample module for ({u},{v})",
                witness={
                    "module": module.describe(),
                    "collision": report.collision,
                    "expected_collision": jsonable(expected),
                },
            )
    beta_inverse = regular.mapping.inverse().assignment
    inverses = _inverses_from_beta(A, beta_inverse)
    if inverses is None:
        return GroupoidVerdict(holds=False, detail="some hom-set has no way back")
    for a, b in inverses.items():
        if A.dot(a, b) != A.unit(A.tgt(a)) or A.dot(b, a) != A.unit(A.src(a)):
            return GroupoidVerdict(holds=False, detail="reconstructed inverse fails", witness=jsonable([a, b]))
    return GroupoidVerdict(
        holds=True,
        detail="beta is bijective on every tested module",
        inverses={format_label(a): format_label(b) for a, b in inverses.items()},
    )


def verify_collision(A: SmallCat, module: SpanModule, collision) -> bool:
    """Independent check of a β collision certificate: two distinct pairs with equal image."""
    (q1, a1), (q2, a2) = collision
    C = module.carrier
    for q, a in ((q1, a1), (q2, a2)):
        if not (C.src[q] == C.tgt[q] == A.tgt(a)):
            return False
    return (q1, a1) != (q2, a2) and a1 == a2 and module.act(q1, a1) == module.act(q2, a2)
