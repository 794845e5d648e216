"""Small categories as bimonoids in span(X), and their modules.

The composite f.g is defined when s(f) = t(g), runs from s(g) to t(f), and is
stored in a dense table keyed by composable pairs. The comultiplication is
the diagonal a ↦ (a, a) and the counit a ↦ (t(a), s(a)); both are derived.
"""
from dataclasses import InitVar, dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from core.exceptions import CategoryError, ModuleAxiomError, SpanError
from core.labels import format_label, jsonable
from core.logging_config import logger
from schemas.reports import Report
from span.spans import (
    Label,
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
    tau,
    unit_I,
    unit_J,
    varpi_J,
)
from span.axioms import compare_paths


@dataclass(frozen=True, eq=False)
class SmallCat:
    carrier: Span
    identities: Dict[str, Label]
    table: Dict[Tuple[Label, Label], Label]
    name: str = "A"
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        A = self.carrier
        if set(self.identities) != set(A.objects.elements):
            raise CategoryError("identities must be given for every object")
        for x, e in self.identities.items():
            if e not in A:
                raise CategoryError(f"identity of {x} is not an arrow", witness=x)
        expected = {(f, g) for f in A for g in A if A.src[f] == A.tgt[g]}
        if set(self.table) != expected:
            extra = set(self.table) ^ expected
            raise CategoryError(
                "composition table must be defined exactly on composable pairs",
                witness=jsonable(sorted(extra, key=repr)[0]),
            )
        for pair, fg in self.table.items():
            if fg not in A:
                raise CategoryError(f"composite of {format_label(pair)} is not an arrow", witness=pair)
        if validate:
            failed = check_category_laws(self).failures()
            if failed:
                raise CategoryError(
                    f"category law violated: {failed[0].diagram}",
                    witness=failed[0].witness,
                )

    @property
    def objects(self) -> ObjectSet:
        return self.carrier.objects

    @property
    def arrows(self) -> Tuple[Label, ...]:
        return self.carrier.arrows

    def src(self, a: Label) -> str:
        return self.carrier.src[a]

    def tgt(self, a: Label) -> str:
        return self.carrier.tgt[a]

    def unit(self, x: str) -> Label:
        return self.identities[x]

    def dot(self, f: Label, g: Label) -> Label:
        return self.table[(f, g)]

    def hom(self, source: str, target: str) -> List[Label]:
        return self.carrier.hom(source, target)

    @cached_property
    def identity_arrows(self) -> set:
        return set(self.identities.values())

    # Structure maps

    def mu(self) -> SpanMap:
        AA = circ(self.carrier, self.carrier)
        return SpanMap(AA, self.carrier, {p: self.table[p] for p in AA.arrows}, "μ")

    def eta(self) -> SpanMap:
        return SpanMap(unit_I(self.objects), self.carrier, dict(self.identities), "η")

    def delta(self) -> SpanMap:
        return SpanMap(self.carrier, bullet(self.carrier, self.carrier), {a: (a, a) for a in self.arrows}, "Δ")

    def epsilon(self) -> SpanMap:
        return SpanMap(
            self.carrier,
            unit_J(self.objects),
            {a: (self.tgt(a), self.src(a)) for a in self.arrows},
            "ε",
        )

    def regular_module(self) -> "SpanModule":
        return SpanModule(self, self.carrier, dict(self.table), name=self.name)

    def describe(self) -> Dict:
        return {
            "objects": list(self.objects),
            "arrows": self.carrier.describe(),
            "identities": dict(self.identities),
            "compose": [
                {"f": format_label(f), "g": format_label(g), "fg": format_label(fg)}
                for (f, g), fg in self.table.items()
            ],
        }


def check_category_laws(A: SmallCat) -> Report:
    report = Report(subject=f"category laws of {A.name}")
    C = A.carrier

    bad = next(
        ((f, g) for (f, g), fg in A.table.items() if C.src[fg] != C.src[g] or C.tgt[fg] != C.tgt[f]),
        None,
    )
    report.record("composition preserves endpoints", bad is None, jsonable(bad))

    bad = next((x for x, e in A.identities.items() if C.src[e] != x or C.tgt[e] != x), None)
    report.record("identities are loops", bad is None, bad)

    bad = next(
        (a for a in C if A.table.get((A.identities[C.tgt[a]], a)) != a or A.table.get((a, A.identities[C.src[a]])) != a),
        None,
    )
    report.record("unit law", bad is None, jsonable(bad))

    bad = None
    for (f, g), fg in A.table.items():
        for h in C:
            if C.tgt[h] != C.src[g]:
                continue
            gh = A.table.get((g, h))
            left = A.table.get((fg, h))
            right = A.table.get((f, gh)) if gh is not None else None
            if left is None or right is None or left != right:
                bad = (f, g, h)
                break
        if bad:
            break
    report.record("associativity", bad is None, jsonable(bad))
    return report


def check_bimonoid(A: SmallCat) -> Report:
    """Category laws plus the monoid, comonoid and compatibility diagrams in span(X)."""
    report = check_category_laws(A)
    report.subject = f"bimonoid {A.name}"
    if not report.passed:
        logger.warning("Category laws fail", extra={"category": A.name})
        return report
    X = A.objects
    C = A.carrier
    mu, eta, delta, eps = A.mu(), A.eta(), A.delta(), A.epsilon()
    idA = identity(C)

    for name, f in (("μ", mu), ("η", eta), ("Δ", delta), ("ε", eps)):
        report.record(f"{name} is a map of spans", f.span_violation() is None, jsonable(f.span_violation()))

    compare_paths(
        report, "monoid: associativity",
        lambda: chain(circ_map(mu, idA), mu),
        lambda: chain(alpha_circ(C, C, C), circ_map(idA, mu), mu),
    )
    compare_paths(report, "monoid: left unit", lambda: chain(circ_map(eta, idA), mu), lambda: lambda_circ(C))
    compare_paths(report, "monoid: right unit", lambda: chain(circ_map(idA, eta), mu), lambda: rho_circ(C))
    compare_paths(
        report, "comonoid: coassociativity",
        lambda: chain(delta, bullet_map(delta, idA), alpha_bullet(C, C, C)),
        lambda: chain(delta, bullet_map(idA, delta)),
    )
    compare_paths(report, "comonoid: left counit", lambda: chain(delta, bullet_map(eps, idA), lambda_bullet(C)), lambda: idA)
    compare_paths(report, "comonoid: right counit", lambda: chain(delta, bullet_map(idA, eps), rho_bullet(C)), lambda: idA)
    compare_paths(
        report, "compatibility: Δμ",
        lambda: chain(mu, delta),
        lambda: chain(circ_map(delta, delta), interchange(C, C, C, C), bullet_map(mu, mu)),
    )
    compare_paths(
        report, "compatibility: εμ",
        lambda: chain(mu, eps),
        lambda: chain(circ_map(eps, eps), varpi_J(X)),
    )
    compare_paths(
        report, "compatibility: Δη",
        lambda: chain(eta, delta),
        lambda: chain(delta_I(X), bullet_map(eta, eta)),
    )
    compare_paths(report, "compatibility: εη", lambda: chain(eta, eps), lambda: tau(X))
    return report


@dataclass(frozen=True, eq=False)
class SpanModule:
    """A right module over a small category: q.a defined when s(q) = t(a)."""
    cat: SmallCat
    carrier: Span
    action: Dict[Tuple[Label, Label], Label]
    name: str = "Q"
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        Q, A = self.carrier, self.cat.carrier
        expected = {(q, a) for q in Q for a in A if Q.src[q] == A.tgt[a]}
        if set(self.action) != expected:
            extra = sorted(set(self.action) ^ expected, key=repr)
            raise ModuleAxiomError("action must be defined exactly on pairs with s(q) = t(a)", witness=jsonable(extra[0]))
        for pair, qa in self.action.items():
            if qa not in Q:
                raise ModuleAxiomError(f"{format_label(pair)} acts outside the carrier", witness=jsonable(pair))
        if validate:
            witness = self.axiom_violation()
            if witness is not None:
                raise ModuleAxiomError(f"module law {witness[0]} fails", witness=jsonable(witness[1]))

    def act(self, q: Label, a: Label) -> Label:
        return self.action[(q, a)]

    def gamma(self) -> SpanMap:
        domain = circ(self.carrier, self.cat.carrier)
        return SpanMap(domain, self.carrier, {p: self.action[p] for p in domain.arrows}, "γ")

    def axiom_violation(self) -> Optional[Tuple[str, Label]]:
        Q, A = self.carrier, self.cat
        for (q, a), qa in self.action.items():
            if Q.src[qa] != A.src(a) or Q.tgt[qa] != Q.tgt[q]:
                return "endpoints", (q, a)
        for q in Q:
            if self.action[(q, A.unit(Q.src[q]))] != q:
                return "unit", q
        for (a, b), ab in A.table.items():
            for q in Q:
                if Q.src[q] == A.tgt(a) and self.action[(self.action[(q, a)], b)] != self.action[(q, ab)]:
                    return "associativity", (q, a, b)
        return None

    def describe(self) -> Dict:
        return {
            "arrows": self.carrier.describe(),
            "action": [
                {"q": format_label(q), "a": format_label(a), "qa": format_label(qa)}
                for (q, a), qa in self.action.items()
            ],
        }


@dataclass(frozen=True, eq=False)
class SpanComodule:
    carrier: Span
    grade: SpanMap

    def __post_init__(self):
        if self.grade.domain.arrows != self.carrier.arrows:
            raise SpanError("grade must be defined on the carrier")
        if self.grade.span_violation() is not None:
            raise SpanError("grade is not a map of spans", witness=jsonable(self.grade.span_violation()))

    def coaction(self) -> SpanMap:
        """ρ(p) = (p, c(p)) into P•A."""
        P, A = self.carrier, self.grade.codomain
        return SpanMap(P, bullet(P, A), {p: (p, self.grade(p)) for p in P}, "ρ")


@dataclass(frozen=True, eq=False)
class HopfModuleSpan:
    """A module Q with a grade c: Q -> A that is itself a module map."""
    module: SpanModule
    grade: Dict[Label, Label]
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        Q, A = self.module.carrier, self.cat.carrier
        if set(self.grade) != set(Q.arrows):
            raise ModuleAxiomError("grade must be defined on every element")
        for q, c in self.grade.items():
            if c not in A:
                raise ModuleAxiomError(f"grade of {format_label(q)} is not an arrow", witness=jsonable(q))
        if validate:
            witness = self.compatibility_violation()
            if witness is not None:
                raise ModuleAxiomError("grade is not compatible with the action", witness=jsonable(witness))

    @property
    def cat(self) -> SmallCat:
        return self.module.cat

    @property
    def carrier(self) -> Span:
        return self.module.carrier

    @property
    def name(self) -> str:
        return self.module.name

    def act(self, q: Label, a: Label) -> Label:
        return self.module.act(q, a)

    def grade_map(self) -> SpanMap:
        return SpanMap(self.carrier, self.cat.carrier, dict(self.grade), "c")

    def comodule(self) -> SpanComodule:
        return SpanComodule(self.carrier, self.grade_map())

    def compatibility_violation(self) -> Optional[Label]:
        """A grade violating c(q.a) = c(q).a, or a grade that is not a map of spans."""
        violation = self.grade_map().span_violation()
        if violation is not None:
            return violation
        for (q, a), qa in self.module.action.items():
            if self.grade[qa] != self.cat.dot(self.grade[q], a):
                return (q, a)
        return None

    def describe(self) -> Dict:
        body = self.module.describe()
        body["grade"] = {format_label(q): format_label(c) for q, c in self.grade.items()}
        return body


@dataclass(frozen=True, eq=False)
class SliceObject:
    """A finite set over the objects: an object of span(X) concentrated on I."""
    objects: ObjectSet
    points: Tuple[Label, ...]
    anchor: Dict[Label, str]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if len(set(self.points)) != len(self.points) or set(self.anchor) != set(self.points):
            raise SpanError("slice points must be distinct and anchored")
        for z, x in self.anchor.items():
            if x not in self.objects:
                raise SpanError(f"point {format_label(z)} anchored outside the objects", witness=jsonable(z))

    def __len__(self) -> int:
        return len(self.points)

    def as_span(self) -> Span:
        return Span(self.objects, self.points, dict(self.anchor), dict(self.anchor))


@dataclass(frozen=True, eq=False)
class ComoduleMonoidSpan:
    """A small category B with a functor c: B -> A that is the identity on objects."""
    cat: SmallCat
    base: SmallCat
    grade: Dict[Label, Label]

    def __post_init__(self):
        if self.cat.objects.elements != self.base.objects.elements:
            raise SpanError("comodule monoid and base live over different objects")
        if set(self.grade) != set(self.cat.arrows) or any(c not in self.base.carrier for c in self.grade.values()):
            raise SpanError("grade must send every arrow of B to an arrow of A")

    def grade_map(self) -> SpanMap:
        return SpanMap(self.cat.carrier, self.base.carrier, dict(self.grade), "c")


def trivially_graded(A: SmallCat) -> ComoduleMonoidSpan:
    return ComoduleMonoidSpan(A, A, {a: a for a in A.arrows})


def self_hopf_module(A: SmallCat) -> HopfModuleSpan:
    """A over itself: action by composition, grade the identity."""
    return HopfModuleSpan(A.regular_module(), {a: a for a in A.arrows})
