"""Finite spans over a fixed object set and the two monoidal products on them.

A span M over X is a finite set of arrows with source and target maps into X.
The circle product is the pullback M∘N = {(m,n) | s(m) = t(n)}; the bullet
product is the set of parallel pairs M•N = {(m,n) | s(m) = s(n), t(m) = t(n)}.
Product arrows are labelled by tuples of constituent labels, ordered by the
position of the first constituent, then the second.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from core.exceptions import SpanError
from core.labels import format_label

Label = Hashable


@dataclass(frozen=True)
class ObjectSet:
    elements: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        seen = set()
        for element in self.elements:
            if element in seen:
                raise SpanError(f"duplicate object label {element!r}", witness=element)
            seen.add(element)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item) -> bool:
        return item in self.elements


@dataclass(frozen=True, eq=False)
class Span:
    objects: ObjectSet
    arrows: Tuple[Label, ...]
    src: Dict[Label, str]
    tgt: Dict[Label, str]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(self.index) != len(self.arrows):
            duplicate = next(a for i, a in enumerate(self.arrows) if self.index[a] != i)
            raise SpanError(f"duplicate arrow label {format_label(duplicate)}", witness=duplicate)
        for name, leg in (("src", self.src), ("tgt", self.tgt)):
            if set(leg) != set(self.arrows):
                raise SpanError(f"{name} is not defined exactly on the arrows")
            for arrow, obj in leg.items():
                if obj not in self.objects:
                    raise SpanError(
                        f"{name}({format_label(arrow)}) = {obj!r} is not an object",
                        witness=arrow,
                    )

    @classmethod
    def from_triples(cls, objects: ObjectSet, triples: Iterable[Tuple[Label, str, str]]) -> "Span":
        """Build a span from (name, src, tgt) triples."""
        triples = list(triples)
        return cls(
            objects=objects,
            arrows=tuple(name for name, _, _ in triples),
            src={name: s for name, s, _ in triples},
            tgt={name: t for name, _, t in triples},
        )

    @cached_property
    def index(self) -> Dict[Label, int]:
        return {arrow: i for i, arrow in enumerate(self.arrows)}

    def __len__(self) -> int:
        return len(self.arrows)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.arrows)

    def __contains__(self, item) -> bool:
        try:
            return item in self.index
        except TypeError:
            return False

    def hom(self, source: str, target: str) -> List[Label]:
        return [a for a in self.arrows if self.src[a] == source and self.tgt[a] == target]

    def loops(self) -> List[Label]:
        return [a for a in self.arrows if self.src[a] == self.tgt[a]]

    def restrict(self, arrows: Iterable[Label]) -> "Span":
        keep = set(arrows)
        chosen = [a for a in self.arrows if a in keep]
        return Span(
            objects=self.objects,
            arrows=tuple(chosen),
            src={a: self.src[a] for a in chosen},
            tgt={a: self.tgt[a] for a in chosen},
        )

    def describe(self) -> List[Dict[str, str]]:
        return [
            {"name": format_label(a), "src": self.src[a], "tgt": self.tgt[a]}
            for a in self.arrows
        ]


@dataclass(frozen=True, eq=False)
class SpanMap:
    """A function between the arrow sets of two spans.

    Only totality and landing in the codomain are enforced here; whether
    sources and targets are preserved is reported by `span_violation`, so
    that corrupted maps can still be built and checked.
    """
    domain: Span
    codomain: Span
    assignment: Dict[Label, Label]
    name: str = "map"

    def __post_init__(self):
        if set(self.assignment) != set(self.domain.arrows):
            missing = [a for a in self.domain.arrows if a not in self.assignment]
            raise SpanError(f"{self.name} is not defined on the whole domain", witness=missing[:1] or None)
        for x, y in self.assignment.items():
            if y not in self.codomain:
                raise SpanError(
                    f"{self.name} sends {format_label(x)} outside its codomain",
                    witness=[x, y],
                )

    def __call__(self, x: Label) -> Label:
        return self.assignment[x]

    def span_violation(self) -> Optional[Label]:
        for x, y in self.assignment.items():
            if self.domain.src[x] != self.codomain.src[y] or self.domain.tgt[x] != self.codomain.tgt[y]:
                return x
        return None

    def collision(self) -> Optional[Tuple[Label, Label]]:
        seen: Dict[Label, Label] = {}
        for x in self.domain.arrows:
            y = self.assignment[x]
            if y in seen:
                return seen[y], x
            seen[y] = x
        return None

    def missed(self) -> Optional[Label]:
        hit = set(self.assignment.values())
        return next((y for y in self.codomain.arrows if y not in hit), None)

    def is_injective(self) -> bool:
        return self.collision() is None

    def is_surjective(self) -> bool:
        return self.missed() is None

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self, name: str = None) -> "SpanMap":
        if not self.is_bijective():
            raise SpanError(f"{self.name} is not invertible", witness=self.collision() or self.missed())
        return SpanMap(
            self.codomain,
            self.domain,
            {y: x for x, y in self.assignment.items()},
            name or f"{self.name}^-1",
        )

    def then(self, other: "SpanMap") -> "SpanMap":
        """`other` after `self`."""
        if other.domain is not self.codomain and other.domain.arrows != self.codomain.arrows:
            raise SpanError(f"cannot compose {self.name} with {other.name}")
        return SpanMap(
            self.domain,
            other.codomain,
            {x: other.assignment[y] for x, y in self.assignment.items()},
            f"{other.name}.{self.name}",
        )

    def disagreement(self, other: "SpanMap") -> Optional[Label]:
        """First domain element on which the two maps differ, if any."""
        for x in self.domain.arrows:
            if self.assignment[x] != other.assignment.get(x):
                return x
        return None


def chain(*maps: SpanMap) -> SpanMap:
    """Compose maps in diagram order: chain(f, g) = g . f"""
    result = maps[0]
    for step in maps[1:]:
        result = result.then(step)
    return result


def check_same_objects(*spans: Span) -> ObjectSet:
    objects = spans[0].objects
    for other in spans[1:]:
        if other.objects.elements != objects.elements:
            raise SpanError("spans live over different object sets")
    return objects


def circ(M: Span, N: Span) -> Span:
    """Pullback product: pairs (m, n) with s(m) = t(n), from s(n) to t(m)."""
    objects = check_same_objects(M, N)
    arrows, src, tgt = [], {}, {}
    for m in M.arrows:
        for n in N.arrows:
            if M.src[m] == N.tgt[n]:
                arrows.append((m, n))
                src[(m, n)] = N.src[n]
                tgt[(m, n)] = M.tgt[m]
    return Span(objects, tuple(arrows), src, tgt)


def bullet(M: Span, N: Span) -> Span:
    """Parallel pairs (m, n) with common source and target."""
    objects = check_same_objects(M, N)
    arrows, src, tgt = [], {}, {}
    for m in M.arrows:
        for n in N.arrows:
            if M.src[m] == N.src[n] and M.tgt[m] == N.tgt[n]:
                arrows.append((m, n))
                src[(m, n)] = M.src[m]
                tgt[(m, n)] = M.tgt[m]
    return Span(objects, tuple(arrows), src, tgt)


circ_product = circ
bullet_product = bullet


def unit_I(X: ObjectSet) -> Span:
    return Span(X, tuple(X.elements), {x: x for x in X}, {x: x for x in X})


def unit_J(X: ObjectSet) -> Span:
    """All pairs (x, y), viewed as an arrow y -> x."""
    pairs = [(x, y) for x in X for y in X]
    return Span(X, tuple(pairs), {p: p[1] for p in pairs}, {p: p[0] for p in pairs})


def identity(M: Span) -> SpanMap:
    return SpanMap(M, M, {m: m for m in M.arrows}, "id")


def _pairwise(f: SpanMap, g: SpanMap, product: Callable[[Span, Span], Span], name: str) -> SpanMap:
    domain = product(f.domain, g.domain)
    codomain = product(f.codomain, g.codomain)
    return SpanMap(
        domain,
        codomain,
        {(x, y): (f.assignment[x], g.assignment[y]) for x, y in domain.arrows},
        f"({f.name}{name}{g.name})",
    )


def circ_map(f: SpanMap, g: SpanMap) -> SpanMap:
    return _pairwise(f, g, circ, "∘")


def bullet_map(f: SpanMap, g: SpanMap) -> SpanMap:
    return _pairwise(f, g, bullet, "•")


def _associator(M: Span, N: Span, P: Span, product, name: str) -> SpanMap:
    domain = product(product(M, N), P)
    codomain = product(M, product(N, P))
    return SpanMap(domain, codomain, {((m, n), p): (m, (n, p)) for (m, n), p in domain.arrows}, name)


def alpha_circ(M: Span, N: Span, P: Span) -> SpanMap:
    return _associator(M, N, P, circ, "α∘")


def alpha_bullet(M: Span, N: Span, P: Span) -> SpanMap:
    return _associator(M, N, P, bullet, "α•")


def lambda_circ(M: Span) -> SpanMap:
    """I∘M -> M"""
    domain = circ(unit_I(M.objects), M)
    return SpanMap(domain, M, {(x, m): m for x, m in domain.arrows}, "λ∘")


def rho_circ(M: Span) -> SpanMap:
    """M∘I -> M"""
    domain = circ(M, unit_I(M.objects))
    return SpanMap(domain, M, {(m, x): m for m, x in domain.arrows}, "ρ∘")


def lambda_bullet(M: Span) -> SpanMap:
    """J•M -> M"""
    domain = bullet(unit_J(M.objects), M)
    return SpanMap(domain, M, {(j, m): m for j, m in domain.arrows}, "λ•")


def rho_bullet(M: Span) -> SpanMap:
    """M•J -> M"""
    domain = bullet(M, unit_J(M.objects))
    return SpanMap(domain, M, {(m, j): m for m, j in domain.arrows}, "ρ•")


def delta_I(X: ObjectSet) -> SpanMap:
    I = unit_I(X)
    return SpanMap(I, bullet(I, I), {x: (x, x) for x in X}, "δ")


def varpi_J(X: ObjectSet) -> SpanMap:
    J = unit_J(X)
    domain = circ(J, J)
    return SpanMap(domain, J, {((x, _), (_y, z)): (x, z) for (x, _), (_y, z) in domain.arrows}, "ϖ")


def tau(X: ObjectSet) -> SpanMap:
    return SpanMap(unit_I(X), unit_J(X), {x: (x, x) for x in X}, "τ")


InterchangeHook = Callable[[Label], Label]


def interchange(M: Span, N: Span, M2: Span, N2: Span, hook: Optional[InterchangeHook] = None) -> SpanMap:
    """ζ: (M•N)∘(M2•N2) -> (M∘M2)•(N∘N2), ((m,n),(m2,n2)) ↦ ((m,m2),(n,n2)).

    `hook` rewrites every image and exists to inject faults in tests.
    """
    domain = circ(bullet(M, N), bullet(M2, N2))
    codomain = bullet(circ(M, M2), circ(N, N2))
    assignment = {}
    for (m, n), (m2, n2) in domain.arrows:
        image = ((m, m2), (n, n2))
        assignment[((m, n), (m2, n2))] = hook(image) if hook else image
    return SpanMap(domain, codomain, assignment, "ζ")


def relabel(M: Span, rename: Dict[Label, Label], name: str = "relabel") -> Tuple[Span, SpanMap]:
    """A copy of M with renamed arrows, and the bijection M -> copy."""
    copy = Span(
        M.objects,
        tuple(rename[a] for a in M.arrows),
        {rename[a]: M.src[a] for a in M.arrows},
        {rename[a]: M.tgt[a] for a in M.arrows},
    )
    return copy, SpanMap(M, copy, {a: rename[a] for a in M.arrows}, name)


def spans_over(X: ObjectSet, spans: Sequence[Span]) -> None:
    for M in spans:
        check_same_objects(unit_I(X), M)
