"""Seeded random spans, slices and Hopf modules for corpus-based checks."""
import random
from typing import Dict, List

from core.exceptions import ModuleAxiomError
from span.category import HopfModuleSpan, SliceObject, SmallCat, SpanModule
from span.disjoint_set import DisjointSet
from span.hopf import comparison_K
from span.spans import Label, ObjectSet, Span


def random_objects(rng: random.Random, max_objects: int = 4) -> ObjectSet:
    n = rng.randint(0, max_objects)
    return ObjectSet(tuple(f"o{i}" for i in range(n)))


def random_span(rng: random.Random, X: ObjectSet, max_arrows: int = 5, prefix: str = "m") -> Span:
    if not len(X):
        return Span(X, (), {}, {})
    n = rng.randint(0, max_arrows)
    objects = list(X)
    triples = [(f"{prefix}{i}", rng.choice(objects), rng.choice(objects)) for i in range(n)]
    return Span.from_triples(X, triples)


def random_slice(rng: random.Random, X: ObjectSet, max_points: int = 3) -> SliceObject:
    if not len(X):
        return SliceObject(X, (), {})
    n = rng.randint(0, max_points)
    objects = list(X)
    points = tuple(f"z{i}" for i in range(n))
    return SliceObject(X, points, {z: rng.choice(objects) for z in points})


def bounded_slice(rng: random.Random, A: SmallCat, max_size: int) -> SliceObject:
    """A random slice Z with |Z∘A| at most max_size."""
    objects = list(A.objects)
    points: List[str] = []
    anchor: Dict[str, str] = {}
    size = 0
    for i in range(max_size):
        x = rng.choice(objects)
        growth = sum(1 for a in A.arrows if A.tgt(a) == x)
        if size + growth > max_size:
            continue
        z = f"z{i}"
        points.append(z)
        anchor[z] = x
        size += growth
        if rng.random() < 0.3:
            break
    return SliceObject(A.objects, tuple(points), anchor)


def quotient_hopf_module(Xh: HopfModuleSpan, classes: DisjointSet, name: str) -> HopfModuleSpan:
    """The Hopf module on the classes of a congruence, labelled by earliest member."""
    carrier = Xh.carrier
    representative = {}
    for members in classes.classes():
        for member in members:
            representative[member] = members[0]
    kept = carrier.restrict(set(representative.values()))
    action = {(q, a): representative[Xh.act(q, a)] for (q, a) in Xh.module.action if q in kept}
    module = SpanModule(Xh.cat, kept, action, name=name)
    return HopfModuleSpan(module, {q: Xh.grade[q] for q in kept.arrows})


def close_congruence(Xh: HopfModuleSpan, classes: DisjointSet) -> None:
    """Close a grade-preserving relation under the action."""
    changed = True
    while changed:
        changed = False
        for members in classes.classes():
            head = members[0]
            for other in members[1:]:
                for (q, a), qa in Xh.module.action.items():
                    if q == head and classes.union(qa, Xh.act(other, a)):
                        changed = True


def random_hopf_module(rng: random.Random, A: SmallCat, max_size: int = 6, name: str = "X") -> HopfModuleSpan:
    """K(Z) for a random slice Z, sometimes quotiented by a random congruence."""
    Z = bounded_slice(rng, A, max_size)
    free = comparison_K(A, Z, name=name)
    elements = list(free.carrier.arrows)
    classes = DisjointSet(elements)
    if len(elements) >= 2 and rng.random() < 0.5:
        first = rng.choice(elements)
        partners = [
            q for q in elements
            if q != first
            and free.grade[q] == free.grade[first]
            and free.carrier.src[q] == free.carrier.src[first]
            and free.carrier.tgt[q] == free.carrier.tgt[first]
        ]
        if partners:
            classes.union(first, rng.choice(partners))
            close_congruence(free, classes)
    if len(classes.classes()) == len(elements):
        return free
    try:
        return quotient_hopf_module(free, classes, name)
    except ModuleAxiomError:
        return free


def hopf_corpus(A: SmallCat, size: int, seed: int, max_size: int = 6) -> List[HopfModuleSpan]:
    rng = random.Random(seed)
    return [random_hopf_module(rng, A, max_size, name=f"X{i}") for i in range(size)]


def slice_corpus(A: SmallCat, size: int, seed: int, max_points: int = 3) -> List[SliceObject]:
    rng = random.Random(seed + 1)
    return [random_slice(rng, A.objects, max_points) for _ in range(size)]
