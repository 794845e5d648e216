"""Named small categories and exhaustive enumeration of tiny ones."""
import itertools
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from core.logging_config import logger
from span.category import ComoduleMonoidSpan, SmallCat
from span.spans import Label, ObjectSet, Span


def one_object(name: str, elements: Sequence[Label], multiply: Callable[[Label, Label], Label], unit: Label) -> SmallCat:
    """The one-object category of a finite monoid; the object is called '*'."""
    X = ObjectSet(("*",))
    carrier = Span(X, tuple(elements), {e: "*" for e in elements}, {e: "*" for e in elements})
    table = {(f, g): multiply(f, g) for f in elements for g in elements}
    return SmallCat(carrier, {"*": unit}, table, name=name)


def cyclic_group(n: int) -> SmallCat:
    elements = ["1"] + [f"g{k}" if n > 2 else "g" for k in range(1, n)]

    def power(e):
        return 0 if e == "1" else (1 if e == "g" else int(e[1:]))

    return one_object(f"C{n}", elements, lambda f, g: elements[(power(f) + power(g)) % n], "1")


def symmetric_group(n: int) -> SmallCat:
    perms = ["".join(map(str, p)) for p in itertools.permutations(range(n))]

    def compose(f: str, g: str) -> str:
        # (f.g)(i) = f(g(i))
        return "".join(f[int(g[i])] for i in range(n))

    return one_object(f"S{n}", perms, compose, perms[0])


def idempotent_monoid() -> SmallCat:
    """{1, m} with m.m = m."""
    return one_object("{1,m}", ["1", "m"], lambda f, g: "m" if "m" in (f, g) else "1", "1")


def walking_arrow() -> SmallCat:
    X = ObjectSet(("x", "y"))
    carrier = Span.from_triples(X, [("1_x", "x", "x"), ("1_y", "y", "y"), ("a", "x", "y")])
    table = {
        ("1_x", "1_x"): "1_x",
        ("1_y", "1_y"): "1_y",
        ("1_y", "a"): "a",
        ("a", "1_x"): "a",
    }
    return SmallCat(carrier, {"x": "1_x", "y": "1_y"}, table, name="walking arrow")


def indiscrete(objects: Sequence[str]) -> SmallCat:
    """Exactly one arrow between any ordered pair of objects."""
    X = ObjectSet(tuple(objects))
    triples = [(f"{t}<-{s}", s, t) for t in X for s in X]
    carrier = Span.from_triples(X, triples)
    table = {
        (f"{t}<-{m}", f"{m}<-{s}"): f"{t}<-{s}"
        for t in X for m in X for s in X
    }
    return SmallCat(carrier, {x: f"{x}<-{x}" for x in X}, table, name=f"indiscrete({','.join(X)})")


def discrete(objects: Sequence[str]) -> SmallCat:
    X = ObjectSet(tuple(objects))
    carrier = Span.from_triples(X, [(f"1_{x}", x, x) for x in X])
    return SmallCat(carrier, {x: f"1_{x}" for x in X}, {(f"1_{x}", f"1_{x}"): f"1_{x}" for x in X}, name="discrete")


def product_monoid(G: SmallCat, H: SmallCat) -> ComoduleMonoidSpan:
    """G×H for one-object G, H, graded over G by the first projection."""
    elements = [(g, h) for g in G.arrows for h in H.arrows]
    B = one_object(
        f"{G.name}x{H.name}",
        elements,
        lambda f, k: (G.dot(f[0], k[0]), H.dot(f[1], k[1])),
        (G.unit("*"), H.unit("*")),
    )
    return ComoduleMonoidSpan(B, G, {e: e[0] for e in elements})


def trivial_grading(G: SmallCat) -> ComoduleMonoidSpan:
    """A one-object G graded over the trivial group."""
    T = one_object("1", ["1"], lambda f, g: "1", "1")
    return ComoduleMonoidSpan(G, T, {g: "1" for g in G.arrows})


NAMED = {
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "S3": lambda: symmetric_group(3),
    "idempotent": idempotent_monoid,
    "walking_arrow": walking_arrow,
    "indiscrete": lambda: indiscrete(["x", "y"]),
    "discrete": lambda: discrete(["x", "y"]),
}


def named_categories() -> List[SmallCat]:
    return [build() for build in NAMED.values()]


# Enumeration

def _hom_layouts(objects: Sequence[str], extra: int) -> Iterator[List[Tuple[str, str]]]:
    pairs = [(s, t) for s in objects for t in objects]
    for layout in itertools.combinations_with_replacement(pairs, extra):
        yield list(layout)


def _tables(
    arrows: List[Label],
    src: Dict[Label, str],
    tgt: Dict[Label, str],
    identities: Dict[str, Label],
) -> Iterator[Dict[Tuple[Label, Label], Label]]:
    """All associative composition tables extending the identity laws."""
    fixed: Dict[Tuple[Label, Label], Label] = {}
    for a in arrows:
        fixed[(identities[tgt[a]], a)] = a
        fixed[(a, identities[src[a]])] = a
    ids = set(identities.values())
    open_pairs = [
        (f, g) for f in arrows for g in arrows
        if f not in ids and g not in ids and src[f] == tgt[g]
    ]
    candidates = {
        (f, g): [h for h in arrows if src[h] == src[g] and tgt[h] == tgt[f]]
        for f, g in open_pairs
    }

    def associative(table) -> bool:
        for (f, g), fg in table.items():
            for h in arrows:
                if src[g] != tgt[h]:
                    continue
                gh = table.get((g, h))
                if gh is None:
                    continue
                left, right = table.get((fg, h)), table.get((f, gh))
                if left is not None and right is not None and left != right:
                    return False
        return True

    def extend(k: int, table):
        if k == len(open_pairs):
            yield dict(table)
            return
        pair = open_pairs[k]
        for value in candidates[pair]:
            table[pair] = value
            if associative(table):
                yield from extend(k + 1, table)
            del table[pair]

    yield from extend(0, dict(fixed))


def _canonical_key(cat: SmallCat) -> Tuple:
    objects = list(cat.objects)
    nonid = [a for a in cat.arrows if a not in cat.identity_arrows]
    best = None
    for obj_perm in itertools.permutations(objects):
        rename_obj = dict(zip(objects, obj_perm))
        for arrow_perm in itertools.permutations(range(len(nonid))):
            rename = {a: f"n{arrow_perm[i]}" for i, a in enumerate(nonid)}
            rename.update({cat.unit(x): f"1_{rename_obj[x]}" for x in objects})
            key = (
                tuple(sorted((rename[a], rename_obj[cat.src(a)], rename_obj[cat.tgt(a)]) for a in cat.arrows)),
                tuple(sorted((rename[f], rename[g], rename[fg]) for (f, g), fg in cat.table.items())),
            )
            if best is None or key < best:
                best = key
    return best


def enumerate_categories(max_objects: int = 2, max_arrows: int = 4) -> List[SmallCat]:
    """Every small category with at most the given numbers of objects and
    arrows, one per isomorphism class."""
    found: Dict[Tuple, SmallCat] = {}
    names = ["x", "y", "z", "w"]
    for n in range(1, max_objects + 1):
        objects = names[:n]
        X = ObjectSet(tuple(objects))
        identities = {x: f"1_{x}" for x in objects}
        for extra in range(0, max_arrows - n + 1):
            for layout in _hom_layouts(objects, extra):
                triples = [(f"1_{x}", x, x) for x in objects]
                triples += [(chr(ord("a") + i), s, t) for i, (s, t) in enumerate(layout)]
                carrier = Span.from_triples(X, triples)
                for table in _tables(list(carrier.arrows), carrier.src, carrier.tgt, identities):
                    cat = SmallCat(carrier, identities, table, name=f"cat{len(found)}")
                    key = _canonical_key(cat)
                    if key not in found:
                        found[key] = cat
    logger.info("Enumerated small categories", extra={
        "max_objects": max_objects,
        "max_arrows": max_arrows,
        "count": len(found),
    })
    return list(found.values())
