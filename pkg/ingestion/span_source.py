from typing import List, Optional, Tuple

from ingestion.base import BaseLoader
from schemas.inputs import (
    ArrowSchema,
    CategorySchema,
    ComoduleMonoidSchema,
    HopfModuleSchema,
    ModuleSchema,
    SpanCollectionSchema,
    SpanSchema,
)
from span.category import ComoduleMonoidSpan, HopfModuleSpan, SmallCat, SpanModule
from span.spans import ObjectSet, Span


def span_from_arrows(X: ObjectSet, arrows: List[ArrowSchema]) -> Span:
    return Span.from_triples(X, [(a.name, a.src, a.tgt) for a in arrows])


def category_from_schema(doc: CategorySchema, validate: bool = True) -> SmallCat:
    X = ObjectSet(tuple(doc.objects))
    return SmallCat(
        carrier=span_from_arrows(X, doc.arrows),
        identities=dict(doc.identities),
        table={(c.f, c.g): c.fg for c in doc.compose},
        name=doc.name,
        validate=validate,
    )


class SpanLoader(BaseLoader[SpanSchema, Span]):
    schema = SpanSchema

    def __init__(self, path: str):
        super().__init__("span", path)

    def build(self, document: SpanSchema) -> Span:
        return span_from_arrows(ObjectSet(tuple(document.objects)), document.arrows)


class SpanCollectionLoader(BaseLoader[SpanCollectionSchema, Tuple[ObjectSet, Optional[List[Span]]]]):
    """Object set plus spans; the span list is None when the file leaves it out."""
    schema = SpanCollectionSchema

    def __init__(self, path: str):
        super().__init__("span_collection", path)

    def build(self, document: SpanCollectionSchema) -> Tuple[ObjectSet, Optional[List[Span]]]:
        X = ObjectSet(tuple(document.objects))
        if document.spans is None:
            return X, None
        return X, [span_from_arrows(X, arrows) for arrows in document.spans]


class CategoryLoader(BaseLoader[CategorySchema, SmallCat]):
    schema = CategorySchema

    def __init__(self, path: str, validate: bool = True):
        super().__init__("category", path)
        self.validate_laws = validate

    def build(self, document: CategorySchema) -> SmallCat:
        return category_from_schema(document, validate=self.validate_laws)


def module_from_schema(doc: ModuleSchema) -> SpanModule:
    A = category_from_schema(doc.category)
    carrier = span_from_arrows(A.objects, doc.carrier)
    return SpanModule(A, carrier, {(x.q, x.a): x.qa for x in doc.action}, name=doc.name)


class ModuleLoader(BaseLoader[ModuleSchema, SpanModule]):
    schema = ModuleSchema

    def __init__(self, path: str):
        super().__init__("module", path)

    def build(self, document: ModuleSchema) -> SpanModule:
        return module_from_schema(document)


class HopfModuleLoader(BaseLoader[HopfModuleSchema, HopfModuleSpan]):
    schema = HopfModuleSchema

    def __init__(self, path: str):
        super().__init__("hopf_module", path)

    def build(self, document: HopfModuleSchema) -> HopfModuleSpan:
        return HopfModuleSpan(module_from_schema(document), dict(document.grade))


class ComoduleMonoidLoader(BaseLoader[ComoduleMonoidSchema, ComoduleMonoidSpan]):
    schema = ComoduleMonoidSchema

    def __init__(self, path: str):
        super().__init__("comodule_monoid", path)

    def build(self, document: ComoduleMonoidSchema) -> ComoduleMonoidSpan:
        return ComoduleMonoidSpan(
            category_from_schema(document.category),
            category_from_schema(document.base),
            dict(document.grade),
        )
