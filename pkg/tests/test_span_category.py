import pytest

from core.exceptions import CategoryError
from span.catalog import NAMED, enumerate_categories, named_categories, product_monoid, trivial_grading
from span.category import SmallCat, check_bimonoid, check_category_laws
from span.disjoint_set import DisjointSet
from span.spans import ObjectSet, Span


def broken_monoid(validate: bool) -> SmallCat:
    """{1, a, b} with a non-associative product"""
    X = ObjectSet(("*",))
    carrier = Span.from_triples(X, [("1", "*", "*"), ("a", "*", "*"), ("b", "*", "*")])
    table = {("1", g): g for g in ("1", "a", "b")}
    table.update({(g, "1"): g for g in ("a", "b")})
    table.update({("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "a", ("b", "b"): "a"})
    return SmallCat(carrier, {"*": "1"}, table, name="broken", validate=validate)


@pytest.mark.span
@pytest.mark.unit
class TestSmallCategories:
    """Construction and validation of small categories"""

    def test_named_categories_are_valid(self):
        for A in named_categories():
            assert check_category_laws(A).passed

    def test_broken_table_rejected(self):
        with pytest.raises(CategoryError):
            broken_monoid(validate=True)

    def test_missing_identity_rejected(self, XY):
        carrier = Span.from_triples(XY, [("1_x", "x", "x")])
        with pytest.raises(CategoryError):
            SmallCat(carrier, {"x": "1_x"}, {("1_x", "1_x"): "1_x"})

    def test_partial_table_rejected(self, XY):
        carrier = Span.from_triples(XY, [("1_x", "x", "x"), ("1_y", "y", "y")])
        with pytest.raises(CategoryError):
            SmallCat(carrier, {"x": "1_x", "y": "1_y"}, {("1_x", "1_x"): "1_x"})

    def test_structure_maps(self, arrow):
        """Δ is the diagonal and ε sends a to (t(a), s(a))"""
        assert arrow.delta()("a") == ("a", "a")
        assert arrow.epsilon()("a") == ("y", "x")
        assert arrow.eta()("x") == "1_x"
        assert arrow.mu()(("1_y", "a")) == "a"


@pytest.mark.span
class TestBimonoid:
    """A category is a bimonoid in span(X)"""

    @pytest.mark.parametrize("build", ["C2", "idempotent", "walking_arrow", "indiscrete", "discrete", "S3"])
    def test_named(self, build):
        report = check_bimonoid(NAMED[build]())
        assert report.passed, report.failures()

    def test_broken_category_fails(self):
        """Unvalidated non-associative tables are reported, not raised"""
        report = check_bimonoid(broken_monoid(validate=False))
        assert not report.passed
        assert report.failures()[0].diagram == "associativity"


@pytest.mark.span
class TestEnumeration:
    """Exhaustive enumeration of tiny categories"""

    def test_monoids_up_to_order_two(self):
        """Trivial monoid, C2 and {1, m}"""
        assert len(enumerate_categories(max_objects=1, max_arrows=2)) == 3

    def test_monoids_up_to_order_three(self):
        """1 + 2 + 7 monoids up to isomorphism"""
        assert len(enumerate_categories(max_objects=1, max_arrows=3)) == 10

    def test_two_objects(self):
        """Discrete, two loop types at one object and the walking arrow"""
        two = [A for A in enumerate_categories(max_objects=2, max_arrows=3) if len(A.objects) == 2]
        assert len(two) == 4

    def test_four_arrows(self):
        two = [A for A in enumerate_categories(max_objects=2, max_arrows=4) if len(A.objects) == 2]
        assert len(two) > 4
        assert all(len(A.arrows) <= 4 for A in two)

    def test_enumerated_are_bimonoids(self, category_corpus):
        for A in category_corpus:
            assert check_bimonoid(A).passed, A.describe()


@pytest.mark.span
@pytest.mark.unit
class TestGradings:
    def test_product_monoid(self, C2):
        Bm = product_monoid(C2, C2)
        assert len(Bm.cat.arrows) == 4
        assert Bm.grade[("g", "1")] == "g"

    def test_trivial_grading(self, C3):
        Bm = trivial_grading(C3)
        assert set(Bm.grade.values()) == {"1"}


@pytest.mark.unit
class TestDisjointSet:
    def test_classes_keep_insertion_order(self):
        classes = DisjointSet(["c", "a", "b", "d"])
        assert classes.union("b", "c")
        assert not classes.union("c", "b")
        assert classes.classes() == [["c", "b"], ["a"], ["d"]]

    def test_find_adds_missing(self):
        classes = DisjointSet()
        assert classes.find("x") == "x"
        assert classes.classes() == [["x"]]
