import random

import pytest
from hypothesis import given, settings, strategies as st

from core.exceptions import DuoidalError, SpanError
from span.axioms import check_duoidal_axioms, tuple_plan
from span.generators import random_objects, random_span
from span.idempotent import check_idempotent_criteria_span, split_idempotent
from span.spans import ObjectSet, Span, SpanMap, bullet, circ, interchange, unit_I, unit_J


@pytest.mark.span
@pytest.mark.unit
class TestSpanProducts:
    """The two products and their units"""

    def test_circ_is_pullback(self, XY):
        """M∘N pairs m with n when s(m) = t(n)"""
        M = Span.from_triples(XY, [("f", "x", "y")])
        N = Span.from_triples(XY, [("g", "y", "x"), ("h", "y", "y")])
        P = circ(M, N)
        assert list(P.arrows) == [("f", "g")]
        assert P.src[("f", "g")] == "y"
        assert P.tgt[("f", "g")] == "y"

    def test_bullet_is_parallel_pairs(self, XY):
        M = Span.from_triples(XY, [("f", "x", "y"), ("u", "x", "x")])
        N = Span.from_triples(XY, [("g", "x", "y"), ("h", "y", "x")])
        assert list(bullet(M, N).arrows) == [("f", "g")]

    def test_units(self, XY):
        """I has one loop per object, J one arrow per ordered pair"""
        assert len(unit_I(XY)) == 2
        assert len(unit_J(XY)) == 4

    def test_duplicate_arrow_rejected(self, XY):
        with pytest.raises(SpanError):
            Span.from_triples(XY, [("f", "x", "y"), ("f", "y", "x")])

    def test_unknown_object_rejected(self, XY):
        with pytest.raises(SpanError):
            Span.from_triples(XY, [("f", "x", "z")])

    def test_duplicate_object_rejected(self):
        with pytest.raises(SpanError):
            ObjectSet(("x", "x"))

    def test_map_outside_codomain(self, XY):
        M = Span.from_triples(XY, [("f", "x", "y")])
        with pytest.raises(SpanError):
            SpanMap(M, M, {"f": "g"})

    def test_span_violation_reported(self, XY):
        """Maps may be built even when they break endpoints"""
        M = Span.from_triples(XY, [("f", "x", "y"), ("g", "y", "x")])
        swap = SpanMap(M, M, {"f": "g", "g": "f"})
        assert swap.span_violation() == "f"

    def test_interchange_formula(self, sample_spans):
        _, A, B, C = sample_spans
        z = interchange(C, C, B, B)
        for (m, n), (m2, n2) in z.domain.arrows:
            assert z(((m, n), (m2, n2))) == ((m, m2), (n, n2))


@pytest.mark.span
class TestSpanDuoidalAxioms:
    """All axiom diagrams commute pointwise"""

    def test_sample_spans(self, XY, sample_spans):
        report = check_duoidal_axioms(XY, sample_spans)
        assert report.passed
        assert len(report.entries) > 6

    def test_units_only(self, XY):
        """With no spans only the unit diagrams run"""
        report = check_duoidal_axioms(XY, [])
        assert report.passed
        assert len(report.entries) == 6

    def test_empty_object_set(self):
        X = ObjectSet(())
        report = check_duoidal_axioms(X, [Span.from_triples(X, [])])
        assert report.passed

    def test_faulty_interchange_is_caught(self, XY, sample_spans):
        """Swapping the factors of ζ breaks some diagram"""
        report = check_duoidal_axioms(XY, sample_spans, lambda image: (image[1], image[0]))
        assert not report.passed
        assert report.failures()

    def test_foreign_span_rejected(self, XY):
        other = ObjectSet(("x",))
        with pytest.raises(SpanError):
            check_duoidal_axioms(XY, [Span.from_triples(other, [])])

    def test_fault_on_repeated_span_is_caught(self, XY, sample_spans):
        """A ζ broken only on four copies of the loop u is found on repeated-span tuples"""
        loop = (("u", "u"), ("u", "u"))
        report = check_duoidal_axioms(XY, sample_spans, lambda image: ("broken",) if image == loop else image)
        failed = {e.diagram: e.witness for e in report.failures()}
        assert set(failed) == {"associativity: ∘ hexagon", "associativity: • hexagon"}
        assert failed["associativity: ∘ hexagon"]["tuple"] == [0, 0, 1, 1, 1, 1]
        assert failed["associativity: • hexagon"]["tuple"] == [0, 1, 1, 0, 1, 1]

    def test_tuple_plan_is_exhaustive(self):
        hexagons, squares = tuple_plan(4)
        assert len(hexagons) == 4 ** 6
        assert len(squares) == 4 ** 2
        assert (3, 0, 0, 3, 3, 0) in hexagons

    def test_tuple_plan_explicit(self):
        """Unit squares run on the consecutive pairs of each six-tuple"""
        hexagons, squares = tuple_plan(3, [(0, 1, 2, 0, 1, 2)])
        assert hexagons == [(0, 1, 2, 0, 1, 2)]
        assert squares == [(0, 1), (2, 0), (1, 2)]

    @pytest.mark.parametrize("bad", [(0, 1, 2), (0, 0, 0, 0, 0, 3), (0, 0, 0, 0, 0, -1)])
    def test_tuple_plan_rejects(self, bad):
        with pytest.raises(DuoidalError):
            tuple_plan(3, [bad])

    @pytest.mark.property
    def test_two_hundred_random_tuples(self):
        """Fresh random spans per six-tuple, with a broken ζ caught whenever it is used"""
        rng = random.Random(200)
        broken = 0
        for k in range(200):
            X = random_objects(rng, 4)
            spans = [random_span(rng, X, max_arrows=5, prefix=f"t{k}m{i}_") for i in range(6)]
            report = check_duoidal_axioms(X, spans, tuples=[range(6)])
            assert report.passed, (k, report.failures())
            _, _, C, D, E, F = spans
            if len(circ(bullet(C, D), bullet(E, F))):
                corrupted = check_duoidal_axioms(X, spans, lambda image: ("broken",), tuples=[range(6)])
                assert not corrupted.passed
                broken += 1
        assert broken > 0

    @pytest.mark.property
    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10_000))
    def test_random_spans(self, seed):
        rng = random.Random(seed)
        X = random_objects(rng, 3)
        spans = [random_span(rng, X, max_arrows=3, prefix=f"m{i}_") for i in range(2)]
        assert check_duoidal_axioms(X, spans).passed


@pytest.mark.span
class TestIdempotents:
    """The idempotent (co)monads on span(X)"""

    def test_criteria_on_samples(self, sample_spans):
        for M in sample_spans:
            report = check_idempotent_criteria_span(M)
            assert report.passed, report.failures()

    def test_slice_gets_extra_entry(self, XY):
        """Spans with s = t also check (M∘τ)•I"""
        M = Span.from_triples(XY, [("u", "x", "x"), ("w", "y", "y")])
        diagrams = [e.diagram for e in check_idempotent_criteria_span(M).entries]
        assert "(M∘τ)•I invertible" in diagrams

    def test_split_idempotent(self, XY):
        M = Span.from_triples(XY, [("f", "x", "y"), ("g", "x", "y"), ("h", "y", "y")])
        e = SpanMap(M, M, {"f": "f", "g": "f", "h": "h"}, "e")
        image, retraction, inclusion = split_idempotent(e)
        assert list(image.arrows) == ["f", "h"]
        for x in M.arrows:
            assert inclusion(retraction(x)) == e(x)
        for y in image.arrows:
            assert retraction(inclusion(y)) == y

    def test_non_idempotent_rejected(self, XY):
        M = Span.from_triples(XY, [("f", "x", "y"), ("g", "x", "y")])
        swap = SpanMap(M, M, {"f": "g", "g": "f"}, "swap")
        with pytest.raises(SpanError):
            split_idempotent(swap)
