import json
import logging

import pytest

from bim.bialgebroid import check_bialgebroid
from core.exceptions import InputError
from ingestion.bim_source import BialgebroidLoader, BimSuiteLoader
from ingestion.span_source import (
    CategoryLoader,
    ComoduleMonoidLoader,
    HopfModuleLoader,
    ModuleLoader,
    SpanCollectionLoader,
    SpanLoader,
)

C2_DOC = {
    "name": "C2",
    "objects": ["*"],
    "arrows": [{"name": "1", "src": "*", "tgt": "*"}, {"name": "g", "src": "*", "tgt": "*"}],
    "identities": {"*": "1"},
    "compose": [
        {"f": "1", "g": "1", "fg": "1"},
        {"f": "1", "g": "g", "fg": "g"},
        {"f": "g", "g": "1", "fg": "g"},
        {"f": "g", "g": "g", "fg": "1"},
    ],
}

DUAL_NUMBERS = {"name": "F[t]/(t^2)", "dim": 2, "mul": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], "unit": [1, 0]}


@pytest.mark.unit
class TestSpanLoaders:
    """Loading spans, categories and modules from JSON"""

    def test_span_collection(self, data_dir):
        X, spans = SpanCollectionLoader(str(data_dir / "spans.json")).run()
        assert X.elements == ("x", "y")
        assert len(spans) == 4
        assert spans[2].arrows == ("v", "w")

    def test_objects_only(self, data_dir):
        X, spans = SpanCollectionLoader(str(data_dir / "objects_only.json")).run()
        assert len(X.elements) == 3
        assert spans is None

    def test_single_span(self, write_json):
        path = write_json({"objects": ["x"], "arrows": [{"name": "u", "src": "x", "tgt": "x"}]})
        assert SpanLoader(path).run().arrows == ("u",)

    def test_category(self, data_dir):
        C = CategoryLoader(str(data_dir / "c2.json")).run()
        assert C.name == "C2"
        assert len(C.arrows) == 2

    def test_broken_category_is_input_error(self, write_json):
        doc = dict(C2_DOC, compose=C2_DOC["compose"][:3])
        path = write_json(doc)
        with pytest.raises(InputError) as excinfo:
            CategoryLoader(path).run()
        assert excinfo.value.location == path

    def test_category_laws_can_be_skipped(self, write_json):
        doc = dict(C2_DOC, compose=C2_DOC["compose"][:2] + [{"f": "g", "g": "1", "fg": "1"}, {"f": "g", "g": "g", "fg": "1"}])
        path = write_json(doc)
        with pytest.raises(InputError):
            CategoryLoader(path).run()
        assert CategoryLoader(path, validate=False).run().name == "C2"

    def test_module(self, data_dir):
        Q = ModuleLoader(str(data_dir / "module_walking_arrow.json")).run()
        assert Q.name == "hom(-,y)"
        assert Q.carrier.arrows == ("q1", "q2")

    def test_module_acting_outside_carrier(self, data_dir, write_json):
        doc = json.loads((data_dir / "module_walking_arrow.json").read_text(encoding="utf-8"))
        doc["action"][1]["qa"] = "q9"
        with pytest.raises(InputError):
            ModuleLoader(write_json(doc)).run()

    def test_hopf_module_and_comodule_monoid(self, data_dir):
        X = HopfModuleLoader(str(data_dir / "hopf_module_c2.json")).run()
        assert X.module.carrier.arrows == ("q1", "qg")
        Q = ComoduleMonoidLoader(str(data_dir / "comodule_monoid_c2xc2.json")).run()
        assert Q.base.name == "C2"


@pytest.mark.unit
class TestInputErrors:
    """Every malformed input becomes an InputError with a location"""

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match="file not found"):
            SpanLoader(str(tmp_path / "absent.json")).run()

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"objects": [', encoding="utf-8")
        with pytest.raises(InputError) as excinfo:
            SpanLoader(str(path)).run()
        assert "malformed JSON" in str(excinfo.value)
        assert excinfo.value.location.startswith(str(path) + ":1:")

    def test_missing_field(self, write_json):
        path = write_json({"arrows": []})
        with pytest.raises(InputError) as excinfo:
            SpanLoader(path).run()
        assert excinfo.value.location == f"{path}:objects"

    def test_unknown_object(self, write_json):
        path = write_json({"objects": ["x"], "arrows": [{"name": "u", "src": "x", "tgt": "z"}]})
        with pytest.raises(InputError, match="unknown object"):
            SpanLoader(path).run()

    def test_duplicate_objects(self, write_json):
        with pytest.raises(InputError, match="distinct"):
            SpanCollectionLoader(write_json({"objects": ["x", "x"]})).run()

    def test_unknown_field_is_logged(self, write_json, caplog):
        path = write_json({"objects": ["x"], "colour": "blue"})
        with caplog.at_level(logging.WARNING):
            SpanLoader(path).run()
        assert any(
            r.getMessage() == "Unknown input field ignored" and r.field == "colour"
            for r in caplog.records
        )


@pytest.mark.unit
@pytest.mark.bim
class TestBimLoaders:
    """Loading algebras, bimodules and bialgebroids"""

    def test_bimodule_suite(self, data_dir, F5):
        D, modules = BimSuiteLoader(str(data_dir / "bimodules_dual_numbers.json"), F5).run()
        assert D.R.dim == 2
        assert [M.name for M in modules] == ["J", "skew"]
        assert not modules[1].is_symmetric()

    def test_suite_without_modules(self, data_dir, F5):
        D, modules = BimSuiteLoader(str(data_dir / "bimodules_split.json"), F5).run()
        assert modules is None
        assert D.R.is_commutative()

    def test_bimodule_violating_axioms(self, write_json, F5):
        doc = {
            "algebra": DUAL_NUMBERS,
            "modules": [{"name": "bad", "dim": 1, "left": [[[1]], [[1]]], "right": [[[1]], [[0]]]}],
        }
        with pytest.raises(InputError, match="bad"):
            BimSuiteLoader(write_json(doc), F5).run()

    def test_action_shape_checked(self, write_json, F5):
        doc = {"algebra": DUAL_NUMBERS, "modules": [{"dim": 2, "left": [[[1]], [[0]]], "right": [[[1]], [[0]]]}]}
        with pytest.raises(InputError, match="2x2"):
            BimSuiteLoader(write_json(doc), F5).run()

    def test_non_commutative_base(self, write_json, F5):
        mul = [[[0] * 4 for _ in range(4)] for _ in range(4)]
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    mul[i * 2 + j][j * 2 + k][i * 2 + k] = 1
        doc = {"algebra": {"name": "M2", "dim": 4, "mul": mul, "unit": [1, 0, 0, 1]}}
        with pytest.raises(InputError, match="not commutative"):
            BimSuiteLoader(write_json(doc), F5).run()

    @pytest.mark.parametrize("name", ["bialgebroid_c2.json", "bialgebroid_idempotent.json", "bialgebroid_pair.json"])
    def test_bialgebroid_files(self, data_dir, F5, name):
        B, rmodules = BialgebroidLoader(str(data_dir / name), F5).run()
        assert all(N.is_symmetric() for N in rmodules)
        assert check_bialgebroid(B).passed

    def test_pair_file_modules(self, data_dir, F5):
        B, rmodules = BialgebroidLoader(str(data_dir / "bialgebroid_pair.json"), F5).run()
        assert B.dim == 4
        assert [(N.name, N.dim) for N in rmodules] == [("R", 2), ("F", 1)]

    def test_bialgebroid_map_shapes(self, data_dir, write_json, F5):
        doc = json.loads((data_dir / "bialgebroid_c2.json").read_text(encoding="utf-8"))
        doc["s"] = [[1]]
        with pytest.raises(InputError, match="s must be 2x1"):
            BialgebroidLoader(write_json(doc), F5).run()
