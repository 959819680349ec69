import jsonschema

from pytest                       import raises

from ptep.data import RunConfig
from ptep.export_manager import CsvExporter, JsonExporter, SvgExporter


def test_csv_header_and_missing_cells():
    text = CsvExporter().dumps(("a", "b"), [{"a": 0.5}, {"a": 1, "b": "x"}])
    assert text == "a,b\n0.5,\n1,x\n"


def test_csv_seventeen_digits():
    text = CsvExporter().dumps(("x",), [{"x": 1.0 / 3.0}])
    assert text.splitlines()[1] == "0.33333333333333331"


def test_json_document():
    config = RunConfig("dep", params = {"c": 0.0}, output_format = "json")
    data = JsonExporter().document(config, [{"a": 1.0, "b": 2.0}])
    assert data["records"] == [{"a": 1.0, "b": 2.0}]
    assert data["config"]["format"] == "json"


def test_json_rejects_invalid_records():
    config = RunConfig("dep", output_format = "json")
    with raises(jsonschema.ValidationError):
        JsonExporter().document(config, [1.0])


def test_json_file(tmp_path):
    path = tmp_path / "out.json"
    config = RunConfig("dep", output_format = "json", output_path = str(path))
    JsonExporter().export_records(str(path), config, [{"z": 1.0}])
    assert path.read_text().endswith("\n")


def test_svg_render():
    text = SvgExporter().render([([0.0, 1.0, 0.0], [1.0, 0.0, -1.0])],
                                title = "curve")
    assert text.lstrip().startswith("<?xml")
    assert "<svg" in text
