from pytest                       import mark, raises

from ptep.data import (
    ConfigurationError, PtepSettings, RunConfig, Sweep
)


def test_defaults():
    settings = PtepSettings()
    assert settings.zero_threshold == 1e-10
    assert settings.bisect_tol == 1e-13
    assert settings.rank_pivot == 1e-9
    assert settings.triple_root_tol == 1e-6
    assert settings.bracket_step == 0.05
    assert settings.max_radius == 8.0
    assert settings.jobs == 1


def test_parse_from_yaml(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("%YAML 1.1\n---\n"
                    "tolerances:\n"
                    "    zero_threshold: 1.0e-8\n"
                    "bisection:\n"
                    "    max_radius: 4.0\n"
                    "jobs: 2\n")
    settings = PtepSettings.parse_from(str(path))
    assert settings.zero_threshold == 1e-8
    assert settings.bisect_tol == 1e-13
    assert settings.max_radius == 4.0
    assert settings.jobs == 2


def test_empty_yaml(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("")
    assert PtepSettings.parse_from(str(path)).to_JSON_object() == \
        PtepSettings().to_JSON_object()


def test_yaml_must_be_a_mapping(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("- 1\n- 2\n")
    with raises(ConfigurationError):
        PtepSettings.parse_from(str(path))


@mark.parametrize("text", (
    "tolerances: [unclosed\n",
    "jobs: many\n",
    "jobs: [1, 2]\n",
    "tolerances:\n    zero_threshold: small\n",
    "bisection:\n    bracket_step: null\n    max_radius: far\n",
))
def test_malformed_yaml(tmp_path, text):
    path = tmp_path / "settings.yaml"
    path.write_text(text)
    with raises(ConfigurationError):
        PtepSettings.parse_from(str(path))


def test_tolerance_floor():
    with raises(ConfigurationError):
        PtepSettings(bisect_tol = 1e-15)


def test_override():
    settings = PtepSettings().override(zero_threshold = 1e-9, jobs = None)
    assert settings.zero_threshold == 1e-9
    assert settings.jobs == 1
    with raises(ConfigurationError):
        PtepSettings().override(colour = "red")


def test_sweep_needs_two_points():
    with raises(ConfigurationError):
        Sweep("a", 0.0, 1.0, 1)


def test_svg_only_for_boundary():
    with raises(ConfigurationError):
        RunConfig("spectrum", output_format = "svg")
    assert RunConfig("boundary", output_format = "svg").to_stdout


def test_unknown_subcommand():
    with raises(ConfigurationError):
        RunConfig("plot")
