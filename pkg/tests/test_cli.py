"""End-to-end command line tests, driven through main(argv)."""

import json

import pytest

from toricarr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def example_a_file(tmp_path, capsys):
    path = tmp_path / "example-a.json"
    code, out = run(capsys, "example", "exA")
    assert code == 0
    path.write_text(out)
    return str(path)


def test_example_emits_a_loadable_arrangement_file(capsys, example_a_file):
    data = json.loads(open(example_a_file).read())
    assert data["name"] == "example-a"
    assert data["dimension"] == 2
    assert len(data["hypersurfaces"]) == 4
    assert data["chain"] == [[0, 1]]


def test_example_aliases_match_their_long_names(capsys):
    _, short = run_json(capsys, "example", "typeC-2")
    _, long = run_json(capsys, "example", "type-c-2")
    assert short == long


def test_unknown_example_is_a_parse_error(capsys):
    code, data = run_json(capsys, "example", "no-such-thing")
    assert code == 1
    assert data["error"]["category"] == "parse"


def test_classify(capsys, example_a_file):
    code, data = run_json(capsys, "classify", example_a_file,
                          "--format", "json")
    assert code == 0
    assert data["classification"] == "strictly-supersolvable"
    assert data["fiber_ranks"] == [3, 3]


def test_poset(capsys, example_a_file):
    code, data = run_json(capsys, "poset", example_a_file, "--format", "json")
    assert code == 0
    assert len(data["layers"]) == 7
    assert len(data["covers"]) == 10


def test_hrm(capsys, example_a_file):
    code, data = run_json(capsys, "hrm", example_a_file, "--format", "json")
    assert code == 0
    (stage,) = data["stages"]
    assert stage["stage"] == 2 and stage["n"] == 3
    rows = {tuple(r["label"]): r["coords"] for r in stage["rows"]}
    assert rows[("axis", 1)] == [2, 0, 0]


def test_trace_needs_a_stage_selector(capsys, example_a_file):
    code, data = run_json(capsys, "trace", example_a_file)
    assert code == 1
    assert data["error"]["category"] == "parse"


def test_trace_all(capsys, example_a_file):
    code, data = run_json(capsys, "trace", example_a_file, "--all",
                          "--format", "json")
    assert code == 0
    (stage,) = data["stages"]
    assert len(stage["traces"]) == 3
    for tr in stage["traces"]:
        assert tr["permutation"] == [1, 2, 3]


def test_pi1(capsys, example_a_file):
    code, data = run_json(capsys, "pi1", example_a_file, "--format", "json")
    assert code == 0
    assert len(data["generators"]) == 6
    assert len(data["relations"]) == 9


def test_lcs_and_betti_and_tc(capsys, example_a_file):
    code, data = run_json(capsys, "lcs", example_a_file, "--depth", "2",
                          "--format", "json")
    assert code == 0
    assert data["lcs_ranks"] == [6, 6]
    code, data = run_json(capsys, "betti", example_a_file, "--format", "json")
    assert code == 0
    assert data["betti"] == [1, 6, 9]
    code, data = run_json(capsys, "tc", example_a_file, "--format", "json")
    assert code == 0
    assert data["tc"] == 5


def test_cohomology_ideal_dimension(capsys, example_a_file):
    code, data = run_json(capsys, "cohomology", example_a_file,
                          "--format", "json")
    assert code == 0
    assert len(data["ideal_basis"]) == 15 - 9


def test_json_output_is_deterministic(capsys, example_a_file):
    _, first = run(capsys, "lcs", example_a_file, "--format", "json")
    _, second = run(capsys, "lcs", example_a_file, "--format", "json")
    assert first == second


def test_text_output_names_generators(capsys, example_a_file):
    code, out = run(capsys, "pi1", example_a_file)
    assert code == 0
    assert out.splitlines()[0].startswith("generators: y(0,1)")


def test_bad_file_reports_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, data = run_json(capsys, "classify", str(path))
    assert code == 1
    assert data["error"]["category"] == "parse"


def test_missing_fields_report_parse_error(capsys, tmp_path):
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"dimension": 2}))
    code, data = run_json(capsys, "classify", str(path))
    assert code == 1
    assert data["error"]["category"] == "parse"


def test_invalid_chain_is_infeasible(capsys, tmp_path):
    path = tmp_path / "arr.json"
    path.write_text(json.dumps({
        "dimension": 2,
        "characters": [[0, 1], [1, 0], [1, 1]],
        "chain": [[1, 1]],
    }))
    code, data = run_json(capsys, "betti", str(path))
    assert code == 1
    assert data["error"]["category"] == "infeasible"


def test_chainless_arrangement_is_infeasible(capsys, tmp_path):
    path = tmp_path / "arr.json"
    path.write_text(json.dumps({
        "dimension": 2,
        "characters": [[1, 0], [0, 1], [1, 1], [1, -1], [1, 2]],
    }))
    code, data = run_json(capsys, "betti", str(path))
    assert code == 1
    assert data["error"]["category"] == "infeasible"
