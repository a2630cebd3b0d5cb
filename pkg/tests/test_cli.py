import json
import subprocess
import sys

import pytest

from conftest import CUBE_PTS, EXAMPLE_PTS
from reflexive_mirror import hull_from_points
from reflexive_mirror.cli import main
from reflexive_mirror.pipeline import format_vertex_file

NOT_REFLEXIVE = "3 4\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.txt"
    path.write_text(format_vertex_file([hull_from_points(EXAMPLE_PTS),
                                        hull_from_points(CUBE_PTS)]))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys, example_file):
    code, out, _ = run(capsys, "check", example_file)
    data = json.loads(out)
    assert code == 0
    assert [e["reflexive"] for e in data] == [True, True]
    assert all(e["identities"]["passed"] for e in data)


def test_dual_output_parses_back(capsys, example_file):
    code, out, _ = run(capsys, "dual", example_file)
    assert code == 0
    from reflexive_mirror import parse_vertex_file
    duals = parse_vertex_file(out)
    assert len(duals[0].lattice_points) == 21
    assert len(duals[1].vertices) == 6


def test_stats(capsys, example_file):
    code, out, _ = run(capsys, "stats", example_file)
    first = json.loads(out)[0]
    assert first["polytope"]["l"] == 9 and first["dual"]["l"] == 21
    assert first["polytope"]["f_vector"] == [4, 6, 4]
    assert first["dual"]["normalized_volume"] == 36


def test_hodge(capsys, example_file):
    code, out, _ = run(capsys, "hodge", example_file, "--jobs", "1")
    first = json.loads(out)[0]
    assert first["x"] == {"h2": 6, "h3": 38, "alpha": 4}
    assert first["xi_x"] == {"h11": 7, "h12": 55}
    assert first["z_dual"] == {"h11": 37, "h12": 13}


def test_mirror(capsys, example_file):
    code, out, _ = run(capsys, "mirror", example_file)
    data = json.loads(out)
    assert code == 0 and all(e["xi"]["passed"] and e["z"]["passed"] for e in data)


def test_classify(capsys, example_file):
    code, out, _ = run(capsys, "classify", example_file, "--jobs", "1")
    data = json.loads(out)
    assert data["classes"] == 2 and data["self_dual_classes"] == 0


def test_table_to_file(capsys, example_file, tmp_path):
    target = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table", example_file, "--which", "1", "-o", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[1] == "1,4,16,7,55,55,7"


def test_table_json(capsys, example_file):
    code, out, _ = run(capsys, "table", example_file, "--which", "2", "--format", "json")
    assert json.loads(out)[0]["h11_z"] == 13


def test_lambda(capsys):
    code, out, _ = run(capsys, "lambda")
    data = json.loads(out)
    assert data["lambda"] == 4320 and data["kernel_generator"] == [6, -11]


def test_normal_form(capsys, example_file):
    code, out, _ = run(capsys, "normal-form", example_file)
    assert len(json.loads(out)[0]["normal_form"]) == 4


def test_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(format_vertex_file([hull_from_points(EXAMPLE_PTS)])))
    code, out, _ = run(capsys, "table", "-", "--which", "2")
    assert out.splitlines()[1] == "1,false,13,37,37,13"


def test_strict_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text(NOT_REFLEXIVE)
    code, _, err = run(capsys, "table", str(path), "--which", "1")
    assert code == 1 and "not reflexive" in err


def test_lenient_continues(capsys, tmp_path):
    path = tmp_path / "mixed.txt"
    path.write_text(NOT_REFLEXIVE + format_vertex_file([hull_from_points(EXAMPLE_PTS)]))
    code, out, _ = run(capsys, "table", str(path), "--which", "1", "--lenient")
    assert code == 0
    assert out.splitlines()[1:] == ["2,4,16,7,55,55,7"]


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("5 7\n")
    code, _, err = run(capsys, "hodge", str(path))
    assert code == 1 and "line 1" in err


def test_missing_file_exit_code(capsys, tmp_path):
    code, _, _ = run(capsys, "check", str(tmp_path / "absent.txt"))
    assert code == 1


def test_theorem_violation_exit_code(capsys, monkeypatch, example_file):
    from reflexive_mirror import InternalTheoremViolation, cli

    def boom(*a, **k):
        raise InternalTheoremViolation("forced")

    monkeypatch.setattr(cli, "batch_compute", boom)
    code, _, err = run(capsys, "table", example_file, "--which", "1")
    assert code == 2 and "forced" in err


def test_console_script_determinism(example_file):
    cmd = [sys.executable, "-m", "reflexive_mirror", "table", example_file, "--which", "2"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"id,self_dual")
