import io
import json

import pytest

from conftest import CUBE_PTS, EXAMPLE_PTS
from reflexive_mirror import (DegenerateInput, InternalTheoremViolation, NotReflexive,
                              ParseError, batch_compute, classify, emit_table,
                              hull_from_points, parse_vertex_file)
from reflexive_mirror.normal_form import normal_form_key
from reflexive_mirror.pipeline import format_vertex_file

EXAMPLE_COLS = "3 4\n1 0 0 -4\n0 1 0 -4\n0 0 1 -3\n"
EXAMPLE_ROWS = "4 3\n1 0 0\n0 1 0\n0 0 1\n-4 -4 -3\n"


def block(points):
    return format_vertex_file([hull_from_points(points)])


# -- parsing --------------------------------------------------------------------

def test_parse_columns():
    [P] = parse_vertex_file(EXAMPLE_COLS)
    assert set(P.vertices) == set(EXAMPLE_PTS)


def test_parse_rows_gives_same_polytope():
    assert parse_vertex_file(EXAMPLE_ROWS) == parse_vertex_file(EXAMPLE_COLS)


def test_parse_accepts_bytes_and_streams():
    assert parse_vertex_file(EXAMPLE_COLS.encode()) == parse_vertex_file(io.StringIO(EXAMPLE_COLS))
    assert parse_vertex_file(io.BytesIO(EXAMPLE_COLS.encode())) == parse_vertex_file(EXAMPLE_COLS)


def test_parse_comments_blank_lines_and_annotations():
    text = "# header comment\n\n3 4 M:9 5 N:21 4 H:6,38\n1 0 0 -4\n\n0 1 0 -4\n# mid\n0 0 1 -3\n"
    [P] = parse_vertex_file(text)
    assert set(P.vertices) == set(EXAMPLE_PTS)


def test_parse_several_blocks():
    polys = parse_vertex_file(EXAMPLE_COLS + EXAMPLE_ROWS + block(CUBE_PTS))
    assert len(polys) == 3 and len(polys[2].vertices) == 8


def test_parse_empty():
    assert parse_vertex_file("") == []
    assert parse_vertex_file("# nothing\n\n") == []


@pytest.mark.parametrize("text, line", [
    ("5 7\n", 1),
    ("3 3\n1 0 0\n0 1 0\n0 0 1\n", 1),
    ("\n# c\nfoo bar\n", 3),
    ("3 4\n1 0 0 -4\n0 1 0\n0 0 1 -3\n", 3),
    ("3 4\n1 0 0 -4\n0 1 x -4\n0 0 1 -3\n", 3),
    ("3 4\n1 0 0 -4\n0 1 0 -4\n", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_vertex_file(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_degenerate_block_reports_index():
    text = EXAMPLE_COLS + "3 4\n0 1 0 1\n0 0 1 1\n0 0 0 0\n"
    with pytest.raises(DegenerateInput, match="block 1"):
        parse_vertex_file(text)


def test_round_trip_keeps_normal_forms(corpus):
    again = parse_vertex_file(format_vertex_file(corpus))
    assert [normal_form_key(P) for P in again] == [normal_form_key(P) for P in corpus]


# -- batch records ------------------------------------------------------------------

def test_example_record(example):
    [r] = batch_compute([example])
    assert r.id == 1 and r.ok
    assert r.hodge_xi_x.as_tuple() == (7, 55)
    assert r.hodge_z.as_tuple() == (13, 37)
    assert r.self_dual is False
    assert r.identity_pass and r.mirror_pass and r.failures == []


def test_simplex_record(simplex):
    [r] = batch_compute([simplex])
    assert r.hodge_xi_x.as_tuple() == (2, 86)


def test_strict_mode_aborts_on_non_reflexive(example):
    bad = hull_from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    with pytest.raises(NotReflexive):
        batch_compute([example, bad])


def test_lenient_mode_records_error(example):
    bad = hull_from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    records = batch_compute([example, bad], lenient=True)
    assert records[0].ok and not records[1].ok
    assert "not reflexive" in records[1].error


def test_theorem_failure_raises(monkeypatch, example):
    from reflexive_mirror import pipeline
    from reflexive_mirror.identities import Check

    real = pipeline.verify_identities

    def broken(P, index):
        report = real(P, index)
        report.checks["sum_28"] = Check(27, 28)
        return report

    monkeypatch.setattr(pipeline, "verify_identities", broken)
    with pytest.raises(InternalTheoremViolation, match="sum_28"):
        batch_compute([example])


def test_parallel_matches_serial(corpus):
    serial = batch_compute(corpus[:12], jobs=1)
    parallel = batch_compute(corpus[:12], jobs=2)
    assert [(r.id, r.normal_form_key, r.hodge_z) for r in serial] == \
           [(r.id, r.normal_form_key, r.hodge_z) for r in parallel]


# -- classification -----------------------------------------------------------------

def test_classify_cube_shear_octahedron(cube, octahedron):
    sheared = cube.transform([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    c = classify(batch_compute([cube, sheared, octahedron]))
    assert c.n_classes == 2 and c.n_duplicates == 1
    assert c.self_dual == []
    cube_key, octa_key = list(c.classes)
    assert c.classes[cube_key] == [1, 2]
    assert c.dual_of[cube_key] == octa_key and c.dual_of[octa_key] == cube_key
    d = c.as_dict()
    assert d["class_list"][0]["dual_class"] == 2 and d["class_list"][1]["dual_class"] == 1


def test_classify_empty():
    c = classify([])
    assert c.n_classes == 0 and c.as_dict()["classes"] == 0


def test_classify_corpus(corpus):
    c = classify(batch_compute(corpus))
    assert c.n_classes == len(corpus) == 80
    assert len(c.self_dual) == 2
    for key, dual in c.dual_of.items():
        if dual in c.dual_of:
            assert c.dual_of[dual] == key


# -- tables -------------------------------------------------------------------------

def test_table1_row(example):
    out = emit_table(batch_compute([example]), "csv", "table1").decode().splitlines()
    assert out[0] == "id,alpha_x,alpha_y,h11_xi_x,h12_xi_x,h11_xi_y,h12_xi_y"
    assert out[1] == "1,4,16,7,55,55,7"


def test_table2_row(example):
    out = emit_table(batch_compute([example]), "csv", "table2").decode().splitlines()
    assert out[0] == "id,self_dual,h11_z,h12_z,h11_z_dual,h12_z_dual"
    assert out[1].endswith(",false,13,37,37,13")


def test_empty_table_is_header_only():
    assert emit_table([], "csv", "table1") == b"id,alpha_x,alpha_y,h11_xi_x,h12_xi_x,h11_xi_y,h12_xi_y\n"


def test_json_table(example):
    rows = json.loads(emit_table(batch_compute([example]), "json", "2"))
    assert rows == [{"id": 1, "self_dual": False, "h11_z": 13, "h12_z": 37,
                     "h11_z_dual": 37, "h12_z_dual": 13}]


def test_table_rejects_unknown():
    with pytest.raises(ValueError):
        emit_table([], "xml", "table1")
    with pytest.raises(ValueError):
        emit_table([], "csv", "table3")


def test_lenient_rows_skip_errors(example):
    bad = hull_from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    out = emit_table(batch_compute([bad, example], lenient=True), "csv", "table1").decode()
    assert out.splitlines()[1:] == ["2,4,16,7,55,55,7"]


def test_tables_are_deterministic(corpus):
    a = emit_table(batch_compute(corpus), "csv", "table2")
    b = emit_table(batch_compute(corpus), "csv", "table2")
    assert a == b


def test_bundled_census_is_in_normal_form():
    from reflexive_mirror import normal_form
    from reflexive_mirror.corpus import load_census
    census = load_census()
    assert len(census) == 4319
    assert all(sorted(normal_form(P)) == list(P.vertices) for P in census[::97])
    counts = [len(P.lattice_points) for P in census]
    assert min(counts) == 5 and max(counts) == 39
    assert max(len(P.vertices) for P in census) == 14
