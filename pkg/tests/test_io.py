import json

import pytest

from flatland import (
    TriFormatError,
    build_triangulation,
    format_tri,
    from_json,
    parse_tri,
    read_tri,
    to_json_dict,
    write_tri,
)
from tests.conftest import TETRAHEDRON, fam


def test_round_trip_text():
    t = fam("T(9,1,2)")
    n, faces = parse_tri(format_tri(t))
    assert build_triangulation(n, faces) == t


def test_round_trip_json():
    t = fam("B(3,4)")
    n, faces = from_json(json.dumps(to_json_dict(t)))
    assert build_triangulation(n, faces) == t


def test_comments_and_blank_lines_ignored():
    text = "# a comment\n\n4 4\n0 1 2\n# interior comment\n0 1 3\n0 2 3\n1 2 3\n"
    n, faces = parse_tri(text)
    assert (n, len(faces)) == (4, 4)


def test_file_round_trip(tmp_path):
    t = build_triangulation(*TETRAHEDRON)
    path = tmp_path / "tetra.tri"
    write_tri(t, path, comments=["tetrahedron"])
    assert read_tri(path) == (4, list(t.faces))
    assert path.read_text().startswith("# tetrahedron\n4 4\n")


def test_json_file_dispatch(tmp_path):
    t = fam("Q(5,2)")
    path = tmp_path / "q52.json"
    path.write_text(json.dumps(to_json_dict(t)))
    n, faces = read_tri(path)
    assert build_triangulation(n, faces) == t


class TestErrors:
    def test_bad_header_reports_line(self):
        with pytest.raises(TriFormatError, match="line 1"):
            parse_tri("x y\n")

    def test_bad_face_reports_line(self):
        with pytest.raises(TriFormatError, match="line 3"):
            parse_tri("# hi\n4 4\n0 1\n")

    def test_non_increasing_face(self):
        with pytest.raises(TriFormatError, match="strictly increasing"):
            parse_tri("4 1\n2 1 0\n")

    def test_face_count_mismatch(self):
        with pytest.raises(TriFormatError, match="promised 4 faces"):
            parse_tri("4 4\n0 1 2\n")

    def test_missing_header(self):
        with pytest.raises(TriFormatError, match="missing header"):
            parse_tri("# only comments\n")

    def test_bad_json(self):
        with pytest.raises(TriFormatError):
            from_json("{not json")
        with pytest.raises(TriFormatError):
            from_json('{"n": 4}')
        with pytest.raises(TriFormatError, match="three vertices"):
            from_json('{"n": 4, "faces": [[0, 1]]}')
