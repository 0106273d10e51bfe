import pytest

from pystirling.base import TriangleKind, base_triangle
from pystirling.bfile import (
    BFile, Mismatch, compare, parse_bfile, read_bfile, rows_needed, span, triangle_terms,
)
from pystirling.errors import BFileError


def test_parse_skips_comments_and_blanks():
    bfile = parse_bfile("# A000000\n\n0 1\n1 -2\n  2   30  \n")
    assert bfile.terms == ((0, 1), (1, -2), (2, 30))
    assert bfile.indices == [0, 1, 2]
    assert bfile.values == [1, -2, 30]
    assert len(bfile) == 3


@pytest.mark.parametrize("text, line", [
    ("0 1\n1\n", 2),
    ("0 1\n1 x\n", 2),
    ("# c\n3 1\n2 1\n", 3),
    ("0 1 2\n", 1),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(BFileError) as excinfo:
        parse_bfile(text)
    assert excinfo.value.line_number == line
    assert str(excinfo.value).startswith(f"line {line}:")


def test_read_bfile(tmp_path):
    path = tmp_path / "b000001.txt"
    path.write_text("1 5\n2 7\n", encoding="utf-8")
    assert read_bfile(str(path)).values == [5, 7]


@pytest.mark.parametrize("count, skip, expected", [(1, False, 0), (3, False, 1), (4, False, 2),
                                                   (1, True, 1), (3, True, 2), (4, True, 3)])
def test_rows_needed(count, skip, expected):
    assert rows_needed(count, skip) == expected


def test_triangle_terms():
    build = lambda last: base_triangle(TriangleKind.BINOMIAL, last)
    assert triangle_terms(build, 5) == [1, 1, 1, 1, 2]
    assert triangle_terms(build, 4, skip_column0=True) == [1, 2, 1, 3]
    assert triangle_terms(build, 0) == []


def test_compare_with_offset():
    bfile = parse_bfile("1 10\n2 20\n3 30\n9 99\n")
    result = compare(bfile, [10, 20, 30], offset=1)
    assert result.ok
    assert result.compared == 3


def test_compare_reports_first_mismatch():
    bfile = parse_bfile("0 1\n1 2\n2 3\n")
    result = compare(bfile, [1, 5, 7])
    assert not result.ok
    assert result.mismatch == Mismatch(index=1, expected=2, actual=5)


def test_empty_bfile_matches():
    assert compare(BFile(()), [1, 2, 3]).ok
    assert span(BFile(()), 0) == 0


def test_span():
    bfile = parse_bfile("1 1\n2 1\n5 1\n")
    assert span(bfile, 1) == 5
    assert span(bfile, 0) == 6


def test_read_rejects_undecodable_bytes(tmp_path):
    path = tmp_path / "b000001.txt"
    path.write_bytes(b"0 1\n1 \xff\xfe\n")
    with pytest.raises(BFileError, match="not UTF-8"):
        read_bfile(str(path))
