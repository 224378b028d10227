"""Gram matrix assembly and JSON/CSV serialization."""

import json
from fractions import Fraction

import pytest

from legoverlap import GramMatrix, build_gram_matrix, format_exact, parse_exact


def test_orthogonality_matrix():
    gm = build_gram_matrix(0, 0, 2, 2)
    assert [format_exact(gm.entries[n][n]) for n in range(3)] == ["2", "2/3", "2/5"]
    assert all(gm.entries[n][m] == 0 for n in range(3) for m in range(3) if n != m)


def test_first_derivative_diagonal():
    gm = build_gram_matrix(1, 1, 3, 3)
    assert [format_exact(gm.entries[n][n]) for n in range(4)] == ["0", "2", "6", "12"]
    assert all(v == 0 for v in gm.entries[0])


def test_p_dp_matrix():
    gm = build_gram_matrix(0, 1, 2, 2)
    for n in range(3):
        for m in range(3):
            expected = "2" if (n, m) in {(0, 1), (1, 2)} else "0"
            assert format_exact(gm.entries[n][m]) == expected, (n, m)


def test_json_round_trip():
    gm = build_gram_matrix(2, 3, 6, 5)
    again = GramMatrix.from_json(gm.to_json())
    assert again == gm


def test_csv_and_json_cells_identical():
    gm = build_gram_matrix(1, 2, 4, 4)
    json_cells = json.loads(gm.to_json())["entries"]
    lines = gm.to_csv().strip().splitlines()
    assert lines[0] == "n\\m,0,1,2,3,4"
    for n, line in enumerate(lines[1:]):
        cells = line.split(",")
        assert cells[0] == str(n)
        assert cells[1:] == json_cells[n]


def test_json_schema_fields():
    data = json.loads(build_gram_matrix(1, 0, 2, 3, method="oracle").to_json())
    assert data == {
        "q": 1,
        "k": 0,
        "n_max": 2,
        "m_max": 3,
        "method": "oracle",
        "entries": data["entries"],
    }
    assert len(data["entries"]) == 3
    assert all(len(row) == 4 for row in data["entries"])
    assert all(isinstance(cell, str) for row in data["entries"] for cell in row)


def test_transpose_matches_swapped_query():
    a = build_gram_matrix(2, 1, 4, 6)
    b = build_gram_matrix(1, 2, 6, 4)
    assert a.entries == tuple(zip(*b.entries))


def test_odd_parity_entries_are_zero():
    gm = build_gram_matrix(1, 2, 5, 5)
    for n in range(6):
        for m in range(6):
            if (n + m + 3) % 2:
                assert gm.entries[n][m] == 0


def test_oracle_method_matches_closed_form():
    a = build_gram_matrix(2, 2, 5, 5)
    b = build_gram_matrix(2, 2, 5, 5, method="oracle")
    assert a.entries == b.entries
    assert (a.method, b.method) == ("closed_form", "oracle")


def test_rejects_unknown_method_and_bad_bounds():
    with pytest.raises(ValueError):
        build_gram_matrix(0, 0, 1, 1, method="guess")
    with pytest.raises(ValueError):
        build_gram_matrix(0, 0, -1, 1)


@pytest.mark.parametrize(
    "value",
    [Fraction(0), Fraction(7), Fraction(-19641872250), Fraction(2, 3), Fraction(-5, 8)],
)
def test_format_parse_round_trip(value):
    assert parse_exact(format_exact(value)) == value
