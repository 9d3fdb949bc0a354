import pytest

from regdef.constructions import build_theorem2
from regdef.tables import TABLE_1, TABLE_2, canonical_column, parse_edge, reproduce


@pytest.mark.parametrize("table, columns", [(1, 5), (2, 6)])
def test_reproduce(table, columns):
    rep = reproduce(table)
    assert rep.ok, "\n".join(rep.lines())
    assert len(rep.expected) == columns
    assert rep.lines()[-1] == f"table {table}: {columns}/{columns} columns matched"


def test_transcription_shape():
    assert all(len(col) == 6 for col in TABLE_1.values())
    assert all(len(col) == 7 for col in TABLE_2.values())


def test_parse_edge():
    a, b = parse_edge("u1u2'")
    assert (str(a), str(b)) == ("u1", "u2'")
    with pytest.raises(ValueError):
        parse_edge("u1")
    with pytest.raises(ValueError):
        parse_edge("u1-u2")


def test_canonical_order_ignores_orientation():
    g = build_theorem2(7, 1).graph
    a = canonical_column(g, [parse_edge("u1'u1"), parse_edge("v2v2'")])
    b = canonical_column(g, [parse_edge("v2'v2"), parse_edge("u1u1'")])
    assert a == b == ["u1u1'", "v2v2'"]


def test_unknown_table():
    with pytest.raises(KeyError):
        reproduce(3)


def test_diff_is_reported(monkeypatch):
    import regdef.tables as tables

    broken = dict(TABLE_1, x1=TABLE_1["x1"][:-1] + ["v3v1'"])
    monkeypatch.setitem(tables.TABLES, 1, (7, broken))
    rep = tables.reproduce(1)
    assert not rep.ok
    assert any(line.startswith("x1: DIFF") for line in rep.lines())
