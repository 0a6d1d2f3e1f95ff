"""File format round trips, catalog integrity, and report determinism."""

import pytest

from lieq.capability import center_report
from lieq.errors import AlgebraSyntaxError, DuplicateBracket, ValidationError
from lieq.io_catalog import (
    Catalog,
    DEFAULT_CATALOG,
    parse,
    resolve_input,
    serialize,
    write_report,
)
from lieq.liealg import validate
from lieq.qtensor import right_exact_check
from lieq.verify import default_right_exact_pairs


def test_parse_minimal():
    g = parse("ring: Z\ngenerators: e1\n")
    assert g.orders == (0,) and g.is_abelian()


def test_parse_heisenberg_with_comments():
    g = parse("# upper triangular\nring: Z\n"
              "generators: x y z\n"
              "orders: 0 0 0\n"
              "bracket: [x,y] = z   # the only bracket\n")
    assert g.table[0][1] == (0, 0, 1)


def test_parse_combinations_and_reversed_pairs():
    g = parse("ring: Z/5\ngenerators: a b c\n"
              "bracket: [b,a] = -2*c + a\n")
    # [a,b] = 2c - a, canonicalized mod 5
    assert g.table[0][1] == (4, 0, 2)


def test_parse_errors():
    with pytest.raises(AlgebraSyntaxError):
        parse("ring: Q\ngenerators: x\n")
    with pytest.raises(AlgebraSyntaxError):
        parse("ring: Z\ngenerators: x\nbracket: [x,x] = x\n")
    with pytest.raises(DuplicateBracket):
        parse("ring: Z\ngenerators: x y z\nbracket: [x,y] = z\n"
              "bracket: [y,x] = z\n")
    with pytest.raises(AlgebraSyntaxError):
        parse("ring: Z\ngenerators: x y\nbracket: [x,w] = y\n")
    with pytest.raises(AlgebraSyntaxError):
        parse("generators: x\n")
    with pytest.raises(ValidationError):
        parse("ring: Z\ngenerators: x y z\n"
              "bracket: [x,y] = z\nbracket: [x,z] = x\n")


def test_roundtrip_catalog():
    for name in DEFAULT_CATALOG:
        g = Catalog.get(name)
        assert validate(g).ok
        g2 = parse(serialize(g), g.name)
        assert g2.orders == g.orders
        assert g2.table == g.table


def test_resolve_input(tmp_path):
    path = tmp_path / "h3.lieq"
    path.write_text(serialize(Catalog.get("heisenberg")), encoding="utf-8")
    g = resolve_input(str(path))
    assert g.orders == (0, 0, 0)
    assert resolve_input("catalog:Z").orders == (0,)
    with pytest.raises(KeyError):
        resolve_input("catalog:nope")


def test_write_report_deterministic(tmp_path):
    rep1 = center_report(Catalog.get("Z"), 2)
    rep2 = center_report(Catalog.get("Z"), 2)
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    write_report(rep1, p1)
    write_report(rep2, p2)
    assert p1.read_bytes() == p2.read_bytes()
    text = p1.read_text()
    assert '"schema_version": 1' in text


def test_zero_algebra_report_all_trivial():
    rep = center_report(Catalog.get("zero"), 3)
    d = rep.to_json_dict()
    for c in d["centers"].values():
        assert c["invariant_factors"] == []
    assert d["verdicts"]["q_capable"]["value"] is True
    assert d["verdicts"]["strongly_q_capable"]["value"] is True


def test_sequence_report_writable(tmp_path):
    label, g, h = default_right_exact_pairs()[0]
    rep = right_exact_check(g, h, 2, "exterior")
    write_report(rep, tmp_path / "seq.json")
    assert "exact_middle" in (tmp_path / "seq.json").read_text()
