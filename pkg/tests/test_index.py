from fractions import Fraction as F

import pytest

from polychain.chain import GridChain, chain_to_graph
from polychain.index import (
    DegreeError,
    IndexSpecError,
    base_values,
    builtin_index,
    describe_index,
    g_table,
    index_names,
    negate,
    parse_index_spec,
    ti_of_graph,
    ti_of_profile,
)
from polychain.values import format_value, parse_fraction, ties, total


def test_randic_minus_one_pair_values():
    df = builtin_index("randic", "alpha=-1")
    assert df.values() == (F(1, 4), F(1, 6), F(1, 8), F(1, 9), F(1, 12), F(1, 16))
    assert df.exact


def test_constant_and_zagreb2_pair_values():
    assert builtin_index("constant", "value=1").values() == (1,) * 6
    assert builtin_index("zagreb2").values() == (4, 6, 8, 9, 12, 16)
    assert builtin_index("zagreb1").values() == (4, 5, 6, 6, 7, 8)


def test_fractional_alpha_uses_floats():
    df = builtin_index("randic", "alpha=-1/2")
    assert not df.exact
    assert df.f(2, 2) == pytest.approx(0.5)
    assert df.f(3, 4) == pytest.approx(12 ** -0.5)


def test_f_is_symmetric_and_rejects_bad_degrees():
    df = builtin_index("zagreb2")
    assert df.f(2, 4) == df.f(4, 2) == 8
    with pytest.raises(DegreeError):
        df.f(1, 2)
    with pytest.raises(DegreeError):
        df.f(4, 5)


def test_g_table_randic_minus_one():
    g = g_table(builtin_index("randic", "alpha=-1"))
    assert (g.gSS, g.gSC, g.gCS, g.gCC, g.gTT) == (F(1, 3), F(23, 72), F(25, 72), F(5, 16), F(47, 144))
    assert g.gST == F(143, 144) and g.gCT == F(71, 72)
    assert g.gST == g.gSC + g.gCS + g.gTT
    assert g.gCT == g.gCC + g.gCS + g.gTT
    assert g["ST"] == g.gST


def test_g_table_constant():
    g = g_table(builtin_index("constant"))
    assert [g[a] for a in ("SS", "SC", "CS", "CC", "TT")] == [3] * 5
    assert g.gST == g.gCT == 9


def test_base_values():
    b = base_values(builtin_index("randic", "alpha=-1"))
    assert (b.tiSS, b.tiSC) == (F(29, 18), F(19, 12))
    b = base_values(builtin_index("constant"))
    assert (b.tiSS, b.tiSC) == (10, 10)
    assert base_values(builtin_index("zagreb2")).tiSS == 68


def test_negate_is_an_involution():
    df = builtin_index("randic", "alpha=-1")
    n = negate(df)
    assert n.f22 == F(-1, 4)
    assert negate(n).values() == df.values()
    assert negate(builtin_index("constant")).values() == (-1,) * 6


def test_ti_of_graph_examples():
    df = builtin_index("randic", "alpha=-1")
    one = GridChain(((0, 0),)).checked()
    assert ti_of_graph(chain_to_graph(one), df) == 1
    li3 = GridChain(((0, 0), (1, 0), (2, 0))).checked()
    assert ti_of_graph(chain_to_graph(li3), df) == F(29, 18)
    seven = GridChain(((0, 0), (1, 0), (2, 0), (2, -1), (3, -1), (4, -1), (4, 0))).checked()
    assert ti_of_graph(chain_to_graph(seven), df) == F(35, 12)


def test_ti_of_profile_rejects_foreign_degrees():
    with pytest.raises(DegreeError):
        ti_of_profile({(1, 2): 1}, builtin_index("zagreb1"))


@pytest.mark.parametrize(
    "spec",
    ["nope", "randic:beta=1", "randic:alpha", "randic:alpha=1/0", "custom:f22=1", "randic:alpha=x"],
)
def test_bad_index_specs(spec):
    with pytest.raises(IndexSpecError):
        parse_index_spec(spec)


def test_custom_index_and_catalog():
    df = parse_index_spec("custom:f22=1,f23=2,f24=3,f33=4,f34=5,f44=6")
    assert df.values() == (1, 2, 3, 4, 5, 6)
    assert "randic" in index_names()
    assert describe_index("randic").startswith("randic:")
    assert parse_index_spec(df.spec).values() == df.values()


def test_value_helpers():
    assert parse_fraction("-3/6") == F(-1, 2)
    assert parse_fraction("0.25") == F(1, 4)
    with pytest.raises(ZeroDivisionError):
        parse_fraction("1/0")
    with pytest.raises(ValueError):
        parse_fraction("abc")
    assert ties(1.0, 1.0 + 1e-12)
    assert not ties(F(1, 3), F(1, 3) + F(1, 10 ** 12))
    assert total([F(1, 2), F(1, 3)]) == F(5, 6)
    assert isinstance(total([F(1, 2), 0.5]), float)
    assert format_value(F(425, 144)) == "425/144"
    assert format_value(F(1, 4), force_float=True) == "0.25"
