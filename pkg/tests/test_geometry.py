import pytest

from polychain.chain import (
    GridChain,
    InvalidChainError,
    chain_to_graph,
    derive_links,
    explain_failure,
    instructions_to_cells,
    parse_cells,
    validate_chain,
)

U7 = ((0, 0), (1, 0), (2, 0), (2, -1), (2, -2), (1, -2), (0, -2))
PC5 = ((0, 0), (1, 0), (1, -1), (1, -2), (0, -2))
SEVEN = ((0, 0), (1, 0), (2, 0), (2, -1), (3, -1), (4, -1), (4, 0))


def test_instructions_to_cells():
    assert instructions_to_cells("R").cells == ((0, 0), (1, 0))
    assert instructions_to_cells("RRDDLL").cells == U7
    assert instructions_to_cells("RRDDLD").cells == ((0, 0), (1, 0), (2, 0), (2, -1), (2, -2), (1, -2), (1, -3))


def test_validate_chain():
    assert validate_chain(GridChain(U7)) == (True, None)
    block = GridChain(((0, 0), (1, 0), (1, -1), (0, -1)))
    assert validate_chain(block) == (False, 4)
    assert explain_failure(block, 4) == "cell 4 adjacent to cell 1"
    spiral = instructions_to_cells("RDLU")
    ok, idx = validate_chain(spiral)
    assert not ok and idx <= 5


def test_corner_touch_is_invalid():
    # cell 7 meets cell 1 only at a corner
    c = instructions_to_cells("RDDLLU")
    assert validate_chain(c) == (False, 7)
    assert explain_failure(c, 7) == "cell 7 shares a corner with cell 1"


def test_non_adjacent_cells_rejected_on_construction():
    with pytest.raises(InvalidChainError):
        GridChain(((0, 0), (2, 0)))
    with pytest.raises(InvalidChainError):
        GridChain(())


def test_checked_and_graph_require_validation():
    with pytest.raises(InvalidChainError):
        chain_to_graph(GridChain(U7))
    with pytest.raises(InvalidChainError):
        GridChain(((0, 0), (1, 0), (1, -1), (0, -1))).checked()


def test_chain_graph_counts():
    g = chain_to_graph(GridChain(((0, 0),)).checked())
    assert len(g.vertices) == 4 and len(g.edges) == 4 and g.degree_histogram() == {2: 4}
    g = chain_to_graph(GridChain(((0, 0), (1, 0), (2, 0))).checked())
    assert (len(g.vertices), len(g.edges)) == (8, 10)
    g = chain_to_graph(GridChain(SEVEN).checked())
    assert (len(g.vertices), len(g.edges)) == (16, 22)
    assert g.degree_histogram() == {2: 7, 3: 6, 4: 3}
    assert sum(g.degree.values()) == 2 * len(g.edges)


def test_derive_links():
    assert str(derive_links(GridChain(PC5).checked())) == "1,1,2,1,3"
    assert str(derive_links(instructions_to_cells("RRRR").checked())) == "1,1,1,1,1"
    assert str(derive_links(GridChain(U7).checked())) == "1,1,1,2,1,3,1"


def test_cell_text_roundtrip():
    c = GridChain(U7)
    assert c.to_text() == "0 0; 1 0; 2 0; 2 -1; 2 -2; 1 -2; 0 -2"
    assert parse_cells(c.to_text()) == c
    assert parse_cells("0,0;1,0").cells == ((0, 0), (1, 0))
    with pytest.raises(ValueError):
        parse_cells("0 0; 1")
    with pytest.raises(ValueError):
        parse_cells("0 0;; 1 0")
