import pytest

from polychain.chain import GridChain, InvalidChainError, instructions_to_cells
from polychain.render import render, render_ascii, render_svg


def test_ascii_linear():
    assert render_ascii(instructions_to_cells("RR")) == "###\n"


def test_ascii_u_chain():
    assert render_ascii(instructions_to_cells("RRDDLL")) == "###\n..#\n###\n"


def test_svg_pc5():
    svg = render_svg(instructions_to_cells("RDDL"))
    assert svg.startswith("<svg ")
    assert svg.count("<rect") == 5
    assert svg.count("<circle") == 12
    assert 'width="32" height="32"' in svg and 'stroke="black"' in svg


def test_svg_is_deterministic():
    c = instructions_to_cells("RRDDLD")
    assert render_svg(c) == render_svg(GridChain(c.cells))


def test_render_dispatch_and_errors():
    c = instructions_to_cells("RR")
    assert render(c, "text") == "0 0; 1 0; 2 0\n"
    with pytest.raises(ValueError):
        render(c, "png")
    with pytest.raises(InvalidChainError):
        render_ascii(GridChain(((0, 0), (1, 0), (1, -1), (0, -1))))
