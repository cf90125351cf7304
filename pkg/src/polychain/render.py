"""ASCII and SVG pictures of a chain."""
from __future__ import annotations

from polychain.chain.geometry import GridChain, chain_to_graph

CELL_PX = 32
MARGIN_PX = 8
DOT_RADIUS = 2.5


def render_ascii(chain: GridChain) -> str:
    """One character per cell, '#' for a square and '.' for empty; top row is max y."""
    chain = chain.checked()
    xs = [c.x for c in chain.cells]
    ys = [c.y for c in chain.cells]
    occupied = set(chain.cells)
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        rows.append("".join("#" if (x, y) in occupied else "." for x in range(min(xs), max(xs) + 1)))
    return "\n".join(rows) + "\n"


def render_svg(chain: GridChain) -> str:
    chain = chain.checked()
    graph = chain_to_graph(chain)
    xs = [c.x for c in chain.cells]
    ys = [c.y for c in chain.cells]
    x0, y1 = min(xs), max(ys) + 1
    w = (max(xs) + 1 - x0) * CELL_PX + 2 * MARGIN_PX
    h = (y1 - min(ys)) * CELL_PX + 2 * MARGIN_PX

    def px(x, y):
        # lattice y grows upward, SVG y grows downward
        return MARGIN_PX + (x - x0) * CELL_PX, MARGIN_PX + (y1 - y) * CELL_PX

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">']
    for c in chain.cells:
        x, y = px(c.x, c.y + 1)
        out.append(
            f'<rect x="{x}" y="{y}" width="{CELL_PX}" height="{CELL_PX}" '
            'fill="none" stroke="black" stroke-width="1"/>'
        )
    for vx, vy in graph.vertices:
        x, y = px(vx, vy)
        out.append(f'<circle cx="{x}" cy="{y}" r="{DOT_RADIUS}" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(chain: GridChain, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(chain)
    if fmt == "svg":
        return render_svg(chain)
    if fmt == "text":
        return chain.checked().to_text() + "\n"
    raise ValueError(f"unknown render format {fmt!r}")
