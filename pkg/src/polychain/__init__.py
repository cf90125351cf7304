"""Extremal degree-based indices over general polyomino chains."""

from polychain.index import (
    BaseValues,
    DegreeFunction,
    GTable,
    base_values,
    builtin_index,
    g_table,
    negate,
    parse_index_spec,
    ti_of_graph,
)
from polychain.values import format_value

__all__ = [
    "BaseValues",
    "DegreeFunction",
    "GTable",
    "base_values",
    "builtin_index",
    "format_value",
    "g_table",
    "negate",
    "parse_index_spec",
    "ti_of_graph",
]

__version__ = "0.1.0"
