"""Chain encodings, grid geometry and the conversions among them."""

from polychain.chain.words import (
    ACTIONS,
    COMPRESSED,
    OPPOSITE,
    ActionSequence,
    CompressedActionSequence,
    GrammarError,
    InstructionSequence,
    LinkSequence,
    as_compressed,
    compress,
    links_to_actions,
    opposite,
    parse_actions,
    parse_compressed,
    parse_instructions,
    parse_links,
    uncompress,
    value_of_actions,
)
from polychain.chain.geometry import (
    Cell,
    ChainGraph,
    GridChain,
    InvalidChainError,
    chain_to_graph,
    corners,
    derive_links,
    ending_vertices,
    explain_failure,
    instructions_to_cells,
    parse_cells,
    validate_chain,
)
from polychain.chain.families import family_links, random_compressed, segment_links

__all__ = [
    "ACTIONS",
    "ActionSequence",
    "COMPRESSED",
    "Cell",
    "ChainGraph",
    "CompressedActionSequence",
    "GrammarError",
    "GridChain",
    "InstructionSequence",
    "InvalidChainError",
    "LinkSequence",
    "OPPOSITE",
    "as_compressed",
    "chain_to_graph",
    "compress",
    "corners",
    "derive_links",
    "ending_vertices",
    "explain_failure",
    "family_links",
    "instructions_to_cells",
    "links_to_actions",
    "opposite",
    "parse_actions",
    "parse_cells",
    "parse_compressed",
    "parse_instructions",
    "parse_links",
    "random_compressed",
    "segment_links",
    "uncompress",
    "validate_chain",
    "value_of_actions",
]
