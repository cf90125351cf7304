from fractions import Fraction as F

import pytest

from polychain.chain import GridChain, chain_to_graph, derive_links, validate_chain
from polychain.index import builtin_index
from polychain.oracle import (
    brute_extremes,
    canonical_key,
    chain_counts,
    chain_records,
    enumerate_chains,
    restricted_chains,
)

PC5 = GridChain(((0, 0), (1, 0), (1, -1), (1, -2), (0, -2)))

# (link-word count, congruence-class count), frozen from the exhaustive search
COUNTS = {
    1: (1, 1), 2: (1, 1), 3: (2, 2), 4: (4, 3), 5: (9, 7), 6: (21, 13),
    7: (49, 30), 8: (116, 64), 9: (274, 150), 10: (648, 338),
}


@pytest.mark.parametrize("n", sorted(COUNTS))
def test_chain_counts(n):
    assert chain_counts(n) == COUNTS[n]


def test_congruence_mode_matches_counts():
    assert len(list(enumerate_chains(3, "congruence"))) == 2
    assert len(list(enumerate_chains(4, "congruence"))) == 3


def test_pc5_is_found():
    assert PC5.cells in {c.cells for c in enumerate_chains(5)}


def test_every_chain_is_valid_with_expected_size():
    for n in range(1, 9):
        for c in enumerate_chains(n):
            assert validate_chain(c) == (True, None)
            g = chain_to_graph(c)
            assert len(g.edges) == 3 * n + 1 and len(g.vertices) == 2 * n + 2


def test_first_vertical_step_is_down():
    for c in enumerate_chains(7):
        s = c.steps()
        vertical = [ch for ch in s if ch in "UD"]
        assert not vertical or vertical[0] == "D"


def test_canonical_key_invariance():
    c = GridChain(((0, 0), (1, 0), (1, 1)))
    mirrored = GridChain(((5, 5), (5, 4), (6, 4)))
    assert canonical_key(c) == canonical_key(mirrored)
    assert canonical_key(c) != canonical_key(GridChain(((0, 0), (1, 0), (2, 0))))


def test_brute_extremes():
    r1 = builtin_index("randic", "alpha=-1")
    b = brute_extremes(5, r1)
    assert b.max == F(41, 18) and len(b.argmax) == 2
    b = brute_extremes(6, r1)
    assert b.max == F(47, 18) and len(b.argmax) == 3 and b.argmax_classes == 2
    b = brute_extremes(7, builtin_index("constant"))
    assert b.min == b.max == 22 and len(b.argmax) == COUNTS[7][0]


def test_restricted_chains():
    five = list(restricted_chains(5))
    assert len(five) == 8
    assert canonical_key(PC5) not in {canonical_key(c) for c in five}
    assert len(list(restricted_chains(3))) == 2


def test_parallel_records_match_serial():
    from polychain import oracle

    serial = [r.chain.cells for r in chain_records(9)]
    oracle._RECORD_CACHE.pop(9)
    par = [r.chain.cells for r in chain_records(9, jobs=2)]
    assert sorted(serial) == sorted(par)


def test_caps_and_errors():
    with pytest.raises(ValueError):
        list(enumerate_chains(13))
    with pytest.raises(ValueError):
        list(enumerate_chains(0))
    with pytest.raises(ValueError):
        list(enumerate_chains(4, "shapes"))


def test_links_roundtrip_through_realizations():
    from polychain.chain import links_to_actions
    from polychain.realize import enumerate_valid_realizations

    for c in enumerate_chains(8):
        actions = links_to_actions(derive_links(c))
        assert c.cells in {r.cells for r in enumerate_valid_realizations(actions)}
