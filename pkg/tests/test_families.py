import pytest

from polychain.chain import family_links, random_compressed, segment_links


def test_named_families():
    assert str(family_links("linear", 5)) == "1,1,1,1,1"
    assert str(family_links("zigzag", 5)) == "1,1,2,2,2"
    assert str(family_links("segments", lengths=(3, 3, 3), turns=(2, 3))) == "1,1,1,2,1,3,1"


def test_z3_family():
    assert str(family_links("z3", 11)) == "1,1,1,2,1,3,1,2,1,3,1"
    assert len(family_links("z3", 10)) == 10
    assert len(family_links("z3", 7)) == 7


@pytest.mark.parametrize(
    "lengths, turns",
    [((3, 3), (3,)), ((1, 3), (2,)), ((3, 3, 3), (2,)), ((3, 3), (4,))],
)
def test_segment_errors(lengths, turns):
    with pytest.raises(ValueError):
        segment_links(lengths, turns)


def test_unknown_family():
    with pytest.raises(ValueError):
        family_links("spiral", 5)


def test_random_compressed():
    assert str(random_compressed(3, 0)) in ("SS", "SC")
    for seed in range(20):
        assert random_compressed(5, seed).square_count == 5
    assert random_compressed(40, 7) == random_compressed(40, 7)
    with pytest.raises(ValueError):
        random_compressed(2, 0)
