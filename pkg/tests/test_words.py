from fractions import Fraction as F

import pytest

from polychain.chain import (
    ActionSequence,
    CompressedActionSequence,
    GrammarError,
    InstructionSequence,
    LinkSequence,
    compress,
    links_to_actions,
    parse_actions,
    parse_compressed,
    parse_instructions,
    parse_links,
    uncompress,
    value_of_actions,
)
from polychain.index import builtin_index

R1 = builtin_index("randic", "alpha=-1")


def test_link_word_rules():
    assert parse_links("1,1,2,1,3").entries == (1, 1, 2, 1, 3)
    with pytest.raises(GrammarError):
        LinkSequence((1, 2, 1))
    with pytest.raises(GrammarError) as e:
        parse_links("1,1,4")
    assert e.value.position == 3
    bad = parse_links("1,1,2,3")
    assert not bad.locally_realizable
    assert bad.first_unrealizable_pair() == 3
    assert parse_links("1,1,2,1,3").locally_realizable


@pytest.mark.parametrize(
    "links, actions",
    [
        ("1,1,2,1,3", "SC,CS,TT"),
        ("1,1,1,1,1", "SS,SS,SS"),
        ("1,1,1,2,1,3,2", "SS,SC,CS,TT,CC"),
    ],
)
def test_links_to_actions(links, actions):
    assert str(links_to_actions(parse_links(links))) == actions


def test_links_to_actions_rejects_unrealizable_pairs():
    with pytest.raises(GrammarError):
        links_to_actions(parse_links("1,1,2,3,1"))


@pytest.mark.parametrize(
    "word, bad_pos",
    [("CS", 1), ("SS,CS", 2), ("SC,SS", 2), ("SS,TT", 2), ("SC,CS,TT,CS,TT", 5), ("XX", 1)],
)
def test_action_grammar(word, bad_pos):
    with pytest.raises(GrammarError) as e:
        parse_actions(word)
    assert e.value.position == bad_pos


def test_compressed_grammar():
    assert parse_compressed("ST,CS,SS").square_count == 7
    assert parse_compressed("SS,ST,CS").square_count == 7
    with pytest.raises(GrammarError):
        parse_compressed("CT")
    with pytest.raises(GrammarError):
        parse_compressed("SS,CT")
    with pytest.raises(GrammarError):
        parse_compressed("ST,SS,CS")


@pytest.mark.parametrize(
    "actions, compressed",
    [
        ("SC,CS,TT", "ST"),
        ("SS,SC,CS,TT,CS", "SS,ST,CS"),
        ("SS,SC,CS,TT,CC", "SS,ST,CC"),
    ],
)
def test_compress_roundtrip(actions, compressed):
    a = parse_actions(actions)
    c = compress(a)
    assert str(c) == compressed
    assert uncompress(c) == a
    assert c.square_count == a.square_count


def test_value_of_actions():
    assert value_of_actions(parse_compressed("SS"), R1) == F(29, 18)
    assert value_of_actions(parse_compressed("SS,ST,CS"), R1) == F(425, 144)
    assert value_of_actions(parse_actions("SC,CS,TT"), R1) == F(325, 144)
    assert value_of_actions(parse_compressed("ST"), R1) == F(325, 144)


def test_instruction_words():
    assert parse_instructions("RRD") == parse_instructions("R,R,D")
    with pytest.raises(GrammarError):
        InstructionSequence(("D",))
    with pytest.raises(GrammarError):
        parse_instructions("R,X")


def test_parsers_report_empty_entries():
    with pytest.raises(GrammarError) as e:
        parse_links("1,,1")
    assert e.value.position == 2
    with pytest.raises(GrammarError):
        parse_actions("   ")


def test_letters():
    a = ActionSequence(("SC", "CS"))
    assert a.first_letter(1) == "S" and a.second_letter(1) == "C"
    assert a.square_count == 4
    assert CompressedActionSequence(("SS",)).square_count == 3
