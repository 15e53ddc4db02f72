import pytest

from zigzagmetric.words import (
    all_subwords,
    check_word,
    format_word,
    involute_word,
    parse_word,
    subword_leq,
    word_key,
    words_up_to,
)

from oracles import seeded, random_word


def test_involute_examples():
    assert involute_word("") == ""
    assert involute_word("+") == "-"
    assert involute_word("+-") == "+-"
    assert involute_word("++-") == "+--"


def test_involute_is_an_involution():
    rng = seeded(1)
    for _ in range(200):
        w = random_word(rng, 8)
        assert involute_word(involute_word(w)) == w


def test_involute_antihomomorphism():
    rng = seeded(2)
    for _ in range(200):
        u, v = random_word(rng, 5), random_word(rng, 5)
        assert involute_word(u + v) == involute_word(v) + involute_word(u)


def test_subword_examples():
    assert subword_leq("", "+-")
    assert subword_leq("+-", "+-")
    assert subword_leq("+-", "++--")
    assert not subword_leq("-+", "+-")
    assert not subword_leq("++", "+")


def test_subword_is_a_partial_order():
    rng = seeded(3)
    ws = [random_word(rng, 5) for _ in range(40)]
    for u in ws:
        assert subword_leq(u, u)
        for v in ws:
            if subword_leq(u, v) and subword_leq(v, u):
                assert u == v
            for w in ws:
                if subword_leq(u, v) and subword_leq(v, w):
                    assert subword_leq(u, w)


def test_word_key_orders_by_length_then_lex():
    ws = sorted(["-", "+", "", "--", "++", "+-"], key=word_key)
    assert ws == ["", "+", "-", "++", "+-", "--"]


def test_format_and_parse():
    assert format_word("") == "e"
    assert format_word("+-") == "+-"
    assert parse_word("e") == ""
    assert parse_word("+-") == "+-"
    with pytest.raises(ValueError):
        parse_word("")
    with pytest.raises(ValueError):
        parse_word("+a")
    with pytest.raises(ValueError):
        check_word("ab")


def test_words_up_to():
    ws = list(words_up_to(2))
    assert ws == ["", "+", "-", "++", "+-", "-+", "--"]


def test_all_subwords_matches_filter():
    rng = seeded(4)
    for _ in range(30):
        u = random_word(rng, 6)
        expected = {w for w in words_up_to(len(u)) if subword_leq(w, u)}
        assert all_subwords(u) == expected
