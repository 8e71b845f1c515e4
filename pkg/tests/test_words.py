import pytest
from hypothesis import given
from hypothesis import strategies as st

from stallings.errors import AlphabetError, ParseError
from stallings.words import Alphabet, Word, concat, free_reduce, invert, is_positive

F2 = Alphabet(2)


def w(text, rank=2):
    return Word.parse(text, rank)


raw_letters = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12)
words = raw_letters.map(lambda xs: Word(xs, F2))


@pytest.mark.parametrize("raw, expected", [
    ([1, 2, -2, 1], "aa"),
    ([1, -2], "aB"),
    ([1, -1], "1"),
    ([2, 1, -1, -2, 2], "b"),
])
def test_free_reduce(raw, expected):
    assert str(free_reduce(raw, F2)) == expected


def test_free_reduce_rejects_out_of_range():
    with pytest.raises(AlphabetError):
        free_reduce([1, 3], F2)
    with pytest.raises(AlphabetError):
        free_reduce([0], F2)


@pytest.mark.parametrize("text, expected", [("ab", "BA"), ("1", "1"), ("abA", "aBA")])
def test_invert(text, expected):
    assert str(invert(w(text))) == expected


@pytest.mark.parametrize("u, v, expected", [("ab", "Ba", "aa"), ("ab", "1", "ab"), ("a", "b", "ab")])
def test_concat(u, v, expected):
    assert str(concat(w(u), w(v))) == expected
    assert str(w(u) * w(v)) == expected


def test_concat_alphabet_mismatch():
    with pytest.raises(AlphabetError):
        concat(w("a", 2), w("a", 3))


@pytest.mark.parametrize("text, expected", [("aab", True), ("aB", False), ("1", True)])
def test_is_positive(text, expected):
    assert is_positive(w(text)) is expected


def test_parse_rejects_letters_beyond_rank():
    with pytest.raises(ParseError) as err:
        Word.parse("abc", 2)
    assert err.value.column == 3
    with pytest.raises(ParseError):
        Word.parse("a$", 2)


def test_text_round_trip():
    for text in ["abAB", "zZ", "xyz"]:
        assert str(Word.parse(text, 26)) == str(free_reduce(Word.parse(text, 26).letters, 26))
    assert str(Word.parse("xyz", 26)) == "xyz"
    assert Word.parse("zZ", 26) == Word.identity(26)


def test_words_are_immutable_and_hashable():
    u = w("ab")
    with pytest.raises(AttributeError):
        u.letters = ()
    assert {u, w("abBb")} == {u}


@given(raw_letters)
def test_reduce_idempotent_and_reduced(xs):
    r = free_reduce(xs, F2)
    assert free_reduce(r.letters, F2) == r
    assert all(a != -b for a, b in zip(r.letters, r.letters[1:]))


@given(words)
def test_word_times_inverse_is_identity(u):
    assert concat(u, invert(u)) == Word.identity(F2)
    assert invert(invert(u)) == u


@given(st.lists(st.sampled_from([1, 2]), max_size=8), st.lists(st.sampled_from([1, 2]), max_size=8))
def test_positive_closed_under_product(xs, ys):
    u, v = Word(xs, F2), Word(ys, F2)
    assert is_positive(u) and is_positive(v)
    assert is_positive(concat(u, v))
    assert len(concat(u, v)) == len(u) + len(v)


@given(words, words)
def test_product_length(u, v):
    n = len(concat(u, v))
    assert n <= len(u) + len(v)
    no_cancel = not u or not v or u[-1] != -v[0]
    assert (n == len(u) + len(v)) == no_cancel
