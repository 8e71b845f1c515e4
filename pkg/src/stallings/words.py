"""Reduced words in a free group of finite rank.

A letter is a non-zero integer: ``i`` stands for the generator ``x_i`` and
``-i`` for its inverse.  In text, ``a..z`` are ``x_1..x_26`` and the
uppercase letter is the inverse, so ``"aB"`` is ``a b^-1``.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AlphabetError, ParseError

MAX_RANK = 26
IDENTITY_TEXT = "1"


@dataclass(frozen=True)
class Alphabet:
    rank: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise AlphabetError(f"alphabet rank must be a positive integer, got {self.rank!r}")
        if self.rank > MAX_RANK:
            raise AlphabetError(f"text encoding supports at most {MAX_RANK} generators")

    def check(self, letter: int) -> int:
        if not isinstance(letter, int) or letter == 0 or abs(letter) > self.rank:
            raise AlphabetError(f"letter {letter!r} outside alphabet of rank {self.rank}")
        return letter

    def name(self, letter: int) -> str:
        self.check(letter)
        ch = string.ascii_lowercase[abs(letter) - 1]
        return ch if letter > 0 else ch.upper()

    def letter(self, ch: str) -> int:
        if len(ch) != 1 or ch not in string.ascii_letters:
            raise AlphabetError(f"not a letter: {ch!r}")
        index = string.ascii_lowercase.index(ch.lower()) + 1
        if index > self.rank:
            raise AlphabetError(f"letter {ch!r} outside alphabet of rank {self.rank}")
        return index if ch.islower() else -index

    def positive_letters(self) -> range:
        return range(1, self.rank + 1)

    def letters(self) -> list[int]:
        return [s * i for i in self.positive_letters() for s in (1, -1)]


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class Word:
    """An immutable, freely reduced word over an :class:`Alphabet`.

    Construction always reduces, so two equal group elements compare equal.

    >>> F2 = Alphabet(2)
    >>> Word.parse("abBa", F2)
    Word('aa')
    >>> Word.parse("ab", F2) * Word.parse("Ba", F2)
    Word('aa')
    """

    __slots__ = ("alphabet", "letters", "_hash")

    def __init__(self, letters: Iterable[int] = (), alphabet: Alphabet | int = 2):
        if isinstance(alphabet, int):
            alphabet = Alphabet(alphabet)
        letters = tuple(letters)
        for x in letters:
            alphabet.check(x)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "letters", _reduce(letters))
        object.__setattr__(self, "_hash", hash((alphabet.rank, self.letters)))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet | int = 2) -> "Word":
        if isinstance(alphabet, int):
            alphabet = Alphabet(alphabet)
        text = text.strip()
        if text == IDENTITY_TEXT:
            return cls((), alphabet)
        letters = []
        for col, ch in enumerate(text, start=1):
            try:
                letters.append(alphabet.letter(ch))
            except AlphabetError as exc:
                raise ParseError(str(exc), column=col) from None
        return cls(letters, alphabet)

    @classmethod
    def identity(cls, alphabet: Alphabet | int = 2) -> "Word":
        return cls((), alphabet)

    @property
    def rank(self) -> int:
        return self.alphabet.rank

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.alphabet == other.alphabet and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Word"):
        # shortlex, positive letters before their inverses
        def key(w):
            return (len(w), [(abs(x), x < 0) for x in w.letters])

        return key(self) < key(other)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def inverse(self) -> "Word":
        return invert(self)

    def is_positive(self) -> bool:
        return is_positive(self)

    def __str__(self):
        if not self.letters:
            return IDENTITY_TEXT
        return "".join(self.alphabet.name(x) for x in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"


def free_reduce(raw: Sequence[int], alphabet: Alphabet | int = 2) -> Word:
    """Reduce a raw letter sequence, rejecting letters outside the alphabet."""
    return Word(raw, alphabet)


def invert(w: Word) -> Word:
    return Word([-x for x in reversed(w.letters)], w.alphabet)


def concat(u: Word, v: Word) -> Word:
    if u.alphabet != v.alphabet:
        raise AlphabetError(f"cannot multiply words over ranks {u.rank} and {v.rank}")
    return Word(u.letters + v.letters, u.alphabet)


def is_positive(w: Word) -> bool:
    """True iff no inverse letter occurs; the empty word counts as positive."""
    return all(x > 0 for x in w.letters)


def product(words: Iterable[Word], alphabet: Alphabet | int = 2) -> Word:
    result = Word.identity(alphabet)
    for w in words:
        result = concat(result, w)
    return result
