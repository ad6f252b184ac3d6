"""Alphabets and canonical word enumeration.

Words are plain Python strings over a declared alphabet. The canonical
order used everywhere in the package (quotient representatives, query
table columns, witness searches) is length first, then left-to-right by
the alphabet's declared letter order. Keeping a single Alphabet object
per task avoids re-deriving letter ranks in every loop.
"""

from __future__ import annotations

from typing import Iterator

from .errors import StatelabError


class Alphabet:
    """An ordered, duplicate-free set of single-character letters."""

    def __init__(self, letters: str):
        if not letters:
            raise StatelabError("alphabet must have at least one letter")
        if len(set(letters)) != len(letters):
            raise StatelabError(f"alphabet has repeated letters: {letters!r}")
        self.letters = letters
        self._rank = {a: i for i, a in enumerate(letters)}

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __contains__(self, letter: str) -> bool:
        return letter in self._rank

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __repr__(self) -> str:
        return f"Alphabet({self.letters!r})"

    def check_word(self, word: str) -> None:
        for ch in word:
            if ch not in self._rank:
                raise StatelabError(f"letter {ch!r} not in alphabet {self.letters!r}")

    def sort_key(self, word: str):
        """Key realizing the canonical length-then-declared-letter order."""
        return (len(word), [self._rank[c] for c in word])

    def words_of_length(self, n: int) -> Iterator[str]:
        """All words of exactly length n, in canonical order."""
        if n < 0:
            raise StatelabError(f"word length must be nonnegative, got {n}")
        if n == 0:
            yield ""
            return
        # Odometer over letter ranks; avoids itertools.product's tuple churn
        # for the hot enumeration loops, and keeps declared-order semantics
        # obvious at a glance.
        letters = self.letters
        base = len(letters)
        word = [0] * n
        while True:
            yield "".join(letters[i] for i in word)
            pos = n - 1
            while pos >= 0 and word[pos] == base - 1:
                word[pos] = 0
                pos -= 1
            if pos < 0:
                return
            word[pos] += 1

    def words_up_to(self, n: int) -> Iterator[str]:
        """All words of length <= n, in canonical order."""
        for k in range(n + 1):
            yield from self.words_of_length(k)

    def count_up_to(self, n: int) -> int:
        """|A^{<=n}| without enumerating."""
        base = len(self.letters)
        if base == 1:
            return n + 1
        return (base ** (n + 1) - 1) // (base - 1)
