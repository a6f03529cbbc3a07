"""Words in the blob algebra generator alphabet {e, U_1, ..., U_{n-1}}.

Letters are stored as ints: 0 is the blob generator e (``U0`` is accepted
as an input alias), i >= 1 is U_i.  A word carries its ambient strand
count n and validates every letter against it; the empty word is the
algebra unit and prints as ``"1"``.  Text form is whitespace separated,
e.g. ``"e U1 e U2 U1"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Word:
    n: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("strand count must be nonnegative")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for letter in self.letters:
            if letter == 0:
                if self.n < 1:
                    raise ValueError("e needs at least one strand")
            elif not 1 <= letter <= self.n - 1:
                raise ValueError(f"U{letter} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join("e" if x == 0 else f"U{x}" for x in self.letters)

    def with_n(self, n: int) -> "Word":
        """The same letter sequence viewed in ambient strand count n."""
        return Word(n, self.letters)


def unit(n: int) -> Word:
    return Word(n)


def gen_e(n: int) -> Word:
    return Word(n, (0,))


def gen_u(n: int, i: int) -> Word:
    return Word(n, (i,))


def concat(u: Word, v: Word) -> Word:
    if u.n != v.n:
        raise ValueError(f"strand counts differ: {u.n} vs {v.n}")
    return Word(u.n, u.letters + v.letters)


def opposite(w: Word) -> Word:
    """Letter reversal, the word form of the opposite anti-isomorphism."""
    return Word(w.n, tuple(reversed(w.letters)))


def parse_word(text: str, n: int) -> Word:
    tokens = text.split()
    if tokens == ["1"] or not tokens:
        return Word(n)
    letters = []
    for tok in tokens:
        if tok == "e":
            letters.append(0)
        elif tok.startswith("U") and tok[1:].isdigit():
            letters.append(int(tok[1:]))
        else:
            raise ValueError(f"bad word token {tok!r}")
    return Word(n, tuple(letters))


def descending_run(i: int, j: int, n: int) -> Word:
    """U_i U_{i-1} ... U_j, or the empty word when i < j."""
    if i < j:
        return Word(n)
    return Word(n, tuple(range(i, j - 1, -1)))


def skip_run(i: int, j: int, n: int) -> Word:
    """U_i U_{i-2} ... U_j in steps of two; empty unless i-j is in 2N."""
    if i < j or (i - j) % 2 != 0:
        return Word(n)
    return Word(n, tuple(range(i, j - 1, -2)))


def ascending_run(i: int, j: int, n: int) -> Word:
    """U_i U_{i+1} ... U_j, or the empty word when i > j."""
    if i > j:
        return Word(n)
    return Word(n, tuple(range(i, j + 1)))


def _check_weight(m: int, n: int) -> None:
    if m < 0 or m > n or (n - m) % 2 != 0:
        raise ValueError(f"weight m={m} invalid for n={n} (need 0 <= m <= n, m = n mod 2)")


def cap_word(m: int, n: int) -> Word:
    """U_1 U_3 ... U_{n-m-1}: the canonical word with m through-lines."""
    _check_weight(m, n)
    return Word(n, tuple(range(1, n - m, 2)))


def cap_word_right(m: int, n: int) -> Word:
    """U_{n-1} U_{n-3} ... U_{m+1}: caps packed against the right edge."""
    _check_weight(m, n)
    return Word(n, tuple(range(n - 1, m, -2)))


def blob_cap_word(m: int, n: int) -> Word:
    """cap_word followed by e U_2 U_4 ... U_{n-m} and cap_word again.

    The canonical word with m through-lines, the first of them blobbed.
    Defined for m > 0 only.
    """
    _check_weight(m, n)
    if m <= 0:
        raise ValueError("blob_cap_word needs m > 0")
    caps = cap_word(m, n)
    middle = Word(n, (0,) + tuple(range(2, n - m + 1, 2)))
    return caps * middle * caps
