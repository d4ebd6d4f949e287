"""Finite-word primitives.

Words are plain Python strings: each character is one symbol, so any
alphabet of at most a few hundred symbols is representable and words are
hashable, immutable and cheap to slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import FrozenSet, Tuple, Union

Word = str

DEFAULT_ALPHABET = "01"


@dataclass(frozen=True)
class ConjugacyClass:
    """The orbit of a word under cyclic shift.

    ``representative`` is the least rotation in symbol order, which makes the
    class usable as a dictionary key and gives deterministic output.
    """

    representative: Word
    members: FrozenSet[Word]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def length(self) -> int:
        return len(self.representative)

    def __contains__(self, w: object) -> bool:
        return w in self.members

    def sorted_members(self) -> Tuple[Word, ...]:
        return tuple(sorted(self.members))


def rotations(w: Word) -> FrozenSet[Word]:
    if not w:
        return frozenset([""])
    return frozenset(w[i:] + w[:i] for i in range(len(w)))


def least_rotation(w: Word) -> Word:
    return min(rotations(w))


def conjugates(w: Word) -> ConjugacyClass:
    members = rotations(w)
    return ConjugacyClass(min(members), members)


def _root_length(w: Word) -> int:
    # smallest p > 0 with w == rotation by p; always divides len(w)
    return (w + w).find(w, 1)


def primitive_root(w: Word) -> Tuple[Word, int]:
    """Return ``(root, exponent)`` with ``root ** exponent == w`` and root primitive."""
    if not w:
        raise ValueError("primitive root undefined for empty word")
    p = _root_length(w)
    return w[:p], len(w) // p


def is_primitive(w: Word) -> bool:
    if not w:
        raise ValueError("primitivity undefined for empty word")
    return _root_length(w) == len(w)


def factors_of_length(w: Word, n: int) -> FrozenSet[Word]:
    """Distinct length-``n`` windows of ``w``; ``{""}`` for ``n == 0``."""
    if n < 0:
        raise ValueError(f"negative factor length {n}")
    if n > len(w):
        raise ValueError(f"window exceeds word: n={n} > length {len(w)}")
    return frozenset(w[i:i + n] for i in range(len(w) - n + 1))


def index_in(v: Word, w: Word) -> int:
    """Largest ``m`` such that ``v ** m`` occurs in the finite word ``w``."""
    if not v:
        raise ValueError("index undefined for empty word")
    m = 0
    while v * (m + 1) in w:
        m += 1
    return m


def swap_letters(w: Word, a: str = "0", b: str = "1") -> Word:
    return w.translate(str.maketrans({a: b, b: a}))


def parse_word(text: str, alphabet: str = DEFAULT_ALPHABET) -> Word:
    """Parse the one-line word text format, rejecting foreign symbols."""
    line = text.strip()
    if "\n" in line:
        raise ValueError("word text must be a single line")
    allowed = set(alphabet)
    for pos, ch in enumerate(line):
        if ch not in allowed:
            raise ValueError(
                f"symbol {ch!r} at position {pos} not in alphabet {alphabet!r}"
            )
    return line


def read_word(path: Union[str, Path], alphabet: str = DEFAULT_ALPHABET) -> Word:
    return parse_word(Path(path).read_text(encoding="utf-8"), alphabet)
