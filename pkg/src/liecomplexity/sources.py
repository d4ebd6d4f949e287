"""Producers of prefixes of infinite words, and certified factor sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Mapping, Optional

from .errors import SaturationError, SpecParseError
from .sturmian import SlopeSpec, characteristic_prefix, normalize
from .words import Word, factors_of_length, swap_letters

DEFAULT_PREFIX_CAP = 2 ** 22
DEFAULT_MORPHIC_LENGTH = 2 ** 12


def parse_morphism(text: str) -> Dict[str, Word]:
    """Parse rule strings such as ``"0->01,1->0"``."""
    rules: Dict[str, Word] = {}
    for tok in text.split(","):
        tok = tok.strip()
        lhs, arrow, rhs = tok.partition("->")
        lhs, rhs = lhs.strip(), rhs.strip()
        if not arrow or len(lhs) != 1 or not rhs:
            raise SpecParseError(f"bad morphism rule {tok!r}; expected 'a->word'")
        if lhs in rules:
            raise SpecParseError(f"duplicate morphism rule for {lhs!r}")
        rules[lhs] = rhs
    for image in rules.values():
        for ch in image:
            if ch not in rules:
                raise SpecParseError(f"symbol {ch!r} has no morphism rule")
    return rules


def morphism_prefix(rules: Mapping[str, Word], seed: str, length: int) -> Word:
    """Prefix of the fixed point of a prolongable morphism starting at ``seed``."""
    if seed not in rules:
        raise SpecParseError(f"seed symbol {seed!r} has no rule")
    if not rules[seed].startswith(seed) or len(rules[seed]) < 2:
        raise SpecParseError(f"morphism is not prolongable on {seed!r}")
    w = seed
    table = str.maketrans(dict(rules))
    while len(w) < length:
        w = w.translate(table)
    return w[:length]


@dataclass(frozen=True)
class FactorSet:
    n: int
    factors: FrozenSet[Word]
    certified: bool
    prefix_length: int

    def __len__(self) -> int:
        return len(self.factors)

    def __contains__(self, w: object) -> bool:
        return w in self.factors

    def __iter__(self):
        return iter(sorted(self.factors))


@dataclass
class WordSource:
    """An infinite (or literal finite) word that can hand out prefixes.

    Construct with :meth:`literal`, :meth:`morphism` or :meth:`sturmian`.
    Generated prefixes are cached; call :meth:`grow` before sharing one
    source between threads.
    """

    kind: str
    word: Optional[Word] = None
    rules: Optional[Dict[str, Word]] = None
    seed: Optional[str] = None
    spec: Optional[SlopeSpec] = None
    swapped: bool = False
    length: int = DEFAULT_MORPHIC_LENGTH
    prefix_cap: int = DEFAULT_PREFIX_CAP
    _cache: Word = field(default="", repr=False, compare=False)

    @classmethod
    def literal(cls, word: Word) -> "WordSource":
        return cls("literal", word=word, length=len(word))

    @classmethod
    def morphism(cls, rules, seed: str, length: int = DEFAULT_MORPHIC_LENGTH) -> "WordSource":
        if isinstance(rules, str):
            rules = parse_morphism(rules)
        src = cls("morphism", rules=dict(rules), seed=seed, length=length)
        src.grow(length)
        return src

    @classmethod
    def sturmian(cls, spec, prefix_cap: int = DEFAULT_PREFIX_CAP) -> "WordSource":
        if isinstance(spec, str):
            spec = SlopeSpec.parse(spec)
        norm, swapped = normalize(spec)
        return cls("sturmian", spec=norm, swapped=swapped, prefix_cap=prefix_cap)

    @property
    def is_sturmian(self) -> bool:
        return self.kind == "sturmian"

    def grow(self, m: int) -> None:
        if len(self._cache) >= m:
            return
        if self.kind == "literal":
            self._cache = self.word
        elif self.kind == "morphism":
            self._cache = morphism_prefix(self.rules, self.seed, max(m, self.length))
        else:
            w = characteristic_prefix(self.spec, m)
            self._cache = swap_letters(w) if self.swapped else w

    def prefix(self, m: int) -> Word:
        """The first ``m`` symbols (fewer for a literal word shorter than ``m``)."""
        self.grow(m)
        return self._cache[:m]

    def describe(self) -> str:
        if self.kind == "literal":
            return f"literal(len={len(self.word)})"
        if self.kind == "morphism":
            rules = ",".join(f"{a}->{b}" for a, b in sorted(self.rules.items()))
            return f"morphism({rules}; seed={self.seed}; len={self.length})"
        return f"sturmian([0; {self.spec}]{'; swapped' if self.swapped else ''})"


def saturated_factors(source: WordSource, n: int) -> FactorSet:
    """Length-``n`` factors, certified complete for Sturmian sources.

    Sturmian prefixes start at length ``4n`` and double until exactly
    ``n + 1`` factors are seen.  Literal and morphic sources return the
    factors of their generated prefix, flagged uncertified.
    """
    if n < 0:
        raise ValueError(f"negative factor length {n}")
    if n == 0:
        return FactorSet(0, frozenset([""]), source.is_sturmian, 0)
    if not source.is_sturmian:
        w = source.prefix(source.length)
        facs = factors_of_length(w, n) if n <= len(w) else frozenset()
        return FactorSet(n, facs, False, len(w))
    m = 4 * n
    while True:
        m = min(m, source.prefix_cap)
        facs = factors_of_length(source.prefix(m), n) if n <= m else frozenset()
        if len(facs) == n + 1:
            return FactorSet(n, facs, True, m)
        if m >= source.prefix_cap:
            raise SaturationError(
                f"saturation failed: {len(facs)} of {n + 1} factors of length {n} "
                f"within prefix cap {source.prefix_cap}"
            )
        m *= 2


def factor_complexity(source: WordSource, n: int) -> int:
    return len(saturated_factors(source, n))
