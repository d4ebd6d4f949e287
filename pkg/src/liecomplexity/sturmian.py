"""Continued-fraction slopes and the standard words of characteristic Sturmian words.

A slope is given by its ordinary partial quotients ``[0; a1, a2, ...]``.
Internally the recurrences run on the shifted digits ``d1 = a1 - 1`` and
``dk = ak`` for ``k >= 2``, so that

    s_{-1} = "1",  s_0 = "0",  s_k = s_{k-1} ** d_k + s_{k-2}
    q_0 = 1,       q_1 = d_1 + 1,  q_{k+1} = d_{k+1} * q_k + q_{k-1}

and ``|s_k| = q_k``.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .errors import DigitsExhausted, NotNormalizedError, SpecParseError
from .words import Word

_PERIOD_RE = re.compile(r"^\((.*)\)$")


@dataclass(frozen=True)
class SlopeSpec:
    """An eventually periodic continued fraction ``[0; head..., (period)...]``."""

    head: Tuple[int, ...]
    period: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(int(a) for a in self.head))
        object.__setattr__(self, "period", tuple(int(a) for a in self.period))
        for a in self.head + self.period:
            if a < 1:
                raise ValueError(f"partial quotients must be >= 1, got {a}")
        if not self.head and not self.period:
            raise ValueError("slope needs at least one partial quotient")

    @classmethod
    def parse(cls, text: str) -> "SlopeSpec":
        """Parse ``"a1,a2,...,aK"`` optionally followed by ``";(p1,...,pM)"``."""
        text = text.strip()
        head_text, sep, tail_text = text.partition(";")
        head = _parse_digits(head_text, allow_empty=bool(sep))
        period: Tuple[int, ...] = ()
        if sep:
            m = _PERIOD_RE.match(tail_text.strip())
            if m is None:
                raise SpecParseError(
                    f"periodic tail must look like '(p1,...,pM)', got {tail_text.strip()!r}"
                )
            period = _parse_digits(m.group(1), allow_empty=False)
        try:
            return cls(head, period)
        except ValueError as exc:
            raise SpecParseError(str(exc)) from None

    def __str__(self) -> str:
        s = ",".join(map(str, self.head))
        if self.period:
            s += ";(" + ",".join(map(str, self.period)) + ")"
        return s

    @property
    def is_finite(self) -> bool:
        return not self.period

    def num_quotients(self) -> Optional[int]:
        """Number of available partial quotients, ``None`` when unbounded."""
        return None if self.period else len(self.head)

    def has_quotient(self, i: int) -> bool:
        return i >= 1 and (bool(self.period) or i <= len(self.head))

    def quotient(self, i: int) -> int:
        """Partial quotient ``a_i`` (1-based)."""
        if i < 1:
            raise IndexError(f"partial quotients are 1-based, got {i}")
        if i <= len(self.head):
            return self.head[i - 1]
        if not self.period:
            raise DigitsExhausted(
                f"CF digits exhausted: a_{i} requested but [0; {self}] has {len(self.head)}"
            )
        return self.period[(i - len(self.head) - 1) % len(self.period)]

    def d(self, k: int) -> int:
        """Shifted digit ``d_k`` (``d_1 = a_1 - 1``, ``d_k = a_k`` otherwise)."""
        a = self.quotient(k)
        return a - 1 if k == 1 else a

    def quotients(self) -> Iterator[int]:
        i = 1
        while self.has_quotient(i):
            yield self.quotient(i)
            i += 1

    def tail(self, skip: int) -> "SlopeSpec":
        """The slope whose quotients are ``a_{skip+1}, a_{skip+2}, ...``."""
        if skip < len(self.head):
            return SlopeSpec(self.head[skip:], self.period)
        if not self.period:
            raise DigitsExhausted(f"CF digits exhausted: cannot drop {skip} quotients")
        r = (skip - len(self.head)) % len(self.period)
        return SlopeSpec((), self.period[r:] + self.period[:r])

    @property
    def is_normalized(self) -> bool:
        return self.quotient(1) >= 2


def _parse_digits(text: str, allow_empty: bool) -> Tuple[int, ...]:
    text = text.strip()
    if not text:
        if allow_empty:
            return ()
        raise SpecParseError("empty list of partial quotients")
    out = []
    for tok in text.split(","):
        t = tok.strip()
        if not t.isdigit():
            raise SpecParseError(f"bad partial quotient token {t!r}")
        if int(t) < 1:
            raise SpecParseError(f"partial quotient token {t!r} must be >= 1")
        out.append(int(t))
    return tuple(out)


def normalize(spec: SlopeSpec) -> Tuple[SlopeSpec, bool]:
    """Map a slope above 1/2 to its letter-exchanged slope below 1/2.

    ``[0; 1, a2, a3, ...]`` becomes ``[0; a2 + 1, a3, ...]`` and the flag
    reports that the letters 0 and 1 were exchanged.
    """
    if spec.quotient(1) >= 2:
        return spec, False
    if not spec.has_quotient(2):
        raise DigitsExhausted(f"cannot normalize [0; {spec}]: need a second quotient")
    rest = spec.tail(2)
    return SlopeSpec((spec.quotient(2) + 1,) + rest.head, rest.period), True


def _require_normalized(spec: SlopeSpec) -> None:
    if not spec.is_normalized:
        raise NotNormalizedError(f"normalize first: [0; {spec}] has slope > 1/2")


@dataclass(frozen=True)
class DenominatorTable:
    """Convergent denominators ``q_0 .. q_K`` of a normalized slope."""

    q: Tuple[int, ...]
    spec: SlopeSpec

    @property
    def k_max(self) -> int:
        return len(self.q) - 1

    def __getitem__(self, k: int) -> int:
        if k < 0 or k > self.k_max:
            raise IndexError(f"q_{k} outside table 0..{self.k_max}")
        return self.q[k]

    def d(self, k: int) -> int:
        return self.spec.d(k)

    def word_length(self, k: int) -> int:
        """``|s_k|`` for ``k >= -1`` (note ``|s_{-1}| = 1``)."""
        return 1 if k == -1 else self[k]


def denominators(spec: SlopeSpec, k_max: int) -> DenominatorTable:
    _require_normalized(spec)
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    q = [1]
    prev = 0  # q_{-1} in continued-fraction terms
    for k in range(1, k_max + 1):
        # q_k = a_k q_{k-1} + q_{k-2}; a_1 = d_1 + 1
        a = spec.quotient(k)
        q.append(a * q[-1] + prev)
        prev = q[-2]
    return DenominatorTable(tuple(q), spec)


def denominators_until(spec: SlopeSpec, bound: int) -> DenominatorTable:
    """Smallest table whose last denominator exceeds ``bound``."""
    _require_normalized(spec)
    q = [1]
    prev = 0
    k = 0
    while q[-1] <= bound:
        k += 1
        q.append(spec.quotient(k) * q[-1] + prev)
        prev = q[-2]
    return DenominatorTable(tuple(q), spec)


def semiconvergent_denominator(table: DenominatorTable, k: int, l: int) -> int:
    """Length ``l * |s_{k-1}| + |s_{k-2}|`` of the semistandard word ``s_{k,l}``.

    At ``k == 1`` this is ``l + 1`` (the word ``0**l + "1"``), because
    ``s_{-1} = "1"`` has length one.
    """
    if k < 1 or k > table.k_max:
        raise IndexError(f"k={k} outside table 1..{table.k_max}")
    dk = table.d(k)
    if not 1 <= l < dk:
        raise ValueError(f"no such semiconvergent: l={l} not in [1, {dk - 1}] for k={k}")
    return l * table.word_length(k - 1) + table.word_length(k - 2)


@dataclass(frozen=True)
class PrefixCatalogEntry:
    kind: str  # "standard" | "semistandard"
    k: int
    word: Word
    l: Optional[int] = None

    @property
    def length(self) -> int:
        return len(self.word)

    def label(self) -> str:
        if self.kind == "standard":
            return f"s_{self.k}"
        return f"s_{self.k},{self.l}"


def _standard_words(spec: SlopeSpec, k: int) -> List[Word]:
    words = ["1", "0"]  # s_{-1}, s_0
    for i in range(1, k + 1):
        words.append(words[-1] * spec.d(i) + words[-2])
    return words


def standard_prefix(spec: SlopeSpec, k: int) -> PrefixCatalogEntry:
    _require_normalized(spec)
    if k < -1:
        raise ValueError(f"standard words start at k=-1, got {k}")
    words = _standard_words(spec, max(k, 0))
    return PrefixCatalogEntry("standard", k, words[k + 1])


def semistandard_prefix(spec: SlopeSpec, k: int, l: int) -> PrefixCatalogEntry:
    _require_normalized(spec)
    if k < 1:
        raise ValueError(f"semistandard words need k >= 1, got {k}")
    dk = spec.d(k)
    if not 1 <= l < dk:
        raise ValueError(f"no such semiconvergent: l={l} not in [1, {dk - 1}] for k={k}")
    words = _standard_words(spec, k - 1)
    return PrefixCatalogEntry("semistandard", k, words[k] * l + words[k - 1], l)


def characteristic_prefix(spec: SlopeSpec, length: int) -> Word:
    """Length-``length`` prefix of the characteristic word of a normalized slope."""
    _require_normalized(spec)
    if length < 0:
        raise ValueError("length must be >= 0")
    older, s = "1", "0"
    k = 0
    while len(s) < length:
        k += 1
        older, s = s, s * spec.d(k) + older
    return s[:length]


def mechanical_word(p: int, q: int, rho_num: int, rho_den: int, length: int,
                    upper: bool = False) -> Word:
    """Mechanical word of rational slope ``p/q`` and intercept ``rho_num/rho_den``.

    Symbol ``n`` is ``floor((n+1) p/q + rho) - floor(n p/q + rho)``, or the
    same with ceilings when ``upper`` is set.  Integer arithmetic only.
    """
    if q == 0 or rho_den == 0:
        raise ValueError("zero denominator")
    if q < 0:
        p, q = -p, -q
    if rho_den < 0:
        rho_num, rho_den = -rho_num, -rho_den
    if not 0 < p < q:
        raise ValueError(f"slope must satisfy 0 < p/q < 1, got {p}/{q}")
    den = q * rho_den
    off = rho_num * q

    if upper:
        def fl(n: int) -> int:
            return -((-(p * n * rho_den + off)) // den)
    else:
        def fl(n: int) -> int:
            return (p * n * rho_den + off) // den

    return "".join(str(fl(n + 1) - fl(n)) for n in range(length))


def set_S_members_of_length(
    spec: SlopeSpec, n: int, k_cap: Optional[int] = None
) -> List[PrefixCatalogEntry]:
    """Standard (``k >= 0``) and semistandard words of length exactly ``n``.

    With ``k_cap=None`` the search stops once no further index can reach
    length ``n``.
    """
    _require_normalized(spec)
    out: List[PrefixCatalogEntry] = []
    words = ["1", "0"]
    k = 0
    if n == 1:
        out.append(PrefixCatalogEntry("standard", 0, "0"))
    while True:
        k += 1
        if k_cap is not None and k > k_cap:
            break
        # every s_k and s_{k,l} is longer than s_{k-1}
        if k_cap is None and len(words[-1]) >= n:
            break
        dk = spec.d(k)
        prev, older = words[-1], words[-2]
        for l in range(1, dk):
            if l * len(prev) + len(older) == n:
                out.append(PrefixCatalogEntry("semistandard", k, prev * l + older, l))
        words.append(prev * dk + older)
        if len(words[-1]) == n:
            out.append(PrefixCatalogEntry("standard", k, words[-1]))
    out.sort(key=lambda e: (e.k, e.l or 0, e.kind))
    return out
