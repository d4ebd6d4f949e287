"""Checks of the structural facts behind the Sturmian formula.

These recompute everything from factor sets; known theoretical values only
ever appear on the expected side of a comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

from .complexity import is_lie_class, lie_classes
from .sources import WordSource, saturated_factors
from .sturmian import SlopeSpec, denominators_until, set_S_members_of_length
from .words import Word, conjugates, index_in, is_primitive, primitive_root


@dataclass(frozen=True)
class IndexSet:
    values: FrozenSet[int]
    certified: bool
    prefix_length: int


def index_set_of_conjugates(source: WordSource, v: Word,
                            prefix_cap: Optional[int] = None) -> IndexSet:
    """Indexes of all conjugates of ``v`` in a growing prefix of ``source``.

    The prefix starts at ``16 |v|`` and doubles; the set is certified once it
    is unchanged across one doubling.  Hitting ``prefix_cap`` first yields
    an uncertified result.
    """
    if not v:
        raise ValueError("index undefined for empty word")
    if not is_primitive(v):
        raise ValueError(f"{v!r} is not primitive")
    if prefix_cap is None:
        prefix_cap = source.prefix_cap if source.is_sturmian else source.length
    members = sorted(conjugates(v).members)

    def at(m: int) -> FrozenSet[int]:
        w = source.prefix(m)
        return frozenset(index_in(c, w) for c in members)

    m = min(16 * len(v), prefix_cap)
    current = at(m)
    while 2 * m <= prefix_cap:
        nxt = at(2 * m)
        m *= 2
        if nxt == current:
            return IndexSet(current, True, m)
        current = nxt
    return IndexSet(current, False, m)


@dataclass
class Check:
    name: str
    n: int
    ok: bool
    detail: str = ""


@dataclass
class ClosureReport:
    n: int
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.ok]


def _is_s_conjugate(w: Word, members) -> bool:
    cls = conjugates(w).members
    return any(e.word in cls for e in members)


def verify_conjugate_closure(source: WordSource, n: int, spec: SlopeSpec) -> ClosureReport:
    """Length-``n`` checks of conjugate closure against standard/semistandard words.

    * primitive factors whose whole class occurs are exactly the conjugates
      of length-``n`` standard and semistandard words;
    * every Lie class is a power of such a conjugate;
    * powers ``s_k ** m`` and ``s_{k,l} ** m`` of length ``n`` are Lie
      exactly up to the expected exponent.
    """
    if n < 2:
        raise ValueError("closure checks need n >= 2")
    report = ClosureReport(n)
    facs = saturated_factors(source, n)
    cert = "" if facs.certified else " (uncertified factor set)"

    members = set_S_members_of_length(spec, n)
    expected = frozenset().union(*(conjugates(e.word).members for e in members))
    classes = lie_classes(facs.factors)
    primitive_full = frozenset(
        w for c in classes for w in c.members if is_primitive(w)
    )
    missing = sorted(expected - primitive_full)
    extra = sorted(primitive_full - expected)
    report.checks.append(Check(
        "primitive_lie_equals_S_conjugates", n, not missing and not extra,
        f"missing={missing[:3]} extra={extra[:3]}{cert}"))

    bad = []
    for c in classes:
        root, _ = primitive_root(c.representative)
        if not _is_s_conjugate(root, set_S_members_of_length(spec, len(root))):
            bad.append(c.representative)
    report.checks.append(Check("lie_class_is_power_of_S_conjugate", n, not bad,
                               f"offenders={bad[:3]}{cert}"))

    for label, word, m, expect in powers_of_length(spec, n):
        got = is_lie_class(word * m, facs)
        report.checks.append(Check(
            f"power_lie:{label}^{m}", n, got == expect,
            f"expected lie={expect} got={got}{cert}"))
    return report


def powers_of_length(spec: SlopeSpec, n: int) -> List[Tuple[str, Word, int, bool]]:
    """``(label, base, exponent, expected_lie)`` for powers of length ``n``.

    Standard words ``s_k`` (``k >= 1``) are Lie up to exponent
    ``d_{k+1} + 1`` and not at ``d_{k+1} + 2``; semistandard words
    ``s_{k,l}`` (``k >= 2``) are Lie and their squares are not.
    """
    table = denominators_until(spec, n)
    out = []
    words = ["1", "0"]
    for k in range(1, table.k_max + 1):
        words.append(words[-1] * spec.d(k) + words[-2])
    for k in range(1, table.k_max + 1):
        sk = words[k + 1]
        if n % len(sk) == 0:
            m = n // len(sk)
            top = spec.d(k + 1) + 1
            if 1 <= m <= top + 1:
                out.append((f"s_{k}", sk, m, m <= top))
        if k >= 2:
            for l in range(1, spec.d(k)):
                w = words[k] * l + words[k - 1]
                for m in (1, 2):
                    if m * len(w) == n:
                        out.append((f"s_{k},{l}", w, m, m == 1))
    return out
