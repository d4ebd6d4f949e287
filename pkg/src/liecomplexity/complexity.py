"""Lie classes by brute force, the first-difference bound, and complexity profiles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

from .errors import MethodDisagreement
from .formula import classify_length, sturmian_lie_formula
from .rauzy import lie_cycles, RauzyGraph
from .sources import FactorSet, WordSource, saturated_factors
from .words import ConjugacyClass, Word, conjugates

METHODS = ("bruteforce", "rauzy", "formula")


def lie_classes(factors: Iterable[Word]) -> List[ConjugacyClass]:
    """Conjugacy classes lying entirely inside a set of same-length factors."""
    facs = frozenset(factors)
    seen = set()
    out = []
    for f in sorted(facs):
        if f in seen:
            continue
        cls = conjugates(f)
        seen.update(cls.members & facs)
        if cls.members <= facs:
            out.append(cls)
    return out


def is_lie_class(w: Word, factors: FactorSet) -> bool:
    return conjugates(w).members <= factors.factors


def lie_classes_bruteforce(source: WordSource, n: int) -> List[ConjugacyClass]:
    return lie_classes(saturated_factors(source, n).factors)


def lie_complexity_bruteforce(source: WordSource, n: int) -> int:
    return len(lie_classes_bruteforce(source, n))


@dataclass
class ComplexityRow:
    n: int
    p: Optional[int] = None
    delta_p: Optional[int] = None
    lie_bruteforce: Optional[int] = None
    lie_rauzy: Optional[int] = None
    lie_formula: Optional[int] = None
    bound_ok: bool = True
    case_tag: Optional[str] = None
    certified: bool = False

    def lie_values(self) -> List[int]:
        return [v for v in (self.lie_bruteforce, self.lie_rauzy, self.lie_formula)
                if v is not None]

    @property
    def agree(self) -> bool:
        return len(set(self.lie_values())) <= 1

    def check_bound(self) -> bool:
        if self.n < 1 or self.delta_p is None:
            return True
        return all(v <= self.delta_p + 1 for v in self.lie_values())


def verify_bound(source: WordSource, n: int) -> ComplexityRow:
    """Check ``L(n) <= p(n) - p(n-1) + 1`` by brute force."""
    if n < 1:
        raise ValueError("the bound is stated for n >= 1")
    return profile_row(source, n, ("bruteforce",))


def profile_row(source: WordSource, n: int, methods: Sequence[str] = METHODS,
                spec=None) -> ComplexityRow:
    unknown = set(methods) - set(METHODS)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}")
    row = ComplexityRow(n=n)
    needs_factors = bool({"bruteforce", "rauzy"} & set(methods))
    if needs_factors:
        edges = saturated_factors(source, n)
        row.p = len(edges)
        row.certified = edges.certified
    if needs_factors and n >= 1:
        vertices = saturated_factors(source, n - 1)
        row.delta_p = len(edges) - len(vertices)
        row.certified = row.certified and vertices.certified
    if "bruteforce" in methods:
        row.lie_bruteforce = len(lie_classes(edges.factors))
    if "rauzy" in methods and n >= 1:
        row.lie_rauzy = len(lie_cycles(RauzyGraph.from_factor_sets(vertices, edges)))
    if "formula" in methods:
        if spec is None:
            if not source.is_sturmian:
                raise ValueError("formula method requires a continued-fraction source")
            spec = source.spec
        row.lie_formula = sturmian_lie_formula(spec, n)
        row.case_tag = str(classify_length(spec, n))
    row.bound_ok = row.check_bound()
    return row


def profile(source: WordSource, ns: Iterable[int], methods: Sequence[str] = METHODS,
            spec=None) -> List[ComplexityRow]:
    return [profile_row(source, n, methods, spec) for n in ns]


def check_agreement(rows: Iterable[ComplexityRow]) -> None:
    bad = [r for r in rows if not r.agree]
    if bad:
        r = bad[0]
        raise MethodDisagreement(
            f"methods disagree at n={r.n}: bruteforce={r.lie_bruteforce} "
            f"rauzy={r.lie_rauzy} formula={r.lie_formula} ({len(bad)} rows)"
        )
