"""Closed-form Lie complexity of Sturmian words from continued-fraction digits.

For a normalized slope with denominators ``q_k`` and shifted digits ``d_k``:

* ``L(0) = 1``;
* ``L(n) = 2`` for ``1 <= n <= q_1``;
* ``L(n) = 1`` when ``n = m q_k`` (``k >= 1``, ``1 <= m <= d_{k+1} + 1``) or
  ``n = l q_{k-1} + q_{k-2}`` (``k >= 2``, ``1 <= l < d_k``);
* ``L(n) = 0`` otherwise.

The ``2`` case wins where it overlaps the first ``1`` case (``n = q_1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .errors import NotNormalizedError
from .sturmian import SlopeSpec, denominators_until


@dataclass(frozen=True)
class LengthCase:
    kind: str  # Zero | Small | PowerOfStandard | Semistandard | None
    k: Optional[int] = None
    m: Optional[int] = None
    l: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "PowerOfStandard":
            return f"PowerOfStandard(k={self.k},m={self.m})"
        if self.kind == "Semistandard":
            return f"Semistandard(k={self.k},l={self.l})"
        return self.kind

    @property
    def lie_complexity(self) -> int:
        return {"Small": 2, "None": 0}.get(self.kind, 1)


def _check(spec: SlopeSpec, n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not spec.is_normalized:
        raise NotNormalizedError(f"normalize first: [0; {spec}] has slope > 1/2")


def length_cases(spec: SlopeSpec, n: int) -> List[LengthCase]:
    """Every power-of-standard or semistandard family containing ``n``.

    Only denominators up to the first one exceeding ``n`` are consulted, so
    finite specs fail with :class:`DigitsExhausted` exactly when ``n`` is
    not decidable from their digits.
    """
    _check(spec, n)
    table = denominators_until(spec, n)
    q = table.q
    K = table.k_max
    out = []
    for k in range(1, K):
        if n % q[k] == 0:
            m = n // q[k]
            if 1 <= m <= spec.d(k + 1) + 1:
                out.append(LengthCase("PowerOfStandard", k=k, m=m))
    for k in range(2, K + 1):
        rest = n - q[k - 2]
        if rest > 0 and rest % q[k - 1] == 0:
            l = rest // q[k - 1]
            if 1 <= l < spec.d(k):
                out.append(LengthCase("Semistandard", k=k, l=l))
    return out


def classify_length(spec: SlopeSpec, n: int) -> LengthCase:
    _check(spec, n)
    if n == 0:
        return LengthCase("Zero")
    if n <= spec.quotient(1):  # q_1 = a_1
        return LengthCase("Small")
    cases = length_cases(spec, n)
    if len(cases) > 1:
        raise AssertionError(f"length {n} matches several families: {cases}")
    return cases[0] if cases else LengthCase("None")


def sturmian_lie_formula(spec: SlopeSpec, n: int) -> int:
    return classify_length(spec, n).lie_complexity
