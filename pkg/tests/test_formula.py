import pytest
from hypothesis import given, settings, strategies as st

from corpus import STURMIAN_SPECS
from liecomplexity.complexity import lie_complexity_bruteforce
from liecomplexity.errors import DigitsExhausted, NotNormalizedError
from liecomplexity.formula import (LengthCase, classify_length, length_cases,
                                   sturmian_lie_formula)
from liecomplexity.sources import WordSource
from liecomplexity.sturmian import SlopeSpec, denominators

FIB = SlopeSpec.parse("2;(1)")
S32 = SlopeSpec.parse("3;(2)")


def family_scan(spec, n, k_top=16):
    """Enumerate the three length families directly from the recurrences."""
    q = denominators(spec, k_top).q
    hits = []
    for k in range(1, k_top):
        for m in range(1, spec.d(k + 1) + 2):
            if m * q[k] == n:
                hits.append(("PowerOfStandard", k, m))
    for k in range(2, k_top):
        for l in range(1, spec.d(k)):
            if l * q[k - 1] + q[k - 2] == n:
                hits.append(("Semistandard", k, l))
    return hits


@pytest.mark.parametrize("spec,n,expected", [
    (FIB, 8, 1), (FIB, 2, 2), (FIB, 7, 0), (S32, 4, 1), (FIB, 0, 1), (S32, 0, 1)])
def test_examples(spec, n, expected):
    assert sturmian_lie_formula(spec, n) == expected


def test_32_example_matches_bruteforce():
    assert lie_complexity_bruteforce(WordSource.sturmian(S32), 4) == 1


@pytest.mark.parametrize("spec,n,tag", [
    (FIB, 10, "PowerOfStandard(k=3,m=2)"),
    (S32, 4, "Semistandard(k=2,l=1)"),
    (FIB, 7, "None"),
    (FIB, 2, "Small"),
    (FIB, 0, "Zero"),
])
def test_classify(spec, n, tag):
    assert str(classify_length(spec, n)) == tag


def test_fibonacci_10_is_unique_family():
    assert family_scan(FIB, 10) == [("PowerOfStandard", 3, 2)]


def test_overlap_at_q1_prefers_two():
    for cf in STURMIAN_SPECS:
        spec = SlopeSpec.parse(cf)
        q1 = spec.quotient(1)
        assert classify_length(spec, q1) == LengthCase("Small")
        assert sturmian_lie_formula(spec, q1) == 2


def test_errors():
    with pytest.raises(NotNormalizedError, match="normalize first"):
        sturmian_lie_formula(SlopeSpec.parse("1;(2)"), 5)
    with pytest.raises(DigitsExhausted, match="CF digits exhausted"):
        sturmian_lie_formula(SlopeSpec.parse("2,3"), 50)
    # decidable from the available digits: q = 1, 2, 7 and 6 = 3 q_1 with d_2 = 3
    assert sturmian_lie_formula(SlopeSpec.parse("2,3"), 6) == 1
    assert str(classify_length(SlopeSpec.parse("2,3"), 5)) == "Semistandard(k=2,l=2)"


@pytest.mark.parametrize("cf", STURMIAN_SPECS)
def test_families_unique_and_match_scan(cf):
    spec = SlopeSpec.parse(cf)
    q1 = spec.quotient(1)
    for n in range(q1 + 1, 400):
        cases = length_cases(spec, n)
        assert len(cases) <= 1
        scan = family_scan(spec, n)
        assert [(c.kind, c.k, c.m if c.kind == "PowerOfStandard" else c.l) for c in cases] == scan


slopes = st.builds(
    lambda a1, head, period: SlopeSpec((a1,) + tuple(head), tuple(period)),
    st.integers(2, 6), st.lists(st.integers(1, 5), max_size=3),
    st.lists(st.integers(1, 5), min_size=1, max_size=3),
)


@settings(max_examples=40, deadline=None)
@given(slopes)
def test_formula_matches_bruteforce(spec):
    src = WordSource.sturmian(spec)
    for n in range(0, 50):
        assert sturmian_lie_formula(spec, n) == lie_complexity_bruteforce(src, n), (str(spec), n)
