from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from corpus import STURMIAN_SPECS, fibonacci_numbers, thue_morse
from liecomplexity.complexity import (ComplexityRow, check_agreement, lie_classes,
                                      lie_classes_bruteforce, lie_complexity_bruteforce,
                                      profile, verify_bound)
from liecomplexity.errors import MethodDisagreement
from liecomplexity.rauzy import lie_complexity_via_rauzy
from liecomplexity.sources import WordSource, saturated_factors
from liecomplexity.words import factors_of_length


def necklace_oracle(factors, n, alphabet):
    """Count Lie classes by enumerating every word of length n."""
    reps = set()
    for letters in product(alphabet, repeat=n):
        w = "".join(letters)
        if all(w[i:] + w[:i] in factors for i in range(n)):
            reps.add(min(w[i:] + w[:i] for i in range(n)))
    return len(reps)


def fibonacci_lie(n):
    """Closed form for the Fibonacci word, written with Fibonacci numbers."""
    F = fibonacci_numbers(40)
    if n in (1, 2):
        return 2
    ones = {0} | {F[k] for k in range(4, 40)} | {F[k] + F[k - 3] for k in range(4, 40)}
    return 1 if n in ones else 0


class TestBruteForce:
    def test_fibonacci_2(self, fib_source):
        got = lie_classes_bruteforce(fib_source, 2)
        assert [c.members for c in got] == [{"00"}, {"01", "10"}]

    def test_fibonacci_3(self, fib_source):
        assert [c.members for c in lie_classes_bruteforce(fib_source, 3)] == [
            {"001", "010", "100"}]

    def test_fibonacci_7(self, fib_source):
        assert lie_classes_bruteforce(fib_source, 7) == []

    def test_empty_length(self, fib_source):
        assert [c.members for c in lie_classes_bruteforce(fib_source, 0)] == [{""}]

    def test_counts_classes_not_factors(self):
        assert len(lie_classes({"000", "001", "010", "100"})) == 2

    def test_fibonacci_closed_form(self, fib_source):
        for n in range(0, 120):
            assert lie_complexity_bruteforce(fib_source, n) == fibonacci_lie(n), n

    @pytest.mark.parametrize("src,alphabet", [
        (WordSource.sturmian("3;(2)"), "01"),
        (thue_morse(), "01"),
        (WordSource.literal("0120110221002120"), "012"),
    ], ids=["sturmian32", "thue_morse", "ternary"])
    def test_necklace_oracle(self, src, alphabet):
        for n in range(1, 9):
            facs = saturated_factors(src, n).factors
            assert len(lie_classes(facs)) == necklace_oracle(facs, n, alphabet)


class TestBound:
    def test_fibonacci_10(self, fib_source):
        row = verify_bound(fib_source, 10)
        assert row.lie_bruteforce == 1
        assert row.delta_p + 1 == 2
        assert row.bound_ok

    def test_thue_morse(self):
        long_prefix = WordSource.morphism("0->01,1->10", "0", 2 ** 10)
        row = verify_bound(long_prefix, 4)
        assert row.bound_ok
        assert row.p == 10

    def test_constant(self):
        row = verify_bound(WordSource.literal("0" * 20), 5)
        assert (row.lie_bruteforce, row.p, row.delta_p + 1, row.bound_ok) == (1, 1, 1, True)

    def test_rejects_zero(self, fib_source):
        with pytest.raises(ValueError):
            verify_bound(fib_source, 0)

    def test_violation_flagged(self):
        row = ComplexityRow(n=3, p=4, delta_p=1, lie_bruteforce=3)
        assert not row.check_bound()

    @settings(max_examples=200, deadline=None)
    @given(st.text(alphabet="012", min_size=1, max_size=60), st.integers(1, 12))
    def test_finite_words(self, w, n):
        # a finite word is a walk through its own Rauzy graph
        if n > len(w):
            return
        src = WordSource.literal(w)
        row = profile(src, [n], ("bruteforce", "rauzy"))[0]
        assert row.lie_bruteforce == row.lie_rauzy
        assert row.p == len(factors_of_length(w, n))
        assert row.bound_ok, (w, n, row)


class TestProfile:
    @pytest.mark.parametrize("cf", STURMIAN_SPECS)
    def test_three_methods(self, cf):
        rows = profile(WordSource.sturmian(cf), range(0, 60))
        check_agreement(rows)
        assert all(r.bound_ok and r.certified for r in rows)
        assert rows[0].lie_rauzy is None and rows[0].lie_bruteforce == 1

    def test_disagreement_raises(self):
        with pytest.raises(MethodDisagreement, match="n=4"):
            check_agreement([ComplexityRow(n=4, p=5, lie_bruteforce=1, lie_formula=0)])

    def test_formula_needs_cf(self):
        with pytest.raises(ValueError, match="continued-fraction"):
            profile(WordSource.literal("0101"), [2], ("formula",))

    @pytest.mark.parametrize("cf,swapped_cf", [("1;(1)", "2;(1)"), ("1,2;(3)", "3;(3)"),
                                               ("1,1,4;(2,1)", "2,4;(2,1)")])
    def test_letter_exchange(self, cf, swapped_cf):
        a, b = WordSource.sturmian(cf), WordSource.sturmian(swapped_cf)
        assert a.swapped
        for n in range(0, 40):
            assert lie_complexity_bruteforce(a, n) == lie_complexity_bruteforce(b, n)
            if n:
                assert lie_complexity_via_rauzy(a, n) == lie_complexity_via_rauzy(b, n)
        rows = profile(a, range(0, 40))
        check_agreement(rows)
