import pytest

from liecomplexity.complexity import is_lie_class
from liecomplexity.sources import WordSource, saturated_factors
from liecomplexity.sturmian import SlopeSpec
from liecomplexity.verify import (index_set_of_conjugates, powers_of_length,
                                  verify_conjugate_closure)

FIB = SlopeSpec.parse("2;(1)")
S32 = SlopeSpec.parse("3;(2)")


@pytest.mark.parametrize("cf,v,expected", [
    ("2;(1)", "01", {2}),
    ("2;(1)", "010", {2, 3}),
    ("3;(2)", "0010", {1, 2}),
])
def test_index_sets(cf, v, expected):
    res = index_set_of_conjugates(WordSource.sturmian(cf), v)
    assert res.certified
    assert res.values == expected


def test_index_uncertified_at_cap():
    res = index_set_of_conjugates(WordSource.sturmian("2;(1)"), "01001", prefix_cap=40)
    assert not res.certified


def test_index_rejects_powers():
    with pytest.raises(ValueError, match="not primitive"):
        index_set_of_conjugates(WordSource.sturmian("2;(1)"), "0101")


def test_closure_fibonacci_3(fib_source):
    rep = verify_conjugate_closure(fib_source, 3, FIB)
    assert rep.ok, rep.failures()
    names = [c.name for c in rep.checks]
    assert "primitive_lie_equals_S_conjugates" in names


def test_closure_fibonacci_9(fib_source):
    facs = saturated_factors(fib_source, 9)
    assert "010" * 3 in facs
    others = {("010" * 3)[i:] + ("010" * 3)[:i] for i in range(1, 3)}
    assert not (others & facs.factors)
    rep = verify_conjugate_closure(fib_source, 9, FIB)
    assert rep.ok
    assert [(c.name, c.ok) for c in rep.checks if c.name.startswith("power_lie")] == [
        ("power_lie:s_2^3", True)]


def test_closure_32_square_of_semistandard():
    src = WordSource.sturmian(S32)
    facs = saturated_factors(src, 8)
    assert not is_lie_class("0010" * 2, facs)
    rep = verify_conjugate_closure(src, 8, S32)
    assert rep.ok
    assert ("s_2,1", "0010", 2, False) in powers_of_length(S32, 8)


def test_closure_detects_wrong_slope():
    # factor set of one slope checked against another slope's catalogue
    rep = verify_conjugate_closure(WordSource.sturmian("2;(1)"), 4, S32)
    assert not rep.ok


@pytest.mark.parametrize("cf", ["2;(1)", "3;(2)", "4;(1)", "2,3,1;(4,1)"])
def test_closure_range(cf):
    spec = SlopeSpec.parse(cf)
    src = WordSource.sturmian(spec)
    for n in range(2, 60):
        rep = verify_conjugate_closure(src, n, spec)
        assert rep.ok, (n, rep.failures())
