import itertools
import math
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from dualgraphs.qpoly import (
    ONE,
    ZERO,
    Q,
    QPoly,
    add,
    check_qbinom_identity,
    eval_at_one,
    mul,
    q_binomial,
    q_factorial,
    q_int,
    qbinom_convolution,
)


def convolve_oracle(a, b):
    """Schoolbook product on exponent dictionaries."""
    out = Counter()
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    top = max(out, default=-1)
    return QPoly([out[k] for k in range(top + 1)])


def subset_sum_oracle(m, n):
    """binom(m, n)_q as the generating function of n-subsets of {1..m} by excess sum."""
    counts = Counter(sum(s) - n * (n + 1) // 2 for s in itertools.combinations(range(1, m + 1), n))
    if not counts:
        return ZERO
    return QPoly([counts[k] for k in range(max(counts) + 1)])


polys = st.lists(st.integers(-9, 9), max_size=9).map(QPoly)


def test_add_examples():
    assert add(QPoly([1, 1]), Q) == QPoly([1, 2])
    p = QPoly([3, 0, -2])
    assert add(p, ZERO) == p
    assert add(QPoly([1, -1]), QPoly([-1, 1])) == ZERO
    assert add(QPoly([1, -1]), QPoly([-1, 1])).coeffs == ()


def test_mul_examples():
    assert mul(QPoly([1, 1]), QPoly([1, 1])) == QPoly([1, 2, 1])
    p = QPoly([4, -1, 0, 7])
    assert mul(p, ONE) == p
    two_three = mul(q_int(2), q_int(3))
    assert two_three == convolve_oracle([1, 1], [1, 1, 1])
    assert two_three == QPoly([1, 2, 2, 1])


def test_q_int():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(4) == QPoly([1, 1, 1, 1])
    with pytest.raises(ValueError):
        q_int(-1)


def test_q_factorial():
    assert q_factorial(0) == ONE
    oracle = convolve_oracle(convolve_oracle([1], [1, 1]).coeffs, [1, 1, 1])
    assert q_factorial(3) == oracle == QPoly([1, 2, 2, 1])
    assert eval_at_one(q_factorial(4)) == 24


def test_q_binomial_examples():
    assert q_binomial(2, 1) == QPoly([1, 1])
    quot, rem = divmod(q_factorial(4), q_factorial(2) * q_factorial(2))
    assert rem == ZERO
    assert q_binomial(4, 2) == quot == QPoly([1, 1, 2, 1, 1])
    assert q_binomial(1, 3) == ZERO


def test_eval_at_one():
    assert eval_at_one(QPoly([1, 2, 1])) == 4
    assert eval_at_one(ZERO) == 0
    assert eval_at_one(q_factorial(3)) == 6


@pytest.mark.parametrize("m", range(13))
def test_q_binomial_row(m):
    for n in range(m + 1):
        b = q_binomial(m, n)
        assert b.is_nonnegative()
        assert b.eval_at_one() == math.comb(m, n)
        assert b == subset_sum_oracle(m, n)
        quot, rem = divmod(q_factorial(m), q_factorial(n) * q_factorial(m - n))
        assert rem == ZERO and quot == b
        assert quot * (q_factorial(n) * q_factorial(m - n)) == q_factorial(m)


def test_qbinom_convolution_identity():
    count, bad = check_qbinom_identity(10)
    assert bad is None
    assert count == sum(n for m in range(1, 11) for n in range(1, m + 1))
    assert qbinom_convolution(4, 2, 1) == q_binomial(4, 2)


@settings(max_examples=200)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * b == convolve_oracle(a.coeffs, b.coeffs)


@given(polys)
def test_string_roundtrip(p):
    assert QPoly.parse(str(p)) == p


def test_canonical_strings():
    assert str(QPoly([1, 2, 0, 1])) == "1 + 2q + q^3"
    assert str(ZERO) == "0"
    assert str(Q) == "q"
    assert str(QPoly([0, -1, 0, 3])) == "-q + 3q^3"
    assert str(QPoly([1, -2])) == "1 - 2q"


@pytest.mark.parametrize("bad", ["", "q^", "1 +", "x", "2*q"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        QPoly.parse(bad)


def test_big_coefficients_stay_exact():
    p = QPoly([10**30, 1]) ** 3
    assert p.coeffs[0] == 10**90
    assert p(1) == (10**30 + 1) ** 3
