import itertools
import math
from collections import Counter

import pytest

from dualgraphs.comblab import (
    Composition,
    EnumerationCapError,
    Partition,
    Permutation,
    canonical_rep,
    composition_of_word,
    compositions_of,
    descent_set,
    length,
    partitions_of,
    permutations_of,
    shuffles,
    theta,
)
from dualgraphs.qpoly import QPoly, q_factorial

SHUFFLES_132_21 = {
    "13254", "13524", "15324", "51324", "13542",
    "15342", "51342", "15432", "51432", "54132",
}


def brute_partitions(n):
    """All weakly decreasing tuples summing to n, via compositions."""
    return {c for c in map(tuple, compositions_of(n)) if list(c) == sorted(c, reverse=True)}


def partition_count(n):
    # Euler-style recurrence p(n, k) over largest part <= k
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        table[0][k] = 1
    for m in range(1, n + 1):
        for k in range(1, n + 1):
            table[m][k] = table[m][k - 1] + (table[m - k][k] if k <= m else 0)
    return table[n][n]


def test_compositions():
    assert compositions_of(0) == [()]
    assert compositions_of(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(compositions_of(5)) == 16
    for n in range(1, 9):
        cs = compositions_of(n)
        assert len(cs) == 2 ** (n - 1)
        assert cs == sorted(cs)
        assert all(isinstance(c, Composition) and c.size == n for c in cs)


def test_partitions():
    assert partitions_of(0) == [()]
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(7)) == 15
    for n in range(10):
        ps = partitions_of(n)
        assert set(ps) == brute_partitions(n)
        assert len(ps) == partition_count(n)
        assert ps == sorted(ps, reverse=True)


def test_label_strings():
    assert str(Partition((3, 1))) == "[3,1]"
    assert str(Partition()) == "[]"
    assert str(Composition((2, 1, 1))) == "(2,1,1)"
    assert str(Permutation((3, 1, 4, 2))) == "3142"


def test_label_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Composition((2, 0))
    with pytest.raises(ValueError):
        Permutation((1, 1))


def test_descent_set():
    assert descent_set((1, 3, 2)) == {2}
    assert descent_set((1, 2, 3)) == set()
    assert descent_set((4, 3, 2, 1)) == {1, 2, 3}


def test_composition_of_word():
    assert composition_of_word((1, 3, 2, 5, 4)) == (2, 2, 1)
    assert composition_of_word((1, 2, 3, 4, 5)) == (5,)
    assert composition_of_word((2, 1)) == (1, 1)


def test_canonical_rep_examples():
    s3 = [w for w in itertools.permutations((1, 2, 3)) if descent_set(w) == {2}]
    assert canonical_rep((2, 1)) == min(s3) == (1, 3, 2)
    assert canonical_rep((5,)) == (1, 2, 3, 4, 5)
    assert canonical_rep((1, 1, 1, 1)) == (4, 3, 2, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_canonical_rep_is_lexmin(n):
    reps = {}
    for w in itertools.permutations(range(1, n + 1)):
        c = composition_of_word(w)
        if c not in reps:  # permutations arrive in lex order
            reps[c] = w
    for comp in compositions_of(n):
        w = canonical_rep(comp)
        assert composition_of_word(w) == comp
        if n <= 7:
            assert w == reps[comp]


def test_shuffles_132_21():
    out = shuffles((1, 3, 2), (2, 1))
    assert {str(u) for u, _ in out} == SHUFFLES_132_21
    assert len(out) == 10
    thetas = {str(u): t for u, t in out}
    assert thetas["13254"] == 0
    assert thetas["54132"] == 6


def test_shuffles_small():
    assert sorted(shuffles((1,), (1,))) == [((1, 2), 0), ((2, 1), 1)]


def crossing_pairs(u, m):
    pos = {x: i for i, x in enumerate(u)}
    return sum(1 for i in range(1, m + 1) for j in range(m + 1, len(u) + 1) if pos[i] > pos[j])


@pytest.mark.parametrize("total", range(0, 8))
def test_shuffle_counts_and_theta_range(total):
    for m in range(total + 1):
        n = total - m
        for w in permutations_of(m):
            for v in permutations_of(n):
                out = shuffles(w, v)
                assert len(out) == math.comb(m + n, n)
                assert len({u for u, _ in out}) == len(out)
                for u, t in out:
                    assert 0 <= t <= m * n
                    assert t == crossing_pairs(u, m)


def _position_pattern(u, m):
    return tuple(x > m for x in u)


@pytest.mark.parametrize("total", range(1, 7))
def test_theta_and_descent_multiset_independent_of_representatives(total):
    for m in range(total + 1):
        n = total - m
        by_class_w = {}
        for w in permutations_of(m):
            by_class_w.setdefault(composition_of_word(w), []).append(w)
        by_class_v = {}
        for v in permutations_of(n):
            by_class_v.setdefault(composition_of_word(v), []).append(v)
        for I, ws in by_class_w.items():
            for J, vs in by_class_v.items():
                reference = None
                theta_by_pattern = None
                for w in ws:
                    for v in vs:
                        out = shuffles(w, v)
                        multiset = Counter((composition_of_word(u), t) for u, t in out)
                        pattern = {_position_pattern(u, m): t for u, t in out}
                        if reference is None:
                            reference, theta_by_pattern = multiset, pattern
                        assert multiset == reference
                        assert pattern == theta_by_pattern


def test_permutations_of():
    assert permutations_of(0) == [()]
    assert len(permutations_of(3)) == 6
    assert len(permutations_of(5)) == 120
    assert permutations_of(3) == sorted(permutations_of(3))
    with pytest.raises(EnumerationCapError):
        permutations_of(9)
    assert len(permutations_of(4, cap=4)) == 24


def test_length():
    assert length((1, 2, 3, 4)) == 0
    assert length((4, 3, 2, 1)) == 6


@pytest.mark.parametrize("n", range(8))
def test_length_generating_function(n):
    acc = Counter(length(w) for w in permutations_of(n))
    gf = QPoly([acc[k] for k in range(max(acc) + 1)])
    assert gf == q_factorial(n)


def test_theta_direct():
    assert theta((2, 1), 1) == 1
    assert theta((1, 3, 2, 5, 4), 3) == 0
