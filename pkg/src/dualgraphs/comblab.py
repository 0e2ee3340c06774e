"""Partitions, compositions and permutations.

Labels are tuple subclasses so they hash, compare and sort like tuples
while rendering in the string forms used by the DOT/JSON emitters:

    Partition   "[3,1]"
    Composition "(2,1,1)"
    Permutation "3142"
    chain level  plain ``int``, rendered "5"

Enumeration orders:

* ``compositions_of``: lexicographic by parts, ``(1,1,1) < (1,2) < (2,1) < (3)``.
* ``partitions_of``: reverse lexicographic, ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``.
* ``permutations_of``: lexicographic one-line words.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

DEFAULT_CAP = 8


class EnumerationCapError(ValueError):
    """Raised when an enumeration would exceed the configured size cap."""


class Partition(tuple):
    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(p < 1 for p in self) or any(a < b for a, b in zip(self, self[1:])):
            raise ValueError(f"not a partition: {tuple(self)}")
        return self

    @property
    def size(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return f"Partition({str(self)})"


class Composition(tuple):
    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(p < 1 for p in self):
            raise ValueError(f"not a composition: {tuple(self)}")
        return self

    @property
    def size(self) -> int:
        return sum(self)

    def descents(self) -> frozenset[int]:
        """Partial sums ``{i1, i1+i2, ...}`` (all but the last)."""
        return frozenset(itertools.accumulate(self[:-1]))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self) -> str:
        return f"Composition({str(self)})"


class Permutation(tuple):
    def __new__(cls, word: Iterable[int] = ()):
        self = super().__new__(cls, word)
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"not a permutation: {tuple(self)}")
        return self

    @property
    def size(self) -> int:
        return len(self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self, 1):
            inv[x - 1] = i
        return Permutation(inv)

    def __mul__(self, other):
        """Composition of maps, ``(self * other)(i) = self(other(i))``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError("size mismatch")
        return Permutation(self[x - 1] for x in other)

    def __str__(self) -> str:
        if len(self) >= 10:
            return ",".join(map(str, self))
        return "".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def compositions_of(n: int) -> list[Composition]:
    if n < 0:
        raise ValueError("n must be >= 0")
    return [Composition(c) for c in _compositions(n)]


@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    if n < 0:
        raise ValueError("n must be >= 0")
    return [Partition(p) for p in _partitions(n, n)]


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def permutations_of(n: int, cap: int = DEFAULT_CAP) -> list[Permutation]:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise EnumerationCapError(f"permutations of {n} exceed the enumeration cap {cap}")
    return [Permutation(w) for w in itertools.permutations(range(1, n + 1))]


def descent_set(w: Iterable[int]) -> frozenset[int]:
    w = tuple(w)
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def composition_from_descents(des: Iterable[int], n: int) -> Composition:
    if n == 0:
        return Composition()
    cuts = sorted(des) + [n]
    prev, parts = 0, []
    for c in cuts:
        parts.append(c - prev)
        prev = c
    return Composition(parts)


def composition_of_word(u: Iterable[int]) -> Composition:
    u = tuple(u)
    return composition_from_descents(descent_set(u), len(u))


def canonical_rep(comp: Iterable[int]) -> Permutation:
    """Lexicographically smallest permutation whose descent set is Des(comp).

    Start from the identity and reverse every maximal window that must
    be decreasing.
    """
    comp = Composition(comp)
    n = comp.size
    des = comp.descents()
    word = list(range(1, n + 1))
    i = 1
    while i < n:
        if i in des:
            j = i
            while j + 1 in des:
                j += 1
            # positions i..j+1 (1-based) decrease
            word[i - 1 : j + 1] = reversed(word[i - 1 : j + 1])
            i = j + 1
        else:
            i += 1
    return Permutation(word)


def theta(u: Iterable[int], m: int) -> int:
    """Number of pairs (small letter <= m, big letter > m) with the small one later."""
    big_seen = 0
    count = 0
    for x in u:
        if x > m:
            big_seen += 1
        else:
            count += big_seen
    return count


def shuffles(w: Iterable[int], v: Iterable[int]) -> list[tuple[Permutation, int]]:
    """All interleavings of ``w`` with ``v`` shifted up by ``len(w)``, with theta.

    Ordered by the positions occupied by ``v``'s letters, lexicographically.
    """
    w, v = tuple(w), tuple(v)
    m, n = len(w), len(v)
    shifted = [x + m for x in v]
    out = []
    for pos in itertools.combinations(range(m + n), n):
        word = []
        wi = vi = 0
        posset = set(pos)
        for k in range(m + n):
            if k in posset:
                word.append(shifted[vi])
                vi += 1
            else:
                word.append(w[wi])
                wi += 1
        out.append((Permutation(word), theta(word, m)))
    return out


def length(w: Iterable[int]) -> int:
    """Inversion count."""
    w = tuple(w)
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
