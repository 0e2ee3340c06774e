"""Degree-one Hopf structure constants ("skeletons") for the example towers.

A skeleton knows, for each basis label ``v``, the expansion of ``beta * v``
(``up``) and of ``v`` skewed by ``alpha`` (``down``).  Graphs are built
from these in :mod:`dualgraphs.dgg`.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Iterator

from .comblab import (
    DEFAULT_CAP,
    Composition,
    Partition,
    Permutation,
    canonical_rep,
    composition_of_word,
    compositions_of,
    partitions_of,
    permutations_of,
    shuffles,
)
from .qpoly import ONE, ZERO, IntoQPoly, QPoly, q_binomial, q_int

Label = Hashable


class LinComb(Mapping):
    """Finitely supported Z[q]-combination of labels; zero terms are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for label, c in items:
            c = QPoly.coerce(c)
            acc[label] = acc.get(label, ZERO) + c
        self._terms = {k: v for k, v in acc.items() if v}

    def __getitem__(self, label):
        return self._terms[label]

    def get(self, label, default=ZERO):
        return self._terms.get(label, default)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == LinComb(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        return LinComb(itertools.chain(self._terms.items(), other.items()))

    def __neg__(self) -> "LinComb":
        return LinComb({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-LinComb(other))

    def scale(self, c: IntoQPoly) -> "LinComb":
        c = QPoly.coerce(c)
        return LinComb({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c: IntoQPoly) -> "LinComb":
        return self.scale(c)

    def map_coeffs(self, f: Callable[[QPoly], IntoQPoly]) -> "LinComb":
        return LinComb({k: f(v) for k, v in self._terms.items()})

    def at_one(self) -> "LinComb":
        """Specialize every coefficient at q = 1."""
        return self.map_coeffs(lambda c: c.eval_at_one())

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self._terms.items())
        return "{" + inner + "}"


@dataclass(frozen=True)
class HopfSkeleton:
    name: str
    quantized: bool
    labels: Callable[[int], list]
    up: Callable[[Label], LinComb]
    down: Callable[[Label], LinComb]
    r: QPoly = ONE
    height_of: Callable[[Label], int] = field(default=len)


# -- Young's lattice ---------------------------------------------------------


def _young_up(lam: Partition) -> LinComb:
    out = {}
    for i in range(len(lam) + 1):
        if i == len(lam) or i == 0 or lam[i - 1] > lam[i]:
            parts = list(lam)
            if i == len(lam):
                parts.append(1)
            else:
                parts[i] += 1
            out[Partition(parts)] = 1
    return LinComb(out)


def _young_down(lam: Partition) -> LinComb:
    out = {}
    for i in range(len(lam)):
        if i == len(lam) - 1 or lam[i] > lam[i + 1]:
            parts = list(lam)
            parts[i] -= 1
            if parts[i] == 0:
                parts.pop()
            out[Partition(parts)] = 1
    return LinComb(out)


def young_skeleton() -> HopfSkeleton:
    """Symmetric group tower: Pieri box addition / removal on partitions."""
    return HopfSkeleton(
        name="young",
        quantized=False,
        labels=partitions_of,
        up=lru_cache(maxsize=None)(_young_up),
        down=lru_cache(maxsize=None)(_young_down),
        height_of=sum,
    )


# -- nilCoxeter: weighted chain / chain ----------------------------------------


def nilcoxeter_skeleton(quantized: bool = False) -> HopfSkeleton:
    def up(i: int) -> LinComb:
        return LinComb({i + 1: q_int(i + 1) if quantized else i + 1})

    def down(i: int) -> LinComb:
        return LinComb({i - 1: 1}) if i > 0 else LinComb()

    return HopfSkeleton(
        name="nilcoxeter-q" if quantized else "nilcoxeter",
        quantized=quantized,
        labels=lambda n: [n],
        up=up,
        down=down,
        height_of=int,
    )


# -- 0-Hecke: BinWord graph / lifted binary tree -------------------------------


def zero_hecke_up(comp: Composition, quantized: bool = False) -> LinComb:
    """Edges out of ``comp`` in the BinWord graph.

    Every edge corresponds to dropping a new smallest letter into one of
    the ``n + 1`` slots of a word with descent composition ``comp``; the
    q-weight is the number of letters in front of it.  Growing part ``j``
    costs ``q^(i1+...+i_{j-1})``; splitting part ``j`` into ``(k+1, i_j-k)``
    costs one more power per letter skipped.  A split at the very end of
    a non-final part is the same slot as growing the next part, so it is
    only taken for the last part, where it appends a new part 1.
    """
    out: dict = {}
    offset = 0
    r = len(comp)
    for j, part in enumerate(comp):
        grown = comp[:j] + (part + 1,) + comp[j + 1 :]
        out[Composition(grown)] = offset
        last_k = part - 1 if j == r - 1 else part - 2
        for k in range(last_k + 1):
            split = comp[:j] + (k + 1, part - k) + comp[j + 1 :]
            out[Composition(split)] = offset + k + 1
        offset += part
    if not comp:
        out[Composition((1,))] = 0
    return LinComb({c: QPoly.monomial(e) if quantized else ONE for c, e in out.items()})


def zero_hecke_parent(comp: Composition) -> Composition | None:
    if not comp:
        return None
    if comp[0] == 1:
        return Composition(comp[1:])
    return Composition((comp[0] - 1,) + comp[1:])


def zero_hecke_skeleton(quantized: bool = False) -> HopfSkeleton:
    def up(c: Composition) -> LinComb:
        return zero_hecke_up(c, quantized)

    def down(c: Composition) -> LinComb:
        p = zero_hecke_parent(c)
        return LinComb() if p is None else LinComb({p: 1})

    return HopfSkeleton(
        name="zero-hecke-q" if quantized else "zero-hecke",
        quantized=quantized,
        labels=compositions_of,
        up=lru_cache(maxsize=None)(up),
        down=lru_cache(maxsize=None)(down),
        height_of=sum,
    )


# -- Malvenuto-Reutenauer bi-tower ---------------------------------------------


def shuffle_perms(n: int, m: int) -> list[Permutation]:
    """``zeta`` in S_{n+m} increasing on 1..n and on n+1..n+m."""
    out = []
    for first in itertools.combinations(range(1, n + m + 1), n):
        rest = [x for x in range(1, n + m + 1) if x not in first]
        out.append(Permutation(first + tuple(rest)))
    return out


def direct_product(sigma: Permutation, pi: Permutation) -> Permutation:
    n = len(sigma)
    return Permutation(tuple(sigma) + tuple(x + n for x in pi))


def rho(sigma: Permutation, pi: Permutation) -> LinComb:
    """``e_sigma (x) e_pi -> sum_zeta e_{(sigma x pi) zeta^-1}``."""
    sp = direct_product(sigma, pi)
    return LinComb((sp * z.inverse(), 1) for z in shuffle_perms(len(sigma), len(pi)))


def rho_prime(sigma: Permutation, pi: Permutation) -> LinComb:
    """``e_sigma (x) e_pi -> sum_zeta e_{zeta (sigma x pi)}``."""
    sp = direct_product(sigma, pi)
    return LinComb((z * sp, 1) for z in shuffle_perms(len(sigma), len(pi)))


def mr_skeleton(cap: int = DEFAULT_CAP) -> HopfSkeleton:
    unit = Permutation((1,))

    @lru_cache(maxsize=None)
    def down_table(h: int) -> dict:
        # transpose the rho' up-rule from height h-1 to h
        table: dict = {}
        for sigma in permutations_of(h - 1, cap):
            for tau, c in rho_prime(unit, sigma).items():
                table.setdefault(tau, {})[sigma] = c
        return {tau: LinComb(terms) for tau, terms in table.items()}

    @lru_cache(maxsize=None)
    def up(sigma: Permutation) -> LinComb:
        if len(sigma) + 1 > cap:
            permutations_of(len(sigma) + 1, cap)  # raises
        return rho(unit, sigma)

    def down(tau: Permutation) -> LinComb:
        if not tau:
            return LinComb()
        return down_table(len(tau)).get(tau, LinComb())

    return HopfSkeleton(
        name="mr",
        quantized=False,
        labels=lambda n: permutations_of(n, cap),
        up=up,
        down=down,
    )


SKELETON_NAMES = ("young", "nilcoxeter", "nilcoxeter-q", "zero-hecke", "zero-hecke-q", "mr")


def get_skeleton(name: str, cap: int = DEFAULT_CAP) -> HopfSkeleton:
    factories = {
        "young": young_skeleton,
        "nilcoxeter": lambda: nilcoxeter_skeleton(False),
        "nilcoxeter-q": lambda: nilcoxeter_skeleton(True),
        "zero-hecke": lambda: zero_hecke_skeleton(False),
        "zero-hecke-q": lambda: zero_hecke_skeleton(True),
        "mr": lambda: mr_skeleton(cap),
    }
    try:
        return factories[name]()
    except KeyError:
        raise ValueError(f"unknown skeleton {name!r}; expected one of {SKELETON_NAMES}") from None


# -- full q-twisted products -----------------------------------------------------


def qsym_q_product(left: Iterable[int], right: Iterable[int]) -> LinComb:
    """Quantum shuffle product ``F_I * F_J`` on fundamental quasi-symmetric functions."""
    w = canonical_rep(left)
    v = canonical_rep(right)
    return LinComb(
        (composition_of_word(u), QPoly.monomial(t)) for u, t in shuffles(w, v)
    )


def qdivided_power_product(a: int, b: int) -> LinComb:
    """``x^a/[a]! * x^b/[b]! = binom(a+b, a)_q x^(a+b)/[a+b]!``."""
    return LinComb({a + b: q_binomial(a + b, a)})


# Tensors are LinCombs keyed by (left_label, right_label).


def qsym_coproduct(comp: Iterable[int]) -> LinComb:
    """``Delta(F_I) = sum_k F_{I<=k} (x) F_{I>k}``, cutting the ribbon after k cells."""
    comp = Composition(comp)
    n = comp.size
    terms = []
    for k in range(n + 1):
        left, right, acc = [], [], 0
        for part in comp:
            if acc + part <= k:
                left.append(part)
            elif acc >= k:
                right.append(part)
            else:
                left.append(k - acc)
                right.append(acc + part - k)
            acc += part
        terms.append(((Composition(left), Composition(right)), ONE))
    return LinComb(terms)


def divided_power_coproduct(c: int) -> LinComb:
    return LinComb(((i, c - i), ONE) for i in range(c + 1))


def twisted_tensor_product(
    x: LinComb,
    y: LinComb,
    product: Callable[[Label, Label], LinComb],
    degree: Callable[[Label], int],
) -> LinComb:
    """``(a (x) b) ._q (a' (x) b') = q^(deg b * deg a') (a a' (x) b b')``."""
    acc: dict = {}
    for (a, b), cx in x.items():
        for (a2, b2), cy in y.items():
            coeff = cx * cy * QPoly.monomial(degree(b) * degree(a2))
            for left, cl in product(a, a2).items():
                for right, cr in product(b, b2).items():
                    key = (left, right)
                    acc[key] = acc.get(key, ZERO) + coeff * cl * cr
    return LinComb(acc)


def _apply_coproduct(x: LinComb, coproduct: Callable[[Label], LinComb]) -> LinComb:
    acc: dict = {}
    for label, c in x.items():
        for key, d in coproduct(label).items():
            acc[key] = acc.get(key, ZERO) + c * d
    return LinComb(acc)


@dataclass(frozen=True)
class TwistedReport:
    algebra: str
    maxdeg: int
    pairs_checked: int
    ok: bool
    counterexample: tuple | None = None
    difference: LinComb | None = None


def _check_compatibility(name, maxdeg, basis, product, coproduct, degree) -> TwistedReport:
    checked = 0
    for total in range(maxdeg + 1):
        for da in range(total + 1):
            for a in basis(da):
                for b in basis(total - da):
                    lhs = _apply_coproduct(product(a, b), coproduct)
                    rhs = twisted_tensor_product(coproduct(a), coproduct(b), product, degree)
                    checked += 1
                    if lhs != rhs:
                        return TwistedReport(name, maxdeg, checked, False, (a, b), lhs - rhs)
    return TwistedReport(name, maxdeg, checked, True)


def check_twisted_compatibility(maxdeg: int) -> list[TwistedReport]:
    """Check ``Delta(ab) = Delta(a) ._q Delta(b)`` for QSym_q and the q-divided powers."""
    if maxdeg > 6:
        raise ValueError("maxdeg is limited to 6")
    return [
        _check_compatibility(
            "qsym-q", maxdeg, compositions_of, qsym_q_product, qsym_coproduct, sum
        ),
        _check_compatibility(
            "q-divided-powers",
            maxdeg,
            lambda n: [n],
            qdivided_power_product,
            divided_power_coproduct,
            int,
        ),
    ]
