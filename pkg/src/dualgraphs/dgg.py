"""Graded graphs, up/down operators and the duality / path-count checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping, Sequence

from .hopf import HopfSkeleton, LinComb
from .qpoly import ONE, ZERO, Q, QPoly, q_factorial

Label = Hashable


@dataclass(frozen=True)
class GradedGraph:
    """A graded graph truncated at ``max_height``.

    ``mult[(v, u)]`` is the multiplicity of the edge from ``v`` (height h)
    to ``u`` (height h + 1).
    """

    name: str
    max_height: int
    levels: tuple[tuple[Label, ...], ...]
    mult: Mapping[tuple[Label, Label], QPoly]
    quantized: bool = False
    height: Mapping[Label, int] = field(init=False, repr=False, compare=False)
    _out: Mapping = field(init=False, repr=False, compare=False)
    _in: Mapping = field(init=False, repr=False, compare=False)
    _pos: Mapping = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.levels) != self.max_height + 1:
            raise ValueError("need one level per height 0..max_height")
        if len(self.levels[0]) != 1:
            raise ValueError("a graded graph has a single vertex at height 0")
        height, pos = {}, {}
        for h, level in enumerate(self.levels):
            for i, v in enumerate(level):
                if v in height:
                    raise ValueError(f"vertex {v} appears twice")
                height[v] = h
                pos[v] = (h, i)
        out: dict = {v: {} for v in height}
        inc: dict = {v: {} for v in height}
        clean = {}
        for (v, u), m in self.mult.items():
            m = QPoly.coerce(m)
            if v not in height or u not in height:
                raise ValueError(f"edge {v} -> {u} leaves the vertex set")
            if height[u] != height[v] + 1:
                raise ValueError(f"edge {v} -> {u} does not climb exactly one level")
            if m.is_zero():
                raise ValueError(f"edge {v} -> {u} has zero multiplicity")
            if not m.is_nonnegative():
                raise ValueError(f"edge {v} -> {u} has a negative coefficient: {m}")
            clean[(v, u)] = m
            out[v][u] = m
            inc[u][v] = m
        object.__setattr__(self, "mult", MappingProxyType(clean))
        object.__setattr__(self, "height", MappingProxyType(height))
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inc)
        object.__setattr__(self, "_pos", pos)

    @property
    def root(self) -> Label:
        return self.levels[0][0]

    def vertices(self) -> Iterable[Label]:
        for level in self.levels:
            yield from level

    def out_edges(self, v: Label) -> Mapping[Label, QPoly]:
        return self._out[v]

    def in_edges(self, u: Label) -> Mapping[Label, QPoly]:
        return self._in[u]

    def edges(self) -> list[tuple[Label, Label, QPoly]]:
        """Edges ordered by source vertex, then by target vertex order."""
        return [
            (v, u, self._out[v][u])
            for v in self.vertices()
            for u in sorted(self._out[v], key=self._pos.__getitem__)
        ]

    def with_multiplicity(self, v: Label, u: Label, m) -> "GradedGraph":
        """Copy with one edge multiplicity replaced (zero deletes the edge)."""
        mult = dict(self.mult)
        m = QPoly.coerce(m)
        if m.is_zero():
            mult.pop((v, u), None)
        else:
            mult[(v, u)] = m
        return GradedGraph(self.name, self.max_height, self.levels, mult, self.quantized)


def build_graphs(sk: HopfSkeleton, height: int) -> tuple[GradedGraph, GradedGraph]:
    """Materialize ``Gamma`` (from ``up``) and ``Gamma'`` (from ``down``) to ``height``."""
    if height < 0:
        raise ValueError("height must be >= 0")
    levels = tuple(tuple(sk.labels(n)) for n in range(height + 1))
    up_mult, down_mult = {}, {}
    for n in range(height):
        for v in levels[n]:
            for u, m in sk.up(v).items():
                up_mult[(v, u)] = m
    for n in range(1, height + 1):
        for u in levels[n]:
            for v, m in sk.down(u).items():
                down_mult[(v, u)] = m
    gamma = GradedGraph(f"{sk.name}:Gamma", height, levels, up_mult, sk.quantized)
    gamma_prime = GradedGraph(f"{sk.name}:GammaPrime", height, levels, down_mult, sk.quantized)
    return gamma, gamma_prime


def _check_support(G: GradedGraph, x: Mapping, below_top: bool) -> None:
    for v in x:
        h = G.height.get(v)
        if h is None or (below_top and h >= G.max_height):
            raise ValueError(f"vertex {v} is outside the materialized range of {G.name}")


def up_apply(G: GradedGraph, x: Mapping) -> LinComb:
    _check_support(G, x, below_top=True)
    acc: dict = {}
    for v, c in x.items():
        for u, m in G.out_edges(v).items():
            acc[u] = acc.get(u, ZERO) + c * m
    return LinComb(acc)


def down_apply(G: GradedGraph, x: Mapping) -> LinComb:
    _check_support(G, x, below_top=False)
    acc: dict = {}
    for u, c in x.items():
        for v, m in G.in_edges(u).items():
            acc[v] = acc.get(v, ZERO) + c * m
    return LinComb(acc)


@dataclass(frozen=True)
class DualityReport:
    name: str
    height: int
    verified: bool
    r_observed: QPoly | None
    witness: Label | None = None
    defect: LinComb | None = None
    vertices_checked: int = 0

    def summary(self) -> str:
        if self.verified:
            return f"duality r={self.r_observed} OK (heights <= {self.height})"
        return (
            f"duality FAILED at vertex {self.witness} "
            f"(height {self.height}): defect {_fmt_lincomb(self.defect)}"
        )


def _fmt_lincomb(x: LinComb | None) -> str:
    if not x:
        return "0"
    return " + ".join(f"({c})*{v}" for v, c in x.items())


def check_duality(
    gamma: GradedGraph, gamma_prime: GradedGraph, quantized: bool, height: int
) -> DualityReport:
    """Check ``D' U - c U D' = r Id`` (``c = q`` if quantized) on all heights <= ``height``."""
    if height + 1 > min(gamma.max_height, gamma_prime.max_height):
        raise ValueError("duality check needs one level of headroom above `height`")
    if gamma.levels[: height + 2] != gamma_prime.levels[: height + 2]:
        raise ValueError("the two graphs must share vertices and heights")
    c = Q if quantized else ONE
    r = None
    checked = 0
    for h in range(height + 1):
        for v in gamma.levels[h]:
            e = LinComb({v: ONE})
            defect = down_apply(gamma_prime, up_apply(gamma, e)) - up_apply(
                gamma, down_apply(gamma_prime, e)
            ).scale(c)
            checked += 1
            if r is None:
                r = defect.get(v)
            if defect != LinComb({v: r}) or r.is_zero():
                return DualityReport(gamma.name, h, False, r, v, defect, checked)
    return DualityReport(gamma.name, height, True, r, vertices_checked=checked)


def path_count(G: GradedGraph, up_to_height: int | None = None) -> dict[Label, QPoly]:
    """Weighted number of paths from the root to every vertex."""
    if up_to_height is None:
        up_to_height = G.max_height
    if up_to_height > G.max_height:
        raise ValueError("up_to_height exceeds the materialized height")
    f = {G.root: ONE}
    for h in range(1, up_to_height + 1):
        for u in G.levels[h]:
            total = ZERO
            for v, m in G.in_edges(u).items():
                total = total + m * f[v]
            f[u] = total
    return f


@dataclass(frozen=True)
class FominReport:
    name: str
    n: int
    lhs: QPoly
    rhs: QPoly
    ok: bool
    table: tuple[tuple[Label, QPoly, QPoly], ...] = ()

    def summary(self) -> str:
        status = "OK" if self.ok else "MISMATCH"
        return f"fomin n={self.n}: sum f*f' = {self.lhs}, expected {self.rhs} {status}"


def fomin_check(
    gamma: GradedGraph,
    gamma_prime: GradedGraph,
    n: int,
    quantized: bool,
    r: QPoly = ONE,
) -> FominReport:
    """Compare ``sum_{h(v)=n} f_Gamma(v) f_Gamma'(v)`` with ``r^n n!`` (or ``r^n [n]!``)."""
    if n > min(gamma.max_height, gamma_prime.max_height):
        raise ValueError("n exceeds the materialized height")
    f = path_count(gamma, n)
    g = path_count(gamma_prime, n)
    table = tuple((v, f[v], g[v]) for v in gamma.levels[n])
    lhs = sum((a * b for _, a, b in table), ZERO)
    fact = q_factorial(n) if quantized else QPoly((math.factorial(n),))
    rhs = QPoly.coerce(r) ** n * fact
    return FominReport(gamma.name, n, lhs, rhs, lhs == rhs, table)


@dataclass(frozen=True)
class DimensionReport:
    name: str
    n: int
    r: int
    total: int
    expected: int
    ok: bool
    table: tuple[tuple[Label, int, int], ...]  # (vertex, dim P, dim S)


def dimension_check(
    sk: HopfSkeleton, n: int, dims: Sequence[tuple[int, int]]
) -> DimensionReport:
    """Recover ``dim A_n = r^n n!`` as ``sum dim P * dim S`` from path counts.

    ``dims`` lists ``(a_i, b_i)`` for the degree-one data, so that
    ``r = sum a_i b_i``.
    """
    if sk.quantized:
        raise ValueError("dimension_check works on unquantized skeletons")
    if not dims or any(a <= 0 or b <= 0 for a, b in dims):
        raise ValueError("dimension data must be positive integers")
    r = sum(a * b for a, b in dims)
    if r != sk.r.eval_at_one():
        raise ValueError(f"dimension data give r={r} but {sk.name} has r={sk.r.eval_at_one()}")
    gamma, gamma_prime = build_graphs(sk, n)
    f = path_count(gamma, n)
    g = path_count(gamma_prime, n)
    table = tuple((v, f[v].eval_at_one(), g[v].eval_at_one()) for v in gamma.levels[n])
    total = sum(p * s for _, p, s in table)
    expected = r**n * math.factorial(n)
    return DimensionReport(sk.name, n, r, total, expected, total == expected, table)
