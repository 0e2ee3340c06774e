"""Which family does the two-parameter Hecke algebra ``T^2 = aT + b`` belong to?

Rescaling ``T' = zT`` with ``az = bz^2 - 1`` turns the relation into
``T'^2 = (q - 1)T' + q`` where ``q = bz^2``.  Eliminating ``z``:

    q = bz^2 = az + 1                       (use the quadratic for z)
    b(q - 1)^2 = b a^2 z^2 = a^2 q          (square z = (q - 1)/a, times b)

hence ``b q^2 - (2b + a^2) q + b = 0`` whenever ``a, b != 0``.  Dividing by
``b`` gives the monic ``q^2 - (2 + a^2/b) q + 1``, whose roots are ``q`` and
``1/q``.  It is a cyclotomic polynomial of order 2, 3, 4, 6 exactly when
``a^2/b`` is -4, -3, -2, -1.

Inputs are rationals, so every decision is exact.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

RationalLike = Union[Fraction, int, str]

H1_GENERIC = "H1-generic"
H1_SYMMETRIC = "H1-symmetric-group"
H2_ROOT = "H2-root-of-unity"
H3_ZERO_HECKE = "H3-zero-hecke"
H4_NILCOXETER = "H4-nilcoxeter"

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")

# order -> coefficients of the monic cyclotomic polynomial, constant term first
_CYCLOTOMIC = {
    1: (Fraction(-1), Fraction(1)),
    2: (Fraction(1), Fraction(1)),
    3: (Fraction(1), Fraction(1), Fraction(1)),
    4: (Fraction(1), Fraction(0), Fraction(1)),
    6: (Fraction(1), Fraction(-1), Fraction(1)),
}


def parse_rational(text: RationalLike) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not an exact fraction: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


@dataclass(frozen=True)
class HeckeClass:
    tag: str
    order: int | None = None
    q_description: str = ""

    def verdict(self) -> str:
        return {
            H4_NILCOXETER: "H4: nilCoxeter",
            H3_ZERO_HECKE: "H3: 0-Hecke",
            H2_ROOT: f"H2: root of unity, order {self.order}",
            H1_SYMMETRIC: "H1: symmetric group (v = 1)",
            H1_GENERIC: "H1: generic",
        }[self.tag]


def roots_of_unity_degree2(coeffs: Sequence[RationalLike]) -> int | None:
    """Order ``r`` if the polynomial is a multiple of the r-th cyclotomic polynomial.

    ``coeffs`` are given constant term first and the degree must be 1 or 2.
    """
    cs = [parse_rational(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) not in (2, 3):
        raise ValueError("expected a polynomial of degree 1 or 2")
    lead = cs[-1]
    monic = tuple(c / lead for c in cs)
    for order, cyc in _CYCLOTOMIC.items():
        if monic == cyc:
            return order
    return None


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def _describe_quadratic_q(a: Fraction, b: Fraction) -> str:
    trace = 2 + a * a / b
    root = _rational_sqrt(trace * trace - 4)
    if root is not None:
        q1, q2 = (trace + root) / 2, (trace - root) / 2
        return f"q = {q1}" if q1 == q2 else f"q = {q1} or {q2} (the two choices of z)"
    if trace == 0:
        middle = ""
    else:
        mag = abs(trace)
        middle = (" - " if trace > 0 else " + ") + ("q" if mag == 1 else f"({mag})q")
    return f"q^2{middle} + 1 = 0"


def classify_hecke(a: RationalLike, b: RationalLike) -> HeckeClass:
    a, b = parse_rational(a), parse_rational(b)
    if a == 0 and b == 0:
        return HeckeClass(H4_NILCOXETER, None, "no rescaling: T^2 = 0")
    if b == 0:
        # az = -1 fixes z linearly; q = bz^2 = 0
        return HeckeClass(H3_ZERO_HECKE, None, "q = 0")
    if a == 0:
        return HeckeClass(H1_SYMMETRIC, None, "q = 1")
    ratio = a * a / b
    order = {-4: 2, -3: 3, -2: 4, -1: 6}.get(ratio)
    desc = _describe_quadratic_q(a, b)
    if order is not None:
        return HeckeClass(H2_ROOT, order, desc)
    return HeckeClass(H1_GENERIC, None, desc)


# -- brute-force oracle over Q(sqrt d) -------------------------------------------


@dataclass(frozen=True)
class QuadraticNumber:
    """``x + y sqrt(d)`` with rational x, y; ``d`` is fixed per field."""

    x: Fraction
    y: Fraction
    d: Fraction

    def __add__(self, o: "QuadraticNumber") -> "QuadraticNumber":
        return QuadraticNumber(self.x + o.x, self.y + o.y, self.d)

    def __mul__(self, o) -> "QuadraticNumber":
        if isinstance(o, (int, Fraction)):
            return QuadraticNumber(self.x * o, self.y * o, self.d)
        return QuadraticNumber(
            self.x * o.x + self.y * o.y * self.d, self.x * o.y + self.y * o.x, self.d
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QuadraticNumber":
        out = QuadraticNumber(Fraction(1), Fraction(0), self.d)
        for _ in range(k):
            out = out * self
        return out

    def is_one(self) -> bool:
        return self.x == 1 and self.y == 0


def quadratic_roots(a: RationalLike, b: RationalLike) -> list[QuadraticNumber]:
    """Both roots of ``b z^2 - a z - 1 = 0`` (``b != 0``)."""
    a, b = parse_rational(a), parse_rational(b)
    disc = a * a + 4 * b
    s = _rational_sqrt(disc)
    if s is not None:
        # rational roots: keep sqrt part zero so equality tests are literal
        return [
            QuadraticNumber((a + s) / (2 * b), Fraction(0), Fraction(0)),
            QuadraticNumber((a - s) / (2 * b), Fraction(0), Fraction(0)),
        ]
    return [
        QuadraticNumber(a / (2 * b), Fraction(1) / (2 * b), disc),
        QuadraticNumber(a / (2 * b), Fraction(-1) / (2 * b), disc),
    ]


def classify_by_root(a: RationalLike, b: RationalLike, z: QuadraticNumber) -> tuple[str, int | None]:
    """Tag and order from an explicit root ``z``: form ``q = b z^2``, test ``q^k = 1``."""
    b = parse_rational(b)
    q = z * z * b
    for k in range(1, 7):
        if (q**k).is_one():
            if k == 1:
                return H1_SYMMETRIC, None
            return H2_ROOT, k
    return H1_GENERIC, None


def classify_hecke_bruteforce(a: RationalLike, b: RationalLike) -> list[tuple[str, int | None]]:
    """Independent classification from each root of ``az = bz^2 - 1``.

    Returns one ``(tag, order)`` per root so callers can check that both
    roots agree.
    """
    a, b = parse_rational(a), parse_rational(b)
    if a == 0 and b == 0:
        return [(H4_NILCOXETER, None)]
    if b == 0:
        return [(H3_ZERO_HECKE, None)]
    return [classify_by_root(a, b, z) for z in quadratic_roots(a, b)]
