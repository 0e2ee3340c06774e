"""Exact polynomials in Z[q] and the usual q-analogues.

Coefficients are Python ints, so nothing ever overflows.  Values are
immutable and hashable.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Union

IntoQPoly = Union["QPoly", int]

_TERM_RE = re.compile(r"^(\d*)(q(?:\^(\d+))?)?$")


class QPoly:
    """A polynomial ``c0 + c1 q + c2 q^2 + ...`` with integer coefficients."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)
        self._hash = hash(self._coeffs)

    @classmethod
    def coerce(cls, x: IntoQPoly) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        if isinstance(x, int):
            return cls((x,))
        raise TypeError(f"cannot convert {type(x).__name__} to QPoly")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPoly":
        if degree < 0:
            raise ValueError("negative exponent")
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._coeffs)

    def low_degree(self) -> int:
        """Smallest exponent with a nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return -1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: IntoQPoly) -> "QPoly":
        if not isinstance(other, (QPoly, int)):
            return NotImplemented
        o = QPoly.coerce(other)._coeffs
        a = self._coeffs
        n = max(len(a), len(o))
        return QPoly(
            (a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self._coeffs)

    def __sub__(self, other: IntoQPoly) -> "QPoly":
        if not isinstance(other, (QPoly, int)):
            return NotImplemented
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other: IntoQPoly) -> "QPoly":
        return QPoly.coerce(other) - self

    def __mul__(self, other: IntoQPoly) -> "QPoly":
        if not isinstance(other, (QPoly, int)):
            return NotImplemented
        o = QPoly.coerce(other)._coeffs
        a = self._coeffs
        if not a or not o:
            return ZERO
        out = [0] * (len(a) + len(o) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(o):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: IntoQPoly) -> tuple["QPoly", "QPoly"]:
        """Long division over Z; the divisor's leading coefficient must be +-1."""
        d = QPoly.coerce(other)
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead = d._coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1 over Z")
        rem = list(self._coeffs)
        quot = [0] * max(len(rem) - len(d._coeffs) + 1, 0)
        for shift in range(len(quot) - 1, -1, -1):
            c = rem[shift + len(d._coeffs) - 1] * lead
            quot[shift] = c
            if c:
                for j, y in enumerate(d._coeffs):
                    rem[shift + j] -= c * y
        return QPoly(quot), QPoly(rem)

    def __call__(self, x):
        """Evaluate at ``x`` (Horner)."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def eval_at_one(self) -> int:
        return sum(self._coeffs)

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"

    def __str__(self) -> str:
        """Canonical form: ascending powers, e.g. ``1 + 2q + q^3``; zero is ``0``."""
        parts: list[str] = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Inverse of ``str``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        tokens = re.findall(r"[+-]?[^+-]+", s)
        if "".join(tokens) != s:
            raise ValueError(f"malformed polynomial: {text!r}")
        acc = ZERO
        for tok in tokens:
            sign = -1 if tok[0] == "-" else 1
            body = tok.lstrip("+-")
            m = _TERM_RE.match(body)
            if not m or not body:
                raise ValueError(f"malformed term {tok!r} in {text!r}")
            digits, qpart, exp = m.groups()
            coeff = int(digits) if digits else 1
            if qpart is None:
                if not digits:
                    raise ValueError(f"malformed term {tok!r} in {text!r}")
                k = 0
            else:
                k = int(exp) if exp else 1
            acc = acc + QPoly.monomial(k, sign * coeff)
        return acc


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def add(p: IntoQPoly, r: IntoQPoly) -> QPoly:
    return QPoly.coerce(p) + r


def mul(p: IntoQPoly, r: IntoQPoly) -> QPoly:
    return QPoly.coerce(p) * r


def eval_at_one(p: IntoQPoly) -> int:
    return QPoly.coerce(p).eval_at_one()


def q_int(n: int) -> QPoly:
    """``[n] = 1 + q + ... + q^(n-1)``, with ``[0] = 0``."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return QPoly([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(m: int, n: int) -> QPoly:
    """Gaussian binomial, 0 when ``m < n``.

    Uses ``binom(m, n) = binom(m-1, n-1) + q^n binom(m-1, n)`` so that
    everything stays in N[q].
    """
    if m < 0 or n < 0:
        raise ValueError("q_binomial needs m, n >= 0")
    if n > m:
        return ZERO
    if n == 0 or n == m:
        return ONE
    return q_binomial(m - 1, n - 1) + QPoly.monomial(n) * q_binomial(m - 1, n)


def qbinom_convolution(m: int, n: int, r: int) -> QPoly:
    """``sum_i q^((n-i)(r-i)) binom(r, i)_q binom(m-r, n-i)_q``, which equals ``binom(m, n)_q``."""
    total = ZERO
    for i in range(min(n, r) + 1):  # binom(r, i) vanishes beyond r
        total = total + QPoly.monomial((n - i) * (r - i)) * q_binomial(r, i) * q_binomial(m - r, n - i)
    return total


def check_qbinom_identity(max_m: int) -> tuple[int, tuple[int, int, int] | None]:
    """Sweep ``1 <= r <= n <= m <= max_m``; return (cases, first failing (m, n, r) or None)."""
    count = 0
    for m in range(1, max_m + 1):
        for n in range(1, m + 1):
            for r in range(1, n + 1):
                count += 1
                if qbinom_convolution(m, n, r) != q_binomial(m, n):
                    return count, (m, n, r)
    return count, None
