"""Exact truncated formal power series over arbitrary-precision integers.

A series is a dense coefficient vector for q^0 .. q^N with an inclusive
truncation order N: every stored coefficient is exact, and every operation
propagates the minimum order of its operands so that no coefficient is ever
fabricated.  On top lives a bounded-degree polynomial in an auxiliary
variable t whose coefficients are series; that layer is what product
extraction of the partition families runs on.

All values are immutable and all operations are pure, so everything here is
safe to share across threads.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Iterator


def _int_tuple(coeffs: Iterable[int]) -> tuple[int, ...]:
    # operator.index accepts ints and int-like types (e.g. gmpy2.mpz),
    # rejects floats; coefficients must stay exact.
    return tuple(operator.index(c) for c in coeffs)


@dataclass(frozen=True)
class TruncatedSeries:
    """Series in q truncated at order N; coeffs[i] is the coefficient of q^i."""

    coeffs: tuple[int, ...]
    truncation_order: int

    def __post_init__(self) -> None:
        if self.truncation_order < 0:
            raise ValueError("truncation order must be non-negative")
        if len(self.coeffs) != self.truncation_order + 1:
            raise ValueError(
                f"need exactly {self.truncation_order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * order, order)

    def coefficient(self, n: int) -> int:
        """Coefficient of q^n; n must lie in the exact range 0..N."""
        if not 0 <= n <= self.truncation_order:
            raise IndexError(f"exponent {n} outside exact range 0..{self.truncation_order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        """Restrict to a smaller (or equal) truncation order."""
        if order > self.truncation_order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def nonzero_terms(self) -> Iterator[tuple[int, int]]:
        return ((i, c) for i, c in enumerate(self.coeffs) if c)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.truncation_order, other.truncation_order)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(tuple(a[i] + b[i] for i in range(order + 1)), order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.truncation_order, other.truncation_order)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(tuple(a[i] - b[i] for i in range(order + 1)), order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.truncation_order)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(
                tuple(other * c for c in self.coeffs), self.truncation_order
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.truncation_order, other.truncation_order)
        a = self.coeffs[: order + 1]
        b = other.coeffs[: order + 1]
        # schoolbook convolution; outer loop over the sparser operand
        na = sum(1 for c in a if c)
        nb = sum(1 for c in b if c)
        if nb < na:
            a, b = b, a
        out = [0] * (order + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(order + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(tuple(out), order)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def shift(self, s: int) -> "TruncatedSeries":
        """Multiply by q^s.  Order is unchanged; the top s coefficients drop off,
        so callers must compare only the still-exact range."""
        s = operator.index(s)
        if s < 0:
            raise ValueError("shift amount must be non-negative")
        n = self.truncation_order
        if s > n:
            return TruncatedSeries.zero(n)
        return TruncatedSeries((0,) * s + self.coeffs[: n + 1 - s], n)

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires constant term +1 or -1 so the
        inverse stays integral.  b_n = -a_0 * sum_{i>=1} a_i b_{n-i}."""
        a = self.coeffs
        a0 = a[0]
        if a0 not in (1, -1):
            raise ValueError(f"constant term {a0} is not a unit over the integers")
        n = self.truncation_order
        nz = [(i, a[i]) for i in range(1, n + 1) if a[i]]
        b = [a0] + [0] * n
        for m in range(1, n + 1):
            acc = 0
            for i, ai in nz:
                if i > m:
                    break
                acc += ai * b[m - i]
            if acc:
                b[m] = -a0 * acc
        return TruncatedSeries(tuple(b), n)

    # -- presentation and serialization --------------------------------------

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        body = format_series(self, max_terms=6)
        return f"TruncatedSeries({body!r}, order={self.truncation_order})"

    def to_json_dict(self) -> dict:
        """CLI wire form: coefficients as decimal strings (they outgrow 64 bits)."""
        return {
            "truncation": self.truncation_order,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "TruncatedSeries":
        return cls(tuple(int(c) for c in obj["coeffs"]), int(obj["truncation"]))


def make_series(coeffs: Iterable[int], order: int) -> TruncatedSeries:
    """Series from at most order+1 leading coefficients, zero-padded to q^order."""
    cs = _int_tuple(coeffs)
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    if len(cs) > order + 1:
        raise ValueError(f"got {len(cs)} coefficients for truncation order {order}")
    return TruncatedSeries(cs + (0,) * (order + 1 - len(cs)), order)


def format_series(ts: TruncatedSeries, max_terms: int | None = None) -> str:
    """Human form: '1 - 3q + 5q^3 - 7q^6'."""
    parts: list[str] = []
    shown = 0
    for i, c in ts.nonzero_terms():
        if max_terms is not None and shown == max_terms:
            parts.append("+ ...")
            break
        mag = abs(c)
        if i == 0:
            term = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            term = f"{head}q" if i == 1 else f"{head}q^{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
        shown += 1
    if not parts:
        return "0"
    return " ".join(parts)


def pochhammer(a: int, b: int, order: int) -> TruncatedSeries:
    """Truncated infinite product (1-q^a)(1-q^(a+b))(1-q^(a+2b))...

    Factors whose exponent exceeds the order cannot touch any stored
    coefficient and are skipped.
    """
    if a < 1 or b < 1:
        raise ValueError("pochhammer exponents must be positive")
    c = [1] + [0] * order
    e = a
    while e <= order:
        # multiply by (1 - q^e) in place, descending so c[i-e] is still old
        for i in range(order, e - 1, -1):
            if c[i - e]:
                c[i] -= c[i - e]
        e += b
    return TruncatedSeries(tuple(c), order)


def geometric_square(s: int, order: int) -> TruncatedSeries:
    """q^s/(1-q^s)^2 = sum_{m>=1} m q^(m s), truncated."""
    if s < 1:
        raise ValueError("part size must be positive")
    c = [0] * (order + 1)
    m = 1
    while m * s <= order:
        c[m * s] = m
        m += 1
    return TruncatedSeries(tuple(c), order)


@dataclass(frozen=True)
class SeriesPolynomial:
    """Polynomial in an auxiliary variable t with series coefficients.

    t stands for the squared symmetric variable the product expansion of the
    partition families runs over; degrees above degree_cap are discarded.
    """

    t_coeffs: tuple[TruncatedSeries, ...]
    degree_cap: int
    truncation_order: int

    def __post_init__(self) -> None:
        if self.degree_cap < 0:
            raise ValueError("degree cap must be non-negative")
        if not self.t_coeffs:
            raise ValueError("need at least the t^0 coefficient")
        if len(self.t_coeffs) > self.degree_cap + 1:
            raise ValueError("more t-coefficients than the degree cap allows")
        for ts in self.t_coeffs:
            if ts.truncation_order != self.truncation_order:
                raise ValueError("all t-coefficients must share the truncation order")

    @classmethod
    def one(cls, order: int, degree_cap: int) -> "SeriesPolynomial":
        return cls((TruncatedSeries.one(order),), degree_cap, order)

    def mul_linear(self, g: TruncatedSeries) -> "SeriesPolynomial":
        """Multiply by (1 + t*g), capping the t-degree."""
        if g.truncation_order != self.truncation_order:
            raise ValueError("factor must share the polynomial's truncation order")
        old = self.t_coeffs
        width = min(len(old) + 1, self.degree_cap + 1)
        new = []
        for k in range(width):
            term = old[k] if k < len(old) else TruncatedSeries.zero(self.truncation_order)
            if k >= 1:
                term = term + old[k - 1] * g
            new.append(term)
        while len(new) > 1 and new[-1].is_zero():
            new.pop()
        return SeriesPolynomial(tuple(new), self.degree_cap, self.truncation_order)

    def t_coefficient(self, k: int) -> TruncatedSeries:
        """Coefficient of t^k; degrees within the cap but never produced are zero."""
        if k < 0 or k > self.degree_cap:
            raise ValueError(f"t-degree {k} exceeds the degree cap {self.degree_cap}")
        if k < len(self.t_coeffs):
            return self.t_coeffs[k]
        return TruncatedSeries.zero(self.truncation_order)
