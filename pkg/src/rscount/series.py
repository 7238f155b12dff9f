"""Truncated formal power series in u whose coefficients are integer polynomials in Q.

Everything in this package that is "a generating function" lives here: the
coefficient type :class:`QPoly` is a univariate integer polynomial in a symbol
Q (the series specialize to concrete counts when Q is evaluated at a field
size), and :class:`TruncatedSeries` is a fixed-order prefix c_0 + c_1 u + ...
+ c_T u^T with exact arithmetic below the truncation order.

Division never happens at the coefficient level: rational functions enter as
numerator/denominator u-polynomials via :func:`series_from_rational`, and the
only inverses taken are of series with constant term +/-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

#: Default truncation order, comfortably beyond every acceptance grid.
DEFAULT_TRUNCATION = 24


class QPoly:
    """Integer-coefficient polynomial in the symbol Q, low-to-high tuple."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Union[int, Sequence[int]] = ()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        n = len(coeffs)
        while n and coeffs[n - 1] == 0:
            n -= 1
        self.coeffs: tuple[int, ...] = tuple(coeffs[:n])

    @classmethod
    def symbol(cls) -> "QPoly":
        """The polynomial Q itself."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def as_int(self) -> int:
        """The constant value; raises if the polynomial genuinely involves Q."""
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return self.coeffs[0] if self.coeffs else 0

    def evaluate(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __add__(self, other: "QPoly") -> "QPoly":
        other = _as_qpoly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-_as_qpoly(other))

    def __rsub__(self, other: "QPoly") -> "QPoly":
        return _as_qpoly(other) + (-self)

    def __mul__(self, other: "QPoly") -> "QPoly":
        other = _as_qpoly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("QPoly powers must be nonnegative")
        result = QPoly(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divexact(self, divisor: "QPoly") -> "QPoly":
        """Exact polynomial division; raises ArithmeticError on any remainder."""
        divisor = _as_qpoly(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = divisor.coeffs
        dd = len(d) - 1
        if len(rem) - 1 < dd:
            if any(rem):
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
            return QPoly()
        quo = [0] * (len(rem) - dd)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = rem[shift + dd]
            if c % d[-1]:
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
            f = c // d[-1]
            quo[shift] = f
            if f:
                for j in range(dd + 1):
                    rem[shift + j] -= f * d[j]
        if any(rem):
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return QPoly(quo)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == QPoly(other).coeffs
        return isinstance(other, QPoly) and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)

    def __repr__(self) -> str:
        return f"QPoly({self})"


def _as_qpoly(x: Union[int, QPoly]) -> QPoly:
    return x if isinstance(x, QPoly) else QPoly(x)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series prefix of fixed truncation ``order``: coefficients c_0..c_order."""

    order: int
    coeffs: tuple[QPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must equal order + 1")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_orders(self, other)
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_orders(self, other)
        return TruncatedSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"mismatched truncation orders {a.order} != {b.order}")


def series(u_poly: Sequence[Union[int, QPoly]], order: int) -> TruncatedSeries:
    """Build a series from a u-polynomial given as coefficients c_0, c_1, ...."""
    coeffs = [_as_qpoly(c) for c in u_poly[: order + 1]]
    coeffs.extend(QPoly() for _ in range(order + 1 - len(coeffs)))
    return TruncatedSeries(order, tuple(coeffs))


def coeff(s: TruncatedSeries, n: int) -> QPoly:
    """The exact coefficient of u^n (0 <= n <= truncation order)."""
    if not 0 <= n <= s.order:
        raise ValueError(f"coefficient index {n} outside truncation order {s.order}")
    return s.coeffs[n]


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    T = a.order
    out = [QPoly() for _ in range(T + 1)]
    for i, x in enumerate(a.coeffs):
        if x.is_zero:
            continue
        for j in range(T + 1 - i):
            y = b.coeffs[j]
            if not y.is_zero:
                out[i + j] = out[i + j] + x * y
    return TruncatedSeries(T, tuple(out))


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse mod u^(order+1); constant term must be +1 or -1."""
    c0 = a.coeffs[0]
    if not (c0 == 1 or c0 == -1):
        raise ValueError("series inverse needs constant term +1 or -1")
    sign = c0.as_int()
    T = a.order
    out = [QPoly() for _ in range(T + 1)]
    out[0] = QPoly(sign)
    for n in range(1, T + 1):
        acc = QPoly()
        for i in range(1, n + 1):
            ai = a.coeffs[i]
            if not ai.is_zero:
                acc = acc + ai * out[n - i]
        # c0 * out[n] + acc = 0 and c0 = sign = 1/c0
        out[n] = QPoly(-sign) * acc
    return TruncatedSeries(T, tuple(out))


def series_binomial_power(d: int, sign: int, exponent: int, order: int) -> TruncatedSeries:
    """(1 + sign * u^d) ** exponent with exact binomial coefficients.

    ``sign`` is +1 or -1; ``exponent`` may be negative (formal binomial series).
    """
    if d < 1:
        raise ValueError("binomial degree d must be >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    out = [QPoly() for _ in range(order + 1)]
    for j in range(order // d + 1):
        if exponent >= 0:
            if j > exponent:
                break
            c = math.comb(exponent, j)
        else:
            c = (-1) ** j * math.comb(-exponent + j - 1, j)
        out[j * d] = QPoly(c * sign**j)
    return TruncatedSeries(order, tuple(out))


def series_from_rational(
    numerator: Sequence[Union[int, QPoly]],
    denominator: Sequence[Union[int, QPoly]],
    order: int,
) -> TruncatedSeries:
    """Expand numerator/denominator (u-polynomials) to the given order.

    The denominator's constant term must be +1 or -1 so the inverse stays over
    the integers.
    """
    num = series(numerator, order)
    den = series(denominator, order)
    return series_mul(num, series_inv(den))


def u_poly_mul(
    a: Sequence[Union[int, QPoly]], b: Sequence[Union[int, QPoly]]
) -> list[QPoly]:
    """Multiply two u-polynomials (coefficient lists over QPoly) exactly."""
    pa = [_as_qpoly(c) for c in a]
    pb = [_as_qpoly(c) for c in b]
    if not pa or not pb:
        return []
    out = [QPoly() for _ in range(len(pa) + len(pb) - 1)]
    for i, x in enumerate(pa):
        if not x.is_zero:
            for j, y in enumerate(pb):
                if not y.is_zero:
                    out[i + j] = out[i + j] + x * y
    return out
