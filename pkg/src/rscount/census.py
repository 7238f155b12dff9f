"""Censuses of monic irreducible polynomials and their reciprocal symmetry classes.

Five families, indexed by a field size q and a degree d, drive all the
generating-function products in this package:

* ``IRREDUCIBLE``: monic irreducibles over GF(q) of degree d with nonzero
  constant term;
* ``SELF_RECIPROCAL``: those that equal their own reciprocal (nonzero only in
  degree 1 — the polynomials z -/+ 1 — and in even degrees);
* ``RECIPROCAL_PAIRS``: unordered pairs {f, f*} of distinct reciprocal partners;
* ``HERMITIAN_SELF_RECIPROCAL``: monic irreducibles over GF(q^2) of degree d
  equal to their hermitian reciprocal (nonzero only in odd degrees);
* ``HERMITIAN_PAIRS``: unordered pairs of distinct hermitian partners over GF(q^2).

Each census has two routes: ``enumerate`` (exhaustive scan of the candidate
space, subject to the enumeration cap) and ``formula`` (necklace counting for
irreducibles; divisor-sum recursions, derived from the orbit structure of the
norm-one circles in the relevant extension fields, for the symmetric families).
The two routes agree on the overlap grid by construction of the test suite;
the formula route exists so that truncated products can reach degrees slightly
beyond what raw enumeration affords.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .conjugation import (
    hermitian_reciprocal,
    is_hermitian_self_reciprocal,
    is_self_reciprocal,
    reciprocal,
)
from .fields import GF, Poly, ff_from_order, is_irreducible, poly_eval, poly_mul
from .numbertheory import as_prime_power, divisors, mobius

#: Default ceiling on candidate-space sizes for exhaustive enumeration.
DEFAULT_ENUM_CAP = 10**8

#: Environment variable overriding the enumeration cap.
ENUM_CAP_ENV = "RSCOUNT_ENUM_CAP"


class EnumerationBoundError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the configured cap."""


def enumeration_cap() -> int:
    """Current enumeration cap: RSCOUNT_ENUM_CAP if set, else 10**8."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{ENUM_CAP_ENV} must be positive, got {cap}")
    return cap


def check_enumeration_bound(candidates: int, what: str) -> None:
    """Raise :class:`EnumerationBoundError` if ``candidates`` exceeds the cap."""
    cap = enumeration_cap()
    if candidates > cap:
        raise EnumerationBoundError(
            f"{what} needs {candidates} candidates, above the enumeration cap {cap} "
            f"(override with {ENUM_CAP_ENV})"
        )


class CensusKind(enum.Enum):
    """The five polynomial families whose counts feed the product expansions."""

    IRREDUCIBLE = "irreducible"
    SELF_RECIPROCAL = "self-reciprocal"
    RECIPROCAL_PAIRS = "reciprocal-pairs"
    HERMITIAN_SELF_RECIPROCAL = "hermitian-self-reciprocal"
    HERMITIAN_PAIRS = "hermitian-pairs"

    @classmethod
    def from_token(cls, token: str) -> "CensusKind":
        for kind in cls:
            if kind.value == token:
                return kind
        raise ValueError(f"unknown census kind {token!r}")


#: Kinds whose enumeration runs over the quadratic extension GF(q^2).
_HERMITIAN_KINDS = frozenset(
    {CensusKind.HERMITIAN_SELF_RECIPROCAL, CensusKind.HERMITIAN_PAIRS}
)


@dataclass(frozen=True)
class CensusCount:
    """One census cell: the count of the family ``kind`` at field size q, degree d."""

    kind: CensusKind
    q: int
    degree: int
    count: int
    #: Enumerated objects (slow path with with_witnesses=True only): polynomials
    #: for the single kinds, (f, partner) tuples for the pair kinds.
    witnesses: Optional[tuple] = None


# -- irreducible enumeration ----------------------------------------------------

_SIEVE_THRESHOLD = 4096


@lru_cache(maxsize=None)
def _irreducible_raw(field: GF, degree: int) -> tuple[tuple[int, ...], ...]:
    """All monic irreducible coefficient tuples of the given degree, sorted by code.

    Includes z itself in degree 1.  Uses a direct scan with
    :func:`~rscount.fields.is_irreducible` for small candidate spaces and a
    product sieve (mark every monic multiple of a lower-degree irreducible;
    the survivors are exactly the irreducibles) for large ones.
    """
    q = field.q
    check_enumeration_bound(q**degree, f"irreducible scan over GF({q}) degree {degree}")
    if degree == 1:
        return tuple((c, 1) for c in range(q))
    if q**degree <= _SIEVE_THRESHOLD:
        found = [
            (*t, 1)
            for t in itertools.product(range(q), repeat=degree)
            if is_irreducible(Poly(field, (*t, 1)))
        ]
    else:
        found = _sieve(field, degree)
    found.sort(key=_code_key(q))
    return tuple(found)


def _code_key(q: int):
    def key(coeffs: tuple[int, ...]) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = acc * q + c
        return acc

    return key


def _sieve(field: GF, degree: int) -> list[tuple[int, ...]]:
    """Mark every reducible monic polynomial of the given degree as a product
    g * h with g irreducible of degree <= degree/2; collect the unmarked."""
    q = field.q
    size = q**degree
    marked = bytearray(size)
    add, mul = field.add, field.mul
    for e in range(1, degree // 2 + 1):
        cofactor = degree - e
        for g in _irreducible_raw(field, e):
            for t in itertools.product(range(q), repeat=cofactor):
                prod = [0] * degree
                # multiply g by h = z^cofactor + sum t[j] z^j, recording only
                # coefficients below z^degree (the product is monic of degree
                # `degree` by construction)
                for i, gc in enumerate(g):
                    if gc:
                        base = i + cofactor
                        if base < degree:
                            prod[base] = add(prod[base], gc)
                        for j, hc in enumerate(t):
                            if hc:
                                prod[i + j] = add(prod[i + j], mul(gc, hc))
                index = 0
                for c in reversed(prod):
                    index = index * q + c
                marked[index] = 1
    out = []
    for index in range(size):
        if not marked[index]:
            coeffs = []
            rem = index
            for _ in range(degree):
                rem, c = divmod(rem, q)
                coeffs.append(c)
            coeffs.append(1)
            out.append(tuple(coeffs))
    return out


@lru_cache(maxsize=None)
def irreducibles(field: GF, degree: int, nonzero_constant: bool = False) -> tuple[Poly, ...]:
    """All monic irreducible polynomials of the given degree, sorted by code."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    polys = [Poly(field, t) for t in _irreducible_raw(field, degree)]
    if nonzero_constant:
        polys = [f for f in polys if f.constant != 0]
    return tuple(polys)


@lru_cache(maxsize=None)
def self_reciprocal_irreducibles(field: GF, degree: int) -> tuple[Poly, ...]:
    """Monic self-reciprocal irreducibles of the given degree, sorted by code.

    Uses the structural facts that a self-reciprocal irreducible of degree >= 2
    has even degree and constant term 1 with palindromic coefficients, so only
    the q^(degree/2) palindromic candidates need scanning.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    q = field.q
    if degree == 1:
        return tuple(sorted({Poly(field, (field.neg(1), 1)), Poly(field, (1, 1))},
                            key=Poly.code))
    if degree % 2:
        return ()
    m = degree // 2
    check_enumeration_bound(
        q**m, f"self-reciprocal scan over GF({q}) degree {degree}"
    )
    one, neg_one = 1, field.neg(1)
    out = []
    for t in itertools.product(range(q), repeat=m):
        coeffs = (1, *t, *t[-2::-1], 1)
        if poly_eval(field, coeffs, one) == 0 or poly_eval(field, coeffs, neg_one) == 0:
            continue
        f = Poly(field, coeffs)
        if is_irreducible(f):
            out.append(f)
    out.sort(key=Poly.code)
    return tuple(out)


@lru_cache(maxsize=None)
def reciprocal_pairs(field: GF, degree: int) -> tuple[tuple[Poly, Poly], ...]:
    """Unordered pairs {f, f*} of distinct reciprocal irreducible partners,
    each reported as (f, f*) with f of smaller code, sorted by f's code."""
    out = []
    for f in irreducibles(field, degree, nonzero_constant=True):
        g = reciprocal(f)
        if g != f and f.code() < g.code():
            out.append((f, g))
    return tuple(out)


# -- structured hermitian-self-reciprocal enumeration ---------------------------


@lru_cache(maxsize=None)
def norm_one_circle(base_q: int) -> tuple[int, ...]:
    """Codes of the order-(base_q + 1) subgroup of GF(base_q^2)*, sorted."""
    ext = ff_from_order(base_q * base_q)
    return tuple(c for c in range(1, ext.q) if ext.pow(c, base_q + 1) == 1)


@lru_cache(maxsize=None)
def _hermitian_middles(base_q: int, a0: int) -> tuple[int, ...]:
    """Solutions c of c == (c * a0^(-1))^base_q in GF(base_q^2) (middle
    coefficient consistency for even-degree hermitian-self-reciprocal polys)."""
    ext = ff_from_order(base_q * base_q)
    a0_inv = ext.inv(a0)
    return tuple(
        c for c in range(ext.q) if ext.pow(ext.mul(c, a0_inv), base_q) == c
    )


def iter_hermitian_self_reciprocal_coeffs(
    base_q: int, degree: int, constant: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield the coefficient tuples of every monic hermitian-self-reciprocal
    polynomial of the given degree over GF(base_q^2).

    The family is cut out by: constant term on the norm-one circle, lower-half
    coefficients determined by the upper half through the twisted reversal, and
    (in even degree) a middle-coefficient consistency equation.  Optionally
    restrict to a fixed ``constant`` code (must lie on the circle).
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    ext = ff_from_order(base_q * base_q)
    qq = ext.q
    circle = norm_one_circle(base_q)
    if constant is not None:
        if constant not in circle:
            raise ValueError(
                f"constant code {constant} is not on the norm-one circle of GF({qq})"
            )
        constants: tuple[int, ...] = (constant,)
    else:
        constants = circle
    n = degree
    mul, pw = ext.mul, ext.pow
    sigma = [pw(c, base_q) for c in range(qq)]
    half = (n - 1) // 2  # number of freely chosen upper coefficients
    for a0 in constants:
        a0_inv = ext.inv(a0)
        if n == 1:
            yield (a0, 1)
            continue
        middles = _hermitian_middles(base_q, a0) if n % 2 == 0 else (None,)
        for upper in itertools.product(range(qq), repeat=half):
            # upper[i] is the coefficient of z^(n-1-i), i = 0..half-1
            derived = [sigma[mul(c, a0_inv)] for c in upper]
            for mid in middles:
                coeffs = [a0]
                coeffs.extend(derived)
                if mid is not None:
                    coeffs.append(mid)
                coeffs.extend(upper[::-1])
                coeffs.append(1)
                yield tuple(coeffs)


@lru_cache(maxsize=None)
def hermitian_self_reciprocal_irreducibles(base_q: int, degree: int) -> tuple[Poly, ...]:
    """Monic hermitian-self-reciprocal irreducibles of the given degree over
    GF(base_q^2), via the structured family scan, sorted by code."""
    ext = ff_from_order(base_q * base_q)
    check_enumeration_bound(
        (base_q + 1) * base_q ** max(degree - 1, 0),
        f"hermitian-self-reciprocal scan over GF({ext.q}) degree {degree}",
    )
    out = [
        f
        for t in iter_hermitian_self_reciprocal_coeffs(base_q, degree)
        if is_irreducible(f := Poly(ext, t))
    ]
    out.sort(key=Poly.code)
    return tuple(out)


@lru_cache(maxsize=None)
def hermitian_pairs(base_q: int, degree: int) -> tuple[tuple[Poly, Poly], ...]:
    """Unordered pairs of distinct hermitian-reciprocal irreducible partners
    over GF(base_q^2), as (f, partner) with f of smaller code."""
    ext = ff_from_order(base_q * base_q)
    out = []
    for f in irreducibles(ext, degree, nonzero_constant=True):
        g = hermitian_reciprocal(f, base_q)
        if g != f and f.code() < g.code():
            out.append((f, g))
    return tuple(out)


# -- closed-form census counts --------------------------------------------------


@lru_cache(maxsize=None)
def _necklace(q: int, d: int) -> int:
    total = sum(mobius(d // e) * q**e for e in divisors(d))
    assert total % d == 0
    return total // d


@lru_cache(maxsize=None)
def _formula_count(kind: CensusKind, q: int, d: int) -> int:
    if kind is CensusKind.IRREDUCIBLE:
        return q - 1 if d == 1 else _necklace(q, d)
    if kind is CensusKind.SELF_RECIPROCAL:
        if d == 1:
            return 2 if q % 2 else 1
        if d % 2:
            return 0
        # Count Galois orbits of size d on the norm-one circle of GF(q^d):
        # the circle has q^(d/2) + 1 elements; +/-1 and the elements whose
        # degree is a proper even divisor d' (with (d/d') odd) are removed,
        # and the remainder falls into orbits of size d.
        m = d // 2
        total = q**m + 1 - (2 if q % 2 else 1)
        for mp in divisors(m):
            if mp < m and (m // mp) % 2 == 1:
                total -= 2 * mp * _formula_count(kind, q, 2 * mp)
        assert total % d == 0 and total >= 0
        return total // d
    if kind is CensusKind.HERMITIAN_SELF_RECIPROCAL:
        if d % 2 == 0:
            return 0
        # Same orbit count on the circle of GF(q^(2d)) viewed over GF(q^2):
        # all q^d + 1 circle elements have odd degree e | d, in orbits of size e.
        total = q**d + 1
        for e in divisors(d):
            if e < d:
                total -= e * _formula_count(kind, q, e)
        assert total % d == 0 and total >= 0
        return total // d
    if kind is CensusKind.RECIPROCAL_PAIRS:
        diff = _formula_count(CensusKind.IRREDUCIBLE, q, d) - _formula_count(
            CensusKind.SELF_RECIPROCAL, q, d
        )
        assert diff % 2 == 0 and diff >= 0
        return diff // 2
    if kind is CensusKind.HERMITIAN_PAIRS:
        diff = _formula_count(CensusKind.IRREDUCIBLE, q * q, d) - _formula_count(
            CensusKind.HERMITIAN_SELF_RECIPROCAL, q, d
        )
        assert diff % 2 == 0 and diff >= 0
        return diff // 2
    raise ValueError(f"unknown census kind {kind!r}")


def _enumerate_cell(kind: CensusKind, q: int, d: int) -> tuple:
    if kind is CensusKind.IRREDUCIBLE:
        return irreducibles(ff_from_order(q), d, nonzero_constant=True)
    if kind is CensusKind.SELF_RECIPROCAL:
        field = ff_from_order(q)
        return tuple(
            f for f in irreducibles(field, d, nonzero_constant=True)
            if is_self_reciprocal(f)
        )
    if kind is CensusKind.RECIPROCAL_PAIRS:
        return reciprocal_pairs(ff_from_order(q), d)
    if kind is CensusKind.HERMITIAN_SELF_RECIPROCAL:
        ext = ff_from_order(q * q)
        return tuple(
            f for f in irreducibles(ext, d, nonzero_constant=True)
            if is_hermitian_self_reciprocal(f, q)
        )
    if kind is CensusKind.HERMITIAN_PAIRS:
        return hermitian_pairs(q, d)
    raise ValueError(f"unknown census kind {kind!r}")


def census_count(
    kind: CensusKind,
    q: int,
    d: int,
    method: str = "formula",
    with_witnesses: bool = False,
) -> CensusCount:
    """Count one census cell.

    ``method="enumerate"`` scans the full candidate space (q^d monic
    polynomials, or q^(2d) for the hermitian kinds, subject to the enumeration
    cap) and can attach the witnesses; ``method="formula"`` uses the closed
    necklace/recursion counts.
    """
    if as_prime_power(q) is None:
        raise ValueError(f"q={q} is not a prime power")
    if d < 1:
        raise ValueError(f"degree d={d} must be >= 1")
    if method == "formula":
        if with_witnesses:
            raise ValueError("witnesses require method='enumerate'")
        return CensusCount(kind, q, d, _formula_count(kind, q, d))
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    space = q ** (2 * d) if kind in _HERMITIAN_KINDS else q**d
    check_enumeration_bound(space, f"census {kind.value} at q={q}, d={d}")
    items = _enumerate_cell(kind, q, d)
    return CensusCount(kind, q, d, len(items), items if with_witnesses else None)
