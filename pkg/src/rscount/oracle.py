"""Ground-truth class counts by exhaustive enumeration.

Each oracle walks a complete candidate space and counts class invariants
directly, sharing no arithmetic with the closed-form or series routes:

* linear / unitary / symplectic families: monic squarefree polynomials under
  the family's symmetry and constant-term constraint, one class per polynomial;
* orthogonal families: decorated factorization data — distinct
  reciprocal-symmetric blocks, reciprocal pairs, and multiplicity-bounded
  eigenvalue ±1 parts with type labels — with the weight-2 splitting rule for
  data that carry no ±1 eigenvalues.

Scans refuse (raising :class:`~rscount.census.EnumerationBoundError`) rather
than run past the configured candidate cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .census import (
    check_enumeration_bound,
    iter_hermitian_self_reciprocal_coeffs,
    reciprocal_pairs,
    self_reciprocal_irreducibles,
)
from .closedform import Family, GroupSpec
from .fields import GF, Poly, ff_from_order, poly_eval, squarefree_codes

__all__ = [
    "ConjugacyDatum",
    "OracleResult",
    "iter_orthogonal_data",
    "oracle_constant_histogram",
    "oracle_count",
    "oracle_linear",
    "oracle_orthogonal",
    "oracle_symplectic",
    "oracle_unitary",
    "oracle_unitary_histogram",
]


@dataclass(frozen=True)
class OracleResult:
    """Result of one enumeration: the count plus how much work backed it."""

    group: GroupSpec
    count: int
    witness_count: int
    notes: str = ""


@dataclass(frozen=True)
class ConjugacyDatum:
    """Class datum for an orthogonal group: eigenvalue ±1 parts plus blocks.

    ``a_minus``/``b_plus`` are the multiplicities of the factors (z-1)/(z+1);
    type labels are +1/-1 and present exactly when the part is nonempty (in
    even characteristic z+1 = z-1 and only the ``a`` part is used).  ``blocks``
    are distinct reciprocal-symmetric irreducibles of even degree; ``pairs``
    are distinct unordered irreducible reciprocal pairs (f, reciprocal of f).
    """

    a_minus: int
    a_type: Optional[int]
    b_plus: int
    b_type: Optional[int]
    blocks: tuple[Poly, ...]
    pairs: tuple[tuple[Poly, Poly], ...]
    total_dim: int

    @property
    def has_eigenvalue_part(self) -> bool:
        return self.a_minus > 0 or self.b_plus > 0

    @property
    def block_pair_sign(self) -> int:
        """Product of per-component signs: -1 per block, +1 per pair."""
        return -1 if len(self.blocks) % 2 else 1


# ---------------------------------------------------------------------------
# squarefree scans (linear / unitary / symplectic)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _linear_histogram(n: int, q: int) -> dict[int, int]:
    """constant code -> number of monic squarefree degree-n polys over GF(q)."""
    field = ff_from_order(q)
    check_enumeration_bound(q**n, f"squarefree scan over GF({q}) degree {n}")
    hist: dict[int, int] = {c: 0 for c in range(1, q)}
    for tail in itertools.product(range(q), repeat=n):
        c0 = tail[0]
        if c0 == 0:
            continue
        if squarefree_codes(field, (*tail, 1)):
            hist[c0] += 1
    return hist


@lru_cache(maxsize=None)
def _unitary_histogram(n: int, q: int) -> dict[int, int]:
    """constant code -> number of degree-n conjugate-self-reciprocal squarefree
    polys over GF(q^2); constants range over the norm-one circle."""
    check_enumeration_bound(
        q ** (2 * n), f"conjugate-symmetric scan over GF({q}^2) degree {n}"
    )
    ext = ff_from_order(q * q)
    hist: dict[int, int] = {}
    for coeffs in iter_hermitian_self_reciprocal_coeffs(q, n):
        if squarefree_codes(ext, coeffs):
            c0 = coeffs[0]
            hist[c0] = hist.get(c0, 0) + 1
    return hist


@lru_cache(maxsize=None)
def _symplectic_scan(n: int, q: int) -> int:
    """Count of monic squarefree reciprocal-symmetric degree-2n polys over
    GF(q) with constant term 1 and no root at ±1."""
    field = ff_from_order(q)
    check_enumeration_bound(
        q ** (2 * n), f"reciprocal-symmetric scan over GF({q}) degree {2 * n}"
    )
    one, neg_one = 1, field.neg(1)
    count = 0
    for t in itertools.product(range(q), repeat=n):
        coeffs = (1, *t, *t[-2::-1], 1)
        if poly_eval(field, coeffs, one) == 0 or poly_eval(field, coeffs, neg_one) == 0:
            continue
        if squarefree_codes(field, coeffs):
            count += 1
    return count


def _neg_one_code(field: GF) -> int:
    return field.neg(1)


def oracle_linear(n: int, q: int, equals: Optional[int] = None) -> OracleResult:
    """Count monic squarefree degree-n polynomials over GF(q).

    ``equals=None`` applies the nonzero-constant constraint (GL); an integer
    code restricts to that exact constant term (SL uses the code of (-1)^n).
    """
    _validate_rank(n, q)
    hist = _linear_histogram(n, q)
    if equals is None:
        count = sum(hist.values())
        family, notes = Family.GL, "constant term nonzero"
    else:
        if not 1 <= equals < q:
            raise ValueError(f"constant-term code {equals!r} not a unit of GF({q})")
        count = hist[equals]
        family, notes = Family.SL, f"constant term fixed to code {equals}"
    return OracleResult(GroupSpec(family, n, q), count, sum(hist.values()), notes)


def oracle_unitary(n: int, q: int, equals: Optional[int] = None) -> OracleResult:
    """Count degree-n conjugate-self-reciprocal squarefree polys over GF(q²).

    ``equals=None`` counts all (U); an integer code restricts the constant
    term (SU uses the code of (-1)^n in GF(q²))."""
    _validate_rank(n, q)
    hist = _unitary_histogram(n, q)
    if equals is None:
        count = sum(hist.values())
        family, notes = Family.U, "constant term on the norm-one circle"
    else:
        count = hist.get(equals, 0)
        family, notes = Family.SU, f"constant term fixed to code {equals}"
    return OracleResult(GroupSpec(family, n, q), count, sum(hist.values()), notes)


def oracle_symplectic(n: int, q: int) -> OracleResult:
    """Count degree-2n reciprocal-symmetric squarefree polys, no ±1 roots."""
    _validate_rank(n, q)
    count = _symplectic_scan(n, q)
    return OracleResult(
        GroupSpec(Family.SP, n, q), count, count, "one class per polynomial"
    )


def oracle_constant_histogram(n: int, q: int) -> dict[int, int]:
    """For each unit constant code, the count of monic squarefree degree-n
    polynomials over GF(q) with that constant term."""
    _validate_rank(n, q)
    return dict(_linear_histogram(n, q))


def oracle_unitary_histogram(n: int, q: int) -> dict[int, int]:
    """Same histogram for conjugate-self-reciprocal polys over GF(q²),
    keyed by norm-one-circle constant codes."""
    _validate_rank(n, q)
    return dict(_unitary_histogram(n, q))


def _validate_rank(n: int, q: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"rank n must be a positive integer, got {n!r}")
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"field size q must be an integer >= 2, got {q!r}")


# ---------------------------------------------------------------------------
# orthogonal data enumeration
# ---------------------------------------------------------------------------


def _block_pair_universe(field: GF, max_degree: int):
    """Sorted building list [(degree, sign, payload), ...] of blocks & pairs."""
    items = []
    for d in range(2, max_degree + 1, 2):
        for f in self_reciprocal_irreducibles(field, d):
            items.append((d, -1, f))
    for d in range(1, max_degree // 2 + 1):
        for f, g in reciprocal_pairs(field, d):
            items.append((2 * d, 1, (f, g)))
    items.sort(key=lambda item: item[0])
    return items


def _z_part_options(m: int, q_odd: bool):
    """(a, a_type, b, b_type) choices admissible for total dimension m."""
    options = []
    a_range = (0, 1, 2) if q_odd else (0, 2)
    b_range = (0, 2) if q_odd else (0,)
    for a in a_range:
        for b in b_range:
            if a + b > m or (m - a - b) % 2:
                continue
            for a_type in ((1, -1) if a else (None,)):
                for b_type in ((1, -1) if b else (None,)):
                    options.append((a, a_type, b, b_type))
    return options


def iter_orthogonal_data(m: int, q: int) -> Iterator[ConjugacyDatum]:
    """All class data of total dimension m for the orthogonal groups over GF(q).

    Every datum's non-eigenvalue part has characteristic-polynomial constant
    term 1 (asserted), so the data are exactly the admissible class labels.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"total dimension m must be a positive integer, got {m!r}")
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"field size q must be an integer >= 2, got {q!r}")
    q_odd = q % 2 == 1
    if not q_odd and m % 2:
        raise ValueError(
            "odd-dimensional orthogonal data in even characteristic are symplectic; "
            "use oracle_symplectic"
        )
    field = ff_from_order(q)
    universe = _block_pair_universe(field, m)
    degrees = [item[0] for item in universe]

    def constant_of(item) -> int:
        d, sign, payload = item
        if sign == -1:
            return payload.coeffs[0]
        return field.mul(payload[0].coeffs[0], payload[1].coeffs[0])

    for item in universe:
        assert constant_of(item) == 1, "block/pair constant term must be 1"

    chosen: list = []

    def dfs(start: int, remaining: int, a, a_type, b, b_type):
        if remaining == 0:
            blocks = tuple(p for (d, s, p) in chosen if s == -1)
            pairs = tuple(p for (d, s, p) in chosen if s == 1)
            yield ConjugacyDatum(a, a_type, b, b_type, blocks, pairs, m)
            return
        for i in range(start, len(universe)):
            if degrees[i] > remaining:
                break
            chosen.append(universe[i])
            yield from dfs(i + 1, remaining - degrees[i], a, a_type, b, b_type)
            chosen.pop()

    for a, a_type, b, b_type in _z_part_options(m, q_odd):
        yield from dfs(0, m - a - b, a, a_type, b, b_type)


@lru_cache(maxsize=None)
def _orthogonal_sums(m: int, q: int) -> tuple[int, int, int]:
    """(S, D, data_count) for total dimension m over GF(q).

    S sums weight 2 over data without eigenvalue ±1 parts and weight 1 over
    the rest; D (meaningful for even m) doubles the signed count of the
    no-eigenvalue data, sign -1 per block and +1 per pair.
    """
    S = D = total = 0
    for datum in iter_orthogonal_data(m, q):
        total += 1
        if datum.has_eigenvalue_part:
            S += 1
        else:
            S += 2
            D += 2 * datum.block_pair_sign
    return S, D, total


def oracle_orthogonal(m: int, q: int, target: str) -> OracleResult:
    """Class count for SO of total dimension m over GF(q).

    ``target`` is "plus"/"minus" (even m) or "odd_dim" (odd m, odd q).  The
    returned group spec carries the rank: n = m//2.
    """
    if target not in ("plus", "minus", "odd_dim"):
        raise ValueError(f"target must be 'plus', 'minus', or 'odd_dim', got {target!r}")
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"total dimension m must be an integer >= 2, got {m!r}")
    if m % 2 == 0 and target == "odd_dim":
        raise ValueError("target 'odd_dim' needs odd total dimension m")
    if m % 2 == 1 and target != "odd_dim":
        raise ValueError(f"target {target!r} needs even total dimension m")
    if m % 2 == 1 and q % 2 == 0:
        raise ValueError(
            "odd total dimension in even characteristic coincides with the "
            "symplectic group; use oracle_symplectic((m-1)//2, q)"
        )
    S, D, total = _orthogonal_sums(m, q)
    n = m // 2
    if target == "odd_dim":
        count, spec = _halve(S), GroupSpec(Family.SO_ODD, n, q)
    elif target == "plus":
        count, spec = _halve(S + D), GroupSpec(Family.SO_PLUS, n, q)
    else:
        count, spec = _halve(S - D), GroupSpec(Family.SO_MINUS, n, q)
    return OracleResult(spec, count, total, f"S={S}, D={D}")


def _halve(value: int) -> int:
    if value % 2:
        raise ArithmeticError(f"orthogonal weighted sum {value} is not even")
    return value // 2


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def oracle_count(spec: GroupSpec) -> OracleResult:
    """Route a group spec to its enumeration, including the SL/SU constant
    filters and the even-characteristic odd-orthogonal delegation."""
    family, n, q = spec
    _validate_rank(n, q)
    if family is Family.GL:
        return oracle_linear(n, q)
    if family is Family.SL:
        field = ff_from_order(q)
        code = 1 if n % 2 == 0 else field.neg(1)
        result = oracle_linear(n, q, equals=code)
        return OracleResult(spec, result.count, result.witness_count, result.notes)
    if family is Family.U:
        return oracle_unitary(n, q)
    if family is Family.SU:
        ext = ff_from_order(q * q)
        code = 1 if n % 2 == 0 else ext.neg(1)
        result = oracle_unitary(n, q, equals=code)
        return OracleResult(spec, result.count, result.witness_count, result.notes)
    if family is Family.SP:
        return oracle_symplectic(n, q)
    if family is Family.SO_ODD:
        if q % 2 == 0:
            result = oracle_symplectic(n, q)
            return OracleResult(
                spec, result.count, result.witness_count,
                "delegated to the symplectic scan (isomorphic in even characteristic)",
            )
        return oracle_orthogonal(2 * n + 1, q, "odd_dim")
    if family is Family.SO_PLUS:
        return oracle_orthogonal(2 * n, q, "plus")
    if family is Family.SO_MINUS:
        return oracle_orthogonal(2 * n, q, "minus")
    raise ValueError(f"unsupported family {family!r}")
