"""Unit tests for the five polynomial censuses."""

import pytest

from rscount.census import (
    DEFAULT_ENUM_CAP,
    CensusCount,
    CensusKind,
    EnumerationBoundError,
    census_count,
    enumeration_cap,
    hermitian_pairs,
    hermitian_self_reciprocal_irreducibles,
    irreducibles,
    norm_one_circle,
    reciprocal_pairs,
    self_reciprocal_irreducibles,
)
from rscount.conjugation import (
    hermitian_reciprocal,
    is_hermitian_self_reciprocal,
    is_self_reciprocal,
    reciprocal,
)
from rscount.fields import Poly, ff_from_order, ff_make, is_irreducible


def test_kind_tokens_round_trip():
    for kind in CensusKind:
        assert CensusKind.from_token(kind.value) is kind
    with pytest.raises(ValueError):
        CensusKind.from_token("bogus")


# ---------------------------------------------------------------------------
# irreducible enumeration
# ---------------------------------------------------------------------------


def test_irreducibles_examples():
    f2 = ff_make(2)
    assert irreducibles(f2, 2, nonzero_constant=True) == (Poly(f2, [1, 1, 1]),)
    assert irreducibles(f2, 1, nonzero_constant=True) == (Poly(f2, [1, 1]),)
    assert irreducibles(f2, 1) == (Poly(f2, [0, 1]), Poly(f2, [1, 1]))
    f3 = ff_make(3)
    assert irreducibles(f3, 1, nonzero_constant=True) == (
        Poly(f3, [1, 1]),
        Poly(f3, [2, 1]),
    )


def test_irreducibles_are_sorted_irreducible_and_complete():
    for q in (2, 3, 4, 5):
        field = ff_from_order(q)
        for d in (1, 2, 3):
            polys = irreducibles(field, d)
            codes = [f.code() for f in polys]
            assert codes == sorted(codes)
            assert all(f.degree == d and f.is_monic for f in polys)
            assert all(is_irreducible(f) for f in polys)
            # Degree-weighted divisor sum recovers q^d.
        total = sum(
            e * len(irreducibles(field, e)) for e in (1, 2, 3) if 3 % e == 0
        )
        assert total == q**3


def test_self_reciprocal_irreducibles():
    f3 = ff_make(3)
    assert self_reciprocal_irreducibles(f3, 1) == (Poly(f3, [1, 1]), Poly(f3, [2, 1]))
    assert self_reciprocal_irreducibles(f3, 2) == (Poly(f3, [1, 0, 1]),)
    assert self_reciprocal_irreducibles(f3, 3) == ()
    f2 = ff_make(2)
    # z - 1 = z + 1 in characteristic 2: a single degree-1 fixed point.
    assert self_reciprocal_irreducibles(f2, 1) == (Poly(f2, [1, 1]),)
    for q in (2, 3, 4, 5):
        field = ff_from_order(q)
        for d in (1, 2, 4, 6):
            for f in self_reciprocal_irreducibles(field, d):
                assert is_irreducible(f) and is_self_reciprocal(f)


def test_reciprocal_pairs():
    f5 = ff_make(5)
    pairs = reciprocal_pairs(f5, 1)
    assert pairs == ((Poly(f5, [2, 1]), Poly(f5, [3, 1])),)  # {z-3, z-2}
    for q in (2, 3, 4, 5):
        field = ff_from_order(q)
        for d in (1, 2, 3):
            for f, g in reciprocal_pairs(field, d):
                assert f.code() < g.code()
                assert reciprocal(f) == g and reciprocal(g) == f
                assert is_irreducible(f) and is_irreducible(g)


def test_norm_one_circle():
    assert len(norm_one_circle(2)) == 3
    assert len(norm_one_circle(3)) == 4
    ext = ff_from_order(9)
    for c in norm_one_circle(3):
        assert ext.pow(c, 4) == 1


def test_hermitian_families():
    assert len(hermitian_self_reciprocal_irreducibles(2, 1)) == 3
    for base_q in (2, 3):
        ext = ff_from_order(base_q * base_q)
        for d in (1, 2, 3):
            for f in hermitian_self_reciprocal_irreducibles(base_q, d):
                assert is_irreducible(f)
                assert is_hermitian_self_reciprocal(f, base_q)
            for f, g in hermitian_pairs(base_q, d):
                assert f.code() < g.code()
                assert hermitian_reciprocal(f, base_q) == g
                assert is_irreducible(f) and is_irreducible(g)


# ---------------------------------------------------------------------------
# census_count
# ---------------------------------------------------------------------------


def test_census_anchor_values():
    assert census_count(CensusKind.IRREDUCIBLE, 3, 1).count == 2
    assert census_count(CensusKind.SELF_RECIPROCAL, 3, 2).count == 1
    assert census_count(CensusKind.RECIPROCAL_PAIRS, 5, 1).count == 1
    assert census_count(CensusKind.HERMITIAN_SELF_RECIPROCAL, 2, 1).count == 3
    # A deeper spot value for the necklace-based fast path.
    assert census_count(CensusKind.IRREDUCIBLE, 9, 6).count == 88440


def test_census_irreducible_table_q3():
    counts = [census_count(CensusKind.IRREDUCIBLE, 3, d).count for d in range(1, 6)]
    assert counts == [2, 3, 8, 18, 48]


def test_census_self_reciprocal_table_q3():
    counts = [census_count(CensusKind.SELF_RECIPROCAL, 3, d).count for d in range(1, 7)]
    assert counts == [2, 1, 0, 2, 0, 4]


def test_census_count_cell_fields():
    cell = census_count(CensusKind.IRREDUCIBLE, 3, 2)
    assert isinstance(cell, CensusCount)
    assert (cell.kind, cell.q, cell.degree, cell.count) == (
        CensusKind.IRREDUCIBLE,
        3,
        2,
        3,
    )
    assert cell.witnesses is None


def test_census_witnesses():
    cell = census_count(
        CensusKind.SELF_RECIPROCAL, 3, 2, method="enumerate", with_witnesses=True
    )
    f3 = ff_make(3)
    assert cell.witnesses == (Poly(f3, [1, 0, 1]),)
    assert cell.count == len(cell.witnesses)
    pair_cell = census_count(
        CensusKind.RECIPROCAL_PAIRS, 5, 1, method="enumerate", with_witnesses=True
    )
    assert pair_cell.count == len(pair_cell.witnesses) == 1


def test_census_formula_equals_enumerate():
    for kind in (
        CensusKind.IRREDUCIBLE,
        CensusKind.SELF_RECIPROCAL,
        CensusKind.RECIPROCAL_PAIRS,
    ):
        for q in (2, 3, 4, 5):
            for d in range(1, 6):
                fast = census_count(kind, q, d).count
                slow = census_count(kind, q, d, method="enumerate").count
                assert fast == slow, (kind, q, d)
    for kind in (CensusKind.HERMITIAN_SELF_RECIPROCAL, CensusKind.HERMITIAN_PAIRS):
        for q in (2, 3):
            for d in range(1, 4):
                fast = census_count(kind, q, d).count
                slow = census_count(kind, q, d, method="enumerate").count
                assert fast == slow, (kind, q, d)


def test_census_count_validation():
    with pytest.raises(ValueError):
        census_count(CensusKind.IRREDUCIBLE, 6, 2)  # composite q
    with pytest.raises(ValueError):
        census_count(CensusKind.IRREDUCIBLE, 3, 0)
    with pytest.raises(ValueError):
        census_count(CensusKind.IRREDUCIBLE, 3, 2, method="guess")
    with pytest.raises(ValueError):
        census_count(CensusKind.IRREDUCIBLE, 3, 2, with_witnesses=True)


def test_enumeration_cap_env_override(monkeypatch):
    assert enumeration_cap() == DEFAULT_ENUM_CAP
    monkeypatch.setenv("RSCOUNT_ENUM_CAP", "100")
    assert enumeration_cap() == 100
    with pytest.raises(EnumerationBoundError):
        census_count(CensusKind.IRREDUCIBLE, 2, 7, method="enumerate")  # 2^7 > 100
    # The formula path has no candidate space to cap.
    assert census_count(CensusKind.IRREDUCIBLE, 2, 7).count == 18


def test_star_involution_accounting():
    # The reciprocal map is an involution on irreducibles of degree d with
    # nonzero constant term: fixed points + 2 * pairs account for all of them.
    for q in (2, 3, 4, 5, 7):
        field = ff_from_order(q)
        for d in range(1, 5):
            total = census_count(CensusKind.IRREDUCIBLE, q, d).count
            fixed = len(self_reciprocal_irreducibles(field, d))
            paired = census_count(CensusKind.RECIPROCAL_PAIRS, q, d).count
            assert total == fixed + 2 * paired, (q, d)


def test_hermitian_involution_accounting():
    # Same accounting over GF(q^2) for the conjugate-reciprocal map.
    for base_q in (2, 3):
        for d in range(1, 4):
            total = census_count(CensusKind.IRREDUCIBLE, base_q * base_q, d).count
            fixed = census_count(
                CensusKind.HERMITIAN_SELF_RECIPROCAL, base_q, d
            ).count
            paired = census_count(CensusKind.HERMITIAN_PAIRS, base_q, d).count
            assert total == fixed + 2 * paired, (base_q, d)
