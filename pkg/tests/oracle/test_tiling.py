"""
Tests for the tiling oracle

Tests is_tiling, find_complement, complement_closure_check and the Newman criterion against exact cover
"""
from itertools import combinations

import pytest

from app.exceptions import InvalidInputError, SearchBoundExceededError
from app.models.residue import ResidueSet
from app.services.classify import newman_tiles_z, poly_number
from app.services.oracle import complement_closure_check, find_complement, is_blocking, is_tiling


def test_is_tiling():
    """
    Test is_tiling on {0,1,2} in Z_9

    Should accept {0,3,6} and reject {0,1,6}
    """
    residue_set = ResidueSet.of(9, [0, 1, 2])

    assert is_tiling(9, residue_set, ResidueSet.of(9, [0, 3, 6]))
    assert not is_tiling(9, residue_set, ResidueSet.of(9, [0, 1, 6]))


@pytest.mark.parametrize(
    "n, elements, expected",
    [
        (9, [0, 1, 2], (0, 3, 6)),
        (6, [0, 1, 5], (0, 3)),
        (27, [0, 3, 6], (0, 1, 2, 9, 10, 11, 18, 19, 20)),
    ],
)
def test_find_complement(n, elements, expected):
    """
    Test find_complement on sets that tile

    Should return the first complement found, translated to contain 0
    """
    certificate = find_complement(n, ResidueSet.of(n, elements))

    assert certificate.found
    assert certificate.complement.elements == expected
    assert not certificate.exhausted


def test_find_complement_size_does_not_divide():
    """
    Test find_complement when |S| does not divide n

    Should report an exhausted search without a complement, even above the bound
    """
    certificate = find_complement(7, ResidueSet.of(7, [0, 1, 3]))
    assert certificate.complement is None
    assert certificate.exhausted

    assert find_complement(1000, ResidueSet.of(1000, [0, 1, 3])).exhausted


def test_find_complement_exhausts():
    """
    Test find_complement on {0,1,3} in Z_12

    Should search exhaustively and find no complement
    """
    certificate = find_complement(12, ResidueSet.of(12, [0, 1, 3]))

    assert certificate.complement is None
    assert certificate.exhausted


def test_find_complement_bound():
    """
    Test find_complement above an explicit bound

    Should raise SearchBoundExceededError
    """
    with pytest.raises(SearchBoundExceededError):
        find_complement(12, ResidueSet.of(12, [0, 1, 2]), bound=9)


def test_closure_trivial_step():
    """
    Test complement_closure_check when a + b ≡ 0

    Should hold trivially
    """
    assert complement_closure_check(6, ResidueSet.of(6, [0, 1, 5]), ResidueSet.of(6, [0, 3]))


def test_closure_rejects_non_tiling():
    """
    Test complement_closure_check with a set that does not tile

    Should raise InvalidInputError
    """
    with pytest.raises(InvalidInputError):
        complement_closure_check(9, ResidueSet.of(9, [0, 1, 2]), ResidueSet.of(9, [0, 1, 6]))


def test_closure_rejects_complement_without_zero():
    """
    Test complement_closure_check with a complement missing 0

    Should raise InvalidInputError
    """
    with pytest.raises(InvalidInputError):
        complement_closure_check(9, ResidueSet.of(9, [0, 1, 2]), ResidueSet.of(9, [1, 4, 7]))


@pytest.mark.slow
def test_tiling_bridge():
    """
    Test find_complement against the closed form on every {0, a, b} with 3 ≤ n ≤ 30

    Should find a complement exactly when p = 3, closed under a + b and whose negation blocks
    """
    for n in range(3, 31):
        for a, b in combinations(range(1, n), 2):
            residue_set = ResidueSet(modulus=n, elements=(0, a, b))
            certificate = find_complement(n, residue_set)
            assert certificate.found == (poly_number(n, residue_set).p == 3), (n, a, b)
            if certificate.found:
                assert complement_closure_check(n, residue_set, certificate.complement), (n, a, b)
                assert is_blocking(n, residue_set, certificate.complement.negate()), (n, a, b)


@pytest.mark.slow
def test_newman_consistency():
    """
    Test newman_tiles_z against exact cover for every {0, a, b} ⊆ [0, 12]

    Should agree with the existence of a complement in some Z_n with 3 | n and 12 < n ≤ 36
    """
    for a, b in combinations(range(1, 13), 2):
        tiles = any(
            find_complement(n, ResidueSet(modulus=n, elements=(0, a, b))).found
            for n in range(15, 37, 3)
        )
        assert newman_tiles_z([0, a, b], 3, 1) == tiles, (a, b)
