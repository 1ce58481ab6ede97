"""
Tests for the explicit two- and three-colorings

Tests color_rby, color_alternating, color_two_odd_even_b, color_013, color_01b and color_01b_regime
"""
import pytest

from app.exceptions import InvalidInputError
from app.models.residue import ResidueSet
from app.services.construct import (
    blocks_013,
    color_013,
    color_01b,
    color_01b_regime,
    color_alternating,
    color_rby,
    color_two_odd_even_b,
)
from app.services.oracle import verify


def test_color_rby():
    """
    Test color_rby on n = 9

    Should color x with x mod 3
    """
    assert color_rby(9).to_text() == "012012012"
    assert color_rby(9).to_letters() == "RBYRBYRBY"


def test_color_rby_requires_multiple_of_three():
    """
    Test color_rby on n = 10

    Should raise InvalidInputError
    """
    with pytest.raises(InvalidInputError):
        color_rby(10)


def test_color_alternating():
    """
    Test color_alternating on n = 6

    Should alternate the two colors and reject odd n
    """
    assert color_alternating(6).to_text() == "010101"
    with pytest.raises(InvalidInputError):
        color_alternating(7)


@pytest.mark.parametrize("n, expected", [(5, "00101"), (7, "0010101"), (9, "001010101")])
def test_color_two_odd_even_b(n, expected):
    """
    Test color_two_odd_even_b on small odd n

    Should color 0 and the odd residues with color 0 and the other even residues with color 1
    """
    assert color_two_odd_even_b(n).to_text() == expected


def test_color_two_odd_even_b_is_polychromatic():
    """
    Test color_two_odd_even_b against every {0, 1, b} with b even

    Should leave no translate monochromatic for odd n up to 41
    """
    for n in range(5, 42, 2):
        coloring = color_two_odd_even_b(n)
        for b in range(2, n, 2):
            assert verify(n, ResidueSet(modulus=n, elements=(0, 1, b)), coloring) == [], (n, b)


def test_blocks_013():
    """
    Test blocks_013 on both residues mod 4

    Should split n into an even number of blocks of length 2 and 3
    """
    assert blocks_013(9) == [2, 2, 2, 3]
    assert blocks_013(11) == [2, 3, 3, 3]
    for n in range(5, 80, 2):
        if n == 7:
            continue
        blocks = blocks_013(n)
        assert sum(blocks) == n
        assert len(blocks) % 2 == 0
        assert set(blocks) <= {2, 3}


@pytest.mark.parametrize("n, expected", [(5, "00111"), (9, "001100111"), (11, "00111000111")])
def test_color_013(n, expected):
    """
    Test color_013 on small odd n

    Should paint the blocks with alternating colors
    """
    assert color_013(n).to_text() == expected


def test_color_013_is_polychromatic():
    """
    Test color_013 against {0, 1, 3}

    Should have no violations for every odd n from 5 to 99 except 7
    """
    for n in range(5, 100, 2):
        if n == 7:
            continue
        assert verify(n, ResidueSet(modulus=n, elements=(0, 1, 3)), color_013(n)) == [], n


@pytest.mark.parametrize("n", [6, 7, 3])
def test_color_013_preconditions(n):
    """
    Test color_013 on even n, n = 7 and n below 5

    Should raise InvalidInputError
    """
    with pytest.raises(InvalidInputError):
        color_013(n)


def test_color_01b_exact_period():
    """
    Test color_01b when b − 2 divides n

    Should return the periodic coloring with period b − 2
    """
    assert color_01b(15, 5).to_text() == "001" * 5


@pytest.mark.parametrize(
    "n, b, expected_regime",
    [
        (15, 5, "chi0"),
        (21, 7, "chi1"),
        (23, 9, "chi2"),
        (23, 7, "chi3"),
        (25, 9, "chi4"),
        (27, 9, "chi4"),
    ],
)
def test_color_01b_remainders(n, b, expected_regime):
    """
    Test color_01b for each remainder regime of n mod (b − 2)

    Should report the expected regime and return a two-coloring with no violations against {0, 1, b}
    """
    assert color_01b_regime(n, b) == expected_regime

    coloring = color_01b(n, b)

    assert coloring.num_colors == 2
    assert coloring.used_colors == 2
    assert verify(n, ResidueSet(modulus=n, elements=(0, 1, b)), coloring) == []


def test_color_01b_sweep():
    """
    Test color_01b over every admissible (n, b) with n below 80

    Should produce a verified coloring for every odd n ≥ 9 and odd b in [5, ⌈n/2⌉]
    """
    for n in range(9, 80, 2):
        for b in range(5, (n + 1) // 2 + 1, 2):
            coloring = color_01b(n, b)
            assert verify(n, ResidueSet(modulus=n, elements=(0, 1, b)), coloring) == [], (n, b)


@pytest.mark.parametrize("n, b", [(10, 5), (15, 4), (15, 3), (15, 11), (7, 5)])
def test_color_01b_preconditions(n, b):
    """
    Test color_01b outside its domain

    Should raise InvalidInputError
    """
    with pytest.raises(InvalidInputError):
        color_01b(n, b)
