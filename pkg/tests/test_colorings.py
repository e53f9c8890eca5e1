"""Tests for coloring enumeration: brute-force oracle vs linear-algebra backend.

The two backends share nothing but the crossing convention, so list-level
agreement between them is the strongest internal check the suite has.
"""

from itertools import product

import pytest

from quandlequiver.braids import BraidWord, TorusLinkSpec, propagate, torus_braid
from quandlequiver.colorings import (
    NONTRIVIAL,
    TRIVIAL,
    ColoringSet,
    classify,
    enumerate_colorings_linear,
    enumerate_colorings_oracle,
)
from quandlequiver.errors import CapExceededError
from quandlequiver.quandles import DihedralQuandle, FiniteQuandle

FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))


def test_classify():
    assert classify((2, 2, 2)) == TRIVIAL
    assert classify((0,)) == TRIVIAL
    assert classify((1, 2, 1)) == NONTRIVIAL


def test_trefoil_has_nine_colorings_mod_3():
    word = torus_braid(2, 3)
    oracle = enumerate_colorings_oracle(word, DihedralQuandle(3))
    linear = enumerate_colorings_linear(word, 3)
    assert oracle.count == linear.count == 9
    assert oracle.colorings == linear.colorings


def test_figure_eight_has_25_colorings_mod_5():
    oracle = enumerate_colorings_oracle(FIGURE_EIGHT, DihedralQuandle(5))
    linear = enumerate_colorings_linear(FIGURE_EIGHT, 5)
    assert oracle.count == linear.count == 25
    assert oracle.colorings == linear.colorings
    assert len(oracle.trivial_indices) == 5


@pytest.mark.parametrize("n", list(range(2, 10)))
def test_unknot_closure_has_only_constant_colorings(n):
    # T(5,1) closes to an unknot; only the n trivial colorings survive
    word = torus_braid(5, 1)
    oracle = enumerate_colorings_oracle(word, DihedralQuandle(n))
    linear = enumerate_colorings_linear(TorusLinkSpec(5, 1), n)
    expected = [(c,) * 5 for c in range(n)]
    assert oracle.colorings == expected
    assert linear.colorings == expected


@pytest.mark.parametrize("n", list(range(2, 10)))
def test_figure_eight_backends_agree(n):
    oracle = enumerate_colorings_oracle(FIGURE_EIGHT, DihedralQuandle(n))
    linear = enumerate_colorings_linear(FIGURE_EIGHT, n)
    assert oracle.count == linear.count
    assert oracle.colorings == linear.colorings


def test_backends_agree_on_torus_grid():
    for p in (2, 3):
        for q in range(0, 8):
            word = torus_braid(p, q)
            for n in range(2, 8):
                oracle = enumerate_colorings_oracle(word, DihedralQuandle(n))
                linear = enumerate_colorings_linear(word, n)
                assert oracle.count == linear.count, (p, q, n)
                assert oracle.colorings == linear.colorings, (p, q, n)


@pytest.mark.parametrize("p,q,n", [(5, 2, 5), (5, 5, 6), (5, 10, 3), (7, 2, 3)])
def test_backends_agree_on_wider_cells(p, q, n):
    word = torus_braid(p, q)
    oracle = enumerate_colorings_oracle(word, DihedralQuandle(n))
    linear = enumerate_colorings_linear(word, n)
    assert oracle.colorings == linear.colorings


def test_colorings_are_lex_sorted_and_closed():
    word = torus_braid(5, 2)
    quandle = DihedralQuandle(5)
    cs = enumerate_colorings_oracle(word, quandle)
    assert cs.colorings == sorted(set(cs.colorings))
    for c in cs.colorings:
        assert propagate(word, quandle, c).bottom == c


def test_trivial_colorings_are_the_constants():
    word = torus_braid(5, 5)
    cs = enumerate_colorings_linear(word, 6)
    trivial = [cs.colorings[i] for i in cs.trivial_indices]
    assert trivial == [(c,) * 5 for c in range(6)]
    assert len(cs.nontrivial_indices) == cs.count - 6


def test_oracle_works_on_non_dihedral_tables():
    alexander = FiniteQuandle([[(2 * x - y) % 5 for y in range(5)] for x in range(5)])
    cs = enumerate_colorings_oracle(FIGURE_EIGHT, alexander)
    quandle = alexander
    assert cs.count == len(cs.colorings)
    for c in cs.colorings:
        assert propagate(FIGURE_EIGHT, quandle, c).bottom == c


def test_oracle_cap_raises_naming_count():
    with pytest.raises(CapExceededError) as exc:
        enumerate_colorings_oracle(torus_braid(5, 2), DihedralQuandle(17), cap=100)
    assert exc.value.count == 17**5


def test_linear_cap_degrades_to_count_only():
    cs = enumerate_colorings_linear(torus_braid(5, 0), 9, cap=100)
    assert cs.count == 9**5
    assert cs.colorings is None
    with pytest.raises(ValueError):
        cs.trivial_indices


def test_oracle_count_only_skips_list():
    cs = enumerate_colorings_oracle(FIGURE_EIGHT, DihedralQuandle(5), count_only=True)
    assert cs.count == 25
    assert cs.colorings is None


def test_linear_accepts_spec_and_word():
    by_spec = enumerate_colorings_linear(TorusLinkSpec(3, 4), 9)
    by_word = enumerate_colorings_linear(torus_braid(3, 4), 9)
    assert by_spec.count == by_word.count
    assert by_spec.colorings == by_word.colorings


def test_coloring_set_count_consistency():
    word = torus_braid(2, 3)
    with pytest.raises(ValueError):
        ColoringSet(word, DihedralQuandle(3), 4, [(0, 0)])
