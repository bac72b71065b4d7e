from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lissatoric.braid import BraidWord, free_reduce, inverse, mirror
from lissatoric.errors import ParameterError, StrandLimitError, UnsupportedClosureError
from lissatoric.invariants import (
    PlanarMatching,
    all_matchings,
    bracket_state_sum,
    closure_component_count,
    is_palindromic,
    jones_polynomial,
    kauffman_bracket,
    rudolph_genus,
    writhe,
)
from lissatoric.laurent import LaurentPoly
from lissatoric.symbolic import lissajous_braid

TREFOIL = BraidWord.parse("s1 s1 s1")
FIGURE_EIGHT = BraidWord.parse("s1 s2^-1 s1 s2^-1")


@st.composite
def knot_words(draw):
    n = draw(st.integers(2, 4))
    letters = draw(st.lists(st.tuples(st.integers(1, n - 1), st.sampled_from((1, -1))), max_size=10))
    w = BraidWord(n, tuple(letters))
    # append a cycle so the closure is a knot
    cycle = BraidWord(n, tuple((i, 1) for i in range(1, n)))
    w = w * cycle
    if closure_component_count(w) != 1:
        w = cycle
    return w


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)])
def test_matching_count_is_catalan(n, count):
    assert len(list(all_matchings(n))) == count


def test_matching_parens_round_trip():
    for m in all_matchings(4):
        assert PlanarMatching.from_parens(m.parens()) == m


def test_crossing_matching_rejected():
    with pytest.raises(ParameterError):
        PlanarMatching((3, 2, 1, 0))


@pytest.mark.parametrize(
    "w, components",
    [(BraidWord.identity(3), 3), (BraidWord.parse("s1"), 1), (BraidWord.parse("s1 s1"), 2)],
)
def test_component_count(w, components):
    assert closure_component_count(w) == components


def test_lissajous_closure_is_knot():
    assert closure_component_count(lissajous_braid(3, 4, 5)) == 1


def test_unknot_bracket_is_one():
    assert kauffman_bracket(BraidWord.identity(1)) == 1
    assert jones_polynomial(BraidWord.identity(1)) == 1


def test_trefoil_values():
    # frozen from the brute-force state sum
    bracket = LaurentPoly({-7: 1, -3: -1, 5: -1}, var="A")
    assert bracket_state_sum(TREFOIL) == bracket
    assert kauffman_bracket(TREFOIL) == bracket
    assert jones_polynomial(TREFOIL) == LaurentPoly.parse("t + t^3 - t^4")


def test_figure_eight_jones():
    assert jones_polynomial(FIGURE_EIGHT) == LaurentPoly.parse("t^-2 - t^-1 + 1 - t + t^2")


def test_writhe_is_exponent_sum():
    assert writhe(TREFOIL) == 3
    assert writhe(FIGURE_EIGHT) == 0


def test_links_unsupported():
    with pytest.raises(UnsupportedClosureError):
        jones_polynomial(BraidWord.parse("s1 s1"))


def test_strand_limit(monkeypatch):
    monkeypatch.setenv("LISSATORIC_STRAND_LIMIT", "3")
    with pytest.raises(StrandLimitError):
        kauffman_bracket(BraidWord.parse("s1 s2 s3"))
    monkeypatch.setenv("LISSATORIC_STRAND_LIMIT", "4")
    assert jones_polynomial(BraidWord.parse("s1 s2 s3")) == 1


@pytest.mark.parametrize(
    "triple, jones",
    [
        ((3, 4, 7), "1"),
        ((3, 4, 10), "t^-2 - t^-1 + 1 - t + t^2"),
        ((3, 4, 5), "-t^-3 + t^-2 - t^-1 + 3 - t + t^2 - t^3"),
        ((3, 5, 7), "t^-6 - 2*t^-5 + 3*t^-4 - 4*t^-3 + 4*t^-2 - 4*t^-1 + 4 - 2*t + t^2"),
        ((4, 5, 13), "2 - t + t^2 - 2*t^3 + t^4 - t^5 + t^6"),
        ((5, 6, 22), "-t^-3 + 3*t^-2 - 3*t^-1 + 4 - 4*t + 3*t^2 - 2*t^3 + t^4"),
    ],
)
def test_frozen_lissajous_jones(triple, jones):
    assert jones_polynomial(lissajous_braid(*triple)) == LaurentPoly.parse(jones)


def test_palindromic():
    assert is_palindromic(LaurentPoly.constant(1))
    assert is_palindromic(jones_polynomial(lissajous_braid(3, 4, 5)))
    assert is_palindromic(jones_polynomial(lissajous_braid(3, 4, 10)))
    assert not is_palindromic(jones_polynomial(TREFOIL))


@pytest.mark.parametrize("n, k, genus", [(3, 2, 0), (3, 10, 4), (5, 8, 2), (4, 3, 0)])
def test_rudolph_genus(n, k, genus):
    assert rudolph_genus(n, k) == genus


@pytest.mark.parametrize("n, k", [(3, 3), (4, 0)])
def test_rudolph_genus_rejects_impossible_counts(n, k):
    with pytest.raises(ParameterError):
        rudolph_genus(n, k)


def test_rudolph_general_formula():
    for N in range(2, 7):
        for d in range(1, 6):
            if (N - 1) * (d - 1) % 2:
                continue  # closure is a link
            assert rudolph_genus(N, d * (N - 1)) == Fraction((N - 1) * (d - 1), 2)


@settings(max_examples=60, deadline=None)
@given(knot_words())
def test_jones_mirror_symmetry(w):
    assert jones_polynomial(mirror(w)) == jones_polynomial(w).invert_variable()


@settings(max_examples=40, deadline=None)
@given(knot_words(), st.lists(st.tuples(st.integers(1, 3), st.sampled_from((1, -1))), max_size=4))
def test_jones_conjugation_and_reduction_invariance(w, g_letters):
    g = BraidWord(w.strands, tuple(x for x in g_letters if x[0] < w.strands))
    assert jones_polynomial(g * w * inverse(g)) == jones_polynomial(w)
    assert jones_polynomial(free_reduce(w)) == jones_polynomial(w)


@settings(max_examples=40, deadline=None)
@given(knot_words())
def test_bracket_mirror_inverts_variable(w):
    assert kauffman_bracket(mirror(w)) == kauffman_bracket(w).invert_variable()


@settings(max_examples=40, deadline=None)
@given(knot_words())
def test_markov_stabilisation(w):
    n = w.strands
    stabilised = BraidWord(n + 1, w.letters + ((n, 1),))
    assert jones_polynomial(stabilised) == jones_polynomial(w)
