from itertools import product

import pytest
from hypothesis import given, strategies as st

from pathcat.groupoid import (
    Quiver,
    WordError,
    compose_words,
    enumerate_reduced_words,
    free_category_paths,
    reduce_letters,
    reduce_word,
    underlying_quiver,
)
from pathcat.simplicial import boundary, circle, standard_simplex

TRIANGLE = Quiver([0, 1, 2], [("a", 0, 1), ("b", 1, 2), ("c", 0, 2)])
LOOP = Quiver(["v"], [("e", "v", "v")])


def brute_force(Q, x, y, max_len):
    """Reduce every composable letter sequence and keep the distinct results."""
    letters = [(e, o) for e in Q.edges for o in (1, -1)]
    found = {()} if x == y else set()
    for n in range(1, max_len + 1):
        for seq in product(letters, repeat=n):
            try:
                w = reduce_word(Q, seq)
            except WordError:
                continue
            if w.source == x and w.target == y and len(w) <= max_len:
                found.add(w.letters)
    return found


def test_triangle_words():
    words = enumerate_reduced_words(TRIANGLE, 0, 1, 3)
    assert [str(w) for w in words] == ["a", "b⁻¹·c"]


def test_loop_words():
    words = enumerate_reduced_words(LOOP, "v", "v", 2)
    assert len(words) == 5
    assert {w.letters for w in words} == {(), (("e", 1),), (("e", -1),), (("e", 1),) * 2, (("e", -1),) * 2}


@pytest.mark.parametrize("Q,x,y", [(TRIANGLE, 0, 1), (TRIANGLE, 0, 0), (TRIANGLE, 2, 0), (LOOP, "v", "v")])
def test_enumeration_matches_brute_force(Q, x, y):
    got = {w.letters for w in enumerate_reduced_words(Q, x, y, 4)}
    assert got == brute_force(Q, x, y, 4)


def test_no_even_short_loops_on_triangle():
    Q = underlying_quiver(boundary(2))
    assert [w.letters for w in enumerate_reduced_words(Q, "[0]", "[0]", 2)] == [()]


def test_free_category_paths():
    Q = underlying_quiver(boundary(2))
    assert free_category_paths(Q, "[0]", "[2]", 2) == [("[02]",), ("[01]", "[12]")]
    Qc = underlying_quiver(circle())
    v = circle().vertices[0]
    assert len(free_category_paths(Qc, v, v, 3)) == 4


def test_underlying_quiver_of_simplex():
    Q = underlying_quiver(standard_simplex(3))
    assert len(Q.edges) == 6
    assert Q.source("[13]") == "[1]" and Q.target("[13]") == "[3]"


def test_bad_words():
    with pytest.raises(WordError):
        reduce_word(TRIANGLE, [("a", 1), ("c", 1)])
    with pytest.raises(WordError):
        reduce_word(TRIANGLE, [])
    with pytest.raises(WordError):
        enumerate_reduced_words(TRIANGLE, 0, 9, 2)


letters = st.lists(st.tuples(st.sampled_from("ab"), st.sampled_from((1, -1))), max_size=12)


@given(letters)
def test_reduction_is_idempotent_and_reduced(seq):
    r = reduce_letters(seq)
    assert reduce_letters(r) == r
    assert all(not (r[i][0] == r[i + 1][0] and r[i][1] == -r[i + 1][1]) for i in range(len(r) - 1))


@given(letters)
def test_word_times_inverse_is_identity(seq):
    Q = Quiver(["v"], [("a", "v", "v"), ("b", "v", "v")])
    w = reduce_word(Q, seq, source="v")
    assert compose_words(w.inverse(), w).is_identity()
    assert compose_words(w, w.inverse()).is_identity()
