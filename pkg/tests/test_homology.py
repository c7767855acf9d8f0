from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pathcat.cobar import cobar
from pathcat.homology import (
    HomologyError,
    SparseIntMatrix,
    chain_complex_homology,
    hom_homology,
    smith_normal_form,
    smith_with_transforms,
)
from pathcat.simplicial import build_space, standard_simplex


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def det(M):
    M = [[Fraction(x) for x in r] for r in M]
    n, d = len(M), Fraction(1)
    for i in range(n):
        p = next((r for r in range(i, n) if M[r][i]), None)
        if p is None:
            return 0
        if p != i:
            M[i], M[p] = M[p], M[i]
            d = -d
        d *= M[i][i]
        for r in range(i + 1, n):
            f = M[r][i] / M[i][i]
            M[r] = [a - f * b for a, b in zip(M[r], M[i])]
    return d


def test_small_snf():
    assert smith_normal_form(SparseIntMatrix.from_dense([[2, 0], [0, 3]])) == ([1, 6], 2)
    assert smith_normal_form(SparseIntMatrix.from_dense([[2, 4], [4, 8]])) == ([2], 1)
    assert smith_normal_form(SparseIntMatrix(0, 3)) == ([], 0)


def test_matrix_rejects_out_of_range():
    with pytest.raises(HomologyError):
        SparseIntMatrix(2, 2, {(2, 0): 1})


dense = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@given(dense)
@settings(max_examples=200)
def test_snf_audit(A):
    U, D, V = smith_with_transforms(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    assert [abs(d) for d in diag] == smith_normal_form(SparseIntMatrix.from_dense(A))[0]


def test_chain_complex_of_a_circle_with_torsion():
    # one cell in each degree, d1 = 0, d2 = 2: the real projective plane
    bases = {0: ["v"], 1: ["e"], 2: ["f"]}
    diff = {"v": {}, "e": {}, "f": {"e": 2}}
    H = chain_complex_homology(bases, diff.get, 3)
    assert H.betti() == [1, 0, 0]
    assert H.degrees[1].torsion == [2]


def test_differential_must_stay_in_basis():
    with pytest.raises(HomologyError):
        chain_complex_homology({0: [], 1: ["e"]}, lambda b: {"v": 1}, 1)


def test_loop_space_of_spheres():
    for desc, want in (("sphere:2", [1, 1, 1, 1, 1]), ("sphere:3", [1, 0, 1, 0, 1])):
        X = build_space(desc)
        H = hom_homology(cobar(X, extended=True), "*", "*", 5)
        assert H.betti() == want
        assert not any(h.torsion or h.truncated for h in H.degrees.values())


def test_contractible_hom_with_cap():
    X = standard_simplex(3)
    Om = cobar(X, extended=True)
    H = hom_homology(Om, "[0]", "[3]", 3, word_cap=6, margin=3)
    assert H.betti() == [1, 0, 0]
    assert H.degrees[0].truncated
    raw = hom_homology(Om, "[0]", "[3]", 3, word_cap=6)
    assert raw.betti()[0] > 1  # spurious top-weight cycles without a margin


@pytest.mark.parametrize("cap,rank", [(3, 3), (6, 5), (9, 7)])
def test_boundary_triangle_loops_count_windings(cap, rank):
    # one class per winding number |k| <= cap // 3
    X = build_space("boundary:2")
    H = hom_homology(cobar(X, extended=True), "[0]", "[0]", 2, word_cap=cap, margin=3)
    assert H.betti() == [rank, 0]
    assert H.degrees[0].truncated and not H.degrees[1].truncated


def test_finite_hom_is_not_truncated():
    Om = cobar(build_space("delta:1"), extended=True)
    assert not Om.is_truncated("[0]", "[1]", 0, weight_cap=1)
    assert Om.is_truncated("[0]", "[1]", 0, weight_cap=0)


def test_infinite_hom_needs_cap():
    X = build_space("boundary:2")
    with pytest.raises(HomologyError):
        hom_homology(cobar(X, extended=True), "[0]", "[0]", 2)
    with pytest.raises(HomologyError):
        hom_homology(cobar(X, extended=True), "[0]", "[0]", 0, word_cap=2)
