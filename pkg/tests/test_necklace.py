from math import factorial

import pytest
from hypothesis import given, strategies as st

from pathcat.necklace import (
    Necklace,
    NecklaceError,
    NecklaceMap,
    cube_boundary,
    cube_face,
    inversions,
    lattice_path,
    triangulation_terms,
)
from pathcat.simplicial import SimplexRef, build_space, standard_simplex


def test_face_rules_on_a_triangle():
    X = standard_simplex(2)
    m = NecklaceMap.from_beads(X, ["[012]"])
    assert cube_face(X, m, 1, 0).beads == (SimplexRef("[02]"),)
    assert cube_face(X, m, 1, 1).beads == (SimplexRef("[01]"), SimplexRef("[12]"))


def test_necklace_dimension():
    assert Necklace((3, 1, 2)).dim == 3
    assert Necklace(()).dim == 0
    with pytest.raises(NecklaceError):
        Necklace((0,))


def test_bad_necklaces():
    X = standard_simplex(2)
    with pytest.raises(NecklaceError):
        NecklaceMap.from_beads(X, ["[01]", "[01]"])
    with pytest.raises(NecklaceError):
        NecklaceMap.from_beads(X, ["[0]"])
    m = NecklaceMap.from_beads(X, ["[012]"])
    with pytest.raises(NecklaceError):
        cube_face(X, m, 2, 0)


def _maps(X, max_beads=3):
    from itertools import product

    simplices = [s for d in range(1, X.max_dim + 1) for s in X.nondegenerate(d)]
    for k in range(1, max_beads + 1):
        for beads in product(simplices, repeat=k):
            try:
                yield NecklaceMap.from_beads(X, beads)
            except NecklaceError:
                continue


@pytest.mark.parametrize("desc", ["delta:4", "reduce:delta:3", "boundary:3"])
def test_cubical_identities(desc):
    X = build_space(desc)
    for m in _maps(X, 2):
        n = m.dim(X)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for a in (0, 1):
                    for b in (0, 1):
                        lhs = cube_face(X, cube_face(X, m, j, b), i, a)
                        rhs = cube_face(X, cube_face(X, m, i, a), j - 1, b)
                        assert lhs == rhs, (m, i, j, a, b)


@pytest.mark.parametrize("desc", ["delta:4", "reduce:delta:3", "wedge:sphere:1+sphere:2"])
def test_cube_boundary_squares_to_zero(desc):
    X = build_space(desc)
    for m in _maps(X, 2):
        total = {}
        for f, c in cube_boundary(X, m).items():
            for g, d in cube_boundary(X, f).items():
                total[g] = total.get(g, 0) + c * d
        assert not {g: c for g, c in total.items() if c}, m


def test_triangulation_small():
    assert triangulation_terms(2) == [((1, 2), 1), ((2, 1), -1)]
    assert triangulation_terms(0) == [((), 1)]


@pytest.mark.parametrize("n", range(7))
def test_triangulation_counts(n):
    terms = triangulation_terms(n)
    assert len(terms) == factorial(n)
    if n >= 2:
        assert sum(s for _, s in terms) == 0


@given(st.permutations(range(1, 6)))
def test_lattice_path_is_a_maximal_chain(perm):
    path = lattice_path(perm)
    assert path[0] == (0,) * 5 and path[-1] == (1,) * 5
    assert all(sum(b) - sum(a) == 1 and all(x <= y for x, y in zip(a, b)) for a, b in zip(path, path[1:]))
    assert inversions(perm) == inversions(tuple(perm)) >= 0
