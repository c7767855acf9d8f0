from itertools import product

import pytest

from pathcat.chains import CategoricalCoalgebra, add_term, back, edge_indicator, front
from pathcat.cobar import Cobar, CobarError, cobar, element_text, monomial_text, shift_edges
from pathcat.groupoid import enumerate_reduced_words, free_category_paths, underlying_quiver
from pathcat.necklace import cube_face
from pathcat.simplicial import build_space, circle, sphere, standard_simplex
from pathcat import verify as V


def _d2_witnesses(Om, max_degree, cap):
    bad = []
    for x, _, m in V._homs(Om, max_degree, cap):
        if Om.differential_terms(Om.differential_terms({m: 1})):
            bad.append(monomial_text(m, x))
    return bad


def test_triangle_letter_differential():
    Om = cobar(standard_simplex(2))
    assert element_text(Om.differential_terms({(("[012]", 1),): 1}), "[0]") == "s⁻¹[02] - s⁻¹[12]·s⁻¹[01]"


def test_sphere_differential_vanishes():
    X = sphere(2)
    Om = cobar(X)
    top = (X.nondegenerate(2)[0], 1)
    for k in range(5):
        assert Om.differential_terms({(top,) * k: 1}) == {}


def test_basis_counts():
    X = sphere(2)
    Om = cobar(X)
    top = X.nondegenerate(2)[0]
    assert Om.hom_basis("*", "*", 3) == [((top, 1),) * 3]
    Ob = cobar(build_space("boundary:2"), extended=True)
    assert len(Ob.hom_basis("[0]", "[1]", 0, word_cap=3)) == 2


def test_degree_zero_matches_reduced_words():
    X = build_space("boundary:2")
    Om = cobar(X, extended=True)
    Q = underlying_quiver(X)
    for x, y in product(X.vertices, repeat=2):
        for cap in range(4):
            assert len(Om.hom_basis(x, y, 0, word_cap=cap)) == len(enumerate_reduced_words(Q, x, y, cap))
    C = circle()
    Oc = cobar(C, extended=True)
    v = C.vertices[0]
    assert len(Oc.hom_basis(v, v, 0, word_cap=2)) == 5


@pytest.mark.parametrize("extended", [False, True])
@pytest.mark.parametrize("desc", ["delta:3", "boundary:2", "k1:delta:1", "wedge:sphere:1+sphere:2", "reduce:delta:3", "k1:delta:2"])
def test_d_squared(desc, extended):
    Om = cobar(build_space(desc), extended=extended)
    assert _d2_witnesses(Om, 4, V._cap(Om, 5, 3)) == []


def test_cube_route_agrees():
    for desc in ("delta:4", "reduce:delta:3"):
        Om = cobar(build_space(desc))
        for x, _, m in V._homs(Om, 3, V._cap(Om, 4)):
            if m and not Om.space.is_reduced():
                assert Om.cube_differential_terms(m, x) == Om.differential_terms({m: 1})


def test_classical_needs_reduced_space():
    with pytest.raises(CobarError):
        cobar(standard_simplex(2), curved=False)


def test_curvature_appears_only_on_loops():
    X = build_space("k1:delta:1")
    Om = cobar(X)
    cell = X.nondegenerate(2)[0]
    assert Om.letter_differential((cell, 1)).get((), 0) == 1


@pytest.mark.parametrize("desc", ["reduce:delta:2", "reduce:delta:3", "wedge:sphere:1+sphere:2"])
def test_edge_shift_is_a_dg_isomorphism(desc):
    X = build_space(desc)
    curved, classical = cobar(X), cobar(X, curved=False)
    for _, _, m in V._homs(curved, 3, 3):
        shifted = shift_edges(curved, {m: 1})
        assert shift_edges(curved, curved.differential_terms({m: 1})) == classical.differential_terms(shifted)
        assert shift_edges(curved, shifted, shift=-1) == {m: 1}


def test_shift_rejects_inverse_letters():
    Om = cobar(build_space("boundary:2"), extended=True)
    with pytest.raises(CobarError):
        shift_edges(Om, {(("[01]", -1),): 1})


def test_serre_coproduct_on_a_triangle():
    Om = cobar(standard_simplex(2))
    m = (("[012]", 1),)
    assert Om.serre_coproduct_terms(m, "[0]") == {
        (m, (("[02]", 1),)): 1,
        ((("[01]", 1), ("[12]", 1)), m): 1,
    }


def test_serre_coproduct_on_sphere_is_primitive():
    X = sphere(2)
    Om = cobar(X)
    m = ((X.nondegenerate(2)[0], 1),)
    assert Om.serre_coproduct_terms(m, "*") == {((), m): 1, (m, ()): 1}


@pytest.mark.parametrize("desc", ["delta:3", "boundary:2", "reduce:delta:2"])
def test_nabla_battery(desc):
    Om = cobar(build_space(desc), extended=True)
    bad = V.nabla_battery(Om, max_degree=3, cap=V._cap(Om, 4, 3))
    assert not any(bad.values()), {k: v[:1] for k, v in bad.items() if v}


def test_setlike_are_free_category_paths():
    X = standard_simplex(3)
    Om = cobar(X)
    Q = underlying_quiver(X)
    for x, y in product(X.vertices, repeat=2):
        got = {tuple(s for s, _ in m) for m in Om.setlike_morphisms(x, y, 3)}
        assert got == set(free_category_paths(Q, x, y, 3))


def test_extended_degree_zero_words_are_setlike():
    Om = cobar(build_space("boundary:2"), extended=True)
    for x, y in product(Om.C.objects, repeat=2):
        assert Om.setlike_morphisms(x, y, 3) == Om.hom_basis(x, y, 0, word_cap=3)


# -- negative controls -----------------------------------------------------


def test_uncorrected_curvature_breaks_d_squared():
    X = build_space("reduce:delta:3")
    C = CategoricalCoalgebra(X)
    for s in C.basis[2]:
        C._h[s] = edge_indicator(X, front(X, s, 1)) * edge_indicator(X, back(X, s, 1))
    assert _d2_witnesses(Cobar(C), 2, 3)


def _opposite_diagonal(self, letters, source):
    X = self.space
    m = self.necklace_of(letters, source)
    n = self.degree(letters)
    out = {}
    for choice in product((0, 1), repeat=n):
        sign, splits = 1, 0
        for c in reversed(choice):
            if c == 1:
                splits += 1
            elif splits % 2:
                sign = -sign
        left, right = m, m
        for j in range(n, 0, -1):
            if choice[j - 1] == 1:
                right = cube_face(X, right, j, 1)
            else:
                left = cube_face(X, left, j, 0)
        if left.is_degenerate() or right.is_degenerate():
            continue
        add_term(out, (tuple((b.base, 1) for b in left.beads), tuple((b.base, 1) for b in right.beads)), sign)
    return out


def test_opposite_diagonal_is_caught(monkeypatch):
    monkeypatch.setattr(Cobar, "_positive_coproduct", _opposite_diagonal)
    assert V.phi_bad(build_space("reduce:delta:2"))["comultiplicative"]
    # invisible on a sphere
    assert not V.phi_bad(sphere(2))["comultiplicative"]
