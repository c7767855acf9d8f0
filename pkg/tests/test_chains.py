import pytest

from pathcat.chains import (
    CategoricalCoalgebra,
    CoalgebraError,
    aw_coproduct,
    add_term,
    build_categorical_coalgebra,
    curvature,
    edge_indicator,
    front,
    back,
    search_sign_conventions,
    tilde_boundary,
)
from pathcat.conventions import CANDIDATES, FROZEN, SignConvention, table
from pathcat.simplicial import build_space, corpus_spaces, k1_thickening, sphere, standard_simplex


def test_aw_on_triangle():
    X = standard_simplex(2)
    assert aw_coproduct(X, "[012]") == {("[0]", "[012]"): 1, ("[01]", "[12]"): 1, ("[012]", "[2]"): 1}


def test_aw_on_sphere_drops_degenerate_middle():
    X = sphere(2)
    top = X.nondegenerate(2)[0]
    assert aw_coproduct(X, top) == {("*", top): 1, (top, "*"): 1}


def test_tilde_boundary_values():
    X = standard_simplex(2)
    assert tilde_boundary(X, "[012]") == {"[02]": -1}
    assert tilde_boundary(X, "[01]") == {}
    assert tilde_boundary(sphere(2), sphere(2).nondegenerate(2)[0]) == {}
    Y = standard_simplex(3)
    # ∂ plus the two edge corrections, which cancel the faces through the end edges
    assert tilde_boundary(Y, "[0123]") == {"[023]": -1, "[013]": 1}


def test_curvature_values():
    assert curvature(standard_simplex(2), "[012]") == 0
    assert curvature(sphere(2), sphere(2).nondegenerate(2)[0]) == 0
    K = k1_thickening(standard_simplex(1))
    assert curvature(K, K.nondegenerate(2)[0]) == -1
    with pytest.raises(CoalgebraError):
        curvature(standard_simplex(3), "[0123]")


def test_curvature_vanishes_off_loops():
    for X in corpus_spaces() + [build_space("reduce:delta:3"), build_space("k1:delta:2")]:
        for s in X.nondegenerate(2):
            v = X.vertices_of(s)
            if v[0] != v[2]:
                assert curvature(X, s) == 0


@pytest.mark.parametrize("X", corpus_spaces(), ids=lambda X: X.name)
def test_axioms_on_corpus(X):
    assert CategoricalCoalgebra(X).check_axioms() == []


@pytest.mark.parametrize("desc", ["reduce:delta:2", "reduce:delta:3", "k1:delta:2", "k1:boundary:2", "reduce:delta:4"])
def test_axioms_off_corpus(desc):
    assert CategoricalCoalgebra(build_space(desc)).check_axioms() == []


def test_sign_search_is_unique():
    assert search_sign_conventions(corpus_spaces()) == [FROZEN]


@pytest.mark.parametrize("conv", [c for c in CANDIDATES if c != FROZEN], ids=lambda c: c.label())
def test_other_conventions_fail(conv):
    with pytest.raises(CoalgebraError):
        for X in corpus_spaces():
            build_categorical_coalgebra(X, conv)


def _with_edge_square_curvature(X):
    """Curvature without the ``e∘∂`` correction."""
    C = CategoricalCoalgebra(X)
    for s in C.basis.get(2, []):
        C._h[s] = edge_indicator(X, front(X, s, 1)) * edge_indicator(X, back(X, s, 1))
    return C


def test_uncorrected_curvature_breaks_identity():
    assert _with_edge_square_curvature(standard_simplex(2)).check_axioms()
    assert _with_edge_square_curvature(build_space("reduce:delta:3")).check_axioms()


def test_counit_and_coassociativity_on_random_chain():
    C = CategoricalCoalgebra(standard_simplex(4))
    chain = {"[01234]": 2, "[0134]": -1}
    lhs = C.coproduct_chain(C.dtilde_chain(chain))
    rhs = {}
    for s, c in chain.items():
        for (a, b), k in C.coproduct(s).items():
            for a2, k2 in C.dtilde(a).items():
                add_term(rhs, (a2, b), c * k * k2)
            for b2, k2 in C.dtilde(b).items():
                add_term(rhs, (a, b2), (-1) ** C.degree(a) * c * k * k2)
    assert lhs == rhs


def test_convention_table():
    t = table()
    assert t["version"] == "pathcat-signs/2"
    assert t["tilde_boundary"] == SignConvention(1, True).label()
