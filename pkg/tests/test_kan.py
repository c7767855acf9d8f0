import pytest
from hypothesis import given, settings, strategies as st

from pathcat.chains import add_term
from pathcat.kan import (
    Comparison,
    GKanWord,
    KanError,
    KanLoop,
    aw_coproduct,
    chain_boundary,
    eta,
    phi,
    shuffle_product,
    twisting_terms,
)
from pathcat.simplicial import SimplexRef, build_space, sphere, standard_simplex
from pathcat.szczarba import sz, top_flags
from pathcat import verify as V

X3 = build_space("reduce:delta:3")
LOOP = KanLoop(X3)


def _generators(loop, level):
    X = loop.space
    gens = []
    for d in range(1, X.max_dim + 1):
        for s in X.nondegenerate(d):
            y = SimplexRef(s)
            for _ in range(level + 1 - d):
                y = X.degeneracy(y, X.dim(y))
            if X.dim(y) == level + 1 and not loop.is_identity_letter(y):
                gens.append(y)
    return gens


@st.composite
def kan_words(draw, level):
    gens = _generators(LOOP, level)
    letters = draw(st.lists(st.tuples(st.sampled_from(gens), st.sampled_from((1, -1))), max_size=4))
    return LOOP.word(level, letters, X3.vertices[0])


def test_faces_of_a_two_simplex_generator():
    X = standard_simplex(2)
    loop = KanLoop(X)
    g = loop.generator("[012]")
    # path order: d_1 first, then back along d_0
    assert loop.face(g, 0).letters == ((SimplexRef("[02]"), 1), (SimplexRef("[12]"), -1))
    assert loop.face(g, 1) == loop.generator("[01]")


def test_s0_degenerate_letters_are_identities():
    X = standard_simplex(2)
    loop = KanLoop(X)
    assert loop.generator(X.degeneracy("[01]", 0)).letters == ()


@given(st.integers(1, 2).flatmap(lambda m: kan_words(m)))
@settings(max_examples=100, deadline=None)
def test_simplicial_identities(w):
    m = w.level
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            if m >= 2:
                assert LOOP.face(LOOP.face(w, j), i) == LOOP.face(LOOP.face(w, i), j - 1)
        assert LOOP.face(LOOP.degeneracy(w, i), i) == w
        assert LOOP.face(LOOP.degeneracy(w, i), i + 1) == w


@given(kan_words(1), kan_words(1))
@settings(max_examples=60, deadline=None)
def test_faces_are_homomorphisms(a, b):
    for i in range(2):
        assert LOOP.face(LOOP.multiply(a, b), i) == LOOP.multiply(LOOP.face(a, i), LOOP.face(b, i))


def _chain(draw_words):
    out = {}
    for k, w in enumerate(draw_words):
        if not LOOP.is_degenerate(w):
            add_term(out, w, k + 1)
    return out


@given(st.lists(kan_words(1), max_size=3), st.lists(kan_words(1), max_size=3))
@settings(max_examples=40, deadline=None)
def test_shuffle_leibniz(aw, bw):
    a, b = _chain(aw), _chain(bw)
    lhs = chain_boundary(LOOP, shuffle_product(LOOP, a, b))
    rhs = {}
    for w, c in shuffle_product(LOOP, chain_boundary(LOOP, a), b).items():
        add_term(rhs, w, c)
    for w, c in shuffle_product(LOOP, a, chain_boundary(LOOP, b)).items():
        add_term(rhs, w, -c)
    assert lhs == rhs


@given(kan_words(1), kan_words(1), kan_words(0))
@settings(max_examples=40, deadline=None)
def test_shuffle_associative(a, b, c):
    A, B, C = ({w: 1} for w in (a, b, c))
    left = shuffle_product(LOOP, shuffle_product(LOOP, A, B), C)
    right = shuffle_product(LOOP, A, shuffle_product(LOOP, B, C))
    assert left == right


def test_shuffle_square_of_a_level_one_word():
    X = build_space("reduce:delta:2")
    loop = KanLoop(X)
    g = loop.generator("[012]")
    s1, s2 = X.degeneracy("[012]", 1), X.degeneracy("[012]", 2)
    assert shuffle_product(loop, {g: 1}, {g: 1}) == {
        GKanWord(2, "*", "*", ((s2, 1), (s1, 1))): 1,
        GKanWord(2, "*", "*", ((s1, 1), (s2, 1))): -1,
    }


@given(kan_words(2))
@settings(max_examples=40, deadline=None)
def test_aw_is_a_chain_map(w):
    if LOOP.is_degenerate(w):
        return
    lhs = {}
    for (a, b), c in aw_coproduct(LOOP, chain_boundary(LOOP, {w: 1})).items():
        add_term(lhs, (a, b), c)
    rhs = {}
    for (a, b), c in aw_coproduct(LOOP, {w: 1}).items():
        for a2, c2 in chain_boundary(LOOP, {a: 1}).items():
            add_term(rhs, (a2, b), c * c2)
        for b2, c2 in chain_boundary(LOOP, {b: 1}).items():
            add_term(rhs, (a, b2), (-1) ** a.level * c * c2)
    assert lhs == rhs


def test_eta_on_small_words():
    assert eta(sz(1, 0, 1, ((0, 1),))).text() == "[01]"
    (flag,) = top_flags(0, 2)
    w = eta(sz(2, 0, 2, flag))
    assert w.level == 1
    assert w.text() == "s1 [12]·[012]"


def test_twisting_terms_sizes():
    assert len(twisting_terms(0)) == 1
    assert len(twisting_terms(2)) == 2


def test_phi_on_edges_and_triangles():
    X = build_space("reduce:delta:2")
    edge = phi(X, "[01]")
    unit = GKanWord(0, "*", "*", ())
    assert edge[unit] == -1 and len(edge) == 2
    tri = phi(X, "[012]")
    assert tri == {GKanWord(1, "*", "*", ((SimplexRef("[012]"), 1), (X.degeneracy("[12]", 1), 1))): 1}
    with pytest.raises(KanError):
        phi(standard_simplex(2), "[01]")
    with pytest.raises(KanError):
        phi(X, "*")


@pytest.mark.parametrize("desc", ["reduce:delta:2", "reduce:delta:3", "sphere:2", "wedge:sphere:1+sphere:2"])
def test_comparison_identities(desc):
    bad = V.phi_bad(build_space(desc))
    assert not any(bad.values()), {k: v[:1] for k, v in bad.items() if v}


class _NoExtraSign(Comparison):
    def letter(self, letter):
        out = super().letter(letter)
        m = self.space.dim(letter[0]) - 1
        if letter[1] > 0 and (m * (m - 1) // 2) % 2:
            out = {w: -c for w, c in out.items()}
        return out


def test_missing_degree_sign_is_caught(monkeypatch):
    monkeypatch.setattr(V, "Comparison", _NoExtraSign)
    bad = V.phi_bad(build_space("reduce:delta:3"), max_degree=2)
    assert bad["chain_map"]
    assert not V.phi_bad(sphere(2))["chain_map"]
