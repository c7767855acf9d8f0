import json

import pytest

from pathcat.operators import SimplicialOperator as Op
from pathcat.simplicial import (
    SSetError,
    SimplexRef,
    boundary,
    build_space,
    corpus_spaces,
    from_json,
    k1_thickening,
    quotient,
    sphere,
    standard_simplex,
    validate,
    wedge,
)


@pytest.mark.parametrize("X", corpus_spaces(), ids=lambda X: X.name)
def test_corpus_satisfies_identities(X):
    assert validate(X) == []


def test_counts_and_euler():
    assert standard_simplex(3).counts() == {0: 4, 1: 6, 2: 4, 3: 1}
    assert boundary(2).euler_characteristic() == 0
    for n in range(1, 5):
        assert sphere(n).counts() == {0: 1, n: 1}
        assert sphere(n).euler_characteristic() == 1 + (-1) ** n
    W = wedge(sphere(1), sphere(2))
    assert W.is_reduced() and W.counts() == {0: 1, 1: 1, 2: 1}


def test_sphere_faces_are_degenerate_basepoint():
    X = sphere(2)
    top = X.nondegenerate(2)[0]
    for i in range(3):
        f = X.face(top, i)
        assert f.base == X.vertices[0] and f.degens == (0,)


def test_k1_thickening_of_interval():
    X = k1_thickening(standard_simplex(1))
    assert X.counts() == {0: 2, 1: 2, 2: 1}
    assert validate(X) == []
    cell = X.nondegenerate(2)[0]
    assert X.vertices_of(cell)[0] == X.vertices_of(cell)[2]


def test_face_and_degeneracy_on_degenerate_simplices():
    X = standard_simplex(2)
    s = X.degeneracy("[012]", 1)
    assert X.dim(s) == 3
    assert X.face(s, 1) == SimplexRef("[012]")
    assert X.face(s, 2) == SimplexRef("[012]")
    assert X.face(s, 0) == X.degeneracy("[12]", 0)
    assert X.apply(Op.parse("d1 d1", 3), s) == SimplexRef("[02]")


def test_restrict_and_vertices():
    X = standard_simplex(3)
    assert X.vertices_of("[0123]") == ("[0]", "[1]", "[2]", "[3]")
    assert X.restrict("[0123]", [0, 2]) == SimplexRef("[02]")
    assert X.restrict("[0123]", [1, 1]) == SimplexRef("[1]", (0,))


def test_quotient_collapses_subcomplex():
    X = quotient(standard_simplex(2), ["[0]", "[1]", "[2]"])
    assert X.is_reduced()
    assert validate(X) == []
    assert build_space("reduce:delta:2").counts() == X.counts()


def test_json_roundtrip():
    X = build_space("wedge:sphere:1+sphere:2")
    Y = from_json(X.to_json())
    assert Y.counts() == X.counts()
    assert json.loads(Y.to_json()) == json.loads(X.to_json())


def test_validate_reports_bad_faces():
    doc = standard_simplex(2).to_dict()
    top = next(e for e in doc["simplices"] if e["id"] == "[012]")
    top["faces"][0], top["faces"][2] = top["faces"][2], top["faces"][0]
    with pytest.raises(SSetError):
        from_json(json.dumps(doc))


@pytest.mark.parametrize("desc", ["delta:x", "blob:3", "wedge:delta:1", "file:/nonexistent.json"])
def test_bad_descriptors(desc):
    with pytest.raises((SSetError, OSError)):
        build_space(desc)
