"""Finite simplicial sets presented by nondegenerate simplices.

Only nondegenerate simplices are stored.  Every simplex, degenerate or not,
is addressed by a :class:`SimplexRef`: a nondegenerate base together with a
strictly decreasing degeneracy word, which is the Eilenberg-Zilber normal
form.  The face table records, for each nondegenerate simplex and each
``0 <= i <= dim``, the ``SimplexRef`` of its ``i``-th face.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .operators import SimplicialOperator, compose_operators


class SSetError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimplexRef:
    base: str
    degens: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "degens", tuple(self.degens))

    def is_degenerate(self) -> bool:
        return bool(self.degens)

    def __str__(self) -> str:
        if not self.degens:
            return self.base
        return " ".join(f"s{i}" for i in self.degens) + f" {self.base}"


def _total_degeneracy(dim: int) -> tuple:
    return tuple(range(dim - 1, -1, -1))


class SSet:
    """A finite simplicial set.

    Parameters
    ----------
    name : str
        Free-form label used in reports.
    simplices : iterable of (id, dim, faces)
        ``faces`` is a sequence of ``SimplexRef`` of length ``dim + 1`` (empty
        for vertices).  Insertion order fixes every enumeration order.
    """

    def __init__(self, name: str, simplices: Iterable):
        self.name = name
        self._dim = {}
        self._faces = {}
        self._by_dim = {}
        for sid, dim, faces in simplices:
            if sid in self._dim:
                raise SSetError(f"duplicate simplex id {sid!r}")
            if dim < 0:
                raise SSetError(f"negative dimension for {sid!r}")
            faces = tuple(f if isinstance(f, SimplexRef) else SimplexRef(*f) for f in faces)
            if len(faces) != (dim + 1 if dim > 0 else 0):
                raise SSetError(f"{sid!r}: expected {dim + 1 if dim else 0} faces, got {len(faces)}")
            self._dim[sid] = dim
            self._faces[sid] = faces
            self._by_dim.setdefault(dim, []).append(sid)
        for sid, faces in self._faces.items():
            for i, f in enumerate(faces):
                if f.base not in self._dim:
                    raise SSetError(f"face d{i} of {sid!r} refers to unknown simplex {f.base!r}")
        self._face_cache = {}

    # -- basic data ---------------------------------------------------
    def __repr__(self) -> str:
        counts = {d: len(v) for d, v in sorted(self._by_dim.items())}
        return f"SSet({self.name!r}, nondegenerate={counts})"

    def __contains__(self, sid) -> bool:
        return sid in self._dim

    @property
    def max_dim(self) -> int:
        return max(self._by_dim) if self._by_dim else -1

    def dim(self, x) -> int:
        if isinstance(x, SimplexRef):
            return self._dim[x.base] + len(x.degens)
        return self._dim[x]

    def nondegenerate(self, dim: int) -> list:
        return list(self._by_dim.get(dim, []))

    def all_simplices(self) -> list:
        return [s for d in sorted(self._by_dim) for s in self._by_dim[d]]

    def counts(self) -> dict:
        return {d: len(v) for d, v in sorted(self._by_dim.items())}

    @property
    def vertices(self) -> list:
        return self.nondegenerate(0)

    def face_table(self, sid: str) -> tuple:
        return self._faces[sid]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(v) for d, v in self._by_dim.items())

    def is_reduced(self) -> bool:
        return len(self.vertices) == 1

    # -- total face and degeneracy action -----------------------------
    def ref(self, x) -> SimplexRef:
        if isinstance(x, SimplexRef):
            if x.base not in self._dim:
                raise SSetError(f"unknown simplex {x.base!r}")
            return x
        if x not in self._dim:
            raise SSetError(f"unknown simplex {x!r}")
        return SimplexRef(x)

    def degeneracy(self, x, i: int) -> SimplexRef:
        x = self.ref(x)
        d = self.dim(x)
        if not 0 <= i <= d:
            raise SSetError(f"s_{i} undefined on dimension {d}")
        op = compose_operators(
            SimplicialOperator.degeneracy(i, d),
            SimplicialOperator(x.degens, (), self._dim[x.base]),
        )
        return SimplexRef(x.base, op.degens)

    def face(self, x, i: int) -> SimplexRef:
        x = self.ref(x)
        d = self.dim(x)
        if d < 1 or not 0 <= i <= d:
            raise SSetError(f"d_{i} undefined on dimension {d}")
        key = (x, i)
        hit = self._face_cache.get(key)
        if hit is not None:
            return hit
        op = compose_operators(
            SimplicialOperator.face(i, d),
            SimplicialOperator(x.degens, (), self._dim[x.base]),
        )
        out = self._apply_normal(op, x.base)
        self._face_cache[key] = out
        return out

    def _apply_normal(self, op: SimplicialOperator, base: str) -> SimplexRef:
        cur = SimplexRef(base)
        for j in reversed(op.faces):
            cur = self._face_of_ref(cur, j)
        if op.degens:
            inner = SimplicialOperator(cur.degens, (), self._dim[cur.base])
            outer = SimplicialOperator(op.degens, (), self.dim(cur))
            cur = SimplexRef(cur.base, compose_operators(outer, inner).degens)
        return cur

    def _face_of_ref(self, x: SimplexRef, j: int) -> SimplexRef:
        if not x.degens:
            return self._faces[x.base][j]
        return self.face(x, j)

    def apply(self, op: SimplicialOperator, x) -> SimplexRef:
        """Apply an arbitrary operator to a (possibly degenerate) simplex."""
        x = self.ref(x)
        if op.source != self.dim(x):
            raise SSetError(f"operator starts at dim {op.source}, simplex has dim {self.dim(x)}")
        full = compose_operators(op, SimplicialOperator(x.degens, (), self._dim[x.base]))
        return self._apply_normal(full, x.base)

    def vertices_of(self, x) -> tuple:
        """Vertex ids of ``x`` in order (repeats allowed)."""
        x = self.ref(x)
        d = self.dim(x)
        out = []
        for v in range(d + 1):
            keep = [v]
            op = SimplicialOperator.from_monotone_map(keep, d)
            out.append(self.apply(op, x).base)
        return tuple(out)

    def restrict(self, x, verts) -> SimplexRef:
        """The simplex spanned by the (weakly increasing) vertex positions ``verts``."""
        x = self.ref(x)
        return self.apply(SimplicialOperator.from_monotone_map(verts, self.dim(x)), x)

    def source(self, x) -> str:
        return self.vertices_of(x)[0]

    def target(self, x) -> str:
        return self.vertices_of(x)[-1]

    # -- serialization -------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "simplices": [
                {
                    "id": s,
                    "dim": self._dim[s],
                    "faces": [{"base": f.base, "degens": list(f.degens)} for f in self._faces[s]],
                }
                for s in self.all_simplices()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


# -- validation ---------------------------------------------------------


def validate(X: SSet) -> list:
    """Check the face table and the simplicial identities; return violations."""
    problems = []
    for s in X.all_simplices():
        n = X.dim(s)
        for i, f in enumerate(X.face_table(s)):
            fd = X.dim(f)
            if fd != n - 1:
                problems.append(f"face d{i} of {s} has dimension {fd}, expected {n - 1}")
            dg = f.degens
            if any(dg[k] <= dg[k + 1] for k in range(len(dg) - 1)):
                problems.append(f"face d{i} of {s}: degeneracies {dg} not strictly decreasing")
            if dg and dg[0] > fd - 1:
                problems.append(f"face d{i} of {s}: degeneracy s{dg[0]} out of range")
    if problems:
        return problems
    for s in X.all_simplices():
        n = X.dim(s)
        if n < 2:
            continue
        for j in range(n + 1):
            for i in range(j):
                lhs = X.face(X.face(s, j), i)
                rhs = X.face(X.face(s, i), j - 1)
                if lhs != rhs:
                    problems.append(
                        f"d{i} d{j} = d{j - 1} d{i} fails on {s}: {lhs} != {rhs}"
                    )
    # identities mixing faces and degeneracies, on single degeneracies of every simplex
    for s in X.all_simplices():
        n = X.dim(s)
        for j in range(n + 1):
            sj = X.degeneracy(s, j)
            for i in range(n + 2):
                got = X.face(sj, i)
                if i in (j, j + 1):
                    want = X.ref(s)
                elif i < j:
                    want = X.degeneracy(X.face(s, i), j - 1) if n >= 1 else None
                else:
                    want = X.degeneracy(X.face(s, i - 1), j) if n >= 1 else None
                if want is not None and got != want:
                    problems.append(f"d{i} s{j} identity fails on {s}: {got} != {want}")
    return problems


# -- constructors ---------------------------------------------------------


def _label(verts) -> str:
    if all(v < 10 for v in verts):
        return "[" + "".join(str(v) for v in verts) + "]"
    return "[" + ",".join(str(v) for v in verts) + "]"


def _simplex_family(n: int, include_top: bool):
    if n < 0:
        raise SSetError("n must be nonnegative")
    out = []
    for k in range(0, n + 1):
        if k == n and not include_top:
            break
        for verts in combinations(range(n + 1), k + 1):
            faces = [SimplexRef(_label(verts[:i] + verts[i + 1:])) for i in range(k + 1)] if k else []
            out.append((_label(verts), k, faces))
    return out


def standard_simplex(n: int) -> SSet:
    return SSet(f"delta:{n}", _simplex_family(n, True))


def boundary(n: int) -> SSet:
    if n < 1:
        raise SSetError("boundary(n) needs n >= 1")
    return SSet(f"boundary:{n}", _simplex_family(n, False))


def subcomplex_closure(X: SSet, ids) -> set:
    todo = list(ids)
    seen = set()
    while todo:
        s = todo.pop()
        if s in seen:
            continue
        if s not in X:
            raise SSetError(f"unknown simplex {s!r}")
        seen.add(s)
        todo.extend(f.base for f in X.face_table(s))
    return seen


def quotient(X: SSet, sub, point: str = "*", name: str | None = None) -> SSet:
    """Collapse the subcomplex ``sub`` (a set of nondegenerate ids) to one vertex."""
    sub = set(sub)
    if not sub:
        raise SSetError("cannot collapse an empty subcomplex")
    if subcomplex_closure(X, sub) != sub:
        raise SSetError("quotient requires a subcomplex closed under faces")
    if point in X and point not in sub:
        raise SSetError(f"basepoint name {point!r} already used")
    out = [(point, 0, [])]
    for s in X.all_simplices():
        if s in sub:
            continue
        faces = []
        for f in X.face_table(s):
            if f.base in sub:
                faces.append(SimplexRef(point, _total_degeneracy(X.dim(f))))
            else:
                faces.append(f)
        out.append((s, X.dim(s), faces))
    return SSet(name or f"{X.name}/collapse", out)


def sphere(n: int) -> SSet:
    """``Delta^n / boundary``: one vertex and one ``n``-cell; ``sphere(0)`` is two points."""
    if n < 0:
        raise SSetError("n must be nonnegative")
    if n == 0:
        return SSet("sphere:0", [("*", 0, []), ("[0]", 0, [])])
    D = standard_simplex(n)
    bd = [s for s in D.all_simplices() if D.dim(s) < n]
    return quotient(D, bd, name=f"sphere:{n}")


def circle() -> SSet:
    return sphere(1)


def disjoint_union(X: SSet, Y: SSet, prefixes=("a", "b"), name: str | None = None) -> SSet:
    pa, pb = prefixes
    out = []
    for pre, Z in ((pa, X), (pb, Y)):
        for s in Z.all_simplices():
            faces = [SimplexRef(f"{pre}.{f.base}", f.degens) for f in Z.face_table(s)]
            out.append((f"{pre}.{s}", Z.dim(s), faces))
    return SSet(name or f"{X.name}+{Y.name}", out)


def wedge(X: SSet, Y: SSet, x0: str | None = None, y0: str | None = None) -> SSet:
    """One-point union, glued at ``x0`` and ``y0`` (default: first vertices)."""
    x0 = x0 if x0 is not None else X.vertices[0]
    y0 = y0 if y0 is not None else Y.vertices[0]
    U = disjoint_union(X, Y)
    return quotient(U, {f"a.{x0}", f"b.{y0}"}, name=f"wedge:{X.name}+{Y.name}")


def k1_thickening(X: SSet) -> SSet:
    """Glue a copy of ``Delta^2 / [02]`` along every nondegenerate edge.

    For an edge ``e: x -> y`` this adds a reverse edge ``e~: y -> x`` and a
    2-simplex with faces ``(e~, s0 x, e)``.
    """
    out = [(s, X.dim(s), X.face_table(s)) for s in X.all_simplices()]
    for e in X.nondegenerate(1):
        d0, d1 = X.face_table(e)
        rev = f"{e}~"
        out.append((rev, 1, [d1, d0]))
        out.append((f"J{e}", 2, [SimplexRef(rev), SimplexRef(d1.base, (0,)), SimplexRef(e)]))
    return SSet(f"k1:{X.name}", out)


def from_dict(doc: dict, check: bool = True) -> SSet:
    try:
        name = doc["name"]
        rows = []
        for entry in doc["simplices"]:
            faces = [SimplexRef(f["base"], tuple(f.get("degens", []))) for f in entry.get("faces", [])]
            rows.append((entry["id"], int(entry["dim"]), faces))
    except (KeyError, TypeError) as exc:
        raise SSetError(f"malformed simplicial set document: {exc}") from exc
    X = SSet(name, rows)
    if check:
        bad = validate(X)
        if bad:
            raise SSetError("invalid simplicial set: " + "; ".join(bad[:5]))
    return X


def from_json(text: str, check: bool = True) -> SSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SSetError(f"not valid JSON: {exc}") from exc
    return from_dict(doc, check=check)


def load(path: str) -> SSet:
    with open(path, encoding="utf-8") as fh:
        return from_json(fh.read())


def build_space(descriptor: str) -> SSet:
    """Builtin grammar: ``delta:n``, ``sphere:n``, ``boundary:n``, ``wedge:a+b``,
    ``k1:<space>``, ``reduce:<space>`` (all vertices collapsed to one),
    ``file:path``.  Wedge summands are themselves descriptors."""
    kind, _, arg = descriptor.partition(":")
    try:
        if kind == "delta":
            return standard_simplex(int(arg))
        if kind == "sphere":
            return sphere(int(arg))
        if kind == "boundary":
            return boundary(int(arg))
        if kind == "circle":
            return circle()
        if kind == "wedge":
            a, b = _split_plus(arg)
            return wedge(build_space(a), build_space(b))
        if kind == "k1":
            return k1_thickening(build_space(arg))
        if kind == "reduce":
            X = build_space(arg)
            return quotient(X, X.nondegenerate(0), name=descriptor)
        if kind == "file":
            return load(arg)
    except ValueError as exc:
        raise SSetError(f"bad space descriptor {descriptor!r}: {exc}") from exc
    raise SSetError(f"unknown space descriptor {descriptor!r}")


def _split_plus(arg: str):
    depth = 0
    for k, ch in enumerate(arg):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "+" and depth == 0:
            return arg[:k].strip("()"), arg[k + 1:].strip("()")
    raise SSetError(f"wedge needs two summands: {arg!r}")


def corpus_spaces() -> list:
    """The reference corpus used by the verification batteries."""
    spaces = [standard_simplex(n) for n in range(5)]
    spaces.append(boundary(2))
    spaces.extend(sphere(n) for n in range(1, 5))
    spaces.append(k1_thickening(standard_simplex(1)))
    spaces.append(wedge(sphere(1), sphere(2)))
    return spaces
