"""Normalized chains, the Alexander-Whitney coproduct and the curved
categorical coalgebra structure on them.

Chains are plain dicts from nondegenerate simplex ids to nonzero integers;
tensor chains are dicts keyed by pairs of ids.  Degrees are implicit in the
ids and can be read off the ambient simplicial set.
"""

from __future__ import annotations

from .conventions import CANDIDATES, FROZEN, SignConvention


class CoalgebraError(ValueError):
    pass


def add_term(target: dict, key, coeff: int) -> None:
    if not coeff:
        return
    v = target.get(key, 0) + coeff
    if v:
        target[key] = v
    else:
        target.pop(key, None)


def add_chain(target: dict, chain: dict, scale: int = 1) -> None:
    for k, c in chain.items():
        add_term(target, k, scale * c)


def _nondeg(ref):
    return None if ref.degens else ref.base


def front(X, sigma, i):
    """``σ(0..i)``, or None when degenerate."""
    return _nondeg(X.restrict(sigma, range(0, i + 1)))


def back(X, sigma, i):
    """``σ(i..n)``, or None when degenerate."""
    n = X.dim(sigma)
    return _nondeg(X.restrict(sigma, range(i, n + 1)))


def aw_coproduct(X, sigma) -> dict:
    """Alexander-Whitney coproduct, normalized: degenerate factors are dropped."""
    if sigma not in X:
        raise CoalgebraError(f"unknown simplex {sigma!r}")
    n = X.dim(sigma)
    out = {}
    for i in range(n + 1):
        a, b = front(X, sigma, i), back(X, sigma, i)
        if a is not None and b is not None:
            add_term(out, (a, b), 1)
    return out


def boundary(X, sigma) -> dict:
    n = X.dim(sigma)
    out = {}
    if n == 0:
        return out
    for i in range(n + 1):
        f = X.face(sigma, i)
        if not f.degens:
            add_term(out, f.base, (-1) ** i)
    return out


def edge_indicator(X, sigma) -> int:
    """``ẽ``: 1 on nondegenerate 1-simplices, 0 on everything else."""
    return 1 if sigma is not None and X.dim(sigma) == 1 else 0


def tilde_boundary(X, sigma, convention: SignConvention = FROZEN) -> dict:
    n = X.dim(sigma)
    out = boundary(X, sigma)
    if n < 1:
        return out
    g = convention.correction_sign
    # (id ⊗ ẽ)∘AW keeps the term σ(0..n-1) ⊗ σ(n-1..n)
    last_edge = back(X, sigma, n - 1)
    if edge_indicator(X, last_edge):
        head = front(X, sigma, n - 1)
        if head is not None:
            sign = (-1) ** (n - 1) if convention.koszul else 1
            add_term(out, head, g * sign)
    # (ẽ ⊗ id)∘AW keeps σ(01) ⊗ σ(1..n)
    first_edge = front(X, sigma, 1)
    if edge_indicator(X, first_edge):
        tail = back(X, sigma, 1)
        if tail is not None:
            add_term(out, tail, -g)
    return out


def curvature(X, sigma, convention: SignConvention = FROZEN) -> int:
    """``h = (ẽ ⊗ ẽ)∘AW - g·ẽ∘∂`` on a 2-simplex, ``g`` the correction sign.

    Zero unless the first and last vertices agree.
    """
    if X.dim(sigma) != 2:
        raise CoalgebraError(f"curvature is defined on 2-simplices, {sigma!r} has dim {X.dim(sigma)}")
    e_boundary = sum(c * edge_indicator(X, t) for t, c in boundary(X, sigma).items())
    e_square = edge_indicator(X, front(X, sigma, 1)) * edge_indicator(X, back(X, sigma, 1))
    return e_square - convention.correction_sign * e_boundary


def is_loop(X, sigma) -> bool:
    """Whether the first and last vertices coincide."""
    verts = X.vertices_of(sigma)
    return verts[0] == verts[-1]


class CategoricalCoalgebra:
    """Tables of ``AW``, ``∂̃`` and ``h`` on the nondegenerate basis of ``X``."""

    def __init__(self, X, convention: SignConvention = FROZEN):
        self.space = X
        self.convention = convention
        self.objects = list(X.vertices)
        self.basis = {d: X.nondegenerate(d) for d in range(X.max_dim + 1)}
        self._degree = {s: d for d, ids in self.basis.items() for s in ids}
        self._delta = {}
        self._dtilde = {}
        self._h = {}
        self._ends = {}
        for s in X.all_simplices():
            self._delta[s] = aw_coproduct(X, s)
            self._dtilde[s] = tilde_boundary(X, s, convention) if self._degree[s] else {}
            verts = X.vertices_of(s)
            self._ends[s] = (verts[0], verts[-1])
            if self._degree[s] == 2:
                self._h[s] = curvature(X, s, convention)

    def degree(self, s) -> int:
        return self._degree[s]

    def coproduct(self, s) -> dict:
        return self._delta[s]

    def dtilde(self, s) -> dict:
        return self._dtilde[s]

    def curvature(self, s) -> int:
        return self._h.get(s, 0)

    def counit(self, s) -> int:
        return 1 if self._degree[s] == 0 else 0

    def endpoints(self, s):
        return self._ends[s]

    def simplex(self, s, verts):
        """The nondegenerate id of the sub-simplex on vertex positions ``verts``, or None."""
        return _nondeg(self.space.restrict(s, verts))

    def front(self, s, i):
        return front(self.space, s, i)

    def back(self, s, i):
        return back(self.space, s, i)

    # -- structure maps on chains -----------------------------------------
    def dtilde_chain(self, chain: dict) -> dict:
        out = {}
        for s, c in chain.items():
            add_chain(out, self._dtilde[s], c)
        return out

    def coproduct_chain(self, chain: dict) -> dict:
        out = {}
        for s, c in chain.items():
            add_chain(out, self._delta[s], c)
        return out

    def curvature_rhs(self, s) -> dict:
        """``(h ⊗ id)(AW - AW^op)`` evaluated on ``s``, Koszul signs included."""
        out = {}
        for (a, b), c in self._delta[s].items():
            da, db = self._degree[a], self._degree[b]
            if da == 2:
                add_term(out, b, c * self._h[a])
            if db == 2:
                add_term(out, a, -c * (-1) ** (da * db) * self._h[b])
        return out

    # -- axiom checks -----------------------------------------------------
    def check_axioms(self, max_witnesses: int = 5) -> list:
        """Violations of the categorical coalgebra axioms, as readable strings."""
        bad = []

        def note(msg):
            if len(bad) < max_witnesses:
                bad.append(msg)

        for v in self.basis.get(0, []):
            if self._delta[v] != {(v, v): 1}:
                note(f"object {v} is not set-like")
        for s, d in self._degree.items():
            delta = self._delta[s]
            # counit on both sides
            left, right = {}, {}
            for (a, b), c in delta.items():
                if self._degree[a] == 0:
                    add_term(left, b, c)
                if self._degree[b] == 0:
                    add_term(right, a, c)
            if left != {s: 1} or right != {s: 1}:
                note(f"counit fails on {s}")
            # coassociativity
            lhs, rhs = {}, {}
            for (a, b), c in delta.items():
                for (a1, a2), c1 in self._delta[a].items():
                    add_term(lhs, (a1, a2, b), c * c1)
                for (b1, b2), c2 in self._delta[b].items():
                    add_term(rhs, (a, b1, b2), c * c2)
            if lhs != rhs:
                note(f"coassociativity fails on {s}")
            if d == 0:
                continue
            dt = self._dtilde[s]
            # projection to degree 0 kills ∂̃
            if d == 1 and dt:
                note(f"epsilon∘∂̃ ≠ 0 on {s}: {dt}")
            # coderivation: AW∘∂̃ = (∂̃⊗1 + 1⊗∂̃)∘AW
            lhs = self.coproduct_chain(dt)
            rhs = {}
            for (a, b), c in delta.items():
                for a2, c2 in self._dtilde[a].items():
                    add_term(rhs, (a2, b), c * c2)
                sign = (-1) ** self._degree[a]
                for b2, c2 in self._dtilde[b].items():
                    add_term(rhs, (a, b2), sign * c * c2)
            if lhs != rhs:
                note(f"∂̃ is not a coderivation on {s}")
            if d == 3:
                hv = sum(c * self._h.get(t, 0) for t, c in dt.items())
                if hv:
                    note(f"h∘∂̃ = {hv} on {s}")
            if d >= 2:
                sq = self.dtilde_chain(dt)
                want = self.curvature_rhs(s)
                if sq != want:
                    note(f"∂̃∘∂̃ = (h⊗id)(Δ-Δ^op) fails on {s}: lhs={_fmt(sq)} rhs={_fmt(want)}")
        return bad


def _fmt(chain: dict) -> str:
    if not chain:
        return "0"
    return " ".join(f"{c:+d}{k}" for k, c in sorted(chain.items(), key=lambda kv: str(kv[0])))


def build_categorical_coalgebra(X, convention: SignConvention = FROZEN, check: bool = True) -> CategoricalCoalgebra:
    C = CategoricalCoalgebra(X, convention)
    if check:
        bad = C.check_axioms()
        if bad:
            raise CoalgebraError("; ".join(bad))
    return C


def search_sign_conventions(spaces, candidates=CANDIDATES) -> list:
    """Every candidate convention under which all axioms hold on ``spaces``."""
    good = []
    for conv in candidates:
        if all(not CategoricalCoalgebra(X, conv).check_axioms(max_witnesses=1) for X in spaces):
            good.append(conv)
    return good
