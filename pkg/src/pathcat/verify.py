"""Invariant batteries behind ``pathcat verify``.

Each battery returns a list of :class:`Check`.  Reports carry no timings, so
two runs with the same suite and seed serialize to identical bytes.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from math import factorial

from . import conventions
from .chains import CategoricalCoalgebra, add_term, search_sign_conventions
from .cobar import Cobar, cobar, monomial_text, shift_edges
from .groupoid import free_category_paths, underlying_quiver
from .homology import hom_homology
from .kan import Comparison, aw_coproduct, chain_boundary
from .necklace import triangulation_terms
from .operators import SimplicialOperator
from .simplicial import build_space, corpus_spaces, standard_simplex
from .szczarba import (
    all_flags,
    compose_flags,
    flag_cosimplicial,
    flag_degeneracy,
    flag_face,
    flag_from_alpha,
    g_cosimplicial,
    gamma,
    index_tuples,
    sz,
    top_flags,
    vertex_image,
)

SUITES = ("coalgebra", "cobar", "enrichment", "szczarba", "phi")

SZ_EXAMPLE = "s₀²g₃·s₁g₂·s₀d₁g₁"


@dataclass
class Check:
    name: str
    status: bool
    witness: str | None = None

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.status else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _first(bad):
    return None if not bad else bad[0]


def _check(name, bad) -> Check:
    return Check(name, not bad, _first(bad))


def reduced_test_spaces() -> list:
    """Reduced spaces whose loop 2-simplices have nondegenerate edges.

    On spheres most comparison identities hold for trivial reasons; these
    quotients exercise the curvature and the edge shift.
    """
    return [build_space("reduce:delta:2"), build_space("reduce:delta:3")]


def _cap(Om, plain_cap=8, extended_cap=5):
    if not Om.needs_cap():
        return None
    return extended_cap if Om.extended else plain_cap


def _homs(Om, max_degree, cap, loops_only=False):
    C = Om.C
    for x in C.objects:
        for y in C.objects:
            if loops_only and x != y:
                continue
            for d in range(max_degree + 1):
                for m in Om.hom_basis(x, y, d, word_cap=cap):
                    yield x, y, m


# -- coalgebra -------------------------------------------------------------


def coalgebra_checks(spaces=None) -> list:
    spaces = corpus_spaces() if spaces is None else spaces
    out = []
    for X in spaces:
        out.append(_check(f"coalgebra.axioms[{X.name}]", CategoricalCoalgebra(X).check_axioms(max_witnesses=1)))
    found = search_sign_conventions(spaces)
    bad = [] if found == [conventions.FROZEN] else [f"search found {[c.label() for c in found]}"]
    out.append(_check("coalgebra.sign_convention_unique", bad))
    return out


# -- cobar -----------------------------------------------------------------


def d_squared_checks(spaces=None, max_degree: int = 6) -> list:
    spaces = corpus_spaces() if spaces is None else spaces
    out = []
    for X in spaces:
        for extended in (False, True):
            Om = cobar(X, extended=extended)
            bad = []
            for x, _, m in _homs(Om, max_degree, _cap(Om)):
                if Om.differential_terms(Om.differential_terms({m: 1})):
                    bad.append(monomial_text(m, x))
                    break
            mode = "extended" if extended else "plain"
            out.append(_check(f"cobar.d_squared[{X.name},{mode}]", bad))
    return out


def cube_route_checks(spaces=None, max_degree: int = 6) -> list:
    """The letter formula for ``D`` against the boundary of the necklace cube."""
    spaces = corpus_spaces() if spaces is None else spaces
    out = []
    for X in spaces:
        Om = cobar(X)
        bad = []
        for x, _, m in _homs(Om, max_degree, _cap(Om)):
            if m and Om.cube_differential_terms(m, x) != Om.differential_terms({m: 1}):
                bad.append(monomial_text(m, x))
                break
        out.append(_check(f"cobar.cube_route[{X.name}]", bad))
    return out


def cobar_checks() -> list:
    return d_squared_checks() + cube_route_checks()


# -- enrichment ------------------------------------------------------------


def _nabla(Om, m, source):
    return Om.serre_coproduct_terms(m, source)


def _nabla_of_terms(Om, terms, source):
    out = {}
    for m, c in terms.items():
        for k, d in Om.serre_coproduct_terms(m, source).items():
            add_term(out, k, c * d)
    return out


def _d_tensor(Om, terms):
    out = {}
    for (a, b), c in terms.items():
        for t, d in Om.differential_terms({a: 1}).items():
            add_term(out, (t, b), c * d)
        sign = -1 if Om.degree(a) % 2 else 1
        for t, d in Om.differential_terms({b: 1}).items():
            add_term(out, (a, t), sign * c * d)
    return out


def _product(Om, left: dict, right: dict) -> dict:
    """Product in the tensor square: ``(a⊗b)(c⊗d) = ± ac ⊗ bd``, path order."""
    out = {}
    for (a, b), c1 in left.items():
        for (p, q), c2 in right.items():
            sign = -1 if (Om.degree(b) * Om.degree(p)) % 2 else 1
            add_term(out, (Om.reduce(a + p), Om.reduce(b + q)), sign * c1 * c2)
    return out


def nabla_battery(Om: Cobar, max_degree: int = 4, cap=None) -> dict:
    """Witness lists for the four enrichment identities of ``∇`` on ``Om``."""
    cap = _cap(Om, 6, 4) if cap is None else cap
    bad = {"coassociative": [], "counital": [], "chain_map": [], "multiplicative": []}
    by_source = {}
    for x, y, m in _homs(Om, max_degree, cap):
        by_source.setdefault(x, []).append((y, m))
        nab = _nabla(Om, m, x)
        text = monomial_text(m, x)
        # (∇ ⊗ 1)∇ = (1 ⊗ ∇)∇; both factors of ∇ lie in the same hom
        lhs, rhs = {}, {}
        for (a, b), c in nab.items():
            for (p, q), d in _nabla(Om, a, x).items():
                add_term(lhs, (p, q, b), c * d)
            for (p, q), d in _nabla(Om, b, x).items():
                add_term(rhs, (a, p, q), c * d)
        if lhs != rhs:
            bad["coassociative"].append(text)
        left, right = {}, {}
        for (a, b), c in nab.items():
            if Om.counit(a):
                add_term(left, Om.reduce(b), c)
            if Om.counit(b):
                add_term(right, Om.reduce(a), c)
        if left != {m: 1} or right != {m: 1}:
            bad["counital"].append(text)
        if _nabla_of_terms(Om, Om.differential_terms({m: 1}), x) != _d_tensor(Om, nab):
            bad["chain_map"].append(text)
    # multiplicativity on every composable pair whose product stays in the window
    for x, items in sorted(by_source.items()):
        for y, m1 in items:
            for _, m2 in by_source.get(y, []):
                if not m1 or not m2 or Om.degree(m1) + Om.degree(m2) > max_degree:
                    continue
                if cap is not None and len(m1) + len(m2) > cap:
                    continue
                prod = Om.reduce(m1 + m2)
                lhs = _nabla(Om, prod, x) if prod else {((), ()): 1}
                rhs = _product(Om, _nabla(Om, m1, x), _nabla(Om, m2, y))
                if lhs != rhs:
                    bad["multiplicative"].append(f"{monomial_text(m1, x)} then {monomial_text(m2, y)}")
    return bad


def enrichment_checks(spaces=None, max_degree: int = 4) -> list:
    spaces = corpus_spaces() if spaces is None else spaces
    out = []
    for X in spaces:
        for extended in (False, True):
            bad = nabla_battery(cobar(X, extended=extended), max_degree)
            mode = "extended" if extended else "plain"
            for key in ("coassociative", "counital", "chain_map", "multiplicative"):
                out.append(_check(f"enrichment.nabla_{key}[{X.name},{mode}]", bad[key]))
    return out


def setlike_checks(names=("delta:3", "boundary:2"), max_len: int = 5) -> list:
    out = []
    for name in names:
        X = build_space(name)
        Om = cobar(X)
        Q = underlying_quiver(X)
        bad = []
        for x in X.vertices:
            for y in X.vertices:
                got = sorted(tuple(s for s, _ in m) for m in Om.setlike_morphisms(x, y, max_len))
                want = sorted(free_category_paths(Q, x, y, max_len))
                if got != want:
                    bad.append(f"{x}->{y}: {len(got)} set-like vs {len(want)} paths")
        out.append(_check(f"enrichment.setlike_equals_paths[{name}]", bad))
    return out


def homology_checks() -> list:
    out = []
    for name, want in (("sphere:2", [1, 1, 1, 1, 1]), ("sphere:3", [1, 0, 1, 0, 1])):
        X = build_space(name)
        v = X.vertices[0]
        H = hom_homology(cobar(X, extended=True), v, v, 5)
        got = H.betti()
        bad = []
        if got != want or any(h.torsion for h in H.degrees.values()):
            bad.append(f"betti {got}, torsion {[h.torsion for h in H.degrees.values()]}")
        out.append(_check(f"homology.loop_space[{name}]", bad))
    X = standard_simplex(3)
    H = hom_homology(cobar(X, extended=True), "[0]", "[3]", 3, word_cap=6, margin=3)
    d = H.degrees
    bad = []
    if d[0].torsion or d[0].betti < 1:
        bad.append(f"H0 = {d[0].as_dict()}")
    if d[1].betti or d[1].torsion or d[2].betti or d[2].torsion:
        bad.append(f"H1 = {d[1].as_dict()}, H2 = {d[2].as_dict()}")
    if not d[0].truncated:
        bad.append("truncation not flagged")
    out.append(_check("homology.delta3_hom[0,3]", bad))
    return out


def enrichment_suite() -> list:
    return enrichment_checks() + setlike_checks() + homology_checks()


# -- Szczarba --------------------------------------------------------------


def sz_example_checks() -> list:
    flag = flag_from_alpha(0, 3, (2, 1))
    bad = []
    if gamma(0, 3, flag) != (1, 0):
        bad.append(f"gamma of {flag} is {gamma(0, 3, flag)}")
    text = sz(3, 0, 3, flag).text()
    if text != SZ_EXAMPLE:
        bad.append(text)
    return [_check("szczarba.delta3_example", bad)]


def _flag_text(flag) -> str:
    return "<" + ",".join("{" + ",".join(map(str, U)) + "}" for U in flag) + ">"


def sz_structure_bad(n: int, p: int, q: int, flag) -> list:
    """Simpliciality and cosimplicial naturality of ``Sz`` at one flag."""
    bad = []
    k = len(flag) - 1
    w = sz(n, p, q, flag, check_parents=True)
    where = f"n={n} {p}->{q} {_flag_text(flag)}"
    if k == 0 and w != vertex_image(n, p, q, flag[0]):
        bad.append(f"vertex image at {where}")
    for i in range(k + 1):
        if k > 0 and sz(n, p, q, flag_face(flag, i)) != w.apply(SimplicialOperator.face(i, k)):
            bad.append(f"d_{i} at {where}")
        if sz(n, p, q, flag_degeneracy(flag, i)) != w.apply(SimplicialOperator.degeneracy(i, k)):
            bad.append(f"s_{i} at {where}")
    if p < q:
        for i in range(n + 2):
            P, Q, F = flag_cosimplicial("d", i, p, q, flag)
            if g_cosimplicial("d", i, w) != sz(n + 1, P, Q, F):
                bad.append(f"coface d^{i} at {where}")
        for i in range(n):
            P, Q, F = flag_cosimplicial("s", i, p, q, flag)
            image = g_cosimplicial("s", i, w)
            if P == Q:
                if image.letters:
                    bad.append(f"codegeneracy s^{i} at {where}")
            elif image != sz(n - 1, P, Q, F):
                bad.append(f"codegeneracy s^{i} at {where}")
    return bad


def sz_monoidal_bad(n: int, p: int, r: int, q: int, f1, f2) -> list:
    if sz(n, p, q, compose_flags(f2, f1)) != sz(n, r, q, f2).concat(sz(n, p, r, f1)):
        return [f"n={n} {p}->{r}->{q} {_flag_text(f1)} then {_flag_text(f2)}"]
    return []


def sz_structure_checks(seed: int = 0, exhaustive_up_to: int = 3, samples: int = 500) -> list:
    simplicial, monoidal = [], []
    for n in range(exhaustive_up_to + 1):
        for p in range(n + 1):
            for q in range(p, n + 1):
                for k in range(q - p + 1):
                    for flag in all_flags(p, q, k):
                        simplicial += sz_structure_bad(n, p, q, flag)
        for p in range(n + 1):
            for r in range(p + 1, n + 1):
                for q in range(r + 1, n + 1):
                    for k in range(3):
                        for f1 in all_flags(p, r, k):
                            for f2 in all_flags(r, q, k):
                                monoidal += sz_monoidal_bad(n, p, r, q, f1, f2)
    rng = random.Random(seed)
    n = exhaustive_up_to + 1
    pool = [(p, q, f) for p in range(n + 1) for q in range(p, n + 1) for k in range(q - p + 1) for f in all_flags(p, q, k)]
    sampled, sampled_monoidal = [], []
    for _ in range(samples):
        p, q, f = rng.choice(pool)
        sampled += sz_structure_bad(n, p, q, f)
        p, r, q = sorted(rng.sample(range(n + 1), 3))
        k = rng.randrange(3)
        sampled_monoidal += sz_monoidal_bad(n, p, r, q, rng.choice(all_flags(p, r, k)), rng.choice(all_flags(r, q, k)))
    return [
        _check(f"szczarba.simplicial_natural[n<={exhaustive_up_to}]", simplicial),
        _check(f"szczarba.monoidal[n<={exhaustive_up_to}]", monoidal),
        _check(f"szczarba.simplicial_natural[n={n},{samples} random]", sampled),
        _check(f"szczarba.monoidal[n={n},{samples} random]", sampled_monoidal),
    ]


def counting_checks(max_n: int = 5) -> list:
    bad_count, bad_gamma = [], []
    for n in range(max_n + 1):
        for p in range(n + 1):
            for q in range(p + 1, n + 1):
                m = q - p - 1
                flags = all_flags(p, q, m, nondegenerate_only=True)
                if len(flags) != factorial(m) or sorted(flags) != sorted(top_flags(p, q)):
                    bad_count.append(f"n={n} {p}->{q}: {len(flags)} vs {factorial(m)}")
                images = [gamma(p, q, f) for f in flags]
                if sorted(images) != sorted(index_tuples(m)):
                    bad_gamma.append(f"n={n} {p}->{q}")
    return [
        _check(f"szczarba.nd_count[n<={max_n}]", bad_count),
        _check(f"szczarba.gamma_bijective[n<={max_n}]", bad_gamma),
    ]


def szczarba_checks(seed: int = 0) -> list:
    return sz_example_checks() + sz_structure_checks(seed) + counting_checks()


# -- phi -------------------------------------------------------------------


def triangulation_checks(max_n: int = 6) -> list:
    bad = []
    for n in range(max_n + 1):
        terms = triangulation_terms(n)
        if len(terms) != factorial(n):
            bad.append(f"n={n}: {len(terms)} terms")
        if n >= 2 and sum(s for _, s in terms) != 0:
            bad.append(f"n={n}: signed sum {sum(s for _, s in terms)}")
    return [_check(f"phi.triangulation[n<={max_n}]", bad)]


def phi_bad(X, max_degree: int = 2, cap: int = 3) -> dict:
    """Witnesses for the comparison identities on a reduced space."""
    curved = cobar(X)
    classical = cobar(X, curved=False)
    psi = Comparison(curved)
    phi = Comparison(classical, unit_shift=-1)
    x = X.vertices[0]
    bad = {"phi_chain_map": [], "shift_chain_map": [], "factorization": [], "chain_map": [], "comultiplicative": []}
    for _, _, m in _homs(curved, max_degree, cap, loops_only=True):
        text = monomial_text(m, x)
        if chain_boundary(phi.loop, phi.monomial(m, x)) != phi.terms(classical.differential_terms({m: 1}), x):
            bad["phi_chain_map"].append(text)
        if shift_edges(curved, curved.differential_terms({m: 1})) != classical.differential_terms(shift_edges(curved, {m: 1})):
            bad["shift_chain_map"].append(text)
        image = psi.monomial(m, x)
        if phi.terms(shift_edges(curved, {m: 1}), x) != image:
            bad["factorization"].append(text)
        if chain_boundary(psi.loop, image) != psi.terms(curved.differential_terms({m: 1}), x):
            bad["chain_map"].append(text)
        if aw_coproduct(psi.loop, image) != psi.tensor_terms(curved.serre_coproduct_terms(m, x), x):
            bad["comultiplicative"].append(text)
    return bad


def phi_spaces() -> list:
    return [build_space("wedge:sphere:1+sphere:2"), build_space("sphere:2")] + reduced_test_spaces()


def phi_checks() -> list:
    out = []
    for X in phi_spaces():
        bad = phi_bad(X)
        for key in ("phi_chain_map", "shift_chain_map", "factorization", "chain_map", "comultiplicative"):
            out.append(_check(f"phi.{key}[{X.name}]", bad[key]))
    return out + triangulation_checks()


def phi_suite() -> list:
    return phi_checks()


# -- suites ----------------------------------------------------------------


def run_suite(suite: str, seed: int = 0) -> list:
    if suite == "all":
        out = []
        for s in SUITES:
            out += run_suite(s, seed)
        return out
    if suite == "coalgebra":
        return coalgebra_checks()
    if suite == "cobar":
        return cobar_checks()
    if suite == "enrichment":
        return enrichment_suite()
    if suite == "szczarba":
        return szczarba_checks(seed)
    if suite == "phi":
        return phi_suite()
    raise ValueError(f"unknown suite {suite!r}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
