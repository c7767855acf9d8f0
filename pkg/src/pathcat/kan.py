"""Words in the Kan loop groupoid, normalized chains on it, and the comparison
map from the cobar construction.

A word at level ``m`` is a reduced sequence of letters ``(y, ±1)`` in path
order, where ``y`` is an ``(m+1)``-simplex of ``X`` (possibly degenerate,
never in the image of ``s_0``) running from its vertex 0 to its vertex 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .chains import add_term
from .necklace import triangulation_terms
from .operators import FACE
from .simplicial import SimplexRef, standard_simplex
from .szczarba import GWord, flag_from_alpha, sz_top


class KanError(ValueError):
    pass


@dataclass(frozen=True)
class GKanWord:
    level: int
    source: str
    target: str
    letters: tuple = ()

    def text(self) -> str:
        if not self.letters:
            return f"id_{self.source}"
        parts = []
        for y, o in reversed(self.letters):
            parts.append(str(y) + ("⁻¹" if o < 0 else ""))
        return "·".join(parts)


class KanLoop:
    """Simplicial operators on words of the Kan loop groupoid of ``X``."""

    def __init__(self, X):
        self.space = X
        self._ends = {}

    def ends(self, y: SimplexRef):
        hit = self._ends.get(y)
        if hit is None:
            verts = self.space.vertices_of(y)
            hit = self._ends[y] = (verts[0], verts[1])
        return hit

    def is_identity_letter(self, y: SimplexRef) -> bool:
        return 0 in y.degens

    def generator(self, y, level=None) -> GKanWord:
        """The word ``ȳ`` (identity when ``y`` is ``s_0``-degenerate)."""
        y = self.space.ref(y)
        d = self.space.dim(y)
        if d < 1:
            raise KanError("generators are simplices of dimension at least 1")
        return self.word(d - 1, ((y, 1),), self.ends(y)[0])

    def word(self, level: int, letters, source) -> GKanWord:
        """Normalize: drop identity letters, cancel inverse pairs."""
        stack = []
        for y, o in letters:
            if self.is_identity_letter(y):
                continue
            if stack and stack[-1] == (y, -o):
                stack.pop()
            else:
                stack.append((y, o))
        pos = source
        for y, o in stack:
            a, b = self.ends(y)
            if o < 0:
                a, b = b, a
            if a != pos:
                raise KanError(f"letters do not chain at {pos}")
            pos = b
        return GKanWord(level, source, pos, tuple(stack))

    def inverse(self, w: GKanWord) -> GKanWord:
        return GKanWord(w.level, w.target, w.source, tuple((y, -o) for y, o in reversed(w.letters)))

    def multiply(self, first: GKanWord, then: GKanWord) -> GKanWord:
        """Path-order product: ``first`` runs first."""
        if first.level != then.level:
            raise KanError("words live at different levels")
        if first.target != then.source:
            raise KanError("words do not compose")
        return self.word(first.level, first.letters + then.letters, first.source)

    def _letter_face(self, y, o, i):
        X = self.space
        if i >= 1:
            image = [(X.face(y, i + 1), 1)]
        else:
            image = [(X.face(y, 1), 1), (X.face(y, 0), -1)]
        if o < 0:
            image = [(z, -e) for z, e in reversed(image)]
        return image

    def face(self, w: GKanWord, i: int) -> GKanWord:
        if w.level < 1 or not 0 <= i <= w.level:
            raise KanError(f"face {i} undefined at level {w.level}")
        letters = []
        for y, o in w.letters:
            letters.extend(self._letter_face(y, o, i))
        return self.word(w.level - 1, letters, w.source)

    def degeneracy(self, w: GKanWord, i: int) -> GKanWord:
        if not 0 <= i <= w.level:
            raise KanError(f"degeneracy {i} undefined at level {w.level}")
        letters = [(self.space.degeneracy(y, i + 1), o) for y, o in w.letters]
        return self.word(w.level + 1, letters, w.source)

    def apply(self, op, w: GKanWord) -> GKanWord:
        """Act by a simplicial operator (rightmost letter first)."""
        if op.source != w.level:
            raise KanError(f"operator starts at {op.source}, word is at level {w.level}")
        for kind, i in reversed(op.word()):
            w = self.face(w, i) if kind == FACE else self.degeneracy(w, i)
        return w

    def is_degenerate(self, w: GKanWord) -> bool:
        return any(self.degeneracy(self.face(w, i), i) == w for i in range(w.level)) if w.level else False

    def pushforward(self, loop: "KanLoop", w: GKanWord, sigma) -> GKanWord:
        """Image of a word over ``loop.space`` (a standard simplex) along the
        map ``Δⁿ -> X`` picking out ``sigma``."""
        X = self.space
        letters = []
        for y, o in w.letters:
            verts = [int(v.strip("[]")) for v in loop.space.vertices_of(y)]
            letters.append((X.restrict(sigma, verts), o))
        src = X.restrict(sigma, [int(w.source.strip("[]"))]).base
        return self.word(w.level, letters, src)


@lru_cache(maxsize=None)
def simplex_loop(n: int) -> KanLoop:
    return KanLoop(standard_simplex(n))


def _interval(a: int, b: int) -> str:
    verts = range(a, b + 1)
    return "[" + ("".join(map(str, verts)) if b < 10 else ",".join(map(str, verts))) + "]"


def eta(w: GWord) -> GKanWord:
    """``g_k -> ([k-1 ... n])̄`` with the operators carried along."""
    loop = simplex_loop(w.level)
    out = loop.word(w.dim, (), _interval(w.source, w.source))
    for k, op in reversed(w.letters):
        gen = loop.generator(_interval(k - 1, w.level))
        out = loop.multiply(out, loop.apply(op, gen))
    return out


# -- normalized chains on the loop groupoid --------------------------------


def chain_boundary(loop: KanLoop, chain: dict) -> dict:
    out = {}
    for w, c in chain.items():
        if w.level == 0:
            continue
        for i in range(w.level + 1):
            f = loop.face(w, i)
            if not loop.is_degenerate(f):
                add_term(out, f, (-1) ** i * c)
    return out


def _shuffles(p: int, q: int):
    """``(mu, nu, sign)`` over the ``(p, q)``-shuffles of ``0 .. p+q-1``."""
    for mu in combinations(range(p + q), p):
        nu = tuple(i for i in range(p + q) if i not in mu)
        inv = sum(1 for a in mu for b in nu if a > b)
        yield mu, nu, (-1) ** inv


def _degenerate_by(loop, w, indices):
    for i in indices:
        w = loop.degeneracy(w, i)
    return w


def shuffle_product(loop: KanLoop, a: dict, b: dict) -> dict:
    """Eilenberg-Zilber product followed by the (path-order) group product."""
    out = {}
    for x, c in a.items():
        for y, d in b.items():
            p, q = x.level, y.level
            for mu, nu, sign in _shuffles(p, q):
                xs = _degenerate_by(loop, x, nu)
                ys = _degenerate_by(loop, y, mu)
                z = loop.multiply(xs, ys)
                if not loop.is_degenerate(z):
                    add_term(out, z, sign * c * d)
    return out


def aw_coproduct(loop: KanLoop, chain: dict) -> dict:
    out = {}
    for w, c in chain.items():
        k = w.level
        for i in range(k + 1):
            front = w
            for _ in range(k - i):
                front = loop.face(front, front.level)
            back = w
            for _ in range(i):
                back = loop.face(back, 0)
            if loop.is_degenerate(front) or loop.is_degenerate(back):
                continue
            add_term(out, (front, back), c)
    return out


# -- the comparison map ---------------------------------------------------


def twisting_terms(m: int) -> list:
    """``(sign, η(Sz(flag)))`` over the top flags of the ``m``-cube, at level ``m``."""
    n = m + 1
    out = []
    for perm, sign in triangulation_terms(m):
        flag = flag_from_alpha(0, n, tuple(reversed(perm)))
        out.append((sign, eta(sz_top(n, 0, n, flag))))
    return out


class Comparison:
    """``s⁻¹σ -> Σ ± σ_*(η(Sz(flag)))`` extended multiplicatively.

    Inverse edge letters go to inverse generators.  A letter of degree ``m``
    carries the extra sign ``(-1)^(m(m-1)/2)``.  ``unit_shift`` adds that
    multiple of the identity to the image of each edge letter.
    """

    def __init__(self, Om, unit_shift: int = 0):
        self.cobar = Om
        self.loop = KanLoop(Om.space)
        self.unit_shift = unit_shift
        self._letter = {}

    def letter(self, letter) -> dict:
        hit = self._letter.get(letter)
        if hit is not None:
            return hit
        sid, o = letter
        X = self.space
        m = X.dim(sid) - 1
        if o < 0:
            out = {self.loop.inverse(self.loop.generator(sid)): 1}
        else:
            out = {}
            simplex = simplex_loop(m + 1)
            # reversing the m cube coordinates against the simplex orientation
            eps = (-1) ** (m * (m - 1) // 2)
            for sign, w in twisting_terms(m):
                z = self.loop.pushforward(simplex, w, sid)
                if not self.loop.is_degenerate(z):
                    add_term(out, z, eps * sign)
            if m == 0 and self.unit_shift:
                add_term(out, GKanWord(0, X.source(sid), X.source(sid), ()), self.unit_shift)
        self._letter[letter] = out
        return out

    @property
    def space(self):
        return self.cobar.space

    def unit_chain(self, vertex, level: int = 0) -> dict:
        return {GKanWord(level, vertex, vertex, ()): 1}

    def monomial(self, letters, source) -> dict:
        out = self.unit_chain(source)
        for l in letters:
            out = shuffle_product(self.loop, out, self.letter(l))
        return out

    def terms(self, terms: dict, source) -> dict:
        out = {}
        for m, c in terms.items():
            for w, d in self.monomial(m, source).items():
                add_term(out, w, c * d)
        return out

    def tensor_terms(self, terms: dict, source) -> dict:
        out = {}
        for (a, b), c in terms.items():
            pa = self.monomial(a, source)
            pb = self.monomial(b, source)
            for x, c1 in pa.items():
                for y, c2 in pb.items():
                    add_term(out, (x, y), c * c1 * c2)
        return out


def phi(X, sigma) -> dict:
    """The comparison on the classical cobar of a reduced ``X``: edges go to
    ``σ̄ - id``, higher simplices to the signed Szczarba sum."""
    from .cobar import cobar

    if not X.is_reduced():
        raise KanError("phi is defined on reduced simplicial sets")
    if X.dim(sigma) < 1 or X.ref(sigma).degens:
        raise KanError("phi takes a nondegenerate simplex of dimension at least 1")
    return Comparison(cobar(X, curved=False), unit_shift=-1).letter((X.ref(sigma).base, 1))
