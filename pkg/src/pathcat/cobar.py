"""The cobar dg category of a categorical coalgebra of chains.

Objects are the vertices.  A monomial in the hom from ``x`` to ``y`` is a
composable sequence of letters stored in path order, source first.  A letter
is ``(sid, 1)`` for the desuspension of a nondegenerate simplex of dimension
at least 1, or ``(eid, -1)`` for the formal inverse of an edge letter
(extended mode only).  The degree of ``s⁻¹σ`` is ``dim σ - 1``.

Monomials print in composition order, so the path ``a`` then ``b`` shows as
``s⁻¹b·s⁻¹a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .chains import CategoricalCoalgebra, add_term, boundary, build_categorical_coalgebra
from .conventions import COBAR_CURVATURE_SIGN, COBAR_LINEAR_SIGN
from .necklace import NecklaceMap, cube_boundary, cube_face


class CobarError(ValueError):
    pass


@dataclass(frozen=True)
class CobarMonomial:
    source: str
    target: str
    letters: tuple = ()

    def __len__(self) -> int:
        return len(self.letters)

    def is_unit(self) -> bool:
        return not self.letters


class CobarElement:
    """An integer combination of monomials sharing endpoints and degree."""

    def __init__(self, source, target, degree, terms=None):
        self.source = source
        self.target = target
        self.degree = degree
        self.terms = {}
        for k, c in (terms or {}).items():
            add_term(self.terms, k, c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CobarElement):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return (self.source, self.target, self.terms) == (other.source, other.target, other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _same_slot(self, other):
        if (self.source, self.target) != (other.source, other.target):
            raise CobarError("elements live in different homs")

    def __add__(self, other):
        self._same_slot(other)
        out = CobarElement(self.source, self.target, self.degree, self.terms)
        for k, c in other.terms.items():
            add_term(out.terms, k, c)
        return out

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, k: int) -> "CobarElement":
        return CobarElement(self.source, self.target, self.degree, {m: k * c for m, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"CobarElement({self.source}->{self.target}, deg {self.degree}, {len(self.terms)} terms)"


def letter_text(letter) -> str:
    sid, o = letter
    return f"s⁻¹{sid}" if o > 0 else f"(s⁻¹{sid})⁻¹"


def monomial_text(letters, source=None) -> str:
    if not letters:
        return f"1_{source}" if source is not None else "1"
    return "·".join(letter_text(l) for l in reversed(letters))


def element_text(terms: dict, source=None) -> str:
    if not terms:
        return "0"
    parts = []
    for k, (m, c) in enumerate(terms.items()):
        body = monomial_text(m, source)
        if c == 1:
            parts.append(body if k == 0 else f"+ {body}")
        elif c == -1:
            parts.append(f"-{body}" if k == 0 else f"- {body}")
        else:
            parts.append(f"{c}*{body}" if k == 0 else (f"+ {c}*{body}" if c > 0 else f"- {-c}*{body}"))
    return " ".join(parts)


class Cobar:
    """Cobar construction of ``C``; ``extended`` adds formal inverses of edge letters.

    With ``curved=False`` the letters see the plain normalized boundary and
    no curvature term: the classical cobar construction of the reduced
    chains, defined for reduced spaces.
    """

    def __init__(self, C: CategoricalCoalgebra, extended: bool = False, curved: bool = True):
        if not curved and not C.space.is_reduced():
            raise CobarError("the classical cobar construction needs a reduced space")
        self.C = C
        self.extended = extended
        self.curved = curved
        self.space = C.space
        self._letters_from = {v: [] for v in C.objects}
        self._deg = {}
        self._ends = {}
        self._order = {}
        k = 0
        for d in range(1, C.space.max_dim + 1):
            for s in C.basis.get(d, []):
                self._order[(s, 1)] = k
                k += 1
                self._deg[(s, 1)] = d - 1
                self._ends[(s, 1)] = C.endpoints(s)
                if d == 1 and extended:
                    self._order[(s, -1)] = k
                    k += 1
                    self._deg[(s, -1)] = 0
                    a, b = C.endpoints(s)
                    self._ends[(s, -1)] = (b, a)
        for letter in sorted(self._order, key=self._order.get):
            self._letters_from[self._ends[letter][0]].append(letter)
        self._dletter = {}
        self._cube_cache = {}

    # -- letters ---------------------------------------------------------
    def letter_degree(self, letter) -> int:
        return self._deg[letter]

    def letter_ends(self, letter):
        return self._ends[letter]

    def degree(self, letters) -> int:
        return sum(self._deg[l] for l in letters)

    def weight(self, letters) -> int:
        """``Σ dim σ`` over letters, inverse letters counting 1; D never raises it."""
        return sum(self._deg[l] + 1 for l in letters)

    def edge_letters(self) -> list:
        return [l for l in self._order if self._deg[l] == 0]

    def has_directed_cycle(self) -> bool:
        succ = {v: [] for v in self.C.objects}
        for s in self.C.basis.get(1, []):
            a, b = self.C.endpoints(s)
            succ[a].append(b)
        state = {}

        def visit(v):
            state[v] = 1
            for w in succ[v]:
                if state.get(w) == 1 or (w not in state and visit(w)):
                    return True
            state[v] = 2
            return False

        return any(v not in state and visit(v) for v in self.C.objects)

    def needs_cap(self) -> bool:
        if self.extended:
            return bool(self.edge_letters())
        return self.has_directed_cycle()

    def _cap_needed_with(self, inverse_cap) -> bool:
        if inverse_cap is not None and self.extended:
            return self.has_directed_cycle()
        return self.needs_cap()

    def monomial(self, letters, source=None) -> CobarMonomial:
        letters = tuple(letters)
        if not letters:
            if source is None:
                raise CobarError("the unit monomial needs a source object")
            return CobarMonomial(source, source, ())
        self.check_letters(letters)
        return CobarMonomial(self._ends[letters[0]][0], self._ends[letters[-1]][1], letters)

    def check_letters(self, letters) -> None:
        for k, l in enumerate(letters):
            if l not in self._deg:
                raise CobarError(f"unknown letter {l!r}")
            if k and self._ends[letters[k - 1]][1] != self._ends[l][0]:
                raise CobarError(f"letters {k - 1} and {k} are not composable")

    def reduce(self, letters) -> tuple:
        """Cancel adjacent ``g·g⁻¹`` pairs of edge letters."""
        if not self.extended:
            return tuple(letters)
        out = []
        for l in letters:
            if out and out[-1][0] == l[0] and out[-1][1] == -l[1]:
                out.pop()
            else:
                out.append(l)
        return tuple(out)

    # -- bases -----------------------------------------------------------
    def hom_basis(self, x, y, degree: int, word_cap=None, weight_cap=None, inverse_cap=None) -> list:
        """Monomials ``x -> y`` of the given degree, in deterministic order.

        ``word_cap`` bounds the number of letters, ``weight_cap`` the weight
        and ``inverse_cap`` the number of inverse letters.  A cap is required whenever the degree-0 letters allow infinitely many
        monomials.
        """
        if x not in self._letters_from or y not in self._letters_from:
            raise CobarError("unknown object")
        if degree < 0:
            return []
        if word_cap is None and weight_cap is None and self._cap_needed_with(inverse_cap):
            raise CobarError("this hom has infinitely many monomials; supply a word cap")
        out = []

        def walk(v, left, letters, weight, inv):
            if left == 0 and v == y:
                out.append(tuple(letters))
            if word_cap is not None and len(letters) >= word_cap:
                return
            for l in self._letters_from[v]:
                d = self._deg[l]
                if d > left:
                    continue
                if weight_cap is not None and weight + d + 1 > weight_cap:
                    continue
                if letters and letters[-1][0] == l[0] and letters[-1][1] == -l[1]:
                    continue
                if l[1] < 0 and inverse_cap is not None and inv >= inverse_cap:
                    continue
                letters.append(l)
                walk(self._ends[l][1], left - d, letters, weight + d + 1, inv + (l[1] < 0))
                letters.pop()

        walk(x, degree, [], 0, 0)
        out.sort(key=lambda m: (len(m), [self._order[l] for l in m]))
        return out

    def is_truncated(self, x, y, degree: int, word_cap=None, weight_cap=None) -> bool:
        """Whether monomials beyond the cap exist in this slice.

        Weights in a slice come in steps bounded by a cycle of the underlying
        graph plus one letter, so the search looks that far past the cap and
        stops at the first hit.
        """
        if not self.needs_cap() or degree < 0:
            return False
        window = 2 * len(self.C.objects) + self.space.max_dim + 1
        limit_len = word_cap + window if word_cap is not None else None
        limit_wt = weight_cap + window if weight_cap is not None else None

        def beyond(length, weight):
            return (word_cap is not None and length > word_cap) or (weight_cap is not None and weight > weight_cap)

        def walk(v, left, last, length, weight):
            if left == 0 and v == y and beyond(length, weight):
                return True
            if limit_len is not None and length >= limit_len:
                return False
            for l in self._letters_from[v]:
                d = self._deg[l]
                if d > left:
                    continue
                if limit_wt is not None and weight + d + 1 > limit_wt:
                    continue
                if last is not None and last[0] == l[0] and last[1] == -l[1]:
                    continue
                if walk(self._ends[l][1], left - d, l, length + 1, weight + d + 1):
                    return True
            return False

        return walk(x, degree, None, 0, 0)

    # -- differential ----------------------------------------------------
    def letter_differential(self, letter) -> dict:
        """``D`` of a single letter as ``{letters: coeff}``."""
        hit = self._dletter.get(letter)
        if hit is not None:
            return hit
        sid, o = letter
        out = {}
        n = self._deg[letter] + 1
        if o > 0 and n >= 2:
            C = self.C
            linear = C.dtilde(sid) if self.curved else boundary(C.space, sid)
            for t, c in linear.items():
                if C.degree(t) > 0:
                    add_term(out, ((t, 1),), COBAR_LINEAR_SIGN * c)
            for v in range(1, n):
                a, b = C.front(sid, v), C.back(sid, v)
                if a is not None and b is not None:
                    add_term(out, ((a, 1), (b, 1)), (-1) ** v)
            if n == 2 and self.curved:
                h = C.curvature(sid)
                if h:
                    x, y = C.endpoints(sid)
                    if x != y:
                        raise CobarError(f"curvature {h} on {sid}, which is not a loop")
                    add_term(out, (), COBAR_CURVATURE_SIGN * h)
        self._dletter[letter] = out
        return out

    def differential_terms(self, terms: dict) -> dict:
        out = {}
        for m, c in terms.items():
            sign = 1
            for i, l in enumerate(m):
                dl = self.letter_differential(l)
                if dl:
                    pre, post = m[:i], m[i + 1:]
                    for w, c2 in dl.items():
                        add_term(out, self.reduce(pre + w + post), sign * c * c2)
                if self._deg[l] % 2:
                    sign = -sign
        return out

    def differential(self, e: CobarElement) -> CobarElement:
        return CobarElement(e.source, e.target, e.degree - 1, self.differential_terms(e.terms))

    def element(self, letters, coeff: int = 1, source=None) -> CobarElement:
        m = self.monomial(letters, source)
        return CobarElement(m.source, m.target, self.degree(m.letters), {self.reduce(m.letters): coeff})

    # -- composition -----------------------------------------------------
    def compose(self, e1: CobarElement, e2: CobarElement) -> CobarElement:
        """``e1 ∘ e2`` with ``e2`` in hom(x, y) and ``e1`` in hom(y, z)."""
        if e2.target != e1.source:
            raise CobarError(f"cannot compose: {e2.target} != {e1.source}")
        out = {}
        for m2, c2 in e2.terms.items():
            for m1, c1 in e1.terms.items():
                add_term(out, self.reduce(m2 + m1), c1 * c2)
        return CobarElement(e2.source, e1.target, e1.degree + e2.degree, out)

    def unit(self, x) -> CobarElement:
        return CobarElement(x, x, 0, {(): 1})

    # -- the cube route --------------------------------------------------
    def necklace_of(self, letters, source) -> NecklaceMap:
        X = self.space
        if not letters:
            return NecklaceMap(source, source, ())
        beads = tuple(X.ref(s) for s, _ in letters)
        return NecklaceMap(self._ends[letters[0]][0], self._ends[letters[-1]][1], beads)

    def cube_differential_terms(self, letters, source) -> dict:
        """Boundary of the cube of a positive monomial, read back as monomials."""
        if any(o < 0 for _, o in letters):
            raise CobarError("the cube route is for monomials without inverse letters")
        out = {}
        for f, c in cube_boundary(self.space, self.necklace_of(letters, source)).items():
            add_term(out, tuple((b.base, 1) for b in f.beads), c)
        return out

    # -- Serre coproduct -------------------------------------------------
    def _positive_coproduct(self, letters, source) -> dict:
        key = (letters, source)
        hit = self._cube_cache.get(key)
        if hit is not None:
            return hit
        X = self.space
        m = self.necklace_of(letters, source)
        n = self.degree(letters)
        out = {}
        for choice in product((0, 1), repeat=n):
            # choice[j] = 1: direction j+1 is split on the left and kept whole on
            # the right; 0: kept whole on the left, vertex removed on the right
            sign = 1
            splits_seen = 0
            for c in choice:
                if c == 1:
                    splits_seen += 1
                elif splits_seen % 2:
                    sign = -sign
            left, right = m, m
            for j in range(n, 0, -1):
                if choice[j - 1] == 1:
                    left = cube_face(X, left, j, 1)
                else:
                    right = cube_face(X, right, j, 0)
            if left.is_degenerate() or right.is_degenerate():
                continue
            a = tuple((b.base, 1) for b in left.beads)
            b = tuple((b.base, 1) for b in right.beads)
            add_term(out, (a, b), sign)
        self._cube_cache[key] = out
        return out

    def serre_coproduct_terms(self, letters, source) -> dict:
        """``∇`` of one monomial as ``{(left, right): coeff}``.

        Maximal runs without inverse letters go through the cube route; an
        inverse letter is group-like and multiplies in on both sides.
        """
        letters = tuple(letters)
        result = {((), ()): 1}
        run = []
        pos = source

        def absorb(piece):
            nonlocal result
            new = {}
            for (a, b), c in result.items():
                for (p, q), d in piece.items():
                    sign = -1 if (self.degree(b) * self.degree(p)) % 2 else 1
                    add_term(new, (self.reduce(a + p), self.reduce(b + q)), sign * c * d)
            result = new

        for l in letters:
            if l[1] < 0:
                if run:
                    absorb(self._positive_coproduct(tuple(run), pos))
                    run = []
                absorb({((l,), (l,)): 1})
            else:
                if not run:
                    pos = self._ends[l][0]
                run.append(l)
        if run:
            absorb(self._positive_coproduct(tuple(run), pos))
        return result

    def serre_coproduct(self, m: CobarMonomial) -> dict:
        return self.serre_coproduct_terms(m.letters, m.source)

    def counit(self, letters) -> int:
        return 1 if self.degree(letters) == 0 else 0

    # -- set-like elements -----------------------------------------------
    def setlike_morphisms(self, x, y, word_cap: int) -> list:
        """Degree-0 monomials of ``hom(x, y)`` with at most ``word_cap`` letters
        whose coproduct is ``m ⊗ m`` and counit 1."""
        out = []
        for m in self.hom_basis(x, y, 0, word_cap=word_cap):
            if self.serre_coproduct_terms(m, x) == {(m, m): 1} and self.counit(m) == 1:
                out.append(m)
        return out


def cobar(X_or_C, extended: bool = False, curved: bool = True) -> Cobar:
    C = X_or_C if isinstance(X_or_C, CategoricalCoalgebra) else build_categorical_coalgebra(X_or_C)
    return Cobar(C, extended, curved)


def shift_edges(Om: Cobar, terms: dict, shift: int = 1) -> dict:
    """Substitute ``s⁻¹e -> s⁻¹e + shift`` for every edge letter.

    On a reduced space ``shift = 1`` carries the curved differential to the
    classical one.  Monomials with inverse letters are rejected.
    """
    out = {}
    for m, c in terms.items():
        if any(o < 0 for _, o in m):
            raise CobarError("edge shifting is defined on monomials without inverse letters")
        partial = {(): c}
        for l in m:
            nxt = {}
            for w, d in partial.items():
                add_term(nxt, w + (l,), d)
                if Om.letter_degree(l) == 0:
                    add_term(nxt, w, shift * d)
            partial = nxt
        for w, d in partial.items():
            add_term(out, w, d)
    return out


def extend_localize(Om: Cobar) -> Cobar:
    """The extended cobar with formal inverses of the edge letters."""
    return Cobar(Om.C, extended=True)


def setlike_category(Om: Cobar, word_cap: int) -> dict:
    """``{(x, y): [monomials]}`` of set-like morphisms up to ``word_cap`` letters."""
    return {(x, y): Om.setlike_morphisms(x, y, word_cap) for x in Om.C.objects for y in Om.C.objects}
