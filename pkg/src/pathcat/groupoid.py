"""Quivers, free categories and free groupoids.

Words are stored in path order, source first.  They print in composition
order, so the path ``a`` then ``b`` is shown as ``b·a``.
"""

from __future__ import annotations

from dataclasses import dataclass


class WordError(ValueError):
    pass


class Quiver:
    def __init__(self, vertices, edges):
        """``edges`` is an ordered iterable of ``(id, source, target)``."""
        self.vertices = list(vertices)
        self._vset = set(self.vertices)
        self.edges = {}
        for eid, s, t in edges:
            if eid in self.edges:
                raise WordError(f"duplicate edge {eid!r}")
            if s not in self._vset or t not in self._vset:
                raise WordError(f"edge {eid!r} has an endpoint outside the vertex set")
            self.edges[eid] = (s, t)
        self._order = {e: k for k, e in enumerate(self.edges)}

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def has_vertex(self, v) -> bool:
        return v in self._vset

    def source(self, e):
        return self.edges[e][0]

    def target(self, e):
        return self.edges[e][1]

    def letter_ends(self, letter):
        e, o = letter
        s, t = self.edges[e]
        return (s, t) if o > 0 else (t, s)

    def out_letters(self, v, positive_only: bool = False):
        """Letters leaving ``v`` in the fixed enumeration order."""
        out = []
        for e, (s, t) in self.edges.items():
            if s == v:
                out.append((e, 1))
            if not positive_only and t == v:
                out.append((e, -1))
        out.sort(key=self.letter_key)
        return out

    def letter_key(self, letter):
        e, o = letter
        return (self._order[e], 0 if o > 0 else 1)


@dataclass(frozen=True)
class GroupoidWord:
    source: object
    target: object
    letters: tuple = ()

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def is_positive(self) -> bool:
        return all(o > 0 for _, o in self.letters)

    def inverse(self) -> "GroupoidWord":
        return GroupoidWord(self.target, self.source, tuple((e, -o) for e, o in reversed(self.letters)))

    def __str__(self) -> str:
        if not self.letters:
            return f"id_{self.source}"
        return "·".join(e if o > 0 else f"{e}⁻¹" for e, o in reversed(self.letters))


def underlying_quiver(X) -> "Quiver":
    """Vertices of ``X`` with one edge per nondegenerate 1-simplex (source d1, target d0)."""
    edges = []
    for e in X.nondegenerate(1):
        d0, d1 = X.face_table(e)
        edges.append((e, d1.base, d0.base))
    return Quiver(X.vertices, edges)


def check_composable(Q: Quiver, letters, source=None):
    """Return the (source, target) of a letter sequence, or raise."""
    letters = list(letters)
    if not letters:
        if source is None:
            raise WordError("an empty word needs an explicit source vertex")
        if not Q.has_vertex(source):
            raise WordError(f"unknown vertex {source!r}")
        return source, source
    for e, o in letters:
        if e not in Q.edges or o not in (1, -1):
            raise WordError(f"bad letter {(e, o)!r}")
    start = Q.letter_ends(letters[0])[0]
    if source is not None and source != start:
        raise WordError(f"word starts at {start!r}, not {source!r}")
    cur = start
    for k, letter in enumerate(letters):
        s, t = Q.letter_ends(letter)
        if s != cur:
            raise WordError(f"letter {k} ({letter[0]}) starts at {s!r} but the path is at {cur!r}")
        cur = t
    return start, cur


def reduce_letters(letters):
    """Free reduction by a single left-to-right stack pass."""
    out = []
    for e, o in letters:
        if out and out[-1][0] == e and out[-1][1] == -o:
            out.pop()
        else:
            out.append((e, o))
    return tuple(out)


def reduce_word(Q: Quiver, letters, source=None) -> GroupoidWord:
    s, t = check_composable(Q, letters, source)
    return GroupoidWord(s, t, reduce_letters(letters))


def compose_words(second: GroupoidWord, first: GroupoidWord) -> GroupoidWord:
    """``second ∘ first``: traverse ``first`` then ``second``."""
    if first.target != second.source:
        raise WordError("words are not composable")
    return GroupoidWord(first.source, second.target, reduce_letters(first.letters + second.letters))


def enumerate_reduced_words(Q: Quiver, x, y, max_len: int) -> list:
    """All reduced words ``x -> y`` of length at most ``max_len``.

    Ordered by length, then lexicographically on (edge order, orientation)
    read in path order.
    """
    if not Q.has_vertex(x) or not Q.has_vertex(y):
        raise WordError("unknown vertex")
    if max_len < 0:
        raise WordError("max_len must be nonnegative")
    out = []
    layer = [((), x)]
    for length in range(max_len + 1):
        out.extend(GroupoidWord(x, y, w) for w, end in layer if end == y)
        if length == max_len:
            break
        nxt = []
        for w, end in layer:
            for letter in Q.out_letters(end):
                if w and w[-1][0] == letter[0] and w[-1][1] == -letter[1]:
                    continue
                nxt.append((w + (letter,), Q.letter_ends(letter)[1]))
        layer = nxt
    return out


def free_category_paths(Q: Quiver, x, y, max_len: int) -> list:
    """Directed edge paths ``x -> y`` of length at most ``max_len`` (depth-first)."""
    found = []

    def walk(v, path):
        if v == y:
            found.append(tuple(path))
        if len(path) == max_len:
            return
        for e, (s, t) in Q.edges.items():
            if s == v:
                path.append(e)
                walk(t, path)
                path.pop()

    walk(x, [])
    return sorted(found, key=lambda p: (len(p), [Q._order[e] for e in p]))
