"""Simplicial operators in Eilenberg-Zilber normal form.

An operator is a composite of face maps ``d_j`` and degeneracy maps ``s_i``
acting on simplices.  Every such composite can be written uniquely as

    s_{i_1} ... s_{i_p} d_{j_1} ... d_{j_q}

with ``i_1 > ... > i_p`` and ``j_1 < ... < j_q``; the rightmost letter acts
first.  ``source`` is the dimension of the simplex the operator is applied
to and ``target`` the dimension of the result.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from ._fallback import DEGEN, FACE


class OperatorError(ValueError):
    pass


def _check_word(word, source):
    dim = source
    for kind, i in reversed(word):
        if kind == FACE:
            if dim < 1 or not 0 <= i <= dim:
                raise OperatorError(f"d_{i} not defined on dimension {dim}")
            dim -= 1
        elif kind == DEGEN:
            if not 0 <= i <= dim:
                raise OperatorError(f"s_{i} not defined on dimension {dim}")
            dim += 1
        else:
            raise OperatorError(f"unknown letter kind {kind!r}")
    return dim


@dataclass(frozen=True, order=True)
class SimplicialOperator:
    degens: tuple
    faces: tuple
    source: int

    def __post_init__(self):
        d, f = tuple(self.degens), tuple(self.faces)
        object.__setattr__(self, "degens", d)
        object.__setattr__(self, "faces", f)
        if any(d[k] <= d[k + 1] for k in range(len(d) - 1)):
            raise OperatorError(f"degeneracies not strictly decreasing: {d}")
        if any(f[k] >= f[k + 1] for k in range(len(f) - 1)):
            raise OperatorError(f"faces not strictly increasing: {f}")
        _check_word(self.word(), self.source)

    @property
    def target(self) -> int:
        return self.source - len(self.faces) + len(self.degens)

    def word(self):
        return [(DEGEN, i) for i in self.degens] + [(FACE, j) for j in self.faces]

    def is_identity(self) -> bool:
        return not self.degens and not self.faces

    @classmethod
    def identity(cls, dim: int) -> "SimplicialOperator":
        return cls((), (), dim)

    @classmethod
    def face(cls, i: int, source: int) -> "SimplicialOperator":
        return cls((), (i,), source)

    @classmethod
    def degeneracy(cls, i: int, source: int) -> "SimplicialOperator":
        return cls((i,), (), source)

    @classmethod
    def from_word(cls, word, source: int) -> "SimplicialOperator":
        """Normalize an arbitrary applicable word of ``(kind, index)`` letters."""
        word = [(int(k), int(i)) for k, i in word]
        _check_word(word, source)
        degens, faces = kernels.normalize_word(word)
        return cls(degens, faces, source)

    @classmethod
    def parse(cls, text: str, source: int) -> "SimplicialOperator":
        """Parse ``"s1 s0 d1"`` style words (also accepts ``s_1``)."""
        word = []
        for tok in text.replace("_", "").split():
            if tok == "id":
                continue
            kind = {"d": FACE, "s": DEGEN}.get(tok[0])
            if kind is None:
                raise OperatorError(f"bad token {tok!r}")
            word.append((kind, int(tok[1:])))
        return cls.from_word(word, source)

    def then(self, outer: "SimplicialOperator") -> "SimplicialOperator":
        return compose_operators(outer, self)

    def shifted(self, k: int = 1) -> "SimplicialOperator":
        """Add ``k`` to every index (the prime operation, iterated)."""
        return SimplicialOperator(
            tuple(i + k for i in self.degens),
            tuple(j + k for j in self.faces),
            self.source + k,
        )

    def monotone_map(self):
        """The map ``[target] -> [source]`` of vertices that this operator induces."""
        verts = list(range(self.source + 1))
        for kind, i in reversed(self.word()):
            if kind == FACE:
                del verts[i]
            else:
                verts.insert(i, verts[i])
        return tuple(verts)

    @classmethod
    def from_monotone_map(cls, verts, source: int) -> "SimplicialOperator":
        verts = tuple(verts)
        if any(verts[k] > verts[k + 1] for k in range(len(verts) - 1)):
            raise OperatorError(f"map is not monotone: {verts}")
        if verts and not (0 <= verts[0] and verts[-1] <= source):
            raise OperatorError(f"map leaves [0, {source}]: {verts}")
        hit = set(verts)
        faces = tuple(j for j in range(source + 1) if j not in hit)
        degens = tuple(
            sorted((i for i in range(len(verts) - 1) if verts[i] == verts[i + 1]), reverse=True)
        )
        return cls(degens, faces, source)

    def __str__(self) -> str:
        if self.is_identity():
            return "id"
        return " ".join([f"s{i}" for i in self.degens] + [f"d{j}" for j in self.faces])

    def pretty(self, unicode: bool = False) -> str:
        """Compressed rendering: runs ``s_{i+k-1}...s_i`` print as ``s_i^k``.

        Likewise ``d_j...d_{j+r-1}`` prints as ``d_j^r``, which is how iterated
        faces and degeneracies are usually written by hand.
        """
        parts = []
        for letter, run in (("s", _runs(self.degens, -1)), ("d", _runs(self.faces, 1))):
            for low, length in run:
                parts.append(_render(letter, low, length, unicode))
        if not parts:
            return "id"
        return ("" if unicode else " ").join(parts)


_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _runs(indices, step):
    out = []
    for i in indices:
        if out and i == out[-1][2] + step:
            low, length, last = out[-1]
            out[-1] = (min(low, i), length + 1, i)
        else:
            out.append((i, 1, i))
    return [(low, length) for low, length, _ in out]


def _render(letter, index, power, unicode):
    if unicode:
        text = letter + str(index).translate(_SUB)
        return text + (str(power).translate(_SUP) if power > 1 else "")
    return f"{letter}{index}" + (f"^{power}" if power > 1 else "")


def compose_operators(outer: SimplicialOperator, inner: SimplicialOperator) -> SimplicialOperator:
    """Normal form of ``outer . inner`` (``inner`` acts first)."""
    if inner.target != outer.source:
        raise OperatorError(
            f"dimension mismatch: inner lands in {inner.target}, outer starts at {outer.source}"
        )
    return SimplicialOperator.from_word(outer.word() + inner.word(), inner.source)


def face_power(index: int, times: int, source: int) -> SimplicialOperator:
    """``d_index`` applied ``times`` times, starting on dimension ``source``."""
    word = [(FACE, index)] * times
    return SimplicialOperator.from_word(word, source)
