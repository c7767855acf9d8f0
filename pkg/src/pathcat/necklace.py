"""Necklaces, their cube faces and the triangulation of cubes.

A necklace map is a chain of beads ``σ_1, ..., σ_k`` in a simplicial set,
the last vertex of each bead equal to the first vertex of the next.  A bead
of dimension ``n`` contributes ``n - 1`` cube directions, one per interior
vertex, and directions are numbered bead by bead starting from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial


class NecklaceError(ValueError):
    pass


@dataclass(frozen=True)
class Necklace:
    beads: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "beads", tuple(self.beads))
        if any(b < 1 for b in self.beads):
            raise NecklaceError(f"bead dimensions must be positive: {self.beads}")

    @property
    def dim(self) -> int:
        return sum(self.beads) - len(self.beads)

    def __add__(self, other: "Necklace") -> "Necklace":
        return Necklace(self.beads + other.beads)


@dataclass(frozen=True)
class NecklaceMap:
    source: str
    target: str
    beads: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "beads", tuple(self.beads))

    @classmethod
    def from_beads(cls, X, beads) -> "NecklaceMap":
        beads = tuple(X.ref(b) for b in beads)
        if not beads:
            raise NecklaceError("use NecklaceMap(v, v) for the empty necklace")
        for k, b in enumerate(beads):
            if X.dim(b) < 1:
                raise NecklaceError(f"bead {k} has dimension 0")
        for k in range(len(beads) - 1):
            if X.target(beads[k]) != X.source(beads[k + 1]):
                raise NecklaceError(f"beads {k} and {k + 1} do not chain")
        return cls(X.source(beads[0]), X.target(beads[-1]), beads)

    def necklace(self, X) -> Necklace:
        return Necklace(tuple(X.dim(b) for b in self.beads))

    def dim(self, X) -> int:
        return self.necklace(X).dim

    def is_degenerate(self) -> bool:
        """True when some bead is degenerate, making the cube zero in normalized chains."""
        return any(b.degens for b in self.beads)

    def concat(self, other: "NecklaceMap") -> "NecklaceMap":
        """Path-order concatenation: ``self`` first, then ``other``."""
        if self.target != other.source:
            raise NecklaceError("necklaces do not chain")
        return NecklaceMap(self.source, other.target, self.beads + other.beads)


def locate_direction(X, m: NecklaceMap, j: int):
    """Bead index and interior vertex of global direction ``j`` (1-based)."""
    if j < 1:
        raise NecklaceError(f"direction {j} out of range")
    left = j
    for k, b in enumerate(m.beads):
        inner = X.dim(b) - 1
        if left <= inner:
            return k, left
        left -= inner
    raise NecklaceError(f"direction {j} out of range for a cube of dimension {m.dim(X)}")


def _contract(X, beads):
    return tuple(b for b in beads if not (X.dim(b) == 1 and b.degens))


def cube_face(X, m: NecklaceMap, j: int, eps: int) -> NecklaceMap:
    """``eps = 0`` removes the interior vertex of direction ``j``;
    ``eps = 1`` splits the bead there.  Degenerate 1-dimensional beads are
    contracted away."""
    k, v = locate_direction(X, m, j)
    b = m.beads[k]
    n = X.dim(b)
    if eps == 0:
        new = (X.face(b, v),)
    elif eps == 1:
        new = (X.restrict(b, range(0, v + 1)), X.restrict(b, range(v, n + 1)))
    else:
        raise NecklaceError(f"eps must be 0 or 1, got {eps}")
    beads = m.beads[:k] + _contract(X, new) + m.beads[k + 1:]
    return NecklaceMap(m.source, m.target, beads)


def cube_boundary(X, m: NecklaceMap) -> dict:
    """``Σ_j (-1)^j (face¹_j - face⁰_j)`` over nondegenerate faces."""
    out = {}
    for j in range(1, m.dim(X) + 1):
        for eps, sign in ((1, 1), (0, -1)):
            f = cube_face(X, m, j, eps)
            if f.is_degenerate():
                continue
            c = out.get(f, 0) + sign * (-1) ** j
            if c:
                out[f] = c
            else:
                out.pop(f, None)
    return out


def inversions(perm) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def triangulation_terms(n: int) -> list:
    """The ``n!`` top simplices of the ``n``-cube with their shuffle signs.

    A permutation ``π`` names the monotone lattice path that raises
    coordinate ``π[0]`` first, then ``π[1]``, and so on.
    """
    if n < 0:
        raise NecklaceError("n must be nonnegative")
    out = [(p, (-1) ** inversions(p)) for p in permutations(range(1, n + 1))]
    assert len(out) == factorial(n)
    return out


def lattice_path(perm) -> list:
    """Vertices of the cube simplex named by ``perm`` as 0/1 tuples."""
    n = len(perm)
    cur = [0] * n
    out = [tuple(cur)]
    for c in perm:
        cur[c - 1] = 1
        out.append(tuple(cur))
    return out
