"""Flags in the rigidified simplex, Szczarba operators and the map ``Sz``.

A flag in the mapping space from ``p`` to ``q`` of the rigidified
``n``-simplex is a weakly increasing chain ``U_0 ⊆ ... ⊆ U_k`` of subsets of
``{p, ..., q}`` that all contain ``p`` and ``q``; it is a ``k``-simplex, and it
is nondegenerate when the chain is strict.  Flags are written smallest set
first, but vertex ``l`` of the simplex is the ``l``-th largest set, so
``d_0`` drops the largest set.  This is the orientation in which the
operator recursion below is compatible with faces.

Words in the free simplicial category on ``Δⁿ`` are stored in written
(composition) order, ``g_q`` first and ``g_{p+1}`` last, each generator
carrying the operator applied to it.  ``g_k`` has dimension ``n - k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .operators import SimplicialOperator, compose_operators, face_power

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


class FlagError(ValueError):
    pass


# -- flags ----------------------------------------------------------------


def normalize_flag(flag) -> tuple:
    return tuple(tuple(sorted(set(U))) for U in flag)


def check_flag(p: int, q: int, flag) -> tuple:
    flag = normalize_flag(flag)
    if p > q:
        raise FlagError(f"no flags from {p} to {q}")
    if not flag:
        raise FlagError("a flag needs at least one set")
    for U in flag:
        if p not in U or q not in U or U[0] < p or U[-1] > q:
            raise FlagError(f"{set(U)} must contain {p} and {q} and lie between them")
    for a, b in zip(flag, flag[1:]):
        if not set(a) <= set(b):
            raise FlagError(f"{set(a)} is not contained in {set(b)}")
    return flag


def is_nondegenerate(flag) -> bool:
    return all(len(a) < len(b) for a, b in zip(flag, flag[1:]))


def flag_from_alpha(p: int, q: int, alpha) -> tuple:
    """Top flag whose added elements, last first, are ``alpha = (j_1, ..., j_m)``."""
    alpha = tuple(alpha)
    if sorted(alpha) != list(range(p + 1, q)):
        raise FlagError(f"{alpha} is not a permutation of {p + 1}..{q - 1}")
    cur = {p, q}
    out = [tuple(sorted(cur))]
    for j in reversed(alpha):
        cur.add(j)
        out.append(tuple(sorted(cur)))
    return tuple(out)


def alpha(flag) -> tuple:
    """The labelling of a top flag by the order in which elements are added."""
    if not is_nondegenerate(flag):
        raise FlagError("alpha is defined on nondegenerate flags")
    added = []
    for a, b in zip(flag, flag[1:]):
        (new,) = set(b) - set(a)
        added.append(new)
    return tuple(reversed(added))


def beta(j) -> tuple:
    """``i_k = #{l > k : j_l < j_k}``."""
    j = tuple(j)
    return tuple(sum(1 for l in range(k + 1, len(j)) if j[l] < j[k]) for k in range(len(j)))


def is_top_flag(p: int, q: int, flag) -> bool:
    return (
        is_nondegenerate(flag)
        and len(flag) == q - p
        and flag[0] == (p, q)
        and flag[-1] == tuple(range(p, q + 1))
    )


def gamma(p: int, q: int, flag) -> tuple:
    flag = check_flag(p, q, flag)
    if not is_top_flag(p, q, flag):
        raise FlagError("gamma is defined on nondegenerate flags of top dimension")
    return beta(alpha(flag))


def index_tuples(m: int) -> list:
    """``{(i_1, ..., i_m) : 0 <= i_k <= m - k}``, lexicographic."""
    out = [()]
    for k in range(1, m + 1):
        out = [t + (i,) for t in out for i in range(m - k + 1)]
    return out


def top_flags(p: int, q: int) -> list:
    """All nondegenerate flags of top dimension ``q - p - 1``, ordered by ``alpha``."""
    if q <= p:
        return []
    return [flag_from_alpha(p, q, a) for a in permutations(range(p + 1, q))]


def all_flags(p: int, q: int, k: int, nondegenerate_only: bool = False) -> list:
    """Every ``k``-simplex of the mapping space from ``p`` to ``q``."""
    inner = list(range(p + 1, q))
    subsets = []
    for mask in range(1 << len(inner)):
        subsets.append(tuple(sorted([p, q] + [inner[b] for b in range(len(inner)) if mask >> b & 1])))
    subsets.sort(key=lambda U: (len(U), U))
    out = []

    def extend(chain):
        if len(chain) == k + 1:
            out.append(tuple(chain))
            return
        last = set(chain[-1]) if chain else None
        for U in subsets:
            if last is not None:
                if not last <= set(U):
                    continue
                if nondegenerate_only and len(U) == len(last):
                    continue
            chain.append(U)
            extend(chain)
            chain.pop()

    if q > p:
        extend([])
    return out


def flag_face(flag, i: int) -> tuple:
    """Face ``d_i``; simplex vertex ``l`` is the set ``flag[k - l]``."""
    r = len(flag) - 1 - i
    return flag[:r] + flag[r + 1:]


def flag_degeneracy(flag, i: int) -> tuple:
    r = len(flag) - 1 - i
    return flag[: r + 1] + flag[r:]


def compose_flags(second, first) -> tuple:
    """Composite of a flag ``p -> r`` (``first``) and ``r -> q`` (``second``)."""
    if len(first) != len(second):
        raise FlagError("flags must have the same dimension to compose")
    return tuple(tuple(sorted(set(a) | set(b))) for a, b in zip(first, second))


# -- Szczarba operators ---------------------------------------------------


def d_operator(m: int, j: int, t) -> SimplicialOperator:
    """``D^m_{j,t}``, an operator from dimension ``m - 1 - j`` to ``m - 1``."""
    t = tuple(t)
    if m < 1 or not 0 <= j <= m - 1 or len(t) != m - 1:
        raise FlagError(f"D^{m}_{j},{t} is not defined")
    if any(not 0 <= i <= (m - 1) - k for k, i in enumerate(t, start=1)):
        raise FlagError(f"{t} violates the index bounds for m = {m}")
    return _d_operator(m, j, t)


def _d_operator(m, j, t):
    if m == 1:
        return SimplicialOperator.identity(0)
    i1, rest = t[0], t[1:]
    if j < i1:
        inner = compose_operators(
            SimplicialOperator.degeneracy(0, m - 2 - j),
            SimplicialOperator.face(i1 - j, m - 1 - j),
        )
        return compose_operators(_d_operator(m - 1, j, rest).shifted(), inner)
    if j == i1:
        return _d_operator(m - 1, j, rest).shifted()
    return compose_operators(
        _d_operator(m - 1, j - 1, rest).shifted(),
        SimplicialOperator.degeneracy(0, m - 1 - j),
    )


# -- words in the free simplicial category ---------------------------------


@dataclass(frozen=True)
class GWord:
    level: int
    source: int
    target: int
    dim: int
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        ks = [k for k, _ in self.letters]
        if ks != list(range(self.target, self.source, -1)):
            raise FlagError(f"generators {ks} do not run from g_{self.target} down to g_{self.source + 1}")
        for k, op in self.letters:
            if op.source != self.level - k:
                raise FlagError(f"operator on g_{k} must start at dimension {self.level - k}")
            if op.target != self.dim:
                raise FlagError(f"letter on g_{k} has dimension {op.target}, word has {self.dim}")

    def text(self, unicode: bool = True) -> str:
        if not self.letters:
            return f"id_{self.source}"
        parts = []
        for k, op in self.letters:
            if unicode:
                pre = "" if op.is_identity() else op.pretty(unicode=True)
                parts.append(f"{pre}g{str(k).translate(_SUB)}")
            else:
                pre = "" if op.is_identity() else op.pretty() + " "
                parts.append(f"{pre}g{k}")
        return "·".join(parts) if unicode else " . ".join(parts)

    def apply(self, op: SimplicialOperator) -> "GWord":
        """Act by a simplicial operator letter by letter."""
        return GWord(self.level, self.source, self.target, op.target,
                     tuple((k, compose_operators(op, o)) for k, o in self.letters))

    def concat(self, earlier: "GWord") -> "GWord":
        """``self ∘ earlier``: ``earlier`` runs first."""
        if earlier.target != self.source or earlier.level != self.level:
            raise FlagError("words do not compose")
        dim = self.dim if self.letters else earlier.dim
        return GWord(self.level, earlier.source, self.target, dim, self.letters + earlier.letters)


def unit_word(level: int, vertex: int, dim: int) -> GWord:
    return GWord(level, vertex, vertex, dim, ())


def opposite(op: SimplicialOperator) -> SimplicialOperator:
    """Conjugate by the order reversal of both source and target simplices."""
    v = op.monotone_map()
    t = len(v) - 1
    return SimplicialOperator.from_monotone_map([op.source - v[t - i] for i in range(t + 1)], op.source)


def restriction_prefix(n: int, q: int, k: int, literal: bool = False) -> SimplicialOperator:
    """Operator cutting ``g_k`` down to dimension ``q - k`` before ``D`` acts.

    By default it keeps the first ``q - k + 1`` vertices, which is what
    naturality in the simplex forces; ``literal`` uses ``d_0^{n-q}``
    instead, keeping the last ones.  Both agree when ``q = n``.
    """
    if literal:
        return face_power(0, n - q, n - k)
    return face_power(q - k + 1, n - q, n - k)


def sz_top(n: int, p: int, q: int, flag, literal: bool = False) -> GWord:
    """``Sz`` on a nondegenerate flag of top dimension: the product of
    ``D^{q-p}_{j,γ} · prefix · g_{p+1+j}`` over ``j = q-p-1, ..., 0``."""
    g = gamma(p, q, flag)
    m = q - p
    letters = []
    for j in range(m - 1, -1, -1):
        k = p + 1 + j
        prefix = restriction_prefix(n, q, k, literal)
        letters.append((k, compose_operators(d_operator(m, j, g), prefix)))
    return GWord(n, p, q, m - 1, tuple(letters))


def vertex_positions(flag, top_dim: int) -> list:
    """Vertex ``l`` of a flag simplex is its ``l``-th largest set."""
    k = len(flag) - 1
    return [top_dim - (len(flag[k - l]) - 2) for l in range(k + 1)]


def parents(p: int, q: int, flag) -> list:
    """Top flags containing every set of ``flag``."""
    return [top for top in top_flags(p, q) if all(U in top for U in flag)]


def sz(n: int, p: int, q: int, flag, check_parents: bool = False) -> GWord:
    """``Sz`` on any flag, as an operator applied to a top flag containing it.

    With ``check_parents`` every such top flag is used and the results must
    agree.
    """
    if not 0 <= p <= q <= n:
        raise FlagError(f"objects {p}, {q} are not in [0, {n}]")
    flag = check_flag(p, q, flag)
    k = len(flag) - 1
    if p == q:
        return unit_word(n, p, k)
    tops = parents(p, q, flag)
    if not tops:
        raise FlagError("flag has no top-dimensional parent")
    theta = SimplicialOperator.from_monotone_map(vertex_positions(flag, q - p - 1), q - p - 1)
    results = {sz_top(n, p, q, top).apply(theta) for top in (tops if check_parents else tops[:1])}
    if len(results) != 1:
        raise FlagError(f"Sz is not well defined on {flag}: parents disagree")
    return results.pop()


def indecomposable_image(n: int, p: int, q: int) -> GWord:
    """``Sz({p, q})``: the generator ``g_k`` sits at its vertex ``q - k``."""
    letters = tuple((k, SimplicialOperator.from_monotone_map([q - k], n - k)) for k in range(q, p, -1))
    return GWord(n, p, q, 0, letters)


def phi_indecomposable(n: int, p: int, q: int) -> GWord:
    """``d_0^{n-q} g_q · d_1 d_0^{n-q} g_{q-1} ··· d_1^{q-p-1} d_0^{n-q} g_{p+1}``.

    This picks the vertex ``n - q`` of each generator; it is the letterwise
    opposite of ``indecomposable_image``.
    """
    letters = []
    for r, k in enumerate(range(q, p, -1)):
        op = compose_operators(face_power(1, r, q - k), face_power(0, n - q, n - k))
        letters.append((k, op))
    return GWord(n, p, q, 0, tuple(letters))


def vertex_image(n: int, p: int, q: int, U) -> GWord:
    """Composite of ``indecomposable_image`` over the gaps of the 0-morphism ``U``."""
    U = sorted(set(U))
    if U[0] != p or U[-1] != q:
        raise FlagError(f"{set(U)} is not a 0-morphism from {p} to {q}")
    word = unit_word(n, p, 0)
    for a, b in zip(U, U[1:]):
        word = indecomposable_image(n, a, b).concat(word)
    return word


# -- cosimplicial structure ------------------------------------------------


def coface_generator(n: int, i: int, j: int) -> list:
    """``d^i(g_j)`` from level ``n`` to ``n + 1`` as written-order letters.

    ``i`` runs over ``0 .. n + 1``; the last coface keeps every generator
    and drops the final vertex of its simplex.
    """
    up = n + 1
    if i == n + 1:
        return [(j, SimplicialOperator.face(up - j, up - j))]
    if j > i:
        return [(j + 1, SimplicialOperator.identity(up - j - 1))]
    if j == i:
        return [(i + 1, SimplicialOperator.identity(up - i - 1)), (i, SimplicialOperator.face(0, up - i))]
    return [(j, SimplicialOperator.face(i - j, up - j))]


def codegeneracy_generator(n: int, i: int, j: int) -> list:
    """``s^i(g_j)`` from level ``n`` to ``n - 1``; ``[]`` is an identity."""
    down = n - 1
    if j <= i:
        return [(j, SimplicialOperator.degeneracy(i - j, down - j))]
    if j == i + 1:
        return []
    return [(j - 1, SimplicialOperator.identity(down - j + 1))]


def coface_vertex(i: int, v: int) -> int:
    return v if v < i else v + 1


def codegeneracy_vertex(i: int, v: int) -> int:
    return v if v <= i else v - 1


def g_cosimplicial(kind: str, i: int, w: GWord) -> GWord:
    """Apply the coface (``kind = "d"``) or codegeneracy (``"s"``) ``i``."""
    n = w.level
    if kind == "d":
        if not 0 <= i <= n + 1:
            raise FlagError(f"coface d^{i} undefined at level {n}")
        level, vmap, gen = n + 1, coface_vertex, coface_generator
    elif kind == "s":
        if n < 1 or not 0 <= i <= n - 1:
            raise FlagError(f"codegeneracy s^{i} undefined at level {n}")
        level, vmap, gen = n - 1, codegeneracy_vertex, codegeneracy_generator
    else:
        raise FlagError(f"unknown cosimplicial operator {kind!r}")
    letters = []
    for k, op in w.letters:
        for k2, psi in gen(n, i, k):
            letters.append((k2, compose_operators(op, psi)))
    return GWord(level, vmap(i, w.source), vmap(i, w.target), w.dim, tuple(letters))


def flag_cosimplicial(kind: str, i: int, p: int, q: int, flag):
    vmap = coface_vertex if kind == "d" else codegeneracy_vertex
    image = tuple(tuple(sorted({vmap(i, v) for v in U})) for U in flag)
    return vmap(i, p), vmap(i, q), image


def sz_table(n: int, p: int, q: int) -> list:
    """Rows ``(flag, alpha, gamma, word)`` over the top flags, ordered by ``alpha``."""
    rows = []
    for flag in top_flags(p, q):
        rows.append((flag, alpha(flag), gamma(p, q, flag), sz_top(n, p, q, flag)))
    return rows
