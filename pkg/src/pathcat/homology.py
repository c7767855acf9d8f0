"""Exact integer homology of hom complexes via Smith normal form."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels


class HomologyError(ValueError):
    pass


class SparseIntMatrix:
    def __init__(self, nrows: int, ncols: int, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise HomologyError(f"entry {(r, c)} outside a {nrows}x{ncols} matrix")
            if v:
                self.entries[(r, c)] = int(v)

    @classmethod
    def from_dense(cls, rows) -> "SparseIntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    def to_dense(self) -> list:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def row_dicts(self) -> list:
        rows = [dict() for _ in range(self.nrows)]
        for (r, c), v in sorted(self.entries.items()):
            rows[r][c] = v
        return rows


def smith_normal_form(M: SparseIntMatrix):
    """Nonzero invariant factors ``d_1 | d_2 | ...`` and the rank."""
    diag = kernels.snf_diagonal(M.row_dicts(), M.ncols)
    return diag, len(diag)


def smith_with_transforms(rows):
    """Dense SNF returning ``(U, D, V)`` with ``U·A·V = D`` and ``U, V`` unimodular.

    Quadratic-memory and meant for small matrices; used to audit the sparse
    routine.
    """
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(M, i, j):
        M[i], M[j] = M[j], M[i]

    def swap_cols(M, i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]

    def add_row(M, src, dst, k):
        M[dst] = [a - k * b for a, b in zip(M[dst], M[src])]

    def add_col(M, src, dst, k):
        for r in M:
            r[dst] -= k * r[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(A, t, i)
        swap_rows(U, t, i)
        swap_cols(A, t, j)
        swap_cols(V, t, j)
        while True:
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(A, t, i, q)
                    add_row(U, t, i, q)
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(A, t, j, q)
                    add_col(V, t, j, q)
                    if A[t][j]:
                        clean = False
            if clean:
                bad = [(i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]]
                if not bad:
                    break
                i, _ = bad[0]
                add_row(A, i, t, -1)
                add_row(U, i, t, -1)
                continue
            nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j] and (i == t or j == t)]
            _, i, j = min(nz)
            swap_rows(A, t, i)
            swap_rows(U, t, i)
            swap_cols(A, t, j)
            swap_cols(V, t, j)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, A, V


@dataclass
class DegreeHomology:
    betti: int
    torsion: list = field(default_factory=list)
    truncated: bool = False
    basis_size: int = 0

    def as_dict(self) -> dict:
        return {"betti": self.betti, "torsion": list(self.torsion), "truncated": self.truncated,
                "basis_size": self.basis_size}


@dataclass
class HomologySummary:
    degrees: dict = field(default_factory=dict)

    def betti(self) -> list:
        return [self.degrees[k].betti for k in sorted(self.degrees)]

    def as_dict(self) -> dict:
        return {str(k): v.as_dict() for k, v in sorted(self.degrees.items())}


def chain_complex_homology(bases: dict, differential, top: int) -> HomologySummary:
    """Homology in degrees ``0 .. top - 1`` of a complex given by ``bases[k]``
    (lists of hashable basis keys, complete through ``top``) and
    ``differential(key) -> {key: coeff}`` landing in ``bases[k - 1]``."""
    ranks = {}
    invariants = {}
    for k in range(1, top + 1):
        src = bases.get(k, [])
        tgt_index = {b: i for i, b in enumerate(bases.get(k - 1, []))}
        rows = []
        for b in src:
            row = {}
            for t, c in differential(b).items():
                if t not in tgt_index:
                    raise HomologyError(f"differential leaves the supplied basis in degree {k - 1}")
                row[tgt_index[t]] = c
            rows.append(row)
        M = SparseIntMatrix(len(src), len(tgt_index), {(i, j): v for i, r in enumerate(rows) for j, v in r.items()})
        invariants[k], ranks[k] = smith_normal_form(M)
    out = HomologySummary()
    for k in range(top):
        n = len(bases.get(k, []))
        rk_out = ranks.get(k, 0)
        rk_in = ranks.get(k + 1, 0)
        tors = [d for d in invariants.get(k + 1, []) if d > 1]
        out.degrees[k] = DegreeHomology(n - rk_out - rk_in, tors, False, n)
    return out


def _matrix(src, tgt, differential, keep=None):
    index = {b: i for i, b in enumerate(tgt)}
    entries = {}
    for r, b in enumerate(src):
        for t, c in differential(b).items():
            if keep is not None and t not in keep:
                continue
            if t not in index:
                raise HomologyError("differential leaves the supplied basis")
            entries[(r, index[t])] = c
    return SparseIntMatrix(len(src), len(tgt), entries)


def hom_homology(Om, x, y, max_degree: int, word_cap=None, margin: int = 0) -> HomologySummary:
    """Homology of the hom complex ``Om(x, y)`` in degrees below ``max_degree``.

    With ``word_cap`` the complex is cut off at total weight ``word_cap``
    (weight = sum of simplex dimensions, inverse letters counting 1).  The
    differential never raises weight, so the cut is a subcomplex, and in
    degree 0 it bounds the word length.  Degrees whose answer could change
    with a larger cap are flagged as truncated.

    A cut-off complex has spurious cycles near the top weight.  With
    ``margin > 0`` the Betti numbers count only classes of the cap window
    that survive into the window of weight ``word_cap + margin``, and the
    torsion is that of the larger window (exact whenever it is empty).
    """
    if max_degree < 1:
        raise HomologyError("max_degree must be at least 1")
    if word_cap is None and Om.needs_cap():
        raise HomologyError("this hom is infinite; a word cap is required")

    def diff(m):
        return Om.differential_terms({m: 1})

    if word_cap is None or margin <= 0:
        bases = {k: Om.hom_basis(x, y, k, weight_cap=word_cap) for k in range(max_degree + 1)}
        summary = chain_complex_homology(bases, diff, max_degree)
    else:
        big = word_cap + margin
        small = {k: Om.hom_basis(x, y, k, weight_cap=word_cap) for k in range(max_degree + 1)}
        large = {k: Om.hom_basis(x, y, k, weight_cap=big) for k in range(max_degree + 1)}
        outside = {k: set(large[k]) - set(small[k]) for k in large}
        large_summary = chain_complex_homology(large, diff, max_degree)
        summary = HomologySummary()
        for k in range(max_degree):
            n_small = len(small[k])
            rk_small = smith_normal_form(_matrix(small[k], small.get(k - 1, []), diff))[1] if k else 0
            rk_big = smith_normal_form(_matrix(large[k + 1], large[k], diff))[1]
            order = {b: i for i, b in enumerate(large[k])}
            out_k = sorted(outside[k], key=order.get)
            rk_proj = smith_normal_form(_matrix(large[k + 1], out_k, diff, keep=outside[k]))[1]
            betti = n_small - rk_small - rk_big + rk_proj
            summary.degrees[k] = DegreeHomology(betti, list(large_summary.degrees[k].torsion), False, n_small)
    if word_cap is not None:
        for k, h in summary.degrees.items():
            h.truncated = Om.is_truncated(x, y, k, weight_cap=word_cap) or Om.is_truncated(
                x, y, k + 1, weight_cap=word_cap
            )
    return summary
