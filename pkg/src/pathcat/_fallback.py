"""Pure-Python versions of the hot kernels.

These are always importable; ``pathcat.kernels`` prefers the compiled
``_ckernels`` module when it was built and falls back to these otherwise.
"""

FACE = 0
DEGEN = 1


def normalize_word(word):
    """Rewrite a face/degeneracy word into Eilenberg-Zilber normal form.

    ``word`` is a sequence of ``(kind, index)`` pairs read left to right as
    written, so the rightmost letter acts first.  Returns ``(degens, faces)``
    with degeneracies strictly decreasing and faces strictly increasing.
    The word is assumed to be applicable (dimensions already checked).
    """
    w = [tuple(x) for x in word]
    p = 0
    while p < len(w) - 1:
        (k1, a), (k2, b) = w[p], w[p + 1]
        if k1 == FACE and k2 == FACE:
            if a >= b:
                w[p], w[p + 1] = (FACE, b), (FACE, a + 1)
                p = max(p - 1, 0)
                continue
        elif k1 == DEGEN and k2 == DEGEN:
            if a <= b:
                w[p], w[p + 1] = (DEGEN, b + 1), (DEGEN, a)
                p = max(p - 1, 0)
                continue
        elif k1 == FACE and k2 == DEGEN:
            if a < b:
                w[p], w[p + 1] = (DEGEN, b - 1), (FACE, a)
            elif a == b or a == b + 1:
                del w[p:p + 2]
            else:
                w[p], w[p + 1] = (DEGEN, b), (FACE, a - 1)
            p = max(p - 1, 0)
            continue
        p += 1
    degens = tuple(i for k, i in w if k == DEGEN)
    faces = tuple(i for k, i in w if k == FACE)
    return degens, faces


def snf_diagonal(rows, ncols):
    """Smith normal form diagonal of a sparse integer matrix.

    ``rows`` is a list of dicts ``{col: value}``.  Pivot is the entry of
    minimal absolute value, ties broken by (row, col).  Returns the list of
    nonzero invariant factors in divisibility order.
    """
    m = [dict(r) for r in rows if r]
    diag = []
    while m:
        best = None
        for ri, r in enumerate(m):
            for c, v in r.items():
                key = (abs(v), ri, c)
                if best is None or key < best:
                    best = key
        _, pr, pc = best
        pivot_row = m[pr]
        pv = pivot_row[pc]
        done = True
        # clear the pivot column
        for ri, r in enumerate(m):
            if ri == pr or pc not in r:
                continue
            q = r[pc] // pv
            if q:
                for c, v in pivot_row.items():
                    nv = r.get(c, 0) - q * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
            if pc in r:
                done = False
        # clear the pivot row
        for c in list(pivot_row):
            if c == pc:
                continue
            q = pivot_row[c] // pv
            if q:
                for ri, r in enumerate(m):
                    if pc in r:
                        nv = r.get(c, 0) - q * r[pc]
                        if nv:
                            r[c] = nv
                        else:
                            r.pop(c, None)
            if c in pivot_row:
                done = False
        if done:
            diag.append(abs(pv))
            del m[pr]
            for r in m:
                r.pop(pc, None)
        m = [r for r in m if r]
    return _fix_divisibility(diag)


def _fix_divisibility(diag):
    from math import gcd

    d = sorted(diag)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                a, b = d[i], d[j]
                if b % a:
                    g = gcd(a, b)
                    d[i], d[j] = g, a * b // g
                    changed = True
        d.sort()
    return d
