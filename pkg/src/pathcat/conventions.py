"""Frozen sign conventions shared by the chain-level modules.

The modified boundary on normalized chains is

    tilde_boundary = boundary + CORRECTION_SIGN * ((id ⊗ e) - (e ⊗ id)) ∘ AW

where ``e`` is the edge indicator and, with ``KOSZUL`` set, ``id ⊗ e`` carries
the sign ``(-1)^{|x|}`` on ``x ⊗ y``.  The values were selected by
:func:`pathcat.chains.search_sign_conventions` as the unique choice under
which the coalgebra axioms hold on the whole test corpus.

The cobar differential on a letter ``s^{-1} σ`` of a simplex of dim ``n`` is

    COBAR_LINEAR_SIGN * s^{-1}(tilde_boundary σ)
      + sum_{0<v<n} (-1)^v s^{-1}σ(0..v) ⊗ s^{-1}σ(v..n)
      + COBAR_CURVATURE_SIGN * h(σ) * unit

with ``h = (e ⊗ e)∘AW - CORRECTION_SIGN * e∘boundary`` on 2-simplices.  This
is nonzero only on 2-simplices with ``σ(0) = σ(2)``, and it satisfies

    tilde_boundary² = (h ⊗ id)(AW - AW^op)

on the nose.
"""

from dataclasses import dataclass

SIGN_CONVENTION_VERSION = "pathcat-signs/2"


@dataclass(frozen=True)
class SignConvention:
    correction_sign: int
    koszul: bool

    def label(self) -> str:
        sign = "+" if self.correction_sign > 0 else "-"
        return f"{sign}(id⊗e - e⊗id)∘AW, koszul={'on' if self.koszul else 'off'}"


FROZEN = SignConvention(correction_sign=1, koszul=True)

CANDIDATES = tuple(SignConvention(g, k) for g in (1, -1) for k in (True, False))

COBAR_LINEAR_SIGN = -1

COBAR_CURVATURE_SIGN = -1


def table() -> dict:
    """The frozen values, as embedded in CLI reports."""
    return {
        "version": SIGN_CONVENTION_VERSION,
        "tilde_boundary": FROZEN.label(),
        "cobar_linear_sign": COBAR_LINEAR_SIGN,
        "cobar_split_sign": "(-1)^v for the split at vertex v",
        "curvature": "h = (e⊗e)∘AW - e∘∂",
        "curvature_identity": "∂̃² = (h⊗id)(AW - AW^op)",
        "cobar_curvature_sign": COBAR_CURVATURE_SIGN,
        "leibniz": "(-1)^(degree of the letters to the left)",
    }
