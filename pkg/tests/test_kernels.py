"""The compiled kernels and the pure-Python fallback must agree."""

import pytest
from hypothesis import given, settings, strategies as st

from pathcat import _fallback, kernels

from test_operators import words

compiled = pytest.importorskip("pathcat._ckernels")


@given(words(max_len=12))
def test_normalize_word_agrees(ws):
    word, _ = ws
    assert compiled.normalize_word(word) == _fallback.normalize_word(word)


sparse_rows = st.lists(
    st.dictionaries(st.integers(0, 5), st.integers(-6, 6).filter(bool), max_size=4),
    max_size=6,
)


@given(sparse_rows)
@settings(max_examples=300)
def test_snf_agrees(rows):
    assert kernels.snf_diagonal(rows, 6) == _fallback.snf_diagonal(rows, 6)


def test_snf_overflow_falls_back():
    big = 2**62
    rows = [{0: big, 1: 3}, {0: 5, 1: big}]
    assert kernels.snf_diagonal(rows, 2) == _fallback.snf_diagonal(rows, 2)


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


def test_env_forces_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, PATHCAT_PURE_PYTHON="1")
    code = "import pathcat; from pathcat.szczarba import sz, flag_from_alpha; " \
           "print(pathcat.BACKEND, sz(3, 0, 3, flag_from_alpha(0, 3, (2, 1))).text())"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    assert out.split() == ["python", "s₀²g₃·s₁g₂·s₀d₁g₁"]
