import pytest
from hypothesis import given, strategies as st

from springer_dual.az import ParameterError, UnipotentParam, az_dual
from springer_dual.duality import min_marked
from springer_dual.orbits import SP, SpMarked, enumerate_marked, is_symplectic

EMPTY = SpMarked.make(())


def test_gl_only():
    out = az_dual(UnipotentParam((1, 2), EMPTY, EMPTY, 3))
    assert list(out.lam) == [1] * 6
    assert out.merged_eps == {}


def test_steinberg_block():
    out = az_dual(UnipotentParam((), SpMarked.make((2,), {2: 1}), EMPTY, 1))
    assert list(out.lam) == [1, 1]


def test_single_block_is_min_marked():
    for size in range(0, 9, 2):
        for m in enumerate_marked(SP, size):
            out = az_dual(UnipotentParam((), m, EMPTY, size // 2))
            low = min_marked(m)
            assert out.lam == low.lam and out.merged_eps == low.eps
            swapped = az_dual(UnipotentParam((), EMPTY, m, size // 2))
            assert swapped.lam == low.lam and swapped.merged_eps == low.eps


def test_sum_constraint():
    with pytest.raises(ParameterError):
        UnipotentParam((1,), EMPTY, EMPTY, 2)
    with pytest.raises(ParameterError):
        UnipotentParam((0,), EMPTY, EMPTY, 0)


def test_non_tempered_gl_block():
    with pytest.raises(ParameterError):
        UnipotentParam.from_json({"gl_blocks": [2], "gl_nilpotents": [[1, 1]], "n": 2})


def test_conflict_reported():
    # both blocks have minimum (2,1,1) with opposite signs on 2
    plus = SpMarked.make((2, 1, 1), {2: -1})
    minus = SpMarked.make((2, 2), {2: -1})
    out = az_dual(UnipotentParam((), plus, minus, 4))
    assert min_marked(plus).eps[2] != min_marked(minus).eps[2]
    assert out.merged_eps is None and out.conflicts == (2,)
    assert out.to_json()["orbit_only"] is True


SP_PAIRS = [m for s in range(0, 7, 2) for m in enumerate_marked(SP, s)]


@given(st.lists(st.integers(1, 3), max_size=3), st.sampled_from(SP_PAIRS), st.sampled_from(SP_PAIRS))
def test_az_totals(gl, plus, minus):
    n = sum(gl) + (plus.size + minus.size) // 2
    out = az_dual(UnipotentParam(tuple(gl), plus, minus, n))
    assert out.lam.size == 2 * n
    assert is_symplectic(out.lam)
    other = az_dual(UnipotentParam(tuple(gl), minus, plus, n))
    assert other.lam == out.lam
    assert (other.eps_plus, other.eps_minus) == (out.eps_minus, out.eps_plus)
