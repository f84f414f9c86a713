import pytest

from springer_dual.orbits import (SO, SP, OrbitError, SoMarked, SpMarked,
                                  closure_leq, delta, enumerate_marked,
                                  is_orthogonal, is_symplectic,
                                  make_marked, marked_from_json,
                                  valid_partitions)
from springer_dual.partitions import Partition


def P(*parts):
    return Partition.of(parts)


def test_validity():
    assert is_symplectic(P(3, 3, 2))
    assert not is_symplectic(P(3, 2, 1))
    assert is_orthogonal(P(2, 2, 1))
    assert not is_orthogonal(P(2, 1))


def test_delta():
    assert delta(SP, P(4, 2, 2, 1, 1)) == (4, 2)
    assert delta(SO, P(3, 3, 1)) == (3, 1)
    assert delta(SO, P(2, 2)) == ()
    with pytest.raises(OrbitError):
        delta(SP, P(3))


def test_closure():
    assert closure_leq(P(2, 2, 1, 1), P(3, 3))
    assert closure_leq(P(3, 1), P(3, 1))
    assert closure_leq(P(1, 1, 1, 1, 1, 1), P(3, 3))
    with pytest.raises(OrbitError):
        closure_leq(P(2), P(3))


def test_enumerate_small():
    assert len(enumerate_marked(SP, 4)) == 7
    assert len(enumerate_marked(SP, 0)) == 1
    so3 = enumerate_marked(SO, 3)
    assert [list(m.lam) for m in so3] == [[3], [1, 1, 1]]


def test_sign_class_counts():
    for n in range(1, 13):
        pairs = enumerate_marked(SO, n)
        for lam in valid_partitions(SO, n):
            found = [m for m in pairs if m.lam == lam]
            d = delta(SO, lam)
            assert len(found) == (2 ** (len(d) - 1) if d else 2)


def test_so_canonical_representative():
    m = SoMarked.make((3, 3, 1), {3: -1, 1: 1})
    assert m.eps == {3: 1, 1: -1}
    assert m == SoMarked.make((3, 3, 1), {3: 1, 1: -1})


def test_degenerate_tags():
    with pytest.raises(OrbitError):
        SoMarked.make((2, 2))
    with pytest.raises(OrbitError):
        SoMarked.make((3, 1), {3: 1, 1: 1}, "+")
    assert SoMarked.make((2, 2), degenerate="-").degenerate == "-"


def test_eps_domain_checked():
    with pytest.raises(OrbitError):
        SpMarked.make((2, 2), {})
    with pytest.raises(OrbitError):
        SpMarked.make((2, 1, 1), {2: 1, 1: 1})
    with pytest.raises(OrbitError):
        SpMarked.make((2,), {2: 0})
    with pytest.raises(OrbitError):
        make_marked(SP, (2,), {2: 1}, "+")


def test_json_shapes():
    sp = SpMarked.make((2, 2), {2: -1})
    assert sp.to_json() == {"group": "Sp", "lambda": [2, 2], "eps": {"2": -1}}
    so = SoMarked.make((3, 3, 1), {3: 1, 1: -1})
    assert so.to_json() == {"group": "SO", "lambda": [3, 3, 1], "eps": {"3": 1, "1": -1},
                            "degenerate": None}
    for m in enumerate_marked(SO, 8) + enumerate_marked(SP, 8):
        assert marked_from_json(m.to_json()) == m


def test_positional_signs():
    m = SpMarked.make((4, 2, 2, 1, 1), {4: 1, 2: -1})
    assert m.positional() == [1, -1, -1, 1, 1]
