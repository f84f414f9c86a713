from collections import Counter
import pytest
from hypothesis import given

from springer_dual.orbits import SO, SP, SoMarked, SpMarked, enumerate_marked
from springer_dual.partitions import Partition, arithmetic
from springer_dual.symbols import (Bipartition, FamilyKey, SymbolError,
                                   bip_symbol, families, family_members,
                                   gsc_forward, gsc_inverse, marked_symbol,
                                   sign_twist, similar, to_classical_symbol)

from census import so_census, sp_census
from conftest import marked_pairs


def test_census_values():
    assert sp_census(4) == 7
    assert [sp_census(2 * n) for n in range(5)] == [1, 3, 7, 16, 32]


def test_marked_symbol_defects():
    assert marked_symbol(SoMarked.make((1, 1, 1), {1: 1})).defect == 1
    assert marked_symbol(SpMarked.make((2,), {2: -1})).defect == 1
    assert marked_symbol(SpMarked.make((1, 1))).defect == 0


def test_bip_symbol_examples():
    s = bip_symbol(FamilyKey(SO, 1, 1), Bipartition((), ()))
    assert (s.A, s.B) == (arithmetic(1, 2), arithmetic(-1, 2))
    s = bip_symbol(FamilyKey(SO, 4, 0), Bipartition((1,), (1,), 1))
    assert s.A.head(3) == s.B.head(3) == [1, -2, -4]
    assert not s.ordered
    s = bip_symbol(FamilyKey(SP, 2, 1), Bipartition((), ()))
    assert (s.A, s.B) == (arithmetic(-2, 2), arithmetic(1, 2))


def test_bip_symbol_size_mismatch():
    with pytest.raises(SymbolError):
        bip_symbol(FamilyKey(SP, 4, 0), Bipartition((1,), ()))


def test_family_keys():
    assert [k.k for k in families(SP, 6)] == [0, 1, 2]
    assert [k.k for k in families(SO, 9)] == [1, 3]
    assert FamilyKey(SO, 9, 3).weyl_type == "B"
    assert FamilyKey(SO, 8, 0).weyl_type == "D"
    with pytest.raises(SymbolError):
        FamilyKey(SO, 4, 1)
    with pytest.raises(SymbolError):
        FamilyKey(SP, 4, 2)


def test_sp2_images():
    images = {m: gsc_forward(m) for m in enumerate_marked(SP, 2)}
    assert Counter(k.k for k, _ in images.values()) == {0: 2, 1: 1}
    assert len(set(images.values())) == 3
    assert gsc_inverse(FamilyKey(SP, 2, 1), Bipartition((), ())) == SpMarked.make((2,), {2: -1})


def test_so3_images():
    key = FamilyKey(SO, 3, 1)
    found = {gsc_inverse(key, b) for b in family_members(key)}
    assert found == {SoMarked.make((3,), {3: 1}), SoMarked.make((1, 1, 1), {1: 1})}


# frozen outputs of the forward map
SP4 = {
    SpMarked.make((4,), {4: 1}): (0, Bipartition((2,), ())),
    SpMarked.make((4,), {4: -1}): (1, Bipartition((1,), ())),
    SpMarked.make((2, 2), {2: 1}): (0, Bipartition((1,), (1,))),
    SpMarked.make((2, 2), {2: -1}): (0, Bipartition((), (2,))),
    SpMarked.make((2, 1, 1), {2: 1}): (0, Bipartition((1, 1), ())),
    SpMarked.make((2, 1, 1), {2: -1}): (1, Bipartition((), (1,))),
    SpMarked.make((1, 1, 1, 1)): (0, Bipartition((), (1, 1))),
}
SO4 = {
    SoMarked.make((3, 1), {3: 1, 1: 1}): (0, Bipartition((2,), ())),
    SoMarked.make((3, 1), {3: 1, 1: -1}): (2, Bipartition((), ())),
    SoMarked.make((2, 2), degenerate="+"): (0, Bipartition((1,), (1,), 1)),
    SoMarked.make((2, 2), degenerate="-"): (0, Bipartition((1,), (1,), 2)),
    SoMarked.make((1, 1, 1, 1), {1: 1}): (0, Bipartition((1, 1), ())),
}


@pytest.mark.parametrize("table", [SP4, SO4])
def test_frozen_small_rank(table):
    for m, (k, b) in table.items():
        key, got = gsc_forward(m)
        assert (key.k, got) == (k, b)


def test_bijection_and_census():
    for two_n in range(0, 15, 2):
        pairs = enumerate_marked(SP, two_n)
        assert len(pairs) == sp_census(two_n)
        images = [gsc_forward(m) for m in pairs]
        assert len(set(images)) == len(pairs)
        assert all(gsc_inverse(k, b) == m for m, (k, b) in zip(pairs, images))
    for N in range(0, 14):
        pairs = enumerate_marked(SO, N)
        assert len(pairs) == so_census(N)
        images = [gsc_forward(m) for m in pairs]
        assert len(set(images)) == len(pairs)
        assert all(gsc_inverse(k, b) == m for m, (k, b) in zip(pairs, images))


def test_inverse_covers_every_member():
    for kind, sizes in ((SP, range(0, 11, 2)), (SO, range(0, 11))):
        for size in sizes:
            for key in families(kind, size):
                for b in family_members(key):
                    assert gsc_forward(gsc_inverse(key, b)) == (key, b)


def test_so_defect_parity():
    for N in range(13):
        for m in enumerate_marked(SO, N):
            assert gsc_forward(m)[0].k % 2 == N % 2


def test_similarity_is_same_partition():
    for kind, size in ((SP, 8), (SO, 9)):
        pairs = enumerate_marked(kind, size)
        syms = {m: marked_symbol(m) for m in pairs}
        for a in pairs:
            for b in pairs:
                assert similar(syms[a], syms[b]) == (a.lam == b.lam)


def test_similar_examples():
    x = marked_symbol(SoMarked.make((3, 3, 1), {3: 1, 1: 1}))
    y = marked_symbol(SoMarked.make((3, 3, 1), {3: 1, 1: -1}))
    z = marked_symbol(SoMarked.make((5, 1, 1), {5: 1, 1: 1}))
    assert similar(x, y) and similar(x, x) and not similar(x, z)


def test_marked_symbol_matches_bip_symbol():
    for m in enumerate_marked(SO, 9) + enumerate_marked(SP, 8):
        key, b = gsc_forward(m)
        assert marked_symbol(m) == bip_symbol(key, b)
        assert marked_symbol(m).defect == key.k


def test_sign_twist_examples():
    key = FamilyKey(SP, 6, 0)
    assert sign_twist(key, Bipartition((2,), (1,))) == Bipartition((1,), (1, 1))
    key0 = FamilyKey(SP, 2, 1)
    assert sign_twist(key0, Bipartition((), ())) == Bipartition((), ())


def test_sign_twist_involution():
    for kind, size in [(SP, s) for s in range(0, 13, 2)] + [(SO, s) for s in range(13)]:
        for key in families(kind, size):
            for b in family_members(key):
                t = sign_twist(key, b)
                assert t in family_members(key)
                assert sign_twist(key, t) == b


def test_classical_symbol_rows():
    a, b = to_classical_symbol(marked_symbol(SoMarked.make((1, 1, 1), {1: 1})))
    assert len(a) - len(b) == 1
    assert list(a) == sorted(a) and list(b) == sorted(b)


@given(marked_pairs(max_size=12))
def test_roundtrip_property(m):
    key, b = gsc_forward(m)
    assert gsc_inverse(key, b) == m
    assert b.size == key.rank
