import copy

import pytest
from hypothesis import given, strategies as st

from springer_dual.greens import polys
from springer_dual.greens.chartables import RankError, table
from springer_dual.greens.kostka import charge, kostka_foulkes
from springer_dual.greens.lusztig_shoji import (all_families, certify,
                                                constituents, mult,
                                                solve_family, solve_type_a)
from springer_dual.greens.pieri import pieri_induce
from springer_dual.greens.verify import verify_theorems, verify_type_a
from springer_dual.duality import max_marked
from springer_dual.orbits import SO, SP, SoMarked, SpMarked, enumerate_marked
from springer_dual.partitions import Partition
from springer_dual.symbols import Bipartition, FamilyKey, gsc_forward

poly_st = st.lists(st.integers(-5, 5), max_size=5).map(polys.trim)


@given(poly_st, poly_st, poly_st)
def test_poly_ring_laws(p, q, r):
    assert polys.mul(p, q) == polys.mul(q, p)
    assert polys.mul(p, polys.add(q, r)) == polys.add(polys.mul(p, q), polys.mul(p, r))
    assert polys.sub(polys.add(p, q), q) == p
    if q:
        assert polys.exact_div(polys.mul(p, q), q) == p


def test_exact_div_rejects_remainder():
    with pytest.raises(polys.PolyError):
        polys.exact_div((1, 1), (0, 2))


def test_fmt():
    assert polys.fmt((0, 1, 1)) == "t + t^2"
    assert polys.fmt(()) == "0"


def _identity_class(tab):
    one_minus_t = polys.trim((1, -1))
    ident = polys.ONE
    for _ in range(tab.rank):
        ident = polys.mul(ident, one_minus_t)
    return tab.char_polys.index(ident)


def test_small_tables():
    b1 = table("B", 1)
    assert len(b1.classes) == 2 and len(b1.chars) == 2
    assert all(abs(v) == 1 for row in b1.chars.values() for v in row)
    a3 = table("A", 3)
    i = _identity_class(a3)
    assert sorted(row[i] for row in a3.chars.values()) == [1, 1, 2]


@pytest.mark.parametrize("wt,rank", [("A", n) for n in range(1, 7)]
                         + [("B", n) for n in range(1, 6)] + [("D", n) for n in range(2, 6)])
def test_orthogonality_and_degrees(wt, rank):
    tab = table(wt, rank)
    assert tab.orthogonality_residual() == 0
    i = _identity_class(tab)
    assert sum(row[i] ** 2 for row in tab.chars.values()) == tab.order
    assert len(tab.chars) == len(tab.classes)


def test_rank_bound():
    with pytest.raises(RankError):
        table("D", 9)


def test_charge():
    assert charge([2, 1]) == 0
    assert charge([1, 2]) == 1
    assert kostka_foulkes(Partition([2, 1]), Partition([1, 1, 1])) == (0, 1, 1)
    assert kostka_foulkes(Partition([2, 2]), Partition([1, 1, 1, 1])) == (0, 0, 1, 0, 1)


def test_type_a_matches_kostka_foulkes():
    for n in range(1, 7):
        sol = solve_type_a(n)
        assert all(sol.checks.values())
        for i, lam in enumerate(sol.labels):
            for j, mu in enumerate(sol.labels):
                assert sol.P.entries[i][j] == kostka_foulkes(lam, mu)
    assert verify_type_a(6)["ok"]


def test_rank_one_family():
    fam = solve_family(FamilyKey(SP, 2, 0))
    top, low = SpMarked.make((2,), {2: 1}), SpMarked.make((1, 1))
    p = fam.graded(low, top)
    assert len([c for c in p if c]) == 1 and p[-1] == 1
    assert mult(low, top) == 1


def test_one_member_family():
    fam = solve_family(FamilyKey(SP, 2, 1))
    assert fam.solution.P.entries == [[polys.ONE]]
    assert fam.solution.Lam.entries == fam.solution.omega.entries


def test_certificates():
    for kind, sizes in ((SP, range(0, 9, 2)), (SO, range(0, 9))):
        for size in sizes:
            for fam in all_families(kind, size):
                assert all(fam.solution.checks.values()), (kind, size, fam.key)
                assert fam.solution.omega.is_symmetric()


def test_perturbing_lambda_breaks_factorization():
    fam = solve_family(FamilyKey(SP, 6, 0))
    sol = copy.deepcopy(fam.solution)
    sol.Lam.entries[0][-1] = polys.add(sol.Lam.entries[0][-1], polys.ONE)
    sol.Lam.entries[-1][0] = polys.add(sol.Lam.entries[-1][0], polys.ONE)
    assert not certify(sol)["residual_zero"]


def test_multiplicity_basics():
    pairs = enumerate_marked(SP, 6)
    for m in pairs:
        assert mult(m, m) == 1
        assert mult(m, max_marked(m)) == 1
        for other in pairs:
            if gsc_forward(m)[0] != gsc_forward(other)[0]:
                assert mult(m, other) == 0


def test_constituents_frozen():
    found = constituents(SoMarked.make((3, 3, 1, 1), {3: 1, 1: -1}))
    assert found == {SoMarked.make((5, 3), {5: 1, 3: 1}): 1,
                     SoMarked.make((3, 3, 1, 1), {3: 1, 1: -1}): 1}


def test_pieri_examples():
    e, one = Partition([]), Partition([1])
    assert pieri_induce({Bipartition(e, e)}, 1) == {(one, e), (e, one)}
    assert pieri_induce({Bipartition(one, e)}, 1) == {
        (Partition([2]), e), (Partition([1, 1]), e), (one, one)}
    base = {Bipartition(one, one), Bipartition(e, Partition([2]))}
    assert pieri_induce(base, 0) == {(b.alpha, b.beta) for b in base}


@pytest.mark.parametrize("kind", [SP, SO])
def test_verify_small(kind):
    report = verify_theorems(kind, 6)
    assert report["ok"], report["counterexamples"]
