"""The Lusztig-Shoji algorithm on one family of a generalized Springer
correspondence, and the multiplicities it yields.

``omega_matrix`` builds the graded pairing

    Omega[x, y](t) = prod_i (1 - t^{d_i}) / |W| * sum_w x(w) y(w) / det(1 - t w),

i.e. the graded multiplicity of ``x (x) y`` in the coinvariant algebra of the
relative Weyl group ``W``.  ``solve`` then factors ``Omega = P Lam P^T`` with
``P`` block-unitriangular along the closure order of the attached orbits and
``Lam`` block-diagonal on orbits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..orbits import SO, Marked, SoMarked, closure_leq, enumerate_marked
from ..partitions import Partition, dominance_leq, partitions_of
from ..symbols import (Bipartition, FamilyKey, families, family_members,
                       gsc_forward, gsc_inverse)
from . import polys
from .chartables import CharTable, table


class SolveError(RuntimeError):
    """The factorization does not exist with the required shape."""


# ---------------------------------------------------------------- Omega


def _series_inverse(p: polys.Poly, length: int) -> list[int]:
    """Power series of ``1 / p`` to ``length`` terms (``p(0) = 1``)."""
    if not p or p[0] != 1:
        raise SolveError("constant term must be 1")
    out = [0] * length
    out[0] = 1
    for n in range(1, length):
        out[n] = -sum(p[k] * out[n - k] for k in range(1, min(n, len(p) - 1) + 1))
    return out


def _truncated_mul(a, b, length):
    out = [0] * length
    for i, x in enumerate(a[:length]):
        if x:
            for j, y in enumerate(b[:length - i]):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def _class_series(weyl_type: str, rank: int) -> tuple[tuple[int, ...], ...]:
    tab = table(weyl_type, rank)
    top = sum(d - 1 for d in tab.degrees)
    length = top + 3
    numerator = [1] + [0] * (length - 1)
    for d in tab.degrees:
        numerator = _truncated_mul(numerator, list(polys.add(polys.ONE, polys.monomial(-1, d))), length)
    return tuple(tuple(_truncated_mul(numerator, _series_inverse(cp, length), length))
                 for cp in tab.char_polys)


def omega_entry(tab: CharTable, series, x, y) -> polys.Poly:
    vx, vy = tab.chars[x], tab.chars[y]
    length = len(series[0])
    acc = [0] * length
    for size, a, b, s in zip(tab.sizes, vx, vy, series):
        w = size * a * b
        if w:
            for i, c in enumerate(s):
                acc[i] += w * c
    out = []
    for c in acc:
        q = Fraction(c, tab.order)
        if q.denominator != 1:
            raise SolveError(f"non-integral coefficient in Omega[{x}, {y}]")
        out.append(int(q))
    top = sum(d - 1 for d in tab.degrees)
    if any(out[top + 1:]):
        raise SolveError("Omega is not a polynomial of the expected degree")
    return polys.trim(out)


def char_label(key: FamilyKey, b: Bipartition):
    """Character-table label of a family member."""
    if key.weyl_type == "D":
        return (b.alpha, b.beta, b.split)
    return (b.alpha, b.beta)


def omega_matrix(weyl_type: str, rank: int, labels: list) -> polys.PolyMatrix:
    tab = table(weyl_type, rank)
    series = _class_series(weyl_type, rank)
    n = len(labels)
    entries = polys.mat_zero(n, n)
    for i in range(n):
        for j in range(i, n):
            e = omega_entry(tab, series, labels[i], labels[j])
            entries[i][j] = entries[j][i] = e
    return polys.PolyMatrix(list(labels), entries)


# ---------------------------------------------------------------- solve


@dataclass
class Solution:
    """Factorization of one family.

    ``order`` lists member indices small orbit first; ``blocks`` groups them
    by orbit.  ``P[i][j]`` is the graded multiplicity of member ``i`` in the
    homology attached to member ``j`` (non-zero only when ``j``'s orbit lies
    strictly below ``i``'s, or ``i == j``).
    """

    labels: list
    blocks: list[list[int]]
    strictly_below: object  # callable (i, j) -> bool: orbit of i < orbit of j
    omega: polys.PolyMatrix
    P: polys.PolyMatrix
    Lam: polys.PolyMatrix
    checks: dict = field(default_factory=dict)

    def mult(self, row: int, col: int) -> int:
        return polys.evaluate(self.P.entries[row][col], 1)


def solve(omega: polys.PolyMatrix, blocks: list[list[int]], strictly_below) -> Solution:
    """Block LDL^T factorization along ``blocks`` (listed small orbit first)."""
    n = len(omega.labels)
    P = polys.mat_zero(n, n)
    Lam = polys.mat_zero(n, n)
    for i in range(n):
        P[i][i] = polys.ONE
    om = omega.entries

    lam_blocks = []
    for bi, block in enumerate(blocks):
        # Lam_ii = Omega_ii - sum_j P_ij Lam_jj P_ij^T
        cur = [[om[r][c] for c in block] for r in block]
        for bj in range(bi):
            pj = [[P[r][c] for c in blocks[bj]] for r in block]
            term = polys.mat_mul(polys.mat_mul(pj, lam_blocks[bj]), polys.mat_transpose(pj))
            cur = polys.mat_sub(cur, term)
        lam_blocks.append(cur)
        for a, r in enumerate(block):
            for b, c in enumerate(block):
                Lam[r][c] = cur[a][b]
        # P_ai for every later block a
        for ba in range(bi + 1, len(blocks)):
            rows = blocks[ba]
            x = [[om[r][c] for c in block] for r in rows]
            for bj in range(bi):
                paj = [[P[r][c] for c in blocks[bj]] for r in rows]
                pij = [[P[r][c] for c in blocks[bj]] for r in block]
                term = polys.mat_mul(polys.mat_mul(paj, lam_blocks[bj]), polys.mat_transpose(pij))
                x = polys.mat_sub(x, term)
            try:
                y = polys.right_divide(x, cur)
            except polys.PolyError as exc:
                raise SolveError(f"block {bi}: {exc}") from exc
            for a, r in enumerate(rows):
                for b, c in enumerate(block):
                    P[r][c] = y[a][b]
    sol = Solution(list(omega.labels), blocks, strictly_below, omega,
                   polys.PolyMatrix(list(omega.labels), P), polys.PolyMatrix(list(omega.labels), Lam))
    sol.checks = certify(sol)
    return sol


def certify(sol: Solution) -> dict:
    """Exact checks of the factorization; every value must be True."""
    P, Lam, om = sol.P.entries, sol.Lam.entries, sol.omega.entries
    n = len(P)
    block_of = {i: b for b, blk in enumerate(sol.blocks) for i in blk}
    residual = polys.mat_sub(om, polys.mat_mul(polys.mat_mul(P, Lam), polys.mat_transpose(P)))
    unitriangular = all(P[i][i] == polys.ONE for i in range(n)) and all(
        not P[i][j] for i in range(n) for j in range(n)
        if i != j and not (sol.strictly_below(j, i) and block_of[i] != block_of[j]))
    lam_blocks = all(not Lam[i][j] for i in range(n) for j in range(n) if block_of[i] != block_of[j])
    integral = all(isinstance(c, int) for M in (P, Lam) for row in M for e in row for c in e)
    return {"residual_zero": all(not e for row in residual for e in row),
            "unitriangular": unitriangular,
            "lam_block_diagonal": lam_blocks,
            "integral": integral}


# ------------------------------------------------------------ families


def _orbit_key(m: Marked):
    tag = m.degenerate if isinstance(m, SoMarked) else None
    return (tuple(m.lam), tag or "")


@dataclass
class FamilySolve:
    """A solved family of a classical group, indexed by marked partitions."""

    key: FamilyKey
    members: list[Bipartition]
    orbits: list[Marked]
    solution: Solution

    def index_of(self, m: Marked) -> int:
        return self.orbits.index(m)

    def mult(self, m: Marked, other: Marked) -> int:
        """Multiplicity of the representation of ``other`` in the homology of ``m``."""
        return self.solution.mult(self.index_of(other), self.index_of(m))

    def graded(self, m: Marked, other: Marked) -> polys.Poly:
        return self.solution.P.entries[self.index_of(other)][self.index_of(m)]

    def constituents(self, m: Marked) -> dict[Marked, int]:
        j = self.index_of(m)
        out = {}
        for i, o in enumerate(self.orbits):
            v = self.solution.mult(i, j)
            if v:
                out[o] = v
        return out


def _strict_below(orbits):
    def below(i, j):
        a, b = orbits[i].lam, orbits[j].lam
        return a != b and dominance_leq(a, b)
    return below


@lru_cache(maxsize=None)
def solve_family(key: FamilyKey) -> FamilySolve:
    members = family_members(key)
    orbits = [gsc_inverse(key, b) for b in members]
    keys = sorted({_orbit_key(m) for m in orbits})
    blocks = [[i for i, m in enumerate(orbits) if _orbit_key(m) == k] for k in keys]
    labels = [char_label(key, b) for b in members]
    omega = omega_matrix(key.weyl_type, key.rank, labels)
    sol = solve(omega, blocks, _strict_below(orbits))
    return FamilySolve(key, members, orbits, sol)


@lru_cache(maxsize=None)
def solve_type_a(n: int) -> Solution:
    """Symmetric group ``S_n``: orbits of ``GL_n`` are partitions themselves."""
    lams = [Partition(p) for p in sorted(tuple(p) for p in partitions_of(n))]
    blocks = [[i] for i in range(len(lams))]
    omega = omega_matrix("A", n, lams)

    def below(i, j):
        return i != j and dominance_leq(lams[i], lams[j])
    return solve(omega, blocks, below)


def family_of(m: Marked) -> FamilySolve:
    key, _ = gsc_forward(m)
    return solve_family(key)


def mult(m: Marked, other: Marked) -> int:
    """Multiplicity (zero across different families)."""
    if m.kind != other.kind or m.size != other.size:
        raise ValueError("pairs must belong to the same group")
    key, _ = gsc_forward(m)
    key2, _ = gsc_forward(other)
    if key != key2:
        return 0
    return solve_family(key).mult(m, other)


def constituents(m: Marked) -> dict[Marked, int]:
    return family_of(m).constituents(m)


def all_families(kind: str, size: int) -> list[FamilySolve]:
    return [solve_family(k) for k in families(kind, size)]
