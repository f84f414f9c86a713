"""Symbols of marked partitions and bipartitions, and the generalized
Springer correspondence between them.

A marked partition goes to a pair of infinite decreasing sequences
(a :class:`Symbol`).  Symbols of bipartitions are arithmetic progressions of
step 2 with a partition added on top; matching the two recovers the family
(defect ``k``) and the bipartition labelling a representation of the
relevant relative Weyl group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orbits import (SO, SP, Marked, OrbitError, SoMarked, SpMarked, delta,
                     is_degenerate, positional_to_values)
from .partitions import (Partition, SequenceError, TailSeq, add, affine,
                         alternate, arithmetic, bipartitions_of,
                         minus_arithmetic, periodic_threshold, select_parity,
                         transpose, union)


class SymbolError(ValueError):
    """Inconsistent symbol data (wrong family, size or defect)."""


# ---------------------------------------------------------------- types


def _row_key(seq: TailSeq, length: int) -> tuple[int, ...]:
    return tuple(seq.head(length))


@dataclass(frozen=True)
class Symbol:
    """Pair of rows ``(A, B)`` with defect ``k``.

    For SO and defect zero the pair is unordered; it is then stored with the
    lexicographically larger row first so that ``==`` ignores the order.
    Sp rows always have different tail offsets, so their order carries no
    extra information and is kept as computed.
    """

    A: TailSeq
    B: TailSeq
    defect: int
    kind: str = SO

    def __post_init__(self):
        if self.defect < 0:
            raise SymbolError("defect must be non-negative")
        if not self.ordered:
            n = 2 + 2 * max(len(self.A.prefix) + len(self.A.tail), len(self.B.prefix) + len(self.B.tail))
            if _row_key(self.A, n) < _row_key(self.B, n):
                a, b = self.B, self.A
                object.__setattr__(self, "A", a)
                object.__setattr__(self, "B", b)

    @property
    def ordered(self) -> bool:
        return self.defect > 0 or self.kind == SP

    def rows_union(self) -> TailSeq:
        return union(self.A, self.B)

    def to_json(self) -> dict:
        return {"group": self.kind, "A": self.A.to_json(), "B": self.B.to_json(),
                "defect": self.defect, "ordered": self.ordered}


@dataclass(frozen=True)
class Bipartition:
    """``(alpha, beta)``; ``split`` (1 or 2) tells apart the two
    representations attached to ``alpha == beta`` in an unordered family."""

    alpha: Partition
    beta: Partition
    split: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", Partition.of(self.alpha))
        object.__setattr__(self, "beta", Partition.of(self.beta))
        if self.split is not None and (self.split not in (1, 2) or self.alpha != self.beta):
            raise SymbolError("split index needs alpha == beta and a value in {1, 2}")

    @property
    def size(self) -> int:
        return self.alpha.size + self.beta.size

    def swapped(self) -> "Bipartition":
        return Bipartition(self.beta, self.alpha, self.split)

    def to_json(self) -> dict:
        data = {"alpha": list(self.alpha), "beta": list(self.beta)}
        if self.split is not None:
            data["split"] = self.split
        return data

    def __str__(self) -> str:
        core = f"({list(self.alpha)},{list(self.beta)})"
        return core + (f"_{self.split}" if self.split else "")


@dataclass(frozen=True)
class FamilyKey:
    """Group kind, total size (``2n`` for Sp, ``N`` for SO) and defect."""

    kind: str
    size: int
    k: int

    def __post_init__(self):
        if self.kind == SP:
            if self.size % 2 or self.k < 0 or self.k * (self.k + 1) > self.size:
                raise SymbolError(f"no Sp family with 2n={self.size}, k={self.k}")
        elif self.kind == SO:
            if self.k < 0 or (self.size - self.k) % 2 or self.k * self.k > self.size:
                raise SymbolError(f"no SO family with N={self.size}, k={self.k}")
        else:
            raise SymbolError(f"unknown group kind {self.kind!r}")

    @property
    def rank(self) -> int:
        """Size ``m`` of the bipartitions in the family."""
        if self.kind == SP:
            return self.size // 2 - self.k * (self.k + 1) // 2
        return (self.size - self.k * self.k) // 2

    @property
    def weyl_type(self) -> str:
        """Type of the relative Weyl group: ``"C"``, ``"B"`` or ``"D"``."""
        if self.kind == SP:
            return "C"
        return "D" if self.k == 0 else "B"

    @property
    def unordered(self) -> bool:
        return self.kind == SO and self.k == 0

    def to_json(self) -> dict:
        return {"group": self.kind, "size": self.size, "k": self.k,
                "rank": self.rank, "weyl_type": self.weyl_type}


def families(kind: str, size: int) -> list[FamilyKey]:
    out = []
    k = 0 if kind == SP else size % 2
    while True:
        bound = k * (k + 1) if kind == SP else k * k
        if bound > size:
            return out
        out.append(FamilyKey(kind, size, k))
        k += 1 if kind == SP else 2


def family_members(key: FamilyKey) -> list[Bipartition]:
    """All bipartitions indexing representations of the family's Weyl group."""
    if not key.unordered:
        return [Bipartition(a, b) for a, b in bipartitions_of(key.rank)]
    out = []
    for a, b in bipartitions_of(key.rank):
        if a == b and key.rank == 0:
            out.append(Bipartition(a, b))
        elif a == b:
            out += [Bipartition(a, b, 1), Bipartition(a, b, 2)]
        elif a > b:
            out.append(Bipartition(a, b))
    return out


def canonical_bipartition(key: FamilyKey, b: Bipartition) -> Bipartition:
    """Unordered families keep the larger partition first."""
    if key.unordered and b.alpha < b.beta:
        return b.swapped()
    return b


# ------------------------------------------------------ marked partition side


def _sharp_rows(kind: str, lam: Partition) -> tuple[TailSeq, TailSeq]:
    """``(A#, B#)`` for a partition (before any interval swap)."""
    if kind == SP:
        shifted = add(lam, arithmetic(-1, 1))
        evens = select_parity(shifted, 0)
        odds = select_parity(shifted, 1)
        z = affine(evens, 1, 0, 2)
        z_odd = affine(odds, 1, -1, 2)
        return add(z_odd, arithmetic(1, 1)), add(z, arithmetic(0, 1))
    shifted = add(lam, arithmetic(0, 1))
    z = affine(select_parity(shifted, 0), 1, 0, 2)
    z_odd = affine(select_parity(shifted, 1), 1, 1, 2)
    return add(z_odd, arithmetic(0, 1)), add(z, arithmetic(0, 1))


def _intervals(a_sharp: TailSeq, b_sharp: TailSeq) -> list[frozenset[int]]:
    """Maximal finite runs of consecutive integers in ``A# xor B#``, increasing."""
    low = periodic_threshold(a_sharp, b_sharp) - 2 * (a_sharp.tail_step + b_sharp.tail_step) - 2
    sa = set(a_sharp.values_at_least(low))
    sb = set(b_sharp.values_at_least(low))
    diff = sorted(sa ^ sb)
    runs: list[list[int]] = []
    for v in diff:
        if runs and runs[-1][-1] == v - 1:
            runs[-1].append(v)
        else:
            runs.append([v])
    # a run reaching the window's bottom continues forever
    runs = [r for r in runs if r[0] > low + 1]
    return [frozenset(r) for r in runs]


def _swap(a_sharp: TailSeq, b_sharp: TailSeq, swapped: list[frozenset[int]]):
    """Exchange the entries of ``A#`` and ``B#`` lying in the given intervals."""
    if not swapped:
        return a_sharp, b_sharp
    region = frozenset().union(*swapped)
    cut = min(min(region), periodic_threshold(a_sharp, b_sharp)) - 1
    a_hi, b_hi = a_sharp.values_at_least(cut + 1), b_sharp.values_at_least(cut + 1)
    new_a = [v for v in a_hi if v not in region] + [v for v in b_hi if v in region]
    new_b = [v for v in b_hi if v not in region] + [v for v in a_hi if v in region]

    def rebuild(hi, src, idx):
        tail = [src[idx + i] for i in range(len(src.tail))]
        return TailSeq(sorted(hi, reverse=True), tail=tail, tail_step=src.tail_step)

    return rebuild(new_a, a_sharp, len(a_hi)), rebuild(new_b, b_sharp, len(b_hi))


def _so_counts(signs: list[int]) -> int:
    """``M = |J^1| - |J^-1|`` with ``J^u = {i : eps(i) (-1)^(i+1) = u}``."""
    return sum(s * (1 if i % 2 == 0 else -1) for i, s in enumerate(signs))


def marked_symbol(m: Marked) -> Symbol:
    """Symbol of a marked partition (the defect is read off the row tails)."""
    lam = m.lam
    a_sharp, b_sharp = _sharp_rows(m.kind, lam)
    runs = _intervals(a_sharp, b_sharp)
    dom = sorted(delta(m.kind, lam))
    if len(runs) != len(dom):
        raise SymbolError(f"{len(runs)} intervals for {len(dom)} signed parts of {list(lam)}")
    eps = m.eps
    if m.kind == SP:
        flip = -1
    else:
        signs = [eps[p] for p in lam if p % 2 == 1]
        flip = -(1 if _so_counts(signs) >= 0 else -1)
    swapped = [run for run, value in zip(runs, dom) if eps[value] == flip]
    a, b = _swap(a_sharp, b_sharp, swapped)
    k = _defect(m.kind, a, b)
    return Symbol(a, b, k, m.kind)


def _offset(row: TailSeq) -> int:
    """``c`` such that ``row[i] = c - 2i`` for all large ``i``."""
    if row.tail_step != 2 * len(row.tail):
        raise SymbolError(f"row {row} does not descend by 2 per term")
    i = len(row.prefix)
    offsets = {row[i + j] + 2 * (i + j) for j in range(len(row.tail))}
    if len(offsets) != 1:
        raise SymbolError(f"row {row} is not eventually arithmetic")
    return offsets.pop()


def _defect(kind: str, a: TailSeq, b: TailSeq) -> int:
    oa, ob = _offset(a), _offset(b)
    if kind == SP:
        if oa >= 0 and oa % 2 == 0 and ob == -oa - 1:
            return oa
        if ob >= 0 and ob % 2 == 1 and oa == -ob - 1:
            return ob
    elif oa >= 0 and ob == -oa:
        return oa
    elif oa == 0 == ob:
        return 0
    raise SymbolError(f"row offsets ({oa}, {ob}) match no family of {kind}")


# ------------------------------------------------------------ bipartition side


def bip_symbol(key: FamilyKey, b: Bipartition) -> Symbol:
    if b.size != key.rank:
        raise SymbolError(f"bipartition of {b.size} does not fit family of rank {key.rank}")
    k = key.k
    if key.kind == SP:
        if k % 2 == 0:
            a_row, b_row = add(b.alpha, arithmetic(k, 2)), add(b.beta, arithmetic(-k - 1, 2))
        else:
            a_row, b_row = add(b.beta, arithmetic(-k - 1, 2)), add(b.alpha, arithmetic(k, 2))
    else:
        a_row, b_row = add(b.alpha, arithmetic(k, 2)), add(b.beta, arithmetic(-k, 2))
    return Symbol(a_row, b_row, k, key.kind)


def _peel(row: TailSeq, start: int) -> Partition:
    rest = minus_arithmetic(row, start, 2)
    if not isinstance(rest, Partition):
        raise SymbolError(f"row {row} is not a partition above [{start},-oo[_2")
    return rest


def _split_index(tag: str | None) -> int | None:
    return None if tag is None else (1 if tag == "+" else 2)


def gsc_forward(m: Marked) -> tuple[FamilyKey, Bipartition]:
    """Generalized Springer correspondence: marked partition to (family, bipartition)."""
    sym = marked_symbol(m)
    k = sym.defect
    key = FamilyKey(m.kind, m.size, k)
    if m.kind == SP:
        if k % 2 == 0:
            alpha, beta = _peel(sym.A, k), _peel(sym.B, -k - 1)
        else:
            alpha, beta = _peel(sym.B, k), _peel(sym.A, -k - 1)
        return key, Bipartition(alpha, beta)
    alpha, beta = _peel(sym.A, k), _peel(sym.B, -k)
    split = None
    if k == 0 and alpha == beta and key.rank > 0:
        split = _split_index(m.degenerate) if isinstance(m, SoMarked) else None
        if split is None:
            raise SymbolError(f"{m} lands on alpha == beta but carries no tag")
    return key, canonical_bipartition(key, Bipartition(alpha, beta, split))


def _recover_partition(kind: str, rows_union: TailSeq) -> tuple[Partition, TailSeq, TailSeq]:
    """Invert the passage ``lam -> (A#, B#)`` from the union of the rows."""
    a_sharp, b_sharp = alternate(rows_union, 0), alternate(rows_union, 1)
    if kind == SP:
        z_odd = minus_arithmetic(a_sharp, 1, 1)
        z = minus_arithmetic(b_sharp, 0, 1)
        odd_terms, offset = affine(z_odd, 2, 1), -1
    else:
        z_odd = minus_arithmetic(a_sharp, 0, 1)
        z = minus_arithmetic(b_sharp, 0, 1)
        odd_terms, offset = affine(z_odd, 2, -1), 0
    shifted = union(affine(z, 2, 0), odd_terms)
    lam = minus_arithmetic(shifted, offset, 1)
    if not isinstance(lam, Partition):
        raise SymbolError("rows do not come from a partition")
    return lam, a_sharp, b_sharp


def _signs_from_swaps(runs, target_a: TailSeq, a_sharp: TailSeq) -> list[bool] | None:
    low = min(min(r) for r in runs) - 1 if runs else 0
    target = set(target_a.values_at_least(low))
    sharp = set(a_sharp.values_at_least(low))
    out = []
    for run in runs:
        if run & sharp == run & target:
            out.append(False)
        elif run - sharp == run & target:
            out.append(True)
        else:
            return None
    return out


def gsc_inverse(key: FamilyKey, b: Bipartition) -> Marked:
    """The unique marked partition whose image under :func:`gsc_forward` is ``(key, b)``."""
    b = canonical_bipartition(key, b)
    if key.unordered and b.alpha == b.beta and b.split is None and key.rank > 0:
        raise SymbolError("alpha == beta in an unordered family needs a split index")
    sym = bip_symbol(key, b)
    lam, a_sharp, b_sharp = _recover_partition(key.kind, sym.rows_union())
    runs = _intervals(a_sharp, b_sharp)
    dom = sorted(delta(key.kind, lam))
    if len(runs) != len(dom):
        raise SymbolError("interval count does not match the signed parts")
    candidates = []
    orders = [(sym.A, sym.B)] + ([(sym.B, sym.A)] if key.unordered else [])
    for row_a, _ in orders:
        swaps = _signs_from_swaps(runs, row_a, a_sharp)
        if swaps is None:
            continue
        if key.kind == SP:
            candidates.append(SpMarked.make(lam, {v: -1 if s else 1 for v, s in zip(dom, swaps)}))
            continue
        for w in (1, -1):
            eps = {v: -w if s else w for v, s in zip(dom, swaps)}
            signs = [eps[p] for p in lam if p % 2 == 1]
            if (1 if _so_counts(signs) >= 0 else -1) == w:
                tag = None
                if is_degenerate(lam):
                    tag = "+" if b.split == 1 else "-"
                candidates.append(SoMarked.make(lam, eps, tag))
    for cand in candidates:
        if gsc_forward(cand) == (key, b):
            return cand
    raise SymbolError(f"no marked partition found for {b} in family {key}")


# ---------------------------------------------------------------- misc


def similar(s: Symbol, t: Symbol) -> bool:
    return s.rows_union() == t.rows_union()


def sign_twist(key: FamilyKey, b: Bipartition) -> Bipartition:
    """Bipartition of the representation tensored with the sign character."""
    out = Bipartition(transpose(b.beta), transpose(b.alpha), b.split)
    return canonical_bipartition(key, out)


def to_classical_symbol(sym: Symbol) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Finite two-row form with increasing rows, longer row first.

    Both rows are cut at the lowest value where one of them enters its tail
    and shifted so that the cut value becomes 0.
    """
    cut = min(sym.A.tail_start, sym.B.tail_start)
    rows = [tuple(sorted(v - cut for v in row.values_at_least(cut))) for row in (sym.A, sym.B)]
    rows.sort(key=len, reverse=True)
    return rows[0], rows[1]


__all__ = [
    "Bipartition", "FamilyKey", "Symbol", "SymbolError", "bip_symbol",
    "canonical_bipartition", "families", "family_members", "gsc_forward",
    "gsc_inverse", "marked_symbol", "sign_twist", "similar", "to_classical_symbol",
    "positional_to_values", "OrbitError", "SequenceError",
]
