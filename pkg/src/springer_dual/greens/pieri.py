"""Induction from ``W_{n'} x S_a`` (trivial on ``S_a``) to ``W_{n'+a}`` for
types B/C/D, by adding horizontal strips to the two partitions."""

from __future__ import annotations

from typing import Iterable

from ..partitions import Partition
from ..symbols import Bipartition


def horizontal_strips(lam: Partition, size: int) -> list[Partition]:
    """Partitions obtained from ``lam`` by adding a horizontal strip of ``size`` boxes."""
    parts = list(lam) + [0]
    out = []

    def grow(i, left, acc):
        if i == len(parts):
            if left == 0:
                out.append(Partition.of(acc))
            return
        cap = left if i == 0 else min(left, parts[i - 1] - parts[i])
        for extra in range(cap + 1):
            grow(i + 1, left - extra, acc + [parts[i] + extra])

    grow(0, size, [])
    return out


def pieri_induce(base: Iterable[Bipartition], a: int) -> set[tuple[Partition, Partition]]:
    """All ``(gamma, delta)`` with ``gamma / alpha`` and ``delta / beta`` horizontal
    strips of total size ``a`` for some ``(alpha, beta)`` in ``base``.

    Split indices are dropped: the result is a set of plain pairs.
    """
    out = set()
    for b in base:
        for x in range(a + 1):
            for gamma in horizontal_strips(b.alpha, x):
                for delta in horizontal_strips(b.beta, a - x):
                    out.add((gamma, delta))
    return out


def unordered(pairs: Iterable[tuple[Partition, Partition]]) -> set[frozenset]:
    """Forget the order of each pair (type D comparison)."""
    return {frozenset((a, b)) for a, b in pairs}
