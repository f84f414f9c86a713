"""Kostka-Foulkes polynomials by the charge statistic on semistandard tableaux."""

from __future__ import annotations

from functools import lru_cache

from ..partitions import Partition
from . import polys


def semistandard_tableaux(shape: Partition, content: Partition):
    """All SSYT of ``shape`` and ``content``, as lists of rows."""
    shape, content = tuple(shape), tuple(content)
    out = []

    def place(letter, filled, rows):
        if letter > len(content):
            if filled == shape:
                out.append([list(r) for r in rows])
            return
        count = content[letter - 1]
        # add a horizontal strip of `count` copies of `letter`
        cur = list(filled) + [0] * (len(shape) - len(filled))

        def grow(i, left, new):
            if i == len(shape):
                if left == 0:
                    new_rows = [rows[j] + [letter] * (new[j] - cur[j]) for j in range(len(shape))]
                    place(letter + 1, tuple(new), new_rows)
                return
            upper = cur[i - 1] if i > 0 else shape[0]
            cap = min(left, shape[i] - cur[i], upper - cur[i])
            for extra in range(cap + 1):
                grow(i + 1, left - extra, new + [cur[i] + extra])

        grow(0, count, [])

    place(1, tuple([0] * len(shape)), [[] for _ in shape])
    return out


def reading_word(tab) -> list[int]:
    """Rows from the bottom one up, each read left to right."""
    return [x for row in reversed(tab) for x in row]


def _standard_charge(letters: list[tuple[int, int]]) -> int:
    # letters: (position, value) for a permutation of 1..r
    pos = {v: p for p, v in letters}
    index, total = 0, 0
    for v in range(2, len(letters) + 1):
        if pos[v] > pos[v - 1]:
            index += 1
        total += index
    return total


def charge(word: list[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content."""
    remaining = list(enumerate(word))
    total = 0
    while remaining:
        top = max(v for _, v in remaining)
        chosen = []
        # scan leftwards cyclically from the right end for 1, 2, ...
        start = len(remaining)
        for value in range(1, top + 1):
            hit = None
            for step in range(1, len(remaining) + 1):
                k = (start - step) % len(remaining)
                if remaining[k][1] == value:
                    hit = k
                    break
            if hit is None:
                break
            chosen.append(hit)
            start = hit
        sub = [remaining[k] for k in chosen]
        total += _standard_charge([(p, v) for p, v in sub])
        drop = set(chosen)
        remaining = [x for k, x in enumerate(remaining) if k not in drop]
    return total


@lru_cache(maxsize=None)
def kostka_foulkes(shape: Partition, content: Partition) -> polys.Poly:
    coeffs: dict[int, int] = {}
    for tab in semistandard_tableaux(shape, content):
        c = charge(reading_word(tab))
        coeffs[c] = coeffs.get(c, 0) + 1
    if not coeffs:
        return polys.ZERO
    return polys.trim([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])
