"""Maximal and minimal constituents, and the orbit of the dual of a tempered
representation.

``max_marked`` runs the recursive peeling algorithm on the parts of the
"signed" parity (odd parts for SO, even parts for Sp) and then adds the
remaining parts to the first output part.  ``min_marked`` is the sign-twisted
image of the maximum under the generalized Springer correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .orbits import (SO, SP, Marked, OrbitError, SoMarked, SpMarked,
                     positional_to_values)
from .partitions import Partition
from .symbols import gsc_forward, gsc_inverse, sign_twist

DEFAULT_TAIL_SIGN = 1


class ConventionError(RuntimeError):
    """The recursion produced data that no valid convention can produce."""


@dataclass(frozen=True)
class StepResult:
    """One peeling step: the first output part, its sign and what is left."""

    first_part: int
    first_sign: int
    remainder: tuple[int, ...]
    remainder_signs: tuple[int, ...]
    kept: tuple[int, ...] = field(default=())
    moved_same: tuple[int, ...] = field(default=())
    moved_other: tuple[int, ...] = field(default=())


def _alternating(i: int, sign: int) -> int:
    # 1-based position i: sign * (-1)^(i+1)
    return sign if i % 2 == 1 else -sign


def _sorted_with_signs(parts: list[int], signs: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    order = sorted(range(len(parts)), key=lambda j: -parts[j])
    return tuple(parts[j] for j in order), tuple(signs[j] for j in order)


def so_step(lam, signs) -> StepResult:
    """One step of the SO recursion on a partition with odd parts only.

    ``signs`` are positional (``signs[i-1]`` is the sign of the ``i``-th part).
    """
    lam = tuple(lam)
    signs = tuple(signs)
    if any(p % 2 == 0 for p in lam):
        raise OrbitError(f"so_step needs odd parts only, got {list(lam)}")
    if len(signs) != len(lam):
        raise OrbitError("one sign per part is required")
    t = len(lam)
    first = signs[0]
    kept = [1] + [i for i in range(2, t + 1) if signs[i - 1] == signs[i - 2]]
    rest = [i for i in range(1, t + 1) if i not in kept]
    same = [i for i in rest if _alternating(i, signs[i - 1]) == first]
    other = [i for i in rest if _alternating(i, signs[i - 1]) == -first]
    even_kept = len(kept) % 2 == 0
    first_part = sum(lam[i - 1] for i in kept) - 2 * len(other) - (1 if even_kept else 0)
    parts, new_signs = [], []
    for i in rest:
        if i in same:
            parts.append(lam[i - 1])
            new_signs.append(signs[i - 1])
        else:
            parts.append(lam[i - 1] + 2)
            new_signs.append(-signs[i - 1])
    if even_kept:
        parts.append(1)
        new_signs.append(first if len(rest) % 2 == 0 else -first)
    parts_sorted, signs_sorted = _sorted_with_signs(parts, new_signs)
    return StepResult(first_part, first, parts_sorted, signs_sorted,
                      tuple(kept), tuple(same), tuple(other))


def sp_step(lam, signs, tail_sign: int = DEFAULT_TAIL_SIGN) -> StepResult:
    """One step of the Sp recursion on a partition with even parts only.

    The signs are extended by ``tail_sign`` to the infinitely many zero parts
    following ``lam``; only finitely many of those positions matter.
    """
    lam = tuple(lam)
    signs = tuple(signs)
    if any(p % 2 for p in lam):
        raise OrbitError(f"sp_step needs even parts only, got {list(lam)}")
    if len(signs) != len(lam):
        raise OrbitError("one sign per part is required")
    t = len(lam)
    # positions past t+1 repeat the tail sign, so they are all kept
    width = t + 1
    ext_lam = lam + (0,)
    ext = signs + (tail_sign,)
    first = ext[0]
    kept = [1] + [i for i in range(2, width + 1) if ext[i - 1] == ext[i - 2]]
    rest = [i for i in range(1, width + 1) if i not in kept]
    same = [i for i in rest if _alternating(i, ext[i - 1]) == first]
    other = [i for i in rest if _alternating(i, ext[i - 1]) == -first]
    first_part = sum(ext_lam[i - 1] for i in kept) - 2 * len(other)
    parts, new_signs = [], []
    for i in rest:
        value = ext_lam[i - 1] if i in same else ext_lam[i - 1] + 2
        sign = ext[i - 1] if i in same else -ext[i - 1]
        if value > 0:
            parts.append(value)
            new_signs.append(sign)
    parts_sorted, signs_sorted = _sorted_with_signs(parts, new_signs)
    try:
        positional_to_values(Partition(parts_sorted), list(signs_sorted), 0)
    except OrbitError as exc:
        raise ConventionError(f"sp_step on {list(lam)}: {exc}") from exc
    return StepResult(first_part, first, parts_sorted, signs_sorted,
                      tuple(kept), tuple(same), tuple(other))


def _check_progress(step: StepResult, total: int):
    if total > 0 and step.first_part < 1:
        raise ConventionError(f"non-positive first part {step.first_part} for total {total}")
    if step.first_part > total:
        raise ConventionError(f"first part {step.first_part} exceeds total {total}")


def so_recursion(lam, signs) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Positional ``(parts, signs)`` of the maximum for odd parts only."""
    lam, signs = tuple(lam), tuple(signs)
    parts, out_signs = [], []
    while sum(lam) > 1:
        step = so_step(lam, signs)
        _check_progress(step, sum(lam))
        parts.append(step.first_part)
        out_signs.append(step.first_sign)
        lam, signs = step.remainder, step.remainder_signs
    parts += list(lam)
    out_signs += list(signs)
    _check_decreasing(parts)
    return tuple(parts), tuple(out_signs)


def sp_recursion(lam, signs, tail_sign: int = DEFAULT_TAIL_SIGN) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Positional ``(parts, signs)`` of the maximum for even parts only."""
    lam, signs = tuple(lam), tuple(signs)
    parts, out_signs = [], []
    while sum(lam) > 0:
        step = sp_step(lam, signs, tail_sign)
        _check_progress(step, sum(lam))
        parts.append(step.first_part)
        out_signs.append(step.first_sign)
        lam, signs = step.remainder, step.remainder_signs
    _check_decreasing(parts)
    return tuple(parts), tuple(out_signs)


def _check_decreasing(parts):
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ConventionError(f"recursion produced increasing parts {parts}")


def _split_parity(m: Marked, parity: int):
    lam = m.lam
    eps = m.eps
    same = [p for p in lam if p % 2 == parity]
    other = [p for p in lam if p % 2 != parity]
    return same, [eps[p] for p in same], sum(other)


def max_marked(m: Marked, tail_sign: int = DEFAULT_TAIL_SIGN) -> Marked:
    """The marked partition of the unique closure-maximal constituent."""
    if m.kind == SO:
        same, signs, extra = _split_parity(m, 1)
        if not same:
            if m.size == 0:
                return SoMarked.make(())
            # only even parts: (N-1, 1) carrying the trivial class
            return SoMarked.make((m.size - 1, 1), {m.size - 1: 1, 1: 1} if m.size > 2 else {1: 1})
        parts, out_signs = so_recursion(same, signs)
        parts = (parts[0] + extra,) + parts[1:]
        eps = _values(parts, out_signs, 1)
        return SoMarked.make(parts, eps)
    same, signs, extra = _split_parity(m, 0)
    parts, out_signs = sp_recursion(same, signs, tail_sign)
    if not parts:
        if extra == 0:
            return SpMarked.make(())
        parts, out_signs = (0,), (tail_sign,)
    parts = (parts[0] + extra,) + parts[1:]
    return SpMarked.make(parts, _values(parts, out_signs, 0))


def _values(parts, signs, parity) -> dict[int, int]:
    try:
        return positional_to_values(Partition(parts), list(signs), parity)
    except OrbitError as exc:
        raise ConventionError(str(exc)) from exc


def min_marked(m: Marked, tail_sign: int = DEFAULT_TAIL_SIGN) -> Marked:
    """Sign-twisted image of :func:`max_marked` under the correspondence."""
    top = max_marked(m, tail_sign)
    key, bip = gsc_forward(top)
    return gsc_inverse(key, sign_twist(key, bip))


@dataclass(frozen=True)
class DualResult:
    marked: Marked
    defect: int
    degenerate_resolved: bool

    def to_json(self) -> dict:
        data = self.marked.to_json()
        data["defect"] = self.defect
        if self.marked.kind == SO and self.marked.degenerate is not None:
            data["degenerate_resolved"] = self.degenerate_resolved
        return data


def im_dual_tempered(m: Marked, tail_sign: int = DEFAULT_TAIL_SIGN) -> DualResult:
    """Orbit data of the dual of the tempered module attached to ``m``.

    Only the orbit is determined for degenerate SO outputs, so the tag is
    reported as unresolved there.
    """
    low = min_marked(m, tail_sign)
    key, _ = gsc_forward(low)
    resolved = not (low.kind == SO and low.degenerate is not None)
    return DualResult(low, key.k, resolved)
