"""Partitions and eventually periodic decreasing integer sequences.

Two value types live here:

* :class:`Partition` -- a finite weakly decreasing tuple of positive integers.
  Zero parts are never stored; code that needs the infinite zero tail pads
  explicitly.
* :class:`TailSeq` -- an infinite weakly decreasing integer sequence made of a
  finite prefix followed by a periodic tail: one period ``tail`` is repeated,
  each repetition shifted down by ``tail_step``.  ``[a,-oo[_s`` is the special
  case ``tail=(a,)``, ``tail_step=s``.  Unions of such progressions (symbol
  rows, Lambda-sequences) stay inside the type.

All values are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Union


class SequenceError(ValueError):
    """Raised for malformed sequences or incompatible tails."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise SequenceError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise SequenceError(f"partition must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Sort ``parts`` decreasingly and drop zeros."""
        return cls(sorted((p for p in parts if p), reverse=True))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    @property
    def t(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """0-based access with the implicit zero tail."""
        return self[i] if i < len(self) else 0

    def to_json(self) -> list[int]:
        return list(self)


@dataclass(frozen=True, init=False)
class TailSeq:
    """Infinite decreasing integer sequence ``prefix + periodic tail``.

    ``tail`` holds one period of the tail and ``tail_step`` the amount each
    repetition is shifted down.  Instances are kept in canonical form
    (minimal period, maximal absorption of the prefix into the tail) so that
    ``==`` is equality of the represented sequences.
    """

    prefix: tuple[int, ...]
    tail: tuple[int, ...]
    tail_step: int

    def __init__(self, prefix: Sequence[int] = (), tail_start: int | None = None,
                 tail_step: int = 1, tail: Sequence[int] | None = None):
        if tail is None:
            if tail_start is None:
                raise SequenceError("TailSeq needs tail_start or tail")
            tail = (tail_start,)
        prefix, tail, step = _canonical(tuple(map(int, prefix)), tuple(map(int, tail)), int(tail_step))
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "tail_step", step)

    @property
    def tail_start(self) -> int:
        return self.tail[0]

    @property
    def period(self) -> int:
        return len(self.tail)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        if i < len(self.prefix):
            return self.prefix[i]
        q, r = divmod(i - len(self.prefix), len(self.tail))
        return self.tail[r] - q * self.tail_step

    def head(self, n: int) -> list[int]:
        return [self[i] for i in range(n)]

    def values_at_least(self, low: int) -> list[int]:
        """All terms ``>= low`` (with multiplicity), in order."""
        out = []
        i = 0
        while True:
            v = self[i]
            if v < low:
                return out
            out.append(v)
            i += 1

    def __repr__(self) -> str:
        shown = ", ".join(map(str, self.head(len(self.prefix) + 2 * len(self.tail) + 1)))
        return f"TailSeq({shown}, ...)"

    def to_json(self) -> dict:
        data = {"prefix": list(self.prefix), "tail_start": self.tail_start,
                "tail_step": self.tail_step}
        if len(self.tail) > 1:
            data["tail"] = list(self.tail)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "TailSeq":
        return cls(data.get("prefix", ()), data.get("tail_start"), data["tail_step"],
                   tail=data.get("tail"))

    def with_period(self, period: int) -> tuple[tuple[int, ...], tuple[int, ...], int]:
        """Same sequence written with a tail of ``period`` terms (a multiple of the
        canonical period).  Returns ``(prefix, tail, step)``, not canonical."""
        if period % len(self.tail):
            raise SequenceError("period must be a multiple of the canonical period")
        reps = period // len(self.tail)
        tail = tuple(self[len(self.prefix) + i] for i in range(period))
        return self.prefix, tail, self.tail_step * reps


SeqLike = Union[Partition, TailSeq]


def _canonical(prefix, tail, step):
    if not tail:
        raise SequenceError("empty tail period")
    if step <= 0:
        raise SequenceError("tail_step must be positive")
    seq = list(prefix) + list(tail) + [tail[0] - step]
    for a, b in zip(seq, seq[1:]):
        if a < b:
            raise SequenceError(f"sequence is not weakly decreasing: {seq}")
    # minimal period
    p = len(tail)
    for q in range(1, p + 1):
        if p % q or (step * q) % p:
            continue
        d = step * q // p
        if all(tail[i + q] == tail[i] - d for i in range(p - q)):
            tail, step = tail[:q], d
            break
    # absorb the prefix into the tail
    prefix = list(prefix)
    while prefix and prefix[-1] == tail[-1] + step:
        tail = (prefix.pop(),) + tail[:-1]
    return tuple(prefix), tuple(tail), step


class _Padded:
    """A partition viewed as an infinite sequence with zero tail (step 0)."""

    def __init__(self, p: Partition):
        self.p = p
        self.prefix = tuple(p)
        self.tail = (0,)
        self.tail_step = 0

    def __getitem__(self, i):
        return self.p.part(i)


def _density_params(seqs):
    """Common (prefix length, period) for termwise operations."""
    length = max(len(s.prefix) for s in seqs)
    period = reduce(lambda a, b: a * b // gcd(a, b), (len(s.tail) for s in seqs), 1)
    return length, period


# ---------------------------------------------------------------- operations


def arithmetic(a: int, s: int) -> TailSeq:
    """The sequence ``(a, a-s, a-2s, ...)``."""
    if s < 1:
        raise SequenceError("step must be positive")
    return TailSeq((), a, s)


def mult(seq: SeqLike, r: int) -> int:
    """Number of indices ``i`` with ``seq[i] == r``."""
    if isinstance(seq, Partition):
        return sum(1 for p in seq if p == r)
    count = sum(1 for p in seq.prefix if p == r)
    # each tail entry b contributes the progression b, b - step, b - 2 step, ...
    for b in seq.tail:
        if r <= b and (b - r) % seq.tail_step == 0:
            count += 1
    return count


def partial_sum(seq: SeqLike, c: int) -> int:
    """``S_c``: sum of the first ``c`` terms (zero padded for partitions)."""
    if c < 1:
        raise SequenceError("c must be >= 1")
    if isinstance(seq, Partition):
        return sum(seq[:c])
    return sum(seq[i] for i in range(c))


def add(x: SeqLike, y: SeqLike) -> SeqLike:
    """Termwise sum."""
    if isinstance(x, Partition) and isinstance(y, Partition):
        n = max(len(x), len(y))
        return Partition(x.part(i) + y.part(i) for i in range(n))
    sx = x if isinstance(x, TailSeq) else _Padded(x)
    sy = y if isinstance(y, TailSeq) else _Padded(y)
    length, period = _density_params([sx, sy])
    prefix = [sx[i] + sy[i] for i in range(length)]
    tail = [sx[length + i] + sy[length + i] for i in range(period)]
    step = sum(s.tail_step * period // len(s.tail) for s in (sx, sy))
    return TailSeq(prefix, tail=tail, tail_step=step)


def sub(x: TailSeq, y: TailSeq) -> Partition:
    """Termwise difference ``x - y`` when it is a partition (eventually zero).

    Used to peel an arithmetic tail off a symbol row.
    """
    length, period = _density_params([x, y])
    diffs = [x[i] - y[i] for i in range(length + 2 * period)]
    if any(diffs[length + i] for i in range(2 * period)):
        raise SequenceError("difference does not have a zero tail")
    parts = diffs[:length]
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition(parts)


def union(x: SeqLike, y: SeqLike) -> SeqLike:
    """Multiset union, sorted decreasingly."""
    if isinstance(x, Partition) and isinstance(y, Partition):
        return Partition(sorted(x + y, reverse=True))
    if isinstance(x, Partition) or isinstance(y, Partition):
        raise SequenceError("cannot union a partition with an infinite sequence")
    drop = x.tail_step * y.tail_step // gcd(x.tail_step, y.tail_step)
    threshold = periodic_threshold(x, y)
    vals = sorted(x.values_at_least(threshold - drop + 1)
                  + y.values_at_least(threshold - drop + 1), reverse=True)
    prefix = [v for v in vals if v > threshold]
    tail = [v for v in vals if v <= threshold]
    return TailSeq(prefix, tail=tail, tail_step=drop)


def periodic_threshold(*seqs: TailSeq) -> int:
    """A value ``T`` below which every sequence is purely periodic by value.

    Every term ``<= T`` is a tail term, and the multiset of terms in
    ``(T - d, T]`` shifted down by any common multiple ``d`` of the steps
    is the multiset of terms in the next window.
    """
    bound = min(min(s.tail) for s in seqs)
    prefixes = [p for s in seqs for p in s.prefix]
    if prefixes:
        bound = min(bound, min(prefixes) - 1)
    return bound


def lambda_seq(a: int, b: int, s: int, mu: Partition, nu: Partition) -> TailSeq:
    """``(mu + [a,-oo[_s) u (nu + [b,-oo[_s)``."""
    return union(add(mu, arithmetic(a, s)), add(nu, arithmetic(b, s)))


def transpose(lam: Partition) -> Partition:
    """Conjugate partition."""
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def _densities(x: TailSeq):
    # terms per unit of descent, as a fraction (period, step)
    return len(x.tail), x.tail_step


def dominance_leq(x: SeqLike, y: SeqLike) -> bool:
    """True iff ``S_c(x) <= S_c(y)`` for every ``c >= 1``."""
    if isinstance(x, Partition) and isinstance(y, Partition):
        n = max(len(x), len(y))
        sx = sy = 0
        for i in range(n):
            sx += x.part(i)
            sy += y.part(i)
            if sx > sy:
                return False
        return True
    if isinstance(x, Partition) or isinstance(y, Partition):
        raise SequenceError("cannot compare a partition with an infinite sequence")
    px, dx = _densities(x)
    py, dy = _densities(y)
    length, period = _density_params([x, y])
    # compare descent rates: x descends dx per px terms
    rate = dx * py - dy * px  # > 0: x falls faster, y eventually dominates
    if rate < 0:
        # y falls faster: S_c(y) - S_c(x) -> -infinity
        return False
    if rate == 0:
        horizon = length + 2 * period
        total = 0
        for i in range(horizon):
            total += y[i] - x[i]
            if total < 0:
                return False
        per_period = sum(y[length + i] - x[length + i] for i in range(period))
        return per_period >= 0
    # y[i] - x[i] grows without bound; once it is non-negative it stays so
    total = 0
    i = 0
    while True:
        diff = y[i] - x[i]
        total += diff
        if total < 0:
            return False
        if i >= length and diff >= 0 and all(
            y[i + j] - x[i + j] >= 0 for j in range(period + 1)
        ):
            return True
        i += 1


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def bipartitions_of(n: int):
    """All ordered pairs ``(alpha, beta)`` with ``|alpha| + |beta| = n``."""
    for a in range(n, -1, -1):
        for alpha in partitions_of(a):
            for beta in partitions_of(n - a):
                yield alpha, beta


# ------------------------------------------------- helpers for symbol rows


def select_parity(seq: TailSeq, parity: int) -> TailSeq:
    """Subsequence of the terms congruent to ``parity`` mod 2."""
    drop = seq.tail_step if seq.tail_step % 2 == 0 else 2 * seq.tail_step
    threshold = periodic_threshold(seq)
    vals = [v for v in seq.values_at_least(threshold - drop + 1) if v % 2 == parity]
    block = [v for v in vals if v <= threshold]
    if not block:
        raise SequenceError(f"no tail terms of parity {parity} in {seq}")
    return TailSeq([v for v in vals if v > threshold], tail=block, tail_step=drop)


def affine(seq: TailSeq, scale: int, shift: int, divisor: int = 1) -> TailSeq:
    """Termwise ``(scale * v + shift) / divisor`` (must stay integral)."""
    def f(v):
        num = scale * v + shift
        if num % divisor:
            raise SequenceError(f"non-integral term {num}/{divisor}")
        return num // divisor
    step = scale * seq.tail_step
    if step % divisor:
        raise SequenceError("non-integral tail step")
    return TailSeq([f(v) for v in seq.prefix], tail=[f(v) for v in seq.tail],
                   tail_step=step // divisor)


def minus_arithmetic(seq: TailSeq, a: int, s: int) -> SeqLike:
    """Termwise ``seq - [a,-oo[_s``.

    The result is returned as a :class:`Partition` when its tail is
    identically zero, and as a :class:`TailSeq` when it still decreases.
    """
    period = len(seq.tail)
    length = len(seq.prefix)
    terms = [seq[i] - (a - s * i) for i in range(length + period)]
    drop = seq.tail_step - s * period
    if drop < 0:
        raise SequenceError("difference is not decreasing")
    if drop == 0:
        if any(terms[length:]):
            raise SequenceError(f"difference {terms} does not end in zeros")
        return Partition.of(terms[:length]) if all(t >= 0 for t in terms) else _bad(terms)
    return TailSeq(terms[:length], tail=terms[length:], tail_step=drop)


def _bad(terms):
    raise SequenceError(f"negative parts in {terms}")


def alternate(seq: TailSeq, start: int) -> TailSeq:
    """Terms with 0-based index ``start, start + 2, start + 4, ...``."""
    period = len(seq.tail)
    if period % 2:
        period *= 2
    step = seq.tail_step * period // len(seq.tail)
    length = len(seq.prefix) + len(seq.prefix) % 2
    terms = [seq[i] for i in range(length + period)]
    return TailSeq(terms[start:length:2], tail=terms[length + start::2], tail_step=step)
