"""Nilpotent orbits of Sp(2n) and SO(N) as marked partitions.

An ``SpMarked`` is a symplectic partition with a sign on every even part
value; an ``SoMarked`` is an orthogonal partition with a sign class on its odd
part values (stored through the representative that is ``+1`` on the largest
odd part) and, for degenerate partitions, a ``+``/``-`` tag.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

from .partitions import Partition, dominance_leq, partitions_of

SP = "Sp"
SO = "SO"


class OrbitError(ValueError):
    """Invalid partition or sign data for the requested group."""


def is_symplectic(lam: Partition) -> bool:
    return all(lam.count(p) % 2 == 0 for p in set(lam) if p % 2)


def is_orthogonal(lam: Partition) -> bool:
    return all(lam.count(p) % 2 == 0 for p in set(lam) if p % 2 == 0)


def is_valid(kind: str, lam: Partition) -> bool:
    if kind == SP:
        return lam.size % 2 == 0 and is_symplectic(lam)
    if kind == SO:
        return is_orthogonal(lam)
    raise OrbitError(f"unknown group kind {kind!r}")


def delta(kind: str, lam: Partition) -> tuple[int, ...]:
    """Part values carrying a sign: even ones for Sp, odd ones for SO (decreasing)."""
    if not is_valid(kind, lam):
        raise OrbitError(f"{lam} is not a valid {kind} partition")
    parity = 0 if kind == SP else 1
    return tuple(sorted({p for p in lam if p % 2 == parity}, reverse=True))


def is_degenerate(lam: Partition) -> bool:
    """Orthogonal partition with only even parts (and N > 0)."""
    return bool(lam) and all(p % 2 == 0 for p in lam)


def closure_leq(a: Partition, b: Partition) -> bool:
    """Closure order of the orbits of ``a`` and ``b`` (dominance order)."""
    if a.size != b.size:
        raise OrbitError(f"size mismatch: {a.size} != {b.size}")
    return dominance_leq(a, b)


def _freeze_eps(eps: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(((int(k), int(v)) for k, v in eps.items()), reverse=True))


def _check_eps(kind, lam, eps):
    dom = delta(kind, lam)
    if set(eps) != set(dom):
        raise OrbitError(f"sign data must be defined exactly on {set(dom) or '{}'}, got {sorted(eps)}")
    for v in eps.values():
        if v not in (1, -1):
            raise OrbitError(f"signs must be +1 or -1, got {v}")


@dataclass(frozen=True)
class SpMarked:
    lam: Partition
    eps_items: tuple[tuple[int, int], ...] = field(default=())

    kind = SP

    def __post_init__(self):
        object.__setattr__(self, "lam", Partition(self.lam))
        _check_eps(SP, self.lam, dict(self.eps_items))
        object.__setattr__(self, "eps_items", _freeze_eps(dict(self.eps_items)))

    @classmethod
    def make(cls, lam: Iterable[int], eps: Mapping[int, int] | None = None) -> "SpMarked":
        return cls(Partition.of(lam), _freeze_eps(eps or {}))

    @property
    def eps(self) -> dict[int, int]:
        return dict(self.eps_items)

    @property
    def size(self) -> int:
        return self.lam.size

    def positional(self) -> list[int]:
        """Signs by position, ``eps(i) = eps[lam_i]``; +1 where no sign is attached."""
        e = self.eps
        return [e.get(p, 1) for p in self.lam]

    def to_json(self) -> dict:
        return {"group": SP, "lambda": list(self.lam),
                "eps": {str(k): v for k, v in self.eps_items}}

    def __str__(self) -> str:
        return f"Sp{list(self.lam)}{_fmt_eps(self.eps_items)}"


@dataclass(frozen=True)
class SoMarked:
    lam: Partition
    eps_items: tuple[tuple[int, int], ...] = field(default=())
    degenerate: str | None = None

    kind = SO

    def __post_init__(self):
        lam = Partition(self.lam)
        object.__setattr__(self, "lam", lam)
        eps = dict(self.eps_items)
        _check_eps(SO, lam, eps)
        if eps:
            top = max(eps)
            if eps[top] == -1:
                eps = {k: -v for k, v in eps.items()}
        object.__setattr__(self, "eps_items", _freeze_eps(eps))
        if is_degenerate(lam):
            if self.degenerate not in ("+", "-"):
                raise OrbitError(f"degenerate partition {list(lam)} needs a '+' or '-' tag")
        elif self.degenerate is not None:
            raise OrbitError(f"{list(lam)} is not degenerate; tag must be None")

    @classmethod
    def make(cls, lam: Iterable[int], eps: Mapping[int, int] | None = None,
             degenerate: str | None = None) -> "SoMarked":
        return cls(Partition.of(lam), _freeze_eps(eps or {}), degenerate)

    @property
    def eps(self) -> dict[int, int]:
        return dict(self.eps_items)

    @property
    def size(self) -> int:
        return self.lam.size

    def positional(self) -> list[int]:
        e = self.eps
        return [e.get(p, 1) for p in self.lam]

    def to_json(self) -> dict:
        return {"group": SO, "lambda": list(self.lam),
                "eps": {str(k): v for k, v in self.eps_items},
                "degenerate": self.degenerate}

    def __str__(self) -> str:
        tag = self.degenerate or ""
        return f"SO{list(self.lam)}{tag}{_fmt_eps(self.eps_items)}"


Marked = SpMarked | SoMarked


def _fmt_eps(items) -> str:
    if not items:
        return ""
    return "{" + ",".join(f"{k}:{'+' if v > 0 else '-'}" for k, v in items) + "}"


def make_marked(kind: str, lam: Iterable[int], eps: Mapping[int, int] | None = None,
                degenerate: str | None = None) -> Marked:
    if kind == SP:
        if degenerate is not None:
            raise OrbitError("Sp orbits carry no degenerate tag")
        return SpMarked.make(lam, eps)
    if kind == SO:
        return SoMarked.make(lam, eps, degenerate)
    raise OrbitError(f"unknown group kind {kind!r}")


def marked_from_json(data: Mapping) -> Marked:
    eps = {int(k): int(v) for k, v in (data.get("eps") or {}).items()}
    return make_marked(data["group"], data["lambda"], eps, data.get("degenerate"))


def valid_partitions(kind: str, size: int) -> list[Partition]:
    if kind == SP and size % 2:
        raise OrbitError("Sp(2n) needs an even size")
    return [lam for lam in partitions_of(size) if is_valid(kind, lam)]


def enumerate_marked(kind: str, size: int) -> list[Marked]:
    """Every marked partition of the given group, in a fixed order.

    For SO the list contains one entry per sign class, and both tags for
    degenerate partitions, i.e. one entry per pair (orbit, local system).
    """
    out: list[Marked] = []
    for lam in valid_partitions(kind, size):
        dom = delta(kind, lam)
        if kind == SP:
            for signs in product((1, -1), repeat=len(dom)):
                out.append(SpMarked(lam, _freeze_eps(dict(zip(dom, signs)))))
        elif is_degenerate(lam):
            out.extend(SoMarked(lam, (), tag) for tag in ("+", "-"))
        else:
            for signs in product((1, -1), repeat=max(len(dom) - 1, 0)):
                eps = dict(zip(dom, (1,) + signs))
                out.append(SoMarked(lam, _freeze_eps(eps)))
    return out


def positional_to_values(lam: Partition, signs: list[int], parity: int) -> dict[int, int]:
    """Collapse positional signs to value-indexed ones on parts of ``parity``.

    Raises :class:`OrbitError` when equal parts carry different signs.
    """
    out: dict[int, int] = {}
    for p, s in zip(lam, signs):
        if p % 2 != parity:
            continue
        if out.setdefault(p, s) != s:
            raise OrbitError(f"conflicting signs on repeated part {p}")
    return out
