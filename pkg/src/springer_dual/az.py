"""Dual orbit of a tempered unipotent parameter of a split odd orthogonal
p-adic group.

The dual group is ``Sp(2n)``.  The centralizer of the compact part of the
parameter splits into general linear blocks and two symplectic blocks (for
the eigenvalues +1 and -1); the dual orbit is assembled blockwise from the
minimal pairs of the symplectic blocks, each general linear block of size
``m`` contributing ``2m`` ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .duality import min_marked
from .orbits import SP, OrbitError, SpMarked, is_symplectic, marked_from_json
from .partitions import Partition


class ParameterError(ValueError):
    """Inconsistent or non-tempered parameter data."""


@dataclass(frozen=True)
class UnipotentParam:
    gl_blocks: tuple[int, ...]
    plus_block: SpMarked
    minus_block: SpMarked
    n: int

    def __post_init__(self):
        object.__setattr__(self, "gl_blocks", tuple(int(m) for m in self.gl_blocks))
        if any(m < 1 for m in self.gl_blocks):
            raise ParameterError("GL block sizes must be positive")
        for block in (self.plus_block, self.minus_block):
            if block.kind != SP:
                raise ParameterError("the +1 and -1 blocks must be symplectic")
        total = sum(self.gl_blocks) + (self.plus_block.size + self.minus_block.size) // 2
        if total != self.n:
            raise ParameterError(f"block sizes sum to {total}, expected n={self.n}")

    @classmethod
    def from_json(cls, data: dict) -> "UnipotentParam":
        blocks = []
        for name in ("plus_block", "minus_block"):
            raw = data.get(name) or {"lambda": []}
            raw = {"group": SP, **raw}
            blocks.append(marked_from_json(raw))
        for b in data.get("gl_nilpotents", []) or []:
            if len(b) != 1:
                raise ParameterError(f"GL block nilpotent {b} is not regular (non-tempered input)")
        return cls(tuple(data.get("gl_blocks", ())), blocks[0], blocks[1], int(data["n"]))


@dataclass(frozen=True)
class DualOrbit:
    lam: Partition
    eps_plus: SpMarked
    eps_minus: SpMarked
    merged_eps: dict | None
    conflicts: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "group": SP,
            "lambda": list(self.lam),
            "plus_min": self.eps_plus.to_json(),
            "minus_min": self.eps_minus.to_json(),
            "eps": None if self.merged_eps is None else {str(k): v for k, v in sorted(self.merged_eps.items(), reverse=True)},
            "eps_conflicts": list(self.conflicts),
            "orbit_only": True,
        }


def az_dual(param: UnipotentParam) -> DualOrbit:
    plus = min_marked(param.plus_block)
    minus = min_marked(param.minus_block)
    ones = [1] * (2 * sum(param.gl_blocks))
    lam = Partition.of(list(plus.lam) + list(minus.lam) + ones)
    if not is_symplectic(lam):
        raise OrbitError(f"assembled partition {list(lam)} is not symplectic")
    merged: dict[int, int] = dict(plus.eps)
    conflicts = []
    for value, sign in minus.eps.items():
        if merged.setdefault(value, sign) != sign:
            conflicts.append(value)
    return DualOrbit(lam, plus, minus, None if conflicts else merged, tuple(sorted(conflicts, reverse=True)))
