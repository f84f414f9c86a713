"""Tabulated minimal pairs for the exceptional groups G2, F4, E6, E7, E8."""

from __future__ import annotations

import csv
import re
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources

GROUPS = ("G2", "F4", "E6", "E7", "E8")


class UnknownKey(KeyError):
    """No row for the requested (group, orbit, eps)."""


@dataclass(frozen=True)
class ExcEntry:
    group: str
    orbit: str
    a_group: str
    eps: str
    dual_orbit: str
    dual_a_group: str
    dual_eps: str

    def to_json(self) -> dict:
        return asdict(self)

    def to_tsv(self) -> str:
        return "\t".join(asdict(self).values())


_ALIASES = [
    (r"\varnothing", "∅"), (r"\emptyset", "∅"), ("empty", "∅"),
    (r"\langle1\rangle", "<1>"), ("trivial", "<1>"),
    (r"\boxtimes", "⊠"), (r"\chi", "chi"), ("χ", "chi"), ("\\tilde", "~"),
    ("{+}", "+"), ("$", ""), ("’", "'"), ("″", "''"), ("′", "'"),
]


def normalize(label: str) -> str:
    """Canonical spelling used for lookups: whitespace and LaTeX markup removed."""
    s = re.sub(r"\s+", "", label)
    for old, new in _ALIASES:
        s = s.replace(old.replace(" ", ""), new)
    s = re.sub(r"\\mathbb\{Z\}/(\d)\\mathbb\{Z\}", r"Z/\1Z", s)
    s = re.sub(r"_\{(\w+)\}", r"_\1", s)
    s = s.replace("{", "").replace("}", "")
    return "∅" if s == "" else s


def normalize_group(group: str) -> str:
    g = group.replace("_", "").replace(" ", "").upper()
    if g not in GROUPS:
        raise UnknownKey(f"unknown exceptional group {group!r}")
    return g


@lru_cache(maxsize=1)
def _rows() -> tuple[ExcEntry, ...]:
    text = resources.files("springer_dual.data").joinpath("exceptional.tsv").read_text(encoding="utf-8")
    reader = csv.DictReader(text.splitlines(), delimiter="\t")
    return tuple(ExcEntry(**row) for row in reader)


@lru_cache(maxsize=1)
def _index() -> dict:
    out = {}
    for row in _rows():
        key = (row.group, normalize(row.orbit), normalize(row.eps))
        if key in out:
            raise ValueError(f"duplicate table key {key}")
        out[key] = row
    return out


def enumerate_group(group: str) -> list[ExcEntry]:
    g = normalize_group(group)
    return [r for r in _rows() if r.group == g]


def lookup(group: str, orbit: str, eps: str) -> ExcEntry:
    key = (normalize_group(group), normalize(orbit), normalize(eps))
    try:
        return _index()[key]
    except KeyError:
        raise UnknownKey(f"no row for {key}") from None


def has_key(group: str, orbit: str, eps: str) -> bool:
    try:
        lookup(group, orbit, eps)
    except UnknownKey:
        return False
    return True


def row_closure_failures(group: str | None = None) -> list[ExcEntry]:
    """Rows whose dual datum is not itself a row of the same group."""
    groups = GROUPS if group is None else (normalize_group(group),)
    return [r for g in groups for r in enumerate_group(g)
            if not has_key(g, r.dual_orbit, r.dual_eps)]


def self_dual_rows(group: str) -> list[ExcEntry]:
    return [r for r in enumerate_group(group)
            if normalize(r.orbit) == normalize(r.dual_orbit) and normalize(r.eps) == normalize(r.dual_eps)]
