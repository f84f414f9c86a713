"""Check the max/min algorithms and the induction picture against solved
Green functions, pair by pair."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..duality import max_marked, min_marked
from ..orbits import SO, SP, Marked, SoMarked, SpMarked, enumerate_marked
from ..partitions import Partition, dominance_leq
from ..symbols import Bipartition, gsc_forward, gsc_inverse, sign_twist
from .lusztig_shoji import all_families, constituents, solve_type_a
from .pieri import pieri_induce, unordered


@dataclass
class PairCheck:
    pair: Marked
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _strictly_above(x: Marked, y: Marked) -> bool:
    return x.lam != y.lam and dominance_leq(y.lam, x.lam)


def unique_top(found: dict[Marked, int]) -> Marked | None:
    """The constituent lying strictly above all others, if any."""
    for x in found:
        if all(y == x or _strictly_above(x, y) for y in found):
            return x
    return None


def unique_bottom(found: dict[Marked, int]) -> Marked | None:
    for x in found:
        if all(y == x or _strictly_above(y, x) for y in found):
            return x
    return None


def twisted(m: Marked) -> Marked:
    key, b = gsc_forward(m)
    return gsc_inverse(key, sign_twist(key, b))


def _pure_part(m: Marked) -> tuple[Marked, list[int]]:
    """The marked partition on the signed parity and the paired other parts."""
    parity = 0 if m.kind == SP else 1
    same = [p for p in m.lam if p % 2 == parity]
    other = sorted((p for p in m.lam if p % 2 != parity), reverse=True)
    strips = other[::2]
    eps = m.eps
    if m.kind == SP:
        return SpMarked.make(same, eps), strips
    return SoMarked.make(same, eps), strips


def induction_supports(m: Marked) -> tuple[set, set]:
    """(constituent supports of ``m``, Pieri closure of the pure part's supports)."""
    pure, strips = _pure_part(m)
    key, _ = gsc_forward(m)
    own = {gsc_forward(x)[1] for x in constituents(m)}
    base = {gsc_forward(x)[1] for x in constituents(pure)}
    if gsc_forward(pure)[0].k != key.k:
        raise AssertionError(f"pure part of {m} lies in another family")
    current: set = set(base)
    for a in strips:
        current = {Bipartition(g, d) for g, d in pieri_induce(current, a)}
    own_pairs = {(b.alpha, b.beta) for b in own}
    ind_pairs = {(b.alpha, b.beta) for b in current}
    if key.unordered:
        return unordered(own_pairs), unordered(ind_pairs)
    return own_pairs, ind_pairs


def check_pair(m: Marked) -> PairCheck:
    out = PairCheck(m)
    found = constituents(m)
    if found.get(m) != 1:
        out.failures.append(f"self multiplicity {found.get(m)}")
    top = unique_top(found)
    expect_max = max_marked(m)
    if top is None:
        out.failures.append("no unique closure-maximal constituent")
    elif found[top] != 1:
        out.failures.append(f"top constituent {top} has multiplicity {found[top]}")
    elif top != expect_max:
        out.failures.append(f"top constituent {top} differs from max_marked {expect_max}")
    twisted_found = {twisted(x): v for x, v in found.items()}
    bottom = unique_bottom(twisted_found)
    expect_min = min_marked(m)
    if bottom is None:
        out.failures.append("no unique minimal twisted constituent")
    elif twisted_found[bottom] != 1:
        out.failures.append(f"minimal twisted constituent {bottom} has multiplicity {twisted_found[bottom]}")
    elif bottom != expect_min:
        out.failures.append(f"minimal twisted constituent {bottom} differs from min_marked {expect_min}")
    parity = 0 if m.kind == SP else 1
    if any(p % 2 != parity for p in m.lam):
        own, induced = induction_supports(m)
        if own != induced:
            out.failures.append(f"induction mismatch: {sorted(map(str, own ^ induced))}")
    return out


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("SPRINGER_DUAL_THREADS", "1")))
    except ValueError:
        return 1


def verify_theorems(kind: str, size_bound: int) -> dict:
    """Report on every pair of every group of ``kind`` up to ``size_bound``."""
    start = time.perf_counter()
    report = {"group": kind, "size_bound": size_bound, "families": [], "counterexamples": []}
    sizes = range(0, size_bound + 1, 2) if kind == SP else range(1, size_bound + 1)
    for size in sizes:
        fams = all_families(kind, size)
        for fam in fams:
            checks = fam.solution.checks
            report["families"].append({"size": size, "k": fam.key.k, "members": len(fam.members),
                                       "status": "ok" if all(checks.values()) else "fail",
                                       "checks": checks})
        pairs = enumerate_marked(kind, size)
        with ThreadPoolExecutor(max_workers=_workers()) as pool:
            results = list(pool.map(check_pair, pairs))
        for r in results:
            if not r.ok:
                report["counterexamples"].append({"pair": r.pair.to_json(), "failures": r.failures})
        report.setdefault("pairs", 0)
        report["pairs"] += len(pairs)
    report["seconds"] = round(time.perf_counter() - start, 3)
    report["ok"] = not report["counterexamples"] and all(f["status"] == "ok" for f in report["families"])
    return report


def verify_type_a(n_bound: int) -> dict:
    """Maximal support of every column is the one-row partition."""
    bad = []
    for n in range(1, n_bound + 1):
        sol = solve_type_a(n)
        top = len(sol.labels) - 1
        if sol.labels[top] != Partition([n]):
            raise AssertionError("labels are not sorted with (n) last")
        for j, mu in enumerate(sol.labels):
            support = [i for i in range(len(sol.labels)) if sol.mult(i, j)]
            maximal = [i for i in support if all(i == k or sol.strictly_below(k, i) for k in support)]
            if maximal != [top] or sol.mult(top, j) != 1:
                bad.append({"n": n, "mu": list(mu)})
    return {"group": "A", "size_bound": n_bound, "counterexamples": bad, "ok": not bad}
