"""Character tables of the Weyl groups of types A, B (= C) and D.

Type A uses the Murnaghan-Nakayama rule.  Type B classes are signed cycle
types ``(mu, nu)`` (``mu`` positive cycles, ``nu`` negative cycles) and the
irreducible characters are labelled by bipartitions ``(alpha, beta)``, with
``((n), ())`` trivial and ``((), (1^n))`` the sign character.  Type D is
obtained by restriction; the characters labelled by ``alpha == beta`` split
in two, and so do the classes whose cycles are all positive and even.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod

from ..partitions import Partition, bipartitions_of, partitions_of
from . import polys


class RankError(ValueError):
    """Requested rank exceeds the configured bound."""


@dataclass(frozen=True)
class RankBounds:
    """Largest ranks for which tables are built."""

    type_a: int = 8
    type_b: int = 6
    type_d: int = 6


DEFAULT_BOUNDS = RankBounds()


# ---------------------------------------------------------------- type A


def _beta_set(lam, length):
    parts = list(lam) + [0] * (length - len(lam))
    return [p + length - 1 - i for i, p in enumerate(parts)]


@lru_cache(maxsize=None)
def sym_char(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """``chi^lam`` on the class of cycle type ``mu`` (Murnaghan-Nakayama)."""
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    length = len(lam) + r
    beta = _beta_set(lam, length)
    present = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in present:
            continue
        sign = (-1) ** sum(1 for c in beta if b - r < c < b)
        new = sorted((present - {b}) | {b - r}, reverse=True)
        parts = tuple(p for p in (x - (length - 1 - i) for i, x in enumerate(new)) if p > 0)
        total += sign * sym_char(parts, rest)
    return total


def centralizer_order(mu) -> int:
    out = 1
    for part in set(mu):
        c = list(mu).count(part)
        out *= part ** c * factorial(c)
    return out


# ---------------------------------------------------------------- tables


@dataclass
class CharTable:
    """Class list, class sizes, characters and reflection data of a Weyl group."""

    weyl_type: str
    rank: int
    classes: list
    sizes: list[int]
    chars: dict
    degrees: tuple[int, ...]
    char_polys: list  # det(1 - t w) on the reflection representation, per class
    sign_label: object

    @property
    def order(self) -> int:
        return sum(self.sizes)

    def inner(self, f, g) -> Fraction:
        return Fraction(sum(s * a * b for s, a, b in zip(self.sizes, f, g)), self.order)

    def orthogonality_residual(self) -> int:
        """Sum of ``|<chi, chi'> - delta|`` numerators over all pairs (0 when exact)."""
        labels = list(self.chars)
        bad = 0
        for i, a in enumerate(labels):
            for b in labels[i:]:
                want = 1 if a == b else 0
                bad += abs(self.inner(self.chars[a], self.chars[b]) - want)
        return bad

    def sign_values(self) -> list[int]:
        return self.chars[self.sign_label]


def _cycle_poly(length: int, negative: bool):
    # det(1 - t w) of one signed cycle on its span
    return polys.add(polys.ONE, polys.monomial(1 if negative else -1, length))


def table_a(n: int, bounds: RankBounds = DEFAULT_BOUNDS) -> CharTable:
    """``S_n`` acting by permutations on ``C^n`` (invariant degrees ``1..n``)."""
    if n > bounds.type_a:
        raise RankError(f"type A rank {n} above bound {bounds.type_a}")
    classes = [tuple(mu) for mu in partitions_of(n)]
    sizes = [factorial(n) // centralizer_order(mu) for mu in classes]
    chars = {Partition(lam): [sym_char(tuple(lam), mu) for mu in classes] for lam in classes}
    char_polys = [_prod_polys(_cycle_poly(p, False) for p in mu) for mu in classes]
    return CharTable("A", n, classes, sizes, chars, tuple(range(1, n + 1)), char_polys,
                     Partition([1] * n) if n else Partition())


def _prod_polys(items):
    out = polys.ONE
    for p in items:
        out = polys.mul(out, p)
    return out


def _b_value(alpha, beta, mu, nu) -> int:
    cycles = [(p, False) for p in mu] + [(p, True) for p in nu]
    a_size = sum(alpha)
    total = 0
    idx = range(len(cycles))
    for r in range(len(cycles) + 1):
        for chosen in combinations(idx, r):
            if sum(cycles[i][0] for i in chosen) != a_size:
                continue
            left = sorted((cycles[i][0] for i in chosen), reverse=True)
            right = [cycles[i] for i in idx if i not in chosen]
            sign = (-1) ** sum(1 for c in right if c[1])
            total += sign * sym_char(tuple(alpha), tuple(left)) * sym_char(
                tuple(beta), tuple(sorted((c[0] for c in right), reverse=True)))
    return total


def _b_classes(n):
    out = []
    for k in range(n + 1):
        for mu in partitions_of(k):
            for nu in partitions_of(n - k):
                out.append((tuple(mu), tuple(nu)))
    return out


def _b_class_size(n, mu, nu) -> int:
    denom = 1
    for part in set(mu):
        c = mu.count(part)
        denom *= (2 * part) ** c * factorial(c)
    for part in set(nu):
        c = nu.count(part)
        denom *= (2 * part) ** c * factorial(c)
    return 2 ** n * factorial(n) // denom


def table_b(n: int, bounds: RankBounds = DEFAULT_BOUNDS) -> CharTable:
    """Hyperoctahedral group ``W(B_n) = W(C_n)`` on its reflection representation."""
    if n > bounds.type_b:
        raise RankError(f"type B rank {n} above bound {bounds.type_b}")
    classes = _b_classes(n)
    sizes = [_b_class_size(n, mu, nu) for mu, nu in classes]
    chars = {}
    for alpha, beta in bipartitions_of(n):
        chars[(alpha, beta)] = [_b_value(alpha, beta, mu, nu) for mu, nu in classes]
    char_polys = [_prod_polys([_cycle_poly(p, False) for p in mu] + [_cycle_poly(p, True) for p in nu])
                  for mu, nu in classes]
    sign = (Partition(), Partition([1] * n) if n else Partition())
    return CharTable("B", n, classes, sizes, chars, tuple(range(2, 2 * n + 1, 2)), char_polys, sign)


def _split_class(mu, nu) -> bool:
    return not nu and bool(mu) and all(p % 2 == 0 for p in mu)


def split_difference(alpha, mu) -> int:
    """Difference of the two halves of a split character on the ``+`` half of
    the split class ``(mu, ())``: ``2^len(mu) * chi^alpha(mu / 2)``."""
    return 2 ** len(mu) * sym_char(tuple(alpha), tuple(p // 2 for p in mu))


def table_d(n: int, bounds: RankBounds = DEFAULT_BOUNDS) -> CharTable:
    """``W(D_n)`` on its reflection representation.

    Labels are ``(alpha, beta, split)``: ``alpha > beta`` with ``split=None``,
    or ``alpha == beta`` with ``split`` in ``{1, 2}`` (``None`` when ``n = 0``).
    Split classes are labelled ``(mu, (), "+")`` / ``(mu, (), "-")``; the ``+``
    half contains the plain permutations of that cycle type.
    """
    if n > bounds.type_d:
        raise RankError(f"type D rank {n} above bound {bounds.type_d}")
    b_classes = [(mu, nu) for mu, nu in _b_classes(n) if len(nu) % 2 == 0]
    classes, sizes, parent = [], [], []
    for mu, nu in b_classes:
        size = _b_class_size(n, mu, nu)
        if _split_class(mu, nu):
            for half in ("+", "-"):
                classes.append((mu, nu, half))
                sizes.append(size // 2)
                parent.append((mu, nu))
        else:
            classes.append((mu, nu, None))
            sizes.append(size)
            parent.append((mu, nu))
    chars = {}
    for alpha, beta in bipartitions_of(n):
        if alpha < beta:
            continue
        values = [_b_value(alpha, beta, mu, nu) for mu, nu in parent]
        if alpha != beta or n == 0:
            chars[(alpha, beta, None)] = values
            continue
        diff = [0 if c[2] is None else (1 if c[2] == "+" else -1) * split_difference(alpha, c[0])
                for c in classes]
        chars[(alpha, beta, 1)] = [(v + d) // 2 for v, d in zip(values, diff)]
        chars[(alpha, beta, 2)] = [(v - d) // 2 for v, d in zip(values, diff)]
    char_polys = [_prod_polys([_cycle_poly(p, False) for p in mu] + [_cycle_poly(p, True) for p in nu])
                  for mu, nu, _ in classes]
    if n == 0:
        degs: tuple[int, ...] = ()
    elif n == 1:
        degs = (1,)
    else:
        degs = tuple(range(2, 2 * n - 1, 2)) + (n,)
    sign = _d_sign_label(n)
    return CharTable("D", n, classes, sizes, chars, degs, char_polys, sign)


def _d_sign_label(n):
    if n == 0:
        return (Partition(), Partition(), None)
    if n == 1:
        return (Partition([1]), Partition(), None)
    ones = Partition([1] * n)
    return (ones, Partition(), None)


def sign_character(table: CharTable) -> list[int]:
    """``det`` of the reflection representation, i.e. the sign character."""
    out = []
    for poly in table.char_polys:
        # det(w) = (-1)^rank * leading coefficient of det(1 - t w)
        lead = poly[-1] if poly else 0
        out.append(lead * (-1) ** polys.degree(poly))
    return out


@lru_cache(maxsize=None)
def table(weyl_type: str, rank: int) -> CharTable:
    if weyl_type == "A":
        return table_a(rank)
    if weyl_type in ("B", "C"):
        return table_b(rank)
    if weyl_type == "D":
        return table_d(rank)
    raise ValueError(f"unknown Weyl type {weyl_type!r}")
