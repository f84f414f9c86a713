"""Exact univariate polynomials over the integers and small matrices of them.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``()``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Poly = tuple

ZERO: Poly = ()
ONE: Poly = (1,)


class PolyError(ArithmeticError):
    """Non-exact division or non-integral coefficient."""


def trim(coeffs: Sequence) -> Poly:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def const(c) -> Poly:
    return trim((c,))


def monomial(c, d: int) -> Poly:
    return trim((0,) * d + (c,))


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return trim(tuple((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)))


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p: Poly, c) -> Poly:
    return trim(tuple(c * a for a in p))


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder over the rationals."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [Fraction(c) for c in p]
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = Fraction(q[-1])
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(q) - 1] / lead
        quot[i] = c
        if c:
            for j, b in enumerate(q):
                rem[i + j] -= c * b
    return trim(quot), trim(rem)


def integral(p: Poly) -> Poly:
    out = []
    for c in p:
        c = Fraction(c)
        if c.denominator != 1:
            raise PolyError(f"non-integral coefficient {c}")
        out.append(int(c))
    return trim(out)


def exact_div(p: Poly, q: Poly) -> Poly:
    """``p / q`` when it is a polynomial with integer coefficients."""
    quot, rem = divmod_poly(p, q)
    if rem:
        raise PolyError(f"{fmt(q)} does not divide {fmt(p)}")
    return integral(quot)


def fmt(p: Poly, var: str = "t") -> str:
    if not p:
        return "0"
    terms = []
    for d, c in enumerate(p):
        if not c:
            continue
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        if mono and c == 1:
            terms.append(mono)
        elif mono and c == -1:
            terms.append(f"-{mono}")
        else:
            terms.append(f"{c}{mono}")
    return " + ".join(terms).replace("+ -", "- ")


# ---------------------------------------------------------------- matrices

Matrix = list  # list of rows, each a list of Poly


def mat_zero(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = mat_zero(len(a), cols)
    for i, row in enumerate(a):
        for k in range(inner):
            if not row[k]:
                continue
            for j in range(cols):
                if b[k][j]:
                    out[i][j] = add(out[i][j], mul(row[k], b[k][j]))
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def det(a: Matrix) -> Poly:
    """Determinant by cofactor expansion (blocks here are small)."""
    n = len(a)
    if n == 0:
        return ONE
    if n == 1:
        return a[0][0]
    total = ZERO
    for j in range(n):
        if not a[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = mul(a[0][j], det(minor))
        total = add(total, term) if j % 2 == 0 else sub(total, term)
    return total


def adjugate(a: Matrix) -> Matrix:
    n = len(a)
    if n == 1:
        return [[ONE]]
    out = mat_zero(n, n)
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(a) if k != i]
            c = det(minor)
            out[j][i] = c if (i + j) % 2 == 0 else neg(c)
    return out


def right_divide(x: Matrix, a: Matrix) -> Matrix:
    """The integral polynomial matrix ``y`` with ``y a = x``."""
    d = det(a)
    if not d:
        raise PolyError("singular block")
    num = mat_mul(x, adjugate(a))
    return [[exact_div(e, d) for e in row] for row in num]


@dataclass
class PolyMatrix:
    """Square polynomial matrix with labelled rows and columns."""

    labels: list
    entries: Matrix

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def index(self, label) -> int:
        return self.labels.index(label)

    def at(self, x) -> list[list]:
        return [[evaluate(e, x) for e in row] for row in self.entries]

    def is_symmetric(self) -> bool:
        return self.entries == mat_transpose(self.entries)

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)
