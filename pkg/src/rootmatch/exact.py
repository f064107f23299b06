"""Small exact linear algebra kernel over the rationals.

Everything here is deliberately dependency free: vectors are tuples of
ints or ``fractions.Fraction`` and eliminations are done symbolically so
that zero tests are decisions, not tolerance checks.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence, Union

Rat = Union[int, Fraction]


def dot(x: Sequence[Rat], y: Sequence[Rat]) -> Rat:
    if len(x) != len(y):
        raise ValueError("dimension mismatch in exact dot product")
    return sum(a * b for a, b in zip(x, y))


def _integer_rows(rows: Sequence[Sequence[Rat]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank is unchanged)."""
    out = []
    for row in rows:
        if all(type(x) is int for x in row):
            out.append(list(row))
            continue
        fracs = [Fraction(x) for x in row]
        scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
        out.append([int(f * scale) for f in fracs])
    return out


def exact_rank(rows: Sequence[Sequence[Rat]]) -> int:
    """Rank of a small rational matrix, fraction free.

    Bareiss elimination over integers: every intermediate entry is a
    minor of the (row-scaled) input, so the division below is exact and
    entries stay polynomially bounded.
    """
    work = _integer_rows(rows)
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        lead = work[r][c]
        for i in range(r + 1, len(work)):
            f = work[i][c]
            work[i] = [(lead * a - f * b) // prev for a, b in zip(work[i], work[r])]
        prev = lead
        r += 1
        if r == len(work):
            break
    return r


def solve_unique(
    rows: Sequence[Sequence[Rat]], rhs: Sequence[Rat]
) -> tuple[Fraction, ...]:
    """Solve a consistent rational system with a unique solution.

    Accepts more equations than unknowns; raises ``ValueError`` when the
    system is inconsistent or underdetermined.
    """
    m = len(rows)
    if m != len(rhs):
        raise ValueError("system shape mismatch")
    n = len(rows[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        lead = aug[r][c]
        aug[r] = [a / lead for a in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        if aug[i][n]:
            raise ValueError("inconsistent system")
    if len(pivots) != n:
        raise ValueError("underdetermined system")
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = aug[i][n]
    return tuple(sol)


def primitive_integer(vec: Sequence[Rat]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same ray)."""
    fracs = [Fraction(x) for x in vec]
    if all(f == 0 for f in fracs):
        return tuple(0 for _ in fracs)
    scale = lcm(*(f.denominator for f in fracs))
    ints = [int(f * scale) for f in fracs]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def in_span(vec: Sequence[Rat], basis: Sequence[Sequence[Rat]]) -> bool:
    """Exact membership of ``vec`` in the span of ``basis``."""
    if not basis:
        return all(Fraction(x) == 0 for x in vec)
    base = exact_rank(basis)
    return exact_rank(list(basis) + [vec]) == base
