"""Exact Gaussian elimination over the rationals, with diagnostics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .model import as_rational

__all__ = [
    "Inconsistent",
    "SolveOutcome",
    "Underdetermined",
    "UniqueSolution",
    "solve_exact",
]

ZERO = Fraction(0)


@dataclass(frozen=True)
class UniqueSolution:
    x: tuple[Fraction, ...]
    rank: int


@dataclass(frozen=True)
class Inconsistent:
    """``witness`` is a row combination y with y.A = 0 and y.b != 0."""

    witness: tuple[Fraction, ...]
    rank: int


@dataclass(frozen=True)
class Underdetermined:
    rank: int
    free_columns: tuple[int, ...]  # 0-based column indices


SolveOutcome = Union[UniqueSolution, Inconsistent, Underdetermined]


def _as_matrix(A: Sequence[Sequence[object]]) -> list[list[Fraction]]:
    rows = [[as_rational(a) for a in row] for row in A]
    if not rows or not rows[0]:
        raise ValueError("empty matrix")
    cols = len(rows[0])
    if any(len(row) != cols for row in rows):
        raise ValueError("matrix is not rectangular")
    return rows


def solve_exact(A: Sequence[Sequence[object]], b: Sequence[object]) -> SolveOutcome:
    """Solve A x = b exactly.

    Works on all rows of ``A`` (overdetermined systems included), pivoting on
    the first nonzero entry of each column. A unique answer is re-substituted
    into the original system before it is returned.
    """
    M = _as_matrix(A)
    rhs = [as_rational(v) for v in b]
    n_rows, n_cols = len(M), len(M[0])
    if len(rhs) != n_rows:
        raise ValueError(f"matrix has {n_rows} rows but b has {len(rhs)} entries")

    # Each working row carries [A | b | I] so that inconsistency can be
    # reported as an explicit combination of the original rows.
    work = [
        M[r] + [rhs[r]] + [Fraction(int(r == c)) for c in range(n_rows)]
        for r in range(n_rows)
    ]
    width = len(work[0])
    pivots: list[int] = []
    free: list[int] = []
    piv_r = 0
    for c in range(n_cols):
        for r in range(piv_r, n_rows):
            if work[r][c] != 0:
                break
        else:
            free.append(c)
            continue
        work[piv_r], work[r] = work[r], work[piv_r]
        pivot_row = work[piv_r]
        inv = 1 / pivot_row[c]
        for k in range(c, width):
            pivot_row[k] *= inv
        for r2 in range(n_rows):
            if r2 == piv_r:
                continue
            factor = work[r2][c]
            if factor == 0:
                continue
            row = work[r2]
            for k in range(c, width):
                if pivot_row[k]:
                    row[k] -= factor * pivot_row[k]
        pivots.append(c)
        piv_r += 1
        if piv_r == n_rows:
            free.extend(range(c + 1, n_cols))
            break

    rank = len(pivots)
    for r in range(rank, n_rows):
        if work[r][n_cols] != 0:
            witness = tuple(work[r][n_cols + 1:])
            return Inconsistent(witness, rank)
    if rank < n_cols:
        return Underdetermined(rank, tuple(free))

    x = [ZERO] * n_cols
    for r, c in enumerate(pivots):
        x[c] = work[r][n_cols]
    for r in range(n_rows):
        if sum((a * xi for a, xi in zip(M[r], x)), ZERO) != rhs[r]:
            raise ArithmeticError(f"solution fails row {r} on re-substitution")
    return UniqueSolution(tuple(x), rank)
