"""Exact domain types for simplex economies.

Every scalar is a :class:`fractions.Fraction`. Consumer and commodity
indices are 1-based wherever they appear in the public API (sigma entries,
error payloads, group members, witnesses); 0-based indexing only happens
when reaching into the underlying tuples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Sequence

__all__ = [
    "Allocation",
    "ColumnNotStochastic",
    "ColumnRescale",
    "EconomyError",
    "EntryOutOfRange",
    "PriceSystem",
    "ShapeMismatch",
    "SigmaOutOfRange",
    "SimplexEconomy",
    "StochasticPolicy",
    "ZeroColumn",
    "as_rational",
    "is_feasible",
    "strictly_prefers",
    "unit_price",
    "utility",
    "validate_economy",
    "value",
]

ZERO = Fraction(0)
ONE = Fraction(1)


class EconomyError(ValueError):
    """Base class for rejected economies and malformed inputs."""


class ShapeMismatch(EconomyError):
    pass


class EntryOutOfRange(EconomyError):
    def __init__(self, i: int, j: int, entry: Fraction):
        self.i, self.j, self.entry = i, j, entry
        super().__init__(f"entry w({i},{j}) = {entry} is not in [0,1]")


class SigmaOutOfRange(EconomyError):
    def __init__(self, i: int, entry: object, n: int):
        self.i, self.entry, self.n = i, entry, n
        super().__init__(f"sigma({i}) = {entry!r} is not a commodity index in 1..{n}")


class ColumnNotStochastic(EconomyError):
    def __init__(self, j: int, total: Fraction):
        self.j, self.total = j, total
        super().__init__(f"column {j} sums to {total}, not 1")


class ZeroColumn(EconomyError):
    def __init__(self, j: int):
        self.j = j
        super().__init__(f"column {j} sums to 0 and cannot be normalized")


def as_rational(x: object) -> Fraction:
    """Convert ``x`` to an exact Fraction.

    Strings may be integer, decimal ("0.25") or fraction ("1/4") literals and
    are parsed exactly. Binary floats are refused: ``0.2`` as a float is not
    1/5, and silently accepting it would defeat the point.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational, Decimal)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {x!r}") from exc
    if isinstance(x, float):
        raise TypeError(f"refusing binary float {x!r}; pass a string literal instead")
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational")


def _in_unit_interval(x: Fraction) -> bool:
    return ZERO <= x <= ONE


@dataclass(frozen=True)
class Allocation:
    """An m x n matrix of rationals in [0,1]; row i is consumer i's bundle."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_rational(a) for a in row) for row in self.rows)
        if not rows or not rows[0]:
            raise ShapeMismatch("allocation needs at least one consumer and one commodity")
        n = len(rows[0])
        for i, row in enumerate(rows, start=1):
            if len(row) != n:
                raise ShapeMismatch(f"row {i} has {len(row)} entries, expected {n}")
            for j, a in enumerate(row, start=1):
                if not _in_unit_interval(a):
                    raise EntryOutOfRange(i, j, a)
        object.__setattr__(self, "rows", rows)

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def column(self, j: int) -> tuple[Fraction, ...]:
        """Column ``j`` (1-based)."""
        return tuple(row[j - 1] for row in self.rows)

    def column_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(col, ZERO) for col in zip(*self.rows))

    def row_sum(self) -> tuple[Fraction, ...]:
        """The total bundle f_1 + ... + f_m (for W this is the total endowment)."""
        return self.column_sums()

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.rows[i]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class PriceSystem:
    """A nonnegative price vector summing to exactly 1."""

    p: tuple[Fraction, ...]

    def __post_init__(self):
        p = tuple(as_rational(x) for x in self.p)
        if not p:
            raise ShapeMismatch("price system needs at least one commodity")
        for j, x in enumerate(p, start=1):
            if not _in_unit_interval(x):
                raise ValueError(f"price p_{j} = {x} is not in [0,1]")
        if sum(p, ZERO) != ONE:
            raise ValueError(f"prices sum to {sum(p, ZERO)}, not 1")
        object.__setattr__(self, "p", p)

    @property
    def n(self) -> int:
        return len(self.p)

    def __getitem__(self, j: int) -> Fraction:
        return self.p[j]

    def __iter__(self):
        return iter(self.p)

    def __len__(self) -> int:
        return len(self.p)


def unit_price(n: int, j: int) -> PriceSystem:
    """The extreme point e_j of the price simplex (``j`` is 1-based)."""
    if not 1 <= j <= n:
        raise ValueError(f"commodity {j} not in 1..{n}")
    return PriceSystem(tuple(ONE if k == j else ZERO for k in range(1, n + 1)))


class StochasticPolicy(enum.Enum):
    EXACT = "exact"
    NORMALIZE = "normalize"


@dataclass(frozen=True)
class ColumnRescale:
    column: int
    original_sum: Fraction


@dataclass(frozen=True)
class SimplexEconomy:
    """A validated pair <W, sigma>.

    ``W`` is column-stochastic and ``sigma[i-1]`` is the (1-based) preferred
    commodity of consumer ``i``. Build instances through
    :func:`validate_economy`; the constructor re-checks the invariants but
    never normalizes.

    ``input_column_sums`` and ``rescaled`` describe what validation saw and
    did; they are bookkeeping and take no part in equality.
    """

    W: Allocation
    sigma: tuple[int, ...]
    input_column_sums: tuple[Fraction, ...] = field(default=(), compare=False)
    rescaled: tuple[ColumnRescale, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not isinstance(self.W, Allocation):
            object.__setattr__(self, "W", Allocation(self.W))
        object.__setattr__(self, "sigma", _check_sigma(self.sigma, self.W.m, self.W.n))
        for j, total in enumerate(self.W.column_sums(), start=1):
            if total != ONE:
                raise ColumnNotStochastic(j, total)
        if not self.input_column_sums:
            object.__setattr__(self, "input_column_sums", self.W.column_sums())

    @property
    def m(self) -> int:
        return self.W.m

    @property
    def n(self) -> int:
        return self.W.n

    def endowment(self, i: int) -> tuple[Fraction, ...]:
        """omega_i, the endowment of consumer ``i`` (1-based)."""
        return self.W.rows[i - 1]


def _check_sigma(sigma: Sequence[object], m: int, n: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if len(sigma) != m:
        raise ShapeMismatch(f"sigma has {len(sigma)} entries but W has {m} consumers")
    for i, s in enumerate(sigma, start=1):
        if isinstance(s, bool) or not isinstance(s, int) or not 1 <= s <= n:
            raise SigmaOutOfRange(i, s, n)
    return sigma


def validate_economy(
    W: Sequence[Sequence[object]],
    sigma: Sequence[object],
    policy: StochasticPolicy = StochasticPolicy.EXACT,
) -> SimplexEconomy:
    """Check ``W`` and ``sigma`` and build a :class:`SimplexEconomy`.

    Entries outside [0,1] and sigma entries outside 1..n are always
    rejected. Column sums must be exactly 1 under ``EXACT``; under
    ``NORMALIZE`` each column is divided by its sum and the rescale is
    recorded on the result.
    """
    policy = StochasticPolicy(policy)
    try:
        rows = [list(row) for row in W]
    except TypeError as exc:
        raise ShapeMismatch("W must be a sequence of rows") from exc
    if not rows or not rows[0]:
        raise ShapeMismatch("W needs at least one consumer and one commodity")
    n = len(rows[0])
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            raise ShapeMismatch(f"row {i} has {len(row)} entries, expected {n}")
    rows = [[as_rational(a) for a in row] for row in rows]
    for i, row in enumerate(rows, start=1):
        for j, a in enumerate(row, start=1):
            if not _in_unit_interval(a):
                raise EntryOutOfRange(i, j, a)
    sigma = _check_sigma(sigma, len(rows), n)

    sums = tuple(sum(col, ZERO) for col in zip(*rows))
    rescaled = []
    for j, total in enumerate(sums, start=1):
        if total == ONE:
            continue
        if policy is StochasticPolicy.EXACT:
            raise ColumnNotStochastic(j, total)
        if total == ZERO:
            raise ZeroColumn(j)
        for row in rows:
            row[j - 1] /= total
        rescaled.append(ColumnRescale(j, total))
    return SimplexEconomy(Allocation(rows), sigma, sums, tuple(rescaled))


def value(f: Sequence[Fraction], p: Sequence[Fraction]) -> Fraction:
    """The value f . p of bundle ``f`` at prices ``p``."""
    if len(f) != len(p):
        raise ShapeMismatch(f"bundle has {len(f)} commodities, prices have {len(p)}")
    return sum((as_rational(a) * as_rational(q) for a, q in zip(f, p)), ZERO)


def utility(i: int, f: Sequence[Fraction], sigma: Sequence[int]) -> Fraction:
    """u_i(f) = f . e_sigma(i), consumer ``i`` 1-based."""
    if not 1 <= i <= len(sigma):
        raise IndexError(f"consumer {i} not in 1..{len(sigma)}")
    j = sigma[i - 1]
    if not 1 <= j <= len(f):
        raise IndexError(f"sigma({i}) = {j} outside a bundle of {len(f)} commodities")
    return as_rational(f[j - 1])


def strictly_prefers(F: Allocation, G: Allocation, sigma: Sequence[int]) -> bool:
    """True iff every consumer's preferred coordinate is strictly larger in G."""
    if F.shape != G.shape:
        raise ShapeMismatch(f"allocations have shapes {F.shape} and {G.shape}")
    if len(sigma) != F.m:
        raise ShapeMismatch(f"sigma has {len(sigma)} entries for {F.m} consumers")
    return all(
        utility(i, f, sigma) < utility(i, g, sigma)
        for i, (f, g) in enumerate(zip(F.rows, G.rows), start=1)
    )


def is_feasible(F: Allocation) -> bool:
    """Market clearing: every column sums to exactly 1."""
    return all(total == ONE for total in F.column_sums())
