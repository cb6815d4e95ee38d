"""Equilibrium construction for simplex economies.

The pipeline is: group consumers by preferred commodity, take the Min term of
each preferred commodity over the consumers who do not prefer it, test
minimality, build the feasible allocation F*, and solve for the supporting
price p* that leaves every consumer's F* bundle exactly affordable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .linalg import Inconsistent, SolveOutcome, Underdetermined, UniqueSolution, solve_exact
from .model import Allocation, PriceSystem, SimplexEconomy, strictly_prefers, value

__all__ = [
    "EquilibriumResult",
    "MinTerms",
    "Minimality",
    "PreferenceGroups",
    "PriceSystemError",
    "PriceNegative",
    "SampledVerification",
    "SystemInconsistent",
    "SystemUnderdetermined",
    "build_f_star",
    "compute_min_terms",
    "group_preferences",
    "is_minimal",
    "sample_dominating_allocation",
    "solve_equilibrium",
    "supporting_price",
    "verify_equilibrium_sampled",
]

ZERO = Fraction(0)
ONE = Fraction(1)

NOT_GUARANTEED = "equilibrium not guaranteed: economy is not minimal (open question)"
GUARANTEED = "competitive equilibrium"

MAX_RETRIES = 100


class PriceSystemError(ArithmeticError):
    """The supporting-price system did not yield a price on the simplex."""

    def __init__(self, message: str, outcome: Optional[SolveOutcome] = None):
        super().__init__(message)
        self.outcome = outcome


class SystemInconsistent(PriceSystemError):
    pass


class SystemUnderdetermined(PriceSystemError):
    pass


class PriceNegative(PriceSystemError):
    def __init__(self, j: int, price: Fraction, outcome: Optional[SolveOutcome] = None):
        super().__init__(f"supporting price component p*_{j} = {price} is negative", outcome)
        self.j, self.price = j, price


@dataclass(frozen=True)
class PreferenceGroups:
    """Consumers partitioned by preferred commodity.

    ``groups`` is ordered by first appearance in sigma; members ascend.
    """

    groups: tuple[tuple[int, tuple[int, ...]], ...]
    m: int

    @property
    def preferred(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.groups)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(members) for _, members in self.groups)

    @property
    def k(self) -> int:
        return len(self.groups)

    def members(self, j: int) -> tuple[int, ...]:
        for commodity, members in self.groups:
            if commodity == j:
                return members
        raise KeyError(j)

    def size(self, j: int) -> int:
        return len(self.members(j))


@dataclass(frozen=True)
class MinTerms:
    """Min[j] for each preferred commodity j.

    Commodities in ``unused`` (preferred by every consumer) carry the
    sentinel 1; their coefficient (m - m_s) / m_s is zero so it never enters
    F*.
    """

    values: dict[int, Fraction]
    unused: frozenset[int] = frozenset()

    def __getitem__(self, j: int) -> Fraction:
        return self.values[j]


@dataclass(frozen=True)
class Minimality:
    minimal: bool
    witness: Optional[int]
    witnesses: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.minimal


def group_preferences(sigma) -> PreferenceGroups:
    order: dict[int, list[int]] = {}
    for i, j in enumerate(sigma, start=1):
        order.setdefault(j, []).append(i)
    return PreferenceGroups(
        tuple((j, tuple(members)) for j, members in order.items()), len(sigma)
    )


def compute_min_terms(econ: SimplexEconomy, groups: PreferenceGroups) -> MinTerms:
    values: dict[int, Fraction] = {}
    unused = set()
    for j, _ in groups.groups:
        col = econ.W.column(j)
        others = [col[i - 1] for i in range(1, econ.m + 1) if econ.sigma[i - 1] != j]
        if others:
            values[j] = min(others)
        else:
            values[j] = ONE
            unused.add(j)
    return MinTerms(values, frozenset(unused))


def is_minimal(econ: SimplexEconomy, groups: PreferenceGroups, mins: MinTerms) -> Minimality:
    """Find the consumers that hold Min[j_t] at every other preferred commodity.

    Such a consumer is the pivotal witness of minimality; the smallest index
    is reported as ``witness``.
    """
    preferred = groups.preferred
    witnesses = []
    for i in range(1, econ.m + 1):
        own = econ.sigma[i - 1]
        row = econ.W.rows[i - 1]
        if all(row[j - 1] == mins[j] for j in preferred if j != own):
            witnesses.append(i)
    witnesses = tuple(witnesses)
    return Minimality(bool(witnesses), witnesses[0] if witnesses else None, witnesses)


def build_f_star(econ: SimplexEconomy, groups: PreferenceGroups, mins: MinTerms) -> Allocation:
    m, n = econ.m, econ.n
    preferred = set(groups.preferred)
    boost = {
        j: Fraction(m - size, size) * mins[j] for j, size in zip(groups.preferred, groups.sizes)
    }
    even = Fraction(1, m)
    rows = []
    for i in range(1, m + 1):
        own = econ.sigma[i - 1]
        w = econ.W.rows[i - 1]
        row = []
        for j in range(1, n + 1):
            if j not in preferred:
                row.append(even)
            elif j == own:
                row.append(w[j - 1] + boost[j])
            else:
                row.append(w[j - 1] - mins[j])
        rows.append(tuple(row))
    # Range and feasibility follow from W being column-stochastic.
    F = Allocation(tuple(rows))
    assert all(total == ONE for total in F.column_sums()), "F* does not clear the market"
    return F


def price_system_matrix(
    econ: SimplexEconomy, f_star: Allocation, groups: PreferenceGroups
) -> tuple[list[list[Fraction]], list[Fraction]]:
    """The (m+1) x k system: rows (f*_i - omega_i) on preferred columns, then ones."""
    preferred = groups.preferred
    A = [
        [f[j - 1] - w[j - 1] for j in preferred]
        for f, w in zip(f_star.rows, econ.W.rows)
    ]
    A.append([ONE] * len(preferred))
    b = [ZERO] * econ.m + [ONE]
    return A, b


def supporting_price(
    econ: SimplexEconomy, f_star: Allocation, groups: PreferenceGroups
) -> tuple[PriceSystem, SolveOutcome]:
    A, b = price_system_matrix(econ, f_star, groups)
    outcome = solve_exact(A, b)
    if isinstance(outcome, Inconsistent):
        raise SystemInconsistent("supporting-price system is inconsistent", outcome)
    if isinstance(outcome, Underdetermined):
        raise SystemUnderdetermined(
            f"supporting-price system has rank {outcome.rank} for "
            f"{len(groups.preferred)} unknowns",
            outcome,
        )
    p = [ZERO] * econ.n
    for j, x in zip(groups.preferred, outcome.x):
        if x < 0:
            raise PriceNegative(j, x, outcome)
        p[j - 1] = x
    prices = PriceSystem(tuple(p))
    for i, (f, w) in enumerate(zip(f_star.rows, econ.W.rows), start=1):
        if value(f, prices) != value(w, prices):
            raise AssertionError(f"consumer {i} is not budget-balanced at p*")
    return prices, outcome


@dataclass(frozen=True)
class EquilibriumResult:
    economy: SimplexEconomy
    groups: PreferenceGroups
    mins: MinTerms
    minimality: Minimality
    f_star: Allocation
    p_star: PriceSystem
    outcome: UniqueSolution
    budget_values: tuple[tuple[Fraction, Fraction], ...]
    label: str
    notes: tuple[str, ...] = ()

    @property
    def minimal(self) -> bool:
        return self.minimality.minimal

    def strict_value_predicate(self) -> bool:
        """Whether f*_i.p* > (f*_i.e_j) p*_j holds for every i and j.

        Recorded as an observation on non-minimal economies; never asserted.
        """
        p = self.p_star.p
        return all(
            value(f, p) > f[j] * p[j] for f in self.f_star.rows for j in range(self.economy.n)
        )


def solve_equilibrium(econ: SimplexEconomy) -> EquilibriumResult:
    groups = group_preferences(econ.sigma)
    mins = compute_min_terms(econ, groups)
    minimality = is_minimal(econ, groups, mins)
    f_star = build_f_star(econ, groups, mins)
    p_star, outcome = supporting_price(econ, f_star, groups)
    budgets = tuple(
        (value(w, p_star), value(f, p_star)) for w, f in zip(econ.W.rows, f_star.rows)
    )
    notes = []
    if mins.unused:
        notes.append(
            "Min term of commodit{} {} has an empty complement; sentinel 1 unused".format(
                "y" if len(mins.unused) == 1 else "ies",
                ", ".join(str(j) for j in sorted(mins.unused)),
            )
        )
    for r in econ.rescaled:
        notes.append(f"column {r.column} rescaled from sum {r.original_sum}")
    return EquilibriumResult(
        economy=econ,
        groups=groups,
        mins=mins,
        minimality=minimality,
        f_star=f_star,
        p_star=p_star,
        outcome=outcome,
        budget_values=budgets,
        label=GUARANTEED if minimality.minimal else NOT_GUARANTEED,
        notes=tuple(notes),
    )


@dataclass
class SampledVerification:
    trials: int
    seed: int
    pivot_checked: bool = False
    pivot_ok: Optional[bool] = None
    sampled: int = 0
    skipped: int = 0
    dominating_exists: bool = True
    counterexamples: list[Allocation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and self.pivot_ok is not False


def _random_fraction(rng: random.Random, denominator: int) -> Fraction:
    """Uniform on {1/d, 2/d, ..., 1}, drawn from the integer stream."""
    return Fraction(rng.randint(1, denominator), denominator)


def sample_dominating_allocation(
    result: EquilibriumResult,
    rng: random.Random,
    denominator: int = 64,
    retries: int = MAX_RETRIES,
) -> Optional[Allocation]:
    """Draw a feasible G with F* < G, or None if a column rejects ``retries`` draws.

    Each consumer's preferred coordinate grows by a random positive rational;
    the mass is taken from the consumers who do not prefer that commodity in
    proportion to their F* holdings, which keeps every column sum at 1.
    Draws that leave [0,1] are rejected.
    """
    F = result.f_star
    econ = result.economy
    slack = {}
    for j, members in result.groups.groups:
        col = F.column(j)
        slack[j] = sum(
            (col[i - 1] for i in range(1, econ.m + 1) if econ.sigma[i - 1] != j), ZERO
        )
    if any(s == 0 for s in slack.values()):
        return None

    rows = [list(row) for row in F.rows]
    for j, members in result.groups.groups:
        column = _raise_column(F.column(j), members, slack[j], rng, denominator, retries)
        if column is None:
            return None
        for i in range(econ.m):
            rows[i][j - 1] = column[i]
    G = Allocation(tuple(tuple(r) for r in rows))
    assert strictly_prefers(F, G, econ.sigma)
    return G


def _raise_column(col, members, slack, rng, denominator, retries):
    """One preferred column of a dominating allocation; rejection per column."""
    share = slack / len(members)
    for _ in range(retries):
        # Up to twice the fair share, so the rejection branch is live.
        raises = {i: 2 * share * _random_fraction(rng, denominator) for i in members}
        total = sum(raises.values(), ZERO)
        if total > slack:
            continue
        keep = 1 - total / slack
        new = [
            col[i - 1] + raises[i] if i in raises else col[i - 1] * keep
            for i in range(1, len(col) + 1)
        ]
        if all(ZERO <= a <= ONE for a in new):
            return new
    return None


def verify_equilibrium_sampled(
    result: EquilibriumResult, econ: SimplexEconomy, trials: int, seed: int
) -> SampledVerification:
    """Check the pivotal consumer and hunt for affordable dominating allocations.

    ``random.Random(seed)`` drives every draw, so a given (economy, trials,
    seed) triple always produces the same report.
    """
    report = SampledVerification(trials=trials, seed=seed)
    p = result.p_star.p
    if result.minimality.minimal and result.minimality.witness is not None:
        w = result.minimality.witness
        own = econ.sigma[w - 1]
        row = result.f_star.rows[w - 1]
        zero_elsewhere = all(row[j - 1] == 0 for j in result.groups.preferred if j != own)
        report.pivot_checked = True
        report.pivot_ok = zero_elsewhere and value(row, p) == row[own - 1] * p[own - 1]

    rng = random.Random(seed)
    endowment_values = [value(wi, p) for wi in econ.W.rows]
    for _ in range(trials):
        G = sample_dominating_allocation(result, rng)
        if G is None:
            report.skipped += 1
            continue
        report.sampled += 1
        over_budget = any(value(g, p) > ev for g, ev in zip(G.rows, endowment_values))
        if not over_budget:
            report.counterexamples.append(G)
    # No mass to take from anybody means no feasible G can dominate F*.
    report.dominating_exists = _dominating_possible(result)
    return report


def _dominating_possible(result: EquilibriumResult) -> bool:
    econ = result.economy
    for j, _ in result.groups.groups:
        col = result.f_star.column(j)
        if all(col[i - 1] == 0 for i in range(1, econ.m + 1) if econ.sigma[i - 1] != j):
            return False
    return True
