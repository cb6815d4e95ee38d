"""Machine-readable and tabular reports.

Rationals are serialized with ``str(Fraction)`` ("1/4", "0", "1"), which is
lossless. Decimal renderings are for display alongside and never read back.
"""

from __future__ import annotations

import json
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Optional

from .equilibrium import EquilibriumResult, SampledVerification
from .model import SimplexEconomy, StochasticPolicy

DISPLAY_DIGITS = 12


def q(x: Fraction) -> str:
    return str(x)


def decimal_string(x: Fraction, digits: int = DISPLAY_DIGITS) -> str:
    """Exact decimal when the expansion terminates, else ``~`` and ``digits`` places."""
    den = x.denominator
    for prime in (2, 5):
        while den % prime == 0:
            den //= prime
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(x.numerator) / Decimal(x.denominator)
        if den == 1:
            text = format(d.normalize(), "f")
            return "0" if text in ("-0", "") else text
        return "~" + format(d.quantize(Decimal(1).scaleb(-digits)), "f")


def validation_section(econ: SimplexEconomy, policy: StochasticPolicy) -> dict[str, Any]:
    return {
        "valid": True,
        "policy": policy.value,
        "m": econ.m,
        "n": econ.n,
        "column_sums": [q(s) for s in econ.input_column_sums],
        "rescaled_columns": [
            {"column": r.column, "original_sum": q(r.original_sum)} for r in econ.rescaled
        ],
    }


def minimality_section(result: EquilibriumResult) -> dict[str, Any]:
    return {
        "minimal": result.minimality.minimal,
        "witness": result.minimality.witness,
        "witnesses": list(result.minimality.witnesses),
    }


def groups_section(result: EquilibriumResult) -> list[dict[str, Any]]:
    return [
        {"commodity": j, "consumers": list(members), "size": len(members)}
        for j, members in result.groups.groups
    ]


def min_terms_section(result: EquilibriumResult) -> list[dict[str, Any]]:
    return [
        {"commodity": j, "value": q(result.mins[j]), "unused": j in result.mins.unused}
        for j in result.groups.preferred
    ]


def verification_section(v: SampledVerification) -> dict[str, Any]:
    return {
        "trials": v.trials,
        "seed": v.seed,
        "pivot_checked": v.pivot_checked,
        "pivot_ok": v.pivot_ok,
        "sampled": v.sampled,
        "skipped": v.skipped,
        "dominating_allocation_exists": v.dominating_exists,
        "counterexample_count": len(v.counterexamples),
        "counterexamples": [[[q(a) for a in row] for row in G.rows] for G in v.counterexamples],
    }


def result_report(
    result: EquilibriumResult,
    policy: StochasticPolicy = StochasticPolicy.EXACT,
    verification: Optional[SampledVerification] = None,
) -> dict[str, Any]:
    econ = result.economy
    report: dict[str, Any] = {
        "status": result.label,
        "validation": validation_section(econ, policy),
        "sigma": list(econ.sigma),
        "groups": groups_section(result),
        "min_terms": min_terms_section(result),
        "minimality": minimality_section(result),
        "f_star": [[q(a) for a in row] for row in result.f_star.rows],
        "p_star": [q(x) for x in result.p_star.p],
        "p_star_decimal": [decimal_string(x) for x in result.p_star.p],
        "budgets": [
            {
                "consumer": i,
                "endowment_value": q(ev),
                "allocation_value": q(fv),
                "balanced": ev == fv,
            }
            for i, (ev, fv) in enumerate(result.budget_values, start=1)
        ],
        "solve": {
            "status": "unique",
            "unknowns": list(result.groups.preferred),
            "rank": result.outcome.rank,
        },
        "strict_value_predicate": result.strict_value_predicate(),
        "notes": list(result.notes),
    }
    if verification is not None:
        report["verification"] = verification_section(verification)
    return report


def to_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2) + "\n"


def _matrix_lines(rows, indent: str = "  ") -> list[str]:
    cells = [[str(a) for a in row] for row in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
    return [indent + "  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]


def validation_table(section: dict[str, Any]) -> str:
    lines = [
        f"economy: m={section['m']} consumers, n={section['n']} commodities",
        "Sum = (" + ", ".join(section["column_sums"]) + ")",
    ]
    for r in section["rescaled_columns"]:
        lines.append(f"column {r['column']} rescaled from sum {r['original_sum']}")
    lines.append(f"valid simplex economy (policy: {section['policy']})")
    return "\n".join(lines) + "\n"


def minimality_table(report: dict[str, Any]) -> str:
    lines = ["Min:"]
    for t in report["min_terms"]:
        suffix = " (sentinel, unused)" if t["unused"] else ""
        lines.append(f"  Min[{t['commodity']}] = {t['value']}{suffix}")
    mini = report["minimality"]
    if mini["minimal"]:
        lines.append(f"The simplex economy is minimal (witness consumer {mini['witness']})")
    else:
        lines.append("The simplex economy is not minimal")
    return "\n".join(lines) + "\n"


def result_table(report: dict[str, Any]) -> str:
    out = [validation_table(report["validation"])]
    groups = ", ".join(
        f"{g['commodity']}: {g['consumers']}" for g in report["groups"]
    )
    out.append(f"sigma = {tuple(report['sigma'])}\ngroups = {{{groups}}}\n")
    out.append(minimality_table(report))
    out.append("F* =\n" + "\n".join(_matrix_lines(report["f_star"])) + "\n")
    out.append(
        "p* = (" + ", ".join(report["p_star"]) + ")  ["
        + ", ".join(report["p_star_decimal"]) + "]\n"
    )
    budget_rows = [("consumer", "omega_i.p*", "f*_i.p*")] + [
        (str(b["consumer"]), b["endowment_value"], b["allocation_value"])
        for b in report["budgets"]
    ]
    out.append("budgets:\n" + "\n".join(_matrix_lines(budget_rows)) + "\n")
    if "verification" in report:
        v = report["verification"]
        pivot = {"True": "ok", "False": "FAILED", "None": "not applicable"}[str(v["pivot_ok"])]
        if v["dominating_allocation_exists"]:
            sampled = (
                f"{v['sampled']} dominating allocations sampled ({v['skipped']} skipped), "
                f"{v['counterexample_count']} counterexamples"
            )
        else:
            sampled = "no feasible allocation dominates F*, nothing to sample"
        out.append(f"verification: pivot check {pivot}; {sampled}\n")
    for note in report["notes"]:
        out.append(f"note: {note}\n")
    out.append(f"status: {report['status']}\n")
    return "".join(out)
