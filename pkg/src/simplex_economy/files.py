"""Economy file formats.

JSON (canonical)::

    {"n": 4, "m": 5,
     "W": [["0.2", "0.4", "0.1", "0.1"], ...],
     "sigma": [1, 1, 3, 4, 4]}

``n`` and ``m`` are optional; when present they must match ``W``. Entries
are decimal ("0.25") or fraction ("1/4") strings. Bare JSON numbers are
accepted and read exactly from their text, so ``0.2`` is 1/5.

CSV (convenience)::

    # comment
    0.2, 0.4, 0.1, 0.1
    ...
    sigma: 1, 1, 3, 4, 4

One row of W per line, then a final ``sigma:`` line. Blank lines and lines
starting with ``#`` are ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .model import SimplexEconomy, as_rational

__all__ = ["EconomyFile", "FileFormatError", "dump_economy", "load_economy", "parse_economy"]


class FileFormatError(ValueError):
    pass


@dataclass(frozen=True)
class EconomyFile:
    W: tuple[tuple[Fraction, ...], ...]
    sigma: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.W)

    @property
    def n(self) -> int:
        return len(self.W[0]) if self.W else 0


def _entry(x: object, i: int, j: int) -> Fraction:
    try:
        return as_rational(x)
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"w({i},{j}): {exc}") from None


def _sigma_entry(x: object, i: int) -> int:
    if isinstance(x, bool):
        raise FileFormatError(f"sigma({i}) = {x!r} is not an integer")
    if isinstance(x, int):
        return x
    if isinstance(x, str) and x.strip().lstrip("+-").isdigit():
        return int(x)
    if isinstance(x, Decimal) and x == x.to_integral_value():
        return int(x)
    raise FileFormatError(f"sigma({i}) = {x!r} is not an integer")


def _parse_json(text: str) -> EconomyFile:
    try:
        doc = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FileFormatError("economy file must be a JSON object")
    for key in ("W", "sigma"):
        if key not in doc:
            raise FileFormatError(f"missing field {key!r}")
    W, sigma = doc["W"], doc["sigma"]
    if not isinstance(W, list) or not all(isinstance(row, list) for row in W):
        raise FileFormatError("W must be a list of rows")
    if not isinstance(sigma, list):
        raise FileFormatError("sigma must be a list")
    rows = tuple(
        tuple(_entry(x, i, j) for j, x in enumerate(row, start=1))
        for i, row in enumerate(W, start=1)
    )
    econ = EconomyFile(rows, tuple(_sigma_entry(s, i) for i, s in enumerate(sigma, start=1)))
    _check_declared(econ, doc.get("m"), doc.get("n"))
    return econ


def _check_declared(econ: EconomyFile, m: Optional[object], n: Optional[object]) -> None:
    if m is not None and m != econ.m:
        raise FileFormatError(f"declared m = {m} but W has {econ.m} rows")
    if n is not None and any(len(row) != n for row in econ.W):
        raise FileFormatError(f"declared n = {n} but W rows have lengths {[len(r) for r in econ.W]}")
    if m is not None and len(econ.sigma) != m:
        raise FileFormatError(f"declared m = {m} but sigma has {len(econ.sigma)} entries")


def _parse_csv(text: str) -> EconomyFile:
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines or not lines[-1].lower().startswith("sigma"):
        raise FileFormatError("CSV economy must end with a 'sigma:' line")
    head, _, tail = lines[-1].partition(":")
    if head.strip().lower() != "sigma":
        raise FileFormatError("malformed sigma line")
    sigma = tuple(
        _sigma_entry(s.strip(), i) for i, s in enumerate(tail.split(","), start=1) if s.strip()
    )
    rows = tuple(
        tuple(_entry(x.strip(), i, j) for j, x in enumerate(line.split(","), start=1))
        for i, line in enumerate(lines[:-1], start=1)
    )
    return EconomyFile(rows, sigma)


def parse_economy(text: str, fmt: Optional[str] = None) -> EconomyFile:
    """Parse economy text; ``fmt`` is "json", "csv" or None to sniff."""
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "csv"
    if fmt == "json":
        return _parse_json(text)
    if fmt == "csv":
        return _parse_csv(text)
    raise ValueError(f"unknown format {fmt!r}")


def load_economy(path: str | Path) -> EconomyFile:
    path = Path(path)
    fmt = {".json": "json", ".csv": "csv"}.get(path.suffix.lower())
    return parse_economy(path.read_text(), fmt)


def dump_economy(econ: SimplexEconomy) -> str:
    doc = {
        "n": econ.n,
        "m": econ.m,
        "W": [[str(a) for a in row] for row in econ.W.rows],
        "sigma": list(econ.sigma),
    }
    return json.dumps(doc, indent=2) + "\n"
