"""Typed access to the bundled reference tables (data/*.csv).

Values are exposed exactly as shipped: printed numbers stay strings
converted to float on demand, and the errata list says which cells are
known to be wrong in print (see data/README.md for the conventions).
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources

INDEX_COLUMNS = ("J", "EE", "RVa", "RVb")

# table number -> vertex count of its graphs
ALKANE_TABLES = {1: 8, 2: 9, 3: 10}
CYCLIC_TABLES = {4: 5, 5: 6}

# printed precision is 5 decimals except table 3's 7; comparison
# tolerances follow (half a unit in the last place, doubled for safety)
TABLE_TOLERANCE = {1: 1e-4, 2: 1e-4, 3: 5e-5, 4: 1e-4, 5: 1e-4}


@dataclass(frozen=True)
class AlkaneRow:
    name: str
    values: dict
    orders: dict
    ron: float | None


@dataclass(frozen=True)
class CyclicRow:
    id: int
    mu: int
    tau: int
    degrees: str
    values: dict
    orders: dict


@dataclass(frozen=True)
class Erratum:
    table: int
    row: str
    column: str
    printed: str
    corrected: str
    applied: bool
    note: str


def _rows(filename):
    path = resources.files(__package__).joinpath("data", filename)
    with path.open("r", encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))


def load_alkane_table(table):
    if table not in ALKANE_TABLES:
        raise ValueError(f"alkane tables are 1, 2, 3; got {table}")
    out = []
    for r in _rows(f"table{table}.csv"):
        ron = r.get("RON", "")
        out.append(
            AlkaneRow(
                name=r["name"],
                values={c: float(r[c]) for c in INDEX_COLUMNS},
                orders={c: int(r[f"{c}_order"]) for c in INDEX_COLUMNS},
                ron=float(ron) if ron else None,
            )
        )
    return out


def load_cyclic_table(table):
    if table not in CYCLIC_TABLES:
        raise ValueError(f"cyclic tables are 4, 5; got {table}")
    out = []
    for r in _rows(f"table{table}.csv"):
        out.append(
            CyclicRow(
                id=int(r["id"]),
                mu=int(r["mu"]),
                tau=int(r["tau"]),
                degrees=r["degrees"],
                values={c: float(r[c]) for c in INDEX_COLUMNS},
                orders={c: int(r[f"{c}_order"]) for c in INDEX_COLUMNS},
            )
        )
    return out


def load_errata():
    return [
        Erratum(
            table=int(r["table"]),
            row=r["row"],
            column=r["column"],
            printed=r["printed"],
            corrected=r["corrected"],
            applied=r["applied"] == "yes",
            note=r["note"],
        )
        for r in _rows("errata.csv")
    ]


def pending_corrections():
    """Errata not applied in the CSVs, keyed (table, row, column): the
    cells the reproduction harness must treat as known-bad in print."""
    return {
        (e.table, e.row, e.column): e
        for e in load_errata()
        if not e.applied and e.column != "row"
    }
