"""
Published eEDM values, transcribed verbatim, for side-by-side reports.

The quantum numbers behind the published numbers are not given, so any
comparison against them is informational only.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Table1Row:
    label: str
    epsilon_eV: float
    B_gauss_text: str
    B_gauss_range: tuple[float, float]
    paper_value_ecm: float


@dataclass(frozen=True)
class Table2Row:
    label: str
    epsilon_eV: float
    B_gauss: float
    paper_value_ecm: float
    bound_text: str
    reference: str
    note: str = ""


TABLE1 = (
    Table1Row("a", 1e10, "[1,6]x10^-3", (1e-3, 6e-3), 3e-28),
    Table1Row("b", 1e10, "[1,6]x10^2", (1e2, 6e2), 9e-26),
    Table1Row("c", 1e5, "[1,6]x10^3", (1e3, 6e3), 3e-20),
    Table1Row("d", 1e9, "[1,6]x10^3", (1e3, 6e3), 3e-24),
)

TABLE2 = (
    Table2Row("1", 2.6e5, 1.0e-3, 3.1e-24, "|d_e| <= 7.7x10^-22", "[24]"),
    Table2Row("2", 6.0e6, 2.0e-6, 5.9e-27, "|d_e| = 1.3x10^-29", "[25]"),
    Table2Row("3", 1.0e7, 2.55e-2, 2.3e-25, "|d_e| = (2.7+-8.3)x10^-27", "[26]",
              note="accompanying text quotes 0.255x10^-4 T = 0.255 G for this row"),
    Table2Row("4", 1.0e7, 7.0e-3, 2.1e-25, "|d_e| = 4.0x10^-27", "[27]"),
    Table2Row("5", 0.1e7, 9.0e-3, 2.0e-25, "|d_e| <= 1.6x10^-27", "[28]"),
)

STANDARD_MODEL_EDM_ECM = 1e-38


def find_rows(epsilon_eV: float, B_gauss: float, rtol: float = 1e-9):
    """Published rows whose (epsilon, B) match the query.

    Table 1 rows match when B falls inside their printed range.
    """
    hits = []
    for row in TABLE2:
        if abs(row.epsilon_eV - epsilon_eV) <= rtol * row.epsilon_eV and abs(row.B_gauss - B_gauss) <= rtol * row.B_gauss:
            hits.append((f"Table 2 row {row.label}", row.paper_value_ecm))
    for row in TABLE1:
        lo, hi = row.B_gauss_range
        if abs(row.epsilon_eV - epsilon_eV) <= rtol * row.epsilon_eV and lo * (1 - rtol) <= B_gauss <= hi * (1 + rtol):
            hits.append((f"Table 1 row {row.label}", row.paper_value_ecm))
    return hits
