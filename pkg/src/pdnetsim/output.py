"""CSV and summary-file emission, plus the readers the plot command uses.

All output is locale-independent by construction: dot decimal separator,
fixed column order, '\n' newlines, and Gini values serialized with six
decimal places. Identical inputs therefore produce byte-identical files.
"""

import csv
import os
import re

from .engine import RunResult
from .errors import ParseError

GINI_SERIES_COLUMNS = (
    "iteration",
    "gini",
    "bank_balance_or_inf",
    "total_node_balance",
    "games_played",
    "games_skipped",
)

SUITE_SUMMARY_COLUMNS = (
    "network",
    "group",
    "bank",
    "replicate",
    "final_gini",
    "converged_at",
    "status",
)


def format_gini(value: float) -> str:
    return f"{value:.6f}"


def run_file_name(network: str, group_label: str, bank_label: str, replicate: int) -> str:
    """Deterministic per-run series file name, safe for any filesystem."""
    return (
        f"{_sanitize(network)}__{_sanitize(group_label)}__b{_sanitize(bank_label)}__r{replicate}.csv"
    )


def _sanitize(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "-", label).strip("-")


def write_gini_series_csv(path: str, result: RunResult) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(GINI_SERIES_COLUMNS)
        for i, (g, stats) in enumerate(zip(result.gini_series, result.iteration_stats), start=1):
            bank = "inf" if stats.bank_balance is None else str(stats.bank_balance)
            writer.writerow(
                [i, format_gini(g), bank, stats.total_balance, stats.games_played, stats.games_skipped]
            )


def write_summary_txt(path: str, result: RunResult, seed: int) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    converged = "none" if result.converged_at is None else str(result.converged_at)
    lines = [
        f"final_gini = {format_gini(result.gini_series[-1])}",
        f"converged_at = {converged}",
        f"iterations_executed = {result.iterations_executed}",
        f"seed = {seed}",
    ]
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write("\n".join(lines) + "\n")


def write_suite_summary_csv(path: str, rows) -> None:
    """rows: iterable with network/group/bank/replicate/final_gini/converged_at/status attrs."""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SUITE_SUMMARY_COLUMNS)
        for row in rows:
            final = "" if row.final_gini is None else format_gini(row.final_gini)
            converged = "" if row.converged_at is None else str(row.converged_at)
            writer.writerow(
                [row.network, row.group, row.bank, row.replicate, final, converged, row.status]
            )


def read_gini_series_csv(path: str) -> tuple[list[float], list[float]]:
    """Read (iterations, gini values) back from a series CSV, for plotting."""
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None:
            raise ParseError(f"{path}: empty series CSV")
        try:
            iter_col = header.index("iteration")
            gini_col = header.index("gini")
        except ValueError:
            raise ParseError(f"{path}: missing 'iteration'/'gini' columns") from None
        xs: list[float] = []
        ys: list[float] = []
        for lineno, fields in enumerate(reader, start=2):
            if not fields:
                continue
            try:
                xs.append(float(fields[iter_col]))
                ys.append(float(fields[gini_col]))
            except (ValueError, IndexError):
                raise ParseError(f"{path}: line {lineno}: malformed series row") from None
    if not xs:
        raise ParseError(f"{path}: series CSV holds no data rows")
    return xs, ys
