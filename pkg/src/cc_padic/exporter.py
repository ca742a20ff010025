"""Export harness results to CSV and Excel."""

import csv
from datetime import datetime
from pathlib import Path
from typing import Any

from openpyxl import Workbook
from openpyxl.styles import Alignment, Font, PatternFill
from openpyxl.utils import get_column_letter

from .harness import ClaimResult

COLUMNS = ["Claim", "Case", "Status", "Expected", "Observed", "Details"]


def _result_rows(results: list[ClaimResult]) -> list[dict[str, Any]]:
    """Flatten claim results; a claim that raised becomes a single ERROR row."""
    rows = []
    for result in results:
        if result.error is not None:
            rows.append({
                "claim": result.name,
                "case": "",
                "status": "ERROR",
                "expected": "",
                "observed": "",
                "details": result.error,
            })
            continue
        rows.extend(result.rows)
    return rows


def _values(row: dict[str, Any]) -> list[str]:
    return [
        row.get("claim", ""),
        row.get("case", ""),
        row.get("status", ""),
        row.get("expected", ""),
        row.get("observed", ""),
        row.get("details", ""),
    ]


def export_to_csv(results: list[ClaimResult], output_dir: Path | str) -> Path:
    """Write harness results to a timestamped CSV file.

    Args:
        results: Claim results from run_harness
        output_dir: Directory to save the CSV file

    Returns:
        Path to created CSV file
    """
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)

    timestamp = datetime.now().strftime("%Y-%m-%d_%H%M%S")
    filepath = output_dir / f"harness_{timestamp}.csv"

    with open(filepath, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(COLUMNS)
        for row in _result_rows(results):
            writer.writerow(_values(row))

    return filepath


def export_to_excel(results: list[ClaimResult], filepath: Path | str | None = None) -> Path:
    """Write harness results to an Excel workbook.

    Args:
        results: Claim results from run_harness
        filepath: Output file path (default: cc_padic-harness-YYYY-MM-DD.xlsx)

    Returns:
        Path to created Excel file
    """
    if filepath is None:
        date_str = datetime.now().strftime("%Y-%m-%d")
        filepath = Path(f"cc_padic-harness-{date_str}.xlsx")
    else:
        filepath = Path(filepath)

    wb = Workbook()
    ws = wb.active
    ws.title = "Harness"

    header_font = Font(bold=True, color="FFFFFF")
    header_fill = PatternFill(start_color="0066CC", end_color="0066CC", fill_type="solid")

    status_fills = {
        "PASS": PatternFill(start_color="4A7C4E", end_color="4A7C4E", fill_type="solid"),
        "FAIL": PatternFill(start_color="C75050", end_color="C75050", fill_type="solid"),
        "ERROR": PatternFill(start_color="B8860B", end_color="B8860B", fill_type="solid"),
    }
    status_font = Font(bold=True, color="FFFFFF")

    for col_num, header in enumerate(COLUMNS, 1):
        cell = ws.cell(row=1, column=col_num, value=header)
        cell.font = header_font
        cell.fill = header_fill
        cell.alignment = Alignment(horizontal="center")

    for row_num, row in enumerate(_result_rows(results), 2):
        for col_num, value in enumerate(_values(row), 1):
            ws.cell(row=row_num, column=col_num, value=value)
        status_cell = ws.cell(row=row_num, column=3)
        status_cell.fill = status_fills.get(row.get("status", ""), status_fills["ERROR"])
        status_cell.font = status_font
        status_cell.alignment = Alignment(horizontal="center")

    # Auto-adjust column widths
    for col_num, _ in enumerate(COLUMNS, 1):
        max_length = 0
        column_letter = get_column_letter(col_num)
        for column in ws.iter_rows(min_col=col_num, max_col=col_num):
            for cell in column:
                if cell.value:
                    max_length = max(max_length, len(str(cell.value)))
        ws.column_dimensions[column_letter].width = min(max_length + 2, 60)

    ws.freeze_panes = "A2"

    wb.save(filepath)
    return filepath
