"""
Command-line interface for the reproduction report
"""

import json
from datetime import datetime
from pathlib import Path
from typing import List, Optional

import pandas as pd

from .config import Config
from .constants import EXIT_ERROR, EXIT_OK, REPORT_PREFIX, TIMESTAMP_FORMAT
from .report.claims import MISMATCH, ReportRow, run_report
from .report.witnesses import WITNESS_LIBRARY, self_test
from .utils.logging import get_logger

logger = get_logger(__name__)

STATUS_COLORS = {
    "match": "E2EFDA",
    "within_bounds": "FFF2CC",
    "mismatch": "F8CBAD",
    "skipped": "EDEDED",
    "computed": "DDEBF7",
}


def rows_to_frame(rows: List[ReportRow]) -> pd.DataFrame:
    """Report rows as a DataFrame with one column per field"""
    return pd.DataFrame(
        [row.to_dict() for row in rows],
        columns=["claim", "topic", "source", "expected", "computed", "status"],
    )


def print_report(rows: List[ReportRow]) -> None:
    """
    Print report rows as an aligned text table followed by a status tally

    Args:
        rows: Report rows
    """
    df = rows_to_frame(rows)
    print("=" * 60)
    print("REPRODUCTION REPORT")
    print("=" * 60)
    if df.empty:
        print("(no rows)")
        return
    print(df.to_string(index=False))
    print("-" * 60)
    for status, count in df["status"].value_counts().sort_index().items():
        print(f"  {status:<20} {count:>5}")


def export_to_excel(rows: List[ReportRow], filepath: Path) -> None:
    """
    Export report rows to an Excel workbook

    Args:
        rows: Report rows
        filepath: Output file path

    Raises:
        IOError: If file write fails
    """
    try:
        df = rows_to_frame(rows)
        with pd.ExcelWriter(filepath, engine="openpyxl") as writer:
            df.to_excel(writer, sheet_name="Report", index=False)
            _format_sheet(writer, "Report", df)
    except Exception as e:
        raise IOError(f"Failed to export Excel file: {e}") from e


def _format_sheet(writer: pd.ExcelWriter, sheet_name: str, df: pd.DataFrame) -> None:
    """
    Apply header style, status colors and column widths

    Args:
        writer: ExcelWriter instance
        sheet_name: Name of the sheet to format
        df: DataFrame that was written to the sheet
    """
    from openpyxl.styles import Alignment, Font, PatternFill

    worksheet = writer.sheets[sheet_name]

    header_fill = PatternFill(start_color="2B2B2B", end_color="2B2B2B", fill_type="solid")
    header_font = Font(name="Arial", size=11, bold=True, color="FFFFFF")
    body_font = Font(name="Arial", size=11)

    for cell in worksheet[1]:
        cell.font = header_font
        cell.fill = header_fill
        cell.alignment = Alignment(horizontal="center", vertical="center")

    status_col = list(df.columns).index("status") + 1
    for row in worksheet.iter_rows(min_row=2):
        status = row[status_col - 1].value
        fill = None
        if status in STATUS_COLORS:
            color = STATUS_COLORS[status]
            fill = PatternFill(start_color=color, end_color=color, fill_type="solid")
        for cell in row:
            cell.font = body_font
            cell.alignment = Alignment(horizontal="left", vertical="center")
            if fill is not None:
                cell.fill = fill

    for idx, column in enumerate(worksheet.columns):
        col_name = str(df.columns[idx]) if idx < len(df.columns) else ""
        max_length = len(col_name)
        for cell in column[1:]:
            if cell.value is not None:
                max_length = max(max_length, len(str(cell.value)))
        worksheet.column_dimensions[column[0].column_letter].width = min(max_length + 2, 80)


def write_report(
    rows: List[ReportRow], output_dir: Path, scope: str, excel: bool = False
) -> List[Path]:
    """
    Write the JSON report (and optionally Excel) into ``output_dir``

    Returns:
        Paths written
    """
    output_dir.mkdir(parents=True, exist_ok=True)
    timestamp = datetime.now().strftime(TIMESTAMP_FORMAT)
    stem = f"{REPORT_PREFIX}_{scope}_{timestamp}"

    json_path = output_dir / f"{stem}.json"
    payload = {"scope": scope, "rows": [row.to_dict() for row in rows]}
    with open(json_path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, ensure_ascii=False)
    logger.info(f"JSON report saved to: {json_path}")
    written = [json_path]

    if excel:
        excel_path = output_dir / f"{stem}.xlsx"
        export_to_excel(rows, excel_path)
        logger.info(f"Excel report saved to: {excel_path}")
        written.append(excel_path)
    return written


def self_test_command(output_format: str = "table") -> int:
    """
    Verify every witness library entry against its host patch

    Returns:
        Exit code: 0 when all entries pass
    """
    results = self_test()
    if output_format == "json":
        print(json.dumps({name: cert.to_dict() for name, cert in results.items()}, indent=2))
    else:
        print(f"\nWitness library ({len(results)} entries):")
        print("-" * 60)
        for name, cert in results.items():
            source = WITNESS_LIBRARY[name].source
            print(f"  {name:<16} {source:<8} {cert.verdict}")
    return EXIT_OK if all(cert.ok for cert in results.values()) else EXIT_ERROR


def report_command(
    config: Config,
    scope: str = "all",
    output_format: str = "table",
    seed: Optional[int] = None,
    excel: bool = False,
    write: bool = True,
) -> int:
    """
    Run the reproduction report

    Args:
        config: Configuration object
        scope: Claim group to run
        output_format: Output format (table or json)
        seed: Seed for randomized trials
        excel: Also export an Excel workbook
        write: Save the report files under the configured output directory

    Returns:
        Exit code: 0 when no row is a mismatch
    """
    logger.info(f"Running report scope={scope!r}")
    rows = run_report(scope, config=config, seed=seed)

    if output_format == "json":
        print(json.dumps([row.to_dict() for row in rows], indent=2))
    else:
        print_report(rows)

    if write:
        write_report(rows, config.output_dir, scope, excel=excel)

    mismatches = [row.claim for row in rows if row.status == MISMATCH]
    if mismatches:
        logger.warning(f"{len(mismatches)} mismatching claim(s): {', '.join(mismatches)}")
        return EXIT_ERROR
    return EXIT_OK
