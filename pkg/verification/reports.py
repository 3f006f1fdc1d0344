import json

from openpyxl import Workbook
from openpyxl.styles import Alignment, Font, PatternFill

HEADERS = ['Check', 'Parameters', 'Verdict', 'Cases', 'Counterexample', 'Discrepancies', 'Notes']


def build_workbook(reports, suite=''):
    """Workbook with one row per CheckReport"""
    wb = Workbook()
    ws = wb.active
    ws.title = f"{suite} checks"[:31] if suite else "Checks"

    # Header styling
    header_font = Font(bold=True, color="FFFFFF")
    header_fill = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
    header_alignment = Alignment(horizontal="center", vertical="center")
    fail_font = Font(bold=True, color="C00000")

    ws.append(HEADERS)
    for cell in ws[1]:
        cell.font = header_font
        cell.fill = header_fill
        cell.alignment = header_alignment

    for report in reports:
        ws.append([
            report.check_id,
            json.dumps(report.params, sort_keys=True),
            report.verdict,
            report.cases_examined,
            json.dumps(report.counterexample, sort_keys=True) if report.counterexample else '',
            len(report.discrepancies),
            '; '.join(report.notes),
        ])
        if not report.passed:
            ws.cell(row=ws.max_row, column=3).font = fail_font

    # Adjust column widths
    for column in ws.columns:
        max_length = max(len(str(cell.value)) if cell.value is not None else 0 for cell in column)
        ws.column_dimensions[column[0].column_letter].width = min(max_length + 2, 50)
    return wb


def write_workbook(reports, path, suite=''):
    build_workbook(reports, suite).save(path)
    return path
