"""Rendering of tables, classifications and reports for the command line."""
import csv
import io
import json
from typing import Sequence

from models.classification_schema import PairClassification
from models.report_schema import OutputFormat, PairReport, TableRow

TABLE_HEADER = ["p", "q", "L_pq", "L_qp"]


def render_table(rows: Sequence[TableRow], fmt: OutputFormat) -> str:
    records = [row.model_dump(by_alias=True) for row in rows]
    if fmt is OutputFormat.JSON:
        return json.dumps(records, indent=2)

    if fmt is OutputFormat.MARKDOWN:
        lines = ["| " + " | ".join(TABLE_HEADER) + " |", "|" + "---|" * len(TABLE_HEADER)]
        for record in records:
            lines.append("| " + " | ".join(str(record[key]) for key in TABLE_HEADER) + " |")
        return "\n".join(lines)

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=TABLE_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buffer.getvalue().rstrip("\n")


def _fraction(value) -> str:
    return str(value) if value.denominator != 1 else str(value.numerator)


def describe_classification(cls: PairClassification) -> list[str]:
    res_2p, res_2q, res_pq = cls.triple
    deficit = cls.deficit
    return [
        f"Res(2,p)={res_2p} Res(2,q)={res_2q} Res(p,q)={res_pq}",
        f"case {cls.case_id}: L = {cls.case_formula}",
        f"epsilon={_fraction(deficit.epsilon)} kappa={_fraction(deficit.kappa)} eta={_fraction(deficit.eta)}",
    ]


def describe_report(report: PairReport) -> str:
    def pick(bucket):
        values = [v for v in bucket.values() if v is not None]
        return str(values[0]) if values else "-"

    line = (
        f"{report.status} p={report.p} q={report.q} g={report.g} "
        f"L(p,q)={pick(report.forward)} L(q,p)={pick(report.backward)}"
    )
    if report.skipped:
        line += f" SKIP {','.join(report.skipped)} (field degree above limit)"
    if report.detail:
        line += f" [{report.detail}]"
    return line
