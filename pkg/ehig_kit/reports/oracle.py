"""Summary of a differential oracle run"""

from dataclasses import asdict

from ..generators.differential import OracleRun
from .base import BaseReport, ReportData


class OracleReport(BaseReport):
    def generate(self, subject: OracleRun) -> ReportData:
        run = subject
        lines = [
            f"oracle {run.kind} cases={run.cases} seed={run.seed}",
            f"agree {run.agreements}",
            f"disagree {len(run.disagreements)}",
            f"skipped {run.skipped}",
        ]
        if run.unverified:
            lines.append(f"unverified {run.unverified}")
        lines.extend(
            f"case {case.index} seed={case.seed} size={case.size}: "
            f"polynomial={case.polynomial} oracle={case.oracle}"
            for case in run.disagreements
        )
        payload = {
            "kind": run.kind,
            "cases": run.cases,
            "seed": run.seed,
            "agreements": run.agreements,
            "skipped": run.skipped,
            "unverified": run.unverified,
            "disagreements": [asdict(case) for case in run.disagreements],
        }
        return ReportData(
            title="Oracle run",
            payload=payload,
            lines=lines,
            exit_code=0 if run.passed else 1,
        )
