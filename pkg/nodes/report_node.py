# filename: nodes/report_node.py

import json

from pocketflow import Node
from app.schemas.models import CheckReport, McReport, RoundtripReport
import logging

logger = logging.getLogger(__name__)


def _verdict(ok: bool) -> str:
    return "pass" if ok else "FAIL"


def render_check(label: str, report: CheckReport) -> list[str]:
    lines = [f"{label}: {report.summary()}"]
    for v in report.violations:
        lines.append(f"  {v.tag} at {v.point}: lhs={v.lhs} rhs={v.rhs}")
    shown = {}
    for v in report.violations:
        shown[v.tag] = shown.get(v.tag, 0) + 1
    for tag, count in report.counts.items():
        if count > shown.get(tag, 0):
            lines.append(f"  {tag}: {count - shown.get(tag, 0)} more")
    return lines


def render_mc(report: McReport) -> list[str]:
    lines = [
        f"difference identity: {_verdict(report.difference_identity)}",
        f"graph criterion:     {_verdict(report.graph_criterion)}",
        f"Maurer-Cartan:       {_verdict(report.maurer_cartan)}",
    ]
    for index, value in report.residual:
        lines.append(f"  residual{index} = {value}")
    lines.append("verdicts agree" if report.agree else "VERDICTS DISAGREE")
    return lines


def render_roundtrip(label: str, report: RoundtripReport) -> list[str]:
    lines = [f"{label} ({report.kind}): {_verdict(report.ok)}"]
    for step in report.steps:
        mark = "ok" if step.ok else "FAIL"
        lines.append(f"  [{mark}] {step.name}" + (f": {step.detail}" if step.detail else ""))
    return lines


class ReportNode(Node):
    """Prints whatever reports the flow left in the shared store."""

    def prep(self, shared: dict):
        logger.info("ReportNode: Preparing...")
        return {
            "checks": shared.get("reports"),
            "mc": shared.get("mc_report"),
            "roundtrips": shared.get("roundtrip_reports"),
            "json": shared.get("json", False),
            "emit": shared.get("emit", True),
        }

    def exec(self, prep_res: dict) -> dict:
        logger.info("ReportNode: Executing...")
        if prep_res["json"]:
            payload = None
            if prep_res["checks"] is not None:
                payload = [{"path": label, "report": r.model_dump()} for label, r in prep_res["checks"]]
            elif prep_res["mc"] is not None:
                payload = prep_res["mc"].model_dump()
            elif prep_res["roundtrips"] is not None:
                payload = [{"path": label, "report": r.model_dump()} for label, r in prep_res["roundtrips"]]
            text = json.dumps(payload, indent=2)
        else:
            lines = []
            for label, r in prep_res["checks"] or []:
                lines.extend(render_check(label, r))
            if prep_res["mc"] is not None:
                lines.extend(render_mc(prep_res["mc"]))
            for label, r in prep_res["roundtrips"] or []:
                lines.extend(render_roundtrip(label, r))
            text = "\n".join(lines)
        if prep_res["emit"]:
            print(text)
        return {"status": "success", "text": text}

    def post(self, shared: dict, prep_res, exec_res: dict) -> str:
        logger.info("ReportNode: Post-processing...")
        shared["rendered"] = exec_res["text"]
        return None
