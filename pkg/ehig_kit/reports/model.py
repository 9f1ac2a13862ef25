"""Model dumps: canonical stretched models and Observation-1 models"""

from ..canonical.stretched import StretchedModel, dump_model
from ..models.set_system import SetSystemModel, dump_set_system
from ..models.subtree import SubtreeModel, dump_subtree_model
from .base import BaseReport, ReportData
from .certificate import CanonicalDocument


class ModelDumpReport(BaseReport):
    """Text dumps in the documented formats, or their JSON equivalents"""

    def generate(
        self, subject: StretchedModel | SetSystemModel | SubtreeModel
    ) -> ReportData:
        if isinstance(subject, StretchedModel):
            return ReportData(
                title="Canonical model",
                payload=CanonicalDocument.from_model(subject).model_dump(),
                lines=dump_model(subject).splitlines(),
            )
        if isinstance(subject, SetSystemModel):
            return ReportData(
                title="Set-system model",
                payload={
                    "kind": "harary",
                    "universe": [str(e) for e in subject.universe],
                    "sets": {
                        v: [str(e) for e in sorted(subject.sets[v])]
                        for v in sorted(subject.sets)
                    },
                    "hitting": [str(e) for e in subject.hitting],
                },
                lines=dump_set_system(subject).splitlines(),
            )
        return ReportData(
            title="Subtree model",
            payload={
                "kind": "subtree",
                "nodes": list(subject.nodes),
                "edges": [list(edge) for edge in subject.edges],
                "sets": {v: sorted(s) for v, s in sorted(subject.subtrees.items())},
                "hitting": list(subject.leaves),
            },
            lines=dump_subtree_model(subject).splitlines(),
        )
