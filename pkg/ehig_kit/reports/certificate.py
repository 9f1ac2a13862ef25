"""Recognition certificates and hypergraph hitting results"""

from pydantic import BaseModel, Field

from ..canonical.stretched import StretchedModel
from ..core.types import OutputFormat, Verdict
from ..ehig.recognizer import RecognitionCertificate
from ..ehig.witness import ForbiddenWitness
from ..hyperkit.solvers import MembershipResult
from .base import BaseReport, ReportData


class IntervalDocument(BaseModel):
    id: str = Field(..., description="Interval id")
    left: int = Field(..., description="Left endpoint")
    right: int = Field(..., description="Right endpoint")


class CanonicalDocument(BaseModel):
    """Canonical model in machine-readable form"""

    n: int = Field(..., description="Number of points")
    intervals: list[IntervalDocument] = Field(default_factory=list)
    zero_points: list[int] = Field(default_factory=list)
    separators: list[int] = Field(default_factory=list)
    vertex_map: dict[str, str] = Field(
        default_factory=dict, description="Vertex to interval id"
    )

    @classmethod
    def from_model(cls, model: StretchedModel) -> "CanonicalDocument":
        return cls(
            n=model.n,
            intervals=[
                IntervalDocument(id=i.id, left=i.left, right=i.right)
                for i in model.hypergraph.intervals
            ],
            zero_points=list(model.zero_points),
            separators=list(model.separators),
            vertex_map=dict(sorted(model.vertex_map.items())),
        )


class CertificateDocument(BaseModel):
    """JSON shape of a recognition certificate"""

    verdict: str = Field(..., description="ehig or not-ehig")
    hitting: list[int] | None = Field(None, description="Exact hitting points")
    partition: list[list[str]] | None = Field(
        None, description="Vertex block of each hitting point"
    )
    witness_path: list[str] | None = Field(None, description="Induced path")
    witness_independent: list[str] | None = Field(
        None, description="Independent neighbours of the path"
    )
    witness_strategy: str | None = Field(None, description="How the witness was found")
    model: CanonicalDocument = Field(..., description="Canonical model of the reduced graph")
    merged_twins: dict[str, str] = Field(
        default_factory=dict, description="Removed twin to kept representative"
    )
    mmsc_k: int = Field(..., description="Minimum membership of the canonical model")
    reason: str | None = Field(None, description="Why a part of the certificate is absent")


def witness_lines(witness: ForbiddenWitness) -> list[str]:
    return [
        f"witness-path {' '.join(witness.path)}",
        f"witness-indep {' '.join(witness.independents)}",
    ]


class CertificateReport(BaseReport):
    """``verdict`` line followed by hit lines or witness lines"""

    def generate(self, subject: RecognitionCertificate) -> ReportData:
        certificate = subject
        document = CertificateDocument(
            verdict=certificate.verdict.value,
            model=CanonicalDocument.from_model(certificate.model),
            merged_twins=dict(certificate.merged_twins),
            mmsc_k=certificate.mmsc_k,
        )
        lines = [f"verdict {certificate.verdict.value}"]

        if certificate.verdict is Verdict.EHIG:
            points = list(certificate.hitting or ())
            blocks = [sorted(block) for block in certificate.partition]
            document.hitting = points
            document.partition = blocks
            lines.extend(
                f"hit {point} : {' '.join(block)}"
                for point, block in zip(points, blocks, strict=True)
            )
        elif certificate.witness is not None:
            witness = certificate.witness
            document.witness_path = list(witness.path)
            document.witness_independent = list(witness.independents)
            document.witness_strategy = witness.strategy.value
            lines.extend(witness_lines(witness))
        else:
            document.reason = "no forbidden witness within the path cap"
            lines.append(f"# {document.reason}")

        lines.extend(
            f"# twin {twin} {kept}" for twin, kept in certificate.merged_twins.items()
        )
        return ReportData(
            title="Recognition certificate",
            payload=document.model_dump(),
            lines=lines,
            exit_code=0 if certificate.is_ehig else 1,
        )


class WitnessReport(BaseReport):
    """Result of a standalone witness search"""

    def __init__(
        self, path_cap: int, output_format: OutputFormat = OutputFormat.TEXT
    ):
        super().__init__(output_format)
        self.path_cap = path_cap

    def generate(self, subject: ForbiddenWitness | None) -> ReportData:
        if subject is None:
            reason = f"no forbidden witness with at most {self.path_cap} path vertices"
            return ReportData(
                title="Forbidden witness",
                payload={"found": False, "reason": reason},
                lines=["witness none", f"# {reason}"],
                exit_code=1,
            )
        return ReportData(
            title="Forbidden witness",
            payload={
                "found": True,
                "witness_path": list(subject.path),
                "witness_independent": list(subject.independents),
                "witness_strategy": subject.strategy.value,
            },
            lines=witness_lines(subject),
        )


class MembershipReport(BaseReport):
    """Minimum-membership or exact-hitting answer for a hypergraph"""

    def __init__(
        self, exact_only: bool = False, output_format: OutputFormat = OutputFormat.TEXT
    ):
        super().__init__(output_format)
        self.exact_only = exact_only

    def generate(self, subject: MembershipResult) -> ReportData:
        result = subject
        points = list(result.points)
        if self.exact_only:
            hittable = result.exactly_hittable
            lines = [f"exactly-hittable {'yes' if hittable else 'no'}"]
            if hittable:
                lines.append(f"points {' '.join(map(str, points))}".rstrip())
            payload = {"exactly_hittable": hittable, "points": points if hittable else None}
        else:
            lines = [f"k {result.k}", f"points {' '.join(map(str, points))}".rstrip()]
            payload = {"k": result.k, "points": points}
        return ReportData(
            title="Hitting result",
            payload=payload,
            lines=lines,
            exit_code=0 if result.exactly_hittable else 1,
        )
