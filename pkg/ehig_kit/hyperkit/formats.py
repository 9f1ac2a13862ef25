"""Text format for interval hypergraphs

::

    ihg <n> <m>
    i <id> <l> <r>      (m lines)

``#`` starts a comment; blank lines are ignored.
"""

from collections.abc import Iterable

from ..core.errors import FormatError, HypergraphInputError
from ..core.textio import iter_records
from .hypergraph import Interval, IntervalHypergraph


def parse_hypergraph(text: str) -> IntervalHypergraph:
    """Parse the ``ihg`` text format"""
    header = None
    declared_m = 0
    intervals: list[Interval] = []
    for record in iter_records(text):
        if header is None:
            if record.tag != "ihg":
                raise FormatError(
                    f"expected 'ihg <n> <m>' header, got {record.tag!r}", record.line
                )
            record.expect_arity(3)
            header = record.int_at(1, "point count n")
            declared_m = record.int_at(2, "interval count m")
            continue
        if record.tag != "i":
            raise FormatError(f"unknown record {record.tag!r}", record.line)
        record.expect_arity(4)
        intervals.append(
            Interval(
                id=record.str_at(1, "interval id"),
                left=record.int_at(2, "left endpoint"),
                right=record.int_at(3, "right endpoint"),
            )
        )
    if header is None:
        raise FormatError("missing 'ihg <n> <m>' header")
    if len(intervals) != declared_m:
        raise FormatError(
            f"header declares {declared_m} intervals but {len(intervals)} were given"
        )
    try:
        return IntervalHypergraph.create(header, intervals)
    except HypergraphInputError as e:
        raise FormatError(str(e)) from e


def format_hypergraph(
    hypergraph: IntervalHypergraph, comments: Iterable[str] = ()
) -> str:
    """Serialize to the ``ihg`` text format, with optional trailing comments"""
    lines = [f"ihg {hypergraph.n} {hypergraph.m}"]
    lines.extend(
        f"i {interval.id} {interval.left} {interval.right}"
        for interval in hypergraph.intervals
    )
    lines.extend(f"# {comment}" for comment in comments)
    return "\n".join(lines) + "\n"
