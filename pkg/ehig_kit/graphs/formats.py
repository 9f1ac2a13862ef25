"""Text format for simple graphs

::

    graph <n> <m>
    v <label>           (optional, declares isolated vertices)
    e <u> <v>           (m lines)

``#`` starts a comment; blank lines are ignored.
"""

from ..core.errors import FormatError
from ..core.textio import iter_records
from .graph import Graph, build_graph


def parse_graph(text: str) -> Graph:
    """Parse the ``graph`` text format"""
    header: tuple[int, int] | None = None
    labels: list[str] = []
    edges: list[tuple[str, str]] = []
    seen: set[frozenset[str]] = set()
    for record in iter_records(text):
        if header is None:
            if record.tag != "graph":
                raise FormatError(
                    f"expected 'graph <n> <m>' header, got {record.tag!r}",
                    record.line,
                )
            record.expect_arity(3)
            header = (
                record.int_at(1, "vertex count n"),
                record.int_at(2, "edge count m"),
            )
            continue
        if record.tag == "v":
            record.expect_arity(2)
            labels.append(record.str_at(1, "vertex label"))
        elif record.tag == "e":
            record.expect_arity(3)
            u = record.str_at(1, "edge endpoint")
            v = record.str_at(2, "edge endpoint")
            if u == v:
                raise FormatError(f"loop on vertex {u!r}", record.line, record.columns[2])
            key = frozenset((u, v))
            if key in seen:
                raise FormatError(f"repeated edge {u}-{v}", record.line)
            seen.add(key)
            edges.append((u, v))
        else:
            raise FormatError(f"unknown record {record.tag!r}", record.line)

    if header is None:
        raise FormatError("missing 'graph <n> <m>' header")
    graph = build_graph(edges, labels=labels)
    n, m = header
    if graph.n != n:
        raise FormatError(f"header declares {n} vertices but {graph.n} were found")
    if graph.edge_count != m:
        raise FormatError(f"header declares {m} edges but {graph.edge_count} were given")
    return graph


def format_graph(graph: Graph) -> str:
    """Serialize with every vertex declared, then the sorted edge list"""
    lines = [f"graph {graph.n} {graph.edge_count}"]
    lines.extend(f"v {vertex}" for vertex in graph.vertices)
    lines.extend(f"e {u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"
