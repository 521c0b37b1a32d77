"""
Edge-list text format.

First line ``n m``, then ``m`` lines ``u v`` with 0-based labels and ``u < v``.
"""
from qplanar.exceptions import GraphConstructionError
from qplanar.graphs.data import Graph


def write_edge_list(graph):
    """
    Render ``graph`` in the edge-list text format.
    """
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text):
    """
    Parse the edge-list text format.

    Blank lines and lines starting with ``#`` are ignored. Error messages give the
    1-based line number in ``text``.

    Raises:
        GraphConstructionError: If the header or an edge line is malformed, or the
          number of edges does not match the header.
    """
    rows = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise GraphConstructionError(kind="edge_list", message="missing 'n m' header")
    header_number, header = rows[0]
    try:
        n, m = (int(token) for token in header)
    except ValueError as exc:
        raise GraphConstructionError(
            kind="edge_list", message=f"line {header_number}: malformed header {' '.join(header)!r}"
        ) from exc
    edges = []
    for number, row in rows[1:]:
        if len(row) != 2:
            raise GraphConstructionError(kind="edge_list", message=f"line {number}: expected 'u v'")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError as exc:
            raise GraphConstructionError(kind="edge_list", message=f"line {number}: non-integer vertex") from exc
        edges.append((u, v))
    if len(edges) != m:
        raise GraphConstructionError(kind="edge_list", message=f"header announces {m} edges, found {len(edges)}")
    graph = Graph.from_edges(n, edges)
    if graph.m != m:
        raise GraphConstructionError(kind="edge_list", message="duplicate edges in list")
    return graph
