"""Edge-list and graph6 input, edge-list output.

Edge-list format: a header line ``n m`` followed by ``m`` lines ``u v``
(0-indexed). Repeated lines are parallel edges and ``u u`` is a loop. A file
may hold several graphs back to back; blank lines and ``#`` comments are
ignored.
"""

from __future__ import annotations

from .graph import GraphError, Multigraph


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_edge_list(text: str) -> list[Multigraph]:
    rows: list[tuple[int, list[str]]] = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((i, line.split()))
    graphs = []
    k = 0
    while k < len(rows):
        lineno, head = rows[k]
        if len(head) != 2:
            raise ParseError("expected header 'n m'", lineno)
        try:
            n, m = int(head[0]), int(head[1])
        except ValueError:
            raise ParseError("header must hold two integers", lineno) from None
        if n < 0 or m < 0:
            raise ParseError("negative size in header", lineno)
        pairs = []
        for j in range(m):
            if k + 1 + j >= len(rows):
                raise ParseError(f"expected {m} edges, found {j}", lineno)
            eline, parts = rows[k + 1 + j]
            if len(parts) != 2:
                raise ParseError("expected edge 'u v'", eline)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("edge endpoints must be integers", eline) from None
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"endpoint out of range [0, {n})", eline)
            pairs.append((u, v))
        graphs.append(Multigraph.from_edges(n, pairs))
        k += 1 + m
    return graphs


def format_edge_list(G: Multigraph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v, _ in sorted(G.edges, key=lambda t: t[2])]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> list[Multigraph]:
    """Simple graphs from graph6 lines (one per line)."""
    import networkx as nx

    graphs = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        try:
            H = nx.from_graph6_bytes(line.encode("ascii"))
        except (ValueError, nx.NetworkXError) as exc:
            raise ParseError(f"bad graph6 data: {exc}", i) from None
        graphs.append(from_networkx(H))
    return graphs


def from_networkx(H) -> Multigraph:
    nodes = sorted(H.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Multigraph.from_edges(len(nodes), sorted((pos[u], pos[v]) for u, v in H.edges()))


def read_graphs(path: str) -> list[Multigraph]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith((".g6", ".graph6")):
        return parse_graph6(text)
    return parse_edge_list(text)
