import os
import re

from src.graphs.mixed_graph import EdgeKind, MixedGraph, pair_index, vertex_pairs


class GraphParseError(ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
_EDGE = re.compile(r"^(\d+)\s+([-<>])\s+(\d+)$")


def parse_graph(text):
    """Parse the graph text format: 'n=<count>' then one 'u - v', 'u > v' or 'u < v' per line."""
    n = None
    digits = None
    index = None
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            header = _HEADER.match(line)
            if not header or int(header.group(1)) < 1:
                raise GraphParseError(f"expected 'n=<positive integer>', got {line!r}", lineno)
            n = int(header.group(1))
            digits = [EdgeKind.NONE] * len(vertex_pairs(n))
            index = pair_index(n)
            continue
        edge = _EDGE.match(line)
        if not edge:
            raise GraphParseError(f"malformed edge line {line!r}", lineno)
        u, op, v = int(edge.group(1)), edge.group(2), int(edge.group(3))
        for w in (u, v):
            if not 1 <= w <= n:
                raise GraphParseError(f"vertex {w} out of range 1..{n}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        if op == "-":
            kind = EdgeKind.UNDIRECTED
        else:
            tail, head = (u, v) if op == ">" else (v, u)
            kind = EdgeKind.FORWARD if tail < head else EdgeKind.BACKWARD
        k = index[(min(u, v), max(u, v))]
        if digits[k] != EdgeKind.NONE:
            raise GraphParseError(f"duplicate pair {min(u, v)},{max(u, v)}", lineno)
        digits[k] = kind
    if n is None:
        raise GraphParseError("missing 'n=' header", lineno + 1)
    return MixedGraph(n, tuple(digits))


def serialize_graph(graph):
    lines = [f"n={graph.n}"]
    for (u, v), d in graph.edges.items():
        op = {EdgeKind.UNDIRECTED: "-", EdgeKind.FORWARD: ">", EdgeKind.BACKWARD: "<"}[d]
        lines.append(f"{u} {op} {v}")
    return "\n".join(lines) + "\n"


def read_graph(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise OSError(f"cannot read graph file {path}: {exc.strerror}") from exc
    return parse_graph(text)


def write_graph(path, graph):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(serialize_graph(graph))
    except OSError as exc:
        raise OSError(f"cannot write graph file {path}: {exc.strerror}") from exc
    return path


class GraphLoader:
    def __init__(self, data_dir="./data/graphs"):
        self.data_dir = data_dir

    def graph_path(self, name):
        return os.path.join(self.data_dir, f"{name}.graph")

    def load_graph(self, name):
        """Load a mixed graph from <data_dir>/<name>.graph"""
        return read_graph(self.graph_path(name))

    def save_graph(self, name, graph):
        return write_graph(self.graph_path(name), graph)

    def list_graphs(self):
        if not os.path.isdir(self.data_dir):
            return []
        return sorted(f[:-len(".graph")] for f in os.listdir(self.data_dir) if f.endswith(".graph"))
