"""
Mixed graphs on vertices 1..n: every unordered pair carries no edge, an undirected
edge, or one arc.

The edge map is stored as a digit word over the pairs in lexicographic order:
0 none, 1 undirected, 2 arc u -> v, 3 arc v -> u (for the pair u < v). The integer
code reads that word in base 4 with the first pair most significant.
"""

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from itertools import combinations

import networkx as nx

from src.algebra.gaussint import ONE, ZERO, GaussInt
from src.algebra.matrix import GMatrix


class EdgeKind(IntEnum):
    NONE = 0
    UNDIRECTED = 1
    FORWARD = 2   # u -> v for the pair u < v
    BACKWARD = 3  # v -> u for the pair u < v


REVERSED = {EdgeKind.NONE: EdgeKind.NONE, EdgeKind.UNDIRECTED: EdgeKind.UNDIRECTED,
            EdgeKind.FORWARD: EdgeKind.BACKWARD, EdgeKind.BACKWARD: EdgeKind.FORWARD}

_ENTRY = {
    EdgeKind.NONE: (ZERO, ZERO),
    EdgeKind.UNDIRECTED: (ONE, ONE),
    EdgeKind.FORWARD: (GaussInt(0, 1), GaussInt(0, -1)),
    EdgeKind.BACKWARD: (GaussInt(0, -1), GaussInt(0, 1)),
}


@lru_cache(maxsize=None)
def vertex_pairs(n):
    """Pairs (u, v), 1 <= u < v <= n, in lexicographic order."""
    return tuple(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def pair_index(n):
    return {pair: k for k, pair in enumerate(vertex_pairs(n))}


def code_count(n):
    return 4 ** len(vertex_pairs(n))


@dataclass(frozen=True)
class MixedGraph:
    n: int
    digits: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"a mixed graph needs at least one vertex, got n={self.n}")
        if len(self.digits) != len(vertex_pairs(self.n)):
            raise ValueError(f"n={self.n} needs {len(vertex_pairs(self.n))} pair digits, "
                             f"got {len(self.digits)}")
        object.__setattr__(self, "digits", tuple(EdgeKind(d) for d in self.digits))

    @classmethod
    def empty(cls, n):
        return cls(n, (EdgeKind.NONE,) * len(vertex_pairs(n)))

    @classmethod
    def from_code(cls, n, code):
        size = len(vertex_pairs(n))
        if not 0 <= code < 4 ** size:
            raise ValueError(f"code {code} out of range for n={n}")
        digits = []
        for _ in range(size):
            code, d = divmod(code, 4)
            digits.append(d)
        return cls(n, tuple(reversed(digits)))

    @classmethod
    def from_edges(cls, n, arcs=(), undirected=()):
        """Build from arcs (u, v) meaning u -> v and undirected pairs (u, v)."""
        index = pair_index(n)
        digits = [EdgeKind.NONE] * len(index)

        def place(u, v, kind):
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"vertex out of range in ({u}, {v}) for n={n}")
            k = index[(min(u, v), max(u, v))]
            if digits[k] != EdgeKind.NONE:
                raise ValueError(f"duplicate pair ({u}, {v})")
            digits[k] = kind

        for u, v in undirected:
            place(u, v, EdgeKind.UNDIRECTED)
        for u, v in arcs:
            place(u, v, EdgeKind.FORWARD if u < v else EdgeKind.BACKWARD)
        return cls(n, tuple(digits))

    @property
    def code(self):
        value = 0
        for d in self.digits:
            value = value * 4 + int(d)
        return value

    @property
    def edges(self):
        """Map from pair (u, v), u < v, to its EdgeKind; absent pairs are omitted."""
        return {pair: d for pair, d in zip(vertex_pairs(self.n), self.digits) if d}

    def kind(self, u, v):
        """Relation of the pair seen from u: FORWARD means u -> v."""
        if u == v:
            return EdgeKind.NONE
        d = self.digits[pair_index(self.n)[(min(u, v), max(u, v))]]
        return d if u < v else REVERSED[d]

    def arcs(self):
        return [(u, v) if d == EdgeKind.FORWARD else (v, u)
                for (u, v), d in self.edges.items() if d in (EdgeKind.FORWARD, EdgeKind.BACKWARD)]

    def undirected_edges(self):
        return [pair for pair, d in self.edges.items() if d == EdgeKind.UNDIRECTED]

    def is_undirected(self):
        return all(d in (EdgeKind.NONE, EdgeKind.UNDIRECTED) for d in self.digits)

    def vertex_profile(self, u):
        """(undirected degree, out-degree, in-degree) of vertex u."""
        kinds = [self.kind(u, v) for v in range(1, self.n + 1) if v != u]
        return (kinds.count(EdgeKind.UNDIRECTED), kinds.count(EdgeKind.FORWARD),
                kinds.count(EdgeKind.BACKWARD))

    def __str__(self):
        parts = [f"{u}-{v}" if d == EdgeKind.UNDIRECTED else
                 (f"{u}>{v}" if d == EdgeKind.FORWARD else f"{v}>{u}")
                 for (u, v), d in self.edges.items()]
        return f"MixedGraph(n={self.n}; {', '.join(parts) or 'no edges'})"


@dataclass(frozen=True)
class Permutation:
    """A bijection of 1..n; image[u - 1] is the image of u."""
    image: tuple

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self):
        return len(self.image)

    def __call__(self, u):
        return self.image[u - 1]

    def inverse(self):
        inv = [0] * self.n
        for u, v in enumerate(self.image, start=1):
            inv[v - 1] = u
        return Permutation(tuple(inv))

    def is_identity(self):
        return self.image == tuple(range(1, self.n + 1))

    def matrix(self):
        """P with P[sigma(u), u] = 1, so (P^-1 A P)[u, v] = A[sigma(u), sigma(v)]."""
        n = self.n
        entries = [ZERO] * (n * n)
        for u in range(1, n + 1):
            entries[(self(u) - 1) * n + (u - 1)] = ONE
        return GMatrix(n, n, entries)

    def cycles(self):
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cycle, u = [], start
            while u not in seen:
                seen.add(u)
                cycle.append(u)
                u = self(u)
            out.append(tuple(cycle))
        return out

    def __str__(self):
        cycles = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) or "id"


def herm_adjacency(graph):
    """A(G): 1 on undirected edges, i on u -> v, -i on u <- v."""
    n = graph.n
    entries = [ZERO] * (n * n)
    for (u, v), d in zip(vertex_pairs(n), graph.digits):
        forward, backward = _ENTRY[d]
        entries[(u - 1) * n + (v - 1)] = forward
        entries[(v - 1) * n + (u - 1)] = backward
    return GMatrix(n, n, entries)


def converse(graph):
    """Reverse every arc; A(converse(G)) = A(G)^T."""
    return MixedGraph(graph.n, tuple(REVERSED[d] for d in graph.digits))


def complement_like_matrix(graph):
    """J - I - A(G)."""
    n = graph.n
    a = herm_adjacency(graph)
    return GMatrix(n, n, [(ZERO if i == j else ONE) - a[i, j] for i in range(n) for j in range(n)])


def relabel(graph, perm):
    """pi . G, the graph with A(pi . G)[pi(u), pi(v)] = A(G)[u, v]."""
    if perm.n != graph.n:
        raise ValueError(f"permutation of {perm.n} points applied to a graph on {graph.n}")
    index = pair_index(graph.n)
    digits = [EdgeKind.NONE] * len(index)
    for (u, v), d in zip(vertex_pairs(graph.n), graph.digits):
        a, b = perm(u), perm(v)
        if a < b:
            digits[index[(a, b)]] = d
        else:
            digits[index[(b, a)]] = REVERSED[d]
    return MixedGraph(graph.n, tuple(digits))


def to_networkx(graph):
    """nx.DiGraph on 1..n; undirected edges become two opposite edges with kind='undirected'."""
    g = nx.DiGraph()
    g.add_nodes_from(range(1, graph.n + 1))
    for u, v in graph.undirected_edges():
        g.add_edge(u, v, kind="undirected")
        g.add_edge(v, u, kind="undirected")
    g.add_edges_from(graph.arcs(), kind="arc")
    return g
