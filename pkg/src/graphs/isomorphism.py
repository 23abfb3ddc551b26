"""
Isomorphism, self-converse testing and canonical codes for small mixed graphs.

sigma = isomorphic(G, H) satisfies A(G)[sigma(u), sigma(v)] = A(H)[u, v], i.e.
P^-1 A(G) P = A(H) for P = sigma.matrix().
"""

from functools import lru_cache
from itertools import permutations

import numpy as np

from src.graphs.mixed_graph import (
    EdgeKind, MixedGraph, Permutation, converse, pair_index, vertex_pairs,
)

MAX_SEARCH_ORDER = 9


class SearchBoundError(ValueError):
    pass


def _check_bound(n, bound):
    if n > bound:
        raise SearchBoundError(f"n={n} exceeds the search bound {bound}")


@lru_cache(maxsize=None)
def relabel_tables(n):
    """For every permutation of 1..n: where each pair digit lands and whether it flips.

    Returns (images, targets, flips): images is the list of permutation tuples,
    targets[p, k] is the new pair index of pair k, flips[p, k] is True when the pair's
    orientation reverses (arc digits 2 and 3 swap).
    """
    pairs = vertex_pairs(n)
    index = pair_index(n)
    images = list(permutations(range(1, n + 1)))
    targets = np.zeros((len(images), len(pairs)), dtype=np.int64)
    flips = np.zeros((len(images), len(pairs)), dtype=bool)
    for p, image in enumerate(images):
        for k, (u, v) in enumerate(pairs):
            a, b = image[u - 1], image[v - 1]
            targets[p, k] = index[(min(a, b), max(a, b))]
            flips[p, k] = a > b
    return images, targets, flips


def _edge_counts(graph):
    undirected = graph.digits.count(EdgeKind.UNDIRECTED)
    arcs = graph.digits.count(EdgeKind.FORWARD) + graph.digits.count(EdgeKind.BACKWARD)
    return undirected, arcs


def _kind_table(graph):
    n = graph.n
    return [[graph.kind(u, v) for v in range(1, n + 1)] for u in range(1, n + 1)]


def isomorphic(g, h, bound=MAX_SEARCH_ORDER):
    """A Permutation sigma with A(G)[sigma(u), sigma(v)] = A(H)[u, v], or None."""
    if g.n != h.n:
        raise ValueError(f"cannot compare graphs on {g.n} and {h.n} vertices")
    _check_bound(g.n, bound)
    if _edge_counts(g) != _edge_counts(h):
        return None
    n = g.n
    kg, kh = _kind_table(g), _kind_table(h)
    profile_g = [g.vertex_profile(u) for u in range(1, n + 1)]
    profile_h = [h.vertex_profile(u) for u in range(1, n + 1)]
    if sorted(profile_g) != sorted(profile_h):
        return None

    sigma = [0] * n
    used = [False] * n

    def extend(u):
        if u == n:
            return True
        for x in range(n):
            if used[x] or profile_g[x] != profile_h[u]:
                continue
            if any(kg[x][sigma[w]] != kh[u][w] for w in range(u)):
                continue
            sigma[u] = x
            used[x] = True
            if extend(u + 1):
                return True
            used[x] = False
        return False

    if not extend(0):
        return None
    return Permutation(tuple(x + 1 for x in sigma))


def is_self_converse(graph, bound=MAX_SEARCH_ORDER):
    """sigma with P^-1 A(G) P = A(G)^T, or None when G is not self-converse."""
    return isomorphic(graph, converse(graph), bound=bound)


def min_relabeled_code(graph, bound=MAX_SEARCH_ORDER):
    """Least integer code over all n! relabelings of G."""
    _check_bound(graph.n, bound)
    if graph.n == 1:
        return 0
    _, targets, flips = relabel_tables(graph.n)
    digits = np.array([int(d) for d in graph.digits], dtype=np.int64)
    size = len(digits)
    arcs = digits >= EdgeKind.FORWARD
    weights = 4 ** np.arange(size - 1, -1, -1, dtype=object)
    best = None
    for target, flip in zip(targets, flips):
        moved = np.where(flip & arcs, 5 - digits, digits)
        word = np.zeros(size, dtype=np.int64)
        word[target] = moved
        code = int(np.dot(word.astype(object), weights))
        if best is None or code < best:
            best = code
    return best


def code_to_bytes(n, code):
    size = len(vertex_pairs(n))
    return bytes([n]) + int(code).to_bytes(max(1, (2 * size + 7) // 8), "big")


def canonical_code(graph, bound=MAX_SEARCH_ORDER):
    """Byte string equal for two graphs exactly when they are isomorphic."""
    return code_to_bytes(graph.n, min_relabeled_code(graph, bound=bound))


def graph_from_canonical(code):
    """Inverse of canonical_code up to isomorphism: the minimal-code representative."""
    n = code[0]
    return MixedGraph.from_code(n, int.from_bytes(code[1:], "big"))
