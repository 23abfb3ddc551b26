from functools import lru_cache

import hypothesis.strategies as st

from src.algebra.gaussint import GaussInt
from src.algebra.matrix import GMatrix, det
from src.census.enumerator import scan_self_converse
from src.graphs.mixed_graph import MixedGraph, Permutation, code_count, relabel
from src.spectra.walk import walk_matrix


def gauss_ints(bound=10, nonzero=False):
    values = st.builds(GaussInt, st.integers(-bound, bound), st.integers(-bound, bound))
    return values.filter(bool) if nonzero else values


@st.composite
def gmatrices(draw, min_n=1, max_n=4, bound=7):
    n = draw(st.integers(min_n, max_n))
    return GMatrix(n, n, draw(st.lists(gauss_ints(bound), min_size=n * n, max_size=n * n)))


@st.composite
def mixed_graphs(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    return MixedGraph.from_code(n, draw(st.integers(0, code_count(n) - 1)))


@st.composite
def permutations_of(draw, n):
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@lru_cache(maxsize=None)
def self_converse_classes(max_n=4):
    return [MixedGraph.from_code(n, code) for n in range(2, max_n + 1)
            for code in scan_self_converse(n)]


@st.composite
def self_converse_graphs(draw, max_n=4):
    """A self-converse class representative, relabeled at random."""
    graph = draw(st.sampled_from(self_converse_classes(max_n)))
    return relabel(graph, draw(permutations_of(graph.n)))


@st.composite
def nonsingular_self_converse_graphs(draw, max_n=4):
    """A self-converse class representative whose walk matrix is invertible, relabeled at random."""
    graph = draw(st.sampled_from([g for g in self_converse_classes(max_n)
                                  if det(walk_matrix(g))]))
    return relabel(graph, draw(permutations_of(graph.n)))
