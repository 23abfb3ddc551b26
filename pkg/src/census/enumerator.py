"""
Vectorised scan of the edge-code space of mixed graphs on n vertices.

A code's canonical form is the least code over all n! relabelings; a code is
self-converse exactly when its canonical form equals that of its converse.
"""

import sys

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from src.graphs.isomorphism import relabel_tables
from src.graphs.mixed_graph import code_count, vertex_pairs

CHUNK_SIZE = 2 ** 15


def _weights(n):
    size = len(vertex_pairs(n))
    return 4 ** np.arange(size - 1, -1, -1, dtype=np.int64)


def decode_digits(n, codes):
    """(len(codes), C(n,2)) array of pair digits, first pair most significant."""
    size = len(vertex_pairs(n))
    shifts = 2 * np.arange(size - 1, -1, -1, dtype=np.int64)
    return (np.asarray(codes, dtype=np.int64)[:, None] >> shifts) & 3


def _flip(digits):
    return np.where(digits >= 2, 5 - digits, digits)


def _min_code(n, digits):
    _, targets, flips = relabel_tables(n)
    weights = _weights(n)
    arcs = digits >= 2
    flipped = _flip(digits)
    best = None
    for target, flip in zip(targets, flips):
        moved = np.where(flip & arcs, flipped, digits)
        code = moved @ weights[target]
        best = code if best is None else np.minimum(best, code)
    return best


def canonical_codes(n, codes):
    """Least relabeled code for each code."""
    codes = np.asarray(codes, dtype=np.int64)
    if codes.size == 0:
        return codes
    return _min_code(n, decode_digits(n, codes))


def scan_range(n, start, stop):
    """Sorted distinct canonical codes of the self-converse graphs with code in [start, stop)."""
    digits = decode_digits(n, np.arange(start, stop, dtype=np.int64))
    canon = _min_code(n, digits)
    canon_converse = _min_code(n, _flip(digits))
    return np.unique(canon[canon == canon_converse])


def code_ranges(n, chunk_size=CHUNK_SIZE):
    total = code_count(n)
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def scan_self_converse(n, jobs=1, progress=False, chunk_size=CHUNK_SIZE):
    """Canonical codes of all self-converse isomorphism classes on n vertices, ascending."""
    ranges = code_ranges(n, chunk_size)
    tasks = tqdm(ranges, desc=f"scan n={n}", file=sys.stderr, disable=not progress)
    parts = Parallel(n_jobs=jobs)(delayed(scan_range)(n, start, stop) for start, stop in tasks)
    if not parts:
        return []
    return [int(c) for c in np.unique(np.concatenate(parts))]


def codes_with_counts(n, undirected, arcs, chunk_size=CHUNK_SIZE):
    """All codes whose graphs have exactly the given numbers of undirected edges and arcs."""
    found = []
    for start, stop in code_ranges(n, chunk_size):
        codes = np.arange(start, stop, dtype=np.int64)
        digits = decode_digits(n, codes)
        mask = ((digits == 1).sum(axis=1) == undirected) & ((digits >= 2).sum(axis=1) == arcs)
        found.append(codes[mask])
    return np.concatenate(found) if found else np.zeros(0, dtype=np.int64)
