"""
Census of self-converse mixed graphs: isomorphism classes, generalized-spectrum buckets,
DGS verdicts, the summary row per order n, exhaustive level checks and result export.
"""

import json
import os
import sys
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

import pandas as pd
from tqdm import tqdm

from src.algebra.gaussint import ONE, ONE_PLUS_I, format_gauss, is_square_free, norm
from src.algebra.matrix import IntPolynomial, det
from src.algebra.smith import snf
from src.census.enumerator import canonical_codes, codes_with_counts, scan_self_converse
from src.errors import InvariantViolation
from src.graphs.isomorphism import (
    code_to_bytes, graph_from_canonical, is_self_converse, isomorphic,
)
from src.graphs.mixed_graph import MixedGraph, vertex_pairs
from src.spectra.unitary import decompose_level_two, has_level_shape, transfer_unitary
from src.spectra.walk import (
    GenSpectrum, generalized_spectrum, reduce_determinant, walk_matrix,
)

MIN_ORDER = 2
MAX_ORDER = 6
LONG_ORDER = 6

# det(xI - A) and det(xI - (J - I - A)) of the self-converse graph in the 5-vertex example
EXAMPLE_SPECTRUM = GenSpectrum(
    IntPolynomial((4, 7, -4, -7, 0, 1)),
    IntPolynomial((4, 5, -16, -13, 0, 1)),
)
EXAMPLE_DET_NORM = 68 ** 2

CSV_COLUMNS = ["n", "classes", "dgs_fraction", "condition_fraction"]


class CensusRangeError(ValueError):
    pass


def rounded_fraction(count, total):
    """count/total rounded half-up to 3 decimals."""
    return (Decimal(count) / Decimal(total)).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP)


@dataclass(frozen=True)
class CensusRow:
    n: int
    class_count: int
    dgs_fraction: Decimal
    condition_fraction: Decimal
    dgs_count: int
    condition_count: int

    def csv_line(self):
        return f"{self.n},{self.class_count},{self.dgs_fraction},{self.condition_fraction}"

    def to_dict(self):
        return {
            "n": self.n,
            "classes": self.class_count,
            "dgs_fraction": str(self.dgs_fraction),
            "condition_fraction": str(self.condition_fraction),
            "dgs_count": self.dgs_count,
            "condition_count": self.condition_count,
        }


@dataclass(frozen=True)
class SpectrumBucket:
    """Pairwise R-cospectral, pairwise non-isomorphic class representatives."""
    spectrum: GenSpectrum
    members: tuple

    @property
    def is_singleton(self):
        return len(self.members) == 1

    def graphs(self):
        return [graph_from_canonical(code) for code in self.members]

    def to_dict(self):
        return {**self.spectrum.to_dict(), "members": [code.hex() for code in self.members]}

    @classmethod
    def from_dict(cls, data):
        return cls(GenSpectrum.from_dict(data), tuple(bytes.fromhex(m) for m in data["members"]))


@dataclass
class ClassProfile:
    graph: MixedGraph
    spectrum: GenSpectrum
    det_w: object
    condition: bool


@dataclass
class MainTheoremReport:
    n: int
    pairs_checked: int = 0
    singular_pairs: int = 0
    decomposed: int = 0
    level_counts: dict = field(default_factory=dict)
    condition_level_counts: dict = field(default_factory=dict)
    undirected_level_counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    def record(self, counts, ell):
        key = format_gauss(ell)
        counts[key] = counts.get(key, 0) + 1

    def to_dict(self):
        return {
            "n": self.n,
            "pairs_checked": self.pairs_checked,
            "singular_pairs": self.singular_pairs,
            "decomposed_level_two": self.decomposed,
            "levels": dict(sorted(self.level_counts.items())),
            "condition_levels": dict(sorted(self.condition_level_counts.items())),
            "undirected_levels": dict(sorted(self.undirected_level_counts.items())),
            "violations": self.violations,
        }


@dataclass
class ConjectureReport:
    n: int
    condition_count: int
    counterexamples: list

    def to_dict(self):
        return {"n": self.n, "condition_count": self.condition_count,
                "counterexamples": self.counterexamples}


class Census:
    def __init__(self,
                 n,
                 jobs=1,
                 allow_long=False,
                 progress=False,
                 results_dir="./results/census"):
        if not MIN_ORDER <= n <= MAX_ORDER:
            raise CensusRangeError(f"census order must lie in {MIN_ORDER}..{MAX_ORDER}, got {n}")
        if n >= LONG_ORDER and not allow_long:
            raise CensusRangeError(f"census n={n} is a long-running job; pass allow_long=True")
        if jobs < 1:
            raise ValueError(f"jobs must be positive, got {jobs}")
        self.n = n
        self.jobs = jobs
        self.progress = progress
        self.results_dir = results_dir
        self._codes = None
        self._profiles = None
        self._buckets = None

    def _log(self, message):
        if self.progress:
            print(message, file=sys.stderr)

    @property
    def class_codes(self):
        """Least codes of the self-converse classes, ascending."""
        if self._codes is None:
            self._log(f"⏱️ Scanning {4 ** len(vertex_pairs(self.n))} codes for n={self.n}")
            self._codes = scan_self_converse(self.n, jobs=self.jobs, progress=self.progress)
            self._log(f"✅ {len(self._codes)} self-converse classes for n={self.n}")
        return self._codes

    def enumerate_self_converse(self):
        for code in self.class_codes:
            yield MixedGraph.from_code(self.n, code)

    @property
    def profiles(self):
        if self._profiles is None:
            profiles = {}
            codes = tqdm(self.class_codes, desc=f"spectra n={self.n}", file=sys.stderr,
                         disable=not self.progress)
            for code in codes:
                graph = MixedGraph.from_code(self.n, code)
                det_w = det(walk_matrix(graph))
                condition = bool(det_w) and is_square_free(reduce_determinant(det_w, self.n))
                profiles[code] = ClassProfile(graph, generalized_spectrum(graph), det_w, condition)
            self._profiles = profiles
        return self._profiles

    def spectrum_buckets(self):
        if self._buckets is None:
            grouped = {}
            for code, profile in self.profiles.items():
                grouped.setdefault(profile.spectrum, []).append(code)
            buckets = [SpectrumBucket(spectrum, tuple(code_to_bytes(self.n, c) for c in sorted(codes)))
                       for spectrum, codes in grouped.items()]
            self._buckets = sorted(buckets, key=lambda b: b.members[0])
        return self._buckets

    def _bucket_codes(self):
        for bucket in self.spectrum_buckets():
            yield [int.from_bytes(m[1:], "big") for m in bucket.members]

    def dgs_verdicts(self):
        """Canonical code -> True when no other self-converse class shares the spectrum."""
        verdicts = {}
        for bucket in self.spectrum_buckets():
            for member in bucket.members:
                verdicts[member] = bucket.is_singleton
        return dict(sorted(verdicts.items()))

    def table_row(self):
        verdicts = self.dgs_verdicts()
        total = len(verdicts)
        dgs_count = sum(verdicts.values())
        condition_count = sum(p.condition for p in self.profiles.values())
        return CensusRow(
            n=self.n,
            class_count=total,
            dgs_fraction=rounded_fraction(dgs_count, total),
            condition_fraction=rounded_fraction(condition_count, total),
            dgs_count=dgs_count,
            condition_count=condition_count,
        )

    def find_cospectral_mates(self):
        return [b for b in self.spectrum_buckets() if not b.is_singleton]

    def verify_main_theorem(self, strict=True):
        """Transfer unitaries for every ordered pair of co-bucketed classes.

        Levels must have the shape a or a(1+i) and divide the last elementary divisor
        of W(G); when G satisfies the condition the level is 1 or 1+i, and 1 if G is
        also undirected.
        """
        report = MainTheoremReport(self.n)
        profiles = self.profiles
        for codes in self._bucket_codes():
            for cg in codes:
                g = profiles[cg]
                wg = walk_matrix(g.graph)
                d_n = snf(wg).d_n if g.det_w else None
                for ch in codes:
                    h = profiles[ch]
                    report.pairs_checked += 1
                    wh = walk_matrix(h.graph)
                    if wg.adjoint() @ wg != wh.adjoint() @ wh:
                        report.violations.append(self._violation("walk Gram identity", cg, ch))
                        continue
                    if not g.det_w or not h.det_w:
                        if bool(g.det_w) != bool(h.det_w):
                            report.violations.append(self._violation("singular on one side", cg, ch))
                        report.singular_pairs += 1
                        continue
                    try:
                        tu = transfer_unitary(g.graph, h.graph)
                    except InvariantViolation as exc:
                        report.violations.append(self._violation(str(exc), cg, ch))
                        continue
                    ell = tu.level
                    report.record(report.level_counts, ell)
                    if not has_level_shape(ell):
                        report.violations.append(self._violation(f"level {ell} has wrong shape", cg, ch))
                    if not ell.divides(d_n):
                        report.violations.append(self._violation(f"level {ell} does not divide d_n", cg, ch))
                    if ell == ONE_PLUS_I:
                        decompose_level_two(tu.u)
                        report.decomposed += 1
                    if ell == ONE and cg != ch:
                        report.violations.append(self._violation("permutation between classes", cg, ch))
                    if g.condition:
                        report.record(report.condition_level_counts, ell)
                        if ell not in (ONE, ONE_PLUS_I):
                            report.violations.append(self._violation(f"level {ell} outside {{1, 1+i}}", cg, ch))
                        if g.graph.is_undirected():
                            report.record(report.undirected_level_counts, ell)
                            if ell != ONE or isomorphic(g.graph, h.graph) is None:
                                report.violations.append(
                                    self._violation(f"undirected graph with level {ell}", cg, ch))
        if strict and report.violations:
            raise InvariantViolation(f"n={self.n}: {len(report.violations)} violations, "
                                     f"first: {report.violations[0]}")
        return report

    def _violation(self, what, cg, ch):
        return {"what": what, "g": code_to_bytes(self.n, cg).hex(), "h": code_to_bytes(self.n, ch).hex()}

    def verify_conjecture(self, strict=True):
        """Every class satisfying the determinant condition must sit in a singleton bucket."""
        verdicts = self.dgs_verdicts()
        condition_codes = [c for c, p in self.profiles.items() if p.condition]
        counterexamples = [code_to_bytes(self.n, c).hex() for c in condition_codes
                           if not verdicts[code_to_bytes(self.n, c)]]
        if strict and counterexamples:
            raise InvariantViolation(f"n={self.n}: condition holds but not DGS for {counterexamples}")
        return ConjectureReport(self.n, len(condition_codes), counterexamples)

    def save_results(self):
        """Write the summary row and the buckets under results_dir"""
        os.makedirs(self.results_dir, exist_ok=True)
        row_file = os.path.join(self.results_dir, f"table_row_n{self.n}.csv")
        bucket_file = os.path.join(self.results_dir, f"buckets_n{self.n}.json")
        export_csv([self.table_row()], row_file)
        export_json(self.spectrum_buckets(), bucket_file)
        return row_file, bucket_file


def enumerate_self_converse(n, **kwargs):
    return Census(n, **kwargs).enumerate_self_converse()


def spectrum_buckets(n, **kwargs):
    return Census(n, **kwargs).spectrum_buckets()


def dgs_verdicts(n, **kwargs):
    return Census(n, **kwargs).dgs_verdicts()


def table_row(n, **kwargs):
    return Census(n, **kwargs).table_row()


def verify_main_theorem(n, **kwargs):
    return Census(n, **kwargs).verify_main_theorem()


def verify_conjecture(n, **kwargs):
    return Census(n, **kwargs).verify_conjecture()


def find_cospectral_mates(n, **kwargs):
    return Census(n, **kwargs).find_cospectral_mates()


def edge_counts_for(spectrum, n):
    """(undirected, arcs) forced by the x^{n-2} coefficients of the two polynomials.

    For a Hermitian 0/1/+-i matrix minus that coefficient is the sum of |a_uv|^2 over pairs:
    the edge count for A, and non-edges + 2 * arcs for J - I - A.
    """
    edges = -spectrum.p_a.coefficients[n - 2]
    non_edges = len(vertex_pairs(n)) - edges
    arcs, rest = divmod(-spectrum.p_c.coefficients[n - 2] - non_edges, 2)
    if rest or arcs < 0 or arcs > edges:
        raise ValueError("polynomial pair is not the spectrum of a mixed graph")
    return edges - arcs, arcs


def classes_with_spectrum(spectrum, n):
    """Least codes of all isomorphism classes (self-converse or not) with the given spectrum."""
    undirected, arcs = edge_counts_for(spectrum, n)
    candidates = codes_with_counts(n, undirected, arcs)
    found = []
    for code in sorted(set(int(c) for c in canonical_codes(n, candidates))):
        graph = MixedGraph.from_code(n, code)
        if generalized_spectrum(graph) == spectrum:
            found.append(graph)
    return found


def find_example_pair(n=5, spectrum=EXAMPLE_SPECTRUM):
    """A self-converse G with |det W(G)| = 68 and a non-self-converse H, R-cospectral, non-isomorphic."""
    if n != 5:
        raise CensusRangeError(f"the example pair lives on 5 vertices, got n={n}")
    graphs = classes_with_spectrum(spectrum, n)
    self_converse = [g for g in graphs if is_self_converse(g) is not None]
    others = [g for g in graphs if is_self_converse(g) is None]
    for g in self_converse:
        if norm(det(walk_matrix(g))) != EXAMPLE_DET_NORM:
            continue
        for h in others:
            if isomorphic(g, h) is None:
                return g, h
    raise InvariantViolation("no R-cospectral pair matching the 5-vertex example was found")


def export_csv(rows, path):
    """Summary rows as CSV with columns n,classes,dgs_fraction,condition_fraction"""
    records = [{"n": r.n, "classes": r.class_count, "dgs_fraction": float(r.dgs_fraction),
                "condition_fraction": float(r.condition_fraction)}
               for r in sorted(rows, key=lambda r: r.n)]
    df = pd.DataFrame(records, columns=CSV_COLUMNS)
    directory = os.path.dirname(path)
    try:
        if directory:
            os.makedirs(directory, exist_ok=True)
        df.to_csv(path, index=False, float_format="%.3f")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc
    return df


def export_json(buckets, path):
    payload = {"buckets": [b.to_dict() for b in sorted(buckets, key=lambda b: b.members[0])]}
    directory = os.path.dirname(path)
    try:
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=2)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc
    return payload


def load_buckets_json(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            payload = json.load(f)
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from exc
    return [SpectrumBucket.from_dict(b) for b in payload["buckets"]]
