"""Timing and counting harnesses with cross-checked results.

Every run drives each algorithm over the same pattern plan.  The first
algorithm's positions become the baseline; any disagreement aborts with
:class:`~seqmatch.errors.CorrectnessMismatch`.  Timed cells repeat the
whole pattern set until at least ``min_cell_seconds`` of wall clock has
elapsed, report the fastest single pass (stable under scheduling
noise), and subtract the "dummy" baseline (the plan-driving loop with
no search in it), which also gets rows of its own.  Counted cells
replace timing with exact per-character operation counts, so their
reports are byte-for-byte reproducible.

Speeds are elements per microsecond: total search length (match
distance + pattern size, summed over the plan) / 1e6 / seconds.
"""

import time
from dataclasses import dataclass, field

from .counting import COUNT_FIELDS, OperationCounts, run_counted
from .errors import CorrectnessMismatch
from .schemes import default_scheme_for
from .search import ReusableSkipTable, resolve_algorithm

TSV_COLUMNS = ("corpus", "algorithm", "pattern_size", "total_elements",
               "seconds", "elements_per_us")
TSV_COUNT_COLUMNS = ("comparisons_per_char", "accesses_per_char",
                     "big_jumps_per_char", "other_cursor_ops_per_char",
                     "distance_ops_per_char")

DUMMY = "dummy"


@dataclass
class BenchRow:
    corpus: str
    algorithm: str
    pattern_size: int
    total_elements: int
    seconds: float
    elements_per_us: float
    per_char: "dict | None" = None


@dataclass
class BenchReport:
    rows: list = field(default_factory=list)
    counted: bool = False

    def to_tsv(self):
        """One header row plus one line per row; floats use repr so the
        speed invariant can be re-checked from the file."""
        columns = TSV_COLUMNS + (TSV_COUNT_COLUMNS if self.counted else ())
        lines = ["\t".join(columns)]
        for row in self.rows:
            cells = [row.corpus, row.algorithm, str(row.pattern_size),
                     str(row.total_elements), repr(row.seconds),
                     repr(row.elements_per_us)]
            if self.counted:
                per_char = row.per_char or {}
                cells.extend(repr(per_char.get(name, 0.0))
                             for name in COUNT_FIELDS)
            lines.append("\t".join(cells))
        return "\n".join(lines) + "\n"

    def write(self, path):
        with open(path, "w", encoding="utf-8", newline="\n") as out:
            out.write(self.to_tsv())

    def cell(self, algorithm, pattern_size):
        for row in self.rows:
            if row.algorithm == algorithm and row.pattern_size == pattern_size:
                return row
        raise KeyError((algorithm, pattern_size))


def _resolve_all(algorithms, hal_scheme):
    # shared so every "nhal" cell reuses one zero-filled table
    nhal_table = ReusableSkipTable()
    if isinstance(algorithms, dict):
        return list(algorithms.items())
    return [(name, resolve_algorithm(name, scheme=hal_scheme,
                                     nhal_table=nhal_table))
            for name in algorithms]


def _positions_and_total(fn, corpus, patterns, n, m):
    positions = [fn(corpus, p).position for p in patterns]
    total = sum((pos if pos is not None else n) + m for pos in positions)
    return positions, total


def _cross_check(name, positions, baseline, patterns):
    for i, (got, want) in enumerate(zip(positions, baseline)):
        if got != want:
            raise CorrectnessMismatch(
                f"algorithm {name!r} returned {got} for pattern #{i} "
                f"({patterns[i]!r}), baseline says {want}")


def run_bench(corpus, plan, algorithms, corpus_name="corpus",
              hal_scheme=None, min_cell_seconds=0.2, time_runs=True):
    """Timed report over ``plan``; see the module docstring.

    ``algorithms`` is a list of names or a dict name -> callable (the
    latter mainly for tests).  With ``time_runs`` false, the
    correctness pass still runs but seconds and speeds are reported as
    zero, which makes the output deterministic.
    """
    resolved = _resolve_all(algorithms, hal_scheme)
    n = len(corpus)
    report = BenchReport()
    clock = time.perf_counter
    for m in plan.sizes:
        patterns = plan.patterns[m]
        baseline = None
        base_seconds = 0.0
        if time_runs:
            base_seconds = _time_reps(lambda: _dummy_pass(patterns),
                                      clock, min_cell_seconds)
            report.rows.append(BenchRow(corpus_name, DUMMY, m, 0,
                                        base_seconds, 0.0))
        else:
            report.rows.append(BenchRow(corpus_name, DUMMY, m, 0, 0.0, 0.0))
        for name, fn in resolved:
            positions, total = _positions_and_total(fn, corpus, patterns, n, m)
            if baseline is None:
                baseline = positions
            else:
                _cross_check(name, positions, baseline, patterns)
            if time_runs:
                seconds = _time_reps(lambda: _search_pass(fn, corpus, patterns),
                                     clock, min_cell_seconds)
                seconds = max(seconds - base_seconds, 1e-9)
                speed = total / 1e6 / seconds
            else:
                seconds = 0.0
                speed = 0.0
            report.rows.append(
                BenchRow(corpus_name, name, m, total, seconds, speed))
    return report


def _dummy_pass(patterns):
    # selection overhead baseline: drive the plan, search nothing
    for _ in patterns:
        pass


def _search_pass(fn, corpus, patterns):
    for p in patterns:
        fn(corpus, p)


def _time_reps(body, clock, min_seconds):
    # fastest full pass over the plan: robust against descheduling blips
    best = None
    total = 0.0
    passes = 0
    while total < min_seconds or passes < 2:
        start = clock()
        body()
        elapsed = clock() - start
        total += elapsed
        passes += 1
        if best is None or elapsed < best:
            best = elapsed
    return best


def run_counts(corpus, plan, algorithms, corpus_name="corpus",
               hal_scheme=None):
    """Counted report over ``plan``: per-character operation counts.

    Timing columns are reported as zero (counted runs are not
    representative of speed), which keeps the output byte-for-byte
    reproducible for a given corpus, plan, and algorithm list.
    """
    if hal_scheme is None:
        # the counting proxy hides the element type, so pin the default
        # scheme from the raw corpus up front
        hal_scheme = default_scheme_for(corpus)
    resolved = _resolve_all(algorithms, hal_scheme)
    n = len(corpus)
    report = BenchReport(counted=True)
    for m in plan.sizes:
        patterns = plan.patterns[m]
        baseline = None
        for name, fn in resolved:
            sink = OperationCounts()
            positions = []
            total = 0
            for p in patterns:
                outcome, counts = run_counted(fn, corpus, p)
                positions.append(outcome.position)
                pos = outcome.position if outcome.position is not None else n
                total += pos + m
                for fname in COUNT_FIELDS:
                    setattr(sink, fname,
                            getattr(sink, fname) + getattr(counts, fname))
            if baseline is None:
                baseline = positions
            else:
                _cross_check(name, positions, baseline, patterns)
            report.rows.append(BenchRow(corpus_name, name, m, total, 0.0, 0.0,
                                        per_char=sink.per_element(total)))
    return report
