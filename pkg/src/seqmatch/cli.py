"""Command-line front end: find, bench, count, and selftest.

Exit codes: 0 success (for find: match found), 1 no match / failed
check, 2 usage error.  All randomness flows from --seed, so identical
invocations reproduce identical plans, corpora, and counted reports.
"""

import argparse
import random
import sys
from importlib import resources

from .bench import run_bench, run_counts
from .corpus import CORPUS_KINDS, build_pattern_plan, load_corpus, \
    parse_test_cases, read_test_cases
from .errors import CorrectnessMismatch, TestFileError
from .schemes import SCHEMES
from .search import ALGORITHM_NAMES, dispatch_search, naive_search, \
    resolve_algorithm

DEFAULT_SIZES = {
    "text": "2,4,6,8,10,14,18",
    "words": "2,4,6,8",
    "dna": "20,50,100,150,200",
    "random16": "2,4,6,8,10,14,18",
}


def decode_pattern(text):
    """Turn backslash escapes (\\xNN, \\n, ...) into raw bytes so binary
    patterns can be given inline."""
    return text.encode("utf-8").decode("unicode_escape").encode("latin-1")


def parse_sizes(spec):
    """Comma list of sizes; an item may be a range like 4..9."""
    sizes = []
    for item in spec.split(","):
        item = item.strip()
        if ".." in item:
            lo, hi = item.split("..", 1)
            sizes.extend(range(int(lo), int(hi) + 1))
        elif item:
            sizes.append(int(item))
    if not sizes:
        raise ValueError("no pattern sizes given")
    return sizes


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="seqmatch",
        description="Sequence searching, benchmarking, and operation counting")
    sub = parser.add_subparsers(dest="command", required=True)

    find = sub.add_parser("find", help="locate a pattern in a corpus file")
    find.add_argument("--text", required=True, help="corpus file to search")
    find.add_argument("--pattern", help="pattern (backslash escapes allowed)")
    find.add_argument("--pattern-file", help="file holding the raw pattern")
    find.add_argument("--algo", default=None,
                      help="algorithm (default: capability dispatch)")
    find.add_argument("--scheme", default=None, help="hash scheme for hal")

    for name in ("bench", "count"):
        cmd = sub.add_parser(
            name, help="run the %s harness over a corpus" %
            ("timing" if name == "bench" else "operation-counting"))
        cmd.add_argument("--kind", default="text", choices=CORPUS_KINDS)
        cmd.add_argument("--corpus", help="corpus file (default: synthetic)")
        cmd.add_argument("--size", type=int,
                         help="synthetic corpus size in elements")
        cmd.add_argument("--sizes", help="pattern sizes, e.g. 2,4,8 or 2..18")
        cmd.add_argument("--tests", type=int, default=20,
                         help="patterns per size (default 20)")
        cmd.add_argument("--algos", default="sf,l,hal",
                         help="comma list of algorithms (default sf,l,hal)")
        cmd.add_argument("--scheme", default=None, help="hash scheme for hal")
        cmd.add_argument("--dict", dest="dict_path",
                         help="dictionary file of candidate pattern words")
        cmd.add_argument("--seed", type=int, default=0)
        cmd.add_argument("--out", help="TSV output path "
                                       "(default %s-<kind>.tsv)" % name)
        if name == "bench":
            cmd.add_argument("--min-cell-ms", type=int, default=200,
                             help="minimum wall time per timed cell")
            cmd.add_argument("--no-timing", action="store_true",
                             help="skip timing (deterministic output)")

    selftest = sub.add_parser("selftest",
                              help="run bundled regression triples and fuzz")
    selftest.add_argument("--file", help="triple file (default: bundled)")
    selftest.add_argument("--fuzz", type=int, default=2000,
                          help="number of randomized cases (default 2000)")
    selftest.add_argument("--seed", type=int, default=0)
    return parser


def _fail(message):
    print(f"error: {message}", file=sys.stderr)
    return 2


def _validate_names(algos, scheme):
    for name in algos:
        if name not in ALGORITHM_NAMES:
            raise ValueError(f"unknown algorithm {name!r} "
                             f"(choose from {', '.join(ALGORITHM_NAMES)})")
    if scheme is not None and scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r} "
                         f"(choose from {', '.join(SCHEMES)})")


def cmd_find(args):
    try:
        _validate_names([args.algo] if args.algo else [], args.scheme)
        if (args.pattern is None) == (args.pattern_file is None):
            raise ValueError("give exactly one of --pattern/--pattern-file")
    except ValueError as exc:
        return _fail(exc)
    try:
        if args.pattern is not None:
            pattern = decode_pattern(args.pattern)
        else:
            pattern = open(args.pattern_file, "rb").read()
        text = open(args.text, "rb").read()
    except (OSError, ValueError) as exc:
        return _fail(exc)
    scheme = SCHEMES[args.scheme] if args.scheme else None
    if args.algo:
        outcome = resolve_algorithm(args.algo, scheme=scheme)(text, pattern)
    else:
        outcome = dispatch_search(text, pattern, scheme=scheme)
    if outcome.found:
        print(outcome.position)
        return 0
    print("not found")
    return 1


def _prepare_run(args):
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    _validate_names(algos, args.scheme)
    sizes = parse_sizes(args.sizes if args.sizes else DEFAULT_SIZES[args.kind])
    corpus = load_corpus(args.kind, path=args.corpus, size=args.size,
                         seed=args.seed)
    dictionary = None
    if args.dict_path:
        dictionary = load_corpus("words", path=args.dict_path)
    plan = build_pattern_plan(corpus, sizes, args.tests, dictionary)
    return corpus, plan, algos


def _echo_summary(report, counted):
    for row in report.rows:
        if row.algorithm == "dummy":
            continue
        line = (f"{row.corpus} m={row.pattern_size:<4d} {row.algorithm:<5s} "
                f"searched {row.total_elements} elements")
        if counted and row.per_char:
            line += (f"  comparisons/char={row.per_char['element_comparisons']:.4f}"
                     f"  accesses/char={row.per_char['element_accesses']:.4f}")
        elif row.seconds:
            line += f"  {row.elements_per_us:.2f} elements/us"
        print(line)


def cmd_bench(args):
    try:
        corpus, plan, algos = _prepare_run(args)
    except (ValueError, OSError) as exc:
        return _fail(exc)
    scheme = SCHEMES[args.scheme] if args.scheme else None
    try:
        report = run_bench(corpus, plan, algos, corpus_name=args.kind,
                           hal_scheme=scheme,
                           min_cell_seconds=args.min_cell_ms / 1000.0,
                           time_runs=not args.no_timing)
    except CorrectnessMismatch as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return 1
    out = args.out or f"bench-{args.kind}.tsv"
    report.write(out)
    _echo_summary(report, counted=False)
    print(f"wrote {out}")
    return 0


def cmd_count(args):
    try:
        corpus, plan, algos = _prepare_run(args)
        if plan.total_patterns() == 0:
            raise ValueError("the plan selects no patterns")
    except (ValueError, OSError) as exc:
        return _fail(exc)
    scheme = SCHEMES[args.scheme] if args.scheme else None
    try:
        report = run_counts(corpus, plan, algos, corpus_name=args.kind,
                            hal_scheme=scheme)
    except CorrectnessMismatch as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return 1
    out = args.out or f"count-{args.kind}.tsv"
    report.write(out)
    _echo_summary(report, counted=True)
    print(f"wrote {out}")
    return 0


FUZZ_ALPHABETS = (b"ab", b"acgt", b"abcdefghijklmnopqrstuvwxyz", bytes(range(256)))
FUZZ_ALGOS = ("sf", "kmp", "l", "al", "hal", "hal2", "hal3", "hal4", "hal5",
              "nhal")


def _fuzz_case(rng):
    sigma = rng.choice(FUZZ_ALPHABETS)
    n = rng.randint(1, 400)
    m = rng.randint(1, min(24, n + 2))
    text = bytes(rng.choices(sigma, k=n))
    if rng.random() < 0.5 and m <= n:
        start = rng.randrange(n - m + 1)
        pattern = text[start:start + m]
    else:
        pattern = bytes(rng.choices(sigma, k=m))
    return text, pattern


def cmd_selftest(args):
    try:
        if args.file:
            cases = read_test_cases(args.file)
        else:
            data = resources.files("seqmatch").joinpath("data/small.txt")
            cases = parse_test_cases(data.read_bytes())
    except (TestFileError, OSError) as exc:
        print(f"selftest error: {exc}", file=sys.stderr)
        return 1
    failures = 0
    fns = [(name, resolve_algorithm(name)) for name in FUZZ_ALGOS]
    for case in cases:
        want = naive_search(case.text, case.pattern).position
        for name, fn in fns:
            got = fn(case.text, case.pattern).position
            if got != want:
                failures += 1
                print(f"FAIL {name} on pattern {case.pattern!r}: "
                      f"expected {want}, got {got}")
                break
    print(f"{len(cases)} file cases checked")
    rng = random.Random(args.seed)
    for i in range(args.fuzz):
        text, pattern = _fuzz_case(rng)
        want = naive_search(text, pattern).position
        for name, fn in fns:
            got = fn(text, pattern).position
            if got != want:
                failures += 1
                print(f"FAIL {name} on fuzz case #{i} "
                      f"text={text!r} pattern={pattern!r}: "
                      f"expected {want}, got {got}")
                break
        if failures:
            break
    print(f"{args.fuzz} fuzz cases checked")
    if failures:
        print("selftest FAILED")
        return 1
    print("selftest passed")
    return 0


def main(argv=None):
    args = _build_parser().parse_args(argv)
    handler = {"find": cmd_find, "bench": cmd_bench, "count": cmd_count,
               "selftest": cmd_selftest}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
