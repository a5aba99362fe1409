"""
Command-line front end.

::

    chordpc pair F:maj D:min
    chordpc pair --key C:maj IV V
    chordpc track ref.lab est.lab --format json
    chordpc corpus manifest.txt
    chordpc corpus refs/ ests/ --format csv --output report.csv

Exit codes: 0 success, 1 I/O error, 2 parse / usage error, 3 corpus
evaluated with per-track errors.
"""

import argparse
import logging
import os
import sys

from . import __version__
from .errors import ChordEvalError
from .evaluation import (CorpusReport, EvalOptions, evaluate_corpus, evaluate_track,
                         load_lab)
from .metric import compare_labels
from .reports import dumps, format_number, json_number, to_csv, to_json, to_text
from .syntax import parse_chord_label, parse_key, parse_roman_numeral, render_chord_label
from .vocabulary import Skip, VocabClass, binary_compare

log = logging.getLogger("chordpc")

EXIT_OK = 0
EXIT_IO = 1
EXIT_PARSE = 2
EXIT_TRACK_ERRORS = 3


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _common(parser):
    parser.add_argument("--metric", choices=("pitch", "binary", "both"), default="both")
    parser.add_argument("--vocab", action="append", choices=[v.value for v in VocabClass],
                        help="binary vocabulary class (repeatable; default all)")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--uncovered", choices=("nochord", "skip"), default="nochord")
    parser.add_argument("--empty-estimate", choices=("formula", "zero"), default="formula")
    parser.add_argument("--segments", action="store_true",
                        help="include the per-segment breakdown")
    parser.add_argument("--output", "-o", help="write the report here instead of stdout")
    parser.add_argument("-v", "--verbose", action="count", default=0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chordpc", description="Pitch-content chord estimation evaluation.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pair", help="compare two chord labels")
    p.add_argument("truth")
    p.add_argument("estimate")
    p.add_argument("--key", help="interpret labels as Roman numerals in this key, e.g. C:maj")
    _common(p)

    p = sub.add_parser("track", help="evaluate one estimated .lab against a reference")
    p.add_argument("reference")
    p.add_argument("estimate")
    _common(p)

    p = sub.add_parser("corpus", help="evaluate many tracks")
    p.add_argument("inputs", nargs="+", metavar="PATH",
                   help="a manifest file (id ref est per line) or REF_DIR EST_DIR")
    p.add_argument("--jobs", "-j", type=int, default=1, help="parallel track evaluations")
    _common(p)
    return parser


def _options(args):
    vocabs = tuple(VocabClass(v) for v in dict.fromkeys(args.vocab or ()))
    if args.metric == "pitch":
        vocabs = ()
    elif not vocabs:
        vocabs = tuple(VocabClass)
    return EvalOptions(vocabs=vocabs, pitch=args.metric != "binary",
                       uncovered=args.uncovered, empty_estimate=args.empty_estimate,
                       segments=args.segments)


def _emit(text, args):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(report, fmt):
    return {"text": to_text, "json": to_json, "csv": to_csv}[fmt](report)


def run_pair(args):
    options = _options(args)
    try:
        if args.key:
            key = parse_key(args.key)
            truth = parse_roman_numeral(args.truth, key)
            estimate = parse_roman_numeral(args.estimate, key)
        else:
            truth = parse_chord_label(args.truth)
            estimate = parse_chord_label(args.estimate)
        comparison = compare_labels(truth, estimate, options.empty_estimate) \
            if options.pitch else None
    except ChordEvalError as exc:
        raise _Fail(EXIT_PARSE, str(exc)) from None

    binary = {}
    for v in options.vocabs:
        result = binary_compare(truth, estimate, v)
        binary[v] = None if isinstance(result, Skip) else result

    t, e = render_chord_label(truth), render_chord_label(estimate)
    if args.format == "json":
        out = {"truth": t, "estimate": e}
        if comparison is not None:
            out.update(correct=comparison.correct, insertions=comparison.insertions,
                       ground_truth_size=comparison.ground_truth_size,
                       raw_accuracy=json_number(comparison.raw_accuracy),
                       accuracy=json_number(comparison.accuracy),
                       special_case=comparison.special_case)
        if options.vocabs:
            out["binary"] = {v.value: binary[v] for v in options.vocabs}
        text = dumps(out) + "\n"
    elif args.format == "csv":
        header = ["truth", "estimate"]
        row = [t, e]
        if comparison is not None:
            header += ["correct", "insertions", "ground_truth_size", "raw_accuracy",
                       "accuracy", "special_case"]
            row += [comparison.correct, comparison.insertions, comparison.ground_truth_size,
                    format_number(comparison.raw_accuracy),
                    format_number(comparison.accuracy), comparison.special_case or ""]
        header += [v.value for v in options.vocabs]
        row += ["" if binary[v] is None else binary[v] for v in options.vocabs]
        text = ",".join(header) + "\n" + ",".join(map(str, row)) + "\n"
    else:
        lines = [f"{t} -> {e}"]
        if comparison is not None:
            line = (f"C={comparison.correct} I={comparison.insertions} "
                    f"|y|={comparison.ground_truth_size} "
                    f"raw_A={format_number(comparison.raw_accuracy)} "
                    f"A={format_number(comparison.accuracy)}")
            if comparison.special_case:
                line += f" ({comparison.special_case})"
            lines.append(line)
        for v in options.vocabs:
            lines.append(f"{v.value}: {'skip' if binary[v] is None else binary[v]}")
        text = "\n".join(lines) + "\n"
    _emit(text, args)
    return EXIT_OK


def run_track(args):
    options = _options(args)
    timelines = []
    for path in (args.reference, args.estimate):
        try:
            timelines.append(load_lab(path))
        except OSError as exc:
            raise _Fail(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from None
        except (ChordEvalError, UnicodeDecodeError) as exc:
            raise _Fail(EXIT_PARSE, f"{path}: {exc}") from None
    track_id = os.path.splitext(os.path.basename(args.reference))[0]
    try:
        report = evaluate_track(*timelines, options=options, track_id=track_id)
    except ChordEvalError as exc:
        raise _Fail(EXIT_PARSE, f"{track_id}: {exc}") from None
    _emit(_render(CorpusReport.aggregate([report], options), args.format), args)
    return EXIT_OK


def read_manifest(path):
    """``(id, ref, est)`` triples; relative paths resolve against the manifest."""
    base = os.path.dirname(os.path.abspath(path))
    triples = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 3:
                raise _Fail(EXIT_PARSE, f"{path}:{lineno}: expected 'id ref est'")
            tid, ref, est = fields
            triples.append((tid, os.path.join(base, ref), os.path.join(base, est)))
    return triples


def match_directories(ref_dir, est_dir, suffix=".lab"):
    """Pair ``*.lab`` files by stem; unmatched stems are an error."""
    def stems(d):
        return {os.path.splitext(f)[0]: os.path.join(d, f)
                for f in os.listdir(d) if f.endswith(suffix)}
    refs, ests = stems(ref_dir), stems(est_dir)
    missing = sorted(set(refs) ^ set(ests))
    if missing:
        raise _Fail(EXIT_PARSE, "unmatched stems: " + ", ".join(
            f"{s} (only in {ref_dir if s in refs else est_dir})" for s in missing))
    return [(s, refs[s], ests[s]) for s in sorted(refs)]


def run_corpus(args):
    options = _options(args)
    try:
        if len(args.inputs) == 1:
            triples = read_manifest(args.inputs[0])
        elif len(args.inputs) == 2:
            triples = match_directories(*args.inputs)
        else:
            raise _Fail(EXIT_PARSE, "expected a manifest or REF_DIR EST_DIR")
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {exc.filename}: {exc.strerror or exc}") from None
    if not triples:
        raise _Fail(EXIT_PARSE, "no tracks")
    try:
        report = evaluate_corpus(triples, options, workers=args.jobs)
    except ValueError as exc:
        raise _Fail(EXIT_PARSE, str(exc)) from None
    _emit(_render(report, args.format), args)
    for tid, err in report.errors:
        print(f"chordpc: track {tid}: {err}", file=sys.stderr)
    return EXIT_TRACK_ERRORS if report.errors else EXIT_OK


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    handler = {"pair": run_pair, "track": run_track, "corpus": run_corpus}[args.command]
    try:
        return handler(args)
    except _Fail as exc:
        print(f"chordpc: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"chordpc: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
