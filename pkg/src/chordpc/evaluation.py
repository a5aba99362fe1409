"""
Duration-weighted evaluation of chord annotations.

Reference and estimated annotations are read from ``.lab`` files (one
``start end label`` line per segment), cut into the common refinement of
both segmentations over reference-covered time, and every piece is scored
with a per-segment scorer. The track score is the duration-weighted mean of
the piece scores; corpus scores weight tracks by evaluated duration.

Two kinds of per-segment score are computed side by side: the pitch-content
accuracy of :mod:`chordpc.metric` and the binary label-identity score of each
requested vocabulary class.

"""

import bisect
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import ChordEvalError, ChordSyntaxError, FormatError, OrderError
from .metric import EMPTY_ESTIMATE_POLICIES, compare_labels
from .syntax import NO_CHORD, LabelKind, parse_chord_label
from .vocabulary import SKIP_UNKNOWN, Skip, VocabClass, binary_compare

__all__ = ["Segment", "Timeline", "AlignedPair", "WeightedScore", "EvalOptions",
           "TrackReport", "CorpusReport", "parse_lab", "load_lab",
           "intersect_timelines", "weighted_score", "evaluate_track",
           "evaluate_corpus", "TIME_TOL"]

log = logging.getLogger(__name__)

TIME_TOL = 1e-9
UNCOVERED_POLICIES = ("nochord", "skip")


@dataclass(frozen=True)
class Segment:
    """Half-open time interval ``[start, end)`` carrying a chord label."""

    start: float
    end: float
    label: object

    def __post_init__(self):
        if self.start < 0:
            raise ValueError(f"negative start time {self.start}")
        if not self.end > self.start:
            raise ValueError(f"segment end {self.end} not after start {self.start}")

    @property
    def duration(self):
        return self.end - self.start


@dataclass(frozen=True)
class Timeline:
    """Sorted, non-overlapping sequence of segments (gaps allowed)."""

    segments: tuple = ()

    def __post_init__(self):
        segs = tuple(self.segments)
        for prev, cur in zip(segs, segs[1:]):
            if cur.start < prev.end - TIME_TOL:
                raise OrderError(
                    f"segment at {cur.start} overlaps or precedes segment "
                    f"ending at {prev.end}")
        object.__setattr__(self, "segments", segs)

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __getitem__(self, idx):
        return self.segments[idx]

    @property
    def coverage(self):
        """Total annotated time in seconds."""
        return sum(s.duration for s in self.segments)


def parse_lab(text):
    """
    Parse the contents of a ``.lab`` chord annotation.

    Blank lines and lines starting with ``#`` are ignored. Fields are
    separated by runs of spaces or tabs.

    Raises
    ------
    FormatError
        Wrong number of fields or non-numeric times.
    OrderError
        Non-positive duration, or segments out of order / overlapping.
    ChordSyntaxError
        Unparseable label; the error carries the line number.

    """
    segments = []
    prev_end = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 3:
            raise FormatError(f"expected 'start end label', got {len(fields)} field(s)",
                              lineno)
        try:
            start, end = float(fields[0]), float(fields[1])
        except ValueError:
            raise FormatError(f"non-numeric time in {stripped!r}", lineno) from None
        if not (math.isfinite(start) and math.isfinite(end)):
            raise FormatError(f"non-finite time in {stripped!r}", lineno)
        if start < 0:
            raise FormatError(f"negative start time {start}", lineno)
        if not end > start:
            raise OrderError(f"segment end {end} not after start {start}", lineno)
        if prev_end is not None and start < prev_end - TIME_TOL:
            raise OrderError(f"segment starting at {start} overlaps previous "
                             f"segment ending at {prev_end}", lineno)
        try:
            label = parse_chord_label(fields[2])
        except ChordSyntaxError as exc:
            raise exc.with_line(lineno) from None
        segments.append(Segment(start, end, label))
        prev_end = end
    return Timeline(tuple(segments))


def load_lab(path):
    """Read and parse a ``.lab`` file (UTF-8)."""
    with open(path, encoding="utf-8") as fh:
        return parse_lab(fh.read())


@dataclass(frozen=True)
class AlignedPair:
    """A piece of reference time with the labels active on both sides."""

    start: float
    end: float
    truth: object
    estimate: object

    @property
    def duration(self):
        return self.end - self.start


def intersect_timelines(reference, estimate, uncovered="nochord"):
    """
    Common refinement of two timelines over reference-covered time.

    Parameters
    ----------
    reference, estimate : Timeline
    uncovered : {'nochord', 'skip'}
        Reference time without an estimate segment is either paired with
        ``N`` or left out.

    Returns
    -------
    list of AlignedPair
        Sorted, non-overlapping. Adjacent pieces inside one reference
        segment that carry the same estimate label are merged, so splitting
        an estimate segment does not change the output.

    Examples
    --------
    >>> ref = parse_lab("0 3 C:maj")
    >>> est = parse_lab("1 2 C:maj")
    >>> [(p.start, p.end, str(p.estimate)) for p in intersect_timelines(ref, est)]
    [(0.0, 1.0, 'N'), (1.0, 2.0, 'C:maj'), (2.0, 3.0, 'N')]

    """
    if uncovered not in UNCOVERED_POLICIES:
        raise ValueError(f"unknown uncovered policy {uncovered!r}")
    est_segs = estimate.segments
    est_starts = [s.start for s in est_segs]
    pairs = []
    for ref in reference:
        first = max(bisect.bisect_right(est_starts, ref.start) - 1, 0)
        last = bisect.bisect_right(est_starts, ref.end)
        interior = sorted(
            t for seg in est_segs[first:last] for t in (seg.start, seg.end)
            if ref.start + TIME_TOL < t < ref.end - TIME_TOL)
        cuts = [ref.start]
        for t in interior:
            if t - cuts[-1] > TIME_TOL:
                cuts.append(t)
        cuts.append(ref.end)

        pieces = []
        for a, b in zip(cuts, cuts[1:]):
            label = _label_at(est_segs, est_starts, 0.5 * (a + b))
            if label is None:
                if uncovered == "skip":
                    continue
                label = NO_CHORD
            if pieces and pieces[-1][1] == a and pieces[-1][2] == label:
                pieces[-1][1] = b
            else:
                pieces.append([a, b, label])
        pairs.extend(AlignedPair(a, b, ref.label, lbl) for a, b, lbl in pieces)
    return pairs


def _label_at(segments, starts, t):
    idx = bisect.bisect_right(starts, t) - 1
    if idx >= 0 and segments[idx].start <= t < segments[idx].end:
        return segments[idx].label
    return None


@dataclass(frozen=True)
class WeightedScore:
    """Duration-weighted mean; `score` is None when nothing was evaluated."""

    score: float | None
    evaluated: float
    skipped: dict = field(default_factory=dict)


def weighted_score(pairs, scorer):
    """
    Duration-weighted mean of ``scorer(pair)`` over `pairs`.

    `scorer` returns a number in [0, 1] or a :class:`~chordpc.vocabulary.Skip`
    marker; skipped durations are accumulated per reason and left out of the
    denominator.
    """
    total = 0.0
    evaluated = 0.0
    skipped = {}
    for pair in pairs:
        dur = pair.duration
        if dur <= 0:
            raise ValueError(f"pair [{pair.start}, {pair.end}) has no duration")
        value = scorer(pair)
        if isinstance(value, Skip):
            skipped[value.reason] = skipped.get(value.reason, 0.0) + dur
            continue
        total += dur * value
        evaluated += dur
    score = total / evaluated if evaluated > 0 else None
    return WeightedScore(score, evaluated, skipped)


@dataclass(frozen=True)
class EvalOptions:
    """
    Evaluation switches.

    Attributes
    ----------
    vocabs : tuple of VocabClass
        Binary baselines to compute (empty for none).
    pitch : bool
        Compute the pitch-content accuracy.
    uncovered : {'nochord', 'skip'}
    empty_estimate : {'formula', 'zero'}
    segments : bool
        Keep the per-segment breakdown in the report.
    """

    vocabs: tuple = tuple(VocabClass)
    pitch: bool = True
    uncovered: str = "nochord"
    empty_estimate: str = "formula"
    segments: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vocabs", tuple(VocabClass(v) for v in self.vocabs))
        if self.uncovered not in UNCOVERED_POLICIES:
            raise ValueError(f"unknown uncovered policy {self.uncovered!r}")
        if self.empty_estimate not in EMPTY_ESTIMATE_POLICIES:
            raise ValueError(f"unknown empty_estimate policy {self.empty_estimate!r}")


@dataclass
class SegmentScore:
    start: float
    end: float
    truth: object
    estimate: object
    comparison: object | None


@dataclass
class TrackReport:
    """Scores of one reference/estimate pair."""

    track_id: str
    evaluated_s: float = 0.0
    skipped_unknown_s: float = 0.0
    skipped_oov_s: dict = field(default_factory=dict)
    pitch_accuracy: float | None = None
    binary: dict = field(default_factory=dict)
    binary_evaluated_s: dict = field(default_factory=dict)
    segments: list | None = None
    error: str | None = None

    @property
    def ok(self):
        return self.error is None


def _pitch_scorer(empty_estimate):
    def score(pair):
        if pair.truth.kind is LabelKind.UNKNOWN:
            return SKIP_UNKNOWN
        if pair.estimate.kind is LabelKind.UNKNOWN:
            return 0.0
        return compare_labels(pair.truth, pair.estimate, empty_estimate).accuracy
    return score


def _binary_scorer(vocab):
    def score(pair):
        if pair.truth.kind is LabelKind.UNKNOWN:
            return SKIP_UNKNOWN
        if pair.estimate.kind is LabelKind.UNKNOWN:
            return 0
        return binary_compare(pair.truth, pair.estimate, vocab)
    return score


def evaluate_track(reference, estimate, options=None, track_id=""):
    """
    Score an estimated timeline against a reference timeline.

    Parameters
    ----------
    reference, estimate : Timeline
    options : EvalOptions, optional
    track_id : str

    Returns
    -------
    TrackReport

    Notes
    -----
    Reference ``X`` segments are skipped (``unknown_label``); an estimated
    ``X`` scores 0 under every scorer.

    """
    options = options or EvalOptions()
    pairs = intersect_timelines(reference, estimate, options.uncovered)
    report = TrackReport(track_id)

    pitch = weighted_score(pairs, _pitch_scorer(options.empty_estimate))
    report.evaluated_s = pitch.evaluated
    report.skipped_unknown_s = pitch.skipped.get(SKIP_UNKNOWN.reason, 0.0)
    if options.pitch:
        report.pitch_accuracy = pitch.score

    for vocab in options.vocabs:
        result = weighted_score(pairs, _binary_scorer(vocab))
        report.binary[vocab] = result.score
        report.binary_evaluated_s[vocab] = result.evaluated
        report.skipped_oov_s[vocab] = result.skipped.get("out_of_vocab", 0.0)

    if options.segments:
        report.segments = []
        for p in pairs:
            comparison = None
            if p.truth.kind is not LabelKind.UNKNOWN and p.estimate.kind is not LabelKind.UNKNOWN:
                comparison = compare_labels(p.truth, p.estimate, options.empty_estimate)
            report.segments.append(
                SegmentScore(p.start, p.end, p.truth, p.estimate, comparison))
    return report


def _weighted_mean(items):
    total = 0.0
    weight = 0.0
    for score, duration in items:
        if score is None or duration <= 0:
            continue
        total += score * duration
        weight += duration
    return (total / weight if weight > 0 else None), weight


@dataclass
class CorpusReport:
    """Per-track reports (sorted by id) plus duration-weighted aggregates."""

    tracks: list
    options: EvalOptions
    evaluated_s: float = 0.0
    pitch_accuracy: float | None = None
    binary: dict = field(default_factory=dict)
    binary_evaluated_s: dict = field(default_factory=dict)

    @property
    def errors(self):
        return [(t.track_id, t.error) for t in self.tracks if not t.ok]

    @classmethod
    def aggregate(cls, tracks, options):
        tracks = sorted(tracks, key=lambda t: t.track_id)
        scored = [t for t in tracks if t.ok]
        report = cls(tracks, options)
        pitch, weight = _weighted_mean((t.pitch_accuracy, t.evaluated_s) for t in scored)
        report.evaluated_s = weight if options.pitch else sum(t.evaluated_s for t in scored)
        report.pitch_accuracy = pitch if options.pitch else None
        for vocab in options.vocabs:
            score, weight = _weighted_mean(
                (t.binary.get(vocab), t.binary_evaluated_s.get(vocab, 0.0)) for t in scored)
            report.binary[vocab] = score
            report.binary_evaluated_s[vocab] = weight
        return report


def _evaluate_files(item, options):
    track_id, ref_path, est_path = item
    try:
        reference = load_lab(ref_path)
        estimate = load_lab(est_path)
        return evaluate_track(reference, estimate, options, track_id)
    except (ChordEvalError, OSError, UnicodeDecodeError) as exc:
        log.warning("track %s failed: %s", track_id, exc)
        return TrackReport(track_id, error=_describe(exc))


def _describe(exc):
    if isinstance(exc, OSError) and exc.filename is not None:
        return f"{exc.strerror or exc.__class__.__name__}: {os.fspath(exc.filename)}"
    return f"{exc.__class__.__name__}: {exc}"


def evaluate_corpus(pairs, options=None, workers=1):
    """
    Evaluate many tracks given as ``(id, reference_path, estimate_path)``.

    A track that fails to load or parse is recorded with its error and does
    not stop the others. Tracks may be evaluated concurrently (`workers`);
    aggregation always folds them in ascending id order, so the result does
    not depend on the degree of parallelism.

    Returns
    -------
    CorpusReport
    """
    options = options or EvalOptions()
    items = sorted((str(i), r, e) for i, r, e in pairs)
    ids = [i for i, _, _ in items]
    if len(set(ids)) != len(ids):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise ValueError(f"duplicate track ids: {', '.join(dupes)}")
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda it: _evaluate_files(it, options), items))
    else:
        reports = [_evaluate_files(it, options) for it in items]
    return CorpusReport.aggregate(reports, options)
