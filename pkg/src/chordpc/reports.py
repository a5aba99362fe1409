"""Text, JSON and CSV renderings of evaluation reports."""

import csv
import io
import json
import re
from decimal import ROUND_HALF_EVEN, Decimal

from .syntax import LabelKind, render_chord_label

__all__ = ["format_number", "json_number", "dumps", "report_to_dict", "to_json",
           "to_csv", "to_text"]

_QUANTUM = Decimal("0.000001")
_NUM_MARK = "\x00num:"
_NUM_RE = re.compile(r'"\\u0000num:([-0-9.]+)"')


def format_number(value):
    """Six fractional digits, round-half-even on the shortest decimal repr."""
    if value is None:
        return None
    out = Decimal(repr(float(value))).quantize(_QUANTUM, rounding=ROUND_HALF_EVEN)
    if out.is_zero():
        out = abs(out)
    return format(out, "f")


def json_number(value):
    """Mark a number for :func:`dumps` to write with six fractional digits."""
    text = format_number(value)
    return None if text is None else _NUM_MARK + text


def _vocab_map(mapping, vocabs, convert=None):
    convert = convert or json_number
    return {v.value: convert(mapping.get(v)) for v in vocabs}


def _track_dict(track, options):
    if not track.ok:
        return {"id": track.track_id, "errors": [track.error]}
    out = {
        "id": track.track_id,
        "evaluated_s": json_number(track.evaluated_s),
        "skipped_s": {
            "unknown_label": json_number(track.skipped_unknown_s),
            "out_of_vocab": _vocab_map(track.skipped_oov_s, options.vocabs),
        },
    }
    if options.pitch:
        out["pitch_accuracy"] = json_number(track.pitch_accuracy)
    if options.vocabs:
        out["binary"] = _vocab_map(track.binary, options.vocabs)
        out["binary_evaluated_s"] = _vocab_map(track.binary_evaluated_s, options.vocabs)
    if track.segments is not None:
        out["segments"] = [_segment_dict(s) for s in track.segments]
    return out


def _segment_dict(seg):
    out = {
        "start": json_number(seg.start),
        "end": json_number(seg.end),
        "truth": render_chord_label(seg.truth),
        "estimate": render_chord_label(seg.estimate),
    }
    c = seg.comparison
    if c is None:
        out.update(correct=None, insertions=None, raw_accuracy=None,
                   accuracy=json_number(0.0) if seg.truth.kind is not LabelKind.UNKNOWN else None,
                   special_case=None)
    else:
        out.update(correct=c.correct, insertions=c.insertions,
                   raw_accuracy=json_number(c.raw_accuracy), accuracy=json_number(c.accuracy),
                   special_case=c.special_case)
    return out


def report_to_dict(report):
    """JSON-ready structure for a :class:`~chordpc.evaluation.CorpusReport`."""
    options = report.options
    corpus = {
        "n_tracks": len(report.tracks),
        "n_errors": len(report.errors),
        "evaluated_s": json_number(report.evaluated_s),
    }
    if options.pitch:
        corpus["pitch_accuracy"] = json_number(report.pitch_accuracy)
    if options.vocabs:
        corpus["binary"] = _vocab_map(report.binary, options.vocabs)
        corpus["binary_evaluated_s"] = _vocab_map(report.binary_evaluated_s, options.vocabs)
    return {
        "tracks": [_track_dict(t, options) for t in report.tracks],
        "corpus": corpus,
    }


def dumps(obj):
    """``json.dumps`` that writes marked numbers as bare fixed-point literals."""
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    return _NUM_RE.sub(r"\1", text)


def to_json(report):
    return dumps(report_to_dict(report)) + "\n"


def _csv_fields(options):
    fields = ["id", "evaluated_s", "skipped_unknown_label_s"]
    fields += [f"skipped_out_of_vocab_{v.value}_s" for v in options.vocabs]
    if options.pitch:
        fields.append("pitch_accuracy")
    fields += [v.value for v in options.vocabs]
    fields += [f"{v.value}_evaluated_s" for v in options.vocabs]
    fields.append("error")
    return fields


def _csv_row(track_id, evaluated, unknown, oov, pitch, binary, binary_eval,
             options, error=""):
    row = {"id": track_id, "evaluated_s": format_number(evaluated),
           "skipped_unknown_label_s": format_number(unknown), "error": error}
    for v in options.vocabs:
        row[f"skipped_out_of_vocab_{v.value}_s"] = format_number(oov.get(v))
        row[v.value] = format_number(binary.get(v))
        row[f"{v.value}_evaluated_s"] = format_number(binary_eval.get(v))
    if options.pitch:
        row["pitch_accuracy"] = format_number(pitch)
    return row


CORPUS_ROW_ID = "__corpus__"


def to_csv(report):
    """
    One row per track plus a final ``__corpus__`` aggregate row.

    Undefined scores are empty cells.
    """
    options = report.options
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_csv_fields(options), lineterminator="\n")
    writer.writeheader()
    for t in report.tracks:
        if t.ok:
            writer.writerow(_csv_row(t.track_id, t.evaluated_s, t.skipped_unknown_s,
                                     t.skipped_oov_s, t.pitch_accuracy, t.binary,
                                     t.binary_evaluated_s, options))
        else:
            writer.writerow({"id": t.track_id, "error": t.error})
    writer.writerow(_csv_row(CORPUS_ROW_ID, report.evaluated_s,
                             sum(t.skipped_unknown_s for t in report.tracks if t.ok),
                             {v: sum(t.skipped_oov_s.get(v, 0.0)
                                     for t in report.tracks if t.ok)
                              for v in options.vocabs},
                             report.pitch_accuracy, report.binary,
                             report.binary_evaluated_s, options))
    return buf.getvalue()


def _score_text(value):
    text = format_number(value)
    return "undefined" if text is None else text


def to_text(report):
    """Human-readable summary, one block per track."""
    options = report.options
    lines = []

    def scores(pitch, binary):
        parts = []
        if options.pitch:
            parts.append(f"pitch_accuracy={_score_text(pitch)}")
        parts += [f"{v.value}={_score_text(binary.get(v))}" for v in options.vocabs]
        return parts

    for t in report.tracks:
        if not t.ok:
            lines.append(f"{t.track_id}: ERROR {t.error}")
            continue
        head = [f"{t.track_id}:", f"evaluated_s={format_number(t.evaluated_s)}",
                f"skipped_unknown_s={format_number(t.skipped_unknown_s)}"]
        lines.append(" ".join(head + scores(t.pitch_accuracy, t.binary)))
        for s in t.segments or ():
            c = s.comparison
            detail = ("C=- I=- A=-" if c is None else
                      f"C={c.correct} I={c.insertions} raw_A={format_number(c.raw_accuracy)} "
                      f"A={format_number(c.accuracy)}")
            lines.append(f"  {format_number(s.start)}-{format_number(s.end)} "
                         f"{render_chord_label(s.truth)} -> "
                         f"{render_chord_label(s.estimate)} {detail}")
    lines.append(" ".join(["corpus:", f"tracks={len(report.tracks)}",
                           f"errors={len(report.errors)}",
                           f"evaluated_s={format_number(report.evaluated_s)}"]
                          + scores(report.pitch_accuracy, report.binary)))
    return "\n".join(lines) + "\n"
