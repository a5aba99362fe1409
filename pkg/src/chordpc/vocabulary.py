"""
The five MIREX chord vocabulary classes as binary baselines.

Each class reduces a label to a small alphabet; two labels either reduce to
the same symbol (score 1) or not (score 0). Ground-truth chords that do not
fit the alphabet are skipped.

=================  ==========================================================
class              alphabet
=================  ==========================================================
``root``           root pitch class only
``majmin``         N, maj, min
``sevenths``       N, maj, min, maj7, min7, 7
``majmin_inv``     majmin + maj/3, min/b3, maj/5, min/5
``sevenths_inv``   sevenths + triad inversions above + maj7/3, min7/b3, 7/3,
                   maj7/5, min7/5, 7/5, maj7/7, min7/b7, 7/b7
=================  ==========================================================

"""

import enum
from dataclasses import dataclass

from .errors import UnsupportedLabel
from .pitch_classes import note_for_pitch_class, pitch_class_of
from .syntax import ChordLabel, Degree, LabelKind, NO_CHORD
from .templates import QUALITY_TEMPLATES

__all__ = ["VocabClass", "SimplifiedLabel", "Skip", "SKIP_UNKNOWN", "SKIP_OOV",
           "simplify", "binary_compare"]


class VocabClass(enum.Enum):
    ROOT = "root"
    MAJMIN = "majmin"
    SEVENTHS = "sevenths"
    MAJMIN_INV = "majmin_inv"
    SEVENTHS_INV = "sevenths_inv"

    @property
    def with_inversions(self):
        return self in (VocabClass.MAJMIN_INV, VocabClass.SEVENTHS_INV)


@dataclass(frozen=True)
class Skip:
    """Marker returned instead of a score when a segment is not evaluated."""

    reason: str


SKIP_UNKNOWN = Skip("unknown_label")
SKIP_OOV = Skip("out_of_vocab")

# reduction by the chord's third (and seventh, for the seventh classes)
_MAJMIN = {
    "maj": "maj", "maj7": "maj", "7": "maj", "maj6": "maj", "9": "maj", "maj9": "maj",
    "min": "min", "min7": "min", "minmaj7": "min", "min6": "min", "min9": "min",
}
_SEVENTHS = {
    "maj": "maj", "min": "min", "maj7": "maj7", "min7": "min7", "7": "7",
    "maj9": "maj7", "min9": "min7", "9": "7",
}

_D = Degree
_MAJMIN_INVERSIONS = {
    ("maj", _D(3)), ("min", _D(3, -1)), ("maj", _D(5)), ("min", _D(5)),
}
_SEVENTHS_INVERSIONS = _MAJMIN_INVERSIONS | {
    ("maj7", _D(3)), ("min7", _D(3, -1)), ("7", _D(3)),
    ("maj7", _D(5)), ("min7", _D(5)), ("7", _D(5)),
    ("maj7", _D(7)), ("min7", _D(7, -1)), ("7", _D(7, -1)),
}

_ALPHABET = {
    VocabClass.MAJMIN: _MAJMIN,
    VocabClass.SEVENTHS: _SEVENTHS,
    VocabClass.MAJMIN_INV: _MAJMIN,
    VocabClass.SEVENTHS_INV: _SEVENTHS,
}
_INVERSIONS = {
    VocabClass.MAJMIN_INV: _MAJMIN_INVERSIONS,
    VocabClass.SEVENTHS_INV: _SEVENTHS_INVERSIONS,
}


@dataclass(frozen=True)
class SimplifiedLabel:
    """
    A label reduced to a vocabulary class.

    `kind` is ``"chord"``, ``"no_chord"`` or ``"out_of_vocab"``. `quality` is
    ``None`` for the root-only class; `bass` is only set in inversion classes
    and never for root position.
    """

    kind: str
    root: int | None = None
    quality: str | None = None
    bass: Degree | None = None

    def to_chord_label(self):
        """Chord label with a sharp-spelled root (root-only maps to ``maj``)."""
        if self.kind == "no_chord":
            return NO_CHORD
        if self.kind != "chord":
            raise ValueError("out-of-vocabulary labels have no chord form")
        return ChordLabel.chord(note_for_pitch_class(self.root),
                                self.quality or "maj", bass=self.bass)


_NO_CHORD = SimplifiedLabel("no_chord")
_OOV = SimplifiedLabel("out_of_vocab")


def _sounding_offsets(label):
    offsets = set(QUALITY_TEMPLATES[label.shorthand].intervals)
    offsets -= {d.semitones for d in label.omissions}
    offsets |= {d.semitones for d in label.additions}
    return offsets


def simplify(label, vocab):
    """
    Reduce `label` to the alphabet of `vocab`.

    Parameters
    ----------
    label : ChordLabel
        Must not be the unknown marker.
    vocab : VocabClass

    Returns
    -------
    SimplifiedLabel

    Notes
    -----
    A chord whose omissions remove a tone of its reduced quality (e.g.
    ``C:maj(*3)``) is out of vocabulary, as is any bass degree outside the
    class's inversion list. Additions are ignored.

    """
    vocab = VocabClass(vocab)
    if label.kind is LabelKind.UNKNOWN:
        raise UnsupportedLabel("cannot simplify the unknown label 'X'")
    if label.kind is LabelKind.NO_CHORD:
        return _NO_CHORD
    root = pitch_class_of(label.root)
    if vocab is VocabClass.ROOT:
        return SimplifiedLabel("chord", root)

    quality = _ALPHABET[vocab].get(label.shorthand)
    if quality is None:
        return _OOV
    if not set(QUALITY_TEMPLATES[quality].intervals) <= _sounding_offsets(label):
        return _OOV

    bass = None
    if vocab.with_inversions and label.bass is not None and label.bass != Degree(1):
        bass = label.bass
        if (quality, bass) not in _INVERSIONS[vocab]:
            return _OOV
    return SimplifiedLabel("chord", root, quality, bass)


def binary_compare(truth, estimate, vocab):
    """
    Label-identity score of `estimate` against `truth` under `vocab`.

    Returns
    -------
    int or Skip
        1 if both reduce to the same symbol, 0 otherwise;
        :data:`SKIP_UNKNOWN` if either side is ``X``;
        :data:`SKIP_OOV` if the truth falls outside the vocabulary.

    """
    if truth.kind is LabelKind.UNKNOWN or estimate.kind is LabelKind.UNKNOWN:
        return SKIP_UNKNOWN
    ref = simplify(truth, vocab)
    if ref.kind == "out_of_vocab":
        return SKIP_OOV
    return int(ref == simplify(estimate, vocab))
