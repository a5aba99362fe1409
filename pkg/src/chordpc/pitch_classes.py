"""
Pitch-class sets and the mapping from chord labels onto them.

A :class:`PitchClassSet` is a 12-bit occupancy mask (bit ``k`` set means pitch
class ``k`` sounds, C=0). Sets are immutable and hashable.

"""

from dataclasses import dataclass

import numpy as np

from .errors import UnknownQuality, UnsupportedKey, UnsupportedLabel
from .syntax import (LETTER_PITCH, SCALES, ChordLabel, LabelKind, NoteName,
                     spell_scale_degree)
from .templates import QUALITY_TEMPLATES

__all__ = ["PitchClassSet", "pitch_class_of", "chord_to_pitch_class_set",
           "diatonic_triads", "set_intersection_size", "set_difference_size",
           "note_for_pitch_class"]

FULL_MASK = 0xFFF


@dataclass(frozen=True)
class PitchClassSet:
    """Immutable set of pitch classes 0..11."""

    mask: int = 0

    def __post_init__(self):
        if not 0 <= self.mask <= FULL_MASK:
            raise ValueError(f"mask out of range: {self.mask}")

    @classmethod
    def of(cls, *pitch_classes):
        return cls.from_iterable(pitch_classes)

    @classmethod
    def from_iterable(cls, pitch_classes):
        mask = 0
        for pc in pitch_classes:
            mask |= 1 << (int(pc) % 12)
        return cls(mask)

    @classmethod
    def from_chroma(cls, chroma):
        """Build from a length-12 binary vector."""
        chroma = np.asarray(chroma)
        if chroma.shape != (12,):
            raise ValueError(f"chroma must have shape (12,), got {chroma.shape}")
        return cls.from_iterable(np.flatnonzero(chroma))

    def to_chroma(self):
        """Length-12 ``int`` vector with ones at the member pitch classes."""
        return np.array([(self.mask >> k) & 1 for k in range(12)], dtype=int)

    def transpose(self, semitones):
        k = semitones % 12
        rotated = ((self.mask << k) | (self.mask >> (12 - k))) & FULL_MASK
        return PitchClassSet(rotated)

    def __iter__(self):
        return (k for k in range(12) if self.mask >> k & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, pc):
        return bool(self.mask >> (pc % 12) & 1)

    def __and__(self, other):
        return PitchClassSet(self.mask & other.mask)

    def __or__(self, other):
        return PitchClassSet(self.mask | other.mask)

    def __sub__(self, other):
        return PitchClassSet(self.mask & ~other.mask)

    def __bool__(self):
        return self.mask != 0

    def __repr__(self):
        return "PitchClassSet({" + ", ".join(map(str, self)) + "})"


EMPTY = PitchClassSet()


def pitch_class_of(note):
    """
    Pitch class of a spelled note.

    >>> pitch_class_of(NoteName("F", 1))
    6
    """
    return (LETTER_PITCH[note.letter] + note.accidentals) % 12


_SHARP_SPELLING = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")


def note_for_pitch_class(pc):
    """Default (sharp) spelling of a pitch class."""
    name = _SHARP_SPELLING[pc % 12]
    return NoteName(name[0], len(name) - 1)


def chord_to_pitch_class_set(label):
    """
    Pitch classes sounded by a chord label.

    The root-transposed quality template, minus omitted degrees, plus added
    degrees, plus the bass degree. ``N`` gives the empty set.

    Parameters
    ----------
    label : ChordLabel

    Returns
    -------
    PitchClassSet

    Raises
    ------
    UnsupportedLabel
        For the unknown marker ``X``; callers decide how to skip it.
    UnknownQuality
        If the shorthand has no template.

    """
    if label.kind is LabelKind.NO_CHORD:
        return EMPTY
    if label.kind is LabelKind.UNKNOWN:
        raise UnsupportedLabel("unknown chord label 'X' has no pitch content")
    try:
        template = QUALITY_TEMPLATES[label.shorthand]
    except KeyError:
        raise UnknownQuality(f"no template for {label.shorthand!r}") from None
    offsets = set(template.intervals)
    offsets -= {d.semitones for d in label.omissions}
    offsets |= {d.semitones for d in label.additions}
    if label.bass is not None:
        offsets.add(label.bass.semitones)
    return PitchClassSet.from_iterable(offsets).transpose(pitch_class_of(label.root))


_MAJOR_NUMERALS = ("I", "ii", "iii", "IV", "V", "vi", "vii°")
_TRIAD_SHORTHAND = {(4, 7): "maj", (3, 7): "min", (3, 6): "dim", (4, 8): "aug"}


def diatonic_triads(key):
    """
    The seven triads stacked in thirds on each degree of a major key.

    Parameters
    ----------
    key : Key
        Must be in major mode.

    Returns
    -------
    list of (str, PitchClassSet)
        Roman numeral and pitch content for degrees I..vii°.

    Raises
    ------
    UnsupportedKey
        For minor keys, whose raised sixth/seventh degrees are ambiguous.

    """
    if key.mode != "major":
        raise UnsupportedKey("diatonic triads are only defined for major keys")
    scale = SCALES["major"]
    tonic = pitch_class_of(key.tonic)
    triads = []
    for degree in range(7):
        steps = [scale[(degree + k) % 7] for k in (0, 2, 4)]
        triads.append((_MAJOR_NUMERALS[degree],
                       PitchClassSet.from_iterable(tonic + s for s in steps)))
    return triads


def diatonic_triad_labels(key):
    """Chord labels (root spelled in `key`) for :func:`diatonic_triads`."""
    labels = []
    for degree, (numeral, pcs) in enumerate(diatonic_triads(key), start=1):
        root = spell_scale_degree(key, degree)
        rel = pcs.transpose(-pitch_class_of(root))
        third = 3 if 3 in rel else 4
        fifth = next(k for k in (6, 7, 8) if k in rel)
        labels.append((numeral,
                       ChordLabel.chord(root, _TRIAD_SHORTHAND[(third, fifth)])))
    return labels


def set_intersection_size(a, b):
    """``|a ∩ b|``."""
    return len(a & b)


def set_difference_size(a, b):
    """``|a \\ b|``."""
    return len(a - b)
