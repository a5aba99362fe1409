"""Interval templates for chord shorthands and degree-to-semitone offsets."""

from dataclasses import dataclass

# semitones above the root for each natural scale degree; compound degrees fold
DEGREE_SEMITONES = {1: 0, 2: 2, 3: 4, 4: 5, 5: 7, 6: 9, 7: 11,
                    9: 2, 11: 5, 13: 9}


@dataclass(frozen=True)
class QualityTemplate:
    """Semitone offsets from the root that a chord shorthand sounds."""

    shorthand: str
    intervals: tuple

    def __post_init__(self):
        ivs = tuple(self.intervals)
        if not ivs or ivs[0] != 0:
            raise ValueError(f"template {self.shorthand!r} must contain the root")
        if any(b <= a for a, b in zip(ivs, ivs[1:])):
            raise ValueError(f"template {self.shorthand!r} must be strictly ascending")
        if ivs[-1] > 11:
            raise ValueError(f"template {self.shorthand!r} has offset above 11")
        object.__setattr__(self, "intervals", ivs)


def _build(table):
    return {name: QualityTemplate(name, ivs) for name, ivs in table.items()}


QUALITY_TEMPLATES = _build({
    "maj": (0, 4, 7),
    "min": (0, 3, 7),
    "dim": (0, 3, 6),
    "aug": (0, 4, 8),
    "maj7": (0, 4, 7, 11),
    "min7": (0, 3, 7, 10),
    "7": (0, 4, 7, 10),
    "dim7": (0, 3, 6, 9),
    "hdim7": (0, 3, 6, 10),
    "minmaj7": (0, 3, 7, 11),
    "maj6": (0, 4, 7, 9),
    "min6": (0, 3, 7, 9),
    "sus2": (0, 2, 7),
    "sus4": (0, 5, 7),
    "9": (0, 2, 4, 7, 10),
    "maj9": (0, 2, 4, 7, 11),
    "min9": (0, 2, 3, 7, 10),
})

SHORTHANDS = tuple(QUALITY_TEMPLATES)


def degree_semitones(step, accidentals=0):
    """Semitone offset (mod 12) of a chord degree above its root."""
    return (DEGREE_SEMITONES[step] + accidentals) % 12
