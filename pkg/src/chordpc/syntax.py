"""
Parsing and rendering of textual chord labels.

Two dialects are understood:

* Harte-style labels such as ``F``, ``G:min7/b7`` or ``C:maj(*3,9)``, plus the
  markers ``N`` (no chord) and ``X`` (unknown / unanalysable).
* Roman numerals relative to a key, e.g. ``ii``, ``IV``, ``vii°`` or ``bVII``.

Grammar of the Harte dialect::

    LABEL    := "N" | "X" | ROOT [":" SHORTHAND] ["(" DEGREES ")"] ["/" DEGREE]
    ROOT     := LETTER ACCIDENTALS
    DEGREES  := ["*"] DEGREE ("," ["*"] DEGREE)*
    DEGREE   := ACCIDENTALS STEP

A root without shorthand is a major chord. Accidental runs are either all
sharps or all flats, at most two of them.

"""

import enum
from dataclasses import dataclass

from .errors import ChordSyntaxError, UnknownQuality, UnsupportedKey
from .templates import QUALITY_TEMPLATES, SHORTHANDS, degree_semitones

__all__ = ["NoteName", "Degree", "LabelKind", "ChordLabel", "Key",
           "parse_chord_label", "render_chord_label", "parse_roman_numeral",
           "parse_key", "NO_CHORD", "UNKNOWN", "VALID_STEPS"]

LETTERS = "CDEFGAB"
LETTER_PITCH = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
VALID_STEPS = (1, 2, 3, 4, 5, 6, 7, 9, 11, 13)
MAX_ACCIDENTALS = 2


def _accidental_string(count):
    return "#" * count if count > 0 else "b" * -count


@dataclass(frozen=True, order=True)
class NoteName:
    """Spelled note: a diatonic letter plus sharps (>0) or flats (<0)."""

    letter: str
    accidentals: int = 0

    def __post_init__(self):
        if self.letter not in LETTER_PITCH:
            raise ValueError(f"invalid note letter {self.letter!r}")
        if abs(self.accidentals) > MAX_ACCIDENTALS:
            raise ValueError(f"too many accidentals: {self.accidentals}")

    def __str__(self):
        return self.letter + _accidental_string(self.accidentals)


@dataclass(frozen=True, order=True)
class Degree:
    """Chord degree relative to the root, e.g. ``b7`` or ``9``."""

    step: int
    accidentals: int = 0

    def __post_init__(self):
        if self.step not in VALID_STEPS:
            raise ValueError(f"invalid degree step {self.step}")
        if abs(self.accidentals) > MAX_ACCIDENTALS:
            raise ValueError(f"too many accidentals: {self.accidentals}")

    @property
    def semitones(self):
        """Offset above the root, folded into 0..11."""
        return degree_semitones(self.step, self.accidentals)

    def __str__(self):
        return _accidental_string(self.accidentals) + str(self.step)


class LabelKind(enum.Enum):
    CHORD = "chord"
    NO_CHORD = "no_chord"
    UNKNOWN = "unknown"


def _sorted_degrees(degrees):
    return tuple(sorted(set(degrees)))


@dataclass(frozen=True)
class ChordLabel:
    """
    Structured chord label.

    Use the :meth:`chord` constructor for sounding chords and the module
    constants :data:`NO_CHORD` / :data:`UNKNOWN` for the two markers.
    Additions and omissions are stored sorted and de-duplicated, so two
    labels that render identically compare equal.

    """

    kind: LabelKind
    root: NoteName | None = None
    shorthand: str | None = None
    additions: tuple = ()
    omissions: tuple = ()
    bass: Degree | None = None

    def __post_init__(self):
        object.__setattr__(self, "additions", _sorted_degrees(self.additions))
        object.__setattr__(self, "omissions", _sorted_degrees(self.omissions))
        if self.kind is not LabelKind.CHORD:
            if (self.root is not None or self.shorthand is not None
                    or self.additions or self.omissions or self.bass is not None):
                raise ValueError(f"{self.kind.value} label carries chord content")
            return
        if not isinstance(self.root, NoteName):
            raise ValueError("chord label needs a NoteName root")
        if self.shorthand not in QUALITY_TEMPLATES:
            raise UnknownQuality(f"unknown shorthand {self.shorthand!r}")
        template = QUALITY_TEMPLATES[self.shorthand].intervals
        for d in self.omissions:
            if d.semitones not in template:
                raise ValueError(
                    f"cannot omit {d}: not in {self.shorthand} template")
        for d in self.additions + self.omissions:
            if not isinstance(d, Degree):
                raise ValueError(f"expected Degree, got {d!r}")
        if self.bass is not None and not isinstance(self.bass, Degree):
            raise ValueError(f"expected Degree bass, got {self.bass!r}")

    @classmethod
    def chord(cls, root, shorthand="maj", additions=(), omissions=(), bass=None):
        return cls(LabelKind.CHORD, root, shorthand, tuple(additions),
                   tuple(omissions), bass)

    @property
    def is_chord(self):
        return self.kind is LabelKind.CHORD

    def __str__(self):
        return render_chord_label(self)


NO_CHORD = ChordLabel(LabelKind.NO_CHORD)
UNKNOWN = ChordLabel(LabelKind.UNKNOWN)


class _Scanner:
    """Cursor over a trimmed label that reports errors against the original."""

    def __init__(self, text):
        self.text = text
        self.lead = len(text) - len(text.lstrip()) if text.strip() else 0
        self.s = text.strip()
        self.i = 0

    def error(self, message, pos=None):
        pos = self.i if pos is None else pos
        char_pos = self.lead + pos
        offset = len(self.text[:char_pos].encode("utf-8"))
        return ChordSyntaxError(message, self.text, offset)

    def peek(self):
        return self.s[self.i] if self.i < len(self.s) else ""

    def at_end(self):
        return self.i >= len(self.s)

    def accidentals(self):
        start = self.i
        while self.peek() in ("#", "b") and self.peek():
            self.i += 1
        run = self.s[start:self.i]
        if len(set(run)) > 1 or len(run) > MAX_ACCIDENTALS:
            raise self.error(f"malformed accidental run {run!r}", start)
        return len(run) if run[:1] == "#" else -len(run)

    def note(self):
        letter = self.peek()
        if letter not in LETTER_PITCH:
            raise self.error(f"unknown note letter {letter!r}" if letter
                             else "missing note letter")
        self.i += 1
        return NoteName(letter, self.accidentals())

    def degree(self):
        start = self.i
        acc = self.accidentals()
        digits_at = self.i
        while self.peek() and self.peek() in "0123456789":
            self.i += 1
        digits = self.s[digits_at:self.i]
        if not digits:
            raise self.error("expected degree number", start)
        step = int(digits)
        if step not in VALID_STEPS:
            raise self.error(f"invalid degree {digits!r}", digits_at)
        return Degree(step, acc), start


def parse_chord_label(text):
    """
    Parse a Harte-style chord label.

    Parameters
    ----------
    text : str
        Label such as ``"F"``, ``"G:min7/b7"``, ``"C:maj(*3,9)"`` or ``"N"``.
        Surrounding whitespace is ignored.

    Returns
    -------
    ChordLabel

    Raises
    ------
    ChordSyntaxError
        With the byte offset of the first offending character.

    """
    sc = _Scanner(text)
    if not sc.s:
        raise sc.error("empty label")
    if sc.s == "N":
        return NO_CHORD
    if sc.s == "X":
        return UNKNOWN

    root = sc.note()
    shorthand = "maj"
    if sc.peek() == ":":
        sc.i += 1
        start = sc.i
        while not sc.at_end() and sc.peek() not in "(/":
            sc.i += 1
        shorthand = sc.s[start:sc.i]
        if shorthand not in QUALITY_TEMPLATES:
            raise sc.error(f"unknown shorthand {shorthand!r}", start)

    additions, omissions = [], []
    if sc.peek() == "(":
        open_at = sc.i
        close = sc.s.find(")", sc.i)
        if close < 0:
            raise sc.error("unclosed degree list", open_at)
        sc.i += 1
        if sc.i == close:
            raise sc.error("empty degree list", open_at)
        template = QUALITY_TEMPLATES[shorthand].intervals
        while True:
            omit = sc.peek() == "*"
            if omit:
                sc.i += 1
            deg, at = sc.degree()
            if omit:
                if deg.semitones not in template:
                    raise sc.error(f"cannot omit {deg} from {shorthand}", at)
                omissions.append(deg)
            else:
                additions.append(deg)
            if sc.peek() == ",":
                sc.i += 1
                continue
            if sc.i != close:
                raise sc.error("expected ',' or ')' in degree list")
            sc.i += 1
            break

    bass = None
    if sc.peek() == "/":
        sc.i += 1
        bass, _ = sc.degree()

    if not sc.at_end():
        raise sc.error(f"unexpected trailing text {sc.s[sc.i:]!r}")
    return ChordLabel.chord(root, shorthand, additions, omissions, bass)


def render_chord_label(label):
    """
    Canonical text for a chord label.

    The shorthand is always written out, omissions precede additions and
    both are sorted by degree.

    >>> render_chord_label(parse_chord_label("F"))
    'F:maj'

    """
    if label.kind is LabelKind.NO_CHORD:
        return "N"
    if label.kind is LabelKind.UNKNOWN:
        return "X"
    out = f"{label.root}:{label.shorthand}"
    degrees = [f"*{d}" for d in label.omissions] + [str(d) for d in label.additions]
    if degrees:
        out += "(" + ",".join(degrees) + ")"
    if label.bass is not None:
        out += f"/{label.bass}"
    return out


# scale-step offsets; minor is the natural (aeolian) minor
SCALES = {
    "major": (0, 2, 4, 5, 7, 9, 11),
    "minor": (0, 2, 3, 5, 7, 8, 10),
}

_MODE_ALIASES = {"maj": "major", "major": "major", "min": "minor", "minor": "minor"}


@dataclass(frozen=True)
class Key:
    """Tonic plus mode (``"major"`` or ``"minor"``)."""

    tonic: NoteName
    mode: str = "major"

    def __post_init__(self):
        if not isinstance(self.tonic, NoteName):
            raise ValueError("key tonic must be a NoteName")
        if self.mode not in SCALES:
            raise UnsupportedKey(f"unsupported mode {self.mode!r}")

    def __str__(self):
        return f"{self.tonic}:{'maj' if self.mode == 'major' else 'min'}"


def parse_key(text):
    """Parse ``"C:maj"``, ``"a:min"``, ``"Eb major"`` and similar."""
    raw = text.strip()
    sep = ":" if ":" in raw else None
    parts = raw.split(sep, 1)
    tonic_text = parts[0].strip()
    mode_text = parts[1].strip().lower() if len(parts) > 1 else "major"
    sc = _Scanner(tonic_text[:1].upper() + tonic_text[1:])
    if not sc.s:
        raise sc.error("empty key")
    tonic = sc.note()
    if not sc.at_end():
        raise sc.error(f"unexpected trailing text {sc.s[sc.i:]!r}")
    if mode_text not in _MODE_ALIASES:
        raise UnsupportedKey(f"unsupported mode {mode_text!r}")
    return Key(tonic, _MODE_ALIASES[mode_text])


NUMERALS = ("I", "II", "III", "IV", "V", "VI", "VII")
_SUFFIX_QUALITY = {"°": "dim", "o": "dim", "+": "aug", "maj7": "maj7", "ø7": "hdim7"}


def spell_scale_degree(key, degree, shift=0):
    """
    Spell the note on a 1-based scale degree of `key`, raised or lowered by
    `shift` semitones, keeping the letter of the diatonic degree.
    """
    scale = SCALES[key.mode]
    letter = LETTERS[(LETTERS.index(key.tonic.letter) + degree - 1) % 7]
    tonic_pc = LETTER_PITCH[key.tonic.letter] + key.tonic.accidentals
    target = (tonic_pc + scale[degree - 1] + shift) % 12
    acc = (target - LETTER_PITCH[letter] + 6) % 12 - 6
    return NoteName(letter, acc)


def parse_roman_numeral(text, key):
    """
    Parse a Roman numeral in `key` into a chord label.

    Case decides the triad quality (``IV`` major, ``ii`` minor); the suffixes
    ``°``/``o`` (dim), ``+`` (aug), ``7``, ``maj7`` and ``ø7`` refine it. A
    leading ``b`` or ``#`` shifts the root chromatically.

    Parameters
    ----------
    text : str
        Numeral such as ``"vii°"`` or ``"bVII"``.
    key : Key
        Major or minor key providing the scale degrees.

    Returns
    -------
    ChordLabel

    Examples
    --------
    >>> c_major = Key(NoteName("C"), "major")
    >>> str(parse_roman_numeral("ii", c_major))
    'D:min'

    """
    if key.mode not in SCALES:
        raise UnsupportedKey(f"unsupported mode {key.mode!r}")
    sc = _Scanner(text)
    if not sc.s:
        raise sc.error("empty numeral")
    shift = 0
    if sc.peek() in ("b", "#"):
        shift = -1 if sc.peek() == "b" else 1
        sc.i += 1
    start = sc.i
    while sc.peek() and sc.peek() in "IViv":
        sc.i += 1
    numeral = sc.s[start:sc.i]
    if numeral.upper() not in NUMERALS or numeral not in (numeral.upper(), numeral.lower()):
        raise sc.error(f"unknown numeral {numeral!r}", start)
    upper = numeral.isupper()
    suffix_at = sc.i
    suffix = sc.s[sc.i:]
    if suffix == "":
        shorthand = "maj" if upper else "min"
    elif suffix == "7":
        shorthand = "7" if upper else "min7"
    elif suffix in _SUFFIX_QUALITY:
        shorthand = _SUFFIX_QUALITY[suffix]
    else:
        raise sc.error(f"unknown numeral suffix {suffix!r}", suffix_at)

    degree = NUMERALS.index(numeral.upper()) + 1
    try:
        root = spell_scale_degree(key, degree, shift)
    except ValueError:
        raise sc.error(f"cannot spell {numeral} in {key} with at most "
                       f"{MAX_ACCIDENTALS} accidentals", 0) from None
    return ChordLabel.chord(root, shorthand)
