"""
chordpc: pitch-content accuracy for chord estimation evaluation.

Chord labels are compared by the pitch classes they sound rather than as
atomic symbols, and the resulting per-chord accuracy is used as a weighting
in duration-weighted chord symbol recall.
"""

__version__ = "0.1.0"

from .errors import (ChordEvalError, ChordSyntaxError, FormatError, OrderError,
                     UnknownQuality, UnsupportedKey, UnsupportedLabel)
from .syntax import (NO_CHORD, UNKNOWN, ChordLabel, Degree, Key, LabelKind,
                     NoteName, parse_chord_label, parse_key, parse_roman_numeral,
                     render_chord_label)
from .templates import QUALITY_TEMPLATES, QualityTemplate
from .pitch_classes import (PitchClassSet, chord_to_pitch_class_set,
                            diatonic_triads, pitch_class_of,
                            set_difference_size, set_intersection_size)
from .metric import ChordComparison, compare_labels, compare_sets
from .vocabulary import (SimplifiedLabel, Skip, VocabClass, binary_compare,
                         simplify)
from .evaluation import (CorpusReport, EvalOptions, Segment, Timeline,
                         TrackReport, evaluate_corpus, evaluate_track,
                         intersect_timelines, load_lab, parse_lab,
                         weighted_score)
