"""
Pitch-content accuracy of an estimated chord against the ground truth.

For ground truth pitch classes ``y`` and estimated pitch classes ``y_hat``::

    correct    C = |y ∩ y_hat|
    insertions I = |y_hat \\ y|
    accuracy   A = (C - I + |y|) / (2 |y|)

``A`` is 1 for a perfect estimate and reaches 0 when the estimate shares
nothing with the truth and is at least as large. Estimates with more wrong
notes than the truth has notes push the formula below zero; the reported
``accuracy`` is clamped into [0, 1] while ``raw_accuracy`` keeps the formula
value.

When the truth is empty (``N``) the formula is undefined. Two empty sets
score 1 (``both_empty``); a sounding estimate against silence scores 0
(``ref_empty``). An empty estimate against a sounding chord follows the
formula (0.5), unless ``empty_estimate="zero"`` is requested.

"""

from dataclasses import dataclass

from .pitch_classes import chord_to_pitch_class_set

__all__ = ["ChordComparison", "compare_sets", "compare_labels",
           "EMPTY_ESTIMATE_POLICIES"]

BOTH_EMPTY = "both_empty"
REF_EMPTY = "ref_empty"
EST_EMPTY = "est_empty"

EMPTY_ESTIMATE_POLICIES = ("formula", "zero")


@dataclass(frozen=True)
class ChordComparison:
    """Result of comparing one estimated chord with the ground truth."""

    correct: int
    insertions: int
    ground_truth_size: int
    raw_accuracy: float
    accuracy: float
    special_case: str | None = None

    @property
    def estimate_size(self):
        return self.correct + self.insertions


def compare_sets(truth, estimate, empty_estimate="formula"):
    """
    Compare two pitch-class sets.

    Parameters
    ----------
    truth : PitchClassSet
        Ground-truth pitch content.
    estimate : PitchClassSet
        Estimated pitch content.
    empty_estimate : {'formula', 'zero'}
        Score of an empty estimate against a non-empty truth: the literal
        formula value (0.5) or 0.

    Returns
    -------
    ChordComparison

    Examples
    --------
    >>> from chordpc.pitch_classes import PitchClassSet
    >>> r = compare_sets(PitchClassSet.of(0, 5, 9), PitchClassSet.of(2, 5, 9))
    >>> r.correct, r.insertions, round(r.accuracy, 4)
    (2, 1, 0.6667)

    """
    if empty_estimate not in EMPTY_ESTIMATE_POLICIES:
        raise ValueError(f"unknown empty_estimate policy {empty_estimate!r}")
    correct = len(truth & estimate)
    insertions = len(estimate - truth)
    n_truth = len(truth)

    if n_truth == 0:
        if insertions == 0:
            return ChordComparison(0, 0, 0, 1.0, 1.0, BOTH_EMPTY)
        return ChordComparison(0, insertions, 0, 0.0, 0.0, REF_EMPTY)

    raw = (correct - insertions + n_truth) / (2 * n_truth)
    accuracy = min(1.0, max(0.0, raw))
    special = None
    if not estimate:
        special = EST_EMPTY
        if empty_estimate == "zero":
            accuracy = 0.0
    return ChordComparison(correct, insertions, n_truth, raw, accuracy, special)


def compare_labels(truth, estimate, empty_estimate="formula"):
    """
    Compare two chord labels by their pitch content.

    Raises
    ------
    UnsupportedLabel
        If either label is the unknown marker ``X``.

    """
    return compare_sets(chord_to_pitch_class_set(truth),
                        chord_to_pitch_class_set(estimate),
                        empty_estimate=empty_estimate)
