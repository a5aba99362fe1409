import itertools

import pytest
from hypothesis import given

from chordpc import (NO_CHORD, UNKNOWN, PitchClassSet, UnsupportedLabel,
                     compare_labels, compare_sets, parse_chord_label)

import oracles
from strategies import pitch_class_sets

S = PitchClassSet.of


def test_f_vs_d_minor():
    r = compare_sets(S(0, 5, 9), S(2, 5, 9))
    assert (r.correct, r.insertions, r.ground_truth_size) == (2, 1, 3)
    assert r.accuracy == pytest.approx(2 / 3, abs=1e-12)
    assert r.special_case is None


def test_f_vs_g():
    r = compare_sets(S(0, 5, 9), S(2, 7, 11))
    assert (r.correct, r.insertions) == (0, 3)
    assert r.accuracy == 0.0 and r.raw_accuracy == 0.0


def test_perfect_match():
    r = compare_sets(S(0, 4, 7, 10), S(0, 4, 7, 10))
    assert (r.correct, r.insertions, r.accuracy) == (4, 0, 1.0)


def test_negative_raw_accuracy_is_clamped():
    r = compare_sets(S(0, 4, 7), S(1, 5, 6, 10))
    assert (r.correct, r.insertions) == (0, 4)
    assert r.raw_accuracy == pytest.approx(-1 / 6)
    assert r.accuracy == 0.0


def test_empty_estimate_follows_formula_by_default():
    r = compare_sets(S(0, 4, 7), S())
    assert (r.correct, r.insertions) == (0, 0)
    assert r.accuracy == 0.5 and r.raw_accuracy == 0.5
    assert r.special_case == "est_empty"
    z = compare_sets(S(0, 4, 7), S(), empty_estimate="zero")
    assert z.accuracy == 0.0 and z.raw_accuracy == 0.5


def test_no_chord_special_cases():
    both = compare_sets(S(), S())
    assert both.accuracy == 1.0 and both.special_case == "both_empty"
    ref = compare_sets(S(), S(0, 4, 7))
    assert ref.accuracy == 0.0 and ref.special_case == "ref_empty"
    assert ref.insertions == 3


def test_bad_policy():
    with pytest.raises(ValueError):
        compare_sets(S(0), S(0), empty_estimate="half")


def test_compare_labels():
    f, d, g = (parse_chord_label(x) for x in ("F:maj", "D:min", "G:maj"))
    assert compare_labels(f, d).accuracy == pytest.approx(2 / 3)
    assert compare_labels(f, g).accuracy == 0.0
    assert compare_labels(NO_CHORD, NO_CHORD).accuracy == 1.0
    with pytest.raises(UnsupportedLabel):
        compare_labels(f, UNKNOWN)
    with pytest.raises(UnsupportedLabel):
        compare_labels(UNKNOWN, f)


def test_asymmetry_witness():
    triad, seventh = parse_chord_label("C:maj"), parse_chord_label("C:7")
    assert compare_labels(triad, seventh).accuracy == pytest.approx(5 / 6)
    assert compare_labels(seventh, triad).accuracy == pytest.approx(7 / 8)


@given(pitch_class_sets, pitch_class_sets)
def test_properties(a, b):
    truth, est = PitchClassSet(a), PitchClassSet(b)
    r = compare_sets(truth, est)
    assert 0.0 <= r.accuracy <= 1.0
    assert r.correct + r.insertions == len(est)
    assert r.correct <= r.ground_truth_size == len(truth)
    assert (r.accuracy == 1.0) == (truth == est)
    assert r.accuracy == oracles.accuracy(set(truth), set(est))
    if r.special_case is None:
        assert r.accuracy == min(1.0, max(0.0, r.raw_accuracy))


def _triads_and_empty():
    sets = [PitchClassSet()]
    for root in range(12):
        for minor in (False, True):
            sets.append(PitchClassSet.from_iterable(oracles.triad(root, minor)))
    return sets


def test_perfect_match_characterisation_brute_force():
    sets = _triads_and_empty()
    for a, b in itertools.product(sets, repeat=2):
        assert (compare_sets(a, b).accuracy == 1.0) == (a == b)


def test_determinism():
    a, b = S(0, 3, 7, 10), S(0, 4, 7)
    assert compare_sets(a, b) == compare_sets(a, b)
