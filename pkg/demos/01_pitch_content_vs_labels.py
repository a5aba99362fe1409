# %% [markdown]
# # Pitch content versus label identity
#
# An F major chord can be mis-estimated as D minor or as G major. Label-based
# scoring calls both errors equally wrong. Comparing the sounded pitch
# classes tells them apart.

# %%
from chordpc import (VocabClass, binary_compare, chord_to_pitch_class_set,
                     compare_labels, parse_chord_label)

truth = parse_chord_label("F:maj")
candidates = [parse_chord_label(x) for x in ("D:min", "G:maj", "F:maj7", "N")]

print("truth", truth, sorted(chord_to_pitch_class_set(truth)))
for est in candidates:
    print(f"  {str(est):8s} pitch classes {sorted(chord_to_pitch_class_set(est))}")

# %% [markdown]
# `compare_labels` returns the correct-note count, the insertion count and
# the combined accuracy (clamped to [0, 1]; the raw formula value is kept).

# %%
for est in candidates:
    r = compare_labels(truth, est)
    note = f" ({r.special_case})" if r.special_case else ""
    print(f"F:maj -> {str(est):8s} C={r.correct} I={r.insertions} "
          f"A={r.accuracy:.4f}{note}")

# %% [markdown]
# The five MIREX vocabulary classes only ask whether the reduced labels agree.

# %%
header = "".join(f"{v.value:>14s}" for v in VocabClass)
print(f"{'estimate':10s}{header}")
for est in candidates:
    row = "".join(f"{binary_compare(truth, est, v)!s:>14s}" for v in VocabClass)
    print(f"{str(est):10s}{row}")
