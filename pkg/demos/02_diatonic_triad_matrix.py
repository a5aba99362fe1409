# %% [markdown]
# # Accuracy between the diatonic triads of a key
#
# Build the seven triads of C major from the scale and tabulate the accuracy
# of every (truth, estimate) pair. Neighbouring labels such as IV and V
# score 0 while third-related triads (IV and ii, I and vi) share two notes.

# %%
import numpy as np

from chordpc import Key, NoteName, compare_sets, diatonic_triads

key = Key(NoteName("C"), "major")
triads = diatonic_triads(key)
names = [n for n, _ in triads]

for name, pcs in triads:
    marks = "".join("o" if pc in pcs else "-" for pc in range(12))
    print(f"{name:5s} {marks}")

# %%
matrix = np.array([[compare_sets(t, e).accuracy for _, e in triads] for _, t in triads])
print("truth \\ estimate")
print("      " + " ".join(f"{n:>5s}" for n in names))
for name, row in zip(names, matrix):
    print(f"{name:5s} " + " ".join(f"{a:5.2f}" for a in row))

# %% [markdown]
# For equal-size chords the accuracy reduces to the fraction of shared
# notes, so the matrix is symmetric here.

# %%
assert np.allclose(matrix, matrix.T)
print("mean off-diagonal accuracy:", matrix[~np.eye(7, dtype=bool)].mean().round(4))
