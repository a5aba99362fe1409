# %% [markdown]
# # Duration-weighted evaluation of annotation files
#
# The pitch-content accuracy is used as a per-segment weight in
# duration-weighted chord symbol recall, next to the binary baselines.

# %%
import pathlib

from chordpc import EvalOptions, evaluate_corpus, evaluate_track, load_lab
from chordpc.reports import to_json, to_text

fixtures = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"
ref = load_lab(fixtures / "track01" / "ref.lab")
est = load_lab(fixtures / "track01" / "est.lab")

# %% [markdown]
# The estimate leaves 4.0-6.0 s empty; by default that time counts as `N`.

# %%
report = evaluate_track(ref, est, EvalOptions(segments=True), track_id="track01")
for s in report.segments:
    c = s.comparison
    print(f"{s.start:5.2f}-{s.end:5.2f}  {str(s.truth):6s} -> {str(s.estimate):6s} "
          f"A={c.accuracy:.3f} {c.special_case or ''}")
print("pitch accuracy:", report.pitch_accuracy)
print({v.value: round(x, 4) for v, x in report.binary.items()})

# %% [markdown]
# Switching the policies changes how silence and gaps are treated.

# %%
for opts in (EvalOptions(uncovered="skip"), EvalOptions(empty_estimate="zero")):
    r = evaluate_track(ref, est, opts)
    print(opts.uncovered, opts.empty_estimate, round(r.pitch_accuracy, 6), r.evaluated_s)

# %% [markdown]
# Corpus scores weight each track by its evaluated duration.

# %%
corpus = fixtures / "corpus"
pairs = [(p.stem, p, corpus / "est" / p.name) for p in sorted((corpus / "ref").glob("*.lab"))]
result = evaluate_corpus(pairs, workers=2)
print(to_text(result))
print(to_json(result)[:400], "...")
