import csv
import io
import json
import re
import shutil

import pytest

from chordpc.cli import main
from chordpc.reports import format_number


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("value, text", [
    (2 / 3, "0.666667"), (0.0, "0.000000"), (1, "1.000000"), (0.0000005, "0.000000"),
    (0.0000015, "0.000002"), (0.0000025, "0.000002"), (-0.0, "0.000000"), (None, None)])
def test_format_number(value, text):
    assert format_number(value) == text


def test_pair_worked_example(capsys):
    code, out, _ = run(capsys, "pair", "F:maj", "D:min")
    assert code == 0
    assert "C=2 I=1" in out and " A=0.666667" in out
    assert "majmin: 0" in out


def test_pair_roman_numerals(capsys):
    code, out, _ = run(capsys, "pair", "--key", "C:maj", "IV", "V")
    assert code == 0 and " A=0.000000" in out
    assert out.startswith("F:maj -> G:maj")


def test_pair_identity(capsys):
    code, out, _ = run(capsys, "pair", "F:maj", "F:maj")
    assert code == 0 and " A=1.000000" in out


def test_pair_parse_error(capsys):
    code, out, err = run(capsys, "pair", "F:maj", "F:mjr")
    assert code == 2 and out == ""
    assert "offset 2" in err


def test_pair_unknown_label_is_an_error(capsys):
    code, _, err = run(capsys, "pair", "X", "C")
    assert code == 2 and "unknown" in err


def test_pair_json_and_csv(capsys):
    _, out, _ = run(capsys, "pair", "F:maj", "D:min", "--format", "json")
    data = json.loads(out)
    assert data["accuracy"] == 0.666667 and data["correct"] == 2
    assert '"accuracy": 0.666667' in out
    _, out, _ = run(capsys, "pair", "F:maj", "D:min", "--format", "csv", "--vocab", "root")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["accuracy"] == "0.666667" and rows[0]["root"] == "0"


def test_pair_metric_selection(capsys):
    _, out, _ = run(capsys, "pair", "F:maj", "D:min", "--metric", "pitch", "--format", "json")
    assert "binary" not in json.loads(out)
    _, out, _ = run(capsys, "pair", "F:maj", "D:min", "--metric", "binary", "--format", "json")
    data = json.loads(out)
    assert "accuracy" not in data and set(data["binary"]) == {
        "root", "majmin", "sevenths", "majmin_inv", "sevenths_inv"}


def test_track_identical(capsys, fixtures_dir):
    ref = fixtures_dir / "track01" / "ref.lab"
    code, out, _ = run(capsys, "track", ref, ref)
    assert code == 0 and "pitch_accuracy=1.000000" in out


def test_track_contrast(capsys, fixtures_dir):
    code, out, _ = run(capsys, "track", fixtures_dir / "contrast_ref.lab",
                       fixtures_dir / "contrast_est_d.lab", "--format", "json")
    assert code == 0
    track = json.loads(out)["tracks"][0]
    assert track["pitch_accuracy"] == 0.666667
    assert track["binary"]["majmin"] == 0.0
    assert '"majmin": 0.000000' in out


def test_track_missing_file(capsys, fixtures_dir, tmp_path):
    missing = tmp_path / "absent.lab"
    code, out, err = run(capsys, "track", fixtures_dir / "contrast_ref.lab", missing)
    assert code == 1 and str(missing) in err and out == ""


def test_track_format_error(capsys, fixtures_dir, tmp_path):
    bad = tmp_path / "bad.lab"
    bad.write_text("0 1 C:maj\n1 2\n")
    code, _, err = run(capsys, "track", bad, fixtures_dir / "contrast_ref.lab")
    assert code == 2 and "line 2" in err


def test_track_segments_and_output(capsys, fixtures_dir, tmp_path):
    dest = tmp_path / "report.json"
    code, out, _ = run(capsys, "track", fixtures_dir / "track01" / "ref.lab",
                       fixtures_dir / "track01" / "est.lab", "--segments",
                       "--format", "json", "--output", dest)
    assert code == 0 and out == ""
    data = json.loads(dest.read_text())
    segs = data["tracks"][0]["segments"]
    assert [s["special_case"] for s in segs].count("both_empty") == 1
    assert data["tracks"][0]["pitch_accuracy"] == 0.8125


def test_corpus_manifest(capsys, fixtures_dir):
    code, out, _ = run(capsys, "corpus", fixtures_dir / "corpus" / "manifest.txt",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["corpus"]["pitch_accuracy"] == 0.625
    assert [t["id"] for t in data["tracks"]] == ["track_a", "track_b"]


def test_corpus_directories(capsys, fixtures_dir):
    d = fixtures_dir / "corpus"
    code, out, _ = run(capsys, "corpus", d / "ref", d / "est")
    assert code == 0 and "corpus: tracks=2 errors=0" in out
    assert "pitch_accuracy=0.625000" in out.splitlines()[-1]


def test_corpus_unmatched_stems(capsys, fixtures_dir, tmp_path):
    shutil.copytree(fixtures_dir / "corpus", tmp_path / "c")
    (tmp_path / "c" / "est" / "track_a.lab").unlink()
    code, out, err = run(capsys, "corpus", tmp_path / "c" / "ref", tmp_path / "c" / "est")
    assert code == 2 and "track_a" in err and out == ""


def test_corpus_empty_manifest(capsys, tmp_path):
    manifest = tmp_path / "m.txt"
    manifest.write_text("# nothing here\n")
    code, _, err = run(capsys, "corpus", manifest)
    assert code == 2 and "no tracks" in err


def test_corpus_missing_manifest(capsys, tmp_path):
    code, _, err = run(capsys, "corpus", tmp_path / "none.txt")
    assert code == 1 and "none.txt" in err


def test_corpus_with_broken_track(capsys, fixtures_dir, tmp_path):
    shutil.copytree(fixtures_dir / "corpus", tmp_path / "c")
    (tmp_path / "c" / "ref" / "track_c.lab").write_text("0 1 C:maj7x\n")
    (tmp_path / "c" / "est" / "track_c.lab").write_text("0 1 C\n")
    code, out, err = run(capsys, "corpus", tmp_path / "c" / "ref", tmp_path / "c" / "est",
                         "--format", "json")
    assert code == 3
    data = json.loads(out)
    assert data["corpus"]["n_errors"] == 1
    assert data["tracks"][2]["errors"] and "track_c" in err
    assert data["corpus"]["pitch_accuracy"] == 0.625


def test_usage_error(capsys):
    assert main(["pair"]) == 2
    assert main(["bogus"]) == 2
    capsys.readouterr()


def _scores_from_text(text):
    return dict(re.findall(r"(\w+)=(\d+\.\d{6}|undefined)", text))


@pytest.mark.parametrize("extra", [[], ["--uncovered", "skip"], ["--empty-estimate", "zero"],
                                   ["--metric", "binary", "--vocab", "sevenths"]])
def test_renderings_agree(capsys, fixtures_dir, extra):
    d = fixtures_dir / "corpus"
    common = ["corpus", d / "ref", d / "est", *extra]
    outputs = {}
    for fmt in ("text", "json", "csv"):
        code, outputs[fmt], _ = run(capsys, *common, "--format", fmt)
        assert code == 0
    data = json.loads(outputs["json"])
    rows = {r["id"]: r for r in csv.DictReader(io.StringIO(outputs["csv"]))}
    text_lines = outputs["text"].splitlines()
    for track, line in zip(data["tracks"], text_lines):
        text_scores = _scores_from_text(line)
        row = rows[track["id"]]
        if "pitch_accuracy" in track:
            assert text_scores["pitch_accuracy"] == row["pitch_accuracy"] \
                == format_number(track["pitch_accuracy"])
        for name, value in track.get("binary", {}).items():
            assert text_scores[name] == row[name] == format_number(value)
    corpus = _scores_from_text(text_lines[-1])
    if "pitch_accuracy" in data["corpus"]:
        assert corpus["pitch_accuracy"] == rows["__corpus__"]["pitch_accuracy"] \
            == format_number(data["corpus"]["pitch_accuracy"])


def test_json_valid_under_fuzz(capsys):
    import tempfile

    from hypothesis import given, settings
    from hypothesis import strategies as st

    lab_lines = st.lists(st.tuples(st.sampled_from(["0", "0.5", "1", "2.25", "3", "x", "-1"]),
                                   st.sampled_from(["0.5", "1", "2.25", "3", "4", "nan"]),
                                   st.sampled_from(["C", "N", "X", "G:min7/b7", "D:dim",
                                                    "Q", "C:maj(*3)", "E:sus4"])),
                         max_size=5)

    @settings(max_examples=150, deadline=None)
    @given(lab_lines, lab_lines, st.sampled_from(["track", "corpus"]))
    def check(ref_rows, est_rows, mode):
        with tempfile.TemporaryDirectory() as tmp:
            paths = []
            for name, rows in (("ref", ref_rows), ("est", est_rows)):
                p = f"{tmp}/{name}.lab"
                with open(p, "w") as fh:
                    fh.write("\n".join(" ".join(r) for r in rows))
                paths.append(p)
            if mode == "corpus":
                with open(f"{tmp}/m.txt", "w") as fh:
                    fh.write(f"t1 {paths[0]} {paths[1]}\nt2 {paths[1]} {paths[0]}\n")
                argv = ["corpus", f"{tmp}/m.txt"]
            else:
                argv = ["track", *paths]
            code = main(argv + ["--format", "json", "--segments"])
            out, _ = capsys.readouterr()
            if code in (0, 3):
                data = json.loads(out, parse_constant=lambda c: pytest.fail(c))
                for t in data["tracks"]:
                    for v in [t.get("pitch_accuracy"), *t.get("binary", {}).values()]:
                        assert v is None or 0.0 <= v <= 1.0
            else:
                assert code == 2 and out == ""

    check()
