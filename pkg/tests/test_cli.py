import filecmp

import pytest

from bywords.cli import bundled, main

SMALL_TEXT = (
    "I\n"
    "\n"
    'LO, praise of the prowess. "Who are ye," he said!\n'
    "II\n"
    "Woe to the war-hall; honor the sea.\n"
)

PIPELINE_SUFFIXES = (
    ".cleaned.csv",
    ".matrix.csv",
    ".words.txt",
    ".analysis.txt",
    ".integrated.csv",
)


@pytest.fixture()
def small_input(tmp_path):
    path = tmp_path / "poem.txt"
    path.write_text(SMALL_TEXT, encoding="utf-8")
    return path


def run(*argv):
    return main([str(a) for a in argv])


# ---- parser basics --------------------------------------------------------


def test_help_exits_zero(capsys):
    with pytest.raises(SystemExit) as info:
        run("--help")
    assert info.value.code == 0
    assert "pipeline" in capsys.readouterr().out


def test_version_exits_zero(capsys):
    with pytest.raises(SystemExit) as info:
        run("--version")
    assert info.value.code == 0
    assert "bywords" in capsys.readouterr().out


def test_unknown_flag_exits_two(small_input, tmp_path, capsys):
    with pytest.raises(SystemExit) as info:
        run("clean", "--input", small_input, "--output",
            tmp_path / "out.csv", "--frobnicate")
    assert info.value.code == 2


def test_missing_subcommand_exits_two():
    with pytest.raises(SystemExit) as info:
        run()
    assert info.value.code == 2


# ---- staged commands ------------------------------------------------------


def test_clean_build_analyze_join_stages(small_input, tmp_path, capsys):
    cleaned = tmp_path / "poem.cleaned.csv"
    matrix = tmp_path / "poem.matrix.csv"
    words = tmp_path / "poem.words.txt"
    analysis = tmp_path / "poem.analysis.txt"
    integrated = tmp_path / "poem.integrated.csv"

    assert run("clean", "--input", small_input, "--output", cleaned) == 0
    assert cleaned.exists()
    assert run("build", "--input", cleaned, "--matrix", matrix,
               "--wordlist", words) == 0
    header = matrix.read_text(encoding="utf-8").splitlines()[0]
    assert header == "canto,line,word,charnum,speech,eos"
    assert run("analyze", "--matrix", matrix, "--output", analysis) == 0
    assert analysis.read_text(encoding="utf-8").startswith("Filename\tSeg\t")
    assert run("join", "--matrix", matrix, "--table", analysis,
               "--verify", "--output", integrated) == 0
    first = integrated.read_text(encoding="utf-8").splitlines()[0]
    assert first.startswith("canto,line,word,charnum,speech,eos,Seg,")


def test_recur_prints_metrics(small_input, tmp_path, capsys):
    out = tmp_path / "o"
    assert run("pipeline", "--input", small_input, "--out", out) == 0
    capsys.readouterr()
    metrics_path = tmp_path / "metrics.csv"
    plot_path = tmp_path / "plot.csv"
    code = run("recur", "--input", out / "poem.matrix.csv", "--column", "word",
               "--metrics-out", metrics_path, "--plot-out", plot_path)
    assert code == 0
    printed = capsys.readouterr().out
    for name in ("rr=", "det=", "maxline=", "meanline="):
        assert name in printed
    assert metrics_path.read_text(encoding="utf-8").startswith(
        "column,n,lmin,rr,det,maxline,meanline\n"
    )
    assert plot_path.read_text(encoding="utf-8").startswith("i,j\n")


def test_recur_bad_lmin_exits_one(small_input, tmp_path, capsys):
    out = tmp_path / "o"
    run("pipeline", "--input", small_input, "--out", out)
    code = run("recur", "--input", out / "poem.matrix.csv", "--column", "word",
               "--lmin", "1")
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_missing_input_exits_one(tmp_path, capsys):
    code = run("clean", "--input", tmp_path / "absent.txt",
               "--output", tmp_path / "out.csv")
    assert code == 1
    assert "bywords: error:" in capsys.readouterr().err
    assert not (tmp_path / "out.csv").exists()


def test_output_equals_input_exits_two(small_input, capsys):
    code = run("clean", "--input", small_input, "--output", small_input)
    assert code == 2
    assert "usage error" in capsys.readouterr().err
    # the input survives untouched
    assert small_input.read_text(encoding="utf-8") == SMALL_TEXT


def test_duplicate_outputs_exit_two(small_input, tmp_path, capsys):
    cleaned = tmp_path / "c.csv"
    run("clean", "--input", small_input, "--output", cleaned)
    same = tmp_path / "both.csv"
    code = run("build", "--input", cleaned, "--matrix", same, "--wordlist", same)
    assert code == 2
    assert not same.exists()


def test_join_mismatch_exits_one_and_cleans_up(small_input, tmp_path, capsys):
    out = tmp_path / "o"
    run("pipeline", "--input", small_input, "--out", out)
    table = out / "poem.analysis.txt"
    lines = table.read_text(encoding="utf-8").splitlines(keepends=True)
    table.write_text("".join(lines[:-1]), encoding="utf-8")  # drop one row
    target = tmp_path / "joined.csv"
    code = run("join", "--matrix", out / "poem.matrix.csv", "--table", table,
               "--output", target)
    assert code == 1
    err = capsys.readouterr().err
    assert "cannot join" in err
    assert not target.exists()


# ---- pipeline -------------------------------------------------------------


def test_pipeline_writes_all_outputs(small_input, tmp_path):
    out = tmp_path / "out"
    assert run("pipeline", "--input", small_input, "--out", out) == 0
    for suffix in PIPELINE_SUFFIXES:
        assert (out / f"poem{suffix}").exists(), suffix


def test_pipeline_matches_staged_commands(small_input, tmp_path):
    staged = tmp_path / "staged"
    staged.mkdir()
    cleaned = staged / "poem.cleaned.csv"
    matrix = staged / "poem.matrix.csv"
    words = staged / "poem.words.txt"
    analysis = staged / "poem.analysis.txt"
    integrated = staged / "poem.integrated.csv"
    assert run("clean", "--input", small_input, "--output", cleaned) == 0
    assert run("build", "--input", cleaned, "--matrix", matrix,
               "--wordlist", words) == 0
    assert run("analyze", "--matrix", matrix, "--output", analysis) == 0
    assert run("join", "--matrix", matrix, "--table", analysis,
               "--verify", "--output", integrated) == 0

    piped = tmp_path / "piped"
    assert run("pipeline", "--input", small_input, "--out", piped) == 0
    for suffix in PIPELINE_SUFFIXES:
        name = f"poem{suffix}"
        assert filecmp.cmp(staged / name, piped / name, shallow=False), name


def test_pipeline_is_deterministic(small_input, tmp_path):
    first = tmp_path / "first"
    second = tmp_path / "second"
    assert run("pipeline", "--input", small_input, "--out", first) == 0
    assert run("pipeline", "--input", small_input, "--out", second) == 0
    for suffix in PIPELINE_SUFFIXES:
        name = f"poem{suffix}"
        assert (first / name).read_bytes() == (second / name).read_bytes(), name


def test_pipeline_multiple_inputs_parallel(small_input, tmp_path):
    other = tmp_path / "second.txt"
    other.write_text("I\nNow Beowulf bode in the burg.\n", encoding="utf-8")
    serial = tmp_path / "serial"
    parallel = tmp_path / "parallel"
    assert run("pipeline", "--input", small_input, other, "--out", serial) == 0
    assert run("pipeline", "--input", small_input, other,
               "--out", parallel, "--jobs", "2") == 0
    for stem in ("poem", "second"):
        for suffix in PIPELINE_SUFFIXES:
            name = f"{stem}{suffix}"
            assert filecmp.cmp(serial / name, parallel / name, shallow=False), name


def test_pipeline_duplicate_stems_exit_two(small_input, tmp_path, capsys):
    nested = tmp_path / "nested"
    nested.mkdir()
    twin = nested / "poem.txt"
    twin.write_text("I\na.\n", encoding="utf-8")
    code = run("pipeline", "--input", small_input, twin, "--out", tmp_path / "o")
    assert code == 2
    assert "distinct" in capsys.readouterr().err


def test_pipeline_failure_removes_outputs(small_input, tmp_path, capsys):
    missing = tmp_path / "absent.txt"
    out = tmp_path / "out"
    code = run("pipeline", "--input", small_input, missing, "--out", out)
    assert code == 1
    leftovers = [p for p in out.iterdir()] if out.exists() else []
    assert leftovers == []


def test_bundled_sample_pipeline_and_recur(tmp_path, capsys):
    sample = bundled("beowulf.txt")
    out = tmp_path / "sample"
    assert run("pipeline", "--input", sample, "--out", out) == 0
    matrix_lines = (out / "beowulf.matrix.csv").read_text(encoding="utf-8")
    assert matrix_lines.count("\n") == 2338  # header + one row per word
    capsys.readouterr()
    assert run("recur", "--input", out / "beowulf.matrix.csv",
               "--column", "speech") == 0
    printed = capsys.readouterr().out
    assert printed.startswith("rr=")


def test_module_entry_point(small_input, tmp_path):
    import subprocess
    import sys

    result = subprocess.run(
        [sys.executable, "-m", "bywords", "clean",
         "--input", str(small_input), "--output", str(tmp_path / "c.csv")],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert (tmp_path / "c.csv").exists()
