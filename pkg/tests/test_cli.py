"""End-to-end CLI behavior: exit codes, artifacts, determinism."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

DATA = Path(__file__).resolve().parent.parent / "data"

TABLE = """x,z,count
1,2,14
1,3,6
2,4,11
2,5,18
2,6,7
3,6,5
3,7,9
3,8,4
4,9,5
4,11,2
"""


def run(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "menzerath", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


@pytest.fixture()
def table_file(tmp_path):
    path = tmp_path / "table.csv"
    path.write_text(TABLE, encoding="utf-8")
    return path


class TestFit:
    def test_basic_fit_writes_report(self, table_file, tmp_path):
        out = tmp_path / "out"
        result = run(
            "fit", "--input", str(table_file),
            "--models", "hyperbolic,altmann,copula",
            "--out", str(out), "--emit", "json",
        )
        assert result.returncode == 0, result.stderr
        payload = json.loads((out / "report.json").read_text())
        names = [b["model"] for b in payload["models"]]
        assert names == ["hyperbolic", "altmann", "copula"]
        copula = payload["models"][2]
        assert copula["estimator"] == "pearson-raw"
        assert copula["seed"] == 0
        assert copula["rss"] >= 0.0
        assert payload["sampling"] == {"seed": 0, "n": 100}

    def test_all_artifacts(self, table_file, tmp_path):
        out = tmp_path / "out"
        result = run(
            "fit", "--input", str(table_file),
            "--out", str(out), "--emit", "json,csv,svg",
        )
        assert result.returncode == 0, result.stderr
        for name in ("report.json", "curves.csv", "cells.csv", "figure.svg"):
            assert (out / name).exists()

    def test_degenerate_table_exit_2(self, tmp_path):
        path = tmp_path / "one.csv"
        path.write_text("2,5,9\n", encoding="utf-8")
        result = run("fit", "--input", str(path), "--out", str(tmp_path / "o"))
        assert result.returncode == 2
        assert "variance" in result.stderr.lower()

    def test_parse_error_exit_1(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("1,2,one\n", encoding="utf-8")
        result = run("fit", "--input", str(path), "--out", str(tmp_path / "o"))
        assert result.returncode == 1
        assert "line 1" in result.stderr

    def test_missing_file_exit_1(self, tmp_path):
        result = run("fit", "--input", str(tmp_path / "nope.csv"))
        assert result.returncode == 1

    def test_unknown_model_exit_1(self, table_file, tmp_path):
        result = run(
            "fit", "--input", str(table_file), "--models", "fancy",
            "--out", str(tmp_path / "o"),
        )
        assert result.returncode == 1

    def test_boundaries_adds_both_copula_variants(self, table_file, tmp_path):
        out = tmp_path / "out"
        result = run(
            "fit", "--input", str(table_file), "--models", "hyperbolic",
            "--boundaries", "--out", str(out),
        )
        assert result.returncode == 0, result.stderr
        payload = json.loads((out / "report.json").read_text())
        names = [b["model"] for b in payload["models"]]
        assert names == ["hyperbolic", "copula", "copula-boundaries"]
        by_name = {b["model"]: b for b in payload["models"]}
        assert by_name["copula"]["infeasible_mass"] > 0.0
        assert by_name["copula-boundaries"]["infeasible_mass"] == 0.0

    def test_log_copula_flag(self, table_file, tmp_path):
        out = tmp_path / "out"
        result = run(
            "fit", "--input", str(table_file), "--models", "copula",
            "--log-copula", "--out", str(out),
        )
        assert result.returncode == 0, result.stderr
        payload = json.loads((out / "report.json").read_text())
        assert payload["models"][0]["estimator"] == "pearson-log"

    def test_corpus_input(self, tmp_path):
        corpus = tmp_path / "corpus.txt"
        corpus.write_text("ab-cde\nab\nabc-de-fg\nab-cd\nabcd\n", encoding="utf-8")
        out = tmp_path / "out"
        result = run(
            "fit", "--input", str(corpus), "--kind", "corpus",
            "--models", "hyperbolic", "--out", str(out),
        )
        assert result.returncode == 0, result.stderr
        payload = json.loads((out / "report.json").read_text())
        assert payload["dataset"]["total"] == 5

    def test_boundary_domain_table_converted(self, tmp_path):
        path = tmp_path / "b.csv"
        path.write_text("#domain=boundaries\n0,1,5\n1,3,5\n2,4,2\n", encoding="utf-8")
        out = tmp_path / "out"
        result = run(
            "fit", "--input", str(path), "--models", "hyperbolic", "--out", str(out)
        )
        assert result.returncode == 0, result.stderr
        payload = json.loads((out / "report.json").read_text())
        assert payload["dataset"]["domain"] == "segments"


class TestSample:
    def test_writes_samples_with_metadata_header(self, table_file, tmp_path):
        out = tmp_path / "out"
        result = run(
            "sample", "--input", str(table_file), "--n", "50", "--seed", "3",
            "--out", str(out),
        )
        assert result.returncode == 0, result.stderr
        lines = (out / "samples.csv").read_text().strip().split("\n")
        assert lines[0].startswith("# model=copula estimator=pearson-raw rho=")
        assert "seed=3" in lines[0]
        assert lines[1] == "x,z"
        assert len(lines) == 52

    def test_n_zero_exit_1(self, table_file, tmp_path):
        result = run(
            "sample", "--input", str(table_file), "--n", "0",
            "--out", str(tmp_path / "o"),
        )
        assert result.returncode == 1

    def test_log_copula_recorded_in_header(self, table_file, tmp_path):
        out = tmp_path / "out"
        result = run(
            "sample", "--input", str(table_file), "--log-copula", "--out", str(out)
        )
        assert result.returncode == 0, result.stderr
        header = (out / "samples.csv").read_text().split("\n")[0]
        assert "estimator=pearson-log" in header

    def test_boundaries_samples_feasible(self, table_file, tmp_path):
        out = tmp_path / "out"
        result = run(
            "sample", "--input", str(table_file), "--boundaries",
            "--n", "200", "--out", str(out),
        )
        assert result.returncode == 0, result.stderr
        rows = (out / "samples.csv").read_text().strip().split("\n")[2:]
        for row in rows:
            x, z = map(int, row.split(","))
            assert 1 <= x <= z

    def test_svg_emitted_on_request(self, table_file, tmp_path):
        out = tmp_path / "out"
        result = run(
            "sample", "--input", str(table_file), "--emit", "svg", "--out", str(out)
        )
        assert result.returncode == 0, result.stderr
        assert (out / "figure.svg").exists()


class TestDeterminism:
    def test_fit_and_sample_reproducible(self, table_file, tmp_path):
        outputs = []
        for run_dir in ("a", "b"):
            out = tmp_path / run_dir
            r1 = run(
                "fit", "--input", str(table_file), "--out", str(out),
                "--emit", "json,csv,svg", "--seed", "9",
            )
            r2 = run(
                "sample", "--input", str(table_file), "--out", str(out),
                "--n", "100", "--seed", "9", "--emit", "svg",
            )
            assert r1.returncode == 0 and r2.returncode == 0
            outputs.append(
                {
                    name: (out / name).read_bytes()
                    for name in (
                        "report.json", "curves.csv", "cells.csv",
                        "figure.svg", "samples.csv",
                    )
                }
            )
        assert outputs[0] == outputs[1]

    def test_bundled_dataset_runs(self, tmp_path):
        result = run(
            "fit", "--input", str(DATA / "menzerath_synthetic.csv"),
            "--out", str(tmp_path / "out"), "--emit", "json",
        )
        assert result.returncode == 0, result.stderr
