import json

import pytest

from src.cli import JOBS_ENV, CliConfig, default_jobs, main, parse_config


@pytest.fixture
def graph_files(tmp_path):
    paths = {}
    for name, text in {
        "arc": "n=2\n1 > 2\n",
        "arc_reversed": "n=2\n2 > 1\n",
        "edge": "n=2\n1 - 2\n",
        "triangle": "n=3\n1 - 2\n",
        "broken": "n=2\n1 > 3\n",
        "large": "n=10\n1 > 2\n",
        "large_relabeled": "n=10\n9 > 10\n",
    }.items():
        path = tmp_path / f"{name}.graph"
        path.write_text(text)
        paths[name] = str(path)
    return paths


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_single_arc(self, capsys, graph_files):
        code, out, _ = run(capsys, ["analyze", graph_files["arc"]])
        assert code == 0
        report = json.loads(out)
        assert report["det_w"] == "-2i"
        assert report["snf"] == ["1", "2"]
        assert report["condition"] is True
        assert report["self_converse"] is True
        assert report["charpoly_a"] == [-1, 0, 1]

    def test_singular_walk_matrix(self, capsys, graph_files):
        code, out, _ = run(capsys, ["analyze", graph_files["edge"]])
        assert code == 0
        report = json.loads(out)
        assert report["det_w"] == "0" and report["condition"] is False

    def test_past_search_bound(self, capsys, graph_files):
        code, out, err = run(capsys, ["analyze", graph_files["large"]])
        assert code == 0
        report = json.loads(out)
        assert report["self_converse"] is None
        assert report["det_w"] == "0"
        assert "search bound" in err

    def test_parse_error_exits_2(self, capsys, graph_files):
        code, _, err = run(capsys, ["analyze", graph_files["broken"]])
        assert code == 2
        assert "line 2" in err

    def test_missing_file_exits_2(self, capsys, tmp_path):
        code, _, err = run(capsys, ["analyze", str(tmp_path / "nope.graph")])
        assert code == 2
        assert "nope.graph" in err


class TestCompare:
    def test_relabeled_pair(self, capsys, graph_files):
        code, out, _ = run(capsys, ["compare", graph_files["arc"], graph_files["arc_reversed"]])
        assert code == 0
        verdict = json.loads(out)
        assert verdict["r_cospectral"] and verdict["isomorphic"]
        assert verdict["unitary"] == [["0", "1"], ["1", "0"]]
        assert verdict["level"] == "1"
        assert verdict["level_in_{1,1+i}"] is True

    def test_not_cospectral(self, capsys, graph_files):
        code, out, _ = run(capsys, ["compare", graph_files["arc"], graph_files["edge"]])
        assert code == 0
        assert json.loads(out) == {"r_cospectral": False, "isomorphic": False}

    def test_singular_walk_matrix(self, capsys, graph_files):
        code, out, _ = run(capsys, ["compare", graph_files["edge"], graph_files["edge"]])
        assert code == 0
        assert json.loads(out)["unitary"] == "undetermined"

    def test_past_search_bound(self, capsys, graph_files):
        code, out, _ = run(capsys, ["compare", graph_files["large"], graph_files["large_relabeled"]])
        assert code == 0
        verdict = json.loads(out)
        assert verdict["r_cospectral"] and verdict["isomorphic"] is None
        assert verdict["unitary"] == "undetermined"

    def test_order_mismatch(self, capsys, graph_files):
        code, _, _ = run(capsys, ["compare", graph_files["arc"], graph_files["triangle"]])
        assert code == 2


class TestSnf:
    def test_walk_matrix_of_arc(self, capsys, tmp_path):
        path = tmp_path / "w.mat"
        path.write_text("# W for 1 > 2\n1,i\n1,-i\n")
        code, out, _ = run(capsys, ["snf", str(path)])
        assert code == 0
        assert out.splitlines() == ["1,2", "unimodular: true"]

    def test_non_square_exits_2(self, capsys, tmp_path):
        path = tmp_path / "w.mat"
        path.write_text("1,2,3\n4,5,6\n")
        code, _, _ = run(capsys, ["snf", str(path)])
        assert code == 2


class TestCensus:
    def test_csv_row(self, capsys):
        code, out, _ = run(capsys, ["census", "3"])
        assert code == 0
        assert out.strip() == "3,10,1.000,0.100"

    def test_json_row(self, capsys):
        code, out, _ = run(capsys, ["census", "2", "--format", "json"])
        assert code == 0
        row = json.loads(out)
        assert row["classes"] == 3 and row["condition_fraction"] == "0.333"

    def test_writes_results(self, capsys, tmp_path):
        out_dir = tmp_path / "census"
        code, _, _ = run(capsys, ["census", "2", "--out", str(out_dir)])
        assert code == 0
        assert (out_dir / "table_row_n2.csv").exists()
        assert (out_dir / "buckets_n2.json").exists()

    def test_long_order_needs_flag(self, capsys):
        code, _, err = run(capsys, ["census", "6"])
        assert code == 2
        assert "--allow-long" in err

    def test_out_of_range(self, capsys):
        assert run(capsys, ["census", "7"])[0] == 2

    def test_bad_format(self, capsys):
        assert run(capsys, ["census", "3", "--format", "xml"])[0] == 2

    def test_find_mates_none_below_four(self, capsys):
        code, out, _ = run(capsys, ["find-mates", "3"])
        assert code == 0
        assert json.loads(out) == []

    def test_find_mates_four(self, capsys):
        code, out, _ = run(capsys, ["find-mates", "4"])
        assert code == 0
        buckets = json.loads(out)
        assert sum(len(b["members"]) for b in buckets) == 70 - 64


class TestConfig:
    def test_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["census"])
        assert info.value.code == 2

    def test_jobs_from_environment(self, monkeypatch):
        monkeypatch.setenv(JOBS_ENV, "3")
        assert default_jobs() == 3
        assert parse_config(["census", "4"]).jobs == 3
        assert parse_config(["census", "4", "--jobs", "2"]).jobs == 2

    def test_bad_environment(self, monkeypatch):
        monkeypatch.setenv(JOBS_ENV, "many")
        with pytest.raises(ValueError):
            default_jobs()

    def test_validate(self):
        with pytest.raises(ValueError):
            CliConfig(subcommand="census", n=3, jobs=0).validate()
        assert CliConfig(subcommand="analyze", paths=["g.graph"]).validate().jobs == 1
