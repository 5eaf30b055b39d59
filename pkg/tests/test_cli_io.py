import json
import subprocess
import sys

import pytest

from conjlink import builtin_dataset, damage, restore, run_grid, score_g, GeneratorConfig
from conjlink import io
from conjlink.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def table_rows(csv_text):
    return [line for line in csv_text.splitlines() if not line.startswith("#")][1:]


class TestRank:
    def test_karate_top(self, capsys):
        code, out, _ = run(["rank", "--input", "karate", "--method", "g", "--universe", "nonadjacent", "--top", "1"], capsys)
        assert code == 0
        rows = table_rows(out)
        assert len(rows) == 1
        assert rows[0].split(",")[:3] == ["1", "3", "34"]

    def test_lesmis_top(self, capsys):
        _, out, _ = run(["rank", "--input", "lesmis", "--top", "1"], capsys)
        assert table_rows(out)[0].split(",")[1:3] == ["Javert", "Marius"]

    def test_edgeless_pair(self, capsys, tmp_path):
        # a single edge shares no neighbours, so the neighbourhood index is zero
        path = tmp_path / "two.edges"
        path.write_text("a b\n")
        _, out, _ = run(["rank", "--input", str(path), "--universe", "all", "--method", "j"], capsys)
        rows = table_rows(out)
        assert rows == ["1,a,b,0"]

    def test_top_is_prefix(self, capsys):
        _, full, _ = run(["rank", "--input", "karate", "--method", "ad", "--top", "0"], capsys)
        _, top, _ = run(["rank", "--input", "karate", "--method", "ad", "--top", "7"], capsys)
        assert table_rows(top) == table_rows(full)[:7]
        assert len(table_rows(full)) == 483

    def test_twelve_significant_digits(self, capsys):
        _, out, _ = run(["rank", "--input", "karate", "--top", "1"], capsys)
        score = table_rows(out)[0].split(",")[3]
        ref = score_g(builtin_dataset("karate"))[0].score
        assert score == format(ref, ".12g")

    def test_builtin_escape_and_paths(self, capsys, tmp_path):
        _, a, _ = run(["rank", "--input", "@karate", "--top", "3"], capsys)
        path = tmp_path / "karate"
        path.write_text("x y\ny z\n")
        _, b, _ = run(["rank", "--input", "karate", "--top", "3"], capsys)
        assert table_rows(a) == table_rows(b)
        _, c, _ = run(["rank", "--input", str(path), "--top", "3"], capsys)
        assert table_rows(c)[0].split(",")[1:3] == ["x", "z"]

    def test_json(self, capsys):
        _, out, _ = run(["rank", "--input", "karate", "--top", "2", "--format", "json"], capsys)
        doc = json.loads(out)
        assert doc["schema_version"] == "1"
        assert doc["command"]["method"] == "g"
        assert doc["payload"]["entries"][0]["node_a"] == "3"


class TestRestore:
    def test_karate_scenario_two(self, capsys):
        code, out, _ = run(["restore", "--input", "karate", "--remove", "g", "--create", "g",
                            "--m", "10", "--scenario", "2", "--format", "json"], capsys)
        assert code == 0
        summary = json.loads(out)["payload"]["summary"]
        assert summary["K"] == 6 and summary["eta"] == 0.6

    def test_lesmis_h_scenario_one(self, capsys):
        _, out, _ = run(["restore", "--input", "lesmis", "--remove", "h", "--create", "h",
                         "--m", "2", "--scenario", "1", "--format", "json"], capsys)
        summary = json.loads(out)["payload"]["summary"]
        # walks up to length 10 recover both removed links immediately
        assert summary["m_plus"] == 2
        assert summary["Q"] == pytest.approx((2926 + 2 - 254) / 254)

    def test_csv_table(self, capsys):
        _, out, _ = run(["restore", "--input", "karate", "--remove", "g", "--create", "g", "--m", "10"], capsys)
        rows = table_rows(out)
        assert rows[3] == "2,3,4,11,0"
        assert "# summary=" in out and '"m_plus": 28' in out

    @pytest.mark.parametrize("m", ["0", "78", "100"])
    def test_bad_m(self, capsys, m):
        code, _, err = run(["restore", "--input", "karate", "--remove", "g", "--create", "g", "--m", m], capsys)
        assert code == 2
        assert "--m" in err

    def test_divergence_exit_code(self, capsys):
        code, _, err = run(["restore", "--input", "lesmis", "--remove", "h", "--create", "g",
                            "--m", "2", "--horizon", "infinite"], capsys)
        assert code == 4
        assert "alpha * lambda_max" in err


class TestExitCodes:
    def test_bad_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["rank", "--input", "karate", "--method", "katz"])
        assert exc.value.code == 2

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(["rank", "--input", str(tmp_path / "nope.edges")], capsys)
        assert code == 3

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.edges"
        path.write_text("a b\nc\n")
        code, _, err = run(["rank", "--input", str(path)], capsys)
        assert code == 3 and "line 2" in err

    def test_unknown_builtin(self, capsys):
        code, _, _ = run(["rank", "--input", "@dolphins"], capsys)
        assert code == 3

    def test_bad_walk_length(self, capsys):
        code, _, _ = run(["rank", "--input", "karate", "--method", "h", "--p", "1"], capsys)
        assert code == 2

    def test_invalid_generator(self, capsys):
        code, _, _ = run(["generate", "--gen", "ba", "--n", "10", "--m0", "3", "--attach", "5"], capsys)
        assert code == 2

    def test_rank_divergence(self, capsys):
        code, _, _ = run(["rank", "--input", "lesmis", "--method", "sigma"], capsys)
        assert code == 4


class TestGenerateCommand:
    def test_er_complete(self, capsys):
        _, out, _ = run(["generate", "--gen", "er", "--n", "10", "--p", "1", "--seed", "1"], capsys)
        assert len(out.splitlines()) == 45

    def test_er_empty(self, capsys):
        _, out, _ = run(["generate", "--gen", "er", "--n", "10", "--p", "0"], capsys)
        assert out == ""

    def test_ba(self, capsys, tmp_path):
        path = tmp_path / "ba.edges"
        code, out, _ = run(["generate", "--gen", "ba", "--n", "100", "--m0", "5", "--attach", "3",
                            "--seed", "1", "--out", str(path)], capsys)
        assert code == 0 and out == ""
        assert len(path.read_text().splitlines()) == 290
        code, rank_out, _ = run(["rank", "--input", str(path), "--method", "ra", "--top", "1"], capsys)
        assert code == 0 and len(table_rows(rank_out)) == 1


class TestExperimentCommand:
    def test_single_method(self, capsys):
        _, out, _ = run(["experiment", "--n", "40", "--m0", "4", "--attach", "2", "--m", "5",
                         "--realizations", "1", "--methods", "j"], capsys)
        rows = table_rows(out)
        assert len(rows) == 1 and rows[0].startswith("J,J,")

    def test_header(self, capsys):
        _, out, _ = run(["experiment", "--n", "30", "--m0", "4", "--attach", "2", "--m", "3",
                         "--realizations", "2", "--methods", "g,ra"], capsys)
        lines = [l for l in out.splitlines() if not l.startswith("#")]
        assert lines[0] == "removal_method,creation_method,mean_q,std_q,mean_eta,std_eta,n_valid"
        assert len(lines) == 5

    def test_bad_methods(self, capsys):
        code, _, _ = run(["experiment", "--methods", "g,katz", "--realizations", "1"], capsys)
        assert code == 2

    def test_failed_cells_emit_blank_means(self, capsys):
        _, out, _ = run(["experiment", "--gen", "er", "--n", "30", "--p", "0.5", "--m", "3",
                         "--realizations", "1", "--methods", "h,j", "--horizon", "infinite"], capsys)
        rows = dict((tuple(r.split(",")[:2]), r) for r in table_rows(out))
        assert rows["H", "J"] == "H,J,,,,,0"


COMMANDS = [
    ["rank", "--input", "karate", "--method", "h"],
    ["rank", "--input", "lesmis", "--method", "ra", "--universe", "adjacent"],
    ["restore", "--input", "karate", "--remove", "g", "--create", "h", "--m", "5"],
    ["restore", "--input", "lesmis", "--remove", "ad", "--create", "g", "--m", "5", "--scenario", "2"],
    ["experiment", "--n", "30", "--m0", "4", "--attach", "2", "--m", "3", "--realizations", "2", "--methods", "g,j,ad"],
]


@pytest.mark.parametrize("argv", COMMANDS)
def test_round_trip_and_cross_format(argv, capsys):
    _, csv_out, _ = run(argv + ["--format", "csv"], capsys)
    _, json_out, _ = run(argv + ["--format", "json"], capsys)
    rec_csv = io.from_csv(csv_out)
    rec_json = io.from_json(json_out)
    assert io.to_csv(rec_csv) == csv_out
    assert io.to_json(rec_json) == json_out
    assert io.to_csv(rec_json) == csv_out.replace('"format": "csv"', '"format": "json"')
    assert rec_csv.kind == rec_json.kind
    _assert_close(rec_csv.payload, rec_json.payload)


def _assert_close(a, b):
    if isinstance(a, dict):
        assert a.keys() == b.keys()
        for k in a:
            _assert_close(a[k], b[k])
    elif isinstance(a, list):
        assert len(a) == len(b)
        for x, y in zip(a, b):
            _assert_close(x, y)
    elif isinstance(a, float) or isinstance(b, float):
        assert a == pytest.approx(b, rel=1e-11)
    else:
        assert a == b


def test_record_builders_match_library():
    g = builtin_dataset("karate")
    rec = damage(g, "G", 10)
    rep = restore(rec, "G", scenario=2)
    out = io.restoration_record(rec, rep, {"command": "restore"})
    assert [r["post_rank"] for r in out.payload["removed"]] == list(rep.post_ranks)
    grid = run_grid(GeneratorConfig("ba", n=20, m0=3, m_attach=2), ["J"], 2, 1)
    assert io.grid_record(grid, {}).payload["cells"][0]["n_valid"] == 1


@pytest.mark.parametrize("argv", [
    ["rank", "--input", "karate", "--method", "h", "--top", "20"],
    ["restore", "--input", "karate", "--remove", "g", "--create", "g", "--m", "10", "--scenario", "2"],
    ["generate", "--gen", "ba", "--n", "50", "--seed", "9"],
    ["experiment", "--n", "30", "--m0", "4", "--attach", "2", "--m", "3", "--realizations", "2", "--methods", "g,h"],
])
def test_subprocess_byte_identical(argv):
    cmd = [sys.executable, "-m", "conjlink", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
