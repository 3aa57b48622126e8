"""End-to-end command line behavior, including manifests and exit codes."""

from __future__ import annotations

import json

import pytest

from hgkit import Partition, read_hgf
from hgkit.cli import main

GOLDEN = "3 2\n1=1.0 2=1.0\n2=1.5 3=1.0\n"
PATH5 = "5 4\n1=1.0 2=1.0\n2=1.0 3=1.0\n3=1.0 4=1.0\n4=1.0 5=1.0\n"
REVIEWS = "user_id,item_id,stars\nu1,b1,5\nu1,b2,3\nu2,b2,3\nu2,b3,1\n"


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStats:
    def test_golden_report(self, tmp_path, capsys):
        src = tmp_path / "g.hgf"
        src.write_text(GOLDEN)
        code, out, _ = run(capsys, "stats", "--input", str(src))
        assert code == 0
        assert out == (
            "vertices: 3\n"
            "hyperedges: 2\n"
            "incidences: 4\n"
            "components: 1\n"
            "component-sizes: 3\n"
            "hyperedge-size-histogram: 2:2\n"
            "degree-histogram: 1:2 2:1\n"
        )

    def test_empty_file_is_the_empty_hypergraph(self, tmp_path, capsys):
        src = tmp_path / "empty.hgf"
        src.write_text("")
        code, out, _ = run(capsys, "stats", "--input", str(src))
        assert code == 0
        assert out == (
            "vertices: 0\n"
            "hyperedges: 0\n"
            "incidences: 0\n"
            "components: 0\n"
            "component-sizes:\n"
            "hyperedge-size-histogram:\n"
            "degree-histogram:\n"
        )

    def test_output_file_and_manifest(self, tmp_path, capsys):
        src = tmp_path / "g.hgf"
        src.write_text(GOLDEN)
        dst = tmp_path / "report.txt"
        code, out, _ = run(capsys, "stats", "--input", str(src), "--output", str(dst))
        assert code == 0
        assert dst.read_text() == out
        doc = json.loads((tmp_path / "report.txt.manifest.json").read_text())
        assert doc["tool"] == "hgkit"
        assert doc["command"] == "stats"
        assert doc["inputs"][0]["path"] == str(src)
        assert len(doc["outputs"][0]["sha256"]) == 64


class TestConvert:
    def test_hgf_json_round_trip_is_byte_identical(self, tmp_path, capsys):
        src = tmp_path / "g.hgf"
        src.write_text(GOLDEN)
        as_json = tmp_path / "g.json"
        back = tmp_path / "back.hgf"
        assert run(capsys, "convert", "--input", str(src), "--to", "json", "--output", str(as_json))[0] == 0
        assert run(capsys, "convert", "--input", str(as_json), "--to", "hgf", "--output", str(back))[0] == 0
        assert back.read_bytes() == src.read_bytes()

    def test_stdout_when_no_output(self, tmp_path, capsys):
        src = tmp_path / "g.hgf"
        src.write_text(GOLDEN)
        code, out, _ = run(capsys, "convert", "--input", str(src), "--to", "hgf")
        assert code == 0 and out == GOLDEN

    def test_format_inference_can_be_overridden(self, tmp_path, capsys):
        src = tmp_path / "data.txt"
        src.write_text(GOLDEN)
        code, out, _ = run(
            capsys, "convert", "--input", str(src), "--from", "hgf", "--to", "hgf"
        )
        assert code == 0 and out == GOLDEN

    def test_dot_twosection(self, tmp_path, capsys):
        src = tmp_path / "g.hgf"
        src.write_text("3 2\n1=1.0 2=1.0\n2=1.0 3=1.0\n")
        code, out, _ = run(capsys, "convert", "--input", str(src), "--to", "dot-twosection")
        assert code == 0
        assert out == (
            "graph twosection {\n"
            "  1;\n  2;\n  3;\n"
            "  1 -- 2 [weight=1];\n"
            "  2 -- 3 [weight=1];\n"
            "}\n"
        )

    def test_dot_bipartite(self, tmp_path, capsys):
        src = tmp_path / "g.hgf"
        src.write_text("3 2\n1=1.0 2=1.0\n2=1.0 3=1.0\n")
        code, out, _ = run(capsys, "convert", "--input", str(src), "--to", "dot-bipartite")
        assert code == 0
        assert out == (
            "graph bipartite {\n"
            "  1;\n  2;\n  3;\n  4;\n  5;\n"
            "  1 -- 4 [weight=1];\n"
            "  2 -- 4 [weight=1];\n"
            "  2 -- 5 [weight=1];\n"
            "  3 -- 5 [weight=1];\n"
            "}\n"
        )

    def test_reviews_to_hgf(self, tmp_path, capsys):
        src = tmp_path / "reviews.csv"
        src.write_text(REVIEWS)
        code, out, _ = run(capsys, "convert", "--input", str(src), "--to", "hgf")
        assert code == 0
        h = read_hgf(out)
        assert (h.nhv, h.nhe) == (3, 2)
        assert set(h.get_vertices(1)) == {1, 2}
        assert set(h.get_vertices(2)) == {2, 3}


class TestCommunities:
    def test_report_and_partition_file(self, tmp_path, capsys):
        src = tmp_path / "two.hgf"
        src.write_text("6 2\n1=1.0 2=1.0 3=1.0\n4=1.0 5=1.0 6=1.0\n")
        dst = tmp_path / "part.json"
        code, out, _ = run(
            capsys, "communities", "--input", str(src), "--algo", "hyper-lp",
            "--seed", "3", "--output", str(dst),
        )
        assert code == 0
        part = Partition.from_json_text(dst.read_text())
        assert part.same_blocks(Partition.from_communities([{1, 2, 3}, {4, 5, 6}]))
        report = dict(
            line.split(": ", 1) for line in out.strip().splitlines()
        )
        assert report["algorithm"] == "hyper-lp"
        assert report["communities"] == "2"
        assert int(report["iterations"]) <= 100
        assert float(report["modularity"]) == 0.75

    def test_csv_output_extension(self, tmp_path, capsys):
        src = tmp_path / "two.hgf"
        src.write_text("2 1\n1=1.0 2=1.0\n")
        dst = tmp_path / "part.csv"
        code, _, _ = run(capsys, "communities", "--input", str(src), "--output", str(dst))
        assert code == 0
        assert dst.read_text().startswith("vertex,label\n")

    def test_graph_algo_and_determinism(self, tmp_path, capsys):
        src = tmp_path / "two.hgf"
        src.write_text("6 2\n1=1.0 2=1.0 3=1.0\n4=1.0 5=1.0 6=1.0\n")
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        for dst in (a, b):
            code, _, _ = run(
                capsys, "communities", "--input", str(src), "--algo", "graph-lp",
                "--seed", "9", "--output", str(dst),
            )
            assert code == 0
        assert a.read_bytes() == b.read_bytes()

    def test_degenerate_modularity_reported_as_na(self, tmp_path, capsys):
        src = tmp_path / "empty.hgf"
        src.write_text("0 0\n")
        code, out, _ = run(capsys, "communities", "--input", str(src))
        assert code == 0
        assert "modularity: n/a" in out


class TestNmi:
    def test_identical_partitions(self, tmp_path, capsys):
        part = Partition.from_communities([{1, 2}, {3}])
        a = tmp_path / "a.json"
        b = tmp_path / "b.csv"
        a.write_text(part.to_json_text())
        b.write_text(part.to_csv_text())
        code, out, _ = run(capsys, "nmi", str(a), str(b))
        assert code == 0 and out == "1\n"
        code, out, _ = run(capsys, "nmi", "--full-precision", str(a), str(b))
        assert code == 0 and out == "1.0\n"

    def test_domain_mismatch_exits_4(self, tmp_path, capsys):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        a.write_text(Partition({1: 1, 2: 1}).to_json_text())
        b.write_text(Partition({1: 1, 3: 1}).to_json_text())
        code, _, err = run(capsys, "nmi", str(a), str(b))
        assert code == 4
        assert err.startswith("error:")


class TestBetweenness:
    def test_ranked_csv(self, tmp_path, capsys):
        src = tmp_path / "path.hgf"
        src.write_text(PATH5)
        code, out, _ = run(capsys, "betweenness", "--input", str(src))
        assert code == 0
        assert out.splitlines() == [
            "vertex,label,score",
            "3,,4",
            "2,,3",
            "4,,3",
            "1,,0",
            "5,,0",
        ]

    def test_top_k(self, tmp_path, capsys):
        src = tmp_path / "path.hgf"
        src.write_text(PATH5)
        code, out, _ = run(capsys, "betweenness", "--input", str(src), "--top-k", "1")
        assert code == 0
        assert out.splitlines() == ["vertex,label,score", "3,,4"]

    def test_oversized_s_scores_everything_zero(self, tmp_path, capsys):
        src = tmp_path / "path.hgf"
        src.write_text(PATH5)
        code, out, _ = run(capsys, "betweenness", "--input", str(src), "--s", "9")
        assert code == 0
        assert all(line.endswith(",0") for line in out.splitlines()[1:])

    def test_labels_come_from_metadata(self, tmp_path, capsys):
        src = tmp_path / "reviews.csv"
        src.write_text(REVIEWS)
        code, out, _ = run(capsys, "betweenness", "--input", str(src))
        assert code == 0
        # items b1-b2-b3 form a two-section path, so b2 mediates one pair
        assert out.splitlines()[1] == "2,b2,1"


class TestForecast:
    def test_hand_instance(self, tmp_path, capsys):
        src = tmp_path / "reviews.csv"
        src.write_text(REVIEWS)
        dst = tmp_path / "forecast.csv"
        code, out, _ = run(capsys, "forecast", "--input", str(src), "--output", str(dst))
        assert code == 0
        assert "err-hypergraph: 1.33333 (defined 3/3)" in out
        assert "err-graph: 1.33333 (defined 3/3)" in out
        assert dst.read_text().splitlines() == [
            "vertex,label,stars,forecast_hyper,forecast_graph",
            "1,b1,5,3,3",
            "2,b2,3,3,3",
            "3,b3,1,3,3",
        ]

    def test_star_filter_changes_structure(self, tmp_path, capsys):
        src = tmp_path / "reviews.csv"
        src.write_text(REVIEWS)
        code, out, _ = run(capsys, "forecast", "--input", str(src), "--stars", "3", "5")
        assert code == 0
        # the 1-star item drops out; b1 and b2 forecast each other
        assert "err-hypergraph: 2 (defined 2/2)" in out
        assert "err-graph: 2 (defined 2/2)" in out

    def test_no_usable_structure_exits_5(self, tmp_path, capsys):
        src = tmp_path / "reviews.csv"
        src.write_text("user_id,item_id,stars\nu1,b1,5\n")
        code, _, err = run(capsys, "forecast", "--input", str(src))
        assert code == 5
        assert err.startswith("error:")


class TestCorrelate:
    def write_scores(self, path, scores):
        lines = ["vertex,label,score"]
        lines += [f"{v},,{s}" for v, s in scores.items()]
        path.write_text("\n".join(lines) + "\n")

    def test_perfect_correlation(self, tmp_path, capsys):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        self.write_scores(a, {1: 1.0, 2: 2.0, 3: 3.0})
        self.write_scores(b, {1: 2.0, 2: 4.0, 3: 6.0})
        code, out, _ = run(capsys, "correlate", str(a), str(b))
        assert code == 0 and out == "1\n"

    def test_anticorrelation(self, tmp_path, capsys):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        self.write_scores(a, {1: 1.0, 2: 2.0, 3: 3.0})
        self.write_scores(b, {1: 3.0, 2: 2.0, 3: 1.0})
        code, out, _ = run(capsys, "correlate", str(a), str(b))
        assert code == 0 and out == "-1\n"

    def test_zero_variance_exits_5(self, tmp_path, capsys):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        self.write_scores(a, {1: 1.0, 2: 1.0})
        self.write_scores(b, {1: 3.0, 2: 2.0})
        code, _, err = run(capsys, "correlate", str(a), str(b))
        assert code == 5 and err.startswith("error:")

    def test_bad_header_exits_3(self, tmp_path, capsys):
        a = tmp_path / "a.csv"
        a.write_text("nope\n")
        b = tmp_path / "b.csv"
        self.write_scores(b, {1: 3.0, 2: 2.0})
        code, _, _ = run(capsys, "correlate", str(a), str(b))
        assert code == 3


class TestRerun:
    def test_verifies_byte_identity(self, tmp_path, capsys):
        src = tmp_path / "path.hgf"
        src.write_text(PATH5)
        dst = tmp_path / "scores.csv"
        assert run(capsys, "betweenness", "--input", str(src), "--output", str(dst))[0] == 0
        manifest = tmp_path / "scores.csv.manifest.json"
        assert manifest.exists()
        code, _, err = run(capsys, "rerun", str(manifest))
        assert code == 0 and err == ""

    def test_detects_changed_input(self, tmp_path, capsys):
        src = tmp_path / "path.hgf"
        src.write_text(PATH5)
        dst = tmp_path / "scores.csv"
        assert run(capsys, "betweenness", "--input", str(src), "--output", str(dst))[0] == 0
        src.write_text(GOLDEN)  # different structure, same path
        code, _, err = run(capsys, "rerun", str(tmp_path / "scores.csv.manifest.json"))
        assert code == 1
        assert "digest changed" in err

    def test_replays_seeded_commands(self, tmp_path, capsys):
        src = tmp_path / "two.hgf"
        src.write_text("6 2\n1=1.0 2=1.0 3=1.0\n4=1.0 5=1.0 6=1.0\n")
        dst = tmp_path / "part.json"
        assert run(
            capsys, "communities", "--input", str(src), "--algo", "graph-lp",
            "--seed", "42", "--output", str(dst),
        )[0] == 0
        code, _, err = run(capsys, "rerun", str(tmp_path / "part.json.manifest.json"))
        assert code == 0 and err == ""

    def test_manifest_records_argv_and_parameters(self, tmp_path, capsys):
        src = tmp_path / "two.hgf"
        src.write_text("2 1\n1=1.0 2=1.0\n")
        dst = tmp_path / "part.json"
        argv = [
            "communities", "--input", str(src), "--seed", "5", "--output", str(dst)
        ]
        assert run(capsys, *argv)[0] == 0
        doc = json.loads((tmp_path / "part.json.manifest.json").read_text())
        assert doc["argv"] == argv
        assert doc["parameters"]["seed"] == 5
        assert doc["parameters"]["algo"] == "hyper-lp"
        assert doc["tool_version"]


class TestErrorsAndUsage:
    def test_malformed_document_exits_3(self, tmp_path, capsys):
        src = tmp_path / "bad.hgf"
        src.write_text("x 2\n1=1.0\n2=1.0\n")
        code, _, err = run(capsys, "stats", "--input", str(src))
        assert code == 3 and err.startswith("error:")

    def test_missing_file_exits_1(self, tmp_path, capsys):
        code, _, err = run(capsys, "stats", "--input", str(tmp_path / "nope.hgf"))
        assert code == 1 and err.startswith("error:")

    def test_usage_error_exits_2(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["stats"])
        assert info.value.code == 2
        assert "required: --input" in capsys.readouterr().err

    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2
        assert "invalid choice" in capsys.readouterr().err

    def test_unknown_format_token_exits_2(self, tmp_path, capsys):
        src = tmp_path / "g.hgf"
        src.write_text(GOLDEN)
        with pytest.raises(SystemExit) as info:
            main(["convert", "--input", str(src), "--to", "yaml"])
        assert info.value.code == 2
        assert "invalid choice" in capsys.readouterr().err

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0
        assert capsys.readouterr().out.startswith("hgkit ")

    def test_deterministic_flag_is_accepted(self, tmp_path, capsys):
        src = tmp_path / "g.hgf"
        src.write_text(GOLDEN)
        code, _, _ = run(capsys, "stats", "--deterministic", "--input", str(src))
        assert code == 0
