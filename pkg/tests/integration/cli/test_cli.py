import json

import pytest

from epigame.cli import export_example


class TestExport:
    """Test suite for the export command."""

    def test_files_written(self, workspace):
        names = sorted(p.name for p in workspace.iterdir())
        assert names == [
            "angels-demons.json",
            "chicken.json",
            "figure1.json",
            "prisoners-dilemma.json",
            "rendezvous.conjectures.json",
            "rendezvous.json",
        ]

    def test_stdout_is_the_game_file(self, run):
        code, text = run("export", "prisoners-dilemma")
        assert code == 0
        assert text.encode("utf-8") == export_example("prisoners-dilemma")["prisoners-dilemma.json"]

    def test_unknown_example(self, run_json):
        code, report = run_json("export", "unknown")
        assert code == 2
        assert report["error"]["code"] == "UNKNOWN_EXAMPLE"


class TestValidateAndInfo:
    """Test suite for validate and info."""

    def test_validate(self, workspace, run_json):
        code, report = run_json("validate", workspace / "prisoners-dilemma.json")
        assert code == 0
        assert report["command"] == "validate"
        assert report["inputs"].startswith("sha256:")
        assert report["result"]["valid"] is True

    def test_info_figure1(self, workspace, run_json):
        """Test that each player of the crossing game has imperfect information with probability 1/2."""
        code, report = run_json("info", workspace / "figure1.json")
        assert code == 0
        result = report["result"]
        assert [p["strategies"] for p in result["players"]] == [4, 4]
        assert result["join"] == [["s0"], ["s1"], ["s2"], ["s3"]]
        assert result["common_prior"] is True
        players = result["information"]["players"]
        assert [p["status"] for p in players] == ["imperfect", "imperfect"]
        assert {w["probability"] for p in players for w in p["witnesses"]} == {"1/2"}

    def test_table_format(self, workspace, run):
        code, text = run("--format", "table", "info", workspace / "prisoners-dilemma.json")
        assert code == 0
        assert text.startswith("command: info\n")

    def test_invalid_prior(self, workspace, write_json, run_json):
        document = json.loads((workspace / "prisoners-dilemma.json").read_text(encoding="utf-8"))
        document["players"][1]["prior"] = {"omega": "9/10"}
        code, report = run_json("validate", write_json("bad.json", document))
        assert code == 2
        assert report["error"]["code"] == "VALIDATION_ERROR"
        assert report["error"]["details"]["player"] == "P2"

    def test_malformed_file(self, tmp_path, run_json):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        code, report = run_json("validate", path)
        assert code == 2
        assert report["error"]["code"] == "PARSE_ERROR"

    def test_missing_file(self, tmp_path, run_json):
        code, report = run_json("validate", tmp_path / "absent.json")
        assert code == 2
        assert report["error"]["code"] == "PARSE_ERROR"


class TestSolve:
    """Test suite for the solve commands."""

    def test_bayes(self, workspace, run_json):
        code, report = run_json("solve", "bayes", workspace / "prisoners-dilemma.json")
        assert code == 0
        assert report["result"]["profiles"] == [["confess", "confess"]]

    def test_bayes_figure1(self, workspace, run_json):
        _, report = run_json("solve", "bayes", workspace / "figure1.json")
        assert report["result"]["count"] == 6
        assert report["result"]["profiles"][0] == ["3|3", "2|2"]

    def test_coherent(self, workspace, run_json):
        """Test that tit-for-tat yields (deny,deny) and the anti system has no rational solution."""
        code, report = run_json("solve", "coherent", workspace / "prisoners-dilemma.json")
        assert code == 0
        result = report["result"]
        assert result["total"] == 2
        first, second = result["systems"]
        assert first["profiles"] == [["deny", "deny"], ["confess", "confess"]]
        assert first["rational_solutions"] == [["deny", "deny"]]
        assert first["efficiency"]["profiles"][0]["utilities"] == ["-1", "-1"]
        assert first["efficiency"]["essentially_unique"] is True
        assert second["rational_solutions"] == []

    def test_coherent_options(self, workspace, run_json):
        path = workspace / "prisoners-dilemma.json"
        _, admissible = run_json("solve", "coherent", path, "--admissible-only")
        assert [s["index"] for s in admissible["result"]["systems"]] == [0]
        _, truncated = run_json("solve", "coherent", path, "--max-systems", "1")
        assert truncated["result"]["truncated"] is True

    def test_ce_prisoners_dilemma(self, workspace, run_json):
        code, report = run_json("solve", "ce", workspace / "prisoners-dilemma.json")
        assert code == 0
        assert report["result"]["distribution"] == {"confess,confess": "1"}
        assert report["result"]["objective"] == "-8"

    def test_ce_chicken(self, workspace, run_json):
        _, report = run_json("solve", "ce", workspace / "chicken.json")
        assert report["result"]["objective"] == "21/2"
        assert report["result"]["distribution"] == {"C,C": "1/2", "C,D": "1/4", "D,C": "1/4"}

    def test_ce_player_objective(self, workspace, run_json):
        _, report = run_json("solve", "ce", workspace / "chicken.json", "--objective", "player:P1")
        assert report["result"]["objective"] == "7"
        assert report["result"]["distribution"] == {"D,C": "1"}

    def test_ce_unknown_objective(self, workspace, run_json):
        code, report = run_json("solve", "ce", workspace / "chicken.json", "--objective", "nash")
        assert code == 2
        assert report["error"]["code"] == "USAGE_ERROR"

    def test_conjecture_profiles(self, workspace, run_json):
        code, report = run_json(
            "solve", "conjecture", workspace / "rendezvous.json", workspace / "rendezvous.conjectures.json"
        )
        assert code == 0
        result = report["result"]
        assert result["fixed"] is False
        assert result["best_responses"] == {"Mary": ["luigi", "harry"], "Joe": ["luigi", "harry"]}
        assert [p["classification"] for p in result["profiles"]] == [
            "subjective_correlated_equilibrium",
            "rational_incorrect_conjectures",
            "rational_incorrect_conjectures",
            "subjective_correlated_equilibrium",
        ]

    def test_conjecture_classification(self, workspace, write_json, run_json):
        conjectures = write_json("deny.json", {"P1": {"fixed": ["deny"]}, "P2": {"fixed": ["confess"]}})
        _, report = run_json(
            "solve", "conjecture", workspace / "prisoners-dilemma.json", conjectures,
            "--profile", "confess", "confess",
        )
        assert report["result"]["classification"] == "rational_incorrect_conjectures"
        assert report["result"]["conjectures_correct"] is False


class TestCECheck:
    """Test suite for ce-check."""

    def test_accepts(self, workspace, write_json, run_json):
        thirds = write_json("thirds.json", {"C,C": "1/3", "C,D": "1/3", "D,C": "1/3"})
        code, report = run_json("ce-check", workspace / "chicken.json", thirds)
        assert code == 0
        assert report["result"]["ok"] is True
        assert len(report["result"]["constraints"]) == 4

    def test_rejects(self, workspace, write_json, run_json):
        """Test that a rejected distribution is an analysis-negative result."""
        deny = write_json("deny.json", {"deny,deny": "1"})
        code, report = run_json("ce-check", workspace / "prisoners-dilemma.json", deny)
        assert code == 1
        assert report["result"]["ok"] is False
        assert [c["slack"] for c in report["result"]["violated"]] == ["-1", "-1"]

    def test_dimension_mismatch(self, workspace, write_json, run_json):
        bad = write_json("bad.json", {"deny": "1"})
        code, report = run_json("ce-check", workspace / "prisoners-dilemma.json", bad)
        assert code == 2
        assert report["error"]["code"] == "DIMENSION_MISMATCH"


class TestVerifyAndDecompose:
    """Test suite for verify theorems and decompose."""

    def test_figure1(self, workspace, run_json):
        code, report = run_json("verify", "theorems", workspace / "figure1.json")
        assert code == 0
        result = report["result"]
        assert result["holds"] is True
        assert [r["theorem"] for r in result["reports"]] == [1, 2]
        assert all(p["exhausted"] for r in result["reports"] for p in r["pairs"])
        assert result["skipped"] == []

    def test_prisoners_dilemma_skips_theorem_two(self, workspace, run_json):
        code, report = run_json("verify", "theorems", workspace / "prisoners-dilemma.json")
        assert code == 0
        assert [p["search_size"] for p in report["result"]["reports"][0]["pairs"]] == [4, 4]
        assert report["result"]["skipped"][0]["theorem"] == 2

    def test_theorem_two_needs_imperfect_information(self, workspace, run_json):
        code, report = run_json("verify", "theorems", workspace / "prisoners-dilemma.json", "--theorem", "2")
        assert code == 2
        assert report["error"]["code"] == "NOT_IMPERFECT_INFORMATION"

    def test_budget_stop_fails(self, workspace, run_json):
        code, report = run_json("--node-budget", "1", "verify", "theorems", workspace / "figure1.json")
        assert code == 1
        assert report["result"]["holds"] is False

    def test_scenario_cap(self, workspace, run_json):
        code, report = run_json(
            "--scenario-cap", "100", "verify", "theorems", workspace / "figure1.json", "--theorem", "2"
        )
        assert code == 2
        assert report["error"]["code"] == "SCENARIO_SPACE_TOO_LARGE"
        assert report["error"]["details"]["count"] == "65536"

    def test_decompose(self, workspace, run_json):
        code, report = run_json("decompose", workspace / "angels-demons.json")
        assert code == 0
        assert report["result"]["global_optima"] == ["honest|honest", "dishonest|dishonest"]
        assert report["result"]["cellwise_consistent"] is False

    def test_decompose_two_players(self, workspace, run_json):
        code, report = run_json("decompose", workspace / "prisoners-dilemma.json")
        assert code == 2
        assert report["error"]["code"] == "WRONG_PLAYER_COUNT"


class TestUsage:
    """Test suite for argument handling and exit codes."""

    def test_missing_concept(self, run_json):
        code, report = run_json("solve")
        assert code == 2
        assert report["error"]["code"] == "USAGE_ERROR"
        assert report["error"]["details"]["usage"].startswith("usage:")

    def test_non_positive_limit(self, workspace, run_json):
        code, report = run_json("--strategy-cap", "0", "solve", "bayes", workspace / "figure1.json")
        assert code == 2
        assert report["error"]["details"]["field"] == "limits"

    def test_strategy_cap(self, workspace, run_json):
        code, report = run_json("--strategy-cap", "3", "solve", "bayes", workspace / "figure1.json")
        assert code == 2
        assert report["error"]["code"] == "STRATEGY_SPACE_TOO_LARGE"

    def test_negative_max_systems(self, workspace, run_json):
        code, report = run_json("solve", "coherent", workspace / "prisoners-dilemma.json", "--max-systems", "-1")
        assert code == 2
        assert report["error"]["code"] == "USAGE_ERROR"
        assert "non-negative" in report["error"]["message"]

    def test_zero_max_systems(self, workspace, run_json):
        code, report = run_json("solve", "coherent", workspace / "prisoners-dilemma.json", "--max-systems", "0")
        assert code == 0
        assert report["result"]["systems"] == []

    def test_help(self, run):
        code, text = run("--help")
        assert code == 0
        assert text.startswith("usage: epigame")

    def test_subcommand_help(self, run):
        """Test that nested help is written to the caller's stream too."""
        code, text = run("solve", "coherent", "--help")
        assert code == 0
        assert "--max-systems" in text


class TestDeterminism:
    """Test suite for byte-identical reports."""

    @pytest.mark.parametrize("argv", [
        ("info", "figure1.json"),
        ("solve", "bayes", "figure1.json"),
        ("solve", "ce", "chicken.json"),
        ("solve", "coherent", "prisoners-dilemma.json"),
        ("solve", "conjecture", "rendezvous.json", "rendezvous.conjectures.json"),
        ("verify", "theorems", "figure1.json"),
        ("decompose", "angels-demons.json"),
    ])
    def test_same_bytes_twice(self, workspace, run, argv):
        paths = [str(workspace / a) if a.endswith(".json") else a for a in argv]
        first, second = run(*paths), run(*paths)
        assert first == second
        assert first[0] == 0

    def test_export_round_trip(self, workspace, run):
        """Test that an exported file re-exports to the same bytes after validation."""
        code, _ = run("validate", workspace / "figure1.json")
        assert code == 0
        assert (workspace / "figure1.json").read_bytes() == export_example("figure1")["figure1.json"]
