from click.testing import CliRunner

from pcl.cli import main
from pcl.experiments import CSV_HEADER


def invoke(*args):
    return CliRunner().invoke(main, list(args))


class TestSweep:
    ARGS = ("sweep", "--n", "2", "--p", "0.75", "--epochs", "100",
            "--trials", "5", "--seed", "7")

    def test_stdout_csv(self):
        result = invoke(*self.ARGS)
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == CSV_HEADER
        assert lines[1].startswith("2,0.75,100,5,")
        assert lines[1].endswith(",7")

    def test_deterministic_across_invocations(self):
        assert invoke(*self.ARGS).output == invoke(*self.ARGS).output

    def test_out_file(self, tmp_path):
        out = tmp_path / "rows.csv"
        result = invoke(*self.ARGS, "--out", str(out))
        assert result.exit_code == 0
        assert out.read_text() == invoke(*self.ARGS).output

    def test_requires_grid_or_preset(self):
        result = invoke("sweep")
        assert result.exit_code == 2
        assert "--preset" in result.output

    def test_unknown_preset_is_usage_error(self):
        assert invoke("sweep", "--preset", "nope").exit_code == 2

    def test_preset_with_small_overrides(self):
        result = invoke("sweep", "--preset", "p-sweep", "--trials", "1")
        # only checking the grid shape here, so one trial per cell is enough
        assert result.exit_code == 0
        rows = result.output.splitlines()[1:]
        assert len(rows) == 8 * 10  # eight p values, ten epoch budgets
        assert all(row.split(",")[0] == "4" for row in rows)


class TestTrial:
    def test_prints_target_and_outcome(self):
        result = invoke("trial", "--n", "2", "--seed", "3")
        assert result.exit_code == 0
        assert "target :" in result.output
        assert "learned:" in result.output
        assert "success:" in result.output

    def test_n_is_required(self):
        assert invoke("trial").exit_code == 2

    def test_seed_changes_target(self):
        outputs = {invoke("trial", "--n", "4", "--epochs", "100",
                          "--seed", str(s)).output for s in range(6)}
        assert len(outputs) > 1


class TestVerifyTheory:
    def test_passes_small_n(self):
        result = invoke("verify-theory", "--max-n", "3")
        assert result.exit_code == 0
        assert "frequency tables" in result.output
        assert "same-side lemma" in result.output
        assert "reinforcement directions" in result.output
        assert "MISMATCH" not in result.output
