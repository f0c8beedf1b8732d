import io
import json

from finsetrep import acceptance, cli
from finsetrep.acceptance import CriterionResult


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hom_count(capsys):
    code, out, _ = run_cli(capsys, "hom", "--cat", "N", "--from", "2", "--to", "2")
    assert code == 0 and out.strip() == "6"


def test_hom_json(capsys):
    code, out, _ = run_cli(capsys, "hom", "--cat", "F", "--from", "2", "--to", "3",
                           "--format", "json")
    assert code == 0
    assert json.loads(out) == {"category": "F", "from": 2, "to": 3, "count": 9}


def test_hom_list_deterministic(capsys):
    code, out1, _ = run_cli(capsys, "hom", "--cat", "Delta", "--from", "2", "--to", "2", "--list")
    code2, out2, _ = run_cli(capsys, "hom", "--cat", "Delta", "--from", "2", "--to", "2", "--list")
    assert code == code2 == 0 and out1 == out2
    assert out1.splitlines() == ["2->2: 1,1", "2->2: 1,2", "2->2: 2,2"]


def test_compose_and_lift(capsys):
    code, out, _ = run_cli(capsys, "compose", "--cat", "N",
                           "--g", "2->1: 1,1 | orders: 1:(2,1)",
                           "--f", "2->2: 1,2 | orders: 1:(1); 2:(2)")
    assert code == 0 and out.strip() == "2->1: 1,1 | orders: 1:(2,1)"
    code, out, _ = run_cli(capsys, "lift", "--map", "3->1: 1,1,1", "--mode", "canonical")
    assert code == 0 and out.strip() == "3->1: 1,1,1 | orders: 1:(1,2,3)"


def test_malformed_morphism_exits_2(capsys):
    code, _, err = run_cli(capsys, "lift", "--map", "3->1 1,1,1")
    assert code == 2 and "error" in err


def test_unknown_subcommand_exits_2(capsys):
    assert cli.run(["frobnicate"]) == 2


def test_simple_emits_module_file(capsys):
    code, out, _ = run_cli(capsys, "simple", "Ck", "--k", "2", "--max", "4")
    assert code == 0
    assert out.startswith("catmod/1\ncategory N\nmax_level 4\ndims 0 0 1 3 6\n")


def test_simple_requires_k(capsys):
    code, _, err = run_cli(capsys, "simple", "Ck", "--max", "4")
    assert code == 2


def test_pipe_simple_into_charpoly_fit(capsys, monkeypatch):
    code, module_text, _ = run_cli(capsys, "simple", "Ck", "--k", "2", "--max", "4")
    monkeypatch.setattr("sys.stdin", io.StringIO(module_text))
    code, out, _ = run_cli(capsys, "fit", "charpoly", "--d", "2",
                           "--fit", "1..3", "--test", "4")
    assert code == 0 and out.strip() == "C(X1,2) + X2"


def test_fit_dimpoly_values(capsys):
    code, out, _ = run_cli(capsys, "fit", "dimpoly", "--d", "2",
                           "--values", "1 3 6 10 15 21")
    assert code == 0 and "C(n-1,2)" in out
    code, out, _ = run_cli(capsys, "fit", "dimpoly", "--d", "1",
                           "--values", "1 2 4 8 16")
    assert code == 1 and "inconsistent" in out


def test_doldkan_pipeline(tmp_path, capsys):
    code, module_text, _ = run_cli(capsys, "simple", "Ck", "--k", "1", "--max", "5")
    mod_file = tmp_path / "c1.catmod"
    mod_file.write_text(module_text)
    code, cochain_text, _ = run_cli(capsys, "doldkan", "conormalize", str(mod_file))
    assert code == 0
    assert cochain_text.startswith("cochain/1\ntop 4\ndims 1 1 0 0 0\n")
    cx_file = tmp_path / "c1.cochain"
    cx_file.write_text(cochain_text)
    code, realized, _ = run_cli(capsys, "doldkan", "realize", str(cx_file), "--max", "5")
    assert code == 0 and realized.startswith("catmod/1\ncategory Delta\n")
    assert "dims 0 1 2 3 4 5" in realized
    code, out, _ = run_cli(capsys, "doldkan", "dimpoly", str(mod_file))
    assert code == 0 and out.strip() == "1 + 1*C(n-1,1)"


def test_char_table(tmp_path, capsys):
    code, module_text, _ = run_cli(capsys, "simple", "Ck", "--k", "1", "--max", "4")
    mod_file = tmp_path / "c1.catmod"
    mod_file.write_text(module_text)
    code, out, _ = run_cli(capsys, "char", str(mod_file), "--n", "3")
    assert code == 0
    assert out.splitlines() == ["3: 0", "2,1: 1", "1,1,1: 3"]


def test_invariants_and_replicate(tmp_path, capsys):
    code, module_text, _ = run_cli(capsys, "simple", "Ck", "--k", "2", "--max", "6")
    mod_file = tmp_path / "c2.catmod"
    mod_file.write_text(module_text)
    code, out, _ = run_cli(capsys, "invariants", str(mod_file), "--range", "1..5")
    assert code == 0 and "0 1 1 1 1" in out and "nondecreasing" in out
    code, out, _ = run_cli(capsys, "replicate", str(mod_file), "--n", "2", "--m", "2")
    assert code == 0 and "isomorphism" in out
    code, module_text, _ = run_cli(capsys, "simple", "Ck", "--k", "3", "--max", "6")
    mod_file.write_text(module_text)
    code, out, _ = run_cli(capsys, "replicate", str(mod_file), "--n", "2", "--m", "2")
    assert code == 1 and "NOT" in out


def test_arnold_commands(capsys):
    code, out, _ = run_cli(capsys, "arnold", "dims", "--i", "2", "--max", "5")
    assert code == 0 and out.strip() == "0 0 2 11 35"
    code, out, _ = run_cli(capsys, "arnold", "act", "--i", "1", "--map", "2->3: 2,3")
    assert code == 0 and out.strip() == "w(1,2) -> 1 * w(2,3)"
    code, out, _ = run_cli(capsys, "arnold", "act", "--i", "1", "--map", "2->1: 1,1")
    assert code == 0 and out.strip() == "w(1,2) -> 0"
    code, out, _ = run_cli(capsys, "arnold", "char", "--i", "1", "--n", "3")
    assert code == 0 and out.splitlines() == ["3: 0", "2,1: 1", "1,1,1: 3"]


def test_arnold_missing_flags_exit_2(capsys):
    assert cli.run(["arnold", "act", "--i", "1"]) == 2
    assert cli.run(["arnold", "char", "--i", "1"]) == 2
    capsys.readouterr()


def test_invariants_json_payload(tmp_path, capsys):
    code, module_text, _ = run_cli(capsys, "simple", "Ck", "--k", "2", "--max", "5")
    mod_file = tmp_path / "c2.catmod"
    mod_file.write_text(module_text)
    code, out, _ = run_cli(capsys, "invariants", str(mod_file), "--range", "1..4",
                           "--format", "json")
    assert code == 0
    assert json.loads(out) == {"levels": [1, 2, 3, 4], "dims": [0, 1, 1, 1],
                               "nondecreasing": True}


def test_arnold_module_emission_round_trips(capsys):
    code, out, _ = run_cli(capsys, "arnold", "module", "--i", "1", "--max", "4")
    assert code == 0
    from finsetrep.repmod import read_module, write_module
    assert write_module(read_module(out)) == out


def test_verify_formats_results(monkeypatch, capsys):
    canned = (
        CriterionResult(1, "alpha", True, "fine"),
        CriterionResult(2, "beta", True, "also fine"),
    )
    monkeypatch.setattr(acceptance, "run_all", lambda seed: canned)
    code, out, _ = run_cli(capsys, "verify", "--seed", "3")
    assert code == 0
    assert "1 PASS alpha: fine" in out
    assert "overall: PASS (2/2)" in out
    code, out, _ = run_cli(capsys, "verify", "--seed", "3", "--format", "json")
    payload = json.loads(out)
    assert payload["passed"] is True and payload["seed"] == 3


def test_verify_reports_failure_exit_code(monkeypatch, capsys):
    canned = (CriterionResult(1, "alpha", False, "broken"),)
    monkeypatch.setattr(acceptance, "run_all", lambda seed: canned)
    code, out, _ = run_cli(capsys, "verify")
    assert code == 1 and "FAIL" in out
