import io
import json
import subprocess
import sys

import pytest

from flagchern.cli import main


def run_cli(*argv):
    """Invoke the CLI in-process, capturing stdout."""
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        code = main(list(argv))
    finally:
        sys.stdout = old
    return code, buf.getvalue()


def test_roots_json():
    code, out = run_cli("roots", "--family", "G2", "--rank", "2",
                        "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "G2" and data["weyl_order"] == 12
    assert len(data["positives"]) == 6


def test_decompose_positional_and_theta():
    code, out = run_cli("decompose", "F(5;1,2,2)", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["euler_characteristic"] == 30
    assert data["n_summands"] == 3 and data["n_acs_up_to_conjugation"] == 4

    code, out = run_cli("decompose", "--family", "A", "--rank", "4",
                        "--theta", "remove=1,3", "--format", "json")
    assert code == 0
    assert json.loads(out)["n_summands"] == 3


def test_acs_classify_f522():
    code, out = run_cli("acs", "classify", "F(5;1,2,2)", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["n_classes"] == 3
    sizes = sorted((c["size"], c["integrable"]) for c in data["classes"])
    assert sizes == [(1, False), (1, True), (2, True)]


def test_chern_default_top_class_and_todd():
    code, out = run_cli("chern", "--manifold", "FD(3;1,2)", "--todd",
                        "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["numbers"]["c5"] == "12"      # chi, big ints as strings
    assert data["todd_genus"] == "1"
    assert data["oracle"] == "both"


def test_chern_explicit_monomials_with_signs():
    code, out = run_cli("chern", "--manifold", "F(5;1,2,2)",
                        "--acs", "+,-,+", "--numbers", "c8,c1^8",
                        "--format", "json")
    assert code == 0
    nums = json.loads(out)["numbers"]
    assert set(nums) == {"c8", "c1^8"}
    assert all(int(v) is not None for v in nums.values())


def test_chern_determinism_across_jobs():
    args = ("chern", "--manifold", "F(4)", "--numbers", "c1^6,c2^3,c6",
            "--format", "json")
    outs = {run_cli(*args, "--jobs", str(j))[1] for j in (1, 2, 4)}
    assert len(outs) == 1  # byte-identical output


def test_table_list_and_reproduce():
    code, out = run_cli("table", "list")
    assert code == 0
    assert "tab5" in out.split() and "f5-all" in out.split()
    code, out = run_cli("table", "reproduce", "tab5", "--format", "json",
                        "--oracle", "weyl")
    assert code == 0
    data = json.loads(out)
    assert data["tables"][0]["ok"] is True


def test_groebner_so6_preset():
    code, out = run_cli("groebner", "--ideal", "so6", "--order", "lex",
                        "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["quotient_dimension"] == 24
    assert len(data["basis"]) == 5


def test_cohomology_verify():
    code, out = run_cli("cohomology", "verify", "--case", "a-full:3",
                        "--format", "json")
    assert code == 0
    assert json.loads(out)["status"] == "PASS"


def test_verify_quick_sweep():
    code, out = run_cli("verify", "quick", "--jobs", "4",
                        "--oracle", "weyl")
    assert code == 0
    assert "0 failure(s)" in out
    assert "FAIL" not in out


# -- exit codes ---------------------------------------------------------------

def test_exit_code_usage_errors():
    assert run_cli("roots", "--family", "E", "--rank", "8")[0] == 1
    assert run_cli("chern", "--manifold", "no-such-manifold")[0] == 1
    assert run_cli("table", "reproduce", "no-such-table")[0] == 1
    assert run_cli("table", "reproduce")[0] == 1
    assert run_cli("chern", "--manifold", "F(4)", "--acs", "+,-")[0] == 1


def test_exit_code_zero_on_success():
    assert run_cli("acs", "list", "G2-short")[0] == 0


def test_exit_code_mismatch(monkeypatch):
    # a table whose reproduction carries an unexplained diff exits 2
    import flagchern.cli as cli
    import flagchern.tables as tables

    real_reproduce = tables.reproduce

    def broken_reproduce(table_id, jobs=1, oracle="weyl", slow=False):
        results = real_reproduce(table_id, jobs=jobs, oracle=oracle,
                                 slow=slow)
        col = results[0].sections[0].columns[0]
        col.diffs.append(tables.CellDiff(row="c4", printed=1, recomputed=2,
                                         note=None, annotated=False))
        return results

    monkeypatch.setattr(cli.tables, "reproduce", broken_reproduce)
    assert run_cli("table", "reproduce", "so5t", "--oracle", "weyl")[0] == 2


def test_exit_code_internal_on_oracle_disagreement(monkeypatch):
    import flagchern.cli as cli

    monkeypatch.setattr(cli, "chern_number_nf",
                        lambda flag, acs, m: 10 ** 9)
    assert run_cli("chern", "--manifold", "SO(5)/T",
                   "--oracle", "both")[0] == 3


def test_console_script_entry_point():
    proc = subprocess.run(["flagchern", "table", "list"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "tab-dif" in proc.stdout
