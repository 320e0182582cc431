from __future__ import annotations

import csv
import json
import math
from pathlib import Path

from exzero.cli import main


def run(args: list[str], capsys) -> tuple[int, str, str]:
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text: str) -> list[dict]:
    lines = text.splitlines()
    assert lines[0] == "# exzero-schema v1"
    return list(csv.DictReader(lines[1:]))


def test_verify_lemmas_passes(capsys):
    code, out, _ = run(["verify-lemmas", "--q", "3,5,7,15,21"], capsys)
    assert code == 0
    rows = parse_csv(out)
    assert all(row["pass"] == "true" for row in rows)
    checks = {row["check"] for row in rows}
    assert "gauss_sum_value" in checks and "twisted_gauss_identity" in checks


def test_verify_lemmas_default_moduli(capsys):
    # default list: every odd square-free modulus up to 200
    code, out, _ = run(["verify-lemmas"], capsys)
    assert code == 0
    rows = parse_csv(out)
    moduli = {int(r["q"]) for r in rows}
    assert min(moduli) == 3 and max(moduli) == 199 and 105 in moduli
    assert 9 not in moduli and 45 not in moduli
    assert all(row["pass"] == "true" for row in rows)


def test_verify_lemmas_even_moduli(capsys):
    code, out, _ = run(["verify-lemmas", "--q", "4,8"], capsys)
    assert code == 0
    rows = [r for r in parse_csv(out) if r["check"] == "gauss_sum_value"]
    assert len(rows) == 2
    assert all(float(r["max_abs_error"]) <= 1e-12 for r in rows)
    # no twisted-Ramanujan row for the even moduli
    assert not any(r["check"] == "twisted_ramanujan" for r in parse_csv(out))


def test_verify_lemmas_rejects_non_squarefree(capsys):
    code, _, err = run(["verify-lemmas", "--q", "3,9"], capsys)
    assert code == 2
    assert "square-free" in err


def test_verify_lemmas_tolerance_override_fails(capsys):
    code, out, _ = run(["verify-lemmas", "--q", "3", "--tol", "gauss=1e-30"], capsys)
    assert code == 1
    rows = parse_csv(out)
    assert any(row["pass"] == "false" for row in rows)


def test_verify_lemmas_unknown_tolerance(capsys):
    code, _, err = run(["verify-lemmas", "--q", "3", "--tol", "nope=1"], capsys)
    assert code == 2 and "unknown tolerance" in err


def test_goldbach_report(tmp_path, capsys):
    out_file = tmp_path / "goldbach.csv"
    code, _, _ = run(
        ["goldbach", "--n-min", "10000", "--n-max", "30000", "--n-step", "5000",
         "--out", str(out_file)],
        capsys,
    )
    assert code == 0
    rows = parse_csv(out_file.read_text())
    records = [r for r in rows if r["kind"] == "record"]
    assert records and all(float(r["ratio"]) > 0 for r in records)
    summaries = [r for r in rows if r["kind"] == "lower_bound_summary"]
    assert {r["q"] for r in summaries} == {"3", "15", "105"}
    assert all(float(r["hold_rate"]) >= 0.99 for r in summaries)


def test_goldbach_empty_range(capsys):
    code, _, err = run(["goldbach", "--n-min", "100", "--n-max", "50"], capsys)
    assert code == 2 and "range" in err


def test_moments_report(capsys):
    code, out, _ = run(["moments", "--q", "101", "--x", "1e5"], capsys)
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 1
    row = rows[0]
    assert row["pass"] == "true" and row["pair_ge_goldbach"] == "true"
    gap_budget = 1e-4 * max(1.0, float(row["q_times_pairs"]))
    assert float(row["gap"]) <= gap_budget


def test_moments_rejects_q2(capsys):
    code, _, err = run(["moments", "--q", "2"], capsys)
    assert code == 2 and "square-free" in err


def test_zeros_report(capsys):
    code, out, _ = run(
        ["zeros", "--q", "3,7", "--step", "5e-3", "--format", "json", "--self-test"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "exzero-schema v1"
    for row in payload["rows"]:
        assert row["beta"] is None
        assert math.isclose(
            row["bound"], 1.0 - row["c"] / math.log(row["q"]) ** 2, rel_tol=1e-12
        )
        assert row["bound_respected"]
    assert payload["meta"]["self_test"]["pass"]


def test_chain_report(tmp_path, capsys):
    out_file = tmp_path / "chain.csv"
    code, _, err = run(
        ["chain", "--q", "15", "--x", "1e4", "--out", str(out_file)], capsys
    )
    assert code == 0
    assert "sub-regime" in err  # 10^4 < 15^4 warning
    rows = parse_csv(out_file.read_text())
    kinds = [r["kind"] for r in rows]
    assert kinds.count("chain") == 1 and kinds.count("round_trip") == 1
    whatif = [r for r in rows if r["kind"] == "whatif"]
    beta_one = [r for r in whatif if r["beta"] == "1"]
    assert beta_one and beta_one[0]["holds"] == "false"
    chain_row = next(r for r in rows if r["kind"] == "chain")
    assert chain_row["sub_regime"] == "true"
    assert chain_row["pair_ge_goldbach"] == "true"
    rt = next(r for r in rows if r["kind"] == "round_trip")
    assert rt["holds"] == "true"


def test_config_file_flags_win(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("q = 3,9\nformat = json\n# comment\n")
    # the file's q list would be rejected; the flag overrides it
    code, out, _ = run(
        ["verify-lemmas", "--config", str(cfg), "--q", "3"], capsys
    )
    assert code == 0
    assert json.loads(out)["meta"]["q"] == [3]


def test_config_file_bad_key(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("qq = 3\n")
    code, _, err = run(["verify-lemmas", "--config", str(cfg)], capsys)
    assert code == 2 and "unknown config key" in err


def test_threads_gate(capsys):
    code, _, err = run(["verify-lemmas", "--q", "3", "--threads", "0"], capsys)
    assert code == 2 and "threads" in err


def test_reproducible_outputs(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for path in paths:
        code, _, _ = run(
            ["verify-lemmas", "--q", "3,5,7,15", "--out", str(path)], capsys
        )
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()

    json_paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in json_paths:
        code, _, _ = run(
            ["zeros", "--q", "3", "--step", "1e-2", "--format", "json",
             "--out", str(path)],
            capsys,
        )
        assert code == 0
    assert json_paths[0].read_bytes() == json_paths[1].read_bytes()
