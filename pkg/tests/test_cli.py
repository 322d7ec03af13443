import json
import os

import pytest

from circfib import cache
from circfib.cli import main, parse_records, render


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_reduce(capsys):
    code, out, _ = run_cli(capsys, "reduce", "020111")
    assert code == 0
    assert out == "word\tnormal_form\n020111\t010010\n"


def test_reduce_jsonlines(capsys):
    code, out, _ = run_cli(capsys, "--format", "jsonlines", "reduce", "0002")
    assert code == 0
    assert json.loads(out) == {"word": "0002", "normal_form": "0010"}


def test_formats_encode_same_records(capsys):
    _, tsv_out, _ = run_cli(capsys, "group", "--ell", "2", "--list")
    _, json_out, _ = run_cli(capsys, "--format", "jsonlines", "group", "--ell", "2", "--list")
    assert parse_records(tsv_out, "tsv") == parse_records(json_out, "jsonlines")


def test_render_round_trip():
    records = [{"a": "1", "b": "x y"}, {"a": "2", "b": ""}]
    for fmt in ("tsv", "jsonlines"):
        assert parse_records(render(records, fmt), fmt) == records


def test_deterministic_output(capsys):
    _, first, _ = run_cli(capsys, "wheel", "--ell", "3", "--map")
    _, second, _ = run_cli(capsys, "wheel", "--ell", "3", "--map")
    assert first == second


def test_orbit_lists_members(capsys):
    code, out, _ = run_cli(capsys, "orbit", "1111", "--digit-cap", "2")
    assert code == 0
    members = [r["member"] for r in parse_records(out, "tsv")]
    assert "0101" in members and "1010" in members


def test_add_neg_mul(capsys):
    code, out, _ = run_cli(capsys, "add", "0001", "0001")
    assert code == 0 and parse_records(out, "tsv")[0]["sum"] == "0010"
    code, out, _ = run_cli(capsys, "neg", "0001")
    assert code == 0 and parse_records(out, "tsv")[0]["negation"] == "0100"
    code, out, _ = run_cli(capsys, "mul", "4", "000100")
    assert code == 0 and parse_records(out, "tsv")[0]["product"] == "010101"


def test_group_subcommands(capsys):
    code, out, _ = run_cli(capsys, "group", "--ell", "3", "--count")
    assert code == 0 and parse_records(out, "tsv")[0]["order"] == "16"
    code, out, _ = run_cli(capsys, "group", "--ell", "2", "--structure")
    record = parse_records(out, "tsv")[0]
    assert (record["e1"], record["e2"]) == ("5", "1")
    code, out, _ = run_cli(capsys, "group", "--ell", "2", "--table")
    assert code == 0 and len(parse_records(out, "tsv")) == 25


def test_group_table_bound(capsys):
    code, _, err = run_cli(capsys, "group", "--ell", "5", "--table")
    assert code == 3
    assert "error" in err


def test_orderq_subcommands(capsys):
    code, out, _ = run_cli(capsys, "orderq", "--q", "4", "--min-length")
    assert code == 0 and parse_records(out, "tsv")[0]["min_length"] == "6"
    code, out, _ = run_cli(capsys, "orderq", "--q", "4", "--pi")
    record = parse_records(out, "tsv")[0]
    assert (record["pi"], record["pi_prime"]) == ("000100", "001000")
    code, out, _ = run_cli(capsys, "orderq", "--q", "2", "--verify")
    assert code == 0
    assert all(r["status"] == "pass" for r in parse_records(out, "tsv"))


def test_types_and_fibword(capsys):
    code, out, _ = run_cli(capsys, "types", "--ell", "2", "--partition")
    assert code == 0
    records = parse_records(out, "tsv")
    tags = {r["element"]: r["type"] for r in records}
    assert tags["0001"] == "T01" and tags["0010"] == "T10"
    code, out, _ = run_cli(capsys, "fibword", "--ell", "3", "--partition")
    records = parse_records(out, "tsv")
    assert [r["block"] for r in records] == ["ba", "ba", "ab", "ab"]


def test_wheel_subcommands(capsys):
    code, out, _ = run_cli(capsys, "wheel", "--ell", "4", "--count")
    record = parse_records(out, "tsv")[0]
    assert record["backtracking"] == record["determinant"] == "45"
    code, out, _ = run_cli(capsys, "wheel", "--ell", "2", "--verify-bijection")
    assert code == 0 and parse_records(out, "tsv")[0]["status"] == "pass"


def test_demo_base(capsys):
    code, out, _ = run_cli(capsys, "demo-base", "--base", "10", "--q", "7")
    assert code == 0
    multiples = [r["multiple"] for r in parse_records(out, "tsv")]
    assert multiples == ["142857", "285714", "428571", "571428", "714285", "857142", "000000"]


def test_gcd_check(capsys):
    code, out, _ = run_cli(capsys, "gcd-check", "--max", "10")
    assert code == 0
    assert all(r["status"] == "pass" for r in parse_records(out, "tsv"))


def test_verify_small_bounds(capsys):
    code, out, _ = run_cli(capsys, "--max-ell", "2", "--max-q", "2", "verify")
    assert code == 0
    records = parse_records(out, "tsv")
    assert all(r["status"] in ("pass", "discrepancy") for r in records)
    assert any(r["status"] == "discrepancy" for r in records)


def test_invalid_input_exit_code(capsys):
    code, _, err = run_cli(capsys, "reduce", "0x1")
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "reduce", "000")  # odd length
    assert code == 2
    code, _, err = run_cli(capsys, "demo-base", "--base", "10", "--q", "6")
    assert code == 2


def test_resource_bound_exit_code(capsys):
    code, _, err = run_cli(capsys, "group", "--ell", "40", "--count")
    assert code == 3


def test_cache_round_trip(tmp_path):
    records = [{"element": "0101"}, {"element": "0001"}]
    cache.cache_store(str(tmp_path), "unit:demo", records)
    assert cache.cache_load(str(tmp_path), "unit:demo") == records


def test_cache_miss_and_stale(tmp_path):
    assert cache.cache_load(str(tmp_path), "missing") is None
    path = cache.cache_store(str(tmp_path), "k", [{"x": "1"}])
    text = open(path).read().replace("circfib-cache 1 ", "circfib-cache 0 ")
    open(path, "w").write(text)
    assert cache.cache_load(str(tmp_path), "k") is None  # stale version: recompute


def test_cache_corrupt_warns(tmp_path, capsys):
    path = cache.cache_store(str(tmp_path), "k", [{"x": "1", "y": "2"}])
    with open(path, "w") as fh:
        fh.write("garbage\nmore garbage\n")
    assert cache.cache_load(str(tmp_path), "k") is None
    assert "corrupt" in capsys.readouterr().err


def test_cli_uses_cache(tmp_path, capsys):
    code, first, _ = run_cli(capsys, "--cache-dir", str(tmp_path), "group", "--ell", "3", "--list")
    assert code == 0
    assert os.listdir(str(tmp_path))
    code, second, _ = run_cli(capsys, "--cache-dir", str(tmp_path), "group", "--ell", "3", "--list")
    assert first == second


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    code, out, _ = run_cli(capsys, "wheel", "--ell", "2", "--map")
    assert code == 0
    assert os.listdir(str(tmp_path))
    code, again, _ = run_cli(capsys, "wheel", "--ell", "2", "--map")
    assert out == again
