import csv
import io
import json

import pytest

from colorpart.cli import CSV_COLUMNS, main
from colorpart.oracle import ColorProfile, count_colored


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def values(out):
    return [int(line.split()[1]) for line in out.strip().splitlines()]


# -- compute -------------------------------------------------------------------


def test_compute_partitions(capsys):
    code, out, _ = run(capsys, "compute", "--r", "1", "--s", "1", "--N", "5")
    assert code == 0
    assert values(out) == [count_colored(n, ColorProfile(1, 1)) for n in range(6)] == [1, 1, 2, 3, 5, 7]


def test_compute_a24(capsys):
    _, out, _ = run(capsys, "compute", "--r", "2", "--s", "4", "--N", "2")
    assert values(out) == [1, 4, 12]


def test_compute_mod5(capsys):
    raw = [count_colored(n, ColorProfile(1, 5)) for n in range(4)]
    # a_{1,5}(2) = 1 + C(6,2) = 16, so the residue at n=2 is 1
    assert raw == [1, 5, 16, 45]
    _, out, _ = run(capsys, "compute", "--r", "1", "--s", "5", "--mod", "5", "--N", "3")
    assert values(out) == [c % 5 for c in raw] == [1, 0, 1, 0]


def test_compute_bad_colors(capsys):
    code, _, err = run(capsys, "compute", "--r", "0", "--s", "1")
    assert code == 2 and "--r" in err


# -- verify --------------------------------------------------------------------


def test_verify_t1_6(capsys):
    code, out, err = run(capsys, "verify", "--family", "t1.6", "--N", "600")
    assert code == 0
    assert "FAIL" not in out
    assert "0 failed" in err


def test_verify_t1_19_primes(capsys):
    code, out, _ = run(capsys, "verify", "--family", "t1.19", "--primes", "3,5,7", "--N", "400")
    assert code == 0
    assert {line.split()[1] for line in out.splitlines()[1:]} == {"3", "5", "7"}


def test_verify_depth_floor(capsys):
    code, _, err = run(capsys, "verify", "--family", "t1.6", "--N", "99")
    assert code == 2 and "100" in err


def test_verify_unknown_family(capsys):
    code, _, err = run(capsys, "verify", "--family", "t9.9", "--N", "200")
    assert code == 2 and "t9.9" in err


def test_verify_json_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--family", "t1.10,t1.2", "--N", "150", "--out", str(out))
    assert code == 0
    rep = json.loads(out.read_text())
    assert set(rep) == {"meta", "cells"}
    assert set(rep["meta"]) == {"config", "version", "timestamp"}
    assert rep["meta"]["config"]["depth"] == 150
    for cell in rep["cells"]:
        assert {"family", "p", "k", "j", "residues", "status", "witness"} <= set(cell)
        assert "ms" not in cell
    assert len(rep["meta"]["timestamp"]["cell_ms"]) == len(rep["cells"])
    # iterated alpha=1 needs q^172 and is skipped at this depth
    statuses = {(c["family"], c["alpha"]): c["status"] for c in rep["cells"] if c["family"] == "t1.2"}
    assert statuses == {("t1.2", 0): "PASS", ("t1.2", 1): "SKIPPED"}


def test_verify_csv_report(tmp_path, capsys):
    out = tmp_path / "r.csv"
    code, _, _ = run(capsys, "verify", "--family", "t1.6", "--N", "300", "--kmax", "1", "--out", str(out), "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 3
    assert rows[0]["residues"] == "1 2"


def test_verify_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for i, path in enumerate(paths):
        run(capsys, "verify", "--family", "all", "--N", "300", "--out", str(path), "--threads", str(i + 1))
    a, b = (json.loads(p.read_text()) for p in paths)
    for rep in (a, b):
        del rep["meta"]["timestamp"]
    assert a == b


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"N": 250, "family": "t1.11", "primes": [3], "kmax": 0, "format": "json"}))
    code, out, _ = run(capsys, "verify", "--config", str(cfg))
    assert code == 0
    rep = json.loads(out)
    assert rep["meta"]["config"]["depth"] == 250 and len(rep["cells"]) == 1
    _, out, _ = run(capsys, "verify", "--config", str(cfg), "--N", "300")
    assert json.loads(out)["meta"]["config"]["depth"] == 300


def test_bad_config_key(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"depht": 300}')
    assert run(capsys, "verify", "--config", str(cfg))[0] == 2


def test_io_error(tmp_path, capsys):
    missing = tmp_path / "no" / "such" / "dir" / "r.json"
    code, _, err = run(capsys, "verify", "--family", "t1.6", "--N", "200", "--kmax", "0", "--out", str(missing))
    assert code == 3 and "I/O" in err
    assert run(capsys, "verify", "--config", str(tmp_path / "absent.json"))[0] == 3


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--primes", "3,x"])
    assert exc.value.code == 2


# -- dissect -------------------------------------------------------------------


def component_lines(out):
    return {int(line.split()[0][2:]): line for line in out.splitlines() if line.startswith("j=")}


def test_dissect_t1_6(capsys):
    code, out, _ = run(capsys, "dissect", "f2^3/f1^6", "--m", "3", "--mod", "3")
    assert code == 0
    rows = component_lines(out)
    assert "vanishes" in rows[1] and "vanishes" in rows[2]
    assert "nonzero" in rows[0]


def test_dissect_one(capsys):
    _, out, _ = run(capsys, "dissect", "1", "--m", "5", "--N", "50")
    rows = component_lines(out)
    assert rows[0].split()[-8:] == ["1"] + ["0"] * 7
    assert all("vanishes" in rows[j] for j in range(1, 5))


def test_dissect_t1_8(capsys):
    _, out, _ = run(capsys, "dissect", "f2^2/f1^4", "--m", "27", "--mod", "3", "--N", "1000")
    rows = component_lines(out)
    vanishing = {j for j, line in rows.items() if "vanishes" in line}
    # besides 9 and 18, every class j = 2 mod 3 vanishes since a_{2,4}(3n+2) = 0 mod 3
    assert vanishing == {9, 18} | set(range(2, 27, 3))


def test_dissect_parse_error(capsys):
    code, _, err = run(capsys, "dissect", "f2^3/g1", "--m", "3")
    assert code == 2 and "5" in err


# -- identities / residues ------------------------------------------------------------


def test_identities_shallow(capsys):
    code, out, _ = run(capsys, "identities", "--N", "20")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11 and all("PASS" in line for line in lines)


def test_identities_depth_floor(capsys):
    assert run(capsys, "identities", "--N", "19")[0] == 2


def test_residues(capsys):
    code, out, _ = run(capsys, "residues", "t1.13", "5")
    assert code == 0 and out.strip() == "r=3: 3r+1=10 ≡ 0 mod 5"
    _, out, _ = run(capsys, "residues", "t1.16", "5")
    assert [line.split(":")[0] for line in out.strip().splitlines()] == ["r=2", "r=3"]


def test_residues_constraint(capsys):
    code, _, err = run(capsys, "residues", "t1.13", "7")
    assert code == 2 and "12" in err


def test_residues_fixed_progression(capsys):
    code, out, _ = run(capsys, "residues", "t1.8", "3")
    assert code == 0 and "27n + 9, 18" in out
