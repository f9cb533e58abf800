"""Command-line interface: commands, exit codes, cache."""

import json

import pytest

from skewtensor.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_diagram(capsys):
    code, out, _ = run(capsys, "diagram", "4,1")
    assert code == 0
    assert out.splitlines() == ["[][][][]", "[]"]


def test_diagram_example_silhouette(capsys):
    code, out, _ = run(capsys, "diagram", "5,4,2,2,1,1/3,2")
    assert code == 0
    assert sum(line.count("[]") for line in out.splitlines()) == 10


def test_diagram_parse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["diagram", "not-a-shape"])
    assert exc.value.code == 3


def test_decompose_cmd(capsys):
    code, out, _ = run(capsys, "decompose", "1,1,1", "--r", "2", "--s", "1",
                       "VxV*")
    assert code == 0 and "[1, 4, 4]" in out
    code, out, _ = run(capsys, "decompose", "3,1,1", "--r", "2", "--s", "2",
                       "VxV")
    assert code == 0 and "[12, 13]" in out
    code, out, _ = run(capsys, "decompose", "1", "--r", "1", "--s", "1", "VxV*")
    assert code == 0 and "[1]" in out


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "2,1", "--r", "1", "--s", "1",
                       "VxV*", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["total_dim"] == 9


def test_powers_cmd(capsys):
    code, out, _ = run(capsys, "powers", "4,1", "--r", "1", "--s", "2",
                       "--nmax", "4", "--no-cache")
    assert code == 0
    assert "[5, 9, 13, 17]" in out and "4x + 1" in out


def test_powers_trivial(capsys):
    code, out, _ = run(capsys, "powers", "1", "--r", "1", "--s", "1",
                       "--nmax", "5", "--no-cache")
    assert code == 0 and "fit: 1" in out


def test_powers_even_dim_is_usage_error(capsys):
    code, _, err = run(capsys, "powers", "2,2", "--r", "1", "--s", "1",
                       "--no-cache")
    assert code == 3 and "even dimension" in err


def test_powers_cache_byte_identical(tmp_path, capsys):
    args = ["powers", "2,1", "--r", "1", "--s", "1", "--nmax", "4",
            "--cache", str(tmp_path), "--json"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert list(tmp_path.glob("*.json"))


def test_verify_tables_dim3(capsys):
    code, out, _ = run(capsys, "verify-tables", "dim3")
    assert code == 0 and "all match" in out


def test_verify_tables_json(capsys):
    code, out, _ = run(capsys, "verify-tables", "dim3", "--json")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_syzygy_cmd(capsys):
    code, out, _ = run(capsys, "syzygy", "4,1", "--r", "1", "--s", "2",
                       "--t", "1")
    assert code == 0 and "monomial module of 3" in out
    code, out, _ = run(capsys, "syzygy", "1", "--r", "1", "--s", "1",
                       "--t", "-1")
    assert code == 0 and "monomial module of 2,1" in out
    code, out, _ = run(capsys, "syzygy", "2,2", "--r", "1", "--s", "1",
                       "--t", "1")
    assert code == 0 and "zero module" in out


def test_sweep_dim3(capsys, tmp_path):
    code, out, _ = run(capsys, "sweep", "--dim", "3", "--nmax", "4",
                       "--cache", str(tmp_path))
    assert code == 0
    assert "2,1" in out and "2x + 1" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["decompose"])
    assert exc.value.code == 3
