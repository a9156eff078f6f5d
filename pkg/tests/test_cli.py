import json

import pytest

from quintic75.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_lines_gram(capsys):
    code, out = _run(capsys, "lines", "gram")
    assert code == 0 and "75 lines, Gram rank 40" in out.out


def test_lines_f16_json(capsys):
    code, out = _run(capsys, "lines", "gram", "--field", "f16", "--json")
    data = json.loads(out.out)
    assert code == 0 and data["count"] == 135 and data["rank"] == 53


def test_lines_fp_list(capsys):
    code, out = _run(capsys, "lines", "list", "--field", "fp", "--p", "19")
    assert code == 0 and out.out.strip() == "75 lines"


@pytest.mark.parametrize("name,expected", [("M", "rank 40, disc -607191552"), ("N", "rank 8, disc -2")])
def test_lattice(capsys, name, expected):
    code, out = _run(capsys, "lattice", name)
    assert code == 0 and expected in out.out


def test_count(capsys, tmp_path):
    code, out = _run(capsys, "count", "--p", "19", "--all-roots", "--json", "--cache", str(tmp_path))
    data = json.loads(out.out)
    assert code == 0
    assert [r["count"] for r in data["records"]] == [915] * len(data["records"])
    assert all(r["rho_reduction"] == 45 for r in data["records"])
    assert list(tmp_path.glob("*.json"))


def test_k3_count(capsys):
    code, out = _run(capsys, "k3", "count", "--p", "23", "--all-roots")
    assert code == 0 and "= 924" in out.out and "-20: -3·11·13" in out.out


def test_k3_fibers(capsys):
    code, out = _run(capsys, "k3", "fibers")
    assert code == 0 and "4xI1 + 8xI2 + 1xI4" in out.out
    code, out = _run(capsys, "k3", "fibers", "--lam", "1")
    assert code == 0 and "8xI1 + 6xI2 + 1xI4" in out.out


def test_badprimes(capsys):
    code, out = _run(capsys, "badprimes", "--target", "quintic", "--json")
    assert code == 0 and json.loads(out.out)["bad"] == [3, 5, 11, 17, 433]


def test_godeaux(capsys):
    code, out = _run(capsys, "godeaux")
    assert code == 0 and "rank 8, disc -2" in out.out and "True" in out.out


def test_missing_prime_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count"])
    assert exc.value.code == 2


def test_unknown_command(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_no_root_exits_1(capsys):
    # b^4 - b^3 + 1 has no root in F_7
    from quintic75.lines import b_roots

    assert not b_roots(7)
    code, out = _run(capsys, "count", "--p", "7")
    assert code == 1


def test_certify_single_prime_fails(capsys):
    code, out = _run(capsys, "certify", "--prime", "19", "--no-index")
    assert code == 1
    assert json.loads(out.out)["failed_block"] == "upper_bound"


def test_certificate_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["certify", "--no-index", "--no-timestamp", "--out", str(a)]) == 0
    assert main(["certify", "--no-index", "--no-timestamp", "--out", str(b)]) == 0
    assert a.read_text() == b.read_text()
    cert = json.loads(a.read_text())
    assert cert["conclusion"]["rho_S"] == 41
    assert "timestamp" not in cert
