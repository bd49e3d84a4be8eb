import json
import subprocess
import sys

import pytest

from stablekr.cli import EXIT_CONFIG, EXIT_OK, EXIT_UNKNOWN, main
from stablekr.verify import IDENTITIES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_differential_n2_example(capsys):
    code, out, _ = run(capsys, "differential", "--n", "2", "--N", "2", "--yified")
    assert code == EXIT_OK
    assert "d(xi0) = -u1^2*y1*y2 + u0^2" in out
    assert "d(xi1) = u1^2*y1 + u1^2*y2 + 2*u0*u1" in out
    assert "closed_form_match: true" in out
    assert "d(zeta0)" in out and "d(zeta1)" in out


def test_differential_json_matches_library(capsys):
    from stablekr.differential import build_dn

    code, out, _ = run(capsys, "differential", "--n", "2", "--N", "2", "--yified", "--format", "json")
    data = json.loads(out)
    d = build_dn(2, 2)
    assert data["d_xi"] == {f"xi{k}": d.image(f"xi{k}").to_str() for k in range(2)}
    assert data["closed_form_match"] is True


def test_quadratic_potential(capsys):
    code, out, _ = run(capsys, "differential", "--n", "3", "--potential", "x^2/2", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["d_xi"] == {"xi0": "u0", "xi1": "u1", "xi2": "u2"}


def test_single_strand_power(capsys):
    code, out, _ = run(capsys, "differential", "--n", "1", "--N", "5")
    assert code == EXIT_OK
    assert "d(xi0) = u0^5" in out


def test_malformed_potential(capsys):
    code, _, err = run(capsys, "differential", "--n", "2", "--potential", "x^4/ - x")
    assert code == EXIT_CONFIG
    assert "position" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["differential", "--n", "2"],
        ["differential", "--n", "2", "--N", "2", "--potential", "x^3/3"],
        ["differential", "--n", "0", "--N", "2"],
        ["homology", "--n", "2", "--potential", "x^4/4 - x^2/2"],
        ["verify", "--only", "no-such-identity"],
        ["specialize", "--n", "3", "--M", "2"],
        ["conjecture-mu", "--n", "2", "--N", "2", "--yified"],
    ],
)
def test_config_errors_exit_4(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_CONFIG


def test_argparse_errors_exit_4(capsys):
    with pytest.raises(SystemExit) as info:
        main(["homology", "--n", "two"])
    assert info.value.code == EXIT_CONFIG


def test_homology_single_strand(capsys):
    code, out, _ = run(capsys, "homology", "--n", "1", "--N", "3", "--max-u-degree", "6")
    assert code == EXIT_OK
    assert "total homology: 3" in out


def test_homology_text_and_json_agree(capsys):
    args = ["homology", "--n", "2", "--N", "2", "--max-u-degree", "5"]
    _, text, _ = run(capsys, *args)
    _, js, _ = run(capsys, *args, "--format", "json")
    data = json.loads(js)
    total = sum(r["homology"] for r in data["degrees"])
    assert f"total homology: {total}" in text
    for r in data["degrees"]:
        assert f"{r['homology']}[{r['chain']}]" in text
        assert r["homology"] == r["chain"] - r["rank_in"] - r["rank_out"]
    assert data["euler_ok"] is True and data["unknown_degrees"] == []


def test_homology_yified_vanishes_above(capsys):
    code, out, _ = run(
        capsys, "homology", "--n", "2", "--N", "2", "--yified", "--max-u-degree", "6", "--max-y-degree", "6",
        "--format", "json", "--no-representatives",
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert all(r["homology"] == 0 for r in data["degrees"] if r["dA"] >= 1)


def test_homology_jobs_deterministic(capsys):
    args = ["homology", "--n", "2", "--N", "2", "--yified", "--max-u-degree", "4", "--max-y-degree", "4", "--format", "json"]
    _, serial, _ = run(capsys, *args, "--jobs", "1")
    _, parallel, _ = run(capsys, *args, "--jobs", "2")
    assert serial == parallel


def test_strict_flag_without_unknowns(capsys):
    code, _, _ = run(capsys, "homology", "--n", "2", "--N", "2", "--max-u-degree", "3", "--strict")
    assert code != EXIT_UNKNOWN


def test_verify_list_and_only(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == EXIT_OK and len(out.split()) == len(IDENTITIES) >= 12
    code, out, _ = run(capsys, "verify", "--only", "hook-schur-to-h", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert [r["name"] for r in data["results"]] == ["hook-schur-to-h"]
    assert data["all_passed"]


def test_verify_default_all_pass(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == EXIT_OK
    assert f"{len(IDENTITIES)}/{len(IDENTITIES)} passed" in out


def test_conjecture_mu(capsys):
    code, out, _ = run(capsys, "conjecture-mu", "--n", "2", "--N", "2", "--max-u-degree", "8", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["all_equal"] and all(r["status"] == "equal" for r in data["degrees"])


def test_specialize_and_coproduct(capsys):
    code, out, _ = run(capsys, "specialize", "--n", "2", "--M", "3", "--N", "2")
    assert code == EXIT_OK and "phi_dn_zeta_is_h: true" in out
    code, out, _ = run(capsys, "coproduct", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["closed_form_match"] and data["cocommutative"] and data["coassociative"]


def test_output_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "coproduct", "--n", "1", "--format", "json", "--output", str(path))
    assert code == EXIT_OK and out == ""
    assert json.loads(path.read_text())["coefficients"] == {"v0": "u0*ut0"}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stablekr", "differential", "--n", "1", "--N", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "u0^2" in proc.stdout
