import json

import pytest

from pentaverify import qseries as qs
from pentaverify.cli import main
from pentaverify.qseries import CoeffSeries


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# seq
# ---------------------------------------------------------------------------

def test_seq_p(capsys):
    code, out, _ = run(capsys, "seq", "p", "--max", "10")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,value"
    assert lines[-1] == "10,42"


def test_seq_pod_zero(capsys):
    code, out, _ = run(capsys, "seq", "pod", "--max", "0")
    assert code == 0
    assert out == "n,value\n0,1\n"


def test_seq_overp(capsys):
    code, out, _ = run(capsys, "seq", "overp", "--max", "2")
    assert code == 0
    assert out.strip().split("\n")[1:] == ["0,1", "1,2", "2,4"]


def test_seq_json_config_echo(capsys):
    code, out, _ = run(capsys, "seq", "p", "--max", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["family"] == "p"
    assert doc["rows"][-1] == {"n": 3, "value": 3}


# ---------------------------------------------------------------------------
# verify identities
# ---------------------------------------------------------------------------

def test_identities_ok(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--kmax", "4", "--degree", "80")
    assert code == 0
    assert out.count("OK") == 12


def test_identities_degree_zero(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--kmax", "3", "--degree", "0")
    assert code == 0


def test_identities_negative_control(capsys, monkeypatch):
    # inject an off-by-one pentagonal exponent into the closed form
    real = qs.mk_gf_closed

    def corrupted(k, trunc):
        series = real(k, trunc)
        bad = list(series.coeffs)
        if k == 2 and len(bad) > 8:
            bad[8:] = bad[7:-1]  # off-by-one shift from the q^7 leading term on
            bad[7] = 0
        return CoeffSeries(tuple(bad))

    monkeypatch.setattr(qs, "mk_gf_closed", corrupted)
    code, out, err = run(capsys, "verify", "identities", "--kmax", "3", "--degree", "40")
    assert code == 1
    assert "mk_positive" in err and "q^7" in err
    assert "MISMATCH at q^7" in out


# ---------------------------------------------------------------------------
# verify oracles
# ---------------------------------------------------------------------------

def test_oracles_mk(capsys):
    code, out, _ = run(capsys, "verify", "oracles", "--family", "mk",
                       "--ncap", "15", "--kmax", "3")
    assert code == 0
    assert "0 mismatches" in out


def test_oracles_cap_exceeded(capsys):
    code, _, err = run(capsys, "verify", "oracles", "--family", "mk",
                       "--ncap", "1000", "--kmax", "2")
    assert code == 2
    assert "cap" in err


def test_oracles_csv_rows(capsys):
    code, out, _ = run(capsys, "verify", "oracles", "--family", "mp",
                       "--ncap", "8", "--kmax", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "family,n,k,formula,oracle,match"
    assert len(lines) == 17
    assert all(line.endswith("true") for line in lines[1:])


# ---------------------------------------------------------------------------
# ratio
# ---------------------------------------------------------------------------

def test_ratio_csv_and_assert(capsys):
    code, out, _ = run(capsys, "ratio", "--family", "mk",
                       "--n", "100,400,1600", "--k", "1", "--assert-converge")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "family,n,k,ln_exact,ln_main,rel_dev,in_regime"
    assert len(lines) == 4


def test_ratio_nan_row(capsys):
    # M_1(1) = 0, so rel_dev is undefined
    code, out, _ = run(capsys, "ratio", "--family", "mk", "--n", "1", "--k", "1")
    assert code == 0
    assert ",nan," in out.strip().split("\n")[1]


def test_ratio_assert_failure_on_nonmonotone(capsys):
    code, _, err = run(capsys, "ratio", "--family", "mk",
                       "--n", "400,100", "--k", "1", "--assert-converge")
    assert code == 1
    assert "not strictly decreasing" in err


def test_ratio_mkbar_k_free_main(capsys):
    code, out, _ = run(capsys, "ratio", "--family", "mkbar",
                       "--n", "1000", "--k", "1,2,3")
    assert code == 0
    mains = [line.split(",")[4] for line in out.strip().split("\n")[1:]]
    assert len(set(mains)) == 1


def test_ratio_deterministic_bytes(capsys):
    _, out1, _ = run(capsys, "ratio", "--family", "mp", "--n", "100,400", "--k", "1,2")
    _, out2, _ = run(capsys, "ratio", "--family", "mp", "--n", "100,400", "--k", "1,2")
    assert out1 == out2


def test_ratio_thread_env_invariance(capsys, monkeypatch):
    _, base, _ = run(capsys, "ratio", "--family", "mk", "--n", "100,400", "--k", "1,2")
    monkeypatch.setenv("PENTAVERIFY_THREADS", "4")
    _, threaded, _ = run(capsys, "ratio", "--family", "mk", "--n", "100,400", "--k", "1,2")
    assert base == threaded


def test_ratio_out_and_plot(tmp_path, capsys):
    out_path = tmp_path / "ratio.csv"
    png_path = tmp_path / "ratio.png"
    code, _, _ = run(capsys, "ratio", "--family", "mk", "--n", "100,400",
                     "--k", "1", "--out", str(out_path), "--plot", str(png_path))
    assert code == 0
    assert out_path.read_text().startswith("family,n,k,")
    assert png_path.stat().st_size > 1000


# ---------------------------------------------------------------------------
# circle
# ---------------------------------------------------------------------------

def test_circle_match(capsys):
    code, out, _ = run(capsys, "circle", "--n", "10", "--k", "1")
    assert code == 0
    assert "rounded=12 exact=12 match=true" in out


def test_circle_first_nonzero_k2(capsys):
    code, out, _ = run(capsys, "circle", "--n", "7", "--k", "2")
    assert code == 0
    assert "exact=1 match=true" in out


def test_circle_out_of_range(capsys):
    code, _, err = run(capsys, "circle", "--n", "200", "--k", "1")
    assert code == 2
    assert "n <= 80" in err


def test_circle_json(capsys):
    code, out, _ = run(capsys, "circle", "--n", "12", "--k", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"][0]["match"] is True
    assert doc["rows"][0]["rounded"] == doc["rows"][0]["exact"]


# ---------------------------------------------------------------------------
# lemmas
# ---------------------------------------------------------------------------

def test_lemmas_ok_and_eta_row(capsys):
    code, out, _ = run(capsys, "lemmas", "--n", "400,1600", "--k", "1")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "check,n,k,re_tau,im_tau,defect,bound,ok"
    eta_rows = [ln for ln in lines if ln.startswith("eta,")]
    assert eta_rows, "expected eta inversion rows"
    # the self-dual point tau = i passes its 1e-6 bound
    tau_i = [ln for ln in eta_rows if ",0,1," in ln or ",0.0,1," in ln]
    assert all(ln.endswith("true") for ln in eta_rows)
    assert tau_i


def test_lemmas_regime_violation(capsys):
    code, _, err = run(capsys, "lemmas", "--n", "400", "--k", "50")
    assert code == 2
    assert "k^8" in err


def test_lemmas_force(capsys):
    code, out, _ = run(capsys, "lemmas", "--n", "400", "--k", "3", "--force")
    assert code == 0


def test_lemmas_plot(tmp_path, capsys):
    png = tmp_path / "defects.png"
    code, _, _ = run(capsys, "lemmas", "--n", "400,1600", "--k", "1",
                     "--plot", str(png))
    assert code == 0
    assert png.stat().st_size > 1000


# ---------------------------------------------------------------------------
# usage errors
# ---------------------------------------------------------------------------

def test_bad_list_argument():
    with pytest.raises(SystemExit) as exc:
        main(["ratio", "--family", "mk", "--n", "abc", "--k", "1"])
    assert exc.value.code == 2


def test_missing_subcommand():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
