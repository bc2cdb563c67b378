import io
import json
import subprocess
import sys

import pytest

from specdual import cli, properties


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    return code, json.loads(out)


def term(exps, num, den="1"):
    return {"exps": list(exps), "num": str(num), "den": str(den)}


def test_dual_check_example2():
    code, out, _ = run("dual-check", "--p", "D^2 + s + 1", "--q", "D^3 - 2")
    assert code == 0
    assert out.splitlines()[0] == "duality holds"
    assert "X_QP: -x^3 + y^2 + 3*x^2 + y - 3*x + 1 = 0" in out
    assert "swap(X_PQ): x^3 - y^2 - 3*x^2 - y + 3*x - 1 = 0" in out


def test_dual_check_json():
    code, data = run_json("dual-check", "--p", "D^2+s+1", "--q", "D^3-2")
    assert code == 0 and data["holds"] is True
    assert set(data["X_QP"]) == {"raw", "normal", "rank"}
    assert data["X_QP"]["rank"] == 2 and data["X_PQ"]["rank"] == 3


def test_mqp_json_golden():
    code, data = run_json("mqp", "--p", "3", "--q", "2")
    assert code == 0
    u, one = [term([1], 1)], [term([0], 1)]
    assert data == {"rank": 3, "variable": "u",
                    "rows": [[[], u, []], [[], [], u], [one, [], []]]}


def test_mqp_pretty():
    code, out, _ = run("mqp", "--p", "3", "--q", "2")
    assert code == 0
    assert out == "[ 0  u  0 ]\n[ 0  0  u ]\n[ 1  0  0 ]\n"


def test_curve_rank_one():
    code, out, _ = run("curve", "--action", "D", "--op", "D")
    assert code == 0 and out.startswith("curve: y - x = 0")
    code, data = run_json("curve", "--action", "D", "--op", "D")
    assert data["raw"] == [term([0, 1], 1), term([1, 0], -1)]


def test_matrix_laurent_window():
    code, data = run_json("matrix", "--action", "L + L^-1", "--op", "L^2", "--window-start", "0")
    assert code == 0 and data["window_start"] == 0 and data["rank"] == 2


def test_quantize_check_verdicts():
    args = ["--p0", "D^2-2D+1", "--q0", "D", "--p1", "D^2-s", "--q1", "D+1"]
    code, data = run_json("quantize-check", *args)
    assert code == 0 and data["verdict"] is True
    fourier = ["--p0=-D", "--q0", "D^2-2D+1", "--p1=-D-1", "--q1", "D^2-s"]
    code, data = run_json("quantize-check", *fourier)
    assert code == 1 and data["matrix_eq_ok"] is False
    code, data = run_json("quantize-check", *fourier, "--spectral")
    assert code == 0 and data["verdict"] is True and data["mode"] == "spectral"


def test_commuting_pair_exit_one():
    code, out, _ = run("quantize-check", "--p0", "D^2", "--q0", "D^3", "--p1", "D^2", "--q1", "D^3")
    assert code == 1 and "string_eq_ok: False" in out


def test_fourier_check():
    code, out, _ = run("fourier-check", "--p1", "D^2 - s", "--q1", "D + 1")
    assert code == 0 and out.startswith("fourier duality holds")


def test_beh_report():
    code, data = run_json("beh", "--gamma", "2", "--a=3,1,-1", "--b", "1,5,3")
    assert code == 0
    report = data["report"]
    assert report["holds"] and report["d1_matches_matrix_rep"] and report["d2_matches_matrix_rep"]
    assert report["scalar"] == "-3"
    assert data["instance"]["N"] == 3


def test_resultant_command():
    code, data = run_json("resultant", "--p", "L^2", "--q", "L^3")
    assert code == 0
    assert data["resultant"] == [term([3, 0], -1), term([0, 2], 1)]
    code, out, _ = run("resultant", "--p", "L + L^-1", "--q", "L - L^-1")
    assert code == 0


@pytest.mark.parametrize("argv,needle", [
    (["curve", "--action", "D^-1", "--op", "D"], "negative exponents"),
    (["curve", "--action", "s D^2", "--op", "D"], "leading coefficient"),
    (["curve", "--action", "D", "--op", "L"], "does not act"),
    (["beh", "--gamma", "1", "--a", "1,0", "--b", "1,1"], "a_d2"),
    (["beh", "--gamma", "x", "--a", "1,1", "--b", "1,1"], "--gamma"),
    (["resultant", "--p", "s", "--q", "L"], "cannot involve s"),
    (["quantize-check", "--p0", "L", "--q0", "D", "--p1", "D", "--q1", "D"], "D/s operator"),
])
def test_validation_errors_exit_two(argv, needle):
    code, out, err = run(*argv)
    assert code == 2 and needle in err and out == ""


def test_usage_errors_exit_two(capsys):
    assert run("no-such-command")[0] == 2
    assert run("mqp", "--p", "3")[0] == 2
    assert run("mqp", "--p", "3", "--q", "2", "--seed", "-1")[0] == 2
    assert run("mqp", "--p", "3", "--q", "2", "--seed", str(2 ** 64))[0] == 2
    assert run("mqp", "--p", "0", "--q", "2")[0] == 2


def test_property_suite_deterministic():
    argv = ["property-suite", "--count", "3", "--seed", "12345", "--json"]
    first, second = run(*argv), run(*argv)
    assert first[0] == 0 and first[1] == second[1]
    threaded = run(*argv, "--jobs", "4")
    assert threaded[1] == first[1]
    data = json.loads(first[1])
    assert data["seed"] == 12345
    assert [s["name"] for s in data["suites"]] == list(properties.SUITES)


def test_property_suite_seed_changes_cases():
    a = properties.SUITES["weyl-duality"](properties.case_rng(1, "weyl-duality", 0))[1]
    b = properties.SUITES["weyl-duality"](properties.case_rng(2, "weyl-duality", 0))[1]
    assert a != b


def test_property_suite_failure_reports_witness(monkeypatch):
    def broken(rng):
        k = rng.randint(0, 9)
        return k < 5, {"k": k}
    monkeypatch.setitem(properties.SUITES, "broken", broken)
    monkeypatch.setitem(cli.SUITES, "broken", broken)
    code, out, _ = run("property-suite", "--count", "20")
    assert code == 1
    assert "FAIL broken" in out and "witness:" in out


def test_entry_point_subprocess():
    proc = subprocess.run([sys.executable, "-m", "specdual", "mqp", "--p", "2", "--q", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "[   0  u^2 ]\n[   u    0 ]\n"
    proc = subprocess.run([sys.executable, "-m", "specdual", "curve", "--action", "sD",
                           "--op", "D"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and "byte 0" in proc.stderr
