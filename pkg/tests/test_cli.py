import json

from hfsplice import random_knot_system
from hfsplice.cli import main


def read_json(capsys):
    return json.loads(capsys.readouterr().out)


def write_system(tmp_path, k, name="system"):
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps(k.to_json()))
    return str(path)


class TestLoading:
    def test_bundled_names_resolve(self, capsys):
        assert main(["validate", "trefoil_R"]) == 0
        obj = read_json(capsys)
        assert obj == {"ok": True, "strictOk": True, "failures": []}

    def test_path_resolves(self, tmp_path, capsys):
        k = random_knot_system(1, 1, 1, seed=70)
        assert main(["validate", write_system(tmp_path, k)]) == 0
        assert read_json(capsys)["ok"]

    def test_data_dir_resolves(self, tmp_path, capsys, monkeypatch):
        k = random_knot_system(1, 1, 1, seed=71, name="local")
        write_system(tmp_path, k, name="local")
        monkeypatch.setenv("HFSPLICE_DATA", str(tmp_path))
        assert main(["validate", "local"]) == 0
        assert read_json(capsys)["ok"]

    def test_missing_name_exits_2(self, capsys):
        assert main(["validate", "no_such_system"]) == 2
        assert "no_such_system" in capsys.readouterr().err

    def test_unparseable_json_exits_2(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["validate", str(path)]) == 2

    def test_malformed_system_exits_2(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"ranks": {"a0": 1}}))
        assert main(["validate", str(path)]) == 2


class TestValidate:
    def test_singular_system_exits_1(self, tmp_path, capsys):
        k = random_knot_system(1, 1, 1, seed=72)
        obj = k.to_json()
        obj["tau0"] = {"rows": 2, "cols": 2, "data": [[0, 0], [0, 0]]}
        path = tmp_path / "singular.json"
        path.write_text(json.dumps(obj))
        assert main(["validate", str(path)]) == 1
        out = read_json(capsys)
        assert not out["ok"] and out["failures"]

    def test_strict_flag(self, tmp_path, capsys):
        k = random_knot_system(1, 1, 1, seed=73)
        order3 = {"rows": 2, "cols": 2, "data": [[0, 1], [1, 1]]}
        obj = k.to_json()
        obj["tau0"] = obj["tau1"] = obj["tauinf"] = order3
        obj.pop("theta", None)
        path = tmp_path / "order3.json"
        path.write_text(json.dumps(obj))
        assert main(["validate", str(path)]) == 0
        capsys.readouterr()
        assert main(["validate", str(path), "--strict"]) == 1
        assert not read_json(capsys)["strictOk"]


class TestReports:
    def test_splice_on_bundled_pair(self, capsys):
        assert main(["splice", "trefoil_R", "trefoil_L"]) == 0
        obj = read_json(capsys)
        assert set(obj) == {
            "chi", "kernel", "cokernel", "rank", "bound", "pipelineAgreement",
        }
        assert obj["pipelineAgreement"]
        assert obj["chi"] == obj["bound"] == 9
        assert obj["rank"] == obj["kernel"] + obj["cokernel"] == 23

    def test_chi(self, capsys):
        assert main(["chi", "trefoil_R", "trefoil_L"]) == 0
        assert read_json(capsys) == {"chi": 9}

    def test_bound(self, capsys):
        assert main(["bound", "trefoil_R"]) == 0
        assert read_json(capsys) == {"bound": 7}
        assert main(["bound", "trefoil_L"]) == 0
        assert read_json(capsys) == {"bound": 9}

    def test_rr(self, capsys):
        assert main(["rr", "trefoil_R"]) == 0
        obj = read_json(capsys)
        assert obj["rank"] == 7 and obj["bound"] == 7
        m = obj["matrix"]
        assert (m["rows"], m["cols"]) == (4, 3)
        assert all(all(v == 0 for v in row) for row in m["data"])

    def test_out_flag_writes_file(self, tmp_path, capsys):
        dest = tmp_path / "report.json"
        assert main(["chi", "trefoil_R", "trefoil_L", "--out", str(dest)]) == 0
        assert capsys.readouterr().out == ""
        assert json.loads(dest.read_text()) == {"chi": 9}


class TestModule:
    def test_cfd_outputs_module(self, capsys):
        assert main(["cfd", "trefoil_R"]) == 0
        obj = read_json(capsys)
        assert set(obj) == {"generators", "arrows"}
        assert len(obj["generators"]) == 15
        for a in obj["arrows"]:
            assert set(a) == {"from", "to", "coeff"}

    def test_cfd_reduce_notes_on_stderr(self, capsys):
        assert main(["cfd", "trefoil_R", "--reduce"]) == 0
        captured = capsys.readouterr()
        assert "cancelled" in captured.err
        obj = json.loads(captured.out)
        assert all(
            a["coeff"] != "1" or a["from"] == a["to"] for a in obj["arrows"]
        )


class TestSelftest:
    def test_passes_with_small_trials(self, capsys):
        assert main(["selftest", "--trials", "3", "--seed", "5"]) == 0
        obj = read_json(capsys)
        assert obj["ok"] and obj["seed"] == 5 and obj["trials"] == 3
        assert [c["name"] for c in obj["checks"]] == [
            "iota-chain",
            "theta-independence",
            "cancellation",
            "kron-rank",
            "chi",
            "trefoil",
            "bordered",
        ]
        assert all(c["ok"] for c in obj["checks"])

    def test_deterministic_across_runs(self, capsys):
        main(["selftest", "--trials", "2"])
        first = capsys.readouterr().out
        main(["selftest", "--trials", "2"])
        assert capsys.readouterr().out == first
