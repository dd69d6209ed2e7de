import io
import json

import pytest

from kgline.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, EXIT_TIMEOUT, run
from kgline.formats import read_graph, read_partition
from kgline import generators as gen


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def structured(*argv):
    code, out, _ = call(*argv, "--format", "structured")
    return code, json.loads(out)


def test_chi_web():
    code, data = structured("chi", "--gen", "web:7,3")
    assert code == EXIT_OK
    assert data["value"] == 4 and data["optimal"]
    assert "seconds" not in data


def test_chi_text_has_partition():
    code, out, _ = call("chi", "--gen", "web:7,3")
    assert code == EXIT_OK
    assert out.startswith("chi=4\n") and out.count("star") + out.count("triangle") == 4


def test_bounds_k5():
    code, data = structured("bounds", "--gen", "complete:5")
    assert code == EXIT_OK
    assert (data["cd2"], data["tau"], data["chi"]) == (3, 4, 3)
    assert all(data["checks"].values())


def test_bounds_text_lines():
    code, out, _ = call("bounds", "--gen", "cycle:5", "--psi")
    assert code == EXIT_OK
    assert "chi=3\n" in out and "psi=3\n" in out


def test_verify_struct_web():
    code, data = structured("verify", "struct", "--gen", "web:9,3")
    assert code == EXIT_OK
    assert data["status"] == "pass" and data["numbers"] == {"chi": 6, "tau": 6}


@pytest.mark.parametrize("argv,key,value", [
    (["verify", "coloring", "--gen", "cycle:5"], "psi", 3),
    (["verify", "characterization", "--gen", "complete:5"], "chi", 3),
    (["verify", "gadget", "--gen", "path:3", "--k", "1"], "chi", 4),
    (["verify", "join", "--gen", "complete:3", "--gen2", "complete:3"], "cd2", 4),
    (["verify", "hypergadget", "--gen", "uniform:4,3", "--k", "1"], "chi", 5),
])
def test_verify_commands(argv, key, value):
    code, data = structured(*argv)
    assert code == EXIT_OK and data["status"] == "pass"
    assert data["numbers"][key] == value


def test_gen_round_trip(tmp_path):
    code, out, _ = call("gen", "--gen", "web:8,3")
    assert code == EXIT_OK
    assert read_graph(out) == gen.web(8, 3)
    path = tmp_path / "w.txt"
    path.write_text(out)
    code, data = structured("chi", "--input", str(path))
    assert data["value"] == 5


def test_gen_gadget_and_doubled():
    code, out, _ = call("gen", "--gen", "path:3", "--gadget", "1")
    assert read_graph(out) == gen.gadget(gen.path(3), 1)
    code, out, _ = call("gen", "--gen", "path:3", "--doubled", "1")
    assert read_graph(out) == gen.doubled(gen.path(3), 1)


def test_partition_from_file(tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("p 4 4\ne 0 1\ne 0 2\ne 1 2\ne 0 3\nparts 2\n"
                    "triangle : 0-1 0-2 1-2\nstar 0 : 0-3\n")
    code, out, _ = call("partition", "--input", str(path), "--minimize")
    assert code == EXIT_OK
    p = read_partition(out)
    assert p.triangle_count == 0 and len(p) == 2


def test_partition_rewire(tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("p 4 5\ne 0 1\ne 0 2\ne 1 2\ne 0 3\ne 1 3\nparts 3\n"
                    "star 0 : 0-1\nstar 2 : 0-2 1-2\nstar 3 : 0-3 1-3\n")
    code, out, _ = call("partition", "--input", str(path), "--rewire", "0-1")
    assert code == EXIT_OK
    assert "star 0 : 0-1 0-2 0-3\n" in out and "star 1 : 1-2 1-3\n" in out


def test_approx_and_psi():
    code, data = structured("approx", "--gen", "cycle:6")
    assert data["parts"] == 5 and data["matching"] == [[0, 1], [2, 3], [4, 5]]
    code, data = structured("psi", "--gen", "complete:4")
    assert data["psi"] == 2


def test_zigzag_command():
    code, data = structured("zigzag", "--gen", "web:7,3", "--t", "4")
    assert code == EXIT_OK
    assert (data["lo"], data["hi"], data["zigzag"]) == (3, 3, None)
    code, data = structured("zigzag", "--gen", "cycle:7", "--coloring", "search", "--colors", "4")
    assert (data["lo"], data["hi"]) == (3, 3)


def test_stdin_input(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("p 3 3\ne 0 1\ne 0 2\ne 1 2\n"))
    code, data = structured("chi", "--input", "-")
    assert code == EXIT_OK and data["value"] == 1


# exit-code matrix

def test_exit_timeout():
    code, out, err = call("chi", "--gen", "complete:10", "--timeout", "0", "--format", "structured")
    assert code == EXIT_TIMEOUT
    data = json.loads(out)
    assert data["timeout"] and data["lower"] <= 8 <= data["upper"]
    assert "timeout" in err


def test_exit_failure_with_witness(monkeypatch):
    # the theorems hold, so a failure needs an injected fault: a solver that
    # overstates chi by one
    from kgline import verifier
    real = verifier._exact_chi

    def off_by_one(h, timeout):
        res = real(h, timeout)
        res.value += 1
        return res

    monkeypatch.setattr(verifier, "_exact_chi", off_by_one)
    code, data = structured("verify", "struct", "--gen", "web:8,3")
    assert code == EXIT_FAIL
    assert data["status"] == "fail" and "partition" in data["witness"]
    code, data = structured("verify", "coloring", "--gen", "cycle:5")
    assert code == EXIT_FAIL
    rep = verifier.VerificationReport(**data)
    assert verifier.replay(rep)


@pytest.mark.parametrize("argv", [
    ["chi", "--gen", "nope:3"],
    ["chi"],
    ["chi", "--gen", "complete:3", "--input", "x"],
    ["chi", "--input", "/nonexistent/file"],
    ["psi", "--gen", "uniform:4,3"],
    ["sweep", "nonsense"],
    ["bogus-command"],
    ["verify", "join", "--gen", "complete:3"],
])
def test_exit_input_errors(argv):
    code, _, _ = call(*argv)
    assert code == EXIT_INPUT


def test_exit_input_bad_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("p 3 2\ne 0 1\n")
    code, _, err = call("chi", "--input", str(path))
    assert code == EXIT_INPUT and "error" in err


def test_determinism():
    argv = ["sweep", "join", "approx", "--seed", "3", "--format", "structured"]
    first = call(*argv)
    second = call(*argv)
    assert first == second and first[0] == EXIT_OK


def test_chi_determinism():
    assert call("chi", "--gen", "web:9,3", "--format", "structured") == \
        call("chi", "--gen", "web:9,3", "--format", "structured")


def test_timings_flag_adds_seconds():
    code, data = structured("chi", "--gen", "complete:5", "--timings")
    assert "seconds" in data
