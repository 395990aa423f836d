import json
import subprocess
import sys

import pytest

from rppcrystal.cli import main

SQ_LOW = '{"outer":[2,2],"inner":[],"max_entry":2,"rows":[[1,1],[1,2]]}'
FIG3 = json.dumps({
    "outer": [4, 4, 4, 4, 3, 3, 2], "inner": [2, 1], "max_entry": 5,
    "rows": [[1, 2], [1, 1, 4], [1, 1, 1, 4], [1, 3, 3, 4], [2, 3, 5], [2, 4, 5], [3, 4]],
})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--shape", "2,2", "--max-entry", "2")
    assert code == 0 and out.strip().endswith("count: 6")
    code, out, _ = run(capsys, "enumerate", "--shape", "1", "--max-entry", "1")
    assert out.strip().splitlines()[-1] == "count: 1"
    code, out, _ = run(capsys, "enumerate", "--shape", "2,1", "-m", "3", "--ssyt", "--format", "json")
    assert json.loads(out)["count"] == 8
    code, out, _ = run(capsys, "enumerate", "--shape", "2,2/2,1", "--elegant")
    assert out.strip().endswith("count: 1")


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "enumerate", "--shape", "2/3")[0] == 2
    assert run(capsys, "enumerate", "--shape", "1,2")[0] == 2
    assert run(capsys, "crystal", "--op", "f", "--index", "1", "--tableau", "{bad")[0] == 2
    bad = '{"outer":[2],"inner":[],"max_entry":2,"rows":[[2,1]]}'
    code, _, err = run(capsys, "crystal", "--op", "f", "--index", "1", "--tableau", bad)
    assert code == 2 and "row 1 decreases" in err
    assert run(capsys, "crystal", "--op", "f", "--index", "2", "--tableau", SQ_LOW)[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["expand"])
    assert exc.value.code == 2


def test_crystal_apply(capsys):
    code, out, _ = run(capsys, "crystal", "--op", "f", "--index", "1", "--tableau", SQ_LOW)
    assert code == 0 and json.loads(out)["rows"] == [[1, 2], [2, 2]]
    ones = '{"outer":[2,2],"inner":[],"max_entry":2,"rows":[[1,1],[1,1]]}'
    code, out, _ = run(capsys, "crystal", "--op", "e", "--index", "1", "--tableau", ones)
    assert out.strip() == "0"


def test_crystal_graph(capsys, tmp_path):
    code, out, _ = run(capsys, "crystal", "graph", "--shape", "2,2", "--max-entry", "2")
    assert out.splitlines()[0] == "components: 3; highest weights: (2,2),(2,1),(2)"
    dot = tmp_path / "g.dot"
    run(capsys, "crystal", "graph", "--shape", "2,2", "-m", "2", "--format", "dot", "-o", str(dot))
    assert dot.read_text().startswith("digraph crystal {")
    code, out, _ = run(capsys, "crystal", "graph", "--shape", "2,1/1", "-m", "2", "--format", "json")
    data = json.loads(out)
    assert len(data["vertices"]) == 4 and sorted(c["size"] for c in data["components"]) == [1, 3]


def test_word_and_reconstruct(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(FIG3)
    code, out, _ = run(capsys, "word", "--input", str(path))
    assert "word: 34253134112" in out and "heights: 7,7,6,6,5,4,4,4,3,3,1" in out
    code, out, _ = run(capsys, "reconstruct", "--shape", "4,4,4,4,3,3,2/2,1",
                       "--word", "3,4,2,5,3,1,3,4,1,1,2", "--heights", "7,7,6,6,5,4,4,4,3,3,1")
    assert code == 0 and json.loads(out) == json.loads(FIG3)
    code, _, err = run(capsys, "reconstruct", "--shape", "1,1", "--word", "1", "--heights", "1")
    assert code == 1 and "reconstruction failed" in err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--shape", "2,2", "--max-entry", "2")
    assert code == 0
    assert out.splitlines() == ["2,2 : 1", "2,1 : 1", "2 : 1", "oracle: match"]
    code, out, _ = run(capsys, "expand", "--shape", "2,1/1", "--max-entry", "2", "--format", "json")
    data = json.loads(out)
    assert {tuple(c["partition"]): c["coefficient"] for c in data["coefficients"]} == {(2,): 1, (1, 1): 1}
    code, out, _ = run(capsys, "expand", "--shape", "0")
    assert out.splitlines() == ["() : 1", "oracle: match"]
    code, out, _ = run(capsys, "expand", "--shape", "1,1", "-m", "2", "--refined", "--show-poly")
    assert "1 | ceq 1 : 1" in out and "g~ = " in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "intertwine", "--max-cells", "4", "--max-entry", "3")
    assert code == 0 and out.startswith("intertwine: PASS")
    code, out, _ = run(capsys, "verify", "--suite", "confluence", "--max-cells", "3", "--seed", "7")
    assert code == 0


def test_output_is_deterministic(capsys):
    args = ["crystal", "graph", "--shape", "3,2/1", "-m", "3", "--format", "dot"]
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rppcrystal", "expand", "--shape", "2,2", "-m", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "oracle: match" in proc.stdout
