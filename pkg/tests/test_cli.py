import json
import pathlib

from zigzagmetric.cli import main

DATA = pathlib.Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_ar_exit_codes(capsys):
    code, out, _ = run(capsys, "check-ar", DATA / "path2.dg")
    assert code == 0
    assert "absolute retract: True" in out
    code, out, _ = run(capsys, "check-ar", DATA / "c3.dg")
    assert code == 1
    assert "Helly witness" in out
    assert "B(0, +)" in out


def test_distance(capsys):
    code, out, _ = run(capsys, "distance", DATA / "c3.dg", "0", "1")
    assert code == 0
    assert out.strip() == "{+, --}"
    code, _, err = run(capsys, "distance", DATA / "c3.dg", "0", "9")
    assert code == 2
    assert "unknown vertex" in err


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", DATA / "rev4.dg")
    assert code == 0
    assert "oriented: True" in out
    assert "conditional transitivity" in out
    code, out, _ = run(capsys, "analyze", DATA / "c3.dg")
    assert "[not closed]" in out


def test_embed(capsys):
    code, out, _ = run(capsys, "embed", DATA / "alt4.dg")
    assert code == 0
    assert "isometric: True" in out
    code, out, _ = run(capsys, "embed", DATA / "c3.dg")
    assert code == 1
    assert "isometric: False" in out


def test_hull(capsys):
    code, out, _ = run(capsys, "hull", DATA / "alt4.dg")
    assert code == 0
    assert "added vertices: 1" in out
    code, out, _ = run(capsys, "hull", DATA / "glued4.dg")
    assert code == 0
    assert "added vertices: 2" in out
    code, out, _ = run(capsys, "hull", DATA / "c3.dg")
    assert code == 1
    assert "not-embeddable" in out


def test_retract(capsys):
    code, out, _ = run(capsys, "retract", DATA / "glued4.dg", DATA / "path2.dg")
    assert code == 0
    assert "3 -> 1" in out
    code, _, err = run(capsys, "retract", DATA / "path2.dg", DATA / "glued4.dg")
    assert code == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--max-n", "2")
    assert code == 0
    assert "failures: 0" in out


def test_malformed_file(capsys):
    bad = DATA / "does-not-exist.dg"
    code, _, err = run(capsys, "check-ar", bad)
    assert code == 2
    broken = DATA.parent / "broken.dg"
    broken.write_text("x x\n")
    try:
        code, _, err = run(capsys, "analyze", broken)
        assert code == 2
        assert "line 1" in err
    finally:
        broken.unlink()


def test_json_output(capsys):
    code, out, _ = run(capsys, "check-ar", "--json", DATA / "c3.dg")
    assert code == 1
    data = json.loads(out)
    assert data["verdict"] is False
    assert data["helly"] is False
    code, out, _ = run(capsys, "analyze", "--json", DATA / "path2.dg")
    data = json.loads(out)
    assert data["matrix"]["d"]["0,2"] == ["++"]


def test_determinism(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "analyze", "--json", DATA / "alt4.dg")
        outs.append(out)
    assert outs[0] == outs[1]
