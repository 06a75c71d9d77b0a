import json

import pytest

from cwlsum.io.cli import EXIT_BUG, EXIT_INPUT, EXIT_OK, EXIT_STRICT, main
from cwlsum.io.golden import golden_files

RING = ["--ring", "x y"]


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_check_cwl(capsys):
    rc, out, _ = run(capsys, "check-cwl", "x^3, x^2*y^2, y^3", *RING)
    assert rc == EXIT_OK and "componentwise_linear: false" in out
    rc, out, _ = run(capsys, "check-cwl", "x^3, x^2*y^2, y^3", *RING, "--json")
    d = json.loads(out)
    assert list(d)[:3] == ["criterion", "applicable", "conclusion"] and d["conclusion"] is False


def test_betti_with_oracles(capsys):
    rc, out, _ = run(capsys, "betti", "x^3, x*y, y^3", *RING, "--oracle", "all")
    assert rc == EXIT_OK and "b[1,x^3*y]=1" in out
    rc, out, _ = run(capsys, "betti", "x*y, y*z, x*z", "--ring", "x y z", "--oracle", "lcm", "--json")
    assert json.loads(out)["pd"] == 1


def test_reg_and_ops(capsys):
    rc, out, _ = run(capsys, "reg", "x*y*z^2, x*y^2*z", "--ring", "x y z")
    assert rc == EXIT_OK and out.startswith("reg = 4")
    assert run(capsys, "intersect", "x^4, x^3*y^2", "y^4, x^2*y^3", *RING)[1].strip() == "(x^3*y^3)"
    assert run(capsys, "colon", "x^3, x*y, y^3", "m", *RING)[1].strip() == "(x^2, x*y, y^2)"
    assert run(capsys, "sum", "x^2", "y", *RING)[1].strip() == "(y, x^2)"
    assert run(capsys, "component", "x^3, x*y, y^3", "2", *RING)[1].strip() == "(x*y)"


def test_document_names(capsys):
    doc = "ring x y; ideal I = x^4, x^3*y^2; ideal J = y^4, x^2*y^3;"
    rc, out, _ = run(capsys, "sum-check", "I", "J", "-e", doc, "--criteria", "componentwise")
    assert rc == EXIT_OK and "failing t: 4" in out


def test_strict_exit(capsys):
    args = ("sum-check", "x^3, x^2*y^2, x*y^3", "y^3", *RING, "--criteria", "hv")
    assert run(capsys, *args)[0] == EXIT_OK
    assert run(capsys, *args, "--strict")[0] == EXIT_STRICT


def test_input_errors(capsys):
    rc, _, err = run(capsys, "check-cwl", "x^", *RING)
    assert rc == EXIT_INPUT and "E20" in err
    assert run(capsys, "check-cwl", "x*w", *RING)[0] == EXIT_INPUT
    assert run(capsys, "check-cwl", "x")[0] == EXIT_INPUT  # no ring
    assert run(capsys, "check-cwl", "0", *RING)[0] == EXIT_INPUT
    assert run(capsys, "fmt", "/nonexistent/file.ideal")[0] == EXIT_INPUT


def test_order(capsys):
    rc, out, _ = run(capsys, "order", "x^4, x^2*y, x*y^2, y^3", *RING)
    assert rc == EXIT_OK and "ordering: x^2*y, x*y^2, y^3, x^4" in out
    rc, out, _ = run(capsys, "order", "x^3, x^2*y^2, y^3", *RING)
    assert rc == EXIT_OK and "fails at step 2" in out


def test_full_check(capsys):
    rc, out, _ = run(capsys, "full-check", "x^4, x^2*y, x*y^2, y^3", *RING)
    assert rc == EXIT_OK and "is_m_full: true" in out


FS = ("ring x y; fullset L = {x*y, x, y}; assign L[x*y] = (x, y)^2; "
      "assign L[x] = x^2; assign L[y] = y^2;")


def test_fullset(capsys):
    assert run(capsys, "fullset", "validate", "L", "-e", FS)[0] == EXIT_OK
    assert run(capsys, "fullset", "assemble", "L", "-e", FS)[0] == EXIT_INPUT
    rc, out, _ = run(capsys, "fullset", "assemble", "L", "-e", FS, "--force")
    assert rc == EXIT_OK and out.startswith("(x^3, y^3, x^2*y^2)")
    assert run(capsys, "fullset", "validate", "K", "-e", FS)[0] == EXIT_INPUT


def test_campaign(capsys):
    rc, out, _ = run(capsys, "campaign", "trio", "--max-degree", "3")
    assert rc == EXIT_OK and "violations 0" in out
    rc, out, _ = run(capsys, "campaign", "fIgJ", "--count", "10", "--json")
    assert json.loads(out)["checked"] == 10


def test_golden_and_fmt(capsys, tmp_path):
    assert run(capsys, "golden")[0] == EXIT_OK
    bad = tmp_path / "bad.ideal"
    bad.write_text("ring x y;\nexpect cwl((x^3, y^3)) = true;\n")
    rc, out, _ = run(capsys, "golden", str(bad))
    assert rc == EXIT_BUG and "MISMATCH" in out
    p = golden_files()[0]
    rc, out, _ = run(capsys, "fmt", str(p))
    assert rc == EXIT_OK and out == p.read_text()


def test_crosscheck_exit(capsys, monkeypatch):
    from cwlsum.io import cli
    from cwlsum.resolution import BettiTable
    monkeypatch.setattr(cli, "betti_oracle_lcm_lattice", lambda I: BettiTable(I.ring, {}))
    assert run(capsys, "betti", "x^2, y^2", *RING, "--oracle", "lcm")[0] == EXIT_BUG


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
