import json
import math

import numpy as np
import pytest

from hyperlap.cli import main


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "eq-111" in out
    assert "Eq. (111)" in out
    assert "entry-I" in out
    assert "novel-VII" in out


def test_list_section(capsys):
    assert main(["list", "--section", "3"]) == 0
    out = capsys.readouterr().out
    assert "novel-V" in out and "novel-VI" in out
    assert "entry-I" not in out
    assert "eq-97" not in out


def test_list_unknown_section_empty(capsys):
    assert main(["list", "--section", "9"]) == 0
    assert capsys.readouterr().out == ""


def test_eval_value(capsys):
    assert main(["eval", "eq-111", "a=2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert float(out[0]) == pytest.approx(math.pi / 4, rel=1e-12)
    assert out[1] == "conditions: ok"


def test_eval_ascii_alias(capsys):
    assert main(["eval", "novel-V", "alpha=0", "beta=1", "p=1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "1.0"


def test_eval_complex_value(capsys):
    assert main(["eval", "eq-38", "s=5+1i", "γ=2", "ν=1"]) == 0
    out = capsys.readouterr().out.splitlines()
    z = complex(out[0].replace(" ", ""))
    assert z.imag != 0.0


def test_eval_advisory(capsys):
    assert main(["eval", "novel-V", "alpha=0", "beta=1.5", "p=1"]) == 0
    out = capsys.readouterr().out
    assert "advisory: Re(β) < 1" in out


def test_eval_oracle(capsys):
    assert main(["eval", "novel-V", "alpha=0", "beta=1", "p=1", "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "oracle: " in out
    diff = [l for l in out.splitlines() if l.startswith("difference:")]
    assert float(diff[0].split()[1]) < 1e-9


def test_eval_relaxed(capsys):
    assert main(
        ["eval", "entry-I", "s=1", "beta=1", "nu=1", "m=1", "--relaxed"]
    ) == 0
    out = capsys.readouterr().out
    assert "conditions violated:" in out


def test_eval_condition_violation_exit_2(capsys):
    assert main(["eval", "entry-I", "s=1", "beta=1", "nu=1", "m=1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_eval_unknown_entry_exit_3(capsys):
    assert main(["eval", "eq-999", "a=1"]) == 3
    assert "unknown entry" in capsys.readouterr().err


def test_eval_bad_token_exit_2(capsys):
    assert main(["eval", "eq-111", "a2"]) == 2
    assert "name=value" in capsys.readouterr().err


def test_expand(capsys):
    assert main(["expand", "cos", "2"]) == 0
    assert capsys.readouterr().out.strip() == "0.5·cos(2x) + 0.5"


def test_expand_laplace(capsys):
    assert main(["expand", "sin", "1", "2", "--laplace", "s=1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "sin(2x)"
    assert lines[1] == "0.4"


def test_expand_hyperbolic(capsys):
    assert main(["expand", "sinh", "3"]) == 0
    assert capsys.readouterr().out.strip() == "0.25·sinh(3x) − 0.75·sinh(x)"


def test_expand_bad_kind_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["expand", "tan", "2"])
    assert exc.value.code == 2


def test_expand_bad_exponent_exit_2(capsys):
    assert main(["expand", "cos", "0"]) == 2
    assert "error:" in capsys.readouterr().err


def test_expand_laplace_divergent_exit_2(capsys):
    # s inside the convergence abscissa of cosh^3 is refused
    assert main(["expand", "cosh", "3", "--laplace", "s=2"]) == 2


def test_verify_single_grid(capsys):
    code = main(["verify", "novel-V", "--grid", "alpha=0;beta=1;p=1"])
    assert code == 0
    out = capsys.readouterr().out
    assert "summary: 1 pass, 0 fail, 0 skip" in out


def test_verify_out_file(tmp_path, capsys):
    dest = tmp_path / "report.jsonl"
    code = main(
        ["verify", "eq-111", "--grid", "a=1:3:3", "--out", str(dest)]
    )
    assert code == 0
    lines = dest.read_text(encoding="utf-8").strip("\n").split("\n")
    assert len(lines) == 4
    header = json.loads(lines[0])
    assert header["entry"] == "eq-111"
    assert header["pass"] == 3
    capsys.readouterr()


def test_verify_out_unwritable_exit_4(tmp_path, capsys):
    dest = tmp_path / "missing" / "report.jsonl"
    assert main(["verify", "eq-111", "--grid", "a=1", "--out", str(dest)]) == 4
    assert "error:" in capsys.readouterr().err


def test_verify_unknown_exit_3(capsys):
    assert main(["verify", "eq-999"]) == 3
    capsys.readouterr()


def test_verify_all_with_grid_exit_2(capsys):
    assert main(["verify", "all", "--grid", "s=1"]) == 2
    assert "--grid" in capsys.readouterr().err


def test_verify_skip_warning(capsys):
    # an out-of-region point is skipped and flagged on stderr, not failed
    code = main(
        ["verify", "entry-I", "--grid", "s=1,5;beta=1;nu=1;m=1"]
    )
    assert code == 0
    captured = capsys.readouterr()
    assert "warning: entry-I: 1 point(s) skipped" in captured.err
    assert "skip" in captured.out


def test_verify_section(capsys):
    assert main(["verify", "all", "--section", "4"]) == 0
    out = capsys.readouterr().out
    for eid in ("eq-74", "eq-76", "eq-78", "eq-80"):
        assert f"entry {eid}" in out


def test_bad_scalar_exit_2(capsys):
    assert main(["eval", "eq-111", "a=abc"]) == 2
    capsys.readouterr()


def test_version():
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0


def test_server_unreachable_exit_4(capsys):
    code = main(["list", "--server", "http://127.0.0.1:9"])
    assert code == 4
    assert "error:" in capsys.readouterr().err
