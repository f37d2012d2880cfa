import json

import pytest

from quiverhh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_resolution_verify_exits_zero(capsys):
    code, out = run(capsys, "resolution", "--n", "1", "--max-degree", "12", "verify")
    assert code == 0
    assert "complex-11  pass" in out
    assert "fail" not in out


def test_hochschild_dims(capsys):
    code, out = run(capsys, "hochschild", "--n", "0", "--max-degree", "8", "dims")
    assert code == 0
    lines = [l for l in out.splitlines() if l and l[0].isdigit() or l.startswith("     ")]
    # the four middle degrees vanish
    table = {
        int(parts[0]): int(parts[2])
        for parts in (l.split() for l in out.splitlines())
        if parts and parts[0].isdigit()
    }
    assert table[2] == table[3] == table[4] == table[5] == 0
    assert table[0] == table[1] == table[6] == table[7] == 1


def test_ring_reconciliation(capsys):
    code, out = run(capsys, "ring", "--n", "0")
    assert code == 0
    assert "| z | z | x | 0 | deviation |" in out


def test_diagonal_literal_matches_golden(capsys):
    code, out = run(
        capsys, "diagonal", "--n", "0", "--delta-mode", "literal", "--max-degree", "9", "squares"
    )
    assert code == 0


def test_invalid_flags_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["resolution", "--n", "-3", "verify"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["resolution", "--field", "gf:2", "verify"])
    with pytest.raises(SystemExit):
        main(["nonsense"])


def test_json_report_deterministic_and_valid(tmp_path, capsys):
    import jsonschema
    from importlib import resources

    paths = []
    for i in (0, 1):
        p = tmp_path / f"report{i}.json"
        code, _ = run(
            capsys,
            "report",
            "--n",
            "0",
            "--max-degree",
            "6",
            "--output",
            "json",
            "--out-path",
            str(p),
        )
        assert code == 0
        paths.append(p)
    b0, b1 = paths[0].read_bytes(), paths[1].read_bytes()
    assert b0 == b1, "identical configuration must give byte-identical output"
    payload = json.loads(b0)
    with resources.files("quiverhh.goldens").joinpath("report.schema.json").open() as fh:
        schema = json.load(fh)
    jsonschema.validate(payload, schema)
    assert {d["id"] for d in payload["deviations"]} == {"KD-1", "KD-2"}


def test_gf_field_pipeline(capsys):
    code, out = run(
        capsys, "resolution", "--n", "0", "--field", "gf:5", "--max-degree", "6", "verify"
    )
    assert code == 0


def test_markdown_output(capsys):
    code, out = run(
        capsys, "hochschild", "--n", "1", "--max-degree", "4", "--output", "markdown", "dims"
    )
    assert code == 0
    assert out.startswith("| degree |")
