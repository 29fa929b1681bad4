import json

import pytest

from krdecomp.cli import (
    EXIT_INVALID,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_RESOURCE,
    main,
)


def test_decompose_flat(capsys):
    assert main(["decompose", "A3", "2", "5", "--format", "flat"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.strip() == "V_{5ω2}"


def test_decompose_json_parses(capsys):
    assert main(["decompose", "E6", "4", "1", "--format", "json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["algebra"] == "E6" and doc["node"] == 4 and doc["level"] == 1
    assert len(doc["tree"]["children"]) == 3


def test_decompose_dims(capsys):
    assert main(["decompose", "E8", "8", "1", "--format", "flat", "--dims"]) == EXIT_OK
    assert "total dimension 249" in capsys.readouterr().out


def test_verify_pass(capsys):
    assert main(["verify", "D4", "2", "2"]) == EXIT_OK
    assert "agree" in capsys.readouterr().out


def test_growth(capsys):
    assert main(["growth", "D6", "4"]) == EXIT_OK
    assert "g = 2" in capsys.readouterr().out


def test_fixtures_subset(capsys):
    assert main(["fixtures", "E6_l4_m2"]) == EXIT_OK
    captured = capsys.readouterr()
    assert "ok   E6_l4_m2" in captured.out


def test_invalid_inputs():
    assert main(["decompose", "Z9", "1", "1"]) == EXIT_INVALID
    assert main(["decompose", "A2", "5", "1"]) == EXIT_INVALID
    assert main(["fixtures", "no_such_table"]) == EXIT_INVALID


def test_resource_exits():
    assert main(["decompose", "E6", "4", "2", "--node-limit", "3"]) == EXIT_RESOURCE
    assert main(["growth", "E7", "4", "--mode", "search", "--budget", "10"]) == EXIT_RESOURCE
    assert main(["verify", "E6", "4", "2", "--oracle-limit", "10"]) == EXIT_RESOURCE


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["decompose"])
    assert exc.value.code == 2


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_RESOURCE) == (0, 1, 2, 3)
