import json
from dataclasses import replace

import pytest

from abx.commands import SUITES
from abx.commands.main import build_parser, main
from abx.records import CheckReport, make_record


def test_suites_command(capsys):
    assert main(["suites"]) == 0
    entries = json.loads(capsys.readouterr().out)
    assert len(entries) == 15
    assert entries[-1]["suite"] == "bridge-ej-mixedvol"


def test_gen_command(capsys):
    assert main(["gen", "antiblocking", "--n", "3", "--count", "20", "--seed", "7"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert len(document["instances"]) == 22
    assert document["seed"] == 7


def test_gen_all_permutations(tmp_path, capsys):
    path = tmp_path / "perms.json"
    assert main(["gen", "permutation", "--n", "4", "--count", "all", "--out", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert len(json.loads(path.read_text(encoding="utf-8"))["instances"]) == 24


def test_check_command(capsys):
    assert main(["check", "--suite", "godbersen", "--n", "2", "--count", "2"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["failures"] == 0
    assert document["instances"] == 4


def test_check_csv_to_file(tmp_path, capsys):
    path = tmp_path / "report.csv"
    argv = ["check", "--suite", "sidorenko", "--n", "3", "--count", "2", "--j", "1"]
    assert main(argv + ["--format", "csv", "--out", str(path)]) == 0
    assert capsys.readouterr().out.startswith("sidorenko n=3:")
    assert path.read_text(encoding="utf-8").splitlines()[0].startswith("instance_id,")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["check", "--suite", "nope", "--n", "2"],
        ["check", "--suite", "godbersen"],
        ["check", "--suite", "godbersen", "--n", "2", "--count", "many"],
        ["check", "--suite", "godbersen", "--n", "9"],
        ["check", "--suite", "godbersen", "--n", "2", "--j", "3"],
        ["gen", "antiblocking", "--n", "2", "--count", "all"],
        ["gen", "antiblocking", "--n", "0"],
    ],
)
def test_configuration_errors_exit_with_one(argv):
    assert main(argv) == 1


def test_counterexample_exits_with_two(monkeypatch):
    def failing(instance, j):
        record = make_record(instance.instance_id, "always-fails", 0, 1)
        return [CheckReport(instance_id=instance.instance_id, records=[record])]

    monkeypatch.setitem(SUITES, "godbersen", replace(SUITES["godbersen"], run=failing))
    assert main(["check", "--suite", "godbersen", "--n", "2", "--count", "1", "--threads", "1"]) == 2


def test_parser_defaults():
    args = build_parser().parse_args(["check", "--suite", "shadow", "--n", "2"])
    assert (args.count, args.seed, args.j, args.format, args.output) == ("10", 0, None, "json", None)
