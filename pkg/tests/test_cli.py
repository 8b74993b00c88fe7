import json

import pytest

from cli import EXIT_CAP, EXIT_OK, EXIT_USAGE, main
from domain.complexes import load_complex
from services.harness import families
from services.homology import HomologyEngine


def _run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_build_prints_facets(capsys) -> None:
    code, out = _run(capsys, "build", "--graph", "sqp", "--k", "3")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["facets"] == [[0, 1, 3], [0, 2, 3], [1, 2, 3], [1, 3, 4], [1, 3, 5]]
    assert payload["dimension"] == 2


def test_build_writes_file(capsys, tmp_path) -> None:
    target = tmp_path / "delta.txt"
    code, _ = _run(capsys, "build", "--graph", "cycle:6", "--k", "2", "--out", str(target))
    assert code == EXIT_OK
    assert load_complex(str(target)).num_facets == 9


def test_build_from_graph_file(capsys, tmp_path) -> None:
    source = tmp_path / "c4.txt"
    source.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n", encoding="utf-8")
    code, out = _run(capsys, "build", "--graph", str(source), "--k", "2")
    assert code == EXIT_OK
    assert json.loads(out)["facets"] == [[0, 2], [1, 3]]


def test_homology(capsys) -> None:
    code, out = _run(capsys, "homology", "--graph", "prism:4", "--k", "2", "--snf", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["betti"]["4"] == 3
    assert payload["torsion"] is False
    assert payload["torsion_primes"] == []


def test_homology_json_for_cycle(capsys) -> None:
    code, out = _run(capsys, "homology", "--graph", "cycle:6", "--k", "2", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["betti"]["2"] == 1
    assert payload["dim"] == 3
    assert "torsion_primes" not in payload


def test_homology_text_output(capsys) -> None:
    code, out = _run(capsys, "homology", "--graph", "cycle:6", "--k", "2")
    assert code == EXIT_OK
    assert "β_2=1" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


def test_morse_verify_acyclic_flag(capsys) -> None:
    argv = ["morse", "--graph", "prism:3", "--k", "2", "--schedule", "preset", "--json"]
    code, out = _run(capsys, *argv, "--verify-acyclic")
    assert code == EXIT_OK
    assert json.loads(out)["acyclic"] is True

    code, out = _run(capsys, *argv)
    assert code == EXIT_OK
    assert json.loads(out)["acyclic"] is None

    code, out = _run(capsys, "morse", "--graph", "cycle:6", "--k", "2", "--verify-acyclic")
    assert code == EXIT_OK
    assert "Ацикличность проверена: True" in out


def test_morse_with_preset(capsys) -> None:
    code, out = _run(capsys, "morse", "--graph", "prism:3", "--k", "2", "--schedule", "preset", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["critical_faces"] == [[1, 3, 4], [2, 3, 5]]
    assert payload["certificate"] == "wedge_of_spheres"


def test_morse_text_output(capsys) -> None:
    code, out = _run(capsys, "morse", "--graph", "kmn:2,3", "--k", "2", "--schedule", "0,2")
    assert code == EXIT_OK
    assert "букет 2 сфер S^1" in out


def test_morse_preset_needs_family(capsys) -> None:
    code, _ = _run(capsys, "morse", "--graph", "sqp", "--k", "3", "--schedule", "preset")
    assert code == EXIT_USAGE


def test_check_contractible(capsys) -> None:
    code, out = _run(capsys, "check", "--graph", "sqp", "--k", "3", "--property", "contractible")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["holds"] is True
    assert payload["detail"]["kind"] == "cone"
    assert payload["detail"]["vertex"] == 3


def test_verify_json(capsys) -> None:
    code, out = _run(capsys, "verify", "--suite", "edgeless", "--ranges", "n=1..4", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["suite_id"] == "edgeless"
    assert all(case["passed"] for case in payload["cases"])


def test_verify_table_output(capsys) -> None:
    code, out = _run(capsys, "verify", "--suite", "prism", "--ranges", "n=2..3")
    assert code == EXIT_OK
    assert "prism: проверено 2" in out


def test_verify_all_skipped_exits_with_cap(capsys, monkeypatch) -> None:
    tiny = HomologyEngine(face_cap=2)
    monkeypatch.setattr(families, "get_homology_engine", lambda: tiny)
    code, _ = _run(capsys, "verify", "--suite", "edgeless", "--ranges", "n=3..4,k=1..2")
    assert code == EXIT_CAP


def test_sweep(capsys) -> None:
    code, out = _run(capsys, "sweep", "--conjecture", "squared_cycle", "--ranges", "k=2,n=5..7", "--json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [row["match"] for row in rows] == [True, True, True]


def test_table_csv(capsys) -> None:
    code, out = _run(capsys, "table", "--family", "G2n", "--kmax", "2", "--nmax", "3", "--format", "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "k,n=2,n=3"
    assert lines[2] == "2,β_0=1,β_2=2"


@pytest.mark.parametrize(
    "argv",
    [
        ["homology", "--graph", "nosuch:3", "--k", "2"],
        ["build", "--graph", "cycle:6", "--k", "0"],
        ["verify", "--suite", "edgeless", "--ranges", "n=4..2"],
    ],
)
def test_invalid_input_exits_with_usage(capsys, argv) -> None:
    code, _ = _run(capsys, *argv)
    assert code == EXIT_USAGE


def test_argparse_errors_exit_with_usage() -> None:
    with pytest.raises(SystemExit) as excinfo:
        main(["verify"])
    assert excinfo.value.code == EXIT_USAGE
