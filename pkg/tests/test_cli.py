# filename: tests/test_cli.py

import json
import random

from app.cli import main
from utils.codec import dump, write_structure
from utils.diffalg import DifferenceAlgebra
from utils.exactlin import identity
from utils.genkit import catalog, diff_algebras, random_lin, rationals
from tests.test_codec import _with_d_entries
from tests.test_diffainf2 import _q_skeletal_with_mu


def _identity_on_q(tmp_path):
    alg = rationals().algebra
    path = tmp_path / "identity.json"
    write_structure(path, DifferenceAlgebra(alg=alg, d=identity(alg.space)))
    return str(path)


def test_generated_files_check_and_pass_mc(tmp_path, capsys):
    out = tmp_path / "gen"
    assert main(["gen", "diff_algebra", "--algebra", "Q", "-o", str(out)]) == 0
    files = sorted(out.iterdir())
    assert [f.name for f in files] == ["diff_algebra-Q-d0-0.json", "diff_algebra-Q-d1-0.json"]
    assert main(["check", *map(str, files)]) == 0
    for f in files:
        assert main(["mc", str(f)]) == 0
    assert "verdicts agree" in capsys.readouterr().out


def test_identity_operator_fails(tmp_path, capsys):
    path = _identity_on_q(tmp_path)
    assert main(["check", path]) == 1
    assert "(Eq1)" in capsys.readouterr().out
    assert main(["mc", path]) == 1
    assert "Maurer-Cartan:       FAIL" in capsys.readouterr().out


def test_unreadable_file_is_an_input_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(_with_d_entries([[[0, 0], "1/0"]]), encoding="utf-8")
    assert main(["check", str(path)]) == 2
    assert main(["mc", str(tmp_path / "missing.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_broken_pentagon_is_reported(tmp_path, capsys):
    path = tmp_path / "mu.json"
    write_structure(path, _q_skeletal_with_mu(1))
    assert main(["check", str(path)]) == 1
    assert "(A8)" in capsys.readouterr().out


def test_convert_there_and_back(tmp_path, skeletal):
    src = tmp_path / "skeletal.json"
    write_structure(src, skeletal)
    there = tmp_path / "twoalg.json"
    back = tmp_path / "back.json"
    assert main(["convert", str(src), "--to-2alg", "-o", str(there)]) == 0
    assert json.loads(there.read_text())["kind"] == "diffass2"
    assert main(["convert", str(there), "--to-ainf", "-o", str(back)]) == 0
    assert back.read_text() == src.read_text()


def test_convert_to_stdout(tmp_path, capsys, strict):
    src = tmp_path / "strict.json"
    write_structure(src, strict)
    assert main(["convert", str(src), "--to-2alg"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["kind"] == "diffass2"
    assert "relation: identical" in captured.err


def test_several_outputs_need_a_directory(capsys):
    assert main(["gen", "diff_algebra", "--algebra", "Q"]) == 2
    assert "-o DIR" in capsys.readouterr().err


def test_construct_checks_its_precondition(tmp_path, strict, skeletal):
    src = tmp_path / "strict.json"
    write_structure(src, strict)
    assert main(["construct", "to-cocycle", str(src), "-o", str(tmp_path / "cocycle.json")]) == 1
    assert main(["construct", "to-crossed-module", str(src), "-o", str(tmp_path / "cm.json")]) == 0

    skel = tmp_path / "skeletal.json"
    write_structure(skel, skeletal)
    cocycle = tmp_path / "cocycle.json"
    rebuilt = tmp_path / "rebuilt.json"
    assert main(["construct", "to-cocycle", str(skel), "-o", str(cocycle)]) == 0
    assert main(["construct", "from-cocycle", str(cocycle), "-o", str(rebuilt)]) == 0
    assert rebuilt.read_text() == dump(skeletal)
    # wrong input kind
    assert main(["construct", "from-cocycle", str(skel), "-o", str(tmp_path / "x.json")]) == 2


def test_roundtrip(tmp_path, capsys, skeletal, strict):
    paths = []
    for name, obj in (("skeletal", skeletal), ("strict", strict)):
        path = tmp_path / f"{name}.json"
        write_structure(path, obj)
        paths.append(str(path))
    assert main(["roundtrip", *paths]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_json_report(tmp_path, capsys):
    path = _identity_on_q(tmp_path)
    assert main(["check", path, "--json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["path"] == path
    assert payload[0]["report"]["ok"] is False

    assert main(["mc", path, "--json"]) == 1
    mc = json.loads(capsys.readouterr().out)
    assert mc["agree"] is True and mc["maurer_cartan"] is False


def test_mc_never_disagrees_over_the_generated_corpus(tmp_path, capsys):
    out = tmp_path / "corpus"
    assert main(["gen", "diff_algebra", "-o", str(out)]) == 0
    files = sorted(out.iterdir())
    assert len(files) == len(diff_algebras())
    for f in files:
        assert main(["mc", str(f)]) == 0

    rng = random.Random(7)
    for entry in catalog(max_dim=3):
        space = entry.algebra.space
        path = tmp_path / f"random-{entry.name}.json"
        write_structure(path, DifferenceAlgebra(alg=entry.algebra, d=random_lin(rng, space, space)))
        assert main(["mc", str(path)]) in (0, 1)
    capsys.readouterr()
