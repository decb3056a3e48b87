"""Test the command line front end."""

import json

import pytest

try:
    from src.scietex.torelli.cli import run
except ModuleNotFoundError:
    from scietex.torelli.cli import run


@pytest.fixture(autouse=True)
def no_cache(monkeypatch) -> None:
    """Tree catalogs are enumerated afresh."""
    monkeypatch.delenv("TORELLI_CACHE_DIR", raising=False)


def test_constants(capsys) -> None:
    """
    Test text and JSON output.
    """
    assert run(["const", "bernoulli", "--n", "12"]) == 0
    assert capsys.readouterr().out == "-691/2730\n"
    assert run(["--format", "json", "const", "gamma", "--g", "2"]) == 0
    assert json.loads(capsys.readouterr().out) == "1/5760"
    assert run(["const", "nl", "--g", "2", "--d", "2", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == "60"
    assert run(["const", "taut-product", "--parts", "1,5"]) == 0
    assert capsys.readouterr().out == "2730/691*l5\n"


def test_vanishing(capsys) -> None:
    """
    Test the codimension criterion.
    """
    assert run(["check", "vanishing", "--partition", "3,4"]) == 0
    assert capsys.readouterr().out.strip() == "vanishes (cod 12 > 2g−3 = 11)"


@pytest.mark.timeout(60)
def test_trees(capsys) -> None:
    """
    Test counting and listing trees.
    """
    assert run(["trees", "count", "--partition", "1,2"]) == 0
    assert capsys.readouterr().out == "2\n"
    assert run(["trees", "enumerate", "--partition", "1,2"]) == 0
    assert capsys.readouterr().out.splitlines() == ["0\t(1,1(2,2))", "1\t(1,1(1,2)(1,2))"]
    assert run(["trees", "show", "--partition", "1,2", "--tree", "5"]) == 1
    assert "outside" in capsys.readouterr().err


def test_stars(capsys) -> None:
    """
    Test the wall-crossing commands.
    """
    assert run(["stars", "components", "--k", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "10"
    assert run(["stars", "exceptional", "--case", "M22", "--monomial", "E1*E2"]) == 0
    assert capsys.readouterr().out == "-Z{1,2}\n"
    assert run(["--format", "json", "stars", "enumerate", "--g", "3", "--r", "1"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 2


def test_checks(capsys) -> None:
    """
    Test the identity checks.
    """
    assert run(["check", "eisenstein", "--g", "2", "--dmax", "10"]) == 0
    assert capsys.readouterr().out == "ok (g=2, d<=10)\n"
    assert run(["check", "capelli", "--g", "2", "--s", "2"]) == 0
    assert capsys.readouterr().out == "ok (4 cases)\n"


@pytest.mark.timeout(60)
def test_emit_delta(capsys, tmp_path) -> None:
    """
    The script is written with LF line endings.
    """
    path = tmp_path / "delta2.sage"
    assert run(["emit", "delta", "--g", "2", "--out", str(path)]) == 0
    assert capsys.readouterr().out == f"wrote {path}\n"
    data = path.read_bytes()
    assert data.startswith(b"# generated-by: scietex-torelli ")
    assert b"\r\n" not in data


def test_errors(capsys) -> None:
    """
    Domain errors exit with 1, usage errors with 2.
    """
    assert run(["stars", "enumerate", "--g", "4", "--r", "3"]) == 1
    assert "r = 3" in capsys.readouterr().err
    assert run(["emit", "delta", "--g", "3", "--s", "2"]) == 1
    assert run(["const", "bernoulli", "--n", "x"]) == 2
    assert run([]) == 2
    assert run(["--log-level", "LOUD", "const", "gamma", "--g", "2"]) == 2
    assert run(["--version"]) == 0


if __name__ == "__main__":
    pytest.main()
