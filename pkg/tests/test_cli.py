import json

import pytest
from lxml import etree

from kiepert.__main__ import EXIT_BAD_INPUT, EXIT_FAILED, EXIT_IO, EXIT_OK, main
from kiepert.errors import OracleFormulaMismatch
from kiepert.figure import SVG_NS
from kiepert.subjects import Theorem2Subject

TRIANGLE = "0,0,4,0,1,3"


@pytest.fixture(autouse=True)
def isolated_home(monkeypatch, tmp_path):
    monkeypatch.setenv("HOME", str(tmp_path / "home"))
    monkeypatch.delenv("KIEPERT_TOL", raising=False)


@pytest.fixture
def scene_path(tmp_path):
    return tmp_path / "scene.json"


async def test_verify_theorem2_exact(capsys):
    code = await main(["verify", "theorem2", "--t", "1", "--y0", "0"])
    assert code == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["subject"] == "theorem2"
    (trial,) = report["trials"]
    assert trial["passed"]
    assert all(check["residual"] == 0 for check in trial["checks"])


async def test_verify_text_format(capsys):
    code = await main(["verify", "theorem1", "--triangle", TRIANGLE, "--format", "text"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert "Subject: theorem1" in out
    assert "Result: PASS" in out


async def test_isosceles_triangle_is_rejected(capsys):
    code = await main(["verify", "theorem1", "--triangle", "0,0,2,0,1,5"])
    assert code == EXIT_BAD_INPUT
    assert "NotScalene" in capsys.readouterr().err


async def test_collinear_triangle_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        await main(["construct", "yiu", "--triangle", "0,0,1,1,2,2"])
    assert exc.value.code == 2


async def test_construct_reconstruct_and_draw(scene_path, tmp_path, capsys):
    code = await main(["construct", "yiu", "--triangle", TRIANGLE, "--out", str(scene_path)])
    assert code == EXIT_OK
    scene = json.loads(scene_path.read_text(encoding="utf-8"))
    assert all(c["passed"] for c in scene["certificates"])

    code = await main(["reconstruct", "--scene", str(scene_path), "--vertex", "0,0"])
    assert code == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["candidates"]
    assert len(report["attempts"]) == 3

    for kind in ("yiu", "construction"):
        svg_path = tmp_path / f"{kind}.svg"
        args = ["figure", "--scene", str(scene_path), "--kind", kind, "--out", str(svg_path)]
        assert await main(args) == EXIT_OK
        root = etree.parse(str(svg_path)).getroot()
        assert root.tag == f"{{{SVG_NS}}}svg"


async def test_reconstruct_vertex_off_conic(scene_path):
    await main(["construct", "yiu", "--triangle", TRIANGLE, "--out", str(scene_path)])
    code = await main(["reconstruct", "--scene", str(scene_path), "--vertex", "9,9"])
    assert code == EXIT_BAD_INPUT


async def test_missing_scene_is_an_io_error(tmp_path, capsys):
    code = await main(["reconstruct", "--scene", str(tmp_path / "none.json"), "--vertex", "0,0"])
    assert code == EXIT_IO
    assert "Error" in capsys.readouterr().err


async def test_malformed_scene(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("[]", encoding="utf-8")
    assert await main(["figure", "--scene", str(bad)]) == EXIT_BAD_INPUT


async def test_oracle(capsys):
    assert await main(["oracle", "--t", "1", "--y0", "2"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["pqr"][0] == ["-1/1", "2/1"]
    assert payload["secondary"][0] == ["5/1", "2/1"]


async def test_oracle_degenerate_parameter(capsys):
    assert await main(["oracle", "--t", "0"]) == EXIT_BAD_INPUT
    assert "DegenerateParameter" in capsys.readouterr().err


async def test_tolerance_flags(tmp_path, monkeypatch):
    assert await main(["oracle", "--t", "1", "--tol", "-1"]) == EXIT_BAD_INPUT
    monkeypatch.setenv("KIEPERT_TOL", "nan-ish")
    assert await main(["oracle", "--t", "1"]) == EXIT_BAD_INPUT
    config = tmp_path / "config.json"
    config.write_text('{"tolerance": 0}', encoding="utf-8")
    monkeypatch.delenv("KIEPERT_TOL")
    assert await main(["oracle", "--t", "1", "--config", str(config)]) == EXIT_BAD_INPUT


async def test_failed_verification_exit_code(monkeypatch, capsys):
    def broken(self, index, params):
        raise OracleFormulaMismatch("forced")

    monkeypatch.setattr(Theorem2Subject, "run_trial", broken)
    code = await main(["verify", "theorem2", "--t", "1", "--y0", "0"])
    assert code == EXIT_FAILED
    report = json.loads(capsys.readouterr().out)
    assert "OracleFormulaMismatch" in report["trials"][0]["error"]


async def test_tangent_chord_input_is_rejected(capsys):
    code = await main(["verify", "theorem2", "--t=-2/3", "--y0", "3/2"])
    assert code == EXIT_BAD_INPUT
    assert "DegenerateParameters" in capsys.readouterr().err


async def test_oracle_irrational_height(capsys):
    assert await main(["oracle", "--t", "1", "--y0=sqrt3"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["y0"] == {"a": "0/1", "b": "1/1"}
    assert ["0/1", {"a": "0/1", "b": "-1/1"}] in payload["perspectors"]


async def test_malformed_height_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        await main(["oracle", "--t", "1", "--y0", "sqrt3/"])
    assert exc.value.code == EXIT_BAD_INPUT
