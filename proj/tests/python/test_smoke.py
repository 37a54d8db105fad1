import math
import pathlib

import pytest

import movekit

GOLDEN = pathlib.Path(__file__).resolve().parents[1] / "golden"


def test_geometry():
    assert movekit.dist_point_segment((5, 3), (0, 0), (10, 0)) == 3.0
    square = [(-10, -10), (10, -10), (10, 10), (-10, 10)]
    assert movekit.point_in_convex_polygon((10, 0), square)
    assert not movekit.point_in_convex_polygon((10.001, 0), square)


def test_scene_names():
    assert movekit.scene_names() == [
        "calculator", "data-selection", "personal-info", "panels", "plots", "polygon", "nnode",
    ]


def test_drag_and_layout_round_trip():
    scene = movekit.Scene("calculator")
    saved = scene.save_layout()
    assert scene.pointer_down(74, 101)
    assert scene.pointer_move(114, 101)
    assert scene.pointer_up() == ("d7", 8)
    assert scene.field("d7", "x") == 110
    assert not scene.pointer_down(88, 118)
    assert scene.restore_layout(saved) == []
    assert scene.save_layout() == saved
    assert scene.violations() == []


def test_rotate_and_cursor():
    scene = movekit.Scene("polygon")
    assert scene.cursor(200, 160) == "MoveAll"
    assert scene.pointer_down(230, 160, button="right")
    scene.pointer_move(200, 190)
    scene.pointer_up()
    assert math.isclose(scene.field("hexagon", "angle"), math.pi / 2)
    with pytest.raises(ValueError):
        scene.pointer_down(0, 0, button="middle")


def test_bad_layout_raises():
    scene = movekit.Scene("nnode")
    with pytest.raises(movekit.LayoutError, match="line 2"):
        scene.restore_layout("MRL1 nnode\ndisc disc 1 2\n")


def test_replay_golden_corpus():
    for line in (GOLDEN / "corpus.txt").read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        scene, trace, golden = line.split()
        report = movekit.replay(scene, (GOLDEN / trace).read_text())
        assert report.passed, report.format()
        assert report.layout == (GOLDEN / golden).read_text()


def test_trace_error():
    with pytest.raises(movekit.TraceError, match="line 1"):
        movekit.replay("polygon", "down 5")


def test_fuzz_deterministic():
    a = movekit.fuzz("plots", 1000, 7)
    b = movekit.fuzz("plots", 1000, 7)
    assert a.ok and a.format() == b.format()
    assert a.steps == 1000


def test_boundary():
    b = movekit.Boundary()
    assert b.request("init", scene="polygon")["tags"] == ["hexagon"]
    model = b.request("getRenderModel", overlay=True)["commands"]
    assert any(c["kind"] == "debugNode" for c in model)
    assert b.request("pointerDown", x=220, y=170)["caught"]
    assert b.request("pointerMove", x=230, y=175)["changed"]
    assert b.request("pointerUp")["released"]["tag"] == "hexagon"
    assert not b.request("nope")["ok"]
