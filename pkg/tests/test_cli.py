import io
import json
import re
import subprocess
import sys

import pytest

from toristab import fan_from_dict, fan_to_json, hirzebruch
from toristab.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


CANNED = [
    (("classify", "--matrix", "1,4,-1,0"), 0),
    (("degrees", "--matrix", "2,1,1,1", "--horizon", "12"), 0),
    (("check-as", "--matrix", "2,1,1,1", "--fan", "p2"), 0),
    (("stabilize", "--matrix", "2,1,1,1", "--fan", "p1xp1"), 0),
    (("stabilize", "--matrix", "1,4,-1,0", "--fan", "p2"), 1),
    (("stabilize", "--matrix", "0,-8,1,4", "--fan", "hirzebruch:2", "--max-index", "8"), 0),
    (("check-as", "--matrix", "2,1,2,1"), 2),
    (("fan-info", "--fan", "hirzebruch:x"), 2),
]


@pytest.mark.parametrize("argv,code", CANNED, ids=[" ".join(a) for a, _ in CANNED])
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    if code == 2:
        assert out == "" and err.startswith("toristab: error:")
    else:
        doc = json.loads(out)
        assert doc["format"] == "toristab-run-v1"
        assert doc["command"] == argv[0]
        assert isinstance(doc["elapsed_us"], int)


_STRING = re.compile(r'"(?:[^"\\]|\\.)*"')
_FLOAT = re.compile(r"-?\d+\.\d+|\d[eE][+-]?\d")


@pytest.mark.parametrize("argv,code", [c for c in CANNED if c[1] != 2],
                         ids=[" ".join(a) for a, c in CANNED if c != 2])
def test_no_floats_in_json(argv, code):
    _, out, _ = call(*argv)
    assert not _FLOAT.search(_STRING.sub('""', out))
    json.loads(out, parse_float=lambda s: pytest.fail(f"float {s} in output"))


def test_classify_payload():
    _, out, _ = call("classify", "--matrix", "1,4,-1,0")
    res = json.loads(out)["result"]
    assert res["classification"]["kind"] == "ComplexIrrational"
    assert res["classification"]["cos_two_pi_theta"] == {"num": -7, "den": 8}


def test_check_as_witness():
    _, out, _ = call("check-as", "--matrix", "2,1,1,1", "--fan", "p2")
    res = json.loads(out)["result"]
    assert res["verdict"] == "NotAS"
    assert res["witness"]["ray"] == [-1, -1] and res["witness"]["k"] == 1


def test_transpose_flag():
    _, out, _ = call("classify", "--matrix", "1,-1,4,0", "--transpose")
    doc = json.loads(out)
    assert doc["matrix"] == [[1, 4], [-1, 0]]
    assert doc["conventions"]["transposed_input"] is True


def test_fan_info_roundtrip(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(fan_to_json(hirzebruch(3)))
    code, out, _ = call("fan-info", "--fan", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["matrix"] is None
    fan = fan_from_dict(doc["result"]["fan"], strict=True)
    assert fan == hirzebruch(3)
    assert fan_to_json(fan) == path.read_text()


def test_malformed_fan_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"format": "toristab-fan-v1", "rays": [[1, 0], [0, 1], [-1, 0]]}')
    assert call("check-as", "--matrix", "2,1,1,1", "--fan", str(path))[0] == 2
    assert call("fan-info", "--fan", str(tmp_path / "missing.json"))[0] == 2


def test_render_and_svg(tmp_path):
    svg = tmp_path / "f.svg"
    code, out, _ = call("render", "--fan", "p2", "--matrix", "2,1,1,1", "--svg", str(svg),
                        "--out", "text")
    assert code == 0 and "wrote" in out
    assert svg.read_text().startswith("<?xml")
    assert call("render", "--fan", "p2")[0] == 2


def test_text_output():
    code, out, _ = call("stabilize", "--matrix", "1,4,-1,0", "--out", "text")
    assert code == 1 and out.startswith("Impossible")


def test_usage_errors():
    assert call()[0] == 2
    assert call("classify")[0] == 2
    assert call("classify", "--matrix", "1,2,3")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "toristab", "classify", "--matrix", "0,-8,1,4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["classification"]["order"] == 8
