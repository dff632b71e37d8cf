import re
import xml.etree.ElementTree as ET

from toristab import MonomialMap, stabilize, standard_p1xp1, standard_p2
from toristab.svg import Annotations, annotations_for, render_svg

NS = "{http://www.w3.org/2000/svg}"


def _parse(text):
    return ET.fromstring(text.split("\n", 1)[1])


def test_p2_figure():
    text = render_svg(standard_p2())
    root = _parse(text)
    labels = [t.text for t in root.iter(NS + "text")]
    assert labels == ["(1,0)", "(0,1)", "(-1,-1)"]
    wedges = [p for p in root.iter(NS + "path")]
    assert len(wedges) == 3


def test_render_is_deterministic():
    fan = stabilize([[2, 1], [1, 1]], standard_p2()).fan
    ann = annotations_for(MonomialMap(2, 1, 1, 1), fan, title="golden")
    assert render_svg(fan, ann) == render_svg(fan, ann)


def test_order_8_fan_hatches_singular_cones():
    out = stabilize([[0, -8], [1, 4]], standard_p1xp1())
    ann = annotations_for(out.matrix, out.fan)
    assert ann.singular == frozenset(out.singular_cones)
    assert len(ann.singular) == 4
    root = _parse(render_svg(out.fan, ann))
    fills = [p.get("fill") for p in root.iter(NS + "path")]
    assert fills.count("url(#hatch-sing)") == 4
    assert len(fills) == 8 + 4


def test_golden_eigenlines_and_contractions():
    A = MonomialMap(2, 1, 1, 1)
    ann = annotations_for(A, standard_p2())
    assert ann.contracted == {0, 1, 2}
    assert ann.indeterminate == {1, 2}
    slopes = sorted(y / x for x, y in ann.eigen_directions)
    assert abs(slopes[0] + 1.618034) < 1e-5 and abs(slopes[1] - 0.618034) < 1e-5
    text = render_svg(standard_p2(), ann)
    assert text.count('stroke-dasharray="6 4"') == 2
    assert text.count("url(#hatch-indet)") == 2
    assert re.search(r'stroke="#c0392b" stroke-width="1.6"', text)


def test_title_is_escaped():
    text = render_svg(standard_p2(), Annotations(title="A<B & C"))
    assert "A&lt;B &amp; C" in text
