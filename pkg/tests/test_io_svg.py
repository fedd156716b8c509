import json
import xml.etree.ElementTree as ET
from fractions import Fraction

import jsonschema
import pytest

from extremalkit import io
from extremalkit.anneal import anneal_max_crossings
from extremalkit.drawings import draw_diam4
from extremalkit.geometry import Drawing, crossing_count
from extremalkit.graphs import Diam4Descriptor, Graph, SpiderDescriptor
from extremalkit.svg import SvgOptions, crossing_points, export_svg
from extremalkit.weighted import VertexWeighting, ex_prod

NS = "{http://www.w3.org/2000/svg}"


def test_weights_round_trip():
    W = VertexWeighting((Fraction(1, 2), 3, Fraction(7, 3)))
    doc = io.weights_to_json(W)
    assert doc == {"weights": ["1/2", "3", "7/3"]}
    jsonschema.validate(doc, io.WEIGHTS_SCHEMA)
    assert io.weights_from_json(json.dumps(doc)) == W
    assert io.weights_from_json({"weights": [1, "2/4"]}).weights == (1, Fraction(1, 2))


def test_bad_weights_point_to_schema():
    with pytest.raises(io.SchemaError, match="SCHEMAS"):
        io.weights_from_json({"weights": [1.5]})
    with pytest.raises(io.SchemaError):
        io.weights_from_json({"w": []})


def test_tree_documents():
    assert io.tree_from_json({"spider": [2, 2, 2]}).n == 7
    assert io.tree_from_json({"diam4": [3, 2, 2, 1]}).m == 12
    assert io.tree_from_json({"n": 3, "edges": [[0, 1], [1, 2]]}).m == 2
    with pytest.raises(io.SchemaError):
        io.tree_from_json({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})
    with pytest.raises(io.SchemaError):
        io.tree_from_json({"spider": [2, 2]})


def test_drawing_round_trip(tmp_path):
    d = draw_diam4(Diam4Descriptor((3, 2, 2, 1)))
    doc = io.drawing_to_json(d)
    jsonschema.validate(doc, io.DRAWING_SCHEMA)
    path = tmp_path / "d.json"
    path.write_text(io.dumps(doc))
    back = io.drawing_from_json(path)
    assert back.positions == d.positions and back.graph.edges == d.graph.edges
    assert crossing_count(back) == 44


def test_drawing_missing_position():
    with pytest.raises(io.SchemaError):
        io.drawing_from_json({"n": 2, "edges": [[0, 1]], "positions": [[0, "0", "0"]]})


def test_partition_json():
    doc = io.partition_to_json(ex_prod(VertexWeighting.of(1, 1, 1), 3)[1])
    jsonschema.validate(doc, io.PARTITION_SCHEMA)
    assert doc == [[0], [1, 2]]


def test_svg_empty_graph():
    root = ET.fromstring(export_svg(Drawing(Graph(0), ())))
    assert root.tag == NS + "svg"


def test_svg_figure_type():
    d = draw_diam4(Diam4Descriptor((3, 2, 2, 1)))
    root = ET.fromstring(export_svg(d, SvgOptions(mark_crossings=True)))
    assert len(root.findall(f".//{NS}line")) == 12
    assert len(root.findall(f".//{NS}circle[@class='vertex']")) == 13
    assert len(root.findall(f".//{NS}circle[@class='crossing']")) == 44


def test_svg_marks_spider_crossings():
    d, count = anneal_max_crossings(SpiderDescriptor((2, 2, 2)).tree())
    root = ET.fromstring(export_svg(d, SvgOptions(mark_crossings=True)))
    assert count == 8 == len(root.findall(f".//{NS}circle[@class='crossing']")) == len(crossing_points(d))
