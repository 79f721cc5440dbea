from fractions import Fraction

import pytest

import edgeguard


def test_polygon_basics(l6):
    assert l6.n == 6
    assert len(l6) == 6
    assert l6.vertices[3] == (Fraction(1), Fraction(1))
    assert not l6.was_reversed
    assert repr(l6) == "<edgeguard.Polygon n=6>"


def test_clockwise_input_is_reversed():
    p = edgeguard.Polygon([(0, 0), (0, 4), (4, 4), (4, 0)])
    assert p.was_reversed
    assert p.vertices[1] == (4, 0)


def test_coordinate_types():
    p = edgeguard.Polygon([(0, 0), ("2.5", 0), (Fraction(5, 2), "3/8"), (0, 1)])
    assert p.vertices[2] == (Fraction(5, 2), Fraction(3, 8))
    with pytest.raises(TypeError):
        edgeguard.Polygon([(0.0, 0), (1, 0), (0, 1)])
    with pytest.raises(ValueError):
        edgeguard.Polygon([(0, 0), ("x", 0), (0, 1)])


def test_validation_errors():
    with pytest.raises(edgeguard.ValidationError, match="NotSimple"):
        edgeguard.Polygon([(0, 0), (2, 2), (2, 0), (0, 2)])
    assert issubclass(edgeguard.ValidationError, edgeguard.Error)
    assert issubclass(edgeguard.Error, RuntimeError)


def test_polyfile_round_trip(l6):
    text = edgeguard.write_polyfile(l6)
    assert text.splitlines()[0] == "6"
    assert edgeguard.parse_polyfile(text).vertices == l6.vertices
    with pytest.raises(edgeguard.ParseError):
        edgeguard.parse_polyfile("3\n0 0\n")


def test_sees_and_visible_portion(l6):
    assert edgeguard.sees(l6, (0, 2), (2, 0))
    assert not edgeguard.sees(l6, (2, 0), (1, 2))
    assert edgeguard.visible_portion(l6, 1, 4) == [(Fraction(1), Fraction(1))]
    assert edgeguard.visible_portion(l6, 2, 4) == [(0, 1)]
    assert edgeguard.fully_sees(l6, 3, 0)
    with pytest.raises(edgeguard.InvalidEdgeId):
        edgeguard.visible_portion(l6, 6, 0)


def test_digraph(l6, sq4):
    rows = edgeguard.digraph(l6)
    bits = "".join("1" if b else "0" for row in rows for b in row)
    assert bits == "111111111001111111111111100111111111"
    assert all(all(row) for row in edgeguard.digraph(sq4))


def test_guards_verify_oracle(l6):
    plan = edgeguard.place_guards(l6)["plan"]
    assert [g["edge"] for g in plan["guards"]] == [0]
    assert plan["budget"] == 2
    assert edgeguard.verify(l6, [1])["verification"]["uncovered_edges"] == [3, 4]
    assert edgeguard.verify(l6, [3])["verification"]["whole_edge_covered"]
    with pytest.raises(edgeguard.InvalidEdgeId):
        edgeguard.verify(l6, [9])
    assert edgeguard.min_guard_set(l6) == (1, [0])


def test_min_guard_set_limit():
    p = edgeguard.generate("random", 12, seed=1)
    size, witness = edgeguard.min_guard_set(p)
    assert size == len(witness) == 2
    assert edgeguard.min_guard_set(p, limit=1) is None


def test_arrow_bundle_preprocessing():
    p = edgeguard.generate("arrow-bundle", 3)
    assert p.n == 20
    default = edgeguard.place_guards(p)["plan"]
    bare = edgeguard.place_guards(p, skip_weak_preprocess=True, no_rescue=True)["plan"]
    assert sum(g["step"] == "weak-group" for g in default["guards"]) == 3
    assert bare["guards_used"] > default["guards_used"]


def test_generate_is_deterministic():
    a = edgeguard.generate("random", 15, seed=7)
    b = edgeguard.generate("random", 15, seed=7)
    assert a.vertices == b.vertices
    with pytest.raises(ValueError):
        edgeguard.generate("spiral", 5)


def test_render_svg(l6):
    svg = edgeguard.render_svg(l6, show=["bottlenecks", "guards"])
    assert svg.startswith("<svg")
    assert svg.count('class="chord normal"') == 2
    assert svg.count('class="chord shallow"') == 2
    assert 'class="guard"' in svg
    with pytest.raises(edgeguard.Error):
        edgeguard.render_svg(l6, show=["faces"])
