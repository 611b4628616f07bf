"""Canonical JSON format: rationals, round-trips, error codes."""

import json
from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfkit import io
from hopfkit.coactions import adjoint_coaction, grading_coaction
from hopfkit.comodules import regular_comodule
from hopfkit.fixtures import graded_line, sweedler_h4, zmod_hopf

DATA = resources.files("hopfkit") / "data"
NEGATIVE_PARSE = {"bad-rational.json", "bad-schema.json", "unresolved-ref.json"}


def corpus_files():
    return sorted(p.name for p in DATA.iterdir() if p.name.endswith(".json"))


def test_format_rational():
    assert io.format_rational(Fraction(1, 2)) == "1/2"
    assert io.format_rational(Fraction(-3, 6)) == "-1/2"
    assert io.format_rational(Fraction(4)) == "4"
    assert io.format_rational(0) == "0"


@pytest.mark.parametrize("lit", ["2/4", "1/1", "1/-2", "-0", "0/3", " 1", "1.5", "1/0", ""])
def test_noncanonical_rationals_rejected(lit):
    with pytest.raises(io.BadRationalError):
        io.parse_rational(lit)


@given(st.fractions(min_value=-1000, max_value=1000))
@settings(max_examples=100, deadline=None)
def test_rational_round_trip(x):
    assert io.parse_rational(io.format_rational(x)) == x


@pytest.mark.parametrize("name", corpus_files())
def test_shipped_corpus_round_trips_or_rejects(name):
    b = (DATA / name).read_bytes()
    if name in NEGATIVE_PARSE:
        with pytest.raises(io.FormatError):
            io.parse(b, {})
        return
    raw = json.loads(b)
    objs = io.parse(b, {})
    if isinstance(raw, list):
        out = io.canonical_json([io.to_dict(o, d["name"]) for o, d in zip(objs, raw)])
    else:
        out = io.serialize(objs, raw["name"])
    assert out == b


def test_parse_serialize_identity_on_objects():
    h4 = sweedler_h4()
    for obj in (
        h4,
        h4.coalgebra,
        h4.algebra,
        graded_line(3),
        adjoint_coaction(h4),
        regular_comodule(h4.coalgebra, adjoint_coaction(h4)),
        io.MapObject("s", h4.coalgebra, h4, 1,
                     type(h4.antipode)(h4.space, h4.space, h4.antipode.mat)),
    ):
        assert io.parse(io.serialize(obj)) == obj


def test_reference_resolution():
    h4 = sweedler_h4()
    env = {}
    io.parse(io.serialize(h4), env)
    a = adjoint_coaction(h4)
    d = io.to_dict(a, "adj")
    d["coalgebra"] = "H4"
    d["hopf"] = "H4"
    assert io.from_dict(d, env) == a
    with pytest.raises(io.UnresolvedRefError):
        io.from_dict(d, {})


def test_error_codes_and_paths():
    with pytest.raises(io.SchemaError) as e:
        io.parse('{"kind": "nope", "name": "x"}')
    assert e.value.code == "SCHEMA_ERROR"
    with pytest.raises(io.BadRationalError) as e:
        io.parse(json.dumps({
            "kind": "coalgebra", "name": "C", "basis": ["s"],
            "comul": {"s": {"s|s": "2/4"}}, "counit": {"s": "1"},
        }))
    assert e.value.code == "BAD_RATIONAL" and "comul" in e.value.path


def test_unknown_labels_rejected():
    d = io.to_dict(zmod_hopf(2))
    d["comul"]["nope"] = {"e|e": "1"}
    with pytest.raises(io.SchemaError):
        io.from_dict(d)


def test_map_power_codomain():
    z2 = zmod_hopf(2)
    d = {
        "kind": "map", "name": "f", "domain": io.to_dict(z2.coalgebra),
        "codomain": io.to_dict(z2), "power": 2,
        "entries": {"e": {"e|e": "1"}, "g": {"g|g": "1"}},
    }
    mo = io.from_dict(d)
    assert mo.map.codomain.dim == 4
    assert io.parse(io.serialize(mo)) == mo


def test_grading_error_is_math_not_schema():
    from hopfkit.coactions import GradingError

    d = io.to_dict(graded_line(2))
    d["degree"]["c_e"] = "g"
    with pytest.raises(GradingError):
        io.from_dict(d)
