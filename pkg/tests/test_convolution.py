"""Convolution algebra: unit, inverses, exponentials."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfkit.convolution import (
    ConvElement,
    NotNilpotentError,
    conv_unit,
    convolution,
    convolution_exponential,
    convolution_inverse,
    convolution_power,
)
from hopfkit.fixtures import sweedler_h4, zmod_hopf
from hopfkit.linalg import LinMap, Mat, ident

H4 = sweedler_h4()
Z2 = zmod_hopf(2)


def _elem(mat_entries):
    """A map from the Z2 coalgebra (dim 2) to the H4 algebra (dim 4)."""
    return ConvElement(
        Z2.coalgebra, H4.algebra, LinMap(Z2.space, H4.space, Mat(4, 2, mat_entries))
    )


def _id_conv(h):
    return ConvElement(h.coalgebra, h.algebra, ident(h.space))


def test_unit_is_neutral():
    e = conv_unit(H4.coalgebra, H4.algebra)
    s = ConvElement(H4.coalgebra, H4.algebra, H4.antipode)
    assert convolution(e, s) == s
    assert convolution(s, e) == s


def test_antipode_is_convolution_inverse_of_identity():
    for h in (H4, Z2, zmod_hopf(3)):
        f = _id_conv(h)
        s = ConvElement(h.coalgebra, h.algebra, h.antipode)
        e = conv_unit(h.coalgebra, h.algebra)
        assert convolution(f, s) == e
        assert convolution(s, f) == e
        inv = convolution_inverse(f)
        assert inv is not None and inv.map == h.antipode


def test_zero_map_not_invertible():
    z = ConvElement(H4.coalgebra, H4.algebra, LinMap.zero(H4.space, H4.space))
    assert convolution_inverse(z) is None


def test_convolution_power():
    f = _id_conv(Z2)
    e = conv_unit(Z2.coalgebra, Z2.algebra)
    assert convolution_power(f, 0) == e
    assert convolution_power(f, 2) == convolution(f, f)


def test_nilpotent_exponential():
    # supported on {x, gx}: eps-free, nilpotent of order 2 inside H4
    f = ConvElement(H4.coalgebra, H4.algebra, LinMap.from_entries(
        H4.space, H4.space, {"x": {"x": 1}, "gx": {"gx": 1}}
    ))
    assert convolution(f, f).map.is_zero()
    e = conv_unit(H4.coalgebra, H4.algebra)
    ex = convolution_exponential(f, 24)
    assert ex.map == e.map + f.map
    neg = ConvElement(f.coalgebra, f.algebra, -f.map)
    assert convolution(ex, convolution_exponential(neg, 24)) == e


def test_non_nilpotent_raises():
    e = conv_unit(Z2.coalgebra, Z2.algebra)
    f = _id_conv(Z2)
    g = ConvElement(f.coalgebra, f.algebra, f.map - e.map)
    with pytest.raises(NotNilpotentError):
        convolution_exponential(g, 16)


entries = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 1)),
    st.integers(min_value=-3, max_value=3),
    max_size=5,
)


@given(entries, entries, entries)
@settings(max_examples=40, deadline=None)
def test_convolution_associative_and_unital(d1, d2, d3):
    f, g, h = _elem(d1), _elem(d2), _elem(d3)
    assert convolution(convolution(f, g), h) == convolution(f, convolution(g, h))
    e = conv_unit(Z2.coalgebra, H4.algebra)
    assert convolution(e, f) == f
    assert convolution(f, e) == f
