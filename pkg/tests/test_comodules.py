"""Comodules, cotensor products, twirled lifts, comatrix coalgebras."""

import pytest

from hopfkit.coactions import adjoint_coaction, check_coaction, grading_coaction, trivial_coaction
from hopfkit.comodules import (
    Comodule,
    check_comodule,
    check_equivariant_comodule,
    check_equivariant_comodule_left,
    check_equivariant_comodule_morphism,
    check_twirl_action,
    comatrix_coaction,
    comatrix_coalgebra,
    cotensor,
    equivariant_cotensor_lift,
    inner_twirl_isomorphism,
    is_isomorphic_equivariant,
    matrix_coalgebra,
    regular_comodule,
    twirl_left,
    twirl_right,
)
from hopfkit.convolution import ConvElement, conv_unit, convolution
from hopfkit.fixtures import graded_line, grouplike_pair, h4_graded_coaction, sweedler_h4, zmod_hopf
from hopfkit.linalg import LinMap, Mat, chain, ident, tensor_map
from hopfkit.structures import check_coalgebra


def _gl_cocharacter(a, t=1):
    """c_e -> 1, c_g -> t*gx on the graded line over H4."""
    return ConvElement(a.coalgebra, a.hopf.algebra, LinMap.from_entries(
        a.coalgebra.space, a.hopf.space, {"c_e": {"1": 1}, "c_g": {"gx": t}}
    ))


def test_regular_comodule_passes():
    h4 = sweedler_h4()
    a = adjoint_coaction(h4)
    m = regular_comodule(h4.coalgebra, a)
    assert check_comodule(m).ok
    assert check_equivariant_comodule(m, a)
    assert check_equivariant_comodule_left(m, a)


def test_equivariance_reduces_to_coflatness():
    # with M = C, rho = Delta, delta_M = delta the equivariance law is the
    # coflatness axiom; a coaction that fails coflatness must fail it
    z2 = zmod_hopf(2)
    from hopfkit.coactions import Coaction
    from hopfkit.linalg import tensor_space

    deltag = LinMap.from_entries(
        z2.coalgebra.space, tensor_space(z2.coalgebra.space, z2.space),
        {"e": {("e", "e"): 1}, "g": {("g", "g"): 1}},
    )
    bad = Coaction(z2.coalgebra, z2, deltag)
    assert not check_coaction(bad)["coflat"].ok
    m = Comodule(
        z2.coalgebra.space,
        right_coalgebra=z2.coalgebra, right_coaction=z2.coalgebra.comul,
        hopf=z2, h_lift=bad.delta,
    )
    assert not check_equivariant_comodule(m, bad)


def test_cotensor_regular_recovers_coalgebra():
    h4 = sweedler_h4()
    m = regular_comodule(h4.coalgebra)
    w, com = cotensor(m, m)
    assert w.dim == h4.dim
    assert check_comodule(com).ok


def test_equivariant_cotensor_lift():
    a = h4_graded_coaction()
    m = regular_comodule(a.coalgebra, a)
    out = equivariant_cotensor_lift(m, m, a)
    assert check_comodule(out).ok
    assert check_equivariant_comodule(out, a)
    assert check_equivariant_comodule_left(out, a)


def test_twirl_by_unit_is_identity():
    a = h4_graded_coaction()
    m = regular_comodule(a.coalgebra, a)
    e = conv_unit(a.coalgebra, a.hopf.algebra)
    assert twirl_right(m, e, a) == m
    assert twirl_left(m, e, a) == m


def test_twirl_action_law_and_inverse():
    a = h4_graded_coaction()
    m = regular_comodule(a.coalgebra, a)
    phi = _gl_cocharacter(a, 1)
    psi = _gl_cocharacter(a, -2)
    assert check_twirl_action(m, phi, psi, a)
    from hopfkit.schism import cocharacter_inverse

    tw = twirl_right(m, phi, a)
    back = twirl_right(tw, cocharacter_inverse(phi, a), a)
    assert back == m


def test_left_twirl_equals_right_over_commutative():
    z2 = zmod_hopf(2)
    a = trivial_coaction(z2.coalgebra, z2)
    g = grading_coaction(graded_line(2))
    for b in (a, g):
        m = regular_comodule(b.coalgebra, b)
        phi = conv_unit(b.coalgebra, b.hopf.algebra)
        # nontrivial cocharacter on the grading fixture: c_e -> e, c_g -> 0
        if b is g:
            phi = ConvElement(b.coalgebra, b.hopf.algebra, LinMap.from_entries(
                b.coalgebra.space, b.hopf.space, {"c_e": {"e": 1}, "c_g": {"g": 1}}
            ))
        assert twirl_left(m, phi, b) == twirl_right(m, phi, b)


def test_twirled_lift_stays_equivariant():
    a = h4_graded_coaction()
    m = regular_comodule(a.coalgebra, a)
    tw = twirl_right(m, _gl_cocharacter(a), a)
    assert check_comodule(tw).ok
    assert check_equivariant_comodule(tw, a)


def test_morphisms_and_isomorphism_search():
    a = h4_graded_coaction()
    m = regular_comodule(a.coalgebra, a)
    assert check_equivariant_comodule_morphism(m, m, ident(m.space))
    assert is_isomorphic_equivariant(m, m)
    # a twirl by a non-inner cocharacter changes the isomorphism class
    tw = twirl_right(m, _gl_cocharacter(a), a)
    assert not is_isomorphic_equivariant(m, tw)


def test_inner_twirl_isomorphism():
    h4 = sweedler_h4()
    a = adjoint_coaction(h4)
    m = regular_comodule(h4.coalgebra, a)
    f, tw = inner_twirl_isomorphism(m, "g", a)
    assert check_equivariant_comodule_morphism(tw, m, f)


def test_matrix_coalgebra_laws():
    mc = matrix_coalgebra(2)
    assert mc.space.dim == 4
    assert check_coalgebra(mc).ok


def test_comatrix_pipeline_plain():
    c = grouplike_pair()
    mn, row, col = comatrix_coalgebra(c, 2)
    assert mn.space.dim == 2 * 2 * c.space.dim
    assert check_coalgebra(mn).ok
    assert check_comodule(row).ok
    assert check_comodule(col).ok


def test_comatrix_pipeline_equivariant():
    a = h4_graded_coaction()
    mn, row, col = comatrix_coalgebra(a.coalgebra, 2, a)
    ma = comatrix_coaction(a, 2)
    assert check_coaction(ma).ok
    assert check_equivariant_comodule(row, ma)
    assert check_equivariant_comodule_left(col, ma)


def test_comatrix_n1_is_plain_coalgebra():
    c = graded_line(2).coalgebra
    mn, row, col = comatrix_coalgebra(c, 1)
    assert mn.space.dim == c.space.dim
    w, com = cotensor(row, col)
    assert w.dim == c.space.dim
