"""Coalgebra, algebra, Hopf algebra laws and tensor constructions."""

import pytest

from hopfkit.fixtures import grouplike_pair, s3_hopf, sweedler_h4, zmod_hopf
from hopfkit.groups import cyclic_group, group_algebra, symmetric_group_3
from hopfkit.linalg import SCALARS, BasedSpace, LinMap, Mat, tensor_space
from hopfkit.structures import (
    Algebra,
    Coalgebra,
    HopfAlgebra,
    check_algebra,
    check_coalgebra,
    check_hopf,
    hopf_power,
    scalar_hopf,
    tensor_coalgebra,
)


@pytest.mark.parametrize(
    "make", [sweedler_h4, lambda: zmod_hopf(2), lambda: zmod_hopf(3), s3_hopf]
)
def test_fixture_hopf_algebras_pass_all_laws(make):
    rep = check_hopf(make())
    assert rep.ok, rep.as_dict()


def test_grouplike_coalgebra_passes():
    assert check_coalgebra(grouplike_pair()).ok


def test_h4_not_commutative_not_cocommutative():
    h4 = sweedler_h4()
    assert not h4.algebra.is_commutative()
    assert not h4.coalgebra.is_cocommutative()
    z3 = zmod_hopf(3)
    assert z3.algebra.is_commutative()
    assert z3.coalgebra.is_cocommutative()


def test_bad_antipode_fails_with_witness():
    h4 = sweedler_h4()
    bad = LinMap.from_entries(h4.space, h4.space, {
        "1": {"1": 1}, "g": {"g": 1}, "x": {"gx": 1}, "gx": {"x": 1},
    })
    rep = check_hopf(HopfAlgebra(h4.coalgebra, h4.algebra, bad))
    assert not rep.ok
    failing = [c for c in rep.checks if not c.ok]
    assert failing and all(c.witness for c in failing)


def test_non_coassociative_fails():
    sp = BasedSpace("NC", ("s", "t"))
    comul = LinMap.from_entries(sp, tensor_space(sp, sp), {
        "s": {("s", "s"): 1, ("t", "t"): 1},
        "t": {("t", "t"): 1},
    })
    counit = LinMap.from_entries(sp, SCALARS, {"s": {"1": 1}, "t": {}})
    rep = check_coalgebra(Coalgebra(sp, comul, counit))
    assert not rep["coassociativity"].ok
    assert rep["coassociativity"].witness == "s"


def test_tensor_coalgebra_passes():
    c = tensor_coalgebra(grouplike_pair(), sweedler_h4().coalgebra)
    assert c.space.dim == 8
    assert check_coalgebra(c).ok


def test_hopf_power_passes_laws():
    h2 = hopf_power(zmod_hopf(2), 2)
    assert h2.dim == 4
    assert check_hopf(h2).ok
    h0 = hopf_power(zmod_hopf(2), 0)
    assert h0.dim == 1
    assert check_hopf(scalar_hopf()).ok


def test_group_algebra_structure():
    z3 = group_algebra(cyclic_group(3))
    # group-likes: Delta(g) = g (x) g, S(g) = g^{-1}
    v = z3.comul.apply((0, 1, 0))
    idx = z3.comul.codomain.index(("g", "g"))
    assert v[idx] == 1 and sum(1 for x in v if x) == 1
    s3 = group_algebra(symmetric_group_3())
    assert check_hopf(s3).ok
    assert not s3.algebra.is_commutative()


def test_algebra_laws_and_multiply():
    h4 = sweedler_h4()
    assert check_algebra(h4.algebra).ok
    x = {h4.space.index("x"): 1}
    g = {h4.space.index("g"): 1}
    xg = h4.algebra.multiply(x, g)
    gx = h4.algebra.multiply(g, x)
    assert xg == {k: -v for k, v in gx.items()}
