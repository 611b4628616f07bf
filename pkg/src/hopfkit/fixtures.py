"""Shared example structures used by the test-suite and the CLI corpus."""

from __future__ import annotations

from .groups import cyclic_group, group_algebra, grouplike_coalgebra, symmetric_group_3
from .linalg import SCALARS, BasedSpace, LinMap, Mat, Q, tensor_space
from .structures import Algebra, Coalgebra, HopfAlgebra

__all__ = [
    "sweedler_h4",
    "zmod_hopf",
    "s3_hopf",
    "grouplike_pair",
    "graded_line",
    "h4_graded_coaction",
    "h4_nilpotent_coderivation",
]


def zmod_hopf(n: int) -> "HopfAlgebra":
    return group_algebra(cyclic_group(n), name=f"Q[Z{n}]")


def s3_hopf() -> "HopfAlgebra":
    return group_algebra(symmetric_group_3(), name="Q[S3]")


def grouplike_pair() -> Coalgebra:
    """Two group-likes s, t: the coalgebra Q{s,t}."""
    return grouplike_coalgebra(("s", "t"), name="Q{s,t}")


def graded_line(n: int = 2):
    """Q{c_e, c_g} graded over Z/n: c_e group-like in degree e,
    c_g primitive over c_e in degree g.

    A group-like element can only carry the identity degree (its
    comultiplication lands in degree squared), so the nonidentity
    component is spanned by a primitive-type element instead.
    """
    from .coactions import GradedCoalgebra

    space = BasedSpace(f"C2/Z{n}", ("c_e", "c_g"))
    comul = LinMap.from_entries(space, tensor_space(space, space), {
        "c_e": {("c_e", "c_e"): 1},
        "c_g": {("c_g", "c_e"): 1, ("c_e", "c_g"): 1},
    })
    counit = LinMap.from_entries(space, SCALARS, {"c_e": {"1": 1}, "c_g": {}})
    c = Coalgebra(space, comul, counit)
    return GradedCoalgebra(c, cyclic_group(n), {"c_e": "e", "c_g": "g"})


def h4_graded_coaction():
    """Sweedler's H4 coacting on the graded line through its group-likes.

    delta c_e = c_e (x) 1, delta c_g = c_g (x) g: the Z/2 grading
    coaction pushed along the Hopf embedding Q[Z/2] -> H4.
    """
    from .coactions import Coaction

    h4 = sweedler_h4()
    c = graded_line(2).coalgebra
    delta = LinMap.from_entries(c.space, tensor_space(c.space, h4.space), {
        "c_e": {("c_e", "1"): 1},
        "c_g": {("c_g", "g"): 1},
    })
    return Coaction(c, h4, delta)


def h4_nilpotent_coderivation():
    """A nonzero nilpotent H4-valued equivariant coderivation.

    On the graded-line coaction of H4, phi(c_e) = 0, phi(c_g) = gx is a
    coderivation with phi * phi = 0, so exp(phi) = e + phi.
    """
    from .convolution import ConvElement

    a = h4_graded_coaction()
    phi = ConvElement(a.coalgebra, a.hopf.algebra, LinMap.from_entries(
        a.coalgebra.space, a.hopf.space, {"c_e": {}, "c_g": {"gx": 1}},
    ))
    return phi, a


def sweedler_h4() -> HopfAlgebra:
    """Sweedler's four-dimensional Hopf algebra.

    Basis {1, g, x, gx} with g^2 = 1, x^2 = 0, xg = -gx;
    Delta x = x (x) 1 + g (x) x, eps(x) = 0, S(x) = -gx.
    """
    space = BasedSpace("H4", ("1", "g", "x", "gx"))
    hh = tensor_space(space, space)

    comul = LinMap.from_entries(space, hh, {
        "1": {("1", "1"): 1},
        "g": {("g", "g"): 1},
        "x": {("x", "1"): 1, ("g", "x"): 1},
        "gx": {("gx", "g"): 1, ("1", "gx"): 1},
    })
    counit = LinMap.from_entries(space, SCALARS, {
        "1": {"1": 1}, "g": {"1": 1}, "x": {}, "gx": {},
    })
    mul = LinMap.from_entries(hh, space, {
        ("1", "1"): {"1": 1}, ("1", "g"): {"g": 1}, ("1", "x"): {"x": 1}, ("1", "gx"): {"gx": 1},
        ("g", "1"): {"g": 1}, ("g", "g"): {"1": 1}, ("g", "x"): {"gx": 1}, ("g", "gx"): {"x": 1},
        ("x", "1"): {"x": 1}, ("x", "g"): {"gx": -1}, ("x", "x"): {}, ("x", "gx"): {},
        ("gx", "1"): {"gx": 1}, ("gx", "g"): {"x": -1}, ("gx", "x"): {}, ("gx", "gx"): {},
    })
    unit = LinMap.from_entries(SCALARS, space, {"1": {"1": 1}})
    antipode = LinMap.from_entries(space, space, {
        "1": {"1": 1}, "g": {"g": 1}, "x": {"gx": -1}, "gx": {"x": 1},
    })
    return HopfAlgebra(Coalgebra(space, comul, counit), Algebra(space, mul, unit), antipode)
