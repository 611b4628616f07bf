"""Hopf coactions on coalgebras.

Axiom verification for delta: C -> C (x) H, the four standard
constructors (trivial, grading, adjoint, inner), coinvariants,
equivariant coalgebra morphisms, and the antipode-coaction identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .groups import FiniteGroup, group_algebra
from .linalg import (
    LinMap,
    Mat,
    Q,
    Subspace,
    chain,
    cycles_to_perm,
    flip_map,
    ident,
    kernel,
    tensor_space,
)
from .structures import (
    Coalgebra,
    HopfAlgebra,
    LawCheck,
    Report,
    _law,
    maps_equal_witness,
)

__all__ = [
    "Coaction",
    "GradedCoalgebra",
    "GradingError",
    "InnerCoactionError",
    "check_coaction",
    "trivial_coaction",
    "grading_coaction",
    "adjoint_coaction",
    "inner_coaction",
    "coinvariants",
    "is_coalgebra_morphism",
    "check_equivariant_coalgebra_morphism",
    "verify_lemma_antipode_identities",
    "embed_unit_right",
]


class GradingError(ValueError):
    """The grading is not compatible with the coalgebra structure."""


class InnerCoactionError(ValueError):
    """The twisting map of an inner coaction is not a coalgebra morphism."""


@dataclass(frozen=True)
class Coaction:
    """A right coaction delta: C -> C (x) H of a Hopf algebra on a coalgebra."""

    coalgebra: Coalgebra
    hopf: HopfAlgebra
    delta: LinMap

    def __post_init__(self):
        n, m = self.coalgebra.dim, self.hopf.dim
        if self.delta.mat.cols != n or self.delta.mat.rows != n * m:
            raise ValueError("coaction map has wrong shape")

    @property
    def space(self):
        return self.coalgebra.space


def embed_unit_right(coalgebra_space, hopf: HopfAlgebra) -> LinMap:
    """The map c |-> c (x) 1 into C (x) H."""
    cod = tensor_space(coalgebra_space, hopf.space)
    m = hopf.dim
    data = {}
    for j in range(coalgebra_space.dim):
        for i, v in hopf.algebra.unit_vector.items():
            data[(j * m + i, j)] = v
    return LinMap(coalgebra_space, cod, Mat(cod.dim, coalgebra_space.dim, data))


def check_coaction(a: Coaction) -> Report:
    c, h, delta = a.coalgebra, a.hopf, a.delta
    ic = ident(c.space)
    ih = ident(h.space)

    comodule = _law(
        "comodule",
        (delta.tensor(ih)) @ delta,
        (ic.tensor(h.comul)) @ delta,
    )
    counit_side = (ic.tensor(h.counit)) @ delta
    counitary = _law(
        "counitary",
        counit_side,
        LinMap(counit_side.domain, counit_side.codomain, Mat.identity(c.dim)),
    )
    tau23 = flip_map([c.space, h.space, c.space, h.space], cycles_to_perm(4, (2, 3)))
    coflat = _law(
        "coflat",
        chain(ic.tensor(ic).tensor(h.mul), tau23, delta.tensor(delta), c.comul),
        (c.comul.tensor(ih)) @ delta,
    )
    coflat_counit = _law(
        "coflat-counitary",
        LinMap(c.space, c.counit.codomain, (c.counit.tensor(h.counit) @ delta).mat),
        c.counit,
    )
    return Report((comodule, counitary, coflat, coflat_counit))


def trivial_coaction(c: Coalgebra, h: HopfAlgebra) -> Coaction:
    return Coaction(c, h, embed_unit_right(c.space, h))


@dataclass(frozen=True)
class GradedCoalgebra:
    """Coalgebra graded by a finite group; validated at construction."""

    coalgebra: Coalgebra
    group: FiniteGroup
    degree: dict  # basis label -> group element

    def __post_init__(self):
        c, g = self.coalgebra, self.group
        for label in c.space.basis:
            if label not in self.degree:
                raise GradingError(f"basis element {label!r} has no degree")
            if self.degree[label] not in g.elements:
                raise GradingError(f"degree of {label!r} is not a group element")
        n = c.dim
        e = g.identity
        for j, label in enumerate(c.space.basis):
            gj = self.degree[label]
            for (p, q), _ in c.comul_pairs[j]:
                dp = self.degree[c.space.basis[p]]
                dq = self.degree[c.space.basis[q]]
                if g.mul(dp, dq) != gj:
                    raise GradingError(
                        f"Delta({label}) has a component of degree "
                        f"{dp}*{dq} != {gj}"
                    )
            if self.degree[label] != e and c.counit.mat.data.get((0, j)):
                raise GradingError(f"counit does not vanish on {label!r} of degree {gj}")


def grading_coaction(graded: GradedCoalgebra) -> Coaction:
    """delta c = c (x) deg(c) into the group Hopf algebra of the grading group."""
    c = graded.coalgebra
    h = group_algebra(graded.group)
    m = h.dim
    data = {}
    for j, label in enumerate(c.space.basis):
        i = h.space.index(graded.degree[label])
        data[(j * m + i, j)] = Q(1)
    delta = LinMap(c.space, tensor_space(c.space, h.space), Mat(c.dim * m, c.dim, data))
    return Coaction(c, h, delta)


def adjoint_coaction(h: HopfAlgebra) -> Coaction:
    """delta h = h_(2) (x) S(h_(1)) h_(3) on the underlying coalgebra of H."""
    sp = h.space
    i = ident(sp)
    delta = chain(
        i.tensor(h.mul),
        i.tensor(h.antipode).tensor(i),
        flip_map([sp, sp, sp], cycles_to_perm(3, (1, 2))),
        h.comul.tensor(i),
        h.comul,
    )
    return Coaction(h.coalgebra, h, delta)


def is_coalgebra_morphism(f: LinMap, dom: Coalgebra, cod: Coalgebra) -> bool:
    comul_ok = (cod.comul @ f) == ((f.tensor(f)) @ dom.comul)
    counit_ok = (cod.counit @ f) == dom.counit
    return comul_ok and counit_ok


def inner_coaction(c: Coalgebra, h: HopfAlgebra, j: LinMap) -> Coaction:
    """delta c = c_(2) (x) S(J(c_(1))) J(c_(3)) for a coalgebra morphism J."""
    if not is_coalgebra_morphism(j, c, h.coalgebra):
        raise InnerCoactionError("twisting map is not a coalgebra morphism")
    ic = ident(c.space)
    delta = chain(
        ic.tensor(h.mul),
        ic.tensor(h.antipode @ j).tensor(j),
        flip_map([c.space, c.space, c.space], cycles_to_perm(3, (1, 2))),
        c.comul.tensor(ic),
        c.comul,
    )
    return Coaction(c, h, delta)


def coinvariants(a: Coaction) -> Subspace:
    """Kernel of delta - (. (x) 1)."""
    return kernel(a.delta - embed_unit_right(a.coalgebra.space, a.hopf))


def check_equivariant_coalgebra_morphism(a: Coaction, b: Coaction, phi: LinMap) -> bool:
    """True iff (phi (x) id) . delta_C = delta_D . phi for a coalgebra morphism phi."""
    if a.hopf.dim != b.hopf.dim or a.hopf.mul != b.hopf.mul:
        raise ValueError("coactions are over different Hopf algebras")
    if not is_coalgebra_morphism(phi, a.coalgebra, b.coalgebra):
        raise ValueError("map is not a coalgebra morphism")
    ih = ident(a.hopf.space)
    return ((phi.tensor(ih)) @ a.delta) == (b.delta @ phi)


def verify_lemma_antipode_identities(a: Coaction) -> Report:
    """Both antipode-coaction identities, evaluated as 3-factor tensors.

    c_(1) (x) c_(2)^(0) (x) c_(2)^(1)
        = c_(1)^(0) (x) c_(2)^(0) (x) S(c_(1)^(1)) c^(1)
    and
    c_(1)^(0) (x) c_(2) (x) c_(1)^(1)
        = c_(1)^(0) (x) c_(2)^(0) (x) c^(1) S(c_(2)^(1)).
    """
    c, h, delta = a.coalgebra, a.hopf, a.delta
    ic, ih = ident(c.space), ident(h.space)
    tau23_chc = flip_map([c.space, h.space, c.space], cycles_to_perm(3, (2, 3)))

    lhs1 = (ic.tensor(delta)) @ c.comul
    # delta(c), split the C-leg, coact again on the first piece with S on
    # its H-leg, then multiply against the outer H-leg
    rhs1 = chain(
        ic.tensor(ic).tensor(h.mul),
        flip_map([c.space, h.space, c.space, h.space], cycles_to_perm(4, (2, 3))),
        ((ic.tensor(h.antipode)) @ delta).tensor(ic).tensor(ih),
        c.comul.tensor(ih),
        delta,
    )
    w1 = maps_equal_witness(lhs1, rhs1)
    first = LawCheck("antipode-coaction-first", w1 is None, w1)

    lhs2 = chain(tau23_chc, delta.tensor(ic), c.comul)
    # coact on both pieces, split the second H-leg once more, then
    # multiply h1 h2 S(h3); coflatness recombines h1 h2 into c^(1)
    rhs2 = chain(
        ic.tensor(ic).tensor(h.mul @ (ih.tensor(h.mul))),
        ic.tensor(ic).tensor(ih).tensor(ih).tensor(h.antipode),
        flip_map([c.space, h.space, c.space, h.space, h.space], cycles_to_perm(5, (2, 3))),
        delta.tensor((ic.tensor(h.comul)) @ delta),
        c.comul,
    )
    w2 = maps_equal_witness(lhs2, rhs2)
    second = LawCheck("antipode-coaction-second", w2 is None, w2)
    return Report((first, second))
