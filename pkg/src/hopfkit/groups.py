"""Finite groups by multiplication table, group Hopf algebras, and
group-like coalgebras."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .linalg import SCALARS, BasedSpace, LinMap, Mat, Q, tensor_space
from .structures import Algebra, Coalgebra, HopfAlgebra

__all__ = [
    "FiniteGroup",
    "cyclic_group",
    "symmetric_group_3",
    "group_algebra",
    "grouplike_coalgebra",
]


@dataclass(frozen=True)
class FiniteGroup:
    """Group presented by element labels and a full multiplication table."""

    elements: tuple
    table: dict  # (a, b) -> ab

    def __post_init__(self):
        for a in self.elements:
            for b in self.elements:
                if (a, b) not in self.table:
                    raise ValueError(f"multiplication table missing ({a}, {b})")

    @property
    def identity(self):
        for e in self.elements:
            if all(self.table[(e, a)] == a == self.table[(a, e)] for a in self.elements):
                return e
        raise ValueError("group has no identity element")

    def inverse(self, a):
        e = self.identity
        for b in self.elements:
            if self.table[(a, b)] == e:
                return b
        raise ValueError(f"{a} has no inverse")

    def mul(self, a, b):
        return self.table[(a, b)]


def cyclic_group(n: int) -> FiniteGroup:
    labels = ["e"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    table = {
        (labels[i], labels[j]): labels[(i + j) % n]
        for i in range(n)
        for j in range(n)
    }
    return FiniteGroup(tuple(labels), table)


def symmetric_group_3() -> FiniteGroup:
    perms = list(permutations((1, 2, 3)))
    label = {p: "".join(map(str, p)) for p in perms}
    compose = lambda p, q: tuple(p[q[i] - 1] for i in range(3))
    table = {
        (label[p], label[q]): label[compose(p, q)] for p in perms for q in perms
    }
    return FiniteGroup(tuple(label[p] for p in perms), table)


def group_algebra(group: FiniteGroup, name: str = None) -> HopfAlgebra:
    """Q[G]: group-likes with pointwise comultiplication and S(g) = g^-1."""
    labels = group.elements
    space = BasedSpace(name or f"Q[{len(labels)}]", labels)
    n = space.dim
    idx = {g: i for i, g in enumerate(labels)}

    comul = LinMap(
        space,
        tensor_space(space, space),
        Mat(n * n, n, {(j * n + j, j): Q(1) for j in range(n)}),
    )
    counit = LinMap(space, SCALARS, Mat(1, n, {(0, j): Q(1) for j in range(n)}))
    mul = LinMap(
        tensor_space(space, space),
        space,
        Mat(n, n * n, {
            (idx[group.mul(a, b)], idx[a] * n + idx[b]): Q(1)
            for a in labels
            for b in labels
        }),
    )
    unit = LinMap(SCALARS, space, Mat(n, 1, {(idx[group.identity], 0): Q(1)}))
    antipode = LinMap(
        space, space, Mat(n, n, {(idx[group.inverse(g)], idx[g]): Q(1) for g in labels})
    )
    return HopfAlgebra(Coalgebra(space, comul, counit), Algebra(space, mul, unit), antipode)


def grouplike_coalgebra(labels, name: str = "grouplike") -> Coalgebra:
    """Span of group-like elements: Delta c = c (x) c, eps(c) = 1."""
    space = BasedSpace(name, tuple(labels))
    n = space.dim
    comul = LinMap(
        space,
        tensor_space(space, space),
        Mat(n * n, n, {(j * n + j, j): Q(1) for j in range(n)}),
    )
    counit = LinMap(space, SCALARS, Mat(1, n, {(0, j): Q(1) for j in range(n)}))
    return Coalgebra(space, comul, counit)
