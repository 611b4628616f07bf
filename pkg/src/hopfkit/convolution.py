"""The convolution algebra Hom(C, A).

Maps from a coalgebra to an algebra under f * g = mu . (f (x) g) . Delta,
with unit e = eta . eps.  Inverses are found by solving the linear system
e = f * x; a one-sided inverse in this finite-dimensional algebra is
automatically two-sided, which is re-verified after solving.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Optional

from .linalg import LinMap, Mat, Q, _solve_rows
from .structures import Algebra, Coalgebra, HopfAlgebra

__all__ = [
    "ConvElement",
    "conv_unit",
    "convolution",
    "convolution_inverse",
    "convolution_power",
    "is_counitary",
    "is_in_gamma0",
    "convolution_exponential",
    "NotNilpotentError",
]


class NotNilpotentError(RuntimeError):
    """The convolution powers did not vanish within the allowed order."""

    def __init__(self, max_order: int):
        super().__init__(f"no vanishing convolution power up to order {max_order}")
        self.max_order = max_order


@dataclass(frozen=True)
class ConvElement:
    """An element of Hom(C, A) under the convolution product."""

    coalgebra: Coalgebra
    algebra: Algebra
    map: LinMap

    def __post_init__(self):
        if self.map.domain.dim != self.coalgebra.dim:
            raise ValueError("map domain does not carry the coalgebra")
        if self.map.codomain.dim != self.algebra.dim:
            raise ValueError("map codomain does not carry the algebra")

    def __mul__(self, other: "ConvElement") -> "ConvElement":
        return convolution(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, ConvElement)
            and self.map == other.map
        )

    def __hash__(self):
        return hash(self.map)

    def is_unit_map(self) -> bool:
        return self == conv_unit(self.coalgebra, self.algebra)

    def add(self, other: "ConvElement") -> "ConvElement":
        return ConvElement(self.coalgebra, self.algebra, self.map + other.map)

    def scale(self, c) -> "ConvElement":
        return ConvElement(self.coalgebra, self.algebra, self.map.scale(c))

    def neg(self) -> "ConvElement":
        return ConvElement(self.coalgebra, self.algebra, -self.map)


def conv_unit(c: Coalgebra, a: Algebra) -> ConvElement:
    return ConvElement(c, a, a.unit @ c.counit)


def _check_compatible(f: ConvElement, g: ConvElement):
    if f.coalgebra is not g.coalgebra and f.coalgebra.comul != g.coalgebra.comul:
        raise ValueError("convolution factors over different coalgebras")
    if f.algebra is not g.algebra and f.algebra.mul != g.algebra.mul:
        raise ValueError("convolution factors into different algebras")


def convolution(f: ConvElement, g: ConvElement) -> ConvElement:
    """f * g = mu . (f (x) g) . Delta, computed through structure constants."""
    _check_compatible(f, g)
    alg = f.algebra
    fc = f.map.mat.columns()
    gc = g.map.mat.columns()
    data: dict = {}
    for j, pairs in enumerate(f.coalgebra.comul_pairs):
        acc: dict = {}
        for (p, q), d in pairs:
            prod = alg.multiply(fc[p], gc[q])
            for i, v in prod.items():
                s = acc.get(i, Q(0)) + d * v
                if s:
                    acc[i] = s
                else:
                    del acc[i]
        for i, v in acc.items():
            data[(i, j)] = v
    mat = Mat(alg.dim, f.coalgebra.dim, data)
    return ConvElement(f.coalgebra, alg, LinMap(f.map.domain, f.map.codomain, mat))


def convolution_power(f: ConvElement, k: int) -> ConvElement:
    out = conv_unit(f.coalgebra, f.algebra)
    for _ in range(k):
        out = convolution(out, f)
    return out


def convolution_inverse(f: ConvElement) -> Optional[ConvElement]:
    """Two-sided convolution inverse, or None.

    Unknown x is solved from f * x = e.  The system matrix is assembled
    blockwise: (f * x)(c_j) = sum_q L(h_jq) x(c_q) with
    h_jq = sum_p Delta^j_pq f(c_p).
    """
    n = f.coalgebra.dim
    m = f.algebra.dim
    cols = f.map.mat.columns()
    data: dict = {}
    for j, pairs in enumerate(f.coalgebra.comul_pairs):
        h: dict = {}
        for (p, q), d in pairs:
            acc = h.setdefault(q, {})
            for i, v in cols[p].items():
                s = acc.get(i, Q(0)) + d * v
                if s:
                    acc[i] = s
                else:
                    del acc[i]
        for q, elt in h.items():
            block = f.algebra.left_mul_mat(elt)
            for (i, l), v in block.data.items():
                data[(j * m + i, q * m + l)] = v
    system = Mat(n * m, n * m, data)
    e = conv_unit(f.coalgebra, f.algebra)
    target = [Q(0)] * (n * m)
    for (i, j), v in e.map.mat.data.items():
        target[j * m + i] = v
    sol = _solve_rows(system, target)
    if sol is None:
        return None
    xdata = {}
    for q in range(n):
        for l in range(m):
            v = sol[q * m + l]
            if v:
                xdata[(l, q)] = v
    x = ConvElement(f.coalgebra, f.algebra, LinMap(f.map.domain, f.map.codomain, Mat(m, n, xdata)))
    if convolution(f, x) != e or convolution(x, f) != e:
        return None
    return x


def is_counitary(f: ConvElement, codomain_counit: LinMap) -> bool:
    return (codomain_counit @ f.map) == f.coalgebra.counit


def is_in_gamma0(f: ConvElement, h: HopfAlgebra) -> bool:
    """Counitary and convolution invertible, with counit taken from h."""
    return is_counitary(f, h.counit) and convolution_inverse(f) is not None


def convolution_exponential(f: ConvElement, max_order: int) -> ConvElement:
    """exp_*(f) = sum f^(*k) / k!, summed until a convolution power vanishes.

    Requires eps . f = 0 so that the powers are convolution-nilpotent on a
    filtered Hopf algebra; raises NotNilpotentError if no power vanishes
    by max_order.
    """
    if max_order < 1:
        raise ValueError("max_order must be positive")
    out = conv_unit(f.coalgebra, f.algebra)
    power = conv_unit(f.coalgebra, f.algebra)
    for k in range(1, max_order + 1):
        power = convolution(power, f)
        if power.map.is_zero():
            return out
        out = out.add(power.scale(Q(1, factorial(k))))
    raise NotNilpotentError(max_order)
