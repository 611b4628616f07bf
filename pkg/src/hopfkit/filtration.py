"""Coradical and coradical filtration.

The coradical C^0 is the sum of all simple subcoalgebras, computed as
the annihilator of the Jacobson radical of the dual algebra C*.  Over a
field of characteristic zero the radical of a finite-dimensional
algebra is the kernel of the trace form of the regular representation.
The filtration is the usual wedge tower
H^n = Delta^{-1}(H^0 (x) H + H (x) H^{n-1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import (
    SCALARS,
    BasedSpace,
    LinMap,
    Mat,
    Q,
    Subspace,
    _kernel_rows,
    preimage,
    tensor_space,
)
from .structures import (
    Algebra,
    Coalgebra,
    Filtration,
    HopfAlgebra,
    Report,
    subspace_tensor,
)

__all__ = [
    "dual_algebra",
    "jacobson_radical",
    "coradical",
    "coradical_filtration",
    "CoradicalFiltrationResult",
]


def dual_algebra(c: Coalgebra) -> Algebra:
    """C* with (f g)(x) = f(x_(1)) g(x_(2)) and unit eps."""
    n = c.dim
    space = BasedSpace(f"{c.space.name}*", tuple(f"{b}*" for b in c.space.basis))
    data = {}
    for j, pairs in enumerate(c.comul_pairs):
        for (p, q), d in pairs:
            data[(j, p * n + q)] = d
    mul = LinMap(tensor_space(space, space), space, Mat(n, n * n, data))
    unit = LinMap(
        SCALARS,
        space,
        Mat(n, 1, {(j, 0): v for (_, j), v in c.counit.mat.data.items()}),
    )
    return Algebra(space, mul, unit)


def jacobson_radical(a: Algebra) -> Subspace:
    """Radical of the trace form of the left regular representation.

    Equals the Jacobson radical in characteristic zero.
    """
    n = a.dim
    lmats = []
    for k in range(n):
        e = {k: Q(1)}
        lmats.append(a.left_mul_mat(e).data)
    gram = {}
    for k in range(n):
        for l in range(n):
            s = Q(0)
            for (i, j), v in lmats[k].items():
                w = lmats[l].get((j, i))
                if w:
                    s += v * w
            if s:
                gram[(k, l)] = s
    ker = _kernel_rows(Mat(n, n, gram))
    return Subspace.from_vectors(a.space, ker)


def coradical(c: Coalgebra) -> Subspace:
    """Annihilator in C of the radical of the dual algebra."""
    rad = jacobson_radical(dual_algebra(c))
    if rad.dim == 0:
        return Subspace.full(c.space)
    ker = _kernel_rows(Mat.from_rows(rad.gens))
    return Subspace.from_vectors(c.space, ker)


@dataclass(frozen=True)
class CoradicalFiltrationResult:
    coradical: Subspace
    filtration: Optional[Filtration]
    report: Optional[Report]
    diagnostic: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.diagnostic is None and self.report is not None and self.report.ok


def _is_hopf_subalgebra(h: HopfAlgebra, s: Subspace) -> Optional[str]:
    if not s.contains_vector(h.unit.apply((Q(1),))):
        return "coradical does not contain the unit"
    for a in s.gens:
        for b in s.gens:
            prod = h.mul.apply(tuple(x * y for x in a for y in b))
            if not s.contains_vector(prod):
                return "coradical is not closed under multiplication"
    for a in s.gens:
        if not s.contains_vector(h.antipode.apply(a)):
            return "coradical is not closed under the antipode"
    return None


def coradical_filtration(h: HopfAlgebra) -> CoradicalFiltrationResult:
    """Wedge filtration of H by its coradical, verified as a Hopf filtration.

    Returns a diagnostic instead of a filtration when the coradical is
    not a Hopf subalgebra (then the wedge tower need not be
    multiplicative) or when the tower stalls before exhausting H.
    """
    c = h.coalgebra
    c0 = coradical(c)
    bad = _is_hopf_subalgebra(h, c0)
    if bad is not None:
        return CoradicalFiltrationResult(c0, None, None, bad)

    hh = tensor_space(h.space, h.space)
    full = Subspace.full(h.space)
    stages = [c0]
    while stages[-1].dim < h.dim:
        t = Subspace.from_vectors(
            hh, subspace_tensor(c0, full) + subspace_tensor(full, stages[-1])
        )
        nxt = preimage(c.comul, t)
        if nxt.dim == stages[-1].dim:
            return CoradicalFiltrationResult(
                c0, None, None, "wedge tower stalled before exhausting H"
            )
        stages.append(nxt)

    filt = Filtration(tuple(stages))
    return CoradicalFiltrationResult(c0, filt, filt.verify(h))
