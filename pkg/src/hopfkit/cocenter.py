"""Cocenter of a coalgebra.

Z(C) is the largest cocommutative quotient coalgebra: C / K where K is
the smallest coideal whose quotient kills Delta - tau . Delta.  K is
grown from the left-factor support of im(Delta - tau . Delta) by a
closure loop that restores the coideal condition
Delta(K) <= K (x) C + C (x) K.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    BasedSpace,
    LinMap,
    Mat,
    Q,
    Subspace,
    chain,
    cycles_to_perm,
    flip_map,
    ident,
    image,
    tensor_space,
)
from .structures import Coalgebra, subspace_tensor

__all__ = ["Cocenter", "cocenter", "is_cocentral"]


@dataclass(frozen=True)
class Cocenter:
    coalgebra: Coalgebra
    coideal: Subspace
    quotient: Coalgebra
    projection: LinMap
    section: LinMap


def _factor_supports(n: int, vec) -> list:
    """Left and right factor supports of a vector in C (x) C."""
    out = []
    for q in range(n):
        left = [vec[p * n + q] for p in range(n)]
        if any(left):
            out.append(left)
    for p in range(n):
        right = [vec[p * n + q] for q in range(n)]
        if any(right):
            out.append(right)
    return out


def is_cocentral(f: LinMap, c: Coalgebra) -> bool:
    """True iff (f (x) id) . Delta = (f (x) id) . tau . Delta."""
    sp = c.space
    tau = flip_map([sp, sp], cycles_to_perm(2, (1, 2)))
    ic = ident(sp)
    fi = f.tensor(ic)
    return (fi @ c.comul) == chain(fi, tau, c.comul)


def cocenter(c: Coalgebra) -> Cocenter:
    n = c.dim
    sp = c.space
    hh = tensor_space(sp, sp)
    full = Subspace.full(sp)
    tau = flip_map([sp, sp], cycles_to_perm(2, (1, 2)))

    seeds = []
    for g in image(c.comul - tau @ c.comul).gens:
        seeds.extend(_factor_supports(n, g))
    k = Subspace.from_vectors(sp, seeds)

    while True:
        t = Subspace.from_vectors(
            hh, subspace_tensor(k, full) + subspace_tensor(full, k)
        )
        grown = []
        for g in k.gens:
            r = t.reduce_vector(c.comul.apply(g))
            if any(r):
                grown.extend(_factor_supports(n, r))
        if not grown:
            break
        k2 = k + Subspace.from_vectors(sp, grown)
        if k2.dim == k.dim:
            raise RuntimeError("coideal closure stalled without absorbing residuals")
        k = k2

    for g in k.gens:
        if any(c.counit.apply(g)):
            raise RuntimeError("cocenter coideal is not killed by the counit")

    pivots = [next(i for i, v in enumerate(g) if v) for g in k.gens]
    free = [j for j in range(n) if j not in pivots]
    zspace = BasedSpace(f"Z({sp.name})", tuple(sp.basis[j] for j in free))

    pi_cols = []
    for j in range(n):
        e = [Q(0)] * n
        e[j] = Q(1)
        r = k.reduce_vector(e)
        pi_cols.append({i: r[f] for i, f in enumerate(free) if r[f]})
    pi = LinMap(sp, zspace, Mat.from_columns(pi_cols, len(free)))
    sigma = LinMap(
        zspace, sp, Mat(n, len(free), {(f, j): Q(1) for j, f in enumerate(free)})
    )

    quotient = Coalgebra(
        zspace,
        chain(pi.tensor(pi), c.comul, sigma),
        c.counit @ sigma,
    )

    if not quotient.is_cocommutative:
        raise RuntimeError("cocenter quotient is not cocommutative")
    if (quotient.comul @ pi) != (pi.tensor(pi) @ c.comul):
        raise RuntimeError("projection does not respect comultiplication")
    if (quotient.counit @ pi) != c.counit:
        raise RuntimeError("projection does not respect the counit")
    if not is_cocentral(pi, c):
        raise RuntimeError("projection onto the cocenter is not cocentral")

    return Cocenter(c, k, quotient, pi, sigma)
