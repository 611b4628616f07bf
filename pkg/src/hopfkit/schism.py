"""Cocharacters, coderivations, and the schism complex.

Cocharacters are the convolution-invertible maps phi: C -> H compatible
with the coaction (counit, coaction, and comodule conditions);
coderivations are their infinitesimal versions.  The schism complex has
cochains Gamma_0^q = counitary convolution-invertible maps C -> H^(x)q
and an alternating-convolution differential D with D . D = e whenever H
is commutative and C is cocommutative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import List, Optional

from .coactions import Coaction, embed_unit_right
from .cocenter import Cocenter, cocenter
from .convolution import ConvElement, conv_unit, convolution, convolution_inverse
from .linalg import (
    LinMap,
    Mat,
    Q,
    Subspace,
    _kernel_rows,
    chain,
    cycles_to_perm,
    flip_map,
    ident,
)
from .structures import (
    HopfAlgebra,
    LawCheck,
    Report,
    hopf_power,
    maps_equal_witness,
    scalar_algebra,
)

__all__ = [
    "SchismCochain",
    "SchismNeedsCommError",
    "InnerNotInvertibleError",
    "NonInvertibleCochainError",
    "check_cocharacter",
    "cocharacter_inverse",
    "check_coderivation",
    "exp_coderivation_is_cocharacter",
    "inner_cocharacter",
    "schism_differential",
    "check_dd",
    "check_d_homomorphism",
    "homoschism0",
    "cohomologous",
    "kernel_d0_functionals",
    "random_gamma0_cochain",
    "in_gamma0",
]


class SchismNeedsCommError(ValueError):
    """The schism differential needs H commutative and C cocommutative."""

    code = "SCHISM_NEEDS_COMM"


class InnerNotInvertibleError(ValueError):
    """The delta functional of the chosen cocenter basis element is not
    convolution invertible."""

    code = "INNER_NOT_INVERTIBLE"


class NonInvertibleCochainError(ValueError):
    """A schism cochain was not convolution invertible."""

    code = "INTERNAL_NONINVERTIBLE"


@lru_cache(maxsize=None)
def _power(h: HopfAlgebra, q: int) -> HopfAlgebra:
    return hopf_power(h, q)


@dataclass(frozen=True)
class SchismCochain:
    """An element of Gamma_0^q(C, H): a map C -> H^(x)q.

    The convolution inverse is carried along when it is structurally
    known, so iterated differentials never fall back to the solver.
    """

    degree: int
    element: ConvElement
    inverse: Optional[ConvElement] = field(default=None, compare=False)

    def inv(self) -> ConvElement:
        if self.inverse is not None:
            return self.inverse
        x = convolution_inverse(self.element)
        if x is None:
            raise NonInvertibleCochainError("cochain has no convolution inverse")
        return x


def in_gamma0(f: SchismCochain, a: Coaction) -> bool:
    """Membership in Gamma_0^q: counitary (vacuous at q = 0) and invertible."""
    if f.degree > 0:
        hq = _power(a.hopf, f.degree)
        if (hq.counit @ f.element.map) != a.coalgebra.counit:
            return False
    try:
        f.inv()
    except NonInvertibleCochainError:
        return False
    return True


def _mixed_term(a: Coaction, alpha: LinMap, beta: LinMap) -> LinMap:
    """c |-> alpha(c_(1)^(0)) (x) c_(1)^(1) beta(c_(2)), a map C -> H (x) H."""
    h = a.hopf
    ih = ident(h.space)
    return chain(
        ih.tensor(h.mul),
        ((alpha.tensor(ih)) @ a.delta).tensor(beta),
        a.coalgebra.comul,
    )


def _comodule_condition(a: Coaction, phi: LinMap) -> LawCheck:
    """(id (x) mu) . (delta (x) phi) . Delta = same with phi moved left."""
    c, h = a.coalgebra, a.hopf
    ic = ident(c.space)
    lhs = chain(ic.tensor(h.mul), a.delta.tensor(phi), c.comul)
    rhs = chain(
        ic.tensor(h.mul),
        flip_map([h.space, c.space, h.space], cycles_to_perm(3, (1, 2))),
        phi.tensor(a.delta),
        c.comul,
    )
    w = maps_equal_witness(lhs, rhs)
    return LawCheck("comodule", w is None, w)


def _as_conv(a: Coaction, phi) -> ConvElement:
    if isinstance(phi, ConvElement):
        return phi
    return ConvElement(a.coalgebra, a.hopf.algebra, phi)


def check_cocharacter(phi, a: Coaction) -> Report:
    phi = _as_conv(a, phi)
    c, h = a.coalgebra, a.hopf
    w1 = maps_equal_witness(
        LinMap(c.space, c.counit.codomain, (h.counit @ phi.map).mat), c.counit
    )
    counit = LawCheck("counit", w1 is None, w1)
    w2 = maps_equal_witness(h.comul @ phi.map, _mixed_term(a, phi.map, phi.map))
    coaction_cond = LawCheck("coaction", w2 is None, w2)
    comodule = _comodule_condition(a, phi.map)
    invertible = LawCheck("invertible", convolution_inverse(phi) is not None)
    return Report((counit, coaction_cond, comodule, invertible))


def cocharacter_inverse(phi, a: Coaction) -> ConvElement:
    """phi^(*-1)(c) = S(phi(c^(0))) c^(1), verified two-sided and a cocharacter."""
    phi = _as_conv(a, phi)
    h = a.hopf
    inv_map = chain(h.mul, (h.antipode @ phi.map).tensor(ident(h.space)), a.delta)
    psi = ConvElement(a.coalgebra, h.algebra, inv_map)
    e = conv_unit(a.coalgebra, h.algebra)
    if convolution(phi, psi) != e or convolution(psi, phi) != e:
        raise RuntimeError("formula inverse is not a two-sided convolution inverse")
    if not check_cocharacter(psi, a).ok:
        raise RuntimeError("formula inverse is not a cocharacter")
    return psi


def check_coderivation(phi, a: Coaction) -> Report:
    phi = _as_conv(a, phi)
    c, h = a.coalgebra, a.hopf
    e = conv_unit(c, h.algebra)
    counit_zero = LawCheck(
        "counit-zero",
        (h.counit @ phi.map).is_zero(),
        None if (h.counit @ phi.map).is_zero() else "eps . phi != 0",
    )
    rhs = _mixed_term(a, e.map, phi.map) + _mixed_term(a, phi.map, e.map)
    w2 = maps_equal_witness(h.comul @ phi.map, rhs)
    infinitesimal = LawCheck("infinitesimal-coaction", w2 is None, w2)
    comodule = _comodule_condition(a, phi.map)
    # a coderivation is never convolution invertible when it is zero; the
    # clause is reported separately and not folded into the others
    invertible = LawCheck("invertible", convolution_inverse(phi) is not None)
    return Report((counit_zero, infinitesimal, comodule, invertible))


def exp_coderivation_is_cocharacter(phi, a: Coaction, max_order: int = 24) -> Report:
    """exp_*(phi) is a cocharacter, plus the binomial identity
    Delta_H . phi^(*n) = sum_k C(n,k) F(phi^(*k), phi^(*(n-k))) up to the
    nilpotency order."""
    from .convolution import convolution_exponential, convolution_power

    phi = _as_conv(a, phi)
    h = a.hopf
    ex = convolution_exponential(phi, max_order)
    order = 1
    power = phi
    while not power.map.is_zero():
        power = convolution(power, phi)
        order += 1
    powers = [conv_unit(phi.coalgebra, phi.algebra)]
    for _ in range(order):
        powers.append(convolution(powers[-1], phi))
    binom_witness = None
    for n in range(1, order + 1):
        lhs = h.comul @ powers[n].map
        rhs = None
        for k in range(n + 1):
            term = _mixed_term(a, powers[k].map, powers[n - k].map).scale(Q(comb(n, k)))
            rhs = term if rhs is None else rhs + term
        w = maps_equal_witness(lhs, rhs)
        if w is not None:
            binom_witness = f"n={n} at {w}"
            break
    checks = (
        LawCheck("exp-is-cocharacter", check_cocharacter(ex, a).ok),
        LawCheck("binomial-identity", binom_witness is None, binom_witness),
    )
    return Report(checks)


def inner_cocharacter(a: Coaction, b, z: Optional[Cocenter] = None) -> ConvElement:
    """inj_co(b) = ((delta_b (x) id) . delta) * (delta_b (x) 1)^(*-1).

    delta_b is the dual-basis functional of the cocenter basis element b,
    transported to C along the cocenter projection.
    """
    if z is None:
        z = cocenter(a.coalgebra)
    idx = z.quotient.space.index(b) if not isinstance(b, int) else b
    h = a.hopf
    c = a.coalgebra
    n, m = c.dim, h.dim
    row = Mat(1, n, {
        (0, j): v for (i, j), v in z.projection.mat.data.items() if i == idx
    })
    functional = ConvElement(
        c, scalar_algebra(), LinMap(c.space, scalar_algebra().space, row)
    )
    finv = convolution_inverse(functional)
    if finv is None:
        raise InnerNotInvertibleError(
            f"dual-basis functional of {b!r} is not convolution invertible"
        )
    first = ConvElement(
        c, h.algebra,
        LinMap(c.space, h.space, (row.kron(Mat.identity(m))) @ a.delta.mat),
    )
    second_inv = ConvElement(
        c, h.algebra, LinMap(c.space, h.space, h.unit.mat @ finv.map.mat)
    )
    return convolution(first, second_inv)


def _middle_face(h: HopfAlgebra, q1: int, i: int) -> Mat:
    """id^(i-1) (x) Delta_H (x) id^(q1-i) as a matrix on H^(x)q1."""
    m = h.dim
    return (
        Mat.identity(m ** (i - 1))
        .kron(h.comul.mat)
        .kron(Mat.identity(m ** (q1 - i)))
    )


def _differential_factors(a: Coaction, f_mat: Mat, q1: int) -> List[Mat]:
    """Matrices of the q1+2 convolution factors of D applied to a map
    with matrix f_mat, in order; signs are handled by the caller.

    The coaction leg of the first factor is rotated to the front,
    c |-> c^(1) (x) f(c^(0)); with the trailing (f (x) 1) face this is
    the factor ordering under which D . D = e holds (the committed
    resolution of the +-1 ... -+1 ambiguity).
    """
    h = a.hopf
    m = h.dim
    first = (f_mat.kron(Mat.identity(m))) @ a.delta.mat
    if q1 > 0:
        rot = flip_map(
            [h.space] * (q1 + 1), tuple(range(1, q1 + 1)) + (0,)
        )
        first = rot.mat @ first
    facs = [first]
    for i in range(1, q1 + 1):
        facs.append(_middle_face(h, q1, i) @ f_mat)
    facs.append(f_mat.kron(h.unit.mat))
    return facs


def schism_differential(f: SchismCochain, a: Coaction) -> SchismCochain:
    """D^q(f) for f of degree q: the alternating convolution product
    ((f (x) id) . delta) * (Delta_H^1 . f)^(*-1) * ... * (f (x) 1)^(+-1),
    with exponents +1, -1, +1, ... across all q+2 factors."""
    if not a.hopf.algebra.is_commutative() or not a.coalgebra.is_cocommutative():
        raise SchismNeedsCommError(
            "schism differential needs H commutative and C cocommutative"
        )
    q1 = f.degree
    c = a.coalgebra
    hq = _power(a.hopf, q1 + 1)
    finv = f.inv()
    plus = _differential_factors(a, f.element.map.mat, q1)
    minus = _differential_factors(a, finv.map.mat, q1)

    def wrap(mat):
        return ConvElement(c, hq.algebra, LinMap(c.space, hq.space, mat))

    out = None
    out_inv = None
    for k in range(q1 + 2):
        fac = wrap(plus[k] if k % 2 == 0 else minus[k])
        fac_inv = wrap(minus[k] if k % 2 == 0 else plus[k])
        out = fac if out is None else convolution(out, fac)
        out_inv = fac_inv if out_inv is None else convolution(out_inv, fac_inv)
    return SchismCochain(q1 + 1, out, out_inv)


def check_dd(f: SchismCochain, a: Coaction) -> bool:
    d1 = schism_differential(f, a)
    d2 = schism_differential(d1, a)
    return d2.element == conv_unit(a.coalgebra, d2.element.algebra)


def check_d_homomorphism(f: SchismCochain, g: SchismCochain, a: Coaction) -> bool:
    """D(f * g) = D(f) * D(g) for cochains of equal degree."""
    if f.degree != g.degree:
        raise ValueError("cochains have different degrees")
    fg = SchismCochain(
        f.degree,
        convolution(f.element, g.element),
        convolution(f.inv(), g.inv()),
    )
    lhs = schism_differential(fg, a)
    rhs = convolution(
        schism_differential(f, a).element, schism_differential(g, a).element
    )
    return lhs.element == rhs


def kernel_d0_functionals(a: Coaction) -> Subspace:
    """Functionals f with (f (x) id) . delta = f (x) 1, the linear
    condition equivalent to D^0(f) = e for invertible f."""
    c, h = a.coalgebra, a.hopf
    n, m = c.dim, h.dim
    # unknowns f_0..f_{n-1}; equations indexed by (c_j, h_i)
    rows = {}
    for (r, j), v in a.delta.mat.data.items():
        p, i = divmod(r, m)
        key = (j, i)
        rows.setdefault(key, [Q(0)] * n)[p] += v
    for j in range(n):
        for i, v in h.algebra.unit_vector.items():
            rows.setdefault((j, i), [Q(0)] * n)[j] -= v
    mat = Mat.from_rows([rows[k] for k in sorted(rows)]) if rows else Mat(0, n)
    from .filtration import dual_algebra

    dual_space = dual_algebra(c).space
    return Subspace.from_vectors(dual_space, _kernel_rows(mat))


def homoschism0(a: Coaction) -> Subspace:
    """S^0 = coinvariants of the coaction induced on the cocenter Z(C).

    Requires delta to descend: delta(K) <= K (x) H for the cocenter
    coideal K.
    """
    from .coactions import coinvariants
    from .linalg import tensor_space
    from .structures import subspace_tensor

    c, h = a.coalgebra, a.hopf
    z = cocenter(c)
    k = z.coideal
    full_h = Subspace.full(h.space)
    kh = Subspace.from_vectors(
        tensor_space(c.space, h.space), subspace_tensor(k, full_h)
    )
    for g in k.gens:
        if not kh.contains_vector(a.delta.apply(g)):
            raise ValueError("coaction does not descend to the cocenter")
    ih = Mat.identity(h.dim)
    delta_z = LinMap(
        z.quotient.space,
        tensor_space(z.quotient.space, h.space),
        (z.projection.mat.kron(ih)) @ a.delta.mat @ z.section.mat,
    )
    return coinvariants(Coaction(z.quotient, h, delta_z))


def cohomologous(phi, psi, a: Coaction, max_word_length: int = 4) -> Optional[bool]:
    """Whether phi * psi^(*-1) lies in the subgroup generated by the
    inner cocharacters, by bounded word search.

    Returns None (unknown) if the bound is hit before the subgroup
    saturates.
    """
    phi, psi = _as_conv(a, phi), _as_conv(a, psi)
    if not check_cocharacter(phi, a).ok or not check_cocharacter(psi, a).ok:
        raise ValueError("both arguments must be cocharacters")
    d = convolution(phi, cocharacter_inverse(psi, a))
    e = conv_unit(a.coalgebra, a.hopf.algebra)
    z = cocenter(a.coalgebra)
    gens = []
    for b in z.quotient.space.basis:
        try:
            g = inner_cocharacter(a, b, z)
        except InnerNotInvertibleError:
            continue
        if g != e:
            gens.append(g)
            gens.append(cocharacter_inverse(g, a))
    if not gens:
        return d == e
    seen = {e.map: e}
    frontier = [e]
    for _ in range(max_word_length):
        nxt = []
        for w in frontier:
            for g in gens:
                wg = convolution(w, g)
                if wg.map not in seen:
                    seen[wg.map] = wg
                    nxt.append(wg)
        if not nxt:
            return d.map in seen
        frontier = nxt
    if d.map in seen:
        return True
    return None


def random_gamma0_cochain(
    a: Coaction, q: int, rng, spread: int = 2, max_tries: int = 64
) -> SchismCochain:
    """A seeded random element of Gamma_0^q: unit cochain plus a sparse
    counit-free perturbation, retried until convolution invertible."""
    c = a.coalgebra
    hq = _power(a.hopf, q)
    n, m = c.dim, hq.dim
    e = conv_unit(c, hq.algebra)
    unit_vec = hq.algebra.unit_vector
    eps_row = {j: v for (_, j), v in hq.counit.mat.data.items()}
    for _ in range(max_tries):
        data = dict(e.map.mat.data)
        if q == 0:
            # counitarity is vacuous in degree 0: any invertible functional
            data = {(0, j): Q(rng.randint(1, 5)) for j in range(n)}
        for j in range(n if q else 0):
            for _ in range(spread):
                i = rng.randrange(m)
                coeff = Q(rng.randint(-3, 3))
                if not coeff:
                    continue
                # add coeff * (b_i - eps(b_i) 1) so counitarity is kept
                data[(i, j)] = data.get((i, j), Q(0)) + coeff
                ei = eps_row.get(i, Q(0))
                if ei:
                    for u, v in unit_vec.items():
                        data[(u, j)] = data.get((u, j), Q(0)) - coeff * ei * v
        mat = Mat(m, n, {k: v for k, v in data.items() if v})
        f = ConvElement(c, hq.algebra, LinMap(c.space, hq.space, mat))
        finv = convolution_inverse(f)
        if finv is not None:
            return SchismCochain(q, f, finv)
    raise RuntimeError("failed to sample an invertible cochain")
