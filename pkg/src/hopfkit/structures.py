"""Structure-constant coalgebras, algebras and Hopf algebras.

All structures are bundles of linear maps over based spaces; the law
checkers report each axiom separately with a witness basis element on
failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional

from .linalg import (
    SCALARS,
    BasedSpace,
    LinMap,
    Mat,
    Q,
    Subspace,
    chain,
    cycles_to_perm,
    flip_map,
    ident,
    tensor_space,
)

__all__ = [
    "Coalgebra",
    "Algebra",
    "HopfAlgebra",
    "Filtration",
    "LawCheck",
    "Report",
    "check_coalgebra",
    "check_algebra",
    "check_hopf",
    "tensor_coalgebra",
    "tensor_algebra",
    "tensor_hopf",
    "hopf_power",
    "scalar_coalgebra",
    "scalar_algebra",
    "scalar_hopf",
    "maps_equal_witness",
]


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class LawCheck:
    name: str
    ok: bool
    witness: Optional[str] = None

    def as_dict(self) -> dict:
        d = {"name": self.name, "pass": self.ok}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass(frozen=True)
class Report:
    checks: tuple
    flags: dict = None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, name: str) -> LawCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        d = {"pass": self.ok, "checks": [c.as_dict() for c in self.checks]}
        if self.flags:
            d["flags"] = dict(self.flags)
        return d


def maps_equal_witness(lhs: LinMap, rhs: LinMap) -> Optional[str]:
    """None if equal; else the label of a domain basis vector where they differ."""
    diff = lhs - rhs
    if diff.is_zero():
        return None
    j = min(j for (_, j) in diff.mat.data)
    return str(lhs.domain.basis[j])


def _law(name: str, lhs: LinMap, rhs: LinMap) -> LawCheck:
    w = maps_equal_witness(lhs, rhs)
    return LawCheck(name, w is None, w)


# ---------------------------------------------------------------------------
# coalgebras


@dataclass(frozen=True)
class Coalgebra:
    """Space C with comultiplication C -> C (x) C and counit C -> R."""

    space: BasedSpace
    comul: LinMap
    counit: LinMap

    def __post_init__(self):
        n = self.space.dim
        if self.comul.mat.cols != n or self.comul.mat.rows != n * n:
            raise ValueError("comultiplication has wrong shape")
        if self.counit.mat.cols != n or self.counit.mat.rows != 1:
            raise ValueError("counit has wrong shape")

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def comul_pairs(self) -> tuple:
        """Per basis vector j: list of ((p, q), coeff) with Delta c_j = sum c_p (x) c_q."""
        n = self.dim
        out = [[] for _ in range(n)]
        for (i, j), v in self.comul.mat.data.items():
            out[j].append(((i // n, i % n), v))
        return tuple(tuple(col) for col in out)

    def is_cocommutative(self) -> bool:
        tau = flip_map([self.space, self.space], (1, 0))
        return (tau @ self.comul) == self.comul


@dataclass(frozen=True)
class Algebra:
    """Space A with multiplication A (x) A -> A and unit R -> A."""

    space: BasedSpace
    mul: LinMap
    unit: LinMap

    def __post_init__(self):
        n = self.space.dim
        if self.mul.mat.cols != n * n or self.mul.mat.rows != n:
            raise ValueError("multiplication has wrong shape")
        if self.unit.mat.cols != 1 or self.unit.mat.rows != n:
            raise ValueError("unit has wrong shape")

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def unit_vector(self) -> dict:
        return self.unit.mat.column(0)

    @cached_property
    def mul_table(self) -> tuple:
        """Sparse products: table[(j, k)] = {i: coeff} with e_j e_k = sum coeff e_i."""
        n = self.dim
        table: dict = {}
        for (i, jk), v in self.mul.mat.data.items():
            table.setdefault((jk // n, jk % n), {})[i] = v
        return table

    def multiply(self, a: dict, b: dict) -> dict:
        """Product of sparse coordinate vectors."""
        table = self.mul_table
        out: dict = {}
        for j, x in a.items():
            for k, y in b.items():
                col = table.get((j, k))
                if not col:
                    continue
                xy = x * y
                for i, c in col.items():
                    s = out.get(i, Q(0)) + xy * c
                    if s:
                        out[i] = s
                    else:
                        del out[i]
        return out

    def left_mul_mat(self, a: dict) -> Mat:
        """Matrix of left multiplication by the element ``a``."""
        n = self.dim
        data: dict = {}
        for (i, jk), v in self.mul.mat.data.items():
            j, k = jk // n, jk % n
            if j in a:
                key = (i, k)
                s = data.get(key, Q(0)) + a[j] * v
                if s:
                    data[key] = s
                else:
                    del data[key]
        return Mat(n, n, data)

    def is_commutative(self) -> bool:
        tau = flip_map([self.space, self.space], (1, 0))
        return (self.mul @ tau) == self.mul


@dataclass(frozen=True)
class HopfAlgebra:
    """Bialgebra with antipode; coalgebra and algebra share the space."""

    coalgebra: Coalgebra
    algebra: Algebra
    antipode: LinMap
    filtration: Optional["Filtration"] = None

    def __post_init__(self):
        if self.coalgebra.space.dim != self.algebra.space.dim:
            raise ValueError("coalgebra and algebra live on different spaces")
        n = self.space.dim
        if self.antipode.mat.rows != n or self.antipode.mat.cols != n:
            raise ValueError("antipode has wrong shape")

    @property
    def space(self) -> BasedSpace:
        return self.coalgebra.space

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def comul(self) -> LinMap:
        return self.coalgebra.comul

    @property
    def counit(self) -> LinMap:
        return self.coalgebra.counit

    @property
    def mul(self) -> LinMap:
        return self.algebra.mul

    @property
    def unit(self) -> LinMap:
        return self.algebra.unit


@dataclass(frozen=True)
class Filtration:
    """Increasing chain of subspaces exhausting a Hopf algebra."""

    subspaces: tuple

    def __len__(self) -> int:
        return len(self.subspaces)

    def stage(self, n: int) -> Subspace:
        """Stage n, saturating at the top stage."""
        return self.subspaces[min(n, len(self.subspaces) - 1)]

    def verify(self, hopf: HopfAlgebra) -> Report:
        checks = []
        top = self.subspaces[-1]
        increasing = all(
            self.subspaces[i + 1].contains(self.subspaces[i])
            for i in range(len(self.subspaces) - 1)
        )
        checks.append(LawCheck("increasing-chain", increasing))
        checks.append(LawCheck("exhausts", top.dim == hopf.dim))
        checks.append(_filtration_mul_check(self, hopf))
        checks.append(_filtration_comul_check(self, hopf))
        antipode_ok = all(
            _map_subspace(hopf.antipode, s).dim == 0 or s.contains(_map_subspace(hopf.antipode, s))
            for s in self.subspaces
        )
        checks.append(LawCheck("antipode-stable", antipode_ok))
        return Report(tuple(checks))


def _map_subspace(f: LinMap, s: Subspace) -> Subspace:
    return Subspace.from_vectors(f.codomain, [f.apply(g) for g in s.gens])


def _kron_vec(a, b):
    return tuple(x * y for x in a for y in b)


def subspace_tensor(left: Subspace, right: Subspace) -> list:
    """Generators of left (x) right inside the tensor of the ambients."""
    return [_kron_vec(a, b) for a in left.gens for b in right.gens]


def _filtration_mul_check(filt: Filtration, hopf: HopfAlgebra) -> LawCheck:
    top = len(filt.subspaces) - 1
    for p in range(len(filt.subspaces)):
        for q in range(len(filt.subspaces)):
            target = filt.stage(min(p + q, top))
            for a in filt.subspaces[p].gens:
                for b in filt.subspaces[q].gens:
                    prod = hopf.mul.apply(_kron_vec(a, b))
                    if not target.contains_vector(prod):
                        return LawCheck("multiplicative", False, f"H^{p} * H^{q}")
    return LawCheck("multiplicative", True)


def _filtration_comul_check(filt: Filtration, hopf: HopfAlgebra) -> LawCheck:
    hh = tensor_space(hopf.space, hopf.space)
    for n, stage in enumerate(filt.subspaces):
        gens = []
        for p in range(n + 1):
            gens.extend(subspace_tensor(filt.stage(p), filt.stage(n - p)))
        target = Subspace.from_vectors(hh, gens) if gens else Subspace.zero(hh)
        for g in stage.gens:
            if not target.contains_vector(hopf.comul.apply(g)):
                return LawCheck("comultiplicative", False, f"H^{n}")
    return LawCheck("comultiplicative", True)


# ---------------------------------------------------------------------------
# law checks


def _unit_iso_right(space: BasedSpace) -> LinMap:
    """Canonical iso V -> V (x) R."""
    cod = tensor_space(space, SCALARS)
    return LinMap(space, cod, Mat.identity(space.dim))


def _unit_iso_left(space: BasedSpace) -> LinMap:
    cod = tensor_space(SCALARS, space)
    return LinMap(space, cod, Mat.identity(space.dim))


def check_coalgebra(c: Coalgebra) -> Report:
    sp = c.space
    i = ident(sp)
    coassoc = _law(
        "coassociativity",
        (c.comul.tensor(i)) @ c.comul,
        (i.tensor(c.comul)) @ c.comul,
    )
    left_counit = _law("counit-left", (c.counit.tensor(i)) @ c.comul, _unit_iso_left(sp))
    right_counit = _law("counit-right", (i.tensor(c.counit)) @ c.comul, _unit_iso_right(sp))
    return Report(
        (coassoc, left_counit, right_counit),
        flags={"cocommutative": c.is_cocommutative()},
    )


def check_algebra(a: Algebra) -> Report:
    sp = a.space
    i = ident(sp)
    assoc = _law(
        "associativity",
        a.mul @ (a.mul.tensor(i)),
        a.mul @ (i.tensor(a.mul)),
    )
    # unit laws: mu . (eta (x) id) and mu . (id (x) eta) as maps on V via the unit isos
    left_unit = _law("unit-left", a.mul @ (a.unit.tensor(i)) @ _unit_iso_left(sp), i)
    right_unit = _law("unit-right", a.mul @ (i.tensor(a.unit)) @ _unit_iso_right(sp), i)
    return Report(
        (assoc, left_unit, right_unit),
        flags={"commutative": a.is_commutative()},
    )


def check_hopf(h: HopfAlgebra) -> Report:
    co = check_coalgebra(h.coalgebra)
    al = check_algebra(h.algebra)
    sp = h.space
    i = ident(sp)
    tau23 = flip_map([sp] * 4, cycles_to_perm(4, (2, 3)))
    comul_mult = _law(
        "bialgebra-comul-multiplicative",
        h.comul @ h.mul,
        chain(h.mul.tensor(h.mul), tau23, h.comul.tensor(h.comul)),
    )
    comul_unit = _law("bialgebra-comul-unital", h.comul @ h.unit, h.unit.tensor(h.unit))
    counit_mult = _law(
        "bialgebra-counit-multiplicative",
        h.counit @ h.mul,
        # counit (x) counit lands in R (x) R = R
        LinMap(
            tensor_space(sp, sp),
            SCALARS,
            (h.counit.tensor(h.counit)).mat,
        ),
    )
    counit_unit = _law("bialgebra-counit-unital", h.counit @ h.unit, ident(SCALARS))
    e = h.unit @ h.counit
    antipode_left = _law("antipode-left", chain(h.mul, h.antipode.tensor(i), h.comul), e)
    antipode_right = _law("antipode-right", chain(h.mul, i.tensor(h.antipode), h.comul), e)
    checks = co.checks + al.checks + (
        comul_mult,
        comul_unit,
        counit_mult,
        counit_unit,
        antipode_left,
        antipode_right,
    )
    flags = {
        "commutative": h.algebra.is_commutative(),
        "cocommutative": h.coalgebra.is_cocommutative(),
    }
    if h.filtration is not None:
        checks = checks + h.filtration.verify(h).checks
    return Report(checks, flags=flags)


# ---------------------------------------------------------------------------
# tensor constructions and scalar structures


def tensor_coalgebra(c: Coalgebra, d: Coalgebra) -> Coalgebra:
    sp = tensor_space(c.space, d.space)
    nc, nd = c.dim, d.dim
    # Delta(a (x) b) = (a1 (x) b1) (x) (a2 (x) b2); built directly to keep sparsity
    data: dict = {}
    d_pairs = d.comul_pairs
    for jc, c_col in enumerate(c.comul_pairs):
        for jd, d_col in enumerate(d_pairs):
            col = jc * nd + jd
            for (p1, q1), v1 in c_col:
                for (p2, q2), v2 in d_col:
                    row = (p1 * nd + p2) * (nc * nd) + (q1 * nd + q2)
                    data[(row, col)] = v1 * v2
    comul = LinMap(sp, tensor_space(sp, sp), Mat(sp.dim * sp.dim, sp.dim, data))
    counit = LinMap(sp, SCALARS, (c.counit.tensor(d.counit)).mat)
    return Coalgebra(sp, comul, counit)


def tensor_algebra(a: Algebra, b: Algebra) -> Algebra:
    sp = tensor_space(a.space, b.space)
    na, nb = a.dim, b.dim
    n = na * nb
    data: dict = {}
    for (ia, jka), va in a.mul.mat.data.items():
        ja, ka = jka // na, jka % na
        for (ib, jkb), vb in b.mul.mat.data.items():
            jb, kb = jkb // nb, jkb % nb
            row = ia * nb + ib
            col = (ja * nb + jb) * n + (ka * nb + kb)
            data[(row, col)] = va * vb
    mul = LinMap(tensor_space(sp, sp), sp, Mat(n, n * n, data))
    unit = LinMap(SCALARS, sp, a.unit.mat.kron(b.unit.mat))
    return Algebra(sp, mul, unit)


def tensor_hopf(g: HopfAlgebra, h: HopfAlgebra) -> HopfAlgebra:
    co = tensor_coalgebra(g.coalgebra, h.coalgebra)
    al = tensor_algebra(g.algebra, h.algebra)
    antipode = LinMap(co.space, co.space, g.antipode.mat.kron(h.antipode.mat))
    return HopfAlgebra(co, al, antipode)


def scalar_coalgebra() -> Coalgebra:
    comul = LinMap(SCALARS, tensor_space(SCALARS, SCALARS), Mat.identity(1))
    counit = LinMap.identity(SCALARS)
    return Coalgebra(SCALARS, comul, counit)


def scalar_algebra() -> Algebra:
    mul = LinMap(tensor_space(SCALARS, SCALARS), SCALARS, Mat.identity(1))
    unit = LinMap.identity(SCALARS)
    return Algebra(SCALARS, mul, unit)


def scalar_hopf() -> HopfAlgebra:
    return HopfAlgebra(scalar_coalgebra(), scalar_algebra(), LinMap.identity(SCALARS))


def hopf_power(h: HopfAlgebra, q: int) -> HopfAlgebra:
    """H^(x)q as a Hopf algebra; q = 0 gives the scalars."""
    if q < 0:
        raise ValueError("tensor power must be nonnegative")
    if q == 0:
        return scalar_hopf()
    out = h
    for _ in range(q - 1):
        out = tensor_hopf(out, h)
    return out
