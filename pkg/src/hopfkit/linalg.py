"""Exact linear algebra over the rationals.

Based spaces with named bases, sparse matrices of ``Fraction`` entries,
tensor products with a fixed flattening convention (left factor most
significant), factor permutations, and canonical reduced-echelon
subspaces.  Everything downstream is a composition of these pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

Q = Fraction

__all__ = [
    "Q",
    "BasedSpace",
    "Mat",
    "LinMap",
    "Subspace",
    "SCALARS",
    "tensor_space",
    "tensor_map",
    "flip_map",
    "cycles_to_perm",
    "kernel",
    "image",
    "solve",
    "preimage",
    "chain",
    "ident",
    "rref",
]


class DimensionMismatch(ValueError):
    """Raised when matrix or space dimensions are inconsistent."""


# ---------------------------------------------------------------------------
# based spaces


@dataclass(frozen=True)
class BasedSpace:
    """A finite-dimensional Q-vector space with an ordered, named basis.

    ``arity`` counts flattened tensor factors; labels of a space with
    arity > 1 are tuples of atomic labels.
    """

    name: str
    basis: tuple
    arity: int = 1

    def __post_init__(self):
        if len(set(self.basis)) != len(self.basis):
            raise ValueError(f"basis labels of {self.name!r} are not distinct")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label) -> int:
        return self.basis.index(label)

    def __repr__(self):
        return f"BasedSpace({self.name!r}, dim={self.dim})"


SCALARS = BasedSpace("R", ("1",))


def _flat_label(space: BasedSpace, label) -> tuple:
    return tuple(label) if space.arity > 1 else (label,)


def tensor_space(v: BasedSpace, w: BasedSpace) -> BasedSpace:
    """Tensor product with flattened tuple labels, left factor most significant."""
    basis = tuple(
        _flat_label(v, a) + _flat_label(w, b) for a in v.basis for b in w.basis
    )
    return BasedSpace(f"{v.name}*{w.name}", basis, v.arity + w.arity)


# ---------------------------------------------------------------------------
# sparse exact matrices


class Mat:
    """Sparse matrix over Q.  Entries are stored without zeros, so equality
    of the entry dicts is equality of matrices."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Optional[Mapping] = None):
        self.rows = rows
        self.cols = cols
        clean = {}
        if data:
            for (i, j), v in data.items():
                v = Q(v)
                if v:
                    if not (0 <= i < rows and 0 <= j < cols):
                        raise DimensionMismatch(f"entry ({i},{j}) outside {rows}x{cols}")
                    clean[(i, j)] = v
        self.data = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, {(i, i): Q(1) for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        data = {}
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise DimensionMismatch("ragged rows")
            for j, v in enumerate(row):
                if v:
                    data[(i, j)] = Q(v)
        return cls(nr, nc, data)

    @classmethod
    def from_columns(cls, cols: Sequence[Mapping[int, Fraction]], rows: int) -> "Mat":
        data = {}
        for j, col in enumerate(cols):
            for i, v in col.items():
                if v:
                    data[(i, j)] = Q(v)
        return cls(rows, len(cols), data)

    # -- basic queries ------------------------------------------------

    def to_rows(self) -> list:
        out = [[Q(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.data.items():
            out[i][j] = v
        return out

    def column(self, j: int) -> dict:
        return {i: v for (i, jj), v in self.data.items() if jj == j}

    def columns(self) -> list:
        cols = [dict() for _ in range(self.cols)]
        for (i, j), v in self.data.items():
            cols[j][i] = v
        return cols

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.data.items())))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, nnz={len(self.data)})"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        data = dict(self.data)
        for k, v in other.data.items():
            s = data.get(k, Q(0)) + v
            if s:
                data[k] = s
            else:
                data.pop(k, None)
        return Mat(self.rows, self.cols, data)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, {k: -v for k, v in self.data.items()})

    def scale(self, c) -> "Mat":
        c = Q(c)
        if not c:
            return Mat.zero(self.rows, self.cols)
        return Mat(self.rows, self.cols, {k: c * v for k, v in self.data.items()})

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row: dict = {}
        for (k, j), v in other.data.items():
            by_row.setdefault(k, []).append((j, v))
        acc: dict = {}
        for (i, k), a in self.data.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                s = acc.get(key, Q(0)) + a * b
                if s:
                    acc[key] = s
                else:
                    del acc[key]
        return Mat(self.rows, other.cols, acc)

    def kron(self, other: "Mat") -> "Mat":
        data = {}
        r2, c2 = other.rows, other.cols
        for (i1, j1), a in self.data.items():
            for (i2, j2), b in other.data.items():
                data[(i1 * r2 + i2, j1 * c2 + j2)] = a * b
        return Mat(self.rows * r2, self.cols * c2, data)

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows, {(j, i): v for (i, j), v in self.data.items()})

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        out = [Q(0)] * self.rows
        for (i, j), v in self.data.items():
            if vec[j]:
                out[i] += v * vec[j]
        return tuple(out)

    def _same_shape(self, other: "Mat"):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


# ---------------------------------------------------------------------------
# gaussian elimination


def rref(rows: Iterable[Sequence]) -> tuple:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(map(Q, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Q(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r]], pivots


def _kernel_rows(mat: Mat) -> list:
    """Canonical basis (as RREF rows) of the null space of ``mat``."""
    reduced, pivots = rref(mat.to_rows())
    free = [c for c in range(mat.cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Q(0)] * mat.cols
        vec[f] = Q(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    reduced_basis, _ = rref(basis)
    return [tuple(r) for r in reduced_basis]


def _solve_rows(mat: Mat, target: Sequence) -> Optional[tuple]:
    """One solution of ``mat @ x = target`` or None."""
    if len(target) != mat.rows:
        raise DimensionMismatch("target length does not match row count")
    aug = [row + [Q(t)] for row, t in zip(mat.to_rows(), target)]
    reduced, pivots = rref(aug)
    x = [Q(0)] * mat.cols
    for row, p in zip(reduced, pivots):
        if p == mat.cols:
            return None  # inconsistent: pivot in augmented column
        x[p] = row[-1]
    return tuple(x)


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """Subspace of an ambient based space, stored as canonical RREF rows."""

    ambient: BasedSpace
    gens: tuple = field(default=())

    @classmethod
    def from_vectors(cls, ambient: BasedSpace, vectors: Iterable[Sequence]) -> "Subspace":
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient.dim:
                raise DimensionMismatch("generator length does not match ambient dim")
        reduced, _ = rref(vectors)
        return cls(ambient, tuple(tuple(r) for r in reduced))

    @classmethod
    def zero(cls, ambient: BasedSpace) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: BasedSpace) -> "Subspace":
        eye = [[Q(1) if i == j else Q(0) for j in range(ambient.dim)] for i in range(ambient.dim)]
        return cls(ambient, tuple(tuple(r) for r in eye))

    @property
    def dim(self) -> int:
        return len(self.gens)

    def contains_vector(self, vec: Sequence) -> bool:
        return all(x == 0 for x in self.reduce_vector(vec))

    def reduce_vector(self, vec: Sequence) -> tuple:
        """Residue of ``vec`` after eliminating the pivot coordinates."""
        v = list(map(Q, vec))
        if len(v) != self.ambient.dim:
            raise DimensionMismatch("vector length does not match ambient dim")
        for g in self.gens:
            p = next(i for i, x in enumerate(g) if x)
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, g)]
        return tuple(v)

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(g) for g in other.gens)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient.dim != other.ambient.dim:
            raise DimensionMismatch("subspace sum over different ambients")
        return Subspace.from_vectors(self.ambient, list(self.gens) + list(other.gens))

    def intersect(self, other: "Subspace") -> "Subspace":
        rows = self.annihilator_rows() + other.annihilator_rows()
        if not rows:
            return Subspace.full(self.ambient)
        return Subspace(self.ambient, tuple(_kernel_rows(Mat.from_rows(rows))))

    def annihilator_rows(self) -> list:
        """Functionals (as coordinate rows) vanishing on this subspace."""
        if not self.gens:
            return [tuple(Q(1) if i == j else Q(0) for j in range(self.ambient.dim))
                    for i in range(self.ambient.dim)]
        return [list(r) for r in _kernel_rows(Mat.from_rows([list(g) for g in self.gens]))]

    def annihilator_mat(self) -> Mat:
        rows = self.annihilator_rows()
        if not rows:
            return Mat.zero(0, self.ambient.dim)
        return Mat.from_rows(rows)


# ---------------------------------------------------------------------------
# linear maps


@dataclass(frozen=True)
class LinMap:
    """Linear map between based spaces; column j is the image of basis j."""

    domain: BasedSpace
    codomain: BasedSpace
    mat: Mat

    def __post_init__(self):
        if self.mat.rows != self.codomain.dim or self.mat.cols != self.domain.dim:
            raise DimensionMismatch(
                f"matrix {self.mat.rows}x{self.mat.cols} does not map "
                f"{self.domain.name} (dim {self.domain.dim}) to "
                f"{self.codomain.name} (dim {self.codomain.dim})"
            )

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, space: BasedSpace) -> "LinMap":
        return cls(space, space, Mat.identity(space.dim))

    @classmethod
    def zero(cls, domain: BasedSpace, codomain: BasedSpace) -> "LinMap":
        return cls(domain, codomain, Mat.zero(codomain.dim, domain.dim))

    @classmethod
    def from_entries(cls, domain: BasedSpace, codomain: BasedSpace, table: Mapping) -> "LinMap":
        """Build from ``{domain_label: {codomain_label: coeff}}``."""
        data = {}
        for in_label, col in table.items():
            j = domain.index(in_label)
            for out_label, coeff in col.items():
                data[(codomain.index(out_label), j)] = Q(coeff)
        return cls(domain, codomain, Mat(codomain.dim, domain.dim, data))

    # -- algebra ------------------------------------------------------

    def __matmul__(self, other: "LinMap") -> "LinMap":
        if self.domain.dim != other.codomain.dim:
            raise DimensionMismatch(
                f"cannot compose {self.domain.name} <- {other.codomain.name}"
            )
        return LinMap(other.domain, self.codomain, self.mat @ other.mat)

    def __add__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.domain, self.codomain, self.mat + other.mat)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.domain, self.codomain, self.mat - other.mat)

    def __neg__(self) -> "LinMap":
        return LinMap(self.domain, self.codomain, -self.mat)

    def scale(self, c) -> "LinMap":
        return LinMap(self.domain, self.codomain, self.mat.scale(c))

    def tensor(self, other: "LinMap") -> "LinMap":
        return LinMap(
            tensor_space(self.domain, other.domain),
            tensor_space(self.codomain, other.codomain),
            self.mat.kron(other.mat),
        )

    def __eq__(self, other):
        """Equality of matrices between spaces of matching dimensions."""
        return (
            isinstance(other, LinMap)
            and self.domain.dim == other.domain.dim
            and self.codomain.dim == other.codomain.dim
            and self.mat == other.mat
        )

    def __hash__(self):
        return hash((self.domain.dim, self.codomain.dim, self.mat))

    def apply(self, vec: Sequence) -> tuple:
        return self.mat.apply(vec)

    def column(self, j: int) -> dict:
        return self.mat.column(j)

    def is_zero(self) -> bool:
        return self.mat.is_zero()


def ident(space: BasedSpace) -> LinMap:
    return LinMap.identity(space)


def chain(*maps: LinMap) -> LinMap:
    """Compose right to left: chain(f, g, h) = f . g . h.

    Folded from the right so intermediates stay skinny when the rightmost
    map has a small domain.
    """
    acc = maps[-1]
    for m in reversed(maps[:-1]):
        acc = m @ acc
    return acc


def tensor_map(f: LinMap, g: LinMap) -> LinMap:
    return f.tensor(g)


def cycles_to_perm(n: int, *cycles: Sequence[int]) -> tuple:
    """One-line permutation (0-based) from 1-based cycles, e.g. (2, 3)."""
    perm = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
            perm[a - 1] = b - 1
    return tuple(perm)


def flip_map(spaces: Sequence[BasedSpace], permutation: Sequence[int]) -> LinMap:
    """Permutation of tensor factors.

    ``permutation[i]`` is the output position (0-based) of input factor i.
    """
    n = len(spaces)
    if sorted(permutation) != list(range(n)):
        raise ValueError(f"not a permutation of {n} positions: {permutation}")
    domain = spaces[0]
    for s in spaces[1:]:
        domain = tensor_space(domain, s)
    out_spaces = [None] * n
    for i, p in enumerate(permutation):
        out_spaces[p] = spaces[i]
    codomain = out_spaces[0]
    for s in out_spaces[1:]:
        codomain = tensor_space(codomain, s)

    dims = [s.dim for s in spaces]
    out_dims = [s.dim for s in out_spaces]
    in_strides = _strides(dims)
    out_strides = _strides(out_dims)

    data = {}
    for j in range(domain.dim):
        multi = _unflatten(j, dims, in_strides)
        out_multi = [0] * n
        for i, p in enumerate(permutation):
            out_multi[p] = multi[i]
        i_out = sum(a * s for a, s in zip(out_multi, out_strides))
        data[(i_out, j)] = Q(1)
    return LinMap(domain, codomain, Mat(codomain.dim, domain.dim, data))


def _strides(dims: Sequence[int]) -> list:
    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    return strides


def _unflatten(index: int, dims: Sequence[int], strides: Sequence[int]) -> list:
    multi = []
    for d, s in zip(dims, strides):
        multi.append((index // s) % d)
    return multi


# ---------------------------------------------------------------------------
# kernels, images, solving


def kernel(f: LinMap) -> Subspace:
    return Subspace(f.domain, tuple(_kernel_rows(f.mat)))


def image(f: LinMap) -> Subspace:
    cols = [[f.mat.data.get((i, j), Q(0)) for i in range(f.mat.rows)] for j in range(f.mat.cols)]
    return Subspace.from_vectors(f.codomain, cols)


def solve(f: LinMap, target: Sequence) -> Optional[tuple]:
    return _solve_rows(f.mat, target)


def preimage(f: LinMap, s: Subspace) -> Subspace:
    """All v with f(v) in s."""
    if s.ambient.dim != f.codomain.dim:
        raise DimensionMismatch("subspace ambient does not match codomain")
    ann = s.annihilator_mat()
    if ann.rows == 0:
        return Subspace.full(f.domain)
    return Subspace(f.domain, tuple(_kernel_rows(ann @ f.mat)))
