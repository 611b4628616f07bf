"""Canonical JSON serialization of structure-constant objects.

Kinds: coalgebra, algebra, hopf, graded-coalgebra, coaction, comodule,
map.  Every rational is a canonical string "p/q" (reduced, positive
denominator, "p" when the denominator is 1); tensor basis labels are
joined with "|".  A file holds one object or a list of objects; a string
where an object is expected is a reference by name into the already
parsed file set.  Serialization is canonical (sorted keys, two-space
indent, UTF-8, trailing newline), so serialize . parse is the identity
on canonical bytes and parse . serialize is the identity on objects.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .coactions import Coaction, GradedCoalgebra
from .comodules import Comodule
from .groups import FiniteGroup
from .linalg import SCALARS, BasedSpace, LinMap, Mat, tensor_space
from .structures import Algebra, Coalgebra, HopfAlgebra, hopf_power

__all__ = [
    "FormatError",
    "SchemaError",
    "UnresolvedRefError",
    "BadRationalError",
    "MapObject",
    "format_rational",
    "parse_rational",
    "to_dict",
    "from_dict",
    "serialize",
    "parse",
    "canonical_json",
    "coalgebra_of",
    "algebra_of",
    "space_of",
]


class FormatError(ValueError):
    """Base of all file-format errors; carries a machine-readable code."""

    code = "SCHEMA_ERROR"

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class SchemaError(FormatError):
    code = "SCHEMA_ERROR"


class UnresolvedRefError(FormatError):
    code = "UNRESOLVED_REF"

    def __init__(self, name: str, path: str = "$"):
        super().__init__(f"reference {name!r} does not resolve", path)
        self.name = name


class BadRationalError(FormatError):
    code = "BAD_RATIONAL"

    def __init__(self, literal, path: str = "$"):
        super().__init__(f"non-canonical rational {literal!r}", path)
        self.literal = literal


_RAT_RE = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(literal, path: str = "$") -> Fraction:
    if not isinstance(literal, str) or not _RAT_RE.match(literal):
        raise BadRationalError(literal, path)
    if literal.endswith("/0"):
        raise BadRationalError(literal, path)
    value = Fraction(literal)
    if format_rational(value) != literal:
        raise BadRationalError(literal, path)
    return value


# ---------------------------------------------------------------------------
# labels and tables


def _label_str(label) -> str:
    return "|".join(label) if isinstance(label, tuple) else label


def _require(d, path, required, optional=()):
    if not isinstance(d, dict):
        raise SchemaError("expected an object", path)
    for k in required:
        if k not in d:
            raise SchemaError(f"missing key {k!r}", path)
    extra = set(d) - set(required) - set(optional)
    if extra:
        raise SchemaError(f"unexpected keys {sorted(extra)}", path)


def _parse_space(name: str, basis, path: str) -> BasedSpace:
    if not isinstance(basis, list) or not basis:
        raise SchemaError("basis must be a nonempty list", path)
    labels = []
    arity = None
    for b in basis:
        if not isinstance(b, str) or not b:
            raise SchemaError(f"basis label {b!r} is not a nonempty string", path)
        parts = tuple(b.split("|"))
        if any(not p for p in parts):
            raise SchemaError(f"empty tensor component in label {b!r}", path)
        if arity is None:
            arity = len(parts)
        elif len(parts) != arity:
            raise SchemaError("inconsistent tensor arity across basis labels", path)
        labels.append(parts if arity > 1 else b)
    if len(set(labels)) != len(labels):
        raise SchemaError("duplicate basis labels", path)
    return BasedSpace(name, tuple(labels), arity)


def _table_to_linmap(table, dom: BasedSpace, cod: BasedSpace, path: str) -> LinMap:
    if not isinstance(table, dict):
        raise SchemaError("expected a table object", path)
    dom_idx = {_label_str(b): j for j, b in enumerate(dom.basis)}
    cod_idx = {_label_str(b): i for i, b in enumerate(cod.basis)}
    data = {}
    for dl, col in table.items():
        if dl not in dom_idx:
            raise SchemaError(f"unknown domain label {dl!r}", path)
        if not isinstance(col, dict):
            raise SchemaError(f"entries of {dl!r} must be an object", path)
        for cl, lit in col.items():
            if cl not in cod_idx:
                raise SchemaError(f"unknown codomain label {cl!r}", f"{path}.{dl}")
            data[(cod_idx[cl], dom_idx[dl])] = parse_rational(lit, f"{path}.{dl}.{cl}")
    return LinMap(dom, cod, Mat(cod.dim, dom.dim, data))


def _linmap_to_table(f: LinMap) -> dict:
    table = {}
    for (i, j), v in f.mat.data.items():
        table.setdefault(_label_str(f.domain.basis[j]), {})[
            _label_str(f.codomain.basis[i])
        ] = format_rational(v)
    return table


def _scalar_table_to_linmap(table, dom: BasedSpace, path: str) -> LinMap:
    """{domain label: rational} for a functional into the scalars."""
    if not isinstance(table, dict):
        raise SchemaError("expected a table object", path)
    dom_idx = {_label_str(b): j for j, b in enumerate(dom.basis)}
    data = {}
    for dl, lit in table.items():
        if dl not in dom_idx:
            raise SchemaError(f"unknown domain label {dl!r}", path)
        data[(0, dom_idx[dl])] = parse_rational(lit, f"{path}.{dl}")
    return LinMap(dom, SCALARS, Mat(1, dom.dim, data))


def _linmap_to_scalar_table(f: LinMap) -> dict:
    return {
        _label_str(f.domain.basis[j]): format_rational(v)
        for (_, j), v in f.mat.data.items()
    }


def _column_table_to_linmap(table, cod: BasedSpace, path: str) -> LinMap:
    """{codomain label: rational} for a map from the scalars (a vector)."""
    if not isinstance(table, dict):
        raise SchemaError("expected a table object", path)
    cod_idx = {_label_str(b): i for i, b in enumerate(cod.basis)}
    data = {}
    for cl, lit in table.items():
        if cl not in cod_idx:
            raise SchemaError(f"unknown codomain label {cl!r}", path)
        data[(cod_idx[cl], 0)] = parse_rational(lit, f"{path}.{cl}")
    return LinMap(SCALARS, cod, Mat(cod.dim, 1, data))


def _linmap_to_column_table(f: LinMap) -> dict:
    return {
        _label_str(f.codomain.basis[i]): format_rational(v)
        for (i, _), v in f.mat.data.items()
    }


# ---------------------------------------------------------------------------
# object views


@dataclass(frozen=True)
class MapObject:
    """A named linear map between the spaces of two named structures.

    ``power`` > 1 means the codomain is the tensor power of the codomain
    structure's space (used for schism cochains into H^(x)q).
    """

    name: str
    domain: object
    codomain: object
    power: int
    map: LinMap


def space_of(obj) -> BasedSpace:
    if isinstance(obj, (Coalgebra, Algebra, HopfAlgebra, Comodule)):
        return obj.space
    if isinstance(obj, GradedCoalgebra):
        return obj.coalgebra.space
    raise SchemaError(f"object of type {type(obj).__name__} has no basis space")


def coalgebra_of(obj) -> Coalgebra:
    if isinstance(obj, Coalgebra):
        return obj
    if isinstance(obj, GradedCoalgebra):
        return obj.coalgebra
    if isinstance(obj, HopfAlgebra):
        return obj.coalgebra
    raise SchemaError(f"expected a coalgebra-like object, got {type(obj).__name__}")


def algebra_of(obj) -> Algebra:
    if isinstance(obj, Algebra):
        return obj
    if isinstance(obj, HopfAlgebra):
        return obj.algebra
    raise SchemaError(f"expected an algebra-like object, got {type(obj).__name__}")


# ---------------------------------------------------------------------------
# serialization


def to_dict(obj, name: Optional[str] = None) -> dict:
    if isinstance(obj, HopfAlgebra):
        return {
            "kind": "hopf",
            "name": name or obj.space.name,
            "basis": [_label_str(b) for b in obj.space.basis],
            "comul": _linmap_to_table(obj.comul),
            "counit": _linmap_to_scalar_table(obj.counit),
            "mul": _linmap_to_table(obj.mul),
            "unit": _linmap_to_column_table(obj.unit),
            "antipode": _linmap_to_table(obj.antipode),
        }
    if isinstance(obj, GradedCoalgebra):
        c, g = obj.coalgebra, obj.group
        return {
            "kind": "graded-coalgebra",
            "name": name or c.space.name,
            "basis": [_label_str(b) for b in c.space.basis],
            "comul": _linmap_to_table(c.comul),
            "counit": _linmap_to_scalar_table(c.counit),
            "group": {
                "elements": list(g.elements),
                "table": {f"{a}|{b}": g.table[(a, b)] for a in g.elements for b in g.elements},
            },
            "degree": {_label_str(b): obj.degree[b] for b in c.space.basis},
        }
    if isinstance(obj, Coalgebra):
        return {
            "kind": "coalgebra",
            "name": name or obj.space.name,
            "basis": [_label_str(b) for b in obj.space.basis],
            "comul": _linmap_to_table(obj.comul),
            "counit": _linmap_to_scalar_table(obj.counit),
        }
    if isinstance(obj, Algebra):
        return {
            "kind": "algebra",
            "name": name or obj.space.name,
            "basis": [_label_str(b) for b in obj.space.basis],
            "mul": _linmap_to_table(obj.mul),
            "unit": _linmap_to_column_table(obj.unit),
        }
    if isinstance(obj, Coaction):
        return {
            "kind": "coaction",
            "name": name or f"{obj.coalgebra.space.name}-coaction",
            "coalgebra": to_dict(obj.coalgebra),
            "hopf": to_dict(obj.hopf),
            "delta": _linmap_to_table(obj.delta),
        }
    if isinstance(obj, Comodule):
        d = {
            "kind": "comodule",
            "name": name or obj.space.name,
            "basis": [_label_str(b) for b in obj.space.basis],
        }
        if obj.right_coaction is not None:
            d["right"] = {
                "coalgebra": to_dict(obj.right_coalgebra),
                "map": _linmap_to_table(obj.right_coaction),
            }
        if obj.left_coaction is not None:
            d["left"] = {
                "coalgebra": to_dict(obj.left_coalgebra),
                "map": _linmap_to_table(obj.left_coaction),
            }
        if obj.h_lift is not None:
            d["lift"] = {
                "hopf": to_dict(obj.hopf),
                "map": _linmap_to_table(obj.h_lift),
            }
        return d
    if isinstance(obj, MapObject):
        d = {
            "kind": "map",
            "name": name or obj.name,
            "domain": to_dict(obj.domain),
            "codomain": to_dict(obj.codomain),
            "entries": _linmap_to_table(obj.map),
        }
        if obj.power != 1:
            d["power"] = obj.power
        return d
    raise SchemaError(f"cannot serialize object of type {type(obj).__name__}")


def canonical_json(d) -> bytes:
    return (json.dumps(d, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def serialize(obj, name: Optional[str] = None) -> bytes:
    if isinstance(obj, (list, tuple)):
        return canonical_json([to_dict(x) for x in obj])
    return canonical_json(to_dict(obj, name))


# ---------------------------------------------------------------------------
# parsing


def _resolve(value, env, path: str):
    if isinstance(value, str):
        if not env or value not in env:
            raise UnresolvedRefError(value, path)
        return env[value]
    if isinstance(value, dict):
        return from_dict(value, env, path)
    raise SchemaError("expected an inline object or a reference by name", path)


def _parse_coalgebra_parts(d, path):
    name = d["name"]
    if not isinstance(name, str) or not name:
        raise SchemaError("name must be a nonempty string", path)
    space = _parse_space(name, d["basis"], f"{path}.basis")
    comul = _table_to_linmap(d["comul"], space, tensor_space(space, space), f"{path}.comul")
    counit = _scalar_table_to_linmap(d["counit"], space, f"{path}.counit")
    return space, Coalgebra(space, comul, counit)


def from_dict(d, env=None, path: str = "$"):
    if not isinstance(d, dict):
        raise SchemaError("expected an object", path)
    kind = d.get("kind")
    if kind == "coalgebra":
        _require(d, path, ("kind", "name", "basis", "comul", "counit"))
        return _parse_coalgebra_parts(d, path)[1]
    if kind == "algebra":
        _require(d, path, ("kind", "name", "basis", "mul", "unit"))
        space = _parse_space(d["name"], d["basis"], f"{path}.basis")
        mul = _table_to_linmap(d["mul"], tensor_space(space, space), space, f"{path}.mul")
        unit = _column_table_to_linmap(d["unit"], space, f"{path}.unit")
        return Algebra(space, mul, unit)
    if kind == "hopf":
        _require(d, path, ("kind", "name", "basis", "comul", "counit", "mul", "unit", "antipode"))
        space, co = _parse_coalgebra_parts(d, path)
        mul = _table_to_linmap(d["mul"], tensor_space(space, space), space, f"{path}.mul")
        unit = _column_table_to_linmap(d["unit"], space, f"{path}.unit")
        antipode = _table_to_linmap(d["antipode"], space, space, f"{path}.antipode")
        return HopfAlgebra(co, Algebra(space, mul, unit), antipode)
    if kind == "graded-coalgebra":
        _require(d, path, ("kind", "name", "basis", "comul", "counit", "group", "degree"))
        space, co = _parse_coalgebra_parts(d, path)
        g = d["group"]
        _require(g, f"{path}.group", ("elements", "table"))
        elements = g["elements"]
        if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
            raise SchemaError("group elements must be strings", f"{path}.group.elements")
        table = {}
        if not isinstance(g["table"], dict):
            raise SchemaError("group table must be an object", f"{path}.group.table")
        for key, val in g["table"].items():
            parts = key.split("|")
            if len(parts) != 2 or parts[0] not in elements or parts[1] not in elements:
                raise SchemaError(f"bad group table key {key!r}", f"{path}.group.table")
            if val not in elements:
                raise SchemaError(f"bad group table value {val!r}", f"{path}.group.table")
            table[(parts[0], parts[1])] = val
        try:
            group = FiniteGroup(tuple(elements), table)
        except ValueError as exc:
            raise SchemaError(str(exc), f"{path}.group")
        degree = d["degree"]
        if not isinstance(degree, dict):
            raise SchemaError("degree must be an object", f"{path}.degree")
        deg = {}
        for label, elem in degree.items():
            key = tuple(label.split("|")) if space.arity > 1 else label
            if key not in space.basis:
                raise SchemaError(f"unknown basis label {label!r}", f"{path}.degree")
            deg[key] = elem
        return GradedCoalgebra(co, group, deg)
    if kind == "coaction":
        _require(d, path, ("kind", "name", "coalgebra", "hopf", "delta"))
        c = coalgebra_of(_resolve(d["coalgebra"], env, f"{path}.coalgebra"))
        h = _resolve(d["hopf"], env, f"{path}.hopf")
        if not isinstance(h, HopfAlgebra):
            raise SchemaError("coaction needs a Hopf algebra", f"{path}.hopf")
        delta = _table_to_linmap(
            d["delta"], c.space, tensor_space(c.space, h.space), f"{path}.delta"
        )
        return Coaction(c, h, delta)
    if kind == "comodule":
        _require(d, path, ("kind", "name", "basis"), ("right", "left", "lift"))
        space = _parse_space(d["name"], d["basis"], f"{path}.basis")
        kw = {}
        if "right" in d:
            _require(d["right"], f"{path}.right", ("coalgebra", "map"))
            c = coalgebra_of(_resolve(d["right"]["coalgebra"], env, f"{path}.right.coalgebra"))
            kw["right_coalgebra"] = c
            kw["right_coaction"] = _table_to_linmap(
                d["right"]["map"], space, tensor_space(space, c.space), f"{path}.right.map"
            )
        if "left" in d:
            _require(d["left"], f"{path}.left", ("coalgebra", "map"))
            c = coalgebra_of(_resolve(d["left"]["coalgebra"], env, f"{path}.left.coalgebra"))
            kw["left_coalgebra"] = c
            kw["left_coaction"] = _table_to_linmap(
                d["left"]["map"], space, tensor_space(c.space, space), f"{path}.left.map"
            )
        if "lift" in d:
            _require(d["lift"], f"{path}.lift", ("hopf", "map"))
            h = _resolve(d["lift"]["hopf"], env, f"{path}.lift.hopf")
            if not isinstance(h, HopfAlgebra):
                raise SchemaError("lift needs a Hopf algebra", f"{path}.lift.hopf")
            kw["hopf"] = h
            kw["h_lift"] = _table_to_linmap(
                d["lift"]["map"], space, tensor_space(space, h.space), f"{path}.lift.map"
            )
        try:
            return Comodule(space, **kw)
        except ValueError as exc:
            raise SchemaError(str(exc), path)
    if kind == "map":
        _require(d, path, ("kind", "name", "domain", "codomain", "entries"), ("power",))
        dom_obj = _resolve(d["domain"], env, f"{path}.domain")
        cod_obj = _resolve(d["codomain"], env, f"{path}.codomain")
        power = d.get("power", 1)
        if not isinstance(power, int) or power < 1:
            raise SchemaError("power must be a positive integer", f"{path}.power")
        if power == 1:
            cod_space = space_of(cod_obj)
        else:
            if not isinstance(cod_obj, HopfAlgebra):
                raise SchemaError(
                    "tensor powers need a Hopf algebra codomain", f"{path}.codomain"
                )
            cod_space = hopf_power(cod_obj, power).space
        entries = _table_to_linmap(
            d["entries"], space_of(dom_obj), cod_space, f"{path}.entries"
        )
        return MapObject(d["name"], dom_obj, cod_obj, power, entries)
    raise SchemaError(f"unknown kind {d.get('kind')!r}", path)


def parse(data, env=None):
    """Parse bytes or text holding one object or a list of objects.

    Named top-level objects are registered into ``env`` (when given) so
    later files may refer to them by name.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", "$")
    items = raw if isinstance(raw, list) else [raw]
    out = []
    for i, d in enumerate(items):
        path = f"$[{i}]" if isinstance(raw, list) else "$"
        obj = from_dict(d, env, path)
        if env is not None:
            name = d.get("name")
            if name in env:
                raise SchemaError(f"duplicate object name {name!r}", path)
            env[name] = obj
        out.append(obj)
    return out if isinstance(raw, list) else out[0]
