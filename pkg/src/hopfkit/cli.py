"""Command-line interface.

Reads structure-constant JSON files (or "-" for stdin), runs checks or
constructions, and writes either a report or a serialized object so
commands compose in pipelines.  Exit codes: 0 every check passed, 1 a
mathematical check failed, 2 the input was malformed.
"""

from __future__ import annotations

import argparse
import random
import sys

from .coactions import (
    Coaction,
    GradedCoalgebra,
    adjoint_coaction,
    check_coaction,
    coinvariants,
    grading_coaction,
    inner_coaction,
    trivial_coaction,
)
from .cocenter import cocenter
from .comodules import (
    Comodule,
    check_comodule,
    comatrix_coalgebra,
    cotensor,
    is_isomorphic_equivariant,
    twirl_left,
    twirl_right,
)
from .convolution import (
    ConvElement,
    convolution,
    convolution_exponential,
    convolution_inverse,
)
from .filtration import coradical_filtration
from .io import (
    FormatError,
    MapObject,
    SchemaError,
    UnresolvedRefError,
    algebra_of,
    canonical_json,
    coalgebra_of,
    format_rational,
    parse,
    serialize,
)
from .schism import (
    SchismCochain,
    check_cocharacter,
    check_coderivation,
    check_dd,
    cocharacter_inverse,
    cohomologous,
    homoschism0,
    random_gamma0_cochain,
    schism_differential,
)
from .structures import Algebra, Coalgebra, HopfAlgebra, check_algebra, check_coalgebra, check_hopf, hopf_power

__all__ = ["main"]


# ---------------------------------------------------------------------------
# input and output plumbing


def _read_objects(paths):
    """Parse every file (``-`` = stdin) into an ordered (name, obj) list."""
    env = {}
    out = []
    for path in paths:
        data = sys.stdin.buffer.read() if path == "-" else open(path, "rb").read()
        before = set(env)
        parse(data, env)
        for name, obj in env.items():
            if name not in before:
                out.append((name, obj))
    return out


def _emit(payload, args):
    data = payload if isinstance(payload, bytes) else _format_payload(payload, args)
    if getattr(args, "out", None):
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def _format_payload(payload, args) -> bytes:
    if getattr(args, "format", "json") == "text":
        return ("\n".join(_text_lines(payload)) + "\n").encode("utf-8")
    return canonical_json(payload)


def _text_lines(value, prefix=""):
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)):
                yield f"{prefix}{k}:"
                yield from _text_lines(v, prefix + "  ")
            else:
                yield f"{prefix}{k}: {v}"
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, dict) and "pass" in v and "name" in v:
                status = "PASS" if v["pass"] else "FAIL"
                extra = f" ({v['witness']})" if v.get("witness") else ""
                yield f"{prefix}{status} {v['name']}{extra}"
                if v.get("checks"):
                    yield from _text_lines(v["checks"], prefix + "  ")
            elif isinstance(v, (dict, list)):
                yield from _text_lines(v, prefix + "  ")
            else:
                yield f"{prefix}- {v}"
    else:
        yield f"{prefix}{value}"


def _pick(objs, pred, name, what):
    if name is not None:
        for n, o in objs:
            if n == name:
                if not pred(o):
                    raise SchemaError(f"object {name!r} is not a {what}")
                return o
        raise UnresolvedRefError(name)
    for _, o in objs:
        if pred(o):
            return o
    raise SchemaError(f"no {what} found in the input files")


def _is_coalgebra_like(o):
    return isinstance(o, (Coalgebra, GradedCoalgebra, HopfAlgebra))


def _conv_of(mo: MapObject) -> ConvElement:
    alg = (
        hopf_power(mo.codomain, mo.power).algebra
        if mo.power > 1
        else algebra_of(mo.codomain)
    )
    return ConvElement(coalgebra_of(mo.domain), alg, mo.map)


def _map_result(name, template: MapObject, conv: ConvElement) -> MapObject:
    return MapObject(name, template.domain, template.codomain, template.power, conv.map)


def _subspace_payload(space, w) -> dict:
    gens = []
    for g in w.gens:
        gens.append(
            {
                "|".join(b) if isinstance(b, tuple) else b: format_rational(v)
                for b, v in zip(space.basis, g)
                if v
            }
        )
    return {"dim": w.dim, "generators": gens}


# ---------------------------------------------------------------------------
# commands


_CHECKERS = (
    (HopfAlgebra, "hopf", check_hopf),
    (GradedCoalgebra, "graded-coalgebra", lambda o: check_coalgebra(o.coalgebra)),
    (Coalgebra, "coalgebra", check_coalgebra),
    (Algebra, "algebra", check_algebra),
    (Coaction, "coaction", check_coaction),
    (Comodule, "comodule", check_comodule),
)


def _cmd_check(objs, args):
    results = []
    for name, obj in objs:
        for cls, kind, fn in _CHECKERS:
            if isinstance(obj, cls):
                rep = fn(obj).as_dict()
                results.append({"name": name, "kind": kind, **rep})
                break
        else:
            results.append({"name": name, "kind": "map", "pass": True, "checks": []})
    ok = all(r["pass"] for r in results)
    return (0 if ok else 1), {"command": "check", "pass": ok, "objects": results}


def _cmd_coaction_make(objs, args):
    if args.what == "adjoint":
        h = _pick(objs, lambda o: isinstance(o, HopfAlgebra), args.hopf, "hopf algebra")
        a = adjoint_coaction(h)
    elif args.what == "grading":
        g = _pick(objs, lambda o: isinstance(o, GradedCoalgebra), args.coalgebra, "graded coalgebra")
        a = grading_coaction(g)
    elif args.what == "trivial":
        c = _pick(objs, _is_coalgebra_like, args.coalgebra, "coalgebra")
        h = _pick(objs, lambda o: isinstance(o, HopfAlgebra), args.hopf, "hopf algebra")
        a = trivial_coaction(coalgebra_of(c), h)
    else:  # inner
        c = _pick(objs, _is_coalgebra_like, args.coalgebra, "coalgebra")
        h = _pick(objs, lambda o: isinstance(o, HopfAlgebra), args.hopf, "hopf algebra")
        j = _pick(objs, lambda o: isinstance(o, MapObject), args.map, "map")
        a = inner_coaction(coalgebra_of(c), h, j.map)
    name = args.name or f"{a.coalgebra.space.name}-{args.what}"
    return 0, serialize(a, name)


def _coaction_arg(objs, args):
    return _pick(objs, lambda o: isinstance(o, Coaction), getattr(args, "coaction", None), "coaction")


def _cmd_coaction_check(objs, args):
    picked = [(n, o) for n, o in objs if isinstance(o, Coaction)]
    if args.coaction is not None:
        picked = [(args.coaction, _coaction_arg(objs, args))]
    if not picked:
        raise SchemaError("no coaction found in the input files")
    results = [{"name": n, **check_coaction(a).as_dict()} for n, a in picked]
    ok = all(r["pass"] for r in results)
    return (0 if ok else 1), {"command": "coaction check", "pass": ok, "objects": results}


def _cmd_coaction_coinvariants(objs, args):
    a = _coaction_arg(objs, args)
    w = coinvariants(a)
    return 0, {
        "command": "coaction coinvariants",
        "coalgebra": a.coalgebra.space.name,
        **_subspace_payload(a.coalgebra.space, w),
    }


def _map_arg(objs, name, what="map"):
    return _pick(objs, lambda o: isinstance(o, MapObject), name, what)


def _cmd_conv(objs, args):
    f = _map_arg(objs, args.f)
    cf = _conv_of(f)
    if args.op == "mul":
        g = _map_arg(objs, args.g)
        out = convolution(cf, _conv_of(g))
        return 0, serialize(_map_result(args.name or f"{f.name}*{g.name}", f, out))
    if args.op == "inv":
        out = convolution_inverse(cf)
        if out is None:
            return 1, {"command": "conv inv", "map": f.name, "invertible": False}
        return 0, serialize(_map_result(args.name or f"{f.name}-inv", f, out))
    out = convolution_exponential(cf, args.max_order)
    return 0, serialize(_map_result(args.name or f"exp-{f.name}", f, out))


def _cmd_cochar(objs, args):
    a = _coaction_arg(objs, args)
    mo = _map_arg(objs, args.map)
    if args.op == "check":
        rep = check_cocharacter(mo.map, a).as_dict()
        return (0 if rep["pass"] else 1), {"command": "cochar check", "map": mo.name, **rep}
    inv = cocharacter_inverse(mo.map, a)
    return 0, serialize(_map_result(args.name or f"{mo.name}-inv", mo, inv))


def _cmd_coder_check(objs, args):
    a = _coaction_arg(objs, args)
    mo = _map_arg(objs, args.map)
    rep = check_coderivation(mo.map, a)
    # "invertible" is informational: a coderivation vanishes on the counit,
    # so it is never convolution invertible when C has a group-like.
    ok = all(c.ok for c in rep.checks if c.name != "invertible")
    return (0 if ok else 1), {
        "command": "coder check",
        "map": mo.name,
        "pass": ok,
        **{k: v for k, v in rep.as_dict().items() if k != "pass"},
    }


def _schism_cochain(objs, args, a):
    if getattr(args, "map", None) is not None:
        mo = _map_arg(objs, args.map)
        return SchismCochain(mo.power, _conv_of(mo)), mo
    rng = random.Random(args.seed)
    f = random_gamma0_cochain(a, args.degree, rng)
    return f, None


def _cmd_schism_d(objs, args):
    a = _coaction_arg(objs, args)
    f, mo = _schism_cochain(objs, args, a)
    df = schism_differential(f, a)
    name = args.name or (f"D-{mo.name}" if mo else f"D-random-q{f.degree}-s{args.seed}")
    return 0, serialize(MapObject(name, a.coalgebra, a.hopf, df.degree, df.element.map))


def _cmd_schism_ddcheck(objs, args):
    a = _coaction_arg(objs, args)
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.samples):
        f = random_gamma0_cochain(a, args.degree, rng)
        if not check_dd(f, a):
            failures += 1
    ok = failures == 0
    return (0 if ok else 1), {
        "command": "schism ddcheck",
        "degree": args.degree,
        "samples": args.samples,
        "seed": args.seed,
        "failures": failures,
        "pass": ok,
    }


def _cmd_schism_s0(objs, args):
    a = _coaction_arg(objs, args)
    w = homoschism0(a)
    z = cocenter(a.coalgebra)
    return 0, {
        "command": "schism s0",
        "cocenter_quotient_dim": z.quotient.space.dim,
        **_subspace_payload(z.quotient.space, w),
    }


def _cmd_schism_cohomologous(objs, args):
    a = _coaction_arg(objs, args)
    phi = _map_arg(objs, args.phi)
    psi = _map_arg(objs, args.psi)
    res = cohomologous(phi.map, psi.map, a, max_word_length=args.max_word_length)
    payload = {
        "command": "schism cohomologous",
        "phi": phi.name,
        "psi": psi.name,
        "cohomologous": res,
    }
    return (0 if res is True else 1), payload


def _cmd_cocenter(objs, args):
    c = coalgebra_of(_pick(objs, _is_coalgebra_like, args.name, "coalgebra"))
    z = cocenter(c)
    return 0, {
        "command": "cocenter",
        "coalgebra": c.space.name,
        "coideal_dim": z.coideal.dim,
        "quotient_dim": z.quotient.space.dim,
        "quotient_basis": list(z.quotient.space.basis),
    }


def _cmd_filtration_coradical(objs, args):
    h = _pick(objs, lambda o: isinstance(o, HopfAlgebra), args.name, "hopf algebra")
    r = coradical_filtration(h)
    payload = {
        "command": "filtration coradical",
        "hopf": h.space.name,
        "coradical": _subspace_payload(h.space, r.coradical),
        "pass": r.ok,
    }
    if r.filtration is not None:
        payload["stage_dims"] = [s.dim for s in r.filtration.subspaces]
    if r.report is not None:
        payload["checks"] = r.report.as_dict()["checks"]
    if r.diagnostic is not None:
        payload["diagnostic"] = r.diagnostic
    return (0 if r.ok else 1), payload


def _comodule_arg(objs, name, what="comodule"):
    return _pick(objs, lambda o: isinstance(o, Comodule), name, what)


def _cmd_cotensor(objs, args):
    m = _comodule_arg(objs, args.m)
    n = _comodule_arg(objs, args.n)
    _, com = cotensor(m, n)
    return 0, serialize(com, args.name)


def _cmd_twirl(objs, args):
    m = _comodule_arg(objs, args.comodule)
    a = _coaction_arg(objs, args)
    mo = _map_arg(objs, args.map)
    fn = twirl_right if args.side == "right" else twirl_left
    out = fn(m, mo.map, a)
    return 0, serialize(out, args.name or f"{m.space.name}-twirl-{args.side}")


def _cmd_comodule_check(objs, args):
    picked = [(n, o) for n, o in objs if isinstance(o, Comodule)]
    if args.name is not None:
        picked = [(args.name, _comodule_arg(objs, args.name))]
    if not picked:
        raise SchemaError("no comodule found in the input files")
    results = [{"name": n, **check_comodule(m).as_dict()} for n, m in picked]
    ok = all(r["pass"] for r in results)
    return (0 if ok else 1), {"command": "comodule check", "pass": ok, "objects": results}


def _cmd_comatrix(objs, args):
    c = coalgebra_of(_pick(objs, _is_coalgebra_like, args.name, "coalgebra"))
    a = None
    if any(isinstance(o, Coaction) for _, o in objs) or args.coaction:
        a = _coaction_arg(objs, args)
    mn, row, col = comatrix_coalgebra(c, args.n, a)
    return 0, serialize([mn, row, col])


def _cmd_equiv_iso(objs, args):
    m = _comodule_arg(objs, args.m)
    n = _comodule_arg(objs, args.n)
    iso = is_isomorphic_equivariant(m, n, seed=args.seed)
    payload = {"command": "equiv iso", "isomorphic": iso}
    return (0 if iso else 1), payload


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write output to this file instead of stdout")

    def files(parser):
        parser.add_argument("files", nargs="+", help="input JSON files; - reads stdin")
        return parser

    p = argparse.ArgumentParser(prog="hopfkit", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="run structure laws on every object")
    files(s).set_defaults(fn=_cmd_check)

    pc = sub.add_parser("coaction", help="coaction constructions and checks")
    pcs = pc.add_subparsers(dest="sub", required=True)
    s = pcs.add_parser("make", parents=[common])
    s.add_argument("what", choices=("trivial", "grading", "adjoint", "inner"))
    s.add_argument("--coalgebra")
    s.add_argument("--hopf")
    s.add_argument("--map", help="coalgebra morphism J: C -> H for inner coactions")
    s.add_argument("--name")
    files(s).set_defaults(fn=_cmd_coaction_make)
    s = pcs.add_parser("check", parents=[common])
    s.add_argument("--coaction")
    files(s).set_defaults(fn=_cmd_coaction_check)
    s = pcs.add_parser("coinvariants", parents=[common])
    s.add_argument("--coaction")
    files(s).set_defaults(fn=_cmd_coaction_coinvariants)

    s = sub.add_parser("conv", parents=[common], help="convolution algebra operations")
    s.add_argument("op", choices=("mul", "inv", "exp"))
    s.add_argument("--f", required=True, help="map name")
    s.add_argument("--g", help="second map name for mul")
    s.add_argument("--max-order", type=int, default=24)
    s.add_argument("--name")
    files(s).set_defaults(fn=_cmd_conv)

    s = sub.add_parser("cochar", parents=[common], help="cocharacter checks and inverses")
    s.add_argument("op", choices=("check", "inverse"))
    s.add_argument("--map", required=True)
    s.add_argument("--coaction")
    s.add_argument("--name")
    files(s).set_defaults(fn=_cmd_cochar)

    s = sub.add_parser("coder", parents=[common], help="equivariant coderivation checks")
    s.add_argument("op", choices=("check",))
    s.add_argument("--map", required=True)
    s.add_argument("--coaction")
    files(s).set_defaults(fn=_cmd_coder_check)

    ps = sub.add_parser("schism", help="schism complex operations")
    pss = ps.add_subparsers(dest="sub", required=True)
    s = pss.add_parser("d", parents=[common])
    s.add_argument("--map", help="cochain by name; omit for a seeded random cochain")
    s.add_argument("--degree", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--name")
    s.add_argument("--coaction")
    files(s).set_defaults(fn=_cmd_schism_d)
    s = pss.add_parser("ddcheck", parents=[common])
    s.add_argument("--degree", type=int, default=1)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--coaction")
    files(s).set_defaults(fn=_cmd_schism_ddcheck)
    s = pss.add_parser("s0", parents=[common])
    s.add_argument("--coaction")
    files(s).set_defaults(fn=_cmd_schism_s0)
    s = pss.add_parser("cohomologous", parents=[common])
    s.add_argument("--phi", required=True)
    s.add_argument("--psi", required=True)
    s.add_argument("--coaction")
    s.add_argument("--max-word-length", type=int, default=4)
    files(s).set_defaults(fn=_cmd_schism_cohomologous)

    s = sub.add_parser("cocenter", parents=[common], help="cocentral quotient of a coalgebra")
    s.add_argument("--name")
    files(s).set_defaults(fn=_cmd_cocenter)

    pf = sub.add_parser("filtration", help="coradical filtration")
    pfs = pf.add_subparsers(dest="sub", required=True)
    s = pfs.add_parser("coradical", parents=[common])
    s.add_argument("--name")
    files(s).set_defaults(fn=_cmd_filtration_coradical)

    s = sub.add_parser("cotensor", parents=[common], help="cotensor product of bicomodules")
    s.add_argument("--m", help="right comodule name")
    s.add_argument("--n", help="left comodule name")
    s.add_argument("--name")
    files(s).set_defaults(fn=_cmd_cotensor)

    s = sub.add_parser("twirl", parents=[common], help="twirl a lifted coaction by a cocharacter")
    s.add_argument("--side", choices=("right", "left"), default="right")
    s.add_argument("--comodule")
    s.add_argument("--map", required=True)
    s.add_argument("--coaction")
    s.add_argument("--name")
    files(s).set_defaults(fn=_cmd_twirl)

    pm = sub.add_parser("comodule", help="comodule checks")
    pms = pm.add_subparsers(dest="sub", required=True)
    s = pms.add_parser("check", parents=[common])
    s.add_argument("--name")
    files(s).set_defaults(fn=_cmd_comodule_check)

    s = sub.add_parser("comatrix", parents=[common], help="comatrix coalgebra Mn(C)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--name")
    s.add_argument("--coaction")
    files(s).set_defaults(fn=_cmd_comatrix)

    pe = sub.add_parser("equiv", help="equivariant comparisons")
    pes = pe.add_subparsers(dest="sub", required=True)
    s = pes.add_parser("iso", parents=[common])
    s.add_argument("--m")
    s.add_argument("--n")
    s.add_argument("--seed", type=int, default=0)
    files(s).set_defaults(fn=_cmd_equiv_iso)

    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        objs = _read_objects(args.files)
        code, payload = args.fn(objs, args)
    except FormatError as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}}, args)
        return 2
    except OSError as exc:
        _emit({"error": {"code": "SCHEMA_ERROR", "message": str(exc)}}, args)
        return 2
    except (ValueError, RuntimeError) as exc:
        _emit({"error": {"code": "MATH_ERROR", "message": str(exc)}}, args)
        return 1
    _emit(payload, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
