"""Acceptance gate: eleven criteria, each printed as one pass/fail line.

Every comparison is exact (rational arithmetic, zero tolerance).  Run
with ``pytest tests/test_acceptance.py -v``; the per-criterion lines are
written to the real stdout so they are visible under pytest capture.
"""

import json
import random
import sys
from importlib import resources

from hopfkit import io as hio
from hopfkit.cli import main as cli_main
from hopfkit.coactions import (
    adjoint_coaction,
    check_coaction,
    coinvariants,
    grading_coaction,
    inner_coaction,
    trivial_coaction,
    verify_lemma_antipode_identities,
)
from hopfkit.cocenter import cocenter
from hopfkit.comodules import (
    check_comodule,
    check_equivariant_comodule,
    check_equivariant_comodule_left,
    check_equivariant_comodule_morphism,
    check_twirl_action,
    comatrix_coalgebra,
    cotensor,
    equivariant_cotensor_lift,
    inner_twirl_isomorphism,
    regular_comodule,
    twirl_right,
)
from hopfkit.convolution import (
    ConvElement,
    conv_unit,
    convolution,
    convolution_exponential,
    convolution_inverse,
    convolution_power,
)
from hopfkit.filtration import coradical_filtration
from hopfkit.fixtures import (
    graded_line,
    grouplike_pair,
    h4_graded_coaction,
    h4_nilpotent_coderivation,
    s3_hopf,
    sweedler_h4,
    zmod_hopf,
)
from hopfkit.linalg import LinMap, Mat, Q, image, tensor_space
from hopfkit.schism import (
    SchismCochain,
    check_cocharacter,
    check_d_homomorphism,
    check_dd,
    cocharacter_inverse,
    homoschism0,
    kernel_d0_functionals,
    random_gamma0_cochain,
    schism_differential,
)

DATA = resources.files("hopfkit") / "data"


def _criterion(k, desc, fn):
    import conftest

    try:
        ok = bool(fn())
        detail = ""
    except Exception as exc:  # a crash is a failure, not an error
        ok = False
        detail = f" ({type(exc).__name__}: {exc})"
    line = f"CRITERION {k:2d}: {'PASS' if ok else 'FAIL'} - {desc}{detail}"
    conftest.criterion_lines.append(line)
    print(line, file=sys.__stdout__, flush=True)
    assert ok, line


def _comm_pairs():
    out = []
    for n in (2, 3):
        z = zmod_hopf(n)
        out.append(trivial_coaction(z.coalgebra, z))
        out.append(grading_coaction(graded_line(n)))
    return out


def _all_coactions():
    h4 = sweedler_h4()
    c = grouplike_pair()
    z2 = zmod_hopf(2)
    j = LinMap.from_entries(c.space, z2.space, {"s": {"e": 1}, "t": {"g": 1}})
    return _comm_pairs() + [
        trivial_coaction(h4.coalgebra, h4),
        adjoint_coaction(h4),
        adjoint_coaction(s3_hopf()),
        inner_coaction(c, z2, j),
        h4_graded_coaction(),
    ]


def test_criterion_1_h4_adjoint_regression():
    def check():
        h4 = sweedler_h4()
        a = adjoint_coaction(h4)
        hh = a.delta.codomain

        def col(label):
            vec = [Q(0)] * 4
            vec[h4.space.index(label)] = Q(1)
            return {hh.basis[i]: v for i, v in enumerate(a.delta.apply(tuple(vec))) if v}

        ok = col("g") == {("g", "1"): 1}
        # delta x = 1 (x) xg + x (x) g + g (x) gx, with xg = -gx
        ok &= col("x") == {("1", "gx"): -1, ("x", "g"): 1, ("g", "gx"): 1}
        # delta(gx) derived directly from the adjoint formula with xg = -gx
        ok &= col("gx") == {("1", "gx"): 1, ("g", "gx"): -1, ("gx", "g"): 1}
        return ok

    _criterion(1, "adjoint coaction of H4 matches the exact expansion", check)


def test_criterion_2_cocommutative_adjoint_trivial():
    def check():
        return all(
            adjoint_coaction(h) == trivial_coaction(h.coalgebra, h)
            for h in (zmod_hopf(2), zmod_hopf(3), s3_hopf())
        )

    _criterion(2, "adjoint coaction is trivial on Q[Z2], Q[Z3], Q[S3]", check)


def test_criterion_3_coaction_axiom_suite():
    def check():
        if not all(check_coaction(a).ok for a in _all_coactions()):
            return False
        # negative fixtures: every individual axiom fails somewhere, with witness
        failed = {}
        for name in ("bad-coaction-scale.json", "bad-coaction-coflat.json"):
            a = hio.parse((DATA / name).read_bytes(), {})
            for c in check_coaction(a).checks:
                if not c.ok:
                    if not c.witness:
                        return False
                    failed[c.name] = True
        return set(failed) == {"comodule", "counitary", "coflat", "coflat-counitary"}

    _criterion(3, "all four constructors pass; negatives fail each axiom with witness", check)


def test_criterion_4_cocharacter_group():
    def check():
        a = h4_graded_coaction()
        e = conv_unit(a.coalgebra, a.hopf.algebra)
        base = [e] + [
            ConvElement(a.coalgebra, a.hopf.algebra, LinMap.from_entries(
                a.coalgebra.space, a.hopf.space, {"c_e": {"1": 1}, "c_g": {"gx": t}}
            ))
            for t in (1, -1, 2, -2, 3)
        ]
        seen = set()
        count = 0
        for f in base:
            for g in base:
                prod = convolution(f, g)
                if prod.map.mat not in seen:
                    seen.add(prod.map.mat)
                    if not check_cocharacter(prod, a).ok:
                        return False
                    formula = cocharacter_inverse(prod, a)
                    solver = convolution_inverse(prod)
                    if solver is None or formula.map != solver.map:
                        return False
                    if not check_cocharacter(formula, a).ok:
                        return False
                    count += 1
        # plus the trivial cocharacter over every fixture coaction
        for b in _all_coactions():
            eb = conv_unit(b.coalgebra, b.hopf.algebra)
            if not check_cocharacter(eb, b).ok:
                return False
            if cocharacter_inverse(eb, b).map != convolution_inverse(eb).map:
                return False
            count += 1
        return count >= 20

    _criterion(4, "products and both inverses agree on >= 20 cocharacters", check)


def test_criterion_5_coderivation_exponential():
    def check():
        phi, a = h4_nilpotent_coderivation()
        e = conv_unit(a.coalgebra, a.hopf.algebra)
        # nilpotency order <= 3: phi * phi = 0 already
        if not convolution(phi, phi).map.is_zero():
            return False
        ex = convolution_exponential(phi, 3)
        if ex.map != e.map + phi.map:
            return False
        if not check_cocharacter(ex, a).ok:
            return False
        neg = ConvElement(phi.coalgebra, phi.algebra, -phi.map)
        if convolution(ex, convolution_exponential(neg, 3)) != e:
            return False
        from hopfkit.schism import exp_coderivation_is_cocharacter

        return exp_coderivation_is_cocharacter(phi, a).ok

    _criterion(5, "exp of the nilpotent coderivation is a cocharacter; binomial identity", check)


def test_criterion_6_schism_differential_laws():
    def check():
        pairs = _comm_pairs()
        for a in pairs:
            for q in (1, 2):
                rng = random.Random(100 * q)
                for _ in range(100):
                    f = random_gamma0_cochain(a, q, rng)
                    if not check_dd(f, a):
                        return False
        rng = random.Random(7)
        for a in pairs:
            for _ in range(25):
                f = random_gamma0_cochain(a, 1, rng)
                g = random_gamma0_cochain(a, 1, rng)
                if not check_d_homomorphism(f, g, a):
                    return False
        return True

    _criterion(6, "D.D = e on 100 cochains (degrees 1,2, four pairs); D(f*g) = D(f)*D(g) on 100 pairs", check)


def test_criterion_7_kernel_d0_and_homoschism0():
    def check():
        from hopfkit.structures import scalar_algebra

        sa = scalar_algebra()
        for a in _comm_pairs():
            ker = kernel_d0_functionals(a)
            e0 = conv_unit(a.coalgebra, a.hopf.algebra)
            # inclusion 1: invertible kernel functionals have trivial D^0
            total = [sum(col) for col in zip(*ker.gens)]
            fm = LinMap(a.coalgebra.space, sa.space,
                        Mat(1, a.coalgebra.dim, {(0, j): v for j, v in enumerate(total) if v}))
            cand = ConvElement(a.coalgebra, sa, fm)
            if convolution_inverse(cand) is None:
                return False
            if schism_differential(SchismCochain(0, cand), a).element.map != e0.map:
                return False
            # inclusion 2: sampled functionals with trivial D^0 lie in the kernel
            rng = random.Random(13)
            for _ in range(20):
                f = random_gamma0_cochain(a, 0, rng)
                vec = tuple(f.element.map.mat.data.get((0, j), Q(0))
                            for j in range(a.coalgebra.dim))
                trivial_d = schism_differential(f, a).element.map == e0.map
                if trivial_d != ker.contains_vector(vec):
                    return False
            # S^0 equals the coinvariants transported to the cocenter
            z = cocenter(a.coalgebra)
            if z.coideal.dim != 0:
                return False
            w = coinvariants(a)
            proj = [z.projection.apply(g) for g in w.gens]
            if homoschism0(a) != type(w).from_vectors(z.quotient.space, proj):
                return False
        return True

    _criterion(7, "ker D^0 <-> coinvariants double inclusion; S^0 = cocenter coinvariants", check)


def test_criterion_8_antipode_coaction_identities():
    def check():
        return all(verify_lemma_antipode_identities(a).ok for a in _all_coactions())

    _criterion(8, "both antipode-coaction identities hold on every fixture coaction", check)


def test_criterion_9_comodule_suite():
    def check():
        h4 = sweedler_h4()
        m = regular_comodule(h4.coalgebra)
        w, com = cotensor(m, m)
        if w.dim != h4.dim:
            return False
        # (eps (x) id) restricted to C box C is an isomorphism onto C
        eps_id = h4.counit.mat.kron(Mat.identity(h4.dim))
        restricted = Mat.from_columns(
            [dict(enumerate(eps_id.apply(g))) for g in w.gens], h4.dim
        )
        probe = LinMap(com.space, h4.space, restricted)
        if image(probe).dim != h4.dim:
            return False
        # equivariant cotensor lift
        a = h4_graded_coaction()
        mg = regular_comodule(a.coalgebra, a)
        lifted = equivariant_cotensor_lift(mg, mg, a)
        if not (check_comodule(lifted).ok and check_equivariant_comodule(lifted, a)
                and check_equivariant_comodule_left(lifted, a)):
            return False
        # action law delta_{phi*psi} = (delta_phi)_psi
        phi = ConvElement(a.coalgebra, a.hopf.algebra, LinMap.from_entries(
            a.coalgebra.space, a.hopf.space, {"c_e": {"1": 1}, "c_g": {"gx": 1}}
        ))
        psi = ConvElement(a.coalgebra, a.hopf.algebra, LinMap.from_entries(
            a.coalgebra.space, a.hopf.space, {"c_e": {"1": 1}, "c_g": {"gx": -2}}
        ))
        if not check_twirl_action(mg, phi, psi, a):
            return False
        # inner-twirl isomorphism constructed explicitly and verified
        adj = adjoint_coaction(h4)
        mr = regular_comodule(h4.coalgebra, adj)
        f, tw = inner_twirl_isomorphism(mr, "g", adj)
        if not check_equivariant_comodule_morphism(tw, mr, f):
            return False
        # comatrix n = 2 pipeline; row box column = C is verified internally
        mn, row, col = comatrix_coalgebra(a.coalgebra, 2, a)
        from hopfkit.structures import check_coalgebra

        return (check_coalgebra(mn).ok and check_comodule(row).ok
                and check_comodule(col).ok)

    _criterion(9, "cotensor, equivariant lift, twirl action law, inner-twirl iso, comatrix n=2", check)


def test_criterion_10_coradical_filtration():
    def check():
        h4 = sweedler_h4()
        r = coradical_filtration(h4)
        from hopfkit.linalg import Subspace

        if r.coradical != Subspace.from_vectors(h4.space, [(1, 0, 0, 0), (0, 1, 0, 0)]):
            return False
        if [s.dim for s in r.filtration.subspaces] != [2, 4]:
            return False
        # five filtration invariants hold under independent re-verification
        rep = r.filtration.verify(h4)
        if not (rep.ok and len(rep.checks) == 5):
            return False
        for h in (zmod_hopf(2), zmod_hopf(3), s3_hopf()):
            rg = coradical_filtration(h)
            if not rg.ok or len(rg.filtration.subspaces) != 1:
                return False
        return True

    _criterion(10, "H^0(H4) = span{1,g}, H^1 = H4, five invariants re-verified; Q[G] length 1", check)


def test_criterion_11_tooling(capsys):
    def check():
        negative_parse = {"bad-rational.json", "bad-schema.json", "unresolved-ref.json"}
        math_fail = {"h4-bad-antipode.json", "non-coassoc.json",
                     "bad-coaction-scale.json", "bad-coaction-coflat.json"}
        for p in sorted(DATA.iterdir(), key=lambda q: q.name):
            if not p.name.endswith(".json"):
                continue
            b = p.read_bytes()
            if p.name in negative_parse:
                expect = 2
            elif p.name in math_fail:
                expect = 1
            else:
                expect = 0
                # byte-exact round-trip through serialize . parse
                raw = json.loads(b)
                objs = hio.parse(b, {})
                if isinstance(raw, list):
                    out = hio.canonical_json(
                        [hio.to_dict(o, d["name"]) for o, d in zip(objs, raw)]
                    )
                else:
                    out = hio.serialize(objs, raw["name"])
                if out != b:
                    return False
            code = cli_main(["check", str(p)])
            capsys.readouterr()
            if code != expect:
                return False
        return True

    _criterion(11, "byte-exact round-trips; exit codes 0/1/2 across the corpus", check)
