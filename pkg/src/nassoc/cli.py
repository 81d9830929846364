"""Command-line front end.

One subcommand per engine operation, plus reproduce-paper, which re-runs
the whole verification matrix.  Exit codes: 0 = all checks passed or the
computation succeeded, 1 = a checked claim failed (counterexample in the
report), 2 = usage or parse error.  --json switches the rendering; both
renderings carry identical verdicts and exact rational strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import corpus
from .algebras import (
    AlgebraStructure,
    check_identity,
    compatible_check,
    kantor_square,
    mutation,
    scalar_mutation,
    unital_hull,
)
from .errors import NassocError, ParseError
from .exact.poly import PolyQ
from .freealg import free_basis, label_str, normal_form
from .operads import (
    OperadPresentation,
    hilbert,
    implies,
    koszul_dual,
    koszulity_residual,
    multilinear_dim,
    nice_index,
    prove_zero,
)
from .structure import (
    CocycleSpec,
    algebra_from_cocycle,
    derivation_algebra,
    fingerprint,
    is_leibniz_derivation,
    peirce,
    powers_and_nilpotency,
    wedderburn,
)
from .systems import BUILTIN_SYSTEM_NAMES, builtin_system
from .terms import multilinearize, parse_expr, parse_identity, parse_system, shapes


class Report:
    def __init__(self, command: str):
        self.command = command
        self.verdict: bool | None = None
        self.data: dict = {}
        self.lines: list[str] = []

    def line(self, text: str):
        self.lines.append(text)

    def render(self, as_json: bool) -> str:
        if as_json:
            payload = {"command": self.command, "verdict": self.verdict, **self.data}
            return json.dumps(payload, indent=2, default=str)
        return "\n".join(self.lines)


def _load_system(value: str):
    if value in BUILTIN_SYSTEM_NAMES:
        return builtin_system(value)
    with open(value) as fh:
        return parse_system(value, fh.read())


def _load_algebra(value: str, sets):
    alg = corpus.load_algebra(value)
    if sets:
        env = {}
        for item in sets:
            name, _, text = item.partition("=")
            env[name] = Fraction(text)
        alg = alg.specialize(env)
    return alg


def _parse_element(A: AlgebraStructure, text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != A.dim:
        raise ParseError(f"expected {A.dim} coordinates, got {len(parts)}")
    return A.element([Fraction(p) for p in parts])


def _algebra_data(A: AlgebraStructure) -> dict:
    return A.to_json_dict()


def _print_algebra(report: Report, A: AlgebraStructure):
    report.line(f"{A.name} (dim {A.dim}"
                + (f", parameters {', '.join(A.parameters)})" if A.parameters else ")"))
    for line in A.products_str():
        report.line("  " + line)
    report.data["algebra"] = _algebra_data(A)


def _check_and_report(report: Report, result) -> int:
    report.verdict = result.holds
    if result.holds:
        report.line("holds")
        return 0
    report.line(f"counterexample: {result.counterexample}")
    report.data["counterexample"] = {
        "identity": result.counterexample.identity,
        "tuple": list(result.counterexample.tuple_labels),
        "coordinate": result.counterexample.coordinate,
        "value": result.counterexample.value,
        "mode": result.counterexample.mode,
    }
    return 1


# ---------------------------------------------------------------------------
# subcommand handlers (each returns an exit code)


def cmd_dims(args, report):
    sys_ = _load_system(args.system)
    dims = [multilinear_dim(sys_, n, args.cap) for n in range(1, args.max_degree + 1)]
    report.data["dims"] = dims
    report.line(" ".join(str(d) for d in dims))
    return 0


def cmd_hilbert(args, report):
    series = hilbert(_load_system(args.system), args.order, args.cap)
    report.data["series"] = str(series)
    report.data["coefficients"] = [str(c) for c in series.coeffs]
    report.line(str(series))
    return 0


def cmd_koszulity(args, report):
    sys_p = _load_system(args.system)
    sys_q = _load_system(args.dual) if args.dual else koszul_dual(
        OperadPresentation.of_system(sys_p)
    ).to_identity_system()
    res = koszulity_residual(sys_p, sys_q, args.order, args.cap)
    report.data["residual"] = str(res)
    report.data["zero"] = res.is_zero()
    report.line(f"residual: {res}")
    report.line("consistent with Koszulity" if res.is_zero() else "not Koszul")
    return 0


def cmd_dual(args, report):
    pres = OperadPresentation.of_system(_load_system(args.system))
    dual = koszul_dual(pres)
    ids = dual.to_identity_system()
    report.data["relations"] = [str(i) for i in ids.identities]
    report.data["self_dual"] = dual.same_space(pres)
    report.line(f"dual relation space (dim {dual.dim}):")
    for ident in ids.identities:
        report.line("  " + str(ident))
    report.line("self-dual" if report.data["self_dual"] else "not self-dual")
    return 0


def cmd_implies(args, report):
    ok = implies(_load_system(args.sub), _load_system(args.sup), args.degree, args.cap)
    report.verdict = ok
    report.line("contained" if ok else "not contained")
    return 0 if ok else 1


def cmd_prove_zero(args, report):
    ok = prove_zero(parse_expr(args.expr), _load_system(args.system), args.cap)
    report.verdict = ok
    report.line("zero in the variety" if ok else "not a consequence")
    return 0 if ok else 1


def cmd_nice_index(args, report):
    k = nice_index(_load_system(args.system), args.kmax, args.cap)
    report.data["nice_index"] = k
    report.line(str(k) if k is not None else "none")
    return 0


def cmd_normal_form(args, report):
    nf = normal_form(parse_expr(args.expr), args.variety, args.cap)
    report.data["terms"] = [[str(c), label_str(lab)] for c, lab in nf.terms]
    report.line(str(nf))
    return 0


def cmd_free_basis(args, report):
    labels = free_basis(args.variety, args.degree, args.generators, args.multilinear)
    report.data["count"] = len(labels)
    report.data["labels"] = [label_str(lab) for lab in labels]
    for lab in labels:
        report.line(label_str(lab))
    report.line(f"count: {len(labels)}")
    return 0


def cmd_check_identity(args, report):
    A = _load_algebra(args.algebra, args.set)
    result = check_identity(A, _load_system(args.system), args.mode)
    return _check_and_report(report, result)


def cmd_polarize(args, report):
    ident = parse_identity(args.identity)
    out = multilinearize(ident)
    report.data["identities"] = [str(i) for i in out]
    for i in out:
        report.line(str(i))
    return 0


def _construction(args, report, build):
    A = _load_algebra(args.algebra, args.set)
    result = build(A)
    _print_algebra(report, result)
    if args.check_system:
        res = check_identity(result, _load_system(args.check_system))
        return _check_and_report(report, res)
    return 0


def cmd_mutate(args, report):
    def build(A):
        if args.generic:
            ext, p = A.generic_element("p")
            ext, q = ext.generic_element("q")
            return mutation(ext, ext.element(p.coords), q)
        p = _parse_element(A, args.p)
        q = _parse_element(A, args.q)
        return mutation(A, p, q)

    return _construction(args, report, build)


def cmd_kantor(args, report):
    def build(A):
        if args.generic:
            ext, p = A.generic_element("p")
            return kantor_square(ext, p)
        return kantor_square(A, _parse_element(A, args.p))

    return _construction(args, report, build)


def cmd_hull(args, report):
    return _construction(args, report, unital_hull)


def cmd_scalar_mutate(args, report):
    def build(A):
        alpha = PolyQ.var(args.alpha) if args.alpha.isalpha() else PolyQ.const(Fraction(args.alpha))
        beta = PolyQ.var(args.beta) if args.beta.isalpha() else PolyQ.const(Fraction(args.beta))
        return scalar_mutation(A, alpha, beta)

    return _construction(args, report, build)


def cmd_compatible(args, report):
    A = _load_algebra(args.algebra, args.set)
    B = _load_algebra(args.algebra_b, args.set)
    result = compatible_check(A, B, _load_system(args.system))
    return _check_and_report(report, result)


def cmd_derivations(args, report):
    A = _load_algebra(args.algebra, args.set)
    der = derivation_algebra(A)
    report.data["dim"] = der.dim
    report.data["matrices"] = [[[str(x) for x in row] for row in m] for m in der.matrices]
    report.line(f"dim Der = {der.dim}")
    for idx, m in enumerate(der.matrices, 1):
        report.line(f"D{idx}:")
        for row in m:
            report.line("  [" + ", ".join(str(x) for x in row) + "]")
    return 0


def cmd_leibniz(args, report):
    A = _load_algebra(args.algebra, args.set)
    with open(args.matrix) as fh:
        rows = json.load(fh)
    M = [[Fraction(x) for x in row] for row in rows]
    bracketing = "all" if args.bracketing == "all" else shapes(args.order)[int(args.bracketing)]
    ok = is_leibniz_derivation(A, M, args.order, bracketing)
    report.verdict = ok
    report.line("Leibniz derivation" if ok else "not a Leibniz derivation")
    return 0 if ok else 1


def cmd_powers(args, report):
    A = _load_algebra(args.algebra, args.set)
    rep = powers_and_nilpotency(A)
    report.data.update(
        {
            "power_dims": rep.power_dims,
            "derived_dims": rep.derived_dims,
            "is_nilpotent": rep.is_nilpotent,
            "is_solvable": rep.is_solvable,
            "nilpotency_class": rep.nilpotency_class,
        }
    )
    report.line(str(rep))
    return 0


def cmd_peirce(args, report):
    A = _load_algebra(args.algebra, args.set)
    e = _parse_element(A, args.idempotent)
    split = peirce(A, e)
    report.data.update(
        {
            "dims": list(split.dims()),
            "a_half_zero": split.a_half_zero,
            "a0_ideal": split.a0_ideal,
            "a1_ideal": split.a1_ideal,
            "cross_products_zero": split.cross_products_zero,
            "a0": [[str(x) for x in v] for v in split.a0],
            "a1": [[str(x) for x in v] for v in split.a1],
        }
    )
    report.line(f"dims (A0, A1/2, A1) = {split.dims()}")
    report.line(f"A1/2 = 0: {split.a_half_zero}; ideals: {split.a0_ideal and split.a1_ideal}; "
                f"A0*A1 = A1*A0 = 0: {split.cross_products_zero}")
    return 0


def cmd_wedderburn(args, report):
    A = _load_algebra(args.algebra, args.set)
    split = wedderburn(A)
    report.verdict = split.all_ok
    report.data.update(
        {
            "dims": list(split.dims()),
            "flags": split.flags,
            "idempotents": [[str(x) for x in v] for v in split.s_basis],
            "radical": [[str(x) for x in v] for v in split.r_basis],
        }
    )
    report.line(f"dim S = {split.dims()[0]}, dim R = {split.dims()[1]}")
    for k, v in split.flags.items():
        report.line(f"  {k}: {v}")
    return 0 if split.all_ok else 1


def cmd_cocycle(args, report):
    L = _load_algebra(args.lie, args.set)
    with open(args.theta) as fh:
        data = json.load(fh)
    entries = {}
    env = {p: PolyQ.var(p) for p in data.get("parameters", ())}
    from . import exprparse

    for key, vec in data["entries"].items():
        i, j = (int(x) for x in key.split(","))
        entries[(i, j)] = tuple(
            exprparse.evaluate(s, env, PolyQ.const) if isinstance(s, str) else PolyQ.const(s)
            for s in vec
        )
    theta = CocycleSpec(L.dim, entries)
    result = algebra_from_cocycle(L, theta, args.name)
    _print_algebra(report, result)
    if args.check_system:
        return _check_and_report(report, check_identity(result, _load_system(args.check_system)))
    return 0


def cmd_fingerprint(args, report):
    A = _load_algebra(args.algebra, args.set)
    fp = fingerprint(A)
    report.data["fingerprint"] = {
        "dim": fp.dim,
        "dim_a2": fp.dim_a2,
        "dim_a3": fp.dim_a3,
        "dim_annihilator": fp.dim_annihilator,
        "dim_der": fp.dim_der,
        "dim_der_plus": fp.dim_der_plus,
        "nilpotency_class": fp.nilpotency_class,
        "commutative": fp.commutative,
        "associative": fp.associative,
        "shift_associative": fp.shift_associative,
        "cyclic_associative": fp.cyclic_associative,
    }
    report.line(str(fp.as_tuple()))
    return 0


def cmd_transform(args, report):
    from .moduli import ParamBasis, transform

    A = _load_algebra(args.algebra, args.set)
    if args.cert:
        cert = corpus.load_certificate(args.cert)
        basis = ParamBasis.from_strings(cert["basis"], cert.get("subst"))
    else:
        basis = ParamBasis.from_strings(json.loads(args.basis), json.loads(args.subst) if args.subst else None)
    out = transform(A, basis)
    entries = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                if out[i][j][k] != 0:
                    entries.append({"i": i + 1, "j": j + 1, "k": k + 1, "value": str(out[i][j][k])})
                    report.line(f"c[{i+1}][{j+1}][{k+1}] = {out[i][j][k]}")
    report.data["constants"] = entries
    return 0


def cmd_degenerate(args, report):
    cert = corpus.load_certificate(args.cert)
    result = corpus.run_certificate(cert, sample=args.sample)
    results = result if isinstance(result, list) else [result]
    ok = all(r.verdict for r in results)
    report.verdict = ok
    report.data["checks"] = []
    for r in results:
        entry = {"source": r.source, "target": r.target, "verdict": r.verdict}
        if not r.verdict:
            entry["failures"] = [
                {"i": e.i, "j": e.j, "k": e.k, "value": e.value, "limit": str(e.limit), "expected": str(e.expected)}
                for e in r.failures()
            ]
        report.data["checks"].append(entry)
        report.line(f"{r.source} -> {r.target}: {'verified' if r.verdict else 'FAILED'}")
        for e in r.failures():
            report.line(f"  c[{e.i}][{e.j}][{e.k}](t) = {e.value}, limit {e.limit}, expected {e.expected}")
    return 0 if ok else 1


def cmd_orbit_dim(args, report):
    from .moduli import orbit_dim

    A = _load_algebra(args.algebra, args.set)
    d = orbit_dim(A)
    report.data["orbit_dim"] = d
    report.line(str(d))
    return 0


def cmd_closed_set(args, report):
    from .moduli import closed_set_membership

    spec = corpus.load_closed_set(args.spec)
    A = _load_algebra(args.algebra, args.set)
    member = closed_set_membership(spec, A)
    report.verdict = member
    report.line("member" if member else "not a member")
    return 0 if member else 1


def cmd_pencil_invariant(args, report):
    from .moduli import pencil_invariant

    A = _load_algebra(args.algebra, args.set)
    value = pencil_invariant(A)
    report.data["invariant"] = str(value)
    report.line(str(value))
    return 0


def cmd_reproduce(args, report):
    from .reproduce import run_reproduction

    rows, elapsed = run_reproduction(only=args.only, seed=args.seed, cap=args.cap)
    passed = sum(1 for r in rows if r.passed)
    report.verdict = passed == len(rows)
    report.data["rows"] = [
        {"section": r.section, "name": r.name, "passed": r.passed, "detail": r.detail} for r in rows
    ]
    report.data["elapsed_seconds"] = round(elapsed, 2)
    for r in rows:
        marker = "PASS" if r.passed else "FAIL"
        suffix = f"  ({r.detail})" if r.detail else ""
        report.line(f"[{marker}] {r.section}: {r.name}{suffix}")
    report.line(f"{passed}/{len(rows)} rows passed in {elapsed:.1f}s")
    return 0 if report.verdict else 1


# ---------------------------------------------------------------------------
# parser assembly


def _add_common(sp, cap=True, sets=False):
    sp.add_argument("--json", action="store_true", help="machine-readable report")
    if cap:
        sp.add_argument("--cap", type=int, default=None, help="degree cap override (default 6, max 8)")
    if sets:
        sp.add_argument("--set", action="append", default=[], metavar="NAME=VALUE",
                        help="specialize an algebra parameter (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nassoc",
        description="Exact verification tools for nonassociative algebra varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("dims", help="multilinear dimensions of a variety")
    sp.add_argument("--system", required=True)
    sp.add_argument("--max-degree", type=int, default=5)
    _add_common(sp)
    sp.set_defaults(fn=cmd_dims)

    sp = sub.add_parser("hilbert", help="signed exponential series")
    sp.add_argument("--system", required=True)
    sp.add_argument("--order", type=int, default=5)
    _add_common(sp)
    sp.set_defaults(fn=cmd_hilbert)

    sp = sub.add_parser("koszulity", help="composition residual H_P(H_Q(t)) - t")
    sp.add_argument("--system", required=True)
    sp.add_argument("--dual", help="second system; defaults to the computed dual")
    sp.add_argument("--order", type=int, default=5)
    _add_common(sp)
    sp.set_defaults(fn=cmd_koszulity)

    sp = sub.add_parser("dual", help="Koszul dual presentation")
    sp.add_argument("--system", required=True)
    _add_common(sp)
    sp.set_defaults(fn=cmd_dual)

    sp = sub.add_parser("implies", help="variety containment at a degree")
    sp.add_argument("--sub", required=True, help="smaller variety's system")
    sp.add_argument("--sup", required=True, help="larger variety's system")
    sp.add_argument("--degree", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(fn=cmd_implies)

    sp = sub.add_parser("prove-zero", help="membership in the consequence ideal")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--system", required=True)
    _add_common(sp)
    sp.set_defaults(fn=cmd_prove_zero)

    sp = sub.add_parser("nice-index", help="minimal k with an order/association free product")
    sp.add_argument("--system", required=True)
    sp.add_argument("--kmax", type=int, default=6)
    _add_common(sp)
    sp.set_defaults(fn=cmd_nice_index)

    sp = sub.add_parser("normal-form", help="free-algebra normal form")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--variety", choices=("sas", "cas"), default="sas")
    _add_common(sp)
    sp.set_defaults(fn=cmd_normal_form)

    sp = sub.add_parser("free-basis", help="free-algebra basis enumeration")
    sp.add_argument("--variety", choices=("sas", "cas"), default="sas")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--generators", type=int, required=True)
    sp.add_argument("--multilinear", action="store_true")
    _add_common(sp)
    sp.set_defaults(fn=cmd_free_basis)

    sp = sub.add_parser("check-identity", help="identity check on an algebra")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--system", required=True)
    sp.add_argument("--mode", choices=("multilinear", "symbolic"), default="multilinear")
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_check_identity)

    sp = sub.add_parser("polarize", help="multilinearize an identity")
    sp.add_argument("--identity", required=True)
    _add_common(sp)
    sp.set_defaults(fn=cmd_polarize)

    sp = sub.add_parser("mutate", help="(p,q)-mutation")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--p")
    sp.add_argument("--q")
    sp.add_argument("--generic", action="store_true", help="use generic p, q coordinates")
    sp.add_argument("--check-system")
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_mutate)

    sp = sub.add_parser("kantor", help="Kantor square")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--p")
    sp.add_argument("--generic", action="store_true")
    sp.add_argument("--check-system")
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_kantor)

    sp = sub.add_parser("hull", help="unital hull")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--check-system")
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_hull)

    sp = sub.add_parser("scalar-mutate", help="scalar mutation alpha*xy + beta*yx")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--alpha", default="u")
    sp.add_argument("--beta", default="v")
    sp.add_argument("--check-system")
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_scalar_mutate)

    sp = sub.add_parser("compatible", help="compatible pair of products")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--algebra-b", required=True)
    sp.add_argument("--system", default="sas")
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_compatible)

    sp = sub.add_parser("derivations", help="derivation algebra")
    sp.add_argument("--algebra", required=True)
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_derivations)

    sp = sub.add_parser("leibniz", help="Leibniz-derivation check")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--matrix", required=True, help="JSON file with matrix rows")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--bracketing", default="all")
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_leibniz)

    sp = sub.add_parser("powers", help="power and derived chains")
    sp.add_argument("--algebra", required=True)
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_powers)

    sp = sub.add_parser("peirce", help="Peirce split at an idempotent")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--idempotent", required=True, help="comma-separated coordinates")
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_peirce)

    sp = sub.add_parser("wedderburn", help="semisimple + radical split with verification")
    sp.add_argument("--algebra", required=True)
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_wedderburn)

    sp = sub.add_parser("cocycle", help="product theta(x,y) + [x,y] on a Lie algebra")
    sp.add_argument("--lie", required=True)
    sp.add_argument("--theta", required=True, help="JSON file of symmetric entries")
    sp.add_argument("--name")
    sp.add_argument("--check-system")
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_cocycle)

    sp = sub.add_parser("fingerprint", help="basis-change invariants")
    sp.add_argument("--algebra", required=True)
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_fingerprint)

    sp = sub.add_parser("transform", help="structure constants in a parametrized basis")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--cert", help="take basis/subst from a certificate file")
    sp.add_argument("--basis", help="JSON list of columns of rational-function strings")
    sp.add_argument("--subst", help="JSON object of parameter substitutions")
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_transform)

    sp = sub.add_parser("degenerate", help="check a degeneration certificate")
    sp.add_argument("--cert", required=True)
    sp.add_argument("--sample", help="family parameter sample (rational)")
    _add_common(sp)
    sp.set_defaults(fn=cmd_degenerate)

    sp = sub.add_parser("orbit-dim", help="n^2 - dim Der (plus family parameters)")
    sp.add_argument("--algebra", required=True)
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_orbit_dim)

    sp = sub.add_parser("closed-set", help="membership in a closed-set specification")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--algebra", required=True)
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_closed_set)

    sp = sub.add_parser("pencil-invariant", help="pencil invariant of a 3-dimensional algebra")
    sp.add_argument("--algebra", required=True)
    _add_common(sp, sets=True)
    sp.set_defaults(fn=cmd_pencil_invariant)

    sp = sub.add_parser("reproduce-paper", help="run the full verification matrix")
    sp.add_argument("--only", help="restrict to one section")
    sp.add_argument("--seed", type=int, default=0)
    _add_common(sp)
    sp.set_defaults(fn=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = Report(args.command)
    try:
        code = args.fn(args, report)
    except (NassocError, FileNotFoundError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    output = report.render(args.json)
    if output:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
