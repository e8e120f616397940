"""Command-line front end: ``freemedial <verb> ...`` (also ``python -m freemedial``).

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import acceptance
from .errors import AlgebraError
from .finite import (
    FiniteBinaryTable,
    affine_quandle,
    check_axioms,
    check_I_quandle,
    check_reductivity,
    check_symmetry,
    dis,
    free_2reductive_symmetric,
    lmlt,
    load_table,
    medial_iff_dis_abelian,
    orbit_group,
    orbits,
)
from .free import (
    augmentation,
    decomposition_word,
    element_from_json,
    embed_affine,
    joyce_isomorphism,
    joyce_model_star,
)
from .poly import factor_symmetric_poly, parse_poly, product, symmetric_poly
from .ring import RingSpec, crt_residues
from .terms import decide_identity, normalize, parse, parse_variety


class UsageError(Exception):
    pass


def _term(text: str):
    return parse(re.sub(r"\bbs\b", r"\\", text))


def _emit(args, human: str, data) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(human)


def _variety(text: str):
    try:
        return parse_variety(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_json_arg(text: str):
    if text == "-":
        text = sys.stdin.read()
    return json.loads(text)


# -- verbs -----------------------------------------------------------------------

def cmd_normalize(args):
    variety = _variety(args.variety)
    nf = normalize(_term(args.term), variety)
    _emit(args, str(nf), {"term": args.term, "variety": str(variety), "nf": nf.to_json()})
    return 0


def cmd_decide(args):
    variety = _variety(args.variety)
    verdict = decide_identity(_term(args.lhs), _term(args.rhs), variety)
    human = str(verdict)
    if not verdict.valid:
        human += f"\n  lhs: {verdict.lhs_nf}\n  rhs: {verdict.rhs_nf}"
    _emit(args, human, verdict.to_json())
    return 0


def _parse_matrix(text: str):
    if ";" not in text and len(text.split()) == 1:
        return int(text)
    return [[int(v) for v in row.split()] for row in text.split(";")]


def cmd_construct(args):
    if args.kind == "affine":
        orders = [int(k) for k in args.orders.split(",")]
        Q = affine_quandle(orders, _parse_matrix(args.aut))
    else:
        Q = free_2reductive_symmetric(args.n, args.gens)
    text = json.dumps(Q.to_json(), sort_keys=True) if args.json else Q.to_text().rstrip("\n")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {Q.size}-element table to {args.out}")
    else:
        print(text)
    return 0


def analyze_table(Q: FiniteBinaryTable, max_param: int = 6) -> dict:
    report = check_axioms(Q)
    out = {
        "size": Q.size,
        "idempotent": report.idempotent,
        "left_quasigroup": report.left_quasigroup,
        "left_distributive": report.left_distributive,
        "medial": report.medial,
        "quandle": report.is_quandle,
    }
    if not report.is_quandle:
        return out
    D = dis(Q)
    med = medial_iff_dis_abelian(Q)
    out.update({
        "lmlt_order": lmlt(Q).order,
        "dis_order": D.order,
        "dis_abelian": med.dis_abelian,
        "medial_iff_dis_abelian_agrees": med.agree,
        "orbits": [[Q.label(x) for x in orb] for orb in orbits(Q)],
        "symmetric_for": [n for n in range(1, max_param + 1) if check_symmetry(Q, n)],
        "reductive_for": [m for m in range(1, max_param + 1) if check_reductivity(Q, m)],
    })
    if report.medial:
        out["orbit_group_orders"] = [len(orbit_group(Q, orb[0], D)) for orb in orbits(Q)]
        out["I_quandle_symmetric"] = [n for n in range(1, max_param + 1)
                                      if check_I_quandle(Q, symmetric_poly(n))]
    return out


def cmd_analyze(args):
    Q = load_table(args.table, args.labels)
    data = analyze_table(Q, args.max_param)

    def yn(v):
        return "yes" if v else "no"

    lines = [f"size: {data['size']}"]
    for key in ("idempotent", "left_quasigroup", "left_distributive", "medial", "quandle"):
        lines.append(f"{key.replace('_', ' ')}: {yn(data[key])}")
    if data["quandle"]:
        lines.append(f"|LMlt| = {data['lmlt_order']}, |Dis| = {data['dis_order']}, "
                     f"Dis abelian: {yn(data['dis_abelian'])} "
                     f"({'agrees' if data['medial_iff_dis_abelian_agrees'] else 'DISAGREES'} with mediality)")
        lines.append("orbits: " + " ".join("{" + ",".join(o) + "}" for o in data["orbits"]))
        if "orbit_group_orders" in data:
            lines.append(f"orbit group orders: {data['orbit_group_orders']}")
        lines.append(f"n-symmetric for n in {data['symmetric_for']}")
        lines.append(f"m-reductive for m in {data['reductive_for']}")
    _emit(args, "\n".join(lines), data)
    return 0


def cmd_embed(args):
    p = element_from_json(_read_json_arg(args.element), args.gens.split(",") if args.gens else None)
    vec = embed_affine(p)
    lam = augmentation(vec)
    human = f"({', '.join(str(v) for v in vec.values())})  Lambda = ({', '.join(map(str, lam.values()))})"
    _emit(args, human, {"vector": {x: str(v) for x, v in vec.items()}, "lambda": lam,
                        "ring": str(p.ctx.ring)})
    return 0


def cmd_unembed(args):
    from .free import FreeQuandle, GeneratorSet, unembed_affine

    variety = _variety(args.variety)
    ctx = variety.context(GeneratorSet.of(args.gens.split(",")))
    data = _read_json_arg(args.vector)
    if isinstance(data, list):
        data = dict(zip(ctx.gens.minus, data))
    p = unembed_affine(data, ctx)
    _emit(args, f"{p}\n{decomposition_word(p)}", p.to_json())
    return 0


def cmd_crt(args):
    f = symmetric_poly(args.n)
    factors = factor_symmetric_poly(args.n)
    ok = product(factors) == f
    lines = [f"1+...+t^{args.n - 1} = {f}", "factors: " + ", ".join(map(str, factors)),
             "product check: " + ("ok" if ok else "FAILED")]
    data = {"n": args.n, "poly": str(f), "factors": [str(g) for g in factors], "product_ok": ok}
    if args.element:
        a = RingSpec.quotient(f)(parse_poly(args.element))
        res = crt_residues(a, factors)
        lines.append(f"residues of {a}: " + ", ".join(map(str, res)))
        data["element"] = str(a)
        data["residues"] = [str(r) for r in res]
    _emit(args, "\n".join(lines), data)
    return 0 if ok else 1


def cmd_joyce(args):
    gens = [f"x{i}" for i in range(args.gens)]
    ctx, values, pairs = acceptance.joyce_values(args.check, gens)
    iso = {p: joyce_isomorphism(p) for p in values}
    injective = len(set(iso.values())) == len(iso)
    violations = sum(
        joyce_isomorphism(p * q) != joyce_model_star(iso[p], iso[q]) for p, q in pairs
    )
    ok = injective and violations == 0
    human = (f"{len(values)} distinct values of terms with <= {args.check} variables over "
             f"{args.gens} generators; injective: {'yes' if injective else 'no'}; "
             f"homomorphism violations: {violations}")
    _emit(args, human, {"values": len(values), "pairs": len(pairs), "injective": injective,
                        "violations": violations})
    return 0 if ok else 1


def cmd_verify_example(args):
    vector = None
    if args.a:
        coords = [c.strip() for c in args.a.split(",")]
        vector = {str(i + 1): c for i, c in enumerate(coords)}
        gens = tuple(str(i) for i in range(len(coords) + 1))
    else:
        gens = ("0", "1", "2")
    ok, lines = acceptance.verify_worked_example(vector, gens)
    lines.append("PASS" if ok else "FAIL")
    _emit(args, "\n".join(lines), {"passed": ok, "report": lines})
    return 0 if ok else 1


def cmd_suite(args):
    results = acceptance.run_all(args.threads)
    if args.json:
        print(json.dumps([{"criterion": r.number, "name": r.name, "passed": r.passed,
                           "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results]))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


# -- wiring ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1, help="worker threads where supported")

    parser = argparse.ArgumentParser(prog="freemedial", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("normalize", parents=[common], help="normal form of a term")
    p.add_argument("--variety", default="medial")
    p.add_argument("term")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("decide", parents=[common], help="decide an identity lhs = rhs")
    p.add_argument("--variety", default="medial")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", parents=[common], help="build a Cayley table")
    p.add_argument("kind", choices=["affine", "red2sym"])
    p.add_argument("--orders", default="3", help="cyclic orders, e.g. 2,2 (affine)")
    p.add_argument("--aut", default="2", help="scalar u or matrix rows '0 1;1 0' (affine)")
    p.add_argument("--n", type=int, default=2, help="Z_n coefficients (red2sym)")
    p.add_argument("--gens", type=int, default=2, help="number of generators (red2sym)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", parents=[common], help="analyze a table file")
    p.add_argument("table")
    p.add_argument("--labels", help="file with one element name per line")
    p.add_argument("--max-param", type=int, default=6)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("embed", parents=[common], help="affine image of a JSON free element")
    p.add_argument("element", help="JSON text or '-' for stdin")
    p.add_argument("--gens", help="comma-separated generators if the JSON has no 'gens'")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("unembed", parents=[common], help="free element from an affine vector")
    p.add_argument("vector", help="JSON object {symbol: poly} or list, or '-' for stdin")
    p.add_argument("--gens", required=True, help="comma-separated generators, base first")
    p.add_argument("--variety", default="medial")
    p.set_defaults(func=cmd_unembed)

    p = sub.add_parser("crt", parents=[common], help="cyclotomic factors of 1+...+t^(n-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--element", help="polynomial whose residues to print")
    p.set_defaults(func=cmd_crt)

    p = sub.add_parser("joyce", parents=[common], help="cross-check the involutory free quandle")
    p.add_argument("--check", type=int, default=4, help="maximal number of variable occurrences")
    p.add_argument("--gens", type=int, default=3)
    p.set_defaults(func=cmd_joyce)

    p = sub.add_parser("verify-example", parents=[common], help="recompute the three-generator example")
    p.add_argument("--a", help="comma-separated coordinates, e.g. '1-t,1+t-t^2'")
    p.set_defaults(func=cmd_verify_example)

    p = sub.add_parser("suite", parents=[common], help="run all acceptance checks")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (AlgebraError, ValueError, KeyError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
