"""Command-line surface.

Every command takes ``--type`` and ``--rank``; weights are comma-separated
integers in fundamental coordinates.  Reports go to stdout as JSON
(default) or TSV; diagnostics go to stderr.  Exit codes: 0 on
success/pass, 1 on a verification violation or flagged discrepancy,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import rigidity, rootsystem, weylchar
from .charring import saturated_dominants
from .errors import NoViolationFound, RigidCharError
from .rootsystem import LieType, build_root_system, desc_key, rho_height


def _parse_weight(text: str, rank: int, name: str):
    try:
        coords = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise SystemExit(_usage(f"{name}: expected comma-separated integers, got {text!r}"))
    if len(coords) != rank:
        raise SystemExit(_usage(f"{name}: expected {rank} coordinates, got {len(coords)}"))
    return coords


def _usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _system(args):
    return build_root_system(LieType(args.type, args.rank))


def _emit(args, payload: dict, tsv_rows, tsv_header=None):
    if args.format == "json":
        print(json.dumps(payload))
    else:
        if tsv_header:
            print("\t".join(tsv_header))
        for row in tsv_rows:
            print("\t".join(str(c) for c in row))


def _sorted_entries(rs, row):
    return sorted(row.items(), key=lambda kv: desc_key(rs)(kv[0]))


def cmd_char(args):
    rs = _system(args)
    lam = _parse_weight(args.weight, rs.rank, "--weight")
    row = weylchar.character_table(rs).row(lam)
    entries = [
        {"mu": list(mu), "mult": m} for mu, m in _sorted_entries(rs, row)
    ]
    payload = {
        "type": args.type, "rank": args.rank, "lambda": list(lam),
        "entries": entries,
    }
    _emit(args, payload,
          [(",".join(map(str, mu)), m) for mu, m in _sorted_entries(rs, row)],
          ("mu", "mult"))
    return 0


def cmd_dim(args):
    rs = _system(args)
    lam = _parse_weight(args.weight, rs.rank, "--weight")
    d = weylchar.weyl_dimension(rs, lam)
    _emit(args, {"type": args.type, "rank": args.rank,
                 "lambda": list(lam), "dim": d},
          [(d,)])
    return 0


def cmd_tensor(args):
    rs = _system(args)
    left = _parse_weight(args.left, rs.rank, "--left")
    right = _parse_weight(args.right, rs.rank, "--right")
    coeffs = weylchar.tensor_coeffs(rs, left, right)
    comps = [
        {"lambda": list(lam), "mult": c}
        for lam, c in _sorted_entries(rs, coeffs)
    ]
    _emit(args, {"type": args.type, "rank": args.rank, "left": list(left),
                 "right": list(right), "components": comps},
          [(",".join(map(str, lam)), c) for lam, c in _sorted_entries(rs, coeffs)],
          ("lambda", "mult"))
    return 0


def cmd_orbit(args):
    rs = _system(args)
    lam = _parse_weight(args.weight, rs.rank, "--weight")
    orbit = sorted(rootsystem.weyl_orbit(rs, lam), key=desc_key(rs))
    _emit(args, {"type": args.type, "rank": args.rank, "lambda": list(lam),
                 "size": len(orbit), "weights": [list(w) for w in orbit]},
          [(",".join(map(str, w)),) for w in orbit],
          ("weight",))
    return 0


def cmd_reconstruct(args):
    rs = _system(args)
    oracle = rigidity.BoundaryOracle.freudenthal(rs)
    family = rigidity.reconstruct_up_to(rs, oracle, args.cutoff)
    table = weylchar.character_table(rs)
    mismatches = []
    for lam, row in family.rows.items():
        if row != table.row(lam):
            mismatches.append(lam)
    routes = {}
    for tag in family.provenance.values():
        routes[tag.route] = routes.get(tag.route, 0) + 1
    entries = sum(len(r) for r in family.rows.values())
    payload = {
        "type": args.type, "rank": args.rank, "cutoff": args.cutoff,
        "rows": len(family.rows), "entries": entries,
        "oracle_queries": len(oracle.queries),
        "routes": dict(sorted(routes.items())),
        "matches_freudenthal": not mismatches,
    }
    if mismatches:
        payload["mismatched_rows"] = [list(m) for m in sorted(mismatches)]
    _emit(args, payload,
          [(k, v) for k, v in sorted(payload.items()) if k != "routes"])
    return 0 if not mismatches else 1


def cmd_verify(args):
    rs = _system(args)
    family = rigidity.build_freudenthal_family(rs, args.cutoff, args.mode)
    report = rigidity.verify_conditions(rs, family, args.cutoff, args.mode)
    if report is None:
        _emit(args, {"result": "pass", "type": args.type, "rank": args.rank,
                     "cutoff": args.cutoff, "mode": args.mode},
              [("PASS",)])
        return 0
    _emit(args, _violation_payload(report), _violation_rows(report))
    return 1


def _violation_payload(report):
    return {
        "result": "violation",
        "condition": report.condition,
        "witness": [list(w) for w in report.witness],
        "expected": report.expected,
        "found": report.found,
    }


def _violation_rows(report):
    return [("VIOLATION", report.condition,
             ";".join(",".join(map(str, w)) for w in report.witness),
             report.expected, report.found)]


def cmd_supp_lemma(args):
    rs = _system(args)
    instances = rigidity.lemma_supp_check(rs, args.k_bound)
    failures = [inst for inst in instances if not inst.passed]
    payload = {
        "type": args.type, "rank": args.rank, "k_bound": args.k_bound,
        "checked": len(instances),
        "result": "pass" if not failures else "fail",
        "failures": [
            {"item": f.item, "i": f.index, "k": list(f.k),
             "supp_size": f.supp_size}
            for f in failures
        ],
    }
    rows = [(f.item, f.index, ",".join(map(str, f.k)), f.supp_size)
            for f in failures]
    rows.append(("PASS" if not failures else "FAIL",
                 len(instances), len(failures), ""))
    _emit(args, payload, rows, ("item", "i", "k", "supp_size"))
    return 0 if not failures else 1


def cmd_identities(args):
    rs = _system(args)
    rows = rigidity.fundamental_identities(rs)
    flagged = [r for r in rows if r.agrees is False]
    payload = {
        "type": args.type, "rank": args.rank,
        "result": "pass" if not flagged else "discrepancy",
        "rows": [
            {"i": r.index, "alpha_coeffs": list(r.computed),
             "stated": list(r.stated) if r.stated else None,
             "stated_kind": r.stated_kind, "agrees": r.agrees}
            for r in rows
        ],
    }
    _emit(args, payload,
          [(r.index, ",".join(map(str, r.computed)),
            ",".join(map(str, r.stated)) if r.stated else "-",
            r.stated_kind or "-", r.agrees)
           for r in rows],
          ("i", "alpha_coeffs", "stated", "kind", "agrees"))
    return 0 if not flagged else 1


def cmd_falsify(args):
    rs = _system(args)
    lam = _parse_weight(args.weight, rs.rank, "--lambda")
    mu = _parse_weight(args.mu, rs.rank, "--mu")
    try:
        report = rigidity.falsify(rs, (lam, mu, args.delta), args.cutoff)
    except NoViolationFound as exc:
        _emit(args, {"result": "no-violation-found", "detail": str(exc)},
              [("NO-VIOLATION-FOUND",)])
        return 1
    _emit(args, _violation_payload(report), _violation_rows(report))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rigidchar",
        description="Exact characters, tensor decompositions, and rigidity "
                    "reconstruction for the classical simple Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, cutoff=False, mode=False):
        p.add_argument("--type", required=True, choices=["A", "B", "C", "D"])
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--format", choices=["json", "tsv"], default="json")
        if cutoff:
            p.add_argument("--cutoff", type=int, default=3)
        if mode:
            p.add_argument("--mode", choices=["full", "fundamental-only"],
                           default="full")

    p = sub.add_parser("char", help="weight multiplicities of one character row")
    common(p)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("dim", help="dimension by the Weyl product formula")
    common(p)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("tensor", help="tensor product decomposition")
    common(p)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("orbit", help="Weyl orbit of a dominant weight")
    common(p)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("reconstruct",
                       help="rebuild the table from boundary data and certify it")
    common(p, cutoff=True)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify",
                       help="check the rigidity conditions on the reference family")
    common(p, cutoff=True, mode=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("supp-lemma", help="sweep the support-shrinking lemma")
    common(p)
    p.add_argument("--k-bound", type=int, default=3)
    p.set_defaults(func=cmd_supp_lemma)

    p = sub.add_parser("identities",
                       help="fundamental-weight identity table vs published rows")
    common(p)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("falsify",
                       help="perturb one reference entry and report the broken condition")
    common(p, cutoff=True)
    p.add_argument("--lambda", dest="weight", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_falsify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except RigidCharError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
