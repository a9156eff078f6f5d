"""Command line interface: ``quintic75 <command> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .counting import CountCache, count_k3_a, count_quintic_a, k3_trace_candidates, table_format

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="characteristic")
    common.add_argument("--e", type=int, default=1, help="extension degree (q = p^e)")
    common.add_argument("--root", type=int, default=0, help="index of the root of b^4 - b^3 + 1")
    common.add_argument("--all-roots", action="store_true", help="report every root")
    common.add_argument("--cache", metavar="DIR", help="count cache directory (default $QUINTIC75_CACHE)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="FILE", help="write the JSON result to FILE")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="quintic75", description="Lines, lattices and point counts on the quintic S_a.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lines", parents=[common], help="the 75 lines (or 135 in characteristic 2)")
    p.add_argument("action", nargs="?", choices=["list", "gram"], default="gram")
    p.add_argument("--field", choices=["qb", "f16", "fp"], default="qb")

    p = sub.add_parser("lattice", parents=[common], help="rank and discriminant of a lattice")
    p.add_argument("name", choices=["M", "N", "Nprime", "Mprime", "M2", "char2"])

    sub.add_parser("count", parents=[common], help="#S_a(F_q) by enumeration")

    p = sub.add_parser("k3", parents=[common], help="the K3 quotient X_a")
    p.add_argument("action", choices=["fibers", "count", "badprimes"])
    p.add_argument("--lam", help="rational lambda instead of a (fibers only)")

    sub.add_parser("godeaux", parents=[common], help="quotient lattice N and the fixed-point check")

    p = sub.add_parser("certify", parents=[common], help="assemble the Picard number certificate")
    p.add_argument("--prime", type=int, action="append", help="prime for the trace comparison (repeatable)")
    p.add_argument("--no-index", action="store_true", help="skip the characteristic-2 index block")
    p.add_argument("--no-timestamp", action="store_true")

    p = sub.add_parser("badprimes", parents=[common], help="primes of bad reduction")
    p.add_argument("--target", choices=["k3", "quintic"], default="k3")
    return parser


def _emit(args, result: dict, summary: str) -> None:
    text = json.dumps(result, indent=2, sort_keys=True, ensure_ascii=False, default=str)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text if args.json else summary)


def _need_p(args) -> int:
    if args.p is None:
        raise UsageError(f"{args.command}: --p is required")
    return args.p


def cmd_lines(args) -> int:
    from .lines import b_roots, char2_lines, gram_matrix, lines75, reduce_lines
    from .zlinalg import rank_exact

    if args.field == "qb":
        L = lines75()
    elif args.field == "f16":
        d = char2_lines()
        L = d["base"] + d["orbit"] + d["extra"]
    else:
        from .exact import FinField

        p = _need_p(args)
        F = FinField(p, args.e)
        roots = b_roots(p, args.e)
        if not roots:
            print(f"no root of b^4 - b^3 + 1 in F_{p}^{args.e}", file=sys.stderr)
            return EXIT_FAIL
        L = reduce_lines(lines75(), F, roots[args.root])
    if args.action == "list":
        result = {"count": len(L), "lines": [{"label": l.label, "rref": l.to_json()} for l in L]}
        _emit(args, result, f"{len(L)} lines")
        return EXIT_OK
    G = gram_matrix(L)
    r = rank_exact(G)
    result = {"count": len(L), "labels": [l.label for l in L], "gram": G, "rank": r}
    _emit(args, result, f"{len(L)} lines, Gram rank {r}")
    return EXIT_OK


def cmd_lattice(args) -> int:
    from .lines import char2_lines, gram_matrix, lines75
    from .quotient import d2_lattices, godeaux_gram
    from .zlinalg import image_lattice

    if args.name == "M":
        rep = image_lattice(gram_matrix(lines75()))
    elif args.name == "N":
        rep = image_lattice(godeaux_gram()[0])
    elif args.name == "char2":
        d = char2_lines()
        rep = image_lattice(gram_matrix(d["base"] + d["orbit"] + d["extra"]))
    else:
        res = d2_lattices()
        rep = {"Nprime": res.n_prime, "Mprime": res.m_prime, "M2": res.m2}[args.name]
        if args.name == "M2":
            result = {**rep.as_dict(), "extra_lines": res.extra_labels}
            _emit(args, result, f"{args.name}: rank {rep.rank}, disc {rep.disc}")
            return EXIT_OK
    _emit(args, rep.as_dict(), f"{args.name}: rank {rep.rank}, disc {rep.disc}")
    return EXIT_OK


def _root_indices(args, p: int) -> list[int]:
    from .lines import b_roots

    n = len(b_roots(p, args.e))
    if n == 0:
        return []
    return list(range(n)) if args.all_roots else [args.root]


def cmd_count(args) -> int:
    from .counting import BadPrime, quintic_rho_reduction

    p = _need_p(args)
    idx = _root_indices(args, p)
    if not idx:
        print(f"no root of b^4 - b^3 + 1 in F_{p}^{args.e}", file=sys.stderr)
        return EXIT_FAIL
    cache = CountCache(args.cache)
    recs = []
    lines = []
    for i in idx:
        rec = count_quintic_a(p, args.e, i, cache=cache)
        d = rec.to_json()
        try:
            d["rho_reduction"] = quintic_rho_reduction(rec.count, rec.q)
        except BadPrime:
            d["rho_reduction"] = None
        recs.append(d)
        lines.append(f"#S_a(F_{rec.q}) [root {i}] = {rec.count}  (rho of reduction: {d['rho_reduction']})")
    _emit(args, {"records": recs}, "\n".join(lines))
    return EXIT_OK


def cmd_k3(args) -> int:
    from fractions import Fraction

    from .fibration import bad_primes_k3, classify_fibers, generic_config

    if args.action == "fibers":
        if args.lam is not None:
            cfg = classify_fibers(Fraction(args.lam))
        elif args.p is not None:
            from .exact import FinField
            from .fibration import a_root_in
            from .lines import b_roots

            F = FinField(args.p, args.e)
            roots = b_roots(args.p, args.e)
            if not roots:
                print("no root of b^4 - b^3 + 1 here", file=sys.stderr)
                return EXIT_FAIL
            cfg = classify_fibers(a_root_in(F, roots[args.root]), F)
        else:
            cfg = generic_config()
        result = {"config": cfg.describe(), "euler": cfg.euler_sum, "fibers": cfg.as_list()}
        _emit(args, result, f"{cfg.describe()}  (Euler sum {cfg.euler_sum})")
        return EXIT_OK if cfg.euler_sum == 24 else EXIT_FAIL
    if args.action == "count":
        p = _need_p(args)
        idx = _root_indices(args, p)
        if not idx:
            print(f"no root of b^4 - b^3 + 1 in F_{p}^{args.e}", file=sys.stderr)
            return EXIT_FAIL
        recs, lines = [], []
        for i in idx:
            rec = count_k3_a(p, args.e, i)
            cands = k3_trace_candidates(rec.count, rec.q)
            d = rec.to_json()
            d["candidates"] = [{"a_q": c.a_q, "D": table_format(c.D)} for c in cands]
            recs.append(d)
            cs = ", ".join(f"{c.a_q}: {table_format(c.D)}" for c in cands)
            lines.append(f"#X_a(F_{rec.q}) [root {i}] = {rec.count}   candidates {cs}")
        _emit(args, {"records": recs}, "\n".join(lines))
        return EXIT_OK
    bad, merge = bad_primes_k3()
    _emit(args, {"bad": sorted(bad), "merge_only": sorted(merge)}, f"bad: {sorted(bad)}  merge only: {sorted(merge)}")
    return EXIT_OK


def cmd_godeaux(args) -> int:
    from .quotient import godeaux_gram, r_fixed_point_check
    from .zlinalg import image_lattice

    G, classes = godeaux_gram()
    rep = image_lattice(G)
    fixed = {p: r_fixed_point_check(p).ok for p in (5, 11, 19)}
    result = {"N": rep.as_dict(), "gram": G, "orbits": [c.orbit for c in classes], "fixed_point_free": fixed}
    _emit(args, result, f"N: rank {rep.rank}, disc {rep.disc}; R acts freely: {all(fixed.values())}")
    return EXIT_OK if all(fixed.values()) else EXIT_FAIL


def cmd_certify(args) -> int:
    from .certificate import BlockFailed, CertificateOptions, certificate_json, run_certificate

    opts = CertificateOptions(
        primes=tuple(args.prime) if args.prime else (19, 23),
        cache=args.cache,
        ns_index=not args.no_index,
        timestamp=not args.no_timestamp,
    )
    try:
        cert = run_certificate(opts)
    except BlockFailed as exc:
        print(json.dumps({"failed_block": exc.name, "diagnostics": exc.diagnostics}, indent=2, default=str))
        return EXIT_FAIL
    text = certificate_json(cert)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if args.json:
        print(text)
    else:
        lb, ub = cert["lower_bound"], cert["upper_bound"]
        print(f"lower bound: rank of lines {lb['rank_M']['value']}, quotient rank {lb['N']['rank']} < {lb['rho_Q']}  =>  rho >= {lb['rho_lower']}")
        print(f"upper bound: rho(X_a) = {ub['rho_X']}, rank T(S_a) = {ub['rank_T_S']}  =>  rho <= {ub['rho_upper']}")
        print(cert["conclusion"]["statement"])
        if "ns_index" in cert:
            print(f"index of M' in NS: {cert['ns_index']['index']['form']}")
    return EXIT_OK


def cmd_badprimes(args) -> int:
    from .fibration import bad_primes_k3, bad_primes_quintic

    if args.target == "quintic":
        bad = bad_primes_quintic()
        _emit(args, {"bad": sorted(bad)}, f"bad: {sorted(bad)}")
        return EXIT_OK
    bad, merge = bad_primes_k3()
    _emit(args, {"bad": sorted(bad), "merge_only": sorted(merge)}, f"bad: {sorted(bad)}  merge only: {sorted(merge)}")
    return EXIT_OK


COMMANDS = {
    "lines": cmd_lines,
    "lattice": cmd_lattice,
    "count": cmd_count,
    "k3": cmd_k3,
    "godeaux": cmd_godeaux,
    "certify": cmd_certify,
    "badprimes": cmd_badprimes,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2


if __name__ == "__main__":
    sys.exit(main())
