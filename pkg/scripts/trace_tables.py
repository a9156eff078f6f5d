"""Point counts, trace candidates and the square-class comparison at several primes.

    python3 scripts/trace_tables.py --primes 19 23 29 --cache .cache
"""

import argparse
from dataclasses import dataclass, field

from quintic75.counting import (
    CountCache,
    count_k3_a,
    count_quintic_a,
    k3_trace_candidates,
    quintic_rho_reduction,
    resolve_trace,
    table_format,
    van_luijk_verdict,
)
from quintic75.lines import b_roots


@dataclass
class TraceConfig:
    primes: list[int] = field(default_factory=lambda: [19, 23])
    cache: str | None = None


def run(cfg: TraceConfig) -> dict:
    cache = CountCache(cfg.cache)
    chosen = {}
    for p in cfg.primes:
        roots = b_roots(p)
        if not roots:
            print(f"p = {p}: b^4 - b^3 + 1 has no root in F_{p}, skipped")
            continue
        for i, r in enumerate(roots):
            x = count_k3_a(p, 1, i).count
            s = count_quintic_a(p, 1, i, cache=cache).count
            cands = k3_trace_candidates(x, p)
            fits = [c.a_q for c in resolve_trace(s, x, p)]
            rho = quintic_rho_reduction(s, p)
            table = ", ".join(f"{c.a_q}: {table_format(c.D)}" for c in cands)
            print(f"p = {p:3d}  b = {int(r):3d}  #X = {x:5d}  #S = {s:6d}  rho(S mod p) = {rho}  fits {fits}")
            print(f"          candidates  {table}")
            chosen.setdefault(p, cands)
    ps = sorted(chosen)
    for i, p in enumerate(ps):
        for p2 in ps[i + 1 :]:
            v = van_luijk_verdict(chosen[p], chosen[p2])
            print(f"({p}, {p2}): disjoint = {v.disjoint}  overlap = {v.overlap}")
    return chosen


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[19, 23])
    ap.add_argument("--cache")
    args = ap.parse_args()
    run(TraceConfig(args.primes, args.cache))


if __name__ == "__main__":
    main()
