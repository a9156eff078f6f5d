"""Ranks and discriminants of every lattice built from the lines, with both routes."""

import time

from quintic75.exact import factorize
from quintic75.lines import char2_lines, gram_matrix, lines75
from quintic75.quotient import d2_lattices, godeaux_gram
from quintic75.zlinalg import image_lattice, image_lattice_by_pivots


def _fmt(n: int) -> str:
    f = factorize(abs(n))
    body = "·".join(f"{p}^{k}" if k > 1 else str(p) for p, k in sorted(f.items())) or "1"
    return ("-" if n < 0 else "") + body


def report(name, G):
    t0 = time.perf_counter()
    rep = image_lattice(G)
    alt = image_lattice_by_pivots(G)
    dt = time.perf_counter() - t0
    agree = "ok" if alt == (rep.rank, rep.disc) else f"MISMATCH {alt}"
    print(f"{name:8s} n = {rep.n:3d}  rank = {rep.rank:2d}  disc = {rep.disc} = {_fmt(rep.disc)}  [{agree}, {dt:.2f} s]")


def main():
    report("M", gram_matrix(lines75()))
    report("N", godeaux_gram()[0])
    d = char2_lines()
    report("char2", gram_matrix(d["base"] + d["orbit"] + d["extra"]))
    res = d2_lattices()
    report("N'", res.n_prime_gram)
    print(f"M'       rank = {res.m_prime.rank}  disc = {_fmt(res.m_prime.disc)}")
    print(f"M_2      rank = {res.m2.rank}  disc = {_fmt(res.m2.disc)}  (D_2^2 = {res.d2_self})")
    print(f"         extra lines ({res.strategy}): {' '.join(res.extra_labels)}")


if __name__ == "__main__":
    main()
