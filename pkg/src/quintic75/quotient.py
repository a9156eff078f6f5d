"""Intersection pairing on the free Z/5 quotient by the coordinate rotation R,
and the lattices built from the extra characteristic-2 class D_2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exact import FinField
from .lines import Line, char2_lines, gram_matrix, lines75, pair
from .pencil import build_pencil
from .zlinalg import LatticeReport, image_lattice, rank_exact

ROTATION = (1, 2, 3, 4, 0)  # x_i -> x_{i+1}


class RankDeficientExtension(RuntimeError):
    pass


def rotate(line: Line, k: int = 1) -> Line:
    for _ in range(k % 5):
        line = line.permuted(ROTATION)
    return line


def r_orbit(line: Line) -> list[Line]:
    return [rotate(line, i) for i in range(5)]


def r_orbits(lines: Sequence[Line]) -> list[list[int]]:
    """Partition of indices of ``lines`` into R-orbits (ordered by first index)."""
    index = {L: i for i, L in enumerate(lines)}
    seen: set[int] = set()
    orbits = []
    for i, L in enumerate(lines):
        if i in seen:
            continue
        orb = []
        for M in r_orbit(L):
            j = index[M]
            if j not in orb:
                orb.append(j)
        seen.update(orb)
        orbits.append(orb)
    return orbits


def quotient_pairing(L: Line, L2: Line) -> int:
    """pi(L).pi(L') = L . (sum_i R^i L')."""
    return sum(pair(L, M) for M in r_orbit(L2))


@dataclass
class QuotientClass:
    representative: Line
    orbit: list[int]
    pairings: list[int] = field(default_factory=list)


def godeaux_gram(lines: Sequence[Line] | None = None) -> tuple[list[list[int]], list[QuotientClass]]:
    """Gram matrix N of the 15 images of the lines in the quotient."""
    lines = list(lines) if lines is not None else lines75()
    orbits = r_orbits(lines)
    reps = [lines[o[0]] for o in orbits]
    G = [[quotient_pairing(a, b) for b in reps] for a in reps]
    classes = [QuotientClass(lines[o[0]], o, row) for o, row in zip(orbits, G)]
    return G, classes


def godeaux_lattice(lines: Sequence[Line] | None = None) -> LatticeReport:
    G, _ = godeaux_gram(lines)
    return image_lattice(G)


# ---------------------------------------------------------------------------
# fixed points of R


@dataclass
class FixedPointReport:
    p: int
    e: int
    checks: dict
    ok: bool


def r_fixed_point_check(p: int) -> FixedPointReport:
    """Verify that no fixed point of R lies on the pencil members.

    Away from 5 the fixed points are (1, z, z^2, z^3, z^4) for the fifth
    roots of unity z; power sums s_2, s_3 vanish there except at z = 1 (which
    is off s_1 = 0), so the pencil value reduces to s_5 / 5 = 1.  In
    characteristic 5 the only fixed point is (1,1,1,1,1).
    """
    checks: dict = {}
    if p == 5:
        F = FinField(5)
        model = build_pencil(0, F)
        one = F.one
        val = model.evaluate5((one,) * 5)
        checks["model_value_at_(1,1,1,1,1)"] = int(val)
        # the value does not depend on lambda since e_2 = 10 = 0 mod 5
        checks["lambda_independent"] = all(
            build_pencil(l, F).evaluate5((one,) * 5) == val for l in range(5)
        )
        ok = val != 0 and checks["lambda_independent"]
        return FixedPointReport(p, 1, checks, ok)
    e = 1
    while (p**e - 1) % 5:
        e += 1
    F = FinField(p, e)
    z = F.primitive_root_of_unity(5)
    ok = True
    for k in range(1, 5):
        pt = [z ** (k * i) for i in range(5)]
        sums = {}
        for l in (1, 2, 3, 4, 5):
            # field codes; elements of the prime field keep their integer value
            sums[l] = sum((x**l for x in pt), F.zero).n
        checks[f"k={k}"] = sums
        ok &= all(sums[l] == 0 for l in (1, 2, 3, 4)) and sums[5] == 5 % p
        # e_5 - (lambda+1) e_2 e_3 at the point equals s_5/5 = 1 for every lambda
        for l in (0, 1, 2):
            val = build_pencil(l, F).evaluate5(tuple(pt))
            ok &= val == 1
    return FixedPointReport(p, e, checks, ok)


# ---------------------------------------------------------------------------
# the class D_2 in characteristic 2


@dataclass
class D2Result:
    n_prime: LatticeReport
    m_prime: LatticeReport
    m2: LatticeReport
    extra_labels: list[str]
    d2_self: int
    strategy: str  # "greedy" or "swap"
    n_prime_gram: list[list[int]] = field(default_factory=list, repr=False)


def _char2_data():
    d = char2_lines()
    lines_75 = d["base"] + d["orbit"]
    l2 = d["seeds"][1]
    return d, lines_75, l2


def n_prime_gram(lines_75: Sequence[Line], l2: Line) -> list[list[int]]:
    """Gram of pi(l2) together with the 15 orbit images."""
    orbits = r_orbits(lines_75)
    reps = [lines_75[o[0]] for o in orbits]
    first = [quotient_pairing(l2, l2)] + [quotient_pairing(l2, L) for L in reps]
    rows = [first]
    for i, L in enumerate(reps):
        rows.append([first[i + 1]] + [quotient_pairing(L, M) for M in reps])
    return rows


def m_prime_gram(lines_75: Sequence[Line], l2: Line, G75=None) -> list[list[int]]:
    """Gram of the 75 lines plus D_2 = sum_i R^i l2 (last row/column)."""
    G = [list(r) for r in (G75 or gram_matrix(lines_75))]
    d2 = r_orbit(l2)
    col = [sum(pair(M, L) for M in d2) for L in lines_75]
    self_int = sum(pair(M, N) for M in d2 for N in d2)
    for row, c in zip(G, col):
        row.append(c)
    G.append(col + [self_int])
    return G


def extend_with_lines(G: list[list[int]], gens: Sequence, new_lines: Sequence[Line], pair_with) -> list[list[int]]:
    """Append rows for ``new_lines``; ``pair_with(line, gen)`` pairs a line against an existing generator."""
    cols = [[pair_with(L, g) for g in gens] for L in new_lines]
    out = [list(row) + [c[i] for c in cols] for i, row in enumerate(G)]
    for c, L in zip(cols, new_lines):
        out.append(c + [pair(L, M) for M in new_lines])
    return out


def _pair_gen(L: Line, gen) -> int:
    if isinstance(gen, Line):
        return pair(L, gen)
    # gen is the D_2 orbit (list of lines)
    return sum(pair(L, M) for M in gen)


def d2_lattices(target_m2_disc: int | None = 2**16 * 5**2) -> D2Result:
    """Lattices N', M' and M_2 in characteristic 2.

    The 12 lines completing M_2 are picked greedily (deterministic order of the
    extra lines) by rank increase; if ``target_m2_disc`` is given and the greedy
    choice misses it, later candidates are swapped in one at a time.
    """
    d, lines_75, l2 = _char2_data()
    Np = n_prime_gram(lines_75, l2)
    n_rep = image_lattice(Np)
    G75 = gram_matrix(lines_75)
    Mp = m_prime_gram(lines_75, l2, G75)
    m_rep = image_lattice(Mp)
    gens = list(lines_75) + [r_orbit(l2)]
    extras = d["extra"]
    chosen, rep, how = _complete_to_53(Mp, gens, extras, m_rep.rank, target_m2_disc)
    return D2Result(n_rep, m_rep, rep, [L.label for L in chosen], Mp[-1][-1], how, Np)


def _gram_with(Mp, gens, chosen):
    return extend_with_lines(Mp, gens, chosen, _pair_gen)


def _complete_to_53(Mp, gens, extras, base_rank, target):
    need = 53 - base_rank
    chosen: list[Line] = []
    rank = base_rank
    for L in extras:
        if len(chosen) == need:
            break
        trial = chosen + [L]
        r = rank_exact(_gram_with(Mp, gens, trial))
        if r > rank:
            chosen, rank = trial, r
    if rank != 53:
        raise RankDeficientExtension(f"greedy completion reached rank {rank}")
    rep = image_lattice(_gram_with(Mp, gens, chosen))
    if target is None or rep.disc == target:
        return chosen, rep, "greedy"
    # swap search: replace the latest picks by later candidates keeping rank 53
    for pos in range(len(chosen) - 1, -1, -1):
        for L in extras:
            if L in chosen:
                continue
            trial = chosen[:pos] + [L] + chosen[pos + 1 :]
            G = _gram_with(Mp, gens, trial)
            if rank_exact(G) != 53:
                continue
            r2 = image_lattice(G)
            if r2.disc == target:
                return trial, r2, "swap"
    return chosen, rep, "greedy"
