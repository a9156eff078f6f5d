"""Elliptic fibration u^2 = x (x^2 + A(t) x + B(t)) on the K3 quotient X_lambda.

Fiber types come from orders of vanishing of the discriminant and c4 at each
place, read off squarefree decompositions and gcds (no root extraction over
Q(b)).  Over F_q the same data gives the geometric configuration, while the
F_q-rational places are located explicitly for the split tests and the point
count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .exact import (
    B_MODULUS,
    QB,
    QQ,
    FFElement,
    FinField,
    NFElement,
    factor_mod_p,
    prime_factors,
    resultant_int,
)
from .poly import UPoly

INF = "inf"


class DegeneratePencilMember(ValueError):
    pass


class IdenticallySingular(ValueError):
    pass


class UnsupportedType(ValueError):
    pass


class BadReduction(ValueError):
    pass


# ---------------------------------------------------------------------------
# Weierstrass data


@dataclass
class WeierstrassModel:
    lam: object
    field: object
    A: UPoly
    B: UPoly

    def at_infinity(self) -> tuple[UPoly, UPoly]:
        """(s^4 A(1/s), s^8 B(1/s))."""
        return self.A.reverse_weighted(4), self.B.reverse_weighted(8)


def weierstrass_AB(lam, field=None) -> WeierstrassModel:
    """Coefficients A (degree 4) and B (degree 6) of the fibration for a given lambda."""
    if field is None:
        field = lam.field if isinstance(lam, (FFElement, NFElement)) else QQ
    l = field(lam)
    if l + 1 == 0:
        raise DegeneratePencilMember("lambda = -1 makes B vanish identically")
    one = field.one
    A = UPoly(
        field,
        [
            -4 * (one + l) ** 2,
            -4 * (2 * l + 3) * (one + l),
            -(24 * l + 12 + 11 * l * l),
            -(4 + 8 * l + 2 * l * l),
            l * l,
        ],
    )
    bracket = UPoly(field, [one + l, 2 * l + 2, 3 * l + 2, 2 * l + 1, 2 * l + 1])
    t = UPoly.x(field)
    B = t * (t + 1) * bracket * (16 * (one + l) ** 2)
    return WeierstrassModel(l, field, A, B)


def disc_c4(model: WeierstrassModel) -> tuple[UPoly, UPoly]:
    """Delta = 16 B^2 (A^2 - 4B) and c4 = 16 (A^2 - 3B)."""
    A, B = model.A, model.B
    D = B * B * (A * A - B * 4) * 16
    c4 = (A * A - B * 3) * 16
    if D.is_zero():
        raise IdenticallySingular(f"discriminant vanishes identically for lambda = {model.lam}")
    return D, c4


def _weierstrass_check_general() -> bool:
    """Delta, c4 of y^2 = x^3 + A x^2 + B x agree with the general a-invariant formulas."""
    from .poly import MultiPoly

    K = QQ
    A = MultiPoly.var(K, 2, 0)
    B = MultiPoly.var(K, 2, 1)
    a1 = a3 = a6 = MultiPoly(K, 2)
    a2, a4 = A, B
    b2 = a1 * a1 + a2 * 4
    b4 = a1 * a3 + a4 * 2
    b6 = a3 * a3 + a6 * 4
    b8 = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    delta = -(b2 * b2 * b8) - b4 * b4 * b4 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9
    c4 = b2 * b2 - b4 * 24
    return delta == B * B * (A * A - B * 4) * 16 and c4 == (A * A - B * 3) * 16


# ---------------------------------------------------------------------------
# classification


EULER = {"II": 2, "III": 3, "IV": 4}


def kodaira_type(ord_delta: int, ord_c4: int) -> tuple[str, int]:
    """(type name, Euler number) from the orders of Delta and c4."""
    if ord_delta > 10:
        raise UnsupportedType(f"ord Delta = {ord_delta}")
    if ord_c4 == 0:
        return f"I{ord_delta}", ord_delta
    if ord_delta == 2:
        return "II", 2
    if ord_delta == 3 and ord_c4 == 1:
        return "III", 3
    if ord_delta == 4 and ord_c4 >= 2:
        return "IV", 4
    raise UnsupportedType(f"(ord c4, ord Delta) = ({ord_c4}, {ord_delta})")


@dataclass
class Fiber:
    place: str
    kind: str
    euler: int
    count: int = 1  # number of geometric fibers this entry stands for
    split: bool | None = None
    ord_delta: int = 0
    ord_c4: int = 0

    def as_dict(self) -> dict:
        return {
            "place": self.place,
            "type": self.kind,
            "split": self.split,
            "euler": self.euler,
            "count": self.count,
        }


@dataclass
class FiberConfig:
    lam: object
    field: object
    fibers: list[Fiber] = field(default_factory=list)

    @property
    def euler_sum(self) -> int:
        return sum(f.euler * f.count for f in self.fibers)

    def summary(self) -> Counter:
        c: Counter = Counter()
        for f in self.fibers:
            c[f.kind] += f.count
        return c

    def describe(self) -> str:
        parts = []
        for kind, n in sorted(self.summary().items(), key=lambda kv: (kv[0][0], len(kv[0]), kv[0])):
            parts.append(f"{n}x{kind}")
        return " + ".join(parts)

    def infinity(self) -> Fiber | None:
        return next((f for f in self.fibers if f.place == INF), None)

    def as_list(self) -> list[dict]:
        return [f.as_dict() for f in self.fibers]


def _order_at_zero(f: UPoly) -> int:
    return f.valuation() if not f.is_zero() else 10**9


def node_split(A0, B0, field) -> bool | None:
    """Split test for a nodal cubic x (x^2 + A0 x + B0).

    The node sits at the double root x0 of the cubic; with x1 the simple root
    the tangent cone is u^2 = (x0 - x1)(x - x0)^2, so the fiber is split iff
    x0 - x1 is a square: A0 when B0 = 0, and -A0/2 when A0^2 = 4 B0.
    """
    if B0 == 0:
        if A0 == 0:
            return None
        return field.is_square(A0)
    if A0 * A0 - B0 * 4 == 0:
        return field.is_square(-A0 / 2)
    return None


def _strata(D: UPoly, c4: UPoly) -> list[tuple[int, int, UPoly]]:
    """Groups of roots of D with equal (ord D, ord c4), as (m, k, squarefree poly)."""
    out = []
    dec_c = c4.squarefree_decomposition() if not c4.is_zero() and c4.degree > 0 else {}
    for m, Dm in D.squarefree_decomposition().items():
        rest = Dm
        for k, Ck in dec_c.items():
            g = rest.gcd(Ck)
            if g.degree > 0:
                out.append((m, k, g))
                rest = rest.exact_div(g)
        if c4.is_zero():
            out.append((m, 10**9, rest))
        elif rest.degree > 0:
            out.append((m, 0, rest))
    return out


def classify_fibers(lam, field=None, rational_places: bool | None = None) -> FiberConfig:
    """Singular fibers of the fibration for lambda over ``field`` (Q, Q(b) or F_q).

    Finite places are grouped by (ord Delta, ord c4); over a finite field the
    rational places of each group are listed individually with their split
    flag, the rest as one cluster.  The place at infinity uses the weighted
    substitution and is checked to be minimal.
    """
    model = weierstrass_AB(lam, field)
    K = model.field
    D, c4 = disc_c4(model)
    cfg = FiberConfig(model.lam, K)
    finite = isinstance(K, FinField) if rational_places is None else rational_places
    for m, k, g in _strata(D, c4):
        kind, eu = kodaira_type(m, k)
        if finite:
            roots = g.roots()
            for r in roots:
                cfg.fibers.append(
                    Fiber(str(r), kind, eu, 1, _split_at(model, r, kind), m, k)
                )
            if g.degree > len(roots):
                cfg.fibers.append(Fiber(f"cluster of degree {g.degree - len(roots)}", kind, eu, g.degree - len(roots), None, m, k))
        else:
            cfg.fibers.append(Fiber(f"roots of degree-{g.degree} factor", kind, eu, g.degree, None, m, k))
    # place at infinity
    As, Bs = model.at_infinity()
    Ds = Bs * Bs * (As * As - Bs * 4) * 16
    cs = (As * As - Bs * 3) * 16
    od, oc = _order_at_zero(Ds), _order_at_zero(cs)
    if od != 24 - D.degree:
        raise AssertionError("weighted discriminant order at infinity disagrees with the degree count")
    if _order_at_zero(As) >= 2 and _order_at_zero(Bs) >= 4:
        raise UnsupportedType("non-minimal model at infinity")
    if od > 0:
        kind, eu = kodaira_type(od, oc)
        split = node_split(As.coeff(0), Bs.coeff(0), K) if kind.startswith("I") else None
        cfg.fibers.append(Fiber(INF, kind, eu, 1, split, od, oc))
    return cfg


def _split_at(model: WeierstrassModel, t0, kind: str):
    if not kind.startswith("I"):
        return None
    return node_split(_ev(model.A, t0), _ev(model.B, t0), model.field)


def _ev(f: UPoly, x):
    acc = f.field.zero
    for c in reversed(f.c):
        acc = acc * x + c
    return acc


def _order_at(f: UPoly, t0) -> int:
    lin = UPoly(f.field, [-t0, 1])
    n = 0
    while not f.is_zero():
        q, r = divmod(f, lin)
        if not r.is_zero():
            break
        f = q
        n += 1
    return n


# ---------------------------------------------------------------------------
# point counting on the K3


def _chain_correction(kind: str, n: int, split: bool | None, q: int) -> int:
    """Points added by resolving a rational singular Weierstrass fiber.

    I_n split: the n-1 extra components are all rational, (n-1) q.  I_n
    non-split: Frobenius reverses the chain; for even n one extra component
    (opposite the identity component) is rational and no node is, giving q;
    for odd n no extra component is rational and one node is, giving 0.
    III: one extra rational component meeting the first at one point, q.
    """
    if kind == "III":
        return q
    if kind.startswith("I") and n >= 2:
        if split:
            return (n - 1) * q
        return q if n % 2 == 0 else 0
    if kind in ("I0", "I1", "II"):
        return 0
    raise UnsupportedType(f"no point-count correction for {kind}")


def _affine_counts(F: FinField, A_codes: np.ndarray, B_codes: np.ndarray) -> np.ndarray:
    """For each (A, B) pair the number of (x, u) in F^2 with u^2 = x^3 + A x^2 + B x."""
    from .ffvec import VecField

    V = VecField(F)
    q = F.q
    xs = np.arange(q, dtype=np.int64)
    x2 = V.mul(xs, xs)
    x3 = V.mul(x2, xs)
    sq = np.zeros(q, dtype=np.int64)
    for x in range(q):
        sq[F.pow_raw(x, 2)] = 1
    nsol = np.where(sq == 1, 2, 0)
    nsol[0] = 1
    out = np.zeros(len(A_codes), dtype=np.int64)
    for i, (a, b) in enumerate(zip(A_codes, B_codes)):
        val = V.add(V.add(x3, V.mul_const(x2, int(a))), V.mul_const(xs, int(b)))
        out[i] = int(nsol[val].sum())
    return out


@dataclass
class K3Count:
    count: int
    base_sum: int
    corrections: dict
    config: FiberConfig


def k3_point_count(lam, F: FinField | None = None, force_split: bool = False) -> K3Count:
    """#X(F_q) as a sum over fibers plus resolution corrections at rational singular fibers.

    ``force_split`` applies the split correction everywhere (used to check that
    the count mod q does not depend on the split decisions).
    """
    if F is None:
        F = lam.field
    if F.char == 2:
        raise BadReduction("characteristic 2 is bad for this model")
    model = weierstrass_AB(lam, F)
    cfg = classify_fibers(lam, F)
    if cfg.euler_sum != 24:
        raise BadReduction(f"fiber configuration {cfg.describe()} is not that of a K3")
    q = F.q
    ts = list(F.elements())
    A_codes = np.array([_ev(model.A, t).n for t in ts], dtype=np.int64)
    B_codes = np.array([_ev(model.B, t).n for t in ts], dtype=np.int64)
    As, Bs = model.at_infinity()
    A_codes = np.append(A_codes, As.coeff(0).n)
    B_codes = np.append(B_codes, Bs.coeff(0).n)
    base = int(_affine_counts(F, A_codes, B_codes).sum()) + (q + 1)
    corr = {}
    for fib in cfg.fibers:
        if fib.place.startswith("cluster"):
            continue
        split = True if force_split else fib.split
        c = _chain_correction(fib.kind, fib.ord_delta, split, q)
        if c:
            corr[fib.place] = c
    return K3Count(base + sum(corr.values()), base, corr, cfg)


def a_root_in(F: FinField, root: FFElement) -> FFElement:
    """lambda = a = -2/(b+2) at a root of b^4 - b^3 + 1 in F."""
    if root + 2 == 0:
        raise BadReduction("b = -2: a has a pole")
    return F(-2) / (root + 2)


# ---------------------------------------------------------------------------
# bad primes


def _a_over_qb():
    b = QB.gen()
    return QB(-2) / (b + 2)


def generic_config(lam=None) -> FiberConfig:
    return classify_fibers(_a_over_qb() if lam is None else lam, QB if lam is None else None)


def _norm_primes(x) -> set[int]:
    if isinstance(x, NFElement):
        n = x.norm()
    else:
        n = Fraction(x)
    if n == 0:
        return set()
    return set(prime_factors(n.numerator)) | set(prime_factors(n.denominator))


def candidate_norms() -> dict[str, Fraction]:
    """Integer norms whose prime divisors can change the fiber configuration of X_a."""
    model = weierstrass_AB(_a_over_qb(), QB)
    D, c4 = disc_c4(model)
    dec = D.squarefree_decomposition()
    pieces = dict(dec)
    norms: dict[str, Fraction] = {}
    a = model.lam
    norms["N(a)"] = a.norm()
    norms["N(a+1)"] = (a + 1).norm()
    norms["N(b+2)"] = (QB.gen() + 2).norm()
    norms["lc(Delta)"] = D.lc().norm()
    norms["lc(c4)"] = c4.lc().norm()
    norms["disc(b-poly)"] = Fraction(UPoly(QQ, B_MODULUS).discriminant())
    for m, P in pieces.items():
        if P.degree > 1:
            norms[f"disc(D{m})"] = P.discriminant().norm()
        norms[f"Res(D{m},c4)"] = P.resultant(c4).norm()
        for c in P.c:
            norms.setdefault(f"den(D{m})", Fraction(1))
            norms[f"den(D{m})"] *= Fraction(1, _den(c))
    ms = sorted(pieces)
    for i, m in enumerate(ms):
        for m2 in ms[i + 1 :]:
            norms[f"Res(D{m},D{m2})"] = pieces[m].resultant(pieces[m2]).norm()
    return norms


def _den(x: NFElement) -> int:
    d = 1
    for c in x.c:
        d = d * c.denominator // gcd(d, c.denominator)
    return d


def residue_fields(p: int) -> list[tuple[FinField, FFElement]]:
    """(residue field, image of b) for each prime of Q(b) above p."""
    out = []
    for g in factor_mod_p(B_MODULUS, p):
        if len(g) == 2:
            F = FinField(p)
            out.append((F, F(-g[0])))
        else:
            F = FinField(p, len(g) - 1, modulus=g)
            out.append((F, F.gen()))
    return out


@dataclass
class PrimeVerdict:
    p: int
    status: str  # "good", "merge", "bad"
    configs: list[str]
    reason: str = ""


def classify_prime(p: int, generic: Counter | None = None) -> PrimeVerdict:
    generic = generic or generic_config().summary()
    statuses, configs, reasons = [], [], []
    for F, root in residue_fields(p):
        if root + 2 == 0:
            statuses.append("bad")
            reasons.append("a not integral")
            configs.append("-")
            continue
        # evaluate -2/(b+2) in the residue field: the Q(b) coordinates of a
        # have denominators at primes where b+2 is still a unit
        a = a_root_in(F, root)
        if a + 1 == 0:
            statuses.append("bad")
            reasons.append("a = -1")
            configs.append("-")
            continue
        try:
            cfg = classify_fibers(a, F, rational_places=False)
        except (IdenticallySingular, UnsupportedType) as exc:
            statuses.append("bad")
            reasons.append(str(exc))
            configs.append("-")
            continue
        s = cfg.summary()
        configs.append(cfg.describe())
        if s == generic:
            statuses.append("good")
            continue
        merged = generic.copy()
        merged.subtract({"I1": 1, "I2": 1})
        merged["III"] += 1
        k = 1
        while +merged != s and merged["I1"] > 0 and merged["I2"] > 0:
            merged.subtract({"I1": 1, "I2": 1})
            merged["III"] += 1
            k += 1
        if +merged == s:
            statuses.append("merge")
            reasons.append(f"{k} x (I1 + I2 -> III)")
        else:
            statuses.append("bad")
            reasons.append(f"configuration {cfg.describe()}")
    status = "bad" if "bad" in statuses else "merge" if "merge" in statuses else "good"
    return PrimeVerdict(p, status, configs, "; ".join(reasons))


def bad_primes_k3(return_details: bool = False):
    """(bad, merge_only) primes for the K3 X_a, from candidate norms and reduction."""
    norms = candidate_norms()
    cands: set[int] = set()
    for v in norms.values():
        cands |= _norm_primes(v)
    cands.add(2)
    generic = generic_config().summary()
    bad, merge = set(), set()
    details = {}
    for p in sorted(cands):
        if p == 2:
            # Delta carries the factor 16, so it vanishes identically mod 2
            details[p] = PrimeVerdict(2, "bad", ["-"], "Delta = 0 mod 2")
            bad.add(2)
            continue
        v = classify_prime(p, generic)
        details[p] = v
        if v.status == "bad":
            bad.add(p)
        elif v.status == "merge":
            merge.add(p)
    if return_details:
        return bad, merge, details, norms
    return bad, merge


def quintic_resultants() -> dict[str, int]:
    """Res_b(b^4 - b^3 + 1, numerator of a - lambda0) for each singular lambda0."""
    from .pencil import LAMBDA_SINGULAR

    out = {}
    for l0 in LAMBDA_SINGULAR:
        if l0 == INF:
            g = [2, 1]  # pole of a = -2/(b+2)
        else:
            l0 = Fraction(l0)
            # -2/(b+2) - n/d  ~  -2 d - n (b + 2)
            n, d = l0.numerator, l0.denominator
            g = [-2 * d - 2 * n, -n]
        out[str(l0)] = abs(resultant_int(list(B_MODULUS), g))
    return out


def bad_primes_quintic() -> set[int]:
    """Primes where S_a acquires singularities: a meets a singular parameter mod p.

    Characteristic 2 is good since a reduces to 0 there and S_0 is smooth
    outside characteristics 3, 13 and 17.
    """
    out: set[int] = set()
    for r in quintic_resultants().values():
        if r > 1:
            out |= set(prime_factors(r))
    return out
