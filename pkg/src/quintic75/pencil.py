"""The quintic pencil S_lambda inside {s_1 = 0} of P^4.

Canonical model: F = e_5 - (lambda + 1) e_2 e_3 with x_4 = -(x_0 + ... + x_3).
In characteristic 0, 5F equals (5/6) lambda s_2 s_3 + s_5 on s_1 = 0, and the
same integral formula is used verbatim in characteristics 2, 3 and 5.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import QQ, FinField, FFElement
from .poly import MultiPoly

INF = "inf"

# singular parameters of the pencil and their Dwork counterparts
LAMBDA_SINGULAR = (Fraction(-1), Fraction(-3, 2), Fraction(-51, 50), Fraction(-13, 25), Fraction(-1, 2), INF)
T_SINGULAR = (Fraction(-1), Fraction(1), Fraction(3), Fraction(51), Fraction(-13, 12), INF)
# extra singular values found in the char p = 1 mod 5 analysis, as (p, t)
EXTRA_SINGULAR = ((11, 3), (11, 9), (41, 10))


class BadDegree(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def symmetric_basis(n: int, k: int, field=QQ) -> tuple[MultiPoly, MultiPoly]:
    """(power sum s_k, elementary symmetric e_k) in n variables."""
    if not (1 <= k <= n <= 5):
        raise BadDegree(f"need 1 <= k <= n <= 5, got n={n}, k={k}")
    xs = [MultiPoly.var(field, n, i) for i in range(n)]
    s = MultiPoly(field, n)
    for x in xs:
        s = s + x**k
    e = MultiPoly(field, n)
    for combo in itertools.combinations(range(n), k):
        expo = [0] * n
        for i in combo:
            expo[i] = 1
        e = e + MultiPoly(field, n, {tuple(expo): 1})
    return s, e


def eliminate_x4(poly5: MultiPoly, extra: int = 0) -> MultiPoly:
    """Substitute x_4 = -(x_0+...+x_3); variables beyond index 4 are kept (shifted down)."""
    nv = 4 + extra
    K = poly5.field
    xs = [MultiPoly.var(K, nv, i) for i in range(nv)]
    x4 = -(xs[0] + xs[1] + xs[2] + xs[3])
    images = xs[:4] + [x4] + xs[4:]
    return poly5.substitute(images, nvars=nv)


def _e_poly(n: int, k: int, field) -> MultiPoly:
    return symmetric_basis(n, k, field)[1] if k <= n else MultiPoly(field, n)


@dataclass
class PencilModel:
    """The member S_lambda over a coefficient field (lambda = INF allowed)."""

    lam: object
    field: object
    F: MultiPoly
    partials: list = field(default_factory=list)

    @property
    def char(self) -> int:
        return self.field.char

    def evaluate5(self, point5):
        """Value of the 5-variable form e_5 - (lambda+1) e_2 e_3 at a point of P^4."""
        e = [self.field.one] + [self.field.zero] * 5
        for x in point5:
            for k in range(5, 0, -1):
                e[k] = e[k] + x * e[k - 1]
        if self.lam == INF:
            return e[2] * e[3]
        return e[5] - (self.lam + 1) * e[2] * e[3]

    def contains(self, point4) -> bool:
        return self.F(*point4) == 0


def _canonical_form5(lam, K) -> MultiPoly:
    e2 = _e_poly(5, 2, K)
    e3 = _e_poly(5, 3, K)
    e5 = _e_poly(5, 5, K)
    if lam == INF:
        return e2 * e3
    return e5 - e2 * e3 * (K(lam) + 1)


def build_pencil(lam, field=QQ) -> PencilModel:
    """Canonical model of S_lambda over ``field`` with x_4 eliminated."""
    if lam != INF:
        lam = field(lam)
    F = eliminate_x4(_canonical_form5(lam, field))
    model = PencilModel(lam=lam, field=field, F=F)
    model.partials = gradient(model)
    return model


def gradient(model: PencilModel) -> list[MultiPoly]:
    return [model.F.derivative(i) for i in range(4)]


def symbolic_pencil() -> MultiPoly:
    """F over Q[x_0..x_3, lambda] (lambda is variable 4)."""
    K = QQ
    lam = MultiPoly.var(K, 6, 5)
    e2 = _e_poly(5, 2, K)
    e3 = _e_poly(5, 3, K)
    e5 = _e_poly(5, 5, K)
    lift = lambda p: MultiPoly(K, 6, {e + (0,): c for e, c in p.terms.items()})
    F5 = lift(e5) - lift(e2) * lift(e3) * (lam + 1)
    return eliminate_x4(F5, extra=1)


def check_pencil_identity() -> bool:
    """5 * (e_5 - (lambda+1) e_2 e_3) == (5/6) lambda s_2 s_3 + s_5 on s_1 = 0, exactly."""
    K = QQ
    lam = MultiPoly.var(K, 6, 5)
    lift = lambda p: MultiPoly(K, 6, {e + (0,): c for e, c in p.terms.items()})
    s2 = lift(symmetric_basis(5, 2)[0])
    s3 = lift(symmetric_basis(5, 3)[0])
    s5 = lift(symmetric_basis(5, 5)[0])
    rhs = eliminate_x4(lam * s2 * s3 * Fraction(5, 6) + s5, extra=1)
    return symbolic_pencil() * 5 == rhs


def check_newton_s2s3() -> bool:
    """With x_4 eliminated, s_2 s_3 = -6 e_2 e_3 identically."""
    s2, e2 = symmetric_basis(5, 2)
    s3, e3 = symmetric_basis(5, 3)
    return eliminate_x4(s2 * s3) == eliminate_x4(e2 * e3) * -6


def permutation_action(poly4: MultiPoly, perm) -> MultiPoly:
    """Apply a permutation of the five coordinates (x_4 = -sum) to a form in x_0..x_3."""
    K = poly4.field
    xs = [MultiPoly.var(K, 4, i) for i in range(4)]
    x5 = xs + [-(xs[0] + xs[1] + xs[2] + xs[3])]
    images = [x5[perm[i]] for i in range(4)]
    return poly4.substitute(images, nvars=4)


# ---------------------------------------------------------------------------
# lambda <-> t


def lambda_t_convert(value, direction: str = "lambda_to_t"):
    """t = lambda/(lambda+1) and lambda = t/(1-t), with lambda=-1 <-> t=inf, t=1 <-> lambda=inf."""
    if direction == "lambda_to_t":
        if value == INF:
            return Fraction(1)
        value = Fraction(value)
        if value == -1:
            return INF
        return value / (value + 1)
    if direction == "t_to_lambda":
        if value == INF:
            return Fraction(-1)
        value = Fraction(value)
        if value == 1:
            return INF
        return value / (1 - value)
    raise ValueError(f"unknown direction {direction!r}")


def reduce_mod_p(value, p: int):
    """Reduction of a rational (or INF) to F_p u {INF}."""
    if value == INF:
        return INF
    value = Fraction(value)
    if value.denominator % p == 0:
        return INF
    return value.numerator * pow(value.denominator, -1, p) % p


def reduce_singular_parameters(p: int) -> set:
    """Mod-p reductions of the singular Dwork parameters t."""
    return {reduce_mod_p(t, p) for t in T_SINGULAR}


# ---------------------------------------------------------------------------
# singular points by enumeration


@dataclass
class SingularSearchResult:
    p: int
    lam: object
    levels: dict  # e -> list of points (tuples of FFElement) in P^3(F_{p^e})
    searched_up_to: int
    requested: int

    @property
    def points(self) -> list:
        return [pt for e in sorted(self.levels) for pt in self.levels[e]]

    @property
    def singular(self) -> bool:
        return bool(self.points)

    @property
    def verdict(self) -> str:
        if self.singular:
            return "singular"
        return f"no singular point over F_{self.p}^e for e <= {self.searched_up_to} (evidence, not proof)"


def singular_point_search(
    lam, p: int, e_max: int = 1, budget: int = 10**8, first_only: bool = False
) -> SingularSearchResult:
    """All points of P^3(F_{p^e}), e <= e_max, where F and its partials vanish.

    ``lam`` is an integer/Fraction reduced into F_p, an F_p element, or INF.
    Levels whose enumeration exceeds ``budget`` are skipped only when a
    singular point is already known; otherwise BudgetExceeded is raised.
    With ``first_only`` the search stops at the first level with a hit.
    """
    from .enumerate import projective_zeros
    from .ffvec import VecField, eval_multipoly
    import numpy as np

    levels: dict = {}
    searched = 0
    for e in range(1, e_max + 1):
        if p ** (3 * e) > budget:
            if any(levels.values()):
                break
            raise BudgetExceeded(f"P^3(F_{p}^{e}) exceeds the enumeration budget {budget}")
        F = FinField(p, e)
        lam_e = INF if lam == INF else (F(int(lam)) if isinstance(lam, FFElement) else F(lam))
        model = build_pencil(lam_e, F)
        _, zeros = projective_zeros(F, model.F, collect=True)
        found = []
        if zeros:
            V = VecField(F)
            arr = np.asarray(zeros, dtype=np.int64)
            cols = [arr[:, i] for i in range(4)]
            mask = np.ones(len(zeros), dtype=bool)
            for d in model.partials:
                mask &= eval_multipoly(V, d, cols) == 0
            for row in arr[mask]:
                found.append(tuple(FFElement(F, int(c)) for c in row))
        levels[e] = found
        searched = e
        if first_only and found:
            break
    return SingularSearchResult(p=p, lam=lam, levels=levels, searched_up_to=searched, requested=e_max)
