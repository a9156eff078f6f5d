"""Point counts over F_q, K3 trace candidates, Artin-Tate square classes and
the two-prime comparison bounding the Picard number of the K3 quotient.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from .exact import FinField, SquareClass, factorize, square_class
from .zlinalg import rational_kernel

TOOL_VERSION = "0.1.0"
COUNT_BUDGET = 10**8
QUINTIC_BAD_PRIMES = frozenset({3, 5, 11, 17, 433})


class BudgetExceeded(RuntimeError):
    pass


class SupersingularInput(ValueError):
    pass


class BadPrime(ValueError):
    pass


# ---------------------------------------------------------------------------
# counts and cache


@dataclass
class CountRecord:
    surface: str  # "S" (quintic) or "X" (K3 quotient)
    lam: str
    root: int | None
    p: int
    e: int
    count: int
    model_hash: str
    tool_version: str = TOOL_VERSION

    @property
    def q(self) -> int:
        return self.p**self.e

    def to_json(self) -> dict:
        return asdict(self)


def model_hash(poly, F: FinField) -> str:
    """Stable hash of a polynomial over F (terms as integer codes)."""
    items = sorted((list(e), F(c).n) for e, c in poly.terms.items())
    blob = json.dumps({"p": F.p, "e": F.e, "modulus": list(F.modulus), "terms": items})
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


class CountCache:
    """JSON files keyed by (surface, p, e, root, model hash)."""

    def __init__(self, directory: str | os.PathLike | None = None):
        directory = directory or os.environ.get("QUINTIC75_CACHE")
        self.dir = Path(directory) if directory else None

    def _path(self, surface, p, e, root, mhash) -> Path:
        return self.dir / f"{surface}_p{p}_e{e}_r{root}_{mhash}.json"

    def get(self, surface, p, e, root, mhash) -> CountRecord | None:
        if self.dir is None:
            return None
        path = self._path(surface, p, e, root, mhash)
        if not path.exists():
            return None
        data = json.loads(path.read_text())
        if data.get("model_hash") != mhash:
            return None
        return CountRecord(**data)

    def put(self, rec: CountRecord) -> None:
        if self.dir is None:
            return
        self.dir.mkdir(parents=True, exist_ok=True)
        path = self._path(rec.surface, rec.p, rec.e, rec.root, rec.model_hash)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(rec.to_json(), sort_keys=True))
        tmp.replace(path)


def count_projective_surface(
    poly,
    F: FinField,
    surface: str = "S",
    lam: str = "",
    root: int | None = None,
    chunks: int = 1,
    cache: CountCache | None = None,
    budget: int = COUNT_BUDGET,
) -> CountRecord:
    """Exact number of zeros of a quartic-variable form in P^3(F_q)."""
    from .enumerate import projective_zeros

    q = F.q
    if q**3 > budget:
        raise BudgetExceeded(f"q^3 = {q**3} exceeds the enumeration budget {budget}")
    mhash = model_hash(poly, F)
    if cache is not None:
        hit = cache.get(surface, F.p, F.e, root, mhash)
        if hit is not None:
            return hit
    n = projective_zeros(F, poly, chunks=chunks)
    rec = CountRecord(surface, lam, root, F.p, F.e, int(n), mhash)
    if cache is not None:
        cache.put(rec)
    return rec


def count_quintic_a(p: int, e: int = 1, root_index: int = 0, cache: CountCache | None = None, chunks: int = 1) -> CountRecord:
    """#S_a(F_q) for the given root of b^4 - b^3 + 1 in F_q."""
    from .fibration import a_root_in
    from .lines import b_roots
    from .pencil import build_pencil

    F = FinField(p, e)
    roots = b_roots(p, e)
    if not roots:
        raise ValueError(f"b^4 - b^3 + 1 has no root in F_{p}^{e}")
    r = roots[root_index]
    a = a_root_in(F, r)
    model = build_pencil(a, F)
    return count_projective_surface(model.F, F, "S", f"a(b={r})", root_index, chunks, cache)


def count_k3_a(p: int, e: int = 1, root_index: int = 0) -> CountRecord:
    """#X_a(F_q) through the fibration."""
    from .fibration import a_root_in, k3_point_count, weierstrass_AB
    from .lines import b_roots

    F = FinField(p, e)
    r = b_roots(p, e)[root_index]
    a = a_root_in(F, r)
    res = k3_point_count(a, F)
    model = weierstrass_AB(a, F)
    blob = json.dumps([[c.n for c in model.A.c], [c.n for c in model.B.c], p, e])
    mhash = hashlib.sha256(blob.encode()).hexdigest()[:16]
    return CountRecord("X", f"a(b={r})", root_index, p, e, res.count, mhash)


# ---------------------------------------------------------------------------
# traces and square classes


@dataclass(frozen=True)
class TraceCandidate:
    a_q: int
    D: SquareClass | None
    q: int

    def as_dict(self) -> dict:
        if self.D is None:
            return {"a_q": self.a_q, "D": None, "D_value": None}
        return {"a_q": self.a_q, "D": str(self.D), "D_value": self.D.value}


def artin_tate_class(a_q: int, q: int) -> SquareClass:
    """D = -(square class of 4q^2 - a_q^2)."""
    if a_q % q == 0:
        raise SupersingularInput(f"a_q = {a_q} is divisible by q = {q}")
    if abs(a_q) >= 2 * q:
        raise ValueError("need |a_q| < 2q")
    return -square_class(4 * q * q - a_q * a_q)


def frobenius_square_trace(a_q: int, q: int) -> int:
    """Trace over F_{q^2} of the same eigenvalue pair: a_q^2 - 2 q^2."""
    return a_q * a_q - 2 * q * q


def k3_trace_candidates(count: int, q: int) -> list[TraceCandidate]:
    """All a in [-2q, 2q] with a = count - 1 mod q, each with D = -class(4q^2 - a^2).

    At the Weil boundary a = +-2q the class is undefined and D is None.
    """
    out = []
    a = -2 * q + (count - 1 + 2 * q) % q
    while a <= 2 * q:
        D = -square_class(4 * q * q - a * a) if abs(a) < 2 * q else None
        out.append(TraceCandidate(a, D, q))
        a += q
    return sorted(out, key=lambda c: -c.a_q)


@dataclass
class VanLuijkVerdict:
    disjoint: bool
    rho: int | None
    overlap: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"disjoint": self.disjoint, "rho_X": self.rho, "overlap": self.overlap}


def van_luijk_verdict(cands_p, cands_q) -> VanLuijkVerdict:
    """Picard number 19 over C iff the two sets of square classes are disjoint."""
    dp = {_as_class(c) for c in cands_p} - {None}
    dq = {_as_class(c) for c in cands_q} - {None}
    common = sorted(dp & dq)
    if common:
        return VanLuijkVerdict(False, None, [str(c) for c in common])
    return VanLuijkVerdict(True, 19, [])


def _as_class(x) -> SquareClass | None:
    if isinstance(x, TraceCandidate):
        return x.D
    if isinstance(x, SquareClass):
        return x
    return square_class(x)


def _char_of(q: int) -> int:
    f = factorize(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    return next(iter(f))


def quintic_rho_reduction(count: int, q: int) -> int:
    """Geometric Picard number of S_a mod p: 45 if count != 1 mod q, else 53."""
    p = _char_of(q)
    if p == 2 or p in QUINTIC_BAD_PRIMES:
        raise BadPrime(f"p = {p} is excluded")
    return 45 if (count - 1) % q else 53


# ---------------------------------------------------------------------------
# Lefschetz consistency between the quintic and the K3


def perm_trace_on_span(G, perm) -> int:
    """Trace of a Gram-preserving permutation of generators on their span.

    The span is Q^n modulo the radical of G; trace = trace on Q^n minus the
    trace on the (invariant) radical.
    """
    n = len(G)
    full = sum(1 for i in range(n) if perm[i] == i)
    K = rational_kernel(G)
    if not K:
        return full
    # the radical is perm-invariant; express perm(v) in the kernel basis
    k = len(K)
    # reduce the kernel basis so that coordinate cols[r] reads off component r
    M = [list(v) for v in K]
    cols = []
    for r in range(k):
        c = next(c for c in range(n) if M[r][c] != 0 and c not in cols)
        cols.append(c)
        for s in range(k):
            if s != r and M[s][c] != 0:
                f = M[s][c] / M[r][c]
                M[s] = [x - f * y for x, y in zip(M[s], M[r])]
        M[r] = [x / M[r][c] for x in M[r]]
    # coordinates of w in basis M: w[cols[r]]
    tr_ker = Fraction(0)
    for r in range(k):
        v = M[r]
        w = [Fraction(0)] * n
        for i in range(n):
            w[perm[i]] = v[i]
        tr_ker += w[cols[r]]
    tr = full - tr_ker
    if tr.denominator != 1:
        raise AssertionError("non-integral trace")
    return int(tr)


def lefschetz_signs(s_count: int, a_q: int, q: int, line_perm_trace: int) -> list[tuple[int, int]]:
    """Sign pairs (e1, e2) with s_count = 1 + q*tr + e1 q + 4(a_q + e2 q) + q^2."""
    out = []
    for e1, e2 in itertools.product((1, -1), repeat=2):
        if 1 + q * line_perm_trace + e1 * q + 4 * (a_q + e2 * q) + q * q == s_count:
            out.append((e1, e2))
    return out


def lefschetz_cross_check(s_count: int, a_q: int, q: int, line_perm_trace: int = 40) -> bool:
    return bool(lefschetz_signs(s_count, a_q, q, line_perm_trace))


def resolve_trace(s_count: int, x_count: int, q: int, line_perm_trace: int = 40) -> list[TraceCandidate]:
    """K3 trace candidates (from the K3 count) that also fit the quintic count."""
    return [c for c in k3_trace_candidates(x_count, q) if lefschetz_cross_check(s_count, c.a_q, q, line_perm_trace)]


def table_format(D: SquareClass | None) -> str:
    """Printed form of a square class: plain below 100, otherwise as a product of primes."""
    if D is None:
        return "-"
    if D.squarefree < 100:
        return str(D.value)
    return str(D)
