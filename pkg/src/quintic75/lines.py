"""Lines on the pencil members: construction, canonical form, intersection pairing.

A line is stored through two points of P^4 on {s_1 = 0} (five coordinates, so
the S_5 action is a plain coordinate permutation) and compared through the
reduced row-echelon form of the first four coordinates.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

from .exact import QQ, QB, FinField, FFElement, NFElement, reduce_nf, roots_univariate, B_MODULUS
from .pencil import PencilModel, build_pencil

ALL_PERMS = tuple(itertools.permutations(range(5)))


class LinesNotOnSurface(ValueError):
    pass


class NoRootOfB(ValueError):
    pass


class NotClosedUnderFrobenius(ValueError):
    pass


class InconsistentSpan(AssertionError):
    pass


def _rref(rows: list[list], field) -> tuple[tuple, ...]:
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    if r < nrows:
        raise ValueError("points do not span a line")
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class Line:
    """A line in P^3 (x_4 eliminated), spanned by two points of P^4 on s_1 = 0."""

    points: tuple  # two 5-tuples of field elements
    field: object
    label: str = ""

    @cached_property
    def canonical(self) -> tuple:
        return _rref([list(p[:4]) for p in self.points], self.field)

    @cached_property
    def plucker(self) -> tuple:
        u, v = self.canonical
        return tuple(u[i] * v[j] - u[j] * v[i] for i, j in itertools.combinations(range(4), 2))

    def __eq__(self, other):
        return isinstance(other, Line) and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def permuted(self, perm: Sequence[int]) -> "Line":
        """Image under the coordinate permutation x_i -> x_{perm[i]} (new[perm[i]] = old[i])."""
        pts = []
        for p in self.points:
            new = [None] * 5
            for i in range(5):
                new[perm[i]] = p[i]
            pts.append(tuple(new))
        return Line(tuple(pts), self.field, self.label)

    def map(self, fn: Callable, field) -> "Line":
        return Line(tuple(tuple(fn(x) for x in p) for p in self.points), field, self.label)

    def relabel(self, label: str) -> "Line":
        return Line(self.points, self.field, label)

    def sample_points(self, k: int = 6) -> list:
        """k distinct points of the line in P^4 (needs enough field elements)."""
        u, v = self.points
        out = [u, v]
        t = 1
        F = self.field
        while len(out) < k:
            c = F(t)
            if isinstance(F, FinField) and t >= F.q:
                raise ValueError("field too small for distinct sample points")
            if isinstance(F, FinField):
                c = FFElement(F, t)
            out.append(tuple(a + c * b for a, b in zip(u, v)))
            t += 1
        return out

    def lies_on(self, model: PencilModel) -> bool:
        # a binary quintic vanishing at 6 distinct points of P^1 is zero
        return all(model.evaluate5(pt) == 0 for pt in self.sample_points(6))

    def to_json(self) -> list:
        return [[str(x) for x in row] for row in self.canonical]


def meet(L1: Line, L2: Line) -> bool:
    """Whether two lines of P^3 intersect (Plucker relation)."""
    p, q = L1.plucker, L2.plucker
    # p = (p01, p02, p03, p12, p13, p23)
    val = p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0]
    return val == 0


def pair(L1: Line, L2: Line) -> int:
    """Intersection number of two lines on a smooth quintic surface."""
    if L1 == L2:
        return -3
    return 1 if meet(L1, L2) else 0


def gram_matrix(lines: Sequence[Line]) -> list[list[int]]:
    n = len(lines)
    G = [[0] * n for _ in range(n)]
    for i in range(n):
        G[i][i] = -3
        for j in range(i + 1, n):
            v = 1 if meet(lines[i], lines[j]) else 0
            if v == 0 and lines[i] == lines[j]:
                raise ValueError(f"duplicate lines {i} and {j}")
            G[i][j] = G[j][i] = v
    return G


def check_on_surface(lines: Sequence[Line], model: PencilModel):
    bad = [L.label for L in lines if not L.lies_on(model)]
    if bad:
        raise LinesNotOnSurface(f"lines not on the surface: {bad[:5]}")


# ---------------------------------------------------------------------------
# the line sets


def _kernel_points(rows: list[list], field) -> tuple:
    """Basis (two vectors) of the kernel of a 3x5 matrix of rank 3."""
    m = _rref(rows, field)
    pivots = [next(j for j, x in enumerate(r) if x != 0) for r in m]
    free = [j for j in range(5) if j not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * 5
        v[f] = field.one
        for r, pc in zip(m, pivots):
            v[pc] = -r[f]
        basis.append(tuple(v))
    return tuple(basis)


def base_lines(field=QQ) -> list[Line]:
    """The 15 lines x_i = x_j + x_k = x_l + x_m = 0."""
    out = []
    one, zero = field.one, field.zero
    for i in range(5):
        rest = [j for j in range(5) if j != i]
        a = rest[0]
        for b in rest[1:]:
            c, d = [j for j in rest if j not in (a, b)]
            p1 = [zero] * 5
            p2 = [zero] * 5
            p1[a], p1[b] = one, -one
            p2[c], p2[d] = one, -one
            label = f"B{i}|{a}{b}|{c}{d}"
            out.append(Line((tuple(p1), tuple(p2)), field, label))
    return out


def seed_orbit_line(b) -> Line:
    """span((1:-1:b:-b:0), (b-1:1:-(b-1):0:-1)), with b a root of b^4 - b^3 + 1."""
    field = b.field if hasattr(b, "field") else QQ
    one, zero = field.one, field.zero
    p1 = (one, -one, b, -b, zero)
    p2 = (b - 1, one, -(b - 1), zero, -one)
    return Line((p1, p2), field, "O")


def orbit_of(line: Line, prefix: str) -> list[Line]:
    seen: dict = {}
    for perm in ALL_PERMS:
        L = line.permuted(perm)
        if L not in seen:
            seen[L] = L.relabel(f"{prefix}{len(seen)}")
    return list(seen.values())


def orbit_lines(b=None) -> list[Line]:
    """The 60 S_5-images of the seed line, over the field of b (default: Q(b))."""
    if b is None:
        b = QB.gen()
    if (b**4 - b**3 + 1) != 0:
        raise NoRootOfB(f"{b} is not a root of b^4 - b^3 + 1")
    return orbit_of(seed_orbit_line(b), "O")


def lines75(b=None) -> list[Line]:
    if b is None:
        b = QB.gen()
    return base_lines(b.field) + orbit_lines(b)


def a_value(b):
    """a = -2/(b+2)."""
    return -2 / (b + 2)


def surface_a(b=None) -> PencilModel:
    if b is None:
        b = QB.gen()
    return build_pencil(a_value(b), b.field)


# -- characteristic 2 ---------------------------------------------------------


def char2_field() -> FinField:
    return FinField(2, 4)


def char2_b_root(F: FinField | None = None) -> FFElement:
    F = F or char2_field()
    return roots_univariate(B_MODULUS, F)[0]


def char2_extra_seeds(F: FinField | None = None) -> tuple[Line, Line]:
    """x0+x1 = x2+w x3 = 0 and x0+x1-w^2 x4 = x0+x2-w x3 = 0 (w of order 3), inside s_1 = 0."""
    F = F or char2_field()
    w = F.primitive_root_of_unity(3)
    one, zero = F.one, F.zero
    s1 = [one] * 5
    fam1 = _kernel_points([s1, [one, one, zero, zero, zero], [zero, zero, one, w, zero]], F)
    fam2 = _kernel_points([s1, [one, one, zero, zero, -(w * w)], [one, zero, one, -w, zero]], F)
    return Line(fam1, F, "E"), Line(fam2, F, "l2")


def char2_lines() -> dict:
    """The 135 lines on S_0 over F_16: 15 base, 60 orbit (b reduced mod 2), 60 extra."""
    F = char2_field()
    b = char2_b_root(F)
    base = base_lines(F)
    orbit = orbit_lines(b)
    seed1, seed2 = char2_extra_seeds(F)
    fam1 = orbit_of(seed1, "E")
    fam2 = [L for L in orbit_of(seed2, "F") if L not in set(fam1)]
    extra = [L.relabel(f"X{i}") for i, L in enumerate(fam1 + fam2)]
    return {
        "field": F,
        "b": b,
        "base": base,
        "orbit": orbit,
        "extra": extra,
        "family_sizes": (len(orbit_of(seed1, "E")), len(orbit_of(seed2, "F"))),
        "family_overlap": len(fam1) + len(orbit_of(seed2, "F")) - len(extra),
        "seeds": (seed1, seed2),
    }


def char2_model() -> PencilModel:
    return build_pencil(0, char2_field())


# ---------------------------------------------------------------------------
# reduction and Frobenius


def reduce_lines(lines: Sequence[Line], F: FinField, root: FFElement) -> list[Line]:
    """Reduce Q(b)-lines into F via b -> root."""

    def red(x):
        if isinstance(x, NFElement):
            return reduce_nf(x, F, root)
        return F(x)

    return [L.map(red, F) for L in lines]


def b_roots(p: int, e: int = 1) -> list[FFElement]:
    return roots_univariate(B_MODULUS, FinField(p, e))


def frobenius_permutation(lines: Sequence[Line], q: int) -> list[int]:
    """Permutation of the line list induced by x -> x^q on coordinates."""
    index = {L: i for i, L in enumerate(lines)}
    perm = []
    for L in lines:
        img = L.map(lambda x: x**q, L.field)
        j = index.get(img)
        if j is None:
            raise NotClosedUnderFrobenius(f"image of {L.label} is not in the set")
        perm.append(j)
    if sorted(perm) != list(range(len(lines))):
        raise NotClosedUnderFrobenius("induced map is not a bijection")
    return perm


def permutation_order(perm: Sequence[int]) -> int:
    from math import lcm

    seen = [False] * len(perm)
    order = 1
    for i in range(len(perm)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                n += 1
            order = lcm(order, n)
    return order


# ---------------------------------------------------------------------------
# hyperplane and conic classes


@dataclass
class DivisorClassRow:
    """A class h*H + sum c_i L_i, with its pairings against the line list."""

    label: str
    pairings: list[int]
    self_intersection: int
    h_coeff: int = 0
    line_coeffs: dict = None


def _combo_pair(h1, c1, h2, c2, G) -> int:
    total = 5 * h1 * h2
    total += h1 * sum(c2.values()) + h2 * sum(c1.values())
    for i, a in c1.items():
        for j, b in c2.items():
            total += a * b * G[i][j]
    return total


def hyperplane_and_conics(lines: Sequence[Line], G: list[list[int]] | None = None) -> list[DivisorClassRow]:
    """Rows for H and C_i = H - (the three base lines in the plane x_i = 0)."""
    n = len(lines)
    if G is None:
        G = gram_matrix(lines)
    rows = [DivisorClassRow("H", [1] * n, 5, 1, {})]
    base_idx = [k for k, L in enumerate(lines) if L.label.startswith("B")]
    if len(base_idx) != 15:
        raise InconsistentSpan("expected the 15 base lines in the list")
    for i in range(5):
        plane = {k: -1 for k in base_idx if lines[k].label.startswith(f"B{i}|")}
        pairings = [_combo_pair(1, plane, 0, {j: 1}, G) for j in range(n)]
        self_int = _combo_pair(1, plane, 1, plane, G)
        rows.append(DivisorClassRow(f"C{i}", pairings, self_int, 1, plane))
    return rows


def class_pair(r1: DivisorClassRow, r2: DivisorClassRow, G) -> int:
    return _combo_pair(r1.h_coeff, r1.line_coeffs, r2.h_coeff, r2.line_coeffs, G)


def extend_gram(G: list[list[int]], rows: Sequence[DivisorClassRow], scale: int = 1) -> list[list[int]]:
    """Gram matrix of the lines plus the given classes (each multiplied by ``scale``)."""
    n = len(G)
    out = [list(r) for r in G]
    for r in rows:
        for j in range(n):
            out[j].append(scale * r.pairings[j])
    for r in rows:
        out.append([scale * x for x in r.pairings] + [scale * scale * class_pair(r, r2, G) for r2 in rows])
    return out


def gram_json(lines: Sequence[Line], G: list[list[int]], rank: int | None = None) -> str:
    return json.dumps({"labels": [L.label for L in lines], "gram": G, "rank": rank})
